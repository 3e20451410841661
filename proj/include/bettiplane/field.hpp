#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "bettiplane/rational.hpp"

namespace bettiplane {

inline bool is_prime_int(std::int64_t n) {
	if (n < 2) return false;
	if (n % 2 == 0) return n == 2;
	for (std::int64_t d = 3; d * d <= n; d += 2)
		if (n % d == 0) return false;
	return true;
}

// Prime field GF(p), p < 2^31. Elements are canonical representatives in
// [0, p); inverses via extended Euclid.
struct prime_field {
	using elem = std::int64_t;
	static constexpr bool is_rationals = false;

	std::int64_t p;

	explicit prime_field(std::int64_t p_) : p(p_) {
		if (p < 2 || p >= (std::int64_t(1) << 31) || !is_prime_int(p))
			throw std::invalid_argument("prime_field: p must be prime and < 2^31");
	}

	elem zero() const { return 0; }
	elem one() const { return 1 % p; }
	elem from_int(std::int64_t n) const {
		std::int64_t r = n % p;
		return r < 0 ? r + p : r;
	}
	elem add(elem a, elem b) const { return (a + b) % p; }
	elem sub(elem a, elem b) const { return (a - b + p) % p; }
	elem mul(elem a, elem b) const { return (a * b) % p; }
	elem neg(elem a) const { return a == 0 ? 0 : p - a; }
	elem inv(elem a) const {
		if (a == 0) throw std::domain_error("prime_field: inverse of zero");
		// extended Euclid for a^{-1} mod p
		std::int64_t t = 0, new_t = 1, r = p, new_r = a;
		while (new_r != 0) {
			std::int64_t q = r / new_r;
			t = std::exchange(new_t, t - q * new_t);
			r = std::exchange(new_r, r - q * new_r);
		}
		return t < 0 ? t + p : t;
	}
	elem div(elem a, elem b) const { return mul(a, inv(b)); }
	bool is_zero(elem a) const { return a == 0; }
	bool eq(elem a, elem b) const { return a == b; }
	std::string to_string(elem a) const { return std::to_string(a); }
	std::string name() const { return "GF(" + std::to_string(p) + ")"; }
};

// The field of rationals.
struct rational_field {
	using elem = rational;
	static constexpr bool is_rationals = true;

	elem zero() const { return rational(0); }
	elem one() const { return rational(1); }
	elem from_int(std::int64_t n) const { return rational(static_cast<long>(n)); }
	elem add(const elem& a, const elem& b) const { return a + b; }
	elem sub(const elem& a, const elem& b) const { return a - b; }
	elem mul(const elem& a, const elem& b) const { return a * b; }
	elem neg(const elem& a) const { return -a; }
	elem inv(const elem& a) const { return one() / a; }
	elem div(const elem& a, const elem& b) const { return a / b; }
	bool is_zero(const elem& a) const { return a.is_zero(); }
	bool eq(const elem& a, const elem& b) const { return a == b; }
	std::string to_string(const elem& a) const { return a.to_string(); }
	std::string name() const { return "Q"; }
};

// Runtime-chosen coefficient field, dispatched onto the static field types.
struct field_spec {
	enum class kind_t { rationals, prime };
	kind_t kind = kind_t::rationals;
	std::int64_t p = 0;

	static field_spec rationals() { return {kind_t::rationals, 0}; }
	static field_spec prime(std::int64_t p) { return {kind_t::prime, p}; }

	std::string name() const {
		return kind == kind_t::rationals ? "Q" : "GF(" + std::to_string(p) + ")";
	}
	bool operator==(const field_spec&) const = default;
};

template <class Fn>
decltype(auto) with_field(const field_spec& fs, Fn&& fn) {
	if (fs.kind == field_spec::kind_t::rationals) return fn(rational_field{});
	return fn(prime_field(fs.p));
}

}  // namespace bettiplane
