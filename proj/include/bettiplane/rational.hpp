#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bettiplane {

// Exact rational number. Always stored in lowest terms with positive
// denominator, so equality and ordering are exact and serialization is
// canonical.
class rational {
public:
	rational() : v_(0) {}
	rational(long n) : v_(n) {}
	rational(long num, long den) : v_(num, den) {
		if (den == 0) throw std::invalid_argument("rational: zero denominator");
		v_.canonicalize();
	}

	static rational from_mpq(mpq_class v) {
		rational r;
		r.v_ = std::move(v);
		r.v_.canonicalize();
		return r;
	}

	rational operator-() const { return from_mpq(-v_); }
	rational operator+(const rational& o) const { return from_mpq(v_ + o.v_); }
	rational operator-(const rational& o) const { return from_mpq(v_ - o.v_); }
	rational operator*(const rational& o) const { return from_mpq(v_ * o.v_); }
	rational operator/(const rational& o) const {
		if (o.is_zero()) throw std::domain_error("rational: division by zero");
		return from_mpq(v_ / o.v_);
	}
	rational& operator+=(const rational& o) { v_ += o.v_; return *this; }
	rational& operator-=(const rational& o) { v_ -= o.v_; return *this; }
	rational& operator*=(const rational& o) { v_ *= o.v_; return *this; }

	bool operator==(const rational& o) const { return v_ == o.v_; }
	bool operator!=(const rational& o) const { return v_ != o.v_; }
	bool operator<(const rational& o) const { return v_ < o.v_; }
	bool operator<=(const rational& o) const { return v_ <= o.v_; }
	bool operator>(const rational& o) const { return v_ > o.v_; }
	bool operator>=(const rational& o) const { return v_ >= o.v_; }

	bool is_zero() const { return sgn(v_) == 0; }
	int sign() const { return sgn(v_); }
	rational abs() const { return from_mpq(::abs(v_)); }

	// Canonical form "num/den", e.g. "2/1", "-1/3", "0/1".
	std::string to_string() const {
		return v_.get_num().get_str() + "/" + v_.get_den().get_str();
	}

	double to_double() const { return v_.get_d(); }

	// Accepts "n", "n/d" and decimal strings like "0.25" (parsed exactly,
	// so "0.1" becomes 1/10). No exponents.
	static std::optional<rational> parse(std::string_view s);

private:
	mpq_class v_;
};

inline std::optional<rational> rational::parse(std::string_view s) {
	if (s.empty()) return std::nullopt;
	std::size_t pos = 0;
	bool neg = false;
	if (s[pos] == '+' || s[pos] == '-') {
		neg = s[pos] == '-';
		++pos;
	}
	auto digits = [&](std::string& out) {
		std::size_t start = pos;
		while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') out += s[pos++];
		return pos > start;
	};
	std::string intpart;
	if (!digits(intpart)) return std::nullopt;
	mpq_class v;
	if (pos < s.size() && s[pos] == '/') {
		++pos;
		std::string den;
		if (!digits(den) || pos != s.size()) return std::nullopt;
		mpz_class d(den);
		if (d == 0) return std::nullopt;
		v = mpq_class(mpz_class(intpart), d);
	} else if (pos < s.size() && s[pos] == '.') {
		++pos;
		std::string frac;
		if (!digits(frac) || pos != s.size()) return std::nullopt;
		mpz_class scale = 1;
		for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
		v = mpq_class(mpz_class(intpart) * scale + mpz_class(frac), scale);
	} else {
		if (pos != s.size()) return std::nullopt;
		v = mpq_class(mpz_class(intpart));
	}
	if (neg) v = -v;
	v.canonicalize();
	return rational::from_mpq(v);
}

inline rational min(const rational& a, const rational& b) { return a < b ? a : b; }
inline rational max(const rational& a, const rational& b) { return a < b ? b : a; }

}  // namespace bettiplane
