#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "bettiplane/plane.hpp"
#include "bettiplane/rational.hpp"

namespace bettiplane {

// Gaussian rational re + i*im, exact in both components.
struct gaussian_rational {
	rational re;
	rational im;

	gaussian_rational() = default;
	gaussian_rational(rational r, rational i) : re(std::move(r)), im(std::move(i)) {}

	gaussian_rational operator+(const gaussian_rational& o) const { return {re + o.re, im + o.im}; }
	gaussian_rational operator-(const gaussian_rational& o) const { return {re - o.re, im - o.im}; }
	gaussian_rational operator*(const gaussian_rational& o) const {
		return {re * o.re - im * o.im, re * o.im + im * o.re};
	}
	bool operator==(const gaussian_rational& o) const { return re == o.re && im == o.im; }
	bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

// Monic polynomial over the Gaussian rationals, coefficients from the
// constant term upward; coefficients.size() == degree() + 1 and the top
// coefficient is 1.
struct monic_polynomial {
	std::vector<gaussian_rational> coefficients;

	monic_polynomial() : coefficients{gaussian_rational(rational(1), rational(0))} {}

	std::size_t degree() const { return coefficients.size() - 1; }

	// Multiply by (z - root).
	void push_root(const gaussian_rational& root) {
		std::vector<gaussian_rational> next(coefficients.size() + 1,
		                                    gaussian_rational(rational(0), rational(0)));
		for (std::size_t i = 0; i < coefficients.size(); ++i) {
			next[i + 1] = next[i + 1] + coefficients[i];
			next[i] = next[i] - root * coefficients[i];
		}
		coefficients = std::move(next);
	}

	bool operator==(const monic_polynomial& o) const { return coefficients == o.coefficients; }
};

// P(z) = prod over support of (z - (a + i b))^multiplicity; the empty
// configuration gives the constant polynomial 1.
inline monic_polynomial to_polynomial(const configuration& c) {
	monic_polynomial p;
	for (const auto& [point, mult] : c.entries) {
		const gaussian_rational root(point.a, point.b);
		for (int m = 0; m < mult; ++m) p.push_root(root);
	}
	return p;
}

}  // namespace bettiplane
