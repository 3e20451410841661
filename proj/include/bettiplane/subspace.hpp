#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "bettiplane/field.hpp"
#include "bettiplane/matrix.hpp"

namespace bettiplane {

// Linear subspace of F^ambient in canonical form: the basis matrix holds the
// column-reduced echelon basis (columns are the transposed nonzero rows of
// the row-reduced span), so two equal subspaces have identical basis
// matrices and equality is syntactic.
template <class F>
struct subspace {
	std::size_t ambient = 0;
	matrix<F> basis;  // ambient x rank

	std::size_t rank() const { return basis.cols; }
	bool is_zero() const { return basis.cols == 0; }
	bool operator==(const subspace&) const = default;
};

template <class F>
subspace<F> zero_subspace(const F& k, std::size_t ambient) {
	subspace<F> s;
	s.ambient = ambient;
	s.basis = matrix<F>(k, ambient, 0);
	return s;
}

template <class F>
subspace<F> full_subspace(const F& k, std::size_t ambient) {
	subspace<F> s;
	s.ambient = ambient;
	s.basis = matrix<F>::identity(k, ambient);
	return s;
}

// Canonicalizes the span of the given row vectors.
template <class F>
subspace<F> span_of_rows(const F& k, std::size_t ambient, const matrix<F>& rows) {
	if (rows.cols != ambient) throw std::invalid_argument("span_of_rows: ambient mismatch");
	auto rr = rref(k, rows);
	subspace<F> s;
	s.ambient = ambient;
	s.basis = matrix<F>(k, ambient, rr.rank);
	for (std::size_t i = 0; i < rr.rank; ++i)
		for (std::size_t c = 0; c < ambient; ++c) s.basis.at(c, i) = rr.reduced.at(i, c);
	return s;
}

// Column space of m, canonicalized.
template <class F>
subspace<F> image(const F& k, const matrix<F>& m) {
	return span_of_rows(k, m.rows, transpose(k, m));
}

template <class F>
subspace<F> span_of_vectors(const F& k, std::size_t ambient,
                            const std::vector<std::vector<typename F::elem>>& vecs) {
	return image(k, from_columns(k, ambient, vecs));
}

// Null space of m. The standard free-variable basis is canonicalized like
// every other subspace.
template <class F>
subspace<F> kernel(const F& k, const matrix<F>& m) {
	auto rr = rref(k, m);
	std::vector<bool> is_pivot(m.cols, false);
	for (auto c : rr.pivot_cols) is_pivot[c] = true;
	std::vector<std::vector<typename F::elem>> vecs;
	for (std::size_t c = 0; c < m.cols; ++c) {
		if (is_pivot[c]) continue;
		std::vector<typename F::elem> v(m.cols, k.zero());
		v[c] = k.one();
		for (std::size_t i = 0; i < rr.rank; ++i)
			v[rr.pivot_cols[i]] = k.neg(rr.reduced.at(i, c));
		vecs.push_back(std::move(v));
	}
	return span_of_vectors(k, m.cols, vecs);
}

// Reduces v against the echelon rows of s; true iff the residue is zero.
template <class F>
bool member(const F& k, const subspace<F>& s, std::vector<typename F::elem> v) {
	if (v.size() != s.ambient) throw std::invalid_argument("member: ambient mismatch");
	for (std::size_t i = 0; i < s.rank(); ++i) {
		// pivot position of basis column i = first nonzero coordinate
		std::size_t p = 0;
		while (p < s.ambient && k.is_zero(s.basis.at(p, i))) ++p;
		if (p == s.ambient) continue;
		if (k.is_zero(v[p])) continue;
		const auto factor = v[p];
		for (std::size_t r = 0; r < s.ambient; ++r)
			v[r] = k.sub(v[r], k.mul(factor, s.basis.at(r, i)));
	}
	for (const auto& x : v)
		if (!k.is_zero(x)) return false;
	return true;
}

template <class F>
bool contains(const F& k, const subspace<F>& outer, const subspace<F>& inner) {
	if (outer.ambient != inner.ambient) throw std::invalid_argument("contains: ambient mismatch");
	for (std::size_t c = 0; c < inner.rank(); ++c)
		if (!member(k, outer, inner.basis.column(c))) return false;
	return true;
}

// Smallest subspace containing both.
template <class F>
subspace<F> sum(const F& k, const subspace<F>& u, const subspace<F>& v) {
	if (u.ambient != v.ambient) throw std::invalid_argument("sum: ambient mismatch");
	matrix<F> rows(k, u.rank() + v.rank(), u.ambient);
	for (std::size_t i = 0; i < u.rank(); ++i)
		for (std::size_t c = 0; c < u.ambient; ++c) rows.at(i, c) = u.basis.at(c, i);
	for (std::size_t i = 0; i < v.rank(); ++i)
		for (std::size_t c = 0; c < v.ambient; ++c) rows.at(u.rank() + i, c) = v.basis.at(c, i);
	return span_of_rows(k, u.ambient, rows);
}

// Largest subspace contained in both, via the kernel of the stacked system
// U x = V y: solutions of [U | -V] (x; y) = 0 give the intersection as U x.
template <class F>
subspace<F> intersect(const F& k, const subspace<F>& u, const subspace<F>& v) {
	if (u.ambient != v.ambient) throw std::invalid_argument("intersect: ambient mismatch");
	if (u.is_zero() || v.is_zero()) return zero_subspace(k, u.ambient);
	matrix<F> stacked(k, u.ambient, u.rank() + v.rank());
	for (std::size_t r = 0; r < u.ambient; ++r) {
		for (std::size_t c = 0; c < u.rank(); ++c) stacked.at(r, c) = u.basis.at(r, c);
		for (std::size_t c = 0; c < v.rank(); ++c)
			stacked.at(r, u.rank() + c) = k.neg(v.basis.at(r, c));
	}
	auto ker = kernel(k, stacked);
	std::vector<std::vector<typename F::elem>> vecs;
	for (std::size_t c = 0; c < ker.rank(); ++c) {
		std::vector<typename F::elem> w(u.ambient, k.zero());
		for (std::size_t i = 0; i < u.rank(); ++i) {
			const auto& coef = ker.basis.at(i, c);
			if (k.is_zero(coef)) continue;
			for (std::size_t r = 0; r < u.ambient; ++r)
				w[r] = k.add(w[r], k.mul(coef, u.basis.at(r, i)));
		}
		vecs.push_back(std::move(w));
	}
	return span_of_vectors(k, u.ambient, vecs);
}

// Representatives in v whose classes form a basis of v/w, chosen by
// extending the pivot basis of w with canonical basis columns of v in fixed
// column order. Deterministic; count = rank v - rank w.
template <class F>
std::vector<std::vector<typename F::elem>> quotient_basis(const F& k, const subspace<F>& v,
                                                          const subspace<F>& w) {
	if (v.ambient != w.ambient) throw std::invalid_argument("quotient_basis: ambient mismatch");
	if (!contains(k, v, w)) throw std::invalid_argument("quotient_basis: w is not contained in v");
	std::vector<std::vector<typename F::elem>> reps;
	subspace<F> acc = w;
	for (std::size_t c = 0; c < v.rank(); ++c) {
		auto cand = v.basis.column(c);
		if (member(k, acc, cand)) continue;
		matrix<F> rows(k, acc.rank() + 1, v.ambient);
		for (std::size_t i = 0; i < acc.rank(); ++i)
			for (std::size_t j = 0; j < v.ambient; ++j) rows.at(i, j) = acc.basis.at(j, i);
		for (std::size_t j = 0; j < v.ambient; ++j) rows.at(acc.rank(), j) = cand[j];
		acc = span_of_rows(k, v.ambient, rows);
		reps.push_back(std::move(cand));
	}
	return reps;
}

// w-perpendicular inside v under the standard coordinate dot product.
// Rationals only: positive definiteness of the form is what guarantees
// w + (w-perp within v) = v.
inline subspace<rational_field> orth_complement(const subspace<rational_field>& w,
                                                const subspace<rational_field>& v) {
	rational_field k;
	if (v.ambient != w.ambient) throw std::invalid_argument("orth_complement: ambient mismatch");
	if (!contains(k, v, w)) throw std::invalid_argument("orth_complement: w is not contained in v");
	// x = V c lies in w-perp iff (W^T V) c = 0
	auto wt = transpose(k, w.basis);
	auto gram = mat_mul(k, wt, v.basis);  // rank(w) x rank(v)
	auto ker = kernel(k, gram);
	std::vector<std::vector<rational>> vecs;
	for (std::size_t c = 0; c < ker.rank(); ++c) {
		auto coords = ker.basis.column(c);
		vecs.push_back(mat_vec(k, v.basis, coords));
	}
	return span_of_vectors(k, v.ambient, vecs);
}

}  // namespace bettiplane
