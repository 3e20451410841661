#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bettiplane {

// Dense row-major matrix over a field F. Entries are plain field elements;
// every operation takes the field object explicitly.
template <class F>
struct matrix {
	using elem = typename F::elem;

	std::size_t rows = 0;
	std::size_t cols = 0;
	std::vector<elem> a;

	matrix() = default;
	matrix(const F& k, std::size_t r, std::size_t c)
	    : rows(r), cols(c), a(r * c, k.zero()) {}

	elem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
	const elem& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

	static matrix identity(const F& k, std::size_t n) {
		matrix m(k, n, n);
		for (std::size_t i = 0; i < n; ++i) m.at(i, i) = k.one();
		return m;
	}

	std::vector<elem> column(std::size_t c) const {
		std::vector<elem> v;
		v.reserve(rows);
		for (std::size_t r = 0; r < rows; ++r) v.push_back(at(r, c));
		return v;
	}

	bool operator==(const matrix&) const = default;
};

template <class F>
matrix<F> from_columns(const F& k, std::size_t rows,
                       const std::vector<std::vector<typename F::elem>>& cols) {
	matrix<F> m(k, rows, cols.size());
	for (std::size_t c = 0; c < cols.size(); ++c) {
		if (cols[c].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
		for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
	}
	return m;
}

template <class F>
matrix<F> transpose(const F& k, const matrix<F>& m) {
	matrix<F> t(k, m.cols, m.rows);
	for (std::size_t r = 0; r < m.rows; ++r)
		for (std::size_t c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
	return t;
}

template <class F>
matrix<F> mat_mul(const F& k, const matrix<F>& a, const matrix<F>& b) {
	if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
	matrix<F> c(k, a.rows, b.cols);
	for (std::size_t i = 0; i < a.rows; ++i)
		for (std::size_t l = 0; l < a.cols; ++l) {
			if (k.is_zero(a.at(i, l))) continue;
			for (std::size_t j = 0; j < b.cols; ++j)
				c.at(i, j) = k.add(c.at(i, j), k.mul(a.at(i, l), b.at(l, j)));
		}
	return c;
}

template <class F>
std::vector<typename F::elem> mat_vec(const F& k, const matrix<F>& m,
                                      const std::vector<typename F::elem>& x) {
	if (m.cols != x.size()) throw std::invalid_argument("mat_vec: shape mismatch");
	std::vector<typename F::elem> y(m.rows, k.zero());
	for (std::size_t r = 0; r < m.rows; ++r)
		for (std::size_t c = 0; c < m.cols; ++c)
			if (!k.is_zero(m.at(r, c))) y[r] = k.add(y[r], k.mul(m.at(r, c), x[c]));
	return y;
}

template <class F>
struct rref_result {
	matrix<F> reduced;
	std::vector<std::size_t> pivot_cols;
	std::size_t rank = 0;
};

// Gauss-Jordan to the unique reduced row-echelon form. Pivot choice is the
// first row with a nonzero entry in the current column, so the result is
// deterministic; exactness makes pivot magnitude irrelevant.
template <class F>
rref_result<F> rref(const F& k, matrix<F> m) {
	std::vector<std::size_t> pivots;
	std::size_t row = 0;
	for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
		std::size_t sel = row;
		while (sel < m.rows && k.is_zero(m.at(sel, col))) ++sel;
		if (sel == m.rows) continue;
		if (sel != row)
			for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
		const auto inv = k.inv(m.at(row, col));
		for (std::size_t c = col; c < m.cols; ++c) m.at(row, c) = k.mul(m.at(row, c), inv);
		for (std::size_t r = 0; r < m.rows; ++r) {
			if (r == row || k.is_zero(m.at(r, col))) continue;
			const auto factor = m.at(r, col);
			for (std::size_t c = col; c < m.cols; ++c)
				m.at(r, c) = k.sub(m.at(r, c), k.mul(factor, m.at(row, c)));
		}
		pivots.push_back(col);
		++row;
	}
	return {std::move(m), std::move(pivots), row};
}

template <class F>
struct rref_transform {
	matrix<F> reduced;    // E = T * original
	matrix<F> transform;  // T, invertible rows x rows
	std::vector<std::size_t> pivot_cols;
	std::size_t rank = 0;
};

// Same elimination, run on [m | I] so the row transform is recovered.
template <class F>
rref_transform<F> rref_with_transform(const F& k, const matrix<F>& m) {
	matrix<F> aug(k, m.rows, m.cols + m.rows);
	for (std::size_t r = 0; r < m.rows; ++r) {
		for (std::size_t c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
		aug.at(r, m.cols + r) = k.one();
	}
	std::vector<std::size_t> pivots;
	std::size_t row = 0;
	for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
		std::size_t sel = row;
		while (sel < m.rows && k.is_zero(aug.at(sel, col))) ++sel;
		if (sel == m.rows) continue;
		if (sel != row)
			for (std::size_t c = 0; c < aug.cols; ++c) std::swap(aug.at(sel, c), aug.at(row, c));
		const auto inv = k.inv(aug.at(row, col));
		for (std::size_t c = 0; c < aug.cols; ++c) aug.at(row, c) = k.mul(aug.at(row, c), inv);
		for (std::size_t r = 0; r < m.rows; ++r) {
			if (r == row || k.is_zero(aug.at(r, col))) continue;
			const auto factor = aug.at(r, col);
			for (std::size_t c = 0; c < aug.cols; ++c)
				aug.at(r, c) = k.sub(aug.at(r, c), k.mul(factor, aug.at(row, c)));
		}
		pivots.push_back(col);
		++row;
	}
	rref_transform<F> out;
	out.reduced = matrix<F>(k, m.rows, m.cols);
	out.transform = matrix<F>(k, m.rows, m.rows);
	for (std::size_t r = 0; r < m.rows; ++r) {
		for (std::size_t c = 0; c < m.cols; ++c) out.reduced.at(r, c) = aug.at(r, c);
		for (std::size_t c = 0; c < m.rows; ++c) out.transform.at(r, c) = aug.at(r, m.cols + c);
	}
	out.pivot_cols = std::move(pivots);
	out.rank = row;
	return out;
}

// Solves A x = b for one solution (free variables set to zero), or nullopt
// when the system is inconsistent.
template <class F>
std::optional<std::vector<typename F::elem>> solve(const F& k, const matrix<F>& a,
                                                   const std::vector<typename F::elem>& b) {
	if (a.rows != b.size()) throw std::invalid_argument("solve: shape mismatch");
	matrix<F> aug(k, a.rows, a.cols + 1);
	for (std::size_t r = 0; r < a.rows; ++r) {
		for (std::size_t c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
		aug.at(r, a.cols) = b[r];
	}
	auto rr = rref(k, std::move(aug));
	std::vector<typename F::elem> x(a.cols, k.zero());
	for (std::size_t i = 0; i < rr.rank; ++i) {
		if (rr.pivot_cols[i] == a.cols) return std::nullopt;  // pivot in the b column
		x[rr.pivot_cols[i]] = rr.reduced.at(i, a.cols);
	}
	return x;
}

}  // namespace bettiplane
