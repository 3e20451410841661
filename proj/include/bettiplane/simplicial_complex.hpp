#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bettiplane/field.hpp"
#include "bettiplane/matrix.hpp"
#include "bettiplane/rational.hpp"

namespace bettiplane {

using simplex = std::vector<int>;  // strictly increasing vertex indices

// Finite simplicial complex. Simplices are grouped by dimension and sorted
// lexicographically within each dimension, so simplex indices (and hence
// boundary matrices) are canonical regardless of input order.
struct simplicial_complex {
	std::size_t n_vertices = 0;
	std::vector<std::vector<simplex>> by_dim;  // by_dim[d] = sorted d-simplices

	simplicial_complex() = default;
	simplicial_complex(std::size_t n, std::vector<simplex> simplices) : n_vertices(n) {
		for (auto& s : simplices) {
			if (s.empty()) throw std::invalid_argument("simplicial_complex: empty simplex");
			const std::size_t d = s.size() - 1;
			if (by_dim.size() <= d) by_dim.resize(d + 1);
			by_dim[d].push_back(std::move(s));
		}
		for (auto& level : by_dim) std::sort(level.begin(), level.end());
		rebuild_index();
	}

	int dim() const { return static_cast<int>(by_dim.size()) - 1; }

	std::size_t count(std::size_t d) const {
		return d < by_dim.size() ? by_dim[d].size() : 0;
	}

	// Index of a d-simplex in canonical order, or -1.
	int index_of(const simplex& s) const {
		const std::size_t d = s.size() - 1;
		if (d >= index_.size()) return -1;
		auto it = index_[d].find(s);
		return it == index_[d].end() ? -1 : it->second;
	}

	bool empty() const { return n_vertices == 0 || by_dim.empty(); }

private:
	std::vector<std::map<simplex, int>> index_;

	void rebuild_index() {
		index_.assign(by_dim.size(), {});
		for (std::size_t d = 0; d < by_dim.size(); ++d)
			for (std::size_t i = 0; i < by_dim[d].size(); ++i)
				index_[d][by_dim[d][i]] = static_cast<int>(i);
	}
};

struct vertex_function {
	std::vector<rational> values;  // one per vertex
};

struct complex_violation {
	enum class kind_t { unsorted, bad_index, duplicate, missing_face };
	kind_t kind;
	std::string detail;
};

// Checks sortedness, vertex bounds, uniqueness and face closure; reports the
// first violation found.
inline std::optional<complex_violation> validate(const simplicial_complex& k) {
	using kind_t = complex_violation::kind_t;
	for (std::size_t d = 0; d < k.by_dim.size(); ++d) {
		for (std::size_t i = 0; i < k.by_dim[d].size(); ++i) {
			const auto& s = k.by_dim[d][i];
			for (std::size_t j = 0; j + 1 < s.size(); ++j)
				if (s[j] >= s[j + 1])
					return complex_violation{kind_t::unsorted,
					                         "simplex is not strictly increasing at dim " +
					                             std::to_string(d) + " index " + std::to_string(i)};
			for (int v : s)
				if (v < 0 || static_cast<std::size_t>(v) >= k.n_vertices)
					return complex_violation{kind_t::bad_index,
					                         "vertex " + std::to_string(v) + " out of range [0, " +
					                             std::to_string(k.n_vertices) + ")"};
			if (i + 1 < k.by_dim[d].size() && s == k.by_dim[d][i + 1])
				return complex_violation{kind_t::duplicate, "duplicate simplex at dim " +
				                                                std::to_string(d)};
			if (d > 0) {
				for (std::size_t drop = 0; drop < s.size(); ++drop) {
					simplex face;
					for (std::size_t j = 0; j < s.size(); ++j)
						if (j != drop) face.push_back(s[j]);
					if (k.index_of(face) < 0) {
						std::string txt = "missing face {";
						for (std::size_t j = 0; j < face.size(); ++j)
							txt += (j ? "," : "") + std::to_string(face[j]);
						return complex_violation{kind_t::missing_face, txt + "}"};
					}
				}
			}
		}
	}
	return std::nullopt;
}

// Matrix of the simplicial boundary map from r-chains to (r-1)-chains in the
// canonical simplex order, with alternating signs (vacuous over GF(2)).
template <class F>
matrix<F> boundary_matrix(const F& k, const simplicial_complex& x, std::size_t r) {
	if (r == 0) throw std::invalid_argument("boundary_matrix: r must be >= 1");
	matrix<F> m(k, x.count(r - 1), x.count(r));
	if (r > static_cast<std::size_t>(std::max(x.dim(), 0))) return m;
	for (std::size_t c = 0; c < x.count(r); ++c) {
		const auto& s = x.by_dim[r][c];
		auto sign = k.one();
		for (std::size_t drop = 0; drop < s.size(); ++drop) {
			simplex face;
			for (std::size_t j = 0; j < s.size(); ++j)
				if (j != drop) face.push_back(s[j]);
			const int row = x.index_of(face);
			if (row < 0) throw std::invalid_argument("boundary_matrix: complex is not face-closed");
			m.at(static_cast<std::size_t>(row), c) = sign;
			sign = k.neg(sign);
		}
	}
	return m;
}

struct subcomplex_inclusion {
	simplicial_complex complex;
	std::vector<int> vertex_map;  // sub vertex index -> ambient vertex index, increasing
};

namespace detail {
template <class Pred>
subcomplex_inclusion full_subcomplex(const simplicial_complex& x, Pred keep) {
	std::vector<int> vmap;
	std::vector<int> to_sub(x.n_vertices, -1);
	for (std::size_t v = 0; v < x.n_vertices; ++v)
		if (keep(v)) {
			to_sub[v] = static_cast<int>(vmap.size());
			vmap.push_back(static_cast<int>(v));
		}
	std::vector<simplex> kept;
	for (const auto& level : x.by_dim)
		for (const auto& s : level) {
			bool all = true;
			for (int v : s)
				if (to_sub[v] < 0) { all = false; break; }
			if (!all) continue;
			simplex t;
			t.reserve(s.size());
			for (int v : s) t.push_back(to_sub[v]);
			kept.push_back(std::move(t));
		}
	return {simplicial_complex(vmap.size(), std::move(kept)), std::move(vmap)};
}
}  // namespace detail

// Full subcomplex spanned by the vertices with f(v) <= a.
inline subcomplex_inclusion sublevel_subcomplex(const simplicial_complex& x,
                                                const vertex_function& f, const rational& a) {
	return detail::full_subcomplex(x, [&](std::size_t v) { return f.values[v] <= a; });
}

// Full subcomplex spanned by the vertices with f(v) >= b.
inline subcomplex_inclusion superlevel_subcomplex(const simplicial_complex& x,
                                                  const vertex_function& f, const rational& b) {
	return detail::full_subcomplex(x, [&](std::size_t v) { return f.values[v] >= b; });
}

// Sorted distinct vertex values c_1 < ... < c_N with the sentinel values
// c_0 = c_1 - 1 and c_{N+1} = c_N + 1. All homological critical values of
// the PL map lie on the grid.
struct critical_grid {
	std::vector<rational> values;  // c_1..c_N
	rational low_sentinel;         // c_0
	rational high_sentinel;        // c_{N+1}

	std::size_t n() const { return values.size(); }

	// Value at extended index i in 0..N+1.
	rational at(std::size_t i) const {
		if (i == 0) return low_sentinel;
		if (i == values.size() + 1) return high_sentinel;
		return values[i - 1];
	}

	// Extended index of a grid-or-sentinel value, or -1.
	int index_of(const rational& v) const {
		if (v == low_sentinel) return 0;
		if (v == high_sentinel) return static_cast<int>(values.size()) + 1;
		auto it = std::lower_bound(values.begin(), values.end(), v);
		if (it != values.end() && *it == v) return static_cast<int>(it - values.begin()) + 1;
		return -1;
	}

	// Smallest gap between consecutive extended grid values (the sentinels
	// contribute their unit gaps, so this is always defined and <= 1).
	rational min_gap() const {
		rational g(1);
		for (std::size_t i = 1; i < values.size(); ++i) g = min(g, values[i] - values[i - 1]);
		return g;
	}

	// Smallest gap between distinct critical values; nullopt when fewer than
	// two grid values exist.
	std::optional<rational> min_critical_gap() const {
		if (values.size() < 2) return std::nullopt;
		rational g = values[1] - values[0];
		for (std::size_t i = 2; i < values.size(); ++i) g = min(g, values[i] - values[i - 1]);
		return g;
	}
};

inline critical_grid make_critical_grid(const simplicial_complex& x, const vertex_function& f) {
	if (x.n_vertices == 0) throw std::invalid_argument("critical_grid: empty complex");
	if (f.values.size() != x.n_vertices)
		throw std::invalid_argument("critical_grid: value count mismatch");
	std::vector<rational> vals = f.values;
	std::sort(vals.begin(), vals.end());
	vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
	critical_grid g;
	g.low_sentinel = vals.front() - rational(1);
	g.high_sentinel = vals.back() + rational(1);
	g.values = std::move(vals);
	return g;
}

}  // namespace bettiplane
