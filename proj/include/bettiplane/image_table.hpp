#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "bettiplane/homology.hpp"
#include "bettiplane/plane.hpp"
#include "bettiplane/simplicial_complex.hpp"
#include "bettiplane/subspace.hpp"

namespace bettiplane {

// Shared state for repeated image computations on one complex: the fixed
// homology bases of the whole complex per degree, and a memo of level-set
// images keyed by the spanning vertex subset (the image subspace depends
// only on that subset, not on the cut value).
template <class F>
struct image_context {
	const simplicial_complex* x = nullptr;

	explicit image_context(const simplicial_complex& complex) : x(&complex) {}

	const homology_basis_t<F>& whole_basis(const F& k, std::size_t r) {
		auto it = whole_.find(r);
		if (it == whole_.end()) it = whole_.emplace(r, homology_basis(k, *x, r)).first;
		return it->second;
	}

	subspace<F> level_image(const F& k, std::size_t r, bool super, const vertex_function& f,
	                        const rational& cut) {
		std::uint64_t mask = 0;
		bool maskable = x->n_vertices <= 64;
		for (std::size_t v = 0; v < x->n_vertices; ++v) {
			const bool in = super ? f.values[v] >= cut : f.values[v] <= cut;
			if (in && maskable) mask |= std::uint64_t(1) << v;
		}
		const auto key = std::make_tuple(r, super, mask);
		if (maskable) {
			auto it = memo_.find(key);
			if (it != memo_.end()) return it->second;
		}
		auto inc = super ? superlevel_subcomplex(*x, f, cut) : sublevel_subcomplex(*x, f, cut);
		auto img = inclusion_image(k, inc, *x, whole_basis(k, r));
		if (maskable) memo_.emplace(key, img);
		return img;
	}

private:
	std::map<std::size_t, homology_basis_t<F>> whole_;
	std::map<std::tuple<std::size_t, bool, std::uint64_t>, subspace<F>> memo_;
};

// The images I_a(r) and I^b(r) along the critical grid, as subspaces of the
// fixed H_r(X) coordinates. Index 0 and N+1 are the sentinel columns: empty
// sublevel / empty superlevel on the respective far sides.
template <class F>
struct image_table {
	std::size_t degree = 0;
	critical_grid grid;
	std::size_t ambient = 0;            // dim H_r(X)
	std::vector<subspace<F>> i_sub;     // size N+2
	std::vector<subspace<F>> i_super;   // size N+2

	int index_of(const rational& v) const { return grid.index_of(v); }
};

template <class F>
image_table<F> build_image_table(const F& k, const simplicial_complex& x,
                                 const vertex_function& f, std::size_t r,
                                 image_context<F>* ctx = nullptr) {
	image_context<F> local(x);
	image_context<F>& c = ctx ? *ctx : local;
	image_table<F> t;
	t.degree = r;
	t.grid = make_critical_grid(x, f);
	t.ambient = c.whole_basis(k, r).betti;
	const std::size_t n = t.grid.n();
	t.i_sub.reserve(n + 2);
	t.i_super.reserve(n + 2);
	for (std::size_t i = 0; i <= n + 1; ++i) {
		t.i_sub.push_back(c.level_image(k, r, false, f, t.grid.at(i)));
		t.i_super.push_back(c.level_image(k, r, true, f, t.grid.at(i)));
	}
	return t;
}

// F_r(a, b) = I_a(r) n I^b(r); a and b must be grid or sentinel values.
template <class F>
subspace<F> compute_f(const F& k, const image_table<F>& t, const rational& a, const rational& b) {
	const int i = t.index_of(a);
	const int j = t.index_of(b);
	if (i < 0 || j < 0) throw std::invalid_argument("compute_f: value not on the grid");
	return intersect(k, t.i_sub[static_cast<std::size_t>(i)],
	                 t.i_super[static_cast<std::size_t>(j)]);
}

// Half-open box (a0, a1] x [b0, b1) with corners on the extended grid.
struct box {
	rational a0, a1, b0, b1;

	box(rational a0_, rational a1_, rational b0_, rational b1_)
	    : a0(std::move(a0_)), a1(std::move(a1_)), b0(std::move(b0_)), b1(std::move(b1_)) {
		if (!(a0 < a1) || !(b0 < b1)) throw std::invalid_argument("box: need a0 < a1 and b0 < b1");
	}

	bool contains(const plane_point& p) const {
		return a0 < p.a && p.a <= a1 && b0 <= p.b && p.b < b1;
	}
};

// All pairwise F dimensions, indexed by extended grid indices. Everything
// box-shaped reads off this table.
template <class F>
std::vector<std::vector<std::size_t>> f_dim_grid(const F& k, const image_table<F>& t) {
	const std::size_t m = t.i_sub.size();
	std::vector<std::vector<std::size_t>> d(m, std::vector<std::size_t>(m, 0));
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t j = 0; j < m; ++j)
			d[i][j] = intersect(k, t.i_sub[i], t.i_super[j]).rank();
	return d;
}

namespace detail {
inline long long box_dim_from_grid(const std::vector<std::vector<std::size_t>>& d, std::size_t ia0,
                                   std::size_t ia1, std::size_t ib0, std::size_t ib1) {
	return static_cast<long long>(d[ia1][ib0]) + static_cast<long long>(d[ia0][ib1]) -
	       static_cast<long long>(d[ia0][ib0]) - static_cast<long long>(d[ia1][ib1]);
}

inline std::array<std::size_t, 4> box_indices(const critical_grid& g, const box& b) {
	const int ia0 = g.index_of(b.a0), ia1 = g.index_of(b.a1);
	const int ib0 = g.index_of(b.b0), ib1 = g.index_of(b.b1);
	if (ia0 < 0 || ia1 < 0 || ib0 < 0 || ib1 < 0)
		throw std::invalid_argument("box corner not on the grid");
	return {static_cast<std::size_t>(ia0), static_cast<std::size_t>(ia1),
	        static_cast<std::size_t>(ib0), static_cast<std::size_t>(ib1)};
}
}  // namespace detail

// dim F_r(B) = F(a1,b0) + F(a0,b1) - F(a0,b0) - F(a1,b1) for B = (a0,a1]x[b0,b1).
template <class F>
std::size_t compute_f_box_dim(const F& k, const image_table<F>& t, const box& b) {
	const auto [ia0, ia1, ib0, ib1] = detail::box_indices(t.grid, b);
	auto fdim = [&](std::size_t i, std::size_t j) {
		return static_cast<long long>(intersect(k, t.i_sub[i], t.i_super[j]).rank());
	};
	const long long v = fdim(ia1, ib0) + fdim(ia0, ib1) - fdim(ia0, ib0) - fdim(ia1, ib1);
	if (v < 0) throw std::logic_error("compute_f_box_dim: negative box dimension");
	return static_cast<std::size_t>(v);
}

// dim G_r(B) = dim ((I_{a0} + I^{b0}) n (I_{a1} + I^{b1})) - dim (I_{a0} + I^{b1}),
// the kernel-side realization of the box space.
template <class F>
std::size_t compute_g_box_dim(const F& k, const image_table<F>& t, const box& b) {
	const auto [ia0, ia1, ib0, ib1] = detail::box_indices(t.grid, b);
	auto s_low = sum(k, t.i_sub[ia0], t.i_super[ib0]);
	auto s_high = sum(k, t.i_sub[ia1], t.i_super[ib1]);
	auto denom = sum(k, t.i_sub[ia0], t.i_super[ib1]);
	const long long v = static_cast<long long>(intersect(k, s_low, s_high).rank()) -
	                    static_cast<long long>(denom.rank());
	if (v < 0) throw std::logic_error("compute_g_box_dim: negative box dimension");
	return static_cast<std::size_t>(v);
}

}  // namespace bettiplane
