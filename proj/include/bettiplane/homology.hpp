#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "bettiplane/matrix.hpp"
#include "bettiplane/simplicial_complex.hpp"
#include "bettiplane/subspace.hpp"

namespace bettiplane {

// Homology of a fixed complex in one degree: a Betti number, cycle
// representatives for a basis of H_r, and enough elimination data to express
// any cycle in that basis modulo boundaries. The coordinates fixed here are
// the single ambient coordinatization all image subspaces live in.
template <class F>
struct homology_basis_t {
	std::size_t degree = 0;
	std::size_t betti = 0;
	std::size_t n_chains = 0;
	std::size_t boundary_rank = 0;
	matrix<F> cycle_reps;  // n_chains x betti, columns are representative cycles

	// T row-reduces [boundary basis | cycle_reps]; since that matrix has full
	// column rank, (T z) restricted to the first boundary_rank + betti rows
	// gives the unique expansion coefficients of a cycle z.
	matrix<F> transform;
};

template <class F>
homology_basis_t<F> homology_basis(const F& k, const simplicial_complex& x, std::size_t r) {
	homology_basis_t<F> hb;
	hb.degree = r;
	hb.n_chains = x.count(r);
	hb.cycle_reps = matrix<F>(k, hb.n_chains, 0);
	if (hb.n_chains == 0) return hb;

	subspace<F> cycles = r == 0 ? full_subspace(k, hb.n_chains)
	                            : kernel(k, boundary_matrix(k, x, r));
	subspace<F> boundaries = x.count(r + 1) == 0
	                             ? zero_subspace(k, hb.n_chains)
	                             : image(k, boundary_matrix(k, x, r + 1));
	hb.boundary_rank = boundaries.rank();
	hb.betti = cycles.rank() - boundaries.rank();

	auto reps = quotient_basis(k, cycles, boundaries);
	hb.cycle_reps = from_columns(k, hb.n_chains, reps);

	matrix<F> span(k, hb.n_chains, hb.boundary_rank + hb.betti);
	for (std::size_t c = 0; c < hb.boundary_rank; ++c)
		for (std::size_t row = 0; row < hb.n_chains; ++row)
			span.at(row, c) = boundaries.basis.at(row, c);
	for (std::size_t c = 0; c < hb.betti; ++c)
		for (std::size_t row = 0; row < hb.n_chains; ++row)
			span.at(row, hb.boundary_rank + c) = hb.cycle_reps.at(row, c);
	hb.transform = rref_with_transform(k, span).transform;
	return hb;
}

// Coordinates of the class of the cycle z in the fixed homology basis.
template <class F>
std::vector<typename F::elem> homology_coords(const F& k, const homology_basis_t<F>& hb,
                                              const std::vector<typename F::elem>& z) {
	if (z.size() != hb.n_chains) throw std::invalid_argument("homology_coords: chain length");
	auto y = mat_vec(k, hb.transform, z);
	for (std::size_t i = hb.boundary_rank + hb.betti; i < y.size(); ++i)
		if (!k.is_zero(y[i]))
			throw std::logic_error("homology_coords: vector is not a cycle of the complex");
	return std::vector<typename F::elem>(y.begin() + hb.boundary_rank,
	                                     y.begin() + hb.boundary_rank + hb.betti);
}

namespace detail {
// Pushes one simplex through an injective vertex map; returns the target
// index and the sign of the sorting permutation, or -1 if absent.
template <class F>
int map_simplex(const F& k, const simplex& s, const std::vector<int>& vmap,
                const simplicial_complex& whole, typename F::elem& sign_out) {
	simplex t;
	t.reserve(s.size());
	for (int v : s) t.push_back(vmap[v]);
	std::size_t inversions = 0;
	for (std::size_t i = 0; i < t.size(); ++i)
		for (std::size_t j = i + 1; j < t.size(); ++j)
			if (t[i] > t[j]) ++inversions;
	std::sort(t.begin(), t.end());
	sign_out = inversions % 2 == 0 ? k.one() : k.neg(k.one());
	return whole.index_of(t);
}
}  // namespace detail

// Matrix of H_r(sub) -> H_r(whole) induced by the inclusion described by
// vertex_map: each cycle representative of sub is pushed through the
// relabeling and expressed in whole's homology basis.
template <class F>
matrix<F> induced_homology_map(const F& k, const simplicial_complex& sub,
                               const std::vector<int>& vertex_map,
                               const simplicial_complex& whole,
                               const homology_basis_t<F>& sub_hb,
                               const homology_basis_t<F>& whole_hb) {
	if (vertex_map.size() != sub.n_vertices)
		throw std::invalid_argument("induced_homology_map: vertex map length");
	{
		std::vector<int> seen;
		for (int v : vertex_map) {
			if (v < 0 || static_cast<std::size_t>(v) >= whole.n_vertices)
				throw std::invalid_argument("induced_homology_map: vertex map out of range");
			seen.push_back(v);
		}
		std::sort(seen.begin(), seen.end());
		if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
			throw std::invalid_argument("induced_homology_map: vertex map is not injective");
	}
	for (const auto& level : sub.by_dim)
		for (const auto& s : level) {
			typename F::elem sign = k.one();
			if (detail::map_simplex(k, s, vertex_map, whole, sign) < 0)
				throw std::invalid_argument("induced_homology_map: image simplex missing, "
				                            "map is not simplicial");
		}
	const std::size_t r = sub_hb.degree;
	matrix<F> out(k, whole_hb.betti, sub_hb.betti);
	for (std::size_t c = 0; c < sub_hb.betti; ++c) {
		std::vector<typename F::elem> pushed(whole.count(r), k.zero());
		for (std::size_t i = 0; i < sub.count(r); ++i) {
			const auto& coef = sub_hb.cycle_reps.at(i, c);
			if (k.is_zero(coef)) continue;
			typename F::elem sign = k.one();
			const int j = detail::map_simplex(k, sub.by_dim[r][i], vertex_map, whole, sign);
			pushed[static_cast<std::size_t>(j)] =
			    k.add(pushed[static_cast<std::size_t>(j)], k.mul(coef, sign));
		}
		auto coords = homology_coords(k, whole_hb, pushed);
		for (std::size_t row = 0; row < whole_hb.betti; ++row) out.at(row, c) = coords[row];
	}
	return out;
}

template <class F>
matrix<F> induced_homology_map(const F& k, const simplicial_complex& sub,
                               const std::vector<int>& vertex_map,
                               const simplicial_complex& whole, std::size_t r) {
	return induced_homology_map(k, sub, vertex_map, whole, homology_basis(k, sub, r),
	                            homology_basis(k, whole, r));
}

// Image of H_r(sub) -> H_r(whole) as a subspace of the whole-complex
// homology coordinates.
template <class F>
subspace<F> inclusion_image(const F& k, const subcomplex_inclusion& inc,
                            const simplicial_complex& whole,
                            const homology_basis_t<F>& whole_hb) {
	auto sub_hb = homology_basis(k, inc.complex, whole_hb.degree);
	return image(k, induced_homology_map(k, inc.complex, inc.vertex_map, whole, sub_hb, whole_hb));
}

// Homologically critical values in degree r: grid values where the image of
// sublevel homology grows (scanning a upward) or the image of superlevel
// homology grows (scanning b downward).
template <class F>
std::vector<rational> detect_homological_cr(const F& k, const simplicial_complex& x,
                                            const vertex_function& f, std::size_t r) {
	auto grid = make_critical_grid(x, f);
	auto whole_hb = homology_basis(k, x, r);
	const std::size_t n = grid.n();
	std::vector<std::size_t> d_sub(n + 2), d_super(n + 2);
	for (std::size_t i = 0; i <= n + 1; ++i) {
		d_sub[i] = inclusion_image(k, sublevel_subcomplex(x, f, grid.at(i)), x, whole_hb).rank();
		d_super[i] = inclusion_image(k, superlevel_subcomplex(x, f, grid.at(i)), x, whole_hb).rank();
	}
	std::vector<rational> out;
	for (std::size_t i = 1; i <= n; ++i)
		if (d_sub[i] > d_sub[i - 1] || d_super[i] > d_super[i + 1]) out.push_back(grid.at(i));
	return out;
}

}  // namespace bettiplane
