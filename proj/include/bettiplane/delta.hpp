#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "bettiplane/image_table.hpp"
#include "bettiplane/plane.hpp"

namespace bettiplane {

// The refined Betti configuration: at every grid pair (c_i, c_j) the box
// dimension of the elementary cell (c_{i-1}, c_i] x [c_j, c_{j+1}), kept
// where positive. Total mass equals dim H_r(X).
template <class F>
configuration compute_delta(const F& k, const image_table<F>& t) {
	configuration out;
	const auto d = f_dim_grid(k, t);
	const std::size_t n = t.grid.n();
	for (std::size_t i = 1; i <= n; ++i)
		for (std::size_t j = 1; j <= n; ++j) {
			const long long m = detail::box_dim_from_grid(d, i - 1, i, j, j + 1);
			if (m < 0) throw std::logic_error("compute_delta: negative cell dimension");
			if (m > 0) out.add({t.grid.at(i), t.grid.at(j)}, static_cast<int>(m));
		}
	return out;
}

template <class F>
configuration compute_delta(const F& k, const simplicial_complex& x, const vertex_function& f,
                            std::size_t r, image_context<F>* ctx = nullptr) {
	return compute_delta(k, build_image_table(k, x, f, r, ctx));
}

// The homology refinement: at each support point, deterministic
// representatives of F(c_i, c_j) / (F(c_{i-1}, c_j) + F(c_i, c_{j+1})),
// as vectors in the H_r(X) coordinates.
template <class F>
struct vector_configuration {
	std::size_t ambient = 0;
	std::map<plane_point, std::vector<std::vector<typename F::elem>>> entries;

	configuration dimensions() const {
		configuration c;
		for (const auto& [p, reps] : entries)
			if (!reps.empty()) c.add(p, static_cast<int>(reps.size()));
		return c;
	}
};

template <class F>
vector_configuration<F> compute_hat_delta(const F& k, const image_table<F>& t) {
	vector_configuration<F> out;
	out.ambient = t.ambient;
	const std::size_t n = t.grid.n();
	std::vector<std::vector<subspace<F>>> f(n + 2, std::vector<subspace<F>>(n + 2));
	for (std::size_t i = 0; i <= n + 1; ++i)
		for (std::size_t j = 0; j <= n + 1; ++j) f[i][j] = intersect(k, t.i_sub[i], t.i_super[j]);
	for (std::size_t i = 1; i <= n; ++i)
		for (std::size_t j = 1; j <= n; ++j) {
			auto f_prime = sum(k, f[i - 1][j], f[i][j + 1]);
			auto reps = quotient_basis(k, f[i][j], f_prime);
			if (!reps.empty()) out.entries[{t.grid.at(i), t.grid.at(j)}] = std::move(reps);
		}
	return out;
}

template <class F>
vector_configuration<F> compute_hat_delta(const F& k, const simplicial_complex& x,
                                          const vertex_function& f, std::size_t r,
                                          image_context<F>* ctx = nullptr) {
	return compute_hat_delta(k, build_image_table(k, x, f, r, ctx));
}

// The canonical splitting over the rationals: at each support point the
// orthogonal complement of F'(B) inside F(c_i, c_j) under the coordinate dot
// product. The subspaces are mutually orthogonal and sum to H_r(X).
struct ortho_configuration {
	std::size_t ambient = 0;
	std::map<plane_point, subspace<rational_field>> entries;
};

inline ortho_configuration compute_ortho_delta(const rational_field& k,
                                               const image_table<rational_field>& t) {
	ortho_configuration out;
	out.ambient = t.ambient;
	const std::size_t n = t.grid.n();
	std::vector<std::vector<subspace<rational_field>>> f(n + 2,
	                                                     std::vector<subspace<rational_field>>(n + 2));
	for (std::size_t i = 0; i <= n + 1; ++i)
		for (std::size_t j = 0; j <= n + 1; ++j) f[i][j] = intersect(k, t.i_sub[i], t.i_super[j]);
	for (std::size_t i = 1; i <= n; ++i)
		for (std::size_t j = 1; j <= n; ++j) {
			auto f_prime = sum(k, f[i - 1][j], f[i][j + 1]);
			if (f_prime.rank() == f[i][j].rank()) continue;
			out.entries[{t.grid.at(i), t.grid.at(j)}] = orth_complement(f_prime, f[i][j]);
		}
	return out;
}

inline ortho_configuration compute_ortho_delta(const simplicial_complex& x,
                                               const vertex_function& f, std::size_t r,
                                               image_context<rational_field>* ctx = nullptr) {
	rational_field k;
	return compute_ortho_delta(k, build_image_table(k, x, f, r, ctx));
}

// Definitional evaluation of delta at one grid point: the box dimension of
// B(a, b; eps) = (a - eps, a] x [b, b + eps) for shrinking eps, computed as
// the honest quotient dim F(a,b) - dim (F(a-eps,b) + F(a,b+eps)) from
// freshly built level images, checked to stabilize. Independent of the grid
// formula used by compute_delta.
template <class F>
std::size_t oracle_delta_stabilization(const F& k, const simplicial_complex& x,
                                       const vertex_function& f, std::size_t r,
                                       const plane_point& point,
                                       image_context<F>* ctx = nullptr) {
	auto grid = make_critical_grid(x, f);
	bool a_on = false, b_on = false;
	for (const auto& c : grid.values) {
		if (c == point.a) a_on = true;
		if (c == point.b) b_on = true;
	}
	if (!a_on || !b_on)
		throw std::invalid_argument("oracle_delta_stabilization: point not on the critical grid");
	image_context<F> local(x);
	image_context<F>& c = ctx ? *ctx : local;
	auto f_at = [&](const rational& a, const rational& b) {
		return intersect(k, c.level_image(k, r, false, f, a), c.level_image(k, r, true, f, b));
	};
	const rational gap = grid.min_gap();
	std::vector<std::size_t> vals;
	rational eps = gap / rational(2);
	for (int m = 0; m < 3; ++m, eps = eps / rational(2)) {
		auto center = f_at(point.a, point.b);
		auto left = f_at(point.a - eps, point.b);
		auto up = f_at(point.a, point.b + eps);
		vals.push_back(center.rank() - sum(k, left, up).rank());
	}
	for (std::size_t m = 1; m < vals.size(); ++m)
		if (vals[m] != vals[0])
			throw std::logic_error("oracle_delta_stabilization: box dimension failed to stabilize");
	return vals[0];
}

}  // namespace bettiplane
