#pragma once

#include <chrono>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bettiplane/bottleneck.hpp"
#include "bettiplane/delta.hpp"
#include "bettiplane/homology.hpp"
#include "bettiplane/image_table.hpp"

namespace bettiplane {

// Outcome of one machine check; a failing report always carries witnesses
// (the offending box, point or matching).
struct verification_report {
	std::string check;
	bool pass = true;
	std::vector<std::string> witnesses;
	double seconds = 0.0;

	verification_report() = default;
	explicit verification_report(std::string name) : check(std::move(name)) {}

	void fail(std::string witness) {
		pass = false;
		witnesses.push_back(std::move(witness));
	}
};

struct perturbation_spec {
	rational epsilon;
	unsigned trials = 100;
	std::uint64_t seed = 1;
};

struct manifold_metadata {
	bool closed_manifold = false;
	int dimension = -1;
	bool orientable = false;  // orientable over every field; GF(2) never needs it
};

namespace detail {

class stopwatch {
public:
	stopwatch() : start_(std::chrono::steady_clock::now()) {}
	double seconds() const {
		return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
	}

private:
	std::chrono::steady_clock::time_point start_;
};

inline std::string point_str(const plane_point& p) {
	return "(" + p.a.to_string() + ", " + p.b.to_string() + ")";
}

}  // namespace detail

// g = f with every vertex value shifted by a seeded rational in [-eps, eps].
inline vertex_function perturb_function(const vertex_function& f, const rational& eps,
                                        std::uint64_t seed) {
	std::mt19937_64 rng(seed);
	constexpr long denom = 1024;
	vertex_function g = f;
	for (auto& v : g.values) {
		const long num = static_cast<long>(rng() % (2 * denom + 1)) - denom;
		v += eps * rational(num, denom);
	}
	return g;
}

// Sup distance of two PL functions on the same complex: attained at a vertex.
inline rational sup_distance(const vertex_function& f, const vertex_function& g) {
	rational d(0);
	for (std::size_t v = 0; v < f.values.size(); ++v) d = max(d, (f.values[v] - g.values[v]).abs());
	return d;
}

// Seeded perturbation to pairwise-distinct vertex values: adds a permuted
// arithmetic ladder of offsets strictly below the smallest critical gap, so
// ties split and non-ties never collide.
inline vertex_function perturb_to_distinct(const simplicial_complex& x, const vertex_function& f,
                                           std::uint64_t seed) {
	auto grid = make_critical_grid(x, f);
	rational eta = grid.min_critical_gap().value_or(rational(1)) / rational(2);
	const std::size_t n = x.n_vertices;
	std::vector<std::size_t> perm(n);
	std::iota(perm.begin(), perm.end(), std::size_t{0});
	std::mt19937_64 rng(seed);
	for (std::size_t i = n; i > 1; --i)
		std::swap(perm[i - 1], perm[rng() % i]);
	vertex_function g = f;
	for (std::size_t v = 0; v < n; ++v)
		g.values[v] += eta * rational(static_cast<long>(perm[v]) + 1, static_cast<long>(n) + 1);
	return g;
}

// Total mass of delta equals the Betti number in every degree.
template <class F>
verification_report verify_total_mass(const F& k, const simplicial_complex& x,
                                      const vertex_function& f) {
	detail::stopwatch timer;
	verification_report rep("mass");
	image_context<F> ctx(x);
	for (std::size_t r = 0; r <= static_cast<std::size_t>(std::max(x.dim(), 0)); ++r) {
		const auto mass = compute_delta(k, x, f, r, &ctx).total_mass();
		const auto betti = ctx.whole_basis(k, r).betti;
		if (mass != betti) {
			std::ostringstream w;
			w << "degree " << r << ": total mass " << mass << " != betti " << betti;
			rep.fail(w.str());
		}
	}
	rep.seconds = timer.seconds();
	return rep;
}

// Every support coordinate of delta_r is a detected homologically critical
// value in degree r.
template <class F>
verification_report verify_critical_support(const F& k, const simplicial_complex& x,
                                            const vertex_function& f) {
	detail::stopwatch timer;
	verification_report rep("critical-support");
	image_context<F> ctx(x);
	for (std::size_t r = 0; r <= static_cast<std::size_t>(std::max(x.dim(), 0)); ++r) {
		auto delta = compute_delta(k, x, f, r, &ctx);
		auto cr = detect_homological_cr(k, x, f, r);
		auto is_critical = [&](const rational& v) {
			for (const auto& c : cr)
				if (c == v) return true;
			return false;
		};
		for (const auto& [p, mult] : delta.entries) {
			if (!is_critical(p.a))
				rep.fail("degree " + std::to_string(r) + ": a-coordinate of " +
				         detail::point_str(p) + " is not homologically critical");
			if (!is_critical(p.b))
				rep.fail("degree " + std::to_string(r) + ": b-coordinate of " +
				         detail::point_str(p) + " is not homologically critical");
		}
	}
	rep.seconds = timer.seconds();
	return rep;
}

// Exhaustive box laws over every grid-cornered box: box-count identity,
// split additivity and the F-G dimension agreement.
template <class F>
verification_report verify_box_laws(const F& k, const simplicial_complex& x,
                                    const vertex_function& f) {
	detail::stopwatch timer;
	verification_report rep("box-laws");
	image_context<F> ctx(x);
	for (std::size_t r = 0; r <= static_cast<std::size_t>(std::max(x.dim(), 0)); ++r) {
		auto t = build_image_table(k, x, f, r, &ctx);
		auto delta = compute_delta(k, t);
		auto d = f_dim_grid(k, t);
		const std::size_t m = t.grid.n() + 2;
		std::vector<std::vector<subspace<F>>> s(m, std::vector<subspace<F>>(m));
		for (std::size_t i = 0; i < m; ++i)
			for (std::size_t j = 0; j < m; ++j) s[i][j] = sum(k, t.i_sub[i], t.i_super[j]);
		auto box_str = [&](std::size_t ia0, std::size_t ia1, std::size_t ib0, std::size_t ib1) {
			std::ostringstream o;
			o << "(" << t.grid.at(ia0).to_string() << ", " << t.grid.at(ia1).to_string() << "] x ["
			  << t.grid.at(ib0).to_string() << ", " << t.grid.at(ib1).to_string() << ")";
			return o.str();
		};
		for (std::size_t ia0 = 0; ia0 < m; ++ia0)
			for (std::size_t ia1 = ia0 + 1; ia1 < m; ++ia1)
				for (std::size_t ib0 = 0; ib0 < m; ++ib0)
					for (std::size_t ib1 = ib0 + 1; ib1 < m; ++ib1) {
						const long long fdim = detail::box_dim_from_grid(d, ia0, ia1, ib0, ib1);
						// (a) box-count identity
						long long inside = 0;
						for (const auto& [p, mult] : delta.entries)
							if (t.grid.at(ia0) < p.a && p.a <= t.grid.at(ia1) &&
							    t.grid.at(ib0) <= p.b && p.b < t.grid.at(ib1))
								inside += mult;
						if (fdim != inside)
							rep.fail("degree " + std::to_string(r) + " box " +
							         box_str(ia0, ia1, ib0, ib1) + ": dim F = " +
							         std::to_string(fdim) + " but delta mass = " +
							         std::to_string(inside));
						// (b) split additivity, both directions
						for (std::size_t mid = ia0 + 1; mid < ia1; ++mid) {
							const long long l = detail::box_dim_from_grid(d, ia0, mid, ib0, ib1);
							const long long rr = detail::box_dim_from_grid(d, mid, ia1, ib0, ib1);
							if (fdim != l + rr)
								rep.fail("degree " + std::to_string(r) + " box " +
								         box_str(ia0, ia1, ib0, ib1) + ": horizontal split at " +
								         t.grid.at(mid).to_string() + " is not additive");
						}
						for (std::size_t mid = ib0 + 1; mid < ib1; ++mid) {
							const long long lo = detail::box_dim_from_grid(d, ia0, ia1, ib0, mid);
							const long long hi = detail::box_dim_from_grid(d, ia0, ia1, mid, ib1);
							if (fdim != lo + hi)
								rep.fail("degree " + std::to_string(r) + " box " +
								         box_str(ia0, ia1, ib0, ib1) + ": vertical split at " +
								         t.grid.at(mid).to_string() + " is not additive");
						}
						// (c) the kernel-side realization has the same dimension
						const long long gdim =
						    static_cast<long long>(intersect(k, s[ia0][ib0], s[ia1][ib1]).rank()) -
						    static_cast<long long>(s[ia0][ib1].rank());
						if (gdim != fdim)
							rep.fail("degree " + std::to_string(r) + " box " +
							         box_str(ia0, ia1, ib0, ib1) + ": dim G = " +
							         std::to_string(gdim) + " != dim F = " + std::to_string(fdim));
					}
	}
	rep.seconds = timer.seconds();
	return rep;
}

// Stability: over seeded perturbation trials, the bottleneck distance of the
// configurations is at most twice the sup distance of the functions.
template <class F>
verification_report verify_stability(const F& k, const simplicial_complex& x,
                                     const vertex_function& f, const perturbation_spec& spec) {
	detail::stopwatch timer;
	verification_report rep("stability");
	image_context<F> ctx(x);
	const std::size_t top = static_cast<std::size_t>(std::max(x.dim(), 0));
	std::vector<configuration> base;
	for (std::size_t r = 0; r <= top; ++r) base.push_back(compute_delta(k, x, f, r, &ctx));
	for (unsigned trial = 0; trial < spec.trials; ++trial) {
		auto g = perturb_function(f, spec.epsilon, spec.seed + trial);
		const rational d = sup_distance(f, g);
		for (std::size_t r = 0; r <= top; ++r) {
			auto dg = compute_delta(k, x, g, r, &ctx);
			auto m = bottleneck_distance(base[r], dg);
			if (m.distance > rational(2) * d) {
				std::ostringstream w;
				w << "trial " << trial << " degree " << r << ": distance " << m.distance.to_string()
				  << " exceeds 2*D(f,g) = " << (rational(2) * d).to_string();
				rep.fail(w.str());
			}
		}
	}
	rep.seconds = timer.seconds();
	return rep;
}

// Local stability: delta of every perturbed map matches delta of f square by
// square. Mass is compared over the 2-eps square around every grid pair of f
// (the squares are pairwise disjoint for eps below a quarter grid gap), and
// the perturbed support must stay inside the squares around supp delta_f.
template <class F>
verification_report verify_local_stability(const F& k, const simplicial_complex& x,
                                           const vertex_function& f,
                                           const perturbation_spec& spec) {
	detail::stopwatch timer;
	verification_report rep("local-stability");
	auto grid = make_critical_grid(x, f);
	auto eps_f = grid.min_critical_gap();
	if (eps_f && !(spec.epsilon < *eps_f / rational(3)))
		throw std::invalid_argument("verify_local_stability: epsilon must be below eps(f)/3 = " +
		                            (*eps_f / rational(3)).to_string());
	const rational two_eps = rational(2) * spec.epsilon;
	auto in_square = [&](const plane_point& p, const plane_point& center) {
		if (two_eps.is_zero()) return p == center;  // degenerate square
		return center.a - two_eps < p.a && p.a <= center.a + two_eps &&
		       center.b - two_eps <= p.b && p.b < center.b + two_eps;
	};
	image_context<F> ctx(x);
	const std::size_t top = static_cast<std::size_t>(std::max(x.dim(), 0));
	std::vector<configuration> base;
	for (std::size_t r = 0; r <= top; ++r) base.push_back(compute_delta(k, x, f, r, &ctx));
	for (unsigned trial = 0; trial < spec.trials; ++trial) {
		auto g = perturb_function(f, spec.epsilon, spec.seed + trial);
		for (std::size_t r = 0; r <= top; ++r) {
			auto dg = compute_delta(k, x, g, r, &ctx);
			// per-square mass equality over all grid pairs of f
			for (std::size_t i = 1; i <= grid.n(); ++i)
				for (std::size_t j = 1; j <= grid.n(); ++j) {
					const plane_point center{grid.at(i), grid.at(j)};
					long long mass = 0;
					for (const auto& [p, mult] : dg.entries)
						if (in_square(p, center)) mass += mult;
					if (mass != base[r].at(center)) {
						std::ostringstream w;
						w << "trial " << trial << " degree " << r << ": square around "
						  << detail::point_str(center) << " has mass " << mass << ", expected "
						  << base[r].at(center);
						rep.fail(w.str());
					}
				}
			// perturbed support lies in the union of squares around supp delta_f
			for (const auto& [p, mult] : dg.entries) {
				bool covered = false;
				for (const auto& [pf, mf] : base[r].entries)
					if (in_square(p, pf)) { covered = true; break; }
				if (!covered)
					rep.fail("trial " + std::to_string(trial) + " degree " + std::to_string(r) +
					         ": support point " + detail::point_str(p) +
					         " is outside every 2-eps square");
			}
		}
	}
	rep.seconds = timer.seconds();
	return rep;
}

// Poincare duality at configuration level: delta_r(a,b) = delta_{n-r}(b,a),
// plus the same transposition for the hat-delta dimensions.
template <class F>
verification_report verify_duality(const F& k, const simplicial_complex& x,
                                   const vertex_function& f, const manifold_metadata& meta) {
	detail::stopwatch timer;
	if (!meta.closed_manifold)
		throw std::invalid_argument("verify_duality: input is not flagged as a closed manifold");
	bool auto_orientable = false;  // every closed manifold is GF(2)-orientable
	if constexpr (!F::is_rationals) auto_orientable = k.p == 2;
	if (!auto_orientable && !meta.orientable)
		throw std::invalid_argument("verify_duality: manifold is not orientable over " + k.name());
	verification_report rep("duality");
	const int n = meta.dimension;
	image_context<F> ctx(x);
	std::vector<configuration> delta;
	std::vector<configuration> hat_dims;
	for (int r = 0; r <= n; ++r) {
		auto t = build_image_table(k, x, f, static_cast<std::size_t>(r), &ctx);
		delta.push_back(compute_delta(k, t));
		hat_dims.push_back(compute_hat_delta(k, t).dimensions());
	}
	for (int r = 0; r <= n; ++r) {
		const auto& a = delta[static_cast<std::size_t>(r)];
		const auto& b = delta[static_cast<std::size_t>(n - r)];
		for (const auto& [p, mult] : a.entries)
			if (b.at({p.b, p.a}) != mult)
				rep.fail("degree " + std::to_string(r) + ": delta" + detail::point_str(p) + " = " +
				         std::to_string(mult) + " but delta_" + std::to_string(n - r) +
				         detail::point_str({p.b, p.a}) + " = " + std::to_string(b.at({p.b, p.a})));
		const auto& ha = hat_dims[static_cast<std::size_t>(r)];
		const auto& hb = hat_dims[static_cast<std::size_t>(n - r)];
		for (const auto& [p, mult] : ha.entries)
			if (hb.at({p.b, p.a}) != mult)
				rep.fail("degree " + std::to_string(r) + ": hat-delta dims at " +
				         detail::point_str(p) + " do not transpose");
	}
	rep.seconds = timer.seconds();
	return rep;
}

// Genericity: after seeded perturbation to pairwise-distinct vertex values,
// every support point has multiplicity one.
template <class F>
verification_report verify_genericity(const F& k, const simplicial_complex& x,
                                      const vertex_function& f, const perturbation_spec& spec) {
	detail::stopwatch timer;
	verification_report rep("genericity");
	image_context<F> ctx(x);
	for (unsigned trial = 0; trial < spec.trials; ++trial) {
		auto g = perturb_to_distinct(x, f, spec.seed + trial);
		for (std::size_t r = 0; r <= static_cast<std::size_t>(std::max(x.dim(), 0)); ++r) {
			auto dg = compute_delta(k, x, g, r, &ctx);
			for (const auto& [p, mult] : dg.entries)
				if (mult > 1)
					rep.fail("trial " + std::to_string(trial) + " degree " + std::to_string(r) +
					         ": multiplicity " + std::to_string(mult) + " at " +
					         detail::point_str(p) + " after perturbation to distinct values");
		}
	}
	rep.seconds = timer.seconds();
	return rep;
}

}  // namespace bettiplane
