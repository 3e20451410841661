#include <doctest.h>

#include <vector>

#include "bettiplane/delta.hpp"
#include "bettiplane/image_table.hpp"
#include "bettiplane/verify.hpp"
#include "helpers.hpp"

using namespace bettiplane;
using namespace testutil;

namespace {

template <class F>
std::vector<std::size_t> sub_dims(const image_table<F>& t) {
	std::vector<std::size_t> d;
	for (const auto& s : t.i_sub) d.push_back(s.rank());
	return d;
}

template <class F>
std::vector<std::size_t> super_dims(const image_table<F>& t) {
	std::vector<std::size_t> d;
	for (const auto& s : t.i_super) d.push_back(s.rank());
	return d;
}

configuration single_point_config(long a, long b, int mult) {
	configuration c;
	c.add({rational(a), rational(b)}, mult);
	return c;
}

}  // namespace

TEST_CASE("image table of the circle, degree 0") {
	rational_field q;
	auto [k, f] = circle();
	auto t = build_image_table(q, k, f, 0);
	CHECK(t.ambient == 1);
	CHECK(sub_dims(t) == std::vector<std::size_t>{0, 1, 1, 1, 1});
	CHECK(super_dims(t) == std::vector<std::size_t>{1, 1, 1, 1, 0});
}

TEST_CASE("image table of the circle, degree 1") {
	rational_field q;
	auto [k, f] = circle();
	auto t = build_image_table(q, k, f, 1);
	CHECK(t.ambient == 1);
	CHECK(sub_dims(t) == std::vector<std::size_t>{0, 0, 0, 1, 1});
	CHECK(super_dims(t) == std::vector<std::size_t>{1, 1, 0, 0, 0});
}

TEST_CASE("image table above the dimension is all zero") {
	prime_field f2(2);
	auto [k, f] = circle();
	auto t = build_image_table(f2, k, f, 4);
	CHECK(t.ambient == 0);
	for (auto d : sub_dims(t)) CHECK(d == 0);
	for (auto d : super_dims(t)) CHECK(d == 0);
}

TEST_CASE("image tables are nested along the grid") {
	rational_field q;
	prime_field f2(2);
	auto run = [&](auto field, const named_pair& item) {
		for (std::size_t r = 0; r <= static_cast<std::size_t>(item.complex.dim()); ++r) {
			auto t = build_image_table(field, item.complex, item.f, r);
			CHECK(t.i_sub.front().is_zero());
			CHECK(t.i_super.back().is_zero());
			for (std::size_t i = 0; i + 1 < t.i_sub.size(); ++i) {
				CHECK(contains(field, t.i_sub[i + 1], t.i_sub[i]));
				CHECK(contains(field, t.i_super[i], t.i_super[i + 1]));
			}
		}
	};
	for (auto& item : {circle(), torus(), wedge_of_circles(), klein()}) {
		run(q, item);
		run(f2, item);
	}
}

TEST_CASE("compute_f on the circle") {
	rational_field q;
	auto [k, f] = circle();
	auto t = build_image_table(q, k, f, 0);
	CHECK(compute_f(q, t, rational(0), rational(2)).rank() == 1);
	CHECK(compute_f(q, t, rational(-1), rational(0)).rank() == 0);  // low sentinel
	CHECK_THROWS(compute_f(q, t, *rational::parse("1/2"), rational(0)));
}

TEST_CASE("F is monotone: F(a', b') inside F(a, b) for a' <= a, b <= b'") {
	rational_field q;
	for (auto& item : {circle(), torus(), wedge_of_circles(), two_points()}) {
		for (std::size_t r = 0; r <= static_cast<std::size_t>(item.complex.dim()); ++r) {
			auto t = build_image_table(q, item.complex, item.f, r);
			const std::size_t m = t.i_sub.size();
			for (std::size_t i1 = 0; i1 < m; ++i1)
				for (std::size_t j1 = 0; j1 < m; ++j1)
					for (std::size_t i2 = i1; i2 < m; ++i2)
						for (std::size_t j2 = 0; j2 <= j1; ++j2) {
							auto small = intersect(q, t.i_sub[i1], t.i_super[j1]);
							auto big = intersect(q, t.i_sub[i2], t.i_super[j2]);
							CHECK(contains(q, big, small));
						}
		}
	}
}

TEST_CASE("box dimension on the circle") {
	rational_field q;
	auto [k, f] = circle();
	auto t0 = build_image_table(q, k, f, 0);
	CHECK(compute_f_box_dim(q, t0, box(rational(-1), rational(0), rational(2), rational(3))) == 1);
	// a cell with no support point
	CHECK(compute_f_box_dim(q, t0, box(rational(0), rational(1), rational(2), rational(3))) == 0);
	CHECK(compute_f_box_dim(q, t0, box(rational(-1), rational(0), rational(0), rational(1))) == 0);
	CHECK_THROWS(compute_f_box_dim(q, t0, box(*rational::parse("1/2"), rational(1), rational(0),
	                                          rational(1))));
	CHECK_THROWS(box(rational(1), rational(1), rational(0), rational(1)));
}

TEST_CASE("delta of the circle") {
	rational_field q;
	prime_field f2(2);
	auto [k, f] = circle();
	CHECK(compute_delta(q, k, f, 0) == single_point_config(0, 2, 1));
	CHECK(compute_delta(q, k, f, 1) == single_point_config(2, 0, 1));
	CHECK(compute_delta(f2, k, f, 0) == single_point_config(0, 2, 1));
	CHECK(compute_delta(f2, k, f, 1) == single_point_config(2, 0, 1));
	CHECK(compute_delta(q, k, f, 2).entries.empty());
}

TEST_CASE("delta of two disjoint points") {
	rational_field q;
	auto [k, f] = two_points();
	configuration expected;
	expected.add({rational(0), rational(0)}, 1);
	expected.add({rational(1), rational(1)}, 1);
	CHECK(compute_delta(q, k, f, 0) == expected);
}

TEST_CASE("total mass of delta equals the Betti number on the corpus") {
	rational_field q;
	prime_field f2(2);
	for (auto& item : {circle(), two_points(), interval(), wedge_of_circles(), sphere(), torus(),
	                   rp2(), klein()}) {
		for (std::size_t r = 0; r <= static_cast<std::size_t>(item.complex.dim()); ++r) {
			CHECK(compute_delta(q, item.complex, item.f, r).total_mass() ==
			      homology_basis(q, item.complex, r).betti);
			CHECK(compute_delta(f2, item.complex, item.f, r).total_mass() ==
			      homology_basis(f2, item.complex, r).betti);
		}
	}
}

TEST_CASE("hat delta of the circle in degree 1 is the fundamental class") {
	rational_field q;
	auto [k, f] = circle();
	auto hat = compute_hat_delta(q, k, f, 1);
	REQUIRE(hat.entries.size() == 1);
	auto it = hat.entries.begin();
	CHECK(it->first == plane_point{rational(2), rational(0)});
	REQUIRE(it->second.size() == 1);
	CHECK(it->second[0] == std::vector<rational>{rational(1)});
}

TEST_CASE("hat delta dimensions match delta and reps form a basis") {
	rational_field q;
	prime_field f2(2);
	auto run = [&](auto field, const named_pair& item) {
		image_context<decltype(field)> ctx(item.complex);
		for (std::size_t r = 0; r <= static_cast<std::size_t>(item.complex.dim()); ++r) {
			auto t = build_image_table(field, item.complex, item.f, r, &ctx);
			auto delta = compute_delta(field, t);
			auto hat = compute_hat_delta(field, t);
			CHECK(hat.dimensions() == delta);
			// concatenated representatives over the support give a basis of H_r
			std::vector<std::vector<typename decltype(field)::elem>> all;
			for (const auto& [p, reps] : hat.entries)
				for (const auto& v : reps) all.push_back(v);
			CHECK(all.size() == t.ambient);
			CHECK(span_of_vectors(field, t.ambient, all).rank() == t.ambient);
		}
	};
	for (auto& item : {circle(), two_points(), wedge_of_circles(), sphere(), torus(), klein()}) {
		run(q, item);
		run(f2, item);
	}
}

TEST_CASE("hat delta above the dimension is empty") {
	rational_field q;
	auto [k, f] = circle();
	CHECK(compute_hat_delta(q, k, f, 3).entries.empty());
}

TEST_CASE("ortho delta of the circle in degree 0 is the whole line") {
	auto [k, f] = circle();
	auto ortho = compute_ortho_delta(k, f, 0);
	REQUIRE(ortho.entries.size() == 1);
	CHECK(ortho.entries.begin()->second.rank() == 1);
	CHECK(ortho.entries.begin()->second == full_subspace(rational_field{}, 1));
}

TEST_CASE("ortho delta splits H_r into orthogonal pieces") {
	rational_field q;
	for (auto& item : {two_points(), wedge_of_circles(), torus(), sphere(), circle()}) {
		for (std::size_t r = 0; r <= static_cast<std::size_t>(item.complex.dim()); ++r) {
			auto t = build_image_table(q, item.complex, item.f, r);
			auto delta = compute_delta(q, t);
			auto ortho = compute_ortho_delta(q, t);
			// dims match delta, the pieces are pairwise orthogonal, and they
			// sum to the whole homology
			CHECK(ortho.entries.size() == delta.entries.size());
			auto total = zero_subspace(q, t.ambient);
			for (const auto& [p, s] : ortho.entries) {
				CHECK(s.rank() == static_cast<std::size_t>(delta.at(p)));
				total = sum(q, total, s);
			}
			CHECK(total == full_subspace(q, t.ambient));
			for (auto it1 = ortho.entries.begin(); it1 != ortho.entries.end(); ++it1)
				for (auto it2 = std::next(it1); it2 != ortho.entries.end(); ++it2)
					for (std::size_t i = 0; i < it1->second.rank(); ++i)
						for (std::size_t j = 0; j < it2->second.rank(); ++j) {
							rational dot(0);
							for (std::size_t row = 0; row < t.ambient; ++row)
								dot += it1->second.basis.at(row, i) * it2->second.basis.at(row, j);
							CHECK(dot.is_zero());
						}
		}
	}
}

TEST_CASE("wedge of circles: two orthogonal lines in H_1") {
	auto [k, f] = wedge_of_circles();
	auto ortho = compute_ortho_delta(k, f, 1);
	REQUIRE(ortho.entries.size() == 2);
	for (const auto& [p, s] : ortho.entries) CHECK(s.rank() == 1);
}

TEST_CASE("G box dimension agrees with F box dimension on every grid box") {
	rational_field q;
	prime_field f2(2);
	auto run = [&](auto field, const named_pair& item) {
		image_context<decltype(field)> ctx(item.complex);
		for (std::size_t r = 0; r <= static_cast<std::size_t>(item.complex.dim()); ++r) {
			auto t = build_image_table(field, item.complex, item.f, r, &ctx);
			const std::size_t m = t.grid.n() + 2;
			for (std::size_t ia0 = 0; ia0 < m; ++ia0)
				for (std::size_t ia1 = ia0 + 1; ia1 < m; ++ia1)
					for (std::size_t ib0 = 0; ib0 < m; ++ib0)
						for (std::size_t ib1 = ib0 + 1; ib1 < m; ++ib1) {
							box b(t.grid.at(ia0), t.grid.at(ia1), t.grid.at(ib0), t.grid.at(ib1));
							CHECK(compute_g_box_dim(field, t, b) == compute_f_box_dim(field, t, b));
						}
		}
	};
	for (auto& item : {circle(), two_points(), wedge_of_circles()}) {
		run(q, item);
		run(f2, item);
	}
}

TEST_CASE("full-plane box carries the whole homology") {
	rational_field q;
	for (auto& item : {circle(), torus(), wedge_of_circles()}) {
		for (std::size_t r = 0; r <= static_cast<std::size_t>(item.complex.dim()); ++r) {
			auto t = build_image_table(q, item.complex, item.f, r);
			box full(t.grid.low_sentinel, t.grid.high_sentinel, t.grid.low_sentinel,
			         t.grid.high_sentinel);
			CHECK(compute_f_box_dim(q, t, full) == t.ambient);
			CHECK(compute_g_box_dim(q, t, full) == t.ambient);
		}
	}
}

TEST_CASE("stabilization oracle on the circle") {
	rational_field q;
	auto [k, f] = circle();
	CHECK(oracle_delta_stabilization(q, k, f, 0, {rational(0), rational(2)}) == 1);
	CHECK(oracle_delta_stabilization(q, k, f, 0, {rational(1), rational(1)}) == 0);
	CHECK(oracle_delta_stabilization(q, k, f, 1, {rational(2), rational(0)}) == 1);
	CHECK_THROWS(oracle_delta_stabilization(q, k, f, 0, {*rational::parse("1/2"), rational(2)}));
}

TEST_CASE("stabilization oracle on a single vertex") {
	rational_field q;
	simplicial_complex k(1, {{0}});
	vertex_function f{{rational(5)}};
	CHECK(oracle_delta_stabilization(q, k, f, 0, {rational(5), rational(5)}) == 1);
}

TEST_CASE("delta agrees with the stabilization oracle at every grid point") {
	rational_field q;
	prime_field f2(2);
	auto run = [&](auto field, const named_pair& item) {
		image_context<decltype(field)> ctx(item.complex);
		auto grid = make_critical_grid(item.complex, item.f);
		for (std::size_t r = 0; r <= static_cast<std::size_t>(item.complex.dim()); ++r) {
			auto delta = compute_delta(field, item.complex, item.f, r, &ctx);
			for (std::size_t i = 1; i <= grid.n(); ++i)
				for (std::size_t j = 1; j <= grid.n(); ++j) {
					plane_point p{grid.at(i), grid.at(j)};
					CHECK(oracle_delta_stabilization(field, item.complex, item.f, r, p, &ctx) ==
					      static_cast<std::size_t>(delta.at(p)));
				}
		}
	};
	for (auto& item : {circle(), two_points(), wedge_of_circles(), sphere()}) {
		run(q, item);
		run(f2, item);
	}
}

TEST_CASE("torus configurations with increasing vertex values") {
	rational_field q;
	auto [k, f] = torus();
	configuration d0, d1, d2;
	d0.add({rational(0), rational(6)}, 1);
	d1.add({rational(2), rational(4)}, 1);
	d1.add({rational(4), rational(2)}, 1);
	d2.add({rational(6), rational(0)}, 1);
	CHECK(compute_delta(q, k, f, 0) == d0);
	CHECK(compute_delta(q, k, f, 1) == d1);
	CHECK(compute_delta(q, k, f, 2) == d2);
	prime_field f2(2);
	CHECK(compute_delta(f2, k, f, 1) == d1);
}

TEST_CASE("klein bottle configuration over GF(2)") {
	prime_field f2(2);
	auto [k, f] = klein();
	configuration d1;
	d1.add({rational(2), rational(6)}, 1);
	d1.add({rational(6), rational(2)}, 1);
	CHECK(compute_delta(f2, k, f, 1) == d1);
	CHECK(compute_delta(f2, k, f, 2).total_mass() == 1);
	// over the rationals the top class disappears
	rational_field q;
	CHECK(compute_delta(q, k, f, 2).entries.empty());
	CHECK(compute_delta(q, k, f, 1).total_mass() == 1);
}

TEST_CASE("wedge of circles: loops born at their closing values") {
	rational_field q;
	auto [k, f] = wedge_of_circles();
	configuration d1;
	d1.add({rational(2), rational(0)}, 1);
	d1.add({rational(4), rational(0)}, 1);
	CHECK(compute_delta(q, k, f, 1) == d1);
}

TEST_CASE("scrambled vertex values exercise nontrivial relabelings") {
	// the same torus swept in a scrambled vertex order: all structural
	// identities still hold even though sublevels are no longer prefixes
	rational_field q;
	prime_field f2(2);
	auto k = torus_complex();
	vertex_function f{{rational(3), rational(6), rational(0), rational(5), rational(1),
	                   rational(4), rational(2)}};
	auto run = [&](auto field) {
		CHECK(verify_total_mass(field, k, f).pass);
		CHECK(verify_critical_support(field, k, f).pass);
		CHECK(verify_box_laws(field, k, f).pass);
		manifold_metadata meta{true, 2, true};
		CHECK(verify_duality(field, k, f, meta).pass);
		image_context<decltype(field)> ctx(k);
		auto grid = make_critical_grid(k, f);
		for (std::size_t r = 0; r <= 2; ++r) {
			auto delta = compute_delta(field, k, f, r, &ctx);
			for (std::size_t i = 1; i <= grid.n(); ++i)
				for (std::size_t j = 1; j <= grid.n(); ++j) {
					plane_point p{grid.at(i), grid.at(j)};
					CHECK(oracle_delta_stabilization(field, k, f, r, p, &ctx) ==
					      static_cast<std::size_t>(delta.at(p)));
				}
		}
	};
	run(q);
	run(f2);
}

TEST_CASE("configurations agree across fields on torsion-free complexes") {
	rational_field q;
	prime_field f2(2), f5(5);
	for (auto& item : {circle(), two_points(), interval(), wedge_of_circles(), sphere(), torus()}) {
		for (std::size_t r = 0; r <= static_cast<std::size_t>(item.complex.dim()); ++r) {
			auto dq = compute_delta(q, item.complex, item.f, r);
			CHECK(compute_delta(f2, item.complex, item.f, r) == dq);
			CHECK(compute_delta(f5, item.complex, item.f, r) == dq);
		}
	}
}

TEST_CASE("mod-2 torsion separates GF(2) from Q and GF(5)") {
	rational_field q;
	prime_field f2(2), f5(5);
	for (auto& item : {rp2(), klein()}) {
		for (std::size_t r = 0; r <= 2; ++r) {
			// GF(5) sees no 2-torsion, so it matches the rationals exactly
			auto dq = compute_delta(q, item.complex, item.f, r);
			CHECK(compute_delta(f5, item.complex, item.f, r) == dq);
		}
		// the GF(2) top class exists, the rational one does not
		CHECK(compute_delta(f2, item.complex, item.f, 2).total_mass() == 1);
		CHECK(compute_delta(q, item.complex, item.f, 2).total_mass() == 0);
	}
}

TEST_CASE("configurations are invariant under complex automorphisms") {
	// v -> v+1 mod 7 is a simplicial automorphism of the 7-vertex torus;
	// transporting the function along it cannot change the configuration
	rational_field q;
	auto k = torus_complex();
	auto f = torus().f;
	vertex_function shifted;
	shifted.values.resize(7);
	for (int v = 0; v < 7; ++v)
		shifted.values[static_cast<std::size_t>((v + 1) % 7)] = f.values[static_cast<std::size_t>(v)];
	for (std::size_t r = 0; r <= 2; ++r)
		CHECK(compute_delta(q, k, shifted, r) == compute_delta(q, k, f, r));
}

TEST_CASE("the image cache is transparent") {
	rational_field q;
	auto [k, f] = torus();
	image_context<rational_field> shared(k);
	for (std::uint64_t seed = 1; seed <= 4; ++seed) {
		auto g = perturb_function(f, rational(1, 4), seed);
		for (std::size_t r = 0; r <= 2; ++r) {
			auto with_cache = compute_delta(q, k, g, r, &shared);
			auto fresh = compute_delta(q, k, g, r);
			CHECK(with_cache == fresh);
		}
	}
}

TEST_CASE("box splits are additive") {
	rational_field q;
	for (auto& item : {circle(), wedge_of_circles(), two_points()}) {
		for (std::size_t r = 0; r <= static_cast<std::size_t>(item.complex.dim()); ++r) {
			auto t = build_image_table(q, item.complex, item.f, r);
			const std::size_t m = t.grid.n() + 2;
			for (std::size_t ia0 = 0; ia0 < m; ++ia0)
				for (std::size_t ia1 = ia0 + 2; ia1 < m; ++ia1)
					for (std::size_t ib0 = 0; ib0 < m; ++ib0)
						for (std::size_t ib1 = ib0 + 1; ib1 < m; ++ib1) {
							box whole(t.grid.at(ia0), t.grid.at(ia1), t.grid.at(ib0), t.grid.at(ib1));
							// vertical split at every intermediate grid value
							for (std::size_t mid = ia0 + 1; mid < ia1; ++mid) {
								box left(t.grid.at(ia0), t.grid.at(mid), t.grid.at(ib0), t.grid.at(ib1));
								box right(t.grid.at(mid), t.grid.at(ia1), t.grid.at(ib0), t.grid.at(ib1));
								CHECK(compute_f_box_dim(q, t, whole) ==
								      compute_f_box_dim(q, t, left) + compute_f_box_dim(q, t, right));
							}
						}
		}
	}
}
