#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "bettiplane/matrix.hpp"
#include "bettiplane/simplicial_complex.hpp"
#include "bettiplane/subspace.hpp"

namespace testutil {

using namespace bettiplane;

// Deterministic uniform draw in [0, m); avoids std::uniform_int_distribution
// so results are identical across standard libraries.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t m) { return rng() % m; }

template <class F>
matrix<F> random_matrix(const F& k, std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                        std::int64_t span) {
	matrix<F> m(k, rows, cols);
	for (std::size_t r = 0; r < rows; ++r)
		for (std::size_t c = 0; c < cols; ++c)
			m.at(r, c) = k.from_int(static_cast<std::int64_t>(draw(rng, span)));
	return m;
}

template <class F>
subspace<F> random_subspace(const F& k, std::mt19937_64& rng, std::size_t ambient,
                            std::size_t generators, std::int64_t span) {
	return image(k, random_matrix(k, rng, ambient, generators, span));
}

// ---- exhaustive GF(2) oracles (independent of the subspace machinery) ----

using gf2_vec = std::vector<std::int64_t>;

// Every vector spanned by the given generators, by enumerating all subset
// sums. Includes the zero vector.
inline std::set<gf2_vec> gf2_span(const std::vector<gf2_vec>& gens, std::size_t ambient) {
	std::set<gf2_vec> out;
	const std::size_t n = gens.size();
	for (std::uint64_t pick = 0; pick < (std::uint64_t(1) << n); ++pick) {
		gf2_vec v(ambient, 0);
		for (std::size_t i = 0; i < n; ++i)
			if (pick & (std::uint64_t(1) << i))
				for (std::size_t r = 0; r < ambient; ++r) v[r] ^= gens[i][r];
		out.insert(v);
	}
	return out;
}

inline std::vector<gf2_vec> columns_of(const matrix<prime_field>& m) {
	std::vector<gf2_vec> cols;
	for (std::size_t c = 0; c < m.cols; ++c) cols.push_back(m.column(c));
	return cols;
}

inline std::set<gf2_vec> gf2_vectors_of(const subspace<prime_field>& s) {
	return gf2_span(columns_of(s.basis), s.ambient);
}

// ---- corpus complexes used across the test files ----

struct named_pair {
	simplicial_complex complex;
	vertex_function f;
};

inline simplicial_complex circle_complex() {
	return simplicial_complex(3, {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}});
}

inline named_pair circle() {
	return {circle_complex(), {{rational(0), rational(1), rational(2)}}};
}

inline named_pair two_points() {
	return {simplicial_complex(2, {{0}, {1}}), {{rational(0), rational(1)}}};
}

inline named_pair interval() {
	return {simplicial_complex(2, {{0}, {1}, {0, 1}}), {{rational(0), rational(1)}}};
}

inline simplicial_complex wedge_complex() {
	return simplicial_complex(
	    5, {{0}, {1}, {2}, {3}, {4}, {0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

inline named_pair wedge_of_circles() {
	return {wedge_complex(),
	        {{rational(0), rational(1), rational(2), rational(3), rational(4)}}};
}

inline simplicial_complex sphere_complex() {
	std::vector<simplex> s;
	for (int v = 0; v < 4; ++v) s.push_back({v});
	for (int i = 0; i < 4; ++i)
		for (int j = i + 1; j < 4; ++j) s.push_back({i, j});
	for (int i = 0; i < 4; ++i)
		for (int j = i + 1; j < 4; ++j)
			for (int l = j + 1; l < 4; ++l) s.push_back({i, j, l});
	return simplicial_complex(4, std::move(s));
}

inline named_pair sphere() {
	return {sphere_complex(), {{rational(0), rational(1), rational(2), rational(3)}}};
}

// The 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7, all
// 21 edges present.
inline simplicial_complex torus_complex() {
	std::set<simplex> faces;
	auto add = [&](int a, int b, int c) {
		simplex s{a % 7, b % 7, c % 7};
		std::sort(s.begin(), s.end());
		faces.insert(s);
		faces.insert({s[0], s[1]});
		faces.insert({s[0], s[2]});
		faces.insert({s[1], s[2]});
		faces.insert({s[0]});
		faces.insert({s[1]});
		faces.insert({s[2]});
	};
	for (int i = 0; i < 7; ++i) {
		add(i, i + 1, i + 3);
		add(i, i + 2, i + 3);
	}
	return simplicial_complex(7, std::vector<simplex>(faces.begin(), faces.end()));
}

inline named_pair torus() {
	vertex_function f;
	for (int v = 0; v < 7; ++v) f.values.push_back(rational(v));
	return {torus_complex(), std::move(f)};
}

// The 6-vertex projective plane (antipodal quotient of the icosahedron).
inline simplicial_complex rp2_complex() {
	std::set<simplex> faces;
	const std::vector<simplex> tris = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
	                                   {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};
	for (auto t : tris) {
		faces.insert(t);
		faces.insert({t[0], t[1]});
		faces.insert({t[0], t[2]});
		faces.insert({t[1], t[2]});
		faces.insert({t[0]});
		faces.insert({t[1]});
		faces.insert({t[2]});
	}
	return simplicial_complex(6, std::vector<simplex>(faces.begin(), faces.end()));
}

inline named_pair rp2() {
	vertex_function f;
	for (int v = 0; v < 6; ++v) f.values.push_back(rational(v));
	return {rp2_complex(), std::move(f)};
}

// 9-vertex Klein bottle: 3x3 grid quotient of the square, one side glued
// with a flip.
inline simplicial_complex klein_complex() {
	std::set<simplex> faces;
	auto add = [&](int a, int b, int c) {
		simplex s{a, b, c};
		std::sort(s.begin(), s.end());
		faces.insert(s);
		faces.insert({s[0], s[1]});
		faces.insert({s[0], s[2]});
		faces.insert({s[1], s[2]});
		faces.insert({s[0]});
		faces.insert({s[1]});
		faces.insert({s[2]});
	};
	auto vid = [](int x, int y) { return 3 * y + x; };
	for (int y = 0; y < 2; ++y)
		for (int x = 0; x < 3; ++x) {
			const int a = vid(x, y), b = vid((x + 1) % 3, y);
			const int c = vid(x, y + 1), d = vid((x + 1) % 3, y + 1);
			add(a, b, d);
			add(a, d, c);
		}
	// top row glues to the bottom with x -> (3 - x) mod 3
	auto top = [](int x) { return ((3 - x) % 3); };
	for (int x = 0; x < 3; ++x) {
		const int a = vid(x, 2), b = vid((x + 1) % 3, 2);
		const int c = top(x), d = top(x + 1);
		add(a, b, d);
		add(a, d, c);
	}
	return simplicial_complex(9, std::vector<simplex>(faces.begin(), faces.end()));
}

inline named_pair klein() {
	vertex_function f;
	for (int v = 0; v < 9; ++v) f.values.push_back(rational(v));
	return {klein_complex(), std::move(f)};
}

// Barycentric subdivision: one vertex per simplex of x, one simplex per
// strictly descending chain in the face poset. Used as an independent check
// that homology does not depend on the triangulation.
inline simplicial_complex barycentric_subdivision(const simplicial_complex& x) {
	std::vector<simplex> cells;
	std::map<simplex, int> id;
	for (const auto& level : x.by_dim)
		for (const auto& s : level) {
			id[s] = static_cast<int>(cells.size());
			cells.push_back(s);
		}
	auto proper_faces = [](const simplex& s) {
		std::vector<simplex> out;
		const unsigned n = static_cast<unsigned>(s.size());
		for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
			simplex f;
			for (unsigned i = 0; i < n; ++i)
				if (mask & (1u << i)) f.push_back(s[i]);
			out.push_back(f);
		}
		return out;
	};
	std::set<simplex> result;
	std::vector<int> chain;
	auto extend = [&](auto&& self, const simplex& last) -> void {
		simplex key = chain;
		std::sort(key.begin(), key.end());
		result.insert(key);
		for (const auto& f : proper_faces(last)) {
			chain.push_back(id.at(f));
			self(self, f);
			chain.pop_back();
		}
	};
	for (const auto& [s, v] : id) {
		chain = {v};
		extend(extend, s);
	}
	return simplicial_complex(cells.size(), std::vector<simplex>(result.begin(), result.end()));
}

}  // namespace testutil
