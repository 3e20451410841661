#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "bettiplane/plane.hpp"
#include "bettiplane/rational.hpp"

namespace bettiplane {

namespace detail {

// Hopcroft-Karp maximum matching on a bipartite graph given as adjacency
// lists from the left side. Returns the matching size; match_left[u] is the
// matched right vertex or -1.
class hopcroft_karp {
public:
	hopcroft_karp(std::size_t n_left, std::size_t n_right,
	              const std::vector<std::vector<int>>& adj)
	    : n_left_(n_left), n_right_(n_right), adj_(adj),
	      match_left_(n_left, -1), match_right_(n_right, -1), dist_(n_left) {}

	std::size_t run() {
		std::size_t matching = 0;
		while (bfs()) {
			for (std::size_t u = 0; u < n_left_; ++u)
				if (match_left_[u] < 0 && dfs(static_cast<int>(u))) ++matching;
		}
		return matching;
	}

	const std::vector<int>& match_left() const { return match_left_; }

private:
	static constexpr int inf = std::numeric_limits<int>::max();

	bool bfs() {
		std::queue<int> q;
		for (std::size_t u = 0; u < n_left_; ++u) {
			if (match_left_[u] < 0) {
				dist_[u] = 0;
				q.push(static_cast<int>(u));
			} else {
				dist_[u] = inf;
			}
		}
		bool found = false;
		while (!q.empty()) {
			const int u = q.front();
			q.pop();
			for (int v : adj_[static_cast<std::size_t>(u)]) {
				const int w = match_right_[static_cast<std::size_t>(v)];
				if (w < 0) {
					found = true;
				} else if (dist_[static_cast<std::size_t>(w)] == inf) {
					dist_[static_cast<std::size_t>(w)] = dist_[static_cast<std::size_t>(u)] + 1;
					q.push(w);
				}
			}
		}
		return found;
	}

	bool dfs(int u) {
		for (int v : adj_[static_cast<std::size_t>(u)]) {
			const int w = match_right_[static_cast<std::size_t>(v)];
			if (w < 0 || (dist_[static_cast<std::size_t>(w)] ==
			                  dist_[static_cast<std::size_t>(u)] + 1 &&
			              dfs(w))) {
				match_left_[static_cast<std::size_t>(u)] = v;
				match_right_[static_cast<std::size_t>(v)] = u;
				return true;
			}
		}
		dist_[static_cast<std::size_t>(u)] = inf;
		return false;
	}

	std::size_t n_left_, n_right_;
	const std::vector<std::vector<int>>& adj_;
	std::vector<int> match_left_, match_right_;
	std::vector<int> dist_;
};

inline rational linf_distance(const plane_point& p, const plane_point& q) {
	return max((p.a - q.a).abs(), (p.b - q.b).abs());
}

}  // namespace detail

// Optimal bottleneck matching between two equal-mass configurations: the
// witness bijection between the expanded multisets and the minimum over
// bijections of the maximum L-infinity ground distance.
struct matching_result {
	rational distance;
	std::vector<plane_point> left;   // expanded with multiplicity
	std::vector<plane_point> right;
	std::vector<std::size_t> match;  // left index -> right index
};

inline std::vector<plane_point> expand_configuration(const configuration& c) {
	std::vector<plane_point> pts;
	for (const auto& [p, mult] : c.entries)
		for (int m = 0; m < mult; ++m) pts.push_back(p);
	return pts;
}

// Threshold search over the finite set of pairwise distances with a perfect
// matching feasibility test per threshold. Exact rational output.
inline matching_result bottleneck_distance(const configuration& c1, const configuration& c2) {
	if (c1.total_mass() != c2.total_mass())
		throw std::invalid_argument("bottleneck_distance: configurations have unequal total mass");
	matching_result out;
	out.left = expand_configuration(c1);
	out.right = expand_configuration(c2);
	const std::size_t n = out.left.size();
	out.distance = rational(0);
	if (n == 0) return out;

	std::vector<std::vector<rational>> dist(n, std::vector<rational>(n));
	std::vector<rational> candidates;
	candidates.reserve(n * n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			dist[i][j] = detail::linf_distance(out.left[i], out.right[j]);
			candidates.push_back(dist[i][j]);
		}
	std::sort(candidates.begin(), candidates.end());
	candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

	auto feasible = [&](const rational& t, std::vector<int>* witness) {
		std::vector<std::vector<int>> adj(n);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				if (dist[i][j] <= t) adj[i].push_back(static_cast<int>(j));
		detail::hopcroft_karp hk(n, n, adj);
		if (hk.run() != n) return false;
		if (witness) *witness = hk.match_left();
		return true;
	};

	std::size_t lo = 0, hi = candidates.size() - 1;  // feasible at hi: all edges present
	while (lo < hi) {
		const std::size_t mid = lo + (hi - lo) / 2;
		if (feasible(candidates[mid], nullptr))
			hi = mid;
		else
			lo = mid + 1;
	}
	std::vector<int> witness;
	if (!feasible(candidates[lo], &witness))
		throw std::logic_error("bottleneck_distance: threshold search lost feasibility");
	out.distance = candidates[lo];
	out.match.resize(n);
	for (std::size_t i = 0; i < n; ++i) out.match[i] = static_cast<std::size_t>(witness[i]);
	return out;
}

}  // namespace bettiplane
