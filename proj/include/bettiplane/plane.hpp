#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "bettiplane/rational.hpp"

namespace bettiplane {

// A point of the plane with exact coordinates, read as z = a + i b.
struct plane_point {
	rational a;
	rational b;

	bool operator==(const plane_point& o) const { return a == o.a && b == o.b; }
	bool operator<(const plane_point& o) const {
		if (a != o.a) return a < o.a;
		return b < o.b;
	}
};

// Finite configuration of plane points with positive integer multiplicities,
// stored sparsely (support only) and ordered lexicographically by (a, b).
struct configuration {
	std::map<plane_point, int> entries;

	void add(const plane_point& p, int multiplicity) {
		if (multiplicity <= 0) throw std::invalid_argument("configuration: multiplicity must be positive");
		entries[p] += multiplicity;
	}

	int at(const plane_point& p) const {
		auto it = entries.find(p);
		return it == entries.end() ? 0 : it->second;
	}

	std::size_t total_mass() const {
		std::size_t m = 0;
		for (const auto& [p, mult] : entries) m += static_cast<std::size_t>(mult);
		return m;
	}

	std::vector<plane_point> support() const {
		std::vector<plane_point> s;
		s.reserve(entries.size());
		for (const auto& [p, mult] : entries) s.push_back(p);
		return s;
	}

	bool operator==(const configuration& o) const { return entries == o.entries; }
};

struct support_mass_result {
	std::vector<plane_point> support;  // sorted
	std::size_t total = 0;
};

inline support_mass_result support_mass(const configuration& c) {
	return {c.support(), c.total_mass()};
}

}  // namespace bettiplane
