#pragma once

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bettiplane/delta.hpp"
#include "bettiplane/field.hpp"
#include "bettiplane/plane.hpp"
#include "bettiplane/polynomial.hpp"
#include "bettiplane/simplicial_complex.hpp"
#include "bettiplane/verify.hpp"

namespace bettiplane::io {

using json = nlohmann::ordered_json;

struct parse_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// A parsed and validated input: complex, vertex values, optional default
// field and corpus metadata.
struct input_document {
	std::string name;
	std::optional<field_spec> field;
	simplicial_complex complex;
	vertex_function f;
	manifold_metadata metadata;
};

inline field_spec parse_field_spec(const std::string& s) {
	if (s == "Q" || s == "q") return field_spec::rationals();
	if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')') {
		const std::string inner = s.substr(3, s.size() - 4);
		try {
			const std::int64_t p = std::stoll(inner);
			if (!is_prime_int(p)) throw parse_error("field: " + std::to_string(p) + " is not prime");
			return field_spec::prime(p);
		} catch (const std::invalid_argument&) {
		} catch (const std::out_of_range&) {
		}
	}
	throw parse_error("field: expected \"Q\" or \"GF(p)\", got \"" + s + "\"");
}

namespace detail {

inline rational parse_rational_value(const json& v, const std::string& where) {
	if (v.is_number_integer())
		return rational(static_cast<long>(v.get<std::int64_t>()));
	if (v.is_string()) {
		auto r = rational::parse(v.get<std::string>());
		if (!r) throw parse_error(where + ": cannot parse rational \"" + v.get<std::string>() + "\"");
		return *r;
	}
	if (v.is_number_float())
		throw parse_error(where + ": floating point literals are inexact; write the value as a "
		                          "string such as \"0.25\" or \"1/4\"");
	throw parse_error(where + ": expected a rational as string or integer");
}

}  // namespace detail

inline input_document parse_input(const std::string& text) {
	json doc;
	try {
		doc = json::parse(text);
	} catch (const json::parse_error& e) {
		throw parse_error(std::string("input is not valid JSON: ") + e.what());
	}
	if (!doc.is_object()) throw parse_error("input document must be a JSON object");

	input_document out;
	out.name = doc.value("name", std::string("unnamed"));
	if (doc.contains("field")) {
		const auto& f = doc.at("field");
		if (f.is_string())
			out.field = parse_field_spec(f.get<std::string>());
		else if (f.is_object() && f.contains("p"))
			out.field = field_spec::prime(f.at("p").get<std::int64_t>());
		else
			throw parse_error("field: expected \"Q\", \"GF(p)\" or {\"p\": n}");
		if (out.field->kind == field_spec::kind_t::prime && !is_prime_int(out.field->p))
			throw parse_error("field: p = " + std::to_string(out.field->p) + " is not prime");
	}

	if (!doc.contains("n_vertices") || !doc.at("n_vertices").is_number_unsigned())
		throw parse_error("n_vertices: required non-negative integer");
	const auto n = doc.at("n_vertices").get<std::size_t>();

	if (!doc.contains("simplices") || !doc.at("simplices").is_array())
		throw parse_error("simplices: required array of vertex-index arrays");
	std::vector<simplex> simplices;
	std::size_t idx = 0;
	for (const auto& s : doc.at("simplices")) {
		if (!s.is_array() || s.empty())
			throw parse_error("simplices[" + std::to_string(idx) + "]: must be a non-empty array");
		simplex sx;
		for (const auto& v : s) {
			if (!v.is_number_integer())
				throw parse_error("simplices[" + std::to_string(idx) + "]: vertex indices must be "
				                  "integers");
			const auto vi = v.get<std::int64_t>();
			if (vi < 0 || static_cast<std::size_t>(vi) >= n)
				throw parse_error("simplices[" + std::to_string(idx) + "]: vertex " +
				                  std::to_string(vi) + " out of range [0, " + std::to_string(n) + ")");
			sx.push_back(static_cast<int>(vi));
		}
		simplices.push_back(std::move(sx));
		++idx;
	}
	out.complex = simplicial_complex(n, std::move(simplices));
	if (auto violation = validate(out.complex))
		throw parse_error("simplices: " + violation->detail);

	if (!doc.contains("values") || !doc.at("values").is_array() || doc.at("values").size() != n)
		throw parse_error("values: required array with one rational per vertex");
	idx = 0;
	for (const auto& v : doc.at("values")) {
		out.f.values.push_back(detail::parse_rational_value(v, "values[" + std::to_string(idx) + "]"));
		++idx;
	}

	if (doc.contains("metadata")) {
		const auto& m = doc.at("metadata");
		out.metadata.closed_manifold = m.value("closed_manifold", false);
		out.metadata.dimension = m.value("dimension", -1);
		out.metadata.orientable = m.value("orientable", false);
		if (out.metadata.closed_manifold && out.metadata.dimension < 0)
			throw parse_error("metadata: closed_manifold requires a dimension");
	}
	return out;
}

inline input_document load_input(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw parse_error("cannot open input file: " + path);
	std::ostringstream buf;
	buf << in.rdbuf();
	return parse_input(buf.str());
}

inline json input_to_json(const input_document& doc) {
	json j;
	j["name"] = doc.name;
	if (doc.field) j["field"] = doc.field->name();
	j["n_vertices"] = doc.complex.n_vertices;
	json simps = json::array();
	for (const auto& level : doc.complex.by_dim)
		for (const auto& s : level) simps.push_back(s);
	j["simplices"] = std::move(simps);
	json vals = json::array();
	for (const auto& v : doc.f.values) vals.push_back(v.to_string());
	j["values"] = std::move(vals);
	if (doc.metadata.closed_manifold) {
		j["metadata"] = {{"closed_manifold", true},
		                 {"dimension", doc.metadata.dimension},
		                 {"orientable", doc.metadata.orientable}};
	}
	return j;
}

// ---- configuration documents (output of `compute`, input of `distance`) ----

struct degree_payload {
	std::size_t degree = 0;
	std::size_t betti = 0;
	configuration delta;
	// optional; keyed by support point, aligned with delta
	std::map<plane_point, std::vector<std::vector<std::string>>> representatives;
	std::map<plane_point, std::vector<std::vector<std::string>>> ortho_bases;
};

struct configuration_document {
	std::string source;
	std::string field;
	std::vector<degree_payload> degrees;
};

inline json configuration_to_json(const configuration_document& doc) {
	json j;
	j["type"] = "configuration";
	j["source"] = doc.source;
	j["field"] = doc.field;
	json degs = json::array();
	for (const auto& d : doc.degrees) {
		json dj;
		dj["degree"] = d.degree;
		dj["betti"] = d.betti;
		json support = json::array();
		for (const auto& [p, mult] : d.delta.entries) {
			json pj;
			pj["a"] = p.a.to_string();
			pj["b"] = p.b.to_string();
			pj["multiplicity"] = mult;
			if (auto it = d.representatives.find(p); it != d.representatives.end())
				pj["representatives"] = it->second;
			if (auto it = d.ortho_bases.find(p); it != d.ortho_bases.end())
				pj["ortho_basis"] = it->second;
			support.push_back(std::move(pj));
		}
		dj["support"] = std::move(support);
		degs.push_back(std::move(dj));
	}
	j["degrees"] = std::move(degs);
	return j;
}

inline configuration_document parse_configuration_document(const std::string& text) {
	json doc;
	try {
		doc = json::parse(text);
	} catch (const json::parse_error& e) {
		throw parse_error(std::string("configuration document is not valid JSON: ") + e.what());
	}
	if (!doc.is_object() || doc.value("type", "") != "configuration")
		throw parse_error("configuration document: expected {\"type\": \"configuration\", ...}");
	configuration_document out;
	out.source = doc.value("source", "");
	out.field = doc.value("field", "");
	for (const auto& dj : doc.value("degrees", json::array())) {
		degree_payload d;
		d.degree = dj.at("degree").get<std::size_t>();
		d.betti = dj.at("betti").get<std::size_t>();
		for (const auto& pj : dj.value("support", json::array())) {
			const auto a = detail::parse_rational_value(pj.at("a"), "support a");
			const auto b = detail::parse_rational_value(pj.at("b"), "support b");
			const int mult = pj.at("multiplicity").get<int>();
			if (mult <= 0) throw parse_error("support: multiplicity must be positive");
			d.delta.add({a, b}, mult);
		}
		out.degrees.push_back(std::move(d));
	}
	return out;
}

// ---- polynomial documents ----

inline json polynomial_to_json(const std::string& source, const std::string& field,
                               const std::vector<std::pair<std::size_t, monic_polynomial>>& polys) {
	json j;
	j["type"] = "polynomial";
	j["source"] = source;
	j["field"] = field;
	json degs = json::array();
	for (const auto& [r, p] : polys) {
		json dj;
		dj["degree"] = r;
		dj["poly_degree"] = p.degree();
		json coeffs = json::array();
		for (const auto& c : p.coefficients)
			coeffs.push_back({{"re", c.re.to_string()}, {"im", c.im.to_string()}});
		dj["coefficients"] = std::move(coeffs);
		degs.push_back(std::move(dj));
	}
	j["degrees"] = std::move(degs);
	return j;
}

// ---- diagram emission: SVG plus CSV ----

struct diagram_bytes {
	std::string svg;
	std::string csv;
};

namespace detail {

inline std::string fmt(double v) {
	char buf[40];
	std::snprintf(buf, sizeof buf, "%.2f", v);
	return buf;
}

}  // namespace detail

// Static plane plot: axes, the diagonal, one marker per support point
// labeled with its multiplicity. Points strictly below the diagonal are
// drawn as squares, the rest as circles. Layers are colored in input order.
inline diagram_bytes emit_diagram(
    const std::vector<std::pair<std::string, configuration>>& layers) {
	static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
	                                "#ff7f0e", "#8c564b"};
	// csv holds the merged table, lexicographically sorted
	configuration merged;
	for (const auto& [label, c] : layers)
		for (const auto& [p, mult] : c.entries) merged.add(p, mult);
	std::ostringstream csv;
	csv << "a,b,multiplicity\n";
	for (const auto& [p, mult] : merged.entries)
		csv << p.a.to_string() << "," << p.b.to_string() << "," << mult << "\n";

	double lo = 0, hi = 1;
	bool first = true;
	for (const auto& [label, c] : layers)
		for (const auto& [p, mult] : c.entries) {
			for (double v : {p.a.to_double(), p.b.to_double()}) {
				if (first || v < lo) lo = v;
				if (first || v > hi) hi = v;
				first = false;
			}
		}
	if (hi - lo < 1e-9) {
		lo -= 1;
		hi += 1;
	}
	const double pad = (hi - lo) * 0.15;
	lo -= pad;
	hi += pad;
	const double size = 420, margin = 40;
	auto sx = [&](double v) { return margin + (v - lo) / (hi - lo) * (size - 2 * margin); };
	auto sy = [&](double v) { return size - margin - (v - lo) / (hi - lo) * (size - 2 * margin); };

	std::ostringstream svg;
	svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
	    << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
	svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
	// axes
	svg << "<line x1=\"" << detail::fmt(margin) << "\" y1=\"" << detail::fmt(size - margin)
	    << "\" x2=\"" << detail::fmt(size - margin) << "\" y2=\"" << detail::fmt(size - margin)
	    << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
	svg << "<line x1=\"" << detail::fmt(margin) << "\" y1=\"" << detail::fmt(size - margin)
	    << "\" x2=\"" << detail::fmt(margin) << "\" y2=\"" << detail::fmt(margin)
	    << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
	// the diagonal a = b
	svg << "<line x1=\"" << detail::fmt(sx(lo)) << "\" y1=\"" << detail::fmt(sy(lo)) << "\" x2=\""
	    << detail::fmt(sx(hi)) << "\" y2=\"" << detail::fmt(sy(hi))
	    << "\" stroke=\"#999\" stroke-dasharray=\"5,4\" stroke-width=\"1\"/>\n";
	std::size_t layer_idx = 0;
	for (const auto& [label, c] : layers) {
		const char* color = palette[layer_idx % 6];
		if (!label.empty())
			svg << "<text x=\"" << detail::fmt(size - margin) << "\" y=\""
			    << detail::fmt(margin + 14.0 * static_cast<double>(layer_idx))
			    << "\" text-anchor=\"end\" font-size=\"12\" fill=\"" << color << "\">" << label
			    << "</text>\n";
		for (const auto& [p, mult] : c.entries) {
			const double x = sx(p.a.to_double());
			const double y = sy(p.b.to_double());
			if (p.b < p.a)
				svg << "<rect x=\"" << detail::fmt(x - 4) << "\" y=\"" << detail::fmt(y - 4)
				    << "\" width=\"8\" height=\"8\" fill=\"" << color << "\"/>\n";
			else
				svg << "<circle cx=\"" << detail::fmt(x) << "\" cy=\"" << detail::fmt(y)
				    << "\" r=\"4.5\" fill=\"" << color << "\"/>\n";
			svg << "<text x=\"" << detail::fmt(x + 6) << "\" y=\"" << detail::fmt(y - 6)
			    << "\" font-size=\"11\" fill=\"" << color << "\">" << mult << "</text>\n";
		}
		++layer_idx;
	}
	svg << "</svg>\n";
	return {svg.str(), csv.str()};
}

inline diagram_bytes emit_diagram(const configuration& c) { return emit_diagram({{"", c}}); }

}  // namespace bettiplane::io
