// Command line front end: computes refined Betti configurations of a
// rational-valued vertex function on a finite simplicial complex, their
// polynomial and vector-space refinements, bottleneck distances between
// configurations, and machine checks of the structural identities.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bettiplane/bottleneck.hpp"
#include "bettiplane/delta.hpp"
#include "bettiplane/io.hpp"
#include "bettiplane/polynomial.hpp"
#include "bettiplane/verify.hpp"

using namespace bettiplane;

namespace {

struct field_options {
	std::string field;  // "Q" or "GF(p)"
	std::int64_t p = 0;

	field_spec resolve(const std::optional<field_spec>& doc_default) const {
		if (p != 0) return field_spec::prime(p);
		if (!field.empty()) return io::parse_field_spec(field);
		if (doc_default) return *doc_default;
		return field_spec::rationals();
	}
};

void add_field_flags(CLI::App* cmd, field_options& opts) {
	cmd->add_option("--field", opts.field, "coefficient field: Q or GF(p)");
	cmd->add_option("--p", opts.p, "shorthand for GF(p)");
}

void write_output(const std::string& text, const std::string& path) {
	if (path.empty()) {
		std::cout << text;
		return;
	}
	std::ofstream out(path, std::ios::binary);
	if (!out) throw io::parse_error("cannot open output file: " + path);
	out << text;
}

std::vector<std::size_t> degree_list(const std::vector<std::size_t>& chosen, int dim) {
	if (!chosen.empty()) return chosen;
	std::vector<std::size_t> all;
	for (int r = 0; r <= std::max(dim, 0); ++r) all.push_back(static_cast<std::size_t>(r));
	return all;
}

rational default_epsilon(const io::input_document& doc) {
	auto grid = make_critical_grid(doc.complex, doc.f);
	return grid.min_critical_gap().value_or(rational(1)) / rational(4);
}

rational parse_epsilon(const std::string& text, const io::input_document& doc) {
	if (text.empty()) return default_epsilon(doc);
	auto r = rational::parse(text);
	if (!r || r->sign() < 0) throw std::invalid_argument("--eps must be a non-negative rational");
	return *r;
}

std::string read_file(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw io::parse_error("cannot open file: " + path);
	std::ostringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

int run_compute(const std::string& input, const field_options& fopts,
                const std::vector<std::size_t>& degrees, bool hat, bool ortho,
                const std::string& out_path) {
	auto doc = io::load_input(input);
	const auto fs = fopts.resolve(doc.field);
	if (ortho && fs.kind != field_spec::kind_t::rationals)
		throw std::invalid_argument("--ortho requires the rational field");
	io::configuration_document out;
	out.source = doc.name;
	out.field = fs.name();
	with_field(fs, [&](auto k) {
		using F = decltype(k);
		image_context<F> ctx(doc.complex);
		for (std::size_t r : degree_list(degrees, doc.complex.dim())) {
			io::degree_payload payload;
			payload.degree = r;
			auto t = build_image_table(k, doc.complex, doc.f, r, &ctx);
			payload.betti = t.ambient;
			payload.delta = compute_delta(k, t);
			if (hat) {
				auto hd = compute_hat_delta(k, t);
				for (const auto& [p, reps] : hd.entries) {
					std::vector<std::vector<std::string>> text;
					for (const auto& v : reps) {
						std::vector<std::string> row;
						for (const auto& e : v) row.push_back(k.to_string(e));
						text.push_back(std::move(row));
					}
					payload.representatives[p] = std::move(text);
				}
			}
			if constexpr (F::is_rationals) {
				if (ortho) {
					auto od = compute_ortho_delta(k, t);
					for (const auto& [p, s] : od.entries) {
						std::vector<std::vector<std::string>> text;
						for (std::size_t c = 0; c < s.rank(); ++c) {
							std::vector<std::string> col;
							for (std::size_t row = 0; row < s.ambient; ++row)
								col.push_back(s.basis.at(row, c).to_string());
							text.push_back(std::move(col));
						}
						payload.ortho_bases[p] = std::move(text);
					}
				}
			}
			out.degrees.push_back(std::move(payload));
		}
	});
	write_output(io::configuration_to_json(out).dump(1) + "\n", out_path);
	return 0;
}

int run_poly(const std::string& input, const field_options& fopts,
             const std::vector<std::size_t>& degrees, const std::string& out_path) {
	auto doc = io::load_input(input);
	const auto fs = fopts.resolve(doc.field);
	std::vector<std::pair<std::size_t, monic_polynomial>> polys;
	with_field(fs, [&](auto k) {
		using F = decltype(k);
		image_context<F> ctx(doc.complex);
		for (std::size_t r : degree_list(degrees, doc.complex.dim()))
			polys.emplace_back(r, to_polynomial(compute_delta(k, doc.complex, doc.f, r, &ctx)));
	});
	write_output(io::polynomial_to_json(doc.name, fs.name(), polys).dump(1) + "\n", out_path);
	return 0;
}

int run_distance(const std::string& file_a, const std::string& file_b,
                 const std::vector<std::size_t>& degrees) {
	auto a = io::parse_configuration_document(read_file(file_a));
	auto b = io::parse_configuration_document(read_file(file_b));
	auto find_degree = [](const io::configuration_document& doc,
	                      std::size_t r) -> const io::degree_payload* {
		for (const auto& d : doc.degrees)
			if (d.degree == r) return &d;
		return nullptr;
	};
	std::vector<std::size_t> wanted = degrees;
	if (wanted.empty())
		for (const auto& d : a.degrees) wanted.push_back(d.degree);
	for (std::size_t r : wanted) {
		const auto* da = find_degree(a, r);
		const auto* db = find_degree(b, r);
		if (!da || !db)
			throw std::invalid_argument("degree " + std::to_string(r) +
			                            " is missing from one of the configuration documents");
		if (da->delta.total_mass() != db->delta.total_mass())
			throw std::invalid_argument(
			    "degree " + std::to_string(r) + ": total masses differ (" +
			    std::to_string(da->delta.total_mass()) + " vs " +
			    std::to_string(db->delta.total_mass()) +
			    "); configurations of different spaces cannot be compared");
		auto m = bottleneck_distance(da->delta, db->delta);
		std::cout << "degree " << r << ": distance = " << m.distance.to_string() << "\n";
	}
	return 0;
}

int run_plot(const std::string& input, const std::vector<std::size_t>& degrees,
             const std::string& svg_path, const std::string& csv_path) {
	auto doc = io::parse_configuration_document(read_file(input));
	std::vector<std::pair<std::string, configuration>> layers;
	for (const auto& d : doc.degrees) {
		if (!degrees.empty() &&
		    std::find(degrees.begin(), degrees.end(), d.degree) == degrees.end())
			continue;
		layers.emplace_back("r=" + std::to_string(d.degree), d.delta);
	}
	auto bytes = io::emit_diagram(layers);
	write_output(bytes.svg, svg_path);
	if (!csv_path.empty()) write_output(bytes.csv, csv_path);
	return 0;
}

int run_perturb(const std::string& input, const std::string& eps_text, std::uint64_t seed,
                const std::string& out_path) {
	auto doc = io::load_input(input);
	doc.f = perturb_function(doc.f, parse_epsilon(eps_text, doc), seed);
	write_output(io::input_to_json(doc).dump(1) + "\n", out_path);
	return 0;
}

int run_verify(const std::string& input, std::vector<std::string> checks,
               const field_options& fopts, const std::string& eps_text, unsigned trials,
               std::uint64_t seed) {
	auto doc = io::load_input(input);
	const auto fs = fopts.resolve(doc.field);
	if (checks.empty() || (checks.size() == 1 && checks[0] == "all")) {
		checks = {"mass", "critical-support", "box-laws", "stability", "local-stability",
		          "genericity"};
		const bool gf2 = fs.kind == field_spec::kind_t::prime && fs.p == 2;
		if (doc.metadata.closed_manifold && (gf2 || doc.metadata.orientable))
			checks.push_back("duality");
	}
	const rational eps = parse_epsilon(eps_text, doc);
	bool all_pass = true;
	with_field(fs, [&](auto k) {
		for (const auto& name : checks) {
			verification_report rep;
			perturbation_spec spec{eps, trials, seed};
			if (name == "mass") {
				rep = verify_total_mass(k, doc.complex, doc.f);
			} else if (name == "critical-support") {
				rep = verify_critical_support(k, doc.complex, doc.f);
			} else if (name == "box-laws") {
				rep = verify_box_laws(k, doc.complex, doc.f);
			} else if (name == "stability") {
				rep = verify_stability(k, doc.complex, doc.f, spec);
			} else if (name == "local-stability") {
				rep = verify_local_stability(k, doc.complex, doc.f, spec);
			} else if (name == "duality") {
				rep = verify_duality(k, doc.complex, doc.f, doc.metadata);
			} else if (name == "genericity") {
				rep = verify_genericity(k, doc.complex, doc.f, spec);
			} else {
				throw std::invalid_argument("unknown check: " + name);
			}
			char timing[64];
			std::snprintf(timing, sizeof timing, " (%.3fs)", rep.seconds);
			std::cout << (rep.pass ? "[PASS] " : "[FAIL] ") << rep.check << timing << "\n";
			for (const auto& w : rep.witnesses) std::cout << "       " << w << "\n";
			all_pass = all_pass && rep.pass;
		}
	});
	return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"refined Betti-number and homology configurations of a PL function "
	             "on a finite simplicial complex"};
	app.require_subcommand(1);

	auto* compute = app.add_subcommand("compute", "compute the configurations delta_r");
	std::string compute_input, compute_out;
	field_options compute_field;
	std::vector<std::size_t> compute_degrees;
	bool compute_hat = false, compute_ortho = false;
	compute->add_option("input", compute_input, "input document")->required();
	add_field_flags(compute, compute_field);
	compute->add_option("--degree", compute_degrees, "restrict to these degrees");
	compute->add_flag("--hat", compute_hat, "include representative vectors (hat delta)");
	compute->add_flag("--ortho", compute_ortho,
	                  "include orthogonal subspace bases (rational field only)");
	compute->add_option("-o,--output", compute_out, "output file (default stdout)");

	auto* poly = app.add_subcommand("poly", "compute the polynomials P_r(z)");
	std::string poly_input, poly_out;
	field_options poly_field;
	std::vector<std::size_t> poly_degrees;
	poly->add_option("input", poly_input, "input document")->required();
	add_field_flags(poly, poly_field);
	poly->add_option("--degree", poly_degrees, "restrict to these degrees");
	poly->add_option("-o,--output", poly_out, "output file (default stdout)");

	auto* distance = app.add_subcommand(
	    "distance", "bottleneck distance between two configuration documents");
	std::string dist_a, dist_b;
	std::vector<std::size_t> dist_degrees;
	distance->add_option("first", dist_a, "first configuration document")->required();
	distance->add_option("second", dist_b, "second configuration document")->required();
	distance->add_option("--degree", dist_degrees, "restrict to these degrees");

	auto* verify = app.add_subcommand("verify", "run the named checks");
	std::string verify_input, verify_eps;
	field_options verify_field;
	std::vector<std::string> verify_checks;
	unsigned verify_trials = 100;
	std::uint64_t verify_seed = 1;
	verify->add_option("input", verify_input, "input document")->required();
	verify->add_option("--check", verify_checks,
	                   "mass | critical-support | box-laws | stability | local-stability | "
	                   "duality | genericity | all");
	add_field_flags(verify, verify_field);
	verify->add_option("--eps", verify_eps, "perturbation size (default: min grid gap / 4)");
	verify->add_option("--trials", verify_trials, "number of seeded trials");
	verify->add_option("--seed", verify_seed, "base seed");

	auto* plot = app.add_subcommand("plot", "emit an SVG diagram (and optional CSV table)");
	std::string plot_input, plot_svg, plot_csv;
	std::vector<std::size_t> plot_degrees;
	plot->add_option("input", plot_input, "configuration document")->required();
	plot->add_option("--degree", plot_degrees, "restrict to these degrees");
	plot->add_option("-o,--output", plot_svg, "SVG output file (default stdout)");
	plot->add_option("--csv", plot_csv, "CSV output file");

	auto* perturb = app.add_subcommand("perturb", "emit a perturbed input document");
	std::string pert_input, pert_eps, pert_out;
	std::uint64_t pert_seed = 1;
	perturb->add_option("input", pert_input, "input document")->required();
	perturb->add_option("--eps", pert_eps, "perturbation size (default: min grid gap / 4)");
	perturb->add_option("--seed", pert_seed, "seed");
	perturb->add_option("-o,--output", pert_out, "output file (default stdout)");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::CallForAllHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return 2;
	}

	try {
		if (app.got_subcommand(compute))
			return run_compute(compute_input, compute_field, compute_degrees, compute_hat,
			                   compute_ortho, compute_out);
		if (app.got_subcommand(poly)) return run_poly(poly_input, poly_field, poly_degrees, poly_out);
		if (app.got_subcommand(distance)) return run_distance(dist_a, dist_b, dist_degrees);
		if (app.got_subcommand(verify))
			return run_verify(verify_input, verify_checks, verify_field, verify_eps, verify_trials,
			                  verify_seed);
		if (app.got_subcommand(plot)) return run_plot(plot_input, plot_degrees, plot_svg, plot_csv);
		if (app.got_subcommand(perturb)) return run_perturb(pert_input, pert_eps, pert_seed, pert_out);
	} catch (const io::parse_error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const std::invalid_argument& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "internal error: " << e.what() << "\n";
		return 2;
	}
	return 2;
}
