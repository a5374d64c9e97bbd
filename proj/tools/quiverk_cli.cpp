#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quiverk/errors.hpp"
#include "quiverk/groth.hpp"
#include "quiverk/io.hpp"
#include "quiverk/kclass.hpp"
#include "quiverk/reineke.hpp"
#include "quiverk/verification.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw quiverk::ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// --m accepts a file path or an inline orbit description.
std::string orbit_text(const std::string& spec) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) return read_file(spec);
  return spec;
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw quiverk::ParseError("cannot open output file: " + out_path);
  out << payload;
}

quiverk::IntegerSequence parse_index_list(const std::string& text) {
  quiverk::IntegerSequence lam;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw quiverk::ParseError("bad index list entry: " + tok);
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size()) throw quiverk::ParseError("bad index list entry: " + tok);
    lam.push_back(value);
  }
  return lam;
}

struct CommonOpts {
  std::string quiver_path;
  std::string m_spec;
  std::string rp_path;
  int degree_bound = -1;
  std::string format = "text";
  std::string out_path;
};

void add_output_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out_path, "Write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace quiverk;

  CLI::App app{"Orbit-closure classes of Dynkin quivers via iterated residues"};
  app.require_subcommand(1);

  CommonOpts o;

  CLI::App* cmd_roots = app.add_subcommand("roots", "List the positive roots of a quiver");
  cmd_roots->add_option("--quiver", o.quiver_path, "Quiver JSON file")->required();
  add_output_flags(cmd_roots, o);

  CLI::App* cmd_resolve =
      app.add_subcommand("resolve", "Directed partition and resolution pair of an orbit");
  cmd_resolve->add_option("--quiver", o.quiver_path, "Quiver JSON file")->required();
  cmd_resolve->add_option("--m", o.m_spec, "Orbit vector (file or inline)")->required();
  add_output_flags(cmd_resolve, o);

  CLI::App* cmd_kclass = app.add_subcommand("kclass", "K-theory class of an orbit closure");
  cmd_kclass->add_option("--quiver", o.quiver_path, "Quiver JSON file")->required();
  cmd_kclass->add_option("--m", o.m_spec, "Orbit vector (file or inline)")->required();
  cmd_kclass->add_option("--rp", o.rp_path, "Resolution-pair JSON file (override)");
  add_output_flags(cmd_kclass, o);

  CLI::App* cmd_coh = app.add_subcommand("coh", "Cohomology class of an orbit closure");
  cmd_coh->add_option("--quiver", o.quiver_path, "Quiver JSON file")->required();
  cmd_coh->add_option("--m", o.m_spec, "Orbit vector (file or inline)")->required();
  add_output_flags(cmd_coh, o);

  CLI::App* cmd_qcoeff = app.add_subcommand("qcoeff", "Quiver coefficients of an orbit closure");
  cmd_qcoeff->add_option("--quiver", o.quiver_path, "Quiver JSON file")->required();
  cmd_qcoeff->add_option("--m", o.m_spec, "Orbit vector (file or inline)")->required();
  cmd_qcoeff->add_option("--degree-bound", o.degree_bound, "Series degree bound override");
  add_output_flags(cmd_qcoeff, o);

  std::string gp_lambda;
  int gp_n = 0, gp_p = 0;
  CLI::App* cmd_gpoly =
      app.add_subcommand("gpoly", "Stable Grothendieck polynomial g_lambda for given ranks");
  cmd_gpoly->add_option("lambda", gp_lambda, "Comma-separated integer sequence, e.g. 2,1")
      ->required();
  cmd_gpoly->add_option("n", gp_n, "Rank of the positive alphabet")->required();
  cmd_gpoly->add_option("p", gp_p, "Rank of the negative alphabet")->required();
  add_output_flags(cmd_gpoly, o);

  CLI::App* cmd_verify = app.add_subcommand("verify", "Run the built-in acceptance suite");
  cmd_verify->add_option("--out", o.out_path, "Write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const bool json = o.format == "json";

    if (cmd_roots->parsed()) {
      const Quiver q = parse_quiver_json(read_file(o.quiver_path));
      const auto roots = q.positive_roots();
      emit(json ? roots_json(roots) : roots_text(roots), o.out_path);
    } else if (cmd_resolve->parsed()) {
      const Quiver q = parse_quiver_json(read_file(o.quiver_path));
      const OrbitVector m = parse_orbit(orbit_text(o.m_spec), q);
      std::vector<DimVector> support;
      for (const auto& e : m.entries) support.push_back(e.first);
      const RootPartition parts = directed_partition(q, support);
      const ResolutionPair rp = resolution_pair(q, m, parts);
      emit(json ? resolve_json(parts, rp) : partition_parts_text(parts) + resolution_text(rp),
           o.out_path);
    } else if (cmd_kclass->parsed()) {
      const Quiver q = parse_quiver_json(read_file(o.quiver_path));
      const OrbitVector m = parse_orbit(orbit_text(o.m_spec), q);
      KClass kc;
      if (!o.rp_path.empty()) {
        const ResolutionPair rp = parse_resolution_json(read_file(o.rp_path));
        const DimVector v = dimension_vector(q, m);
        validate_resolution_pair(q, v, rp);
        kc = kclass(q, v, rp);
      } else {
        kc = kclass(q, m);
      }
      emit(json ? poly_json("kclass", kc) : poly_text(kc) + "\n", o.out_path);
    } else if (cmd_coh->parsed()) {
      const Quiver q = parse_quiver_json(read_file(o.quiver_path));
      const OrbitVector m = parse_orbit(orbit_text(o.m_spec), q);
      const auto [root_form, degree] = chern_character_leading(kclass(q, m));
      const LaurentPoly class_form = to_chern_classes(root_form);
      if (json) {
        emit(coh_json(root_form, class_form, degree), o.out_path);
      } else {
        std::ostringstream os;
        os << "degree = " << degree << "\n";
        os << "chern roots  : " << poly_text(root_form) << "\n";
        os << "chern classes: " << poly_text(class_form) << "\n";
        emit(os.str(), o.out_path);
      }
    } else if (cmd_qcoeff->parsed()) {
      const Quiver q = parse_quiver_json(read_file(o.quiver_path));
      const OrbitVector m = parse_orbit(orbit_text(o.m_spec), q);
      const DimVector v = dimension_vector(q, m);
      const QuiverCoefficientTable t = quiver_coefficients(q, m, v, o.degree_bound);
      emit(json ? table_json(t) : table_str(t) + "\n", o.out_path);
    } else if (cmd_gpoly->parsed()) {
      const IntegerSequence lam = parse_index_list(gp_lambda);
      if (gp_n < 0 || gp_p < 0) throw DomainError("alphabet ranks must be non-negative");
      const LaurentPoly g = g_poly(lam, gp_n, gp_p);
      emit(json ? gpoly_json(lam, gp_n, gp_p, g) : poly_text(g) + "\n", o.out_path);
    } else if (cmd_verify->parsed()) {
      const auto results = run_verification();
      const std::string report = verification_report(results);
      emit(report, o.out_path);
      if (!o.out_path.empty()) std::cout << report;
      return all_passed(results) ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
