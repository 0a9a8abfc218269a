#include "mixcay_cli/commands.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "mixcay/census.hpp"
#include "mixcay/eigen_oracle.hpp"
#include "mixcay/error.hpp"
#include "mixcay/families.hpp"
#include "mixcay_cli/json_io.hpp"

namespace mixcay::cli {
namespace {

struct Options {
  std::string spec;
  std::string set;
  bool json = false;
  bool hermitian = false;
  bool adjacency = false;
  bool oracle = false;
  bool no_oracle = false;
  std::size_t max_order = 64;
  std::size_t max_classes = 20;
  unsigned jobs = 1;
  std::string csv;
  bool timing = false;
};

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

std::string complex_text(Complex z) {
  const double re = std::abs(z.real()) < 1e-9 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 1e-9 ? 0.0 : z.imag();
  if (im == 0) return fmt("%.6g", re);
  if (re == 0) return fmt("%.6g", im) + "i";
  return fmt("%.6g", re) + (im < 0 ? "-" : "+") + fmt("%.6g", std::abs(im)) + "i";
}

void print_spectrum(std::ostream& out, const char* label, const SpectrumMultiset& s) {
  out << label << ":";
  for (const auto& e : s.entries()) {
    out << " " << complex_text(e.value);
    if (e.multiplicity > 1) out << "^" << e.multiplicity;
  }
  out << "\n";
}

std::string names(const FiniteGroup& g, const ElementSet& s, const char* sep = ",") {
  std::string out;
  for (Element e : s) {
    if (!out.empty()) out += sep;
    out += g.element_name(e);
  }
  return out;
}

int cmd_group_info(const Options& o, std::ostream& out) {
  const auto g = build_family(o.spec);
  if (o.json) {
    out << group_info_json(g).dump(2) << "\n";
    return kExitOk;
  }
  const auto& cd = g.conjugacy();
  out << g.name() << ": order " << g.order() << (g.is_abelian() ? ", abelian" : "") << "\n";
  out << "classes (" << cd.num_classes() << "):\n";
  for (std::size_t c = 0; c < cd.num_classes(); ++c) {
    const Element rep = cd.representatives[c];
    out << "  " << g.element_name(rep) << "  size " << cd.class_size(c) << "  order "
        << g.element_order(rep) << "  {" << names(g, ElementSet(cd.classes[c])) << "}\n";
  }
  out << "element orders:";
  for (Element e = 0; e < g.order(); ++e) out << " " << g.element_name(e) << ":" << g.element_order(e);
  out << "\nGamma(4): {" << names(g, gamma4(g)) << "}\n";
  return kExitOk;
}

int cmd_atoms(const Options& o, std::ostream& out) {
  const auto g = build_family(o.spec);
  if (o.json) {
    out << atoms_json(g).dump(2) << "\n";
    return kExitOk;
  }
  out << "[x] atoms:\n";
  for (const auto& a : all_sim_atoms(g)) out << "  {" << names(g, a.members) << "}\n";
  out << "approx atoms:\n";
  for (const auto& a : all_approx_atoms(g)) out << "  {" << names(g, a.members) << "}\n";
  out << "admissible:";
  for (Element y : gamma4(g)) {
    if (is_admissible(g, y)) out << " " << g.element_name(y);
  }
  out << "\n";
  return kExitOk;
}

int cmd_chartable(const Options& o, std::ostream& out) {
  const auto g = build_family(o.spec);
  const auto t = character_table(g, table_options_from_env());
  if (o.json) {
    out << chartable_json(g, t).dump(2) << "\n";
    return kExitOk;
  }
  const auto& cd = t.classes();
  out << "class";
  for (std::size_t c = 0; c < cd.num_classes(); ++c) out << "\t" << g.element_name(cd.representatives[c]);
  out << "\nsize";
  for (std::size_t c = 0; c < cd.num_classes(); ++c) out << "\t" << cd.class_size(c);
  out << "\n";
  for (std::size_t j = 0; j < t.num_characters(); ++j) {
    out << "chi" << j + 1;
    for (std::size_t c = 0; c < cd.num_classes(); ++c) out << "\t" << complex_text(t.value(j, c));
    out << "\n";
  }
  return kExitOk;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const auto g = build_family(o.spec);
  const auto t = character_table(g, table_options_from_env());
  const auto s = connection_set(g, g.parse_elements(o.set));
  const bool adjacency = o.adjacency;
  SpectrumMultiset formula = adjacency ? adjacency_spectrum_normal(g, t, s).spectrum
                                       : h_spectrum_normal(g, t, s).spectrum;
  std::optional<SpectrumMultiset> oracle;
  if (o.oracle) {
    oracle = adjacency ? eig_general_oracle(zero_one_adjacency(g, s).cast<Complex>())
                       : eig_hermitian_oracle(hermitian_adjacency(g, s));
  }
  const bool agrees = !oracle || approx_equal(formula, *oracle);
  if (o.json) {
    json doc = {{"group", g.name()},
                {"set", element_list_json(g, s.members)},
                {"kind", adjacency ? "adjacency" : "hermitian"},
                {"formula", spectrum_json(formula)}};
    if (oracle) {
      doc["oracle"] = spectrum_json(*oracle);
      doc["agrees"] = agrees;
    }
    out << doc.dump(2) << "\n";
  } else {
    print_spectrum(out, "formula", formula);
    if (oracle) {
      print_spectrum(out, "oracle", *oracle);
      out << (agrees ? "oracle agrees" : "oracle DISAGREES") << "\n";
    }
  }
  return agrees ? kExitOk : kExitDisagreement;
}

int cmd_matrix(const Options& o, std::ostream& out) {
  const auto g = build_family(o.spec);
  const auto s = connection_set(g, g.parse_elements(o.set));
  const Eigen::MatrixXcd m =
      o.adjacency ? Eigen::MatrixXcd(zero_one_adjacency(g, s).cast<Complex>()) : hermitian_adjacency(g, s);
  out << matrix_json(m).dump() << "\n";
  return kExitOk;
}

int cmd_decide(const Options& o, std::ostream& out) {
  const auto g = build_family(o.spec);
  const auto s = connection_set(g, g.parse_elements(o.set));
  auto v = decide_gaussian_integral(g, s);
  if (!o.no_oracle) {
    const auto t = character_table(g, table_options_from_env());
    attach_cross_check(v, g, t, s);
  }
  out << verdict_json(g, s, v).dump(2) << "\n";
  return v.cross_check && !v.cross_check->agrees ? kExitDisagreement : kExitOk;
}

int cmd_census(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = build_family(o.spec);
  if (g.order() > o.max_order) {
    err << "error: --max-order " << o.max_order << " is below the order " << g.order() << " of "
        << g.name() << "\n";
    return kExitUsage;
  }
  const auto t = character_table(g, table_options_from_env());
  CensusOptions co;
  co.jobs = o.jobs;
  co.max_classes = o.max_classes;
  const auto report = run_census(g, t, co);
  out << census_json(report, o.timing).dump(2) << "\n";
  if (!o.csv.empty()) {
    std::ofstream csv(o.csv);
    if (!csv) {
      err << "error: cannot write --csv file " << o.csv << "\n";
      return kExitUsage;
    }
    csv << "set_bitmask,set_elements,h_integral,gaussian_integral,max_oracle_distance\n";
    for (const auto& r : report.rows) {
      csv << r.bitmask << ",\"" << names(g, r.set, ";") << "\"," << (r.h_integral ? "true" : "false")
          << "," << (r.gaussian_integral ? "true" : "false") << ","
          << fmt("%.3e", r.max_oracle_distance) << "\n";
    }
  }
  return report.disagreements.empty() ? kExitOk : kExitDisagreement;
}

}  // namespace

CharacterTableOptions table_options_from_env() {
  CharacterTableOptions options;
  if (const char* seed = std::getenv("CAYLEY_HSPEC_SEED"); seed && *seed) {
    try {
      options.seed = std::stoull(seed, nullptr, 0);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, std::string("CAYLEY_HSPEC_SEED is not an integer: ") + seed);
    }
  }
  return options;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integrality of normal mixed Cayley graphs", "mixcay"};
  app.require_subcommand(1);
  Options o;
  const std::string spec_help =
      "group descriptor: cyclic:N, dihedral:N, dicyclic:N, modular:16, sym:K, alt:K, "
      "product:A,B, perm:(1 2),(1 2 3), table:FILE";

  auto* group = app.add_subcommand("group", "Group structure");
  group->require_subcommand(1);
  auto* info = group->add_subcommand("info", "Order, classes, element orders, Gamma(4)");
  info->add_option("spec", o.spec, spec_help)->required();
  info->add_flag("--json", o.json, "emit JSON");

  auto* atoms = app.add_subcommand("atoms", "Atoms of ~ and of the approx relation, admissible elements");
  atoms->add_option("spec", o.spec, spec_help)->required();
  atoms->add_flag("--json", o.json, "emit JSON");

  auto* chartable = app.add_subcommand("chartable", "Character table");
  chartable->add_option("spec", o.spec, spec_help)->required();
  chartable->add_flag("--json", o.json, "emit JSON");

  auto* spectrum = app.add_subcommand("spectrum", "Spectrum from the character formulas");
  spectrum->add_option("spec", o.spec, spec_help)->required();
  spectrum->add_option("--set", o.set, "comma-separated elements, e.g. a,a5,a3x or #3")->required();
  auto* herm = spectrum->add_flag("--hermitian", o.hermitian, "Hermitian adjacency (default)");
  auto* adj = spectrum->add_flag("--adjacency", o.adjacency, "(0,1)-adjacency");
  herm->excludes(adj);
  spectrum->add_flag("--oracle", o.oracle, "compare with a dense eigensolver");
  spectrum->add_flag("--json", o.json, "emit JSON");

  auto* matrix = app.add_subcommand("matrix", "Adjacency matrix as JSON");
  matrix->add_option("spec", o.spec, spec_help)->required();
  matrix->add_option("--set", o.set, "comma-separated elements")->required();
  auto* mherm = matrix->add_flag("--hermitian", o.hermitian, "Hermitian adjacency (default)");
  auto* madj = matrix->add_flag("--adjacency", o.adjacency, "(0,1)-adjacency");
  mherm->excludes(madj);

  auto* decide = app.add_subcommand("decide", "Integrality verdict as JSON");
  decide->add_option("spec", o.spec, spec_help)->required();
  decide->add_option("--set", o.set, "comma-separated elements")->required();
  decide->add_flag("--no-oracle", o.no_oracle, "skip the numerical cross-check");

  auto* census = app.add_subcommand("census", "Check every normal connection set");
  census->add_option("spec", o.spec, spec_help)->required();
  census->add_option("--max-order", o.max_order, "refuse groups larger than this")
      ->check(CLI::PositiveNumber);
  census->add_option("--max-classes", o.max_classes, "refuse more non-identity classes than this")
      ->check(CLI::Range(1, 40));
  census->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));
  census->add_option("--csv", o.csv, "write one row per set to this file");
  census->add_flag("--timing", o.timing, "include wall time in the report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    (void)e;
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (info->parsed()) return cmd_group_info(o, out);
    if (atoms->parsed()) return cmd_atoms(o, out);
    if (chartable->parsed()) return cmd_chartable(o, out);
    if (spectrum->parsed()) return cmd_spectrum(o, out);
    if (matrix->parsed()) return cmd_matrix(o, out);
    if (decide->parsed()) return cmd_decide(o, out);
    if (census->parsed()) return cmd_census(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mixcay::cli
