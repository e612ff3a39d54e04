// Command-line front end: enumeration, the three partial orders, curve
// digraphs, brane-diagram calculus, column resolutions and verification
// sweeps over binary contingency tables with fixed margins.
//
// Exit codes: 0 success / all requested equalities hold, 1 a verified
// inequality or discrepancy was found, 2 invalid input.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bct/brane.hpp"
#include "bct/curves.hpp"
#include "bct/enumerate.hpp"
#include "bct/export.hpp"
#include "bct/matrix.hpp"
#include "bct/orders.hpp"
#include "bct/resolution.hpp"
#include "bct/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiscrepancy = 1;
constexpr int kExitInvalid = 2;

// Families above this size need --force-large for full relation closures.
constexpr int kLargeFamilyGuard = 20000;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw CLI::ValidationError("empty entry in integer list");
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw CLI::ValidationError("empty integer list");
  return out;
}

bct::MarginPair margins_from(const std::string& r_text, const std::string& c_text) {
  return {parse_int_list(r_text), parse_int_list(c_text)};
}

// One-line notation, 1-based on the command line.
std::vector<int> parse_sigma(const std::string& text) {
  std::vector<int> sigma = parse_int_list(text);
  for (int& v : sigma) --v;
  bct::CocharacterSpec spec{sigma};
  if (!spec.is_permutation()) throw CLI::ValidationError("--sigma is not a permutation");
  return sigma;
}

std::string read_file_or_stdin(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bct::BinaryMatrix load_matrix(const std::string& path) {
  return bct::matrix_from_text_or_json(read_file_or_stdin(path));
}

bct::RelationKind parse_kind(const std::string& name) {
  if (name == "bruhat") return bct::RelationKind::bruhat;
  if (name == "secondary") return bct::RelationKind::secondary;
  if (name == "geometric") return bct::RelationKind::geometric;
  throw CLI::ValidationError("unknown relation kind: " + name);
}

std::vector<bct::RelationKind> parse_kinds(const std::string& text) {
  std::vector<bct::RelationKind> kinds;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) kinds.push_back(parse_kind(item));
  if (kinds.empty()) throw CLI::ValidationError("empty kind list");
  return kinds;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void log_family(const bct::BctFamily& family, const Timer& timer) {
  std::cerr << "family size=" << family.size() << " elapsed=" << timer.seconds() << "s\n";
}

bct::CocharacterSpec spec_for(const std::optional<std::vector<int>>& sigma,
                              const bct::BctFamily& family) {
  if (sigma) {
    if (static_cast<int>(sigma->size()) != family.margins.total_cols())
      throw std::invalid_argument("--sigma length must equal the number of columns");
    return bct::CocharacterSpec{*sigma};
  }
  return bct::CocharacterSpec::identity(family.margins.total_cols());
}

void guard_large(const bct::BctFamily& family, bool force_large) {
  if (family.size() > kLargeFamilyGuard && !force_large)
    throw std::invalid_argument("family has " + std::to_string(family.size()) +
                                " members; pass --force-large to build full relations");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorics of binary contingency tables: Bruhat orders, "
               "invariant-curve digraphs, brane diagrams and resolutions"};
  app.require_subcommand(1);

  std::string r_text, c_text, kind_text = "secondary", kinds_text = "secondary,geometric";
  std::string format = "json", matrix_path, matrix_path_b, diagram_text, ties_json, split_text;
  std::string sigma_text, dir_text = "fwd", what_text = "hasse";
  int max_total = 5, position = 1, column = 1, report_limit = 32, jobs = 0;
  bool count_only = false, list_ties = false, maximal = false, force_large = false;
  bool include_moves = false;

  auto add_margins = [&](CLI::App* cmd) {
    cmd->add_option("-r", r_text, "comma-separated row sums")->required();
    cmd->add_option("-c", c_text, "comma-separated column sums")->required();
  };

  CLI::App* feasible = app.add_subcommand("feasible", "Gale-Ryser feasibility of margins");
  add_margins(feasible);

  CLI::App* count = app.add_subcommand("count", "count the tables with the given margins");
  add_margins(count);

  CLI::App* enumerate = app.add_subcommand("enumerate", "list all tables in canonical order");
  add_margins(enumerate);
  enumerate->add_option("--format", format, "json|text");

  CLI::App* order = app.add_subcommand("order", "full relation of one kind");
  add_margins(order);
  order->add_option("--kind", kind_text, "bruhat|secondary|geometric");
  order->add_option("--sigma", sigma_text, "cocharacter permutation, one-line notation");
  order->add_option("--format", format, "json|csv");
  order->add_flag("--force-large", force_large, "build closures on very large families");

  CLI::App* hasse_cmd = app.add_subcommand("hasse", "transitive reduction of one kind");
  add_margins(hasse_cmd);
  hasse_cmd->add_option("--kind", kind_text, "bruhat|secondary|geometric");
  hasse_cmd->add_option("--sigma", sigma_text, "cocharacter permutation");
  hasse_cmd->add_option("--format", format, "dot|json|csv");
  hasse_cmd->add_flag("--force-large", force_large, "build closures on very large families");

  CLI::App* curves = app.add_subcommand("curves", "directed curve digraph with tangent weights");
  add_margins(curves);
  curves->add_option("--sigma", sigma_text, "cocharacter permutation");
  curves->add_option("--format", format, "dot|json");
  curves->add_flag("--all-moves", include_moves, "include the full block swap move listing");

  CLI::App* compare = app.add_subcommand("compare", "compare two or more relations");
  add_margins(compare);
  compare->add_option("--kinds", kinds_text, "comma-separated relation kinds");
  compare->add_option("--sigma", sigma_text, "cocharacter permutation");
  compare->add_option("--report-limit", report_limit, "max discrepancy samples per direction");
  compare->add_flag("--force-large", force_large, "build closures on very large families");

  CLI::App* verify = app.add_subcommand("verify", "sweep margin pairs and compare relations");
  verify->add_option("--max-total", max_total, "bound on the margin total");
  verify->add_option("--kinds", kinds_text, "comma-separated relation kinds");
  verify->add_option("--sigma", sigma_text, "cocharacter permutation");
  verify->add_option("--report-limit", report_limit, "max discrepancy samples per direction");
  verify->add_option("--jobs", jobs, "worker count (0 = hardware)");
  std::vector<std::string> pair_paths;
  verify->add_option("--pair", pair_paths, "two matrix files; check their family only")
      ->expected(2);

  CLI::App* brane = app.add_subcommand("brane", "brane-diagram calculus");
  brane->require_subcommand(1);
  CLI::App* brane_charges = brane->add_subcommand("charges", "charge vectors of a diagram");
  brane_charges->add_option("-d,--diagram", diagram_text, "diagram text, e.g. /2/3/5\\3\\2\\")
      ->required();
  CLI::App* brane_hw = brane->add_subcommand("hw", "Hanany-Witten step");
  brane_hw->add_option("-d,--diagram", diagram_text)->required();
  brane_hw->add_option("--pos", position, "1-based index of the left fivebrane of the pair")
      ->required();
  brane_hw->add_option("--dir", dir_text, "fwd|bwd");
  CLI::App* brane_sep = brane->add_subcommand("separated", "separated diagram of margins");
  add_margins(brane_sep);
  CLI::App* brane_ties = brane->add_subcommand("ties", "enumerate tie diagrams");
  brane_ties->add_option("-d,--diagram", diagram_text)->required();
  brane_ties->add_flag("--count", count_only, "print the count only");
  brane_ties->add_flag("--list", list_ties, "print the full list (default)");
  CLI::App* brane_t2b = brane->add_subcommand("tie2bct", "tie diagram to table");
  brane_t2b->add_option("-d,--diagram", diagram_text)->required();
  brane_t2b->add_option("--ties", ties_json, "tie JSON file, '-' for stdin, or inline JSON")
      ->required();
  CLI::App* brane_b2t = brane->add_subcommand("bct2tie", "table to tie diagram");
  brane_b2t->add_option("-d,--diagram", diagram_text)->required();
  brane_b2t->add_option("--matrix", matrix_path, "matrix file (text or JSON), '-' for stdin")
      ->required();

  CLI::App* resolve = app.add_subcommand("resolve", "column resolutions of a table");
  resolve->add_option("--matrix", matrix_path, "matrix file (text or JSON), '-' for stdin")
      ->required();
  resolve->add_option("--column", column, "1-based column to resolve");
  resolve->add_option("--split", split_text, "c',c'' with c'+c'' = column sum");
  resolve->add_flag("--maximal", maximal, "emit all maximal resolutions instead");

  CLI::App* export_cmd = app.add_subcommand("export", "compute an object and export it");
  add_margins(export_cmd);
  export_cmd->add_option("--what", what_text, "family|order|hasse|curves|interchanges");
  export_cmd->add_option("--kind", kind_text, "relation kind for order/hasse");
  export_cmd->add_option("--sigma", sigma_text, "cocharacter permutation");
  export_cmd->add_option("--format", format, "dot|json|csv");
  export_cmd->add_flag("--force-large", force_large, "build closures on very large families");

  CLI11_PARSE(app, argc, argv);

  try {
    std::optional<std::vector<int>> sigma;
    if (!sigma_text.empty()) sigma = parse_sigma(sigma_text);

    if (*feasible) {
      std::cout << (bct::gale_ryser_feasible(margins_from(r_text, c_text)) ? "feasible"
                                                                           : "infeasible")
                << "\n";
      return kExitOk;
    }

    if (*count) {
      Timer timer;
      const bct::BctFamily family = bct::enumerate_bcts(margins_from(r_text, c_text));
      log_family(family, timer);
      std::cout << family.size() << "\n";
      return kExitOk;
    }

    if (*enumerate) {
      Timer timer;
      const bct::BctFamily family = bct::enumerate_bcts(margins_from(r_text, c_text));
      log_family(family, timer);
      if (format == "text") {
        for (const bct::BinaryMatrix& m : family.members) std::cout << m.to_text() << "\n";
      } else if (format == "json") {
        std::cout << bct::family_to_json(family);
      } else {
        throw std::invalid_argument("enumerate: unknown format " + format);
      }
      return kExitOk;
    }

    if (*order || *hasse_cmd) {
      Timer timer;
      const bct::BctFamily family = bct::enumerate_bcts(margins_from(r_text, c_text));
      guard_large(family, force_large);
      const bct::FiniteRelation rel =
          bct::relation_of_kind(family, parse_kind(kind_text), spec_for(sigma, family));
      log_family(family, timer);
      if (*order) {
        if (format == "csv")
          std::cout << bct::relation_to_csv(rel);
        else if (format == "json")
          std::cout << bct::relation_to_json(family, rel);
        else
          throw std::invalid_argument("order: unknown format " + format);
      } else {
        const bct::HasseDiagram diagram = bct::hasse(rel);
        if (format == "dot")
          std::cout << bct::hasse_to_dot(family, diagram);
        else if (format == "json")
          std::cout << bct::hasse_to_json(family, diagram);
        else if (format == "csv")
          std::cout << bct::hasse_to_csv(family, diagram);
        else
          throw std::invalid_argument("hasse: unknown format " + format);
      }
      return kExitOk;
    }

    if (*curves) {
      Timer timer;
      const bct::BctFamily family = bct::enumerate_bcts(margins_from(r_text, c_text));
      const bct::CurveDigraph graph = bct::curve_digraph(family, spec_for(sigma, family));
      log_family(family, timer);
      if (format == "dot")
        std::cout << bct::curves_to_dot(family, graph);
      else if (format == "json")
        std::cout << bct::curves_to_json(family, graph, include_moves);
      else
        throw std::invalid_argument("curves: unknown format " + format);
      return kExitOk;
    }

    if (*compare) {
      Timer timer;
      const bct::BctFamily family = bct::enumerate_bcts(margins_from(r_text, c_text));
      guard_large(family, force_large);
      bct::SweepConfig config;
      config.kinds = parse_kinds(kinds_text);
      config.sigma = sigma;
      config.report_limit = report_limit;
      const bct::SweepPairResult result = bct::check_family(family, config);
      log_family(family, timer);
      bct::VerificationReport report;
      report.config = config;
      report.pairs.push_back(result);
      report.margin_pairs_scanned = 1;
      report.all_equal = result.equal;
      std::cout << bct::report_to_json(report);
      return result.equal ? kExitOk : kExitDiscrepancy;
    }

    if (*verify) {
      Timer timer;
      bct::SweepConfig config;
      config.max_total = max_total;
      config.kinds = parse_kinds(kinds_text);
      config.sigma = sigma;
      config.report_limit = report_limit;
      config.jobs = jobs;
      if (!pair_paths.empty()) {
        const bct::BinaryMatrix a = load_matrix(pair_paths[0]);
        const bct::BinaryMatrix b = load_matrix(pair_paths[1]);
        if (a.margins() != b.margins())
          throw std::invalid_argument("verify --pair: the two matrices have different margins");
        const bct::BctFamily family = bct::enumerate_bcts(a.margins());
        const int ia = *family.index_of(a);
        const int ib = *family.index_of(b);
        const bct::SweepPairResult result = bct::check_family(family, config);
        const bct::CocharacterSpec spec = spec_for(sigma, family);
        for (bct::RelationKind kind : config.kinds) {
          const bct::FiniteRelation rel = bct::relation_of_kind(family, kind, spec);
          std::cout << bct::to_string(kind) << ": A<=B " << (rel.leq(ia, ib) ? "true" : "false")
                    << ", B<=A " << (rel.leq(ib, ia) ? "true" : "false") << "\n";
        }
        log_family(family, timer);
        std::cout << (result.equal ? "relations equal" : "relations differ") << "\n";
        return result.equal ? kExitOk : kExitDiscrepancy;
      }
      const bct::VerificationReport report = bct::run_sweep(config);
      std::cerr << "families checked=" << report.pairs.size()
                << " elapsed=" << timer.seconds() << "s\n";
      std::cout << bct::report_to_json(report);
      return report.all_equal ? kExitOk : kExitDiscrepancy;
    }

    if (*brane_charges) {
      const bct::MarginPair margins = bct::charges(bct::parse_diagram(diagram_text));
      std::cout << "r:";
      for (int v : margins.row_sums) std::cout << " " << v;
      std::cout << "\nc:";
      for (int v : margins.col_sums) std::cout << " " << v;
      std::cout << "\n";
      return kExitOk;
    }

    if (*brane_hw) {
      const bct::BraneDiagram diagram = bct::parse_diagram(diagram_text);
      const bct::HwDirection dir = dir_text == "fwd" ? bct::HwDirection::forward
                                   : dir_text == "bwd"
                                       ? bct::HwDirection::backward
                                       : throw std::invalid_argument("--dir must be fwd or bwd");
      std::cout << bct::format_diagram(bct::hw_step(diagram, position - 1, dir)) << "\n";
      return kExitOk;
    }

    if (*brane_sep) {
      std::cout << bct::format_diagram(bct::separated_diagram(margins_from(r_text, c_text)))
                << "\n";
      return kExitOk;
    }

    if (*brane_ties) {
      Timer timer;
      const bct::BraneDiagram diagram = bct::parse_diagram(diagram_text);
      const auto ties = bct::enumerate_tie_diagrams(diagram);
      std::cerr << "tie diagrams=" << ties.size() << " elapsed=" << timer.seconds() << "s\n";
      if (count_only) {
        std::cout << ties.size() << "\n";
      } else {
        for (const bct::TieDiagram& t : ties) std::cout << bct::tie_to_json(t);
      }
      return kExitOk;
    }

    if (*brane_t2b) {
      const bct::BraneDiagram diagram = bct::parse_diagram(diagram_text);
      std::string text = ties_json;
      if (text.find('{') == std::string::npos) text = read_file_or_stdin(ties_json);
      std::cout << bct::tie_to_bct(diagram, bct::tie_from_json(text)).to_text();
      return kExitOk;
    }

    if (*brane_b2t) {
      const bct::BraneDiagram diagram = bct::parse_diagram(diagram_text);
      std::cout << bct::tie_to_json(bct::bct_to_tie(diagram, load_matrix(matrix_path)));
      return kExitOk;
    }

    if (*resolve) {
      const bct::BinaryMatrix m = load_matrix(matrix_path);
      if (maximal) {
        for (const bct::BinaryMatrix& res : bct::maximal_resolutions(m))
          std::cout << res.to_text() << "\n";
        return kExitOk;
      }
      if (split_text.empty()) throw std::invalid_argument("resolve: need --split or --maximal");
      const std::vector<int> split = parse_int_list(split_text);
      if (split.size() != 2) throw std::invalid_argument("--split takes two parts");
      const bct::ChargeResolution res{column - 1, split[0], split[1]};
      for (const bct::ResolvedMatrix& rm : bct::column_resolutions(m, res))
        std::cout << rm.matrix.to_text() << "\n";
      return kExitOk;
    }

    if (*export_cmd) {
      Timer timer;
      const bct::BctFamily family = bct::enumerate_bcts(margins_from(r_text, c_text));
      log_family(family, timer);
      if (what_text == "family") {
        if (format != "json") throw std::invalid_argument("export family: json only");
        std::cout << bct::family_to_json(family);
        return kExitOk;
      }
      if (what_text == "interchanges") {
        if (format != "json") throw std::invalid_argument("export interchanges: json only");
        std::cout << bct::interchange_graph_to_json(family, bct::interchange_graph(family));
        return kExitOk;
      }
      if (what_text == "curves") {
        const bct::CurveDigraph graph = bct::curve_digraph(family, spec_for(sigma, family));
        if (format == "dot")
          std::cout << bct::curves_to_dot(family, graph);
        else if (format == "json")
          std::cout << bct::curves_to_json(family, graph, include_moves);
        else
          throw std::invalid_argument("export curves: unknown format " + format);
        return kExitOk;
      }
      guard_large(family, force_large);
      const bct::FiniteRelation rel =
          bct::relation_of_kind(family, parse_kind(kind_text), spec_for(sigma, family));
      if (what_text == "order") {
        if (format == "csv")
          std::cout << bct::relation_to_csv(rel);
        else if (format == "json")
          std::cout << bct::relation_to_json(family, rel);
        else
          throw std::invalid_argument("export order: unknown format " + format);
        return kExitOk;
      }
      if (what_text == "hasse") {
        const bct::HasseDiagram diagram = bct::hasse(rel);
        if (format == "dot")
          std::cout << bct::hasse_to_dot(family, diagram);
        else if (format == "json")
          std::cout << bct::hasse_to_json(family, diagram);
        else if (format == "csv")
          std::cout << bct::hasse_to_csv(family, diagram);
        else
          throw std::invalid_argument("export hasse: unknown format " + format);
        return kExitOk;
      }
      throw std::invalid_argument("export: unknown object " + what_text);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}
