// Command-line front end: every subcommand reads JSON (or built-in names),
// runs one library query, and prints a JSON report to stdout.
//
// Exit codes: 0 success, 1 parse/usage error, 2 precondition not
// applicable, 3 budget or size limit exceeded.

#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "latmat/boolrel.hpp"
#include "latmat/distmat.hpp"
#include "latmat/fixpoint.hpp"
#include "latmat/golden.hpp"
#include "latmat/io.hpp"
#include "latmat/lattice.hpp"
#include "latmat/matrix.hpp"
#include "latmat/spectrum.hpp"

namespace {

using latmat::BoolRel;
using latmat::LatMatrix;
using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw latmat::ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// A --lattice argument is a file path, a built-in name, or inline JSON.
std::shared_ptr<const latmat::Lattice> load_lattice(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    return latmat::parse_lattice(read_file(arg));
  }
  return latmat::resolve_lattice(arg);
}

LatMatrix load_matrix(const std::string& path,
                      const std::string& lattice_arg) {
  std::shared_ptr<const latmat::Lattice> expected;
  if (!lattice_arg.empty()) expected = load_lattice(lattice_arg);
  return latmat::parse_matrix_file(read_file(path), expected);
}

BoolRel load_relation(const std::string& path) {
  return latmat::parse_relation(read_file(path));
}

void emit(const json& j, bool pretty) {
  if (pretty) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << j.dump() << "\n";
  }
}

json spectrum_report_to_json(
    const latmat::SpectrumReport<LatMatrix>& report,
    const std::vector<latmat::Bracketing>& brackets) {
  json j;
  j["k"] = report.k;
  j["mode"] = report.mode == latmat::SpectrumMode::witness ? "witness"
                                                           : "exhaustive";
  j["count"] = report.count;
  j["catalan"] = report.catalan_bound;
  j["bracketings"] = json::array();
  for (const auto& b : brackets) j["bracketings"].push_back(b.to_string());
  j["witnesses"] = json::array();
  for (const auto& w : report.witnesses) {
    json wj;
    wj["p"] = w.p;
    wj["q"] = w.q;
    wj["assignment"] = json::array();
    for (const auto& m : w.assignment) {
      wj["assignment"].push_back(latmat::matrix_to_json(m));
    }
    j["witnesses"].push_back(std::move(wj));
  }
  return j;
}

json equivalence_to_json(const latmat::EquivalenceReport& r) {
  json j;
  j["only_zero_fixpoint"] = r.only_zero_fixpoint;
  j["limit_is_zero"] = r.limit_is_zero;
  j["nilpotent"] = r.nilpotent;
  j["nth_power_zero"] = r.nth_power_zero;
  j["triangularizable"] = r.triangularizable;
  j["permutation_upper_triangular"] = r.permutation_upper_triangular;
  j["verdict"] = r.verdict;
  if (r.witness) j["pi"] = latmat::permutation_to_json(*r.witness);
  return j;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"exact computation with square matrices over finite "
               "lattices"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  // lattice check | info
  auto* lattice_cmd = app.add_subcommand("lattice", "validate or describe a "
                                                    "lattice");
  lattice_cmd->require_subcommand(1);
  std::string lat_arg;
  auto* check_cmd = lattice_cmd->add_subcommand("check", "validate");
  check_cmd->add_option("--lattice", lat_arg, "file, name or JSON")
      ->required();
  auto* info_cmd = lattice_cmd->add_subcommand("info", "describe");
  info_cmd->add_option("--lattice", lat_arg, "file, name or JSON")
      ->required();

  // matmul
  auto* matmul_cmd = app.add_subcommand("matmul", "multiply two matrices");
  std::string mat_a, mat_b, matmul_lat;
  matmul_cmd->add_option("--a", mat_a, "left matrix file")->required();
  matmul_cmd->add_option("--b", mat_b, "right matrix file")->required();
  matmul_cmd->add_option("--lattice", matmul_lat, "host lattice");

  // spectrum
  auto* spectrum_cmd = app.add_subcommand(
      "spectrum", "count bracketing-induced term functions");
  std::string spec_lat, spec_mode = "exhaustive";
  int spec_n = 2, spec_k = 3;
  std::uint64_t spec_budget = 10'000'000;
  spectrum_cmd->add_option("--lattice", spec_lat, "host lattice")->required();
  spectrum_cmd->add_option("--n", spec_n, "matrix dimension")->required();
  spectrum_cmd->add_option("--k", spec_k, "product size")->required();
  spectrum_cmd->add_option("--mode", spec_mode, "exhaustive|witness")
      ->check(CLI::IsMember({"exhaustive", "witness"}));
  spectrum_cmd->add_option("--budget", spec_budget, "evaluation budget");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "classify a matrix");
  std::string cls_mat, cls_lat;
  classify_cmd->add_option("--matrix", cls_mat, "matrix file")->required();
  classify_cmd->add_option("--lattice", cls_lat, "host lattice");

  // classify-rel
  auto* clsrel_cmd =
      app.add_subcommand("classify-rel", "classify a binary relation");
  std::string rel_path;
  bool rel_dot = false;
  clsrel_cmd->add_option("--rel", rel_path, "relation file")->required();
  clsrel_cmd->add_flag("--dot", rel_dot, "emit GraphViz instead of JSON");

  // greens
  auto* greens_cmd =
      app.add_subcommand("greens", "Green's relations between two relations");
  std::string greens_a, greens_b;
  bool greens_oracle_flag = false;
  greens_cmd->add_option("--a", greens_a, "first relation file")->required();
  greens_cmd->add_option("--b", greens_b, "second relation file")->required();
  greens_cmd->add_flag("--oracle", greens_oracle_flag,
                       "also run the exhaustive oracle (n <= 3)");

  // hclass
  auto* hclass_cmd = app.add_subcommand(
      "hclass", "H-class of a reduced idempotent relation");
  std::string hclass_rel;
  hclass_cmd->add_option("--rel", hclass_rel, "relation file")->required();

  // hclass-chain
  auto* hchain_cmd = app.add_subcommand(
      "hclass-chain", "H-class of a chain idempotent with partial-order "
                      "cuts");
  std::string hchain_mat, hchain_lat;
  hchain_cmd->add_option("--matrix", hchain_mat, "matrix file")->required();
  hchain_cmd->add_option("--lattice", hchain_lat, "host lattice");

  // invert
  auto* invert_cmd = app.add_subcommand("invert", "right inverses of a "
                                                  "matrix");
  std::string inv_mat, inv_lat;
  bool inv_exhaustive = false;
  std::uint64_t inv_budget = 1'000'000;
  invert_cmd->add_option("--matrix", inv_mat, "matrix file")->required();
  invert_cmd->add_option("--lattice", inv_lat, "host lattice");
  invert_cmd->add_flag("--exhaustive", inv_exhaustive,
                       "scan all candidates instead of the permutation "
                       "criterion");
  invert_cmd->add_option("--budget", inv_budget, "candidate budget");

  // triangularize
  auto* tri_cmd = app.add_subcommand(
      "triangularize", "conjugate a nilpotent matrix to strictly upper "
                       "triangular form");
  std::string tri_mat, tri_lat;
  tri_cmd->add_option("--matrix", tri_mat, "matrix file")->required();
  tri_cmd->add_option("--lattice", tri_lat, "host lattice");

  // fixpoint
  auto* fix_cmd = app.add_subcommand("fixpoint", "greatest solution of "
                                                 "x*A = x");
  std::string fix_mat, fix_lat, fix_start;
  bool fix_all = false, fix_report = false;
  std::uint64_t fix_budget = 1'000'000;
  fix_cmd->add_option("--matrix", fix_mat, "matrix file")->required();
  fix_cmd->add_option("--lattice", fix_lat, "host lattice");
  fix_cmd->add_option("--start", fix_start,
                      "start vector file (reports the eventual cycle)");
  fix_cmd->add_flag("--all", fix_all, "also list every solution");
  fix_cmd->add_flag("--report", fix_report,
                    "include the six-way nilpotency equivalence");
  fix_cmd->add_option("--budget", fix_budget, "scan budget");

  // golden
  auto* golden_cmd =
      app.add_subcommand("golden", "replay the worked-example corpus");
  bool golden_mutate = false;
  golden_cmd->add_flag("--mutate-matmul", golden_mutate,
                       "swap meet and join in the product (self-test; the "
                       "suite must fail)");

  // let --pretty appear after any subcommand
  const std::function<void(CLI::App*)> allow_parent_flags =
      [&](CLI::App* cmd) {
        for (CLI::App* sub : cmd->get_subcommands(nullptr)) {
          sub->fallthrough();
          allow_parent_flags(sub);
        }
      };
  allow_parent_flags(&app);

  CLI11_PARSE(app, argc, argv);

  if (check_cmd->parsed()) {
    json j;
    try {
      const auto L = load_lattice(lat_arg);
      j["valid"] = true;
      j["size"] = L->size();
      j["distributive"] = L->distributive();
      const auto irr = L->bound_irreducibility();
      j["bottom_meet_irreducible"] = irr.bottom_meet_irreducible;
      j["top_join_irreducible"] = irr.top_join_irreducible;
    } catch (const latmat::NotALattice& e) {
      j = {{"valid", false}, {"error", e.what()}};
    } catch (const latmat::Unbounded& e) {
      j = {{"valid", false}, {"error", e.what()}};
    } catch (const latmat::InconsistentTables& e) {
      j = {{"valid", false}, {"error", e.what()}};
    }
    emit(j, pretty);
    return 0;
  }

  if (info_cmd->parsed()) {
    const auto L = load_lattice(lat_arg);
    json j = latmat::lattice_to_json(*L);
    j["size"] = L->size();
    j["bottom"] = L->label(L->bottom());
    j["top"] = L->label(L->top());
    j["distributive"] = L->distributive();
    j["chain"] = L->is_chain();
    const auto irr = L->bound_irreducibility();
    j["bottom_meet_irreducible"] = irr.bottom_meet_irreducible;
    j["top_join_irreducible"] = irr.top_join_irreducible;
    json ji = json::array();
    for (latmat::Elem a : L->join_irreducibles()) ji.push_back(L->label(a));
    j["join_irreducibles"] = ji;
    emit(j, pretty);
    return 0;
  }

  if (matmul_cmd->parsed()) {
    const auto A = load_matrix(mat_a, matmul_lat);
    const auto B = load_matrix(mat_b, matmul_lat);
    emit(latmat::matrix_file_to_json(A * B), pretty);
    return 0;
  }

  if (spectrum_cmd->parsed()) {
    const auto L = load_lattice(spec_lat);
    const latmat::MatrixGroupoid g(L, spec_n);
    latmat::SpectrumBudget budget;
    budget.max_evaluations = spec_budget;
    const auto mode = spec_mode == "witness" ? latmat::SpectrumMode::witness
                                             : latmat::SpectrumMode::exhaustive;
    const auto report = latmat::spectrum_count(g, spec_k, mode, budget);
    emit(spectrum_report_to_json(report,
                                 latmat::enumerate_bracketings(spec_k)),
         pretty);
    return 0;
  }

  if (classify_cmd->parsed()) {
    const auto A = load_matrix(cls_mat, cls_lat);
    const auto r = latmat::classify(A);
    json j;
    j["distributive"] = r.distributive;
    j["idempotent"] = r.idempotent ? json(*r.idempotent) : json(nullptr);
    j["nilpotent"] = r.nilpotent ? json(*r.nilpotent) : json(nullptr);
    j["permutation"] = r.permutation;
    j["bottom_meet_irreducible"] = r.bounds.bottom_meet_irreducible;
    j["top_join_irreducible"] = r.bounds.top_join_irreducible;
    emit(j, pretty);
    return 0;
  }

  if (clsrel_cmd->parsed()) {
    const auto rel = load_relation(rel_path);
    if (rel_dot) {
      std::cout << latmat::relation_to_dot(rel);
      return 0;
    }
    const auto analysis = latmat::analyze_pseudo_order(rel);
    json j;
    j["n"] = rel.dim();
    j["idempotent"] = latmat::is_idempotent_rel(rel);
    j["pseudo_order"] = analysis.verdict;
    switch (analysis.failure) {
      case latmat::PseudoOrderFailure::none: j["failure"] = nullptr; break;
      case latmat::PseudoOrderFailure::transitivity:
        j["failure"] = "transitivity";
        break;
      case latmat::PseudoOrderFailure::condition_a: j["failure"] = "a"; break;
      case latmat::PseudoOrderFailure::condition_b: j["failure"] = "b"; break;
    }
    json parking = json::array();
    for (int i = 0; i < rel.dim(); ++i) {
      if ((analysis.park >> i) & 1u) parking.push_back(i + 1);
    }
    j["parking"] = parking;
    j["routes"] = latmat::check_pseudo_order_routes(rel);
    emit(j, pretty);
    return 0;
  }

  if (greens_cmd->parsed()) {
    const auto A = load_relation(greens_a);
    const auto B = load_relation(greens_b);
    json j;
    j["L"] = latmat::greens(A, B, latmat::GreensRelation::L);
    j["R"] = latmat::greens(A, B, latmat::GreensRelation::R);
    j["H"] = latmat::greens(A, B, latmat::GreensRelation::H);
    j["D"] = latmat::greens(A, B, latmat::GreensRelation::D);
    if (greens_oracle_flag) {
      json o;
      o["L"] = latmat::greens_oracle(A, B, latmat::GreensRelation::L);
      o["R"] = latmat::greens_oracle(A, B, latmat::GreensRelation::R);
      o["H"] = latmat::greens_oracle(A, B, latmat::GreensRelation::H);
      o["D"] = latmat::greens_oracle(A, B, latmat::GreensRelation::D);
      j["oracle"] = o;
    }
    emit(j, pretty);
    return 0;
  }

  if (hclass_cmd->parsed()) {
    const auto rel = load_relation(hclass_rel);
    const auto members = latmat::hclass_of_reduced_idempotent(rel);
    json j;
    j["size"] = members.size();
    j["members"] = json::array();
    for (const auto& m : members) {
      j["members"].push_back(latmat::relation_to_json(m));
    }
    emit(j, pretty);
    return 0;
  }

  if (hchain_cmd->parsed()) {
    const auto A = load_matrix(hchain_mat, hchain_lat);
    const auto members = latmat::hclass_chain(A);
    json j;
    j["size"] = members.size();
    j["members"] = json::array();
    for (const auto& m : members) {
      j["members"].push_back(latmat::matrix_to_json(m));
    }
    emit(j, pretty);
    return 0;
  }

  if (invert_cmd->parsed()) {
    const auto A = load_matrix(inv_mat, inv_lat);
    const auto result = latmat::invert(
        A, inv_exhaustive ? latmat::InvertMode::exhaustive
                          : latmat::InvertMode::theorem,
        inv_budget);
    json j;
    j["mode"] = inv_exhaustive ? "exhaustive" : "theorem";
    j["invertible"] = !result.inverses.empty();
    j["inverses"] = json::array();
    for (const auto& m : result.inverses) {
      j["inverses"].push_back(latmat::matrix_to_json(m));
    }
    emit(j, pretty);
    return 0;
  }

  if (tri_cmd->parsed()) {
    const auto A = load_matrix(tri_mat, tri_lat);
    const auto pi = latmat::triangularize(A);
    json j;
    j["pi"] = latmat::permutation_to_json(pi);
    j["triangular"] = latmat::matrix_to_json(latmat::conjugate(A, pi));
    emit(j, pretty);
    return 0;
  }

  if (fix_cmd->parsed()) {
    const auto A = load_matrix(fix_mat, fix_lat);
    json j;
    if (!fix_start.empty()) {
      const auto start = latmat::parse_vector(
          json::parse(read_file(fix_start)), A.lattice_ptr());
      const auto orbit = latmat::iterate_orbit(start, A);
      j["start"] = latmat::vector_to_json(start);
      j["preperiod"] = orbit.preperiod;
      j["period"] = orbit.period;
      json cycle = json::array();
      for (std::size_t i = static_cast<std::size_t>(orbit.preperiod);
           i < orbit.states.size(); ++i) {
        cycle.push_back(latmat::vector_to_json(orbit.states[i]));
      }
      j["cycle"] = cycle;
      if (orbit.period == 1) {
        j["limit"] = latmat::vector_to_json(
            orbit.states[static_cast<std::size_t>(orbit.preperiod)]);
      }
      emit(j, pretty);
      return 0;
    }
    const auto fp = latmat::greatest_fixpoint(A);
    j["limit"] = latmat::vector_to_json(fp.limit);
    j["steps"] = fp.steps;
    j["nonzero"] = latmat::has_nonzero_fixpoint(A);
    if (fix_all) {
      json sols = json::array();
      for (const auto& x : latmat::solve_all_fixpoints(A, fix_budget)) {
        sols.push_back(latmat::vector_to_json(x));
      }
      j["solutions"] = sols;
    }
    if (fix_report) {
      j["equivalence"] =
          equivalence_to_json(latmat::equivalence_report(A, fix_budget));
    }
    emit(j, pretty);
    return 0;
  }

  if (golden_cmd->parsed()) {
    const auto summary = latmat::run_golden_suite(golden_mutate);
    json j;
    j["total"] = summary.total;
    j["passed"] = summary.passed;
    j["failed"] = summary.total - summary.passed;
    j["cases"] = json::array();
    for (const auto& r : summary.results) {
      json c;
      c["id"] = r.meta.id;
      c["topic"] = r.meta.topic;
      c["pass"] = r.pass;
      if (!r.pass) c["detail"] = r.detail;
      j["cases"].push_back(std::move(c));
    }
    emit(j, pretty);
    return summary.passed == summary.total || golden_mutate ? 0 : 2;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const latmat::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const latmat::SizeLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const latmat::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const latmat::UnknownElement& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const latmat::NotALattice& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const latmat::Unbounded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const latmat::InconsistentTables& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const latmat::DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const latmat::LatticeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const latmat::Error& e) {
    // remaining library errors are precondition failures
    std::cerr << "not applicable: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
