#include "posalg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "posalg/gl.hpp"
#include "posalg/hecke.hpp"
#include "posalg/search.hpp"
#include "posalg/serialize.hpp"

namespace posalg {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kToolVersion = "0.1.0";

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TwoAlgebra build_from_spec_string(const std::string& spec) {
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
      if (c == sep) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
    return parts;
  };
  auto parts = split(spec, ':');
  if (parts[0] == "a_lambda" && parts.size() == 2)
    return a_lambda(parse_rational(parts[1]));
  if (parts[0] == "group" && parts.size() >= 2) {
    const std::string& kind = parts[1];
    if (kind == "cyclic" && parts.size() == 3)
      return group_bialgebra(build_group(cyclic_spec(std::stol(parts[2]))));
    if (kind == "abelian" && parts.size() == 3) {
      std::vector<long> factors;
      for (const auto& f : split(parts[2], ',')) factors.push_back(std::stol(f));
      return group_bialgebra(build_group(abelian_spec(factors)));
    }
    if (kind == "symmetric" && parts.size() == 3)
      return group_bialgebra(build_group(symmetric_spec(std::stol(parts[2]))));
    if (kind == "dihedral" && parts.size() == 3)
      return group_bialgebra(build_group(dihedral_spec(std::stol(parts[2]))));
    if (kind == "quaternion" && parts.size() == 2)
      return group_bialgebra(build_group(quaternion_spec()));
    if (kind == "alternating4" && parts.size() == 2)
      return group_bialgebra(build_group(alternating4_spec()));
  }
  if (parts[0] == "isg" && parts.size() == 3) {
    long n = std::stol(parts[2]);
    if (parts[1] == "I")
      return semigroup_bialgebra(symmetric_inverse_semigroup(n)).algebra;
    if (parts[1] == "I1")
      return semigroup_bialgebra(matrix_unit_semigroup(n)).algebra;
  }
  throw Error("unrecognized builder spec '" + spec + "'");
}

TwoAlgebra load_target(const std::string& target) {
  if (target.rfind("a_lambda:", 0) == 0 || target.rfind("group:", 0) == 0 ||
      target.rfind("isg:", 0) == 0)
    return build_from_spec_string(target);
  return parse_2alg(read_file(target));
}

struct ReportBuilder {
  ordered_json j;
  std::chrono::steady_clock::time_point start;

  explicit ReportBuilder(ordered_json command) {
    start = std::chrono::steady_clock::now();
    j["schema_version"] = 1;
    j["tool"] = "posalg";
    j["version"] = kToolVersion;
    j["command"] = std::move(command);
  }
  std::string finish() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    j["elapsed_ms"] = ms;
    return j.dump(2) + "\n";
  }
};

int worst_exit(int a, int b) { return std::max(a, b); }

int verdict_exit(const Verdict& v) {
  switch (v.status) {
    case Status::Holds: return 0;
    case Status::Fails: return 1;
    default: return 2;
  }
}

ordered_json verdict_entry(const std::string& check, const Verdict& v) {
  return ordered_json::parse(verdict_json(check, v));
}

StructureTensor hecke_mult_cached(long n, const Rational& q) {
  const char* dir = std::getenv("POSALG_CACHE");
  std::string path;
  if (dir && *dir) {
    std::string qs = to_string(q);
    for (auto& c : qs)
      if (c == '/') c = '_';
    path = std::string(dir) + "/hecke_n" + std::to_string(n) + "_q" + qs +
           ".json";
    std::ifstream in(path);
    if (in) {
      std::ostringstream buf;
      buf << in.rdbuf();
      try {
        return parse_tensor(buf.str());
      } catch (const Error&) {
        // stale cache: rebuild
      }
    }
  }
  StructureTensor mult = build_hecke(n, q).mult;
  if (!path.empty()) {
    std::ofstream out(path);
    if (out) out << emit_tensor(mult);
  }
  return mult;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact-arithmetic workbench for positive 2-algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  app.add_option("--out", out_path, "write the report to a file");

  // verify
  auto* verify = app.add_subcommand("verify", "run checks on a 2alg file");
  std::string verify_file;
  std::vector<std::string> verify_checks;
  bool verify_all = false;
  verify->add_option("file", verify_file, "2alg input")->required();
  verify->add_option("--check", verify_checks,
                     "validate|involutive|bialgebra|semisimple-algebra|"
                     "semisimple-coalgebra|positivity|homogeneity|positive2");
  verify->add_flag("--all", verify_all, "run every check");

  // build
  auto* build = app.add_subcommand("build", "emit a 2alg file for a catalog object");
  std::string build_spec;
  bool build_dual = false;
  build->add_option("spec", build_spec,
                    "group:cyclic:M | group:abelian:M1,M2 | group:symmetric:N |"
                    " group:dihedral:N | group:quaternion | group:alternating4 |"
                    " isg:I:N | isg:I1:N | a_lambda:P/Q")
      ->required();
  build->add_flag("--dual", build_dual, "emit the dual 2-algebra");

  // dual
  auto* dual_cmd = app.add_subcommand("dual", "emit the dual of a 2alg file");
  std::string dual_file;
  dual_cmd->add_option("file", dual_file, "2alg input")->required();

  // hecke
  auto* hecke_cmd = app.add_subcommand("hecke", "Hecke algebra operations");
  hecke_cmd->require_subcommand(1);
  auto* hecke_build = hecke_cmd->add_subcommand("build", "emit H_n(q) as 2alg");
  long hecke_n = 2;
  std::string hecke_q = "2";
  hecke_build->add_option("-n", hecke_n, "rank (2..5)")->required();
  hecke_build->add_option("-q", hecke_q, "deformation parameter P/Q")->required();
  auto* hecke_iwahori = hecke_cmd->add_subcommand(
      "iwahori", "verify the Borel double-coset dilation of H_n(p)");
  long iw_n = 2, iw_p = 2;
  hecke_iwahori->add_option("-n", iw_n, "rank (2..3)")->required();
  hecke_iwahori->add_option("-p", iw_p, "prime field size")->required();

  // dilate
  auto* dilate = app.add_subcommand("dilate", "dilation searches");
  dilate->require_subcommand(1);
  auto* dilate_strict = dilate->add_subcommand("strict", "strict dilation search");
  std::string strict_target;
  long strict_order = 8;
  long jobs = 0;
  dilate_strict->add_option("--target", strict_target,
                            "2alg file or builder spec (e.g. a_lambda:1/2)")
      ->required();
  dilate_strict->add_option("--max-order", strict_order, "catalog bound");
  dilate_strict->add_option("--jobs", jobs, "worker threads (default: hardware)");
  auto* dilate_coarse = dilate->add_subcommand("coarse", "coarse-grain search");
  std::string coarse_lambda;
  std::string coarse_target;
  long coarse_order = 8;
  dilate_coarse->add_option("--lambda", coarse_lambda, "target lambda P/Q");
  dilate_coarse->add_option("--target", coarse_target, "2alg file target");
  dilate_coarse->add_option("--max-order", coarse_order, "abelian catalog bound");

  // census
  auto* census = app.add_subcommand("census", "lambda census over the catalog");
  long census_order = 8;
  long census_jobs = 0;
  census->add_option("--max-order", census_order, "catalog bound");
  census->add_option("--jobs", census_jobs, "worker threads");

  // recover
  auto* recover = app.add_subcommand("recover",
                                     "reconstruct the inverse semigroup of a "
                                     "cocommutative involutive bialgebra");
  std::string recover_file;
  recover->add_option("file", recover_file, "2alg input")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    msg << e.what() << "\n";
    return {3, msg.str()};
  }

  auto deliver = [&](int code, std::string report) -> CliResult {
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) return {3, "cannot write '" + out_path + "'\n"};
      out << report;
      return {code, ""};
    }
    return {code, std::move(report)};
  };

  try {
    if (*verify) {
      std::vector<std::string> checks = verify_checks;
      if (verify_all || checks.empty())
        checks = {"validate",           "involutive", "bialgebra",
                  "semisimple-algebra", "semisimple-coalgebra",
                  "positivity",         "homogeneity", "positive2"};
      TwoAlgebra a = parse_2alg(read_file(verify_file));
      ReportBuilder report(
          {{"verb", "verify"}, {"file", verify_file}, {"checks", checks}});
      ordered_json results = ordered_json::array();
      int code = 0;
      for (const auto& name : checks) {
        if (name == "validate") {
          Verdict v = validate_2_algebra(a);
          code = worst_exit(code, verdict_exit(v));
          results.push_back(verdict_entry(name, v));
        } else if (name == "involutive") {
          Verdict v = check_involutive(a);
          code = worst_exit(code, verdict_exit(v));
          results.push_back(verdict_entry(name, v));
        } else if (name == "bialgebra") {
          Verdict v = is_bialgebra(a);
          code = worst_exit(code, verdict_exit(v));
          results.push_back(verdict_entry(name, v));
        } else if (name == "semisimple-algebra") {
          Verdict v = is_semisimple(a, Side::Algebra);
          code = worst_exit(code, verdict_exit(v));
          results.push_back(verdict_entry(name, v));
        } else if (name == "semisimple-coalgebra") {
          Verdict v = is_semisimple(a, Side::Coalgebra);
          code = worst_exit(code, verdict_exit(v));
          results.push_back(verdict_entry(name, v));
        } else if (name == "positivity") {
          PositivityVerdict p = check_positivity(a);
          code = worst_exit(code, verdict_exit(p.mult));
          code = worst_exit(code, verdict_exit(p.comult));
          results.push_back(verdict_entry("positivity-mult", p.mult));
          results.push_back(verdict_entry("positivity-comult", p.comult));
        } else if (name == "homogeneity") {
          Verdict v = check_homogeneity(a);
          code = worst_exit(code, verdict_exit(v));
          results.push_back(verdict_entry(name, v));
        } else if (name == "positive2") {
          Verdict v = check_positive_2_algebra(a);
          code = worst_exit(code, verdict_exit(v));
          results.push_back(verdict_entry(name, v));
        } else {
          return {3, "unknown check '" + name + "'\n"};
        }
      }
      report.j["checks"] = results;
      return deliver(code, report.finish());
    }

    if (*build) {
      TwoAlgebra a = build_from_spec_string(build_spec);
      if (build_dual) a = dual(a);
      return deliver(0, emit_2alg(a));
    }

    if (*dual_cmd) {
      TwoAlgebra a = parse_2alg(read_file(dual_file));
      return deliver(0, emit_2alg(dual(a)));
    }

    if (*hecke_build) {
      Rational q = parse_rational(hecke_q);
      HeckeAlgebra h = build_hecke(hecke_n, q);
      h.mult = hecke_mult_cached(hecke_n, q);
      return deliver(0, emit_2alg(hecke_two_algebra(h)));
    }

    if (*hecke_iwahori) {
      ReportBuilder report(
          {{"verb", "hecke iwahori"}, {"n", iw_n}, {"p", iw_p}});
      IwahoriReport r = iwahori_check(iw_n, iw_p);
      report.j["result"] = verdict_entry("iwahori", r.verdict);
      report.j["identities_checked"] = r.identities_checked;
      ordered_json blocks = ordered_json::array();
      for (size_t i = 0; i < r.block_sizes.size(); ++i)
        blocks.push_back({{"cell", r.block_labels[i]},
                          {"size", r.block_sizes[i]}});
      report.j["blocks"] = blocks;
      return deliver(verdict_exit(r.verdict), report.finish());
    }

    if (*dilate_strict) {
      TwoAlgebra target = load_target(strict_target);
      ReportBuilder report({{"verb", "dilate strict"},
                            {"target", strict_target},
                            {"max_order", strict_order},
                            {"jobs", jobs}});
      StrictSearchResult found = strict_dilation_search(target, strict_order, jobs);
      ordered_json list = ordered_json::array();
      for (const auto& w : found.witnesses)
        list.push_back(ordered_json::parse(witness_json(w)));
      report.j["bounds"] = {{"max_order", strict_order}};
      report.j["witnesses"] = list;
      report.j["count"] = found.witnesses.size();
      if (!found.structured_only.empty()) {
        report.j["structured_only_members"] = found.structured_only;
        report.j["note"] =
            "some members were searched through the structured generators "
            "only; an empty result is not exhaustive for them";
      }
      return deliver(found.witnesses.empty() ? 1 : 0, report.finish());
    }

    if (*dilate_coarse) {
      if (coarse_lambda.empty() == coarse_target.empty())
        return {3, "dilate coarse needs exactly one of --lambda or --target\n"};
      ReportBuilder report({{"verb", "dilate coarse"},
                            {"lambda", coarse_lambda},
                            {"target", coarse_target},
                            {"max_order", coarse_order}});
      std::optional<CoarseGrainWitness> w;
      if (!coarse_lambda.empty())
        w = coarse_grain_search_lambda(parse_rational(coarse_lambda),
                                       coarse_order);
      else
        w = coarse_grain_search(load_target(coarse_target), coarse_order);
      report.j["bounds"] = {{"max_order", coarse_order}};
      if (w) {
        report.j["witnesses"] =
            ordered_json::array({ordered_json::parse(coarse_witness_json(*w))});
      } else {
        report.j["witnesses"] = ordered_json::array();
        report.j["note"] = "no witness within bounds";
      }
      return deliver(w ? 0 : 1, report.finish());
    }

    if (*census) {
      ReportBuilder report({{"verb", "census"},
                            {"max_order", census_order},
                            {"jobs", census_jobs}});
      CensusReport r = lambda_census(census_order, census_jobs);
      ordered_json rows = ordered_json::array();
      for (const auto& row : r.rows) {
        ordered_json rj;
        rj["lambda"] = to_string(row.lambda);
        if (row.predicate_applicable) {
          rj["predicate"] =
              row.prediction.strict_predicted
                  ? ordered_json{{"strict_predicted", true},
                                 {"k", row.prediction.k},
                                 {"s", row.prediction.s}}
                  : ordered_json{{"strict_predicted", false}};
        } else {
          rj["predicate"] = "not applicable";
        }
        ordered_json sg = ordered_json::array();
        for (const auto& w : row.strict_group)
          sg.push_back(ordered_json::parse(witness_json(w)));
        rj["strict_group_witnesses"] = sg;
        ordered_json ss = ordered_json::array();
        for (const auto& w : row.strict_semigroup)
          ss.push_back(ordered_json::parse(witness_json(w)));
        rj["strict_semigroup_witnesses"] = ss;
        if (row.nonstrict)
          rj["nonstrict_witness"] =
              ordered_json::parse(coarse_witness_json(*row.nonstrict));
        rows.push_back(rj);
      }
      report.j["rows"] = rows;
      report.j["discrepancies"] = r.discrepancies;
      return deliver(0, report.finish());
    }

    if (*recover) {
      TwoAlgebra a = parse_2alg(read_file(recover_file));
      ReportBuilder report({{"verb", "recover"}, {"file", recover_file}});
      RecoveredSemigroup r = recover_semigroup(a);
      report.j["result"] = verdict_entry("recover", r.verdict);
      if (r.verdict.holds()) {
        // monoid serialization: {size, unit?, zero?, table, inv?, labels}
        report.j["size"] = r.monoid.size;
        if (r.monoid.unit) report.j["unit"] = *r.monoid.unit;
        if (r.monoid.zero) report.j["zero"] = *r.monoid.zero;
        report.j["table"] = r.monoid.table;
        report.j["inv"] = r.inv;
        report.j["labels"] = r.monoid.labels;
      }
      return deliver(verdict_exit(r.verdict), report.finish());
    }
  } catch (const ParseError& e) {
    return {3, std::string("parse error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {3, std::string("error: ") + e.what() + "\n"};
  }
  return {3, "no subcommand\n"};
}

}  // namespace posalg
