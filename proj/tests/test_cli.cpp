#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "builders.hpp"
#include "posalg/cli.hpp"
#include "posalg/hecke.hpp"
#include "posalg/search.hpp"
#include "posalg/serialize.hpp"

using namespace posalg;

namespace {

std::string temp_2alg(const TwoAlgebra& a, const std::string& name) {
  std::string path = "/tmp/posalg_test_" + name + ".2alg";
  std::ofstream out(path);
  out << emit_2alg(a);
  return path;
}

}  // namespace

TEST_CASE("round trip over the catalog") {
  for (const auto& member : full_catalog(12)) {
    if (member.semigroup.size() > 12) continue;
    TwoAlgebra a = semigroup_bialgebra(member.semigroup).algebra;
    CHECK(parse_2alg(emit_2alg(a)) == a);
    TwoAlgebra d = dual(a);
    CHECK(parse_2alg(emit_2alg(d)) == d);
  }
  TwoAlgebra h = hecke_two_algebra(build_hecke(3, make_rational(5, 2)));
  CHECK(parse_2alg(emit_2alg(h)) == h);
  TwoAlgebra al = a_lambda(make_rational(1, 2));
  CHECK(parse_2alg(emit_2alg(al)) == al);
}

TEST_CASE("strict schema") {
  std::string good = emit_2alg(a_lambda(make_rational(1, 2)));

  // malformed rational names the field
  {
    std::string bad = good;
    auto pos = bad.find("\"1/2\"");
    bad.replace(pos, 5, "\"1/0\"");
    bool threw = false;
    try {
      parse_2alg(bad);
    } catch (const ParseError& e) {
      threw = true;
      CHECK(std::string(e.what()).find("mult") != std::string::npos);
      CHECK(std::string(e.what()).find("zero denominator") != std::string::npos);
    }
    CHECK(threw);
  }

  // unknown top-level key rejected
  {
    std::string bad = good;
    auto pos = bad.find("\"dim\"");
    bad.insert(pos, "\"extra\": 1,\n  ");
    bool threw = false;
    try {
      parse_2alg(bad);
    } catch (const ParseError& e) {
      threw = true;
      CHECK(std::string(e.what()).find("extra") != std::string::npos);
    }
    CHECK(threw);
  }

  CHECK_THROWS_AS(parse_2alg("{\"dim\": 1}"), ParseError);
  CHECK_THROWS_AS(parse_2alg("not json"), ParseError);
}

TEST_CASE("verify exit codes") {
  std::string good = temp_2alg(cyclic_bialgebra(4), "z4");
  CliResult ok = run_cli({"verify", good, "--all"});
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("\"schema_version\": 1") != std::string::npos);
  CHECK(ok.output.find("holds") != std::string::npos);

  // H2(1/2) fails positivity -> exit 1
  std::string bad =
      temp_2alg(hecke_two_algebra(build_hecke(2, make_rational(1, 2))), "h2half");
  CliResult fail = run_cli({"verify", bad, "--all"});
  CHECK(fail.exit_code == 1);

  // inconclusive-only: a positivity question no tier decides
  TwoAlgebra s4q = hecke_two_algebra(build_hecke(3, make_rational(1, 2)));
  std::string inc = temp_2alg(s4q, "h3half");
  CliResult inconclusive = run_cli({"verify", inc, "--check", "positivity"});
  CHECK(inconclusive.exit_code == 2);

  CliResult usage = run_cli({"verify", "/nonexistent.2alg"});
  CHECK(usage.exit_code == 3);
  CliResult unknown_flag = run_cli({"verify", good, "--frobnicate"});
  CHECK(unknown_flag.exit_code == 3);
}

TEST_CASE("builder and dual subcommands") {
  CliResult built = run_cli({"build", "group:cyclic:4"});
  REQUIRE(built.exit_code == 0);
  CHECK(parse_2alg(built.output) == cyclic_bialgebra(4));

  CliResult lam = run_cli({"build", "a_lambda:1/3"});
  REQUIRE(lam.exit_code == 0);
  CHECK(parse_2alg(lam.output) == a_lambda(make_rational(1, 3)));

  std::string path = temp_2alg(cyclic_bialgebra(3), "z3");
  CliResult dualed = run_cli({"dual", path});
  REQUIRE(dualed.exit_code == 0);
  CHECK(parse_2alg(dualed.output) == dual(cyclic_bialgebra(3)));

  CliResult bad = run_cli({"build", "group:nonsense"});
  CHECK(bad.exit_code == 3);
}

TEST_CASE("hecke subcommands and the cache directory") {
  CliResult built = run_cli({"hecke", "build", "-n", "2", "-q", "2"});
  REQUIRE(built.exit_code == 0);
  CHECK(parse_2alg(built.output) ==
        hecke_two_algebra(build_hecke(2, Rational(2))));

  setenv("POSALG_CACHE", "/tmp", 1);
  std::remove("/tmp/hecke_n3_q2.json");
  CliResult first = run_cli({"hecke", "build", "-n", "3", "-q", "2"});
  REQUIRE(first.exit_code == 0);
  std::ifstream cache("/tmp/hecke_n3_q2.json");
  CHECK(cache.good());
  CliResult second = run_cli({"hecke", "build", "-n", "3", "-q", "2"});
  CHECK(second.output == first.output);
  unsetenv("POSALG_CACHE");

  CliResult iw = run_cli({"hecke", "iwahori", "-n", "2", "-p", "3"});
  CHECK(iw.exit_code == 0);
  CHECK(iw.output.find("\"identities_checked\": 8") != std::string::npos);
}

TEST_CASE("dilation subcommands and exit codes") {
  CliResult found = run_cli({"dilate", "strict", "--target", "a_lambda:1/2",
                             "--max-order", "6"});
  CHECK(found.exit_code == 0);
  CHECK(found.output.find("\"ambient\": \"Z3\"") != std::string::npos);

  CliResult none = run_cli({"dilate", "strict", "--target", "a_lambda:2/5",
                            "--max-order", "8"});
  CHECK(none.exit_code == 1);
  CHECK(none.output.find("\"witnesses\": []") != std::string::npos);

  CliResult coarse = run_cli(
      {"dilate", "coarse", "--lambda", "1/2", "--max-order", "6"});
  CHECK(coarse.exit_code == 0);
  CHECK(coarse.output.find("\"ambient\": \"Z3\"") != std::string::npos);

  // file targets work the same way as builder specs
  std::string target_path = temp_2alg(a_lambda(make_rational(1, 2)), "half");
  CliResult from_file = run_cli(
      {"dilate", "strict", "--target", target_path, "--max-order", "6"});
  CHECK(from_file.exit_code == 0);
  CHECK(from_file.output.find("\"ambient\": \"Z3\"") != std::string::npos);

  CliResult both = run_cli({"dilate", "coarse", "--lambda", "1/2", "--target",
                            "x.2alg"});
  CHECK(both.exit_code == 3);
}

TEST_CASE("census and recover subcommands") {
  CliResult census = run_cli({"census", "--max-order", "5"});
  CHECK(census.exit_code == 0);
  CHECK(census.output.find("\"lambda\": \"1/2\"") != std::string::npos);

  std::string path = temp_2alg(
      semigroup_bialgebra(matrix_unit_semigroup(2)).algebra, "i12");
  CliResult rec = run_cli({"recover", path});
  CHECK(rec.exit_code == 0);
  CHECK(rec.output.find("\"size\": 5") != std::string::npos);

  // a commutative non-cocommutative input cannot be recovered
  std::string dual_path = temp_2alg(dual(s3_bialgebra()), "ds3");
  CliResult bad = run_cli({"recover", dual_path});
  CHECK(bad.exit_code != 0);
}

TEST_CASE("reports are stable modulo the timing field") {
  std::string path = temp_2alg(cyclic_bialgebra(3), "z3rep");
  auto strip_timing = [](std::string s) {
    auto pos = s.find("\"elapsed_ms\"");
    auto end = s.find('\n', pos);
    s.erase(pos, end - pos);
    return s;
  };
  CliResult a = run_cli({"verify", path, "--all"});
  CliResult b = run_cli({"verify", path, "--all"});
  CHECK(strip_timing(a.output) == strip_timing(b.output));
}
