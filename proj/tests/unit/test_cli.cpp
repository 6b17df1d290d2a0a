#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sloane");
  std::ostringstream out, err;
  const int code = sloane::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("sloane_cli_" + name);
  std::ofstream(path) << text;
  return path;
}

const char* const kChain = "2,4,8,24,96,350,1580,7520,35600,168980";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("orbit output") {
  const Run r = run({"orbit", "--map", "shifted", "--t", "1", "--b", "3", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "map: shifted(t=1,b=3)\ntrajectory: 5,6,3,2\ncycle (2,3), persistence 2\n");
  CHECK(run({"orbit", "--b", "3", "--n", "12_3"}).out == r.out);
  CHECK(run({"orbit", "--map", "erdos", "--b", "10", "--n", "77"}).out ==
        "map: erdos(b=10)\ntrajectory: 77,49,36,18,8\nfixed point 8, persistence 4\n");
  const Run up = run({"orbit", "--t", "3", "--b", "3", "--n", "5", "--max-bits", "300"});
  CHECK(up.code == 0);
  CHECK(up.out.find("divergence_suspected after") != std::string::npos);
  CHECK(up.out.find(" digits]") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"verify", "s1b", "--base", "3", "--max", "10000"}).code == 0);
  CHECK(run({"chain", "--verify", kChain}).code == 0);
  const Run broken = run({"chain", "--verify", "2,4,9"});
  CHECK(broken.code == 1);
  CHECK(broken.err.find("ternary digits 1") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"orbit", "--b", "3", "--n", "5", "--bogus"}).code == 2);
  CHECK(run({"orbit", "--b", "3"}).code == 2);
  CHECK(run({"orbit", "--b", "3", "--n", "5x"}).code == 2);
  CHECK(run({"orbit", "--b", "1", "--n", "5"}).code == 2);
  CHECK(run({"orbit", "--b", "3", "--n", "5", "--max-steps", "0"}).code == 2);
  CHECK(run({"narkiewicz", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "lemma-tlarge", "--c", "1/2"}).code == 2);
  CHECK(run({"chain", "--verify", "2,4", "--witnesses"}).code == 2);
  CHECK(run({"verify", "c0", "--expect", "0.3,0.865722"}).code == 1);
  CHECK(run({"verify", "c0", "--expect", "0.315999,0.865722"}).code == 0);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("digits_base") != std::string::npos);
}

TEST_CASE("verify table") {
  const Run r = run({"verify", "lemma-t2b", "--to", "50", "lemma-b4", "--to", "30"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "suite,case,checked,violations,status,note\n"
        "lemma-t2b,t=2,5 <= b <= 50,0,pass,\n"
        "lemma-b4,104 pairs,\"104 pairs, 5 <= b <= 30\",0,pass,\n");
  const Run bounds = run({"verify", "bounds", "--maps", "erdos:10", "--checkpoints", "100,1000", "--format", "jsonl"});
  CHECK(bounds.code == 0);
  CHECK(bounds.out.find("\"case\":\"erdos(b=10)\"") != std::string::npos);
  CHECK(run({"verify", "bounds", "--maps", "erdos:10", "--checkpoints", "1000", "--slack", "-40"}).code == 1);
  CHECK(run({"verify", "bounds", "--maps", "shifted:2:3"}).code == 2);
}

TEST_CASE("deterministic output across job counts") {
  const Run a = run({"persist", "--map", "erdos", "--b", "10", "--to", "20000", "--jobs", "1"});
  const Run b = run({"persist", "--map", "erdos", "--b", "10", "--to", "20000", "--jobs", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("n,persistence\n1,0\n10,1\n25,2\n39,3\n77,4\n679,5\n6788,6\n", 0) == 0);
  const Run s1 = run({"survey", "--t", "2", "--b", "3", "--from", "1", "--to", "100000", "--sample", "50", "--per-n", "--jobs", "1"});
  const Run s2 = run({"survey", "--t", "2", "--b", "3", "--from", "1", "--to", "100000", "--sample", "50", "--per-n", "--jobs", "4"});
  CHECK(s1.out == s2.out);
}

TEST_CASE("survey expectations") {
  const Run ok = run({"survey", "--t", "2", "--b", "3", "--to", "300", "--expect-converged", "1"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"shifted(t=2,b=3)\",1,300,300,300,0,0,1,0,stabilizes,true,false,true") != std::string::npos);
  const Run up = run({"survey", "--t", "3", "--b", "3", "--to", "20", "--max-bits", "200",
                      "--expect-converged", "0.5", "--expect-divergent", "1"});
  CHECK(up.code == 1);
  CHECK(up.err.find("converged 0/20 against 0.5: fail") != std::string::npos);
  CHECK(up.err.find("divergent 20/20 against 1: pass") != std::string::npos);
}

TEST_CASE("config file, environment and flags") {
  const auto cfg = temp_file("a.ini", "# budget\nmax-steps = 2\nformat = jsonl\n");
  const Run from_file = run({"--config", cfg.string(), "narkiewicz", "--n", "100", "--verbose"});
  CHECK(from_file.code == 0);
  CHECK(from_file.out.find("# max-steps = 2\n") != std::string::npos);
  CHECK(from_file.out.find("{\"n_max\":100,") != std::string::npos);
  const Run flag_wins = run({"--config", cfg.string(), "narkiewicz", "--n", "100", "--format", "csv"});
  CHECK(flag_wins.out.rfind("n_max,count,bound,status\n", 0) == 0);

  setenv("SLOANE_CONFIG", cfg.string().c_str(), 1);
  const Run from_env = run({"narkiewicz", "--n", "100"});
  unsetenv("SLOANE_CONFIG");
  CHECK(from_env.out == run({"narkiewicz", "--n", "100", "--format", "jsonl"}).out);

  setenv("SLOANE_CONFIG", "/nonexistent/sloane.ini", 1);
  CHECK(run({"narkiewicz", "--n", "100"}).code == 2);
  unsetenv("SLOANE_CONFIG");

  const auto bad = temp_file("b.ini", "no-such-key = 1\n");
  CHECK(run({"--config", bad.string(), "narkiewicz"}).code == 2);
  CHECK(run({"--config", "/nonexistent/x.ini", "narkiewicz"}).code == 2);
}

TEST_CASE("chain modes") {
  CHECK(run({"chain", "--verify", kChain}).out ==
        "terms,head_persistence,tail_persistence,violations,status\n"
        "\"2,4,8,24,96,350,1580,7520,35600,168980\",0,10,0,pass\n");
  CHECK(run({"chain", "--search", "1580", "--to", "8000"}).out == "target,m\n1580,7263\n");
  CHECK(run({"chain", "--search", "1580", "--to", "100"}).out == "target,m\n1580,none\n");
  CHECK(run({"chain", "--witnesses", "--n-to", "3", "--m-budget", "10"}).out == "n,m\n1,1\n2,4\n3,7\n");
}

TEST_CASE("b-files") {
  const Run emitted = run({"bfile", "emit", "--sequence", "ternary-ones", "--to", "8"});
  CHECK(emitted.code == 0);
  std::ifstream fixture(SLOANE_TEST_DATA_DIR "/ternary_ones_pow2.txt");
  std::string line, body;
  while (std::getline(fixture, line)) {
    if (!line.empty() && line[0] != '#') body += line + "\n";
  }
  CHECK(emitted.out == body);

  const auto mine = temp_file("mine.txt", emitted.out);
  CHECK(run({"bfile", "diff", mine.string(), SLOANE_TEST_DATA_DIR "/ternary_ones_pow2.txt"}).code == 0);
  const auto off = temp_file("off.txt", "7 2\n8 5\n");
  const Run d = run({"bfile", "diff", mine.string(), off.string()});
  CHECK(d.code == 1);
  CHECK(d.out == "index,a,b\n8,4,5\n");
  const auto far = temp_file("far.txt", "100 2\n");
  CHECK(run({"bfile", "diff", mine.string(), far.string()}).code == 1);
  const auto junk = temp_file("junk.txt", "1 1\nnot a line\n");
  const Run parse = run({"bfile", "diff", mine.string(), junk.string()});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("line 2") != std::string::npos);

  const Run pers = run({"bfile", "emit", "--sequence", "persistence", "--map", "erdos", "--b", "10", "--from", "75", "--to", "77"});
  CHECK(pers.out == "75 3\n76 2\n77 4\n");
}

TEST_CASE("equidistribution scans") {
  const Run seq = run({"equidist", "sequence", "--q", "3", "--primes", "2", "--steps", "4"});
  CHECK(seq.code == 0);
  // 2, 4 = 11, 8 = 22, 16 = 121 in base 3.
  CHECK(seq.out ==
        "index,digits,max_deviation,max_deviation_approx,eps_pass,counts\n"
        "1,1,2/3,0.6666666666666666,false,0:0:1\n"
        "2,2,2/3,0.6666666666666666,false,0:2:0\n"
        "3,2,2/3,0.6666666666666666,false,0:0:2\n"
        "4,3,1/3,0.3333333333333333,false,0:2:1\n");
  CHECK(run({"equidist", "sequence", "--q", "3", "--primes", "2", "--steps", "4", "--reconvert"}).out == seq.out);
  CHECK(run({"equidist", "sequence", "--q", "10", "--primes", "2,5", "--steps", "4"}).code == 2);
  const Run grid = run({"equidist", "grid", "--primes", "2,3", "--max-exponent", "3", "--threshold", "2", "--summary"});
  CHECK(grid.code == 0);
  CHECK(grid.out.rfind("points,threshold,considered,passes,pass_fraction,pass_fraction_approx\n16,2,12,", 0) == 0);
}

}  // TEST_SUITE
