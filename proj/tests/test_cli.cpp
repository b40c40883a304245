#include <sstream>

#include "../tools/cli.hpp"
#include "doctest.h"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = ohg::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fixture(const std::string& name) { return std::string(OHG_FIXTURE_DIR) + "/" + name + ".ohg"; }

}  // namespace

TEST_CASE("check-circuit verdicts and exit codes") {
  const Run flower = run({"check-circuit", fixture("k4_dual_flower")});
  CHECK(flower.code == ohg::cli::kOk);
  CHECK(flower.out.rfind("circuit\n", 0) == 0);

  const Run dumbbell = run({"check-circuit", fixture("dumbbell")});
  CHECK(dumbbell.code == ohg::cli::kNegative);
  CHECK(dumbbell.out.rfind("not-circuit\n", 0) == 0);

  const Run unbalanced = run({"check-circuit", fixture("unbalanced_triangle")});
  CHECK(unbalanced.code == ohg::cli::kNegative);
  CHECK(unbalanced.out.rfind("out-of-scope-unbalanced\n", 0) == 0);

  const Run limited = run({"--max-circles", "1", "check-circuit", fixture("thorn_connection")});
  CHECK(limited.code == ohg::cli::kUnknown);
  CHECK(limited.out.rfind("unknown", 0) == 0);
}

TEST_CASE("matrix of a 0-edge") {
  const Run r = run({"matrix", fixture("zero_edge")});
  CHECK(r.code == ohg::cli::kOk);
  CHECK(r.out.rfind("0 x 1\n", 0) == 0);
  CHECK(r.out.find("zero columns:") != std::string::npos);
  CHECK(r.out.find("rank 0, nullity 1") != std::string::npos);
}

TEST_CASE("usage and input errors") {
  CHECK(run({}).code == ohg::cli::kUsage);
  CHECK(run({"frobnicate"}).code == ohg::cli::kUsage);
  CHECK(run({"--format", "svg", "validate", fixture("triangle")}).code == ohg::cli::kUsage);
  CHECK(run({"switch", fixture("triangle")}).code == ohg::cli::kUsage);

  const Run dup = run({"validate", fixture("bad_duplicate")});
  CHECK(dup.code == ohg::cli::kNegative);
  CHECK(dup.err.find("line 4") != std::string::npos);
  CHECK(run({"validate", fixture("no_such_file")}).code == ohg::cli::kUsage);
  CHECK(run({"validate", fixture("loop_multiplicity")}).code == ohg::cli::kNegative);
  CHECK(run({"--no-strict", "validate", fixture("loop_multiplicity")}).code == ohg::cli::kOk);
}

TEST_CASE("transform commands emit documents") {
  const Run dual = run({"dual", fixture("parallel_3edges")});
  REQUIRE(dual.code == ohg::cli::kOk);
  CHECK(dual.out.rfind("ohg 1\n", 0) == 0);

  const Run sw = run({"switch", "--at", "a,x", fixture("triangle")});
  CHECK(sw.code == ohg::cli::kOk);
  CHECK(sw.out.rfind("ohg 1\n", 0) == 0);

  const Run c = run({"contract", "--edge", "x", fixture("triangle")});
  CHECK(c.code == ohg::cli::kOk);
  CHECK(c.out.find("\ne x\n") == std::string::npos);

  const Run dot = run({"dot", fixture("triangle")});
  CHECK(dot.out.rfind("digraph", 0) == 0);
  CHECK(run({"--format", "dot", "dual", fixture("triangle")}).out.rfind("digraph", 0) == 0);
}

TEST_CASE("exhaustive verification") {
  const Run r = run({"verify", "--exhaustive", "--max-size", "7"});
  CHECK(r.code == ohg::cli::kOk);
  CHECK(r.out.find("mismatches 0") != std::string::npos);

  const Run files = run({"verify", fixture("triangle"), fixture("dumbbell")});
  CHECK(files.code == ohg::cli::kOk);
}

TEST_CASE("random output parses back") {
  const Run r = run({"random", "--seed", "9", "--count", "1", "--connected"});
  REQUIRE(r.code == ohg::cli::kOk);
  CHECK(r.out.rfind("ohg 1\n", 0) == 0);
  CHECK(run({"random", "--seed", "9", "--count", "1", "--connected"}).out == r.out);
}
