#include <algorithm>
#include <filesystem>

#include "doctest.h"
#include "ohg/io.hpp"
#include "ohg/linalg.hpp"
#include "support.hpp"

using namespace ohg;

namespace {

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (std::size_t p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
  return n;
}

Error parse_error(const std::string& text, bool strict = true) {
  try {
    parse(text, strict);
  } catch (const Error& e) {
    return e;
  }
  FAIL("no error raised");
  return Error(ErrorKind::syntax_error, "");
}

}  // namespace

TEST_CASE("every fixture round-trips") {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(OHG_FIXTURE_DIR)) {
    const std::string name = entry.path().stem().string();
    if (name.rfind("bad_", 0) == 0) continue;
    CAPTURE(name);
    const bool strict = name != "loop_multiplicity";
    const HypergraphDocument doc = parse_document(test::read_fixture(name), strict);
    const HypergraphDocument again = parse_document(serialize(doc), strict);
    CHECK(again.graph == doc.graph);
    CHECK(again.name == doc.name);
    CHECK(again.notes == doc.notes);
    CHECK(serialize(again) == serialize(doc));
    ++seen;
  }
  CHECK(seen >= 10);
}

TEST_CASE("parse errors carry positions") {
  const Error dup = parse_error(test::read_fixture("bad_duplicate"));
  CHECK(dup.kind() == ErrorKind::syntax_error);
  CHECK(dup.line() == 4);
  CHECK(dup.column() == 3);

  CHECK(parse_error("v a\n").line() == 1);
  CHECK(parse_error("ohg 1\nv a\ne x\ni a y 1 +\n").kind() == ErrorKind::syntax_error);
  CHECK(parse_error("ohg 1\nv a\ne x\ni a x 0 +\n").kind() == ErrorKind::syntax_error);
  CHECK(parse_error("ohg 1\nv a\ne x\ni a x 1 *\n").kind() == ErrorKind::syntax_error);
  CHECK(parse_error("ohg 1\nv a\ne x\ni a x 1 +\ni a x 1 +\n").line() == 5);
  CHECK(parse_error("ohg 1\nq a\n").kind() == ErrorKind::syntax_error);
  CHECK(parse_error("ohg 1\nv a\ne x\ni a x 2 +\n").kind() == ErrorKind::semantic_error);

  const std::string mixed = "ohg 1\nv a\ne x\ni a x 1 +\ni a x 2 -\n";
  CHECK(parse_error(mixed).kind() == ErrorKind::semantic_error);
  CHECK(parse(mixed, false).incidence_count() == 2);
}

TEST_CASE("metadata and comments") {
  const HypergraphDocument doc =
      parse_document("ohg 1\n# name: tiny\n# note: one\n# plain comment\nv a\n\ne x\ni a x 1 -\n");
  CHECK(doc.name == "tiny");
  CHECK(doc.notes == std::vector<std::string>{"one"});
  CHECK(doc.graph.incidence_count() == 1);
  CHECK(serialize(doc.graph).rfind("ohg 1\n", 0) == 0);
}

TEST_CASE("dot export") {
  const std::string tri = dot_export(test::fixture("triangle"), "tri");
  CHECK(tri.rfind("digraph", 0) == 0);
  CHECK(count(tri, "->") == 6);
  CHECK(count(tri, "shape=") == 6);

  const std::string empty = dot_export(OrientedHypergraph{});
  CHECK(count(empty, "->") == 0);
  CHECK(count(empty, "shape=") == 0);

  const std::string par = dot_export(test::make("v", "e", "v e + v e +"));
  CHECK(count(par, "\"e:e\" -> \"v:v\"") == 2);
  CHECK(par.find("label=\"1\"") != std::string::npos);
  CHECK(par.find("label=\"2\"") != std::string::npos);

  const std::string neg = dot_export(test::make("v", "e", "v e -"));
  CHECK(count(neg, "\"v:v\" -> \"e:e\"") == 1);
}

TEST_CASE("matrix text") {
  const std::string z = format_matrix(incidence_matrix(test::fixture("zero_edge")));
  CHECK(z.rfind("0 x 1\n", 0) == 0);
  CHECK(z.find("zero columns: ") != std::string::npos);

  const std::string t = format_matrix(incidence_matrix(test::fixture("triangle")));
  CHECK(t.rfind("3 x 3\n", 0) == 0);
  CHECK(t.find("zero columns") == std::string::npos);
  CHECK(count(t, "\n") == 5);
}
