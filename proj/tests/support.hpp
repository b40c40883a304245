#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ohg/io.hpp"

namespace test {

inline ohg::OrientedHypergraph G(const std::string& body, bool strict = true) {
  return ohg::parse("ohg 1\n" + body, strict);
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(OHG_FIXTURE_DIR) + "/" + name + ".ohg");
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ohg::OrientedHypergraph fixture(const std::string& name) {
  return ohg::parse(read_fixture(name));
}

}  // namespace test

namespace test {

// Incidences as "vertex edge sign" triples, e.g. "a x + b x -". Slots are
// numbered by repetition.
inline ohg::OrientedHypergraph make(const std::string& vertices, const std::string& edges,
                                    const std::string& incidences, bool strict = true) {
  std::istringstream vs(vertices), es(edges), is(incidences);
  std::vector<std::string> V, E;
  for (std::string s; vs >> s;) V.push_back(s);
  for (std::string s; es >> s;) E.push_back(s);
  std::vector<ohg::IncidenceRecord> recs;
  std::map<std::pair<std::string, std::string>, int> slots;
  for (std::string v, e, s; is >> v >> e >> s;) {
    recs.push_back({v, e, ++slots[{v, e}], s == "+" ? 1 : -1});
  }
  return ohg::OrientedHypergraph::build(V, E, recs, strict);
}

}  // namespace test
