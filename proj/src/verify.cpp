#include "ohg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "ohg/circuit.hpp"
#include "ohg/generator.hpp"
#include "ohg/io.hpp"
#include "ohg/transforms.hpp"
#include "ohg/walk.hpp"

namespace ohg {

namespace {

constexpr std::size_t kMaxDetails = 5;

class Tally {
 public:
  Tally(int id, std::string name) : start_(std::chrono::steady_clock::now()) {
    r_.id = id;
    r_.name = std::move(name);
  }

  void instance() { ++r_.instances; }
  void fail(const std::string& msg) {
    ++r_.violations;
    if (r_.details.size() < kMaxDetails) r_.details.push_back(msg);
  }
  void unknown() { ++r_.unknown; }
  void note(std::string msg) { notes_.push_back(std::move(msg)); }

  CriterionResult done() {
    r_.details.insert(r_.details.end(), notes_.begin(), notes_.end());
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return r_;
  }

 private:
  CriterionResult r_;
  std::vector<std::string> notes_;
  std::chrono::steady_clock::time_point start_;
};

bool minimal(const OrientedHypergraph& g) {
  return is_minimally_dependent(g).status == DependencyStatus::minimally_dependent;
}

std::string brief(const OrientedHypergraph& g) {
  std::string s = serialize(g);
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

// Every incidence gets an independent random sign; equal per (vertex, edge)
// pair so strict inputs stay strict.
OrientedHypergraph random_signs(const OrientedHypergraph& g, Rng& rng) {
  std::map<std::pair<Index, Index>, int> pair_sign;
  std::vector<IndexedIncidence> incs;
  for (const Incidence& inc : g.incidences()) {
    auto [it, fresh] = pair_sign.try_emplace({inc.vertex, inc.edge}, 0);
    if (fresh) it->second = rng.sign();
    incs.push_back({inc.vertex, inc.edge, it->second});
  }
  return OrientedHypergraph::from_indexed(
      std::vector<std::string>(g.vertices().begin(), g.vertices().end()),
      std::vector<std::string>(g.edges().begin(), g.edges().end()), incs);
}

GeneratorParams general_params(std::size_t max_v, std::size_t max_e, std::size_t cap) {
  GeneratorParams p;
  p.min_vertices = 1;
  p.max_vertices = max_v;
  p.min_edges = 1;
  p.max_edges = max_e;
  p.multiplicity_cap = cap;
  p.connected = true;
  return p;
}

// A balanced, strict, connected instance of at most max_nodes nodes from a
// rotating mix of generators.
OrientedHypergraph balanced_instance(Rng& rng, std::size_t max_nodes, std::size_t kind) {
  for (;;) {
    std::optional<OrientedHypergraph> g;
    switch (kind % 5) {
      case 0: {
        const std::size_t half = std::max<std::size_t>(1, max_nodes / 2);
        OrientedHypergraph p = random_instance(general_params(half, max_nodes - half, 1), rng);
        OrientedHypergraph b = tree_orientation(p);
        if (is_balanced(b).balanced) g = random_switching(b, rng);
        break;
      }
      case 1:
        g = random_degree2_balanced(rng, max_nodes);
        break;
      case 2:
        if (max_nodes >= 4) g = random_balanced_flower(rng, max_nodes);
        break;
      case 3:
        if (max_nodes >= 8) g = random_thorn_connection(rng, 3, std::min<std::size_t>(max_nodes / 2, 7));
        break;
      case 4: {
        OrientedHypergraph base = balanced_instance(rng, max_nodes, rng.below(4));
        if (base.edge_count() > 0) g = random_balanced_subdivision(base, rng);
        break;
      }
    }
    if (g && g->node_count() <= max_nodes) return *g;
  }
}

}  // namespace

// ------------------------------------------------------------ criterion 1

CriterionResult check_classification_exhaustive(const VerifyOptions& o) {
  Tally t(1, "classification (exhaustive tier)");
  std::size_t patterns = 0, circuits = 0;
  for_each_pattern(o.exhaustive_max_size, [&](const OrientedHypergraph& p) {
    ++patterns;
    const OrientedHypergraph g = tree_orientation(p);
    if (!is_balanced(g, o.limits).balanced) return;
    t.instance();
    const CrossValidation cv = cross_validate(g, o.limits);
    if (cv.mismatch) t.fail("mismatch: " + cv.reason + " on " + brief(g));
    if (cv.structural == Verdict::unknown) t.fail("unknown verdict: " + cv.reason + " on " + brief(g));
    if (cv.structural == Verdict::circuit) ++circuits;
  });
  t.note("patterns " + std::to_string(patterns) + ", circuits " + std::to_string(circuits));
  return t.done();
}

CriterionResult check_classification(const VerifyOptions& o) {
  CriterionResult ex = check_classification_exhaustive(o);
  Tally t(1, "classification");
  Rng rng(o.seed);
  std::size_t circuits = 0;
  for (std::size_t i = 0; i < o.random_count; ++i) {
    const OrientedHypergraph g = balanced_instance(rng, o.random_max_size, i);
    t.instance();
    const CrossValidation cv = cross_validate(g, o.limits);
    if (cv.mismatch) t.fail("random mismatch: " + cv.reason + " on " + brief(g));
    if (cv.skipped) t.fail("generator produced an unbalanced instance: " + brief(g));
    if (cv.structural == Verdict::unknown) t.unknown();
    if (cv.structural == Verdict::circuit) ++circuits;
  }
  CriterionResult r = t.done();
  r.instances += ex.instances;
  r.violations += ex.violations;
  std::vector<std::string> details;
  for (const std::string& d : ex.details) details.push_back("exhaustive: " + d);
  for (const std::string& d : r.details) details.push_back("random: " + d);
  details.push_back("random: circuits " + std::to_string(circuits));
  r.details = std::move(details);
  r.seconds += ex.seconds;
  return r;
}

// ------------------------------------------------------------ criterion 2

namespace {

OrientedHypergraph with_signs(const OrientedHypergraph& shape, std::uint64_t mask) {
  std::vector<IndexedIncidence> incs;
  for (Index i = 0; i < shape.incidence_count(); ++i) {
    const Incidence& inc = shape.incidence(i);
    incs.push_back({inc.vertex, inc.edge, (mask >> i) & 1 ? -1 : 1});
  }
  return OrientedHypergraph::from_indexed(
      std::vector<std::string>(shape.vertices().begin(), shape.vertices().end()),
      std::vector<std::string>(shape.edges().begin(), shape.edges().end()), incs);
}

OrientedHypergraph shape(std::vector<std::string> v, std::vector<std::string> e,
                         const std::vector<std::pair<std::string, std::string>>& incs) {
  std::vector<IncidenceRecord> recs;
  for (const auto& [a, b] : incs) recs.push_back({a, b, 1, 1});
  return OrientedHypergraph::build(std::move(v), std::move(e), recs);
}

}  // namespace

CriterionResult check_theta_parity(const VerifyOptions& o) {
  Tally t(2, "theta parity");
  const OrientedHypergraph vertex_theta =
      shape({"a", "b", "c"}, {"e1", "e2", "e3", "e4"},
            {{"a", "e1"}, {"b", "e1"}, {"a", "e2"}, {"b", "e2"}, {"a", "e3"}, {"c", "e3"},
             {"c", "e4"}, {"b", "e4"}});
  const OrientedHypergraph edge_theta = incidence_dual(vertex_theta);
  const OrientedHypergraph cross_theta =
      shape({"v", "w1", "w2", "w3"}, {"e", "f1", "f2", "f3"},
            {{"w1", "e"}, {"w2", "e"}, {"w3", "e"}, {"v", "f1"}, {"w1", "f1"}, {"v", "f2"},
             {"w2", "f2"}, {"v", "f3"}, {"w3", "f3"}});
  struct Case {
    const OrientedHypergraph* g;
    ThetaKind kind;
    int parity;
  };
  for (const Case& c : {Case{&vertex_theta, ThetaKind::vertex_theta, 0},
                        Case{&edge_theta, ThetaKind::edge_theta, 0},
                        Case{&cross_theta, ThetaKind::cross_theta, 1}}) {
    const std::size_t n = c.g->incidence_count();
    if (n > o.theta_max_incidences) {
      t.fail(std::string(to_string(c.kind)) + " shape exceeds the incidence budget");
      continue;
    }
    const std::vector<Theta> thetas = find_thetas(*c.g, o.limits);
    if (thetas.size() != 1 || thetas.front().kind != c.kind) {
      t.fail(std::string(to_string(c.kind)) + " shape is not recognised as that theta");
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const OrientedHypergraph g = with_signs(*c.g, mask);
      t.instance();
      const std::vector<Walk> circles = enumerate_circles(g, o.limits);
      if (circles.size() != 3) {
        t.fail(std::string(to_string(c.kind)) + " has " + std::to_string(circles.size()) + " circles");
        continue;
      }
      int negative = 0;
      for (const Walk& w : circles) negative += walk_sign(g, w) < 0;
      if (negative % 2 != c.parity) {
        t.fail(std::string(to_string(c.kind)) + " orientation " + std::to_string(mask) + " has " +
               std::to_string(negative) + " negative circles");
      }
    }
  }
  return t.done();
}

// ------------------------------------------------------------ criterion 3

CriterionResult check_balanceability(const VerifyOptions& o) {
  Tally t(3, "balanceability");
  Rng rng(o.seed ^ 0x3333);
  std::size_t unbalanceable = 0;
  auto check = [&](const OrientedHypergraph& g, const char* source) {
    t.instance();
    const bool cross = has_cross_theta(g);
    const bool flips = brute_force_balanceable(g, o.limits).has_value();
    if (cross == flips) {
      t.fail(std::string(source) + ": cross-theta " + (cross ? "present" : "absent") +
             " but brute force says " + (flips ? "balanceable" : "unbalanceable") + " on " + brief(g));
    }
    unbalanceable += !flips;
  };
  for_each_multipattern(o.balanceability_max_incidences, o.balanceability_max_multiplicity,
                        [&](const OrientedHypergraph& p) { check(random_signs(p, rng), "pattern"); });
  GeneratorParams p = general_params(5, 5, o.balanceability_max_multiplicity);
  for (std::size_t i = 0; i < o.balanceability_random_count;) {
    const OrientedHypergraph g = random_instance(p, rng);
    if (g.incidence_count() > o.balanceability_max_incidences) continue;
    check(g, "random");
    ++i;
  }
  t.note("unbalanceable " + std::to_string(unbalanceable));
  return t.done();
}

// ------------------------------------------------------------ criterion 4

CriterionResult check_invariance(const VerifyOptions& o) {
  Tally t(4, "invariance");
  Rng rng(o.seed ^ 0x4444);
  auto general = [&](std::size_t i) {
    return random_instance(general_params(6, 6, i % 3 == 0 ? 2 : 1), rng);
  };
  auto same_signs = [&](const OrientedHypergraph& a, const OrientedHypergraph& b) {
    for (const Walk& c : enumerate_circles(a, o.limits)) {
      if (walk_sign(a, c) != walk_sign(b, c)) return false;
    }
    return true;
  };

  for (std::size_t i = 0; i < o.invariance_count; ++i) {
    const OrientedHypergraph g = general(i);
    const std::string v = g.vertex_id(rng.below(g.vertex_count()));
    t.instance();
    if (!same_signs(g, switching(g, SwitchingFunction{{v, -1}}))) {
      t.fail("vertex switching at " + v + " changed a circle sign on " + brief(g));
    }
  }
  for (std::size_t i = 0; i < o.invariance_count; ++i) {
    const OrientedHypergraph g = general(i);
    const std::string e = g.edge_id(rng.below(g.edge_count()));
    t.instance();
    if (!same_signs(g, switching(g, SwitchingFunction{{e, -1}}))) {
      t.fail("edge switching at " + e + " changed a circle sign on " + brief(g));
    }
  }
  for (std::size_t i = 0; i < o.invariance_count; ++i) {
    const OrientedHypergraph g = general(i);
    t.instance();
    if (minimal(g) != minimal(random_switching(g, rng))) t.fail("switching changed dependency on " + brief(g));
  }
  for (std::size_t i = 0; i < o.invariance_count; ++i) {
    const OrientedHypergraph g = general(i);
    const Index e = rng.below(g.edge_count());
    std::vector<Index> a, b;
    for (Index inc : g.edge_incidences(e)) (rng.chance(1, 2) ? a : b).push_back(inc);
    const int s = rng.sign();
    const SubdivisionResult r = subdivide_edge(g, g.edge_id(e), a, b, s, -s);
    t.instance();
    if (minimal(g) != minimal(r.hypergraph)) {
      t.fail("compatible subdivision of " + g.edge_id(e) + " changed dependency on " + brief(g));
    }
  }
  for (std::size_t i = 0; i < o.invariance_count; ++i) {
    const OrientedHypergraph g = balanced_instance(rng, 12, i);
    const OrientedHypergraph h = random_balanced_subdivision(g, rng);
    t.instance();
    if (!is_balanced(h, o.limits).balanced) t.fail("balanced subdivision lost balance on " + brief(g));
    if (minimal(g) != minimal(h)) t.fail("balanced subdivision changed dependency on " + brief(g));
  }
  std::size_t contracted = 0;
  while (contracted < o.invariance_count) {
    auto pattern = random_degree2_balanced(rng, 12);
    if (!pattern) continue;
    OrientedHypergraph g = random_signs(*pattern, rng);
    std::vector<Index> candidates;
    for (Index v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != 2) continue;
      const auto inc = g.vertex_incidences(v);
      if (g.incidence(inc[0]).edge != g.incidence(inc[1]).edge) candidates.push_back(v);
    }
    if (candidates.empty()) continue;
    const Index v = candidates[rng.below(candidates.size())];
    const Incidence& a = g.incidence(g.vertex_incidences(v)[0]);
    const Incidence& b = g.incidence(g.vertex_incidences(v)[1]);
    if (a.sign * b.sign > 0) g = switching(g, SwitchingFunction{{g.edge_id(b.edge), -1}});
    const std::string id = g.vertex_id(v);
    ++contracted;
    t.instance();
    if (minimal(g) != minimal(contract_2vertex(g, id))) {
      t.fail("compatible contraction at " + id + " changed dependency on " + brief(g));
    }
  }
  t.note("six checks of " + std::to_string(o.invariance_count) + " instances each");
  return t.done();
}

// ------------------------------------------------------------ criterion 5

namespace {

void rank_law(Tally& t, const OrientedHypergraph& g, const char* what) {
  t.instance();
  const CyclomaticForms f = cyclomatic_forms(g);
  if (f.by_incidences != f.by_edge_sizes || f.by_incidences != f.by_degrees) {
    t.fail(std::string(what) + ": cyclomatic formulas disagree on " + brief(g));
    return;
  }
  const auto phi = f.by_incidences;
  const RankNullity rn = rank_nullity(incidence_matrix(g).entries);
  if (static_cast<std::int64_t>(rn.rank) != static_cast<std::int64_t>(g.vertex_count()) - phi) {
    t.fail(std::string(what) + ": rank " + std::to_string(rn.rank) + " but |V| - phi = " +
           std::to_string(static_cast<std::int64_t>(g.vertex_count()) - phi) + " on " + brief(g));
  }
  if (rn.nullity != 1) t.fail(std::string(what) + ": nullity " + std::to_string(rn.nullity) + " on " + brief(g));
  if (static_cast<std::int64_t>(essential_circles(g).size()) != phi) {
    t.fail(std::string(what) + ": essential circle count differs from phi on " + brief(g));
  }
}

}  // namespace

CriterionResult check_rank_law(const VerifyOptions& o) {
  Tally t(5, "rank law");
  Rng rng(o.seed ^ 0x5555);
  rank_law(t, OrientedHypergraph::from_indexed({}, {"e1"}, {}), "0-edge");
  for (std::size_t i = 0; i < o.rank_law_count; ++i) {
    const OrientedHypergraph g = random_balanced_flower(rng, 4 + i % 11);
    const auto flower = is_flower(g, o.limits);
    if (!flower || !*flower) t.fail("generated flower is not a flower: " + brief(g));
    if (!is_balanced(g, o.limits).balanced) t.fail("generated flower is unbalanced: " + brief(g));
    rank_law(t, g, "flower");
  }
  for (std::size_t i = 0; i < o.rank_law_count; ++i) {
    const OrientedHypergraph tc = random_thorn_connection(rng, 2 + i % 4, 4 + i % 5);
    const OrientedHypergraph h = contract_off_circle(tc);
    const Recognition rec = recognize_hypercircle(h, o.limits);
    if (!rec.decomposition || !rec.decomposition->subdivision_record.empty()) {
      t.fail("contracted thorn-connection is not a hypercircle: " + brief(h));
    }
    if (!is_balanced(h, o.limits).balanced) t.fail("generated hypercircle is unbalanced: " + brief(h));
    rank_law(t, h, "hypercircle");
    rank_law(t, tc, "subdivided hypercircle");
  }
  return t.done();
}

// ------------------------------------------------------------ criterion 6

CriterionResult check_duality(const VerifyOptions& o) {
  Tally t(6, "duality");
  Rng rng(o.seed ^ 0x6666);
  for (std::size_t i = 0; i < o.duality_count; ++i) {
    GeneratorParams p = general_params(6, 6, 1 + i % 3);
    p.connected = i % 4 != 0;
    p.min_vertices = 0;
    p.min_edges = 0;
    const OrientedHypergraph g = random_instance(p, rng);
    const OrientedHypergraph d = incidence_dual(g);
    t.instance();
    if (!(incidence_dual(d) == g)) t.fail("dual of dual differs on " + brief(g));
    if (cyclomatic_number(g) != cyclomatic_number(d)) t.fail("phi differs on " + brief(g));
    const std::vector<Walk> cg = enumerate_circles(g, o.limits);
    const std::vector<Walk> cd = enumerate_circles(d, o.limits);
    if (cg.size() != cd.size()) t.fail("circle counts differ on " + brief(g));
    for (const Walk& c : cg) {
      const Walk w = dual_walk(d, c);
      if (!std::binary_search(cd.begin(), cd.end(), w, circle_less)) {
        t.fail("dual circle missing on " + brief(g));
        break;
      }
      const CircleInfo a = classify_circle(g, c), b = classify_circle(d, w);
      if (a.sign != b.sign || a.purity != b.purity) {
        t.fail("circle " + describe(g, c) + " changes sign or purity in the dual");
        break;
      }
    }
  }
  return t.done();
}

// ------------------------------------------------------------ criterion 7

namespace {

std::int64_t det(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  std::int64_t sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(std::move(row));
    }
    sum += (c % 2 == 0 ? 1 : -1) * a[0][c] * det(std::move(minor));
  }
  return sum;
}

}  // namespace

bool columns_independent(const IntMatrix& m, const std::vector<Index>& columns) {
  const std::size_t k = columns.size();
  if (k == 0) return true;
  if (k > m.rows()) return false;
  std::vector<bool> pick(m.rows(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::vector<std::int64_t>> a;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (!pick[r]) continue;
      std::vector<std::int64_t> row;
      for (Index c : columns) row.push_back(m(r, c));
      a.push_back(std::move(row));
    }
    if (det(std::move(a)) != 0) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

bool brute_force_circuit(const IntMatrix& m) {
  std::vector<Index> all(m.cols());
  std::iota(all.begin(), all.end(), 0);
  if (columns_independent(m, all)) return false;
  for (Index drop = 0; drop < m.cols(); ++drop) {
    std::vector<Index> rest;
    for (Index c : all) {
      if (c != drop) rest.push_back(c);
    }
    if (!columns_independent(m, rest)) return false;
  }
  return true;
}

CriterionResult check_oracle(const VerifyOptions& o) {
  Tally t(7, "oracle self-check");
  Rng rng(o.seed ^ 0x7777);
  std::size_t circuits = 0;
  auto check = [&](const OrientedHypergraph& g) {
    const IntMatrix m = incidence_matrix(g).entries;
    t.instance();
    const DependencyCertificate cert = is_minimally_dependent(m);
    const bool exact = cert.nullity == 1 && cert.status == DependencyStatus::minimally_dependent;
    const bool brute = brute_force_circuit(m);
    if (exact != brute) t.fail("oracle and column-subset definition disagree on " + brief(g));
    circuits += brute;
  };
  for_each_pattern(o.oracle_max_size, [&](const OrientedHypergraph& p) {
    if (p.edge_count() > o.oracle_max_edges) return;
    check(p);
    check(tree_orientation(p));
    check(random_signs(p, rng));
  });
  GeneratorParams p = general_params(7, o.oracle_max_edges, 2);
  p.connected = false;
  for (std::size_t i = 0; i < o.oracle_random_count; ++i) check(random_instance(p, rng));
  t.note("circuits " + std::to_string(circuits));
  return t.done();
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& o) {
  return {check_classification(o), check_theta_parity(o), check_balanceability(o),
          check_invariance(o),     check_rank_law(o),     check_duality(o),
          check_oracle(o)};
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed() ? "PASS" : "FAIL") << " criterion " << r.id << " " << r.name << ": "
      << r.instances << " instances, " << r.violations << " violations, " << r.unknown << " unknown, "
      << std::fixed << std::setprecision(2) << r.seconds << "s\n";
  for (const std::string& d : r.details) out << "  " << d << '\n';
  return out.str();
}

// --------------------------------------------------------- single instance

InstanceReport check_instance(const OrientedHypergraph& g, std::uint64_t seed, const Limits& limits) {
  InstanceReport out;
  auto fail = [&](std::string msg) { out.violations.push_back(std::move(msg)); };
  Rng rng(seed);
  try {
    if (!(parse(serialize(g), g.is_strict()) == g)) fail("serialize/parse round trip differs");

    const OrientedHypergraph d = incidence_dual(g);
    if (!(incidence_dual(d) == g)) fail("dual of dual differs");
    if (cyclomatic_number(g) != cyclomatic_number(d)) fail("phi differs from the dual");
    const CyclomaticForms f = cyclomatic_forms(g);
    if (f.by_incidences != f.by_edge_sizes || f.by_incidences != f.by_degrees) {
      fail("cyclomatic formulas disagree");
    }
    if (static_cast<std::int64_t>(essential_circles(g).size()) != f.by_incidences) {
      fail("essential circle count differs from phi");
    }

    const OrientedHypergraph s = random_switching(g, rng);
    for (const Walk& c : enumerate_circles(g, limits)) {
      const CircleInfo a = classify_circle(g, c);
      const CircleInfo b = classify_circle(d, dual_walk(d, c));
      if (a.sign != b.sign || a.purity != b.purity) fail("circle " + describe(g, c) + " differs in the dual");
      if (walk_sign(s, c) != a.sign) fail("switching changed the sign of " + describe(g, c));
    }
    if (is_inseparable(g) != is_inseparable_by_circles(g, limits)) {
      fail("block and circle inseparability tests disagree");
    }

    const IntMatrix m = incidence_matrix(g).entries;
    if (m.cols() <= 6 && m.rows() <= 10) {
      const bool exact = is_minimally_dependent(m).status == DependencyStatus::minimally_dependent;
      if (exact != brute_force_circuit(m)) fail("oracle disagrees with the column-subset definition");
    }
    if (g.incidence_count() <= std::min<std::size_t>(12, limits.max_bruteforce_incidences)) {
      if (has_cross_theta(g) == brute_force_balanceable(g, limits).has_value()) {
        fail("cross-theta test disagrees with brute-force balanceability");
      }
    }
    if (is_balanced(g, limits).balanced) {
      const CrossValidation cv = cross_validate(g, limits);
      if (cv.mismatch) fail("classifier disagrees with the oracle: " + cv.reason);
      if (cv.structural == Verdict::unknown) out.limit_hit = true;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::limit_exceeded) throw;
    out.limit_hit = true;
  }
  return out;
}

}  // namespace ohg
