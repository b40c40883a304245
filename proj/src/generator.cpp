#include "ohg/generator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ohg/structure.hpp"
#include "ohg/transforms.hpp"

namespace ohg {

std::uint64_t Rng::below(std::uint64_t n) {
  // Rejection sampling on the top of the range keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % n;
}

std::size_t Rng::weighted(const std::vector<std::uint32_t>& weights) {
  const std::uint64_t total = std::accumulate(weights.begin(), weights.end(), std::uint64_t{0});
  std::uint64_t x = below(total);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (x < weights[i]) return i;
    x -= weights[i];
  }
  return weights.size() - 1;
}

namespace {

[[noreturn]] void infeasible(const std::string& why) {
  throw Error(ErrorKind::infeasible_params, why);
}

std::vector<std::string> names(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

OrientedHypergraph pattern(std::size_t n, std::size_t m, const std::vector<IndexedIncidence>& incs) {
  return OrientedHypergraph::from_indexed(names("v", n), names("e", m), incs);
}

}  // namespace

OrientedHypergraph random_instance(const GeneratorParams& p) {
  Rng rng(p.seed);
  return random_instance(p, rng);
}

OrientedHypergraph random_instance(const GeneratorParams& p, Rng& rng) {
  if (p.min_vertices > p.max_vertices) infeasible("vertex range is empty");
  if (p.min_edges > p.max_edges) infeasible("edge range is empty");
  if (std::none_of(p.size_weights.begin(), p.size_weights.end(), [](auto w) { return w > 0; })) {
    infeasible("edge size weights are all zero");
  }
  if (p.multiplicity_cap == 0) infeasible("multiplicity cap must be at least 1");
  if (p.negative_percent > 100) infeasible("negative percentage above 100");
  if (p.connected && p.attempts == 0) infeasible("no attempts allowed");

  for (std::size_t attempt = 0; attempt < std::max<std::size_t>(p.attempts, 1); ++attempt) {
    const std::size_t n = rng.between(p.min_vertices, p.max_vertices);
    const std::size_t m = rng.between(p.min_edges, p.max_edges);
    std::vector<IndexedIncidence> incs;
    for (Index e = 0; e < m; ++e) {
      const std::size_t k = std::min(rng.weighted(p.size_weights), n * p.multiplicity_cap);
      std::vector<std::size_t> count(n, 0);
      for (std::size_t placed = 0; placed < k;) {
        const Index v = rng.below(n);
        if (count[v] < p.multiplicity_cap) ++count[v], ++placed;
      }
      for (Index v = 0; v < n; ++v) {
        if (count[v] == 0) continue;
        const int s = rng.chance(p.negative_percent, 100) ? -1 : 1;
        for (std::size_t c = 0; c < count[v]; ++c) incs.push_back({v, e, s});
      }
    }
    OrientedHypergraph g = pattern(n, m, incs);
    if (!p.connected || is_connected(g)) return g;
  }
  infeasible("no connected instance found in " + std::to_string(p.attempts) + " attempts");
}

OrientedHypergraph random_switching(const OrientedHypergraph& g, Rng& rng) {
  std::vector<int> vt(g.vertex_count()), et(g.edge_count());
  for (int& s : vt) s = rng.sign();
  for (int& s : et) s = rng.sign();
  return switching(g, vt, et);
}

namespace {

std::optional<OrientedHypergraph> balance(const OrientedHypergraph& g, Rng& rng) {
  OrientedHypergraph b = tree_orientation(g);
  if (!is_balanced(b).balanced) return std::nullopt;
  return random_switching(b, rng);
}

// Arcs of a random 2-connected loopless multigraph on nodes 0..n-1, built
// from a cycle by adding ears. Uses at most budget vertices plus arcs.
std::vector<std::pair<std::size_t, std::size_t>> ear_multigraph(Rng& rng, std::size_t budget,
                                                                std::size_t& n) {
  const std::size_t cycle = rng.between(2, std::max<std::size_t>(2, budget / 2));
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (std::size_t i = 0; i < cycle; ++i) arcs.push_back({i, (i + 1) % cycle});
  n = cycle;
  std::size_t used = 2 * cycle;
  while (used < budget && rng.chance(2, 3)) {
    const std::size_t inner = rng.between(0, (budget - used - 1) / 2);
    const std::size_t a = rng.below(n);
    std::size_t b = rng.below(n - 1);
    if (b >= a) ++b;
    std::size_t prev = a;
    for (std::size_t k = 0; k < inner; ++k) {
      arcs.push_back({prev, n});
      prev = n++;
    }
    arcs.push_back({prev, b});
    used += 2 * inner + 1;
  }
  return arcs;
}

}  // namespace

std::optional<OrientedHypergraph> random_degree2_balanced(Rng& rng, std::size_t max_nodes) {
  if (max_nodes < 1) infeasible("max_nodes must be positive");
  const std::size_t m = rng.between(1, std::max<std::size_t>(1, max_nodes / 2));
  const std::size_t n = rng.between(0, max_nodes - m);
  std::vector<IndexedIncidence> incs;
  for (Index v = 0; v < n; ++v) {
    const std::uint64_t r = rng.below(10);
    std::size_t d = r == 0 ? 1 : (r == 1 ? 3 : 2);
    d = std::min(d, m);
    std::vector<Index> edges(m);
    std::iota(edges.begin(), edges.end(), 0);
    for (std::size_t k = 0; k < d; ++k) {
      std::swap(edges[k], edges[k + rng.below(m - k)]);
      incs.push_back({v, edges[k], 1});
    }
  }
  std::sort(incs.begin(), incs.end(), [](const auto& a, const auto& b) {
    return std::tie(a.edge, a.vertex) < std::tie(b.edge, b.vertex);
  });
  const OrientedHypergraph g = pattern(n, m, incs);
  if (!is_connected(g)) return std::nullopt;
  return balance(g, rng);
}

OrientedHypergraph random_balanced_flower(Rng& rng, std::size_t max_nodes) {
  if (max_nodes < 4) infeasible("a flower needs at least 4 nodes here");
  std::size_t n = 0;
  const auto arcs = ear_multigraph(rng, max_nodes, n);
  // Arcs become vertices and nodes become edges.
  std::vector<IndexedIncidence> incs;
  for (Index i = 0; i < arcs.size(); ++i) {
    incs.push_back({i, arcs[i].first, 1});
    incs.push_back({i, arcs[i].second, 1});
  }
  auto g = balance(pattern(arcs.size(), n, incs), rng);
  if (!g) throw std::logic_error("flower pattern without a balanced orientation");
  return *g;
}

OrientedHypergraph random_thorn_connection(Rng& rng, std::size_t max_pseudo_flowers,
                                           std::size_t max_flower_nodes) {
  if (max_pseudo_flowers < 1) infeasible("need at least one pseudo-flower");
  if (max_flower_nodes < 4) infeasible("a flower needs at least 4 nodes here");
  struct Part {
    std::vector<Index> edges;
    bool one_edge = false;
  };
  std::size_t nv = 0, ne = 0;
  std::vector<IndexedIncidence> incs;
  std::vector<Part> parts;

  auto new_part = [&](bool allow_one_edge) {
    Part p;
    if (allow_one_edge && rng.chance(1, 4)) {
      p.one_edge = true;
      p.edges.push_back(ne++);
    } else {
      std::size_t n = 0;
      const auto arcs = ear_multigraph(rng, rng.between(4, max_flower_nodes), n);
      for (std::size_t k = 0; k < n; ++k) p.edges.push_back(ne + k);
      for (const auto& [a, b] : arcs) {
        incs.push_back({nv, ne + a, 1});
        incs.push_back({nv, ne + b, 1});
        ++nv;
      }
      ne += n;
    }
    parts.push_back(std::move(p));
    return parts.size() - 1;
  };
  // A new thorn on a random edge of the part.
  auto thorn_on = [&](std::size_t part) {
    const Part& p = parts[part];
    const Index t = nv++;
    incs.push_back({t, p.edges[rng.below(p.edges.size())], 1});
    return t;
  };

  std::vector<bool> open{true};
  new_part(false);
  const std::size_t target = rng.between(1, max_pseudo_flowers);
  while (parts.size() < target) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (open[i]) candidates.push_back(i);
    }
    const std::size_t host = candidates[rng.below(candidates.size())];
    const std::size_t fresh = rng.between(1, std::min<std::size_t>(2, target - parts.size()));
    if (fresh == 1 && rng.chance(1, 3)) {
      // Vertex-artery: one vertex is a thorn of both parts.
      const Index t = thorn_on(host);
      const std::size_t q = new_part(true);
      open.push_back(!parts[q].one_edge);
      incs.push_back({t, parts[q].edges[rng.below(parts[q].edges.size())], 1});
    } else {
      const Index a = ne++;
      incs.push_back({thorn_on(host), a, 1});
      for (std::size_t k = 0; k < fresh; ++k) {
        const std::size_t q = new_part(true);
        open.push_back(!parts[q].one_edge);
        incs.push_back({thorn_on(q), a, 1});
      }
    }
  }
  std::sort(incs.begin(), incs.end(), [](const auto& a, const auto& b) {
    return std::tie(a.edge, a.vertex) < std::tie(b.edge, b.vertex);
  });
  auto g = balance(pattern(nv, ne, incs), rng);
  if (!g) throw std::logic_error("thorn-connection without a balanced orientation");
  return *g;
}

OrientedHypergraph contract_off_circle(const OrientedHypergraph& g) {
  std::vector<std::string> off;
  for (Index v = 0; v < g.vertex_count(); ++v) {
    if (!vertex_on_circle(g, v)) off.push_back(g.vertex_id(v));
  }
  OrientedHypergraph h = g;
  for (const std::string& v : off) h = contract_2vertex(h, v);
  return h;
}

OrientedHypergraph random_balanced_subdivision(const OrientedHypergraph& g, Rng& rng) {
  if (g.edge_count() == 0) infeasible("no edge to subdivide");
  const Index e = rng.below(g.edge_count());
  std::vector<Index> part1, part2;
  for (Index i : g.edge_incidences(e)) (rng.chance(1, 2) ? part1 : part2).push_back(i);
  const int s1 = rng.sign();
  SubdivisionResult r = subdivide_edge(g, g.edge_id(e), part1, part2, s1, rng.sign());
  if (!r.balanced) r = subdivide_edge(g, g.edge_id(e), part1, part2, s1, -s1);
  return r.hypergraph;
}

namespace {

// Rows are m-digit numbers in base (cap + 1), column 0 most significant.
struct PatternSearch {
  std::size_t n = 0, m = 0, cap = 1, max_sum = 0;
  bool prune_pendants = false;
  const std::function<void(const OrientedHypergraph&)>* visit = nullptr;
  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::vector<std::size_t>> candidates;  // in decreasing order

  void run() {
    candidates.clear();
    std::vector<std::size_t> row(m, 0);
    // Enumerate all rows, largest first.
    std::function<void(std::size_t)> fill = [&](std::size_t c) {
      if (c == m) {
        const std::size_t s = std::accumulate(row.begin(), row.end(), std::size_t{0});
        if (s >= (prune_pendants ? 2u : 1u) && s <= max_sum) candidates.push_back(row);
        return;
      }
      for (std::size_t x = cap + 1; x-- > 0;) {
        row[c] = x;
        fill(c + 1);
      }
    };
    fill(0);
    rows.clear();
    place(0, 0, 0);
  }

  void place(std::size_t r, std::size_t from, std::size_t sum) {
    if (r == n) {
      finish();
      return;
    }
    for (std::size_t k = from; k < candidates.size(); ++k) {
      const std::size_t s = std::accumulate(candidates[k].begin(), candidates[k].end(), std::size_t{0});
      if (sum + s > max_sum) continue;
      rows.push_back(candidates[k]);
      place(r + 1, k, sum + s);
      rows.pop_back();
    }
  }

  void finish() {
    // Columns must be non-increasing too, and every column must be used.
    for (std::size_t c = 0; c < m; ++c) {
      std::size_t s = 0;
      for (std::size_t r = 0; r < n; ++r) s += rows[r][c];
      if (s < (prune_pendants ? 2u : (n == 0 ? 0u : 1u))) return;
      if (c + 1 < m) {
        for (std::size_t r = 0; r < n; ++r) {
          if (rows[r][c] != rows[r][c + 1]) {
            if (rows[r][c] < rows[r][c + 1]) return;
            break;
          }
        }
      }
    }
    std::vector<IndexedIncidence> incs;
    for (Index c = 0; c < m; ++c) {
      for (Index r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < rows[r][c]; ++k) incs.push_back({r, c, 1});
      }
    }
    const OrientedHypergraph g = pattern(n, m, incs);
    if (is_connected(g)) (*visit)(g);
  }
};

}  // namespace

void for_each_pattern(std::size_t max_nodes,
                      const std::function<void(const OrientedHypergraph&)>& visit) {
  if (max_nodes >= 1) visit(pattern(0, 1, {}));
  PatternSearch s;
  s.visit = &visit;
  for (std::size_t total = 2; total <= max_nodes; ++total) {
    for (std::size_t m = 1; m < total; ++m) {
      s.n = total - m;
      s.m = m;
      s.cap = 1;
      s.max_sum = s.n * m;
      s.run();
    }
  }
}

void for_each_multipattern(std::size_t max_incidences, std::size_t max_multiplicity,
                           const std::function<void(const OrientedHypergraph&)>& visit) {
  PatternSearch s;
  s.visit = &visit;
  s.prune_pendants = true;
  // A connected pattern has at least |V| + |E| - 1 nonzero entries.
  for (std::size_t total = 2; total <= max_incidences + 1; ++total) {
    for (std::size_t m = 1; m < total; ++m) {
      // Every row and column carries at least two incidences.
      if (2 * m > max_incidences || 2 * (total - m) > max_incidences) continue;
      s.n = total - m;
      s.m = m;
      s.cap = max_multiplicity;
      s.max_sum = max_incidences;
      s.run();
    }
  }
}

}  // namespace ohg
