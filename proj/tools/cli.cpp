#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ohg/circuit.hpp"
#include "ohg/generator.hpp"
#include "ohg/io.hpp"
#include "ohg/structure.hpp"
#include "ohg/transforms.hpp"
#include "ohg/verify.hpp"
#include "ohg/walk.hpp"

namespace ohg::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::size_t max_circle_len = Limits{}.max_circle_length;
  std::size_t max_circles = Limits{}.max_circles;
  bool strict = true;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t count = 0;
  std::size_t max_size = 0;
  bool exhaustive = false;

  Limits limits() const {
    Limits l;
    l.max_circle_length = max_circle_len;
    l.max_circles = max_circles;
    return l;
  }
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

HypergraphDocument load(const std::string& path, const Settings& s) {
  return parse_document(read_text(path), s.strict);
}

std::string join(const std::vector<std::string>& items) {
  if (items.empty()) return "-";
  std::string out;
  for (const std::string& x : items) out += (out.empty() ? "" : " ") + x;
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int parse_sign(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw UsageError("sign must be + or -, got '" + s + "'");
}

void emit(std::ostream& out, HypergraphDocument doc, const Settings& s) {
  if (s.format == "dot") out << dot_export(doc.graph, doc.name.empty() ? "ohg" : doc.name);
  else out << serialize(doc);
}

// ----------------------------------------------------------------- commands

int cmd_validate(const std::string& path, const Settings& s, std::ostream& out) {
  const HypergraphDocument doc = load(path, s);
  const OrientedHypergraph& g = doc.graph;
  out << "ok: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, "
      << g.incidence_count() << " incidences\n";
  return kOk;
}

int cmd_analyze(const std::string& path, const Settings& s, std::ostream& out) {
  const HypergraphDocument doc = load(path, s);
  const OrientedHypergraph& g = doc.graph;
  const Limits limits = s.limits();
  bool limit_hit = false;
  auto yes = [](bool b) { return b ? "yes" : "no"; };

  if (!doc.name.empty()) out << "name: " << doc.name << '\n';
  out << "vertices " << g.vertex_count() << ", edges " << g.edge_count() << ", incidences "
      << g.incidence_count() << '\n';
  out << "simple " << yes(g.is_simple()) << ", strict " << yes(g.is_strict()) << ", components "
      << component_count(g) << '\n';
  const CyclomaticForms f = cyclomatic_forms(g);
  out << "cyclomatic " << f.by_incidences << " (edge sizes " << f.by_edge_sizes << ", degrees "
      << f.by_degrees << ")\n";

  try {
    const std::vector<Walk> circles = enumerate_circles(g, limits);
    std::size_t neg = 0, degenerate = 0;
    for (const Walk& c : circles) {
      const CircleInfo info = classify_circle(g, c);
      neg += info.sign < 0;
      degenerate += info.purity == Purity::degenerate;
    }
    out << "circles " << circles.size() << " (negative " << neg << ", degenerate " << degenerate << ")\n";
    const BalanceResult b = is_balanced(g, limits);
    out << "balanced " << yes(b.balanced);
    if (b.negative_circle) out << " (negative circle " << describe(g, *b.negative_circle) << ")";
    out << '\n';
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::limit_exceeded) throw;
    out << "circles unknown (" << e.what() << ")\n";
    limit_hit = true;
  }
  const BalanceabilityResult bal = is_balanceable(g);
  out << "balanceable " << yes(bal.balanceable);
  if (bal.cross_theta) {
    out << " (cross-theta between " << g.id(bal.cross_theta->first) << " and "
        << g.id(bal.cross_theta->second) << ")";
  }
  out << '\n';
  out << "inseparable " << yes(is_inseparable(g)) << ", circle-covered " << yes(is_circle_covered(g)) << '\n';
  const FlowerAnalysis fa = flower_analysis(g, limits);
  out << "flower analysis: " << to_string(fa.verdict);
  if (!fa.thorns.empty()) out << " (thorns " << join(fa.thorns) << ")";
  out << '\n';
  limit_hit = limit_hit || fa.verdict == FlowerVerdict::unknown;

  const StructureReport r = structural_inventory(g);
  out << "isolated: " << join(r.isolated_vertices) << '\n';
  out << "leaves: " << join(r.leaves) << "; twigs: " << join(r.twigs) << '\n';
  out << "thorns: " << join(r.thorns) << "; briars: " << join(r.briars) << '\n';
  out << "isthmi: " << join(r.isthmi) << "; cut vertices: " << join(r.cut_vertices) << '\n';

  const IncidenceMatrix m = incidence_matrix(g);
  const RankNullity rn = rank_nullity(m.entries);
  const DependencyCertificate cert = is_minimally_dependent(m.entries);
  out << "rank " << rn.rank << ", nullity " << rn.nullity << ", " << to_string(cert.status) << '\n';
  const CircuitVerdict v = classify_structurally(g, limits);
  out << "verdict: " << to_string(v.verdict) << " (" << v.reason << ")\n";
  limit_hit = limit_hit || v.verdict == Verdict::unknown;
  return limit_hit ? kUnknown : kOk;
}

int cmd_matrix(const std::string& path, const Settings& s, std::ostream& out) {
  const OrientedHypergraph g = load(path, s).graph;
  const IncidenceMatrix m = incidence_matrix(g);
  out << format_matrix(m);
  const RankNullity rn = rank_nullity(m.entries);
  out << "rank " << rn.rank << ", nullity " << rn.nullity << '\n';
  return kOk;
}

int cmd_circles(const std::string& path, const Settings& s, std::ostream& out) {
  const OrientedHypergraph g = load(path, s).graph;
  try {
    const std::vector<Walk> circles = enumerate_circles(g, s.limits());
    for (const Walk& c : circles) {
      const CircleInfo info = classify_circle(g, c);
      out << (info.sign > 0 ? "+ " : "- ") << (info.purity == Purity::pure ? "pure " : "degenerate ")
          << describe(g, c) << '\n';
    }
    out << circles.size() << " circles\n";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::limit_exceeded) throw;
    out << "unknown: " << e.what() << '\n';
    return kUnknown;
  }
  return kOk;
}

int cmd_check_circuit(const std::string& path, const Settings& s, std::ostream& out) {
  const OrientedHypergraph g = load(path, s).graph;
  const CircuitVerdict v = classify_balanced_circuit(g, s.limits());
  out << to_string(v.verdict) << '\n';
  out << "reason: " << v.reason << '\n';
  out << "oracle: " << to_string(v.oracle.status) << ", nullity " << v.oracle.nullity << '\n';
  if (v.witness) {
    const HypercircleDecomposition& d = *v.witness;
    out << "pseudo-flowers " << d.pseudo_flowers.size() << ", arteries " << d.arteries.size()
        << ", 1-edges " << join(d.one_edges) << ", contractions " << d.subdivision_record.size() << '\n';
    for (const ContractionStep& c : d.subdivision_record) {
      out << "  contract " << c.vertex << ": " << c.absorbed_edge << " into " << c.kept_edge
          << (c.switched ? " (switched)" : "") << '\n';
    }
  }
  switch (v.verdict) {
    case Verdict::circuit: return kOk;
    case Verdict::unknown: return kUnknown;
    default: return kNegative;
  }
}

int print_report(std::ostream& out, const std::vector<CriterionResult>& results) {
  bool ok = true;
  for (const CriterionResult& r : results) {
    out << format_result(r);
    ok = ok && r.passed();
  }
  return ok ? kOk : kNegative;
}

int cmd_verify(const std::vector<std::string>& files, bool acceptance, const Settings& s,
               std::ostream& out) {
  VerifyOptions o;
  o.seed = s.seed;
  o.limits = s.limits();
  if (acceptance) return print_report(out, run_acceptance(o));
  if (s.exhaustive) {
    if (s.max_size) o.exhaustive_max_size = s.max_size;
    const CriterionResult r = check_classification_exhaustive(o);
    out << format_result(r);
    out << "mismatches " << r.violations << '\n';
    return r.passed() ? kOk : kNegative;
  }

  std::size_t checked = 0, violations = 0, unknown = 0;
  auto report = [&](const std::string& label, const OrientedHypergraph& g, std::uint64_t seed) {
    const InstanceReport rep = check_instance(g, seed, o.limits);
    ++checked;
    violations += rep.violations.size();
    unknown += rep.limit_hit;
    for (const std::string& v : rep.violations) out << label << ": " << v << '\n';
    if (rep.limit_hit) out << label << ": unknown (limit)\n";
  };
  if (!files.empty()) {
    for (const std::string& f : files) report(f, load(f, s).graph, s.seed);
  } else {
    Rng rng(s.seed);
    const std::size_t count = s.count ? s.count : 100;
    const std::size_t max_size = s.max_size ? s.max_size : 12;
    GeneratorParams p;
    p.max_vertices = std::max<std::size_t>(1, max_size / 2);
    p.max_edges = std::max<std::size_t>(1, max_size - p.max_vertices);
    for (std::size_t i = 0; i < count; ++i) {
      p.multiplicity_cap = 1 + i % 2;
      OrientedHypergraph g = random_instance(p, rng);
      if (i % 2 == 1) {
        OrientedHypergraph b = tree_orientation(g);
        if (is_balanced(b, o.limits).balanced && b.is_strict()) g = random_switching(b, rng);
      }
      report("instance " + std::to_string(i + 1), g, s.seed + i);
    }
  }
  out << "checked " << checked << ", violations " << violations << ", unknown " << unknown << '\n';
  if (violations) return kNegative;
  return unknown ? kUnknown : kOk;
}

int cmd_random(const Settings& s, std::size_t multiplicity, std::uint32_t negative, bool connected,
               bool balanced, std::ostream& out) {
  GeneratorParams p;
  const std::size_t max_size = s.max_size ? s.max_size : 10;
  if (max_size < 2) throw UsageError("--max-size must be at least 2");
  p.max_vertices = max_size / 2;
  p.max_edges = max_size - p.max_vertices;
  p.multiplicity_cap = multiplicity;
  p.negative_percent = negative;
  p.connected = connected;
  p.seed = s.seed;
  Rng rng(p.seed);
  const std::size_t count = s.count ? s.count : 1;
  for (std::size_t i = 0; i < count; ++i) {
    HypergraphDocument doc;
    doc.graph = random_instance(p, rng);
    if (balanced) {
      OrientedHypergraph b = tree_orientation(doc.graph);
      if (is_balanced(b, s.limits()).balanced) doc.graph = std::move(b);
      else doc.notes.push_back("no balanced orientation exists");
    }
    doc.name = "random-" + std::to_string(s.seed) + "-" + std::to_string(i + 1);
    if (i) out << '\n';
    emit(out, doc, s);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Oriented hypergraph toolkit"};
  app.name("ohg");
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--max-circle-len", s.max_circle_len, "Longest circle to enumerate")->check(CLI::PositiveNumber);
  app.add_option("--max-circles", s.max_circles, "Most circles to enumerate")->check(CLI::PositiveNumber);
  app.add_flag("--strict,!--no-strict", s.strict, "Reject mixed signs on one vertex-edge pair");
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "dot"}));
  app.add_option("--seed", s.seed, "Random seed");
  app.add_option("--count", s.count, "Number of instances");
  app.add_option("--max-size", s.max_size, "Largest |V| + |E|");
  app.add_flag("--exhaustive", s.exhaustive, "Enumerate every small pattern");

  std::string file;
  auto with_file = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Hypergraph file, or - for stdin")->required();
    return sub;
  };
  CLI::App* validate = with_file("validate", "Parse and validate a file");
  CLI::App* analyze = with_file("analyze", "Report structure, balance and dependency");
  CLI::App* matrix = with_file("matrix", "Print the incidence matrix");
  CLI::App* dual = with_file("dual", "Print the incidence dual");
  CLI::App* circles = with_file("circles", "List circles with sign and purity");
  CLI::App* check = with_file("check-circuit", "Decide whether the columns form a circuit");
  CLI::App* dot = with_file("dot", "Print the incidence graph in DOT");

  std::vector<std::string> switch_at;
  CLI::App* sw = with_file("switch", "Switch at the given vertices and edges");
  sw->add_option("--at", switch_at, "Ids to negate")->delimiter(',')->required();

  std::string edge, sign1 = "+", sign2 = "-";
  std::vector<std::string> first;
  CLI::App* subdivide = with_file("subdivide", "Split an edge at a new vertex");
  subdivide->add_option("--edge", edge, "Edge to split")->required();
  subdivide->add_option("--first", first, "Vertices whose incidences go to the first part")->delimiter(',');
  subdivide->add_option("--sign1", sign1, "Sign of the new vertex in the first part");
  subdivide->add_option("--sign2", sign2, "Sign of the new vertex in the second part");

  std::string vertex, contract_edge;
  CLI::App* contract = with_file("contract", "Contract a degree-2 vertex or a 2-edge");
  CLI::Option* v_opt = contract->add_option("--vertex", vertex, "Degree-2 vertex");
  CLI::Option* e_opt = contract->add_option("--edge", contract_edge, "2-edge");
  v_opt->excludes(e_opt);

  std::vector<std::string> files;
  bool acceptance = false;
  CLI::App* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("files", files, "Hypergraph files to check");
  verify->add_flag("--acceptance", acceptance, "Run every acceptance criterion");

  std::size_t multiplicity = 1;
  std::uint32_t negative = 50;
  bool connected = false, balanced = false;
  CLI::App* random = app.add_subcommand("random", "Generate seeded random instances");
  random->add_option("--multiplicity", multiplicity, "Multiplicity cap")->check(CLI::PositiveNumber);
  random->add_option("--negative-percent", negative, "Chance of a negative pair")->check(CLI::Range(0, 100));
  random->add_flag("--connected", connected, "Only connected instances");
  random->add_flag("--balanced", balanced, "Re-sign to a balanced orientation when one exists");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(file, s, out);
    if (*analyze) return cmd_analyze(file, s, out);
    if (*matrix) return cmd_matrix(file, s, out);
    if (*circles) return cmd_circles(file, s, out);
    if (*check) return cmd_check_circuit(file, s, out);
    if (*verify) return cmd_verify(files, acceptance, s, out);
    if (*random) return cmd_random(s, multiplicity, negative, connected, balanced, out);
    if (*dot) {
      const HypergraphDocument doc = load(file, s);
      out << dot_export(doc.graph, doc.name.empty() ? "ohg" : doc.name);
      return kOk;
    }
    HypergraphDocument doc = load(file, s);
    if (*dual) {
      doc.graph = incidence_dual(doc.graph);
    } else if (*sw) {
      SwitchingFunction theta;
      for (const std::string& id : switch_at) theta[id] = -1;
      doc.graph = switching(doc.graph, theta);
    } else if (*subdivide) {
      const OrientedHypergraph& g = doc.graph;
      const Index e = g.edge_index(edge);
      std::vector<Index> a, b;
      for (Index i : g.edge_incidences(e)) {
        const std::string& v = g.vertex_id(g.incidence(i).vertex);
        (std::find(first.begin(), first.end(), v) != first.end() ? a : b).push_back(i);
      }
      for (const std::string& v : first) g.vertex_index(v);
      const SubdivisionResult r = subdivide_edge(g, edge, a, b, parse_sign(sign1), parse_sign(sign2));
      doc.graph = r.hypergraph;
      doc.notes.push_back("new vertex " + r.new_vertex + " splits " + edge + " into " + r.first_edge +
                          " and " + r.second_edge);
      doc.notes.push_back(std::string(r.compatibility == Compatibility::compatible ? "compatible"
                                                                                  : "incompatible") +
                          ", " + (r.balanced ? "balanced" : "not balanced"));
    } else if (*contract) {
      if (!vertex.empty()) doc.graph = contract_2vertex(doc.graph, vertex);
      else if (!contract_edge.empty()) doc.graph = contract_2edge(doc.graph, contract_edge);
      else throw UsageError("contract needs --vertex or --edge");
    }
    emit(out, std::move(doc), s);
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    if (e.kind() == ErrorKind::limit_exceeded) {
      out << "unknown\n";
      return kUnknown;
    }
    return kNegative;
  }
}

}  // namespace ohg::cli
