#include "ohg/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace ohg {

namespace {

struct Token {
  std::string_view text;
  std::size_t column = 0;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void syntax(const std::string& msg, std::size_t line, std::size_t column) {
  throw Error(ErrorKind::syntax_error,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg,
              line, column);
}

}  // namespace

HypergraphDocument parse_document(std::string_view text, bool strict) {
  HypergraphDocument doc;
  std::vector<std::string> vertices, edges;
  std::vector<IncidenceRecord> incidences;
  std::set<std::string, std::less<>> seen_vertex, seen_edge;
  std::set<std::tuple<std::string, std::string, int>> seen_slot;
  bool header = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    const std::string_view body = trim(raw);
    if (body.empty()) continue;
    if (body.front() == '#') {
      const std::string_view meta = trim(body.substr(1));
      if (meta.starts_with("name:")) doc.name = std::string(trim(meta.substr(5)));
      else if (meta.starts_with("note:")) doc.notes.emplace_back(trim(meta.substr(5)));
      continue;
    }

    const std::vector<Token> tok = split(raw);
    const std::string_view kw = tok[0].text;
    if (!header) {
      if (kw != "ohg") syntax("expected header 'ohg 1'", line_no, tok[0].column);
      if (tok.size() != 2 || tok[1].text != "1") {
        syntax("unsupported format version", line_no, tok.size() > 1 ? tok[1].column : tok[0].column);
      }
      header = true;
      continue;
    }
    if (kw == "v" || kw == "e") {
      if (tok.size() != 2) syntax("expected '" + std::string(kw) + " <id>'", line_no, tok[0].column);
      const std::string id(tok[1].text);
      if (seen_vertex.count(id) || seen_edge.count(id)) {
        syntax("id '" + id + "' declared twice", line_no, tok[1].column);
      }
      (kw == "v" ? seen_vertex : seen_edge).insert(id);
      (kw == "v" ? vertices : edges).push_back(id);
    } else if (kw == "i") {
      if (tok.size() != 5) syntax("expected 'i <vertex> <edge> <slot> <+|->'", line_no, tok[0].column);
      const std::string v(tok[1].text), e(tok[2].text);
      if (!seen_vertex.count(v)) syntax("undeclared vertex '" + v + "'", line_no, tok[1].column);
      if (!seen_edge.count(e)) syntax("undeclared edge '" + e + "'", line_no, tok[2].column);
      int slot = 0;
      const std::string_view s = tok[3].text;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), slot);
      if (ec != std::errc{} || ptr != s.data() + s.size() || slot < 1) {
        syntax("slot must be a positive integer", line_no, tok[3].column);
      }
      int sign = 0;
      if (tok[4].text == "+") sign = +1;
      else if (tok[4].text == "-") sign = -1;
      else syntax("sign must be '+' or '-'", line_no, tok[4].column);
      if (!seen_slot.insert({v, e, slot}).second) {
        syntax("incidence (" + v + ", " + e + ", " + std::to_string(slot) + ") given twice", line_no,
               tok[3].column);
      }
      incidences.push_back({v, e, slot, sign});
    } else {
      syntax("unknown record '" + std::string(kw) + "'", line_no, tok[0].column);
    }
  }
  if (!header) syntax("missing header 'ohg 1'", line_no, 1);

  try {
    doc.graph = OrientedHypergraph::build(std::move(vertices), std::move(edges), incidences, strict);
  } catch (const Error& e) {
    throw Error(ErrorKind::semantic_error, std::string(to_string(e.kind())) + ": " + e.what());
  }
  return doc;
}

OrientedHypergraph parse(std::string_view text, bool strict) {
  return parse_document(text, strict).graph;
}

std::string serialize(const HypergraphDocument& doc) {
  std::ostringstream out;
  out << "ohg " << doc.version << '\n';
  if (!doc.name.empty()) out << "# name: " << doc.name << '\n';
  for (const std::string& n : doc.notes) out << "# note: " << n << '\n';
  const OrientedHypergraph& g = doc.graph;
  for (const std::string& v : g.vertices()) out << "v " << v << '\n';
  for (const std::string& e : g.edges()) out << "e " << e << '\n';
  for (const Incidence& inc : g.incidences()) {
    out << "i " << g.vertex_id(inc.vertex) << ' ' << g.edge_id(inc.edge) << ' ' << inc.slot << ' '
        << (inc.sign > 0 ? '+' : '-') << '\n';
  }
  return out.str();
}

std::string serialize(const OrientedHypergraph& g) {
  HypergraphDocument doc;
  doc.graph = g;
  return serialize(doc);
}

namespace {

std::string dot_id(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string dot_export(const OrientedHypergraph& g, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << dot_id(name) << " {\n";
  for (const std::string& v : g.vertices()) {
    out << "  " << dot_id("v:" + v) << " [label=" << dot_id(v) << ", shape=circle];\n";
  }
  for (const std::string& e : g.edges()) {
    out << "  " << dot_id("e:" + e) << " [label=" << dot_id(e) << ", shape=box];\n";
  }
  for (const Incidence& inc : g.incidences()) {
    const std::string v = dot_id("v:" + g.vertex_id(inc.vertex));
    const std::string e = dot_id("e:" + g.edge_id(inc.edge));
    if (inc.sign > 0) out << "  " << e << " -> " << v;
    else out << "  " << v << " -> " << e;
    out << " [label=\"" << inc.slot << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string format_matrix(const IncidenceMatrix& m) {
  const IntMatrix& a = m.entries;
  std::size_t label_w = 0;
  for (const std::string& r : m.row_labels) label_w = std::max(label_w, r.size());
  std::vector<std::size_t> col_w(a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    col_w[c] = m.col_labels[c].size();
    for (std::size_t r = 0; r < a.rows(); ++r) {
      col_w[c] = std::max(col_w[c], std::to_string(a(r, c)).size());
    }
  }
  auto pad = [](std::ostringstream& o, const std::string& s, std::size_t w) {
    o << std::string(w - std::min(w, s.size()), ' ') << s;
  };
  std::ostringstream out;
  out << a.rows() << " x " << a.cols() << '\n';
  if (a.cols() == 0 && a.rows() == 0) return out.str();
  out << std::string(label_w, ' ');
  for (std::size_t c = 0; c < a.cols(); ++c) {
    out << ' ';
    pad(out, m.col_labels[c], col_w[c]);
  }
  out << '\n';
  for (std::size_t r = 0; r < a.rows(); ++r) {
    out << m.row_labels[r] << std::string(label_w - m.row_labels[r].size(), ' ');
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out << ' ';
      pad(out, std::to_string(a(r, c)), col_w[c]);
    }
    out << '\n';
  }
  std::vector<std::string> zero_cols;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    bool zero = true;
    for (std::size_t r = 0; r < a.rows() && zero; ++r) zero = a(r, c) == 0;
    if (zero) zero_cols.push_back(m.col_labels[c]);
  }
  if (!zero_cols.empty()) {
    out << "zero columns:";
    for (const std::string& c : zero_cols) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

}  // namespace ohg
