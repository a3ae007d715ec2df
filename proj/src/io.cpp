#include "prufer/io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "prufer/codec_star.hpp"
#include "prufer/error.hpp"
#include "prufer/star_reduction.hpp"

namespace prufer {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Non-blank lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.push_back({number, line});
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) return out;
    s = s.substr(pos + 1);
  }
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

Vertex parse_id(std::string_view token, std::size_t line) {
  Vertex v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    parse_fail(line, "expected a vertex id, found '" + std::string(token) + "'");
  }
  return v;
}

// "keyword rest..." -> rest, or nullopt if the keyword differs.
std::optional<std::string_view> keyword(const Line& line, std::string_view key) {
  if (!line.text.starts_with(key)) return std::nullopt;
  std::string_view rest = line.text.substr(key.size());
  if (!rest.empty() && rest.front() != ' ' && rest.front() != '\t') return std::nullopt;
  return trim(rest);
}

Vertex parse_root(const Line& line) {
  const auto rest = keyword(line, "root");
  if (!rest) parse_fail(line.number, "expected 'root R'");
  const auto tokens = words(*rest);
  if (tokens.size() != 1) parse_fail(line.number, "expected exactly one root id");
  return parse_id(tokens.front(), line.number);
}

std::string join(const VertexSet& vs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(vs[i]);
  }
  return out;
}

}  // namespace

RootedHypertree parse_hypertree(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) fail(ErrorKind::ParseError, "line 1: missing 'root R' header");
  const Vertex root = parse_root(lines.front());
  std::vector<VertexSet> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (keyword(lines[i], "root")) parse_fail(lines[i].number, "duplicate root line");
    VertexSet e;
    for (auto token : words(lines[i].text)) e.push_back(parse_id(token, lines[i].number));
    edges.push_back(std::move(e));
  }
  if (edges.empty()) return RootedHypertree::root_only(root);
  return RootedHypertree::validate(root, std::move(edges));
}

std::string emit_hypertree(const RootedHypertree& t) {
  std::string out = "root " + std::to_string(t.root()) + "\n";
  for (std::size_t i = 0; i < t.edge_count(); ++i) {
    out += join(t.hyperedges()[i], ' ') + "  # " + to_string(t.marked_hyperedge(i)) + "\n";
  }
  return out;
}

PruferCode parse_code(std::string_view text) {
  std::optional<Vertex> root;
  std::optional<Variant> variant;
  std::optional<std::vector<VertexSet>> parts;
  std::optional<std::vector<Vertex>> word;
  std::size_t last_line = 1;

  for (const Line& line : content_lines(text)) {
    last_line = line.number;
    auto once = [&](bool present, std::string_view key) {
      if (present) parse_fail(line.number, "duplicate '" + std::string(key) + "' line");
    };
    if (keyword(line, "root")) {
      once(root.has_value(), "root");
      root = parse_root(line);
    } else if (auto rest = keyword(line, "variant")) {
      once(variant.has_value(), "variant");
      variant = parse_variant(*rest);
      if (!variant) parse_fail(line.number, "variant must be 'classic' or 'star'");
    } else if (auto rest = keyword(line, "partition")) {
      once(parts.has_value(), "partition");
      parts.emplace();
      if (!rest->empty()) {
        for (auto block : split(*rest, ';')) {
          VertexSet part;
          for (auto token : split(block, ',')) part.push_back(parse_id(trim(token), line.number));
          parts->push_back(std::move(part));
        }
      }
    } else if (auto rest = keyword(line, "word")) {
      once(word.has_value(), "word");
      word.emplace();
      for (auto token : words(*rest)) word->push_back(parse_id(token, line.number));
    } else {
      parse_fail(line.number, "unknown line '" + std::string(line.text) + "'");
    }
  }
  if (!root) parse_fail(last_line, "missing 'root' line");
  if (!variant) parse_fail(last_line, "missing 'variant' line");
  if (!parts) parse_fail(last_line, "missing 'partition' line");
  if (!word) parse_fail(last_line, "missing 'word' line");
  return PruferCode{PruferPartition::make(*root, std::move(*parts)), std::move(*word), *variant};
}

std::string emit_code(const PruferCode& code) {
  std::string out = "root " + std::to_string(code.root()) + "\n";
  out += "variant " + std::string(to_string(code.variant)) + "\n";
  out += "partition";
  for (std::size_t i = 0; i < code.partition.size(); ++i) {
    out += i ? ";" : " ";
    out += join(code.partition.parts()[i], ',');
  }
  out += "\nword";
  for (Vertex v : code.word) out += " " + std::to_string(v);
  out += "\n";
  return out;
}

std::string to_dot(const RootedHypertree& t, std::string_view name, std::string_view label) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  if (!label.empty()) out << "  label=\"" << label << "\";\n";
  out << "  node [shape=circle];\n";
  for (Vertex v : t.vertices()) {
    out << "  v" << v << " [label=\"" << v << "\"" << (v == t.root() ? ", shape=doublecircle" : "")
        << "];\n";
  }
  for (std::size_t i = 0; i < t.edge_count(); ++i) {
    const MarkedHyperedge e = t.marked_hyperedge(i);
    if (e.reduced.size() == 1) {
      out << "  v" << e.reduced.front() << " -- v" << e.marked << ";\n";
      continue;
    }
    out << "  e" << i << " [shape=polygon, sides=" << e.vertices().size()
        << ", label=\"\", width=0.25, height=0.25];\n";
    for (Vertex v : e.reduced) out << "  e" << i << " -- v" << v << ";\n";
    out << "  e" << i << " -- v" << e.marked << " [style=bold];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dot_steps(const RootedHypertree& t) {
  std::string out = to_dot(t, "stage0", "T");
  RootedHypertree cur = t;
  std::size_t stage = 1;
  for (const StarStep& step : star_steps(t)) {
    cur = star_reduce(cur, step.pivot);
    out += to_dot(cur, "stage" + std::to_string(stage++), "*<=" + std::to_string(step.pivot));
  }
  cur = star_reduce(cur, t.root());
  out += to_dot(cur, "stage" + std::to_string(stage), "*<=" + std::to_string(t.root()));
  return out;
}

}  // namespace prufer
