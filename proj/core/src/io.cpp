#include "dtopw/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "dtopw/errors.hpp"

namespace dtopw {

namespace {

struct Line {
  int number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ws(raw);
    Line l{number, {}};
    for (std::string w; ws >> w;) l.words.push_back(w);
    if (!l.words.empty()) out.push_back(std::move(l));
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

// Splits "key:" from the first word, allowing "key: a" and "key:a".
std::pair<std::string, std::vector<std::string>> keyed(const Line& l) {
  std::string first = l.words.front();
  const auto colon = first.find(':');
  if (colon == std::string::npos) return {"", l.words};
  std::vector<std::string> rest;
  if (colon + 1 < first.size()) rest.push_back(first.substr(colon + 1));
  rest.insert(rest.end(), l.words.begin() + 1, l.words.end());
  return {first.substr(0, colon), rest};
}

std::vector<std::string> header(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError("empty input: expected 'elements:'");
  auto [key, rest] = keyed(lines.front());
  if (key != "elements") fail(lines.front().number, "expected 'elements:'");
  if (rest.empty()) fail(lines.front().number, "no elements");
  std::vector<std::string> sorted = rest;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DuplicateLabel("line " + std::to_string(lines.front().number) + ": duplicate element");
  }
  return rest;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

FinitePoset parse_poset(std::string_view text) {
  const auto lines = tokenize(text);
  auto labels = header(lines);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& w = lines[i].words;
    if (w.size() != 3 || w[1] != "<=") fail(lines[i].number, "expected 'a <= b'");
    pairs.emplace_back(w[0], w[2]);
  }
  return FinitePoset::from_relations(std::move(labels), pairs);
}

FiniteSpace parse_space(std::string_view text) {
  const auto lines = tokenize(text);
  auto labels = header(lines);
  if (labels.size() > static_cast<std::size_t>(kMaxMaskPoints)) {
    throw BoundExceeded("spaces hold at most 64 points");
  }
  std::vector<Mask> opens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [key, rest] = keyed(lines[i]);
    if (key != "open") fail(lines[i].number, "expected 'open:'");
    Mask u = 0;
    for (const auto& name : rest) {
      const auto it = std::find(labels.begin(), labels.end(), name);
      if (it == labels.end()) throw UnknownLabel("line " + std::to_string(lines[i].number) + ": " + name);
      u |= bit(static_cast<int>(it - labels.begin()));
    }
    opens.push_back(u);
  }
  return FiniteSpace(std::move(labels), std::move(opens));
}

FiniteLattice parse_lattice(std::string_view text) { return FiniteLattice::from_poset(parse_poset(text)); }

std::string write_poset(const FinitePoset& p) {
  std::ostringstream os;
  os << "elements:";
  for (const auto& l : p.labels()) os << ' ' << l;
  os << '\n';
  for (const auto& [a, b] : p.covers()) os << p.label(a) << " <= " << p.label(b) << '\n';
  return os.str();
}

std::string write_space(const FiniteSpace& x) {
  std::ostringstream os;
  os << "elements:";
  for (const auto& l : x.labels()) os << ' ' << l;
  os << '\n';
  for (Mask u : x.opens()) {
    if (u == 0 || u == x.carrier()) continue;
    os << "open:";
    for_each_bit(u, [&](int p) { os << ' ' << x.label(p); });
    os << '\n';
  }
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
}

FiniteSpace load_space(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  if (path.extension() == ".poset") return alexandroff(parse_poset(text));
  return parse_space(text);
}

std::string dot_hasse(const FinitePoset& p, std::string_view name) {
  std::vector<std::string> nodes = p.labels();
  std::sort(nodes.begin(), nodes.end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [a, b] : p.covers()) edges.emplace_back(p.label(a), p.label(b));
  std::sort(edges.begin(), edges.end());
  std::ostringstream os;
  os << "digraph " << quoted(std::string(name)) << " {\n  rankdir=BT;\n";
  for (const auto& n : nodes) os << "  " << quoted(n) << ";\n";
  for (const auto& [a, b] : edges) os << "  " << quoted(a) << " -> " << quoted(b) << ";\n";
  os << "}\n";
  return os.str();
}

std::string dot_specialization(const FiniteSpace& x) {
  return dot_hasse(specialization(x), "specialization");
}

std::string dot_open_lattice(const FiniteSpace& x) {
  return dot_hasse(open_lattice(x).order(), "openlattice");
}

}  // namespace dtopw
