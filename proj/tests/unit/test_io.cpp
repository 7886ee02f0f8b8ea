#include <algorithm>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "dtopw/errors.hpp"
#include "dtopw/io.hpp"

using namespace dtopw;

namespace {

std::filesystem::path data(const std::string& name) {
  return std::filesystem::path(DTOPW_TEST_DATA) / name;
}

long count(const std::string& s, const std::string& needle) {
  long n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

// Nodes are the lines declaring a quoted name without an edge.
long dot_nodes(const std::string& dot) {
  long n = 0;
  std::size_t start = 0;
  while (start < dot.size()) {
    auto end = dot.find('\n', start);
    if (end == std::string::npos) end = dot.size();
    const auto line = dot.substr(start, end - start);
    if (line.find('"') != std::string::npos && line.find("->") == std::string::npos &&
        line.find("digraph") == std::string::npos) {
      ++n;
    }
    start = end + 1;
  }
  return n;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("parse posets and spaces") {
  const auto d = parse_poset(read_file(data("diamond.poset")));
  CHECK(d.size() == 4);
  CHECK(d.leq(0, 3));
  const auto s = load_space(data("sierpinski.space"));
  CHECK(s.opens().size() == 3);
  CHECK(load_space(data("diamond.poset")).opens().size() == 6);
  CHECK(load_space(data("point.space")).size() == 1);
  CHECK(parse_lattice(read_file(data("m3.poset"))).size() == 5);
  CHECK_THROWS_AS(parse_lattice(read_file(data("antichain2.poset"))), NotALattice);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(load_space(data("bad_label.space")), UnknownLabel);
  try {
    load_space(data("bad_syntax.space"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_poset("elements: a a\n"), DuplicateLabel);
  CHECK_THROWS_AS(parse_poset("elements: a b\na <= b\nb <= a\n"), CycleDetected);
  CHECK_THROWS_AS(parse_space("elements: a b\n"), NotT0);
  CHECK_THROWS_AS(parse_space("open: a\n"), ParseError);
  CHECK_THROWS_AS(read_file(data("missing.space")), Error);
}

TEST_CASE("round trips") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : enumerate_posets(n)) {
      const auto q = parse_poset(write_poset(p));
      REQUIRE(q.size() == p.size());
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) CHECK(q.leq(a, b) == p.leq(a, b));
      }
      const auto x = alexandroff(p);
      const auto y = parse_space(write_space(x));
      CHECK(y.labels() == x.labels());
      CHECK(y.opens() == x.opens());
    }
  }
}

TEST_CASE("dot export") {
  const auto s = load_space(data("sierpinski.space"));
  const auto spec = dot_specialization(s);
  CHECK(dot_nodes(spec) == 2);
  CHECK(count(spec, "->") == 1);
  const auto lattice = dot_open_lattice(load_space(data("diamond.poset")));
  CHECK(dot_nodes(lattice) == 6);
  const auto one = dot_hasse(parse_poset("elements: p\n"));
  CHECK(dot_nodes(one) == 1);
  CHECK(count(one, "->") == 0);
  CHECK(dot_hasse(parse_poset("elements: b a\n")) == dot_hasse(parse_poset("elements: a b\n")));
}

}  // TEST_SUITE
