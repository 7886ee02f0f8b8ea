#include <algorithm>
#include <vector>

#include "doctest.h"
#include "dtopw/errors.hpp"
#include "dtopw/topology.hpp"

using namespace dtopw;

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

FiniteSpace sierp() { return FiniteSpace({"0", "1"}, {0b00, 0b10, 0b11}); }
FiniteSpace discrete2() { return FiniteSpace({"a", "b"}, {0b00, 0b01, 0b10, 0b11}); }

FinitePoset diamond() {
  const Pairs r{{"bot", "x"}, {"bot", "y"}, {"x", "top"}, {"y", "top"}};
  return FinitePoset::from_relations({"bot", "x", "y", "top"}, r);
}

FinitePoset chain2() {
  const Pairs r{{"a", "b"}};
  return FinitePoset::from_relations({"a", "b"}, r);
}

// All finite T0 spaces from labeled posets on up to n points.
template <class F>
void each_space(int n, F f) {
  for (int k = 1; k <= n; ++k) {
    for (const auto& p : enumerate_posets(k)) f(alexandroff(p));
  }
}

bool same_opens(const FiniteSpace& a, const FiniteSpace& b) {
  auto x = a.opens();
  auto y = b.opens();
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

}  // namespace

TEST_SUITE("topology") {

TEST_CASE("construction checks the axioms") {
  CHECK_THROWS_AS(FiniteSpace({"a", "b", "c"}, {0b001, 0b010}), NotATopology);
  CHECK_THROWS_AS(FiniteSpace({"a", "b"}, {0b00, 0b11}), NotT0);
  CHECK(sierp().opens().size() == 3);
}

TEST_CASE("specialization") {
  const auto s = specialization(sierp());
  CHECK(s.leq(0, 1));
  CHECK_FALSE(s.leq(1, 0));
  const auto d = specialization(discrete2());
  CHECK_FALSE(d.leq(0, 1));
  CHECK_FALSE(d.leq(1, 0));
  const auto back = specialization(alexandroff(diamond()));
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) CHECK(back.leq(a, b) == diamond().leq(a, b));
  }
}

TEST_CASE("alexandroff opens are the upper sets") {
  const auto c = alexandroff(chain2());
  CHECK(same_opens(c, FiniteSpace({"a", "b"}, {0b00, 0b10, 0b11})));
  CHECK(alexandroff(FinitePoset::from_relations({"a", "b"}, Pairs{})).opens().size() == 4);
  CHECK(alexandroff(diamond()).opens().size() == 6);
}

TEST_CASE("convergence of finite directed sets") {
  CHECK(converges(sierp(), 0b10, 0));
  CHECK_FALSE(converges(sierp(), 0b01, 1));
  // Brute-force oracle: D converges to x iff every open set holding x meets D.
  each_space(4, [](const FiniteSpace& x) {
    const auto p = specialization(x);
    for (Mask d : directed_subsets(p)) {
      const int top = *p.maximum(d);
      for (int pt = 0; pt < x.size(); ++pt) {
        bool by_opens = true;
        for (Mask u : x.opens()) {
          if (has(u, pt) && (u & d) == 0) by_opens = false;
        }
        CHECK(converges(x, d, pt) == by_opens);
        CHECK(converges(x, d, pt) == p.leq(pt, top));
      }
    }
  });
}

TEST_CASE("d_topology is the Alexandroff reflection and idempotent") {
  CHECK(same_opens(d_topology(sierp()), sierp()));
  each_space(4, [](const FiniteSpace& x) {
    const auto d = d_topology(x);
    CHECK(same_opens(d, alexandroff(specialization(x))));
    CHECK(same_opens(d_topology(d), d));
    CHECK(is_directed_space(x));
  });
}

TEST_CASE("open and closed lattices") {
  CHECK(open_lattice(sierp()).size() == 3);
  CHECK(closed_lattice(sierp()).size() == 3);
  CHECK(open_lattice(discrete2()).size() == 4);
  each_space(4, [](const FiniteSpace& x) {
    CHECK(open_lattice(x).size() == closed_lattice(x).size());
  });
}

TEST_CASE("scott and upper topologies") {
  CHECK(same_opens(scott_topology(chain2()), alexandroff(chain2())));
  CHECK(same_opens(upper_topology(diamond()), alexandroff(diamond())));
  const auto anti3 = FinitePoset::from_relations({"a", "b", "c"}, Pairs{});
  CHECK(upper_topology(anti3).opens().size() == 8);
}

TEST_CASE("interior and closure") {
  const auto s = sierp();
  CHECK(s.interior(0b01) == 0);
  CHECK(s.closure(0b10) == 0b11);
  CHECK(s.minimal_neighborhood(0) == 0b11);
  CHECK(s.minimal_neighborhood(1) == 0b10);
}

TEST_CASE("homeomorphism search and continuity") {
  const FiniteSpace renamed({"p", "q"}, {0b00, 0b01, 0b11});
  const auto h = find_homeomorphism(sierp(), renamed);
  REQUIRE(h.has_value());
  CHECK((*h)[1] == 0);
  CHECK_FALSE(find_homeomorphism(sierp(), discrete2()).has_value());
  CHECK(is_continuous(sierp(), sierp(), {0, 1}));
  CHECK_FALSE(is_continuous(sierp(), sierp(), {1, 0}));
}

}  // TEST_SUITE
