#include <algorithm>
#include <vector>

#include "doctest.h"
#include "dtopw/constructions.hpp"
#include "dtopw/errors.hpp"
#include "dtopw/lattice_analysis.hpp"

using namespace dtopw;

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

std::vector<FiniteSpace> spaces_up_to(int n) {
  std::vector<FiniteSpace> out;
  for (int k = 1; k <= n; ++k) {
    for (const auto& p : enumerate_posets(k, true)) out.push_back(alexandroff(p));
  }
  return out;
}

std::vector<Mask> sorted(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// W is open in X × Y iff each of its points has a rectangle U × V inside W.
std::vector<Mask> rectangle_opens(const FiniteSpace& x, const FiniteSpace& y) {
  const int nx = x.size();
  const int ny = y.size();
  const int n = nx * ny;
  std::vector<Mask> out;
  for (Mask w = 0; w < (Mask{1} << n); ++w) {
    bool open = true;
    for (int p = 0; p < n && open; ++p) {
      if (!has(w, p)) continue;
      bool found = false;
      for (Mask u : x.opens()) {
        if (!has(u, p / ny)) continue;
        for (Mask v : y.opens()) {
          if (!has(v, p % ny)) continue;
          Mask rect = 0;
          for (int a : members(u)) {
            for (int b : members(v)) rect |= bit(a * ny + b);
          }
          if (subset_of(rect, w)) found = true;
        }
      }
      open = found;
    }
    if (open) out.push_back(w);
  }
  return out;
}

FinitePoset diamond() {
  const Pairs r{{"bot", "x"}, {"bot", "y"}, {"x", "top"}, {"y", "top"}};
  return FinitePoset::from_relations({"bot", "x", "y", "top"}, r);
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("products of Sierpinski spaces") {
  const auto s = sierpinski();
  const auto p = product(s, s);
  CHECK(p.size() == 4);
  CHECK(p.opens().size() == 6);
  CHECK(sorted(tensor(s, s).opens()) == sorted(p.opens()));
  CHECK(p.label(1) == "(0,1)");
}

TEST_CASE("product, tensor and categorical product coincide on small spaces") {
  const auto small = spaces_up_to(3);
  for (const auto& x : small) {
    for (const auto& y : small) {
      const auto p = sorted(product(x, y).opens());
      CHECK(p == rectangle_opens(x, y));
      CHECK(sorted(tensor(x, y).opens()) == p);
      CHECK(sorted(cat_product(x, y).opens()) == p);
      CHECK(sorted(cat_product_by_slices(x, y).opens()) == p);
    }
  }
}

TEST_CASE("unit law and powers") {
  for (const auto& x : spaces_up_to(3)) {
    CHECK(find_homeomorphism(product(point_space(), x), x).has_value());
  }
  const auto s = sierpinski();
  CHECK(find_homeomorphism(power(s, 2), product(s, s)).has_value());
  CHECK(power(s, 3).size() == 8);
  CHECK(power(s, 3).label(6) == "(1,1,0)");
}

TEST_CASE("exponentials") {
  const auto s = sierpinski();
  const auto e = exponential(s, s);
  CHECK(e.maps.size() == 3);
  const FiniteSpace chain3 = alexandroff(FinitePoset::from_relations(
      {"a", "b", "c"}, Pairs{{"a", "b"}, {"b", "c"}}));
  CHECK(find_homeomorphism(e.space, chain3).has_value());
  for (const auto& x : spaces_up_to(3)) {
    const auto ex = exponential(x, s);
    CHECK(find_homeomorphism(ex.space, scott_topology(open_lattice(x).order())).has_value());
    CHECK(find_homeomorphism(exponential(point_space(), x).space, x).has_value());
  }
  CHECK_THROWS_AS(exponential(power(s, 3), power(s, 3), 4096), BoundExceeded);
}

TEST_CASE("continuous maps are the monotone maps") {
  for (const auto& x : spaces_up_to(3)) {
    for (const auto& y : spaces_up_to(2)) {
      const auto px = specialization(x);
      const auto py = specialization(y);
      long monotone = 0;
      const int nx = x.size();
      const int ny = y.size();
      long total = 1;
      for (int i = 0; i < nx; ++i) total *= ny;
      for (long code = 0; code < total; ++code) {
        std::vector<int> t;
        long c = code;
        for (int i = 0; i < nx; ++i) {
          t.push_back(static_cast<int>(c % ny));
          c /= ny;
        }
        bool ok = true;
        for (int a = 0; a < nx; ++a) {
          for (int b = 0; b < nx; ++b) {
            if (px.leq(a, b) && !py.leq(t[a], t[b])) ok = false;
          }
        }
        if (ok) ++monotone;
      }
      CHECK(static_cast<long>(continuous_maps(x, y).size()) == monotone);
    }
  }
}

TEST_CASE("postcomposition is continuous") {
  const auto s = sierpinski();
  const auto from = exponential(s, s);
  const auto to = exponential(s, point_space());
  const auto t = postcompose(from, to, {0, 0});
  CHECK(t.size() == 3);
  CHECK(is_continuous(from.space, to.space, t));
}

TEST_CASE("core compactness and currying") {
  const auto r = check_core_compact(sierpinski());
  CHECK(r.passed());
  for (const auto& x : spaces_up_to(3)) {
    const auto c = check_core_compact(x);
    CHECK(c.graph_open);
    CHECK(c.agree());
  }
  const auto two = spaces_up_to(2);
  for (const auto& z : two) {
    for (const auto& x : two) {
      for (const auto& y : two) {
        const auto cr = check_currying(z, x, y);
        CHECK(cr.bijective);
        CHECK(cr.uncurried == cr.curried);
      }
    }
  }
}

TEST_CASE("ideal completion") {
  const auto chain = alexandroff(FinitePoset::from_relations({"a", "b"}, Pairs{{"a", "b"}}));
  const auto c = ideal_completion(chain);
  CHECK(c.ideals == std::vector<Mask>{0b01, 0b11});
  CHECK(find_homeomorphism(c.space, chain).has_value());
  const auto anti = alexandroff(FinitePoset::from_relations({"a", "b"}, Pairs{}));
  const auto ca = ideal_completion(anti);
  CHECK(ca.ideals.size() == 2);
  CHECK(ca.space.opens().size() == 4);

  const auto sup = sup_map(chain, c);
  CHECK(sup(1) == 1);
  const auto g = lower_adjoint(chain, c);
  CHECK(g.holds());
  CHECK(g.lower(1) == 1);

  for (const auto& x : spaces_up_to(4)) {
    const auto ic = ideal_completion(x);
    CHECK(ic.ideals.size() == static_cast<std::size_t>(x.size()));
    const auto s = sup_map(x, ic);
    const auto adj = lower_adjoint(x, ic);
    for (int p = 0; p < x.size(); ++p) CHECK(s(adj.lower(p)) == p);
  }
}

TEST_CASE("galois connections are checked") {
  const auto p = FinitePoset::from_relations({"a", "b"}, Pairs{{"a", "b"}});
  CHECK_NOTHROW(GaloisConnection::make(MonotoneMap(p, p, {0, 1}), MonotoneMap(p, p, {0, 1})));
  CHECK_THROWS_AS(
      GaloisConnection::make(MonotoneMap(p, p, {1, 1}), MonotoneMap(p, p, {0, 1})),
      NotAGaloisConnection);
}

TEST_CASE("retract transfer") {
  const auto s = sierpinski();
  CHECK(retract_transfer(s, s, {0, 1}, {0, 1}).passed);
  const auto d = alexandroff(diamond());
  const auto chain = alexandroff(FinitePoset::from_relations({"a", "b"}, Pairs{{"a", "b"}}));
  // a ↦ bot, b ↦ top; bot, x ↦ a and y, top ↦ b.
  CHECK(retract_transfer(chain, d, {0, 0, 1, 1}, {0, 3}).passed);
  CHECK_THROWS_AS(retract_transfer(s, s, {0, 0}, {0, 1}), NotARetraction);
}

TEST_CASE("s_n maps") {
  const auto s = sierpinski();
  CHECK(s_n_map(s, 1).continuous);
  const auto anti = alexandroff(FinitePoset::from_relations({"a", "b"}, Pairs{}));
  const auto r = s_n_map(anti, 2);
  CHECK(r.continuous);
  CHECK(r.sigma_equals_upsilon);
  // (a,b) has index 1; its image is the closed set {a,b}.
  const auto sets = anti.closed_sets();
  CHECK(sets[static_cast<std::size_t>(r.table[1])] == 0b11);
  CHECK_THROWS_AS(s_n_map(s, 4), BoundExceeded);
}

TEST_CASE("eta and diamond") {
  const auto s = sierpinski();
  const auto r = eta_diamond(s);
  CHECK(r.passed());
  const auto sets = s.closed_sets();
  const auto& opens = s.opens();
  for (std::size_t u = 0; u < opens.size(); ++u) {
    if (opens[u] == 0) CHECK(r.diamond[u] == 0);
    if (opens[u] == 0b10) {
      REQUIRE(cardinality(r.diamond[u]) == 1);
      CHECK(sets[static_cast<std::size_t>(lowest(r.diamond[u]))] == 0b11);
    }
  }
  for (const auto& x : spaces_up_to(4)) CHECK(eta_diamond(x).passed());
}

TEST_CASE("finite lattices carry their Scott topology") {
  for (const auto& x : spaces_up_to(3)) CHECK(finite_lattice_is_scott_space(open_lattice(x)));
}

}  // TEST_SUITE
