#include <vector>

#include "doctest.h"
#include "dtopw/errors.hpp"
#include "dtopw/lattice_analysis.hpp"

using namespace dtopw;

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

FiniteLattice lattice(std::vector<std::string> labels, const Pairs& r) {
  return FiniteLattice::from_poset(FinitePoset::from_relations(std::move(labels), r));
}

FiniteLattice m3() {
  return lattice({"0", "a", "b", "c", "1"},
                 {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

FiniteLattice n5() {
  return lattice({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

FiniteLattice chain(int n) {
  auto labels = default_labels(n);
  Pairs r;
  for (int i = 0; i + 1 < n; ++i) r.emplace_back(labels[i], labels[i + 1]);
  return lattice(labels, r);
}

// Lattices among the unlabeled posets on 1..6 points, computed once.
const std::vector<FiniteLattice>& small_lattices() {
  static const std::vector<FiniteLattice> all = [] {
    std::vector<FiniteLattice> out;
    for (int k = 1; k <= 6; ++k) {
      for (const auto& p : enumerate_posets(k, true)) {
        try {
          out.push_back(FiniteLattice::from_poset(p));
        } catch (const NotALattice&) {
        }
      }
    }
    return out;
  }();
  return all;
}

// Distributivity from the order alone, using supremum/infimum of pairs.
bool distributive_by_order(const FinitePoset& p) {
  const int n = p.size();
  auto j = [&](int a, int b) { return *p.supremum(bit(a) | bit(b)); };
  auto m = [&](int a, int b) { return *p.infimum(bit(a) | bit(b)); };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (m(a, j(b, c)) != j(m(a, b), m(a, c))) return false;
      }
    }
  }
  return true;
}

template <class F>
void each_space(int n, F f) {
  for (int k = 1; k <= n; ++k) {
    for (const auto& p : enumerate_posets(k)) f(alexandroff(p));
  }
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("lattice construction") {
  CHECK_THROWS_AS(FiniteLattice::from_poset(FinitePoset::from_relations({"a", "b"}, Pairs{})),
                  NotALattice);
  const auto l = m3();
  CHECK(l.join(1, 2) == 4);
  CHECK(l.meet(1, 2) == 0);
  CHECK(l.join_all(0) == l.bottom());
  CHECK(l.meet_all(0) == l.top());
}

TEST_CASE("distributivity") {
  CHECK_FALSE(is_distributive(m3()));
  CHECK_FALSE(is_distributive(n5()));
  CHECK(is_distributive(chain(3)));
  CHECK_FALSE(is_completely_distributive(m3()));
  CHECK(is_completely_distributive(chain(3)));
  // The lattice count for n ≤ 6 is 1, 1, 1, 2, 5, 15.
  const auto ls = small_lattices();
  CHECK(ls.size() == 25);
  for (const auto& l : ls) {
    CHECK(is_distributive(l) == distributive_by_order(l.order()));
    CHECK(is_completely_distributive(l) == is_completely_distributive(l.dual()));
  }
}

TEST_CASE("open lattices are completely distributive") {
  each_space(4, [](const FiniteSpace& x) { CHECK(is_completely_distributive(open_lattice(x))); });
}

TEST_CASE("coprimes and primes") {
  const FiniteSpace s({"0", "1"}, {0b00, 0b10, 0b11});
  const auto c = closed_lattice(s);
  Mask expected = 0;
  for (int i = 0; i < c.size(); ++i) {
    if (c.label(i) == "{0}" || c.label(i) == "{0,1}") expected |= bit(i);
  }
  CHECK(coprimes(c) == expected);

  const auto b = lattice({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
  CHECK(coprimes(b) == (bit(1) | bit(2)));
  CHECK(primes(b) == (bit(1) | bit(2)));

  // In C(X) the co-primes are exactly the point closures.
  each_space(4, [](const FiniteSpace& x) {
    const auto cl = closed_lattice(x);
    const auto sets = x.closed_sets();
    Mask want = 0;
    for (int p = 0; p < x.size(); ++p) {
      const Mask down = x.closure(bit(p));
      for (std::size_t k = 0; k < sets.size(); ++k) {
        if (sets[k] == down) want |= bit(static_cast<int>(k));
      }
    }
    CHECK(coprimes(cl) == want);
  });
}

TEST_CASE("hyperbelow collapses to the order on finite lattices") {
  CHECK(hyperbelow(chain(2), 0, 1));
  CHECK(hyperbelow(m3(), 1, 4));
  for (const auto& l : small_lattices()) {
    const auto upper = upper_topology(l.order());
    for (int x = 0; x < l.size(); ++x) {
      for (int y = 0; y < l.size(); ++y) {
        CHECK(hyperbelow(l, x, y) == l.leq(x, y));
        CHECK(hyperbelow(l, x, y) == has(upper.interior(l.order().up(x)), y));
      }
    }
    CHECK(is_hypercontinuous(l));
    CHECK(is_hyperalgebraic(l));
  }
  CHECK(is_hypercontinuous(chain(1)));
}

TEST_CASE("hyperbelow_open agrees with the lattice relation") {
  const FiniteSpace s({"0", "1"}, {0b00, 0b10, 0b11});
  CHECK(hyperbelow_open(s, 0b10, 0b10));
  CHECK(hyperbelow_open(s, 0b10, 0b11));
  each_space(4, [](const FiniteSpace& x) {
    const auto l = open_lattice(x);
    const auto& opens = x.opens();
    for (int i = 0; i < l.size(); ++i) {
      for (int j = 0; j < l.size(); ++j) {
        CHECK(hyperbelow_open(x, opens[i], opens[j]) == hyperbelow(l, i, j));
      }
    }
    CHECK(is_hypercontinuous(l));
  });
}

TEST_CASE("waybelow on finite lattices is the order") {
  for (const auto& l : small_lattices()) {
    for (int x = 0; x < l.size(); ++x) {
      for (int y = 0; y < l.size(); ++y) CHECK(waybelow(l, x, y) == l.leq(x, y));
    }
    CHECK(is_continuous_lattice(l));
    CHECK(is_algebraic_lattice(l));
  }
}

TEST_CASE("spectrum") {
  CHECK_THROWS_AS(spectrum(m3()), NotDistributive);
  CHECK(spectrum(chain(2)).size() == 1);
  const FiniteSpace s({"0", "1"}, {0b00, 0b10, 0b11});
  CHECK(find_homeomorphism(spectrum(open_lattice(s)), s).has_value());
  each_space(4, [](const FiniteSpace& x) {
    CHECK(find_homeomorphism(spectrum(open_lattice(x)), x).has_value());
  });
}

}  // TEST_SUITE
