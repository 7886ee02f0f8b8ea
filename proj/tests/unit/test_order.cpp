#include <algorithm>
#include <utility>
#include <vector>

#include "doctest.h"
#include "dtopw/errors.hpp"
#include "dtopw/order.hpp"

using namespace dtopw;

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

FinitePoset chain2() {
  const Pairs r{{"a", "b"}};
  return FinitePoset::from_relations({"a", "b"}, r);
}

FinitePoset diamond() {
  const Pairs r{{"bot", "x"}, {"bot", "y"}, {"x", "top"}, {"y", "top"}};
  return FinitePoset::from_relations({"bot", "x", "y", "top"}, r);
}

// Counts reflexive, antisymmetric, transitive relations on n points by
// trying every n×n boolean matrix.
long brute_force_poset_count(int n) {
  long count = 0;
  const int cells = n * n;
  for (long m = 0; m < (1L << cells); ++m) {
    auto r = [&](int a, int b) { return ((m >> (a * n + b)) & 1) != 0; };
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (!r(a, a)) ok = false;
      for (int b = 0; b < n && ok; ++b) {
        if (a != b && r(a, b) && r(b, a)) ok = false;
        for (int c = 0; c < n && ok; ++c) {
          if (r(a, b) && r(b, c) && !r(a, c)) ok = false;
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST_SUITE("order") {

TEST_CASE("from_relations closes and validates") {
  const auto c = chain2();
  CHECK(c.size() == 2);
  CHECK(c.leq(0, 1));
  CHECK_FALSE(c.leq(1, 0));

  const auto s = FinitePoset::from_relations({"a"}, Pairs{});
  CHECK(s.size() == 1);
  CHECK(s.leq(0, 0));

  const Pairs cyc{{"a", "b"}, {"b", "c"}, {"c", "a"}};
  CHECK_THROWS_AS(FinitePoset::from_relations({"a", "b", "c"}, cyc), CycleDetected);
  const Pairs bad{{"a", "z"}};
  CHECK_THROWS_AS(FinitePoset::from_relations({"a", "b"}, bad), UnknownLabel);
  CHECK_THROWS_AS(FinitePoset::from_relations({"a", "a"}, Pairs{}), DuplicateLabel);
}

TEST_CASE("transitive closure") {
  const Pairs r{{"a", "b"}, {"b", "c"}};
  const auto p = FinitePoset::from_relations({"a", "b", "c"}, r);
  CHECK(p.leq(0, 2));
  CHECK(p.covers().size() == 2);
}

TEST_CASE("from_predicate rejects non-orders") {
  CHECK_THROWS_AS(FinitePoset::from_predicate({"a", "b"}, [](int, int) { return true; }),
                  CycleDetected);
  CHECK_THROWS_AS(FinitePoset::from_predicate({"a", "b"}, [](int a, int b) { return a < b; }),
                  NotAPartialOrder);
}

TEST_CASE("is_directed") {
  const auto anti = FinitePoset::from_relations({"a", "b"}, Pairs{});
  CHECK_FALSE(is_directed(anti, 0b11));
  CHECK(is_directed(chain2(), 0b11));
  CHECK(is_directed(diamond(), 0b1110));
  CHECK_FALSE(is_directed(diamond(), 0b0110));
  CHECK_FALSE(is_directed(diamond(), 0));
}

TEST_CASE("directed_subsets") {
  auto sorted = [](std::vector<Mask> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(directed_subsets(chain2())) == std::vector<Mask>{0b01, 0b10, 0b11});
  const auto anti = FinitePoset::from_relations({"a", "b"}, Pairs{});
  CHECK(sorted(directed_subsets(anti)) == std::vector<Mask>{0b01, 0b10});
  CHECK(directed_subsets(FinitePoset::from_relations({"a"}, Pairs{})).size() == 1);
}

TEST_CASE("labeled poset counts match brute force") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(static_cast<long>(enumerate_posets(n).size()) == brute_force_poset_count(n));
  }
  CHECK(enumerate_posets(2).size() == 3);
  CHECK(enumerate_posets(3).size() == 19);
}

TEST_CASE("posets up to isomorphism") {
  const std::vector<std::size_t> expected{1, 2, 5, 16, 63, 318};
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(enumerate_posets(n, true).size() == expected[static_cast<std::size_t>(n - 1)]);
  }
}

TEST_CASE("for_each_poset visits the enumeration") {
  long seen = 0;
  for_each_poset(3, [&](const FinitePoset&) { ++seen; });
  CHECK(seen == 19);
}

TEST_CASE("upper sets") {
  CHECK(upper_sets(diamond()).size() == 6);
  CHECK(upper_sets(chain2()).size() == 3);
  const auto anti = FinitePoset::from_relations({"a", "b"}, Pairs{});
  CHECK(upper_sets(anti).size() == 4);
}

TEST_CASE("bounds and extrema") {
  const auto d = diamond();
  CHECK(d.supremum(0b0110) == 3);
  CHECK(d.infimum(0b0110) == 0);
  CHECK(d.minimal(0b0110) == 0b0110);
  CHECK_FALSE(d.maximum(0b0110).has_value());
  CHECK(d.up_closure(0b0010) == 0b1010);
  CHECK(d.dual().leq(3, 0));
}

TEST_CASE("monotone maps are validated") {
  const auto c = chain2();
  CHECK_NOTHROW(MonotoneMap(c, c, {0, 1}));
  CHECK_THROWS_AS(MonotoneMap(c, c, {1, 0}), NotMonotone);
}

}  // TEST_SUITE
