#include <vector>

#include "doctest.h"
#include "dtopw/errors.hpp"
#include "dtopw/johnstone.hpp"

using namespace dtopw;

namespace {

constexpr long kBox = 9;

// Points of the truncation box, used as a pointwise oracle for the algebra.
std::vector<Point> box() {
  std::vector<Point> out;
  for (long m = 1; m <= kBox; ++m) {
    out.push_back(omega_point(m));
    for (long n = 1; n <= kBox; ++n) out.push_back(pair_point(m, n));
  }
  return out;
}

}  // namespace

TEST_SUITE("johnstone") {

TEST_CASE("principal closures") {
  const auto a = j_closure(omega_point(3));
  CHECK(a.contains(pair_point(3, 7)));
  CHECK(a.contains(pair_point(1, 3)));
  CHECK_FALSE(a.contains(pair_point(1, 4)));
  CHECK(j_irreducible(a));
  CHECK(j_generator(a) == omega_point(3));
  CHECK(j_irreducible(j_closure(pair_point(2, 5))));
  CHECK_THROWS_AS(j_closure(top_point()), NotInFragment);
}

TEST_CASE("whole column closes to a band") {
  JGenerators g;
  g.full_columns = {4};
  const auto c = j_closure(g);
  CHECK(c == ClosedSetJ::make({4}, {}, 4));
  CHECK(c.contains(omega_point(4)));
  CHECK(c.contains(pair_point(9, 4)));
  CHECK_FALSE(c.contains(pair_point(9, 5)));
}

TEST_CASE("join and meet agree with union and intersection on a box") {
  const auto elems = enumerate_fragment(4, 2, 1);
  REQUIRE(elems.size() > 50);
  const auto pts = box();
  for (std::size_t i = 0; i < elems.size(); i += 3) {
    for (std::size_t k = 0; k < elems.size(); k += 7) {
      const auto& a = elems[i];
      const auto& b = elems[k];
      const auto j = j_join(a, b);
      const auto m = j_meet(a, b);
      for (const auto& p : pts) {
        CHECK(j.contains(p) == (a.contains(p) || b.contains(p)));
        CHECK(m.contains(p) == (a.contains(p) && b.contains(p)));
      }
      CHECK(a.subset_of(j));
      CHECK(m.subset_of(b));
    }
  }
}

TEST_CASE("meet of two column closures") {
  CHECK(j_meet(j_closure(omega_point(2)), j_closure(omega_point(3))) ==
        ClosedSetJ::make({}, {{2, 3}}, 2));
}

TEST_CASE("irreducibility") {
  CHECK(j_irreducible(j_closure(omega_point(3))));
  CHECK_FALSE(j_irreducible(j_join(j_closure(omega_point(1)), j_closure(omega_point(2)))));
  CHECK(j_irreducible(ClosedSetJ::whole()));
  CHECK_FALSE(j_irreducible(ClosedSetJ::empty()));
  CHECK_FALSE(j_irreducible(j_band(3)));
  const auto d = j_decompose(j_band(2));
  REQUIRE(d.has_value());
  CHECK(j_join(d->first, d->second) == j_band(2));
  // Exactly the principal closures are irreducible among fragment elements.
  for (const auto& a : enumerate_fragment(5, 2, 1)) {
    CAPTURE(a.to_string());
    CHECK(j_irreducible(a) == j_generator(a).has_value());
  }
}

TEST_CASE("bands") {
  const auto b3 = j_band(3);
  CHECK(b3 == ClosedSetJ::make({}, {}, 3));
  CHECK(j_band(2).subset_of(b3));
  CHECK_FALSE(b3.subset_of(j_band(2)));
  CHECK_FALSE(j_maximal_points(b3).has_value());
  const auto chk = j_band_chain_unbounded(4);
  CHECK(chk.passed());
}

TEST_CASE("spectrum topology and separation") {
  for (const auto& c : j_spec_topology_check(5)) {
    CAPTURE(c.line());
    CHECK(c.passed());
  }
  CHECK(j_sigma_equals_upsilon_witness(ClosedSetJ::whole(), 4).trivial);
  const auto r = j_sigma_equals_upsilon_witness(j_closure(omega_point(1)), 6);
  CHECK(r.verified);
  CHECK_FALSE(r.family.empty());
  CHECK(j_sigma_equals_upsilon_witness(j_band(3), 6).verified);
  CHECK(j_sigma_equals_upsilon_witness(ClosedSetJ::empty(), 4).verified);
  CHECK(j_sample_elements().size() == 20);
}

}  // TEST_SUITE
