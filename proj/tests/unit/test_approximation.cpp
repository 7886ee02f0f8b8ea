#include <vector>

#include "doctest.h"
#include "dtopw/approximation.hpp"

using namespace dtopw;

namespace {

FiniteSpace sierp() { return FiniteSpace({"0", "1"}, {0b00, 0b10, 0b11}); }

template <class F>
void each_space(int n, F f) {
  for (int k = 1; k <= n; ++k) {
    for (const auto& p : enumerate_posets(k)) f(alexandroff(p));
  }
}

}  // namespace

TEST_SUITE("approximation") {

TEST_CASE("point relations on the Sierpinski space") {
  CHECK(n_approx(sierp(), 0, 1));
  CHECK(d_approx(sierp(), 0, 1));
  CHECK_FALSE(n_approx(sierp(), 1, 0));
  CHECK(compact_points(sierp(), Relation::n) == 0b11);
}

TEST_CASE("finite spaces: d, n and the specialization order coincide") {
  each_space(4, [](const FiniteSpace& x) {
    const auto p = specialization(x);
    for (int a = 0; a < x.size(); ++a) {
      for (int b = 0; b < x.size(); ++b) {
        CHECK(n_approx(x, a, b) == p.leq(a, b));
        CHECK(d_approx(x, a, b) == p.leq(a, b));
      }
      CHECK(approximants(x, a, Relation::d) == p.down(a));
    }
    CHECK(compact_points(x, Relation::n) == x.carrier());
    CHECK(compact_points(x, Relation::d) == x.carrier());
  });
}

TEST_CASE("finite-set approximation is H inside the up-closure of G") {
  const auto s = sierp();
  CHECK(fin_approx(s, 0b01, 0b10, Relation::n) == n_approx(s, 0, 1));
  each_space(3, [](const FiniteSpace& x) {
    const auto p = specialization(x);
    for (Mask g = 1; g <= x.carrier(); ++g) {
      for (Mask h = 1; h <= x.carrier(); ++h) {
        const bool want = subset_of(h, p.up_closure(g));
        CHECK(fin_approx(x, g, h, Relation::n) == want);
        CHECK(fin_approx(x, g, h, Relation::d) == want);
      }
    }
  });
}

TEST_CASE("continuity predicates hold on every finite space") {
  CHECK(is_c_space(sierp()));
  CHECK(is_b_space(sierp()));
  each_space(4, [](const FiniteSpace& x) {
    CHECK(is_c_space(x));
    CHECK(is_b_space(x));
    CHECK(is_d_continuous(x));
    CHECK(is_n_continuous(x));
    CHECK(is_d_algebraic(x));
    CHECK(is_n_algebraic(x));
    CHECK(is_locally_hypercompact(x));
    CHECK(is_hypercompactly_based(x));
  });
  each_space(3, [](const FiniteSpace& x) {
    CHECK(is_d_quasicontinuous(x));
    CHECK(is_n_quasicontinuous(x));
    CHECK(is_d_quasialgebraic(x));
    CHECK(is_n_quasialgebraic(x));
  });
}

TEST_CASE("compact opens of finite spaces are finitely generated") {
  each_space(4, [](const FiniteSpace& x) {
    const auto r = compact_open_is_hypercompact(x);
    CHECK(r.holds);
    CHECK(r.compact == r.hypercompact);
    CHECK(r.opens_checked == static_cast<int>(x.opens().size()));
  });
}

TEST_CASE("the finite handle agrees with the mask computations") {
  const FiniteHandle h(sierp());
  const auto pts = h.points(0);
  REQUIRE(pts.size() == 2);
  const auto r = n_approx(h, pts[0], pts[1]);
  CHECK(r.holds);
  CHECK(r.line().rfind("REL n ", 0) == 0);
  CHECK_FALSE(n_approx(h, pts[1], pts[0]).holds);
  CHECK(d_approx(h, pts[0], pts[1]).holds);
  CHECK(compact_elements(h, Relation::d, 0).size() == 2);
}

}  // TEST_SUITE
