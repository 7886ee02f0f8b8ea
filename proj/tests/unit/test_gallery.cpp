#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "dtopw/errors.hpp"
#include "dtopw/gallery.hpp"

using namespace dtopw;

namespace {

std::string gallery_text(int depth) {
  std::string out;
  for (const auto& name : gallery_names()) out += run_gallery_claims(name, depth).text();
  return out;
}

const ClaimResult& claim(const GalleryReport& r, const std::string& id) {
  for (const auto& c : r.claims) {
    if (c.id.size() >= id.size() && c.id.compare(c.id.size() - id.size(), id.size(), id) == 0) {
      return c;
    }
  }
  FAIL("missing claim " << id);
  return r.claims.front();
}

}  // namespace

TEST_SUITE("gallery") {

TEST_CASE("names and lookup") {
  CHECK(gallery_names().size() == 5);
  CHECK_THROWS_AS(gallery_space("nope"), UnknownName);
  for (const auto& n : gallery_names()) CHECK(gallery_space(n)->name() == n);
}

TEST_CASE("orders") {
  const auto j = gallery_space("johnstone_scott");
  CHECK(j->leq(pair_point(1, 2), omega_point(3)));
  CHECK(j->leq(pair_point(4, 2), omega_point(3)));
  CHECK_FALSE(j->leq(pair_point(4, 5), omega_point(3)));
  CHECK(j->leq(pair_point(2, 1), pair_point(2, 5)));
  const auto p = gallery_space("example_P_scott");
  CHECK(p->leq(pair_point(1, 3), omega_point(5)));
  CHECK_FALSE(p->leq(pair_point(2, 3), omega_point(5)));
  CHECK(p->leq(pair_point(5, 3), omega_point(5)));
}

TEST_CASE("nat_top_upper approximation") {
  const auto s = gallery_space("nat_top_upper");
  CHECK(d_approx(*s, top_point(), top_point()).holds);
  CHECK_FALSE(n_approx(*s, top_point(), top_point()).holds);
  const auto kd = compact_elements(*s, Relation::d, 6);
  const auto kn = compact_elements(*s, Relation::n, 6);
  CHECK(std::find(kd.begin(), kd.end(), top_point()) != kd.end());
  CHECK(std::find(kn.begin(), kn.end(), top_point()) == kn.end());
}

TEST_CASE("example P: (1,n) approximates omega_1 only in the directed sense") {
  const auto s = gallery_space("example_P_scott");
  for (long n = 1; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(d_approx(*s, pair_point(1, n), omega_point(1)).holds);
    CHECK_FALSE(n_approx(*s, pair_point(1, n), omega_point(1)).holds);
  }
}

TEST_CASE("cofinite naturals") {
  const auto s = gallery_space("nat_cofinite");
  CHECK(compact_elements(*s, Relation::n, 6).empty());
  const auto r = run_gallery_claims("nat_cofinite", 8);
  CHECK(r.passed());
  CHECK(claim(r, "U=N-{0}-compact").actual);
  CHECK_FALSE(claim(r, "U=N-{0}-hypercompact").actual);
}

TEST_CASE("every claim list passes") {
  for (const auto& n : gallery_names()) {
    CAPTURE(n);
    const auto r = verify_gallery_claims(n, 10);
    CHECK(r.passed());
    CHECK_FALSE(r.claims.empty());
  }
  const auto top = run_gallery_claims("nat_top_upper", 10);
  CHECK(claim(top, "singleton-top-directed-open").actual);
  CHECK_FALSE(claim(top, "singleton-top-open").actual);
  CHECK_FALSE(claim(top, "directed-space").actual);
}

TEST_CASE("claim report matches the golden list") {
  std::ifstream in(std::string(DTOPW_GOLDEN) + "/gallery_claims.txt");
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(gallery_text(10) == ss.str());
}

TEST_CASE("truncations") {
  const auto p = gallery_space("example_P_scott");
  const auto t = p->truncate(3);
  CHECK(t.points.size() == static_cast<std::size_t>(t.order.size()));
  CHECK_FALSE(t.points.empty());
  CHECK_THROWS_AS(p->schema("nope"), UnknownName);
}

TEST_CASE("schema soundness at small depth") {
  for (const auto& n : gallery_names()) {
    for (int d = 1; d <= 5; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      const auto r = schema_soundness(*gallery_space(n), d);
      CHECK(r.mismatches == 0);
      CHECK(r.checks > 0);
    }
  }
}

}  // TEST_SUITE
