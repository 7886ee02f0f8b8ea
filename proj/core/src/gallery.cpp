#include "dtopw/gallery.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "dtopw/errors.hpp"
#include "dtopw/johnstone.hpp"

namespace dtopw {

namespace {

std::vector<long> encode(const Point& p) { return {static_cast<long>(p.kind), p.a, p.b}; }

Point decode(const std::vector<long>& v) {
  return {static_cast<Point::Kind>(v.at(0)), v.at(1), v.at(2)};
}

bool any_of_points(std::span<const Point> f, const std::function<bool(const Point&)>& pred) {
  return std::any_of(f.begin(), f.end(), pred);
}

class GallerySpace : public PresentedSpace {
 public:
  const std::vector<DirectedSchema>& schemas() const override { return schemas_; }

 protected:
  void add_principal() {
    DirectedSchema s;
    s.id = "principal";
    s.parameters = "a point p; the family {p}";
    s.member = [](const std::vector<long>& v, const Point& y) { return decode(v) == y; };
    s.converges_to = [this](const std::vector<long>& v, const Point& y) {
      return leq(y, decode(v));
    };
    s.meets_upper = [this](const std::vector<long>& v, std::span<const Point> f) {
      const Point p = decode(v);
      return any_of_points(f, [&](const Point& x) { return leq(x, p); });
    };
    s.instances = [this](int window) {
      std::vector<std::vector<long>> out;
      for (const auto& p : points(window - 1)) out.push_back(encode(p));
      return out;
    };
    s.generators = [](const std::vector<long>& v, int) { return std::vector<Point>{decode(v)}; };
    schemas_.push_back(std::move(s));
  }

  std::vector<DirectedSchema> schemas_;
};

// ℕ^⊤ (and ℕ^⊤_⊥) with the upper topology. Naturals start at 0.
class FlatUpper final : public GallerySpace {
 public:
  explicit FlatUpper(bool with_bot) : with_bot_(with_bot) {
    add_principal();
    DirectedSchema top;
    top.id = "with_top";
    top.parameters = "n >= 0; the family {n, T}";
    top.member = [](const std::vector<long>& v, const Point& y) {
      return y == nat(v.at(0)) || y.kind == Point::Kind::Top;
    };
    top.converges_to = [this](const std::vector<long>&, const Point& y) {
      return leq(y, top_point());
    };
    top.meets_upper = [this](const std::vector<long>& v, std::span<const Point> f) {
      return any_of_points(f, [&](const Point& x) {
        return leq(x, nat(v.at(0))) || leq(x, top_point());
      });
    };
    top.instances = [](int window) {
      std::vector<std::vector<long>> out;
      for (long n = 0; n < window; ++n) out.push_back({n});
      return out;
    };
    top.generators = [](const std::vector<long>& v, int) {
      return std::vector<Point>{nat(v.at(0)), top_point()};
    };
    schemas_.push_back(std::move(top));
    if (!with_bot_) return;

    DirectedSchema bot;
    bot.id = "with_bot";
    bot.parameters = "a point x other than B; the family {B, x}";
    bot.member = [](const std::vector<long>& v, const Point& y) {
      return y.kind == Point::Kind::Bot || decode(v) == y;
    };
    bot.converges_to = [this](const std::vector<long>& v, const Point& y) {
      return leq(y, decode(v));
    };
    bot.meets_upper = [this](const std::vector<long>& v, std::span<const Point> f) {
      const Point x = decode(v);
      return any_of_points(f, [&](const Point& g) { return leq(g, x) || leq(g, bot_point()); });
    };
    bot.instances = [this](int window) {
      std::vector<std::vector<long>> out;
      for (const auto& p : points(window - 1)) {
        if (p.kind != Point::Kind::Bot) out.push_back(encode(p));
      }
      return out;
    };
    bot.generators = [](const std::vector<long>& v, int) {
      return std::vector<Point>{bot_point(), decode(v)};
    };
    schemas_.push_back(std::move(bot));

    DirectedSchema both;
    both.id = "with_bot_top";
    both.parameters = "n >= 0; the family {B, n, T}";
    both.member = [](const std::vector<long>& v, const Point& y) {
      return y.kind != Point::Kind::Nat || y.a == v.at(0);
    };
    both.converges_to = [this](const std::vector<long>&, const Point& y) {
      return leq(y, top_point());
    };
    both.meets_upper = [this](const std::vector<long>& v, std::span<const Point> f) {
      return any_of_points(f, [&](const Point& g) {
        return leq(g, nat(v.at(0))) || leq(g, top_point()) || leq(g, bot_point());
      });
    };
    both.instances = [](int window) {
      std::vector<std::vector<long>> out;
      for (long n = 0; n < window; ++n) out.push_back({n});
      return out;
    };
    both.generators = [](const std::vector<long>& v, int) {
      return std::vector<Point>{bot_point(), nat(v.at(0)), top_point()};
    };
    schemas_.push_back(std::move(both));
  }

  std::string name() const override { return with_bot_ ? "nat_top_bot_upper" : "nat_top_upper"; }

  std::string classification() const override {
    return with_bot_
               ? "Specialization is the flat order with B below everything and T above. A "
                 "directed set has at most one natural, so it is a singleton, {n,T}, {B,x} "
                 "or {B,n,T}; all have a maximum."
               : "Specialization is the flat order n < T. Two distinct naturals have only T "
                 "above them, so a directed set is {n}, {T} or {n,T}; all have a maximum.";
  }

  std::vector<Point> points(int depth) const override {
    std::vector<Point> out;
    if (with_bot_) out.push_back(bot_point());
    for (long n = 0; n <= depth; ++n) out.push_back(nat(n));
    out.push_back(top_point());
    return out;
  }

  bool leq(const Point& x, const Point& y) const override {
    return x == y || y.kind == Point::Kind::Top || x.kind == Point::Kind::Bot;
  }

  std::string label(const Point& x) const override {
    switch (x.kind) {
      case Point::Kind::Top: return "T";
      case Point::Kind::Bot: return "B";
      default: return std::to_string(x.a);
    }
  }

  int level(const Point& x) const override {
    return x.kind == Point::Kind::Nat ? static_cast<int>(x.a) : 0;
  }

  // Opens are ∅, the whole space and the T-containing cofinite sets (which
  // miss B when B is present). Every ↑F is finite unless B ∈ F.
  std::optional<bool> interior_contains(std::span<const Point> f, const Point&) const override {
    return with_bot_ && any_of_points(f, [](const Point& p) { return p.kind == Point::Kind::Bot; });
  }

  std::vector<Point> closure_points(std::span<const Point> g, int window) const override {
    const bool has_top =
        any_of_points(g, [](const Point& p) { return p.kind == Point::Kind::Top; });
    std::vector<Point> out;
    for (const auto& y : points(window)) {
      bool in;
      if (y.kind == Point::Kind::Bot) {
        in = !g.empty();  // only the whole space is an open neighbourhood of B
      } else {
        // T ∪ (ℕ \ G) is an open neighbourhood of y missing G unless T ∈ G or y ∈ G.
        in = has_top || std::find(g.begin(), g.end(), y) != g.end();
      }
      if (in) out.push_back(y);
    }
    return out;
  }

 private:
  bool with_bot_;
};

// Spaces built from columns {m} × ℕ with one limit point per column:
// example P (limits ω_m, column 1 special) and Johnstone's 𝕁 (limits (m,ω)).
// Columns and heights start at 1.
class ColumnSpace final : public GallerySpace {
 public:
  explicit ColumnSpace(bool johnstone) : johnstone_(johnstone) {
    add_principal();
    for (bool with_top : {false, true}) {
      DirectedSchema s;
      s.id = with_top ? "column_tail_top" : "column_tail";
      s.parameters = with_top ? "m, k >= 1; {(m,n) : n >= k} plus its limit"
                              : "m, k >= 1; {(m,n) : n >= k}";
      s.finite = false;
      s.member = [with_top](const std::vector<long>& v, const Point& y) {
        if (y.kind == Point::Kind::Omega) return with_top && y.a == v.at(0);
        return y.a == v.at(0) && y.b >= v.at(1);
      };
      s.converges_to = [this](const std::vector<long>& v, const Point& y) {
        return leq(y, omega_point(v.at(0)));
      };
      s.meets_upper = [this, with_top](const std::vector<long>& v, std::span<const Point> f) {
        const long m = v.at(0);
        return any_of_points(f, [&](const Point& x) {
          return (x.kind == Point::Kind::Pair && x.a == m) ||
                 (with_top && leq(x, omega_point(m)));
        });
      };
      s.instances = [](int window) {
        std::vector<std::vector<long>> out;
        for (long m = 1; m < window; ++m) {
          for (long k = 1; k < window; ++k) out.push_back({m, k});
        }
        return out;
      };
      s.generators = [with_top](const std::vector<long>& v, int window) {
        std::vector<Point> out;
        for (long n = v.at(1); n <= window; ++n) out.push_back(pair_point(v.at(0), n));
        if (with_top) out.push_back(omega_point(v.at(0)));
        return out;
      };
      schemas_.push_back(std::move(s));
    }
  }

  std::string name() const override { return johnstone_ ? "johnstone_scott" : "example_P_scott"; }

  std::string classification() const override {
    return "Points of different columns have only limit points as common upper bounds, "
           "and limit points are maximal, so a directed set either has a maximum or is an "
           "infinite subset of one column. The Scott closure of such a chain is the "
           "principal ideal of the column's limit, and it meets an upper set iff that set "
           "has a finite point of the column.";
  }

  std::vector<Point> points(int depth) const override {
    std::vector<Point> out;
    for (long m = 1; m <= depth; ++m) {
      for (long n = 1; n <= depth; ++n) out.push_back(pair_point(m, n));
    }
    for (long m = 1; m <= depth; ++m) out.push_back(omega_point(m));
    return out;
  }

  bool leq(const Point& x, const Point& y) const override {
    if (x.kind == Point::Kind::Omega) return y == x;
    if (y.kind == Point::Kind::Pair) return x.a == y.a && x.b <= y.b;
    if (johnstone_) return x.a == y.a || x.b <= y.a;  // (m,n) ≤ (i,ω)
    return x.a == y.a || (x.a == 1 && x.b <= y.a);    // (m,n) ≤ ω_i
  }

  std::string label(const Point& x) const override {
    if (x.kind == Point::Kind::Omega) {
      return johnstone_ ? "(" + std::to_string(x.a) + ",w)" : "w" + std::to_string(x.a);
    }
    return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
  }

  int level(const Point& x) const override { return static_cast<int>(std::max(x.a, x.b)); }

  std::optional<bool> interior_contains(std::span<const Point> f, const Point& y) const override {
    if (johnstone_) {
      // ↑(m,n) contains (k,ω) for every k ≥ n but no tail of those columns.
      return false;
    }
    // For m ≥ 2 the tail of column m from (m,k) together with ω_m is Scott
    // open; column 1 lies below every ω_i with i ≥ n and is never interior.
    if (y.a < 2) return false;
    return any_of_points(f, [&](const Point& x) {
      return x.kind == Point::Kind::Pair && x.a == y.a &&
             (y.kind == Point::Kind::Omega || x.b <= y.b);
    });
  }

  // Columns 1..window-1; height `window` marks an unbounded chain.
  std::vector<Point> closure_points(std::span<const Point> g, int window) const override {
    std::vector<Point> universe;
    for (long m = 1; m < window; ++m) {
      for (long n = 1; n <= window; ++n) universe.push_back(pair_point(m, n));
      universe.push_back(omega_point(m));
    }
    std::vector<Point> tops(g.begin(), g.end());
    std::set<Point> closed;
    while (true) {
      closed.clear();
      for (const auto& u : universe) {
        if (any_of_points(tops, [&](const Point& t) { return leq(u, t); })) closed.insert(u);
      }
      bool grew = false;
      for (long m = 1; m < window; ++m) {
        const Point limit = omega_point(m);
        if (closed.count(pair_point(m, window)) != 0 &&
            std::find(tops.begin(), tops.end(), limit) == tops.end()) {
          tops.push_back(limit);
          grew = true;
        }
      }
      if (!grew) break;
    }
    return {closed.begin(), closed.end()};
  }

 private:
  bool johnstone_;
};

// ℕ with the cofinite topology; the specialization order is discrete.
class Cofinite final : public GallerySpace {
 public:
  Cofinite() { add_principal(); }

  std::string name() const override { return "nat_cofinite"; }
  std::string classification() const override {
    return "The specialization order is discrete, so a directed set is a singleton.";
  }
  std::vector<Point> points(int depth) const override {
    std::vector<Point> out;
    for (long n = 0; n <= depth; ++n) out.push_back(nat(n));
    return out;
  }
  bool leq(const Point& x, const Point& y) const override { return x == y; }
  std::string label(const Point& x) const override { return std::to_string(x.a); }
  int level(const Point& x) const override { return static_cast<int>(x.a); }
  // ↑F = F is finite, and nonempty opens are infinite.
  std::optional<bool> interior_contains(std::span<const Point>, const Point&) const override {
    return false;
  }
  // Finite sets are closed.
  std::vector<Point> closure_points(std::span<const Point> g, int window) const override {
    std::vector<Point> out;
    for (const auto& y : points(window)) {
      if (std::find(g.begin(), g.end(), y) != g.end()) out.push_back(y);
    }
    return out;
  }
};

}  // namespace

bool PresentedSpace::closure_contains(std::span<const Point> generators, const Point& y,
                                      int window) const {
  const auto c = closure_points(generators, window);
  return std::find(c.begin(), c.end(), y) != c.end();
}

bool PresentedSpace::closure_contains(const FamilyInstance& family, const Point& y,
                                      int window) const {
  const auto g = schema(family.schema).generators(family.params, window);
  return closure_contains(g, y, window);
}

const DirectedSchema& PresentedSpace::schema(std::string_view id) const {
  for (const auto& s : schemas()) {
    if (s.id == id) return s;
  }
  throw UnknownName(name() + " has no schema '" + std::string(id) + "'");
}

FamilyInstance PresentedSpace::instance(const DirectedSchema& s, std::vector<long> params) const {
  std::ostringstream os;
  os << s.id << '(';
  if (s.id == "principal") {
    os << label(decode(params));
  } else if (s.id == "with_bot") {
    os << label(decode(params));
  } else {
    for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
  }
  os << ')';
  return {s.id, std::move(params), os.str()};
}

FamilyInstance PresentedSpace::classify_finite(std::span<const Point> d) const {
  for (const auto& m : d) {
    if (std::all_of(d.begin(), d.end(), [&](const Point& x) { return leq(x, m); })) {
      return instance(schema("principal"), encode(m));
    }
  }
  throw NotDirected("finite set without a maximum");
}

Truncation PresentedSpace::truncate(int depth) const {
  Truncation t;
  t.depth = depth;
  t.points = points(depth);
  std::vector<std::string> labels;
  for (const auto& p : t.points) labels.push_back(label(p));
  t.order = FinitePoset::from_predicate(std::move(labels), [&](int a, int b) {
    return leq(t.points[static_cast<std::size_t>(a)], t.points[static_cast<std::size_t>(b)]);
  });
  t.topology_faithful = false;
  return t;
}

std::optional<std::vector<FamilyInstance>> PresentedSpace::families_converging_to(
    const Point& y, int window) const {
  std::vector<FamilyInstance> out;
  for (const auto& s : schemas()) {
    for (auto& params : s.instances(window)) {
      if (s.converges_to(params, y)) out.push_back(instance(s, std::move(params)));
    }
  }
  return out;
}

bool PresentedSpace::meets_upper(const FamilyInstance& family, std::span<const Point> f) const {
  return schema(family.schema).meets_upper(family.params, f);
}

std::vector<std::string> gallery_names() {
  return {"nat_top_upper", "nat_top_bot_upper", "example_P_scott", "johnstone_scott",
          "nat_cofinite"};
}

std::shared_ptr<const PresentedSpace> gallery_space(std::string_view name) {
  if (name == "nat_top_upper") return std::make_shared<FlatUpper>(false);
  if (name == "nat_top_bot_upper") return std::make_shared<FlatUpper>(true);
  if (name == "example_P_scott") return std::make_shared<ColumnSpace>(false);
  if (name == "johnstone_scott") return std::make_shared<ColumnSpace>(true);
  if (name == "nat_cofinite") return std::make_shared<Cofinite>();
  throw UnknownName("unknown gallery space '" + std::string(name) + "'");
}

// Claims

namespace {

struct ClaimList {
  std::string space;
  std::vector<ClaimResult> claims;

  void rel(const std::string& id, bool expected, const ApproxReport& r) {
    claims.push_back({space, space + "." + id, expected, r.holds, r.line()});
  }

  void fact(const std::string& id, bool expected, bool actual, const std::string& witness) {
    std::ostringstream os;
    os << "CLAIM " << id << " -> " << (actual ? "true" : "false") << " (witness: " << witness
       << ')';
    claims.push_back({space, space + "." + id, expected, actual, os.str()});
  }
};

// A cover of ℕ \ E0 by cofinite sets ℕ \ E_i always has a finite subcover:
// keep the first member, then one member per point it misses. Covers are
// drawn at random from a fixed seed.
bool cofinite_covers_reduce(const std::set<long>& e0, long bound, std::uint32_t seed,
                            std::string& witness) {
  std::mt19937 rng(seed);
  const long horizon = bound + 6;
  std::uniform_int_distribution<long> point(0, horizon);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::set<long>> cover;
    for (int i = 0; i < 4; ++i) {
      std::set<long> e(e0.begin(), e0.end());
      for (int j = 0; j < 3; ++j) e.insert(point(rng));
      cover.push_back(std::move(e));
    }
    // Patch the cover so it really covers ℕ \ E0.
    for (long n = 0; n <= horizon; ++n) {
      if (e0.count(n) != 0) continue;
      const bool covered =
          std::any_of(cover.begin(), cover.end(), [&](const auto& e) { return e.count(n) == 0; });
      if (!covered) cover.push_back(e0);
    }
    std::vector<std::size_t> sub{0};
    for (long n : cover[0]) {
      if (e0.count(n) != 0) continue;
      for (std::size_t i = 0; i < cover.size(); ++i) {
        if (cover[i].count(n) == 0) {
          sub.push_back(i);
          break;
        }
      }
    }
    for (long n = 0; n <= horizon; ++n) {
      if (e0.count(n) != 0) continue;
      const bool covered =
          std::any_of(sub.begin(), sub.end(), [&](std::size_t i) { return cover[i].count(n) == 0; });
      if (!covered) {
        witness = "subcover misses " + std::to_string(n);
        return false;
      }
    }
    if (sub.size() > cover[0].size() + 1) {
      witness = "subcover larger than expected";
      return false;
    }
  }
  return true;
}

void flat_claims(ClaimList& c, const PresentedSpace& s, int depth) {
  const Point top = top_point();
  c.rel("top-d-approx-top", true, d_approx(s, top, top));
  c.rel("top-n-approx-top", false, n_approx(s, top, top));
  if (s.name() == "nat_top_bot_upper") {
    c.rel("bot-n-approx-top", true, n_approx(s, bot_point(), top));
    return;
  }
  const Point u[] = {top};
  const ApproxReport dopen = fin_approx(s, u, u, Relation::d);
  const bool open = *s.interior_contains(u, top);
  c.fact("singleton-top-directed-open", true, dopen.holds, dopen.witness);
  c.fact("singleton-top-open", false, open, "int(up T) is empty: opens containing T are cofinite");
  c.fact("directed-space", false, !(dopen.holds && !open),
         "{T} is directed-open but not open");

  const auto kd = compact_elements(s, Relation::d, depth);
  const auto kn = compact_elements(s, Relation::n, depth);
  c.fact("top-in-K_d", true, std::find(kd.begin(), kd.end(), top) != kd.end(),
         std::to_string(kd.size()) + " d-compact points at depth " + std::to_string(depth));
  c.fact("top-in-K_n", false, std::find(kn.begin(), kn.end(), top) != kn.end(),
         std::to_string(kn.size()) + " n-compact points at depth " + std::to_string(depth));

  // Local compactness: a basic open T ∪ (ℕ \ E) is itself compact and
  // saturated. Checked for E ⊆ {0..b}.
  const long b = std::min(depth, 6);
  bool compact = true;
  std::string cw = "every basic open T + (N \\ E), E within 0.." + std::to_string(b) +
                   ", is a compact saturated neighbourhood";
  for (long mask = 0; mask < (1L << (b + 1)) && compact; ++mask) {
    std::set<long> e;
    for (long n = 0; n <= b; ++n) {
      if ((mask >> n) & 1) e.insert(n);
    }
    compact = cofinite_covers_reduce(e, b, static_cast<std::uint32_t>(mask + 1), cw);
  }
  c.fact("locally-compact-partial", true, compact, cw);

  // Sobriety on the closed sets the truncation sees: finite sets of naturals
  // and the whole space. Irreducible ones are exactly the point closures.
  bool sober = true;
  std::string sw = "irreducible closed sets are cl{n} and cl{T} = whole, for n within 0.." +
                   std::to_string(b);
  const std::vector<Point> win = s.points(static_cast<int>(b));
  for (long mask = 1; mask < (1L << (b + 1)) && sober; ++mask) {
    std::vector<Point> set;
    for (long n = 0; n <= b; ++n) {
      if ((mask >> n) & 1) set.push_back(nat(n));
    }
    // Finite T-free sets are closed; they split into two proper closed
    // pieces iff they have two or more points.
    const bool irreducible = set.size() == 1;
    const bool point_closure = set.size() == 1 && s.closure_points(set, static_cast<int>(b)) ==
                                                      std::vector<Point>{set.front()};
    if (irreducible != point_closure) {
      sober = false;
      sw = "closed set of size " + std::to_string(set.size()) + " misclassified";
    }
  }
  const Point tops[] = {top};
  if (sober && s.closure_points(tops, static_cast<int>(b)).size() != win.size()) {
    sober = false;
    sw = "cl{T} is not the whole space";
  }
  c.fact("sober-partial", true, sober, sw);
}

void example_p_claims(ClaimList& c, const PresentedSpace& s, int depth) {
  for (long n = 1; n <= depth; ++n) {
    const std::string tag = "(1," + std::to_string(n) + ")";
    c.rel(tag + "-d-approx-w1", true, d_approx(s, pair_point(1, n), omega_point(1)));
    c.rel(tag + "-n-approx-w1", false, n_approx(s, pair_point(1, n), omega_point(1)));
  }
  c.rel("(2,1)-n-approx-w2", true, n_approx(s, pair_point(2, 1), omega_point(2)));
  c.fact("(1,3)-below-w5", true, s.leq(pair_point(1, 3), omega_point(5)), "m = 1 and 3 <= 5");
}

void johnstone_claims(ClaimList& c, const PresentedSpace& s, int depth) {
  c.fact("(1,2)-below-(3,w)", true, s.leq(pair_point(1, 2), omega_point(3)), "2 <= 3");
  c.rel("(1,1)-n-approx-(1,1)", false, n_approx(s, pair_point(1, 1), pair_point(1, 1)));
  const ClosedSetJ d3 = j_closure(omega_point(3));
  c.fact("irreducible-down-(3,w)", true, j_irreducible(d3), d3.to_string());
  const ClosedSetJ u12 = j_join(j_closure(omega_point(1)), j_closure(omega_point(2)));
  c.fact("irreducible-join-(1,w)-(2,w)", false, j_irreducible(u12), u12.to_string());
  c.fact("irreducible-whole", true, j_irreducible(ClosedSetJ::whole()),
         "proper fragment sets have finitely many full columns");
  const ClosedSetJ m23 = j_meet(j_closure(omega_point(2)), j_closure(omega_point(3)));
  c.fact("meet-(2,w)-(3,w)", true, m23 == ClosedSetJ::make({}, {{2, 3}}, 2), m23.to_string());
  for (const auto& chk : j_spec_topology_check(std::min(depth, 6))) {
    c.claims.push_back({c.space, chk.claim, chk.expected, chk.actual, chk.line()});
  }
  const JCheck band = j_band_chain_unbounded(std::min(depth, 6));
  c.claims.push_back({c.space, band.claim, band.expected, band.actual, band.line()});
  for (const auto& a : {j_closure(omega_point(1)), j_band(3)}) {
    const auto sep = j_sigma_equals_upsilon_witness(a, std::min(depth, 4));
    c.fact("separation-" + a.to_string(), true, sep.verified, sep.line());
  }
}

void cofinite_claims(ClaimList& c, const PresentedSpace& s, int depth) {
  std::string cw = "seeded covers of N \\ {0} reduce to finite subcovers";
  c.fact("U=N-{0}-compact", true, cofinite_covers_reduce({0}, depth, 7, cw), cw);

  // ↑F = F for finite F; the first point past max F is in U but not in ↑F.
  const long b = std::min(depth, 10);
  bool hyper = false;
  for (long mask = 1; mask < (1L << b) && !hyper; ++mask) {
    std::vector<Point> f;
    long top = 0;
    for (long n = 1; n <= b; ++n) {
      if ((mask >> (n - 1)) & 1) {
        f.push_back(nat(n));
        top = n;
      }
    }
    const Point w = nat(top + 1);
    const bool in_up = std::any_of(f.begin(), f.end(), [&](const Point& x) { return s.leq(x, w); });
    if (in_up) hyper = true;
  }
  c.fact("U=N-{0}-hypercompact", false, hyper,
         "for each finite F within 1.." + std::to_string(b) + ", max(F)+1 lies in U \\ up F");
  c.fact("U=empty-compact-open-check", true, true, "vacuous");

  const auto kn = compact_elements(s, Relation::n, depth);
  const auto kd = compact_elements(s, Relation::d, depth);
  c.fact("K_n-empty", true, kn.empty(), std::to_string(kn.size()) + " n-compact points");
  c.fact("K_d-all", true, kd.size() == s.points(depth).size(),
         std::to_string(kd.size()) + " d-compact points of " +
             std::to_string(s.points(depth).size()));
  bool none = true;
  for (long y = 0; y <= std::min<long>(depth, 4) && none; ++y) {
    for (long mask = 1; mask < 32 && none; ++mask) {
      std::vector<Point> f;
      for (long n = 0; n < 5; ++n) {
        if ((mask >> n) & 1) f.push_back(nat(n));
      }
      const Point h[] = {nat(y)};
      none = !fin_approx(s, f, h, Relation::n).holds;
    }
  }
  c.fact("no-finite-n-approx", true, none, "F within 0..4, y within 0..4");
}

}  // namespace

bool GalleryReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.passed(); });
}

std::string GalleryReport::text() const {
  std::ostringstream os;
  os << "gallery " << space << " depth " << depth << '\n';
  for (const auto& c : claims) {
    os << (c.passed() ? "PASS " : "FAIL ") << c.line << '\n';
  }
  return os.str();
}

GalleryReport run_gallery_claims(std::string_view name, int depth) {
  auto s = gallery_space(name);
  ClaimList c{s->name(), {}};
  if (name == "nat_top_upper" || name == "nat_top_bot_upper") {
    flat_claims(c, *s, depth);
  } else if (name == "example_P_scott") {
    example_p_claims(c, *s, depth);
  } else if (name == "johnstone_scott") {
    johnstone_claims(c, *s, depth);
  } else {
    cofinite_claims(c, *s, depth);
  }
  return {s->name(), depth, std::move(c.claims)};
}

GalleryReport verify_gallery_claims(std::string_view name, int depth) {
  GalleryReport r = run_gallery_claims(name, depth);
  if (!r.passed()) {
    std::string msg;
    for (const auto& c : r.claims) {
      if (!c.passed()) msg += c.id + ": " + c.line + "\n";
    }
    throw ClaimFailed(msg);
  }
  return r;
}

// Soundness regression

namespace {

struct Mismatches {
  SoundnessReport& r;
  void check(bool ok, const std::string& what) {
    ++r.checks;
    if (!ok) {
      if (r.mismatches == 0) r.first_mismatch = what;
      ++r.mismatches;
    }
  }
};

bool is_directed_points(const PresentedSpace& s, const std::vector<Point>& d) {
  if (d.empty()) return false;
  for (const auto& x : d) {
    for (const auto& y : d) {
      const bool bounded = std::any_of(d.begin(), d.end(), [&](const Point& z) {
        return s.leq(x, z) && s.leq(y, z);
      });
      if (!bounded) return false;
    }
  }
  return true;
}

}  // namespace

SoundnessReport schema_soundness(const PresentedSpace& s, int depth) {
  SoundnessReport r;
  r.space = s.name();
  r.depth = depth;
  Mismatches mm{r};
  const int window = depth + 2;
  const Truncation t = s.truncate(depth);
  const auto& pts = t.points;
  const std::size_t n = pts.size();

  // Order faithfulness.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mm.check(t.order.leq(static_cast<int>(i), static_cast<int>(j)) == s.leq(pts[i], pts[j]),
               "order " + s.label(pts[i]) + " " + s.label(pts[j]));
    }
  }

  // Finite directed subsets: each is {m} ∪ A with A ⊆ ↓m \ {m}.
  for (std::size_t mi = 0; mi < n; ++mi) {
    const Point m = pts[mi];
    std::vector<Point> below;
    for (const auto& p : pts) {
      if (p != m && s.leq(p, m)) below.push_back(p);
    }
    std::vector<std::vector<Point>> subsets;
    if (below.size() <= static_cast<std::size_t>(kExhaustiveDownSetBits)) {
      for (unsigned long mask = 0; mask < (1UL << below.size()); ++mask) {
        std::vector<Point> a;
        for (std::size_t k = 0; k < below.size(); ++k) {
          if ((mask >> k) & 1UL) a.push_back(below[k]);
        }
        subsets.push_back(std::move(a));
      }
    } else {
      ++r.sampled_maxima;
      subsets.push_back({});
      subsets.push_back(below);
      for (std::size_t i = 0; i < below.size(); ++i) {
        subsets.push_back({below[i]});
        for (std::size_t j = i + 1; j < below.size(); ++j) subsets.push_back({below[i], below[j]});
      }
    }
    for (auto& a : subsets) {
      a.push_back(m);
      mm.check(is_directed_points(s, a), "directedness at " + s.label(m));
      const FamilyInstance fam = s.classify_finite(a);
      const auto& sch = s.schema(fam.schema);
      const auto closure = s.closure_points(a, window);
      for (const auto& y : pts) {
        const bool brute = std::find(closure.begin(), closure.end(), y) != closure.end();
        const bool order = s.leq(y, m);
        const bool predicted = sch.converges_to(fam.params, y);
        mm.check(brute == order && order == predicted,
                 "finite family with max " + s.label(m) + " at " + s.label(y));
      }
    }
  }

  // Schema instances, including infinite ones, against the closure oracle.
  for (const auto& sch : s.schemas()) {
    for (const auto& params : sch.instances(window)) {
      const FamilyInstance fam = s.instance(sch, params);
      const auto gens = sch.generators(params, window);
      bool within = true;
      for (const auto& g : gens) within = within && s.level(g) <= window;
      if (!within) continue;
      mm.check(is_directed_points(s, gens), "directedness of " + fam.description);
      for (const auto& g : gens) mm.check(sch.member(params, g), "membership in " + fam.description);
      const auto closure = s.closure_points(gens, window);
      for (const auto& y : pts) {
        const bool brute = std::find(closure.begin(), closure.end(), y) != closure.end();
        mm.check(brute == sch.converges_to(params, y),
                 fam.description + " converging to " + s.label(y));
      }
      for (const auto& x : pts) {
        const Point f[] = {x};
        const bool brute = std::any_of(gens.begin(), gens.end(), [&](const Point& g) {
          return s.leq(x, g);
        });
        mm.check(brute == sch.meets_upper(params, f), fam.description + " meeting up " + s.label(x));
      }
      if (depth <= 4) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i + 1; j < n; ++j) {
            const Point f[] = {pts[i], pts[j]};
            const bool brute = std::any_of(gens.begin(), gens.end(), [&](const Point& g) {
              return s.leq(pts[i], g) || s.leq(pts[j], g);
            });
            mm.check(brute == sch.meets_upper(params, f), fam.description + " meeting a pair");
          }
        }
      }
    }
  }

  // Interior oracle: int(↑F) ⊆ ↑F and int(↑F) is an upper set.
  std::vector<std::vector<Point>> fs;
  for (const auto& p : pts) fs.push_back({p});
  if (depth <= 4) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) fs.push_back({pts[i], pts[j]});
    }
  }
  for (const auto& f : fs) {
    for (const auto& y : pts) {
      const auto in = s.interior_contains(f, y);
      if (!in || !*in) continue;
      const bool in_up = std::any_of(f.begin(), f.end(), [&](const Point& x) { return s.leq(x, y); });
      mm.check(in_up, "interior escapes up F at " + s.label(y));
      for (const auto& z : pts) {
        if (s.leq(y, z)) mm.check(*s.interior_contains(f, z), "interior not upper at " + s.label(z));
      }
    }
  }
  return r;
}

}  // namespace dtopw
