#include "dtopw/approximation.hpp"

#include <algorithm>
#include <sstream>

#include "dtopw/errors.hpp"

namespace dtopw {

namespace {

std::string labels_of(const SpaceHandle& s, std::span<const Point> pts) {
  std::string out = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i != 0) out += ',';
    out += s.label(pts[i]);
  }
  return out + "}";
}

int max_level(const SpaceHandle& s, std::span<const Point> pts) {
  int out = 0;
  for (const auto& p : pts) out = std::max(out, s.level(p));
  return out;
}

ApproxReport n_report(const SpaceHandle& s, std::span<const Point> g, std::span<const Point> h,
                      std::string x_label, std::string y_label) {
  ApproxReport r{Relation::n, std::move(x_label), std::move(y_label), true, "", 0};
  for (const auto& y : h) {
    auto inside = s.interior_contains(g, y);
    if (!inside) throw OracleUnavailable(s.name() + " has no interior oracle");
    if (!*inside) {
      r.holds = false;
      r.witness = s.label(y) + " not in int(up " + labels_of(s, g) + ")";
      return r;
    }
  }
  r.witness = "int(up " + labels_of(s, g) + ") contains " + labels_of(s, h);
  return r;
}

ApproxReport d_report(const SpaceHandle& s, std::span<const Point> g, std::span<const Point> h,
                      std::string x_label, std::string y_label) {
  const int window = std::max(max_level(s, g), max_level(s, h)) + 2;
  ApproxReport r{Relation::d, std::move(x_label), std::move(y_label), true, "", window};
  std::size_t checked = 0;
  for (const auto& y : h) {
    auto families = s.families_converging_to(y, window);
    if (!families) throw OracleUnavailable(s.name() + " has no directed-family schemas");
    for (const auto& fam : *families) {
      ++checked;
      if (!s.meets_upper(fam, g)) {
        r.holds = false;
        r.witness = fam.description + " -> " + s.label(y) + " misses up " + labels_of(s, g);
        return r;
      }
    }
  }
  r.witness = std::to_string(checked) + " converging families all meet up " + labels_of(s, g);
  return r;
}

}  // namespace

std::string to_string(Relation r) { return r == Relation::n ? "n" : "d"; }

std::string ApproxReport::line() const {
  std::ostringstream os;
  os << "REL " << to_string(kind) << ' ' << x << ' ' << y << " -> "
     << (holds ? "true" : "false") << " (witness: " << witness << ')';
  return os.str();
}

ApproxReport n_approx(const SpaceHandle& s, const Point& x, const Point& y) {
  const Point g[] = {x};
  const Point h[] = {y};
  return n_report(s, g, h, s.label(x), s.label(y));
}

ApproxReport d_approx(const SpaceHandle& s, const Point& x, const Point& y) {
  const Point g[] = {x};
  const Point h[] = {y};
  return d_report(s, g, h, s.label(x), s.label(y));
}

ApproxReport fin_approx(const SpaceHandle& s, std::span<const Point> g, std::span<const Point> h,
                        Relation kind) {
  return kind == Relation::n ? n_report(s, g, h, labels_of(s, g), labels_of(s, h))
                             : d_report(s, g, h, labels_of(s, g), labels_of(s, h));
}

std::vector<Point> compact_elements(const SpaceHandle& s, Relation kind, int depth) {
  std::vector<Point> out;
  for (const auto& p : s.points(depth)) {
    const bool fixed = kind == Relation::n ? n_approx(s, p, p).holds : d_approx(s, p, p).holds;
    if (fixed) out.push_back(p);
  }
  return out;
}

// FiniteHandle

FiniteHandle::FiniteHandle(FiniteSpace space)
    : space_(std::move(space)), order_(specialization(space_)) {
  for (Mask d : directed_subsets(order_, kTopologyDirectedBound)) {
    directed_.emplace_back(d, space_.closure(d));
  }
}

std::vector<Point> FiniteHandle::points(int) const {
  std::vector<Point> out;
  for (int i = 0; i < space_.size(); ++i) out.push_back(nat(i));
  return out;
}

bool FiniteHandle::leq(const Point& x, const Point& y) const {
  return order_.leq(static_cast<int>(x.a), static_cast<int>(y.a));
}

std::string FiniteHandle::label(const Point& x) const { return space_.label(static_cast<int>(x.a)); }

int FiniteHandle::level(const Point&) const { return 0; }

Mask FiniteHandle::up_of(std::span<const Point> f) const {
  Mask m = 0;
  for (const auto& p : f) m |= bit(static_cast<int>(p.a));
  return order_.up_closure(m);
}

std::optional<bool> FiniteHandle::interior_contains(std::span<const Point> f,
                                                    const Point& y) const {
  return has(space_.interior(up_of(f)), static_cast<int>(y.a));
}

std::optional<std::vector<FamilyInstance>> FiniteHandle::families_converging_to(const Point& y,
                                                                                int) const {
  std::vector<FamilyInstance> out;
  for (const auto& [d, cl] : directed_) {
    if (has(cl, static_cast<int>(y.a))) {
      out.push_back({"directed", {static_cast<long>(d)}, set_label(space_.labels(), d)});
    }
  }
  return out;
}

bool FiniteHandle::meets_upper(const FamilyInstance& family, std::span<const Point> f) const {
  return (static_cast<Mask>(family.params.at(0)) & up_of(f)) != 0;
}

// Finite spaces

namespace {

struct FiniteFacts {
  FinitePoset order;
  std::vector<std::pair<Mask, Mask>> directed;  // (D, closure)

  explicit FiniteFacts(const FiniteSpace& x) : order(specialization(x)) {
    for (Mask d : directed_subsets(order, kTopologyDirectedBound)) {
      directed.emplace_back(d, x.closure(d));
    }
  }

  bool d_below(Mask g, int y) const {
    const Mask up = order.up_closure(g);
    for (const auto& [d, cl] : directed) {
      if (has(cl, y) && (d & up) == 0) return false;
    }
    return true;
  }
};

bool converges_to(const FiniteSpace& x, Mask d, int p) {
  for (Mask u : x.opens()) {
    if (has(u, p) && (u & d) == 0) return false;
  }
  return true;
}

// A family of finite sets is directed when any two members have a third
// whose upper set lies in both of theirs, and converges to p when every open
// neighbourhood of p contains some member's upper set.
bool family_directed_and_converges(const FiniteSpace& x, const FinitePoset& order,
                                   const std::vector<Mask>& family, int p) {
  if (family.empty()) return false;
  std::vector<Mask> ups;
  ups.reserve(family.size());
  for (Mask f : family) ups.push_back(order.up_closure(f));
  for (std::size_t i = 0; i < ups.size(); ++i) {
    for (std::size_t j = i + 1; j < ups.size(); ++j) {
      const Mask both = ups[i] & ups[j];
      bool found = false;
      for (Mask u : ups) {
        if (subset_of(u, both)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  for (Mask u : x.opens()) {
    if (!has(u, p)) continue;
    bool inside = false;
    for (Mask up : ups) {
      if (subset_of(up, u)) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

void require_quasi_bound(const FiniteSpace& x) {
  if (x.size() > kQuasiBound) {
    throw BoundExceeded("finite-subset quantification is limited to " +
                        std::to_string(kQuasiBound) + " points");
  }
}

bool quasi(const FiniteSpace& x, Relation kind, bool algebraic) {
  require_quasi_bound(x);
  const FiniteFacts facts(x);
  auto below = [&](Mask g, int y) {
    return kind == Relation::n ? has(x.interior(facts.order.up_closure(g)), y) : facts.d_below(g, y);
  };
  auto self_below = [&](Mask g) {
    bool ok = true;
    for_each_bit(g, [&](int y) { ok = ok && below(g, y); });
    return ok;
  };
  const Mask all = x.carrier();
  for (int p = 0; p < x.size(); ++p) {
    std::vector<Mask> family;
    for (Mask g = 1; g <= all && g != 0; ++g) {
      if (below(g, p) && (!algebraic || self_below(g))) family.push_back(g);
    }
    if (!family_directed_and_converges(x, facts.order, family, p)) return false;
  }
  return true;
}

}  // namespace

bool n_approx(const FiniteSpace& x, int a, int b) {
  return has(x.interior(specialization(x).up(a)), b);
}

bool d_approx(const FiniteSpace& x, int a, int b) { return FiniteFacts(x).d_below(bit(a), b); }

bool fin_approx(const FiniteSpace& x, Mask g, Mask h, Relation kind) {
  if (kind == Relation::n) {
    return subset_of(h, x.interior(specialization(x).up_closure(g)));
  }
  const FiniteFacts facts(x);
  bool ok = true;
  for_each_bit(h, [&](int y) { ok = ok && facts.d_below(g, y); });
  return ok;
}

Mask approximants(const FiniteSpace& x, int a, Relation kind) {
  Mask out = 0;
  if (kind == Relation::n) {
    const FinitePoset order = specialization(x);
    for (int b = 0; b < x.size(); ++b) {
      if (has(x.interior(order.up(b)), a)) out |= bit(b);
    }
  } else {
    const FiniteFacts facts(x);
    for (int b = 0; b < x.size(); ++b) {
      if (facts.d_below(bit(b), a)) out |= bit(b);
    }
  }
  return out;
}

Mask compact_points(const FiniteSpace& x, Relation kind) {
  Mask out = 0;
  if (kind == Relation::n) {
    const FinitePoset order = specialization(x);
    for (int b = 0; b < x.size(); ++b) {
      if (has(x.interior(order.up(b)), b)) out |= bit(b);
    }
  } else {
    const FiniteFacts facts(x);
    for (int b = 0; b < x.size(); ++b) {
      if (facts.d_below(bit(b), b)) out |= bit(b);
    }
  }
  return out;
}

bool is_c_space(const FiniteSpace& x) {
  const FinitePoset order = specialization(x);
  for (Mask u : x.opens()) {
    for (int p : members(u)) {
      bool found = false;
      for (int q : members(u)) {
        if (has(x.interior(order.up(q)), p) && subset_of(order.up(q), u)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

bool is_b_space(const FiniteSpace& x) {
  const FinitePoset order = specialization(x);
  for (Mask u : x.opens()) {
    for (int p : members(u)) {
      bool found = false;
      for (int q : members(u)) {
        const Mask up = order.up(q);
        if (x.is_open(up) && has(up, p) && subset_of(up, u)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

namespace {

bool directed_converging(const FiniteSpace& x, const FinitePoset& order, Mask d, int p) {
  return is_directed(order, d) && converges_to(x, d, p);
}

}  // namespace

bool is_d_continuous(const FiniteSpace& x) {
  if (!is_directed_space(x)) return false;
  const FinitePoset order = specialization(x);
  for (int p = 0; p < x.size(); ++p) {
    if (!directed_converging(x, order, approximants(x, p, Relation::d), p)) return false;
  }
  return true;
}

bool is_n_continuous(const FiniteSpace& x) {
  const FinitePoset order = specialization(x);
  for (int p = 0; p < x.size(); ++p) {
    if (!directed_converging(x, order, approximants(x, p, Relation::n), p)) return false;
  }
  return true;
}

bool is_d_algebraic(const FiniteSpace& x) {
  if (!is_directed_space(x)) return false;
  const FinitePoset order = specialization(x);
  const Mask k = compact_points(x, Relation::d);
  for (int p = 0; p < x.size(); ++p) {
    if (!directed_converging(x, order, order.down(p) & k, p)) return false;
  }
  return true;
}

bool is_n_algebraic(const FiniteSpace& x) {
  const FinitePoset order = specialization(x);
  const Mask k = compact_points(x, Relation::n);
  for (int p = 0; p < x.size(); ++p) {
    if (!directed_converging(x, order, order.down(p) & k, p)) return false;
  }
  return true;
}

bool is_locally_hypercompact(const FiniteSpace& x) {
  require_quasi_bound(x);
  const FinitePoset order = specialization(x);
  for (Mask u : x.opens()) {
    for (int p : members(u)) {
      bool found = false;
      for (Mask f = u; f != 0 && !found; f = (f - 1) & u) {
        const Mask up = order.up_closure(f);
        found = subset_of(up, u) && has(x.interior(up), p);
      }
      if (!found) return false;
    }
  }
  return true;
}

bool is_hypercompactly_based(const FiniteSpace& x) {
  require_quasi_bound(x);
  const FinitePoset order = specialization(x);
  for (Mask u : x.opens()) {
    for (int p : members(u)) {
      bool found = false;
      for (Mask f = u; f != 0 && !found; f = (f - 1) & u) {
        const Mask up = order.up_closure(f);
        found = subset_of(up, u) && x.is_open(up) && has(up, p);
      }
      if (!found) return false;
    }
  }
  return true;
}

bool is_d_quasicontinuous(const FiniteSpace& x) {
  return is_directed_space(x) && quasi(x, Relation::d, false);
}

bool is_n_quasicontinuous(const FiniteSpace& x) { return quasi(x, Relation::n, false); }

bool is_d_quasialgebraic(const FiniteSpace& x) {
  return is_directed_space(x) && quasi(x, Relation::d, true);
}

bool is_n_quasialgebraic(const FiniteSpace& x) { return quasi(x, Relation::n, true); }

CompactOpenReport compact_open_is_hypercompact(const FiniteSpace& x) {
  const FinitePoset order = specialization(x);
  CompactOpenReport r;
  for (Mask u : x.opens()) {
    ++r.opens_checked;
    ++r.compact;  // a finite space has only finite covers
    const Mask f = order.minimal(u);
    if (order.up_closure(f) == u) {
      ++r.hypercompact;
    } else if (r.holds) {
      r.holds = false;
      r.witness = set_label(x.labels(), u) + " is not up of its minimal points";
    }
  }
  if (r.holds) r.witness = "every open is up of its minimal points";
  return r;
}

}  // namespace dtopw
