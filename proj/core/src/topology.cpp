#include "dtopw/topology.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "dtopw/errors.hpp"

namespace dtopw {

namespace {

std::vector<Mask> sorted_unique(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::uint8_t> inclusion_order(const std::vector<Mask>& sets) {
  std::vector<std::uint8_t> rel(sets.size() * sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      rel[i * sets.size() + j] = subset_of(sets[i], sets[j]) ? 1 : 0;
    }
  }
  return rel;
}

FiniteLattice lattice_of_sets(const std::vector<std::string>& labels,
                              const std::vector<Mask>& sets) {
  std::vector<std::string> names;
  names.reserve(sets.size());
  for (Mask s : sets) names.push_back(set_label(labels, s));
  auto rel = inclusion_order(sets);
  const auto n = sets.size();
  return FiniteLattice::from_poset(FinitePoset::from_predicate(
      std::move(names), [&](int a, int b) {
        return rel[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] != 0;
      }));
}

// Directed subsets of the specialization order paired with their closures.
std::vector<std::pair<Mask, Mask>> directed_with_closures(const FiniteSpace& x) {
  const FinitePoset order = specialization(x);
  std::vector<std::pair<Mask, Mask>> out;
  for (Mask d : directed_subsets(order, kTopologyDirectedBound)) {
    out.emplace_back(d, x.closure(d));
  }
  return out;
}

}  // namespace

std::string set_label(const std::vector<std::string>& labels, Mask a) {
  std::string out = "{";
  bool first = true;
  for_each_bit(a, [&](int i) {
    if (!first) out += ',';
    out += labels.at(static_cast<std::size_t>(i));
    first = false;
  });
  out += '}';
  return out;
}

FiniteSpace::FiniteSpace(std::vector<std::string> labels, std::vector<Mask> opens)
    : labels_(std::move(labels)) {
  if (labels_.size() > static_cast<std::size_t>(kMaxMaskPoints)) {
    throw BoundExceeded("finite spaces are limited to 64 points");
  }
  {
    std::set<std::string> seen;
    for (const auto& l : labels_) {
      if (!seen.insert(l).second) throw DuplicateLabel("duplicate label '" + l + "'");
    }
  }
  const Mask all = carrier();
  for (Mask u : opens) {
    if (!subset_of(u, all)) throw NotATopology("open set mentions a point outside the carrier");
  }
  opens.push_back(0);
  opens.push_back(all);
  opens_ = sorted_unique(std::move(opens));
  for (std::size_t i = 0; i < opens_.size(); ++i) {
    for (std::size_t j = i + 1; j < opens_.size(); ++j) {
      const Mask u = opens_[i];
      const Mask v = opens_[j];
      if (!is_open(u | v)) {
        throw NotATopology("union of " + set_label(labels_, u) + " and " +
                           set_label(labels_, v) + " is not open");
      }
      if (!is_open(u & v)) {
        throw NotATopology("intersection of " + set_label(labels_, u) + " and " +
                           set_label(labels_, v) + " is not open");
      }
    }
  }
  std::vector<Mask> nbhd(labels_.size());
  for (int p = 0; p < size(); ++p) nbhd[static_cast<std::size_t>(p)] = minimal_neighborhood(p);
  for (int p = 0; p < size(); ++p) {
    for (int q = p + 1; q < size(); ++q) {
      if (has(nbhd[static_cast<std::size_t>(p)], q) && has(nbhd[static_cast<std::size_t>(q)], p)) {
        throw NotT0("points '" + label(p) + "' and '" + label(q) + "' share all neighbourhoods");
      }
    }
  }
}

std::optional<int> FiniteSpace::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

bool FiniteSpace::is_open(Mask a) const {
  return std::binary_search(opens_.begin(), opens_.end(), a);
}

Mask FiniteSpace::interior(Mask a) const {
  Mask out = 0;
  for (Mask u : opens_) {
    if (subset_of(u, a)) out |= u;
  }
  return out;
}

Mask FiniteSpace::closure(Mask a) const { return carrier() & ~interior(carrier() & ~a); }

std::vector<Mask> FiniteSpace::closed_sets() const {
  std::vector<Mask> out;
  out.reserve(opens_.size());
  for (Mask u : opens_) out.push_back(carrier() & ~u);
  std::sort(out.begin(), out.end());
  return out;
}

Mask FiniteSpace::minimal_neighborhood(int x) const {
  Mask out = carrier();
  for (Mask u : opens_) {
    if (has(u, x)) out &= u;
  }
  return out;
}

FinitePoset specialization(const FiniteSpace& x) {
  std::vector<Mask> closures(static_cast<std::size_t>(x.size()));
  for (int y = 0; y < x.size(); ++y) closures[static_cast<std::size_t>(y)] = x.closure(bit(y));
  return FinitePoset::from_predicate(x.labels(), [&](int a, int b) {
    return has(closures[static_cast<std::size_t>(b)], a);
  });
}

FiniteSpace alexandroff(const FinitePoset& p) { return FiniteSpace(p.labels(), upper_sets(p)); }

bool converges(const FiniteSpace& x, Mask d, int point) {
  if (!is_directed(specialization(x), d)) {
    throw NotDirected(set_label(x.labels(), d) + " is not directed");
  }
  for (Mask u : x.opens()) {
    if (has(u, point) && (u & d) == 0) return false;
  }
  return true;
}

std::vector<DirectedLimitPair> directed_limits(const FiniteSpace& x) {
  std::vector<DirectedLimitPair> out;
  for (const auto& [d, cl] : directed_with_closures(x)) {
    for_each_bit(cl, [&](int p) { out.push_back({d, p}); });
  }
  return out;
}

FiniteSpace d_topology(const FiniteSpace& x) {
  const auto limits = directed_with_closures(x);
  auto directed_open = [&](Mask u) {
    for (const auto& [d, cl] : limits) {
      if ((cl & u) != 0 && (d & u) == 0) return false;
    }
    return true;
  };
  std::vector<Mask> opens;
  if (x.size() <= kLiteralCandidateBound) {
    const Mask all = x.carrier();
    for (Mask u = 0;; ++u) {
      if (directed_open(u)) opens.push_back(u);
      if (u == all) break;
    }
  } else {
    for (Mask u : upper_sets(specialization(x))) {
      if (directed_open(u)) opens.push_back(u);
    }
  }
  return FiniteSpace(x.labels(), std::move(opens));
}

bool is_directed_space(const FiniteSpace& x) { return d_topology(x).opens() == x.opens(); }

FiniteLattice open_lattice(const FiniteSpace& x) { return lattice_of_sets(x.labels(), x.opens()); }

FiniteLattice closed_lattice(const FiniteSpace& x) {
  return lattice_of_sets(x.labels(), x.closed_sets());
}

FiniteSpace scott_topology(const FinitePoset& p) {
  std::vector<std::pair<Mask, int>> sups;
  for (Mask d : directed_subsets(p, kTopologyDirectedBound)) {
    if (auto s = p.supremum(d)) sups.emplace_back(d, *s);
  }
  std::vector<Mask> opens;
  for (Mask u : upper_sets(p)) {
    bool ok = true;
    for (const auto& [d, s] : sups) {
      if (has(u, s) && (d & u) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) opens.push_back(u);
  }
  return FiniteSpace(p.labels(), std::move(opens));
}

FiniteSpace upper_topology(const FinitePoset& p) {
  std::vector<Mask> subbasis;
  for (int x = 0; x < p.size(); ++x) subbasis.push_back(p.carrier() & ~p.down(x));
  return generate_topology(p.labels(), subbasis);
}

FiniteSpace generate_topology(std::vector<std::string> labels, const std::vector<Mask>& subbasis) {
  const Mask all = full_mask(static_cast<int>(labels.size()));
  std::set<Mask> basis{all};
  for (Mask b : subbasis) {
    std::vector<Mask> add;
    for (Mask s : basis) add.push_back(s & b);
    basis.insert(add.begin(), add.end());
  }
  std::set<Mask> opens{0};
  for (Mask b : basis) {
    std::vector<Mask> add;
    for (Mask s : opens) add.push_back(s | b);
    opens.insert(add.begin(), add.end());
  }
  return FiniteSpace(std::move(labels), std::vector<Mask>(opens.begin(), opens.end()));
}

std::optional<std::vector<int>> find_homeomorphism(const FiniteSpace& x, const FiniteSpace& y) {
  if (x.size() != y.size() || x.opens().size() != y.opens().size()) return std::nullopt;
  const FinitePoset px = specialization(x);
  const FinitePoset py = specialization(y);
  const int n = x.size();
  std::vector<int> f(static_cast<std::size_t>(n), -1);
  Mask used = 0;
  auto images_match = [&]() {
    for (Mask u : x.opens()) {
      Mask image = 0;
      for_each_bit(u, [&](int p) { image |= bit(f[static_cast<std::size_t>(p)]); });
      if (!y.is_open(image)) return false;
    }
    return true;
  };
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) return images_match();
    for (int c = 0; c < n; ++c) {
      if (has(used, c)) continue;
      if (cardinality(px.up(i)) != cardinality(py.up(c)) ||
          cardinality(px.down(i)) != cardinality(py.down(c))) {
        continue;
      }
      bool consistent = true;
      for (int j = 0; j < i && consistent; ++j) {
        const int fj = f[static_cast<std::size_t>(j)];
        consistent = px.leq(i, j) == py.leq(c, fj) && px.leq(j, i) == py.leq(fj, c);
      }
      if (!consistent) continue;
      f[static_cast<std::size_t>(i)] = c;
      used |= bit(c);
      if (rec(i + 1)) return true;
      used &= ~bit(c);
    }
    f[static_cast<std::size_t>(i)] = -1;
    return false;
  };
  if (rec(0)) return f;
  return std::nullopt;
}

bool is_continuous(const FiniteSpace& x, const FiniteSpace& y, const std::vector<int>& table) {
  for (Mask v : y.opens()) {
    Mask pre = 0;
    for (int p = 0; p < x.size(); ++p) {
      if (has(v, table[static_cast<std::size_t>(p)])) pre |= bit(p);
    }
    if (!x.is_open(pre)) return false;
  }
  return true;
}

}  // namespace dtopw
