#include "dtopw/order.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "dtopw/errors.hpp"

namespace dtopw {

namespace {

void require_masks(const FinitePoset& p) {
  if (!p.has_masks()) {
    throw BoundExceeded("mask queries need at most 64 elements, poset has " +
                        std::to_string(p.size()));
  }
}

void require_distinct(const std::vector<std::string>& labels) {
  std::set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw DuplicateLabel("duplicate label '" + l + "'");
  }
}

}  // namespace

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (i < 26) {
      out.emplace_back(1, static_cast<char>('a' + i));
    } else {
      out.push_back("p" + std::to_string(i));
    }
  }
  return out;
}

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<std::uint8_t> rel)
    : labels_(std::move(labels)), rel_(std::move(rel)) {
  build_masks();
}

void FinitePoset::build_masks() {
  up_.clear();
  down_.clear();
  if (!has_masks()) return;
  const int n = size();
  up_.assign(static_cast<std::size_t>(n), 0);
  down_.assign(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (leq(a, b)) {
        up_[static_cast<std::size_t>(a)] |= bit(b);
        down_[static_cast<std::size_t>(b)] |= bit(a);
      }
    }
  }
}

FinitePoset FinitePoset::from_relations(
    std::vector<std::string> labels,
    std::span<const std::pair<std::string, std::string>> pairs) {
  require_distinct(labels);
  const std::size_t n = labels.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(labels[i], i);

  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw UnknownLabel("unknown label '" + a + "'");
    if (ib == index.end()) throw UnknownLabel("unknown label '" + b + "'");
    rel[ia->second * n + ib->second] = 1;
  }
  // Warshall
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (rel[i * n + k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (rel[k * n + j] != 0) rel[i * n + j] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rel[i * n + j] != 0 && rel[j * n + i] != 0) {
        throw CycleDetected("cycle through '" + labels[i] + "' and '" + labels[j] + "'");
      }
    }
  }
  return FinitePoset(std::move(labels), std::move(rel));
}

FinitePoset FinitePoset::from_predicate(std::vector<std::string> labels,
                                        const std::function<bool(int, int)>& leq) {
  require_distinct(labels);
  const int n = static_cast<int>(labels.size());
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::uint8_t> rel(un * un, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      rel[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)] = leq(i, j) ? 1 : 0;
    }
  }
  auto at = [&](int i, int j) {
    return rel[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)] != 0;
  };
  for (int i = 0; i < n; ++i) {
    if (!at(i, i)) throw NotAPartialOrder("not reflexive at '" + labels[static_cast<std::size_t>(i)] + "'");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (at(i, j) && at(j, i)) {
        throw CycleDetected("antisymmetry fails for '" + labels[static_cast<std::size_t>(i)] +
                            "' and '" + labels[static_cast<std::size_t>(j)] + "'");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!at(i, j)) continue;
      for (int k = 0; k < n; ++k) {
        if (at(j, k) && !at(i, k)) {
          throw NotAPartialOrder("transitivity fails at '" + labels[static_cast<std::size_t>(i)] +
                                 "' <= '" + labels[static_cast<std::size_t>(j)] + "' <= '" +
                                 labels[static_cast<std::size_t>(k)] + "'");
        }
      }
    }
  }
  return FinitePoset(std::move(labels), std::move(rel));
}

std::optional<int> FinitePoset::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

Mask FinitePoset::up_closure(Mask a) const {
  require_masks(*this);
  Mask out = 0;
  for_each_bit(a, [&](int x) { out |= up_[static_cast<std::size_t>(x)]; });
  return out;
}

Mask FinitePoset::down_closure(Mask a) const {
  require_masks(*this);
  Mask out = 0;
  for_each_bit(a, [&](int x) { out |= down_[static_cast<std::size_t>(x)]; });
  return out;
}

Mask FinitePoset::minimal(Mask a) const {
  require_masks(*this);
  Mask out = 0;
  for_each_bit(a, [&](int x) {
    if ((down_[static_cast<std::size_t>(x)] & a) == bit(x)) out |= bit(x);
  });
  return out;
}

Mask FinitePoset::maximal(Mask a) const {
  require_masks(*this);
  Mask out = 0;
  for_each_bit(a, [&](int x) {
    if ((up_[static_cast<std::size_t>(x)] & a) == bit(x)) out |= bit(x);
  });
  return out;
}

std::optional<int> FinitePoset::maximum(Mask a) const {
  require_masks(*this);
  std::optional<int> found;
  for_each_bit(a, [&](int x) {
    if (subset_of(a, down_[static_cast<std::size_t>(x)])) found = x;
  });
  return found;
}

Mask FinitePoset::upper_bounds(Mask a) const {
  require_masks(*this);
  Mask out = carrier();
  for_each_bit(a, [&](int x) { out &= up_[static_cast<std::size_t>(x)]; });
  return out;
}

Mask FinitePoset::lower_bounds(Mask a) const {
  require_masks(*this);
  Mask out = carrier();
  for_each_bit(a, [&](int x) { out &= down_[static_cast<std::size_t>(x)]; });
  return out;
}

std::optional<int> FinitePoset::supremum(Mask a) const {
  const Mask ub = upper_bounds(a);
  for (int x : members(ub)) {
    if (subset_of(ub, up_[static_cast<std::size_t>(x)])) return x;
  }
  return std::nullopt;
}

std::optional<int> FinitePoset::infimum(Mask a) const {
  const Mask lb = lower_bounds(a);
  for (int x : members(lb)) {
    if (subset_of(lb, down_[static_cast<std::size_t>(x)])) return x;
  }
  return std::nullopt;
}

std::vector<std::pair<int, int>> FinitePoset::covers() const {
  std::vector<std::pair<int, int>> out;
  const int n = size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!lt(a, b)) continue;
      bool between = false;
      for (int c = 0; c < n && !between; ++c) between = lt(a, c) && lt(c, b);
      if (!between) out.emplace_back(a, b);
    }
  }
  return out;
}

FinitePoset FinitePoset::dual() const {
  const auto n = labels_.size();
  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rel[i * n + j] = rel_[j * n + i];
  }
  return FinitePoset(labels_, std::move(rel));
}

bool is_directed(const FinitePoset& p, Mask a) {
  if (a == 0) return false;
  const auto elems = members(a);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if ((p.up(elems[i]) & p.up(elems[j]) & a) == 0) return false;
    }
  }
  return true;
}

std::vector<Mask> directed_subsets(const FinitePoset& p, int bound) {
  if (p.size() > bound) {
    throw BoundExceeded("directed_subsets: " + std::to_string(p.size()) +
                        " elements exceeds bound " + std::to_string(bound));
  }
  std::vector<Mask> out;
  const Mask all = p.carrier();
  for (Mask a = 1; a != 0 && a <= all; ++a) {
    if (is_directed(p, a)) out.push_back(a);
  }
  return out;
}

namespace {

struct PosetBuilder {
  int target;
  std::vector<Mask> up;    // up[i] over the first k elements
  std::vector<Mask> down;
  const std::function<void(const FinitePoset&)>& visit;

  void emit() {
    const int n = target;
    auto labels = default_labels(n);
    auto rel = [this](int a, int b) { return has(up[static_cast<std::size_t>(a)], b); };
    visit(FinitePoset::from_predicate(std::move(labels), rel));
  }

  void extend(int k) {
    if (k == target) {
      emit();
      return;
    }
    const Mask existing = full_mask(k);
    // The new element k needs a down-set D and an up-set U among 0..k-1 that
    // are disjoint and with every d in D below every u in U.
    for (Mask d = 0;; d = (d - existing) & existing) {
      bool lower = true;
      for_each_bit(d, [&](int x) { lower = lower && subset_of(down[static_cast<std::size_t>(x)], d); });
      if (lower) {
        const Mask allowed = existing & ~d;
        Mask required_above = existing;
        for_each_bit(d, [&](int x) { required_above &= up[static_cast<std::size_t>(x)]; });
        for (Mask u = 0;; u = (u - allowed) & allowed) {
          bool upper = true;
          for_each_bit(u, [&](int x) { upper = upper && subset_of(up[static_cast<std::size_t>(x)] & existing, u); });
          if (upper && subset_of(u, required_above)) {
            auto saved_up = up;
            auto saved_down = down;
            up[static_cast<std::size_t>(k)] = bit(k) | u;
            down[static_cast<std::size_t>(k)] = bit(k) | d;
            for_each_bit(d, [&](int x) { up[static_cast<std::size_t>(x)] |= bit(k); });
            for_each_bit(u, [&](int x) { down[static_cast<std::size_t>(x)] |= bit(k); });
            extend(k + 1);
            up = std::move(saved_up);
            down = std::move(saved_down);
          }
          if (u == allowed) break;
        }
      }
      if (d == existing) break;
    }
  }
};

// Least relation matrix over orderings that sort points by (|↓x|, |↑x|).
// Isomorphisms preserve that key, so only permutations inside runs of equal
// keys need to be tried.
std::vector<std::uint8_t> canonical_code(const FinitePoset& p) {
  const int n = p.size();
  auto key = [&](int x) { return std::pair{cardinality(p.down(x)), cardinality(p.up(x))}; };
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](int a, int b) { return std::pair{key(a), a} < std::pair{key(b), b}; });
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t i = 0; i < perm.size();) {
    std::size_t j = i;
    while (j < perm.size() && key(perm[j]) == key(perm[i])) ++j;
    if (j - i > 1) runs.emplace_back(i, j);
    i = j;
  }
  std::vector<std::uint8_t> best;
  while (true) {
    std::vector<std::uint8_t> code;
    code.reserve(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        code.push_back(p.leq(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ? 1 : 0);
      }
    }
    if (best.empty() || code < best) best = std::move(code);
    // Odometer over the runs; each run wraps back to sorted order.
    std::size_t r = 0;
    for (; r < runs.size(); ++r) {
      auto first = perm.begin() + static_cast<std::ptrdiff_t>(runs[r].first);
      auto last = perm.begin() + static_cast<std::ptrdiff_t>(runs[r].second);
      if (std::next_permutation(first, last)) break;
    }
    if (r == runs.size()) break;
  }
  return best;
}

}  // namespace

void for_each_poset(int n, const std::function<void(const FinitePoset&)>& visit) {
  if (n < 0 || n > kMaxEnumeratedPosetSize) {
    throw BoundExceeded("enumerate_posets: n must be in 0.." +
                        std::to_string(kMaxEnumeratedPosetSize));
  }
  PosetBuilder builder{n, std::vector<Mask>(static_cast<std::size_t>(n), 0),
                       std::vector<Mask>(static_cast<std::size_t>(n), 0), visit};
  builder.extend(0);
}

std::vector<FinitePoset> enumerate_posets(int n, bool up_to_isomorphism) {
  std::vector<FinitePoset> out;
  std::set<std::vector<std::uint8_t>> seen;
  for_each_poset(n, [&](const FinitePoset& p) {
    if (up_to_isomorphism && !seen.insert(canonical_code(p)).second) return;
    out.push_back(p);
  });
  return out;
}

std::vector<Mask> upper_sets(const FinitePoset& p) {
  require_masks(p);
  const int n = p.size();
  // Decide elements from the top of a linear extension downward; including x
  // is only allowed once everything strictly above x is already included.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return cardinality(p.up(a)) < cardinality(p.up(b));
  });
  std::vector<Mask> out;
  std::function<void(std::size_t, Mask)> rec = [&](std::size_t i, Mask acc) {
    if (i == order.size()) {
      out.push_back(acc);
      return;
    }
    const int x = order[i];
    rec(i + 1, acc);
    if (subset_of(p.up(x) & ~bit(x), acc)) rec(i + 1, acc | bit(x));
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

MonotoneMap::MonotoneMap(FinitePoset source, FinitePoset target, std::vector<int> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (static_cast<int>(table_.size()) != source_.size()) {
    throw NotMonotone("map table has " + std::to_string(table_.size()) +
                      " entries for a source of size " + std::to_string(source_.size()));
  }
  for (int v : table_) {
    if (v < 0 || v >= target_.size()) throw NotMonotone("map value out of range");
  }
  for (int a = 0; a < source_.size(); ++a) {
    for (int b = 0; b < source_.size(); ++b) {
      if (source_.leq(a, b) && !target_.leq((*this)(a), (*this)(b))) {
        throw NotMonotone("map is not monotone at '" + source_.label(a) + "' <= '" +
                          source_.label(b) + "'");
      }
    }
  }
}

}  // namespace dtopw
