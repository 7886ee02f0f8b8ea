#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dtopw/bits.hpp"

namespace dtopw {

/// Largest carrier directed_subsets() enumerates unless told otherwise.
inline constexpr int kDefaultEnumerationBound = 12;

/// Largest n accepted by enumerate_posets(); n = 6 already yields 130023
/// labeled orders.
inline constexpr int kMaxEnumeratedPosetSize = 6;

/**
 * A finite partially ordered set over opaque, pairwise distinct labels.
 *
 * The order is stored as a dense relation matrix and is checked for
 * reflexivity, antisymmetry and transitivity at construction. Values are
 * immutable once built. Posets with at most 64 elements additionally cache
 * principal up/down sets as bit masks; the Mask-based queries require that.
 */
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Reflexive-transitive closure of `pairs` (each read as `a <= b`).
  /// Throws UnknownLabel, DuplicateLabel, or CycleDetected.
  static FinitePoset from_relations(
      std::vector<std::string> labels,
      std::span<const std::pair<std::string, std::string>> pairs);

  /// Takes `leq` verbatim and validates it; throws NotAPartialOrder when an
  /// axiom fails (CycleDetected for antisymmetry).
  static FinitePoset from_predicate(std::vector<std::string> labels,
                                    const std::function<bool(int, int)>& leq);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  std::optional<int> index_of(std::string_view label) const;

  bool leq(int a, int b) const noexcept {
    return rel_[static_cast<std::size_t>(a) * labels_.size() + static_cast<std::size_t>(b)] != 0;
  }
  bool lt(int a, int b) const noexcept { return a != b && leq(a, b); }

  bool has_masks() const noexcept { return size() <= kMaxMaskPoints; }
  Mask carrier() const noexcept { return full_mask(size()); }
  Mask up(int x) const { return up_.at(static_cast<std::size_t>(x)); }
  Mask down(int x) const { return down_.at(static_cast<std::size_t>(x)); }
  Mask up_closure(Mask a) const;
  Mask down_closure(Mask a) const;
  bool is_upper(Mask a) const { return up_closure(a) == a; }
  bool is_lower(Mask a) const { return down_closure(a) == a; }
  Mask minimal(Mask a) const;
  Mask maximal(Mask a) const;
  std::optional<int> maximum(Mask a) const;
  Mask upper_bounds(Mask a) const;
  Mask lower_bounds(Mask a) const;
  std::optional<int> supremum(Mask a) const;
  std::optional<int> infimum(Mask a) const;

  /// Covering pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;

  FinitePoset dual() const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.labels_ == b.labels_ && a.rel_ == b.rel_;
  }

 private:
  FinitePoset(std::vector<std::string> labels, std::vector<std::uint8_t> rel);
  void build_masks();

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> rel_;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
};

/// Nonempty, and every pair of members has an upper bound inside `a`.
bool is_directed(const FinitePoset& p, Mask a);

/// Every directed subset, by filtering all nonempty subsets.
/// Throws BoundExceeded when |P| > bound.
std::vector<Mask> directed_subsets(const FinitePoset& p,
                                   int bound = kDefaultEnumerationBound);

/// Calls `visit` once per labeled partial order on n elements (labels a, b,
/// c, ...). Elements are added one at a time together with a compatible
/// (down-set, up-set) pair, so every labeled order appears exactly once.
void for_each_poset(int n, const std::function<void(const FinitePoset&)>& visit);

/// Labeled orders on n elements, optionally reduced to one representative
/// per isomorphism class. Throws BoundExceeded for n > 6.
std::vector<FinitePoset> enumerate_posets(int n, bool up_to_isomorphism = false);

/// All upper sets, in increasing numeric Mask order.
std::vector<Mask> upper_sets(const FinitePoset& p);

/// Order-preserving map between two finite posets, checked at construction.
class MonotoneMap {
 public:
  MonotoneMap(FinitePoset source, FinitePoset target, std::vector<int> table);

  const FinitePoset& source() const noexcept { return source_; }
  const FinitePoset& target() const noexcept { return target_; }
  const std::vector<int>& table() const noexcept { return table_; }
  int operator()(int x) const { return table_.at(static_cast<std::size_t>(x)); }

 private:
  FinitePoset source_;
  FinitePoset target_;
  std::vector<int> table_;
};

/// Default element labels used by the enumerators: a, b, ..., z, p26, ...
std::vector<std::string> default_labels(int n);

}  // namespace dtopw
