#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dtopw/lattice.hpp"
#include "dtopw/order.hpp"

namespace dtopw {

/// Upper bound on directed-subset enumeration inside topology routines.
inline constexpr int kTopologyDirectedBound = 20;

/// Up to this many points d_topology() tries every subset as a candidate;
/// above it only upper sets of the specialization order are tried.
inline constexpr int kLiteralCandidateBound = 10;

/**
 * A finite T0 space stored as its explicit family of open sets.
 *
 * The constructor adds the empty set and the carrier, then insists the
 * family is closed under binary union and intersection (NotATopology) and
 * separates points (NotT0). Opens are kept sorted by Mask value.
 */
class FiniteSpace {
 public:
  FiniteSpace() = default;
  FiniteSpace(std::vector<std::string> labels, std::vector<Mask> opens);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  Mask carrier() const noexcept { return full_mask(size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  std::optional<int> index_of(std::string_view label) const;

  const std::vector<Mask>& opens() const noexcept { return opens_; }
  bool is_open(Mask a) const;
  bool is_closed(Mask a) const { return is_open(carrier() & ~a); }
  Mask interior(Mask a) const;
  Mask closure(Mask a) const;
  /// Complements of the opens, sorted by Mask value.
  std::vector<Mask> closed_sets() const;
  /// Intersection of all opens containing x.
  Mask minimal_neighborhood(int x) const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.labels_ == b.labels_ && a.opens_ == b.opens_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Mask> opens_;
};

/// Pair (D, x) with D directed and D converging to x.
struct DirectedLimitPair {
  Mask dset = 0;
  int limit = 0;
};

/// x ⊑ y iff x lies in the closure of {y}.
FinitePoset specialization(const FiniteSpace& x);

/// Upper sets of P as opens.
FiniteSpace alexandroff(const FinitePoset& p);

/// Every open neighbourhood of x meets D. Throws NotDirected.
bool converges(const FiniteSpace& x, Mask d, int point);

/// All (D, x) with D directed in the specialization order and D -> x.
std::vector<DirectedLimitPair> directed_limits(const FiniteSpace& x);

/// The topology of all directed-open sets.
FiniteSpace d_topology(const FiniteSpace& x);

bool is_directed_space(const FiniteSpace& x);

/// Lattice of opens under inclusion; element i is x.opens()[i] and is
/// labelled "{a,b}".
FiniteLattice open_lattice(const FiniteSpace& x);

/// Lattice of closed sets under inclusion; element i is x.closed_sets()[i].
FiniteLattice closed_lattice(const FiniteSpace& x);

/// Upper sets U with: every directed D whose supremum lies in U meets U.
FiniteSpace scott_topology(const FinitePoset& p);

/// Generated by complements of principal down-sets.
FiniteSpace upper_topology(const FinitePoset& p);

/// Smallest topology containing the given subbasis.
FiniteSpace generate_topology(std::vector<std::string> labels, const std::vector<Mask>& subbasis);

/// A bijection f with {f(U)} = opens(Y), if one exists.
std::optional<std::vector<int>> find_homeomorphism(const FiniteSpace& x, const FiniteSpace& y);

/// Preimage of every open of Y is open in X.
bool is_continuous(const FiniteSpace& x, const FiniteSpace& y, const std::vector<int>& table);

/// Renders a subset as "{a,b}" in index order.
std::string set_label(const std::vector<std::string>& labels, Mask a);

}  // namespace dtopw
