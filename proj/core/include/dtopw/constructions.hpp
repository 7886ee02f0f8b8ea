#pragma once

#include <string>
#include <vector>

#include "dtopw/lattice.hpp"
#include "dtopw/order.hpp"
#include "dtopw/topology.hpp"

namespace dtopw {

/// Two-point space {0 < 1} with opens ∅, {1}, {0,1}.
FiniteSpace sierpinski();
/// One-point space.
FiniteSpace point_space();

// Products. Point (i, j) has index i * |Y| + j and label "(x,y)".

/// Topological product: generated by the rectangles U × V.
FiniteSpace product(const FiniteSpace& x, const FiniteSpace& y);
/// Sets all of whose slices W_x and W^y are open.
FiniteSpace tensor(const FiniteSpace& x, const FiniteSpace& y);
/// d_topology(product(x, y)).
FiniteSpace cat_product(const FiniteSpace& x, const FiniteSpace& y);
/// Same topology as cat_product, decided by the two-sided slice criterion:
/// U is open iff for every directed D → a in X, every b and (a,b) ∈ U, some
/// (d,b) with d ∈ D lies in U, and symmetrically in Y.
FiniteSpace cat_product_by_slices(const FiniteSpace& x, const FiniteSpace& y);
/// n-fold topological product; labels "(a,b,c)", index in mixed radix with
/// the first coordinate most significant. Throws BoundExceeded past 64 points.
FiniteSpace power(const FiniteSpace& x, int n);

/// Continuous maps x → y as image tables, in lexicographic order.
std::vector<std::vector<int>> continuous_maps(const FiniteSpace& x, const FiniteSpace& y);

inline constexpr long kExponentialBudget = 4096;

struct Exponential {
  FiniteSpace space;
  std::vector<std::vector<int>> maps;  // point i is maps[i]
};

/// [X → Y]: continuous maps with the directed reflection of the pointwise
/// topology. Labels "[f:a,b,..]" list the images. Throws BoundExceeded when
/// |Y|^|X| exceeds `budget`.
Exponential exponential(const FiniteSpace& x, const FiniteSpace& y, long budget = kExponentialBudget);

/// Table of h ∘ - : [X → Y] → [X → Z] for continuous h : Y → Z.
std::vector<int> postcompose(const Exponential& from, const Exponential& to,
                             const std::vector<int>& h);

struct CurryingReport {
  long uncurried = 0;  // |[Z × X → Y]|
  long curried = 0;    // |[Z → [X → Y]]|
  bool bijective = false;
};

/// Checks that currying is a bijection [Z × X → Y] → [Z → [X → Y]].
CurryingReport check_currying(const FiniteSpace& z, const FiniteSpace& x, const FiniteSpace& y);

struct CoreCompactReport {
  bool open_lattice_continuous = false;
  bool graph_open = false;          // {(U,x) : x ∈ U} open in ΣO(X) × X
  bool evaluation_continuous = false;  // ev : [X → Σ2] × X → Σ2
  bool currying = false;            // sampled triples with Z, Y ≤ 2 points
  int currying_triples = 0;
  std::string witness;

  bool agree() const {
    return open_lattice_continuous == graph_open && graph_open == evaluation_continuous;
  }
  bool passed() const { return agree() && open_lattice_continuous && currying; }
};

CoreCompactReport check_core_compact(const FiniteSpace& x);

struct IdealCompletion {
  FiniteSpace space;          // labels "I{a,b}"
  std::vector<Mask> ideals;   // point i is ideals[i], a subset of X
  std::vector<int> principal; // principal[x] = index of ↓x
};

/// Topological ideals of X with the Ω topology, taken literally: 𝒰 is open
/// iff A ∈ 𝒰 exactly when some ↓x ∈ 𝒰 lies inside A.
IdealCompletion ideal_completion(const FiniteSpace& x);

/// ⋁ : I_T(X) → X between the specialization orders.
MonotoneMap sup_map(const FiniteSpace& x, const IdealCompletion& c);

struct GaloisConnection {
  MonotoneMap lower;
  MonotoneMap upper;

  /// f(a) ≤ b ⟺ a ≤ g(b) for all a, b.
  bool holds() const;
  /// Throws NotAGaloisConnection.
  static GaloisConnection make(MonotoneMap lower, MonotoneMap upper);
};

/// (⇓, ⋁) with ⇓x computed from d-approximation. Throws NotAGaloisConnection
/// if the law fails.
GaloisConnection lower_adjoint(const FiniteSpace& x, const IdealCompletion& c);

struct RetractReport {
  bool x_directed = false;
  bool y_directed = false;
  int checks = 0;  // directed-open U of X with r⁻¹(U) open in Y and U = i⁻¹r⁻¹(U)
  bool passed = false;
  std::string witness;
};

/// i : X → Y, r : Y → X with r ∘ i = id. Throws NotARetraction when the maps
/// are not continuous or do not compose to the identity.
RetractReport retract_transfer(const FiniteSpace& x, const FiniteSpace& y,
                               const std::vector<int>& r, const std::vector<int>& i);

struct SnReport {
  int n = 0;
  FiniteSpace domain;              // X^n
  FiniteLattice closed;            // C(X); element k is closed_sets()[k]
  std::vector<int> table;          // tuple ↦ ↓{x_1,..,x_n}
  bool continuous = false;         // into σ(C(X))
  bool sigma_equals_upsilon = false;
  std::string witness;
};

/// s_n : X^n → ΣC(X). Throws BoundExceeded for n > 3.
SnReport s_n_map(const FiniteSpace& x, int n);

struct EtaDiamondReport {
  std::vector<int> eta;          // x ↦ index of cl{x} in C(X)
  std::vector<Mask> diamond;     // open U (index into opens()) ↦ set of closed-set indices
  bool inverse_after_diamond = false;  // η⁻¹ ∘ ◇ = 1
  bool diamond_after_inverse = false;  // ◇ ∘ η⁻¹ ≤ 1 on σ(C(X))
  bool diamond_open = false;           // ◇(U) is Scott open
  bool preserves_sups = false;         // η⁻¹ and ◇ preserve finite unions
  std::string witness;

  bool passed() const {
    return inverse_after_diamond && diamond_after_inverse && diamond_open && preserves_sups;
  }
};

/// Throws BoundExceeded if C(X) has more than 64 members.
EtaDiamondReport eta_diamond(const FiniteSpace& x);

/// A finite complete lattice is always a Scott space: σ(L) is its Alexandroff
/// topology, so η is continuous and the conclusion holds trivially.
bool finite_lattice_is_scott_space(const FiniteLattice& l);

}  // namespace dtopw
