#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dtopw/topology.hpp"

namespace dtopw {

/// A point of a (possibly infinite) space, coded by a tag and two naturals.
struct Point {
  enum class Kind : std::uint8_t { Nat, Bot, Top, Pair, Omega };
  Kind kind = Kind::Nat;
  long a = 0;
  long b = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

inline Point nat(long n) { return {Point::Kind::Nat, n, 0}; }
inline Point top_point() { return {Point::Kind::Top, 0, 0}; }
inline Point bot_point() { return {Point::Kind::Bot, 0, 0}; }
inline Point pair_point(long m, long n) { return {Point::Kind::Pair, m, n}; }
inline Point omega_point(long m) { return {Point::Kind::Omega, m, 0}; }

/// One directed family drawn from a schema: schema id plus parameters.
struct FamilyInstance {
  std::string schema;
  std::vector<long> params;
  std::string description;
};

/**
 * Uniform access to a space for the approximation relations.
 *
 * Finite spaces answer every query literally. Presented spaces answer from
 * closed-form oracles and enumerate directed families through a schema
 * list; `window` bounds the parameters of the enumerated instances and is
 * chosen above every parameter of the query so that one fresh column or
 * index stands for all larger ones.
 */
class SpaceHandle {
 public:
  virtual ~SpaceHandle() = default;

  virtual std::string name() const = 0;
  /// Points whose parameters are all at most `depth`.
  virtual std::vector<Point> points(int depth) const = 0;
  virtual bool leq(const Point& x, const Point& y) const = 0;
  virtual std::string label(const Point& x) const = 0;
  /// Largest parameter appearing in the point.
  virtual int level(const Point& x) const = 0;
  /// Is y in int(↑F)? nullopt when the space has no interior oracle.
  virtual std::optional<bool> interior_contains(std::span<const Point> f, const Point& y) const = 0;
  /// Representatives of every directed family converging to y, or nullopt
  /// when no schema list is available.
  virtual std::optional<std::vector<FamilyInstance>> families_converging_to(const Point& y,
                                                                            int window) const = 0;
  /// Does the family meet ↑F?
  virtual bool meets_upper(const FamilyInstance& family, std::span<const Point> f) const = 0;
};

/// SpaceHandle over a FiniteSpace; point i is nat(i).
class FiniteHandle : public SpaceHandle {
 public:
  explicit FiniteHandle(FiniteSpace space);

  const FiniteSpace& space() const noexcept { return space_; }

  std::string name() const override { return "finite"; }
  std::vector<Point> points(int depth) const override;
  bool leq(const Point& x, const Point& y) const override;
  std::string label(const Point& x) const override;
  int level(const Point& x) const override;
  std::optional<bool> interior_contains(std::span<const Point> f, const Point& y) const override;
  std::optional<std::vector<FamilyInstance>> families_converging_to(const Point& y,
                                                                    int window) const override;
  bool meets_upper(const FamilyInstance& family, std::span<const Point> f) const override;

 private:
  Mask up_of(std::span<const Point> f) const;

  FiniteSpace space_;
  FinitePoset order_;
  std::vector<std::pair<Mask, Mask>> directed_;  // (D, closure of D)
};

enum class Relation { n, d };

std::string to_string(Relation r);

/// Outcome of one approximation query together with its evidence.
struct ApproxReport {
  Relation kind = Relation::n;
  std::string x;
  std::string y;
  bool holds = false;
  std::string witness;
  int depth = 0;

  /// `REL kind x y -> bool (witness: ...)`
  std::string line() const;
};

/// y ∈ int(↑x). Throws OracleUnavailable.
ApproxReport n_approx(const SpaceHandle& s, const Point& x, const Point& y);

/// Every directed family converging to y meets ↑x. Throws OracleUnavailable.
ApproxReport d_approx(const SpaceHandle& s, const Point& x, const Point& y);

/// G ≪ H: n via H ⊆ int(↑G), d via the family enumeration.
ApproxReport fin_approx(const SpaceHandle& s, std::span<const Point> g, std::span<const Point> h,
                        Relation kind);

/// Points p with p ≪ p among points(depth).
std::vector<Point> compact_elements(const SpaceHandle& s, Relation kind, int depth);

// Finite spaces, by direct computation on masks.

bool n_approx(const FiniteSpace& x, int a, int b);
bool d_approx(const FiniteSpace& x, int a, int b);
/// G ≪ H for finite G, H.
bool fin_approx(const FiniteSpace& x, Mask g, Mask h, Relation kind);
/// ⇓_i a.
Mask approximants(const FiniteSpace& x, int a, Relation kind);
/// K_i(X).
Mask compact_points(const FiniteSpace& x, Relation kind);

bool is_c_space(const FiniteSpace& x);
bool is_b_space(const FiniteSpace& x);
/// Directed space with ⇓_d x directed and converging to x.
bool is_d_continuous(const FiniteSpace& x);
/// ⇓_n x directed and converging to x.
bool is_n_continuous(const FiniteSpace& x);
bool is_d_algebraic(const FiniteSpace& x);
bool is_n_algebraic(const FiniteSpace& x);
bool is_locally_hypercompact(const FiniteSpace& x);
bool is_hypercompactly_based(const FiniteSpace& x);

/// Largest space the finite-subset quantifiers below accept.
inline constexpr int kQuasiBound = 8;

/// Directed space, and {F : F ≪_d x} directed and converging to x.
bool is_d_quasicontinuous(const FiniteSpace& x);
/// {F : F ≪_n x} directed and converging to x.
bool is_n_quasicontinuous(const FiniteSpace& x);
/// Directed space, and {F : F ≪_d F, F ≪_d x} directed and converging to x.
bool is_d_quasialgebraic(const FiniteSpace& x);
bool is_n_quasialgebraic(const FiniteSpace& x);

struct CompactOpenReport {
  int opens_checked = 0;
  int compact = 0;
  int hypercompact = 0;
  bool holds = true;
  std::string witness;
};

/// Every compact open U equals ↑F for a finite F (F = minimal points of U).
CompactOpenReport compact_open_is_hypercompact(const FiniteSpace& x);

}  // namespace dtopw
