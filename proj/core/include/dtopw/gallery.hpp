#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dtopw/approximation.hpp"

namespace dtopw {

/**
 * A parametrised family of directed subsets of a presented space.
 *
 * `instances(window)` lists every parameter vector whose entries fit the
 * window; `generators` gives the instance's points inside the window, where a
 * point at the window's top height stands for an unbounded chain.
 */
struct DirectedSchema {
  std::string id;
  std::string parameters;
  std::function<bool(const std::vector<long>&, const Point&)> member;
  std::function<bool(const std::vector<long>&, const Point&)> converges_to;
  std::function<bool(const std::vector<long>&, std::span<const Point>)> meets_upper;
  std::function<std::vector<std::vector<long>>(int window)> instances;
  std::function<std::vector<Point>(const std::vector<long>&, int window)> generators;
  bool finite = true;
};

/// Finite piece of a presented space: the points of level ≤ depth with the
/// induced order. The order is always faithful; the Alexandroff topology of
/// the truncation is not the space's topology (interiors differ), which is
/// what `topology_faithful` records. Closures of finite subsets are faithful.
struct Truncation {
  int depth = 0;
  std::vector<Point> points;
  FinitePoset order;
  bool topology_faithful = false;
};

/// A countable space given by oracles; see gallery_space().
class PresentedSpace : public SpaceHandle {
 public:
  /// Short written argument that the schema list covers every directed set.
  virtual std::string classification() const = 0;
  virtual const std::vector<DirectedSchema>& schemas() const = 0;

  /// Closure of the generated set, intersected with the window's points.
  virtual std::vector<Point> closure_points(std::span<const Point> generators, int window) const = 0;

  bool closure_contains(std::span<const Point> generators, const Point& y, int window) const;
  bool closure_contains(const FamilyInstance& family, const Point& y, int window) const;

  const DirectedSchema& schema(std::string_view id) const;
  FamilyInstance instance(const DirectedSchema& s, std::vector<long> params) const;
  /// A finite directed set behaves like the principal family of its maximum.
  FamilyInstance classify_finite(std::span<const Point> d) const;
  Truncation truncate(int depth) const;

  std::optional<std::vector<FamilyInstance>> families_converging_to(const Point& y,
                                                                    int window) const override;
  bool meets_upper(const FamilyInstance& family, std::span<const Point> f) const override;
};

/// nat_top_upper, nat_top_bot_upper, example_P_scott, johnstone_scott,
/// nat_cofinite. Throws UnknownName.
std::shared_ptr<const PresentedSpace> gallery_space(std::string_view name);
std::vector<std::string> gallery_names();

struct ClaimResult {
  std::string space;
  std::string id;
  bool expected = true;
  bool actual = false;
  std::string line;

  bool passed() const { return expected == actual; }
};

struct GalleryReport {
  std::string space;
  int depth = 0;
  std::vector<ClaimResult> claims;

  bool passed() const;
  std::string text() const;
};

/// Runs the claim list of one space without throwing on failure.
GalleryReport run_gallery_claims(std::string_view name, int depth);

/// As run_gallery_claims, but throws ClaimFailed listing failing claims.
GalleryReport verify_gallery_claims(std::string_view name, int depth);

struct SoundnessReport {
  std::string space;
  int depth = 0;
  long checks = 0;
  long mismatches = 0;
  long sampled_maxima = 0;  // maxima whose down-set was sampled, not exhausted
  std::string first_mismatch;
};

/// Largest strict down-set whose subsets are all enumerated by
/// schema_soundness(); bigger ones are sampled (see SoundnessReport).
inline constexpr int kExhaustiveDownSetBits = 12;

/// Compares, on the truncation at `depth`, the closure oracle, the order and
/// the schema predictions for every directed subset, every schema instance
/// and the interior oracle.
SoundnessReport schema_soundness(const PresentedSpace& s, int depth);

}  // namespace dtopw
