#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dtopw/approximation.hpp"

namespace dtopw {

/**
 * A Scott-closed subset of 𝕁 = ℕ × (ℕ ∪ {ω}) in finite presentation.
 *
 * Columns in S are taken whole, including their top (m,ω). Every other
 * column k is cut at height h(k), given by a finite exception map over a
 * constant tail. Closedness forces every height to be at least max S, since
 * (m,ω) lies above (k,n) whenever n ≤ m. The whole space needs infinitely
 * many full columns and is carried by a separate marker.
 *
 * Values are kept canonical: no exception for a column in S and no exception
 * equal to the tail, so structural equality is set equality.
 */
class ClosedSetJ {
 public:
  static ClosedSetJ whole();
  static ClosedSetJ empty();
  /// Validates and canonicalizes; throws NotInFragment if the data does not
  /// describe a Scott-closed set (negative values, or a height below max S).
  static ClosedSetJ make(std::set<long> full_columns, std::map<long, long> exceptions, long tail);

  bool is_whole() const noexcept { return whole_; }
  bool is_empty() const noexcept { return !whole_ && s_.empty() && tail_ == 0 && h_.empty(); }
  const std::set<long>& full_columns() const noexcept { return s_; }
  const std::map<long, long>& exceptions() const noexcept { return h_; }
  long tail() const noexcept { return tail_; }
  long max_full() const noexcept { return s_.empty() ? 0 : *s_.rbegin(); }
  /// Height of column k; nullopt for a full column.
  std::optional<long> height(long k) const;

  bool contains(const Point& p) const;
  bool subset_of(const ClosedSetJ& other) const;
  /// Largest number mentioned by the presentation.
  long parameter_size() const;
  std::string to_string() const;

  friend bool operator==(const ClosedSetJ&, const ClosedSetJ&) = default;
  friend auto operator<=>(const ClosedSetJ&, const ClosedSetJ&) = default;

 private:
  bool whole_ = false;
  std::set<long> s_;
  std::map<long, long> h_;
  long tail_ = 0;
};

/// Generators for j_closure: points, whole columns, and a band ℕ × {1..band}.
struct JGenerators {
  std::vector<Point> points;
  std::set<long> full_columns;
  long band = 0;
};

/// Scott closure in 𝕁. Throws NotInFragment for points outside 𝕁.
ClosedSetJ j_closure(const JGenerators& g);
ClosedSetJ j_closure(const Point& p);
ClosedSetJ j_join(const ClosedSetJ& a, const ClosedSetJ& b);
ClosedSetJ j_meet(const ClosedSetJ& a, const ClosedSetJ& b);

/// B_m = ℕ × {1..m}.
ClosedSetJ j_band(long m);

/// Maximal elements when there are finitely many; nullopt for infinitely
/// many (or the whole space).
std::optional<std::vector<Point>> j_maximal_points(const ClosedSetJ& a);

/// x with a = ↓x, if a is principal.
std::optional<Point> j_generator(const ClosedSetJ& a);

/// Nonempty and not a union of two strictly smaller closed sets.
bool j_irreducible(const ClosedSetJ& a);

/// Two strictly smaller closed sets whose union is a, if they exist.
std::optional<std::pair<ClosedSetJ, ClosedSetJ>> j_decompose(const ClosedSetJ& a);

/// Fragment elements with every parameter ≤ bound, at most `max_full` full
/// columns and at most `max_exceptions` exceptions. Excludes the whole marker.
std::vector<ClosedSetJ> enumerate_fragment(long bound, int max_full, int max_exceptions);

struct JCheck {
  std::string claim;
  bool expected = true;
  bool actual = false;
  std::string witness;

  bool passed() const { return expected == actual; }
  std::string line() const;
};

/// Spec L = 𝕁 ∪ {⊤}: {⊤} Scott-open, {⊤} not hull-kernel open, and the
/// ↑(1,1) equivalence. Checks range over parameters ≤ depth.
std::vector<JCheck> j_spec_topology_check(int depth);

struct SeparationReport {
  std::string target;
  bool trivial = false;
  bool verified = false;
  int tests = 0;
  std::vector<ClosedSetJ> family;
  int depth = 0;
  std::string note;

  std::string line() const;
};

/// For the Scott-closed collection {C ∈ Γ(𝕁) : C ⊆ A}, finds closed sets
/// G_1..G_k ≠ A containing A such that C ⊆ A iff C ⊆ G_i for all i, on every
/// test C of parameter size ≤ depth.
SeparationReport j_sigma_equals_upsilon_witness(const ClosedSetJ& a, int depth);

/// For every proper fragment element C with parameters ≤ bound, some B_m is
/// not below C.
JCheck j_band_chain_unbounded(long bound);

/// The fixed sample used by the acceptance run.
std::vector<ClosedSetJ> j_sample_elements();

}  // namespace dtopw
