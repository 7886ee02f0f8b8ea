#pragma once

#include <string>
#include <vector>

#include "dtopw/order.hpp"

namespace dtopw {

/// A finite lattice with precomputed meet and join tables.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  /// Throws NotALattice if some pair lacks a meet or a join, or P is empty.
  static FiniteLattice from_poset(FinitePoset p);

  const FinitePoset& order() const noexcept { return order_; }
  int size() const noexcept { return order_.size(); }
  const std::string& label(int i) const { return order_.label(i); }
  bool leq(int a, int b) const noexcept { return order_.leq(a, b); }
  int meet(int a, int b) const { return meet_[index(a, b)]; }
  int join(int a, int b) const { return join_[index(a, b)]; }
  int bottom() const noexcept { return bottom_; }
  int top() const noexcept { return top_; }
  int join_all(Mask a) const;
  int meet_all(Mask a) const;
  FiniteLattice dual() const;

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(size()) +
           static_cast<std::size_t>(b);
  }

  FinitePoset order_;
  std::vector<int> meet_;
  std::vector<int> join_;
  int bottom_ = 0;
  int top_ = 0;
};

}  // namespace dtopw
