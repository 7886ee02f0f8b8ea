#include "dtopw/lattice.hpp"

#include "dtopw/errors.hpp"

namespace dtopw {

FiniteLattice FiniteLattice::from_poset(FinitePoset p) {
  if (p.size() == 0) throw NotALattice("a lattice needs at least one element");
  if (!p.has_masks()) throw BoundExceeded("lattices are limited to 64 elements");
  FiniteLattice l;
  const int n = p.size();
  l.meet_.assign(static_cast<std::size_t>(n * n), 0);
  l.join_.assign(static_cast<std::size_t>(n * n), 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Mask pair = bit(a) | bit(b);
      auto m = p.infimum(pair);
      auto j = p.supremum(pair);
      if (!m || !j) {
        throw NotALattice("'" + p.label(a) + "' and '" + p.label(b) +
                          (m ? "' have no join" : "' have no meet"));
      }
      l.meet_[static_cast<std::size_t>(a * n + b)] = *m;
      l.join_[static_cast<std::size_t>(a * n + b)] = *j;
    }
  }
  l.bottom_ = *p.infimum(p.carrier());
  l.top_ = *p.supremum(p.carrier());
  l.order_ = std::move(p);
  return l;
}

int FiniteLattice::join_all(Mask a) const {
  int acc = bottom_;
  for_each_bit(a, [&](int x) { acc = join(acc, x); });
  return acc;
}

int FiniteLattice::meet_all(Mask a) const {
  int acc = top_;
  for_each_bit(a, [&](int x) { acc = meet(acc, x); });
  return acc;
}

FiniteLattice FiniteLattice::dual() const { return from_poset(order_.dual()); }

}  // namespace dtopw
