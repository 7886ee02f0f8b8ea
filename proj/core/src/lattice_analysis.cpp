#include "dtopw/lattice_analysis.hpp"

#include <vector>

#include "dtopw/errors.hpp"

namespace dtopw {

namespace {

// Smallest open set of the upper topology around each point: the meet of the
// subbasic sets X \ ↓z that contain it.
std::vector<Mask> upper_neighborhoods(const FinitePoset& p) {
  std::vector<Mask> out;
  for (int y = 0; y < p.size(); ++y) {
    Mask nb = p.carrier();
    for (int z = 0; z < p.size(); ++z) {
      if (!p.leq(y, z)) nb &= ~p.down(z);
    }
    out.push_back(nb);
  }
  return out;
}

// A directed set missing ↑x has a down-closure missing ↑x with the same join,
// so the waybelow test may range over ideals. Small lattices enumerate the
// directed lower sets; larger ones use that a finite ideal is principal.
std::vector<Mask> ideals(const FinitePoset& p) {
  std::vector<Mask> out;
  if (p.size() <= kTopologyDirectedBound) {
    for (Mask a : upper_sets(p.dual())) {
      if (a != 0 && is_directed(p, a)) out.push_back(a);
    }
  } else {
    for (int m = 0; m < p.size(); ++m) out.push_back(p.down(m));
  }
  return out;
}

bool waybelow_in(const FiniteLattice& l, const std::vector<Mask>& ids, int x, int y) {
  for (Mask d : ids) {
    if (l.leq(y, l.join_all(d)) && (d & l.order().up(x)) == 0) return false;
  }
  return true;
}

}  // namespace

bool is_distributive(const FiniteLattice& l) {
  const int n = l.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
      }
    }
  }
  return true;
}

Mask coprimes(const FiniteLattice& l) {
  const int n = l.size();
  Mask out = 0;
  for (int p = 0; p < n; ++p) {
    if (p == l.bottom()) continue;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        if (l.leq(p, l.join(a, b)) && !l.leq(p, a) && !l.leq(p, b)) ok = false;
      }
    }
    if (ok) out |= bit(p);
  }
  return out;
}

Mask primes(const FiniteLattice& l) {
  const int n = l.size();
  Mask out = 0;
  for (int p = 0; p < n; ++p) {
    if (p == l.top()) continue;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        if (l.leq(l.meet(a, b), p) && !l.leq(a, p) && !l.leq(b, p)) ok = false;
      }
    }
    if (ok) out |= bit(p);
  }
  return out;
}

bool is_completely_distributive(const FiniteLattice& l) {
  if (!is_distributive(l)) return false;
  const Mask cp = coprimes(l);
  for (int x = 0; x < l.size(); ++x) {
    if (l.join_all(cp & l.order().down(x)) != x) return false;
  }
  return true;
}

bool hyperbelow(const FiniteLattice& l, int x, int y) {
  return subset_of(upper_neighborhoods(l.order())[static_cast<std::size_t>(y)], l.order().up(x));
}

bool hyperbelow_open(const FiniteSpace& x, Mask u, Mask v) {
  const FinitePoset order = specialization(x);
  // Any witness F can be shrunk to F ∩ V, so subsets of V suffice.
  const Mask pool = v;
  for (Mask f = pool;; f = (f - 1) & pool) {
    const Mask up = order.up_closure(f);
    if (subset_of(u, up) && subset_of(up, v)) return true;
    if (f == 0) break;
  }
  return false;
}

bool is_hypercontinuous(const FiniteLattice& l) {
  const auto nb = upper_neighborhoods(l.order());
  for (int x = 0; x < l.size(); ++x) {
    Mask below = 0;
    for (int d = 0; d < l.size(); ++d) {
      if (subset_of(nb[static_cast<std::size_t>(x)], l.order().up(d))) below |= bit(d);
    }
    if (!is_directed(l.order(), below) || l.join_all(below) != x) return false;
  }
  return true;
}

bool is_hyperalgebraic(const FiniteLattice& l) {
  const auto nb = upper_neighborhoods(l.order());
  Mask hypercompact = 0;
  for (int d = 0; d < l.size(); ++d) {
    if (subset_of(nb[static_cast<std::size_t>(d)], l.order().up(d))) hypercompact |= bit(d);
  }
  for (int x = 0; x < l.size(); ++x) {
    if (l.join_all(hypercompact & l.order().down(x)) != x) return false;
  }
  return true;
}

bool waybelow(const FiniteLattice& l, int x, int y) {
  return waybelow_in(l, ideals(l.order()), x, y);
}

bool is_continuous_lattice(const FiniteLattice& l) {
  const auto ids = ideals(l.order());
  for (int x = 0; x < l.size(); ++x) {
    Mask below = 0;
    for (int d = 0; d < l.size(); ++d) {
      if (waybelow_in(l, ids, d, x)) below |= bit(d);
    }
    if (!is_directed(l.order(), below) || l.join_all(below) != x) return false;
  }
  return true;
}

bool is_algebraic_lattice(const FiniteLattice& l) {
  const auto ids = ideals(l.order());
  Mask compact = 0;
  for (int d = 0; d < l.size(); ++d) {
    if (waybelow_in(l, ids, d, d)) compact |= bit(d);
  }
  for (int x = 0; x < l.size(); ++x) {
    if (l.join_all(compact & l.order().down(x)) != x) return false;
  }
  return true;
}

FiniteSpace spectrum(const FiniteLattice& l) {
  if (!is_distributive(l)) throw NotDistributive("spectrum needs a distributive lattice");
  const std::vector<int> pts = members(primes(l));
  std::vector<std::string> labels;
  for (int p : pts) labels.push_back(l.label(p));
  std::vector<Mask> opens;
  for (int u = 0; u < l.size(); ++u) {
    Mask o = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!l.leq(u, pts[i])) o |= bit(static_cast<int>(i));
    }
    opens.push_back(o);
  }
  return FiniteSpace(std::move(labels), std::move(opens));
}

}  // namespace dtopw
