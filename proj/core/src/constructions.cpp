#include "dtopw/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "dtopw/approximation.hpp"
#include "dtopw/errors.hpp"
#include "dtopw/lattice_analysis.hpp"

namespace dtopw {

namespace {

std::vector<std::string> pair_labels(const FiniteSpace& x, const FiniteSpace& y) {
  std::vector<std::string> out;
  for (int i = 0; i < x.size(); ++i) {
    for (int j = 0; j < y.size(); ++j) out.push_back("(" + x.label(i) + "," + y.label(j) + ")");
  }
  return out;
}

void require_pair_size(const FiniteSpace& x, const FiniteSpace& y) {
  if (x.size() * y.size() > kMaxMaskPoints) {
    throw BoundExceeded("product has more than " + std::to_string(kMaxMaskPoints) + " points");
  }
}

// Slices of w ⊆ X × Y.
Mask row(Mask w, int i, int ny) { return (w >> (i * ny)) & full_mask(ny); }

Mask column(Mask w, int j, int nx, int ny) {
  Mask out = 0;
  for (int i = 0; i < nx; ++i) {
    if (has(w, i * ny + j)) out |= bit(i);
  }
  return out;
}

// Candidate opens on X × Y: every subset while that is cheap, otherwise the
// upper sets of the product order (any set with open slices is one).
std::vector<Mask> product_candidates(const FiniteSpace& x, const FiniteSpace& y) {
  const int n = x.size() * y.size();
  std::vector<Mask> out;
  if (n <= 12) {
    for (Mask w = 0; w <= full_mask(n); ++w) out.push_back(w);
    return out;
  }
  const FinitePoset px = specialization(x);
  const FinitePoset py = specialization(y);
  const int ny = y.size();
  const FinitePoset order = FinitePoset::from_predicate(pair_labels(x, y), [&](int a, int b) {
    return px.leq(a / ny, b / ny) && py.leq(a % ny, b % ny);
  });
  return upper_sets(order);
}

// Is {(a,b) : pred(a,b)} open in A × B? Uses minimal neighbourhoods, so the
// product topology is never materialized.
bool product_open(const FiniteSpace& a, const FiniteSpace& b,
                  const std::function<bool(int, int)>& pred) {
  for (int i = 0; i < a.size(); ++i) {
    const Mask ni = a.minimal_neighborhood(i);
    for (int j = 0; j < b.size(); ++j) {
      if (!pred(i, j)) continue;
      const Mask nj = b.minimal_neighborhood(j);
      bool inside = true;
      for_each_bit(ni, [&](int p) {
        for_each_bit(nj, [&](int q) { inside = inside && pred(p, q); });
      });
      if (!inside) return false;
    }
  }
  return true;
}

Mask preimage(const std::vector<int>& table, Mask v) {
  Mask out = 0;
  for (std::size_t p = 0; p < table.size(); ++p) {
    if (has(v, table[p])) out |= bit(static_cast<int>(p));
  }
  return out;
}

int index_of_mask(const std::vector<Mask>& sets, Mask m) {
  const auto it = std::find(sets.begin(), sets.end(), m);
  return it == sets.end() ? -1 : static_cast<int>(it - sets.begin());
}

}  // namespace

FiniteSpace sierpinski() { return FiniteSpace({"0", "1"}, {bit(1)}); }

FiniteSpace point_space() { return FiniteSpace({"*"}, {}); }

FiniteSpace product(const FiniteSpace& x, const FiniteSpace& y) {
  require_pair_size(x, y);
  const int nx = x.size();
  const int ny = y.size();
  std::vector<Mask> subbasis;
  for (Mask u : x.opens()) {
    Mask s = 0;
    for (int i = 0; i < nx; ++i) {
      if (has(u, i)) s |= full_mask(ny) << (i * ny);
    }
    subbasis.push_back(s);
  }
  for (Mask v : y.opens()) {
    Mask s = 0;
    for (int i = 0; i < nx; ++i) s |= v << (i * ny);
    subbasis.push_back(s);
  }
  return generate_topology(pair_labels(x, y), subbasis);
}

FiniteSpace tensor(const FiniteSpace& x, const FiniteSpace& y) {
  require_pair_size(x, y);
  const int nx = x.size();
  const int ny = y.size();
  std::vector<Mask> opens;
  for (Mask w : product_candidates(x, y)) {
    bool ok = true;
    for (int i = 0; i < nx && ok; ++i) ok = y.is_open(row(w, i, ny));
    for (int j = 0; j < ny && ok; ++j) ok = x.is_open(column(w, j, nx, ny));
    if (ok) opens.push_back(w);
  }
  return FiniteSpace(pair_labels(x, y), std::move(opens));
}

FiniteSpace cat_product(const FiniteSpace& x, const FiniteSpace& y) {
  return d_topology(product(x, y));
}

FiniteSpace cat_product_by_slices(const FiniteSpace& x, const FiniteSpace& y) {
  require_pair_size(x, y);
  const int nx = x.size();
  const int ny = y.size();
  const auto lx = directed_limits(x);
  const auto ly = directed_limits(y);
  std::vector<Mask> opens;
  for (Mask w : product_candidates(x, y)) {
    bool ok = true;
    for (int j = 0; j < ny && ok; ++j) {
      const Mask col = column(w, j, nx, ny);
      for (const auto& l : lx) {
        if (has(col, l.limit) && (col & l.dset) == 0) {
          ok = false;
          break;
        }
      }
    }
    for (int i = 0; i < nx && ok; ++i) {
      const Mask r = row(w, i, ny);
      for (const auto& l : ly) {
        if (has(r, l.limit) && (r & l.dset) == 0) {
          ok = false;
          break;
        }
      }
    }
    if (ok) opens.push_back(w);
  }
  return FiniteSpace(pair_labels(x, y), std::move(opens));
}

FiniteSpace power(const FiniteSpace& x, int n) {
  if (n < 1) throw BoundExceeded("power needs n >= 1");
  long total = 1;
  for (int k = 0; k < n; ++k) {
    total *= x.size();
    if (total > kMaxMaskPoints) throw BoundExceeded("power has more than 64 points");
  }
  const int size = static_cast<int>(total);
  auto coord = [&](int t, int k) {
    for (int s = n - 1; s > k; --s) t /= x.size();
    return t % x.size();
  };
  std::vector<std::string> labels;
  for (int t = 0; t < size; ++t) {
    std::string l = "(";
    for (int k = 0; k < n; ++k) l += (k ? "," : "") + x.label(coord(t, k));
    labels.push_back(l + ")");
  }
  std::vector<Mask> subbasis;
  for (int k = 0; k < n; ++k) {
    for (Mask u : x.opens()) {
      Mask s = 0;
      for (int t = 0; t < size; ++t) {
        if (has(u, coord(t, k))) s |= bit(t);
      }
      subbasis.push_back(s);
    }
  }
  return generate_topology(std::move(labels), subbasis);
}

std::vector<std::vector<int>> continuous_maps(const FiniteSpace& x, const FiniteSpace& y) {
  const FinitePoset px = specialization(x);
  const FinitePoset py = specialization(y);
  std::vector<std::vector<int>> out;
  std::vector<int> f(static_cast<std::size_t>(x.size()), 0);
  std::function<void(int)> go = [&](int k) {
    if (k == x.size()) {
      if (is_continuous(x, y, f)) out.push_back(f);
      return;
    }
    for (int v = 0; v < y.size(); ++v) {
      bool ok = true;
      for (int p = 0; p < k && ok; ++p) {
        const int fp = f[static_cast<std::size_t>(p)];
        if (px.leq(p, k) && !py.leq(fp, v)) ok = false;
        if (px.leq(k, p) && !py.leq(v, fp)) ok = false;
      }
      if (!ok) continue;
      f[static_cast<std::size_t>(k)] = v;
      go(k + 1);
    }
  };
  go(0);
  return out;
}

Exponential exponential(const FiniteSpace& x, const FiniteSpace& y, long budget) {
  long count = 1;
  for (int k = 0; k < x.size(); ++k) {
    count *= y.size();
    if (count > budget) {
      throw BoundExceeded("exponential would scan more than " + std::to_string(budget) + " maps");
    }
  }
  Exponential e;
  e.maps = continuous_maps(x, y);
  if (e.maps.size() > static_cast<std::size_t>(kMaxMaskPoints)) {
    throw BoundExceeded("exponential has more than 64 points");
  }
  std::vector<std::string> labels;
  for (const auto& f : e.maps) {
    std::string l = "[f:";
    for (std::size_t p = 0; p < f.size(); ++p) l += (p ? "," : "") + y.label(f[p]);
    labels.push_back(l + "]");
  }
  // Pointwise convergence: subbasic opens {f : f(p) ∈ V}.
  std::vector<Mask> subbasis;
  for (int p = 0; p < x.size(); ++p) {
    for (Mask v : y.opens()) {
      Mask s = 0;
      for (std::size_t i = 0; i < e.maps.size(); ++i) {
        if (has(v, e.maps[i][static_cast<std::size_t>(p)])) s |= bit(static_cast<int>(i));
      }
      subbasis.push_back(s);
    }
  }
  e.space = d_topology(generate_topology(std::move(labels), subbasis));
  return e;
}

std::vector<int> postcompose(const Exponential& from, const Exponential& to,
                             const std::vector<int>& h) {
  std::vector<int> out;
  for (const auto& f : from.maps) {
    std::vector<int> g;
    for (int v : f) g.push_back(h.at(static_cast<std::size_t>(v)));
    const auto it = std::find(to.maps.begin(), to.maps.end(), g);
    if (it == to.maps.end()) throw NotMonotone("h o f is not continuous");
    out.push_back(static_cast<int>(it - to.maps.begin()));
  }
  return out;
}

CurryingReport check_currying(const FiniteSpace& z, const FiniteSpace& x, const FiniteSpace& y) {
  CurryingReport r;
  const auto uncurried = continuous_maps(product(z, x), y);
  const Exponential e = exponential(x, y);
  const auto curried = continuous_maps(z, e.space);
  r.uncurried = static_cast<long>(uncurried.size());
  r.curried = static_cast<long>(curried.size());
  std::set<std::vector<int>> images;
  bool ok = true;
  for (const auto& g : uncurried) {
    std::vector<int> c;
    for (int s = 0; s < z.size() && ok; ++s) {
      std::vector<int> slice(g.begin() + s * x.size(), g.begin() + (s + 1) * x.size());
      const auto it = std::find(e.maps.begin(), e.maps.end(), slice);
      if (it == e.maps.end()) {
        ok = false;
      } else {
        c.push_back(static_cast<int>(it - e.maps.begin()));
      }
    }
    if (!ok || !is_continuous(z, e.space, c)) {
      ok = false;
      break;
    }
    images.insert(c);
  }
  const std::set<std::vector<int>> all(curried.begin(), curried.end());
  r.bijective = ok && images.size() == uncurried.size() && images == all;
  return r;
}

CoreCompactReport check_core_compact(const FiniteSpace& x) {
  CoreCompactReport r;
  const FiniteLattice o = open_lattice(x);
  r.open_lattice_continuous = is_continuous_lattice(o);

  const FiniteSpace sigma = scott_topology(o.order());
  r.graph_open = product_open(sigma, x, [&](int u, int p) { return has(x.opens()[static_cast<std::size_t>(u)], p); });

  const Exponential e = exponential(x, sierpinski());
  r.evaluation_continuous =
      product_open(e.space, x, [&](int f, int p) {
        return e.maps[static_cast<std::size_t>(f)][static_cast<std::size_t>(p)] == 1;
      });

  std::ostringstream w;
  w << "O(X) continuous=" << r.open_lattice_continuous << " graph open=" << r.graph_open
    << " ev continuous=" << r.evaluation_continuous;
  r.currying = true;
  if (x.size() <= 3) {
    const FiniteSpace small[] = {point_space(), sierpinski()};
    for (const auto& z : small) {
      for (const auto& y : small) {
        const CurryingReport c = check_currying(z, x, y);
        ++r.currying_triples;
        if (!c.bijective) {
          r.currying = false;
          w << "; currying fails for |Z|=" << z.size() << " |Y|=" << y.size();
        }
      }
    }
    w << "; currying checked on " << r.currying_triples << " triples";
  } else {
    w << "; currying not sampled above 3 points";
  }
  r.witness = w.str();
  return r;
}

IdealCompletion ideal_completion(const FiniteSpace& x) {
  const FinitePoset p = specialization(x);
  IdealCompletion c;
  for (Mask a : upper_sets(p.dual())) {
    if (a == 0 || !is_directed(p, a)) continue;
    const auto s = p.supremum(a);
    if (s && converges(x, a, *s)) c.ideals.push_back(a);
  }
  std::sort(c.ideals.begin(), c.ideals.end(), [](Mask a, Mask b) {
    return cardinality(a) != cardinality(b) ? cardinality(a) < cardinality(b) : a < b;
  });
  const int n = static_cast<int>(c.ideals.size());
  if (n > 20) throw BoundExceeded("more than 20 topological ideals");
  for (int q = 0; q < x.size(); ++q) {
    const int k = index_of_mask(c.ideals, p.down(q));
    if (k < 0) throw NotDirected("principal ideal missing from I_T(X)");
    c.principal.push_back(k);
  }
  std::vector<std::string> labels;
  for (Mask a : c.ideals) {
    std::string l = set_label(x.labels(), a);
    labels.push_back("I" + l);
  }
  std::vector<Mask> opens;
  for (Mask u = 0; u <= full_mask(n); ++u) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      bool witnessed = false;
      for (int q = 0; q < x.size() && !witnessed; ++q) {
        const int k = c.principal[static_cast<std::size_t>(q)];
        witnessed = has(u, k) && subset_of(c.ideals[static_cast<std::size_t>(k)],
                                           c.ideals[static_cast<std::size_t>(a)]);
      }
      ok = has(u, a) == witnessed;
    }
    if (ok) opens.push_back(u);
  }
  c.space = FiniteSpace(std::move(labels), std::move(opens));
  return c;
}

MonotoneMap sup_map(const FiniteSpace& x, const IdealCompletion& c) {
  const FinitePoset p = specialization(x);
  std::vector<int> table;
  for (Mask a : c.ideals) table.push_back(*p.supremum(a));
  return MonotoneMap(specialization(c.space), p, std::move(table));
}

bool GaloisConnection::holds() const {
  const FinitePoset& a = lower.source();
  const FinitePoset& b = lower.target();
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < b.size(); ++j) {
      if (b.leq(lower(i), j) != a.leq(i, upper(j))) return false;
    }
  }
  return true;
}

GaloisConnection GaloisConnection::make(MonotoneMap lower, MonotoneMap upper) {
  if (!(lower.source() == upper.target()) || !(lower.target() == upper.source())) {
    throw NotAGaloisConnection("maps do not run between the same two posets");
  }
  GaloisConnection g{std::move(lower), std::move(upper)};
  if (!g.holds()) throw NotAGaloisConnection("f(x) <= y and x <= g(y) disagree");
  return g;
}

GaloisConnection lower_adjoint(const FiniteSpace& x, const IdealCompletion& c) {
  std::vector<int> table;
  for (int q = 0; q < x.size(); ++q) {
    const int k = index_of_mask(c.ideals, approximants(x, q, Relation::d));
    if (k < 0) throw NotAGaloisConnection("waybelow set of " + x.label(q) + " is not an ideal");
    table.push_back(k);
  }
  MonotoneMap down(specialization(x), specialization(c.space), std::move(table));
  return GaloisConnection::make(std::move(down), sup_map(x, c));
}

RetractReport retract_transfer(const FiniteSpace& x, const FiniteSpace& y,
                               const std::vector<int>& r, const std::vector<int>& i) {
  if (static_cast<int>(i.size()) != x.size() || static_cast<int>(r.size()) != y.size()) {
    throw NotARetraction("map tables have the wrong size");
  }
  for (int v : i) {
    if (v < 0 || v >= y.size()) throw NotARetraction("i leaves Y");
  }
  for (int v : r) {
    if (v < 0 || v >= x.size()) throw NotARetraction("r leaves X");
  }
  if (!is_continuous(x, y, i) || !is_continuous(y, x, r)) {
    throw NotARetraction("i or r is not continuous");
  }
  for (int p = 0; p < x.size(); ++p) {
    if (r[static_cast<std::size_t>(i[static_cast<std::size_t>(p)])] != p) {
      throw NotARetraction("r o i differs from the identity at " + x.label(p));
    }
  }
  RetractReport rep;
  rep.x_directed = is_directed_space(x);
  rep.y_directed = is_directed_space(y);
  const FiniteSpace dy = d_topology(y);
  const FiniteSpace dx = d_topology(x);
  bool ok = true;
  for (Mask u : dx.opens()) {
    const Mask back = preimage(r, u);
    ++rep.checks;
    if (!dy.is_open(back) || (rep.y_directed && !y.is_open(back)) || preimage(i, back) != u) {
      ok = false;
      rep.witness = "fails for U = " + set_label(x.labels(), u);
    }
  }
  rep.passed = ok && (!rep.y_directed || rep.x_directed);
  if (rep.passed) {
    rep.witness = std::to_string(rep.checks) + " directed-open sets U with r^-1(U) open and U = i^-1 r^-1(U)";
  }
  return rep;
}

SnReport s_n_map(const FiniteSpace& x, int n) {
  if (n < 1 || n > 3) throw BoundExceeded("s_n needs 1 <= n <= 3");
  SnReport r;
  r.n = n;
  r.domain = power(x, n);
  r.closed = closed_lattice(x);
  const auto closed = x.closed_sets();
  for (int t = 0; t < r.domain.size(); ++t) {
    Mask pts = 0;
    int rest = t;
    for (int k = 0; k < n; ++k) {
      pts |= bit(rest % x.size());
      rest /= x.size();
    }
    r.table.push_back(index_of_mask(closed, x.closure(pts)));
  }
  const FiniteSpace sigma = scott_topology(r.closed.order());
  const FiniteSpace upsilon = upper_topology(r.closed.order());
  r.continuous = is_continuous(r.domain, sigma, r.table);
  r.sigma_equals_upsilon = sigma.opens() == upsilon.opens();
  r.witness = std::to_string(sigma.opens().size()) + " Scott opens, " +
              std::to_string(upsilon.opens().size()) + " upper opens on C(X)";
  return r;
}

EtaDiamondReport eta_diamond(const FiniteSpace& x) {
  const auto closed = x.closed_sets();
  if (closed.size() > static_cast<std::size_t>(kMaxMaskPoints)) {
    throw BoundExceeded("C(X) has more than 64 members");
  }
  EtaDiamondReport r;
  for (int p = 0; p < x.size(); ++p) r.eta.push_back(index_of_mask(closed, x.closure(bit(p))));
  auto diamond_of = [&](Mask u) {
    Mask out = 0;
    for (std::size_t k = 0; k < closed.size(); ++k) {
      if ((closed[k] & u) != 0) out |= bit(static_cast<int>(k));
    }
    return out;
  };
  auto eta_inv = [&](Mask family) {
    Mask out = 0;
    for (int p = 0; p < x.size(); ++p) {
      if (has(family, r.eta[static_cast<std::size_t>(p)])) out |= bit(p);
    }
    return out;
  };
  for (Mask u : x.opens()) r.diamond.push_back(diamond_of(u));

  const FiniteSpace sigma = scott_topology(closed_lattice(x).order());
  std::ostringstream w;
  r.inverse_after_diamond = true;
  for (std::size_t k = 0; k < x.opens().size(); ++k) {
    if (eta_inv(r.diamond[k]) != x.opens()[k]) {
      r.inverse_after_diamond = false;
      w << "eta^-1(<>U) != U for U = " << set_label(x.labels(), x.opens()[k]) << "; ";
    }
  }
  r.diamond_open = std::all_of(r.diamond.begin(), r.diamond.end(),
                               [&](Mask d) { return sigma.is_open(d); });
  r.diamond_after_inverse = true;
  for (Mask fam : sigma.opens()) {
    const Mask v = eta_inv(fam);
    if (!x.is_open(v) || !subset_of(diamond_of(v), fam)) {
      r.diamond_after_inverse = false;
      w << "<>(eta^-1(F)) not below F; ";
    }
  }
  r.preserves_sups = diamond_of(0) == 0 && eta_inv(0) == 0;
  for (Mask u : x.opens()) {
    for (Mask v : x.opens()) {
      if (diamond_of(u | v) != (diamond_of(u) | diamond_of(v))) r.preserves_sups = false;
    }
  }
  for (Mask f : sigma.opens()) {
    for (Mask g : sigma.opens()) {
      if (eta_inv(f | g) != (eta_inv(f) | eta_inv(g))) r.preserves_sups = false;
    }
  }
  if (r.passed()) {
    w << "laws hold on " << x.opens().size() << " opens and " << sigma.opens().size()
      << " Scott opens of C(X)";
  }
  r.witness = w.str();
  return r;
}

bool finite_lattice_is_scott_space(const FiniteLattice& l) {
  return scott_topology(l.order()).opens() == alexandroff(l.order()).opens();
}

}  // namespace dtopw
