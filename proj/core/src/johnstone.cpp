#include "dtopw/johnstone.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "dtopw/errors.hpp"

namespace dtopw {

namespace {

constexpr long kUnbounded = -1;  // height of a full column in helper code

long height_or_unbounded(const ClosedSetJ& a, long k) {
  auto h = a.height(k);
  return h ? *h : kUnbounded;
}

long min_height(long x, long y) {
  if (x == kUnbounded) return y;
  if (y == kUnbounded) return x;
  return std::min(x, y);
}

void require_point(const Point& p) {
  const bool ok = (p.kind == Point::Kind::Pair && p.a >= 1 && p.b >= 1) ||
                  (p.kind == Point::Kind::Omega && p.a >= 1);
  if (!ok) throw NotInFragment("not a point of J");
}

std::string point_label(const Point& p) {
  if (p.kind == Point::Kind::Omega) return "(" + std::to_string(p.a) + ",w)";
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

}  // namespace

ClosedSetJ ClosedSetJ::whole() {
  ClosedSetJ a;
  a.whole_ = true;
  return a;
}

ClosedSetJ ClosedSetJ::empty() { return ClosedSetJ{}; }

ClosedSetJ ClosedSetJ::make(std::set<long> full_columns, std::map<long, long> exceptions,
                            long tail) {
  ClosedSetJ a;
  for (long m : full_columns) {
    if (m < 1) throw NotInFragment("column indices start at 1");
  }
  a.s_ = std::move(full_columns);
  const long floor = a.max_full();
  if (tail < floor) {
    throw NotInFragment("tail height " + std::to_string(tail) + " is below full column " +
                        std::to_string(floor));
  }
  a.tail_ = tail;
  for (const auto& [k, h] : exceptions) {
    if (k < 1) throw NotInFragment("column indices start at 1");
    if (a.s_.count(k) != 0) continue;
    if (h < floor) {
      throw NotInFragment("column " + std::to_string(k) + " height " + std::to_string(h) +
                          " is below full column " + std::to_string(floor));
    }
    if (h != tail) a.h_.emplace(k, h);
  }
  return a;
}

std::optional<long> ClosedSetJ::height(long k) const {
  if (whole_ || s_.count(k) != 0) return std::nullopt;
  auto it = h_.find(k);
  return it == h_.end() ? tail_ : it->second;
}

bool ClosedSetJ::contains(const Point& p) const {
  require_point(p);
  if (whole_) return true;
  if (s_.count(p.a) != 0) return true;
  if (p.kind == Point::Kind::Omega) return false;
  return p.b <= *height(p.a);
}

bool ClosedSetJ::subset_of(const ClosedSetJ& other) const {
  if (other.whole_) return true;
  if (whole_) return false;
  for (long m : s_) {
    if (other.s_.count(m) == 0) return false;
  }
  if (tail_ > other.tail_) {
    // Generic columns outside every list would break the inclusion.
    return false;
  }
  std::set<long> keys;
  for (const auto& [k, h] : h_) keys.insert(k);
  for (const auto& [k, h] : other.h_) keys.insert(k);
  for (long m : other.s_) keys.erase(m);
  for (long k : keys) {
    if (*height(k) > *other.height(k)) return false;
  }
  return true;
}

long ClosedSetJ::parameter_size() const {
  long out = tail_;
  for (long m : s_) out = std::max(out, m);
  for (const auto& [k, h] : h_) out = std::max({out, k, h});
  return out;
}

std::string ClosedSetJ::to_string() const {
  if (whole_) return "J";
  std::ostringstream os;
  os << "[S={";
  bool first = true;
  for (long m : s_) {
    os << (first ? "" : ",") << m;
    first = false;
  }
  os << "} h=" << tail_;
  for (const auto& [k, h] : h_) os << ' ' << k << ':' << h;
  os << ']';
  return os.str();
}

ClosedSetJ j_closure(const JGenerators& g) {
  std::set<long> full = g.full_columns;
  for (const auto& p : g.points) {
    require_point(p);
    if (p.kind == Point::Kind::Omega) full.insert(p.a);
  }
  for (long m : full) {
    if (m < 1) throw NotInFragment("column indices start at 1");
  }
  if (g.band < 0) throw NotInFragment("negative band height");
  const long floor = full.empty() ? 0 : *full.rbegin();
  const long tail = std::max(g.band, floor);
  std::map<long, long> exceptions;
  for (const auto& p : g.points) {
    if (p.kind != Point::Kind::Pair || full.count(p.a) != 0) continue;
    if (p.b > tail) {
      auto& h = exceptions[p.a];
      h = std::max(h, p.b);
    }
  }
  return ClosedSetJ::make(std::move(full), std::move(exceptions), tail);
}

ClosedSetJ j_closure(const Point& p) { return j_closure(JGenerators{{p}, {}, 0}); }

ClosedSetJ j_band(long m) { return ClosedSetJ::make({}, {}, m); }

ClosedSetJ j_join(const ClosedSetJ& a, const ClosedSetJ& b) {
  if (a.is_whole() || b.is_whole()) return ClosedSetJ::whole();
  std::set<long> s = a.full_columns();
  s.insert(b.full_columns().begin(), b.full_columns().end());
  const long floor = s.empty() ? 0 : *s.rbegin();
  std::map<long, long> exceptions;
  for (const auto* side : {&a, &b}) {
    for (const auto& [k, h] : side->exceptions()) {
      if (s.count(k) != 0) continue;
      exceptions[k] = std::max({height_or_unbounded(a, k), height_or_unbounded(b, k), floor});
    }
  }
  return ClosedSetJ::make(std::move(s), std::move(exceptions),
                          std::max({a.tail(), b.tail(), floor}));
}

ClosedSetJ j_meet(const ClosedSetJ& a, const ClosedSetJ& b) {
  if (a.is_whole()) return b;
  if (b.is_whole()) return a;
  std::set<long> s;
  std::set<long> keys;
  for (long m : a.full_columns()) {
    if (b.full_columns().count(m) != 0) {
      s.insert(m);
    } else {
      keys.insert(m);
    }
  }
  for (long m : b.full_columns()) {
    if (s.count(m) == 0) keys.insert(m);
  }
  for (const auto& [k, h] : a.exceptions()) keys.insert(k);
  for (const auto& [k, h] : b.exceptions()) keys.insert(k);
  std::map<long, long> exceptions;
  for (long k : keys) {
    if (s.count(k) != 0) continue;
    exceptions[k] = min_height(height_or_unbounded(a, k), height_or_unbounded(b, k));
  }
  return ClosedSetJ::make(std::move(s), std::move(exceptions), std::min(a.tail(), b.tail()));
}

std::optional<std::vector<Point>> j_maximal_points(const ClosedSetJ& a) {
  if (a.is_whole()) return std::nullopt;
  const long floor = a.max_full();
  // Generic columns reach the tail; above max S each of them carries its
  // own maximal point, so there are infinitely many.
  if (a.tail() > floor) return std::nullopt;
  std::vector<Point> out;
  for (long m : a.full_columns()) out.push_back(omega_point(m));
  for (const auto& [k, h] : a.exceptions()) {
    if (h > floor) out.push_back(pair_point(k, h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Point> j_generator(const ClosedSetJ& a) {
  auto maxima = j_maximal_points(a);
  if (!maxima || maxima->size() != 1) return std::nullopt;
  return maxima->front();
}

bool j_irreducible(const ClosedSetJ& a) {
  if (a.is_whole()) return true;
  return j_generator(a).has_value();
}

std::optional<std::pair<ClosedSetJ, ClosedSetJ>> j_decompose(const ClosedSetJ& a) {
  if (a.is_whole() || a.is_empty()) return std::nullopt;
  auto maxima = j_maximal_points(a);
  if (maxima) {
    if (maxima->size() < 2) return std::nullopt;
    JGenerators rest;
    rest.points.assign(maxima->begin() + 1, maxima->end());
    return std::make_pair(j_closure(maxima->front()), j_closure(rest));
  }
  // Infinitely many maxima: split off one generic column.
  const long fresh = a.parameter_size() + 1;
  auto lowered = a.exceptions();
  lowered[fresh] = a.max_full();
  return std::make_pair(j_closure(pair_point(fresh, a.tail())),
                        ClosedSetJ::make(a.full_columns(), std::move(lowered), a.tail()));
}

namespace {

template <typename F>
void for_each_subset(const std::vector<long>& pool, int max_size, F&& f) {
  std::vector<long> current;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    f(current);
    if (static_cast<int>(current.size()) == max_size) return;
    for (std::size_t j = i; j < pool.size(); ++j) {
      current.push_back(pool[j]);
      rec(j + 1);
      current.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<ClosedSetJ> enumerate_fragment(long bound, int max_full, int max_exceptions) {
  std::vector<long> columns;
  for (long k = 1; k <= bound; ++k) columns.push_back(k);
  std::vector<ClosedSetJ> out;
  for_each_subset(columns, max_full, [&](const std::vector<long>& s) {
    const long floor = s.empty() ? 0 : s.back();
    std::vector<long> free;
    for (long k : columns) {
      if (std::find(s.begin(), s.end(), k) == s.end()) free.push_back(k);
    }
    for (long tail = floor; tail <= bound; ++tail) {
      for_each_subset(free, max_exceptions, [&](const std::vector<long>& keys) {
        // Every assignment of heights in [floor, bound] \ {tail} to the keys.
        std::vector<long> values(keys.size(), floor);
        auto skip_tail = [&](long& v) {
          if (v == tail) ++v;
        };
        for (auto& v : values) skip_tail(v);
        while (true) {
          bool valid = true;
          for (long v : values) valid = valid && v <= bound;
          if (!valid) break;
          std::map<long, long> exc;
          for (std::size_t i = 0; i < keys.size(); ++i) exc[keys[i]] = values[i];
          out.push_back(ClosedSetJ::make(std::set<long>(s.begin(), s.end()), exc, tail));
          std::size_t i = 0;
          for (; i < values.size(); ++i) {
            ++values[i];
            skip_tail(values[i]);
            if (values[i] <= bound) break;
            values[i] = floor;
            skip_tail(values[i]);
          }
          if (i == values.size()) break;
        }
      });
    }
  });
  return out;
}

std::string JCheck::line() const {
  std::ostringstream os;
  os << "CLAIM " << claim << " -> " << (actual ? "true" : "false") << " (expected "
     << (expected ? "true" : "false") << "; witness: " << witness << ')';
  return os.str();
}

std::vector<JCheck> j_spec_topology_check(int depth) {
  std::vector<JCheck> out;

  {
    // Every directed subset of J is a principal family or a column chain
    // (possibly with its top); its supremum in Spec L is its closure.
    JCheck c{"johnstone.top-scott-open", true, true, ""};
    int families = 0;
    auto check = [&](const ClosedSetJ& sup, const std::string& what) {
      ++families;
      if (c.actual && (sup.is_whole() || !j_irreducible(sup))) {
        c.actual = false;
        c.witness = what + " has supremum top";
      }
    };
    for (long m = 1; m <= depth; ++m) {
      for (long n = 1; n <= depth; ++n) {
        check(j_closure(pair_point(m, n)), "principal " + point_label(pair_point(m, n)));
      }
      check(j_closure(omega_point(m)), "principal " + point_label(omega_point(m)));
      check(j_closure(JGenerators{{}, {m}, 0}), "column chain " + std::to_string(m));
    }
    if (c.actual) {
      c.witness = std::to_string(families) +
                  " directed families, each with a proper irreducible closure";
    }
    out.push_back(c);
  }

  {
    // Hull-kernel opens are O_U = {P : P meets U} for Scott-open U; {⊤} is
    // one of them only if some nonempty U avoids every principal ↓x.
    JCheck c{"johnstone.top-hull-kernel-open", false, false, ""};
    int opens = 0;
    for (const auto& a : enumerate_fragment(depth, 2, 1)) {
      ++opens;
      const Point outside = pair_point(a.parameter_size() + 1, a.tail() + 1);
      if (a.contains(outside)) {
        c.actual = true;
        c.witness = "no point outside " + a.to_string();
        break;
      }
    }
    if (!c.actual) {
      c.witness = std::to_string(opens) +
                  " complements of closed sets each contain a point x with down x in O_U";
    }
    out.push_back(c);
  }

  {
    // ↑(1,1) = column 1 plus every (k,ω).
    auto in_up11 = [](const Point& p) {
      return p.kind == Point::Kind::Omega || (p.kind == Point::Kind::Pair && p.a == 1);
    };
    bool scott_open = true;
    std::string scott_witness = "every column chain with top in up(1,1) meets it";
    for (long m = 1; m <= depth && scott_open; ++m) {
      if (in_up11(omega_point(m)) && !in_up11(pair_point(m, 1))) {
        scott_open = false;
        scott_witness = "column " + std::to_string(m) + " chain has sup (" + std::to_string(m) +
                        ",w) in up(1,1) but misses it";
      }
    }
    // Hull-kernel side: some closed A with J \ A = up(1,1) on the truncation.
    bool hull_kernel_open = false;
    for (const auto& a : enumerate_fragment(depth, 2, 1)) {
      // One level past the presentation separates eventual behaviour.
      const long reach = std::max<long>(depth, a.parameter_size() + 1);
      bool match = true;
      for (long m = 1; m <= reach && match; ++m) {
        match = a.contains(omega_point(m)) != in_up11(omega_point(m));
        for (long n = 1; n <= reach && match; ++n) {
          match = a.contains(pair_point(m, n)) != in_up11(pair_point(m, n));
        }
      }
      if (match) {
        hull_kernel_open = true;
        break;
      }
    }
    JCheck c{"johnstone.up11-equivalence", true, scott_open == hull_kernel_open,
             std::string("scott-open=") + (scott_open ? "true" : "false") +
                 " hull-kernel-open=" + (hull_kernel_open ? "true" : "false") + "; " +
                 scott_witness};
    out.push_back(c);
  }
  return out;
}

std::string SeparationReport::line() const {
  std::ostringstream os;
  os << "SEP " << target << " -> ";
  if (trivial) {
    os << "trivial";
  } else {
    os << (verified ? "verified" : "failed") << " (" << family.size() << " sets, " << tests
       << " tests, depth " << depth << ')';
  }
  os << "; UNVERIFIED beyond depth " << depth;
  if (!note.empty()) os << "; " << note;
  return os.str();
}

SeparationReport j_sigma_equals_upsilon_witness(const ClosedSetJ& a, int depth) {
  SeparationReport r;
  r.target = a.to_string();
  r.depth = depth;
  if (a.is_whole()) {
    r.trivial = true;
    r.verified = true;
    r.note = "the collection is all of Gamma(J)";
    return r;
  }
  std::vector<ClosedSetJ> tests = enumerate_fragment(depth, 2, 1);
  tests.push_back(ClosedSetJ::whole());
  std::vector<Point> pool;
  for (long m = 1; m <= depth + 1; ++m) {
    for (long n = 1; n <= depth + 1; ++n) pool.push_back(pair_point(m, n));
    pool.push_back(omega_point(m));
  }
  r.verified = true;
  for (const auto& c : tests) {
    ++r.tests;
    if (c.subset_of(a)) continue;
    bool separated = false;
    for (const auto& g : r.family) {
      if (!c.subset_of(g)) {
        separated = true;
        break;
      }
    }
    for (std::size_t i = 0; i < pool.size() && !separated; ++i) {
      if (a.contains(pool[i])) continue;
      ClosedSetJ g = j_join(a, j_closure(pool[i]));
      if (!c.subset_of(g)) {
        r.family.push_back(g);
        separated = true;
      }
    }
    if (!separated) {
      r.verified = false;
      r.note = "no separating set for " + c.to_string();
      return r;
    }
  }
  // The intersection of the down-sets of the family must be exactly the
  // collection below A on every test.
  for (const auto& c : tests) {
    bool in_all = true;
    for (const auto& g : r.family) in_all = in_all && c.subset_of(g);
    if (in_all != c.subset_of(a)) {
      r.verified = false;
      r.note = "intersection disagrees at " + c.to_string();
      return r;
    }
  }
  return r;
}

JCheck j_band_chain_unbounded(long bound) {
  JCheck c{"johnstone.band-chain-unbounded", true, true, ""};
  long checked = 0;
  for (const auto& a : enumerate_fragment(bound, 2, 2)) {
    ++checked;
    const long m = a.tail() + 1;
    if (j_band(m).subset_of(a)) {
      c.actual = false;
      c.witness = a.to_string() + " contains B_" + std::to_string(m);
      return c;
    }
  }
  for (long m = 1; m <= bound; ++m) {
    if (!j_band(m).subset_of(j_band(m + 1))) {
      c.actual = false;
      c.witness = "B_" + std::to_string(m) + " not below B_" + std::to_string(m + 1);
      return c;
    }
  }
  c.witness = std::to_string(checked) + " proper fragment sets, each misses B_(tail+1)";
  return c;
}

std::vector<ClosedSetJ> j_sample_elements() {
  auto down = [](const Point& p) { return j_closure(p); };
  return {
      down(omega_point(1)),
      down(omega_point(2)),
      down(omega_point(3)),
      j_band(1),
      j_band(2),
      j_band(3),
      down(pair_point(1, 1)),
      down(pair_point(2, 5)),
      down(pair_point(4, 2)),
      j_join(down(omega_point(1)), down(omega_point(2))),
      j_meet(down(omega_point(2)), down(omega_point(3))),
      ClosedSetJ::make({1, 3}, {}, 3),
      ClosedSetJ::make({2}, {{1, 6}}, 4),
      j_join(j_band(2), down(pair_point(3, 6))),
      j_closure(JGenerators{{pair_point(1, 3), pair_point(2, 2)}, {}, 0}),
      down(omega_point(4)),
      ClosedSetJ::make({}, {{2, 5}, {3, 0}}, 1),
      ClosedSetJ::empty(),
      j_band(5),
      j_join(down(omega_point(5)), j_band(6)),
  };
}

}  // namespace dtopw
