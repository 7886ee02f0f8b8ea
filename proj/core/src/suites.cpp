#include "dtopw/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "dtopw/approximation.hpp"
#include "dtopw/constructions.hpp"
#include "dtopw/errors.hpp"
#include "dtopw/gallery.hpp"
#include "dtopw/johnstone.hpp"
#include "dtopw/lattice_analysis.hpp"

namespace dtopw {

namespace {

struct Outcome {
  long checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

struct Instance {
  std::string description;
  int size = 0;
  std::function<Outcome()> run;
};

std::vector<Outcome> run_pool(const std::vector<Instance>& instances, int jobs) {
  std::vector<Outcome> out(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      try {
        out[i] = instances[i].run();
      } catch (const std::exception& e) {
        out[i].checks += 1;
        out[i].failures.push_back(std::string("exception: ") + e.what());
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(instances.size())));
  std::vector<std::thread> threads;
  for (int k = 1; k < n; ++k) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return out;
}

std::string describe(const FinitePoset& p) {
  std::ostringstream os;
  os << "n=" << p.size() << " {";
  bool first = true;
  for (const auto& [a, b] : p.covers()) {
    os << (first ? "" : ",") << p.label(a) << '<' << p.label(b);
    first = false;
  }
  os << '}';
  return os.str();
}

std::vector<FinitePoset> posets_up_to(int n) {
  std::vector<FinitePoset> out;
  for (int k = 1; k <= n; ++k) {
    auto ps = enumerate_posets(k);
    out.insert(out.end(), std::make_move_iterator(ps.begin()), std::make_move_iterator(ps.end()));
  }
  return out;
}

// One instance per Alexandroff space of a labeled poset on ≤ n points.
std::vector<Instance> per_space(int n, const std::function<Outcome(const FiniteSpace&, const FinitePoset&)>& check) {
  std::vector<Instance> out;
  for (auto& p : posets_up_to(n)) {
    const std::string d = "alexandroff " + describe(p);
    const int size = p.size();
    out.push_back({d, size, [p = std::move(p), check] { return check(alexandroff(p), p); }});
  }
  return out;
}

std::vector<Instance> per_pair(int n, const std::function<Outcome(const FiniteSpace&, const FiniteSpace&)>& check) {
  const auto ps = posets_up_to(n);
  std::vector<Instance> out;
  for (const auto& p : ps) {
    for (const auto& q : ps) {
      out.push_back({"alexandroff " + describe(p) + " x alexandroff " + describe(q),
                     p.size() * q.size(), [p, q, check] {
                       return check(alexandroff(p), alexandroff(q));
                     }});
    }
  }
  return out;
}

Outcome thm_2_3(const FiniteSpace& x, const FinitePoset&) {
  Outcome o;
  const FiniteSpace d = d_topology(x);
  const FinitePoset px = specialization(x);
  for (Mask u : d.opens()) o.expect(px.is_upper(u), "directed-open set is not an upper set");
  for (Mask u : x.opens()) o.expect(d.is_open(u), "open set is not directed-open");
  o.expect(specialization(d) == px, "specialization order changed");
  for (Mask s : directed_subsets(px)) {
    for (int p = 0; p < x.size(); ++p) {
      o.expect(converges(x, s, p) == converges(d, s, p), "convergence changed");
    }
  }
  o.expect(d_topology(d) == d, "d_topology is not idempotent");
  return o;
}

Outcome finite_degeneracy(const FiniteSpace& x, const FinitePoset&) {
  Outcome o;
  const FinitePoset px = specialization(x);
  o.expect(alexandroff(px) == x, "space differs from its Alexandroff reflection");
  for (Mask s : directed_subsets(px)) {
    const auto m = px.maximum(s);
    o.expect(m.has_value(), "finite directed set without maximum");
    if (!m) continue;
    for (int p = 0; p < x.size(); ++p) {
      o.expect(converges(x, s, p) == px.leq(p, *m), "convergence differs from x <= max D");
    }
  }
  for (Mask a = 0; a <= x.carrier(); ++a) {
    o.expect(x.interior(a) == (x.carrier() & ~x.closure(x.carrier() & ~a)),
             "interior and closure are not dual");
  }
  return o;
}

Outcome thm_3_12(const FiniteSpace& x, const FinitePoset&) {
  Outcome o;
  const bool c = is_c_space(x);
  const bool dc = is_d_continuous(x);
  const bool nc = is_n_continuous(x);
  const bool cd = is_completely_distributive(open_lattice(x));
  o.expect(c == dc && dc == nc && nc == cd, "continuity predicates disagree");
  o.expect(c, "finite space is not continuous");
  for (int a = 0; a < x.size(); ++a) {
    for (int b = 0; b < x.size(); ++b) {
      if (n_approx(x, a, b)) o.expect(d_approx(x, a, b), "n-approximation without d-approximation");
    }
    const FinitePoset px = specialization(x);
    o.expect(px.is_lower(approximants(x, a, Relation::d)), "d-approximants not a lower set");
    o.expect(px.is_lower(approximants(x, a, Relation::n)), "n-approximants not a lower set");
  }
  return o;
}

FiniteLattice m3() {
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}};
  return FiniteLattice::from_poset(FinitePoset::from_relations({"0", "a", "b", "c", "1"}, pairs));
}

Outcome m3_control() {
  Outcome o;
  const FiniteLattice l = m3();
  o.expect(!is_distributive(l), "M3 reported distributive");
  o.expect(!is_completely_distributive(l), "M3 accepted as a completely distributive open lattice");
  return o;
}

Outcome thm_3_17(const FiniteSpace& x, const FinitePoset&) {
  Outcome o;
  const FiniteLattice ol = open_lattice(x);
  const bool da = is_d_algebraic(x);
  const bool na = is_n_algebraic(x);
  const bool b = is_b_space(x);
  const bool lat = is_completely_distributive(ol) && is_algebraic_lattice(ol);
  o.expect(da == na && na == b && b == lat, "algebraicity predicates disagree");
  o.expect(b, "finite space is not algebraic");
  return o;
}

Outcome thm_4_11(const FiniteSpace& x, const FinitePoset&) {
  Outcome o;
  const FiniteLattice ol = open_lattice(x);
  const bool q1 = is_d_quasicontinuous(x);
  const bool q2 = is_n_quasicontinuous(x);
  const bool q3 = is_locally_hypercompact(x);
  const bool q4 = is_hypercontinuous(ol);
  o.expect(q1 == q2 && q2 == q3 && q3 == q4, "quasicontinuity predicates disagree");
  const bool a1 = is_d_quasialgebraic(x);
  const bool a2 = is_n_quasialgebraic(x);
  const bool a3 = is_hypercompactly_based(x);
  const bool a4 = is_hyperalgebraic(ol);
  o.expect(a1 == a2 && a2 == a3 && a3 == a4, "quasialgebraicity predicates disagree");
  if (is_directed_space(x)) o.expect(a3 == is_algebraic_lattice(ol), "quasialgebraic but O(X) not algebraic");
  const CompactOpenReport r = compact_open_is_hypercompact(x);
  o.expect(r.holds, "compact open not hypercompact: " + r.witness);
  return o;
}

Outcome thm_4_16(const FiniteSpace& x, const FinitePoset&) {
  Outcome o;
  const FiniteLattice ol = open_lattice(x);
  const FiniteLattice cl = closed_lattice(x);
  const bool cont = is_c_space(x);
  o.expect(is_continuous_lattice(cl) == cont, "C(X) continuity disagrees with continuity of X");
  o.expect(is_completely_distributive(cl) == cont, "C(X) complete distributivity disagrees");
  o.expect(is_algebraic_lattice(cl) == is_b_space(x), "C(X) algebraicity disagrees");
  o.expect(is_completely_distributive(ol) == is_completely_distributive(ol.dual()),
           "complete distributivity not self-dual");
  for (int u = 0; u < ol.size(); ++u) {
    for (int v = 0; v < ol.size(); ++v) {
      const Mask mu = x.opens()[static_cast<std::size_t>(u)];
      const Mask mv = x.opens()[static_cast<std::size_t>(v)];
      o.expect(hyperbelow_open(x, mu, mv) == hyperbelow(ol, u, v), "hyperbelow disagrees on opens");
    }
  }
  return o;
}

Outcome lem_2_8(const FiniteSpace& x, const FiniteSpace& y) {
  Outcome o;
  o.expect(cat_product_by_slices(x, y) == cat_product(x, y), "slice criterion differs from d_topology");
  return o;
}

Outcome lem_5_2(const FiniteSpace& x, const FiniteSpace& y) {
  Outcome o;
  const FiniteSpace p = product(x, y);
  o.expect(tensor(x, y) == p, "tensor differs from product");
  o.expect(cat_product(x, y) == p, "categorical product differs from product");
  return o;
}

Outcome thm_5_8(const FiniteSpace& x, const FinitePoset&) {
  Outcome o;
  const CoreCompactReport r = check_core_compact(x);
  o.expect(r.passed(), "core compactness formulations: " + r.witness);
  const Exponential e = exponential(x, sierpinski());
  const FiniteSpace so = scott_topology(open_lattice(x).order());
  o.expect(find_homeomorphism(e.space, so).has_value(), "[X -> S] not homeomorphic to Sigma O(X)");
  o.expect(find_homeomorphism(exponential(point_space(), x).space, x).has_value(),
           "[1 -> X] not homeomorphic to X");
  o.expect(tensor(x, sierpinski()) == product(x, sierpinski()), "X tensor S differs from X x S");
  // Functoriality of [X -> -] on maps S -> S.
  for (const auto& h : continuous_maps(sierpinski(), sierpinski())) {
    const auto t = postcompose(e, e, h);
    if (h == std::vector<int>{0, 1}) {
      std::vector<int> id(e.maps.size());
      for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
      o.expect(t == id, "identity not preserved");
    }
    for (const auto& k : continuous_maps(sierpinski(), sierpinski())) {
      std::vector<int> kh{k[static_cast<std::size_t>(h[0])], k[static_cast<std::size_t>(h[1])]};
      const auto tk = postcompose(e, e, k);
      std::vector<int> composed;
      for (int i : t) composed.push_back(tk[static_cast<std::size_t>(i)]);
      o.expect(composed == postcompose(e, e, kh), "composition not preserved");
    }
  }
  if (x.size() <= 2) {
    for (const auto& zp : posets_up_to(2)) {
      for (const auto& yp : posets_up_to(2)) {
        const CurryingReport c = check_currying(alexandroff(zp), x, alexandroff(yp));
        o.expect(c.bijective && c.curried == c.uncurried, "currying not bijective");
      }
    }
  }
  return o;
}

Outcome prop_6_1(const FiniteSpace& x, const FinitePoset&) {
  Outcome o;
  for (int n = 1; n <= 2; ++n) {
    const SnReport r = s_n_map(x, n);
    o.expect(r.continuous == r.sigma_equals_upsilon, "s_n continuity disagrees with sigma = upsilon");
    o.expect(r.continuous, "s_" + std::to_string(n) + " not continuous");
  }
  return o;
}

Outcome eta_diamond_check(const FiniteSpace& x, const FinitePoset&) {
  Outcome o;
  const EtaDiamondReport r = eta_diamond(x);
  o.expect(r.inverse_after_diamond, "eta^-1 o <> is not the identity");
  o.expect(r.diamond_after_inverse, "<> o eta^-1 is not below the identity");
  o.expect(r.diamond_open, "<>(U) not Scott open");
  o.expect(r.preserves_sups, "sups not preserved");
  return o;
}

Outcome ideal_check(const FiniteSpace& x, const FinitePoset& p) {
  Outcome o;
  const IdealCompletion c = ideal_completion(x);
  o.expect(is_b_space(c.space), "I_T(X) is not a b-space");
  Mask principal = 0;
  for (int k : c.principal) principal |= bit(k);
  o.expect(compact_points(c.space, Relation::d) == principal, "K(I_T(X)) differs from principal ideals");
  o.expect(compact_points(c.space, Relation::n) == principal, "K_n(I_T(X)) differs from principal ideals");
  const FinitePoset spec = specialization(c.space);
  for (std::size_t a = 0; a < c.ideals.size(); ++a) {
    for (std::size_t b = 0; b < c.ideals.size(); ++b) {
      o.expect(spec.leq(static_cast<int>(a), static_cast<int>(b)) == subset_of(c.ideals[a], c.ideals[b]),
               "specialization is not inclusion");
    }
  }
  const MonotoneMap sup = sup_map(x, c);
  o.expect(is_continuous(c.space, x, sup.table()), "sup map not continuous");
  const GaloisConnection g = lower_adjoint(x, c);
  o.expect(g.holds(), "(waybelow, sup) is not a Galois connection");
  o.expect(is_continuous(x, c.space, g.lower.table()), "lower adjoint not continuous");
  for (int q = 0; q < x.size(); ++q) o.expect(g.upper(g.lower(q)) == q, "sup o waybelow is not the identity");
  o.expect(retract_transfer(x, c.space, sup.table(), g.lower.table()).passed, "retract transfer failed");
  // Negative control: move one value of the lower adjoint.
  if (c.ideals.size() > 1) {
    std::vector<int> bad = g.lower.table();
    bad[0] = (bad[0] + 1) % static_cast<int>(c.ideals.size());
    bool rejected = false;
    try {
      GaloisConnection::make(MonotoneMap(specialization(x), spec, bad), sup);
    } catch (const Error&) {
      rejected = true;
    }
    o.expect(rejected, "corrupted pair accepted as a Galois connection");
  }
  // Scott space of the poset: topological ideals are exactly the ideals.
  const IdealCompletion s = ideal_completion(scott_topology(p));
  std::set<Mask> ideals;
  for (Mask d : directed_subsets(p)) ideals.insert(p.down_closure(d));
  o.expect(std::set<Mask>(s.ideals.begin(), s.ideals.end()) == ideals, "I_T(Sigma P) differs from Id(P)");
  return o;
}

Outcome spectrum_check(const FiniteSpace& x, const FinitePoset&) {
  Outcome o;
  o.expect(find_homeomorphism(spectrum(open_lattice(x)), x).has_value(),
           "spectrum of O(X) not homeomorphic to X");
  return o;
}

std::vector<Instance> johnstone_instances(int depth) {
  std::vector<Instance> out;
  const long bound = std::min(depth, 8);
  out.push_back({"irreducible fragment elements, parameters <= " + std::to_string(bound), 0, [bound] {
    Outcome o;
    std::set<ClosedSetJ> principal;
    for (long m = 1; m <= bound + 1; ++m) {
      principal.insert(j_closure(omega_point(m)));
      for (long n = 1; n <= bound + 1; ++n) principal.insert(j_closure(pair_point(m, n)));
    }
    auto frag = enumerate_fragment(bound, 3, 2);
    frag.push_back(ClosedSetJ::whole());
    for (const auto& a : frag) {
      const bool expected = a.is_whole() || principal.count(a) != 0;
      o.expect(j_irreducible(a) == expected, "irreducibility wrong for " + a.to_string());
    }
    return o;
  }});
  out.push_back({"Spec L topology", 0, [bound] {
    Outcome o;
    for (const auto& c : j_spec_topology_check(static_cast<int>(bound))) o.expect(c.passed(), c.line());
    return o;
  }});
  out.push_back({"band chain", 0, [bound] {
    Outcome o;
    const JCheck c = j_band_chain_unbounded(bound);
    o.expect(c.passed(), c.line());
    return o;
  }});
  const int sep = std::min(depth, 6);
  for (const auto& a : j_sample_elements()) {
    out.push_back({"separation " + a.to_string(), 0, [a, sep] {
      Outcome o;
      const SeparationReport r = j_sigma_equals_upsilon_witness(a, sep);
      o.expect(r.trivial || r.verified, r.line());
      return o;
    }});
  }
  out.push_back({"fragment algebra", 0, [] {
    Outcome o;
    const auto s = j_sample_elements();
    for (const auto& a : s) {
      o.expect(j_join(a, a) == a && j_meet(a, a) == a, "not idempotent at " + a.to_string());
      for (const auto& b : s) {
        o.expect(j_join(a, b) == j_join(b, a) && j_meet(a, b) == j_meet(b, a), "not commutative");
        o.expect(j_join(a, j_meet(a, b)) == a && j_meet(a, j_join(a, b)) == a, "not absorptive");
        for (const auto& c : s) {
          o.expect(j_join(a, j_join(b, c)) == j_join(j_join(a, b), c), "join not associative");
          o.expect(j_meet(a, j_meet(b, c)) == j_meet(j_meet(a, b), c), "meet not associative");
        }
      }
    }
    return o;
  }});
  return out;
}

std::vector<Instance> gallery_instances(int depth) {
  std::vector<Instance> out;
  for (const auto& name : gallery_names()) {
    out.push_back({name + " claims at depth " + std::to_string(depth), 0, [name, depth] {
      Outcome o;
      const GalleryReport g = run_gallery_claims(name, depth);
      for (const auto& c : g.claims) o.expect(c.passed(), c.line);
      return o;
    }});
    for (int d = 1; d <= std::min(depth, 8); ++d) {
      out.push_back({name + " soundness at depth " + std::to_string(d), d, [name, d] {
        Outcome o;
        const SoundnessReport r = schema_soundness(*gallery_space(name), d);
        o.checks = r.checks;
        if (r.mismatches != 0) {
          o.failures.push_back(std::to_string(r.mismatches) + " mismatches, first: " + r.first_mismatch);
        }
        return o;
      }});
    }
  }
  return out;
}

const std::map<std::string, std::string>& descriptions() {
  static const std::map<std::string, std::string> d{
      {"thm-2.3", "d_topology: upper sets, same specialization, same convergence, idempotent"},
      {"finite-degeneracy", "finite spaces are Alexandroff; D -> x iff x <= max D"},
      {"lem-2.8", "two-sided slice criterion equals d_topology of the product"},
      {"thm-3.12", "c-space, d-continuity, n-continuity and complete distributivity agree"},
      {"thm-3.17", "algebraic spaces, b-spaces and CD algebraic open lattices agree"},
      {"ideal-completion", "I_T(X): b-space, compact points, sup map, lower adjoint"},
      {"thm-4.11", "quasicontinuity and quasialgebraicity characterizations agree"},
      {"thm-4.16", "continuity of X against continuity of C(X)"},
      {"lem-5.2", "tensor, categorical product and product coincide"},
      {"thm-5.8-finite", "core compactness, [X -> S] = Sigma O(X), currying"},
      {"prop-6.1", "s_n continuity against sigma(C(X)) = upsilon(C(X))"},
      {"eta-diamond", "eta / diamond adjunction laws"},
      {"spectrum", "spectrum of O(X) is homeomorphic to X"},
      {"johnstone", "Johnstone space: irreducibles, Spec L, band chain, separation"},
      {"gallery-all", "gallery claims and schema soundness"},
  };
  return d;
}

}  // namespace

std::vector<std::string> suite_ids() {
  return {"thm-2.3",  "finite-degeneracy", "lem-2.8",     "thm-3.12",       "thm-3.17",
          "ideal-completion", "thm-4.11", "thm-4.16", "lem-5.2", "thm-5.8-finite",
          "prop-6.1", "eta-diamond",       "spectrum",    "johnstone",      "gallery-all"};
}

int default_jobs() {
  if (const char* env = std::getenv("DTOPW_JOBS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::string SuiteResult::summary() const {
  std::ostringstream os;
  os << "suite " << id << " (max-size " << config.max_size << ", depth " << config.depth << ")\n";
  const auto& d = descriptions();
  if (const auto it = d.find(id); it != d.end()) os << "  " << it->second << '\n';
  os << "instances " << instances << " checks " << checks << " failures " << failures.size() << '\n';
  for (const auto& n : notes) os << "note: " << n << '\n';
  const std::size_t shown = std::min<std::size_t>(failures.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) {
    os << (i == 0 ? "minimal failing instance: " : "failing instance: ") << failures[i].instance
       << ": " << failures[i].detail << '\n';
  }
  if (failures.size() > shown) os << "... " << failures.size() - shown << " more\n";
  os << "result " << (passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

SuiteResult run_suite(const SuiteConfig& config) {
  const auto ids = suite_ids();
  if (std::find(ids.begin(), ids.end(), config.id) == ids.end()) {
    throw UnknownName("unknown suite '" + config.id + "'");
  }
  if (config.max_size < 1 || config.max_size > 5) throw BoundExceeded("max size must be in 1..5");
  if (config.depth < 1 || config.depth > 12) throw BoundExceeded("depth must be in 1..12");

  SuiteResult r;
  r.id = config.id;
  r.config = config;
  const int n = config.max_size;
  const int small = std::min(n, 3);
  const int mid = std::min(n, 4);
  std::vector<Instance> inst;
  const std::string& id = config.id;
  if (id == "thm-2.3") {
    inst = per_space(n, thm_2_3);
  } else if (id == "finite-degeneracy") {
    inst = per_space(n, finite_degeneracy);
  } else if (id == "lem-2.8") {
    inst = per_pair(small, lem_2_8);
  } else if (id == "thm-3.12") {
    inst = per_space(n, thm_3_12);
    inst.push_back({"M3 injected as an open lattice (negative control)", 5, m3_control});
  } else if (id == "thm-3.17") {
    inst = per_space(n, thm_3_17);
  } else if (id == "ideal-completion") {
    inst = per_space(mid, ideal_check);
  } else if (id == "thm-4.11") {
    inst = per_space(n, thm_4_11);
  } else if (id == "thm-4.16") {
    inst = per_space(n, thm_4_16);
  } else if (id == "lem-5.2") {
    inst = per_pair(small, lem_5_2);
  } else if (id == "thm-5.8-finite") {
    inst = per_space(small, thm_5_8);
  } else if (id == "prop-6.1") {
    inst = per_space(small, prop_6_1);
  } else if (id == "eta-diamond") {
    inst = per_space(mid, eta_diamond_check);
  } else if (id == "spectrum") {
    inst = per_space(mid, spectrum_check);
  } else if (id == "johnstone") {
    inst = johnstone_instances(config.depth);
  } else {
    inst = gallery_instances(config.depth);
  }
  if ((id == "lem-2.8" || id == "lem-5.2" || id == "thm-5.8-finite" || id == "prop-6.1") && n > 3) {
    r.notes.push_back("operands capped at 3 points");
  }
  if ((id == "ideal-completion" || id == "eta-diamond" || id == "spectrum") && n > 4) {
    r.notes.push_back("spaces capped at 4 points");
  }
  if (id == "thm-2.3" || id == "thm-3.12" || id == "finite-degeneracy") {
    r.notes.push_back("every finite T0 space is Alexandroff; these checks test agreement of independent code paths");
  }
  if (id == "johnstone") {
    r.notes.push_back("fragment: finitely many full columns, eventually constant heights; nothing beyond it is checked");
  }

  const int jobs = config.jobs > 0 ? config.jobs : default_jobs();
  const auto outcomes = run_pool(inst, jobs);
  r.instances = static_cast<long>(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    r.checks += outcomes[i].checks;
    for (const auto& f : outcomes[i].failures) r.failures.push_back({inst[i].size, inst[i].description, f});
  }
  std::stable_sort(r.failures.begin(), r.failures.end(),
                   [](const SuiteFailure& a, const SuiteFailure& b) { return a.size < b.size; });
  return r;
}

std::vector<std::string> property_names() {
  return {"directed-space", "c-space", "b-space", "locally-hypercompact", "hypercompactly-based",
          "core-compact", "completely-distributive-opens", "hypercontinuous-opens"};
}

PropertyReport check_property(const FiniteSpace& x, std::string_view property) {
  PropertyReport r;
  r.property = std::string(property);
  std::ostringstream d;
  // A point x and open U with no ↑y (or int ↑y) between them refutes c/b-space.
  auto refute = [&](bool need_open) -> std::string {
    const FinitePoset px = specialization(x);
    for (Mask u : x.opens()) {
      for (int p = 0; p < x.size(); ++p) {
        if (!has(u, p)) continue;
        bool found = false;
        for (int q = 0; q < x.size() && !found; ++q) {
          if (!has(u, q)) continue;
          const Mask up = px.up(q);
          found = subset_of(up, u) && (need_open ? x.is_open(up) : has(x.interior(up), p));
        }
        if (!found) return "refuted at point " + x.label(p) + " in U = " + set_label(x.labels(), u);
      }
    }
    return "";
  };
  if (property == "directed-space") {
    const FiniteSpace dt = d_topology(x);
    r.holds = dt == x;
    d << dt.opens().size() << " directed-open sets, " << x.opens().size() << " opens";
  } else if (property == "c-space") {
    r.holds = is_c_space(x);
    d << (r.holds ? "every point has a neighbourhood base of sets up y" : refute(false));
  } else if (property == "b-space") {
    r.holds = is_b_space(x);
    d << (r.holds ? "every point has a neighbourhood base of open sets up y" : refute(true));
  } else if (property == "locally-hypercompact") {
    r.holds = is_locally_hypercompact(x);
    d << "neighbourhoods " << (r.holds ? "" : "do not ") << "filter through finitely generated up F";
  } else if (property == "hypercompactly-based") {
    r.holds = is_hypercompactly_based(x);
    d << "opens of the form up F " << (r.holds ? "form" : "do not form") << " a base";
  } else if (property == "core-compact") {
    if (x.size() <= 6) {
      const CoreCompactReport c = check_core_compact(x);
      r.holds = c.passed();
      d << c.witness;
    } else {
      r.holds = is_continuous_lattice(open_lattice(x));
      d << "O(X) continuous=" << r.holds << " (exponential checks skipped above 6 points)";
    }
  } else if (property == "completely-distributive-opens") {
    const FiniteLattice ol = open_lattice(x);
    r.holds = is_completely_distributive(ol);
    d << "O(X) has " << ol.size() << " elements, distributive=" << is_distributive(ol);
  } else if (property == "hypercontinuous-opens") {
    const FiniteLattice ol = open_lattice(x);
    r.holds = is_hypercontinuous(ol);
    d << "O(X) has " << ol.size() << " elements";
  } else {
    throw UnknownProperty("unknown property '" + std::string(property) + "'");
  }
  r.detail = d.str();
  return r;
}

}  // namespace dtopw
