#pragma once

#include "dtopw/lattice.hpp"
#include "dtopw/topology.hpp"

namespace dtopw {

/// x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z) for every triple.
bool is_distributive(const FiniteLattice& l);

/// Finite lattices are continuous, so this is "distributive and every element
/// is a join of co-primes".
bool is_completely_distributive(const FiniteLattice& l);

/// p ≠ bottom with p ≤ a ∨ b implying p ≤ a or p ≤ b.
Mask coprimes(const FiniteLattice& l);

/// p ≠ top with a ∧ b ≤ p implying a ≤ p or b ≤ p.
Mask primes(const FiniteLattice& l);

/// y lies in the upper-topology interior of ↑x.
bool hyperbelow(const FiniteLattice& l, int x, int y);

/// Some F ⊆ X has U ⊆ ↑F ⊆ V (↑ in the specialization order).
bool hyperbelow_open(const FiniteSpace& x, Mask u, Mask v);

/// {d : d ≺ x} is directed with supremum x, for every x.
bool is_hypercontinuous(const FiniteLattice& l);

/// x = ⋁{d : d ≺ d ≤ x} for every x.
bool is_hyperalgebraic(const FiniteLattice& l);

/// Every directed D with x ≤ sup D meets ↑x.
bool waybelow(const FiniteLattice& l, int x, int y);

bool is_continuous_lattice(const FiniteLattice& l);
bool is_algebraic_lattice(const FiniteLattice& l);

/// Primes with the hull-kernel topology {p : u ≰ p}. Throws NotDistributive.
FiniteSpace spectrum(const FiniteLattice& l);

}  // namespace dtopw
