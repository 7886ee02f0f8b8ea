#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "dtopw/lattice.hpp"
#include "dtopw/order.hpp"
#include "dtopw/topology.hpp"

namespace dtopw {

// `.poset`:  "elements: a b c", then one "a <= b" per line.
// `.space`:  "elements: a b c", then one "open: a b" per line; ∅ and the
//            carrier are implied.
// Both accept blank lines and '#' comments. Errors are ParseError (with the
// line number), or UnknownLabel / CycleDetected / NotATopology / NotT0 from
// the constructors.

FinitePoset parse_poset(std::string_view text);
FiniteSpace parse_space(std::string_view text);
/// Parses a `.poset` and checks it is a lattice (meet and join derived).
FiniteLattice parse_lattice(std::string_view text);

/// Writes covering pairs only.
std::string write_poset(const FinitePoset& p);
std::string write_space(const FiniteSpace& x);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

/// A `.poset` file is read as its Alexandroff space; anything else as `.space`.
FiniteSpace load_space(const std::filesystem::path& path);

/// Hasse diagram, nodes and edges sorted by label.
std::string dot_hasse(const FinitePoset& p, std::string_view name = "hasse");
std::string dot_specialization(const FiniteSpace& x);
std::string dot_open_lattice(const FiniteSpace& x);

}  // namespace dtopw
