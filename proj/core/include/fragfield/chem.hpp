#pragma once

#include <array>
#include <string>
#include <vector>

namespace fragfield {

/// One nucleus.  Coordinates are stored in Bohr; input files use Angstrom.
struct Atom {
  std::string element;
  int Z = 0;
  std::array<double, 3> position{}; // Bohr

  double distance(const Atom& other) const;
};

int element_charge(const std::string& symbol); // throws on unknown symbol
int element_core_orbitals(int Z);              // frozen 1s count (0 or 1 here)

/// A molecular cluster partitioned into fragments.  Fragment ids are
/// 1-based and contiguous.  Immutable after construction.
struct FragmentedSystem {
  std::vector<Atom> atoms;
  std::vector<int> fragment_of; // per atom, 1..n_fragments
  int n_fragments = 0;
  std::vector<int> charges; // per fragment net charge, all zero here

  std::vector<int> atoms_of(int fragment) const;
  int electrons_of(int fragment) const;
  int total_electrons() const;
  /// Intra-unit nuclear repulsion over the given atom set (Hartree).
  double nuclear_repulsion(const std::vector<int>& atom_indices) const;
};

/// Parse the fragmented-XYZ format: header "natoms nfragments", then one
/// line per atom: "element frag_id x y z" with coordinates in Angstrom.
FragmentedSystem parse_geometry(const std::string& text);
FragmentedSystem load_geometry(const std::string& path);

/// All dimer pairs (I, J), I > J, in ascending (J, I) order.
std::vector<std::pair<int, int>> fragment_pairs(const FragmentedSystem& system);

} // namespace fragfield
