#pragma once

#include <array>
#include <string>
#include <vector>

#include "fragfield/chem.hpp"

namespace fragfield {

enum class ShellType { S, SP };

/// One contracted shell of Gaussian primitives on an atomic center.
/// SP shells share exponents between the s and p contractions.
struct Shell {
  ShellType type = ShellType::S;
  int atom = 0;                  // center, index into FragmentedSystem::atoms
  std::array<double, 3> center{};
  std::vector<double> exponents;
  std::vector<double> coeff_s; // contraction coefficients, renormalized
  std::vector<double> coeff_p; // empty for pure S shells

  int n_components() const { return type == ShellType::S ? 1 : 4; }
};

/// Raw per-element shell data as read from the basis data file.
struct ElementBasis {
  struct RawShell {
    ShellType type;
    std::vector<double> exponents, coeff_s, coeff_p;
  };
  std::vector<RawShell> shells;
};

/// Global AO basis over the whole system.  AO ordering: shells in atom
/// order, S component first, then px, py, pz for SP shells.
struct BasisSet {
  std::vector<Shell> shells;
  std::vector<int> ao_shell;     // AO index -> shell index
  std::vector<int> ao_component; // 0 = s, 1..3 = px, py, pz
  std::vector<int> ao_owner;     // AO index -> fragment id
  std::vector<int> ao_atom;      // AO index -> atom index

  int n_ao() const { return static_cast<int>(ao_shell.size()); }
  std::vector<int> aos_of_fragment(int fragment) const;
  /// Cartesian powers (i,j,k) of the given AO.
  std::array<int, 3> ao_powers(int ao) const;
};

/// Parse the basis data file format: "<element> <S|SP>" followed by three
/// "exponent coeff_s [coeff_p]" rows.
std::vector<std::pair<std::string, ElementBasis::RawShell>>
parse_basis_data(const std::string& text);

/// Load basis parameters for the given elements from a data file.
/// Path resolution when `path` is empty: $FRAGFIELD_DATA_DIR/sto-3g.dat,
/// then the source-tree data directory.
std::string default_data_dir();

BasisSet build_basis(const FragmentedSystem& system, const std::string& path = "");

} // namespace fragfield
