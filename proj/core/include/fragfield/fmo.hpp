#pragma once

#include <map>
#include <string>
#include <vector>

#include "fragfield/scf.hpp"

namespace fragfield {

struct FMOOptions {
  SCFOptions scf;
  int scc_max = 50;
  double scc_conv = 1e-8; // max |Delta E_I| between sweeps, Hartree
};

/// Converged monomer under the self-consistent ESP of its neighbours.
struct MonomerState {
  int fragment = 0;
  std::vector<int> aos; // global AO indices of the fragment block
  SCFResult scf;
};

/// A monomer or dimer work unit of the FMO expansion.
struct FMOUnit {
  std::string label;           // "1", "21", ...
  std::vector<int> fragments;  // one or two fragment ids, descending
  std::vector<int> atoms;      // atom indices
  std::vector<int> aos;        // global AO indices, ascending
  int n_electrons = 0;
  double E_nuc = 0;            // intra-unit nuclear repulsion
};

FMOUnit make_unit(const FragmentedSystem& system, const BasisSet& basis,
                  const std::vector<int>& fragments);

/// Energy bookkeeping for Eq.-style two-body assembly
///   E = sum_{I>J} E_IJ - (N_f - 2) sum_I E_I.
/// HF entries follow the footnote convention of the reference tables:
/// embedded electronic energies without nuclear repulsion.
struct FMOEnergyLedger {
  int n_fragments = 0;
  std::map<std::string, double> E_I;   // key "1", "2", ...
  std::map<std::string, double> E_IJ;  // key "21", "31", ...
  std::map<std::string, double> corr_I;
  std::map<std::string, double> corr_IJ;

  double assemble_hf() const;
  double assemble_corr() const;
};

/// Two-body assembly over explicit component maps; throws on a missing
/// monomer or dimer entry.
double assemble(int n_fragments, const std::map<std::string, double>& monomers,
                const std::map<std::string, double>& dimers);

/// Exact four-center ESP operator on the target AO block: attraction to all
/// environment nuclei plus the Coulomb field of the environment densities.
Eigen::MatrixXd esp_operator(const std::vector<int>& target_aos,
                             const std::vector<int>& env_fragments,
                             const std::vector<MonomerState>& monomers,
                             const FragmentedSystem& system, const BasisSet& basis,
                             const IntegralStore& integrals);

/// Monomer SCC loop: Jacobi sweeps in fragment order until every monomer
/// energy moves by no more than scc_conv between sweeps.
std::vector<MonomerState> scc_loop(const FragmentedSystem& system, const BasisSet& basis,
                                   const IntegralStore& integrals,
                                   const FMOOptions& opts = {});

/// Dimer RHF of fragments I and J in the frozen ESP of all other monomers.
SCFResult dimer_scf(int I, int J, const std::vector<MonomerState>& monomers,
                    const FragmentedSystem& system, const BasisSet& basis,
                    const IntegralStore& integrals, const FMOOptions& opts = {});

} // namespace fragfield
