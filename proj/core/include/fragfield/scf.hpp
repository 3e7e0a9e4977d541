#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "fragfield/integrals.hpp"

namespace fragfield {

struct SCFOptions {
  int max_iter = 200;
  double conv_dE = 1e-10; // Hartree
  double conv_dD = 1e-8;  // max |Delta D|
  int diis_dim = 8;
  /// Optional density guess (same AO block); defaults to the
  /// core-Hamiltonian guess.
  std::optional<Eigen::MatrixXd> initial_density;
};

struct SCFResult {
  Eigen::MatrixXd C;   // AO x MO, S-orthonormal columns
  Eigen::VectorXd eps; // ascending orbital energies
  Eigen::MatrixXd D;   // 2 C_occ C_occ^T
  double E_total = 0;      // electronic + embedding + intra-unit nuclear repulsion
  double E_electronic = 0; // electronic + embedding only (footnote convention)
  double E_embed = 0;      // Tr(D V_esp)
  double E_nuc = 0;        // intra-unit nuclear repulsion constant
  int n_electrons = 0;
  int n_iterations = 0;
  std::vector<double> energy_history; // E_total per iteration
};

/// F = h_eff + J(D) - 1/2 K(D), linear in D.
Eigen::MatrixXd fock_build(const Eigen::MatrixXd& D, const Eigen::MatrixXd& h_eff,
                           const ERITensor& eri);

/// Closed-shell restricted Hartree-Fock over one AO block under a fixed
/// one-electron embedding operator V_esp.  DIIS-accelerated, aufbau
/// occupation with ties broken by eigensolver output order
/// (Eigen::SelfAdjointEigenSolver, ascending eigenvalues).
SCFResult rhf(const Eigen::MatrixXd& h_core, const Eigen::MatrixXd& V_esp,
              const Eigen::MatrixXd& S, const ERITensor& eri, int n_electrons,
              double E_nuc_const, const SCFOptions& opts = {});

} // namespace fragfield
