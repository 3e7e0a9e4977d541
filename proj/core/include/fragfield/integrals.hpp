#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fragfield/basis.hpp"

namespace fragfield {

/// Dense (ij|kl) tensor in chemists' notation, fully redundant storage.
struct ERITensor {
  int n = 0;
  std::vector<double> v;

  void resize(int n_) {
    n = n_;
    v.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);
  }
  double& at(int i, int j, int k, int l) {
    return v[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l];
  }
  double operator()(int i, int j, int k, int l) const {
    return v[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l];
  }
};

/// Sub-block of a tensor over a subset of AO indices.
ERITensor extract_block(const ERITensor& full, const std::vector<int>& aos);

/// AO-basis integrals over the global basis.  V_kernel[A] stores the
/// unsigned attraction kernel <mu| 1/|r-R_A| |nu>; the core Hamiltonian and
/// ESP operators apply the -Z_A factors.
struct IntegralStore {
  Eigen::MatrixXd S;
  Eigen::MatrixXd T;
  std::vector<Eigen::MatrixXd> V_kernel; // one per atom
  ERITensor eri;

  int n_ao() const { return static_cast<int>(S.rows()); }
};

/// Boys function F_0..F_n_max at x, written into F.
void boys_function(int n_max, double x, double* F);

void one_electron_integrals(const BasisSet& basis, const FragmentedSystem& system,
                            IntegralStore& store);
void two_electron_integrals(const BasisSet& basis, IntegralStore& store);

IntegralStore compute_integrals(const BasisSet& basis, const FragmentedSystem& system);

} // namespace fragfield
