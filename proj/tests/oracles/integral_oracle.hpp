#pragma once

// Independent reference implementations used to validate the production
// McMurchie-Davidson integral engine:
//   - overlap and kinetic integrals via Gauss-Hermite product quadrature
//     (exact for polynomial-times-Gaussian integrands)
//   - nuclear attraction and electron repulsion via the closed binomial-sum
//     formulas of Taketa, Huzinaga and O-ohata, with the Boys function
//     evaluated by adaptive Simpson quadrature
// Deliberately slow and simple; lives only in the test tree.

#include <Eigen/Dense>
#include <array>

#include "fragfield/basis.hpp"
#include "fragfield/chem.hpp"

namespace fragfield::oracle {

struct GaussPrim {
  double a = 0;                 // exponent
  std::array<double, 3> A{};    // center (Bohr)
  std::array<int, 3> l{};       // Cartesian powers
};

double boys_quadrature(int n, double x);

double overlap_prim(const GaussPrim& g1, const GaussPrim& g2);
double kinetic_prim(const GaussPrim& g1, const GaussPrim& g2);
double nuclear_kernel_prim(const GaussPrim& g1, const GaussPrim& g2,
                           const std::array<double, 3>& C);
double eri_prim(const GaussPrim& g1, const GaussPrim& g2, const GaussPrim& g3,
                const GaussPrim& g4);

// Contracted AO integrals over a production BasisSet (coefficients are
// taken as-is; their normalization is itself under test elsewhere).
double overlap_ao(const BasisSet& basis, int mu, int nu);
double kinetic_ao(const BasisSet& basis, int mu, int nu);
double nuclear_kernel_ao(const BasisSet& basis, int mu, int nu,
                         const std::array<double, 3>& C);
double eri_ao(const BasisSet& basis, int mu, int nu, int la, int si);

Eigen::MatrixXd overlap_matrix(const BasisSet& basis);
Eigen::MatrixXd kinetic_matrix(const BasisSet& basis);
// Full -sum_A Z_A kernel matrix.
Eigen::MatrixXd nuclear_matrix(const BasisSet& basis, const FragmentedSystem& system);

} // namespace fragfield::oracle
