#include "fragfield/scf.hpp"

#include <cmath>
#include <deque>

#include "fragfield/errors.hpp"

namespace fragfield {

Eigen::MatrixXd fock_build(const Eigen::MatrixXd& D, const Eigen::MatrixXd& h_eff,
                           const ERITensor& eri) {
  const int n = static_cast<int>(D.rows());
  Eigen::MatrixXd F = h_eff;
  for (int m = 0; m < n; ++m)
    for (int u = 0; u < n; ++u) {
      double j = 0.0, k = 0.0;
      for (int l = 0; l < n; ++l)
        for (int s = 0; s < n; ++s) {
          j += D(l, s) * eri(m, u, l, s);
          k += D(l, s) * eri(m, l, s, u);
        }
      F(m, u) += j - 0.5 * k;
    }
  return F;
}

namespace {

Eigen::MatrixXd diis_extrapolate(const std::deque<Eigen::MatrixXd>& focks,
                                 const std::deque<Eigen::MatrixXd>& errors) {
  const int m = static_cast<int>(focks.size());
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(m + 1, m + 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      B(i, j) = (errors[i].array() * errors[j].array()).sum();
  for (int i = 0; i < m; ++i) B(i, m) = B(m, i) = -1.0;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
  rhs(m) = -1.0;
  Eigen::VectorXd c = B.fullPivLu().solve(rhs);
  Eigen::MatrixXd F = Eigen::MatrixXd::Zero(focks[0].rows(), focks[0].cols());
  for (int i = 0; i < m; ++i) F += c(i) * focks[i];
  return F;
}

} // namespace

SCFResult rhf(const Eigen::MatrixXd& h_core, const Eigen::MatrixXd& V_esp,
              const Eigen::MatrixXd& S, const ERITensor& eri, int n_electrons,
              double E_nuc_const, const SCFOptions& opts) {
  if (n_electrons % 2 != 0)
    throw ContractViolation("rhf requires an even electron count, got " +
                            std::to_string(n_electrons));
  const int n = static_cast<int>(h_core.rows());
  const int n_occ = n_electrons / 2;
  if (n_occ > n)
    throw ContractViolation("more occupied orbitals than basis functions");

  const Eigen::MatrixXd h_eff = h_core + V_esp;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s_solver(S);
  const Eigen::MatrixXd X = s_solver.operatorInverseSqrt();

  SCFResult res;
  res.n_electrons = n_electrons;
  res.E_nuc = E_nuc_const;

  auto diagonalize = [&](const Eigen::MatrixXd& F) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(X.transpose() * F * X);
    res.eps = es.eigenvalues();
    res.C = X * es.eigenvectors();
  };
  auto density = [&]() -> Eigen::MatrixXd {
    const Eigen::MatrixXd C_occ = res.C.leftCols(n_occ);
    return 2.0 * C_occ * C_occ.transpose();
  };

  Eigen::MatrixXd D;
  if (opts.initial_density) {
    D = *opts.initial_density;
  } else {
    diagonalize(h_eff);
    D = density();
  }

  std::deque<Eigen::MatrixXd> diis_F, diis_E;
  double E_prev = 0.0;
  bool have_prev = false;

  for (int iter = 0; iter < opts.max_iter; ++iter) {
    Eigen::MatrixXd F = fock_build(D, h_eff, eri);
    const double E_elec = 0.5 * (D.array() * (h_eff + F).array()).sum();
    const double E_total = E_elec + E_nuc_const;
    res.energy_history.push_back(E_total);

    const Eigen::MatrixXd err = F * D * S - S * D * F;
    diis_F.push_back(F);
    diis_E.push_back(err);
    if (static_cast<int>(diis_F.size()) > opts.diis_dim) {
      diis_F.pop_front();
      diis_E.pop_front();
    }
    if (diis_F.size() > 1 && err.cwiseAbs().maxCoeff() > 1e-12) {
      const Eigen::MatrixXd F_diis = diis_extrapolate(diis_F, diis_E);
      if (F_diis.allFinite()) F = F_diis;
    }

    diagonalize(F);
    const Eigen::MatrixXd D_new = density();
    const double dD = (D_new - D).cwiseAbs().maxCoeff();
    const double dE = have_prev ? std::abs(E_total - E_prev) : 1.0;
    D = D_new;
    E_prev = E_total;
    have_prev = true;
    res.n_iterations = iter + 1;

    if (dE <= opts.conv_dE && dD <= opts.conv_dD) {
      // final energy from the converged density
      const Eigen::MatrixXd Ff = fock_build(D, h_eff, eri);
      const double E_elec_f = 0.5 * (D.array() * (h_eff + Ff).array()).sum();
      diagonalize(Ff);
      D = density();
      res.D = D;
      res.E_electronic = E_elec_f;
      res.E_total = E_elec_f + E_nuc_const;
      res.E_embed = (D.array() * V_esp.array()).sum();
      res.energy_history.push_back(res.E_total);
      return res;
    }
  }
  throw ConvergenceError("rhf did not converge in " + std::to_string(opts.max_iter) +
                             " iterations (last E = " + std::to_string(E_prev) + ")",
                         E_prev);
}

} // namespace fragfield
