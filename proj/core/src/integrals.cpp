#include "fragfield/integrals.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace fragfield {

namespace {

constexpr double kPi = std::numbers::pi;

// Hermite expansion coefficients E_t^{ij} for one Cartesian direction,
// including the pair exponential K = exp(-mu X_AB^2).  Entries with
// t > i + j are never written and never read.
struct HermiteE {
  // max angular momentum per index we ever need: l + 2 for kinetic rows
  static constexpr int kMax = 4;
  double e[kMax + 1][kMax + 1][2 * kMax + 1];

  HermiteE(int imax, int jmax, double p, double xab, double xpa, double xpb, double mu) {
    const double o2p = 0.5 / p;
    e[0][0][0] = std::exp(-mu * xab * xab);
    for (int i = 0; i <= imax; ++i) {
      for (int j = 0; j <= jmax; ++j) {
        if (i == 0 && j == 0) continue;
        for (int t = 0; t <= i + j; ++t) {
          double v = 0.0;
          if (i > 0) {
            if (t > 0) v += o2p * e[i - 1][j][t - 1];
            if (t <= i - 1 + j) v += xpa * e[i - 1][j][t];
            if (t + 1 <= i - 1 + j) v += (t + 1) * e[i - 1][j][t + 1];
          } else {
            if (t > 0) v += o2p * e[i][j - 1][t - 1];
            if (t <= i + j - 1) v += xpb * e[i][j - 1][t];
            if (t + 1 <= i + j - 1) v += (t + 1) * e[i][j - 1][t + 1];
          }
          e[i][j][t] = v;
        }
      }
    }
  }
};

// Hermite Coulomb tensor R_{tuv} built from Boys values; total Cartesian
// order is at most 4 for an s/p basis (ERI of four p functions).
struct HermiteR {
  static constexpr int kMax = 4;
  double r[kMax + 1][kMax + 1][kMax + 1];

  HermiteR(int order, double p, const std::array<double, 3>& pc) {
    const double x = p * (pc[0] * pc[0] + pc[1] * pc[1] + pc[2] * pc[2]);
    double F[kMax + 1];
    boys_function(order, x, F);
    // aux[n][t][u][v]: entries written level by level in total order t+u+v,
    // reading only lower levels
    double aux[kMax + 1][kMax + 1][kMax + 1][kMax + 1];
    double scale = 1.0;
    for (int n = 0; n <= order; ++n) {
      aux[n][0][0][0] = scale * F[n];
      scale *= -2.0 * p;
    }
    for (int total = 1; total <= order; ++total) {
      for (int t = 0; t <= total; ++t)
        for (int u = 0; u + t <= total; ++u) {
          const int v = total - t - u;
          for (int n = 0; n + total <= order; ++n) {
            double val = 0.0;
            if (t > 0) {
              if (t > 1) val += (t - 1) * aux[n + 1][t - 2][u][v];
              val += pc[0] * aux[n + 1][t - 1][u][v];
            } else if (u > 0) {
              if (u > 1) val += (u - 1) * aux[n + 1][t][u - 2][v];
              val += pc[1] * aux[n + 1][t][u - 1][v];
            } else {
              if (v > 1) val += (v - 1) * aux[n + 1][t][u][v - 2];
              val += pc[2] * aux[n + 1][t][u][v - 1];
            }
            aux[n][t][u][v] = val;
          }
        }
    }
    for (int t = 0; t <= order; ++t)
      for (int u = 0; u + t <= order; ++u)
        for (int v = 0; v + t + u <= order; ++v) r[t][u][v] = aux[0][t][u][v];
  }
};

struct PrimPair {
  double p, mu;
  std::array<double, 3> P, PA, PB, AB;
};

PrimPair make_pair(double a, const std::array<double, 3>& A, double b,
                   const std::array<double, 3>& B) {
  PrimPair pp;
  pp.p = a + b;
  pp.mu = a * b / pp.p;
  for (int d = 0; d < 3; ++d) {
    pp.P[d] = (a * A[d] + b * B[d]) / pp.p;
    pp.PA[d] = pp.P[d] - A[d];
    pp.PB[d] = pp.P[d] - B[d];
    pp.AB[d] = A[d] - B[d];
  }
  return pp;
}

// Per-AO contraction coefficient for a shell component.
double ao_coeff(const Shell& sh, int component, int prim) {
  return component == 0 ? sh.coeff_s[prim] : sh.coeff_p[prim];
}

} // namespace

void boys_function(int n_max, double x, double* F) {
  if (x < 1e-14) {
    for (int n = 0; n <= n_max; ++n) F[n] = 1.0 / (2 * n + 1);
    return;
  }
  if (x < 35.0) {
    // ascending series for the highest order, then downward recursion
    double term = 1.0 / (2 * n_max + 1);
    double sum = term;
    for (int k = 1; k < 200; ++k) {
      term *= 2.0 * x / (2 * n_max + 2 * k + 1);
      sum += term;
      if (term < sum * 1e-17) break;
    }
    const double ex = std::exp(-x);
    F[n_max] = ex * sum;
    for (int n = n_max; n > 0; --n) F[n - 1] = (2.0 * x * F[n] + ex) / (2 * n - 1);
  } else {
    F[0] = 0.5 * std::sqrt(kPi / x);
    const double ex = std::exp(-x);
    for (int n = 0; n < n_max; ++n) F[n + 1] = ((2 * n + 1) * F[n] - ex) / (2.0 * x);
  }
}

void one_electron_integrals(const BasisSet& basis, const FragmentedSystem& system,
                            IntegralStore& store) {
  const int n = basis.n_ao();
  store.S = Eigen::MatrixXd::Zero(n, n);
  store.T = Eigen::MatrixXd::Zero(n, n);
  store.V_kernel.assign(system.atoms.size(), Eigen::MatrixXd::Zero(n, n));

  for (int mu = 0; mu < n; ++mu) {
    for (int nu = 0; nu <= mu; ++nu) {
      const Shell& sa = basis.shells[basis.ao_shell[mu]];
      const Shell& sb = basis.shells[basis.ao_shell[nu]];
      const auto la = basis.ao_powers(mu);
      const auto lb = basis.ao_powers(nu);
      const int ca = basis.ao_component[mu], cb = basis.ao_component[nu];

      double s_val = 0.0, t_val = 0.0;
      std::vector<double> v_val(system.atoms.size(), 0.0);

      for (std::size_t ma = 0; ma < sa.exponents.size(); ++ma) {
        const double a = sa.exponents[ma];
        for (std::size_t mb = 0; mb < sb.exponents.size(); ++mb) {
          const double b = sb.exponents[mb];
          const double coef = ao_coeff(sa, ca, ma) * ao_coeff(sb, cb, mb);
          const PrimPair pp = make_pair(a, sa.center, b, sb.center);

          // 1D Hermite tables; j up to lb+2 for the kinetic rows
          std::array<HermiteE, 3> E = {
              HermiteE(la[0], lb[0] + 2, pp.p, pp.AB[0], pp.PA[0], pp.PB[0], pp.mu),
              HermiteE(la[1], lb[1] + 2, pp.p, pp.AB[1], pp.PA[1], pp.PB[1], pp.mu),
              HermiteE(la[2], lb[2] + 2, pp.p, pp.AB[2], pp.PA[2], pp.PB[2], pp.mu)};

          const double root = std::sqrt(kPi / pp.p);
          auto s1d = [&](int d, int i, int j) { return E[d].e[i][j][0] * root; };
          auto t1d = [&](int d, int i, int j) {
            double v = b * (2 * j + 1) * s1d(d, i, j) - 2.0 * b * b * s1d(d, i, j + 2);
            if (j >= 2) v -= 0.5 * j * (j - 1) * s1d(d, i, j - 2);
            return v;
          };

          const double sx = s1d(0, la[0], lb[0]);
          const double sy = s1d(1, la[1], lb[1]);
          const double sz = s1d(2, la[2], lb[2]);
          s_val += coef * sx * sy * sz;
          t_val += coef * (t1d(0, la[0], lb[0]) * sy * sz + sx * t1d(1, la[1], lb[1]) * sz +
                           sx * sy * t1d(2, la[2], lb[2]));

          const int order = la[0] + la[1] + la[2] + lb[0] + lb[1] + lb[2];
          for (std::size_t A = 0; A < system.atoms.size(); ++A) {
            std::array<double, 3> pc;
            for (int d = 0; d < 3; ++d) pc[d] = pp.P[d] - system.atoms[A].position[d];
            HermiteR R(order, pp.p, pc);
            double sum = 0.0;
            for (int t = 0; t <= la[0] + lb[0]; ++t)
              for (int u = 0; u <= la[1] + lb[1]; ++u)
                for (int v = 0; v <= la[2] + lb[2]; ++v)
                  sum += E[0].e[la[0]][lb[0]][t] * E[1].e[la[1]][lb[1]][u] *
                         E[2].e[la[2]][lb[2]][v] * R.r[t][u][v];
            v_val[A] += coef * 2.0 * kPi / pp.p * sum;
          }
        }
      }

      store.S(mu, nu) = store.S(nu, mu) = s_val;
      store.T(mu, nu) = store.T(nu, mu) = t_val;
      for (std::size_t A = 0; A < system.atoms.size(); ++A)
        store.V_kernel[A](mu, nu) = store.V_kernel[A](nu, mu) = v_val[A];
    }
  }
}

ERITensor extract_block(const ERITensor& full, const std::vector<int>& aos) {
  ERITensor out;
  const int m = static_cast<int>(aos.size());
  out.resize(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          out.at(i, j, k, l) = full(aos[i], aos[j], aos[k], aos[l]);
  return out;
}

void two_electron_integrals(const BasisSet& basis, IntegralStore& store) {
  const int n = basis.n_ao();
  store.eri.resize(n);

  auto set8 = [&](int i, int j, int k, int l, double v) {
    auto put = [&](int a, int b, int c, int d) { store.eri.at(a, b, c, d) = v; };
    put(i, j, k, l); put(j, i, k, l); put(i, j, l, k); put(j, i, l, k);
    put(k, l, i, j); put(l, k, i, j); put(k, l, j, i); put(l, k, j, i);
  };

  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu <= mu; ++nu)
      for (int la = 0; la <= mu; ++la)
        for (int si = 0; si <= (la == mu ? nu : la); ++si) {
          const Shell& s1 = basis.shells[basis.ao_shell[mu]];
          const Shell& s2 = basis.shells[basis.ao_shell[nu]];
          const Shell& s3 = basis.shells[basis.ao_shell[la]];
          const Shell& s4 = basis.shells[basis.ao_shell[si]];
          const auto l1 = basis.ao_powers(mu), l2 = basis.ao_powers(nu);
          const auto l3 = basis.ao_powers(la), l4 = basis.ao_powers(si);
          const int c1 = basis.ao_component[mu], c2 = basis.ao_component[nu];
          const int c3 = basis.ao_component[la], c4 = basis.ao_component[si];

          double val = 0.0;
          for (std::size_t m1 = 0; m1 < s1.exponents.size(); ++m1)
            for (std::size_t m2 = 0; m2 < s2.exponents.size(); ++m2) {
              const PrimPair bra = make_pair(s1.exponents[m1], s1.center,
                                             s2.exponents[m2], s2.center);
              const double cb = ao_coeff(s1, c1, m1) * ao_coeff(s2, c2, m2);
              std::array<HermiteE, 3> Eb = {
                  HermiteE(l1[0], l2[0], bra.p, bra.AB[0], bra.PA[0], bra.PB[0], bra.mu),
                  HermiteE(l1[1], l2[1], bra.p, bra.AB[1], bra.PA[1], bra.PB[1], bra.mu),
                  HermiteE(l1[2], l2[2], bra.p, bra.AB[2], bra.PA[2], bra.PB[2], bra.mu)};
              for (std::size_t m3 = 0; m3 < s3.exponents.size(); ++m3)
                for (std::size_t m4 = 0; m4 < s4.exponents.size(); ++m4) {
                  const PrimPair ket = make_pair(s3.exponents[m3], s3.center,
                                                 s4.exponents[m4], s4.center);
                  const double ck = ao_coeff(s3, c3, m3) * ao_coeff(s4, c4, m4);
                  std::array<HermiteE, 3> Ek = {
                      HermiteE(l3[0], l4[0], ket.p, ket.AB[0], ket.PA[0], ket.PB[0], ket.mu),
                      HermiteE(l3[1], l4[1], ket.p, ket.AB[1], ket.PA[1], ket.PB[1], ket.mu),
                      HermiteE(l3[2], l4[2], ket.p, ket.AB[2], ket.PA[2], ket.PB[2], ket.mu)};

                  const double alpha = bra.p * ket.p / (bra.p + ket.p);
                  std::array<double, 3> pq;
                  for (int d = 0; d < 3; ++d) pq[d] = bra.P[d] - ket.P[d];
                  const int order = l1[0] + l1[1] + l1[2] + l2[0] + l2[1] + l2[2] +
                                    l3[0] + l3[1] + l3[2] + l4[0] + l4[1] + l4[2];
                  HermiteR R(order, alpha, pq);

                  double sum = 0.0;
                  for (int t = 0; t <= l1[0] + l2[0]; ++t)
                    for (int u = 0; u <= l1[1] + l2[1]; ++u)
                      for (int v = 0; v <= l1[2] + l2[2]; ++v) {
                        const double eb = Eb[0].e[l1[0]][l2[0]][t] *
                                          Eb[1].e[l1[1]][l2[1]][u] *
                                          Eb[2].e[l1[2]][l2[2]][v];
                        if (eb == 0.0) continue;
                        for (int tt = 0; tt <= l3[0] + l4[0]; ++tt)
                          for (int uu = 0; uu <= l3[1] + l4[1]; ++uu)
                            for (int vv = 0; vv <= l3[2] + l4[2]; ++vv) {
                              const double ek = Ek[0].e[l3[0]][l4[0]][tt] *
                                                Ek[1].e[l3[1]][l4[1]][uu] *
                                                Ek[2].e[l3[2]][l4[2]][vv];
                              if (ek == 0.0) continue;
                              const int sgn = ((tt + uu + vv) % 2) ? -1 : 1;
                              sum += eb * ek * sgn * R.r[t + tt][u + uu][v + vv];
                            }
                      }

                  val += cb * ck * 2.0 * std::pow(kPi, 2.5) /
                         (bra.p * ket.p * std::sqrt(bra.p + ket.p)) * sum;
                }
            }
          set8(mu, nu, la, si, val);
        }
}

IntegralStore compute_integrals(const BasisSet& basis, const FragmentedSystem& system) {
  IntegralStore store;
  one_electron_integrals(basis, system, store);
  two_electron_integrals(basis, store);
  return store;
}

} // namespace fragfield
