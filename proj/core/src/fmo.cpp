#include "fragfield/fmo.hpp"

#include <algorithm>
#include <cmath>

#include "fragfield/errors.hpp"

namespace fragfield {

FMOUnit make_unit(const FragmentedSystem& system, const BasisSet& basis,
                  const std::vector<int>& fragments) {
  FMOUnit unit;
  unit.fragments = fragments;
  std::sort(unit.fragments.rbegin(), unit.fragments.rend());
  for (int f : unit.fragments) unit.label += std::to_string(f);
  for (int f : unit.fragments) {
    for (int a : system.atoms_of(f)) unit.atoms.push_back(a);
    unit.n_electrons += system.electrons_of(f);
  }
  for (int ao = 0; ao < basis.n_ao(); ++ao)
    if (std::find(unit.fragments.begin(), unit.fragments.end(), basis.ao_owner[ao]) !=
        unit.fragments.end())
      unit.aos.push_back(ao);
  unit.E_nuc = system.nuclear_repulsion(unit.atoms);
  return unit;
}

double assemble(int n_fragments, const std::map<std::string, double>& monomers,
                const std::map<std::string, double>& dimers) {
  if (static_cast<int>(monomers.size()) != n_fragments)
    throw ContractViolation("assemble: expected " + std::to_string(n_fragments) +
                            " monomer energies, got " + std::to_string(monomers.size()));
  const std::size_t want_dimers =
      static_cast<std::size_t>(n_fragments) * (n_fragments - 1) / 2;
  if (dimers.size() != want_dimers)
    throw ContractViolation("assemble: expected " + std::to_string(want_dimers) +
                            " dimer energies, got " + std::to_string(dimers.size()));
  double e = 0.0;
  for (const auto& [label, value] : dimers) e += value;
  double em = 0.0;
  for (const auto& [label, value] : monomers) em += value;
  return e - (n_fragments - 2) * em;
}

double FMOEnergyLedger::assemble_hf() const { return assemble(n_fragments, E_I, E_IJ); }
double FMOEnergyLedger::assemble_corr() const {
  return assemble(n_fragments, corr_I, corr_IJ);
}

Eigen::MatrixXd esp_operator(const std::vector<int>& target_aos,
                             const std::vector<int>& env_fragments,
                             const std::vector<MonomerState>& monomers,
                             const FragmentedSystem& system, const BasisSet& basis,
                             const IntegralStore& integrals) {
  const int m = static_cast<int>(target_aos.size());
  Eigen::MatrixXd V = Eigen::MatrixXd::Zero(m, m);

  for (int f : env_fragments) {
    for (int a : system.atoms_of(f)) {
      const double z = system.atoms[a].Z;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          V(i, j) -= z * integrals.V_kernel[a](target_aos[i], target_aos[j]);
    }
    const MonomerState& mono = monomers[f - 1];
    const int me = static_cast<int>(mono.aos.size());
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        double c = 0.0;
        for (int l = 0; l < me; ++l)
          for (int s = 0; s < me; ++s)
            c += mono.scf.D(l, s) *
                 integrals.eri(target_aos[i], target_aos[j], mono.aos[l], mono.aos[s]);
        V(i, j) += c;
      }
  }
  return V;
}

namespace {

Eigen::MatrixXd unit_core_hamiltonian(const FMOUnit& unit, const FragmentedSystem& system,
                                      const IntegralStore& integrals) {
  const int m = static_cast<int>(unit.aos.size());
  Eigen::MatrixXd h(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      double v = integrals.T(unit.aos[i], unit.aos[j]);
      for (int a : unit.atoms)
        v -= system.atoms[a].Z * integrals.V_kernel[a](unit.aos[i], unit.aos[j]);
      h(i, j) = v;
    }
  return h;
}

Eigen::MatrixXd submatrix(const Eigen::MatrixXd& M, const std::vector<int>& idx) {
  const int m = static_cast<int>(idx.size());
  Eigen::MatrixXd out(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out(i, j) = M(idx[i], idx[j]);
  return out;
}

} // namespace

std::vector<MonomerState> scc_loop(const FragmentedSystem& system, const BasisSet& basis,
                                   const IntegralStore& integrals, const FMOOptions& opts) {
  const int nf = system.n_fragments;
  std::vector<MonomerState> monomers(nf);
  std::vector<FMOUnit> units;
  std::vector<Eigen::MatrixXd> h_core, S_block;
  std::vector<ERITensor> eri_block;

  for (int f = 1; f <= nf; ++f) {
    units.push_back(make_unit(system, basis, {f}));
    h_core.push_back(unit_core_hamiltonian(units.back(), system, integrals));
    S_block.push_back(submatrix(integrals.S, units.back().aos));
    eri_block.push_back(extract_block(integrals.eri, units.back().aos));
  }

  // sweep 0: isolated monomers
  std::vector<double> energies(nf);
  for (int f = 1; f <= nf; ++f) {
    const FMOUnit& u = units[f - 1];
    Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(u.aos.size(), u.aos.size());
    monomers[f - 1].fragment = f;
    monomers[f - 1].aos = u.aos;
    monomers[f - 1].scf =
        rhf(h_core[f - 1], zero, S_block[f - 1], eri_block[f - 1], u.n_electrons,
            u.E_nuc, opts.scf);
    energies[f - 1] = monomers[f - 1].scf.E_total;
  }
  if (nf == 1) return monomers;

  for (int sweep = 0; sweep < opts.scc_max; ++sweep) {
    std::vector<MonomerState> next = monomers;
    double max_dE = 0.0;
    for (int f = 1; f <= nf; ++f) {
      const FMOUnit& u = units[f - 1];
      std::vector<int> env;
      for (int g = 1; g <= nf; ++g)
        if (g != f) env.push_back(g);
      // ESP from the previous sweep's densities (Jacobi update)
      const Eigen::MatrixXd V =
          esp_operator(u.aos, env, monomers, system, basis, integrals);
      SCFOptions scf_opts = opts.scf;
      scf_opts.initial_density = monomers[f - 1].scf.D;
      next[f - 1].scf = rhf(h_core[f - 1], V, S_block[f - 1], eri_block[f - 1],
                            u.n_electrons, u.E_nuc, scf_opts);
      max_dE = std::max(max_dE, std::abs(next[f - 1].scf.E_total - energies[f - 1]));
      energies[f - 1] = next[f - 1].scf.E_total;
    }
    monomers = std::move(next);
    if (max_dE <= opts.scc_conv) return monomers;
  }
  throw ConvergenceError("SCC loop did not converge in " + std::to_string(opts.scc_max) +
                             " sweeps",
                         0.0);
}

SCFResult dimer_scf(int I, int J, const std::vector<MonomerState>& monomers,
                    const FragmentedSystem& system, const BasisSet& basis,
                    const IntegralStore& integrals, const FMOOptions& opts) {
  const FMOUnit unit = make_unit(system, basis, {I, J});
  std::vector<int> env;
  for (int g = 1; g <= system.n_fragments; ++g)
    if (g != I && g != J) env.push_back(g);
  const Eigen::MatrixXd h = unit_core_hamiltonian(unit, system, integrals);
  const Eigen::MatrixXd V =
      esp_operator(unit.aos, env, monomers, system, basis, integrals);
  const Eigen::MatrixXd S = submatrix(integrals.S, unit.aos);
  const ERITensor eri = extract_block(integrals.eri, unit.aos);
  return rhf(h, V, S, eri, unit.n_electrons, unit.E_nuc, opts.scf);
}

} // namespace fragfield
