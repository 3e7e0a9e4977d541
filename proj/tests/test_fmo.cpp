#include <doctest.h>

#include <cmath>

#include "fragfield/errors.hpp"
#include "fragfield/fmo.hpp"
#include "test_util.hpp"

using namespace fragfield;

namespace {

struct FMOFixture {
  FragmentedSystem sys;
  BasisSet basis;
  IntegralStore store;
  std::vector<MonomerState> monomers;
  std::map<std::string, SCFResult> dimers;

  explicit FMOFixture(const FragmentedSystem& s) : sys(s) {
    basis = build_basis(sys);
    store = compute_integrals(basis, sys);
    monomers = scc_loop(sys, basis, store);
    for (auto [i, j] : fragment_pairs(sys))
      dimers[std::to_string(i) + std::to_string(j)] =
          dimer_scf(i, j, monomers, sys, basis, store);
  }
};

const FMOFixture& fh3_fixture() {
  static FMOFixture f(test::fh3());
  return f;
}

const FMOFixture& fh2_h2o_fixture() {
  static FMOFixture f(test::fh2_h2o());
  return f;
}

} // namespace

TEST_CASE("esp_operator: empty environment is zero") {
  const auto& f = fh3_fixture();
  const auto aos = f.basis.aos_of_fragment(1);
  const Eigen::MatrixXd V = esp_operator(aos, {}, f.monomers, f.sys, f.basis, f.store);
  CHECK(V.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("esp_operator matches a naive summation oracle") {
  const auto& f = fh3_fixture();
  const auto aos = f.basis.aos_of_fragment(1);
  const Eigen::MatrixXd V =
      esp_operator(aos, {2, 3}, f.monomers, f.sys, f.basis, f.store);

  const int m = static_cast<int>(aos.size());
  Eigen::MatrixXd ref = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      double v = 0.0;
      for (int env : {2, 3}) {
        for (int a : f.sys.atoms_of(env))
          v -= f.sys.atoms[a].Z * f.store.V_kernel[a](aos[i], aos[j]);
        const auto& mono = f.monomers[env - 1];
        for (std::size_t l = 0; l < mono.aos.size(); ++l)
          for (std::size_t s = 0; s < mono.aos.size(); ++s)
            v += mono.scf.D(l, s) * f.store.eri(aos[i], aos[j], mono.aos[l], mono.aos[s]);
      }
      ref(i, j) = v;
    }
  CHECK((V - ref).cwiseAbs().maxCoeff() <= 1e-12);

  const double tr = (f.monomers[0].scf.D.array() * V.array()).sum();
  CHECK(std::isfinite(tr));
}

TEST_CASE("esp_operator: distant neutral fragment has negligible potential") {
  const auto sys = parse_geometry("4 2\nF 1 0 0 0\nH 1 0 0 0.92\nF 2 0 0 100\nH 2 0 0 100.92\n");
  const auto basis = build_basis(sys);
  const auto store = compute_integrals(basis, sys);
  const auto monomers = scc_loop(sys, basis, store);
  const auto aos = basis.aos_of_fragment(1);
  const Eigen::MatrixXd V = esp_operator(aos, {2}, monomers, sys, basis, store);
  CHECK(V.cwiseAbs().maxCoeff() <= 1e-6);
}

TEST_CASE("scc_loop: single fragment runs one isolated RHF") {
  const auto sys = parse_geometry("2 1\nF 1 0 0 0\nH 1 0 0 0.92\n");
  const auto basis = build_basis(sys);
  const auto store = compute_integrals(basis, sys);
  const auto monomers = scc_loop(sys, basis, store);
  REQUIRE(monomers.size() == 1);
  CHECK(monomers[0].scf.E_embed == 0.0);
}

TEST_CASE("scc_loop: non-interacting fragments keep isolated energies") {
  const auto far = parse_geometry(
      "4 2\nF 1 0 0 0\nH 1 0 0 0.92\nF 2 0 0 1000\nH 2 0 0 1000.92\n");
  const auto basis = build_basis(far);
  const auto store = compute_integrals(basis, far);
  const auto monomers = scc_loop(far, basis, store);

  const auto iso_sys = parse_geometry("2 1\nF 1 0 0 0\nH 1 0 0 0.92\n");
  const auto iso_basis = build_basis(iso_sys);
  const auto iso_store = compute_integrals(iso_basis, iso_sys);
  const auto iso = scc_loop(iso_sys, iso_basis, iso_store);

  CHECK(std::abs(monomers[0].scf.E_total - iso[0].scf.E_total) <= 1e-8);
  CHECK(std::abs(monomers[1].scf.E_total - iso[0].scf.E_total) <= 1e-8);

  // two-body assembly over totals equals the sum of isolated totals
  const auto d21 = dimer_scf(2, 1, monomers, far, basis, store);
  FMOEnergyLedger ledger;
  ledger.n_fragments = 2;
  ledger.E_I["1"] = monomers[0].scf.E_total;
  ledger.E_I["2"] = monomers[1].scf.E_total;
  ledger.E_IJ["21"] = d21.E_total;
  CHECK(std::abs(ledger.assemble_hf() - 2.0 * iso[0].scf.E_total) <= 1e-6);
}

TEST_CASE("(FH)3 SCC monomer energies reproduce the reference table footnote") {
  const auto& f = fh3_fixture();
  CHECK(std::abs(f.monomers[0].scf.E_electronic - (-103.815720)) <= 2e-5);
  CHECK(std::abs(f.monomers[1].scf.E_electronic - (-103.995064)) <= 2e-5);
  CHECK(std::abs(f.monomers[2].scf.E_electronic - (-103.563842)) <= 2e-5);
}

TEST_CASE("(FH)3 dimer energies reproduce the reference table footnote") {
  const auto& f = fh3_fixture();
  CHECK(std::abs(f.dimers.at("21").E_electronic - (-228.173251)) <= 2e-5);
  CHECK(std::abs(f.dimers.at("31").E_electronic - (-227.542281)) <= 2e-5);
  CHECK(std::abs(f.dimers.at("32").E_electronic - (-218.792929)) <= 2e-5);
}

TEST_CASE("(FH)2-H2O energies and C2v equivalences") {
  const auto& f = fh2_h2o_fixture();
  CHECK(std::abs(f.monomers[0].scf.E_electronic - (-84.426515)) <= 2e-5);
  CHECK(std::abs(f.monomers[1].scf.E_electronic - (-103.695254)) <= 2e-5);
  CHECK(std::abs(f.monomers[2].scf.E_electronic - (-103.695254)) <= 2e-5);
  CHECK(std::abs(f.monomers[1].scf.E_electronic - f.monomers[2].scf.E_electronic) <= 1e-8);

  CHECK(std::abs(f.dimers.at("21").E_electronic - (-207.357701)) <= 2e-5);
  CHECK(std::abs(f.dimers.at("31").E_electronic - (-207.357701)) <= 2e-5);
  CHECK(std::abs(f.dimers.at("21").E_electronic - f.dimers.at("31").E_electronic) <= 1e-8);
  CHECK(std::abs(f.dimers.at("32").E_electronic - (-220.935631)) <= 2e-5);
}

TEST_CASE("dimer of a two-fragment system is a plain supermolecule RHF") {
  const auto sys = parse_geometry("4 2\nF 1 0 0 0\nH 1 0 0 0.92\nF 2 0 3.0 0\nH 2 0 3.0 0.92\n");
  const auto basis = build_basis(sys);
  const auto store = compute_integrals(basis, sys);
  const auto monomers = scc_loop(

      sys, basis, store);
  const auto dim = dimer_scf(2, 1, monomers, sys, basis, store);

  // direct supermolecule RHF over the full AO space
  const int n = basis.n_ao();
  Eigen::MatrixXd h = store.T;
  for (std::size_t a = 0; a < sys.atoms.size(); ++a)
    h -= sys.atoms[a].Z * store.V_kernel[a];
  std::vector<int> all(sys.atoms.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  const auto super = rhf(h, Eigen::MatrixXd::Zero(n, n), store.S, store.eri, 20,
                         sys.nuclear_repulsion(all));
  CHECK(std::abs(dim.E_total - super.E_total) <= 1e-9);
  CHECK(dim.E_embed == 0.0);
}

TEST_CASE("Eq.-style assembly over footnote component values") {
  FMOEnergyLedger t2;
  t2.n_fragments = 3;
  t2.E_I = {{"1", -103.815720}, {"2", -103.995064}, {"3", -103.563842}};
  t2.E_IJ = {{"21", -228.173251}, {"31", -227.542281}, {"32", -218.792929}};
  CHECK(std::abs(t2.assemble_hf() - (-363.133835)) <= 1e-9);

  FMOEnergyLedger t3;
  t3.n_fragments = 3;
  t3.E_I = {{"1", -84.426515}, {"2", -103.695254}, {"3", -103.695254}};
  t3.E_IJ = {{"21", -207.357701}, {"31", -207.357701}, {"32", -220.935631}};
  CHECK(std::abs(t3.assemble_hf() - (-343.834010)) <= 1e-9);

  // correlation assembly uses the identical formula
  t2.corr_I = {{"1", -0.026884}, {"2", -0.026164}, {"3", -0.026899}};
  t2.corr_IJ = {{"21", -0.049880}, {"31", -0.051554}, {"32", -0.051952}};
  CHECK(std::abs(t2.assemble_corr() - (-0.073439)) <= 1e-9);

  // missing components must be rejected
  FMOEnergyLedger bad = t2;
  bad.E_IJ.erase("21");
  CHECK_THROWS_AS(bad.assemble_hf(), ContractViolation);
}

TEST_CASE("fragment relabeling leaves the assembled energy unchanged") {
  // same cluster with fragments 1 and 3 swapped in the file
  const std::string swapped =
      "6 3\n"
      "F 3  0.779023  0.287467 0.000000\n"
      "H 3  0.000000  0.807300 0.000000\n"
      "F 2 -1.361653  1.874668 0.000000\n"
      "H 2 -1.330503  2.801407 0.000000\n"
      "F 1  0.648089 -2.399606 0.000000\n"
      "H 1  0.741364 -1.471463 0.000000\n";
  const auto sys2 = parse_geometry(swapped);
  const auto basis2 = build_basis(sys2);
  const auto store2 = compute_integrals(basis2, sys2);
  const auto mono2 = scc_loop(sys2, basis2, store2);

  FMOEnergyLedger a, b;
  const auto& f = fh3_fixture();
  a.n_fragments = b.n_fragments = 3;
  for (int i = 1; i <= 3; ++i)
    a.E_I[std::to_string(i)] = f.monomers[i - 1].scf.E_electronic;
  for (const auto& [label, scf] : f.dimers) a.E_IJ[label] = scf.E_electronic;
  for (int i = 1; i <= 3; ++i)
    b.E_I[std::to_string(i)] = mono2[i - 1].scf.E_electronic;
  for (auto [i, j] : fragment_pairs(sys2))
    b.E_IJ[std::to_string(i) + std::to_string(j)] =
        dimer_scf(i, j, mono2, sys2, basis2, store2).E_electronic;

  CHECK(std::abs(a.assemble_hf() - b.assemble_hf()) <= 1e-12);
}
