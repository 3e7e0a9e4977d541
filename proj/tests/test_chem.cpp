#include <doctest.h>

#include <cmath>

#include "fragfield/chem.hpp"
#include "fragfield/constants.hpp"
#include "fragfield/errors.hpp"
#include "test_util.hpp"

using namespace fragfield;

TEST_CASE("parse bundled (FH)3 geometry") {
  const FragmentedSystem sys = test::fh3();
  CHECK(sys.atoms.size() == 6);
  CHECK(sys.n_fragments == 3);
  const std::vector<int> want = {1, 1, 2, 2, 3, 3};
  CHECK(sys.fragment_of == want);
  CHECK(sys.atoms[0].element == "F");
  CHECK(sys.atoms[0].Z == 9);
  // coordinates are converted to Bohr
  CHECK(sys.atoms[0].position[0] == doctest::Approx(0.779023 * kBohrPerAngstrom).epsilon(1e-14));
  CHECK(sys.total_electrons() == 30);
  CHECK(sys.electrons_of(1) == 10);
}

TEST_CASE("parse bundled (FH)2-H2O geometry") {
  const FragmentedSystem sys = test::fh2_h2o();
  CHECK(sys.atoms.size() == 7);
  CHECK(sys.n_fragments == 3);
  CHECK(sys.atoms_of(1).size() == 3);
  CHECK(sys.electrons_of(1) == 10);
}

TEST_CASE("parse single-atom document") {
  const FragmentedSystem sys = parse_geometry("1 1\nH 1 0 0 0\n");
  CHECK(sys.atoms.size() == 1);
  CHECK(sys.n_fragments == 1);
  CHECK(sys.electrons_of(1) == 1); // data-model stub; RHF later rejects odd counts
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_geometry("2 1\nH 1 0 0\nH 1 0 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_geometry("1 1\nXx 1 0 0 0\n"), ParseError);
  // fragment ids must cover 1..n_fragments
  CHECK_THROWS_AS(parse_geometry("2 2\nH 1 0 0 0\nH 1 0 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_geometry("1 1\nH 2 0 0 0\n"), ParseError);
  try {
    parse_geometry("2 1\nH 1 0 0 0\nH 1 0 zz 1\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line_number == 3);
  }
}

TEST_CASE("fragment pairs enumeration") {
  auto sys = parse_geometry("3 3\nH 1 0 0 0\nH 2 0 0 8\nH 3 0 0 16\n");
  // note H fragments are odd-electron; only used for pair math
  (void)sys;
  FragmentedSystem s3;
  s3.n_fragments = 3;
  const std::vector<std::pair<int, int>> want = {{2, 1}, {3, 1}, {3, 2}};
  CHECK(fragment_pairs(s3) == want);

  FragmentedSystem s1;
  s1.n_fragments = 1;
  CHECK(fragment_pairs(s1).empty());

  FragmentedSystem s2;
  s2.n_fragments = 2;
  CHECK(fragment_pairs(s2) == std::vector<std::pair<int, int>>{{2, 1}});

  for (int n = 1; n <= 10; ++n) {
    FragmentedSystem s;
    s.n_fragments = n;
    CHECK(static_cast<int>(fragment_pairs(s).size()) == n * (n - 1) / 2);
  }
}

TEST_CASE("angstrom-bohr round trip") {
  for (double x : {0.1, 1.0, -17.25, 1234.5}) {
    const double back = (x * kBohrPerAngstrom) * kAngstromPerBohr;
    CHECK(std::abs(back - x) <= 1e-12 * std::abs(x));
  }
}
