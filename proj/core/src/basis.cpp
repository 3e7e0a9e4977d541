#include "fragfield/basis.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "fragfield/errors.hpp"

namespace fragfield {

namespace {

// (2l-1)!! with the l = 0 case equal to 1.
double odd_double_factorial(int l) {
  double v = 1.0;
  for (int k = 2 * l - 1; k > 1; k -= 2) v *= k;
  return v;
}

// Norm of a primitive Cartesian Gaussian carrying l units of angular
// momentum on a single axis.
double primitive_norm(double a, int l) {
  const double pi = std::numbers::pi;
  return std::pow(2.0 * a / pi, 0.75) * std::sqrt(std::pow(4.0 * a, l) / odd_double_factorial(l));
}

// Self-overlap of a contraction whose coefficients already include the
// primitive norms.
double contracted_self_overlap(const std::vector<double>& exps,
                               const std::vector<double>& coeffs, int l) {
  const double pi = std::numbers::pi;
  double s = 0.0;
  for (std::size_t m = 0; m < exps.size(); ++m)
    for (std::size_t n = 0; n < exps.size(); ++n) {
      const double p = exps[m] + exps[n];
      s += coeffs[m] * coeffs[n] * std::pow(pi / p, 1.5) * odd_double_factorial(l) /
           std::pow(2.0 * p, l);
    }
  return s;
}

} // namespace

std::vector<std::pair<std::string, ElementBasis::RawShell>>
parse_basis_data(const std::string& text) {
  std::vector<std::pair<std::string, ElementBasis::RawShell>> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::string element;
  ElementBasis::RawShell shell;
  bool open = false;

  auto flush = [&]() {
    if (!open) return;
    if (shell.exponents.size() != 3)
      throw ParseError("shell for " + element + " must have 3 primitive rows", lineno);
    out.emplace_back(element, shell);
    shell = {};
    open = false;
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::size_t pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream ln(line);
    std::string first;
    if (!(ln >> first)) continue;

    if (std::isalpha(static_cast<unsigned char>(first[0]))) {
      flush();
      std::string type;
      if (!(ln >> type)) throw ParseError("expected shell type after element", lineno);
      element = first;
      if (type == "S")
        shell.type = ShellType::S;
      else if (type == "SP")
        shell.type = ShellType::SP;
      else
        throw ParseError("unknown shell type '" + type + "'", lineno);
      open = true;
    } else {
      if (!open) throw ParseError("primitive row outside a shell block", lineno);
      double e = std::stod(first), cs, cp;
      std::istringstream rest(line);
      rest >> first >> cs;
      if (!rest) throw ParseError("expected 'exponent coeff_s [coeff_p]'", lineno);
      shell.exponents.push_back(e);
      shell.coeff_s.push_back(cs);
      if (shell.type == ShellType::SP) {
        if (!(rest >> cp)) throw ParseError("SP shell row missing p coefficient", lineno);
        shell.coeff_p.push_back(cp);
      }
    }
  }
  flush();
  return out;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("FRAGFIELD_DATA_DIR")) return env;
#ifdef FRAGFIELD_SOURCE_DATA_DIR
  return FRAGFIELD_SOURCE_DATA_DIR;
#else
  return ".";
#endif
}

BasisSet build_basis(const FragmentedSystem& system, const std::string& path) {
  std::string file = path.empty() ? default_data_dir() + "/sto-3g.dat" : path;
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open basis data file '" + file + "'");
  std::ostringstream ss;
  ss << in.rdbuf();

  std::map<std::string, ElementBasis> table;
  for (auto& [elem, raw] : parse_basis_data(ss.str())) table[elem].shells.push_back(raw);

  BasisSet basis;
  for (std::size_t ia = 0; ia < system.atoms.size(); ++ia) {
    const Atom& atom = system.atoms[ia];
    auto it = table.find(atom.element);
    if (it == table.end())
      throw std::runtime_error("element " + atom.element + " not in basis data file");

    for (const auto& raw : it->second.shells) {
      Shell sh;
      sh.type = raw.type;
      sh.atom = static_cast<int>(ia);
      sh.center = atom.position;
      sh.exponents = raw.exponents;

      sh.coeff_s = raw.coeff_s;
      for (std::size_t m = 0; m < sh.exponents.size(); ++m)
        sh.coeff_s[m] *= primitive_norm(sh.exponents[m], 0);
      const double ns = contracted_self_overlap(sh.exponents, sh.coeff_s, 0);
      for (double& c : sh.coeff_s) c /= std::sqrt(ns);

      if (sh.type == ShellType::SP) {
        sh.coeff_p = raw.coeff_p;
        for (std::size_t m = 0; m < sh.exponents.size(); ++m)
          sh.coeff_p[m] *= primitive_norm(sh.exponents[m], 1);
        const double np = contracted_self_overlap(sh.exponents, sh.coeff_p, 1);
        for (double& c : sh.coeff_p) c /= std::sqrt(np);
      }

      const int shell_index = static_cast<int>(basis.shells.size());
      for (int comp = 0; comp < sh.n_components(); ++comp) {
        basis.ao_shell.push_back(shell_index);
        basis.ao_component.push_back(comp);
        basis.ao_owner.push_back(system.fragment_of[ia]);
        basis.ao_atom.push_back(static_cast<int>(ia));
      }
      basis.shells.push_back(std::move(sh));
    }
  }
  return basis;
}

std::vector<int> BasisSet::aos_of_fragment(int fragment) const {
  std::vector<int> out;
  for (int i = 0; i < n_ao(); ++i)
    if (ao_owner[i] == fragment) out.push_back(i);
  return out;
}

std::array<int, 3> BasisSet::ao_powers(int ao) const {
  switch (ao_component[ao]) {
    case 0: return {0, 0, 0};
    case 1: return {1, 0, 0};
    case 2: return {0, 1, 0};
    default: return {0, 0, 1};
  }
}

} // namespace fragfield
