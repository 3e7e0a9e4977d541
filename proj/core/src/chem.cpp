#include "fragfield/chem.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "fragfield/constants.hpp"
#include "fragfield/errors.hpp"

namespace fragfield {

double Atom::distance(const Atom& other) const {
  const double dx = position[0] - other.position[0];
  const double dy = position[1] - other.position[1];
  const double dz = position[2] - other.position[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

int element_charge(const std::string& symbol) {
  static const std::map<std::string, int> table = {
      {"H", 1}, {"He", 2}, {"Li", 3}, {"Be", 4}, {"B", 5},
      {"C", 6}, {"N", 7},  {"O", 8},  {"F", 9},  {"Ne", 10}};
  auto it = table.find(symbol);
  if (it == table.end())
    throw std::runtime_error("unknown element symbol '" + symbol + "'");
  return it->second;
}

int element_core_orbitals(int Z) { return Z > 2 ? 1 : 0; }

std::vector<int> FragmentedSystem::atoms_of(int fragment) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (fragment_of[i] == fragment) out.push_back(static_cast<int>(i));
  return out;
}

int FragmentedSystem::electrons_of(int fragment) const {
  int n = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (fragment_of[i] == fragment) n += atoms[i].Z;
  return n - charges[fragment - 1];
}

int FragmentedSystem::total_electrons() const {
  int n = 0;
  for (const auto& a : atoms) n += a.Z;
  for (int q : charges) n -= q;
  return n;
}

double FragmentedSystem::nuclear_repulsion(const std::vector<int>& atom_indices) const {
  double e = 0.0;
  for (std::size_t i = 0; i < atom_indices.size(); ++i)
    for (std::size_t j = i + 1; j < atom_indices.size(); ++j) {
      const Atom& a = atoms[atom_indices[i]];
      const Atom& b = atoms[atom_indices[j]];
      e += a.Z * b.Z / a.distance(b);
    }
  return e;
}

FragmentedSystem parse_geometry(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t pos = line.find('#');
      if (pos != std::string::npos) line.erase(pos);
      std::istringstream probe(line);
      std::string tok;
      if (probe >> tok) return true;
    }
    return false;
  };

  if (!next_content_line()) throw ParseError("empty geometry document", 1);

  int natoms = 0, nfrag = 0;
  {
    std::istringstream hdr(line);
    if (!(hdr >> natoms >> nfrag) || natoms <= 0 || nfrag <= 0)
      throw ParseError("expected header 'natoms nfragments'", lineno);
  }

  FragmentedSystem sys;
  sys.n_fragments = nfrag;
  sys.charges.assign(nfrag, 0);
  sys.atoms.reserve(natoms);
  sys.fragment_of.reserve(natoms);

  for (int i = 0; i < natoms; ++i) {
    if (!next_content_line())
      throw ParseError("expected " + std::to_string(natoms) + " atom lines, got " +
                           std::to_string(i),
                       lineno + 1);
    std::istringstream ln(line);
    std::string elem;
    int frag;
    double x, y, z;
    if (!(ln >> elem >> frag >> x >> y >> z))
      throw ParseError("malformed atom line '" + line + "'", lineno);
    std::string trailing;
    if (ln >> trailing)
      throw ParseError("trailing token '" + trailing + "' on atom line", lineno);
    if (frag < 1 || frag > nfrag)
      throw ParseError("fragment id " + std::to_string(frag) + " outside 1.." +
                           std::to_string(nfrag),
                       lineno);
    Atom a;
    a.element = elem;
    try {
      a.Z = element_charge(elem);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), lineno);
    }
    a.position = {x * kBohrPerAngstrom, y * kBohrPerAngstrom, z * kBohrPerAngstrom};
    sys.atoms.push_back(std::move(a));
    sys.fragment_of.push_back(frag);
  }

  // Every fragment id in 1..n_fragments must actually be used.
  std::vector<int> count(nfrag, 0);
  for (int f : sys.fragment_of) ++count[f - 1];
  for (int f = 0; f < nfrag; ++f)
    if (count[f] == 0)
      throw ParseError("fragment ids not contiguous: fragment " +
                           std::to_string(f + 1) + " has no atoms",
                       lineno);

  return sys;
}

FragmentedSystem load_geometry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open geometry file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_geometry(ss.str());
}

std::vector<std::pair<int, int>> fragment_pairs(const FragmentedSystem& system) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j <= system.n_fragments; ++j)
    for (int i = j + 1; i <= system.n_fragments; ++i) pairs.emplace_back(i, j);
  return pairs;
}

} // namespace fragfield
