#pragma once

#include <doctest.h>

#include <string>

#include "fragfield/basis.hpp"
#include "fragfield/chem.hpp"

namespace fragfield::test {

inline std::string data_path(const std::string& name) {
  return default_data_dir() + "/" + name;
}

inline FragmentedSystem fh3() { return load_geometry(data_path("fh3.xyz")); }
inline FragmentedSystem fh2_h2o() { return load_geometry(data_path("fh2_h2o.xyz")); }

} // namespace fragfield::test
