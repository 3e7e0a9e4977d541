#pragma once

namespace fragfield {

// CODATA 2010 Bohr radius in Angstrom; pinned so that energies quoted to
// 1e-6 Hartree stay reproducible.
inline constexpr double kAngstromPerBohr = 0.52917721092;
inline constexpr double kBohrPerAngstrom = 1.0 / kAngstromPerBohr;

inline constexpr double kKcalPerMolPerHartree = 627.5094740631;

} // namespace fragfield
