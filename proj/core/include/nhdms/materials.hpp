// Copyright (c) 2026 the nhdms authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "nhdms/types.hpp"

namespace nhdms {

/// Physical constants of the nonlocal hydrodynamic Drude model in SI units,
/// plus the host and vacuum parameters of the scattering configuration.
struct MaterialSet {
  double omega_p = 1.37e16;  ///< plasma frequency [rad/s]
  double gamma = 1.08e14;    ///< damping constant [rad/s]
  double beta = 1.08e6;      ///< nonlocality velocity [m/s]
  double eps_metal = 9.5;    ///< relative permittivity of the metal (bound electrons)
  double mu_metal = 1.0;     ///< relative permeability of the metal
  double eps_host = 3.9;     ///< relative permittivity of the dielectric host
  double mu_host = 1.0;      ///< relative permeability of the host
  double eps0 = 8.8541878128e-12;  ///< vacuum permittivity [F/m]
  double mu0 = 1.25663706212e-6;   ///< vacuum permeability [H/m]

  /// Gold nanoparticles in silicon dioxide.
  static MaterialSet gold_in_silica();
  /// Gold nanoparticles in water.
  static MaterialSet gold_in_water();

  void validate() const;  // throws InvalidArgument on any nonpositive entry
};

/// Scaling convention: lengths by L0, frequencies by omega0, and eps0 = mu0 = 1
/// in scaled units (so omega_tilde doubles as the scaled vacuum wavenumber).
struct NondimScheme {
  double length_scale = 1e-9;       ///< L0 [m]
  double frequency_scale = 1.37e16; ///< omega0 [rad/s]

  void validate() const;

  double scale_frequency(double omega_si) const { return omega_si / frequency_scale; }
  double unscale_frequency(double omega_tilde) const { return omega_tilde * frequency_scale; }
  double scale_length(double x_si) const { return x_si / length_scale; }
  double unscale_length(double x_tilde) const { return x_tilde * length_scale; }
};

/// Dimensionless material constants. Relative permittivities/permeabilities are
/// unchanged; omega_p, gamma scale by 1/omega0 and beta by 1/(L0*omega0).
struct ScaledMaterials {
  double omega_p = 1.0;
  double gamma = 0.0;
  double beta = 0.0;
  double eps_metal = 1.0;
  double mu_metal = 1.0;
  double eps_host = 1.0;
  double mu_host = 1.0;
};

ScaledMaterials nondimensionalize(const MaterialSet& mats, const NondimScheme& scheme);

}  // namespace nhdms
