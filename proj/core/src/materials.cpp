// Copyright (c) 2026 the nhdms authors
// SPDX-License-Identifier: Apache-2.0

#include "nhdms/materials.hpp"

namespace nhdms {

MaterialSet MaterialSet::gold_in_silica() {
  MaterialSet m;
  m.eps_host = 3.9;
  return m;
}

MaterialSet MaterialSet::gold_in_water() {
  MaterialSet m;
  m.eps_host = 80.0;
  return m;
}

void MaterialSet::validate() const {
  auto check = [](double v, const char* name) {
    if (!(v > 0.0)) throw InvalidArgument(std::string("MaterialSet: ") + name + " must be > 0");
  };
  check(omega_p, "omega_p");
  check(gamma, "gamma");
  check(beta, "beta");
  check(eps_metal, "eps_metal");
  check(mu_metal, "mu_metal");
  check(eps_host, "eps_host");
  check(mu_host, "mu_host");
  check(eps0, "eps0");
  check(mu0, "mu0");
}

void NondimScheme::validate() const {
  if (!(length_scale > 0.0)) throw InvalidArgument("NondimScheme: length_scale must be > 0");
  if (!(frequency_scale > 0.0)) throw InvalidArgument("NondimScheme: frequency_scale must be > 0");
}

ScaledMaterials nondimensionalize(const MaterialSet& mats, const NondimScheme& scheme) {
  mats.validate();
  scheme.validate();
  ScaledMaterials s;
  s.omega_p = mats.omega_p / scheme.frequency_scale;
  s.gamma = mats.gamma / scheme.frequency_scale;
  s.beta = mats.beta / (scheme.length_scale * scheme.frequency_scale);
  s.eps_metal = mats.eps_metal;
  s.mu_metal = mats.mu_metal;
  s.eps_host = mats.eps_host;
  s.mu_host = mats.mu_host;
  return s;
}

}  // namespace nhdms
