/* Copyright 2026 The xcs Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <string>

#include "xcs/spectra.hpp"

namespace xcs {

/// Order-of-magnitude feasibility chain for a four-wave-mixing measurement.
struct YieldEstimate {
  double dipole = 0.0;             // a.u.
  double focal_area = 0.0;         // cm^2
  double surface_density = 0.0;    // cm^-2
  double photons_per_pulse = 0.0;
  double linewidth = 0.0;          // eV
  double transition = 0.0;         // eV
  double cross_section = 0.0;      // cm^2
  double p_abs = 0.0;
  double signal_ratio = 0.0;
  double photons_out_per_pulse = 0.0;
  Metadata metadata;
};

/// Peak absorption cross section sigma = 4 pi (omega / c) mu^2 / Gamma in
/// atomic units (omega, Gamma in hartree), converted to cm^2 with the bohr
/// radius. p_abs = sigma * surface_density, signal_ratio = p_abs^3.
/// Throws ConfigurationError unless every input is finite and positive.
YieldEstimate estimate_yield(double dipole, double focal_area, double surface_density, double photons_per_pulse,
                             double linewidth_ev, double transition_ev);

/// p^3 and photons * p^3; exposed so the chain can be checked on its own.
double signal_ratio(double p_abs);
double signal_photons(double photons_per_pulse, double ratio);

/// "key: value" lines, metadata first.
std::string format_yield(const YieldEstimate& estimate);

}  // namespace xcs
