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

#include "xcs/yield.hpp"

#include <cmath>

#include "xcs/io.hpp"
#include "xcs/units.hpp"
#include "xcs/version.hpp"

namespace xcs {

double signal_ratio(double p_abs) { return p_abs * p_abs * p_abs; }

double signal_photons(double photons_per_pulse, double ratio) { return photons_per_pulse * ratio; }

YieldEstimate estimate_yield(double dipole, double focal_area, double surface_density, double photons_per_pulse,
                             double linewidth_ev, double transition_ev) {
  const auto check = [](double v, const char* name) {
    if (!std::isfinite(v) || !(v > 0.0)) throw ConfigurationError(std::string(name) + " must be finite and > 0");
  };
  check(dipole, "dipole");
  check(focal_area, "focal_area");
  check(surface_density, "surface_density");
  check(photons_per_pulse, "photons_per_pulse");
  check(linewidth_ev, "linewidth");
  check(transition_ev, "transition");

  YieldEstimate y;
  y.dipole = dipole;
  y.focal_area = focal_area;
  y.surface_density = surface_density;
  y.photons_per_pulse = photons_per_pulse;
  y.linewidth = linewidth_ev;
  y.transition = transition_ev;

  const double omega = transition_ev / units::hartree_ev;
  const double gamma = linewidth_ev / units::hartree_ev;
  const double sigma_au = 4.0 * units::pi * (omega / units::speed_of_light_au) * dipole * dipole / gamma;
  y.cross_section = sigma_au * units::bohr_cm * units::bohr_cm;
  y.p_abs = y.cross_section * surface_density;
  y.signal_ratio = signal_ratio(y.p_abs);
  y.photons_out_per_pulse = signal_photons(photons_per_pulse, y.signal_ratio);

  set_metadata(y.metadata, "software", std::string("xcs ") + version_string);
  set_metadata(y.metadata, "model", "order-of-magnitude peak absorption");
  set_metadata(y.metadata, "cross_section_formula", "sigma = 4 pi (omega/c) mu^2 / Gamma [a.u.] * bohr^2");
  set_metadata(y.metadata, "hartree_eV", io::format_number(units::hartree_ev));
  set_metadata(y.metadata, "bohr_cm", io::format_number(units::bohr_cm));
  set_metadata(y.metadata, "speed_of_light_au", io::format_number(units::speed_of_light_au));
  set_metadata(y.metadata, "au_dipole_debye", io::format_number(units::au_dipole_debye));
  return y;
}

std::string format_yield(const YieldEstimate& y) {
  using io::format_number;
  std::string out;
  for (const auto& [k, v] : y.metadata) out += "# " + k + ": " + v + "\n";
  out += "dipole_au: " + format_number(y.dipole) + "\n";
  out += "focal_area_cm2: " + format_number(y.focal_area) + "\n";
  out += "surface_density_cm-2: " + format_number(y.surface_density) + "\n";
  out += "photons_per_pulse: " + format_number(y.photons_per_pulse) + "\n";
  out += "linewidth_eV: " + format_number(y.linewidth) + "\n";
  out += "transition_eV: " + format_number(y.transition) + "\n";
  out += "cross_section_cm2: " + format_number(y.cross_section) + "\n";
  out += "p_abs: " + format_number(y.p_abs) + "\n";
  out += "signal_ratio: " + format_number(y.signal_ratio) + "\n";
  out += "photons_out_per_pulse: " + format_number(y.photons_out_per_pulse) + "\n";
  return out;
}

}  // namespace xcs
