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

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xcs/manifold.hpp"
#include "xcs/pulse.hpp"
#include "xcs/response.hpp"

namespace xcs {

/// Uniform, strictly increasing axis: start + k * step, k < count.
class FrequencyGrid {
 public:
  FrequencyGrid() = default;
  /// Throws ConfigurationError unless step > 0 and count > 1.
  FrequencyGrid(double start, double step, std::size_t count);

  /// Default 2D axis: -5 .. +5 eV at 0.02 eV.
  static FrequencyGrid default_2d() { return {-5.0, 0.02, 501}; }

  double start() const { return start_; }
  double step() const { return step_; }
  std::size_t count() const { return count_; }
  double operator[](std::size_t k) const { return start_ + static_cast<double>(k) * step_; }
  double back() const { return (*this)[count_ - 1]; }

  bool operator==(const FrequencyGrid&) const = default;

 private:
  double start_ = 0.0;
  double step_ = 1.0;
  std::size_t count_ = 2;
};

/// Ordered key/value header; everything that affects the numbers goes here.
using Metadata = std::vector<std::pair<std::string, std::string>>;

std::optional<std::string> metadata_value(const Metadata& metadata, const std::string& key);
void set_metadata(Metadata& metadata, const std::string& key, std::string value);

struct Spectrum1D {
  FrequencyGrid grid;
  std::vector<double> values;
  std::string axis_label = "omega - omega_j";
  Metadata metadata;
};

enum class Component { Total, GSB, ESA };

std::string to_string(Component component);
std::optional<Component> component_from_string(const std::string& text);

/// Matrix over (Omega3, Omega1): values[i3 * grid1.count() + i1].
template <typename T>
struct BasicSpectrum2D {
  FrequencyGrid grid1;  // Omega1, horizontal
  FrequencyGrid grid3;  // Omega3, vertical
  std::vector<T> values;
  Component component = Component::Total;
  Metadata metadata;

  T& at(std::size_t i3, std::size_t i1) { return values[i3 * grid1.count() + i1]; }
  const T& at(std::size_t i3, std::size_t i1) const { return values[i3 * grid1.count() + i1]; }
};

using Spectrum2D = BasicSpectrum2D<double>;
using ComplexSpectrum2D = BasicSpectrum2D<std::complex<double>>;

Spectrum2D real_part(const ComplexSpectrum2D& spectrum);

/// One resolved Liouville pathway of the two-color cross peak. Its complex
/// contribution at (Omega1, Omega3) is
///   amplitude / ((Omega1 - omega1_resonance + i gamma1) (Omega3 - omega3_resonance + i gamma3))
/// and enters the total with + for GSB and - for ESA.
struct PathwayTerm {
  Component component = Component::GSB;
  int outer = 0;         // g for GSB, f for ESA
  int excited1 = 0;      // e1: carries the Omega1 resonance
  int excited3 = 0;      // e3 for GSB, e1' for ESA
  double amplitude = 0.0;
  double omega1_resonance = 0.0;  // eV
  double omega3_resonance = 0.0;
  double gamma1 = 0.0;
  double gamma3 = 0.0;

  std::complex<double> evaluate(double omega1, double omega3) const;
};

/// Linear absorption on the relative axis x = omega - omega_j: Lorentzians of
/// height (weight * mu)^2 / Gamma and HWHM Gamma centred at omega_{e g0} - omega_j.
Spectrum1D xanes(const Manifold& manifold, const Pulse& pulse, const FrequencyGrid& grid);

/// Complex line-shape sum L(Omega) = sum_e w^2 mu^2 / (Omega - c_e + i Gamma_e) for the
/// GSB factors. `probe` selects the Omega3 form (c_e = omega_{e g0} - omega_j); otherwise
/// the Omega1 form (c_e = omega_j - omega_{e g0}).
std::vector<std::complex<double>> lineshape(const Manifold& manifold, const Pulse& pulse, const FrequencyGrid& grid,
                                            bool probe);

/// All nonzero pathways of the t2 = 0 two-color cross peak. Throws
/// ConfigurationError unless t2 == 0, omega1 == omega2 and omega3 == omega4.
std::vector<PathwayTerm> cross_peak_pathways(const Manifold& manifold, const PulseSequence& sequence);

struct CrossPeakComplex {
  ComplexSpectrum2D gsb;  // first double sum, before Re
  ComplexSpectrum2D esa;  // second double sum, before Re (enters with -)
};

CrossPeakComplex cross_peak_complex(const Manifold& manifold, const PulseSequence& sequence,
                                    const FrequencyGrid& grid1, const FrequencyGrid& grid3);

struct CrossPeakResult {
  Spectrum2D total;
  std::vector<PathwayTerm> pathways;
};

/// Re[GSB - ESA] on the grid, evaluated from the closed-form pathway sum.
CrossPeakResult cross_peak_direct(const Manifold& manifold, const PulseSequence& sequence,
                                  const FrequencyGrid& grid1, const FrequencyGrid& grid3);

struct GsbEsa {
  Spectrum2D gsb;  // Re[GSB]
  Spectrum2D esa;  // -Re[ESA]
};

GsbEsa decompose_gsb_esa(const Manifold& manifold, const PulseSequence& sequence, const FrequencyGrid& grid1,
                         const FrequencyGrid& grid3);

struct FftOptions {
  double t_max1 = 200.0;  // fs
  double t_max3 = 200.0;
  std::size_t n1 = 512;
  std::size_t n3 = 512;
  double t2 = 0.0;
  DecayConvention convention = DecayConvention::Interval;
};

/// Samples the complex signal on t = k * t_max / n and applies the double
/// transform (1/hbar^2) int int dt1 dt3 S e^{i Omega3 t3 / hbar} e^{i Omega1 t1 / hbar}
/// by trapezoidal summation, returning the spectrum on the centred conjugate
/// grids Omega_k = 2 pi hbar k / t_max, k = -n/2 .. n/2 - 1. Its real part is
/// directly comparable with cross_peak_direct. Sets "decay_warning" metadata
/// when exp(-Gamma_min t_max / hbar) >= 1e-6.
ComplexSpectrum2D fft_2d_spectrum(const Manifold& manifold, const PulseSequence& sequence, const FftOptions& options);

struct Peak {
  double omega1 = 0.0;
  double omega3 = 0.0;
  double height = 0.0;  // signed value at the peak cell
};

/// Local maxima of |value| at or above threshold_fraction * max|value|,
/// refined with independent 3-point quadratic fits along each axis. Sorted by
/// decreasing |height|.
std::vector<Peak> find_peaks(const Spectrum2D& spectrum, double threshold_fraction);

}  // namespace xcs
