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

#include <fftw3.h>

#include <cmath>
#include <memory>
#include <mutex>

#include "xcs/io.hpp"
#include "xcs/spectra.hpp"
#include "xcs/units.hpp"
#include "xcs/version.hpp"

namespace xcs {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::string fmt(double x) { return io::format_number(x); }

// FFTW planning is not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct PlanDeleter {
  void operator()(fftw_plan_s* p) const {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(p);
  }
};

// In-place unnormalised transform with the e^{+i k n 2pi/N} kernel.
void fft2d_backward(std::vector<std::complex<double>>& data, std::size_t rows, std::size_t cols) {
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  std::unique_ptr<fftw_plan_s, PlanDeleter> plan;
  {
    std::lock_guard lock(planner_mutex());
    plan.reset(fftw_plan_dft_2d(static_cast<int>(rows), static_cast<int>(cols), buf, buf, FFTW_BACKWARD,
                                FFTW_ESTIMATE));
  }
  if (!plan) throw ComputationError("FFTW failed to create a plan");
  fftw_execute(plan.get());
}

}  // namespace

ComplexSpectrum2D fft_2d_spectrum(const Manifold& manifold, const PulseSequence& sequence,
                                  const FftOptions& options) {
  const std::size_t n1 = options.n1, n3 = options.n3;
  if (!is_power_of_two(n1) || !is_power_of_two(n3) || n1 < 64 || n3 < 64)
    throw ConfigurationError("FFT sizes n1, n3 must be powers of two >= 64");
  if (!(options.t_max1 > 0.0) || !(options.t_max3 > 0.0) || !std::isfinite(options.t_max1) ||
      !std::isfinite(options.t_max3))
    throw ConfigurationError("t_max must be finite and > 0");

  const ResponseEngine engine(manifold, sequence, options.convention);
  const double dt1 = options.t_max1 / static_cast<double>(n1);
  const double dt3 = options.t_max3 / static_cast<double>(n3);
  auto samples = engine.sample_analytic_grid(dt1, n1, options.t2, dt3, n3);

  for (const auto& s : samples)
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
      throw ComputationError("non-finite sample in the time-domain signal");

  // Trapezoidal end correction at t = 0; the tail at t_max is taken as decayed.
  for (std::size_t i1 = 0; i1 < n1; ++i1) samples[i1] *= 0.5;
  for (std::size_t i3 = 0; i3 < n3; ++i3) samples[i3 * n1] *= 0.5;

  fft2d_backward(samples, n3, n1);

  const double hbar = units::hbar_ev_fs;
  const double scale = dt1 * dt3 / (hbar * hbar);
  const double step1 = 2.0 * units::pi * hbar / options.t_max1;
  const double step3 = 2.0 * units::pi * hbar / options.t_max3;

  ComplexSpectrum2D out;
  out.grid1 = FrequencyGrid(-static_cast<double>(n1 / 2) * step1, step1, n1);
  out.grid3 = FrequencyGrid(-static_cast<double>(n3 / 2) * step3, step3, n3);
  out.values.resize(n1 * n3);
  for (std::size_t c3 = 0; c3 < n3; ++c3) {
    const std::size_t s3 = (c3 + n3 / 2) % n3;
    for (std::size_t c1 = 0; c1 < n1; ++c1) {
      const std::size_t s1 = (c1 + n1 / 2) % n1;
      out.values[c3 * n1 + c1] = samples[s3 * n1 + s1] * scale;
    }
  }

  const double gamma_min = engine.min_active_gamma();
  const double t_short = std::min(options.t_max1, options.t_max3);
  const double residual = std::isfinite(gamma_min) ? std::exp(-gamma_min * t_short / hbar) : 0.0;

  Metadata& md = out.metadata;
  set_metadata(md, "software", std::string("xcs ") + version_string);
  set_metadata(md, "hbar_eV_fs", fmt(hbar));
  set_metadata(md, "kind", "xcs2d");
  set_metadata(md, "route", "fft");
  set_metadata(md, "component", "total");
  set_metadata(md, "decay_convention", to_string(options.convention));
  set_metadata(md, "t2_fs", fmt(options.t2));
  set_metadata(md, "t_max1_fs", fmt(options.t_max1));
  set_metadata(md, "t_max3_fs", fmt(options.t_max3));
  set_metadata(md, "n1", std::to_string(n1));
  set_metadata(md, "n3", std::to_string(n3));
  for (int j = 1; j <= 4; ++j) {
    set_metadata(md, "carrier" + std::to_string(j) + "_eV", fmt(sequence.pulse(j).carrier));
    set_metadata(md, "envelope" + std::to_string(j), sequence.pulse(j).envelope.describe());
  }
  set_metadata(md, "omega1_start_eV", fmt(out.grid1.start()));
  set_metadata(md, "omega1_step_eV", fmt(out.grid1.step()));
  set_metadata(md, "omega1_count", std::to_string(n1));
  set_metadata(md, "omega3_start_eV", fmt(out.grid3.start()));
  set_metadata(md, "omega3_step_eV", fmt(out.grid3.step()));
  set_metadata(md, "omega3_count", std::to_string(n3));
  set_metadata(md, "rows", "omega3 (eV)");
  set_metadata(md, "columns", "omega1 (eV)");
  set_metadata(md, "decay_residual", fmt(residual));
  set_metadata(md, "decay_warning", residual >= 1e-6 ? "true" : "false");
  return out;
}

}  // namespace xcs
