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

#include <algorithm>
#include <cmath>

#include "xcs/spectra.hpp"

namespace xcs {

namespace {

// Vertex offset of the parabola through (-1, a), (0, b), (1, c), in [-0.5, 0.5].
double parabola_offset(double a, double b, double c) {
  const double curvature = a - 2.0 * b + c;
  if (!(curvature < 0.0)) return 0.0;
  return std::clamp(0.5 * (a - c) / curvature, -0.5, 0.5);
}

}  // namespace

std::vector<Peak> find_peaks(const Spectrum2D& spectrum, double threshold_fraction) {
  const std::size_t n1 = spectrum.grid1.count(), n3 = spectrum.grid3.count();
  if (spectrum.values.empty() || spectrum.values.size() != n1 * n3) return {};

  double global = 0.0;
  for (double v : spectrum.values) global = std::max(global, std::abs(v));
  if (global == 0.0) return {};
  const double threshold = threshold_fraction * global;
  const auto mag = [&](std::size_t i3, std::size_t i1) { return std::abs(spectrum.at(i3, i1)); };

  std::vector<Peak> peaks;
  for (std::size_t i3 = 0; i3 < n3; ++i3) {
    for (std::size_t i1 = 0; i1 < n1; ++i1) {
      const double a = mag(i3, i1);
      if (a == 0.0 || a < threshold) continue;
      bool is_max = true;
      for (int d3 = -1; d3 <= 1 && is_max; ++d3) {
        for (int d1 = -1; d1 <= 1; ++d1) {
          if (d3 == 0 && d1 == 0) continue;
          const auto j3 = static_cast<long long>(i3) + d3;
          const auto j1 = static_cast<long long>(i1) + d1;
          if (j3 < 0 || j1 < 0 || j3 >= static_cast<long long>(n3) || j1 >= static_cast<long long>(n1)) continue;
          const double b = mag(static_cast<std::size_t>(j3), static_cast<std::size_t>(j1));
          // Plateaus: only the first cell in scan order counts.
          const bool earlier = d3 < 0 || (d3 == 0 && d1 < 0);
          if (b > a || (earlier && b == a)) {
            is_max = false;
            break;
          }
        }
      }
      if (!is_max) continue;

      double off1 = 0.0, off3 = 0.0;
      if (i1 > 0 && i1 + 1 < n1) off1 = parabola_offset(mag(i3, i1 - 1), a, mag(i3, i1 + 1));
      if (i3 > 0 && i3 + 1 < n3) off3 = parabola_offset(mag(i3 - 1, i1), a, mag(i3 + 1, i1));
      peaks.push_back({spectrum.grid1[i1] + off1 * spectrum.grid1.step(),
                       spectrum.grid3[i3] + off3 * spectrum.grid3.step(), spectrum.at(i3, i1)});
    }
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [](const Peak& x, const Peak& y) { return std::abs(x.height) > std::abs(y.height); });
  return peaks;
}

}  // namespace xcs
