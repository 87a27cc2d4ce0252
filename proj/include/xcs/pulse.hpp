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

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "xcs/manifold.hpp"

namespace xcs {

enum class EnvelopeKind { Rectangular, Gaussian };

std::string to_string(EnvelopeKind kind);

/// Real, even spectral envelope of a transform-limited pulse.
///
/// For Rectangular, `width` is the half-width of the flat window; for
/// Gaussian it is the FWHM of the amplitude profile.
class Envelope {
 public:
  /// Default: rectangular, half-width 5 eV (a 10 eV band).
  Envelope() = default;

  static Envelope rectangular(double half_width, double amplitude = 1.0);
  static Envelope gaussian(double fwhm, double amplitude = 1.0);

  EnvelopeKind kind() const { return kind_; }
  double width() const { return width_; }
  double amplitude() const { return amplitude_; }

  double operator()(double detuning) const;

  /// "rectangular(half_width=5)" style summary for output headers.
  std::string describe() const;

  bool operator==(const Envelope&) const = default;

 private:
  Envelope(EnvelopeKind kind, double width, double amplitude)
      : kind_(kind), width_(width), amplitude_(amplitude) {}

  EnvelopeKind kind_ = EnvelopeKind::Rectangular;
  double width_ = 5.0;
  double amplitude_ = 1.0;
};

struct Pulse {
  double carrier = 0.0;  // eV
  Envelope envelope;
  int index = 1;  // 1..4

  bool operator==(const Pulse&) const = default;
};

/// Throws ConfigurationError for carrier <= 0 or index outside 1..4.
Pulse make_pulse(int index, double carrier, Envelope envelope = {});

/// Four well-separated pulses for the -k1+k2+k3 experiment, plus nominal delays.
struct PulseSequence {
  std::array<Pulse, 4> pulses;
  double t1 = 0.0;  // fs
  double t2 = 0.0;
  double t3 = 0.0;

  const Pulse& pulse(int index) const { return pulses.at(static_cast<std::size_t>(index - 1)); }

  /// omega1 = omega2 = carrier_a, omega3 = omega4 = carrier_b, all sharing one envelope.
  static PulseSequence two_color(double carrier_a, double carrier_b, Envelope envelope = {});
  /// All four carriers equal.
  static PulseSequence one_color(double carrier, Envelope envelope = {});
};

/// Envelope value at the given detuning (eV).
double envelope_weight(const Pulse& pulse, double detuning);

/// Stored transitions from a `from`-block state to a `to`-block state whose
/// detuning (E_to - E_from) - carrier lies inside the pulse envelope, as
/// (from_id, to_id) pairs in table order.
std::vector<std::pair<int, int>> selects_block(const Pulse& pulse, const Manifold& manifold, Block from,
                                               Block to);

}  // namespace xcs
