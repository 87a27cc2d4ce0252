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

#include "xcs/pulse.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace xcs {

std::string to_string(EnvelopeKind kind) {
  return kind == EnvelopeKind::Rectangular ? "rectangular" : "gaussian";
}

Envelope Envelope::rectangular(double half_width, double amplitude) {
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw ConfigurationError("rectangular envelope needs half_width > 0");
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude))
    throw ConfigurationError("envelope amplitude must be finite and >= 0");
  return Envelope(EnvelopeKind::Rectangular, half_width, amplitude);
}

Envelope Envelope::gaussian(double fwhm, double amplitude) {
  if (!(fwhm > 0.0) || !std::isfinite(fwhm)) throw ConfigurationError("gaussian envelope needs fwhm > 0");
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude))
    throw ConfigurationError("envelope amplitude must be finite and >= 0");
  return Envelope(EnvelopeKind::Gaussian, fwhm, amplitude);
}

double Envelope::operator()(double detuning) const {
  if (kind_ == EnvelopeKind::Rectangular) return std::abs(detuning) <= width_ ? amplitude_ : 0.0;
  const double x = detuning / width_;
  return amplitude_ * std::exp(-4.0 * std::numbers::ln2 * x * x);
}

std::string Envelope::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << to_string(kind_) << (kind_ == EnvelopeKind::Rectangular ? "(half_width=" : "(fwhm=") << width_
     << ", amplitude=" << amplitude_ << ")";
  return os.str();
}

Pulse make_pulse(int index, double carrier, Envelope envelope) {
  if (index < 1 || index > 4) throw ConfigurationError("pulse index must be in 1..4");
  if (!(carrier > 0.0) || !std::isfinite(carrier)) throw ConfigurationError("pulse carrier must be > 0");
  return Pulse{carrier, envelope, index};
}

PulseSequence PulseSequence::two_color(double carrier_a, double carrier_b, Envelope envelope) {
  PulseSequence seq;
  seq.pulses = {make_pulse(1, carrier_a, envelope), make_pulse(2, carrier_a, envelope),
                make_pulse(3, carrier_b, envelope), make_pulse(4, carrier_b, envelope)};
  return seq;
}

PulseSequence PulseSequence::one_color(double carrier, Envelope envelope) {
  return two_color(carrier, carrier, envelope);
}

double envelope_weight(const Pulse& pulse, double detuning) { return pulse.envelope(detuning); }

std::vector<std::pair<int, int>> selects_block(const Pulse& pulse, const Manifold& manifold, Block from,
                                               Block to) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [key, t] : manifold.transitions()) {
    const auto [i, j] = key;
    if (!manifold.contains(i) || !manifold.contains(j)) continue;
    const State& a = manifold.state(i);
    const State& b = manifold.state(j);
    int lo = -1, hi = -1;
    if (a.block == from && b.block == to) {
      lo = i, hi = j;
    } else if (b.block == from && a.block == to) {
      lo = j, hi = i;
    } else {
      continue;
    }
    const double detuning = manifold.transition_frequency(hi, lo) - pulse.carrier;
    if (envelope_weight(pulse, detuning) != 0.0) out.emplace_back(lo, hi);
  }
  return out;
}

}  // namespace xcs
