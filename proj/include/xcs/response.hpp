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
#include <complex>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "xcs/manifold.hpp"
#include "xcs/pulse.hpp"

namespace xcs {

using complex = std::complex<double>;

enum class Sign { Plus, Minus };

/// One |to><from| term of an envelope-weighted exciton operator.
struct OperatorElement {
  int to_id = 0;
  int from_id = 0;
  std::size_t to = 0;  // state indices
  std::size_t from = 0;
  double amplitude = 0.0;  // envelope weight * dipole
  double frequency = 0.0;  // E_to - E_from, eV (negative for lowering elements)
  double gamma = 0.0;      // eV
};

/// B_j^+ raises the core-hole count by one along G->EA/EB->F, B_j^- lowers it.
/// Elements with zero amplitude are never stored.
struct ExcitonOperator {
  int pulse_index = 1;
  Sign sign = Sign::Plus;
  std::vector<OperatorElement> elements;
};

ExcitonOperator build_operator(const Pulse& pulse, Sign sign, const Manifold& manifold);

/// How dephasing enters the time-domain response.
///
/// Interval: every coherence |k><b| present between two interactions decays
/// as exp(-Gamma_kb * dt / hbar) over that interval (populations and pairs
/// without a stored Gamma do not decay). At t2 = 0 this reproduces the
/// frequency-domain cross-peak expression term by term.
///
/// PerOperator: each operator element decays as exp(-Gamma * tau / hbar)
/// evaluated at the absolute time tau at which its operator acts.
enum class DecayConvention { Interval, PerOperator };

std::string to_string(DecayConvention convention);

/// Third-order -k1+k2+k3 response of a validated manifold for a fixed pulse
/// sequence. Operators are built once; evaluation is a chain of sparse
/// applications onto |g0><g0|, so instances are safe to share across threads.
class ResponseEngine {
 public:
  ResponseEngine(const Manifold& manifold, const PulseSequence& sequence,
                 DecayConvention convention = DecayConvention::Interval);

  /// R(t3, t2, t1); times in fs, must be finite and >= 0.
  complex response(double t3, double t2, double t1) const;

  /// Im[R exp(i((w3+w2-w1) t3 + (w2-w1) t2 - w1 t1)/hbar)].
  double signal(double t3, double t2, double t1) const;

  /// -i R exp(i phi): the complex signal whose real part is signal(). Its
  /// double Fourier transform is the complex 2D spectrum.
  complex analytic_signal(double t3, double t2, double t1) const;

  /// analytic_signal on t1 = k*dt1 (k < n1), t3 = m*dt3 (m < n3), fixed t2.
  /// Row-major, rows indexed by t3.
  std::vector<complex> sample_analytic_grid(double dt1, std::size_t n1, double t2, double dt3,
                                            std::size_t n3) const;

  const ExcitonOperator& exciton_operator(int pulse_index, Sign sign) const;
  DecayConvention convention() const { return convention_; }

  /// Smallest Gamma over transitions carried by any of the eight operators.
  double min_active_gamma() const;

 private:
  struct Coherence {
    std::size_t ket;
    std::size_t bra;
    complex value;
  };
  struct Term;
  static const std::array<Term, 3> kTerms;

  std::vector<Coherence> pre_detection(const Term& term, double t1, double t2) const;
  void propagate(std::vector<Coherence>& rho, double dt) const;
  void apply(std::vector<Coherence>& rho, const ExcitonOperator& op, bool ket_side, double time) const;
  double coherence_gamma(std::size_t ket, std::size_t bra) const;
  complex carrier_phase(double t3, double t2, double t1) const;
  complex bracket(double t3, double t2, double t1) const;

  std::vector<double> energies_;
  std::size_t ground_ = 0;
  std::unordered_map<std::size_t, double> gamma_;  // key ket * n + bra, both orders stored
  std::array<double, 4> carriers_{};
  std::array<ExcitonOperator, 8> operators_;       // [2*(j-1) + (sign == Minus)]
  std::vector<std::vector<std::size_t>> det_by_from_;  // B4^- elements grouped by `from`
  DecayConvention convention_;
};

complex response_k1(const Manifold& manifold, const PulseSequence& sequence, double t3, double t2, double t1,
                    DecayConvention convention = DecayConvention::Interval);

double signal_time_domain(const Manifold& manifold, const PulseSequence& sequence, double t3, double t2,
                          double t1, DecayConvention convention = DecayConvention::Interval);

}  // namespace xcs
