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

#include "xcs/response.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "xcs/units.hpp"

namespace xcs {

namespace {

constexpr complex I{0.0, 1.0};

std::size_t op_slot(int pulse_index, Sign sign) {
  return static_cast<std::size_t>(2 * (pulse_index - 1) + (sign == Sign::Minus ? 1 : 0));
}

void check_time(double t, const char* name) {
  if (!std::isfinite(t) || t < 0.0) throw ConfigurationError(std::string("delay ") + name + " must be finite and >= 0");
}

// exp((-i*omega - rate) * t / hbar)
complex evolve(double omega, double rate, double t) {
  const double s = t / units::hbar_ev_fs;
  return std::exp(-rate * s) * complex(std::cos(omega * s), -std::sin(omega * s));
}

struct ClosingEntry {
  complex amplitude;
  double omega;
  double rate;
};

}  // namespace

// The three orderings of the -k1+k2+k3 response. Interactions 1..3 act at
// 0, t1 and t1+t2 on the bra or the ket; B4^- at t1+t2+t3 closes the trace.
//   +<B1- B3+ | B4- | B2+>   +<B1- B2+ | B4- | B3+>   -<B1- | B4- | B3+ B2+>
struct ResponseEngine::Term {
  double coefficient;
  std::array<bool, 3> ket_side;  // pulses 1..3
};

namespace {
constexpr std::array<Sign, 3> kSigns{Sign::Minus, Sign::Plus, Sign::Plus};
}  // namespace

const std::array<ResponseEngine::Term, 3> ResponseEngine::kTerms{{
    {1.0, {false, true, false}},
    {1.0, {false, false, true}},
    {-1.0, {false, true, true}},
}};

std::string to_string(DecayConvention convention) {
  return convention == DecayConvention::Interval ? "interval" : "per-operator";
}

ExcitonOperator build_operator(const Pulse& pulse, Sign sign, const Manifold& manifold) {
  ExcitonOperator op{pulse.index, sign, {}};
  for (const auto& [key, t] : manifold.transitions()) {
    if (t.dipole == 0.0) continue;
    const State& a = manifold.state(key.first);
    const State& b = manifold.state(key.second);
    if (!blocks_adjacent(a.block, b.block)) continue;
    const bool a_lower = block_order(a.block) < block_order(b.block);
    const State& lower = a_lower ? a : b;
    const State& upper = a_lower ? b : a;
    const State& to = sign == Sign::Plus ? upper : lower;
    const State& from = sign == Sign::Plus ? lower : upper;
    const double omega = to.energy - from.energy;
    const double detuning = sign == Sign::Plus ? omega - pulse.carrier : omega + pulse.carrier;
    const double amplitude = envelope_weight(pulse, detuning) * t.dipole;
    if (amplitude == 0.0) continue;
    op.elements.push_back({to.id, from.id, manifold.index_of(to.id), manifold.index_of(from.id), amplitude, omega,
                           t.gamma});
  }
  return op;
}

ResponseEngine::ResponseEngine(const Manifold& manifold, const PulseSequence& sequence, DecayConvention convention)
    : convention_(convention) {
  require_valid(manifold);
  const std::size_t n = manifold.size();
  energies_.reserve(n);
  for (const auto& s : manifold.states()) energies_.push_back(s.energy);
  ground_ = manifold.index_of(*manifold.ground_state());

  for (const auto& [key, t] : manifold.transitions()) {
    const std::size_t i = manifold.index_of(key.first);
    const std::size_t j = manifold.index_of(key.second);
    gamma_[i * n + j] = t.gamma;
    gamma_[j * n + i] = t.gamma;
  }

  for (int j = 1; j <= 4; ++j) {
    const Pulse& p = sequence.pulse(j);
    if (p.index != j) throw ConfigurationError("pulse sequence must hold pulses 1..4 in order");
    carriers_[static_cast<std::size_t>(j - 1)] = p.carrier;
    for (Sign s : {Sign::Plus, Sign::Minus}) operators_[op_slot(j, s)] = build_operator(p, s, manifold);
  }

  det_by_from_.assign(n, {});
  const auto& det = operators_[op_slot(4, Sign::Minus)].elements;
  for (std::size_t e = 0; e < det.size(); ++e) det_by_from_[det[e].from].push_back(e);
}

const ExcitonOperator& ResponseEngine::exciton_operator(int pulse_index, Sign sign) const {
  if (pulse_index < 1 || pulse_index > 4) throw ConfigurationError("pulse index must be in 1..4");
  return operators_[op_slot(pulse_index, sign)];
}

double ResponseEngine::min_active_gamma() const {
  double g = std::numeric_limits<double>::infinity();
  for (const auto& op : operators_)
    for (const auto& e : op.elements) g = std::min(g, e.gamma);
  return g;
}

double ResponseEngine::coherence_gamma(std::size_t ket, std::size_t bra) const {
  if (ket == bra) return 0.0;
  auto it = gamma_.find(ket * energies_.size() + bra);
  return it == gamma_.end() ? 0.0 : it->second;
}

void ResponseEngine::propagate(std::vector<Coherence>& rho, double dt) const {
  if (dt == 0.0) return;
  for (auto& c : rho) {
    const double omega = energies_[c.ket] - energies_[c.bra];
    const double rate = convention_ == DecayConvention::Interval ? coherence_gamma(c.ket, c.bra) : 0.0;
    c.value *= evolve(omega, rate, dt);
  }
}

void ResponseEngine::apply(std::vector<Coherence>& rho, const ExcitonOperator& op, bool ket_side,
                           double time) const {
  std::vector<Coherence> next;
  for (const auto& c : rho) {
    for (const auto& e : op.elements) {
      // ket: O|k><b| keeps elements leaving k; bra: |k><b|O keeps elements arriving at b.
      if (ket_side ? e.from != c.ket : e.to != c.bra) continue;
      double a = e.amplitude;
      if (convention_ == DecayConvention::PerOperator) a *= std::exp(-e.gamma * time / units::hbar_ev_fs);
      if (ket_side)
        next.push_back({e.to, c.bra, c.value * a});
      else
        next.push_back({c.ket, e.from, c.value * a});
    }
  }
  std::stable_sort(next.begin(), next.end(), [](const Coherence& x, const Coherence& y) {
    return x.ket != y.ket ? x.ket < y.ket : x.bra < y.bra;
  });
  rho.clear();
  for (const auto& c : next) {
    if (!rho.empty() && rho.back().ket == c.ket && rho.back().bra == c.bra)
      rho.back().value += c.value;
    else
      rho.push_back(c);
  }
}

std::vector<ResponseEngine::Coherence> ResponseEngine::pre_detection(const Term& term, double t1, double t2) const {
  std::vector<Coherence> rho{{ground_, ground_, complex(1.0, 0.0)}};
  const std::array<double, 3> times{0.0, t1, t1 + t2};
  double cursor = 0.0;
  for (int j = 1; j <= 3; ++j) {
    const auto k = static_cast<std::size_t>(j - 1);
    propagate(rho, times[k] - cursor);
    cursor = times[k];
    apply(rho, operators_[op_slot(j, kSigns[k])], term.ket_side[k], times[k]);
    if (rho.empty()) break;
  }
  propagate(rho, t1 + t2 - cursor);
  return rho;
}

namespace {

std::vector<ClosingEntry> closing_entries(const std::vector<double>& energies,
                                          const std::vector<std::vector<std::size_t>>& det_by_from,
                                          const std::vector<OperatorElement>& det, const auto& rho,
                                          const auto& coherence_gamma, bool per_operator, double t12) {
  std::vector<ClosingEntry> out;
  for (const auto& c : rho) {
    const double omega = energies[c.ket] - energies[c.bra];
    for (std::size_t e : det_by_from[c.ket]) {
      const auto& el = det[e];
      if (el.to != c.bra) continue;
      if (per_operator) {
        const complex amp = c.value * el.amplitude * std::exp(-el.gamma * t12 / units::hbar_ev_fs);
        out.push_back({amp, omega, el.gamma});
      } else {
        out.push_back({c.value * el.amplitude, omega, coherence_gamma(c.ket, c.bra)});
      }
    }
  }
  return out;
}

complex sum_closing(const std::vector<ClosingEntry>& entries, double t3) {
  complex sum{0.0, 0.0};
  for (const auto& e : entries) sum += e.amplitude * evolve(e.omega, e.rate, t3);
  return sum;
}

}  // namespace

// T1 + T2 - T3
complex ResponseEngine::bracket(double t3, double t2, double t1) const {
  complex sum{0.0, 0.0};
  const auto& det = operators_[op_slot(4, Sign::Minus)].elements;
  const auto gamma = [this](std::size_t k, std::size_t b) { return coherence_gamma(k, b); };
  for (const auto& term : kTerms) {
    const auto entries = closing_entries(energies_, det_by_from_, det, pre_detection(term, t1, t2), gamma,
                                         convention_ == DecayConvention::PerOperator, t1 + t2);
    sum += term.coefficient * sum_closing(entries, t3);
  }
  return sum;
}

complex ResponseEngine::carrier_phase(double t3, double t2, double t1) const {
  const double w1 = carriers_[0], w2 = carriers_[1], w3 = carriers_[2];
  const double phi = ((w3 + w2 - w1) * t3 + (w2 - w1) * t2 - w1 * t1) / units::hbar_ev_fs;
  return {std::cos(phi), std::sin(phi)};
}

complex ResponseEngine::response(double t3, double t2, double t1) const {
  check_time(t1, "t1");
  check_time(t2, "t2");
  check_time(t3, "t3");
  // i^3 = -i
  return -I * bracket(t3, t2, t1);
}

double ResponseEngine::signal(double t3, double t2, double t1) const {
  return (response(t3, t2, t1) * carrier_phase(t3, t2, t1)).imag();
}

complex ResponseEngine::analytic_signal(double t3, double t2, double t1) const {
  return -I * response(t3, t2, t1) * carrier_phase(t3, t2, t1);
}

std::vector<complex> ResponseEngine::sample_analytic_grid(double dt1, std::size_t n1, double t2, double dt3,
                                                          std::size_t n3) const {
  check_time(t2, "t2");
  if (!(dt1 > 0.0) || !(dt3 > 0.0)) throw ConfigurationError("time steps must be > 0");
  std::vector<complex> out(n1 * n3);
  const auto& det = operators_[op_slot(4, Sign::Minus)].elements;
  const auto gamma = [this](std::size_t k, std::size_t b) { return coherence_gamma(k, b); };
  const bool per_operator = convention_ == DecayConvention::PerOperator;
  const auto columns = static_cast<long long>(n1);

#pragma omp parallel for schedule(static)
  for (long long col = 0; col < columns; ++col) {
    const double t1 = static_cast<double>(col) * dt1;
    std::array<std::vector<ClosingEntry>, 3> entries;
    for (std::size_t k = 0; k < kTerms.size(); ++k)
      entries[k] = closing_entries(energies_, det_by_from_, det, pre_detection(kTerms[k], t1, t2), gamma,
                                   per_operator, t1 + t2);
    for (std::size_t m = 0; m < n3; ++m) {
      const double t3 = static_cast<double>(m) * dt3;
      complex sum{0.0, 0.0};
      for (std::size_t k = 0; k < kTerms.size(); ++k) sum += kTerms[k].coefficient * sum_closing(entries[k], t3);
      // -i * (-i) * bracket * phase
      out[m * n1 + static_cast<std::size_t>(col)] = -sum * carrier_phase(t3, t2, t1);
    }
  }
  return out;
}

complex response_k1(const Manifold& manifold, const PulseSequence& sequence, double t3, double t2, double t1,
                    DecayConvention convention) {
  return ResponseEngine(manifold, sequence, convention).response(t3, t2, t1);
}

double signal_time_domain(const Manifold& manifold, const PulseSequence& sequence, double t3, double t2, double t1,
                          DecayConvention convention) {
  return ResponseEngine(manifold, sequence, convention).signal(t3, t2, t1);
}

}  // namespace xcs
