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

#include "xcs/spectra.hpp"

#include <cmath>
#include <map>

#include "xcs/io.hpp"
#include "xcs/units.hpp"
#include "xcs/version.hpp"

namespace xcs {

namespace {

std::string fmt(double x) { return io::format_number(x); }

struct Neighbor {
  int id;
  double dipole;
  double gamma;
};

// Nonzero-dipole neighbours of every state, in transition-table order.
std::map<int, std::vector<Neighbor>> dipole_graph(const Manifold& manifold) {
  std::map<int, std::vector<Neighbor>> graph;
  for (const auto& [key, t] : manifold.transitions()) {
    if (t.dipole == 0.0) continue;
    graph[key.first].push_back({key.second, t.dipole, t.gamma});
    graph[key.second].push_back({key.first, t.dipole, t.gamma});
  }
  return graph;
}

const Neighbor* find_neighbor(const std::vector<Neighbor>& list, int id) {
  for (const auto& n : list)
    if (n.id == id) return &n;
  return nullptr;
}

bool is_single_core(Block b) { return b == Block::EA || b == Block::EB; }

void check_two_color(const PulseSequence& seq) {
  if (seq.t2 != 0.0)
    throw ConfigurationError(
        "the closed-form cross peak is defined at t2 = 0 only; use the time-domain FFT route for t2 > 0");
  if (seq.pulse(1).carrier != seq.pulse(2).carrier || seq.pulse(3).carrier != seq.pulse(4).carrier)
    throw ConfigurationError("the cross peak needs omega1 == omega2 and omega3 == omega4");
}

void describe_sequence(Metadata& md, const PulseSequence& seq) {
  for (int j = 1; j <= 4; ++j) {
    set_metadata(md, "carrier" + std::to_string(j) + "_eV", fmt(seq.pulse(j).carrier));
    set_metadata(md, "envelope" + std::to_string(j), seq.pulse(j).envelope.describe());
  }
}

void describe_grid(Metadata& md, const std::string& name, const FrequencyGrid& g) {
  set_metadata(md, name + "_start_eV", fmt(g.start()));
  set_metadata(md, name + "_step_eV", fmt(g.step()));
  set_metadata(md, name + "_count", std::to_string(g.count()));
}

Metadata base_metadata() {
  Metadata md;
  set_metadata(md, "software", std::string("xcs ") + version_string);
  set_metadata(md, "hbar_eV_fs", fmt(units::hbar_ev_fs));
  return md;
}

}  // namespace

FrequencyGrid::FrequencyGrid(double start, double step, std::size_t count)
    : start_(start), step_(step), count_(count) {
  if (!std::isfinite(start) || !std::isfinite(step) || !(step > 0.0))
    throw ConfigurationError("frequency grid needs a finite start and step > 0");
  if (count < 2) throw ConfigurationError("frequency grid needs count > 1");
}

std::optional<std::string> metadata_value(const Metadata& metadata, const std::string& key) {
  for (const auto& [k, v] : metadata)
    if (k == key) return v;
  return std::nullopt;
}

void set_metadata(Metadata& metadata, const std::string& key, std::string value) {
  for (auto& [k, v] : metadata) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  metadata.emplace_back(key, std::move(value));
}

std::string to_string(Component component) {
  switch (component) {
    case Component::Total: return "total";
    case Component::GSB: return "gsb";
    case Component::ESA: return "esa";
  }
  return "?";
}

std::optional<Component> component_from_string(const std::string& text) {
  if (text == "total") return Component::Total;
  if (text == "gsb") return Component::GSB;
  if (text == "esa") return Component::ESA;
  return std::nullopt;
}

Spectrum2D real_part(const ComplexSpectrum2D& spectrum) {
  Spectrum2D out{spectrum.grid1, spectrum.grid3, {}, spectrum.component, spectrum.metadata};
  out.values.reserve(spectrum.values.size());
  for (const auto& v : spectrum.values) out.values.push_back(v.real());
  set_metadata(out.metadata, "part", "real");
  return out;
}

std::complex<double> PathwayTerm::evaluate(double omega1, double omega3) const {
  const std::complex<double> d1(omega1 - omega1_resonance, gamma1);
  const std::complex<double> d3(omega3 - omega3_resonance, gamma3);
  return amplitude / (d1 * d3);
}

Spectrum1D xanes(const Manifold& manifold, const Pulse& pulse, const FrequencyGrid& grid) {
  require_valid(manifold);
  const int g0 = *manifold.ground_state();
  const auto graph = dipole_graph(manifold);

  struct Line {
    double strength, center, gamma;
  };
  std::vector<Line> lines;
  if (auto it = graph.find(g0); it != graph.end()) {
    for (const auto& n : it->second) {
      if (!is_single_core(manifold.state(n.id).block)) continue;
      const double w = manifold.transition_frequency(n.id, g0);
      const double weight = envelope_weight(pulse, w - pulse.carrier);
      if (weight == 0.0) continue;
      lines.push_back({weight * weight * n.dipole * n.dipole, w - pulse.carrier, n.gamma});
    }
  }

  Spectrum1D out;
  out.grid = grid;
  out.values.assign(grid.count(), 0.0);
  for (std::size_t k = 0; k < grid.count(); ++k) {
    const double x = grid[k];
    double sum = 0.0;
    for (const auto& l : lines) {
      const double d = x - l.center;
      sum += l.strength * l.gamma / (d * d + l.gamma * l.gamma);
    }
    out.values[k] = sum;
  }
  out.metadata = base_metadata();
  set_metadata(out.metadata, "kind", "xanes");
  set_metadata(out.metadata, "carrier_eV", fmt(pulse.carrier));
  set_metadata(out.metadata, "envelope", pulse.envelope.describe());
  describe_grid(out.metadata, "axis", grid);
  set_metadata(out.metadata, "axis", "omega - omega_j (eV)");
  return out;
}

std::vector<std::complex<double>> lineshape(const Manifold& manifold, const Pulse& pulse, const FrequencyGrid& grid,
                                            bool probe) {
  require_valid(manifold);
  const int g0 = *manifold.ground_state();
  const auto graph = dipole_graph(manifold);
  std::vector<std::complex<double>> out(grid.count());
  auto it = graph.find(g0);
  if (it == graph.end()) return out;
  for (const auto& n : it->second) {
    if (!is_single_core(manifold.state(n.id).block)) continue;
    const double w = manifold.transition_frequency(n.id, g0);
    const double weight = envelope_weight(pulse, w - pulse.carrier);
    if (weight == 0.0) continue;
    const double strength = weight * weight * n.dipole * n.dipole;
    const double center = probe ? w - pulse.carrier : pulse.carrier - w;
    for (std::size_t k = 0; k < grid.count(); ++k)
      out[k] += strength / std::complex<double>(grid[k] - center, n.gamma);
  }
  return out;
}

std::vector<PathwayTerm> cross_peak_pathways(const Manifold& manifold, const PulseSequence& seq) {
  require_valid(manifold);
  check_two_color(seq);
  const int g0 = *manifold.ground_state();
  const auto graph = dipole_graph(manifold);
  const auto neighbors = [&graph](int id) -> const std::vector<Neighbor>& {
    static const std::vector<Neighbor> none;
    auto it = graph.find(id);
    return it == graph.end() ? none : it->second;
  };
  const auto w = [&manifold](int a, int b) { return manifold.transition_frequency(a, b); };
  const auto eps = [&seq](int j, double detuning) { return envelope_weight(seq.pulse(j), detuning); };
  const double w1 = seq.pulse(1).carrier, w2 = seq.pulse(2).carrier;
  const double w3 = seq.pulse(3).carrier, w4 = seq.pulse(4).carrier;
  const auto& from_ground = neighbors(g0);

  std::vector<PathwayTerm> out;

  // Ground-state bleaching: sum_{g,e1} [...]/(Omega1 ...) * sum_{e3} [...]/(Omega3 ...)
  for (const auto& g : manifold.states()) {
    if (g.block != Block::G) continue;
    const auto& from_g = neighbors(g.id);
    for (const auto& e1g0 : from_ground) {
      if (!is_single_core(manifold.state(e1g0.id).block)) continue;
      const Neighbor* e1g = find_neighbor(from_g, e1g0.id);
      if (!e1g) continue;
      const double pump = eps(1, w(e1g0.id, g0) - w1) * eps(2, w(e1g0.id, g.id) - w2) * e1g0.dipole * e1g->dipole;
      if (pump == 0.0) continue;
      for (const auto& e3g0 : from_ground) {
        if (!is_single_core(manifold.state(e3g0.id).block)) continue;
        const Neighbor* e3g = find_neighbor(from_g, e3g0.id);
        if (!e3g) continue;
        const double probe =
            eps(4, w(e3g0.id, g.id) - w4) * eps(3, w(e3g0.id, g0) - w3) * e3g->dipole * e3g0.dipole;
        if (probe == 0.0) continue;
        out.push_back({Component::GSB, g.id, e1g0.id, e3g0.id, pump * probe, w1 - w(e1g0.id, g0),
                       w(e3g0.id, g.id) - w3, e1g0.gamma, e3g->gamma});
      }
    }
  }

  // Excited-state absorption: sum_{e1,f} [...]/(Omega1 ...) * sum_{e1'} [...]/(Omega3 ...)
  for (const auto& e1g0 : from_ground) {
    if (!is_single_core(manifold.state(e1g0.id).block)) continue;
    for (const auto& fe1 : neighbors(e1g0.id)) {
      if (manifold.state(fe1.id).block != Block::F) continue;
      const int f = fe1.id;
      const double first =
          eps(1, w(e1g0.id, g0) - w1) * eps(4, w(f, e1g0.id) - w4) * e1g0.dipole * fe1.dipole;
      if (first == 0.0) continue;
      for (const auto& fe1p : neighbors(f)) {
        if (!is_single_core(manifold.state(fe1p.id).block)) continue;
        const Neighbor* e1pg0 = find_neighbor(from_ground, fe1p.id);
        if (!e1pg0) continue;
        const double second =
            eps(3, w(f, fe1p.id) - w3) * eps(2, w(fe1p.id, g0) - w2) * fe1p.dipole * e1pg0->dipole;
        if (second == 0.0) continue;
        out.push_back({Component::ESA, f, e1g0.id, fe1p.id, first * second, w1 - w(e1g0.id, g0), w(f, e1g0.id) - w3,
                       e1g0.gamma, fe1.gamma});
      }
    }
  }
  return out;
}

namespace {

// Evaluates the GSB and ESA pathway sums separately on the grid. Per-cell
// summation order is the pathway order, independent of scheduling.
CrossPeakComplex evaluate_pathways(const std::vector<PathwayTerm>& terms, const FrequencyGrid& grid1,
                                   const FrequencyGrid& grid3) {
  const std::size_t n1 = grid1.count(), n3 = grid3.count();
  CrossPeakComplex out;
  out.gsb = {grid1, grid3, std::vector<std::complex<double>>(n1 * n3), Component::GSB, {}};
  out.esa = {grid1, grid3, std::vector<std::complex<double>>(n1 * n3), Component::ESA, {}};

  std::vector<std::complex<double>> col(terms.size() * n1), row(terms.size() * n3);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    for (std::size_t i1 = 0; i1 < n1; ++i1)
      col[t * n1 + i1] = 1.0 / std::complex<double>(grid1[i1] - terms[t].omega1_resonance, terms[t].gamma1);
    for (std::size_t i3 = 0; i3 < n3; ++i3)
      row[t * n3 + i3] = 1.0 / std::complex<double>(grid3[i3] - terms[t].omega3_resonance, terms[t].gamma3);
  }

  const auto rows = static_cast<long long>(n3);
#pragma omp parallel for schedule(static)
  for (long long r = 0; r < rows; ++r) {
    const auto i3 = static_cast<std::size_t>(r);
    for (std::size_t i1 = 0; i1 < n1; ++i1) {
      std::complex<double> gsb{0.0, 0.0}, esa{0.0, 0.0};
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const auto v = terms[t].amplitude * col[t * n1 + i1] * row[t * n3 + i3];
        (terms[t].component == Component::GSB ? gsb : esa) += v;
      }
      out.gsb.values[i3 * n1 + i1] = gsb;
      out.esa.values[i3 * n1 + i1] = esa;
    }
  }
  return out;
}

Metadata cross_peak_metadata(const PulseSequence& seq, const FrequencyGrid& grid1, const FrequencyGrid& grid3,
                             Component component) {
  Metadata md = base_metadata();
  set_metadata(md, "kind", "xcs2d");
  set_metadata(md, "route", "direct");
  set_metadata(md, "component", to_string(component));
  set_metadata(md, "t2_fs", "0");
  describe_sequence(md, seq);
  describe_grid(md, "omega1", grid1);
  describe_grid(md, "omega3", grid3);
  set_metadata(md, "rows", "omega3 (eV)");
  set_metadata(md, "columns", "omega1 (eV)");
  return md;
}

}  // namespace

CrossPeakComplex cross_peak_complex(const Manifold& manifold, const PulseSequence& sequence,
                                    const FrequencyGrid& grid1, const FrequencyGrid& grid3) {
  return evaluate_pathways(cross_peak_pathways(manifold, sequence), grid1, grid3);
}

CrossPeakResult cross_peak_direct(const Manifold& manifold, const PulseSequence& sequence,
                                  const FrequencyGrid& grid1, const FrequencyGrid& grid3) {
  CrossPeakResult result;
  result.pathways = cross_peak_pathways(manifold, sequence);
  const auto parts = evaluate_pathways(result.pathways, grid1, grid3);
  result.total = {grid1, grid3, std::vector<double>(parts.gsb.values.size()), Component::Total,
                  cross_peak_metadata(sequence, grid1, grid3, Component::Total)};
  for (std::size_t k = 0; k < result.total.values.size(); ++k)
    result.total.values[k] = parts.gsb.values[k].real() - parts.esa.values[k].real();
  return result;
}

GsbEsa decompose_gsb_esa(const Manifold& manifold, const PulseSequence& sequence, const FrequencyGrid& grid1,
                         const FrequencyGrid& grid3) {
  const auto parts = cross_peak_complex(manifold, sequence, grid1, grid3);
  GsbEsa out;
  out.gsb = {grid1, grid3, std::vector<double>(parts.gsb.values.size()), Component::GSB,
             cross_peak_metadata(sequence, grid1, grid3, Component::GSB)};
  out.esa = {grid1, grid3, std::vector<double>(parts.esa.values.size()), Component::ESA,
             cross_peak_metadata(sequence, grid1, grid3, Component::ESA)};
  for (std::size_t k = 0; k < out.gsb.values.size(); ++k) {
    out.gsb.values[k] = parts.gsb.values[k].real();
    out.esa.values[k] = -parts.esa.values[k].real();
  }
  return out;
}

}  // namespace xcs
