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

#include "xcs/model_factory.hpp"

#include <cmath>
#include <random>

namespace xcs {

namespace {

void check_edge(const EdgeSpec& edge) {
  if (edge.transitions.empty()) throw ConfigurationError("edge spec needs at least one transition");
  for (const auto& t : edge.transitions) {
    if (!std::isfinite(t.energy) || !std::isfinite(t.dipole))
      throw ConfigurationError("edge transition has a non-finite entry");
    if (!(t.gamma > 0.0) || !std::isfinite(t.gamma)) throw ConfigurationError("edge transition needs Gamma > 0");
  }
}

double uniform(std::mt19937_64& rng, Range r) { return std::uniform_real_distribution<double>(r.lo, r.hi)(rng); }

}  // namespace

CouplingSpec CouplingSpec::uniform(std::size_t size_a, std::size_t size_b, double shift, double scale) {
  return {std::vector<double>(size_a * size_b, shift), std::vector<double>(size_a * size_b, scale)};
}

Manifold build_coupled_manifold(const EdgeSpec& edge_a, const EdgeSpec& edge_b, const CouplingSpec& coupling) {
  check_edge(edge_a);
  check_edge(edge_b);
  const std::size_t na = edge_a.transitions.size(), nb = edge_b.transitions.size();
  const bool has_shift = !coupling.shift.empty();
  const bool has_scale = !coupling.scale.empty();
  if ((has_shift && coupling.shift.size() != na * nb) || (has_scale && coupling.scale.size() != na * nb))
    throw ConfigurationError("coupling tables must be |A| x |B|");
  for (double s : coupling.shift)
    if (!std::isfinite(s)) throw ConfigurationError("coupling shift must be finite");
  for (double s : coupling.scale)
    if (!std::isfinite(s) || s < 0.0) throw ConfigurationError("coupling scale must be finite and >= 0");

  const int g0 = 0;
  const auto ea = [](std::size_t a) { return static_cast<int>(1 + a); };
  const auto eb = [na](std::size_t b) { return static_cast<int>(1 + na + b); };
  const auto f = [na, nb](std::size_t a, std::size_t b) { return static_cast<int>(1 + na + nb + a * nb + b); };

  std::vector<State> states;
  states.reserve(1 + na + nb + na * nb);
  states.push_back({g0, Block::G, 0.0});
  for (std::size_t a = 0; a < na; ++a) states.push_back({ea(a), Block::EA, edge_a.transitions[a].energy});
  for (std::size_t b = 0; b < nb; ++b) states.push_back({eb(b), Block::EB, edge_b.transitions[b].energy});

  TransitionTable table;
  for (std::size_t a = 0; a < na; ++a)
    table.set(g0, ea(a), {edge_a.transitions[a].dipole, edge_a.transitions[a].gamma});
  for (std::size_t b = 0; b < nb; ++b)
    table.set(g0, eb(b), {edge_b.transitions[b].dipole, edge_b.transitions[b].gamma});

  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < nb; ++b) {
      const auto& ta = edge_a.transitions[a];
      const auto& tb = edge_b.transitions[b];
      double energy = ta.energy + tb.energy;
      if (has_shift) energy += coupling.shift[a * nb + b];
      const double s = has_scale ? coupling.scale[a * nb + b] : 1.0;
      states.push_back({f(a, b), Block::F, energy});
      // e_a -> f adds the B excitation and inherits its width, and vice versa.
      table.set(ea(a), f(a, b), {tb.dipole * s, tb.gamma});
      table.set(eb(b), f(a, b), {ta.dipole * s, ta.gamma});
    }
  }
  return Manifold(std::move(states), std::move(table));
}

Manifold build_product_manifold(const EdgeSpec& edge_a, const EdgeSpec& edge_b) {
  return build_coupled_manifold(edge_a, edge_b, {});
}

EdgeSpec random_edge(std::uint64_t seed, EdgeLabel label, std::size_t size, Range energy, Range gamma,
                     Range dipole) {
  std::mt19937_64 rng(seed);
  EdgeSpec edge{label, {}};
  for (std::size_t k = 0; k < size; ++k) {
    const double e = uniform(rng, energy);
    const double g = uniform(rng, gamma);
    const double m = uniform(rng, dipole);
    edge.transitions.push_back({e, m, g});
  }
  return edge;
}

Manifold random_manifold(std::uint64_t seed, const RandomManifoldOptions& options) {
  if (!(options.gamma.lo > 0.0) || options.gamma.hi < options.gamma.lo)
    throw ConfigurationError("random manifold needs a positive Gamma range");
  std::mt19937_64 rng(seed);
  std::vector<State> states;
  int next_id = 0;
  states.push_back({next_id++, Block::G, 0.0});
  const auto add_block = [&](Block block, std::size_t count, Range energy) {
    for (std::size_t k = 0; k < count; ++k) {
      double e = uniform(rng, energy);
      if (block == Block::G && e == 0.0) e = energy.hi;  // keep g0 unique
      states.push_back({next_id++, block, e});
    }
  };
  add_block(Block::G, options.extra_ground, options.energy_g);
  add_block(Block::EA, options.size_ea, options.energy_ea);
  add_block(Block::EB, options.size_eb, options.energy_eb);
  add_block(Block::F, options.size_f, options.energy_f);

  TransitionTable table;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      if (!blocks_adjacent(states[i].block, states[j].block)) continue;
      const double m = uniform(rng, options.dipole);
      const double g = uniform(rng, options.gamma);
      table.set(states[i].id, states[j].id, {m, g});
    }
  }
  return Manifold(std::move(states), std::move(table));
}

}  // namespace xcs
