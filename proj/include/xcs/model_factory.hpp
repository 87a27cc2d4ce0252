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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "xcs/manifold.hpp"

namespace xcs {

enum class EdgeLabel { A, B };

struct EdgeTransition {
  double energy = 0.0;  // eV above g0
  double dipole = 0.0;  // a.u.
  double gamma = 0.0;   // eV
};

/// Single-core transitions of one edge, all out of g0.
struct EdgeSpec {
  EdgeLabel label = EdgeLabel::A;
  std::vector<EdgeTransition> transitions;
};

/// Perturbation of the product model: E_f += shift(a, b) and both e<->f
/// dipoles of f = (a, b) scaled by scale(a, b). Tables are |A| x |B|,
/// row-major in a. Empty tables mean shift 0 / scale 1.
struct CouplingSpec {
  std::vector<double> shift;
  std::vector<double> scale;

  static CouplingSpec uniform(std::size_t size_a, std::size_t size_b, double shift, double scale = 1.0);
};

/// Direct-product model. State ids: g0 = 0, EA = 1..|A|, EB follow, then
/// F = (a, b) in row-major order. Throws ConfigurationError for an empty edge,
/// Gamma <= 0 or non-finite entries.
Manifold build_product_manifold(const EdgeSpec& edge_a, const EdgeSpec& edge_b);

Manifold build_coupled_manifold(const EdgeSpec& edge_a, const EdgeSpec& edge_b, const CouplingSpec& coupling);

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

struct RandomManifoldOptions {
  std::size_t extra_ground = 0;  // G states besides g0
  std::size_t size_ea = 2;
  std::size_t size_eb = 2;
  std::size_t size_f = 4;
  Range energy_g{1.0, 10.0};
  Range energy_ea{397.0, 405.0};
  Range energy_eb{531.0, 539.0};
  Range energy_f{930.0, 944.0};
  Range gamma{0.05, 0.5};
  Range dipole{0.01, 0.3};
};

/// Fully connected (along allowed adjacencies) random manifold; deterministic
/// in the seed and always valid.
Manifold random_manifold(std::uint64_t seed, const RandomManifoldOptions& options = {});

/// Random edge with `size` transitions drawn uniformly from the given ranges.
EdgeSpec random_edge(std::uint64_t seed, EdgeLabel label, std::size_t size, Range energy, Range gamma, Range dipole);

}  // namespace xcs
