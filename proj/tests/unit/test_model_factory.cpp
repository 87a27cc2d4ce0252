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


#include "doctest.h"
#include "support/models.hpp"
#include "xcs/model_factory.hpp"
#include "xcs/spectra.hpp"

using namespace xcs;

namespace {

EdgeSpec edge(EdgeLabel label, std::vector<EdgeTransition> t) { return {label, std::move(t)}; }

std::size_t count_block(const Manifold& m, Block b) {
  std::size_t n = 0;
  for (const auto& s : m.states()) n += s.block == b;
  return n;
}

}  // namespace

TEST_CASE("1x1 product is the 4-state ladder") {
  const Manifold m = build_product_manifold(edge(EdgeLabel::A, {{401.0, 0.1, 0.1}}),
                                            edge(EdgeLabel::B, {{535.0, 0.2, 0.3}}));
  REQUIRE(m.size() == 4);
  CHECK(m.state(3).block == Block::F);
  CHECK(m.state(3).energy == 936.0);
  CHECK(m.transitions().size() == 4);
  CHECK(m.dipole(1, 3) == 0.2);
  CHECK(m.transitions().find(1, 3)->gamma == 0.3);
  CHECK(m.dipole(2, 3) == 0.1);
  CHECK(m.transitions().find(2, 3)->gamma == 0.1);
  CHECK(validate(m).empty());
}

TEST_CASE("2x3 product counts") {
  const Manifold m = build_product_manifold(edge(EdgeLabel::A, {{400, 0.1, 0.1}, {402, 0.1, 0.1}}),
                                            edge(EdgeLabel::B, {{533, 0.1, 0.1}, {535, 0.1, 0.1}, {537, 0.1, 0.1}}));
  CHECK(count_block(m, Block::F) == 6);
  std::size_t ef = 0;
  for (const auto& [k, t] : m.transitions())
    ef += m.state(k.first).block == Block::F || m.state(k.second).block == Block::F;
  CHECK(ef == 12);
  CHECK(validate(m).empty());
}

TEST_CASE("identity coupling is bitwise the product") {
  const auto a = edge(EdgeLabel::A, {{400.1, 0.11, 0.12}, {402.7, 0.05, 0.3}});
  const auto b = edge(EdgeLabel::B, {{534.2, 0.21, 0.07}});
  CHECK(build_coupled_manifold(a, b, CouplingSpec::uniform(2, 1, 0.0, 1.0)) == build_product_manifold(a, b));
  CHECK(build_coupled_manifold(a, b, {}) == build_product_manifold(a, b));
}

TEST_CASE("coupling shifts energies and removes pathways") {
  const auto a = edge(EdgeLabel::A, {{401.0, 0.1, 0.1}, {402.0, 0.1, 0.1}});
  const auto b = edge(EdgeLabel::B, {{535.0, 0.1, 0.1}});
  CouplingSpec c{{1.0, 0.0}, {0.0, 1.0}};
  const Manifold m = build_coupled_manifold(a, b, c);
  CHECK(m.state(4).energy == 937.0);
  CHECK(m.dipole(1, 4) == 0.0);
  const auto paths = cross_peak_pathways(m, testing::standard_two_color());
  for (const auto& p : paths) {
    if (p.component == Component::ESA) {
      CHECK(p.outer != 4);
    }
  }
  CHECK_THROWS_AS(build_coupled_manifold(a, b, {{1.0}, {}}), ConfigurationError);
  CHECK_THROWS_AS(build_coupled_manifold(a, b, {{}, {-1.0, 1.0}}), ConfigurationError);
}

TEST_CASE("bad edges are rejected") {
  CHECK_THROWS_AS(build_product_manifold(edge(EdgeLabel::A, {}), edge(EdgeLabel::B, {{535, 0.1, 0.1}})),
                  ConfigurationError);
  CHECK_THROWS_AS(build_product_manifold(edge(EdgeLabel::A, {{401, 0.1, 0.0}}), edge(EdgeLabel::B, {{535, 0.1, 0.1}})),
                  ConfigurationError);
}

TEST_CASE("random manifolds are deterministic and valid") {
  CHECK(random_manifold(17) == random_manifold(17));
  CHECK_FALSE(random_manifold(17) == random_manifold(18));
  RandomManifoldOptions o;
  o.extra_ground = 2;
  o.size_f = 5;
  int valid = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) valid += validate(random_manifold(seed, o)).empty();
  CHECK(valid == 1000);
  const auto e = random_edge(3, EdgeLabel::B, 4, {530, 540}, {0.05, 0.5}, {0.01, 0.3});
  CHECK(e.transitions.size() == 4);
  CHECK(e.label == EdgeLabel::B);
  for (const auto& t : e.transitions) {
    CHECK(t.energy >= 530.0);
    CHECK(t.energy <= 540.0);
  }
}

TEST_CASE("product cancellation for random edge pairs") {
  const auto seq = testing::standard_two_color();
  const FrequencyGrid g(-3.0, 0.05, 121);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = random_edge(seed, EdgeLabel::A, 1 + seed % 4, {398, 404}, {0.05, 0.5}, {0.01, 0.3});
    const auto b = random_edge(seed + 1000, EdgeLabel::B, 1 + (seed / 4) % 4, {532, 538}, {0.05, 0.5}, {0.01, 0.3});
    const Manifold m = build_product_manifold(a, b);
    const auto parts = decompose_gsb_esa(m, seq, g, g);
    const double scale = std::max(testing::max_abs(parts.gsb.values), testing::max_abs(parts.esa.values));
    CHECK(testing::max_abs(cross_peak_direct(m, seq, g, g).total.values) <= 1e-10 * scale);
  }
}

TEST_CASE("1x1 cross peak grows with |delta| on [0, Gamma]") {
  const auto seq = testing::standard_two_color();
  const FrequencyGrid g(-1.0, 0.01, 201);
  double previous = -1.0;
  for (int k = 0; k <= 10; ++k) {
    const double delta = 0.01 * k;
    const Manifold m = build_coupled_manifold(edge(EdgeLabel::A, {{401, 0.1, 0.1}}),
                                              edge(EdgeLabel::B, {{535, 0.1, 0.1}}),
                                              CouplingSpec::uniform(1, 1, delta));
    const double peak = testing::max_abs(cross_peak_direct(m, seq, g, g).total.values);
    if (k == 0) CHECK(peak <= 1e-15);
    CHECK(peak >= previous);
    previous = peak;
  }
}
