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

#include "xcs/manifold.hpp"

#include <cmath>
#include <sstream>

namespace xcs {

std::string_view to_string(Block block) {
  switch (block) {
    case Block::G: return "G";
    case Block::EA: return "EA";
    case Block::EB: return "EB";
    case Block::F: return "F";
  }
  return "?";
}

std::optional<Block> block_from_string(std::string_view text) {
  if (text == "G") return Block::G;
  if (text == "EA") return Block::EA;
  if (text == "EB") return Block::EB;
  if (text == "F") return Block::F;
  return std::nullopt;
}

int block_order(Block block) {
  switch (block) {
    case Block::G: return 0;
    case Block::EA:
    case Block::EB: return 1;
    case Block::F: return 2;
  }
  return -1;
}

bool blocks_adjacent(Block a, Block b) {
  if (block_order(a) > block_order(b)) std::swap(a, b);
  return (a == Block::G && (b == Block::EA || b == Block::EB)) ||
         ((a == Block::EA || a == Block::EB) && b == Block::F);
}

const Transition* TransitionTable::find(int i, int j) const {
  auto it = entries_.find(key(i, j));
  return it == entries_.end() ? nullptr : &it->second;
}

Manifold::Manifold(std::vector<State> states, TransitionTable transitions)
    : states_(std::move(states)), transitions_(std::move(transitions)) {
  index_.reserve(states_.size());
  for (std::size_t k = 0; k < states_.size(); ++k) index_.emplace(states_[k].id, k);  // first wins
}

const State& Manifold::state(int id) const { return states_[index_of(id)]; }

std::size_t Manifold::index_of(int id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw UnknownStateError(id);
  return it->second;
}

std::optional<int> Manifold::ground_state() const {
  std::optional<int> found;
  for (const auto& s : states_) {
    if (s.block == Block::G && s.energy == 0.0) {
      if (found) return std::nullopt;
      found = s.id;
    }
  }
  return found;
}

double Manifold::transition_frequency(int i, int j) const {
  return state(i).energy - state(j).energy;
}

double Manifold::dipole(int i, int j) const {
  const Transition* t = transitions_.find(i, j);
  return t ? t->dipole : 0.0;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DuplicateStateId: return "DuplicateStateId";
    case ViolationKind::NonFiniteEnergy: return "NonFiniteEnergy";
    case ViolationKind::MissingGroundState: return "MissingGroundState";
    case ViolationKind::MultipleGroundStates: return "MultipleGroundStates";
    case ViolationKind::UnknownState: return "UnknownState";
    case ViolationKind::SelfTransition: return "SelfTransition";
    case ViolationKind::NonFiniteDipole: return "NonFiniteDipole";
    case ViolationKind::MissingDephasing: return "MissingDephasing";
    case ViolationKind::NonPositiveDephasing: return "NonPositiveDephasing";
    case ViolationKind::ForbiddenBlockCoupling: return "ForbiddenBlockCoupling";
  }
  return "?";
}

namespace {

std::string pair_text(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

std::vector<Violation> validate(const Manifold& manifold) {
  std::vector<Violation> out;
  std::unordered_map<int, const State*> seen;
  int ground_count = 0;

  for (const auto& s : manifold.states()) {
    if (!seen.emplace(s.id, &s).second) {
      out.push_back({ViolationKind::DuplicateStateId, s.id, -1,
                     "state id " + std::to_string(s.id) + " defined more than once"});
    }
    if (!std::isfinite(s.energy)) {
      out.push_back({ViolationKind::NonFiniteEnergy, s.id, -1,
                     "state " + std::to_string(s.id) + " has a non-finite energy"});
    }
    if (s.block == Block::G && s.energy == 0.0) ++ground_count;
  }
  if (ground_count == 0) {
    out.push_back({ViolationKind::MissingGroundState, -1, -1, "no G-block state with energy 0"});
  } else if (ground_count > 1) {
    out.push_back({ViolationKind::MultipleGroundStates, -1, -1,
                   std::to_string(ground_count) + " G-block states with energy 0; g0 must be unique"});
  }

  for (const auto& [key, t] : manifold.transitions()) {
    const auto [i, j] = key;
    const std::string pair = pair_text(i, j);
    if (i == j) {
      out.push_back({ViolationKind::SelfTransition, i, j, "diagonal transition entry " + pair});
      continue;
    }
    auto si = seen.find(i);
    auto sj = seen.find(j);
    if (si == seen.end() || sj == seen.end()) {
      out.push_back({ViolationKind::UnknownState, i, j, "transition " + pair + " references an unknown state"});
      continue;
    }
    if (!std::isfinite(t.dipole)) {
      out.push_back({ViolationKind::NonFiniteDipole, i, j, "transition " + pair + " has a non-finite dipole"});
    }
    if (std::isnan(t.gamma)) {
      out.push_back({ViolationKind::MissingDephasing, i, j, "transition " + pair + " has no dephasing rate"});
    } else if (!(t.gamma > 0.0) || !std::isfinite(t.gamma)) {
      out.push_back({ViolationKind::NonPositiveDephasing, i, j,
                     "transition " + pair + " needs a finite dephasing rate > 0"});
    }
    if (t.dipole != 0.0 && !blocks_adjacent(si->second->block, sj->second->block)) {
      std::ostringstream msg;
      msg << "nonzero dipole between " << to_string(si->second->block) << " and "
          << to_string(sj->second->block) << " states " << pair;
      out.push_back({ViolationKind::ForbiddenBlockCoupling, i, j, msg.str()});
    }
  }
  return out;
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error([&] {
        std::string msg = "invalid manifold:";
        for (const auto& v : violations) msg += "\n  " + std::string(to_string(v.kind)) + ": " + v.message;
        return msg;
      }()),
      violations_(std::move(violations)) {}

void require_valid(const Manifold& manifold) {
  auto violations = validate(manifold);
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

}  // namespace xcs
