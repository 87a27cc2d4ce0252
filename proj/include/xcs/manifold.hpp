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
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "xcs/error.hpp"

namespace xcs {

/// Partition of the level scheme by core-hole content.
///   G  - no core hole (ground state g0 and valence-excited states)
///   EA - first core type excited
///   EB - second core type excited
///   F  - both core types excited
enum class Block { G, EA, EB, F };

std::string_view to_string(Block block);
std::optional<Block> block_from_string(std::string_view text);

/// Number of core holes: 0 for G, 1 for EA/EB, 2 for F.
int block_order(Block block);

/// True for the dipole-allowed pairs G-EA, G-EB, EA-F, EB-F (either order).
bool blocks_adjacent(Block a, Block b);

struct State {
  int id = 0;
  Block block = Block::G;
  double energy = 0.0;  // eV, g0 = 0
};

struct Transition {
  double dipole = 0.0;                                      // a.u.
  double gamma = std::numeric_limits<double>::quiet_NaN();  // eV, NaN = not given
};

inline bool operator==(const State& a, const State& b) {
  return a.id == b.id && a.block == b.block && a.energy == b.energy;
}

inline bool operator==(const Transition& a, const Transition& b) {
  // NaN gamma compares equal to NaN gamma here: both mean "not given".
  const bool gammas_equal = (a.gamma != a.gamma && b.gamma != b.gamma) || a.gamma == b.gamma;
  return a.dipole == b.dipole && gammas_equal;
}

/// Symmetric (i,j) -> Transition map. Pairs are stored under the key
/// (min(i,j), max(i,j)) so mu_ij = mu_ji and Gamma_ij = Gamma_ji hold by
/// construction.
class TransitionTable {
 public:
  using Key = std::pair<int, int>;

  static Key key(int i, int j) { return i < j ? Key{i, j} : Key{j, i}; }

  /// Inserts or overwrites.
  void set(int i, int j, Transition t) { entries_[key(i, j)] = t; }
  const Transition* find(int i, int j) const;
  bool contains(int i, int j) const { return find(i, j) != nullptr; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool operator==(const TransitionTable&) const = default;

 private:
  std::map<Key, Transition> entries_;
};

/// Complete level scheme. Immutable once constructed; the state index (position
/// in states()) is what the numerical kernels use internally.
class Manifold {
 public:
  Manifold() = default;
  Manifold(std::vector<State> states, TransitionTable transitions);

  const std::vector<State>& states() const { return states_; }
  const TransitionTable& transitions() const { return transitions_; }
  std::size_t size() const { return states_.size(); }

  bool contains(int id) const { return index_.count(id) != 0; }
  /// Throws UnknownStateError.
  const State& state(int id) const;
  std::size_t index_of(int id) const;

  /// Id of the unique G state at energy 0, if there is exactly one.
  std::optional<int> ground_state() const;

  /// E_i - E_j in eV. Throws UnknownStateError.
  double transition_frequency(int i, int j) const;

  /// Dipole between two states, 0 when the pair is not stored.
  double dipole(int i, int j) const;

  bool operator==(const Manifold& other) const {
    return states_ == other.states_ && transitions_ == other.transitions_;
  }

 private:
  std::vector<State> states_;
  TransitionTable transitions_;
  std::unordered_map<int, std::size_t> index_;
};

enum class ViolationKind {
  DuplicateStateId,
  NonFiniteEnergy,
  MissingGroundState,
  MultipleGroundStates,
  UnknownState,
  SelfTransition,
  NonFiniteDipole,
  MissingDephasing,
  NonPositiveDephasing,
  ForbiddenBlockCoupling,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  int first = -1;   // state id, or -1
  int second = -1;  // second state id for pair violations, or -1
  std::string message;
};

/// Checks every structural invariant of the manifold. Returns an empty list
/// iff the manifold is valid; never throws.
std::vector<Violation> validate(const Manifold& manifold);

/// Throws ValidationError when validate() reports anything.
void require_valid(const Manifold& manifold);

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

}  // namespace xcs
