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

#include <numbers>

namespace xcs::units {

// Energies are in eV, times in fs. Phases and decays use t/hbar.
inline constexpr double hbar_ev_fs = 0.6582119569;

inline constexpr double hartree_ev = 27.211386245988;
inline constexpr double bohr_cm = 5.29177e-9;
inline constexpr double au_dipole_debye = 2.541746;
inline constexpr double speed_of_light_au = 137.035999084;

inline constexpr double pi = std::numbers::pi;

}  // namespace xcs::units
