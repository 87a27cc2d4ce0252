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

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "xcs/manifold.hpp"
#include "xcs/spectra.hpp"

namespace xcs::io {

/// Parses the line-oriented manifold format:
///
///   # comment
///   STATES
///   <id> <G|EA|EB|F> <energy_eV>
///   TRANSITIONS
///   <id_i> <id_j> <dipole_au> <gamma_eV>
///
/// Syntax problems throw ParseError (line, column). A well-formed file that
/// fails validate() throws ValidationError whose messages carry line numbers.
Manifold parse_manifold(std::string_view text);

std::string format_manifold(const Manifold& manifold);

/// Shortest decimal form that reads back to the same double.
std::string format_number(double value);

std::string format_spectrum(const Spectrum1D& spectrum);
std::string format_spectrum(const Spectrum2D& spectrum);

using AnySpectrum = std::variant<Spectrum1D, Spectrum2D>;

/// Throws ParseError on malformed input.
AnySpectrum parse_spectrum(std::string_view text);

/// gnuplot blocks: "x value" lines for 1D; "Omega1 Omega3 value" lines with a
/// blank line after each Omega3 row for 2D.
std::string format_plotdata(const AnySpectrum& spectrum);

std::string format_pathways(const std::vector<PathwayTerm>& pathways);

std::string read_file(const std::filesystem::path& path);

/// Stages file contents and publishes them together: every file is written to
/// a temporary sibling first and renamed only after all writes succeeded.
/// Temporaries are removed if commit() is never reached.
class AtomicFileSet {
 public:
  AtomicFileSet() = default;
  AtomicFileSet(const AtomicFileSet&) = delete;
  AtomicFileSet& operator=(const AtomicFileSet&) = delete;
  ~AtomicFileSet();

  void add(std::filesystem::path path, std::string content);
  void commit();

 private:
  std::vector<std::pair<std::filesystem::path, std::string>> pending_;
  std::vector<std::filesystem::path> temporaries_;
};

void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace xcs::io
