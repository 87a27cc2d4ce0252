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

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

#include "xcs/io.hpp"

namespace xcs::io {

namespace {

constexpr std::string_view kFormat1D = "xcs-spectrum-1d 1";
constexpr std::string_view kFormat2D = "xcs-spectrum-2d 1";

void write_header(std::string& out, std::string_view format, const Metadata& metadata) {
  out += "# format: ";
  out += format;
  out += '\n';
  for (const auto& [key, value] : metadata) {
    if (key == "format") continue;
    out += "# " + key + ": " + value + "\n";
  }
}

void put_grid(Metadata& md, const std::string& name, const FrequencyGrid& g) {
  set_metadata(md, name + "_start_eV", format_number(g.start()));
  set_metadata(md, name + "_step_eV", format_number(g.step()));
  set_metadata(md, name + "_count", std::to_string(g.count()));
}

struct Lines {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t number = 0;

  bool next(std::string_view& line) {
    if (pos >= text.size()) return false;
    const std::size_t nl = text.find('\n', pos);
    line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return true;
  }
};

double to_double(std::string_view s, std::size_t line, std::size_t column) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(line, column, "bad number '" + std::string(s) + "'");
  return v;
}

std::string required(const Metadata& md, const std::string& key) {
  auto v = metadata_value(md, key);
  if (!v) throw ParseError(1, 1, "spectrum header lacks '" + key + "'");
  return *v;
}

FrequencyGrid read_grid(const Metadata& md, const std::string& name) {
  const auto start = required(md, name + "_start_eV");
  const auto step = required(md, name + "_step_eV");
  const auto count = required(md, name + "_count");
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
  if (ec != std::errc{} || ptr != count.data() + count.size())
    throw ParseError(1, 1, "bad " + name + "_count '" + count + "'");
  try {
    return FrequencyGrid(to_double(start, 1, 1), to_double(step, 1, 1), n);
  } catch (const ConfigurationError& e) {
    throw ParseError(1, 1, std::string("bad ") + name + " grid: " + e.what());
  }
}

std::vector<double> split_row(std::string_view line, std::size_t line_no) {
  std::vector<double> row;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    const auto field = line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start);
    row.push_back(to_double(field, line_no, start + 1));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return row;
}

}  // namespace

std::string format_spectrum(const Spectrum1D& spectrum) {
  if (spectrum.values.size() != spectrum.grid.count())
    throw ConfigurationError("spectrum values do not match the grid");
  Metadata md = spectrum.metadata;
  put_grid(md, "axis", spectrum.grid);
  std::string out;
  write_header(out, kFormat1D, md);
  for (std::size_t k = 0; k < spectrum.values.size(); ++k)
    out += format_number(spectrum.grid[k]) + "\t" + format_number(spectrum.values[k]) + "\n";
  return out;
}

std::string format_spectrum(const Spectrum2D& spectrum) {
  const std::size_t n1 = spectrum.grid1.count(), n3 = spectrum.grid3.count();
  if (spectrum.values.size() != n1 * n3) throw ConfigurationError("spectrum values do not match the grid");
  Metadata md = spectrum.metadata;
  set_metadata(md, "component", to_string(spectrum.component));
  put_grid(md, "omega1", spectrum.grid1);
  put_grid(md, "omega3", spectrum.grid3);
  std::string out;
  write_header(out, kFormat2D, md);
  for (std::size_t i3 = 0; i3 < n3; ++i3) {
    for (std::size_t i1 = 0; i1 < n1; ++i1) {
      if (i1) out += '\t';
      out += format_number(spectrum.at(i3, i1));
    }
    out += '\n';
  }
  return out;
}

AnySpectrum parse_spectrum(std::string_view text) {
  Lines lines{text};
  std::string_view line;
  Metadata md;
  std::string format;
  std::vector<std::pair<std::size_t, std::string_view>> data;
  while (lines.next(line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto body = line.substr(1);
      if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
      const auto colon = body.find(": ");
      if (colon == std::string_view::npos) continue;
      std::string key(body.substr(0, colon)), value(body.substr(colon + 2));
      if (key == "format")
        format = value;
      else
        md.emplace_back(std::move(key), std::move(value));
      continue;
    }
    data.emplace_back(lines.number, line);
  }

  if (format == kFormat1D) {
    Spectrum1D s;
    s.grid = read_grid(md, "axis");
    s.metadata = md;
    if (data.size() != s.grid.count())
      throw ParseError(lines.number, 1, "expected " + std::to_string(s.grid.count()) + " rows");
    for (const auto& [no, row_text] : data) {
      const auto row = split_row(row_text, no);
      if (row.size() != 2) throw ParseError(no, 1, "1D rows have two columns");
      s.values.push_back(row[1]);
    }
    return s;
  }
  if (format == kFormat2D) {
    Spectrum2D s;
    s.grid1 = read_grid(md, "omega1");
    s.grid3 = read_grid(md, "omega3");
    const auto component = component_from_string(required(md, "component"));
    if (!component) throw ParseError(1, 1, "unknown component tag");
    s.component = *component;
    s.metadata = md;
    if (data.size() != s.grid3.count())
      throw ParseError(lines.number, 1, "expected " + std::to_string(s.grid3.count()) + " rows");
    s.values.reserve(s.grid1.count() * s.grid3.count());
    for (const auto& [no, row_text] : data) {
      const auto row = split_row(row_text, no);
      if (row.size() != s.grid1.count())
        throw ParseError(no, 1, "expected " + std::to_string(s.grid1.count()) + " columns");
      s.values.insert(s.values.end(), row.begin(), row.end());
    }
    return s;
  }
  throw ParseError(1, 1, format.empty() ? "missing '# format:' header" : "unknown format '" + format + "'");
}

std::string format_plotdata(const AnySpectrum& spectrum) {
  std::string out;
  if (const auto* s1 = std::get_if<Spectrum1D>(&spectrum)) {
    out += "# x value\n";
    for (std::size_t k = 0; k < s1->values.size(); ++k)
      out += format_number(s1->grid[k]) + " " + format_number(s1->values[k]) + "\n";
    return out;
  }
  const auto& s2 = std::get<Spectrum2D>(spectrum);
  out += "# omega1 omega3 " + to_string(s2.component) + "\n";
  for (std::size_t i3 = 0; i3 < s2.grid3.count(); ++i3) {
    const std::string w3 = format_number(s2.grid3[i3]);
    for (std::size_t i1 = 0; i1 < s2.grid1.count(); ++i1)
      out += format_number(s2.grid1[i1]) + " " + w3 + " " + format_number(s2.at(i3, i1)) + "\n";
    out += '\n';
  }
  return out;
}

std::string format_pathways(const std::vector<PathwayTerm>& pathways) {
  std::string out =
      "# component\touter\texcited1\texcited3\tamplitude\tomega1_resonance_eV\tomega3_resonance_eV\tgamma1_eV\t"
      "gamma3_eV\n";
  for (const auto& p : pathways) {
    out += to_string(p.component) + "\t" + std::to_string(p.outer) + "\t" + std::to_string(p.excited1) + "\t" +
           std::to_string(p.excited3) + "\t" + format_number(p.amplitude) + "\t" +
           format_number(p.omega1_resonance) + "\t" + format_number(p.omega3_resonance) + "\t" +
           format_number(p.gamma1) + "\t" + format_number(p.gamma3) + "\n";
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error("cannot read '" + path.string() + "'");
  return ss.str();
}

AtomicFileSet::~AtomicFileSet() {
  std::error_code ec;
  for (const auto& tmp : temporaries_) std::filesystem::remove(tmp, ec);
}

void AtomicFileSet::add(std::filesystem::path path, std::string content) {
  pending_.emplace_back(std::move(path), std::move(content));
}

void AtomicFileSet::commit() {
  std::random_device rd;
  std::vector<std::filesystem::path> targets;
  for (auto& [path, content] : pending_) {
    auto tmp = path;
    tmp += ".tmp" + std::to_string(rd());
    temporaries_.push_back(tmp);
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) throw Error("write failed for '" + path.string() + "'");
    targets.push_back(path);
  }
  for (std::size_t k = 0; k < targets.size(); ++k) {
    std::error_code ec;
    std::filesystem::rename(temporaries_[k], targets[k], ec);
    if (ec) throw Error("cannot rename into '" + targets[k].string() + "': " + ec.message());
  }
  temporaries_.clear();
  pending_.clear();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  AtomicFileSet set;
  set.add(path, content);
  set.commit();
}

}  // namespace xcs::io
