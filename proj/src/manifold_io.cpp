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
#include <limits>
#include <map>

#include "xcs/io.hpp"

namespace xcs::io {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
    const std::size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t') ++k;
    if (k > start) out.push_back({line.substr(start, k - start), start + 1});
  }
  return out;
}

bool parse_int(std::string_view s, int& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

bool parse_double(std::string_view s, double& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(out);
}

enum class Section { None, States, Transitions };

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

Manifold parse_manifold(std::string_view text) {
  std::vector<State> states;
  TransitionTable table;
  std::map<int, std::size_t> state_line;
  std::map<TransitionTable::Key, std::size_t> pair_line;
  Section section = Section::None;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;

    const auto& head = tokens.front();
    int probe = 0;
    if (tokens.size() == 1 && !parse_int(head.text, probe)) {
      if (head.text == "STATES")
        section = Section::States;
      else if (head.text == "TRANSITIONS")
        section = Section::Transitions;
      else
        throw ParseError(line_no, head.column, "unknown section '" + std::string(head.text) + "'");
      continue;
    }

    switch (section) {
      case Section::None:
        throw ParseError(line_no, head.column, "data row before any STATES or TRANSITIONS header");

      case Section::States: {
        if (tokens.size() != 3)
          throw ParseError(line_no, head.column, "STATES rows are '<id> <block> <energy_eV>'");
        State s;
        if (!parse_int(tokens[0].text, s.id)) throw ParseError(line_no, tokens[0].column, "state id must be an integer");
        const auto block = block_from_string(tokens[1].text);
        if (!block)
          throw ParseError(line_no, tokens[1].column,
                           "unknown block '" + std::string(tokens[1].text) + "' (expected G, EA, EB or F)");
        s.block = *block;
        if (!parse_double(tokens[2].text, s.energy))
          throw ParseError(line_no, tokens[2].column, "energy must be a finite decimal number");
        if (!state_line.emplace(s.id, line_no).second)
          throw ParseError(line_no, tokens[0].column,
                           "state " + std::to_string(s.id) + " already defined on line " +
                               std::to_string(state_line[s.id]));
        states.push_back(s);
        break;
      }

      case Section::Transitions: {
        if (tokens.size() != 3 && tokens.size() != 4)
          throw ParseError(line_no, head.column, "TRANSITIONS rows are '<id_i> <id_j> <dipole_au> <gamma_eV>'");
        int i = 0, j = 0;
        if (!parse_int(tokens[0].text, i)) throw ParseError(line_no, tokens[0].column, "state id must be an integer");
        if (!parse_int(tokens[1].text, j)) throw ParseError(line_no, tokens[1].column, "state id must be an integer");
        Transition t;
        if (!parse_double(tokens[2].text, t.dipole))
          throw ParseError(line_no, tokens[2].column, "dipole must be a finite decimal number");
        if (tokens.size() == 4 && !parse_double(tokens[3].text, t.gamma))
          throw ParseError(line_no, tokens[3].column, "gamma must be a finite decimal number");
        const auto key = TransitionTable::key(i, j);
        if (auto it = pair_line.find(key); it != pair_line.end())
          throw ParseError(line_no, head.column,
                           "duplicate transition (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                               "), first given on line " + std::to_string(it->second));
        pair_line.emplace(key, line_no);
        table.set(i, j, t);
        break;
      }
    }
  }

  Manifold manifold(std::move(states), std::move(table));
  auto violations = validate(manifold);
  if (!violations.empty()) {
    for (auto& v : violations) {
      std::size_t where = 0;
      if (v.second >= 0) {
        if (auto it = pair_line.find(TransitionTable::key(v.first, v.second)); it != pair_line.end()) where = it->second;
      } else if (v.first >= 0) {
        if (auto it = state_line.find(v.first); it != state_line.end()) where = it->second;
      }
      if (where != 0) v.message = "line " + std::to_string(where) + ": " + v.message;
    }
    throw ValidationError(std::move(violations));
  }
  return manifold;
}

std::string format_manifold(const Manifold& manifold) {
  std::string out = "# xcs manifold\nSTATES\n";
  for (const auto& s : manifold.states())
    out += std::to_string(s.id) + " " + std::string(to_string(s.block)) + " " + format_number(s.energy) + "\n";
  out += "TRANSITIONS\n";
  for (const auto& [key, t] : manifold.transitions()) {
    out += std::to_string(key.first) + " " + std::to_string(key.second) + " " + format_number(t.dipole);
    if (!std::isnan(t.gamma)) out += " " + format_number(t.gamma);
    out += "\n";
  }
  return out;
}

}  // namespace xcs::io
