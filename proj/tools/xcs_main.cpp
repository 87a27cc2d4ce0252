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

// xcs: command-line front end.
//
// Exit status: 0 success, 1 usage, 2 invalid input (syntax or validation),
// 3 computation or I/O failure.

#include <charconv>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xcs/io.hpp"
#include "xcs/model_factory.hpp"
#include "xcs/spectra.hpp"
#include "xcs/version.hpp"
#include "xcs/yield.hpp"

namespace {

using namespace xcs;

constexpr int kUsage = 1;
constexpr int kInvalid = 2;
constexpr int kComputation = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(text);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

double number(const std::string& s, const std::string& what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw UsageError("bad number '" + s + "' in " + what);
  return v;
}

FrequencyGrid parse_grid(const std::string& text, const std::string& what) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw UsageError(what + " expects start,step,count");
  const double count = number(parts[2], what);
  if (count < 2 || count != static_cast<double>(static_cast<std::size_t>(count)))
    throw UsageError(what + " count must be an integer >= 2");
  return FrequencyGrid(number(parts[0], what), number(parts[1], what), static_cast<std::size_t>(count));
}

EdgeSpec parse_edge(const std::string& text, EdgeLabel label, const std::string& what) {
  EdgeSpec edge{label, {}};
  for (const auto& item : split(text, ',')) {
    const auto f = split(item, ':');
    if (f.size() != 3) throw UsageError(what + " entries are energy:dipole:gamma");
    edge.transitions.push_back({number(f[0], what), number(f[1], what), number(f[2], what)});
  }
  return edge;
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(number(item, what));
  return out;
}

Manifold load_manifold(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return io::parse_manifold(text);
  }
  return io::parse_manifold(io::read_file(path));
}

struct EnvelopeFlags {
  std::string kind = "rectangular";
  double width = 5.0;

  void add(CLI::App* app, const std::string& width_flag) {
    app->add_option("--envelope", kind, "rectangular | gaussian")
        ->check(CLI::IsMember({"rectangular", "gaussian"}))
        ->capture_default_str();
    app->add_option(width_flag, width, "half-width (rectangular) or FWHM (gaussian), eV")->capture_default_str();
  }
  Envelope make() const { return kind == "gaussian" ? Envelope::gaussian(width) : Envelope::rectangular(width); }
};

std::string with_suffix(const std::string& prefix, const std::string& suffix) { return prefix + "_" + suffix; }

int cmd_validate(const std::string& path) {
  std::string text = path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {}) : io::read_file(path);
  try {
    const Manifold m = io::parse_manifold(text);
    std::cout << "valid: " << m.size() << " states, " << m.transitions().size() << " transitions\n";
    return 0;
  } catch (const ValidationError& e) {
    for (const auto& v : e.violations()) std::cout << to_string(v.kind) << ": " << v.message << "\n";
    return kInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"xcs: core-level nonlinear x-ray spectra from electronic-state manifolds"};
  app.set_version_flag("--version", std::string(version_string));
  app.require_subcommand(1);

  // validate
  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "check a manifold file; exit 0 iff valid");
  validate->add_option("manifold", validate_path, "manifold file or -")->required();

  // xanes
  std::string xanes_path, xanes_out, xanes_grid = "-5,0.01,1001";
  double xanes_carrier = 0.0;
  EnvelopeFlags xanes_env;
  auto* xanes_cmd = app.add_subcommand("xanes", "linear absorption spectrum");
  xanes_cmd->add_option("manifold", xanes_path)->required();
  xanes_cmd->add_option("--carrier", xanes_carrier, "carrier, eV")->required();
  xanes_env.add(xanes_cmd, "--halfwidth,--width");
  xanes_cmd->add_option("--grid", xanes_grid, "start,step,count relative to the carrier, eV")->capture_default_str();
  xanes_cmd->add_option("-o,--output", xanes_out)->required();

  // xcs2d
  std::string x2_path, x2_out, x2_grid1 = "-5,0.02,501", x2_grid3 = "-5,0.02,501", x2_components = "total,gsb,esa";
  double x2_c1 = 0.0, x2_c3 = 0.0;
  EnvelopeFlags x2_env;
  auto* x2 = app.add_subcommand("xcs2d", "t2 = 0 cross peak from the closed-form pathway sum");
  x2->add_option("manifold", x2_path)->required();
  x2->add_option("--carrier1", x2_c1, "carrier of pulses 1 and 2, eV")->required();
  x2->add_option("--carrier3", x2_c3, "carrier of pulses 3 and 4, eV")->required();
  x2_env.add(x2, "--width");
  x2->add_option("--grid1", x2_grid1, "Omega1 start,step,count, eV")->capture_default_str();
  x2->add_option("--grid3", x2_grid3, "Omega3 start,step,count, eV")->capture_default_str();
  x2->add_option("--components", x2_components, "subset of total,gsb,esa")->capture_default_str();
  x2->add_option("-o,--output", x2_out, "output prefix")->required();

  // xcs2d-fft
  std::string xf_path, xf_out, xf_convention = "interval";
  double xf_c1 = 0.0, xf_c3 = 0.0;
  FftOptions xf_opts;
  EnvelopeFlags xf_env;
  auto* xf = app.add_subcommand("xcs2d-fft", "2D spectrum by Fourier transform of the time-domain signal");
  xf->add_option("manifold", xf_path)->required();
  xf->add_option("--carrier1", xf_c1)->required();
  xf->add_option("--carrier3", xf_c3)->required();
  xf_env.add(xf, "--width");
  xf->add_option("--tmax1", xf_opts.t_max1, "fs")->capture_default_str();
  xf->add_option("--tmax3", xf_opts.t_max3, "fs")->capture_default_str();
  xf->add_option("--n1", xf_opts.n1, "samples, power of two")->capture_default_str();
  xf->add_option("--n3", xf_opts.n3, "samples, power of two")->capture_default_str();
  xf->add_option("--t2", xf_opts.t2, "fs")->capture_default_str();
  xf->add_option("--convention", xf_convention, "interval | per-operator")
      ->check(CLI::IsMember({"interval", "per-operator"}))
      ->capture_default_str();
  xf->add_option("-o,--output", xf_out, "output prefix")->required();

  // toy
  std::string toy_kind, toy_a = "401:0.1:0.1", toy_b = "535:0.1:0.1", toy_out, toy_shift, toy_scale;
  double toy_delta = 0.0, toy_uniform_scale = 1.0;
  auto* toy = app.add_subcommand("toy", "emit a product or coupled two-edge manifold");
  toy->add_option("kind", toy_kind, "product | coupled")->required()->check(CLI::IsMember({"product", "coupled"}));
  toy->add_option("--edge-a", toy_a, "energy:dipole:gamma,...")->capture_default_str();
  toy->add_option("--edge-b", toy_b, "energy:dipole:gamma,...")->capture_default_str();
  toy->add_option("--delta", toy_delta, "uniform f-state shift, eV (coupled)");
  toy->add_option("--scale", toy_uniform_scale, "uniform e-f dipole scale (coupled)");
  toy->add_option("--shift-table", toy_shift, "|A|x|B| shifts, row-major in a (coupled)");
  toy->add_option("--scale-table", toy_scale, "|A|x|B| scales, row-major in a (coupled)");
  toy->add_option("-o,--output", toy_out, "manifold file or - for stdout")->required();

  // yield
  double y_dipole = 0.1, y_area = 1e-10, y_density = 1e14, y_photons = 1e13, y_linewidth = 10.0, y_transition = 401.0;
  std::string y_out;
  auto* yld = app.add_subcommand("yield", "order-of-magnitude signal yield");
  yld->add_option("--dipole", y_dipole, "a.u.")->capture_default_str();
  yld->add_option("--area", y_area, "focal area, cm^2")->capture_default_str();
  yld->add_option("--density", y_density, "surface density, cm^-2")->capture_default_str();
  yld->add_option("--photons", y_photons, "photons per pulse")->capture_default_str();
  yld->add_option("--linewidth", y_linewidth, "eV")->capture_default_str();
  yld->add_option("--transition", y_transition, "eV")->capture_default_str();
  yld->add_option("-o,--output", y_out, "also write to this file");

  // plotdata
  std::string pd_in, pd_out;
  auto* pd = app.add_subcommand("plotdata", "re-emit a spectrum file as gnuplot blocks");
  pd->add_option("spectrum", pd_in)->required();
  pd->add_option("-o,--output", pd_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*validate) return cmd_validate(validate_path);

    if (*xanes_cmd) {
      const Manifold m = load_manifold(xanes_path);
      const Pulse p = make_pulse(1, xanes_carrier, xanes_env.make());
      const auto s = xcs::xanes(m, p, parse_grid(xanes_grid, "--grid"));
      io::write_file_atomic(xanes_out, io::format_spectrum(s));
      return 0;
    }

    if (*x2) {
      std::vector<Component> wanted;
      for (const auto& c : split(x2_components, ',')) {
        const auto comp = component_from_string(c);
        if (!comp) throw UsageError("unknown component '" + c + "'");
        wanted.push_back(*comp);
      }
      const Manifold m = load_manifold(x2_path);
      const auto seq = PulseSequence::two_color(x2_c1, x2_c3, x2_env.make());
      const auto g1 = parse_grid(x2_grid1, "--grid1");
      const auto g3 = parse_grid(x2_grid3, "--grid3");
      const auto direct = cross_peak_direct(m, seq, g1, g3);
      const auto parts = decompose_gsb_esa(m, seq, g1, g3);
      io::AtomicFileSet files;
      for (Component c : wanted) {
        const Spectrum2D& s = c == Component::Total ? direct.total : c == Component::GSB ? parts.gsb : parts.esa;
        files.add(with_suffix(x2_out, to_string(c) + ".tsv"), io::format_spectrum(s));
      }
      files.add(with_suffix(x2_out, "pathways.tsv"), io::format_pathways(direct.pathways));
      files.commit();
      return 0;
    }

    if (*xf) {
      const Manifold m = load_manifold(xf_path);
      auto seq = PulseSequence::two_color(xf_c1, xf_c3, xf_env.make());
      seq.t2 = xf_opts.t2;
      xf_opts.convention = xf_convention == "interval" ? DecayConvention::Interval : DecayConvention::PerOperator;
      const auto spec = fft_2d_spectrum(m, seq, xf_opts);
      Spectrum2D re = real_part(spec);
      Spectrum2D im{spec.grid1, spec.grid3, {}, spec.component, spec.metadata};
      im.values.reserve(spec.values.size());
      for (const auto& v : spec.values) im.values.push_back(v.imag());
      set_metadata(im.metadata, "part", "imag");
      if (metadata_value(spec.metadata, "decay_warning") == std::optional<std::string>("true"))
        std::cerr << "warning: signal has not decayed by t_max (residual "
                  << *metadata_value(spec.metadata, "decay_residual") << ")\n";
      io::AtomicFileSet files;
      files.add(with_suffix(xf_out, "real.tsv"), io::format_spectrum(re));
      files.add(with_suffix(xf_out, "imag.tsv"), io::format_spectrum(im));
      files.commit();
      return 0;
    }

    if (*toy) {
      const auto a = parse_edge(toy_a, EdgeLabel::A, "--edge-a");
      const auto b = parse_edge(toy_b, EdgeLabel::B, "--edge-b");
      Manifold m;
      if (toy_kind == "product") {
        if (toy_delta != 0.0 || toy_uniform_scale != 1.0 || !toy_shift.empty() || !toy_scale.empty())
          throw UsageError("coupling flags need 'toy coupled'");
        m = build_product_manifold(a, b);
      } else {
        auto coupling = CouplingSpec::uniform(a.transitions.size(), b.transitions.size(), toy_delta,
                                              toy_uniform_scale);
        if (!toy_shift.empty()) coupling.shift = parse_list(toy_shift, "--shift-table");
        if (!toy_scale.empty()) coupling.scale = parse_list(toy_scale, "--scale-table");
        m = build_coupled_manifold(a, b, coupling);
      }
      const std::string text = io::format_manifold(m);
      if (toy_out == "-")
        std::cout << text;
      else
        io::write_file_atomic(toy_out, text);
      return 0;
    }

    if (*yld) {
      const auto y = estimate_yield(y_dipole, y_area, y_density, y_photons, y_linewidth, y_transition);
      const std::string text = format_yield(y);
      if (!y_out.empty()) io::write_file_atomic(y_out, text);
      std::cout << text;
      return 0;
    }

    if (*pd) {
      const auto s = io::parse_spectrum(io::read_file(pd_in));
      io::write_file_atomic(pd_out, io::format_plotdata(s));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "xcs: " << e.what() << "\n";
    return kUsage;
  } catch (const ConfigurationError& e) {
    std::cerr << "xcs: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << "xcs: invalid manifold\n";
    for (const auto& v : e.violations()) std::cerr << "  " << to_string(v.kind) << ": " << v.message << "\n";
    return kInvalid;
  } catch (const ParseError& e) {
    std::cerr << "xcs: " << e.what() << "\n";
    return kInvalid;
  } catch (const UnknownStateError& e) {
    std::cerr << "xcs: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "xcs: " << e.what() << "\n";
    return kComputation;
  }
  return kUsage;
}
