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


#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xcs/io.hpp"
#include "xcs/model_factory.hpp"
#include "xcs/response.hpp"
#include "xcs/spectra.hpp"
#include "xcs/version.hpp"
#include "xcs/yield.hpp"

namespace py = pybind11;
using namespace xcs;

namespace {

template <typename T>
py::array_t<T> matrix(const std::vector<T>& values, std::size_t rows, std::size_t cols) {
  py::array_t<T> out({rows, cols});
  std::copy(values.begin(), values.end(), out.mutable_data());
  return out;
}

template <typename T>
py::array_t<T> vector(const std::vector<T>& values) {
  py::array_t<T> out(values.size());
  std::copy(values.begin(), values.end(), out.mutable_data());
  return out;
}

py::array_t<double> axis(const FrequencyGrid& g) {
  std::vector<double> v(g.count());
  for (std::size_t k = 0; k < g.count(); ++k) v[k] = g[k];
  return vector(v);
}

py::dict spectrum_dict(const Spectrum2D& s) {
  py::dict d;
  d["omega1"] = axis(s.grid1);
  d["omega3"] = axis(s.grid3);
  d["values"] = matrix(s.values, s.grid3.count(), s.grid1.count());
  d["component"] = to_string(s.component);
  d["metadata"] = s.metadata;
  return d;
}

EdgeSpec edge(EdgeLabel label, const std::vector<std::tuple<double, double, double>>& rows) {
  EdgeSpec e{label, {}};
  for (const auto& [energy, dipole, gamma] : rows) e.transitions.push_back({energy, dipole, gamma});
  return e;
}

Envelope envelope(const std::string& kind, double width) {
  if (kind == "rectangular") return Envelope::rectangular(width);
  if (kind == "gaussian") return Envelope::gaussian(width);
  throw ConfigurationError("envelope must be 'rectangular' or 'gaussian'");
}

FrequencyGrid grid(const std::tuple<double, double, std::size_t>& g) {
  return {std::get<0>(g), std::get<1>(g), std::get<2>(g)};
}

}  // namespace

PYBIND11_MODULE(_xcs, m) {
  m.doc() = "Core-level x-ray linear and 2D coherent spectra";
  m.attr("__version__") = std::string(version_string);

  // Translators are tried newest first, so the base class goes first.
  const auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ConfigurationError>(m, "ConfigurationError", base.ptr());

  py::class_<Manifold>(m, "Manifold")
      .def_static("parse", &io::parse_manifold, py::arg("text"))
      .def("to_text", &io::format_manifold)
      .def("__len__", &Manifold::size)
      .def("states", [](const Manifold& self) {
        py::list out;
        for (const auto& s : self.states()) out.append(py::make_tuple(s.id, std::string(to_string(s.block)), s.energy));
        return out;
      })
      .def("transitions", [](const Manifold& self) {
        py::list out;
        for (const auto& [k, t] : self.transitions()) out.append(py::make_tuple(k.first, k.second, t.dipole, t.gamma));
        return out;
      })
      .def("violations", [](const Manifold& self) {
        std::vector<std::string> out;
        for (const auto& v : validate(self)) out.push_back(v.message);
        return out;
      })
      .def("__eq__", [](const Manifold& a, const Manifold& b) { return a == b; });

  m.def("product_manifold",
        [](const std::vector<std::tuple<double, double, double>>& a,
           const std::vector<std::tuple<double, double, double>>& b) {
          return build_product_manifold(edge(EdgeLabel::A, a), edge(EdgeLabel::B, b));
        },
        py::arg("edge_a"), py::arg("edge_b"), "Edges are lists of (energy_eV, dipole_au, gamma_eV).");

  m.def("coupled_manifold",
        [](const std::vector<std::tuple<double, double, double>>& a,
           const std::vector<std::tuple<double, double, double>>& b, std::vector<double> shift,
           std::vector<double> scale) {
          return build_coupled_manifold(edge(EdgeLabel::A, a), edge(EdgeLabel::B, b), {shift, scale});
        },
        py::arg("edge_a"), py::arg("edge_b"), py::arg("shift") = std::vector<double>{},
        py::arg("scale") = std::vector<double>{});

  m.def("random_manifold", [](std::uint64_t seed) { return random_manifold(seed); }, py::arg("seed"));

  m.def("xanes",
        [](const Manifold& man, double carrier, const std::tuple<double, double, std::size_t>& g,
           const std::string& kind, double width) {
          const auto s = xanes(man, make_pulse(1, carrier, envelope(kind, width)), grid(g));
          return py::make_tuple(axis(s.grid), vector(s.values));
        },
        py::arg("manifold"), py::arg("carrier"), py::arg("grid"), py::arg("envelope") = "rectangular",
        py::arg("width") = 5.0);

  m.def("cross_peak",
        [](const Manifold& man, double carrier1, double carrier3, const std::tuple<double, double, std::size_t>& g1,
           const std::tuple<double, double, std::size_t>& g3, const std::string& kind, double width) {
          const auto seq = PulseSequence::two_color(carrier1, carrier3, envelope(kind, width));
          const auto direct = cross_peak_direct(man, seq, grid(g1), grid(g3));
          const auto parts = decompose_gsb_esa(man, seq, grid(g1), grid(g3));
          py::dict d;
          d["total"] = spectrum_dict(direct.total);
          d["gsb"] = spectrum_dict(parts.gsb);
          d["esa"] = spectrum_dict(parts.esa);
          d["pathways"] = direct.pathways.size();
          return d;
        },
        py::arg("manifold"), py::arg("carrier1"), py::arg("carrier3"), py::arg("grid1") = std::make_tuple(-5.0, 0.02, std::size_t{501}),
        py::arg("grid3") = std::make_tuple(-5.0, 0.02, std::size_t{501}), py::arg("envelope") = "rectangular", py::arg("width") = 5.0);

  m.def("fft_spectrum",
        [](const Manifold& man, double carrier1, double carrier3, double t_max, std::size_t n, double t2) {
          auto seq = PulseSequence::two_color(carrier1, carrier3);
          seq.t2 = t2;
          FftOptions o;
          o.t_max1 = o.t_max3 = t_max;
          o.n1 = o.n3 = n;
          o.t2 = t2;
          const auto s = fft_2d_spectrum(man, seq, o);
          py::dict d;
          d["omega1"] = axis(s.grid1);
          d["omega3"] = axis(s.grid3);
          d["values"] = matrix(s.values, s.grid3.count(), s.grid1.count());
          d["metadata"] = s.metadata;
          return d;
        },
        py::arg("manifold"), py::arg("carrier1"), py::arg("carrier3"), py::arg("t_max") = 200.0, py::arg("n") = 512,
        py::arg("t2") = 0.0);

  m.def("response",
        [](const Manifold& man, double carrier1, double carrier3, double t3, double t2, double t1,
           const std::string& convention) {
          const auto c = convention == "interval"       ? DecayConvention::Interval
                         : convention == "per-operator" ? DecayConvention::PerOperator
                                                        : throw ConfigurationError("unknown decay convention");
          return response_k1(man, PulseSequence::two_color(carrier1, carrier3), t3, t2, t1, c);
        },
        py::arg("manifold"), py::arg("carrier1"), py::arg("carrier3"), py::arg("t3"), py::arg("t2"), py::arg("t1"),
        py::arg("convention") = "interval");

  m.def("estimate_yield",
        [](double dipole, double area, double density, double photons, double linewidth, double transition) {
          const auto y = estimate_yield(dipole, area, density, photons, linewidth, transition);
          py::dict d;
          d["cross_section"] = y.cross_section;
          d["p_abs"] = y.p_abs;
          d["signal_ratio"] = y.signal_ratio;
          d["photons_out_per_pulse"] = y.photons_out_per_pulse;
          return d;
        },
        py::arg("dipole"), py::arg("focal_area"), py::arg("surface_density"), py::arg("photons_per_pulse"),
        py::arg("linewidth"), py::arg("transition"));
}
