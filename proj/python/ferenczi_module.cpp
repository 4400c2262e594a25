#include "ferenczi/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

using ferenczi::Json;

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default:
      return py::none();
  }
}

/// Thin value wrapper so schedules round-trip through Python without
/// reserializing.
struct PySchedule {
  ferenczi::ParameterSchedule schedule;
};

PySchedule load_schedule(const std::string& text) {
  return PySchedule{ferenczi::schedule_from_json(Json::parse(text))};
}

PySchedule load_preset(const std::string& name, const std::map<std::string, long long>& params) {
  return PySchedule{ferenczi::preset(name, params).schedule};
}

}  // namespace

PYBIND11_MODULE(_ferenczi, m) {
  m.doc() = "exact analysis of minimal rank-one (Ferenczi) subshifts";

  py::register_exception<ferenczi::FerencziError>(m, "FerencziError");

  py::class_<PySchedule>(m, "Schedule")
      .def("__repr__",
           [](const PySchedule& s) {
             return "Schedule(" + ferenczi::schedule_to_json(s.schedule).dump() + ")";
           })
      .def("to_json", [](const PySchedule& s) { return ferenczi::schedule_to_json(s.schedule).dump(); })
      .def("standard", [](const PySchedule& s) { return s.schedule.standard(); })
      .def("standardize", [](const PySchedule& s) { return PySchedule{standardize(s.schedule)}; })
      .def(
          "contract",
          [](const PySchedule& s, const std::vector<long long>& points, long long stride) {
            return PySchedule{contract(s.schedule, points, stride)};
          },
          py::arg("cut_points"), py::arg("stride") = 1)
      .def("cut", [](const PySchedule& s, long long n) { return s.schedule.cut(n).str(); })
      .def("stage", [](const PySchedule& s, long long n) { return s.schedule.stage(n).spacers; })
      .def("alphabets",
           [](const PySchedule& s) { return json_to_py(alphabet_tower_to_json(alphabets(s.schedule))); })
      .def("spacer_counts",
           [](const PySchedule& s, long long n) {
             return json_to_py(ferenczi::rational_vector_to_json(spacer_counts(s.schedule, n)));
           })
      .def("word",
           [](const PySchedule& s, long long n) {
             return ferenczi::GeneratingWords(s.schedule).word(n);
           })
      .def("word_length",
           [](const PySchedule& s, long long n) {
             return ferenczi::GeneratingWords(s.schedule).length(n).str();
           })
      .def("language",
           [](const PySchedule& s, long long ell) {
             ferenczi::GeneratingWords w(s.schedule);
             return json_to_py(factor_set_to_json(language(w, ell)));
           })
      .def("factor_stats",
           [](const PySchedule& s, long long ell) {
             ferenczi::GeneratingWords w(s.schedule);
             const auto [a, b] = factor_stats(w, ell);
             return py::make_tuple(a.str(), b.str());
           })
      .def("locate",
           [](const PySchedule& s, const std::string& position, long long target, long long ambient) {
             ferenczi::GeneratingWords w(s.schedule);
             const auto addrs = locate(w, ferenczi::BigInt(position), target, ambient);
             py::list out;
             for (const auto& a : addrs) out.append(json_to_py(tower_address_to_json(a)));
             return out;
           })
      .def("asymptotic_tail",
           [](const PySchedule& s, long long ell) {
             ferenczi::GeneratingWords w(s.schedule);
             return asymptotic_tail(w, ell);
           })
      .def("morphism",
           [](const PySchedule& s, const std::string& variant, long long n) {
             const auto v = variant == "tilde"    ? ferenczi::Variant::Tilde
                            : variant == "proper" ? ferenczi::Variant::Proper
                                                  : ferenczi::Variant::Shifted;
             return json_to_py(morphism_to_json(build(s.schedule, v, n)));
           })
      .def("composition_matrix",
           [](const PySchedule& s, long long n) {
             ferenczi::DirectiveSequence seq(s.schedule, ferenczi::Variant::Proper);
             return json_to_py(matrix_to_json(composition_matrix(seq.level(n))));
           })
      .def("heights",
           [](const PySchedule& s, long long n) {
             return json_to_py(ferenczi::rational_vector_to_json(heights(s.schedule, n)));
           })
      .def("q_product",
           [](const PySchedule& s, long long m, long long n) {
             return q_product(s.schedule, m, n).str();
           })
      .def("product_closed_form",
           [](const PySchedule& s, long long m, long long n) {
             return json_to_py(matrix_to_json(product_closed_form(s.schedule, m, n)));
           })
      .def("inverse_closed_form",
           [](const PySchedule& s, long long m, long long n) {
             return json_to_py(matrix_to_json(inverse_closed_form(s.schedule, m, n)));
           })
      .def("measure_vector",
           [](const PySchedule& s, long long m) {
             return json_to_py(interval_vector_to_json(measure_vector(s.schedule, m).values));
           })
      .def("tower_masses",
           [](const PySchedule& s, long long n) {
             return json_to_py(interval_vector_to_json(tower_masses(s.schedule, n)));
           })
      .def(
          "cylinder_measure",
          [](const PySchedule& s, const std::string& u, const std::string& width) {
            return json_to_py(ferenczi::interval_to_json(
                cylinder_measure(s.schedule, u, ferenczi::rational_from_string(width))));
          },
          py::arg("word"), py::arg("width") = "1/10000")
      .def("rank_report",
           [](const PySchedule& s) { return json_to_py(rank_report_to_json(rank_report(s.schedule))); })
      .def("continuous_eigenvalues",
           [](const PySchedule& s) {
             return json_to_py(eigenvalue_report_to_json(continuous_eigenvalues(s.schedule)));
           })
      .def(
          "mixing_certificate",
          [](const PySchedule& s, long long depth) {
            return json_to_py(mixing_certificate_to_json(mixing_certificate(s.schedule, depth)));
          },
          py::arg("depth") = 3)
      .def(
          "veech_test",
          [](const PySchedule& s, const std::string& alpha, const std::string& error,
             long long max_level) {
            const ferenczi::AlphaValue a{ferenczi::rational_from_string(alpha),
                                         ferenczi::rational_from_string(error)};
            return json_to_py(veech_trace_to_json(veech_test(s.schedule, a, max_level)));
          },
          py::arg("alpha"), py::arg("error") = "0", py::arg("max_level") = 12)
      .def("sufficiency_sum",
           [](const PySchedule& s, long long m, long long n, ferenczi::Spacer a, ferenczi::Spacer b,
              long long p, long long q) {
             return json_to_py(sufficiency_sum_to_json(sufficiency_sum(s.schedule, m, n, a, b, p, q)));
           })
      .def("measurable_eigenvalue_report",
           [](const PySchedule& s) {
             return json_to_py(
                 measurable_report_to_json(measurable_eigenvalue_report(s.schedule)));
           })
      .def("dimension_group",
           [](const PySchedule& s) {
             return json_to_py(dimension_group_to_json(dimension_group(s.schedule)));
           })
      .def("orbit_equivalence", [](const PySchedule& s) {
        return json_to_py(orbit_equivalence_to_json(orbit_equivalence(s.schedule)));
      });

  m.def("load_schedule", &load_schedule, py::arg("json_text"),
        "parse a schedule from its JSON document");
  m.def("preset", &load_preset, py::arg("name"),
        py::arg("params") = std::map<std::string, long long>{});
  m.def("preset_names", [] { return ferenczi::preset_names(); });
  m.def("realize", [](const std::string& json_text) {
    const auto data = ferenczi::ferenczi_type_data_from_json(Json::parse(json_text));
    const auto result = ferenczi::realize(data);
    py::dict out;
    out["schedule"] = PySchedule{result.schedule};
    out["report"] = json_to_py(realize_result_to_json(result));
    return out;
  });
  m.def("decode_centered",
        [](const PySchedule& s, const std::string& window, long long level) {
          ferenczi::DirectiveSequence seq(s.schedule, ferenczi::Variant::Proper);
          return json_to_py(decode_result_to_json(decode_centered(window, seq, level)));
        });

  m.attr("__version__") = "0.1.0";
}
