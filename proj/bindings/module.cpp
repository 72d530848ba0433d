// Copyright 2026 The qpix authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings for the qpix core. The module mirrors the C++ API
// one-to-one; shapes and conventions (qubit order, basis indexing, seeds)
// are identical, so results match the CLI bit for bit.

#include <cstdint>
#include <sstream>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qpix/errors.hpp"
#include "qpix/grover.hpp"
#include "qpix/image.hpp"
#include "qpix/image_io.hpp"
#include "qpix/neqr.hpp"
#include "qpix/reports.hpp"
#include "qpix/statevector.hpp"
#include "qpix/verify.hpp"

namespace py = pybind11;

namespace {

std::string position_repr(const qpix::PixelPosition& p) {
    std::ostringstream out;
    out << "PixelPosition(y=" << p.y << ", x=" << p.x << ")";
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_qpix, m) {
    m.doc() = "Quantum-image encoding and amplitude-amplified pixel search";

    // Translators run newest-first, so bases register before derived classes.
    py::register_exception<qpix::Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<qpix::NoMarkedItemsError>(m, "NoMarkedItemsError",
                                                     PyExc_RuntimeError);
    py::register_exception<qpix::SearchFailureError>(m, "SearchFailureError",
                                                     PyExc_RuntimeError);
    py::register_exception<qpix::IncompleteReadoutError>(
        m, "IncompleteReadoutError", PyExc_RuntimeError);
    py::register_exception<qpix::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<qpix::ValidationError>(m, "ValidationError",
                                                  PyExc_ValueError);

    m.attr("MAX_QUBITS") = qpix::kMaxQubits;

    py::enum_<qpix::GateKind>(m, "GateKind")
        .value("H", qpix::GateKind::H)
        .value("X", qpix::GateKind::X)
        .value("Z", qpix::GateKind::Z)
        .value("I", qpix::GateKind::I);

    py::class_<qpix::Control>(m, "Control")
        .def(py::init<>())
        .def(py::init([](int qubit, int value) {
                 return qpix::Control{qubit, value};
             }),
             py::arg("qubit"), py::arg("value") = 1)
        .def_readwrite("qubit", &qpix::Control::qubit)
        .def_readwrite("value", &qpix::Control::value)
        .def(py::self == py::self);

    py::class_<qpix::Gate>(m, "Gate")
        .def_static("h", &qpix::Gate::h, py::arg("target"),
                    py::arg("controls") = std::vector<qpix::Control>{})
        .def_static("x", &qpix::Gate::x, py::arg("target"),
                    py::arg("controls") = std::vector<qpix::Control>{})
        .def_static("z", &qpix::Gate::z, py::arg("target"),
                    py::arg("controls") = std::vector<qpix::Control>{})
        .def_static("identity", &qpix::Gate::identity, py::arg("target"))
        .def_readwrite("kind", &qpix::Gate::kind)
        .def_readwrite("target", &qpix::Gate::target)
        .def_readwrite("controls", &qpix::Gate::controls)
        .def(py::self == py::self);

    py::class_<qpix::QuantumCircuit>(m, "QuantumCircuit")
        .def(py::init<int>(), py::arg("num_qubits"))
        .def_readonly("num_qubits", &qpix::QuantumCircuit::num_qubits)
        .def_readwrite("gates", &qpix::QuantumCircuit::gates)
        .def("add", &qpix::QuantumCircuit::add, py::arg("gate"),
             py::return_value_policy::reference_internal)
        .def("inverse", &qpix::QuantumCircuit::inverse)
        .def("__len__", &qpix::QuantumCircuit::size);

    py::class_<qpix::Statevector>(m, "Statevector")
        .def(py::init<int>(), py::arg("num_qubits"))
        .def_property_readonly("num_qubits", &qpix::Statevector::num_qubits)
        .def_property_readonly("dimension", &qpix::Statevector::dimension)
        .def("amplitude", &qpix::Statevector::amplitude, py::arg("index"))
        .def("amplitudes",
             [](const qpix::Statevector& state) { return state.amplitudes(); })
        .def("apply",
             py::overload_cast<const qpix::Gate&>(&qpix::Statevector::apply),
             py::arg("gate"))
        .def("apply",
             py::overload_cast<const qpix::QuantumCircuit&>(
                 &qpix::Statevector::apply),
             py::arg("circuit"))
        .def("probabilities", &qpix::Statevector::probabilities)
        .def("norm", &qpix::Statevector::norm);

    py::class_<qpix::MeasurementCounts>(m, "MeasurementCounts")
        .def(py::init<>())
        .def_readwrite("num_qubits", &qpix::MeasurementCounts::num_qubits)
        .def_readwrite("counts", &qpix::MeasurementCounts::counts)
        .def_readwrite("total_shots", &qpix::MeasurementCounts::total_shots);

    m.def("sample", &qpix::sample, py::arg("state"), py::arg("shots"),
          py::arg("seed"),
          "Draw seeded measurement shots from the state's distribution");

    py::class_<qpix::PixelPosition>(m, "PixelPosition")
        .def(py::init([](int y, int x) {
                 return qpix::PixelPosition{y, x};
             }),
             py::arg("y"), py::arg("x"))
        .def_readwrite("y", &qpix::PixelPosition::y)
        .def_readwrite("x", &qpix::PixelPosition::x)
        .def(py::self == py::self)
        .def("__repr__", &position_repr);

    py::class_<qpix::GrayImage>(m, "GrayImage")
        .def(py::init([](int n, int q, std::vector<std::uint32_t> pixels) {
                 qpix::GrayImage image(n, q, std::move(pixels));
                 qpix::validate_image(image);
                 return image;
             }),
             py::arg("n"), py::arg("q"), py::arg("pixels"))
        .def_static("filled", &qpix::GrayImage::filled, py::arg("n"),
                    py::arg("q"), py::arg("value"))
        .def_static("from_raster", &qpix::GrayImage::from_raster,
                    py::arg("width"), py::arg("height"), py::arg("q"),
                    py::arg("values"))
        .def_readonly("n", &qpix::GrayImage::n)
        .def_readonly("q", &qpix::GrayImage::q)
        .def_readwrite("pixels", &qpix::GrayImage::pixels)
        .def_property_readonly("side", &qpix::GrayImage::side)
        .def_property_readonly("pixel_count", &qpix::GrayImage::pixel_count)
        .def_property_readonly("max_intensity", &qpix::GrayImage::max_intensity)
        .def("at",
             [](const qpix::GrayImage& image, int y, int x) {
                 return image.at(y, x);
             },
             py::arg("y"), py::arg("x"))
        .def("min_intensity_value", &qpix::GrayImage::min_intensity_value)
        .def(py::self == py::self);

    m.def("validate_image", &qpix::validate_image, py::arg("image"));
    m.def(
        "random_image",
        [](int n, int q, std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            return qpix::random_image(n, q, rng);
        },
        py::arg("n"), py::arg("q"), py::arg("seed"),
        "Uniformly random image from a seeded generator");

    py::class_<qpix::NeqrLayout>(m, "NeqrLayout")
        .def_static("for_image", &qpix::NeqrLayout::for_image, py::arg("image"))
        .def_readonly("n", &qpix::NeqrLayout::n)
        .def_readonly("q", &qpix::NeqrLayout::q)
        .def("total_qubits", &qpix::NeqrLayout::total_qubits)
        .def("position_qubits", &qpix::NeqrLayout::position_qubits)
        .def("side", &qpix::NeqrLayout::side)
        .def("num_positions", &qpix::NeqrLayout::num_positions)
        .def("dimension", &qpix::NeqrLayout::dimension)
        .def("position_index", &qpix::NeqrLayout::position_index,
             py::arg("position"))
        .def("position_from_linear", &qpix::NeqrLayout::position_from_linear,
             py::arg("linear"))
        .def("basis_index", &qpix::NeqrLayout::basis_index, py::arg("position"),
             py::arg("color"))
        .def("position_of", &qpix::NeqrLayout::position_of, py::arg("index"))
        .def("color_of", &qpix::NeqrLayout::color_of, py::arg("index"));

    m.def("build_neqr_circuit", &qpix::build_neqr_circuit, py::arg("image"));
    m.def("analytic_neqr_state", &qpix::analytic_neqr_state, py::arg("image"));
    m.def("decode_from_counts", &qpix::decode_from_counts, py::arg("counts"),
          py::arg("layout"));

    py::enum_<qpix::OracleMode>(m, "OracleMode")
        .value("COLOR_EQUALS", qpix::OracleMode::ColorEquals)
        .value("INDEX_EQUALS", qpix::OracleMode::IndexEquals);

    py::class_<qpix::OracleSpec>(m, "OracleSpec")
        .def_static("color_equals", &qpix::OracleSpec::color_equals,
                    py::arg("intensity"))
        .def_static("index_equals", &qpix::OracleSpec::index_equals,
                    py::arg("position"))
        .def_readonly("mode", &qpix::OracleSpec::mode)
        .def_readonly("intensity", &qpix::OracleSpec::intensity)
        .def_readonly("position", &qpix::OracleSpec::position);

    py::class_<qpix::IterationPlan>(m, "IterationPlan")
        .def_readonly("search_space", &qpix::IterationPlan::search_space)
        .def_readonly("marked_count", &qpix::IterationPlan::marked_count)
        .def_readonly("iterations", &qpix::IterationPlan::iterations)
        .def_readonly("predicted_success",
                      &qpix::IterationPlan::predicted_success);

    py::class_<qpix::SearchReport>(m, "SearchReport")
        .def_readonly("spec", &qpix::SearchReport::spec)
        .def_readonly("marked_positions", &qpix::SearchReport::marked_positions)
        .def_readonly("plan", &qpix::SearchReport::plan)
        .def_readonly("sampled", &qpix::SearchReport::sampled)
        .def_readonly("position_probabilities",
                      &qpix::SearchReport::position_probabilities)
        .def_readonly("found", &qpix::SearchReport::found)
        .def_readonly("retries_used", &qpix::SearchReport::retries_used);

    m.def("build_phase_oracle", &qpix::build_phase_oracle, py::arg("layout"),
          py::arg("spec"));
    m.def("build_diffuser", &qpix::build_diffuser, py::arg("prep"));
    m.def("build_prep_circuit", &qpix::build_prep_circuit, py::arg("image"),
          py::arg("mode"));
    m.def("plan_iterations", &qpix::plan_iterations, py::arg("search_space"),
          py::arg("marked_count"));
    m.def("find_marked_positions", &qpix::find_marked_positions,
          py::arg("image"), py::arg("spec"));
    m.def("amplify", &qpix::amplify, py::arg("image"), py::arg("spec"),
          py::arg("plan"));
    m.def("position_probabilities", &qpix::position_probabilities,
          py::arg("state"), py::arg("layout"), py::arg("mode"));
    m.def("run_search", &qpix::run_search, py::arg("image"), py::arg("spec"),
          py::arg("shots"), py::arg("seed"),
          py::arg("max_retries") = qpix::kDefaultMaxRetries);
    m.def("find_darkest", &qpix::find_darkest, py::arg("image"),
          py::arg("shots"), py::arg("seed"),
          py::arg("max_retries") = qpix::kDefaultMaxRetries);

    m.def(
        "read_image_file",
        [](const std::string& path, std::optional<int> bit_depth) {
            return qpix::read_image_file(path, bit_depth);
        },
        py::arg("path"), py::arg("bit_depth") = std::nullopt);
    m.def(
        "write_pgm",
        [](const qpix::GrayImage& image, const std::string& path, bool plain) {
            qpix::write_pgm(image, path,
                            plain ? qpix::PgmFormat::Plain
                                  : qpix::PgmFormat::Binary);
        },
        py::arg("image"), py::arg("path"), py::arg("plain") = false);
    m.def(
        "write_csv",
        [](const qpix::GrayImage& image, const std::string& path) {
            qpix::write_csv(image, path);
        },
        py::arg("image"), py::arg("path"));

    m.def("bitstring_label", &qpix::bitstring_label, py::arg("index"),
          py::arg("num_bits"));

    m.def(
        "run_verification",
        [](int n_max, int q_max, std::uint64_t trials, std::uint64_t seed,
           bool inject_fault) {
            const qpix::VerificationRun run = qpix::run_verification(
                n_max, q_max, trials, seed, inject_fault);
            py::list properties;
            for (const qpix::PropertyResult& p : run.properties) {
                py::dict item;
                item["name"] = p.name;
                item["status"] = std::string(qpix::to_string(p.status));
                item["trials"] = p.trials;
                item["tolerance"] = p.tolerance;
                item["max_deviation"] = p.max_deviation;
                properties.append(item);
            }
            py::dict result;
            result["all_passed"] = run.all_passed();
            result["properties"] = properties;
            return result;
        },
        py::arg("n_max") = 2, py::arg("q_max") = 8, py::arg("trials") = 100,
        py::arg("seed") = 0, py::arg("inject_fault") = false,
        "Randomized self-checks; see the qpix verify command");
}
