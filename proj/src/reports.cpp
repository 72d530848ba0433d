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

#include "qpix/reports.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qpix/errors.hpp"

namespace qpix {
namespace {

std::string fmt(const char* spec, double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), spec, value);
    return buffer;
}

std::string fmt_probability(double value) { return fmt("%.6f", value); }

/// Amplitudes are real in every state this engine prepares; the imaginary
/// part is kept in the report to keep the schema honest.
Json amplitude_to_json(std::uint64_t index, int num_qubits, Amplitude amp) {
    Json j;
    j["index"] = index;
    j["label"] = bitstring_label(index, num_qubits);
    j["real"] = amp.real();
    j["imag"] = amp.imag();
    return j;
}

Json gate_to_json(const Gate& gate) {
    Json j;
    j["kind"] = to_string(gate.kind);
    j["target"] = gate.target;
    Json controls = Json::array();
    for (const Control& control : gate.controls) {
        Json c;
        c["qubit"] = control.qubit;
        c["value"] = control.value;
        controls.push_back(c);
    }
    j["controls"] = controls;
    return j;
}

Json position_to_json(const PixelPosition& position) {
    Json j;
    j["y"] = position.y;
    j["x"] = position.x;
    return j;
}

Json layout_to_json(const NeqrLayout& layout) {
    Json j;
    j["color_qubits"] = layout.q;
    j["position_qubits"] = layout.position_qubits();
    j["total_qubits"] = layout.total_qubits();
    return j;
}

Json plan_to_json(const IterationPlan& plan) {
    Json j;
    j["search_space"] = plan.search_space;
    j["marked_count"] = plan.marked_count;
    j["iterations"] = plan.iterations;
    j["predicted_success"] = plan.predicted_success;
    return j;
}

std::string render_encode_text(const Json& report) {
    std::ostringstream out;
    const Json& image = report.at("image");
    const Json& layout = report.at("layout");
    const Json& circuit = report.at("circuit");
    out << "encode report (schema " << report.at("schema").get<int>() << ")\n";
    out << "image: " << image.at("width").get<int>() << "x"
        << image.at("height").get<int>() << ", bit depth "
        << image.at("q").get<int>() << "\n";
    out << "layout: " << layout.at("color_qubits").get<int>() << " color + "
        << layout.at("position_qubits").get<int>() << " position = "
        << layout.at("total_qubits").get<int>() << " qubits\n";
    out << "circuit: " << circuit.at("gate_count").get<std::size_t>()
        << " gates\n";
    out << "seed: " << report.at("seed").get<std::uint64_t>()
        << "  shots: " << report.at("shots").get<std::uint64_t>() << "\n";
    out << "nonzero amplitudes:\n";
    for (const Json& amp : report.at("amplitudes")) {
        out << "  " << amp.at("label").get<std::string>() << "  "
            << fmt("%.10g", amp.at("real").get<double>());
        const double imag = amp.at("imag").get<double>();
        if (imag != 0.0) out << (imag > 0 ? "+" : "") << fmt("%.10g", imag) << "i";
        out << "\n";
    }
    out << "histogram:\n";
    for (const Json& record : report.at("histogram")) {
        out << "  " << record.at("label").get<std::string>() << "  p="
            << fmt_probability(record.at("probability").get<double>())
            << "  count=" << record.at("count").get<std::uint64_t>() << "\n";
    }
    return out.str();
}

std::string render_search_text(const Json& report) {
    std::ostringstream out;
    const Json& plan = report.at("plan");
    out << "search report (schema " << report.at("schema").get<int>() << ")\n";
    out << "mode: " << report.at("mode").get<std::string>() << "\n";
    if (report.contains("target_intensity")) {
        out << "target intensity: "
            << report.at("target_intensity").get<std::uint32_t>() << "\n";
    } else {
        const Json& target = report.at("target_index");
        out << "target index: (" << target.at("y").get<int>() << ", "
            << target.at("x").get<int>() << ")\n";
    }
    out << "plan: N=" << plan.at("search_space").get<std::uint64_t>()
        << " M=" << plan.at("marked_count").get<std::uint64_t>()
        << " iterations=" << plan.at("iterations").get<int>()
        << " predicted_success="
        << fmt_probability(plan.at("predicted_success").get<double>()) << "\n";
    out << "marked positions:";
    for (const Json& position : report.at("marked_positions")) {
        out << " (" << position.at("y").get<int>() << ","
            << position.at("x").get<int>() << ")";
    }
    out << "\n";
    out << "seed: " << report.at("seed").get<std::uint64_t>()
        << "  shots: " << report.at("shots").get<std::uint64_t>()
        << "  retries used: " << report.at("retries_used").get<int>() << "\n";
    out << "histogram:\n";
    for (const Json& record : report.at("histogram")) {
        out << "  (" << record.at("y").get<int>() << ","
            << record.at("x").get<int>() << ")  "
            << record.at("label").get<std::string>() << "  p="
            << fmt_probability(record.at("probability").get<double>())
            << "  count=" << record.at("count").get<std::uint64_t>() << "\n";
    }
    const Json& found = report.at("found");
    out << "found: (" << found.at("y").get<int>() << ", "
        << found.at("x").get<int>() << ")"
        << (report.at("verified").get<bool>() ? " (verified)" : "") << "\n";
    return out.str();
}

std::string render_verify_text(const Json& report) {
    std::ostringstream out;
    out << "verify report (schema " << report.at("schema").get<int>() << ")\n";
    out << "bounds: n_max=" << report.at("bounds").at("n_max").get<int>()
        << " q_max=" << report.at("bounds").at("q_max").get<int>()
        << "  trials: " << report.at("trials").get<std::uint64_t>()
        << "  seed: " << report.at("seed").get<std::uint64_t>() << "\n";
    if (report.at("fault_injection").get<bool>()) {
        out << "fault injection: on\n";
    }
    for (const Json& property : report.at("properties")) {
        out << "  " << property.at("status").get<std::string>() << "  "
            << property.at("name").get<std::string>() << " (trials="
            << property.at("trials").get<std::uint64_t>() << ", max deviation "
            << fmt("%.3g", property.at("max_deviation").get<double>())
            << ", tolerance "
            << fmt("%.3g", property.at("tolerance").get<double>()) << ")\n";
        if (property.contains("detail")) {
            out << "    " << property.at("detail").get<std::string>() << "\n";
        }
    }
    out << (report.at("all_passed").get<bool>() ? "all properties passed"
                                                : "verification FAILED")
        << "\n";
    return out.str();
}

}  // namespace

std::string bitstring_label(std::uint64_t index, int num_bits) {
    if (num_bits < 1 || num_bits > 64) {
        throw ValidationError("bitstring label width must be in [1, 64]");
    }
    std::string label(static_cast<std::size_t>(num_bits), '0');
    for (int bit = 0; bit < num_bits; ++bit) {
        if (index >> bit & 1) {
            label[static_cast<std::size_t>(num_bits - 1 - bit)] = '1';
        }
    }
    return label;
}

Json image_to_json(const GrayImage& image) {
    Json j;
    j["n"] = image.n;
    j["q"] = image.q;
    j["width"] = image.side();
    j["height"] = image.side();
    j["pixels"] = image.pixels;
    return j;
}

GrayImage image_from_json(const Json& j) {
    GrayImage image(j.at("n").get<int>(), j.at("q").get<int>(),
                    j.at("pixels").get<std::vector<std::uint32_t>>());
    validate_image(image);
    return image;
}

Json encode_report(const GrayImage& image, const QuantumCircuit& circuit,
                   const Statevector& analytic, const MeasurementCounts& counts,
                   std::uint64_t shots, std::uint64_t seed) {
    const NeqrLayout layout = NeqrLayout::for_image(image);
    Json report;
    report["schema"] = kReportSchemaVersion;
    report["command"] = "encode";
    report["seed"] = seed;
    report["shots"] = shots;
    report["image"] = image_to_json(image);
    report["layout"] = layout_to_json(layout);
    Json circuit_json;
    circuit_json["num_qubits"] = circuit.num_qubits;
    circuit_json["gate_count"] = circuit.size();
    Json gates = Json::array();
    for (const Gate& gate : circuit.gates) gates.push_back(gate_to_json(gate));
    circuit_json["gates"] = gates;
    report["circuit"] = circuit_json;

    Json amplitudes = Json::array();
    const std::vector<double> probs = analytic.probabilities();
    std::set<std::uint64_t> support;
    for (std::uint64_t k = 0; k < analytic.dimension(); ++k) {
        if (probs[k] != 0.0) support.insert(k);
    }
    for (std::uint64_t k : support) {
        amplitudes.push_back(
            amplitude_to_json(k, layout.total_qubits(), analytic.amplitude(k)));
    }
    report["amplitudes"] = amplitudes;

    // Histogram rows cover the analytic support plus any sampled index, so
    // a bug that leaks mass outside the support stays visible.
    std::set<std::uint64_t> rows = support;
    for (const auto& [index, count] : counts.counts) rows.insert(index);
    Json histogram = Json::array();
    for (std::uint64_t k : rows) {
        Json record;
        record["label"] = bitstring_label(k, layout.total_qubits());
        record["probability"] = probs[k];
        const auto it = counts.counts.find(k);
        record["count"] = it == counts.counts.end() ? 0 : it->second;
        histogram.push_back(record);
    }
    report["histogram"] = histogram;
    return report;
}

Json search_report_to_json(const GrayImage& image, const SearchReport& report,
                           std::uint64_t shots, std::uint64_t seed) {
    const NeqrLayout layout = NeqrLayout::for_image(image);
    Json j;
    j["schema"] = kReportSchemaVersion;
    j["command"] = "search";
    j["seed"] = seed;
    j["shots"] = shots;
    j["image"] = image_to_json(image);
    j["mode"] = to_string(report.spec.mode);
    if (report.spec.mode == OracleMode::ColorEquals) {
        j["target_intensity"] = report.spec.intensity;
    } else {
        j["target_index"] = position_to_json(report.spec.position);
    }
    j["plan"] = plan_to_json(report.plan);
    Json marked = Json::array();
    for (const PixelPosition& position : report.marked_positions) {
        marked.push_back(position_to_json(position));
    }
    j["marked_positions"] = marked;
    j["found"] = position_to_json(report.found);
    j["verified"] = true;
    j["retries_used"] = report.retries_used;

    // report.sampled is already projected onto the position register, so
    // its keys are linear position indices.
    const std::map<std::uint64_t, std::uint64_t>& position_counts =
        report.sampled.counts;
    Json histogram = Json::array();
    for (std::uint64_t linear = 0; linear < layout.num_positions(); ++linear) {
        const PixelPosition position = layout.position_from_linear(linear);
        Json record;
        record["y"] = position.y;
        record["x"] = position.x;
        record["label"] = bitstring_label(linear, layout.position_qubits());
        record["probability"] = report.position_probabilities[linear];
        const auto it = position_counts.find(linear);
        record["count"] = it == position_counts.end() ? 0 : it->second;
        histogram.push_back(record);
    }
    j["histogram"] = histogram;
    return j;
}

Json verify_report_to_json(const VerificationRun& run) {
    Json j;
    j["schema"] = kReportSchemaVersion;
    j["command"] = "verify";
    j["seed"] = run.seed;
    Json bounds;
    bounds["n_max"] = run.n_max;
    bounds["q_max"] = run.q_max;
    j["bounds"] = bounds;
    j["trials"] = run.trials;
    j["fault_injection"] = run.fault_injection;
    Json properties = Json::array();
    for (const PropertyResult& property : run.properties) {
        Json p;
        p["name"] = property.name;
        p["status"] = to_string(property.status);
        p["trials"] = property.trials;
        p["tolerance"] = property.tolerance;
        p["max_deviation"] = property.max_deviation;
        if (!property.detail.empty()) p["detail"] = property.detail;
        if (property.failing_case.has_value()) {
            p["failing_case"] = image_to_json(*property.failing_case);
        }
        properties.push_back(p);
    }
    j["properties"] = properties;
    j["all_passed"] = run.all_passed();
    return j;
}

std::string render_text(const Json& report) {
    const std::string command = report.at("command").get<std::string>();
    if (command == "encode") return render_encode_text(report);
    if (command == "search") return render_search_text(report);
    if (command == "verify") return render_verify_text(report);
    throw ValidationError("unknown report command: " + command);
}

}  // namespace qpix
