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

// qpix: encode grayscale images as quantum states and search them.
//
//   qpix gen     write a seeded random image (PGM or CSV)
//   qpix encode  build the encoding circuit, sample it, report histogram
//   qpix search  amplitude-amplified pixel search, report per-position
//   qpix verify  randomized self-checks over encode and search
//
// Exit status: 0 success; 2 no pixel matches the search target; 3 the
// search exhausted its retries; 4 a verification property failed; 1 any
// other error. Reports are JSON (schema 1) or plain text via --format.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "qpix/errors.hpp"
#include "qpix/grover.hpp"
#include "qpix/image.hpp"
#include "qpix/image_io.hpp"
#include "qpix/neqr.hpp"
#include "qpix/reports.hpp"
#include "qpix/statevector.hpp"
#include "qpix/verify.hpp"

namespace qpix {
namespace {

enum class Command { Gen, Encode, Search, Verify };
enum class SearchMode { Darkest, Intensity, Index };
enum class ReportFormat { Json, Text };

struct RunConfig {
    Command command = Command::Gen;
    std::string input_path;
    std::string output_path;  // empty: reports go to stdout
    std::uint64_t shots = 1024;
    std::uint64_t seed = 0;
    SearchMode mode = SearchMode::Darkest;
    std::uint32_t target_intensity = 0;
    PixelPosition target_index{0, 0};
    ReportFormat format = ReportFormat::Json;
    int n = 1;
    int q = 8;
    std::optional<int> bit_depth;  // CSV depth override
    bool plain_pgm = false;
    int max_retries = static_cast<int>(kDefaultMaxRetries);
    int n_max = 2;
    int q_max = 8;
    std::uint64_t trials = 100;
    bool inject_fault = false;
};

bool has_extension(const std::string& path, const char* ext) {
    return std::filesystem::path(path).extension() == ext;
}

PixelPosition parse_index(const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == text.size()) {
        throw ValidationError("--index expects Y,X");
    }
    try {
        std::size_t used = 0;
        const int y = std::stoi(text.substr(0, comma), &used);
        if (used != comma) throw ValidationError("--index expects Y,X");
        const std::string rest = text.substr(comma + 1);
        const int x = std::stoi(rest, &used);
        if (used != rest.size()) throw ValidationError("--index expects Y,X");
        if (y < 0 || x < 0) {
            throw ValidationError("--index coordinates must be non-negative");
        }
        return PixelPosition{y, x};
    } catch (const std::invalid_argument&) {
        throw ValidationError("--index expects Y,X");
    } catch (const std::out_of_range&) {
        throw ValidationError("--index coordinates out of range");
    }
}

void emit_report(const Json& report, const RunConfig& config) {
    const std::string body = config.format == ReportFormat::Json
                                 ? report.dump(2) + "\n"
                                 : render_text(report);
    if (config.output_path.empty()) {
        std::cout << body;
    } else {
        atomic_write_file(config.output_path, body);
    }
}

GrayImage load_image(const RunConfig& config) {
    GrayImage image = read_image_file(config.input_path, config.bit_depth);
    validate_image(image);
    return image;
}

int cmd_gen(const RunConfig& config) {
    validate_image(GrayImage::filled(config.n, config.q, 0));
    std::mt19937_64 rng(config.seed);
    const GrayImage image = random_image(config.n, config.q, rng);
    if (has_extension(config.output_path, ".csv")) {
        write_csv(image, config.output_path);
    } else {
        write_pgm(image, config.output_path,
                  config.plain_pgm ? PgmFormat::Plain : PgmFormat::Binary);
    }
    std::cout << "wrote " << image.side() << "x" << image.side()
              << " image (bit depth " << image.q << ") to "
              << config.output_path << "\n";
    return 0;
}

int cmd_encode(const RunConfig& config) {
    const GrayImage image = load_image(config);
    const QuantumCircuit circuit = build_neqr_circuit(image);
    Statevector state(circuit.num_qubits);
    state.apply(circuit);
    const Statevector analytic = analytic_neqr_state(image);
    const MeasurementCounts counts = sample(state, config.shots, config.seed);
    emit_report(
        encode_report(image, circuit, analytic, counts, config.shots, config.seed),
        config);
    return 0;
}

int cmd_search(const RunConfig& config) {
    const GrayImage image = load_image(config);
    OracleSpec spec = OracleSpec::color_equals(image.min_intensity_value());
    if (config.mode == SearchMode::Intensity) {
        spec = OracleSpec::color_equals(config.target_intensity);
    } else if (config.mode == SearchMode::Index) {
        spec = OracleSpec::index_equals(config.target_index);
    }
    const SearchReport report = run_search(image, spec, config.shots,
                                           config.seed, config.max_retries);
    emit_report(search_report_to_json(image, report, config.shots, config.seed),
                config);
    return 0;
}

int cmd_verify(const RunConfig& config) {
    const VerificationRun run =
        run_verification(config.n_max, config.q_max, config.trials, config.seed,
                         config.inject_fault);
    emit_report(verify_report_to_json(run), config);
    return run.all_passed() ? 0 : 4;
}

void add_report_options(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--output", config.output_path,
                    "Report file (default: stdout)");
    cmd->add_option("--format", config.format, "Report format: json or text")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, ReportFormat>{{"json", ReportFormat::Json},
                                                {"text", ReportFormat::Text}},
            CLI::ignore_case))
        ->default_str("json");
    cmd->add_option("--seed", config.seed, "Sampling seed")
        ->capture_default_str();
}

int run(int argc, char** argv) {
    RunConfig config;
    CLI::App app{
        "qpix: quantum-image encoding and amplitude-amplified pixel search"};
    app.require_subcommand(1);

    CLI::App* gen = app.add_subcommand("gen", "Write a seeded random image");
    gen->add_option("--n", config.n, "Side exponent; the image is 2^n x 2^n")
        ->capture_default_str();
    gen->add_option("--q", config.q, "Bit depth; intensities in [0, 2^q - 1]")
        ->capture_default_str();
    gen->add_option("--seed", config.seed, "Generator seed")
        ->capture_default_str();
    gen->add_option("--output", config.output_path,
                    "Image file; .csv selects CSV, anything else PGM")
        ->required();
    gen->add_flag("--plain", config.plain_pgm,
                  "Write plain-text PGM (P2) instead of binary (P5)");

    CLI::App* encode =
        app.add_subcommand("encode", "Encode an image and sample the state");
    encode->add_option("--input", config.input_path, "Image file (PGM or CSV)")
        ->required();
    encode->add_option("--shots", config.shots, "Measurement shots")
        ->capture_default_str();
    encode->add_option("--bit-depth", config.bit_depth,
                       "Bit depth for CSV input (default: smallest that fits)");
    add_report_options(encode, config);

    CLI::App* search =
        app.add_subcommand("search", "Locate a pixel by amplitude amplification");
    search->add_option("--input", config.input_path, "Image file (PGM or CSV)")
        ->required();
    search->add_option("--shots", config.shots, "Measurement shots")
        ->capture_default_str();
    search->add_option("--bit-depth", config.bit_depth,
                       "Bit depth for CSV input (default: smallest that fits)");
    search->add_option("--max-retries", config.max_retries,
                       "Extra sampling rounds before giving up")
        ->capture_default_str();
    bool darkest = false;
    std::string intensity_text;
    std::string index_text;
    search->add_flag("--darkest", darkest,
                     "Search for the minimum intensity (default)");
    CLI::Option* intensity_opt = search->add_option(
        "--intensity", intensity_text, "Search for this intensity");
    CLI::Option* index_opt = search->add_option(
        "--index", index_text, "Search for a known position, given as Y,X");
    add_report_options(search, config);

    CLI::App* verify =
        app.add_subcommand("verify", "Run randomized self-checks");
    verify->add_option("--n-max", config.n_max, "Largest side exponent drawn")
        ->capture_default_str();
    verify->add_option("--q-max", config.q_max, "Largest bit depth drawn")
        ->capture_default_str();
    verify->add_option("--trials", config.trials, "Random images per property")
        ->capture_default_str();
    verify->add_flag("--inject-fault", config.inject_fault,
                     "Drop one controlled-X per circuit; must report failure");
    add_report_options(verify, config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            config.command = Command::Gen;
            return cmd_gen(config);
        }
        if (encode->parsed()) {
            config.command = Command::Encode;
            return cmd_encode(config);
        }
        if (search->parsed()) {
            config.command = Command::Search;
            const int mode_flags = (darkest ? 1 : 0) +
                                   (intensity_opt->count() > 0 ? 1 : 0) +
                                   (index_opt->count() > 0 ? 1 : 0);
            if (mode_flags > 1) {
                throw ValidationError(
                    "--darkest, --intensity, and --index are mutually exclusive");
            }
            config.mode = SearchMode::Darkest;
            if (intensity_opt->count() > 0) {
                config.mode = SearchMode::Intensity;
                unsigned long value = 0;
                try {
                    std::size_t used = 0;
                    value = std::stoul(intensity_text, &used);
                    if (used != intensity_text.size()) {
                        throw std::invalid_argument(intensity_text);
                    }
                } catch (const std::exception&) {
                    throw ValidationError(
                        "--intensity expects a non-negative integer");
                }
                config.target_intensity = static_cast<std::uint32_t>(value);
            } else if (index_opt->count() > 0) {
                config.mode = SearchMode::Index;
                config.target_index = parse_index(index_text);
            }
            return cmd_search(config);
        }
        config.command = Command::Verify;
        return cmd_verify(config);
    } catch (const NoMarkedItemsError& e) {
        std::cerr << "qpix: " << e.what() << "\n";
        return 2;
    } catch (const SearchFailureError& e) {
        std::cerr << "qpix: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "qpix: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace
}  // namespace qpix

int main(int argc, char** argv) { return qpix::run(argc, argv); }
