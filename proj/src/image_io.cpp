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

#include "qpix/image_io.hpp"

#include <bit>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace qpix {

namespace {

constexpr std::uint32_t kPgmMaxval16 = 65535;

bool is_pgm_whitespace(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Cursor over PGM header bytes. Comments run from '#' to end of line.
struct PgmCursor {
    std::string_view data;
    std::size_t pos = 0;

    bool eof() const { return pos >= data.size(); }

    void skip_space_and_comments() {
        while (!eof()) {
            const char c = data[pos];
            if (is_pgm_whitespace(c)) {
                ++pos;
            } else if (c == '#') {
                while (!eof() && data[pos] != '\n') {
                    ++pos;
                }
            } else {
                break;
            }
        }
    }

    std::uint64_t read_number(const char* field) {
        skip_space_and_comments();
        if (eof()) {
            throw ParseError(std::string("unexpected end of file while reading ") + field,
                             pos);
        }
        if (!std::isdigit(static_cast<unsigned char>(data[pos]))) {
            throw ParseError(std::string("expected a decimal ") + field, pos);
        }
        std::uint64_t value = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(data[pos]))) {
            value = value * 10 + static_cast<std::uint64_t>(data[pos] - '0');
            if (value > 0xFFFFFFFFull) {
                throw ParseError(std::string(field) + " is too large", pos);
            }
            ++pos;
        }
        return value;
    }
};

// Smallest q with maxval == 2^q - 1, or 0 when maxval has no such form.
int depth_for_maxval(std::uint64_t maxval) {
    if (maxval == 0 || !std::has_single_bit(maxval + 1)) {
        return 0;
    }
    return std::bit_width(maxval);
}

}  // namespace

GrayImage parse_pgm(std::string_view data) {
    PgmCursor cur{data};
    if (data.size() < 2 || data[0] != 'P' || (data[1] != '2' && data[1] != '5')) {
        throw ParseError("not a PGM file: expected magic P2 or P5", 0);
    }
    const bool binary = data[1] == '5';
    cur.pos = 2;

    const std::uint64_t width = cur.read_number("width");
    const std::uint64_t height = cur.read_number("height");
    const std::size_t maxval_pos = cur.pos;
    const std::uint64_t maxval = cur.read_number("maxval");

    const int q = depth_for_maxval(maxval);
    if (q == 0) {
        throw ParseError("maxval " + std::to_string(maxval) +
                             " is not of the form 2^q - 1",
                         maxval_pos);
    }

    const std::uint64_t count = width * height;
    std::vector<std::uint32_t> values;
    values.reserve(count);

    if (binary) {
        if (cur.eof() || !is_pgm_whitespace(data[cur.pos])) {
            throw ParseError("expected a single whitespace byte before the raster",
                             cur.pos);
        }
        ++cur.pos;
        const std::size_t bytes_per_sample = maxval > 255 ? 2 : 1;
        const std::size_t need = count * bytes_per_sample;
        if (data.size() - cur.pos < need) {
            throw ParseError("raster truncated: need " + std::to_string(need) +
                                 " bytes, have " + std::to_string(data.size() - cur.pos),
                             data.size());
        }
        for (std::uint64_t i = 0; i < count; ++i) {
            std::uint32_t v = static_cast<unsigned char>(data[cur.pos++]);
            if (bytes_per_sample == 2) {
                v = (v << 8) | static_cast<unsigned char>(data[cur.pos++]);
            }
            if (v > maxval) {
                throw ParseError("sample " + std::to_string(i) + " exceeds maxval",
                                 cur.pos - bytes_per_sample);
            }
            values.push_back(v);
        }
    } else {
        for (std::uint64_t i = 0; i < count; ++i) {
            const std::size_t at = cur.pos;
            const std::uint64_t v = cur.read_number("sample");
            if (v > maxval) {
                throw ParseError("sample " + std::to_string(i) + " exceeds maxval", at);
            }
            values.push_back(static_cast<std::uint32_t>(v));
        }
    }

    return GrayImage::from_raster(width, height, q, std::move(values));
}

std::string serialize_pgm(const GrayImage& image, PgmFormat format) {
    validate_image(image);
    const std::uint32_t maxval = image.max_intensity();
    if (maxval > kPgmMaxval16) {
        throw ValidationError("bit depth " + std::to_string(image.q) +
                              " exceeds the 16-bit PGM sample limit");
    }

    std::ostringstream out;
    out << (format == PgmFormat::Binary ? "P5" : "P2") << '\n'
        << image.side() << ' ' << image.side() << '\n'
        << maxval << '\n';

    if (format == PgmFormat::Binary) {
        std::string raster;
        raster.reserve(image.pixels.size() * (maxval > 255 ? 2 : 1));
        for (std::uint32_t v : image.pixels) {
            if (maxval > 255) {
                raster.push_back(static_cast<char>((v >> 8) & 0xFF));
            }
            raster.push_back(static_cast<char>(v & 0xFF));
        }
        out << raster;
    } else {
        for (int y = 0; y < image.side(); ++y) {
            for (int x = 0; x < image.side(); ++x) {
                out << image.at(y, x) << (x + 1 == image.side() ? '\n' : ' ');
            }
        }
    }
    return std::move(out).str();
}

GrayImage parse_csv(std::string_view data, std::optional<int> bit_depth) {
    std::vector<std::uint32_t> values;
    std::size_t width = 0;
    std::size_t rows = 0;
    std::uint32_t max_seen = 0;

    std::size_t line_start = 0;
    while (line_start < data.size()) {
        std::size_t line_end = data.find('\n', line_start);
        if (line_end == std::string_view::npos) {
            line_end = data.size();
        }
        std::string_view line = data.substr(line_start, line_end - line_start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }

        bool blank = true;
        for (char c : line) {
            if (!is_pgm_whitespace(c)) {
                blank = false;
                break;
            }
        }
        if (!blank) {
            std::size_t cols = 0;
            std::size_t field_start = 0;
            while (field_start <= line.size()) {
                std::size_t comma = line.find(',', field_start);
                if (comma == std::string_view::npos) {
                    comma = line.size();
                }
                std::string_view field = line.substr(field_start, comma - field_start);
                std::size_t lead = 0;
                while (lead < field.size() && is_pgm_whitespace(field[lead])) {
                    ++lead;
                }
                std::size_t trail = field.size();
                while (trail > lead && is_pgm_whitespace(field[trail - 1])) {
                    --trail;
                }
                field = field.substr(lead, trail - lead);
                const std::size_t field_offset = line_start + field_start + lead;
                if (field.empty()) {
                    throw ParseError("empty CSV field", field_offset);
                }
                std::uint64_t v = 0;
                for (char c : field) {
                    if (!std::isdigit(static_cast<unsigned char>(c))) {
                        throw ParseError("CSV field is not a non-negative decimal",
                                         field_offset);
                    }
                    v = v * 10 + static_cast<std::uint64_t>(c - '0');
                    if (v > 0xFFFFFFFFull) {
                        throw ParseError("CSV value is too large", field_offset);
                    }
                }
                values.push_back(static_cast<std::uint32_t>(v));
                max_seen = std::max(max_seen, static_cast<std::uint32_t>(v));
                ++cols;
                if (comma == line.size()) {
                    break;
                }
                field_start = comma + 1;
            }

            if (rows == 0) {
                width = cols;
            } else if (cols != width) {
                throw ParseError("CSV row " + std::to_string(rows) + " has " +
                                     std::to_string(cols) + " fields, expected " +
                                     std::to_string(width),
                                 line_start);
            }
            ++rows;
        }
        line_start = line_end + 1;
    }

    if (rows == 0) {
        throw ParseError("CSV file holds no rows", 0);
    }

    int q;
    if (bit_depth) {
        q = *bit_depth;
    } else {
        q = 1;
        while ((std::uint64_t{1} << q) <= max_seen) {
            ++q;
        }
    }
    return GrayImage::from_raster(width, rows, q, std::move(values));
}

std::string serialize_csv(const GrayImage& image) {
    validate_image(image);
    std::ostringstream out;
    for (int y = 0; y < image.side(); ++y) {
        for (int x = 0; x < image.side(); ++x) {
            out << image.at(y, x) << (x + 1 == image.side() ? '\n' : ',');
        }
    }
    return std::move(out).str();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw Error("read failed for " + path.string());
    }
    return std::move(buffer).str();
}

void atomic_write_file(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("cannot open " + tmp.string() + " for writing");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw Error("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

GrayImage read_pgm(const std::filesystem::path& path) {
    return parse_pgm(read_file(path));
}

GrayImage read_csv(const std::filesystem::path& path, std::optional<int> bit_depth) {
    return parse_csv(read_file(path), bit_depth);
}

GrayImage read_image_file(const std::filesystem::path& path,
                          std::optional<int> bit_depth) {
    const std::string data = read_file(path);
    if (data.size() >= 2 && data[0] == 'P' && (data[1] == '2' || data[1] == '5')) {
        return parse_pgm(data);
    }
    return parse_csv(data, bit_depth);
}

void write_pgm(const GrayImage& image, const std::filesystem::path& path,
               PgmFormat format) {
    atomic_write_file(path, serialize_pgm(image, format));
}

void write_csv(const GrayImage& image, const std::filesystem::path& path) {
    atomic_write_file(path, serialize_csv(image));
}

}  // namespace qpix
