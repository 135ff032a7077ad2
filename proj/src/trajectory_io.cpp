// Copyright 2026 The homewheel Authors
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

#include "homewheel/trajectory_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "homewheel/errors.hpp"

namespace homewheel {
namespace {

using Json = nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    throw ParseError(fmt::format("{}: {}", where, what), 0, 0);
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // e.byte is 1-based and points at the offending character.
        const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        std::string_view reason = e.what();
        if (const auto cut = reason.find(": ", reason.find("column")); cut != std::string_view::npos) {
            reason.remove_prefix(cut + 2);
        }
        throw ParseError(fmt::format("line {}, column {}: {}", line, column, reason), line, column);
    }
}

double number_at(const Json& obj, const std::string& key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) schema_error(where, fmt::format("missing \"{}\"", key));
    if (!it->is_number()) schema_error(where + "/" + key, "expected a number");
    return it->get<double>();
}

std::array<double, 3> triple_at(const Json& value, const std::string& where) {
    if (!value.is_array() || value.size() != 3) schema_error(where, "expected an array of 3 numbers");
    std::array<double, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (!value[i].is_number()) schema_error(fmt::format("{}/{}", where, i), "expected a number");
        out[i] = value[i].get<double>();
    }
    return out;
}

// Header keys shared by trajectory and config files. Returns false for unknown keys.
bool apply_header_key(const std::string& key, const Json& value, Trajectory& traj) {
    auto& g = traj.geometry;
    auto& l = traj.limits;
    const std::string where = "/" + key;
    auto number = [&]() {
        if (!value.is_number()) schema_error(where, "expected a number");
        return value.get<double>();
    };
    if (key == "wheel_radius_m") {
        g.wheel_radius = number();
    } else if (key == "gantry_offset_m") {
        g.gantry_offset = number();
    } else if (key == "upper_link_length_m") {
        g.upper_link_length = number();
    } else if (key == "lower_link_length_m") {
        g.lower_link_length = number();
    } else if (key == "servo_ranges_deg") {
        if (!value.is_array() || value.size() != kServoCount) schema_error(where, "expected 3 [min, max] pairs");
        for (std::size_t i = 0; i < kServoCount; ++i) {
            const auto& pair = value[i];
            const std::string at = fmt::format("{}/{}", where, i);
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
                schema_error(at, "expected [min, max]");
            }
            l.range[i] = {pair[0].get<double>(), pair[1].get<double>()};
        }
    } else if (key == "max_rates_deg_per_s") {
        l.max_rate = triple_at(value, where);
    } else {
        return false;
    }
    return true;
}

void check_header(const Trajectory& traj) {
    try {
        traj.geometry.check();
        traj.limits.check();
    } catch (const InvalidParameter& e) {
        schema_error("header", e.what());
    }
}

std::string fmt9(double v) { return fmt::format("{:.9g}", v); }

}  // namespace

std::string write_trajectory_json(const Trajectory& trajectory) {
    const auto& g = trajectory.geometry;
    const auto& l = trajectory.limits;
    Json doc;
    doc["format_version"] = kTrajectoryFormatVersion;
    doc["wheel_radius_m"] = g.wheel_radius;
    doc["gantry_offset_m"] = g.gantry_offset;
    doc["upper_link_length_m"] = g.upper_link_length;
    doc["lower_link_length_m"] = g.lower_link_length;
    Json ranges = Json::array();
    for (const auto& r : l.range) ranges.push_back({r.min, r.max});
    doc["servo_ranges_deg"] = ranges;
    doc["max_rates_deg_per_s"] = {l.max_rate[0], l.max_rate[1], l.max_rate[2]};
    Json wps = Json::array();
    for (const auto& wp : trajectory.waypoints) {
        Json row;
        row["t"] = wp.t;
        row["s1"] = wp.state.s1;
        row["s2"] = wp.state.s2;
        row["s3"] = wp.state.s3;
        wps.push_back(std::move(row));
    }
    doc["waypoints"] = std::move(wps);
    return doc.dump(2) + "\n";
}

Trajectory parse_trajectory_json(std::string_view text, const Trajectory& defaults) {
    const Json doc = parse_json(text);
    if (!doc.is_object()) schema_error("/", "expected a JSON object");

    Trajectory traj{defaults.geometry, defaults.limits, {}};
    bool have_version = false;
    bool have_waypoints = false;
    for (const auto& [key, value] : doc.items()) {
        if (key == "format_version") {
            if (!value.is_number_integer() || value.get<int>() != kTrajectoryFormatVersion) {
                schema_error("/format_version", fmt::format("unsupported version, expected {}", kTrajectoryFormatVersion));
            }
            have_version = true;
        } else if (key == "waypoints") {
            if (!value.is_array()) schema_error("/waypoints", "expected an array");
            for (std::size_t k = 0; k < value.size(); ++k) {
                const auto& row = value[k];
                const std::string where = fmt::format("/waypoints/{}", k);
                if (!row.is_object()) schema_error(where, "expected an object");
                for (const auto& [field, _] : row.items()) {
                    if (field != "t" && field != "s1" && field != "s2" && field != "s3") {
                        schema_error(where, fmt::format("unknown key \"{}\"", field));
                    }
                }
                traj.waypoints.push_back({number_at(row, "t", where),
                                          {number_at(row, "s1", where), number_at(row, "s2", where),
                                           number_at(row, "s3", where)}});
            }
            have_waypoints = true;
        } else if (!apply_header_key(key, value, traj)) {
            schema_error("/", fmt::format("unknown key \"{}\"", key));
        }
    }
    if (!have_version) schema_error("/", "missing \"format_version\"");
    if (!have_waypoints) schema_error("/", "missing \"waypoints\"");
    check_header(traj);
    return traj;
}

Trajectory apply_config_json(std::string_view text, const Trajectory& base) {
    const Json doc = parse_json(text);
    if (!doc.is_object()) schema_error("/", "expected a JSON object");
    Trajectory out = base;
    for (const auto& [key, value] : doc.items()) {
        if (!apply_header_key(key, value, out)) schema_error("/", fmt::format("unknown config key \"{}\"", key));
    }
    check_header(out);
    return out;
}

std::string write_trace_csv(const SimTrace& trace) {
    std::string out(kTraceHeader);
    out += '\n';
    for (const auto& s : trace.samples) {
        out += fmt::format("{},{},{},{},{},{},{},{}\n", fmt9(s.t), fmt9(s.state.s1), fmt9(s.state.s2),
                           fmt9(s.state.s3), fmt9(s.theta_wheel), fmt9(s.x), s.engaged ? 1 : 0,
                           static_cast<unsigned>(s.event_flags));
    }
    return out;
}

Trajectory parse_trace_csv(std::string_view text, const Trajectory& defaults) {
    Trajectory traj{defaults.geometry, defaults.limits, {}};
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool header_seen = false;
    while (pos < text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;

        if (!header_seen) {
            if (line != kTraceHeader) {
                throw ParseError(fmt::format("line {}, column 1: expected header \"{}\"", line_no, kTraceHeader),
                                 line_no, 1);
            }
            header_seen = true;
            continue;
        }

        std::array<double, 8> fields{};
        std::size_t field = 0;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = std::min(line.find(',', start), line.size());
            const std::size_t column = start + 1;
            if (field >= fields.size()) {
                throw ParseError(fmt::format("line {}, column {}: too many fields", line_no, column), line_no, column);
            }
            const std::string_view token = line.substr(start, comma - start);
            double value = 0.0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
                throw ParseError(
                    fmt::format("line {}, column {}: invalid number \"{}\"", line_no, column, token), line_no,
                    column);
            }
            fields[field++] = value;
            if (comma >= line.size()) break;
            start = comma + 1;
        }
        if (field != fields.size()) {
            throw ParseError(fmt::format("line {}, column {}: expected {} fields, found {}", line_no, line.size() + 1,
                                         fields.size(), field),
                             line_no, line.size() + 1);
        }
        traj.waypoints.push_back({fields[0], {fields[1], fields[2], fields[3]}});
    }
    if (!header_seen) throw ParseError("line 1, column 1: empty trace", 1, 1);
    return traj;
}

Trajectory parse_trajectory_text(std::string_view text, const Trajectory& defaults) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_trajectory_json(text, defaults);
    return parse_trace_csv(text, defaults);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("failed writing " + path.string());
}

}  // namespace homewheel
