// Copyright 2026 The trinl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trinl/behavior_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace trinl {

using nlohmann::json;

std::string behavior_to_json(const Behavior& b) {
    json doc;
    doc["scenario"] = {3, 2, 2};
    doc["mode"] = "rational";
    json p = json::array();
    for (std::size_t e = 0; e < kEntries; ++e) p.push_back(to_string(b[e]));
    doc["p"] = p;
    return doc.dump() + "\n";
}

std::string behavior_to_json(const RealBehavior& b) {
    json doc;
    doc["scenario"] = {3, 2, 2};
    doc["mode"] = "double";
    json p = json::array();
    for (std::size_t e = 0; e < kEntries; ++e) p.push_back(b[e]);
    doc["p"] = p;
    return doc.dump() + "\n";
}

AnyBehavior behavior_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("behavior file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("behavior file must hold a JSON object");
    if (!doc.contains("scenario") || doc["scenario"] != json({3, 2, 2})) {
        throw FormatError("behavior file must declare scenario [3,2,2]");
    }
    if (!doc.contains("mode") || !doc["mode"].is_string()) throw FormatError("behavior file lacks a mode");
    const std::string mode = doc["mode"].get<std::string>();
    if (!doc.contains("p") || !doc["p"].is_array()) throw FormatError("behavior file lacks the p array");
    const json& p = doc["p"];
    if (p.size() != kEntries) {
        throw FormatError("behavior file has " + std::to_string(p.size()) + " entries, expected 64");
    }
    if (mode == "rational") {
        Behavior b;
        for (std::size_t e = 0; e < kEntries; ++e) {
            if (!p[e].is_string()) throw FormatError("rational entries must be strings");
            b[e] = parse_rational(p[e].get<std::string>());
        }
        return b;
    }
    if (mode == "double") {
        RealBehavior b;
        for (std::size_t e = 0; e < kEntries; ++e) {
            if (!p[e].is_number()) throw FormatError("double entries must be numbers");
            b[e] = p[e].get<double>();
        }
        return b;
    }
    throw FormatError("unknown behavior mode '" + mode + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write " + path.string());
    out << text;
}

void write_behavior_file(const std::filesystem::path& path, const AnyBehavior& b) {
    write_text_file(path, std::visit([](const auto& v) { return behavior_to_json(v); }, b));
}

AnyBehavior read_behavior_file(const std::filesystem::path& path) { return behavior_from_json(read_text_file(path)); }

Behavior read_rational_behavior_file(const std::filesystem::path& path) {
    AnyBehavior any = read_behavior_file(path);
    if (auto* b = std::get_if<Behavior>(&any)) return *b;
    throw FormatError(path.string() + " is not a rational-mode behavior");
}

}  // namespace trinl
