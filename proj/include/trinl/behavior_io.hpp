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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "trinl/behavior.hpp"

// Behavior file: {"scenario":[3,2,2], "mode":"rational"|"double", "p":[64 entries]}
// with entries in p[X][Y][Z][a][b][c] order; rationals as "num/den" strings.

namespace trinl {

using AnyBehavior = std::variant<Behavior, RealBehavior>;

std::string behavior_to_json(const Behavior& b);
std::string behavior_to_json(const RealBehavior& b);

AnyBehavior behavior_from_json(std::string_view text);

void write_behavior_file(const std::filesystem::path& path, const AnyBehavior& b);
AnyBehavior read_behavior_file(const std::filesystem::path& path);

/// Reads a file and insists on rational mode.
Behavior read_rational_behavior_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace trinl
