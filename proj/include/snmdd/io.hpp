/*
 * Copyright 2026 the snmdd authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace snmdd::io {

std::vector<std::string> split(const std::string& line, char sep);

/// Shortest round-trip decimal representation. Used everywhere a double is
/// written to a file so that reruns are byte-identical.
std::string format_double(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

std::string join_path(const std::string& dir, const std::string& name);
void ensure_dir(const std::string& dir);

/// CSV with a mandatory header row. Cells are plain (no quoting); an empty
/// cell stays an empty string.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::optional<std::size_t> column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);

}  // namespace snmdd::io
