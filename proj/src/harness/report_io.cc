// Copyright 2026 The sdcircle Authors. All Rights Reserved.
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

#include "sdcircle/harness/report_io.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace sdcircle::harness {

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12e", value);
  return buf;
}

CsvTable::CsvTable(std::vector<std::string> header)
    : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> fields) {
  if (fields.size() != header_.size()) {
    throw Error("CsvTable: row has " + std::to_string(fields.size()) +
                " fields, header has " + std::to_string(header_.size()));
  }
  rows_.push_back(std::move(fields));
}

void CsvTable::add_numeric_row(const std::vector<double>& values) {
  std::vector<std::string> fields;
  fields.reserve(values.size());
  for (double v : values) fields.push_back(format_number(v));
  add_row(std::move(fields));
}

std::string CsvTable::str() const {
  std::string out;
  auto append_line = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += fields[i];
    }
    out += '\n';
  };
  append_line(header_);
  for (const auto& row : rows_) append_line(row);
  return out;
}

void CsvTable::write(const std::filesystem::path& path) const {
  write_text_file(path, str());
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& contents) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw IoError("cannot create directory '" +
                    path.parent_path().string() + "': " + ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace sdcircle::harness
