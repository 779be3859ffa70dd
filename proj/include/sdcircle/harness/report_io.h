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

#ifndef SDCIRCLE_HARNESS_REPORT_IO_H_
#define SDCIRCLE_HARNESS_REPORT_IO_H_

#include <filesystem>
#include <string>
#include <vector>

#include "sdcircle/errors.h"

namespace sdcircle::harness {

// A file could not be created or written; the message names the path.
class IoError : public Error {
 public:
  using Error::Error;
};

// "%.12e".
std::string format_number(double value);

// Comma-separated table with a header row. Fields are written verbatim.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(std::vector<std::string> fields);
  void add_numeric_row(const std::vector<double>& values);

  std::size_t rows() const { return rows_.size(); }
  std::string str() const;
  void write(const std::filesystem::path& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// Writes `contents`, creating parent directories. Throws IoError.
void write_text_file(const std::filesystem::path& path,
                     const std::string& contents);

}  // namespace sdcircle::harness

#endif  // SDCIRCLE_HARNESS_REPORT_IO_H_
