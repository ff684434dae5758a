// Copyright 2026 The kvstream Authors. All Rights Reserved.
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

// Reading and writing dataset directories.
//
// Layout (UTF-8):
//   actors.csv        id,name,kind                 (required)
//   ties.csv          area,source,target[,weight]  (required)
//   decisions.json    array of decision records    (required)
//   gaps.json         array of gap assessments     (required)
//   scorecards.json   array of CVSS scorecards     (required)
//   areas.csv         id,name                      (optional)
//   codebook.json     {attribute: {category: n}}   (optional)
//   uncertainty.json  {levels: [..], order: [[lo, hi], ..]} (optional)
//
// When areas.csv is absent the area registry is derived from the ids used
// by ties and decisions, each named after its id.

#ifndef KVSTREAM_DATASET_IO_HPP_
#define KVSTREAM_DATASET_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "kvstream/error.hpp"
#include "kvstream/model.hpp"

namespace kvstream {

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Parses the directory without checking cross-references. Throws
// Error(MissingFile) or Error(ParseError).
Dataset parse_dataset(const std::filesystem::path& dir);

// parse_dataset followed by validate_dataset; throws ValidationError when
// any invariant is violated.
Dataset load_dataset(const std::filesystem::path& dir);

// Writes every file of the layout, including the optional ones when the
// dataset carries them. Throws Error(IoError).
void save_dataset(const Dataset& d, const std::filesystem::path& dir);

// Minimal RFC 4180 style helpers shared with the CSV renderer.
std::vector<std::string> split_csv_line(const std::string& line);
std::string csv_escape(const std::string& field);

}  // namespace kvstream

#endif  // KVSTREAM_DATASET_IO_HPP_
