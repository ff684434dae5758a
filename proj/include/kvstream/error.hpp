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

#ifndef KVSTREAM_ERROR_HPP_
#define KVSTREAM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace kvstream {

enum class ErrorCode {
  // Input errors (CLI exit code 2).
  MissingFile,
  ParseError,
  IoError,
  UnsupportedFormat,
  // Dataset failed validation after parsing (CLI exit code 1).
  ValidationFailed,
  // Analysis preconditions (CLI exit code 3).
  InsufficientActors,
  NoPersonTies,
  NoTies,
  NoDecisions,
  NoRecordedOutcomes,
  MissingCodebookEntry,
  HeterogeneousAttributes,
  DegenerateData,
  UndefinedScenario,
  UnknownLevel,
  InvalidPoset,
  EmptyDimension,
  OutOfRange,
  UnknownArea,
};

std::string_view to_string(ErrorCode code);

// True for errors caused by unreadable or malformed input rather than by
// analysis preconditions.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kvstream

#endif  // KVSTREAM_ERROR_HPP_
