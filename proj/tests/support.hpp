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

#ifndef KVSTREAM_TESTS_SUPPORT_HPP_
#define KVSTREAM_TESTS_SUPPORT_HPP_

#include <filesystem>
#include <initializer_list>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kvstream/model.hpp"

namespace kvstream::testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(KVSTREAM_FIXTURES) / name;
}

// Fresh scratch directory under the system temp dir, removed on scope exit.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("kvstream_test_" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// Graph where every listed actor is a person unless named in `repos`.
inline FlowGraph graph(std::initializer_list<std::pair<const char*, const char*>> ties,
                       std::initializer_list<const char*> persons = {},
                       std::initializer_list<const char*> repos = {}) {
  std::map<ActorId, ActorKind> actors;
  for (const auto* p : persons) actors[p] = ActorKind::Person;
  for (const auto* r : repos) actors[r] = ActorKind::Repository;
  std::vector<KnowledgeTie> list;
  for (const auto& [a, b] : ties) list.push_back({"area", a, b, 1});
  return FlowGraph("area", actors, list);
}

inline DecisionRecord decision(std::string id, std::optional<LccOutcome> lcc,
                               std::map<std::string, AttributeValue> attrs = {}) {
  DecisionRecord d;
  d.id = std::move(id);
  d.product = "p";
  d.area = "area";
  d.attributes = std::move(attrs);
  d.lcc = lcc;
  return d;
}

inline std::vector<DecisionRecord> outcomes(std::initializer_list<LccOutcome> list) {
  std::vector<DecisionRecord> out;
  int i = 0;
  for (const auto& o : list) out.push_back(decision("d" + std::to_string(i++), o));
  return out;
}

}  // namespace kvstream::testing

#endif  // KVSTREAM_TESTS_SUPPORT_HPP_
