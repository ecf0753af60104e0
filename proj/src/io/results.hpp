// Copyright 2026 the qpdft developers
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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace qpdft::io {

// ---------------------------------------------------------------------------
// Result documents.
//
// Every command emits its results as a JSON-shaped tree with deterministic
// formatting: object keys are emitted in lexicographic order and floating
// point values with exactly 12 significant digits ("9.44000000000e9").  Two
// runs with the same configuration and seeds therefore produce byte-identical
// documents.
// ---------------------------------------------------------------------------
class ResultNode {
 public:
  using Object = std::map<std::string, ResultNode>;
  using Array = std::vector<ResultNode>;

  ResultNode() : value_(Object{}) {}
  ResultNode(double v) : value_(v) {}
  ResultNode(std::int64_t v) : value_(v) {}
  ResultNode(int v) : value_(static_cast<std::int64_t>(v)) {}
  ResultNode(bool v) : value_(v) {}
  ResultNode(const char* v) : value_(std::string(v)) {}
  ResultNode(std::string v) : value_(std::move(v)) {}
  ResultNode(Array v) : value_(std::move(v)) {}
  ResultNode(Object v) : value_(std::move(v)) {}

  bool is_object() const { return std::holds_alternative<Object>(value_); }
  bool is_array() const { return std::holds_alternative<Array>(value_); }
  bool is_double() const { return std::holds_alternative<double>(value_); }
  bool is_int() const { return std::holds_alternative<std::int64_t>(value_); }
  bool is_bool() const { return std::holds_alternative<bool>(value_); }
  bool is_string() const { return std::holds_alternative<std::string>(value_); }

  /// Child accessor; creates missing keys on mutable objects.
  ResultNode& operator[](const std::string& key);
  const ResultNode& at(const std::string& key) const;
  bool contains(const std::string& key) const;

  void push_back(ResultNode node);

  double as_double() const;  // accepts int nodes too
  std::int64_t as_int() const;
  bool as_bool() const;
  const std::string& as_string() const;
  const Array& as_array() const;
  const Object& as_object() const;

 private:
  std::variant<double, std::int64_t, bool, std::string, Array, Object> value_;
};

/// Serialize a result tree; see class comment for the determinism contract.
std::string emit_results(const ResultNode& root);

/// Parse a result document back into a tree.  Throws Error(parse) on
/// malformed input.  emit_results(parse_results(emit_results(x))) equals
/// emit_results(x) byte for byte.
ResultNode parse_results(const std::string& text);

}  // namespace qpdft::io
