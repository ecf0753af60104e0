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

#include "io/results.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "common.hpp"

namespace qpdft::io {

ResultNode& ResultNode::operator[](const std::string& key) {
  require(is_object(), ErrorKind::internal, "result node is not an object");
  return std::get<Object>(value_)[key];
}

const ResultNode& ResultNode::at(const std::string& key) const {
  require(is_object(), ErrorKind::internal, "result node is not an object");
  const auto& obj = std::get<Object>(value_);
  auto it = obj.find(key);
  require(it != obj.end(), ErrorKind::internal, "missing result key: " + key);
  return it->second;
}

bool ResultNode::contains(const std::string& key) const {
  if (!is_object()) return false;
  return std::get<Object>(value_).count(key) > 0;
}

void ResultNode::push_back(ResultNode node) {
  if (!is_array()) {
    require(is_object() && std::get<Object>(value_).empty(), ErrorKind::internal,
            "result node is not an array");
    value_ = Array{};
  }
  std::get<Array>(value_).push_back(std::move(node));
}

double ResultNode::as_double() const {
  if (is_int()) return static_cast<double>(std::get<std::int64_t>(value_));
  require(is_double(), ErrorKind::internal, "result node is not numeric");
  return std::get<double>(value_);
}

std::int64_t ResultNode::as_int() const {
  require(is_int(), ErrorKind::internal, "result node is not an integer");
  return std::get<std::int64_t>(value_);
}

bool ResultNode::as_bool() const {
  require(is_bool(), ErrorKind::internal, "result node is not a bool");
  return std::get<bool>(value_);
}

const std::string& ResultNode::as_string() const {
  require(is_string(), ErrorKind::internal, "result node is not a string");
  return std::get<std::string>(value_);
}

const ResultNode::Array& ResultNode::as_array() const {
  require(is_array(), ErrorKind::internal, "result node is not an array");
  return std::get<Array>(value_);
}

const ResultNode::Object& ResultNode::as_object() const {
  require(is_object(), ErrorKind::internal, "result node is not an object");
  return std::get<Object>(value_);
}

namespace {

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void emit_node(const ResultNode& node, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (node.is_object()) {
    const auto& obj = node.as_object();
    if (obj.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, child] : obj) {
      if (!first) out += ",\n";
      first = false;
      out += pad_in;
      append_escaped(out, key);
      out += ": ";
      emit_node(child, out, indent + 1);
    }
    out += "\n" + pad + "}";
  } else if (node.is_array()) {
    const auto& arr = node.as_array();
    if (arr.empty()) {
      out += "[]";
      return;
    }
    out += "[\n";
    bool first = true;
    for (const auto& child : arr) {
      if (!first) out += ",\n";
      first = false;
      out += pad_in;
      emit_node(child, out, indent + 1);
    }
    out += "\n" + pad + "]";
  } else if (node.is_double()) {
    const double v = node.as_double();
    require(std::isfinite(v), ErrorKind::internal,
            "non-finite value in result document");
    out += format_sci12(v);
  } else if (node.is_int()) {
    out += std::to_string(node.as_int());
  } else if (node.is_bool()) {
    out += node.as_bool() ? "true" : "false";
  } else {
    append_escaped(out, node.as_string());
  }
}

ResultNode from_json(const nlohmann::json& j) {
  using nlohmann::json;
  switch (j.type()) {
    case json::value_t::object: {
      ResultNode::Object obj;
      for (const auto& [key, value] : j.items()) obj.emplace(key, from_json(value));
      return ResultNode(std::move(obj));
    }
    case json::value_t::array: {
      ResultNode::Array arr;
      for (const auto& value : j) arr.push_back(from_json(value));
      return ResultNode(std::move(arr));
    }
    case json::value_t::number_float:
      return ResultNode(j.get<double>());
    case json::value_t::number_integer:
    case json::value_t::number_unsigned:
      return ResultNode(static_cast<std::int64_t>(j.get<std::int64_t>()));
    case json::value_t::boolean:
      return ResultNode(j.get<bool>());
    case json::value_t::string:
      return ResultNode(j.get<std::string>());
    default:
      fail(ErrorKind::parse, "unsupported value type in result document");
  }
}

}  // namespace

std::string emit_results(const ResultNode& root) {
  std::string out;
  emit_node(root, out, 0);
  out += '\n';
  return out;
}

ResultNode parse_results(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  require(!j.is_discarded(), ErrorKind::parse, "malformed result document");
  return from_json(j);
}

}  // namespace qpdft::io
