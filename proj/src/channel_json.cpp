// Copyright 2026 the qchan authors
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

#include "qchan/channel_json.hpp"

#include <map>
#include <vector>

namespace qchan {

namespace {

using nlohmann::json;

double number_at(const json& j, const char* what) {
  if (!j.is_number())
    throw SchemaError(std::string("channel spec: ") + what +
                      " must be a number");
  return j.get<double>();
}

void expect_fields(const json& j, std::initializer_list<const char*> fields) {
  for (const char* f : fields)
    if (!j.contains(f))
      throw SchemaError(std::string("channel spec: missing field \"") + f +
                        "\"");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* f : fields)
      if (it.key() == f) known = true;
    if (!known)
      throw SchemaError("channel spec: unknown field \"" + it.key() + "\"");
  }
}

AffineChannel parse_affine(const json& j) {
  expect_fields(j, {"kind", "lambda", "t"});
  const json& lam = j.at("lambda");
  const json& t = j.at("t");
  if (!lam.is_array() || lam.size() != 3)
    throw SchemaError("channel spec: lambda must be a 3x3 array");
  if (!t.is_array() || t.size() != 3)
    throw SchemaError("channel spec: t must have 3 entries");
  AffineChannel ch;
  for (int i = 0; i < 3; ++i) {
    const json& row = lam.at(static_cast<std::size_t>(i));
    if (!row.is_array() || row.size() != 3)
      throw SchemaError("channel spec: lambda must be a 3x3 array");
    for (int k = 0; k < 3; ++k)
      ch.lambda(i, k) = number_at(row.at(static_cast<std::size_t>(k)),
                                  "lambda entry");
    ch.t[i] = number_at(t.at(static_cast<std::size_t>(i)), "t entry");
  }
  validate_affine(ch);
  return ch;
}

AffineChannel parse_kraus(const json& j) {
  expect_fields(j, {"kind", "ops"});
  const json& ops = j.at("ops");
  if (!ops.is_array() || ops.empty() || ops.size() > 8)
    throw SchemaError("channel spec: ops must list between 1 and 8 operators");
  std::vector<CMat2> ks;
  for (const json& op : ops) {
    if (!op.is_array() || op.size() != 2)
      throw SchemaError("channel spec: each op must be a 2x2 matrix");
    CMat2 k;
    for (int r = 0; r < 2; ++r) {
      const json& row = op.at(static_cast<std::size_t>(r));
      if (!row.is_array() || row.size() != 2)
        throw SchemaError("channel spec: each op must be a 2x2 matrix");
      for (int c = 0; c < 2; ++c) {
        const json& entry = row.at(static_cast<std::size_t>(c));
        if (!entry.is_array() || entry.size() != 2)
          throw SchemaError("channel spec: op entries must be [re, im] pairs");
        double re = number_at(entry.at(0), "op entry");
        double im = number_at(entry.at(1), "op entry");
        k(r, c) = cxd(re, im);
      }
    }
    ks.push_back(k);
  }
  try {
    return kraus_to_affine(KrausChannel(std::move(ks)));
  } catch (const CompletenessViolation& e) {
    throw ValidationError(e.what());
  }
}

AffineChannel parse_named(const json& j) {
  expect_fields(j, {"kind", "name", "params"});
  const json& name = j.at("name");
  const json& params = j.at("params");
  if (!name.is_string())
    throw SchemaError("channel spec: name must be a string");
  if (!params.is_object())
    throw SchemaError("channel spec: params must be an object");
  std::map<std::string, double> map;
  for (auto it = params.begin(); it != params.end(); ++it)
    map[it.key()] = number_at(it.value(), "param");
  return named_channel(name.get<std::string>(), map);
}

}  // namespace

AffineChannel channel_from_json(const json& j) {
  if (!j.is_object())
    throw SchemaError("channel spec: expected a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string())
    throw SchemaError("channel spec: missing string field \"kind\"");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "affine") return parse_affine(j);
  if (kind == "kraus") return parse_kraus(j);
  if (kind == "named") return parse_named(j);
  throw SchemaError("channel spec: unknown kind \"" + kind + "\"");
}

AffineChannel parse_channel_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("channel spec: ") + e.what());
  }
  return channel_from_json(j);
}

nlohmann::json channel_to_json(const AffineChannel& ch) {
  json lam = json::array();
  for (int i = 0; i < 3; ++i)
    lam.push_back({ch.lambda(i, 0), ch.lambda(i, 1), ch.lambda(i, 2)});
  return json{{"kind", "affine"},
              {"lambda", lam},
              {"t", {ch.t[0], ch.t[1], ch.t[2]}}};
}

}  // namespace qchan
