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

// JSON channel schema. Accepted shapes:
//   {"kind": "kraus",  "ops": [[[ [re,im], [re,im] ], [ [re,im], [re,im] ]], ...]}
//   {"kind": "affine", "lambda": [[..],[..],[..]], "t": [..]}
//   {"kind": "named",  "name": "amplitude_damping" | "generalized_depolarizing"
//                              | "dephasing" | "unitary", "params": {...}}
// Errors: ParseError for malformed JSON, SchemaError for a well-formed object
// that does not match the schema, ValidationError when the parsed map is not
// CPTP, InvalidParameter for out-of-domain named parameters.

#ifndef QCHAN_CHANNEL_JSON_HPP_
#define QCHAN_CHANNEL_JSON_HPP_

#include <string>

#include "json.hpp"
#include "qchan/channels.hpp"

namespace qchan {

AffineChannel channel_from_json(const nlohmann::json& j);

AffineChannel parse_channel_spec(const std::string& text);

// Serializes to the "affine" schema; parses back to the same channel.
nlohmann::json channel_to_json(const AffineChannel& ch);

}  // namespace qchan

#endif  // QCHAN_CHANNEL_JSON_HPP_
