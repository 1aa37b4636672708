// Copyright 2026 The tbl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON encodings shared by the command-line tool.
//
// Presentations use {"generators": [...], "relators": [[["s1", 1], ...], ...]}
// with one [name, +-1] pair per letter, so a round trip is bit-exact.

#include <iosfwd>
#include <string_view>

#include "json.hpp"
#include "tbl/complex.hpp"
#include "tbl/coset.hpp"
#include "tbl/torus.hpp"
#include "tbl/words.hpp"

namespace tbl::io {

using Json = nlohmann::ordered_json;

Json to_json(const Word& w, const Presentation& p);
Json to_json(const Presentation& p);
/// Throws InputError on malformed documents, unknown generators or
/// exponents other than +-1.
Presentation presentation_from_json(const Json& j);
Presentation read_presentation(std::istream& in);
Presentation read_presentation(std::string_view text);

Json to_json(const AbelianInvariants& a);
Json to_json(const SubgroupStats& s);
Json to_json(const SubgroupPresentation& sp);
Json to_json(const Permutation& p);  // one-line, 1-based
Json to_json(const TorusPoint& q);   // ["x", "y"] as exact strings
Json to_json(const Configuration& c);
Json to_json(const RingElement& x);  // "a+b*t"
Json to_json(const Simplex& x);      // ["1:1,2", ...]
Json to_json(const AuditReport& r);
Json to_json(const OrbitReport& r);

}  // namespace tbl::io
