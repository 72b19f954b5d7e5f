// Copyright 2026 The sxacml authors.
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

#ifndef SXACML_IRI_HPP
#define SXACML_IRI_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace sxacml {

/// Absolute identifier. Two Iris are equal iff their resolved absolute
/// forms are byte-equal.
class Iri {
 public:
  Iri() = default;
  explicit Iri(std::string value) : value_(std::move(value)) {}

  const std::string& str() const { return value_; }
  bool empty() const { return value_.empty(); }

  friend bool operator==(const Iri&, const Iri&) = default;
  friend auto operator<=>(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

struct IriHash {
  std::size_t operator()(const Iri& iri) const {
    return std::hash<std::string>{}(iri.str());
  }
};

/// prefix -> namespace
using PrefixTable = std::map<std::string, std::string>;

/// Expands a possibly prefix-form name against a prefix table. A declared
/// prefix wins; otherwise any name containing ':' is taken as already
/// absolute. A name with no ':' and no declared prefix does not resolve.
inline std::optional<Iri> resolve_iri(std::string_view text,
                                      const PrefixTable& prefixes,
                                      std::string* error = nullptr) {
  if (text.empty()) {
    if (error) *error = "empty identifier";
    return std::nullopt;
  }
  const std::size_t colon = text.find(':');
  if (colon != std::string_view::npos) {
    const std::string prefix(text.substr(0, colon));
    auto it = prefixes.find(prefix);
    if (it != prefixes.end()) {
      return Iri(it->second + std::string(text.substr(colon + 1)));
    }
    return Iri(std::string(text));  // scheme form, already absolute
  }
  if (error) {
    *error = "identifier '" + std::string(text) +
             "' has no scheme separator and no declared prefix";
  }
  return std::nullopt;
}

}  // namespace sxacml

#endif  // SXACML_IRI_HPP
