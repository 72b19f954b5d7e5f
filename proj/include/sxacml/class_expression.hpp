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

#ifndef SXACML_CLASS_EXPRESSION_HPP
#define SXACML_CLASS_EXPRESSION_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sxacml/iri.hpp"
#include "sxacml/literal.hpp"

namespace sxacml {

enum class DataComparator { Eq, Ne, Lt, Le, Gt, Ge };

inline const char* to_string(DataComparator op) {
  switch (op) {
    case DataComparator::Eq: return "=";
    case DataComparator::Ne: return "!=";
    case DataComparator::Lt: return "<";
    case DataComparator::Le: return "<=";
    case DataComparator::Gt: return ">";
    case DataComparator::Ge: return ">=";
  }
  return "?";
}

inline std::optional<DataComparator> data_comparator_from_string(std::string_view s) {
  if (s == "=" || s == "==") return DataComparator::Eq;
  if (s == "!=") return DataComparator::Ne;
  if (s == "<") return DataComparator::Lt;
  if (s == "<=") return DataComparator::Le;
  if (s == ">") return DataComparator::Gt;
  if (s == ">=") return DataComparator::Ge;
  return std::nullopt;
}

/// Finite, acyclic description of a set of individuals: a named class, an
/// intersection, an existential restriction, a value restriction, or a
/// datatype comparison. Immutable value type; fillers are shared.
class ClassExpression {
 public:
  struct Named {
    Iri name;
  };
  struct IntersectionOf {
    std::vector<ClassExpression> operands;  // length >= 2
  };
  struct SomeValuesFrom {
    Iri property;
    std::shared_ptr<const ClassExpression> filler;
  };
  struct HasValue {
    Iri property;
    Term value;
  };
  struct DataRestriction {
    Iri property;
    DataComparator op;
    Literal bound;
  };
  using Node = std::variant<Named, IntersectionOf, SomeValuesFrom, HasValue, DataRestriction>;

  static ClassExpression named(Iri name) {
    return ClassExpression(Named{std::move(name)});
  }

  /// Throws std::invalid_argument on fewer than two operands.
  static ClassExpression intersection_of(std::vector<ClassExpression> operands) {
    if (operands.size() < 2)
      throw std::invalid_argument("IntersectionOf requires at least 2 operands");
    return ClassExpression(IntersectionOf{std::move(operands)});
  }

  static ClassExpression some_values_from(Iri property, ClassExpression filler) {
    return ClassExpression(SomeValuesFrom{
        std::move(property), std::make_shared<const ClassExpression>(std::move(filler))});
  }

  static ClassExpression has_value(Iri property, Term value) {
    return ClassExpression(HasValue{std::move(property), std::move(value)});
  }

  /// Throws std::invalid_argument when an ordered comparator is paired with
  /// an unordered literal kind.
  static ClassExpression data_restriction(Iri property, DataComparator op, Literal bound) {
    if (op != DataComparator::Eq && op != DataComparator::Ne &&
        !is_ordered_kind(bound.kind())) {
      throw std::invalid_argument(
          std::string("comparator '") + to_string(op) +
          "' requires an ordered literal kind, got " + to_string(bound.kind()));
    }
    return ClassExpression(DataRestriction{std::move(property), op, std::move(bound)});
  }

  const Node& node() const { return node_; }

  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&node_);
  }

  /// Canonical text form; drives equality.
  std::string key() const {
    struct Visitor {
      std::string operator()(const Named& n) const { return "N(" + n.name.str() + ")"; }
      std::string operator()(const IntersectionOf& n) const {
        std::string out = "A(";
        for (std::size_t i = 0; i < n.operands.size(); ++i) {
          if (i) out += ",";
          out += n.operands[i].key();
        }
        return out + ")";
      }
      std::string operator()(const SomeValuesFrom& n) const {
        return "S(" + n.property.str() + "," + n.filler->key() + ")";
      }
      std::string operator()(const HasValue& n) const {
        return "V(" + n.property.str() + "," + term_key(n.value) + ")";
      }
      std::string operator()(const DataRestriction& n) const {
        return std::string("D(") + n.property.str() + "," + to_string(n.op) + "," +
               n.bound.key() + ")";
      }
    };
    return std::visit(Visitor{}, node_);
  }

  friend bool operator==(const ClassExpression& a, const ClassExpression& b) {
    return a.key() == b.key();
  }

 private:
  explicit ClassExpression(Node node) : node_(std::move(node)) {}
  Node node_;
};

}  // namespace sxacml

#endif  // SXACML_CLASS_EXPRESSION_HPP
