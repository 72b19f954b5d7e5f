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

#ifndef SXACML_AXIOM_HPP
#define SXACML_AXIOM_HPP

#include <optional>
#include <string>
#include <variant>

#include "sxacml/class_expression.hpp"
#include "sxacml/iri.hpp"
#include "sxacml/literal.hpp"

namespace sxacml {

// The superclass side is always a named class; general expressions appear
// only on the subclass side.
struct SubClassOfAxiom {
  ClassExpression sub;
  Iri sup;
};

struct EquivalentClassAxiom {
  Iri name;
  ClassExpression definition;
};

struct ObjectPropertyDecl {
  Iri name;
  std::optional<Iri> domain;
  std::optional<Iri> range;
};

struct DataPropertyDecl {
  Iri name;
  std::optional<Iri> domain;
  std::optional<LiteralKind> rangeKind;
};

struct ClassAssertionAxiom {
  Iri cls;
  Iri individual;
};

struct ObjectPropertyAssertionAxiom {
  Iri property;
  Iri subject;
  Iri object;
};

struct DataPropertyAssertionAxiom {
  Iri property;
  Iri subject;
  Literal value;
};

using Axiom = std::variant<SubClassOfAxiom, EquivalentClassAxiom, ObjectPropertyDecl,
                           DataPropertyDecl, ClassAssertionAxiom,
                           ObjectPropertyAssertionAxiom, DataPropertyAssertionAxiom>;

/// Canonical text form; set semantics over axioms use these keys.
inline std::string axiom_key(const Axiom& axiom) {
  struct Visitor {
    std::string operator()(const SubClassOfAxiom& a) const {
      return "sub|" + a.sub.key() + "|" + a.sup.str();
    }
    std::string operator()(const EquivalentClassAxiom& a) const {
      return "eq|" + a.name.str() + "|" + a.definition.key();
    }
    std::string operator()(const ObjectPropertyDecl& a) const {
      return "opd|" + a.name.str() + "|" + (a.domain ? a.domain->str() : "") + "|" +
             (a.range ? a.range->str() : "");
    }
    std::string operator()(const DataPropertyDecl& a) const {
      return "dpd|" + a.name.str() + "|" + (a.domain ? a.domain->str() : "") + "|" +
             (a.rangeKind ? to_string(*a.rangeKind) : "");
    }
    std::string operator()(const ClassAssertionAxiom& a) const {
      return "ca|" + a.cls.str() + "|" + a.individual.str();
    }
    std::string operator()(const ObjectPropertyAssertionAxiom& a) const {
      return "opa|" + a.property.str() + "|" + a.subject.str() + "|" + a.object.str();
    }
    std::string operator()(const DataPropertyAssertionAxiom& a) const {
      return "dpa|" + a.property.str() + "|" + a.subject.str() + "|" + a.value.key();
    }
  };
  return std::visit(Visitor{}, axiom);
}

}  // namespace sxacml

#endif  // SXACML_AXIOM_HPP
