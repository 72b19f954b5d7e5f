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

#ifndef SXACML_KNOWLEDGE_BASE_HPP
#define SXACML_KNOWLEDGE_BASE_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sxacml/axiom.hpp"
#include "sxacml/iri.hpp"
#include "sxacml/literal.hpp"

namespace sxacml {

class OntologyError : public std::runtime_error {
 public:
  explicit OntologyError(const std::string& what) : std::runtime_error(what) {}
};

/// Property assertion to attach to an individual: an Iri value becomes an
/// object-property assertion, a Literal a data-property assertion.
struct PropertyAssertion {
  Iri property;
  Term value;
};

/// Indexed, deduplicated set of ontology axioms. Immutable after
/// construction; every mutating operation returns a new value, so instances
/// are safe to share read-only across concurrent evaluations.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;

  static KnowledgeBase from_axioms(PrefixTable prefixes, std::vector<Axiom> axioms,
                                   std::set<Iri> declaredClasses = {}) {
    KnowledgeBase kb;
    kb.prefixes_ = std::move(prefixes);
    kb.declaredClasses_ = std::move(declaredClasses);
    for (Axiom& axiom : axioms) kb.insert(std::move(axiom));
    kb.reindex();
    return kb;
  }

  const PrefixTable& prefixes() const { return prefixes_; }
  const std::map<std::string, Axiom>& axioms() const { return axioms_; }
  std::size_t axiom_count() const { return axioms_.size(); }
  bool contains(const Axiom& axiom) const { return axioms_.count(axiom_key(axiom)) > 0; }

  /// Explicitly declared class names (the documents' `classes` arrays).
  const std::set<Iri>& declared_classes() const { return declaredClasses_; }

  /// Declared classes plus every class referenced structurally: assertion
  /// classes, named subclass sides, defined-class names, property domains
  /// and ranges.
  const std::set<Iri>& all_classes() const { return allClasses_; }

  // -- indexes, always consistent with the axiom set --

  /// Individuals with an asserted ClassAssertion for `cls`.
  const std::set<Iri>& individuals_of(const Iri& cls) const {
    static const std::set<Iri> kEmpty;
    auto it = byClass_.find(cls);
    return it == byClass_.end() ? kEmpty : it->second;
  }

  /// Direct SubClassOf edges between named classes: sub -> set of supers.
  const std::map<Iri, std::set<Iri>>& subclass_adjacency() const { return subAdjacency_; }

  /// SubClassOf axioms whose subclass side is a complex expression.
  const std::vector<SubClassOfAxiom>& expression_subclass_axioms() const {
    return exprSubAxioms_;
  }

  const std::vector<EquivalentClassAxiom>& equivalent_classes() const { return equivalents_; }

  std::vector<Iri> object_values(const Iri& individual, const Iri& property) const {
    std::vector<Iri> out;
    auto it = objByIndividual_.find(individual);
    if (it == objByIndividual_.end()) return out;
    for (const auto& [prop, object] : it->second)
      if (prop == property) out.push_back(object);
    return out;
  }

  std::vector<Literal> data_values(const Iri& individual, const Iri& property) const {
    std::vector<Literal> out;
    auto it = dataByIndividual_.find(individual);
    if (it == dataByIndividual_.end()) return out;
    for (const auto& [prop, value] : it->second)
      if (prop == property) out.push_back(value);
    return out;
  }

  const std::vector<std::pair<Iri, Iri>>* object_assertions_of(const Iri& individual) const {
    auto it = objByIndividual_.find(individual);
    return it == objByIndividual_.end() ? nullptr : &it->second;
  }

  const std::vector<std::pair<Iri, Literal>>* data_assertions_of(const Iri& individual) const {
    auto it = dataByIndividual_.find(individual);
    return it == dataByIndividual_.end() ? nullptr : &it->second;
  }

  const std::map<Iri, std::vector<ObjectPropertyDecl>>& object_properties() const {
    return objectProps_;
  }
  const std::map<Iri, std::vector<DataPropertyDecl>>& data_properties() const {
    return dataProps_;
  }
  bool declares_object_property(const Iri& p) const { return objectProps_.count(p) > 0; }
  bool declares_data_property(const Iri& p) const { return dataProps_.count(p) > 0; }
  bool declares_property(const Iri& p) const {
    return declares_object_property(p) || declares_data_property(p);
  }

  /// Every individual named by a class assertion or appearing in a property
  /// assertion (either side of an object assertion).
  const std::set<Iri>& individuals() const { return individuals_; }

  /// Properties used in assertions but never declared.
  std::vector<Iri> undeclared_properties() const {
    std::set<Iri> seen;
    for (const auto& [individual, assertions] : objByIndividual_)
      for (const auto& [prop, object] : assertions)
        if (!declares_object_property(prop)) seen.insert(prop);
    for (const auto& [individual, assertions] : dataByIndividual_)
      for (const auto& [prop, value] : assertions)
        if (!declares_data_property(prop)) seen.insert(prop);
    return {seen.begin(), seen.end()};
  }

  /// New KnowledgeBase with extra axioms (copy-on-write).
  KnowledgeBase with_axioms(const std::vector<Axiom>& more) const {
    KnowledgeBase kb = *this;
    for (const Axiom& axiom : more) kb.insert(Axiom(axiom));
    kb.reindex();
    return kb;
  }

  KnowledgeBase with_declared_classes(const std::set<Iri>& more) const {
    KnowledgeBase kb = *this;
    kb.declaredClasses_.insert(more.begin(), more.end());
    kb.reindex();
    return kb;
  }

  friend bool operator==(const KnowledgeBase& a, const KnowledgeBase& b) {
    if (a.prefixes_ != b.prefixes_ || a.declaredClasses_ != b.declaredClasses_) return false;
    if (a.axioms_.size() != b.axioms_.size()) return false;
    auto ia = a.axioms_.begin();
    auto ib = b.axioms_.begin();
    for (; ia != a.axioms_.end(); ++ia, ++ib)
      if (ia->first != ib->first) return false;
    return true;
  }

 private:
  void insert(Axiom axiom) { axioms_.emplace(axiom_key(axiom), std::move(axiom)); }

  void reindex() {
    byClass_.clear();
    objByIndividual_.clear();
    dataByIndividual_.clear();
    subAdjacency_.clear();
    exprSubAxioms_.clear();
    equivalents_.clear();
    objectProps_.clear();
    dataProps_.clear();
    individuals_.clear();
    allClasses_ = declaredClasses_;
    for (const auto& [key, axiom] : axioms_) {
      if (const auto* a = std::get_if<ClassAssertionAxiom>(&axiom)) {
        byClass_[a->cls].insert(a->individual);
        individuals_.insert(a->individual);
        allClasses_.insert(a->cls);
      } else if (const auto* a = std::get_if<ObjectPropertyAssertionAxiom>(&axiom)) {
        objByIndividual_[a->subject].emplace_back(a->property, a->object);
        individuals_.insert(a->subject);
        individuals_.insert(a->object);
      } else if (const auto* a = std::get_if<DataPropertyAssertionAxiom>(&axiom)) {
        dataByIndividual_[a->subject].emplace_back(a->property, a->value);
        individuals_.insert(a->subject);
      } else if (const auto* a = std::get_if<SubClassOfAxiom>(&axiom)) {
        allClasses_.insert(a->sup);
        if (const auto* named = a->sub.get_if<ClassExpression::Named>()) {
          subAdjacency_[named->name].insert(a->sup);
          allClasses_.insert(named->name);
        } else {
          exprSubAxioms_.push_back(*a);
        }
      } else if (const auto* a = std::get_if<EquivalentClassAxiom>(&axiom)) {
        equivalents_.push_back(*a);
        allClasses_.insert(a->name);
      } else if (const auto* a = std::get_if<ObjectPropertyDecl>(&axiom)) {
        objectProps_[a->name].push_back(*a);
        if (a->domain) allClasses_.insert(*a->domain);
        if (a->range) allClasses_.insert(*a->range);
      } else if (const auto* a = std::get_if<DataPropertyDecl>(&axiom)) {
        dataProps_[a->name].push_back(*a);
        if (a->domain) allClasses_.insert(*a->domain);
      }
    }
  }

  PrefixTable prefixes_;
  std::map<std::string, Axiom> axioms_;  // canonical key -> axiom
  std::set<Iri> declaredClasses_;

  // derived indexes
  std::set<Iri> allClasses_;
  std::map<Iri, std::set<Iri>> byClass_;
  std::map<Iri, std::vector<std::pair<Iri, Iri>>> objByIndividual_;
  std::map<Iri, std::vector<std::pair<Iri, Literal>>> dataByIndividual_;
  std::map<Iri, std::set<Iri>> subAdjacency_;
  std::vector<SubClassOfAxiom> exprSubAxioms_;
  std::vector<EquivalentClassAxiom> equivalents_;
  std::map<Iri, std::vector<ObjectPropertyDecl>> objectProps_;
  std::map<Iri, std::vector<DataPropertyDecl>> dataProps_;
  std::set<Iri> individuals_;

  friend KnowledgeBase merge(const KnowledgeBase&, const KnowledgeBase&);
};

/// Set union of two knowledge bases. Commutative and associative up to set
/// equality. Throws OntologyError when the prefix tables bind the same
/// prefix to different namespaces.
inline KnowledgeBase merge(const KnowledgeBase& base, const KnowledgeBase& overlay) {
  KnowledgeBase out = base;
  for (const auto& [prefix, ns] : overlay.prefixes()) {
    auto it = out.prefixes_.find(prefix);
    if (it != out.prefixes_.end() && it->second != ns) {
      throw OntologyError("conflicting prefix binding '" + prefix + "': '" + it->second +
                          "' vs '" + ns + "'");
    }
    out.prefixes_.emplace(prefix, ns);
  }
  out.declaredClasses_.insert(overlay.declaredClasses_.begin(),
                              overlay.declaredClasses_.end());
  for (const auto& [key, axiom] : overlay.axioms()) out.axioms_.emplace(key, axiom);
  out.reindex();
  return out;
}

/// New KnowledgeBase with a class assertion for `individual` plus the given
/// property assertions. Throws OntologyError when the individual is already
/// asserted to the class or an assertion references an undeclared property.
inline KnowledgeBase add_individual(const KnowledgeBase& kb, const Iri& individual,
                                    const Iri& cls,
                                    const std::vector<PropertyAssertion>& assertions) {
  if (kb.individuals_of(cls).count(individual) > 0) {
    throw OntologyError("individual '" + individual.str() +
                        "' already asserted to class '" + cls.str() + "'");
  }
  std::vector<Axiom> axioms;
  axioms.push_back(ClassAssertionAxiom{cls, individual});
  for (const PropertyAssertion& pa : assertions) {
    if (const Iri* object = std::get_if<Iri>(&pa.value)) {
      if (!kb.declares_object_property(pa.property))
        throw OntologyError("assertion references undeclared object property '" +
                            pa.property.str() + "'");
      axioms.push_back(ObjectPropertyAssertionAxiom{pa.property, individual, *object});
    } else {
      if (!kb.declares_data_property(pa.property))
        throw OntologyError("assertion references undeclared data property '" +
                            pa.property.str() + "'");
      axioms.push_back(
          DataPropertyAssertionAxiom{pa.property, individual, std::get<Literal>(pa.value)});
    }
  }
  return kb.with_axioms(axioms);
}

}  // namespace sxacml

#endif  // SXACML_KNOWLEDGE_BASE_HPP
