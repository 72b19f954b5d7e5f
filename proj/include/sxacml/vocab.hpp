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

#ifndef SXACML_VOCAB_HPP
#define SXACML_VOCAB_HPP

#include <string>

#include "sxacml/iri.hpp"

namespace sxacml::vocab {

// Access-control namespace the engine itself depends on. Ontology documents
// supplying the aco: vocabulary must bind the prefix to this namespace.
inline const std::string kAcoNamespace = "https://sxacml.example/ns/aco#";

inline const Iri& aco_class_id() {
  static const Iri iri(kAcoNamespace + "classId");
  return iri;
}

inline const Iri& aco_resource_id() {
  static const Iri iri(kAcoNamespace + "resourceId");
  return iri;
}

inline const Iri& aco_request() {
  static const Iri iri(kAcoNamespace + "Request");
  return iri;
}

inline const Iri& aco_subject() {
  static const Iri iri(kAcoNamespace + "Subject");
  return iri;
}

inline const Iri& aco_resource() {
  static const Iri iri(kAcoNamespace + "Resource");
  return iri;
}

inline const Iri& aco_action() {
  static const Iri iri(kAcoNamespace + "Action");
  return iri;
}

inline const Iri& aco_environment() {
  static const Iri iri(kAcoNamespace + "Environment");
  return iri;
}

inline const Iri& aco_has_subject() {
  static const Iri iri(kAcoNamespace + "hasSubject");
  return iri;
}

inline const Iri& aco_has_resource() {
  static const Iri iri(kAcoNamespace + "hasResource");
  return iri;
}

inline const Iri& aco_has_action() {
  static const Iri iri(kAcoNamespace + "hasAction");
  return iri;
}

inline const Iri& aco_has_environment() {
  static const Iri iri(kAcoNamespace + "hasEnvironment");
  return iri;
}

}  // namespace sxacml::vocab

#endif  // SXACML_VOCAB_HPP
