#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "qf/balanced.hpp"
#include "qf/form.hpp"
#include "qf/involutive.hpp"
#include "qf/lattice.hpp"
#include "qf/module.hpp"
#include "qf/quantale.hpp"

namespace qf {

using json = nlohmann::json;

/// Two forms side by side, the instance shape of the continuity and
/// orthomorphism laws.
struct FormPair {
  TwoForm source;
  TwoForm target;
};

/// An involutive quantale with a symmetric form on a carrier, the instance
/// shape of the structure bijection.
struct InvolutiveContext {
  QuantalePtr quantale;
  TwoForm form;
};

/// A module with a symmetric form; the involutive law is not enforced on load
/// so that laws can report it with a witness.
struct InvolutiveCandidate {
  ModulePtr module;
  TwoForm form;
};

using Structure = std::variant<LatticePtr, TwoForm, QuantalePtr, ModulePtr, InvolutiveCandidate, FormPair,
                               BalancedForm, InvolutiveContext>;

json to_json(const Lattice& l);
json to_json(const TwoForm& f);
json to_json(const Quantale& q);
json to_json(const Module& m);
json to_json(const BalancedForm& bf);
json to_json(const FormPair& p);
json to_json(const InvolutiveContext& c);
json to_json(const InvolutiveCandidate& c);
json to_json(const Structure& s);

/// Throws BadDocument for malformed JSON shapes, and the validators' errors
/// for well-formed documents describing invalid structures.
Structure from_json(const json& doc);
LatticePtr lattice_from_json(const json& doc);
TwoForm form_from_json(const json& doc);
QuantalePtr quantale_from_json(const json& doc);
ModulePtr module_from_json(const json& doc);

std::string kind_of(const json& doc);

/// Re-serializes a document through its structure; keeps a top-level "name".
json canonicalize(const json& doc);

/// Full validation, including the defining laws that loading does not enforce
/// (the involutive law). Throws as the validators do.
void validate_document(const json& doc);

/// Pretty-printed with sorted keys and a trailing newline.
std::string dump(const json& doc);

}  // namespace qf
