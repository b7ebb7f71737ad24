#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qf/config.hpp"
#include "qf/serialize.hpp"

namespace qf {

/// Parameters of the named generators; each generator reads only its own.
struct GeneratorParams {
  std::optional<int> n;           // chain, powerset size; element for phi_n
  std::optional<json> relation;   // relation_form: [[bool]]
  std::optional<json> table;      // monoid_quantale: [[int]]
  bool inverse = false;           // monoid_quantale: X* = X⁻¹
  std::optional<json> lattice;    // endo_quantale: lattice document
  std::optional<json> quantale;   // phi_n: quantale document
};

const std::vector<std::string>& generator_names();

/// A validated document with a "name". Throws UnknownGenerator,
/// PreconditionViolated for missing parameters, and the validators' errors.
json generate(const std::string& name, const GeneratorParams& params, const Caps& caps = {});

/// Hasse diagram(s) of the lattices a document carries, bottom first. One
/// cluster per carrier when there are several; a quantale's unit is marked.
std::string export_dot(const json& doc);

}  // namespace qf
