#pragma once

namespace qf {

/// Enumeration limits. These are configuration values; everything that
/// enumerates takes them explicitly so a caller can raise them.
struct Caps {
  int lattice_enum = 5;           // enumerate_sup_lattices
  int endo_enum = 6;              // enumerate_join_endos
  int form_cells = 16;            // |L|·|R| when enumerating all 2-forms
  int endo_quantale = 5;          // |S| for endo_quantale
  int form_quantale_cells = 16;   // |L|·|R| for form_quantale
  int monoid = 4;                 // |M| for powerset_monoid_quantale
  int carrier = 3;                // carrier size of enumerated law instances
  int lattice_laws = 5;           // lattice size for lattice-only laws
  int bijection_target = 200;     // |Q(φ)| for the involutive structure bijection
};

/// Defaults overridden by the QF_CAP environment variable (sets `carrier`).
Caps caps_from_env();

/// Execution policy for the data-parallel kernels. `serial` is the reference
/// path the tests compare against.
enum class Exec { serial, parallel };

}  // namespace qf
