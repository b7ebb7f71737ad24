#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qf/config.hpp"
#include "qf/lattice.hpp"

namespace qf {

/// All join-preserving maps src -> dst in lexicographic order of tables.
/// Backtracks over a linear extension of src: bottom is forced to bottom,
/// join-reducible elements are forced by their decompositions, and only
/// join-irreducibles branch (over monotone-compatible values).
std::vector<Table> enumerate_join_homs(const Lattice& src, const Lattice& dst, Exec exec = Exec::serial);

/// Join-endomorphisms of l. Throws CapExceeded when l.size() > caps.endo_enum.
std::vector<JoinHom> enumerate_join_endos(const LatticePtr& l, const Caps& caps = {});

/// One representative per isomorphism class of n-element sup-lattices,
/// each in canonical form, sorted by order matrix. Throws CapExceeded when
/// n > caps.lattice_enum.
std::vector<LatticePtr> enumerate_sup_lattices(int n, const Caps& caps = {});

/// Calls `visit` with each order isomorphism a -> b until it returns false.
/// Candidates are pruned by (down-set size, up-set size) signatures.
void for_each_order_isomorphism(const Lattice& a, const Lattice& b, const std::function<bool(const Table&)>& visit);
std::optional<Table> find_order_isomorphism(const Lattice& a, const Lattice& b);
bool order_isomorphic(const Lattice& a, const Lattice& b);
std::vector<Table> automorphisms(const Lattice& l);

/// Relabeling achieving the lexicographically least order matrix; `perm[x]`
/// is the new index of x.
struct CanonicalForm {
  BoolMatrix order;
  Table perm;
};
CanonicalForm canonical_form(const Lattice& l);

/// Relabels l by perm (new index of x is perm[x]).
LatticePtr relabel(const Lattice& l, const Table& perm);

}  // namespace qf
