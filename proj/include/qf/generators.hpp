#pragma once

#include <cstdint>
#include <vector>

#include "qf/form.hpp"
#include "qf/lattice.hpp"

namespace qf {

/// Family of subsets of {0..k-1} (bitmasks) ordered by inclusion. Index i is
/// sets[i]. Must contain ∅ and be closed under unions.
LatticePtr set_lattice(const std::vector<std::uint32_t>& sets);

/// Finite topological space on `points` points with the given open sets:
/// P(X) × O(X), S ⊥ U ⟺ S ∩ U = ∅. Right index i is opens[i].
TwoForm space_form(int points, const std::vector<std::uint32_t>& opens);

/// X = {0, 1} with opens ∅, {0}, X.
TwoForm sierpinski_form();

/// rho: X × Y relation; on P(X) × P(Y), A ⊥ B ⟺ a ρ b for all a ∈ A, b ∈ B.
TwoForm relation_form(const BoolMatrix& rho);

/// x ⊥ y ⟺ x ∧ y = 0 on L × L.
TwoForm meet_form(const LatticePtr& l);

/// x ⊥ y ⟺ x ≤ y on L × L^op.
TwoForm order_form(const LatticePtr& l);

/// f: X -> Y as a point table; direct image P(X) -> P(Y) on bitmasks.
Table direct_image(const Table& f);

/// Preimage O(Y) -> O(X) as an index table, or empty when some preimage of an
/// open set is not open.
Table open_preimage(const Table& f, const std::vector<std::uint32_t>& opens_y, const std::vector<std::uint32_t>& opens_x);

}  // namespace qf
