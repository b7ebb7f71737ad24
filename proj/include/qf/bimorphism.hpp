#pragma once

#include <optional>
#include <vector>

#include "qf/claim.hpp"
#include "qf/lattice.hpp"

namespace qf {

/// A map L × R -> M preserving joins in each variable, stored as a table
/// with `table[x * |R| + y] = x * y`. Quantale multiplications and module
/// actions are both viewed this way for residuation.
class Bimorphism {
 public:
  /// Throws ShapeMismatch or NotBimorphic (witness: side, a, b, fixed argument;
  /// or side, fixed argument for the bottom law).
  Bimorphism(LatticePtr left, LatticePtr right, LatticePtr target, Table table);

  const Lattice& left() const { return *left_; }
  const Lattice& right() const { return *right_; }
  const Lattice& target() const { return *target_; }

  Elem operator()(Elem x, Elem y) const { return table_[static_cast<std::size_t>(x) * right_->size() + y]; }

  /// z/y = ⋁{x : x*y ≤ z}
  Elem over(Elem z, Elem y) const;
  /// x\z = ⋁{y : x*y ≤ z}
  Elem under(Elem x, Elem z) const;
  /// ann(x) = x\0
  Elem ann_of_left(Elem x) const { return under(x, target_->bottom()); }
  /// ann(y) = 0/y
  Elem ann_of_right(Elem y) const { return over(target_->bottom(), y); }

  const Table& table() const { return table_; }

 private:
  LatticePtr left_, right_, target_;
  Table table_;
};

std::optional<std::vector<int>> bimorphism_failure(const Lattice& left, const Lattice& right, const Lattice& target,
                                                   const Table& table);

/// The adjunctions y ≤ x\z ⟺ x*y ≤ z ⟺ x ≤ z/y, their annihilator cases and
/// the eight derived (in)equalities, each checked over every argument.
Claims residuation_claims(const Bimorphism& b);

}  // namespace qf
