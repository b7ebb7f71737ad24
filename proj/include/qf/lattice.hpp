#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qf/error.hpp"

namespace qf {

/// Elements of a finite structure are dense indices 0..n-1.
using Elem = int;
/// A map between finite carriers, `table[x]` is the image of `x`.
using Table = std::vector<Elem>;
using BoolMatrix = std::vector<std::vector<bool>>;

/// A finite sup-lattice given by its full order matrix.
///
/// Validation requires a partial order with a bottom element in which every
/// pair has a least upper bound; for finite posets that is enough for every
/// subset to have a join (fold the binary join over it, starting at bottom).
/// Binary joins and meets are tabulated at construction.
class Lattice {
 public:
  /// Throws ValidationError (NotAPartialOrder, NoBottom, MissingJoin, ShapeMismatch).
  static Lattice from_order(const BoolMatrix& leq);

  int size() const noexcept { return n_; }
  bool leq(Elem a, Elem b) const { return leq_[idx(a, b)] != 0; }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  Elem join(Elem a, Elem b) const { return join_[idx(a, b)]; }
  Elem meet(Elem a, Elem b) const { return meet_[idx(a, b)]; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  /// Join of a set; the empty join is bottom.
  Elem join_of(std::span<const Elem> xs) const;
  /// Meet of a set, i.e. the join of its common lower bounds; the empty meet is top.
  Elem meet_of(std::span<const Elem> xs) const;

  /// Join of {x : pred(x)}.
  template <class Pred>
  Elem join_where(Pred&& pred) const {
    Elem acc = bottom_;
    for (Elem x = 0; x < n_; ++x) {
      if (pred(x)) acc = join(acc, x);
    }
    return acc;
  }

  /// Meet of {x : pred(x)}.
  template <class Pred>
  Elem meet_where(Pred&& pred) const {
    Elem acc = top_;
    for (Elem x = 0; x < n_; ++x) {
      if (pred(x)) acc = meet(acc, x);
    }
    return acc;
  }

  BoolMatrix order_matrix() const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.n_ == b.n_ && a.leq_ == b.leq_; }

 private:
  Lattice() = default;
  std::size_t idx(Elem a, Elem b) const { return static_cast<std::size_t>(a) * n_ + b; }

  int n_ = 0;
  std::vector<std::uint8_t> leq_;
  Table join_;
  Table meet_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

using LatticePtr = std::shared_ptr<const Lattice>;

LatticePtr make_lattice(const BoolMatrix& leq);

/// Order dual: same indices, transposed order.
LatticePtr dual(const Lattice& l);

LatticePtr chain(int n);
/// Powerset of {0..k-1}; element index = bitmask.
LatticePtr powerset(int k);
/// {0, a, b, 1} with a, b incomparable (indices 0, 1, 2, 3).
LatticePtr diamond();
LatticePtr one_element();

/// A subset of a lattice ordered by restriction and re-validated as a sup-lattice.
/// Joins are those of the induced order, which need not agree with the parent's.
struct SubLattice {
  LatticePtr lattice;
  Table to_parent;               // sub index -> parent element
  std::vector<int> from_parent;  // parent element -> sub index, or -1
};

SubLattice induced_sublattice(const Lattice& parent, std::span<const Elem> members);
/// Principal up-set ↑m and down-set ↓m.
SubLattice up_segment(const Lattice& l, Elem m);
SubLattice down_segment(const Lattice& l, Elem m);

Table identity_table(int n);
/// (g ∘ f)(x) = g(f(x)).
Table compose(const Table& g, const Table& f);

bool is_monotone(const Table& f, const Lattice& src, const Lattice& dst);
bool is_antitone(const Table& f, const Lattice& src, const Lattice& dst);
bool is_surjective(const Table& f, int dst_size);
bool is_injective(const Table& f);
bool is_order_embedding(const Table& f, const Lattice& src, const Lattice& dst);
/// Pointwise order f ≤ g.
bool pointwise_leq(const Table& f, const Table& g, const Lattice& dst);

/// Non-throwing join-preservation check. On failure returns the witness: {x} for
/// a bottom violation, {x, y} for a pair with f(x∨y) ≠ f(x)∨f(y).
std::optional<std::vector<int>> join_preservation_failure(const Table& f, const Lattice& src,
                                                          const Lattice& dst);
bool is_join_preserving(const Table& f, const Lattice& src, const Lattice& dst);
bool is_meet_preserving(const Table& f, const Lattice& src, const Lattice& dst);

struct JoinHom {
  LatticePtr src;
  LatticePtr dst;
  Table table;
  bool strong = false;  // f(1) = 1
  bool dense = false;   // f(x) = 0 implies x = 0

  Elem operator()(Elem x) const { return table[x]; }
};

/// Throws ShapeMismatch, BottomNotPreserved, NotJoinPreserving(x, y).
JoinHom check_join_hom(Table table, LatticePtr src, LatticePtr dst);

/// f_*(y) = ⋁{x : f(x) ≤ y}, a table dst -> src. The adjunction
/// f(x) ≤ y ⟺ x ≤ f_*(y) is verified after construction.
Table right_adjoint(const Table& f, const Lattice& src, const Lattice& dst);
Table right_adjoint(const JoinHom& f);

struct ClosureOperator {
  LatticePtr carrier;
  Table table;
};

bool is_closure_operator(const Table& j, const Lattice& l);
/// Throws NotClosureOperator.
ClosureOperator check_closure_operator(Table table, LatticePtr carrier);

struct ClosureQuotient {
  SubLattice fixed;   // the fixed points S_j with ⋁^j X = j(⋁X)
  JoinHom projection; // x ↦ j(x), onto `fixed`
};

ClosureQuotient closure_quotient(const ClosureOperator& j);

/// Every closure operator on l, one per Moore family (top-containing,
/// meet-closed subset).
std::vector<Table> enumerate_closure_operators(const Lattice& l);

/// Covering pairs (a, b), a ⋖ b, in lexicographic order.
std::vector<std::pair<Elem, Elem>> covering_pairs(const Lattice& l);

}  // namespace qf
