#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "qf/bimorphism.hpp"
#include "qf/claim.hpp"
#include "qf/config.hpp"
#include "qf/form.hpp"
#include "qf/lattice.hpp"

namespace qf {

/// A sup-lattice with an associative bimorphic multiplication, optionally a
/// two-sided unit and an involution (involutive, antimultiplicative,
/// join-preserving).
struct Quantale {
  LatticePtr carrier;
  Table mult;  // mult[a * n + b] = a ⊙ b
  std::optional<Elem> unit;
  std::optional<Table> involution;

  int size() const { return carrier->size(); }
  const Lattice& lattice() const { return *carrier; }
  Elem mul(Elem a, Elem b) const { return mult[static_cast<std::size_t>(a) * carrier->size() + b]; }
  Elem star(Elem a) const { return (*involution)[a]; }
  Elem top() const { return carrier->top(); }
  Elem bottom() const { return carrier->bottom(); }

  std::vector<Table> mult_rows() const;
};

using QuantalePtr = std::shared_ptr<const Quantale>;

/// Throws ShapeMismatch, NotAssociative(a, b, c), NotBimorphic(side, ...),
/// BadUnit(a) or BadInvolution(law, witness...) where law is 0 for a** = a,
/// 1 for (a⊙b)* = b*⊙a*, 2 for join preservation.
QuantalePtr make_quantale(LatticePtr carrier, const std::vector<Table>& mult, std::optional<Elem> unit = std::nullopt,
                          std::optional<Table> involution = std::nullopt);

/// Same, from a flat table.
QuantalePtr make_quantale_flat(LatticePtr carrier, Table mult, std::optional<Elem> unit = std::nullopt,
                               std::optional<Table> involution = std::nullopt);

Bimorphism multiplication(const Quantale& q);

std::optional<Elem> find_unit(const Quantale& q);

/// Copy of q with a new unit/involution (validated).
QuantalePtr with_structure(const Quantale& q, std::optional<Elem> unit, std::optional<Table> involution);

struct SidedElements {
  std::vector<Elem> left;   // 1 ⊙ a ≤ a
  std::vector<Elem> right;  // a ⊙ 1 ≤ a
  std::vector<Elem> two_sided;
  bool factor = false;      // two-sided elements are exactly {0, 1}
};

SidedElements sided_elements(const Quantale& q);

/// ls(Q) and rs(Q) as sub-sup-lattices. Throws LawViolated if the sided
/// elements are not closed under the joins of Q.
SubLattice left_sided_lattice(const Quantale& q);
SubLattice right_sided_lattice(const Quantale& q);

/// The quantale of join-endomorphisms of s, pointwise ordered, with
/// f ⊙ g = g ∘ f and unit the identity. `maps[i]` is element i.
struct EndoQuantale {
  QuantalePtr quantale;
  std::vector<Table> maps;
  Elem index_of(const Table& f) const;
};

/// Throws CapExceeded when |s| > caps.endo_quantale.
EndoQuantale endo_quantale(const LatticePtr& s, const Caps& caps = {});

/// c_s(x) = s for x ≠ 0, c_s(0) = 0.
Table constant_map(const Lattice& l, Elem s);
/// a_s(x) = 1 if x ≰ s, 0 otherwise.
Table annihilator_map(const Lattice& l, Elem s);

/// P(M) with X ⊙ Y = {xy}, unit {e}. `table[x][y] = xy`. With
/// `inverse_involution` (M must be a group) X* = {x⁻¹ : x ∈ X}.
/// Throws NotAMonoid, CapExceeded when |M| > caps.monoid.
QuantalePtr powerset_monoid_quantale(const std::vector<Table>& table, bool inverse_involution = false,
                                     const Caps& caps = {});

/// Φ(Q): a ⊥ b ⟺ a ⊙ b = 0 on ls(Q) × rs(Q).
struct PhiOfQuantale {
  TwoForm form;
  SubLattice ls;
  SubLattice rs;
};

PhiOfQuantale phi_of_quantale(const Quantale& q);

/// Q(φ): continuous endomaps (f, g) of φ, componentwise order,
/// (f, g) ⊙ (f', g') = (f' ∘ f, g ∘ g'), unit (id, id).
struct FormQuantale {
  QuantalePtr quantale;
  std::vector<std::pair<Table, Table>> pairs;
  Elem index_of(const Table& f, const Table& g) const;
};

/// Throws CapExceeded when |L|·|R| > caps.form_quantale_cells and LawViolated
/// if the continuous pairs are not closed under componentwise joins.
FormQuantale form_quantale(const TwoForm& phi, const Caps& caps = {});

/// For involutive Q: (f, g)* = (g', f') on Q(Φ(Q)), with f'(y) = f(y*)* and
/// g'(x) = g(x*)*. Returns the table over `target.pairs`.
Table phi_quantale_involution(const Quantale& q, const PhiOfQuantale& phi, const FormQuantale& target);

/// κ: Q -> Q(Φ(Q)), a ↦ ((−) ⊙ a, a ⊙ (−)).
struct ComparisonHom {
  PhiOfQuantale phi;
  FormQuantale target;
  Table kappa;
  bool hom = false;         // join-preserving and multiplicative
  bool unital = true;       // κ(e) is the unit (vacuous if Q has none)
  bool involutive = true;   // κ(a*) = κ(a)* (vacuous if Q has none)
  bool injective = false;
  bool faithful = false;    // x⊙a = x⊙b, a⊙y = b⊙y for all sided x, y imply a = b
};

ComparisonHom comparison_hom(const Quantale& q, const Caps& caps = {});

/// Closure operator with j(a) ⊙ j(b) ≤ j(a ⊙ b).
bool is_quantic_nucleus(const Quantale& q, const Table& j);
/// Throws NotNucleus (witness: a for closure failures, a, b for the quantic law).
void check_quantic_nucleus(const Quantale& q, const Table& j);
std::vector<Table> enumerate_quantic_nuclei(const Quantale& q);

/// Q_j on the fixed points with a * b = j(a ⊙ b); projection a ↦ j(a).
struct NucleusQuotient {
  QuantalePtr quantale;
  SubLattice fixed;
  Table projection;
  Claims claims;  // projection is a (unital) quantale homomorphism
};

NucleusQuotient nucleus_quotient(const Quantale& q, const Table& j);

/// Homomorphism checks between quantales.
bool is_quantale_hom(const Table& h, const Quantale& a, const Quantale& b);

/// Order isomorphism preserving multiplication, unit and involution.
std::optional<Table> find_quantale_isomorphism(const Quantale& a, const Quantale& b);

/// Every quantale structure on l up to automorphisms of l, sorted by
/// multiplication table. Unit and involution are left unset.
std::vector<QuantalePtr> enumerate_quantales(const LatticePtr& l, const Caps& caps = {});

/// Involutions compatible with q (order automorphisms σ, σ² = id,
/// antimultiplicative).
std::vector<Table> enumerate_involutions(const Quantale& q);

}  // namespace qf
