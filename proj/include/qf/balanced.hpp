#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qf/claim.hpp"
#include "qf/form.hpp"
#include "qf/module.hpp"
#include "qf/quantale.hpp"

namespace qf {

/// A 2-form φ: L × R -> 2 with L a right and R a left Q-module.
struct BalancedForm {
  ModulePtr left;   // right module on L
  ModulePtr right;  // left module on R
  TwoForm form;

  const Quantale& quantale() const { return left->quantale(); }
};

/// Throws ShapeMismatch unless the sides and carriers line up and both modules
/// share the quantale. Balance itself is reported by balance_report.
BalancedForm make_balanced_form(ModulePtr left, ModulePtr right, TwoForm form);

/// The definition ⟨xa|y⟩ = ⟨x|ay⟩ together with the four residuation
/// conditions, each evaluated on its own. Index 4 is the definition.
struct BalanceReport {
  bool balanced = false;
  std::array<bool, 5> conditions{};
  std::optional<std::vector<int>> witness;  // (x, a, y) violating the definition
};

BalanceReport balance_report(const BalancedForm& bf);

/// x ⊥ y ⟺ x ⊙ y ≤ n on Q × Q, with Q acting on itself on both sides.
BalancedForm phi_n_form(const QuantalePtr& q, Elem n);

/// The join of all sided elements below n (left-sided for Side::left).
Elem greatest_sided_below(const Quantale& q, Elem n, Side side);

/// orth(x, y) = ⋁{a : x ⊥ ay}, with the two residual expressions alongside.
struct Orthogonalizer {
  Elem value = 0;
  Elem via_right_orth = 0;  // (x^⊥)/y
  Elem via_left_orth = 0;   // x\(^⊥y)
};

/// Unchecked computation, for any x, y.
Orthogonalizer orthogonalizer_of(const BalancedForm& bf, Elem x, Elem y);
/// Throws NotAGenerator unless x generates L and y generates R.
Orthogonalizer orthogonalizer(const BalancedForm& bf, Elem x, Elem y);

/// (f, g): φ_n -> φ with n = orth(x, y), f(a) = xa, g(b) = by.
struct PrincipalOrthoquotient {
  Elem n = 0;
  BalancedForm source;  // φ_n
  Table f;
  Table g;
  Claims claims;
};

/// Throws NotPrincipal unless x and y are generators.
PrincipalOrthoquotient principal_orthoquotient(const BalancedForm& bf, Elem x, Elem y);

/// Restriction of φ_n to ↑r × ↑l with the up-segment quotient actions.
struct SegmentForm {
  BalancedForm form;
  SubLattice left_sub;
  SubLattice right_sub;
  bool dense_left = false;
  bool dense_right = false;
  Elem greatest_right_sided = 0;  // below n
  Elem greatest_left_sided = 0;   // below n
  Claims claims;
};

/// Throws PreconditionViolated unless r ∈ rs(Q), l ∈ ls(Q), r ∨ l ≤ n.
SegmentForm upsegment_restricted_form(const QuantalePtr& q, Elem n, Elem r, Elem l);

/// For a principal balanced form with generators x, y: density on each side
/// against ann(y) / ann(x) being the greatest sided element below orth(x, y).
Claims principal_density(const BalancedForm& bf, Elem x, Elem y);

/// Orthogonal quotient of a balanced form, with the module structures of the
/// closure nuclei.
struct BalancedQuotient {
  std::optional<BalancedForm> form;  // absent when a closure is not a module nucleus
  Claims claims;  // closures are module nuclei, quotient form is balanced
};

/// Throws PreconditionViolated unless bf is balanced.
BalancedQuotient balanced_orthogonal_quotient(const BalancedForm& bf);

/// The form on the quotient modules making the pair of projections an
/// orthomorphism, when the values of bf are constant on fibres.
std::optional<BalancedForm> pushforward(const BalancedForm& bf, const ModuleQuotient& left,
                                        const ModuleQuotient& right);

/// Every balanced form on the carriers of `left` × `right`.
std::vector<BalancedForm> enumerate_balanced_forms(const ModulePtr& left, const ModulePtr& right,
                                                   const Caps& caps = {});

}  // namespace qf
