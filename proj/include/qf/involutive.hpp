#pragma once

#include <optional>
#include <vector>

#include "qf/claim.hpp"
#include "qf/config.hpp"
#include "qf/form.hpp"
#include "qf/module.hpp"
#include "qf/quantale.hpp"

namespace qf {

/// Left module over an involutive quantale with a symmetric form satisfying
/// ⟨a*x|y⟩ = ⟨x|ay⟩.
struct InvolutiveModule {
  ModulePtr module;
  TwoForm form;
};

bool is_symmetric(const TwoForm& phi);

/// Q(φ) with (f, g)* = (g, f). Throws NotSymmetric.
FormQuantale involution_on_form_quantale(const TwoForm& phi, const Caps& caps = {});

/// The defining law and its residuation form (a*x)^⊥ = a\(x^⊥), evaluated
/// separately; for faithful φ also a*x = (a\(x^⊥))^⊥.
struct InvolutiveReport {
  bool involutive = false;
  bool residuation = false;
  std::optional<bool> faithful_formula;
  std::optional<std::vector<int>> witness;  // (a, x, y)
};

/// Throws PreconditionViolated unless Q has an involution and M is a left
/// module, NotSymmetric unless φ is a symmetric form on M.
InvolutiveReport involutive_report(const Module& m, const TwoForm& phi);

/// Throws as involutive_report, plus LawViolated(a, x, y).
InvolutiveModule check_involutive_module(ModulePtr m, TwoForm phi);

/// The symmetric forms on l.
std::vector<TwoForm> enumerate_symmetric_forms(const LatticePtr& l, const Caps& caps = {});

/// Involutive structures on (M, φ) against involution-preserving
/// homomorphisms Q -> Q(φ), each side enumerated on its own.
struct InvolutiveBijection {
  FormQuantale target;
  std::vector<Table> structures;  // action tables
  std::vector<Table> homs;        // Q -> indices of target.pairs
  std::vector<int> to_hom;        // structure i -> index into homs, or -1
  std::vector<int> to_structure;  // hom j -> index into structures, or -1
  Claims claims;
};

/// Throws NotSymmetric, CapExceeded.
InvolutiveBijection involutive_structure_bijection(const QuantalePtr& q, const TwoForm& phi, const Caps& caps = {});

struct SelfAdjointOrth {
  Elem orth = 0;
  bool self_adjoint = false;
  bool generator = false;
};

SelfAdjointOrth self_adjoint_orthogonalizer(const InvolutiveModule& im, Elem x);

/// ↑m as a left module over itself with a ⊥ b ⟺ a* ⊙ b ≤ n. Throws
/// PreconditionViolated unless m is left-sided, n self-adjoint and m ≤ n.
struct SegmentInvolutive {
  InvolutiveModule module;
  SubLattice sub;
  Claims claims;  // form symmetric, module involutive
};

SegmentInvolutive upsegment_involutive(const QuantalePtr& q, Elem m, Elem n);

/// For a generator x: ↑ann(x) with a ⊥_x b ⟺ a* ⊙ b ≤ orth(x, x), and the
/// map a ↦ ax onto M.
struct UpsegAnn {
  Elem ann = 0;
  Elem orth = 0;
  SegmentInvolutive segment;
  Table hom;  // ↑ann(x) -> M
  bool faithful = false;
  Claims claims;
};

/// Throws NotAGenerator.
UpsegAnn upseg_ann_involutive(const InvolutiveModule& im, Elem x);

/// Symmetric form x ⊥ x' ⟺ x ⊙ x'* = 0 on ls(Q) for involutive Q, and
/// the claim that the swap on its form quantale is the involution of
/// Q(Φ(Q)) transported along (f, g) ↦ (f, * g *).
struct SymmetrizedPhi {
  TwoForm form;
  Claims claims;
};

SymmetrizedPhi symmetrized_phi(const Quantale& q, const Caps& caps = {});

/// For a faithful symmetric φ on L: every join-endo f of L appears in
/// exactly one pair of Q(φ), and the swap sends f to
/// y ↦ (f_*(y^⊥))^⊥.
Claims endomorphism_involution_claims(const TwoForm& phi, const Caps& caps = {});

}  // namespace qf
