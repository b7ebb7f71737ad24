#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "qf/claim.hpp"
#include "qf/config.hpp"
#include "qf/lattice.hpp"
#include "qf/quantale.hpp"

namespace qf {

enum class Side { left, right };

/// A left (a·x) or right (x·a) module over a quantale. `action[a * |M| + x]`
/// is the action of a on x for either side.
struct Module {
  QuantalePtr over;
  LatticePtr carrier;
  Side side = Side::left;
  Table action;
  bool unital = false;  // e acts as the identity (false when Q has no unit)

  int size() const { return carrier->size(); }
  const Lattice& lattice() const { return *carrier; }
  const Quantale& quantale() const { return *over; }
  Elem act(Elem a, Elem x) const { return action[static_cast<std::size_t>(a) * carrier->size() + x]; }
};

using ModulePtr = std::shared_ptr<const Module>;

/// `action[a][x]`. Throws ShapeMismatch, NotBimorphic or
/// NotAssociativeAction(a, b, x).
ModulePtr make_module(QuantalePtr q, LatticePtr carrier, Side side, const std::vector<Table>& action);
ModulePtr make_module_flat(QuantalePtr q, LatticePtr carrier, Side side, Table action);

/// Q acting on itself by multiplication.
ModulePtr regular_module(const QuantalePtr& q, Side side);

/// Left-sided elements of Q for left modules, right-sided ones for right modules.
bool sided_for(const Module& m, Elem a);

/// m/x = ⋁{a : a·x ≤ m} for left modules; x\m = ⋁{a : x·a ≤ m} for right ones.
Elem residual(const Module& m, Elem target, Elem x);
Elem annihilator(const Module& m, Elem x);

bool is_invariant(const Module& m, Elem x);
std::vector<Elem> invariants(const Module& m);
bool is_generator(const Module& m, Elem x);
std::vector<Elem> generators(const Module& m);
/// Lowest-index generator.
std::optional<Elem> first_generator(const Module& m);
bool is_irreducible(const Module& m);
bool is_everywhere_principal(const Module& m);
/// Some generator x whose annihilator is a maximal proper sided element of Q
/// (no sided a with ann(x) < a < 1).
bool has_generator_with_maximal_annihilator(const Module& m);

bool is_module_hom(const Table& h, const Module& a, const Module& b);

/// Closure operator k with a·k(x) ≤ k(a·x) (mirrored for right modules).
bool is_module_nucleus(const Module& m, const Table& k);
std::vector<Table> enumerate_module_nuclei(const Module& m);

/// M_k on the fixed points of k with action k(a·x); projection x ↦ k(x).
struct ModuleQuotient {
  ModulePtr module;
  SubLattice fixed;
  Table projection;
};

/// Throws NotNucleus.
ModuleQuotient module_quotient(const Module& m, const Table& k);

/// The three conditions for m: (−) ∨ m is a module nucleus, ↓m is a
/// submodule, m is invariant.
struct SegmentConditions {
  bool nucleus = false;
  bool submodule = false;
  bool invariant = false;
};

SegmentConditions segment_conditions(const Module& m, Elem x);

/// ↑m with action a·x ∨ m (quotient via x ↦ x ∨ m) and ↓m with the
/// restricted action. Absent when m is not invariant.
struct SegmentModules {
  ModulePtr up;
  SubLattice up_sub;
  Table projection;  // M -> ↑m
  ModulePtr down;
  SubLattice down_sub;
};

std::optional<SegmentModules> segment_modules(const Module& m, Elem x);

/// Facts about x: generator test, ann(x), and the sidedness transfers
/// between Q and M through (−)x and (−)/x.
struct GeneratorAnalysis {
  bool generator = false;
  Elem ann = 0;
  Claims claims;
};

GeneratorAnalysis generator_analysis(const Module& m, Elem x);

/// For a generator x: a ↦ a ∨ ann(x) onto ↑ann(x) (a quotient of Q acting on
/// itself) followed by the dense map u ↦ u·x onto M.
struct DenseFactorization {
  Elem ann = 0;
  SegmentModules segment;  // of Q acting on itself, at ann(x)
  Table projection;        // Q -> ↑ann(x), indices of segment.up_sub
  Table dense;             // ↑ann(x) -> M
  Claims claims;
};

/// Throws NotAGenerator.
DenseFactorization dense_quotient_factorization(const Module& m, Elem x);

/// Every action table of q on `carrier` from the given side, in the order of
/// the join-homs Q -> End(carrier) they come from.
std::vector<Table> enumerate_actions(const QuantalePtr& q, const LatticePtr& carrier, Side side, const Caps& caps = {});

/// Every action of q on `carrier` from the given side, up to automorphisms of
/// the carrier, sorted by action table.
std::vector<ModulePtr> enumerate_modules(const QuantalePtr& q, const LatticePtr& carrier, Side side,
                                         const Caps& caps = {});

/// Module homomorphisms a -> b, by filtering join-homs.
std::vector<Table> enumerate_module_homs(const Module& a, const Module& b);

}  // namespace qf
