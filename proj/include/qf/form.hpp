#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qf/claim.hpp"
#include "qf/config.hpp"
#include "qf/lattice.hpp"

namespace qf {

/// A 2-form φ: L × R → 2, a map preserving joins in each variable.
/// `value(x, y)` is φ(x, y); x ⊥ y means φ(x, y) = 0.
class TwoForm {
 public:
  /// `values[x][y]` is φ(x, y). Throws ShapeMismatch, BottomViolation or
  /// JoinViolation (witness: side (0 left, 1 right), pair, fixed argument).
  static TwoForm validate(LatticePtr left, LatticePtr right, const BoolMatrix& values);
  /// Same, from the orthogonality relation `orth[x][y] = (x ⊥ y)`.
  static TwoForm from_orthogonality(LatticePtr left, LatticePtr right, const BoolMatrix& orth);

  const Lattice& left() const { return *left_; }
  const Lattice& right() const { return *right_; }
  const LatticePtr& left_ptr() const { return left_; }
  const LatticePtr& right_ptr() const { return right_; }

  bool value(Elem x, Elem y) const { return values_[static_cast<std::size_t>(x) * right_->size() + y] != 0; }
  bool orthogonal(Elem x, Elem y) const { return !value(x, y); }

  BoolMatrix values() const;
  BoolMatrix orthogonality() const;

  friend bool operator==(const TwoForm& a, const TwoForm& b) {
    return *a.left_ == *b.left_ && *a.right_ == *b.right_ && a.values_ == b.values_;
  }

 private:
  TwoForm() = default;
  LatticePtr left_;
  LatticePtr right_;
  std::vector<std::uint8_t> values_;
};

/// Non-throwing bimorphism check over bottom rows/columns and binary joins.
std::optional<ValidationError> two_form_failure(const Lattice& left, const Lattice& right, const BoolMatrix& values);

/// x ↦ x^⊥ = ⋁{y : x ⊥ y} (L -> R) and y ↦ ^⊥y = ⋁{x : x ⊥ y} (R -> L).
struct OrthImages {
  Table right;
  Table left;
};

OrthImages orth_images(const TwoForm& phi);

bool is_galois_connection(const Lattice& l, const Lattice& r, const Table& to_right, const Table& to_left);

/// The form with x ⊥ y ⟺ x ≤ l(y). Throws NotGalois unless (r, l) is a
/// Galois connection.
TwoForm form_from_galois(LatticePtr left, LatticePtr right, const Table& r, const Table& l);

struct FormFlags {
  bool dense_left = false;
  bool dense_right = false;
  bool faithful_left = false;
  bool faithful_right = false;
  bool symmetric = false;
};

/// Flags straight from the definitions.
FormFlags classify_form(const TwoForm& phi);

/// The characterizations of density/faithfulness by orthogonal images, one
/// group per property; each group must be constant.
struct GaloisCondition {
  std::string group;
  std::string name;
  bool value;
};

struct GaloisReport {
  bool galois = false;      // orth images form a Galois connection
  bool round_trip = false;  // form_from_galois(orth_images(φ)) == φ
  std::vector<GaloisCondition> conditions;

  /// Names of groups whose conditions disagree.
  std::vector<std::string> disagreeing_groups() const;
};

GaloisReport galois_report(const TwoForm& phi);

/// Pair of join-homs (f: L -> L', g: R -> R') with ⟨f(x)|g(y)⟩' = ⟨x|y⟩.
struct Orthomorphism {
  Table f;
  Table g;
  bool quotient = false;  // f and g both surjective
  Claims claims;          // consequences checked when their hypotheses hold
};

bool is_orthomorphism(const Table& f, const Table& g, const TwoForm& src, const TwoForm& dst);

/// Throws NotJoinPreserving/ShapeMismatch for bad components and
/// NotOrthomorphism(x, y) for a value mismatch.
Orthomorphism check_orthomorphism(const Table& f, const Table& g, const TwoForm& src, const TwoForm& dst);

/// Restriction of φ to the fixed points of x ↦ ^⊥(x^⊥) and y ↦ (^⊥y)^⊥,
/// together with the closure pair as a quotient orthomorphism.
struct OrthogonalQuotient {
  TwoForm form;
  SubLattice left;
  SubLattice right;
  Orthomorphism projection;
};

OrthogonalQuotient orthogonal_quotient(const TwoForm& phi);

/// Continuous map φ -> φ': f: L -> L', g: R' -> R with ⟨f(x)|y⟩' = ⟨x|g(y)⟩.
struct ContinuousMap {
  Table f;
  Table g;
  Claims claims;
};

/// Definition plus the four equivalent conditions, evaluated independently.
struct ContinuityReport {
  bool continuous = false;
  std::array<bool, 4> conditions{};
};

ContinuityReport continuity_report(const Table& f, const Table& g, const TwoForm& src, const TwoForm& dst);
bool is_continuous(const Table& f, const Table& g, const TwoForm& src, const TwoForm& dst);

/// Throws NotContinuous(x, y) or component errors.
ContinuousMap check_continuous(const Table& f, const Table& g, const TwoForm& src, const TwoForm& dst);

/// Composition of continuous maps (f1,g1): φ -> φ', (f2,g2): φ' -> φ'' is
/// (f2 ∘ f1, g1 ∘ g2).
std::pair<Table, Table> compose_continuous(const std::pair<Table, Table>& first, const std::pair<Table, Table>& second);

/// f(^⊥(x^⊥)) ≤ ^⊥(f(x)^⊥) for all x.
bool closure_continuous(const Table& f, const TwoForm& src, const TwoForm& dst);

/// When both forms are faithful on the right: the unique g making (f, g)
/// continuous, if it exists. g(y) = (f_*(^⊥y))^⊥. Throws PreconditionViolated.
std::optional<Table> extend_to_continuous(const Table& f, const TwoForm& src, const TwoForm& dst);

/// Pair of order isomorphisms commuting with the form values.
std::optional<std::pair<Table, Table>> find_form_isomorphism(const TwoForm& a, const TwoForm& b);

/// All 2-forms on L × R, by filtering every boolean matrix. Throws
/// CapExceeded when |L|·|R| > caps.form_cells. Ordered by the bitmask whose
/// bit x·|R| + y is φ(x, y).
std::vector<TwoForm> enumerate_two_forms(const LatticePtr& left, const LatticePtr& right, Exec exec = Exec::serial,
                                         const Caps& caps = {});

}  // namespace qf
