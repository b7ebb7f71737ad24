#include "qf/bimorphism.hpp"

#include <string>

namespace qf {

std::optional<std::vector<int>> bimorphism_failure(const Lattice& left, const Lattice& right, const Lattice& target,
                                                   const Table& t) {
  const int n = left.size(), m = right.size();
  auto at = [&](Elem x, Elem y) { return t[static_cast<std::size_t>(x) * m + y]; };
  for (Elem y = 0; y < m; ++y)
    if (at(left.bottom(), y) != target.bottom()) return std::vector<int>{0, y};
  for (Elem x = 0; x < n; ++x)
    if (at(x, right.bottom()) != target.bottom()) return std::vector<int>{1, x};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      for (Elem y = 0; y < m; ++y)
        if (at(left.join(a, b), y) != target.join(at(a, y), at(b, y))) return std::vector<int>{0, a, b, y};
  for (Elem a = 0; a < m; ++a)
    for (Elem b = a + 1; b < m; ++b)
      for (Elem x = 0; x < n; ++x)
        if (at(x, right.join(a, b)) != target.join(at(x, a), at(x, b))) return std::vector<int>{1, a, b, x};
  return std::nullopt;
}

Bimorphism::Bimorphism(LatticePtr left, LatticePtr right, LatticePtr target, Table table)
    : left_(std::move(left)), right_(std::move(right)), target_(std::move(target)), table_(std::move(table)) {
  if (table_.size() != static_cast<std::size_t>(left_->size()) * right_->size())
    throw ValidationError(ErrorCode::ShapeMismatch, "bimorphism table has the wrong size");
  for (Elem v : table_)
    if (v < 0 || v >= target_->size()) throw ValidationError(ErrorCode::ShapeMismatch, "value out of range", {v});
  if (auto w = bimorphism_failure(*left_, *right_, *target_, table_))
    throw ValidationError(ErrorCode::NotBimorphic,
                          std::string("does not preserve joins in the ") + ((*w)[0] == 0 ? "left" : "right") +
                              " variable",
                          *w);
}

Elem Bimorphism::over(Elem z, Elem y) const {
  return left_->join_where([&](Elem x) { return target_->leq((*this)(x, y), z); });
}

Elem Bimorphism::under(Elem x, Elem z) const {
  return right_->join_where([&](Elem y) { return target_->leq((*this)(x, y), z); });
}

Claims residuation_claims(const Bimorphism& b) {
  const Lattice& L = b.left();
  const Lattice& R = b.right();
  const Lattice& M = b.target();
  const Elem zero = M.bottom();
  bool adj = true, ann_adj = true;
  bool i1 = true, i2 = true, i3 = true, i4 = true, i5 = true, i6 = true, i7 = true, i8 = true;
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y = 0; y < R.size(); ++y) {
      const Elem xy = b(x, y);
      for (Elem z = 0; z < M.size(); ++z) {
        const bool le = M.leq(xy, z);
        adj = adj && le == R.leq(y, b.under(x, z)) && le == L.leq(x, b.over(z, y));
        i1 = i1 && M.leq(b(b.over(z, y), y), z);
        i3 = i3 && M.leq(b(x, b.under(x, z)), z);
      }
      ann_adj = ann_adj && (xy == zero) == R.leq(y, b.ann_of_left(x)) && (xy == zero) == L.leq(x, b.ann_of_right(y));
      i2 = i2 && b(b.ann_of_right(y), y) == zero;
      i4 = i4 && b(x, b.ann_of_left(x)) == zero;
      i5 = i5 && L.leq(x, b.over(xy, y));
      i6 = i6 && R.leq(y, b.under(x, xy));
      i7 = i7 && b(b.over(xy, y), y) == xy;
      i8 = i8 && b(x, b.under(x, xy)) == xy;
    }
  return {
      {"y ≤ x\\z ⟺ x*y ≤ z ⟺ x ≤ z/y", true, adj},
      {"y ≤ ann(x) ⟺ x*y = 0 ⟺ x ≤ ann(y)", true, ann_adj},
      {"(z/y)*y ≤ z", true, i1},
      {"ann(y)*y = 0", true, i2},
      {"x*(x\\z) ≤ z", true, i3},
      {"x*ann(x) = 0", true, i4},
      {"x ≤ (x*y)/y", true, i5},
      {"y ≤ x\\(x*y)", true, i6},
      {"((x*y)/y)*y = x*y", true, i7},
      {"x*(x\\(x*y)) = x*y", true, i8},
  };
}

}  // namespace qf
