#include "qf/generators.hpp"

#include <algorithm>

namespace qf {

LatticePtr set_lattice(const std::vector<std::uint32_t>& sets) {
  const std::size_t n = sets.size();
  BoolMatrix leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = (sets[i] & ~sets[j]) == 0;
  return make_lattice(leq);
}

TwoForm space_form(int points, const std::vector<std::uint32_t>& opens) {
  auto left = powerset(points);
  auto right = set_lattice(opens);
  BoolMatrix orth(left->size(), std::vector<bool>(right->size(), false));
  for (Elem s = 0; s < left->size(); ++s)
    for (Elem u = 0; u < right->size(); ++u) orth[s][u] = (static_cast<std::uint32_t>(s) & opens[u]) == 0;
  return TwoForm::from_orthogonality(left, right, orth);
}

TwoForm sierpinski_form() { return space_form(2, {0b00, 0b01, 0b11}); }

TwoForm relation_form(const BoolMatrix& rho) {
  const int nx = static_cast<int>(rho.size());
  const int ny = nx == 0 ? 0 : static_cast<int>(rho[0].size());
  auto left = powerset(nx);
  auto right = powerset(ny);
  BoolMatrix orth(left->size(), std::vector<bool>(right->size(), true));
  for (Elem a = 0; a < left->size(); ++a)
    for (Elem b = 0; b < right->size(); ++b)
      for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y)
          if ((a >> x & 1) && (b >> y & 1) && !rho[x][y]) orth[a][b] = false;
  return TwoForm::from_orthogonality(left, right, orth);
}

TwoForm meet_form(const LatticePtr& l) {
  BoolMatrix orth(l->size(), std::vector<bool>(l->size(), false));
  for (Elem x = 0; x < l->size(); ++x)
    for (Elem y = 0; y < l->size(); ++y) orth[x][y] = l->meet(x, y) == l->bottom();
  return TwoForm::from_orthogonality(l, l, orth);
}

TwoForm order_form(const LatticePtr& l) {
  BoolMatrix orth(l->size(), std::vector<bool>(l->size(), false));
  for (Elem x = 0; x < l->size(); ++x)
    for (Elem y = 0; y < l->size(); ++y) orth[x][y] = l->leq(x, y);
  return TwoForm::from_orthogonality(l, dual(*l), orth);
}

Table direct_image(const Table& f) {
  const int nx = static_cast<int>(f.size());
  Table t(1u << nx, 0);
  for (std::uint32_t s = 0; s < (1u << nx); ++s)
    for (int x = 0; x < nx; ++x)
      if (s >> x & 1) t[s] |= 1 << f[x];
  return t;
}

Table open_preimage(const Table& f, const std::vector<std::uint32_t>& opens_y, const std::vector<std::uint32_t>& opens_x) {
  Table t;
  for (std::uint32_t v : opens_y) {
    std::uint32_t pre = 0;
    for (std::size_t x = 0; x < f.size(); ++x)
      if (v >> f[x] & 1) pre |= 1u << x;
    auto it = std::find(opens_x.begin(), opens_x.end(), pre);
    if (it == opens_x.end()) return {};
    t.push_back(static_cast<Elem>(it - opens_x.begin()));
  }
  return t;
}

}  // namespace qf
