#include "qf/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qf {

namespace {

struct HomPlan {
  std::vector<Elem> order;                                // linear extension of src
  std::vector<std::vector<Elem>> below;                   // strictly below x
  std::vector<std::vector<std::pair<Elem, Elem>>> decomp; // a, b < x with a ∨ b = x
};

HomPlan make_plan(const Lattice& src) {
  const int n = src.size();
  HomPlan p;
  p.order.resize(n);
  std::iota(p.order.begin(), p.order.end(), 0);
  std::vector<int> down(n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (src.leq(y, x)) ++down[x];
  std::stable_sort(p.order.begin(), p.order.end(), [&](Elem a, Elem b) { return down[a] < down[b]; });
  p.below.resize(n);
  p.decomp.resize(n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y)
      if (src.lt(y, x)) p.below[x].push_back(y);
    for (Elem a : p.below[x])
      for (Elem b : p.below[x])
        if (a < b && src.join(a, b) == x) p.decomp[x].emplace_back(a, b);
  }
  return p;
}

class HomSearch {
 public:
  HomSearch(const Lattice& src, const Lattice& dst) : src_(src), dst_(dst), plan_(make_plan(src)) {}

  // Candidate values at position k given the assigned prefix; a forced
  // position yields at most one candidate.
  std::vector<Elem> candidates(std::size_t k, const Table& h) const {
    const Elem x = plan_.order[k];
    if (x == src_.bottom()) return {dst_.bottom()};
    const auto& dec = plan_.decomp[x];
    if (!dec.empty()) {
      const Elem v = dst_.join(h[dec[0].first], h[dec[0].second]);
      for (const auto& [a, b] : dec)
        if (dst_.join(h[a], h[b]) != v) return {};
      for (Elem y : plan_.below[x])
        if (!dst_.leq(h[y], v)) return {};
      return {v};
    }
    std::vector<Elem> out;
    for (Elem v = 0; v < dst_.size(); ++v) {
      bool ok = true;
      for (Elem y : plan_.below[x])
        if (!dst_.leq(h[y], v)) {
          ok = false;
          break;
        }
      if (ok) out.push_back(v);
    }
    return out;
  }

  void extend(std::size_t k, Table& h, std::vector<Table>& out) const {
    if (k == plan_.order.size()) {
      out.push_back(h);
      return;
    }
    const Elem x = plan_.order[k];
    for (Elem v : candidates(k, h)) {
      h[x] = v;
      extend(k + 1, h, out);
    }
    h[x] = -1;
  }

  const HomPlan& plan() const { return plan_; }

 private:
  const Lattice& src_;
  const Lattice& dst_;
  HomPlan plan_;
};

}  // namespace

std::vector<Table> enumerate_join_homs(const Lattice& src, const Lattice& dst, Exec exec) {
  HomSearch search(src, dst);
  std::vector<Table> out;
  Table h(src.size(), -1);
  if (exec == Exec::serial) {
    search.extend(0, h, out);
  } else {
    // Walk forced positions serially up to the first branching element, then
    // split the candidates of that element across threads.
    std::size_t k = 0;
    std::vector<Elem> cands;
    const auto& order = search.plan().order;
    for (; k < order.size(); ++k) {
      cands = search.candidates(k, h);
      if (cands.size() != 1) break;
      h[order[k]] = cands[0];
    }
    if (k == order.size()) {
      out.push_back(h);
    } else if (!cands.empty()) {
      std::vector<std::vector<Table>> parts(cands.size());
      const Elem x = order[k];
      const long count = static_cast<long>(cands.size());
#pragma omp parallel for schedule(dynamic)
      for (long i = 0; i < count; ++i) {
        Table local = h;
        local[x] = cands[i];
        search.extend(k + 1, local, parts[i]);
      }
      for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<JoinHom> enumerate_join_endos(const LatticePtr& l, const Caps& caps) {
  if (l->size() > caps.endo_enum)
    throw ValidationError(ErrorCode::CapExceeded,
                          "lattice of size " + std::to_string(l->size()) + " exceeds endo cap " +
                              std::to_string(caps.endo_enum));
  std::vector<JoinHom> out;
  for (auto& t : enumerate_join_homs(*l, *l)) out.push_back(check_join_hom(std::move(t), l, l));
  return out;
}

LatticePtr relabel(const Lattice& l, const Table& perm) {
  const int n = l.size();
  BoolMatrix m(n, std::vector<bool>(n, false));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) m[perm[a]][perm[b]] = l.leq(a, b);
  return make_lattice(m);
}

CanonicalForm canonical_form(const Lattice& l) {
  const int n = l.size();
  Table perm = identity_table(n);
  std::vector<bool> best;
  Table best_perm;
  std::vector<bool> cur(static_cast<std::size_t>(n) * n);
  do {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) cur[static_cast<std::size_t>(perm[a]) * n + perm[b]] = l.leq(a, b);
    if (best.empty() || cur < best) {
      best = cur;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  CanonicalForm c;
  c.perm = best_perm;
  c.order.assign(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) c.order[a][b] = best[static_cast<std::size_t>(a) * n + b];
  return c;
}

std::vector<LatticePtr> enumerate_sup_lattices(int n, const Caps& caps) {
  if (n < 1) throw ValidationError(ErrorCode::ShapeMismatch, "lattice size must be positive");
  if (n > caps.lattice_enum)
    throw ValidationError(ErrorCode::CapExceeded,
                          "size " + std::to_string(n) + " exceeds lattice cap " + std::to_string(caps.lattice_enum));
  if (n == 1) return {one_element()};
  // Every finite lattice has a natural labeling: 0 is bottom, n-1 is top and
  // x < y implies index(x) < index(y). Branch only over relations among the
  // middle elements.
  std::vector<std::pair<int, int>> free_pairs;
  for (int i = 1; i < n - 1; ++i)
    for (int j = i + 1; j < n - 1; ++j) free_pairs.emplace_back(i, j);
  std::set<BoolMatrix> seen;
  std::vector<LatticePtr> out;
  const std::uint64_t count = std::uint64_t{1} << free_pairs.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    BoolMatrix m(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) {
      m[i][i] = true;
      m[0][i] = true;
      m[i][n - 1] = true;
    }
    for (std::size_t p = 0; p < free_pairs.size(); ++p)
      if (mask & (std::uint64_t{1} << p)) m[free_pairs[p].first][free_pairs[p].second] = true;
    LatticePtr l;
    try {
      l = make_lattice(m);
    } catch (const ValidationError&) {
      continue;
    }
    auto canon = canonical_form(*l);
    if (seen.insert(canon.order).second) out.push_back(make_lattice(canon.order));
  }
  std::sort(out.begin(), out.end(), [](const LatticePtr& a, const LatticePtr& b) {
    return a->order_matrix() < b->order_matrix();
  });
  return out;
}

void for_each_order_isomorphism(const Lattice& a, const Lattice& b, const std::function<bool(const Table&)>& visit) {
  const int n = a.size();
  if (n != b.size()) return;
  auto signature = [](const Lattice& l, Elem x) {
    int down = 0, up = 0;
    for (Elem y = 0; y < l.size(); ++y) {
      if (l.leq(y, x)) ++down;
      if (l.leq(x, y)) ++up;
    }
    return std::pair{down, up};
  };
  std::vector<std::pair<int, int>> sa(n), sb(n);
  for (Elem x = 0; x < n; ++x) {
    sa[x] = signature(a, x);
    sb[x] = signature(b, x);
  }
  Table f(n, -1);
  std::vector<bool> used(n, false);
  bool stop = false;
  std::function<void(Elem)> rec = [&](Elem x) {
    if (stop) return;
    if (x == n) {
      if (!visit(f)) stop = true;
      return;
    }
    for (Elem y = 0; y < n && !stop; ++y) {
      if (used[y] || sa[x] != sb[y]) continue;
      bool ok = true;
      for (Elem z = 0; z < x && ok; ++z)
        ok = a.leq(z, x) == b.leq(f[z], y) && a.leq(x, z) == b.leq(y, f[z]);
      if (!ok) continue;
      f[x] = y;
      used[y] = true;
      rec(x + 1);
      used[y] = false;
      f[x] = -1;
    }
  };
  rec(0);
}

std::optional<Table> find_order_isomorphism(const Lattice& a, const Lattice& b) {
  std::optional<Table> found;
  for_each_order_isomorphism(a, b, [&](const Table& f) {
    found = f;
    return false;
  });
  return found;
}

bool order_isomorphic(const Lattice& a, const Lattice& b) { return find_order_isomorphism(a, b).has_value(); }

std::vector<Table> automorphisms(const Lattice& l) {
  std::vector<Table> out;
  for_each_order_isomorphism(l, l, [&](const Table& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

}  // namespace qf
