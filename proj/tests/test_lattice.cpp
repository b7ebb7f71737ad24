#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "qf/enumerate.hpp"
#include "qf/lattice.hpp"

using namespace qf;

namespace {

// Oracle: join preservation over every subset, not just pairs.
bool preserves_all_joins(const Table& f, const Lattice& src, const Lattice& dst) {
  const int n = src.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Elem j = src.bottom();
    Elem fj = dst.bottom();
    for (int x = 0; x < n; ++x)
      if (mask & (1u << x)) {
        j = src.join(j, x);
        fj = dst.join(fj, f[x]);
      }
    if (f[j] != fj) return false;
  }
  return true;
}

// Oracle: every table src -> dst, filtered.
std::vector<Table> brute_force_homs(const Lattice& src, const Lattice& dst) {
  std::vector<Table> out;
  const int n = src.size(), m = dst.size();
  Table t(n, 0);
  while (true) {
    if (preserves_all_joins(t, src, dst)) out.push_back(t);
    int i = n - 1;
    while (i >= 0 && t[i] == m - 1) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
  return out;
}

// Oracle: count n-element lattices by scanning every relation, checking the
// order and lattice axioms directly and deduplicating by brute-force
// relabeling.
std::size_t brute_force_lattice_count(int n) {
  std::vector<std::pair<int, int>> offdiag;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) offdiag.emplace_back(a, b);
  std::set<std::vector<bool>> classes;
  const std::uint64_t count = std::uint64_t{1} << offdiag.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<bool> r(n * n, false);
    for (int a = 0; a < n; ++a) r[a * n + a] = true;
    for (std::size_t i = 0; i < offdiag.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) r[offdiag[i].first * n + offdiag[i].second] = true;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        if (a != b && r[a * n + b] && r[b * n + a]) ok = false;
        for (int c = 0; c < n && ok; ++c)
          if (r[a * n + b] && r[b * n + c] && !r[a * n + c]) ok = false;
      }
    if (!ok) continue;
    // complete lattice: every pair has a least upper bound and there is a bottom
    bool has_bottom = false;
    for (int a = 0; a < n; ++a) {
      bool below = true;
      for (int b = 0; b < n; ++b) below = below && r[a * n + b];
      has_bottom = has_bottom || below;
    }
    if (!has_bottom) continue;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        int lubs = 0;
        for (int u = 0; u < n; ++u) {
          if (!r[a * n + u] || !r[b * n + u]) continue;
          bool least = true;
          for (int v = 0; v < n; ++v)
            if (r[a * n + v] && r[b * n + v] && !r[u * n + v]) least = false;
          if (least) ++lubs;
        }
        ok = lubs == 1;
      }
    if (!ok) continue;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> best;
    do {
      std::vector<bool> cur(n * n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) cur[perm[a] * n + perm[b]] = r[a * n + b];
      if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return classes.size();
}

std::vector<LatticePtr> small_lattices(int max_n) {
  std::vector<LatticePtr> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& l : enumerate_sup_lattices(n)) out.push_back(l);
  return out;
}

}  // namespace

TEST_SUITE("lattice-core") {
  TEST_CASE("validate_sup_lattice examples") {
    auto one = make_lattice({{true}});
    CHECK(one->size() == 1);
    CHECK(one->bottom() == 0);
    CHECK(one->top() == 0);

    auto c2 = make_lattice({{true, true}, {false, true}});
    CHECK(c2->bottom() == 0);
    CHECK(c2->top() == 1);

    try {
      make_lattice({{true, true, true}, {false, true, false}, {false, false, true}});
      FAIL("expected MissingJoin");
    } catch (const ValidationError& e) {
      CHECK(e.code() == ErrorCode::MissingJoin);
      CHECK(e.witness() == std::vector<int>{1, 2});
    }
  }

  TEST_CASE("validation rejects non-orders and bottomless posets") {
    try {
      make_lattice({{true, true}, {true, true}});
      FAIL("expected NotAPartialOrder");
    } catch (const ValidationError& e) {
      CHECK(e.code() == ErrorCode::NotAPartialOrder);
    }
    try {
      make_lattice({{false, true}, {false, true}});
      FAIL("expected NotAPartialOrder");
    } catch (const ValidationError& e) {
      CHECK(e.code() == ErrorCode::NotAPartialOrder);
    }
    // 0 < 1, 1 < 2 but not 0 < 2
    CHECK_THROWS_AS(make_lattice({{true, true, false}, {false, true, true}, {false, false, true}}), ValidationError);
    try {
      make_lattice({{true, false}, {false, true}});
      FAIL("expected NoBottom");
    } catch (const ValidationError& e) {
      CHECK(e.code() == ErrorCode::NoBottom);
    }
  }

  TEST_CASE("join and meet examples") {
    auto c3 = chain(3);
    auto d = diamond();
    CHECK(c3->join_of(std::vector<Elem>{}) == 0);
    CHECK(d->join_of(std::vector<Elem>{1, 2}) == 3);
    CHECK(c3->join_of(std::vector<Elem>{1}) == 1);
    CHECK(d->meet_of(std::vector<Elem>{1, 2}) == 0);
    CHECK(c3->meet_of(std::vector<Elem>{}) == 2);
    CHECK(chain(2)->meet_of(std::vector<Elem>{0, 1}) == 0);
  }

  TEST_CASE("dual") {
    auto c2 = chain(2);
    auto dc2 = dual(*c2);
    CHECK(dc2->bottom() == 1);
    CHECK(dc2->top() == 0);
    CHECK(order_isomorphic(*c2, *dc2));
    auto d = diamond();
    auto dd = dual(*d);
    CHECK(dd->bottom() == 3);
    CHECK(dd->join(1, 2) == 0);
    CHECK(order_isomorphic(*d, *dd));
    for (auto& l : small_lattices(5)) {
      CHECK(*dual(*dual(*l)) == *l);
      auto dl = dual(*l);
      for (Elem a = 0; a < l->size(); ++a)
        for (Elem b = 0; b < l->size(); ++b) CHECK(dl->join(a, b) == l->meet(a, b));
    }
  }

  TEST_CASE("absorption and idempotence") {
    for (auto& l : small_lattices(5))
      for (Elem a = 0; a < l->size(); ++a) {
        CHECK(l->join(a, a) == a);
        CHECK(l->meet(a, a) == a);
        for (Elem b = 0; b < l->size(); ++b) {
          CHECK(l->join(a, l->meet(a, b)) == a);
          CHECK(l->meet(a, l->join(a, b)) == a);
        }
      }
  }

  TEST_CASE("check_join_hom examples") {
    auto c2 = chain(2);
    auto c3 = chain(3);
    auto id = check_join_hom({0, 1}, c2, c2);
    CHECK(id.strong);
    CHECK(id.dense);
    auto zero = check_join_hom({0, 0}, c2, c2);
    CHECK_FALSE(zero.strong);
    CHECK_FALSE(zero.dense);
    auto f = check_join_hom({0, 1, 1}, c3, c2);
    CHECK(f.strong);
    CHECK(f.dense);

    try {
      check_join_hom({1, 1}, c2, c2);
      FAIL("expected BottomNotPreserved");
    } catch (const ValidationError& e) {
      CHECK(e.code() == ErrorCode::BottomNotPreserved);
    }
    auto d = diamond();
    try {
      // a ↦ a, b ↦ b, 1 ↦ a on the diamond: f(a ∨ b) ≠ f(a) ∨ f(b)
      check_join_hom({0, 1, 2, 1}, d, d);
      FAIL("expected NotJoinPreserving");
    } catch (const ValidationError& e) {
      CHECK(e.code() == ErrorCode::NotJoinPreserving);
      CHECK(e.witness().size() == 2);
    }
  }

  TEST_CASE("right_adjoint examples") {
    auto c2 = chain(2);
    auto c3 = chain(3);
    CHECK(right_adjoint(check_join_hom({0, 1}, c2, c2)) == Table{0, 1});
    CHECK(right_adjoint(check_join_hom({0, 0}, c2, c2)) == Table{1, 1});
    CHECK(right_adjoint(check_join_hom({0, 1, 1}, c3, c2)) == Table{0, 2});
  }

  TEST_CASE("adjunction and meet preservation over every endomorphism") {
    for (auto& l : small_lattices(5)) {
      for (auto& f : enumerate_join_endos(l)) {
        const Table g = right_adjoint(f);
        for (Elem x = 0; x < l->size(); ++x)
          for (Elem y = 0; y < l->size(); ++y) CHECK(l->leq(f(x), y) == l->leq(x, g[y]));
        CHECK(is_meet_preserving(g, *l, *l));
      }
    }
  }

  TEST_CASE("closure_quotient examples") {
    auto c3 = chain(3);
    auto q = closure_quotient(check_closure_operator({0, 1, 2}, c3));
    CHECK(*q.fixed.lattice == *c3);
    CHECK(q.projection.table == Table{0, 1, 2});

    auto c2 = chain(2);
    auto q2 = closure_quotient(check_closure_operator({1, 1}, c2));
    CHECK(q2.fixed.lattice->size() == 1);

    // closed sets ∅, {2}, {1,2} of a two-point space; {2} is bitmask 2
    auto p2 = powerset(2);
    auto q3 = closure_quotient(check_closure_operator({0, 3, 2, 3}, p2));
    CHECK(order_isomorphic(*q3.fixed.lattice, *chain(3)));
    CHECK(is_surjective(q3.projection.table, 3));

    CHECK_THROWS_AS(check_closure_operator({0, 0}, c2), ValidationError);
  }

  TEST_CASE("every surjective hom is the quotient by f_* ∘ f") {
    auto ls = small_lattices(4);
    for (auto& l : ls)
      for (auto& t : ls) {
        for (auto& f : enumerate_join_homs(*l, *t)) {
          if (!is_surjective(f, t->size())) continue;
          const Table j = compose(right_adjoint(f, *l, *t), f);
          REQUIRE(is_closure_operator(j, *l));
          auto q = closure_quotient(check_closure_operator(j, l));
          CHECK(order_isomorphic(*q.fixed.lattice, *t));
        }
      }
    for (auto& l : ls)
      for (auto& j : enumerate_closure_operators(*l)) {
        auto q = closure_quotient(check_closure_operator(j, l));
        CHECK(is_surjective(q.projection.table, q.fixed.lattice->size()));
      }
  }

  TEST_CASE("enumerate_join_endos counts and order") {
    CHECK(enumerate_join_endos(chain(2)).size() == 2);
    CHECK(enumerate_join_endos(chain(3)).size() == 6);
    CHECK(enumerate_join_endos(one_element()).size() == 1);
    auto endos = enumerate_join_endos(chain(2));
    CHECK(endos[0].table == Table{0, 0});
    CHECK(endos[1].table == Table{0, 1});
    Caps small;
    small.endo_enum = 3;
    try {
      enumerate_join_endos(chain(4), small);
      FAIL("expected CapExceeded");
    } catch (const ValidationError& e) {
      CHECK(e.code() == ErrorCode::CapExceeded);
    }
  }

  TEST_CASE("join-hom enumeration matches brute force") {
    auto ls = small_lattices(4);
    ls.push_back(powerset(3));
    for (auto& a : ls)
      for (auto& b : ls) {
        if (a->size() > 5 && b->size() > 5) continue;
        if (a->size() > 6 || std::pow(b->size(), a->size()) > 2e5) continue;
        auto fast = enumerate_join_homs(*a, *b);
        CHECK(fast == brute_force_homs(*a, *b));
        CHECK(enumerate_join_homs(*a, *b, Exec::parallel) == fast);
      }
  }

  TEST_CASE("enumerate_sup_lattices counts") {
    CHECK(enumerate_sup_lattices(1).size() == 1);
    CHECK(enumerate_sup_lattices(2).size() == 1);
    CHECK(enumerate_sup_lattices(3).size() == 1);
    auto four = enumerate_sup_lattices(4);
    CHECK(four.size() == 2);
    CHECK(std::any_of(four.begin(), four.end(), [](auto& l) { return order_isomorphic(*l, *diamond()); }));
    CHECK(std::any_of(four.begin(), four.end(), [](auto& l) { return order_isomorphic(*l, *chain(4)); }));
    for (int n = 1; n <= 5; ++n) CHECK(enumerate_sup_lattices(n).size() == brute_force_lattice_count(n));
    Caps caps;
    caps.lattice_enum = 4;
    CHECK_THROWS_AS(enumerate_sup_lattices(5, caps), ValidationError);
  }

  TEST_CASE("enumerated lattices are pairwise non-isomorphic and canonical") {
    for (int n = 1; n <= 5; ++n) {
      auto ls = enumerate_sup_lattices(n);
      for (std::size_t i = 0; i < ls.size(); ++i) {
        CHECK(canonical_form(*ls[i]).order == ls[i]->order_matrix());
        for (std::size_t j = i + 1; j < ls.size(); ++j) CHECK_FALSE(order_isomorphic(*ls[i], *ls[j]));
      }
    }
  }

  TEST_CASE("isomorphism search") {
    auto d = diamond();
    CHECK(automorphisms(*d).size() == 2);
    CHECK(automorphisms(*powerset(3)).size() == 6);
    CHECK(automorphisms(*chain(4)).size() == 1);
    CHECK_FALSE(order_isomorphic(*d, *chain(4)));
    auto moved = relabel(*d, {3, 1, 2, 0});
    CHECK(moved->bottom() == 3);
    auto f = find_order_isomorphism(*d, *moved);
    REQUIRE(f.has_value());
    CHECK((*f)[0] == 3);
  }

  TEST_CASE("covering pairs") {
    CHECK(covering_pairs(*chain(2)).size() == 1);
    CHECK(covering_pairs(*diamond()).size() == 4);
    CHECK(covering_pairs(*powerset(3)).size() == 12);
  }
}
