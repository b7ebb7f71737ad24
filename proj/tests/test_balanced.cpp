#include <algorithm>

#include "doctest.h"
#include "families.hpp"
#include "qf/balanced.hpp"
#include "qf/enumerate.hpp"
#include "qf/error.hpp"

using namespace qf;
using namespace qf::testing;

namespace {

BoolMatrix orth_matrix(const TwoForm& f) { return f.orthogonality(); }

// Oracle: all tables Q -> M commuting with the action of Q on itself and
// preserving joins, checked pairwise.
std::vector<Table> brute_force_homs_from_q(const Module& m) {
  const Quantale& q = m.quantale();
  const int nq = q.size(), nm = m.size();
  std::vector<Table> out;
  Table h(nq, 0);
  while (true) {
    bool ok = h[q.bottom()] == m.lattice().bottom();
    for (Elem a = 0; a < nq && ok; ++a)
      for (Elem b = 0; b < nq && ok; ++b) {
        ok = h[q.lattice().join(a, b)] == m.lattice().join(h[a], h[b]);
        const Elem ab = m.side == Side::left ? q.mul(a, b) : q.mul(b, a);
        ok = ok && h[ab] == m.act(a, h[b]);
      }
    if (ok) out.push_back(h);
    int i = nq - 1;
    while (i >= 0 && h[i] == nm - 1) h[i--] = 0;
    if (i < 0) return out;
    ++h[i];
  }
}

bool onto(const Table& h, int n) {
  std::vector<bool> hit(n, false);
  for (Elem v : h) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

// Oracle: φ is a Q-orthoquotient of some φ_n, by search over n and over all
// surjective module maps.
bool orthoquotient_of_some_phi_n(const BalancedForm& bf) {
  const Quantale& q = bf.quantale();
  std::vector<Table> fs, gs;
  for (auto& f : brute_force_homs_from_q(*bf.left))
    if (onto(f, bf.left->size())) fs.push_back(f);
  for (auto& g : brute_force_homs_from_q(*bf.right))
    if (onto(g, bf.right->size())) gs.push_back(g);
  for (Elem n = 0; n < q.size(); ++n)
    for (auto& f : fs)
      for (auto& g : gs) {
        bool ok = true;
        for (Elem a = 0; a < q.size() && ok; ++a)
          for (Elem b = 0; b < q.size() && ok; ++b)
            ok = q.lattice().leq(q.mul(a, b), n) == bf.form.orthogonal(f[a], g[b]);
        if (ok) return true;
      }
  return false;
}

bool balanced_by_definition(const BalancedForm& bf) {
  for (Elem a = 0; a < bf.quantale().size(); ++a)
    for (Elem x = 0; x < bf.left->size(); ++x)
      for (Elem y = 0; y < bf.right->size(); ++y)
        if (bf.form.value(bf.left->act(a, x), y) != bf.form.value(x, bf.right->act(a, y))) return false;
  return true;
}

std::vector<QuantalePtr> phi_n_quantales() {
  std::vector<QuantalePtr> out = module_quantales();
  for (int n = 1; n <= 3; ++n)
    for (auto& q : enumerate_quantales(chain(n))) out.push_back(q);
  for (auto& q : enumerate_quantales(diamond())) out.push_back(q);
  return out;
}

}  // namespace

TEST_CASE("phi_n examples") {
  auto q = two();
  auto p0 = phi_n_form(q, 0);
  CHECK(orth_matrix(p0.form) == BoolMatrix{{true, true}, {true, false}});
  auto fl = classify_form(p0.form);
  CHECK(fl.dense_left);
  CHECK(fl.dense_right);
  CHECK(fl.faithful_left);
  CHECK(fl.faithful_right);
  auto p1 = phi_n_form(q, 1);
  CHECK(orth_matrix(p1.form) == BoolMatrix{{true, true}, {true, true}});

  auto pz = powerset_monoid_quantale({{0, 1}, {1, 0}});
  auto pe = phi_n_form(pz, 0);
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 4; ++y) CHECK(pe.form.orthogonal(x, y) == (x == 0 || y == 0));
}

TEST_CASE("balance examples") {
  CHECK(balance_report(phi_n_form(two(), 0)).balanced);

  auto one = make_quantale(one_element(), {{0}});
  auto l = make_module(one, chain(2), Side::right, {{0, 0}});
  auto r = make_module(one, chain(2), Side::left, {{0, 0}});
  for (auto& f : enumerate_two_forms(chain(2), chain(2))) CHECK(balance_report(make_balanced_form(l, r, f)).balanced);

  // φ_0 over 2 with one action entry flipped: 1 now acts as zero on the left.
  auto q = two();
  auto bad = make_module(q, chain(2), Side::right, {{0, 0}, {0, 0}});
  auto bf = make_balanced_form(bad, regular_module(q, Side::left), phi_n_form(q, 0).form);
  auto rep = balance_report(bf);
  CHECK_FALSE(rep.balanced);
  REQUIRE(rep.witness);
  CHECK(*rep.witness == std::vector<int>{1, 1, 1});
  for (bool c : rep.conditions) CHECK_FALSE(c);

  try {
    make_balanced_form(regular_module(q, Side::left), regular_module(q, Side::left), phi_n_form(q, 0).form);
    FAIL("expected ShapeMismatch");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ErrorCode::ShapeMismatch);
  }
}

TEST_CASE("phi_n is balanced for every n") {
  for (auto& q : phi_n_quantales())
    for (Elem n = 0; n < q->size(); ++n) {
      auto bf = phi_n_form(q, n);
      CHECK(balanced_by_definition(bf));
      auto rep = balance_report(bf);
      CHECK(rep.balanced);
      for (bool c : rep.conditions) CHECK(c);
    }
}

TEST_CASE("five balance conditions agree on every form") {
  std::size_t balanced = 0, total = 0;
  for (auto& q : module_quantales()) {
    std::vector<ModulePtr> rights, lefts;
    for (int n = 1; n <= 3; ++n) {
      for (auto& m : enumerate_modules(q, chain(n), Side::right)) rights.push_back(m);
      for (auto& m : enumerate_modules(q, chain(n), Side::left)) lefts.push_back(m);
    }
    for (auto& l : rights)
      for (auto& r : lefts)
        for (auto& f : enumerate_two_forms(l->carrier, r->carrier)) {
          auto bf = make_balanced_form(l, r, f);
          auto rep = balance_report(bf);
          ++total;
          if (rep.balanced) ++balanced;
          CHECK(rep.balanced == balanced_by_definition(bf));
          for (bool c : rep.conditions) CHECK(c == rep.balanced);
        }
  }
  CHECK(balanced > 0);
  CHECK(balanced < total);
}

TEST_CASE("orthogonalizer examples") {
  for (auto& q : module_quantales()) {
    const Elem e = *q->unit;
    for (Elem n = 0; n < q->size(); ++n) {
      auto o = orthogonalizer(phi_n_form(q, n), e, e);
      const Elem direct =
          q->lattice().join_where([&](Elem a) { return q->lattice().leq(q->mul(q->mul(e, a), e), n); });
      CHECK(o.value == direct);
      CHECK(o.value == n);
      CHECK(o.via_right_orth == n);
      CHECK(o.via_left_orth == n);
    }
  }
  auto q = two();
  CHECK(orthogonalizer(phi_n_form(q, 1), 1, 1).value == 1);
  CHECK(orthogonalizer(phi_n_form(q, 0), 1, 1).value == 0);
  try {
    orthogonalizer(phi_n_form(q, 0), 0, 1);
    FAIL("expected NotAGenerator");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ErrorCode::NotAGenerator);
  }
}

TEST_CASE("principal orthoquotient examples") {
  for (auto& q : module_quantales()) {
    const Elem e = *q->unit;
    for (Elem n = 0; n < q->size(); ++n) {
      auto p = principal_orthoquotient(phi_n_form(q, n), e, e);
      CHECK(p.n == n);
      CHECK(p.f == identity_table(q->size()));
      CHECK(p.g == identity_table(q->size()));
      CHECK(all_hold(p.claims));
    }
  }
  auto q = two();
  auto bf = make_balanced_form(regular_module(q, Side::right), regular_module(q, Side::left), phi_n_form(q, 0).form);
  auto p = principal_orthoquotient(bf, 1, 1);
  CHECK(p.f == Table{0, 1});
  CHECK(p.g == Table{0, 1});
  auto trivial = make_module(q, chain(2), Side::left, {{0, 0}, {0, 0}});
  auto nf = make_balanced_form(regular_module(q, Side::right), trivial, phi_n_form(q, 1).form);
  try {
    principal_orthoquotient(nf, 1, 1);
    FAIL("expected NotPrincipal");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ErrorCode::NotPrincipal);
  }
}

TEST_CASE("up-segment restricted form examples") {
  auto q = two();
  auto s = upsegment_restricted_form(q, 0, 0, 0);
  CHECK(s.form.form == phi_n_form(q, 0).form);
  CHECK(s.dense_left);
  CHECK(s.dense_right);
  CHECK(all_hold(s.claims));

  for (Elem r : {0, 1})
    for (Elem l : {0, 1}) {
      auto t = upsegment_restricted_form(q, 1, r, l);
      for (Elem x = 0; x < t.form.left->size(); ++x)
        for (Elem y = 0; y < t.form.right->size(); ++y) CHECK(t.form.form.orthogonal(x, y));
      CHECK(t.dense_right == (t.form.right->size() == 1));
      CHECK(t.dense_left == (t.form.left->size() == 1));
      CHECK(all_hold(t.claims));
    }

  auto c3 = meet_quantale(chain(3));
  CHECK(sided_elements(*c3).left == std::vector<Elem>{0, 1, 2});
  auto u = upsegment_restricted_form(c3, 1, 0, 0);
  CHECK(u.greatest_left_sided == 1);
  CHECK_FALSE(u.dense_right);
  CHECK_FALSE(u.dense_left);
  CHECK(all_hold(u.claims));
  auto v = upsegment_restricted_form(c3, 1, 1, 1);
  CHECK(v.dense_right);
  CHECK(v.dense_left);
  CHECK(all_hold(v.claims));

  try {
    upsegment_restricted_form(c3, 0, 1, 0);
    FAIL("expected PreconditionViolated");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolated);
  }
}

TEST_CASE("up-segment restricted forms over all valid parameters") {
  for (auto& q : phi_n_quantales()) {
    const auto sided = sided_elements(*q);
    for (Elem n = 0; n < q->size(); ++n)
      for (Elem r : sided.right)
        for (Elem l : sided.left) {
          if (!q->lattice().leq(q->lattice().join(r, l), n)) continue;
          auto s = upsegment_restricted_form(q, n, r, l);
          CHECK_MESSAGE(all_hold(s.claims), failed_claims(s.claims));
        }
  }
}

TEST_CASE("principal balanced forms") {
  auto family = balanced_family();
  REQUIRE(family.size() > 100);
  std::size_t principal = 0, faithful_principal = 0;
  for (auto& bf : family) {
    auto xs = generators(*bf.left), ys = generators(*bf.right);
    if (xs.empty() || ys.empty()) continue;
    ++principal;
    for (Elem x : xs)
      for (Elem y : ys) {
        auto o = orthogonalizer(bf, x, y);
        CHECK(o.value == o.via_right_orth);
        CHECK(o.value == o.via_left_orth);
        auto p = principal_orthoquotient(bf, x, y);
        CHECK_MESSAGE(all_hold(p.claims), failed_claims(p.claims));
        auto d = principal_density(bf, x, y);
        CHECK_MESSAGE(all_hold(d), failed_claims(d));
      }
    // Unital Q: principal forms are exactly the orthoquotients of some φ_n.
    if (bf.quantale().unit) CHECK(orthoquotient_of_some_phi_n(bf));
    auto fl = classify_form(bf.form);
    if (fl.faithful_left && fl.faithful_right) {
      ++faithful_principal;
      const Elem n = orthogonalizer(bf, xs.front(), ys.front()).value;
      auto oq = orthogonal_quotient(phi_n_form(bf.left->over, n).form);
      CHECK(find_form_isomorphism(bf.form, oq.form).has_value());
    }
  }
  CHECK(principal > 0);
  CHECK(faithful_principal > 0);
}

TEST_CASE("orthoquotient oracle rejects non-principal forms") {
  auto q = two();
  auto trivial = make_module(q, chain(2), Side::left, {{0, 0}, {0, 0}});
  auto bf = make_balanced_form(regular_module(q, Side::right), trivial, phi_n_form(q, 1).form);
  CHECK(balance_report(bf).balanced);
  CHECK_FALSE(orthoquotient_of_some_phi_n(bf));
}

TEST_CASE("orthogonal quotients and pushforwards stay balanced") {
  for (auto& bf : balanced_family()) {
    auto bq = balanced_orthogonal_quotient(bf);
    CHECK_MESSAGE(all_hold(bq.claims), failed_claims(bq.claims));
    CHECK(bq.form.has_value());
    for (auto& kl : enumerate_module_nuclei(*bf.left))
      for (auto& kr : enumerate_module_nuclei(*bf.right)) {
        auto pushed = pushforward(bf, module_quotient(*bf.left, kl), module_quotient(*bf.right, kr));
        if (pushed) CHECK(balance_report(*pushed).balanced);
      }
  }
}
