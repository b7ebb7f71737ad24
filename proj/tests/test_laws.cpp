#include <algorithm>
#include <fstream>
#include <set>

#include "doctest.h"
#include "families.hpp"
#include "qf/catalog.hpp"
#include "qf/enumerate.hpp"
#include "qf/error.hpp"
#include "qf/generators.hpp"
#include "qf/laws.hpp"

using namespace qf;
using namespace qf::testing;

namespace {

json fixture(const std::string& name) {
  std::ifstream in(std::string(QF_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  return json::parse(in);
}

int count_of(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

// node statements carry a label; edges carry "->"
int dot_nodes(const std::string& dot) { return count_of(dot, "[label="); }
int dot_edges(const std::string& dot) { return count_of(dot, "->"); }

std::vector<LawResult> run(std::vector<std::string> laws, Exec exec = Exec::parallel, Caps caps = {}) {
  RunOptions o;
  o.laws = std::move(laws);
  o.exec = exec;
  o.caps = caps;
  return run_laws(o);
}

bool all_pass(const std::vector<LawResult>& rs) {
  return !rs.empty() && std::all_of(rs.begin(), rs.end(), [](const LawResult& r) { return r.status == LawStatus::pass; });
}

}  // namespace

TEST_CASE("registry") {
  const auto& reg = law_registry();
  CHECK(reg.size() >= 30);
  std::set<std::string> ids;
  const auto fams = family_names();
  for (std::size_t i = 0; i < reg.size(); ++i) {
    ids.insert(reg[i].id);
    if (i > 0) CHECK(reg[i - 1].id < reg[i].id);
    CHECK_FALSE(reg[i].statement.empty());
    CHECK_FALSE(reg[i].kinds.empty());
    for (auto& f : reg[i].families) CHECK(std::find(fams.begin(), fams.end(), f) != fams.end());
    CHECK(find_law(reg[i].id) == &reg[i]);
  }
  CHECK(ids.size() == reg.size());
  CHECK(find_law("no-such-law") == nullptr);
  try {
    run({"no-such-law"});
    FAIL("expected UnknownLaw");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ErrorCode::UnknownLaw);
  }
}

TEST_CASE("families match the test-side enumerations") {
  Caps caps;
  CHECK(enumerate_family("forms", caps).size() == 19);
  CHECK(enumerate_family("form-pairs", caps).size() == 19 * 19);
  CHECK(enumerate_family("modules", caps).size() == module_family().size());
  std::size_t balanced = 0;
  for (auto& inst : enumerate_family("module-forms", caps))
    if (balance_report(std::get<BalancedForm>(from_json(inst.doc))).balanced) ++balanced;
  CHECK(balanced == balanced_family().size());
  CHECK_THROWS_AS(enumerate_family("nothing", caps), ValidationError);
}

TEST_CASE("exhaustive runs at the default caps pass") {
  CHECK(all_pass(run({"prop-formsvsGalois"})));
  CHECK(run({"prop-formsvsGalois"}).size() == 19);
  auto all = run({});
  CHECK(all_pass(all));
  std::set<std::string> seen;
  for (auto& r : all) seen.insert(r.law);
  CHECK(seen.size() == law_registry().size());
}

TEST_CASE("dense forms on C2 x C2") {
  Caps caps;
  caps.form_quantale_cells = 16;
  auto c2c2 = powerset(2);
  std::vector<Instance> scope;
  for (auto& f : enumerate_two_forms(c2c2, c2c2)) {
    auto fl = classify_form(f);
    if (fl.dense_left && fl.dense_right) scope.push_back({"f" + std::to_string(scope.size()), to_json(f)});
  }
  REQUIRE(scope.size() > 0);
  RunOptions o;
  o.laws = {"thm-phi-of-Q-of-phi", "lem-sidedisos"};
  o.scope = scope;
  o.caps = caps;
  auto rs = run_laws(o);
  CHECK(rs.size() == 2 * scope.size());
  CHECK(all_pass(rs));
}

TEST_CASE("parallel and serial runs agree and are deterministic") {
  std::vector<std::string> laws{"prop-continuities", "prop-equivalentformsoverQ", "prop-involutive-bijection",
                                "lem-denseforms", "background-residuation"};
  auto p1 = strip_timing(report_json(run(laws, Exec::parallel), {}));
  auto p2 = strip_timing(report_json(run(laws, Exec::parallel), {}));
  auto s = strip_timing(report_json(run(laws, Exec::serial), {}));
  CHECK(dump(p1) == dump(p2));
  CHECK(dump(p1) == dump(s));
  CHECK(p1["schema"] == "qf-law-report/1");
  for (auto& r : p1["results"]) CHECK_FALSE(r.contains("elapsed_ms"));
  const auto& rs = p1["results"];
  for (std::size_t i = 1; i < rs.size(); ++i)
    CHECK(std::pair{rs[i - 1]["law"].get<std::string>(), rs[i - 1]["instance"].get<std::string>()} <
          std::pair{rs[i]["law"].get<std::string>(), rs[i]["instance"].get<std::string>()});
}

TEST_CASE("a corrupted fixture fails with a replayable witness") {
  const json doc = fixture("corrupted_involutive.json");
  RunOptions o;
  o.scope = instances_from_file_json(doc, "fixture");
  auto rs = run_laws(o);
  REQUIRE(rs.size() == 3);
  for (auto& r : rs) {
    CHECK(r.status == LawStatus::fail);
    CHECK(r.instance == "diamond-meet-swapped-atoms");
    CHECK(r.witness["elements"] == json::array({1, 1, 1}));
    CHECK(r.instance_doc == doc);
  }
  const json report = report_json(rs, o.caps);
  CHECK(report["summary"]["fail"] == 3);

  // replay straight from the report
  RunOptions replay;
  replay.scope = instances_from_file_json(report, "report");
  auto again = run_laws(replay);
  CHECK(dump(strip_timing(report_json(again, replay.caps))) == dump(strip_timing(report)));

  // the witness is a real counterexample: a = 1, x = 1, y = 1
  auto c = std::get<InvolutiveCandidate>(from_json(doc));
  const Quantale& q = c.module->quantale();
  CHECK(c.form.value(c.module->act(q.star(1), 1), 1) != c.form.value(1, c.module->act(1, 1)));

  const std::string text = report_text(report);
  CHECK(text.find("prop-upsegannx") != std::string::npos);
  CHECK(text.find("3 fail") != std::string::npos);
}

TEST_CASE("scope documents only meet laws of their kind") {
  RunOptions o;
  o.laws = {"prop-formsvsGalois", "lem-phi-n"};
  o.scope = std::vector<Instance>{{"c3", to_json(*chain(3))}, {"s", to_json(sierpinski_form())}};
  auto rs = run_laws(o);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].law == "prop-formsvsGalois");
  CHECK(rs[0].instance == "s");
  CHECK(rs[0].status == LawStatus::pass);

  // over the cap: skipped, not failed
  Caps tight;
  tight.form_quantale_cells = 4;
  o.laws = {"thm-phi-of-Q-of-phi"};
  o.scope = std::vector<Instance>{{"m3", to_json(meet_form(chain(3)))}};
  o.caps = tight;
  rs = run_laws(o);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].status == LawStatus::skipped);
  CHECK(rs[0].witness["error"] == "CapExceeded");
}

TEST_CASE("generators") {
  GeneratorParams p;
  p.n = 2;
  auto c2 = generate("chain", p);
  CHECK(c2["name"] == "chain(2)");
  CHECK(*lattice_from_json(c2) == *chain(2));
  CHECK(canonicalize(c2) == c2);

  GeneratorParams rel;
  rel.relation = json::parse("[[false,true],[true,false]]");
  auto disjoint = form_from_json(generate("relation_form", rel));
  const Lattice& P = disjoint.left();
  REQUIRE(P.size() == 4);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) CHECK(disjoint.orthogonal(a, b) == ((a & b) == 0));

  auto s = form_from_json(generate("sierpinski_form", {}));
  auto fl = classify_form(s);
  CHECK(fl.faithful_right);
  CHECK(fl.dense_left);
  CHECK_FALSE(fl.faithful_left);

  GeneratorParams mon;
  mon.table = json::parse("[[0,1],[1,0]]");
  mon.inverse = true;
  auto pz2 = quantale_from_json(generate("monoid_quantale", mon));
  CHECK(pz2->size() == 4);
  CHECK(pz2->involution.has_value());

  GeneratorParams endo;
  endo.lattice = to_json(*chain(3));
  CHECK(quantale_from_json(generate("endo_quantale", endo))->size() == 6);

  GeneratorParams phin;
  phin.quantale = to_json(*two());
  phin.n = 0;
  auto bf = std::get<BalancedForm>(from_json(generate("phi_n", phin)));
  CHECK(balance_report(bf).balanced);
  CHECK(bf.form.orthogonal(1, 0));
  CHECK_FALSE(bf.form.orthogonal(1, 1));

  for (auto& name : generator_names()) CHECK_NOTHROW((void)name);
  try {
    generate("torus", {});
    FAIL("expected UnknownGenerator");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ErrorCode::UnknownGenerator);
  }
  CHECK_THROWS_AS(generate("chain", {}), ValidationError);
  GeneratorParams bad;
  bad.table = json::parse("[[1,1],[1,1]]");
  try {
    generate("monoid_quantale", bad);
    FAIL("expected NotAMonoid");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ErrorCode::NotAMonoid);
  }
}

TEST_CASE("DOT export") {
  const std::string c2 = export_dot(to_json(*chain(2)));
  CHECK(dot_nodes(c2) == 2);
  CHECK(dot_edges(c2) == 1);
  CHECK(c2.find("n0 -> n1") != std::string::npos);
  CHECK(c2.find("rankdir=BT") != std::string::npos);

  const std::string d = export_dot(to_json(*diamond()));
  CHECK(dot_nodes(d) == 4);
  CHECK(dot_edges(d) == 4);
  CHECK(export_dot(to_json(*diamond())) == d);

  const std::string q = export_dot(to_json(*two()));
  CHECK(dot_nodes(q) == 2);
  CHECK(q.find("1 (e)") != std::string::npos);
  CHECK(count_of(q, "doublecircle") == 1);

  const std::string f = export_dot(to_json(sierpinski_form()));
  CHECK(count_of(f, "subgraph cluster_") == 2);
  CHECK(dot_nodes(f) == 4 + 3);
  // P({0,1}) has 4 covers, the 3 opens form a chain
  CHECK(dot_edges(f) == 4 + 2);

  const std::string p5 = export_dot(to_json(*powerset(3)));
  CHECK(dot_nodes(p5) == 8);
  CHECK(dot_edges(p5) == 12);
}
