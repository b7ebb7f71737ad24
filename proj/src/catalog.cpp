#include "qf/catalog.hpp"

#include <sstream>

#include "qf/balanced.hpp"
#include "qf/error.hpp"
#include "qf/generators.hpp"

namespace qf {

namespace {

template <class T>
const T& need(const std::optional<T>& v, const std::string& gen, const char* param) {
  if (!v) throw ValidationError(ErrorCode::PreconditionViolated, gen + " needs --" + param);
  return *v;
}

std::vector<Table> int_table(const json& j) {
  try {
    return j.get<std::vector<Table>>();
  } catch (const json::exception& e) {
    throw ValidationError(ErrorCode::BadDocument, std::string("expected an integer table: ") + e.what());
  }
}

BoolMatrix bool_table(const json& j) {
  try {
    BoolMatrix m;
    for (const auto& row : j) {
      std::vector<bool> r;
      for (const auto& v : row) r.push_back(v.is_boolean() ? v.get<bool>() : v.get<int>() != 0);
      m.push_back(std::move(r));
    }
    return m;
  } catch (const json::exception& e) {
    throw ValidationError(ErrorCode::BadDocument, std::string("expected a boolean table: ") + e.what());
  }
}

struct Carrier {
  std::string label;
  json lattice;
  std::optional<int> unit;
};

std::vector<Carrier> carriers(const json& doc) {
  const std::string kind = kind_of(doc);
  auto unit_of = [](const json& q) -> std::optional<int> {
    if (q.contains("unit") && q["unit"].is_number_integer()) return q["unit"].get<int>();
    return std::nullopt;
  };
  if (kind == "lattice") return {{"", doc, std::nullopt}};
  if (kind == "quantale") return {{"", doc.at("carrier"), unit_of(doc)}};
  if (kind == "form") return {{"L", doc.at("left"), {}}, {"R", doc.at("right"), {}}};
  if (kind == "module") return {{"", doc.at("carrier"), {}}};
  if (kind == "involutive-module") return {{"", doc.at("module").at("carrier"), {}}};
  if (kind == "module-form")
    return {{"L", doc.at("left").at("carrier"), {}}, {"R", doc.at("right").at("carrier"), {}}};
  if (kind == "form-pair") {
    const auto& s = doc.at("source");
    const auto& t = doc.at("target");
    return {{"L", s.at("left"), {}}, {"R", s.at("right"), {}}, {"L'", t.at("left"), {}}, {"R'", t.at("right"), {}}};
  }
  if (kind == "involutive-context")
    return {{"Q", doc.at("quantale").at("carrier"), unit_of(doc.at("quantale"))}, {"M", doc.at("form").at("left"), {}}};
  throw ValidationError(ErrorCode::BadDocument, "no carrier in kind \"" + kind + "\"");
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names{"chain",         "powerset",        "diamond",      "sierpinski_form",
                                              "relation_form", "monoid_quantale", "endo_quantale", "phi_n"};
  return names;
}

json generate(const std::string& name, const GeneratorParams& p, const Caps& caps) {
  json doc;
  std::string label = name;
  if (name == "chain") {
    const int n = need(p.n, name, "n");
    if (n < 1) throw ValidationError(ErrorCode::PreconditionViolated, "chain needs n ≥ 1");
    doc = to_json(*chain(n));
    label = "chain(" + std::to_string(n) + ")";
  } else if (name == "powerset") {
    const int n = need(p.n, name, "n");
    if (n < 0 || n > 4) throw ValidationError(ErrorCode::PreconditionViolated, "powerset needs 0 ≤ n ≤ 4");
    doc = to_json(*powerset(n));
    label = "powerset(" + std::to_string(n) + ")";
  } else if (name == "diamond") {
    doc = to_json(*diamond());
  } else if (name == "sierpinski_form") {
    doc = to_json(sierpinski_form());
  } else if (name == "relation_form") {
    doc = to_json(relation_form(bool_table(need(p.relation, name, "relation"))));
  } else if (name == "monoid_quantale") {
    doc = to_json(*powerset_monoid_quantale(int_table(need(p.table, name, "table")), p.inverse, caps));
  } else if (name == "endo_quantale") {
    doc = to_json(*endo_quantale(lattice_from_json(need(p.lattice, name, "lattice")), caps).quantale);
  } else if (name == "phi_n") {
    auto q = quantale_from_json(need(p.quantale, name, "quantale"));
    const int n = need(p.n, name, "n");
    if (n < 0 || n >= q->size()) throw ValidationError(ErrorCode::ShapeMismatch, "n is not an element of Q");
    doc = to_json(phi_n_form(q, n));
    label = "phi_n(" + std::to_string(n) + ")";
  } else {
    throw ValidationError(ErrorCode::UnknownGenerator, "unknown generator \"" + name + "\"");
  }
  doc["name"] = label;
  return doc;
}

std::string export_dot(const json& doc) {
  const auto cs = carriers(doc);
  const bool clustered = cs.size() > 1;
  std::ostringstream os;
  os << "digraph " << quoted(doc.value("name", kind_of(doc))) << " {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    auto l = lattice_from_json(cs[i].lattice);
    const std::string prefix = clustered ? "c" + std::to_string(i) + "_" : "n";
    const std::string indent = clustered ? "    " : "  ";
    if (clustered) os << "  subgraph cluster_" << i << " {\n    label=" << quoted(cs[i].label) << ";\n";
    for (Elem x = 0; x < l->size(); ++x) {
      os << indent << prefix << x << " [label=\"" << x;
      if (cs[i].unit == x) os << " (e)\", shape=doublecircle];\n";
      else os << "\"];\n";
    }
    for (auto [a, b] : covering_pairs(*l)) os << indent << prefix << a << " -> " << prefix << b << ";\n";
    if (clustered) os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qf
