#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qf/catalog.hpp"
#include "qf/error.hpp"
#include "qf/laws.hpp"
#include "qf/serialize.hpp"

using namespace qf;

namespace {

constexpr int kAllPass = 0, kSomeFail = 1, kUsage = 2;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(ErrorCode::BadDocument, "cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(ErrorCode::BadDocument, path + ": " + e.what());
  }
}

json parse_inline(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(ErrorCode::BadDocument, std::string(what) + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw ValidationError(ErrorCode::BadDocument, "cannot write " + out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qf: finite 2-forms, quantales and modules, with exhaustive law checks"};
  app.require_subcommand(1);

  std::string file;
  bool print = false;
  auto* validate = app.add_subcommand("validate", "Validate a structure document");
  validate->add_option("file", file, "JSON document")->required();
  validate->add_flag("--print", print, "Print the canonical form");

  std::string gen_name, relation, table, lattice_file, quantale_file, out;
  std::optional<int> n;
  bool inverse = false;
  auto* generate_cmd = app.add_subcommand("generate", "Emit a named example structure");
  generate_cmd->add_option("name", gen_name, "Generator")->required();
  generate_cmd->add_option("--n", n, "Size, or the element n of phi_n");
  generate_cmd->add_option("--relation", relation, "relation_form: boolean matrix as JSON");
  generate_cmd->add_option("--table", table, "monoid_quantale: multiplication table as JSON");
  generate_cmd->add_flag("--inverse", inverse, "monoid_quantale: involution X* = X^-1");
  generate_cmd->add_option("--lattice", lattice_file, "endo_quantale: lattice document");
  generate_cmd->add_option("--quantale", quantale_file, "phi_n: quantale document");
  generate_cmd->add_option("--out", out, "Output file");

  auto* laws = app.add_subcommand("laws", "Law registry");
  laws->require_subcommand(1);
  laws->add_subcommand("list", "List law ids");
  std::vector<std::string> law_ids;
  std::optional<int> cap, lattice_cap;
  std::string scope = "enum";
  bool serial = false, text = false;
  auto* run = laws->add_subcommand("run", "Run laws over enumerated or given instances");
  run->add_option("--law", law_ids, "Law id (repeatable; default all)");
  run->add_option("--cap", cap, "Carrier size cap (also QF_CAP)");
  run->add_option("--lattice-cap", lattice_cap, "Lattice size cap for lattice laws");
  run->add_option("--scope", scope, "\"enum\", or a document, array of documents, or report to replay");
  run->add_option("--out", out, "Write the JSON report here");
  run->add_flag("--serial", serial, "Run without OpenMP");
  run->add_flag("--text", text, "Print the text table instead of JSON");

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram in DOT");
  dot->add_option("file", file, "JSON document")->required();

  bool as_json = false, as_text = false;
  std::string in;
  auto* report = app.add_subcommand("report", "Render a law report");
  report->add_flag("--json", as_json, "Canonical JSON");
  report->add_flag("--text", as_text, "Aligned table (default)");
  report->add_option("--in,file", in, "Report file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*validate) {
      const json doc = read_json(file);
      validate_document(doc);
      if (print) std::cout << dump(canonicalize(doc));
      else std::cout << "ok: " << kind_of(doc) << "\n";
      return kAllPass;
    }
    if (*generate_cmd) {
      GeneratorParams p;
      p.n = n;
      p.inverse = inverse;
      if (!relation.empty()) p.relation = parse_inline(relation, "--relation");
      if (!table.empty()) p.table = parse_inline(table, "--table");
      if (!lattice_file.empty()) p.lattice = read_json(lattice_file);
      if (!quantale_file.empty()) p.quantale = read_json(quantale_file);
      emit(dump(generate(gen_name, p, caps_from_env())), out);
      return kAllPass;
    }
    if (*laws) {
      if (laws->got_subcommand("list")) {
        for (const auto& l : law_registry()) std::cout << l.id << "\t" << l.statement << "\n";
        return kAllPass;
      }
      RunOptions opts;
      opts.caps = caps_from_env();
      if (cap) opts.caps.carrier = *cap;
      if (lattice_cap) opts.caps.lattice_laws = *lattice_cap;
      opts.laws = law_ids;
      opts.exec = serial ? Exec::serial : Exec::parallel;
      if (scope != "enum") opts.scope = instances_from_file_json(read_json(scope), scope);
      const json rep = report_json(run_laws(opts), opts.caps);
      if (!out.empty()) emit(dump(rep), out);
      if (text) std::cout << report_text(rep);
      else if (out.empty()) std::cout << dump(rep);
      return rep["summary"]["fail"].get<int>() > 0 ? kSomeFail : kAllPass;
    }
    if (*dot) {
      std::cout << export_dot(read_json(file));
      return kAllPass;
    }
    if (*report) {
      const json rep = read_json(in);
      if (!rep.is_object() || rep.value("schema", "") != "qf-law-report/1")
        throw ValidationError(ErrorCode::BadDocument, in + " is not a law report");
      if (as_json && !as_text) std::cout << dump(rep);
      else std::cout << report_text(rep);
      return rep["summary"]["fail"].get<int>() > 0 ? kSomeFail : kAllPass;
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what();
    if (!e.witness().empty()) {
      std::cerr << " (witness";
      for (int w : e.witness()) std::cerr << " " << w;
      std::cerr << ")";
    }
    std::cerr << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
