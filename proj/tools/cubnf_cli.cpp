#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubnf/driver.hpp"
#include "cubnf/engine.hpp"
#include "cubnf/print.hpp"

using namespace cubnf;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t default_fuel() {
  if (const char* env = std::getenv("CUBNF_FUEL")) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed CUBNF_FUEL=" << env << "\n";
    }
  }
  return kDefaultFuel;
}

json to_json(const Diagnostic& d) {
  return {{"kind", d.kind}, {"path", d.path}, {"message", d.message}};
}

json to_json(const DeclResult& r) {
  json j = {{"keyword", r.keyword},
            {"name", r.name},
            {"line", r.loc.line},
            {"col", r.loc.col},
            {"ok", r.ok},
            {"warnings", json::array()}};
  for (const auto& w : r.warnings) j["warnings"].push_back(to_json(w));
  if (!r.ok) j["error"] = {{"kind", r.error_kind}, {"path", r.error_path}, {"message", r.message}};
  return j;
}

std::string label(const DeclResult& r) { return r.name.empty() ? r.keyword : r.keyword + " " + r.name; }

void print_text(const FileReport& rep) {
  for (const auto& r : rep.decls) {
    std::string where = rep.file + ":" + std::to_string(r.loc.line) + ":" + std::to_string(r.loc.col);
    if (r.ok)
      std::cout << where << ": ok " << label(r) << "\n";
    else
      std::cout << where << ": error " << r.error_kind
                << (r.error_path.empty() ? "" : " at " + r.error_path) << " in " << label(r) << ": "
                << r.message << "\n";
    for (const auto& w : r.warnings)
      std::cout << where << ": warning " << w.kind << (w.path.empty() ? "" : " at " + w.path)
                << ": " << w.message << "\n";
  }
}

std::string show(const Split<Nf>& s) {
  if (s.arms.size() == 1 && s.arms[0].guard.is_top()) return print(s.arms[0].body);
  std::string out = "(split";
  for (const auto& a : s.arms) out += " (" + render(to_sexpr(a.guard)) + " " + print(a.body) + ")";
  return out + ")";
}

const Decl& find_nf(const std::vector<Decl>& decls, const std::string& name) {
  for (const auto& d : decls)
    if (d.kind == Decl::Kind::Nf && d.name == name) return d;
  throw std::runtime_error("no nf declaration named " + name);
}

IExpr parse_iexpr(const std::string& s) {
  if (s == "0") return IExpr::zero();
  if (s == "1") return IExpr::one();
  return IExpr::var(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checker and normalizer for cubical normal forms"};
  app.require_subcommand(1);

  CheckOptions opts;
  opts.fuel = default_fuel();
  bool as_json = false;
  std::vector<std::string> files;
  auto* check = app.add_subcommand("check", "Check declaration files");
  check->add_option("files", files, "Input files")->required();
  check->add_flag("--strict", opts.strict, "Treat undecided side conditions as errors");
  check->add_option("--fuel", opts.fuel, "Conversion fuel");
  check->add_flag("--json", as_json, "Emit a JSON report");

  auto* cof = app.add_subcommand("cof", "Cofibration queries");
  cof->require_subcommand(1);
  std::vector<std::string> ent_args;
  auto* ent = cof->add_subcommand("entails", "Decide HYPS... |- GOAL");
  ent->add_option("cofs", ent_args, "Hypotheses followed by the goal")->required();
  std::string phi_s, psi_s, dim_s;
  std::vector<std::string> hyp_s;
  auto* ceq = cof->add_subcommand("eq", "Extensional equality");
  ceq->add_option("phi", phi_s)->required();
  ceq->add_option("psi", psi_s)->required();
  ceq->add_option("--hyp", hyp_s, "Hypothesis (repeatable)");
  auto* fa = cof->add_subcommand("forall", "Eliminate forall i");
  fa->add_option("i", dim_s)->required();
  fa->add_option("phi", phi_s)->required();
  auto* dn = cof->add_subcommand("dnf", "Canonical disjunctive normal form");
  dn->add_option("phi", phi_s)->required();

  std::string file, name, name2, r_s;
  auto* sub = app.add_subcommand("subst", "Substitute a dimension in an nf declaration");
  sub->add_option("file", file)->required();
  sub->add_option("name", name)->required();
  sub->add_option("i", dim_s)->required();
  sub->add_option("r", r_s)->required();
  auto* eqc = app.add_subcommand("eq", "Compare two nf declarations");
  eqc->add_option("file", file)->required();
  eqc->add_option("n1", name)->required();
  eqc->add_option("n2", name2)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      std::vector<FileReport> reports;
      for (const auto& f : files) reports.push_back(check_text(slurp(f), f, opts));
      int code = exit_code(reports);
      if (as_json) {
        json j = {{"files", json::array()}, {"exit", code}};
        for (const auto& rep : reports) {
          json jf = {{"file", rep.file}, {"decls", json::array()}};
          for (const auto& r : rep.decls) jf["decls"].push_back(to_json(r));
          j["files"].push_back(jf);
        }
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& rep : reports) print_text(rep);
      }
      return code;
    }
    if (*ent) {
      std::vector<Cof> hyps;
      for (std::size_t k = 0; k + 1 < ent_args.size(); ++k) hyps.push_back(parse_cof(ent_args[k]));
      bool yes = entails(hyps, parse_cof(ent_args.back()));
      std::cout << (yes ? "true" : "false") << "\n";
      return yes ? 0 : 1;
    }
    if (*ceq) {
      std::vector<Cof> hyps;
      for (const auto& h : hyp_s) hyps.push_back(parse_cof(h));
      bool yes = cof_eq(hyps, parse_cof(phi_s), parse_cof(psi_s));
      std::cout << (yes ? "true" : "false") << "\n";
      return yes ? 0 : 1;
    }
    if (*fa) {
      std::cout << render(to_sexpr(forall_elim(dim_s, parse_cof(phi_s)))) << "\n";
      return 0;
    }
    if (*dn) {
      for (const auto& b : dnf(parse_cof(phi_s))) std::cout << render(to_sexpr(b.to_cof())) << "\n";
      return 0;
    }
    if (*sub) {
      auto decls = parse_decls(slurp(file));
      const Decl& d = find_nf(decls, name);
      if (!d.ctx.has_dim(dim_s)) throw std::runtime_error(dim_s + " is not a dimension of " + name);
      Checker checker(opts);
      check_body(checker, d.ctx, *d.type, *d.lhs);
      ISubst s{{dim_s, parse_iexpr(r_s)}};
      Split<Nf> out = subst_nf(d.ctx, *d.lhs, s);
      Ctx target = d.ctx.contract(s);
      if (r_s != "0" && r_s != "1" && !target.has_dim(r_s)) target = target.with_dim(r_s);
      if (!target.has_cofs() && out.arms.size() == 1) out.arms[0].guard = Cof::top();
      check_body(checker, target, subst_i_tp(*d.type, s), out);
      std::cout << show(out) << "\n";
      return 0;
    }
    if (*eqc) {
      auto decls = parse_decls(slurp(file));
      const Decl& a = find_nf(decls, name);
      const Decl& b = find_nf(decls, name2);
      bool yes = eq_nf(a.ctx.without_cofs(), *a.lhs, *b.lhs);
      std::cout << (yes ? "true" : "false") << "\n";
      return yes ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "cubnf: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
