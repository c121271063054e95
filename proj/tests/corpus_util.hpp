#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cubnf/driver.hpp"
#include "cubnf/print.hpp"

namespace corpus {

using namespace cubnf;

#ifndef CUBNF_CORPUS_DIR
#define CUBNF_CORPUS_DIR "tests/corpus"
#endif

inline std::vector<std::string> files() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(CUBNF_CORPUS_DIR))
    if (e.path().extension() == ".cnf") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Heads of every list in an s-expression; hcomp is refined by its type.
inline void heads(const SExpr& s, std::set<std::string>& out) {
  if (!s.is_list() || s.items.empty()) return;
  if (s.items[0].is_atom()) {
    out.insert(s.items[0].atom);
    if (s.items[0].atom == "hcomp" && s.items.size() > 1 && s.items[1].is_atom())
      out.insert("hcomp " + s.items[1].atom);
  }
  for (const auto& x : s.items) heads(x, out);
}
inline void atoms(const SExpr& s, std::set<std::string>& out) {
  if (s.is_atom()) out.insert(s.atom);
  for (const auto& x : s.items) atoms(x, out);
}

struct Summary {
  int positives = 0;
  int negatives = 0;
  std::vector<std::string> failures;
  std::map<std::string, int> negative_kinds;
  std::set<std::string> forms;
  int roundtrip_checked = 0;
  std::vector<std::string> roundtrip_failures;
};

inline Summary run() {
  Summary s;
  for (const auto& f : files()) {
    std::string text = slurp(f);
    FileReport rep = check_text(text, f);
    for (const auto& d : rep.decls) {
      if (!d.ok) s.failures.push_back(f + ":" + std::to_string(d.loc.line) + " " + d.error_kind + " " + d.message);
      if (d.keyword == "reject") {
        ++s.negatives;
      } else if (d.keyword != "def") {
        ++s.positives;
      }
    }
    for (const auto& form : read_sexprs(text)) {
      Decl d = parse_decl(form);
      if (d.kind == Decl::Kind::Reject) {
        s.negative_kinds[d.expect]++;
      } else if (d.kind != Decl::Kind::Def) {
        heads(form, s.forms);
        atoms(form, s.forms);
      }
      // parse after print is the identity on declarations.
      std::string once = render(to_sexpr(d));
      std::string twice = render(to_sexpr(parse_decl(read_sexpr(once))));
      ++s.roundtrip_checked;
      if (once != twice || render(to_sexpr(parse_decl(read_sexpr(twice)))) != twice)
        s.roundtrip_failures.push_back(once);
    }
  }
  return s;
}

/// Forms every rule of the grammar must be exercised by.
inline std::vector<std::string> required_forms() {
  return {"pi",        "lam",       "app",         "sigma",     "pair",   "fst",     "snd",
          "bool",      "true",      "false",       "if",        "U",      "el",      "code",
          "path",      "plam",      "papp",        "frontier",  "star",   "up",      "hcomp-stuck",
          "coe-stuck", "forall",    "hcomp wbool", "wbool",     "s1",     "base",    "loop",
          "s1-elim",   "hcomp s1",  "glue",        "glue-in",   "unglue", "split",   "tsplit",
          "cof",       "dim",       "assert-eq-nf", "assert-cof"};
}

}  // namespace corpus
