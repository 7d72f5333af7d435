#include "frobstar/report.hpp"

#include <chrono>
#include <cstdio>
#include <optional>
#include <sstream>

#include "frobstar/graded.hpp"
#include "frobstar/group.hpp"
#include "frobstar/io.hpp"
#include "frobstar/semisimple.hpp"

namespace frobstar::report {

namespace {

using nlohmann::json;

json cx(Complex z) { return json::array({z.real(), z.imag()}); }

json vec_json(const Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(cx(v(i)));
  return a;
}

json mat_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(cx(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json checks_json(const ValidationReport& r) {
  json a = json::array();
  for (const auto& c : r.checks)
    a.push_back({{"name", c.name},
                 {"pass", c.pass},
                 {"measured", c.measured},
                 {"threshold", c.threshold}});
  return a;
}

void render_checks(std::ostringstream& out, const ValidationReport& r) {
  for (const auto& c : r.checks) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "  [%s] %-40s measured=%.3e threshold=%.3e\n",
                  c.pass ? "PASS" : "FAIL", c.name.c_str(), c.measured,
                  c.threshold);
    out << buf;
  }
}

struct ParsedInput {
  std::string kind;  // "group" | "graded-algebra"
  std::optional<FiniteGroup> group;
  std::optional<GroupAutomorphism> sigma;
  GradedFrobeniusStarAlgebra algebra;  // always set; m = 1 for plain groups
};

ParsedInput load_input(const RunConfig& cfg) {
  ParsedInput in;
  json j = io::load_json_file(cfg.input_path);
  const bool is_group = j.contains("cayley") || j.contains("permutations") ||
                        (j.contains("schema") && j.at("schema") == "group.v1");
  if (is_group) {
    in.kind = "group";
    in.group = io::parse_group(j);
    if (!cfg.automorphism_path.empty()) {
      GroupAutomorphism sigma =
          io::parse_automorphism(io::load_json_file(cfg.automorphism_path));
      if (cfg.m > 0) sigma.m = cfg.m;
      validate_automorphism(*in.group, sigma);
      in.sigma = sigma;
      in.algebra = graded_group_algebra(*in.group, sigma, cfg.tol);
    } else {
      FrobeniusStarAlgebra alg = group_algebra(*in.group, cfg.tol);
      std::vector<int> grades(alg.dim(), 0);
      in.algebra = GradedFrobeniusStarAlgebra(std::move(alg), 1, std::move(grades));
    }
  } else {
    in.kind = "graded-algebra";
    in.algebra = io::parse_graded_algebra(j, cfg.tol);
    if (cfg.m > 0 && cfg.m != in.algebra.modulus())
      throw InvalidInput("--m disagrees with the 'm' field of the input");
  }
  return in;
}

json config_json(const RunConfig& cfg, const ParsedInput& in) {
  json c;
  c["command"] = cfg.command;
  c["input"] = cfg.input_path;
  c["input_fingerprint"] = io::file_fingerprint(cfg.input_path);
  c["input_kind"] = in.kind;
  if (!cfg.automorphism_path.empty()) {
    c["automorphism"] = cfg.automorphism_path;
    c["automorphism_fingerprint"] = io::file_fingerprint(cfg.automorphism_path);
  } else {
    c["automorphism"] = nullptr;
  }
  c["m"] = in.algebra.modulus();
  c["tolerance"] = {{"eps_eq", cfg.tol.eps_eq}, {"eps_rank", cfg.tol.eps_rank}};
  c["seed"] = cfg.tol.seed;
  return c;
}

void section_axioms(const ParsedInput& in, const Tolerance& tol,
                    ValidationReport& all, json& out, std::ostringstream& text) {
  ValidationReport r = in.algebra.modulus() > 1
                           ? validate_graded(in.algebra, tol)
                           : validate_frobenius_star(in.algebra.base(), tol);
  out["axioms"] = checks_json(r);
  text << "axioms:\n";
  render_checks(text, r);
  for (auto& c : r.checks) all.checks.push_back(std::move(c));
}

void section_characters(const ParsedInput& in, const Tolerance& tol,
                        ValidationReport& all, json& out,
                        std::ostringstream& text) {
  const auto& alg = in.algebra.base();
  auto simples = simple_modules(alg, tol);
  auto orth = verify_orthogonality(alg, simples, tol);

  json table = json::array();
  text << "characters (rows sorted by degree, lexicographic values):\n";
  for (std::size_t i = 0; i < simples.size(); ++i) {
    table.push_back({{"degree", simples[i].dim},
                     {"values", vec_json(simples[i].character)}});
    text << "  degree " << simples[i].dim << ":";
    for (Eigen::Index j = 0; j < simples[i].character.size(); ++j) {
      char buf[64];
      Complex z = simples[i].character(j);
      std::snprintf(buf, sizeof(buf), " %.4g%+.4gi", z.real(), z.imag());
      text << buf;
    }
    text << "\n";
  }
  out["characters"] = table;
  out["character_gram"] = mat_json(orth.gram);
  if (in.group) {
    double n = static_cast<double>(in.group->order);
    out["character_gram_normalized"] = mat_json(Matrix(orth.gram / n));
  }
  text << "character gram diagonal:";
  for (Eigen::Index i = 0; i < orth.gram.rows(); ++i) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), " %.6g", orth.gram(i, i).real());
    text << buf;
  }
  text << "\n";
  render_checks(text, orth.checks);
  for (auto& c : orth.checks.checks) all.checks.push_back(std::move(c));
}

void section_idempotents(const ParsedInput& in, const Tolerance& tol,
                         json& out, std::ostringstream& text) {
  const auto& alg = in.algebra.base();
  auto simples = simple_modules(alg, tol);
  json arr = json::array();
  text << "central idempotents:\n";
  for (const auto& s : simples) {
    Complex en = alg.inner(s.idempotent, s.idempotent);
    arr.push_back({{"degree", s.dim},
                   {"coefficients", vec_json(s.idempotent)},
                   {"c", cx(s.c)},
                   {"e_norm", cx(en)}});
    char buf[96];
    std::snprintf(buf, sizeof(buf), "  degree %d  c=%.6g%+.6gi  <e,e>=%.6g\n",
                  s.dim, s.c.real(), s.c.imag(), en.real());
    text << buf;
  }
  out["idempotents"] = arr;
}

void section_twisted(const ParsedInput& in, const Tolerance& tol,
                     ValidationReport& all, json& out,
                     std::ostringstream& text) {
  auto tr = verify_twisted_orthogonality(in.algebra, tol);
  json t;
  t["invariant_simples"] = tr.invariant;
  json fams = json::array();
  for (const auto& fam : tr.families) {
    json exts = json::array();
    for (const auto& e : fam.extensions)
      exts.push_back({{"degree", e.dim},
                      {"character", vec_json(e.character)},
                      {"c", cx(e.c)}});
    fams.push_back({{"source_index", fam.source_index},
                    {"anchor_index", fam.anchor_index},
                    {"extensions", exts}});
  }
  t["families"] = fams;
  json chars = json::array();
  for (std::size_t i = 0; i < tr.families.size(); ++i) {
    TwistedCharacter tc = twisted_character(in.algebra, tr.families[i]);
    chars.push_back({{"source_index", tc.source_index},
                     {"extension_choice", tc.extension_choice},
                     {"values", vec_json(tc.values)}});
  }
  t["twisted_characters"] = chars;
  t["twisted_gram"] = mat_json(tr.twisted_gram);
  if (in.group) {
    double n = static_cast<double>(in.algebra.dim());
    t["twisted_gram_normalized"] = mat_json(Matrix(tr.twisted_gram / n));
  }
  json targets = json::array();
  for (auto z : tr.diagonal_target) targets.push_back(cx(z));
  t["diagonal_target"] = targets;
  t["graded_component_gram"] = mat_json(tr.graded_component_gram);
  json vds = json::array();
  for (const auto& v : tr.vandermonde_solution) vds.push_back(vec_json(v));
  t["vandermonde_solution"] = vds;
  t["checks"] = checks_json(tr.checks);
  out["twisted"] = t;

  text << "twisted: " << tr.invariant.size() << " invariant simple(s)\n";
  text << "twisted gram diagonal:";
  for (Eigen::Index i = 0; i < tr.twisted_gram.rows(); ++i) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), " %.6g", tr.twisted_gram(i, i).real());
    text << buf;
  }
  text << "\n";
  render_checks(text, tr.checks);
  for (auto& c : tr.checks.checks) all.checks.push_back(std::move(c));
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  RunResult res;
  auto t0 = std::chrono::steady_clock::now();
  try {
    ParsedInput in = load_input(cfg);
    if (cfg.command == "twisted" && in.algebra.modulus() <= 1)
      throw InvalidInput(
          "command 'twisted' needs --automorphism (group input) or m > 1 "
          "(algebra input)");

    json out;
    out["schema"] = "report.v1";
    out["config"] = config_json(cfg, in);
    std::ostringstream text;
    text << "frobstar " << cfg.command << " on " << cfg.input_path << "\n";
    ValidationReport all;

    const std::string& cmd = cfg.command;
    const bool full = cmd == "full-report";
    if (cmd == "check-axioms" || full)
      section_axioms(in, cfg.tol, all, out, text);
    if (cmd == "characters" || full)
      section_characters(in, cfg.tol, all, out, text);
    if (cmd == "idempotents" || full) section_idempotents(in, cfg.tol, out, text);
    if (cmd == "twisted" || (full && in.algebra.modulus() > 1))
      section_twisted(in, cfg.tol, all, out, text);

    bool pass = all.pass();
    out["pass"] = pass;
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    out["timing_ms"] = ms;
    text << (pass ? "RESULT: PASS\n" : "RESULT: FAIL\n");
    res.exit_code = pass ? 0 : 1;
    res.text = text.str();
    res.json = out.dump(2) + "\n";
  } catch (const std::exception& e) {
    res.exit_code = 2;
    res.text = std::string("error: ") + e.what() + "\n";
    res.json.clear();
  }
  return res;
}

}  // namespace frobstar::report
