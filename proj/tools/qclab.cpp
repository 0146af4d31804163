// Command-line front end: seed mutation, characters, Grassmannian counts,
// and the verification drivers. All reports are TSV with a '#' header that
// pins the inputs, seed, budgets, and commutation matrix.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qclab/bijection.hpp"
#include "qclab/hall.hpp"
#include "qclab/interp.hpp"
#include "qclab/tilting.hpp"

using namespace qclab;

namespace {

Vec parse_csv(const std::string& text) {
  Vec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  return out;
}

void emit_header(std::ostream& os, const std::string& cmd, i64 p, int s, i64 seed,
                 const Budgets& b, const IntMat* lambda) {
  os << "# qclab " << cmd << "\n";
  if (p > 0)
    os << "# field GF(" << ipow(p, s) << ") p=" << p << " s=" << s << "\n";
  os << "# seed " << seed << "\n";
  os << "# budgets end=" << b.end_enum << " hom=" << b.hom_scan << " grass=" << b.grass_work
     << " ext=" << b.ext_enum << " search=" << b.search_space
     << " samples=" << b.search_samples << "\n";
  if (lambda) {
    for (int i = 0; i < lambda->rows(); ++i) {
      os << "# lambda";
      for (int j = 0; j < lambda->cols(); ++j) os << " " << (*lambda)(i, j);
      os << "\n";
    }
  }
}

int cmd_mutate(const std::string& quiver_path, const std::string& path_csv) {
  QuiverPtr q = read_quiver(quiver_path);
  PrincipalPair pair = principal_pair(q);
  QuantumSeed s = initial_seed(pair);
  for (i64 k : parse_csv(path_csv)) s = mutate_seed(s, int(k) - 1);
  emit_header(std::cout, "mutate", 0, 1, 0, Budgets{}, &pair.Lambda);
  std::cout << "# path " << (path_csv.empty() ? "-" : path_csv) << "\n";
  std::cout << "# Btilde\n";
  for (int i = 0; i < s.Btilde_cur.rows(); ++i) {
    std::cout << "B";
    for (int j = 0; j < s.Btilde_cur.cols(); ++j) std::cout << "\t" << s.Btilde_cur(i, j);
    std::cout << "\n";
  }
  for (int i = 0; i < s.Lambda_cur.rows(); ++i) {
    std::cout << "L";
    for (int j = 0; j < s.Lambda_cur.cols(); ++j) std::cout << "\t" << s.Lambda_cur(i, j);
    std::cout << "\n";
  }
  for (int i = 0; i < s.m(); ++i)
    std::cout << "X" << (i + 1) << "\t" << s.cluster[i].render() << "\n";
  return 0;
}

int cmd_char(const std::string& rep_path, bool with_table, const Budgets& b) {
  Rep V = read_rep(rep_path);
  PrincipalPair pair = principal_pair(V.ctx->Q);
  emit_header(std::cout, with_table ? "char" : "gr-count", V.ctx->tower->p(), V.ctx->s, 0, b,
              &pair.Lambda);
  CountTable t = grassmannian_census(V, b);
  if (with_table) {
    TorusElement x = qcc(V, pair, b);
    std::cout << "char\t" << x.render() << "\n";
  }
  for (auto& [e, c] : t) {
    std::cout << "count";
    for (i64 v : e) std::cout << "\t" << v;
    std::cout << "\t" << c << "\n";
  }
  return 0;
}

int cmd_verify_bijection(const std::string& quiver_path, i64 p, int s, int depth, i64 seed,
                         const Budgets& b) {
  QuiverPtr q = read_quiver(quiver_path);
  PrincipalPair pair = principal_pair(q);
  BijectionReport r = verify_bijection(q, p, s, depth, seed, b);
  emit_header(std::cout, "verify bijection", p, s, seed, b, &pair.Lambda);
  std::cout << "# columns: path slot denom rep_dims status\n";
  for (const auto& item : r.items) {
    std::cout << (item.path.empty() ? "-" : item.path) << "\t" << item.slot << "\t";
    for (size_t i = 0; i < item.denom.size(); ++i)
      std::cout << (i ? "," : "") << item.denom[i];
    std::cout << "\t";
    if (item.rep_dims.empty())
      std::cout << "-";
    else
      for (size_t i = 0; i < item.rep_dims.size(); ++i)
        std::cout << (i ? "," : "") << item.rep_dims[i];
    std::cout << "\t" << item.status << "\n";
  }
  std::cout << "# distinct " << r.distinct_variables << " matched " << r.matched
            << " injective " << (r.injective ? "yes" : "no") << " saturated "
            << (r.saturated ? "yes" : "no") << "\n";
  std::cout << (r.pass() ? "PASS" : "FAIL") << "\tbijection\n";
  return r.pass() ? 0 : 1;
}

int cmd_verify_hall(const std::string& quiver_path, i64 p, int s, i64 max_dim, int samples,
                    i64 seed, const Budgets& b) {
  QuiverPtr q = read_quiver(quiver_path);
  CtxPtr ctx = make_context(q, p, s);
  ClassRegistry reg(ctx, b);
  Vec cap(size_t(q->n), max_dim);
  HallSweepReport r = run_hall_sweep(reg, cap, samples, seed);
  emit_header(std::cout, "verify hall", p, s, seed, b, nullptr);
  std::cout << "# columns: identity instance lhs rhs status\n";
  for (const auto& c : r.checks)
    std::cout << c.kind << "\t" << c.instance << "\t" << c.lhs << "\t" << c.rhs << "\t"
              << (c.pass ? "ok" : "FAIL") << "\n";
  std::cout << "# assoc " << r.assoc_instances << " green " << r.green_instances << " hom-hall "
            << r.homhall_instances << " hom-hall2 " << r.homhall2_instances << "\n";
  std::cout << (r.pass() ? "PASS" : "FAIL") << "\thall\n";
  return r.pass() ? 0 : 1;
}

int cmd_verify_tilting(const std::string& quiver_path, i64 p, int s, int depth, i64 seed,
                       bool mult, const Budgets& b) {
  QuiverPtr q = read_quiver(quiver_path);
  PrincipalPair pair = principal_pair(q);
  TiltingSweepReport r = verify_tilting_sweep(q, p, s, depth, seed, mult, b);
  emit_header(std::cout, "verify tilting", p, s, seed, b, &pair.Lambda);
  std::cout << "# columns: path B Lambda variables involutive class-identity mult\n";
  for (const auto& e : r.edges) {
    std::cout << e.path << "\t" << (e.b_match ? "ok" : "FAIL") << "\t"
              << (e.lambda_match ? "ok" : "FAIL") << "\t" << (e.vars_match ? "ok" : "FAIL")
              << "\t" << (e.involutive ? "ok" : "FAIL") << "\t"
              << (e.class_identity ? "ok" : "FAIL") << "\t";
    if (e.mult_checked)
      std::cout << e.mult_kind << (e.mult_pass ? ":ok" : ":FAIL");
    else
      std::cout << "-";
    std::cout << "\n";
  }
  std::cout << (r.pass() ? "PASS" : "FAIL") << "\ttilting\n";
  return r.pass() ? 0 : 1;
}

int cmd_interp(const std::string& quiver_path, const std::string& dimvec, const std::string& evec,
               const std::string& fields, i64 holdout, i64 seed, const Budgets& b) {
  QuiverPtr q = read_quiver(quiver_path);
  Vec v = parse_csv(dimvec), e = parse_csv(evec);
  std::vector<i64> qs;
  for (i64 x : parse_csv(fields)) qs.push_back(x);
  emit_header(std::cout, "interp", 0, 1, seed, b, nullptr);
  CountingPoly cp = interpolate_counting_poly(q, v, e, qs, holdout, seed, b);
  std::cout << "poly\t" << cp.render() << "\n";
  for (auto& [qq, c] : cp.samples) std::cout << "sample\t" << qq << "\t" << c << "\n";
  for (auto& [qq, pred, census, ok] : cp.holdouts)
    std::cout << "holdout\t" << qq << "\t" << pred << "\t" << census << "\t"
              << (ok ? "ok" : "FAIL") << "\n";
  UnimodularEvidence ev = unimodular_check(cp);
  std::cout << "nonnegative\t" << (ev.nonnegative ? "yes" : "no") << "\n";
  for (auto& [shift, len] : ev.runs)
    std::cout << "run\tq^" << shift << "\tlength\t" << len << "\n";
  std::cout << "single-center\t" << (ev.single_center ? "yes" : "no") << "\n";
  std::cout << "PASS\tinterp\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum cluster character laboratory"};
  app.require_subcommand(1);
  Budgets budgets;

  std::string quiver_path, rep_path, path_csv, dimvec, evec, fields;
  i64 p = 2, seed = 1, max_dim = 2, holdout = 7;
  int s = 1, depth = 4, samples = 100;
  bool mult = false;

  auto add_budget_opts = [&](CLI::App* c) {
    c->add_option("--budget-end", budgets.end_enum);
    c->add_option("--budget-hom", budgets.hom_scan);
    c->add_option("--budget-grass", budgets.grass_work);
    c->add_option("--budget-ext", budgets.ext_enum);
    c->add_option("--budget-search", budgets.search_space);
    c->add_option("--budget-samples", budgets.search_samples);
  };

  auto* mutate = app.add_subcommand("mutate", "mutate the initial seed along a path");
  mutate->add_option("--quiver", quiver_path)->required();
  mutate->add_option("--path", path_csv);

  auto* chr = app.add_subcommand("char", "quantum cluster character of a representation");
  chr->add_option("--rep", rep_path)->required();
  add_budget_opts(chr);

  auto* grc = app.add_subcommand("gr-count", "Grassmannian census of a representation");
  grc->add_option("--rep", rep_path)->required();
  add_budget_opts(grc);

  auto* verify = app.add_subcommand("verify", "verification drivers");
  verify->require_subcommand(1);
  auto* vb = verify->add_subcommand("bijection", "characters of rigids vs cluster variables");
  vb->add_option("--quiver", quiver_path)->required();
  vb->add_option("--p", p);
  vb->add_option("--s", s);
  vb->add_option("--depth", depth);
  vb->add_option("--seed", seed);
  add_budget_opts(vb);
  auto* vh = verify->add_subcommand("hall", "Hall number identities");
  vh->add_option("--quiver", quiver_path)->required();
  vh->add_option("--p", p);
  vh->add_option("--s", s);
  vh->add_option("--max-dim", max_dim);
  vh->add_option("--samples", samples);
  vh->add_option("--seed", seed);
  add_budget_opts(vh);
  auto* vt = verify->add_subcommand("tilting", "tilting mutation vs seed mutation");
  vt->add_option("--quiver", quiver_path)->required();
  vt->add_option("--p", p);
  vt->add_option("--s", s);
  vt->add_option("--depth", depth);
  vt->add_option("--seed", seed);
  vt->add_flag("--mult-theorems", mult);
  add_budget_opts(vt);

  auto* in = app.add_subcommand("interp", "counting polynomial interpolation");
  in->add_option("--quiver", quiver_path)->required();
  in->add_option("--dimvec", dimvec)->required();
  in->add_option("--e", evec)->required();
  in->add_option("--fields", fields)->required();
  in->add_option("--holdout", holdout);
  in->add_option("--seed", seed);
  add_budget_opts(in);

  CLI11_PARSE(app, argc, argv);

  try {
    if (mutate->parsed()) return cmd_mutate(quiver_path, path_csv);
    if (chr->parsed()) return cmd_char(rep_path, true, budgets);
    if (grc->parsed()) return cmd_char(rep_path, false, budgets);
    if (verify->parsed()) {
      if (vb->parsed()) return cmd_verify_bijection(quiver_path, p, s, depth, seed, budgets);
      if (vh->parsed()) return cmd_verify_hall(quiver_path, p, s, max_dim, samples, seed, budgets);
      if (vt->parsed()) return cmd_verify_tilting(quiver_path, p, s, depth, seed, mult, budgets);
    }
    if (in->parsed()) return cmd_interp(quiver_path, dimvec, evec, fields, holdout, seed, budgets);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
