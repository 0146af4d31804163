#include "qclab/bijection.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qclab {

namespace {

std::string seed_key(const QuantumSeed& s) {
  std::string k;
  for (const auto& x : s.cluster) k += x.render() + ";";
  k += s.Btilde_cur.render();
  k += s.Lambda_cur.render();
  return k;
}

std::string path_str(const std::vector<int>& path) {
  std::string s;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(path[i] + 1);
  }
  return s;
}

}  // namespace

std::vector<std::pair<std::vector<int>, TorusElement>> explore_variables(
    const PrincipalPair& pair, int depth, bool* saturated, int max_seeds) {
  QuantumSeed init = initial_seed(pair);
  std::set<std::string> initial_vars;
  for (const auto& x : init.cluster) initial_vars.insert(x.render());

  std::vector<QuantumSeed> frontier = {init};
  std::set<std::string> seen = {seed_key(init)};
  std::map<std::string, std::pair<std::vector<int>, TorusElement>> variables;
  bool closed = false;
  for (int level = 0; level < depth; ++level) {
    std::vector<QuantumSeed> next;
    for (const QuantumSeed& s : frontier) {
      for (int k = 0; k < pair.n; ++k) {
        QuantumSeed t = mutate_seed(s, k);
        std::string key = seed_key(t);
        if (!seen.insert(key).second) continue;
        require(int(seen.size()) <= max_seeds, Err::BudgetExceeded, "seed exploration too large");
        std::string vr = t.cluster[k].render();
        if (!initial_vars.count(vr) && !variables.count(vr))
          variables[vr] = {t.path, t.cluster[k]};
        next.push_back(std::move(t));
      }
    }
    if (next.empty()) {
      closed = true;
      break;
    }
    frontier = std::move(next);
  }
  if (saturated) *saturated = closed;
  std::vector<std::pair<std::vector<int>, TorusElement>> out;
  for (auto& [render, pv] : variables) out.push_back(pv);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return out;
}

BijectionReport verify_bijection(const QuiverPtr& quiver, i64 p, int s, int depth, i64 seed,
                                 const Budgets& b) {
  PrincipalPair pair = principal_pair(quiver);
  CtxPtr ctx = make_context(quiver, p, s);
  BijectionReport rep;
  rep.p = p;
  rep.s = s;
  rep.depth = depth;
  rep.seed = seed;

  auto vars = explore_variables(pair, depth, &rep.saturated);
  rep.distinct_variables = int(vars.size());

  std::vector<Rep> matched_reps;
  for (auto& [path, x] : vars) {
    BijectionItem item;
    item.path = path_str(path);
    item.slot = path.empty() ? 0 : path.back() + 1;
    item.denom = denominator_vector(x, pair.n);
    try {
      auto found = search_rigid(ctx, item.denom, b, seed);
      if (!found) {
        item.status = "NotFound";
        rep.items.push_back(std::move(item));
        continue;
      }
      item.rep_dims = found->dims;
      RepClass rc = classify_rep(*found, b);
      item.exceptional = rc.is_rigid && rc.is_indecomposable;
      TorusElement chr = qcc(*found, pair, b);
      if (specialized_equal(x, chr, ctx->q())) {
        item.matched = true;
        item.status = item.exceptional ? "matched" : "NotExceptional";
        ++rep.matched;
        matched_reps.push_back(*found);
      } else {
        item.status = "Mismatch";
      }
    } catch (const Error& e) {
      // Item-level failures are recorded, not fatal.
      item.status = err_name(e.kind());
    }
    rep.items.push_back(std::move(item));
  }
  // Injectivity: no two variables may share a representation class.
  for (size_t i = 0; i < matched_reps.size() && rep.injective; ++i)
    for (size_t j = i + 1; j < matched_reps.size() && rep.injective; ++j)
      if (matched_reps[i].dims == matched_reps[j].dims &&
          are_isomorphic(matched_reps[i], matched_reps[j], b))
        rep.injective = false;
  return rep;
}

}  // namespace qclab
