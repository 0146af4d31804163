#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qclab/rep.hpp"

namespace qclab {

/// Memoized isomorphism classes of small representations over one context,
/// with the counting quantities the Hall identities quantify over.
class ClassRegistry {
 public:
  ClassRegistry(CtxPtr ctx, Budgets budgets = {});

  const CtxPtr& ctx() const { return ctx_; }
  const Budgets& budgets() const { return budgets_; }

  int id_of(const Rep& r);
  Rep rep_of(int id) const { return reps_[size_t(id)]; }
  int size() const { return int(reps_.size()); }

  i64 hom(int a, int b);
  i64 aut(int a);
  /// F^{amb}_{quot, sub}: subobjects of amb isomorphic to sub with quotient
  /// isomorphic to quot.
  i64 hall(int amb, int quot, int sub);
  /// Number of extension classes in Ext^1(b, c) with middle term mid.
  i64 epsilon(int b, int c, int mid);
  int tau_class(int a);
  bool has_projective_summand(int a);

  /// Every class with dimension vector componentwise at most cap.
  std::vector<int> all_classes_up_to(const Vec& cap);

 private:
  CtxPtr ctx_;
  Budgets budgets_;
  std::vector<Rep> reps_;
  std::vector<i64> end_dim_;
  std::map<std::string, int> key_cache_;
  std::map<std::pair<int, int>, i64> hom_memo_;
  std::map<int, i64> aut_memo_;
  std::map<std::tuple<int, int, int>, i64> hall_memo_;
  std::map<std::tuple<int, int, int>, i64> eps_memo_;
  std::map<int, int> tau_memo_;
  std::map<int, bool> projsum_memo_;
  std::map<Vec, std::vector<int>> up_to_memo_;
};

i64 hall_number(const Rep& B, const Rep& C, const Rep& D, const Budgets& b = {});
i64 epsilon_count(const Rep& B, const Rep& C, const Rep& D, const Budgets& b = {});

/// One verified identity instance: both sides evaluated independently.
struct IdentityCheck {
  std::string kind;
  std::string instance;
  std::string lhs, rhs;
  bool pass = false;
};

IdentityCheck check_hall_assoc(ClassRegistry& reg, int K, int L, int B, int V);
IdentityCheck check_green(ClassRegistry& reg, int V, int W, int X, int Y);
/// Direct kernel/cokernel classification of Hom(W, tau V) against the
/// Hall-number expansion; one row per (kernel, cokernel) class.
std::vector<IdentityCheck> check_hom_hall(ClassRegistry& reg, int V, int W);
/// The two injective/projective-side restricted Hom counts.
std::vector<IdentityCheck> check_hom_hall2(ClassRegistry& reg, int W, int vertex);

/// Searches an indecomposable X with tau X isomorphic to N.
Rep tau_preimage_indec(ClassRegistry& reg, const Rep& N);

struct HallSweepReport {
  std::vector<IdentityCheck> checks;
  int assoc_instances = 0;
  int green_instances = 0;
  int homhall_instances = 0;
  int homhall2_instances = 0;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Seeded random instances of the associativity and comultiplication
/// identities over the class list with dimensions at most cap, plus direct
/// kernel/cokernel classifications of restricted Hom spaces.
HallSweepReport run_hall_sweep(ClassRegistry& reg, const Vec& cap, int samples, i64 seed,
                               int homhall_min = 10);

}  // namespace qclab
