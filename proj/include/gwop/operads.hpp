#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwop/gset.hpp"
#include "gwop/util.hpp"

namespace gwop {

// A classical non-symmetric operad in Set, represented up to a finite arity
// cap.  Elements are addressed by (arity, index); `elem` gives a printable
// name (e.g. binary bracketings "((**)*)" for the free magma).
class SetOperad {
 public:
  static SetOperad terminal(int max_arity = 6);
  static SetOperad cyclic(int r, int max_arity = 6);
  static SetOperad magma(int max_arity = 6);
  // Explicit finite data; gamma_table keys are built by gamma_key below.
  // Law violations are *not* rejected here -- run check_operad_axioms.
  static SetOperad table(int max_arity, std::vector<std::vector<std::string>> elems, int unit,
                         std::vector<std::pair<std::string, int>> gamma_table);

  const std::string& kind() const { return kind_; }
  int modulus() const { return r_; }
  int max_arity() const { return max_arity_; }
  int size(int k) const;
  const std::string& elem(int k, int i) const;
  int index_of_elem(int k, const std::string& name) const;
  int unit() const { return unit_; }

  // operadic composite: top has arity m = args.size(); args[i] = (k_i, index);
  // the result lives in arity k_1+...+k_m.
  int gamma(int m, int top, const std::vector<std::pair<int, int>>& args) const;

  static std::string gamma_key(int m, int top, const std::vector<std::pair<int, int>>& args);

 private:
  std::string kind_;
  int r_ = 0;
  int max_arity_ = 0;
  int unit_ = 0;
  std::vector<std::vector<std::string>> elems_;             // per arity
  std::vector<std::pair<std::string, int>> gamma_table_;    // table kind only
};

// A classical operad valued in finite truncated globular sets: every P(k) is
// a GlobularSet of one fixed truncation, gamma acts dimension-wise and
// commutes with src/tgt, and the unit is a 0-cell of P(1).
class GOperad {
 public:
  static GOperad terminal(int trunc, int max_arity = 6);
  // 0-cells from base; exactly one higher cell per parallel pair.
  static GOperad chaotic(SetOperad base, int trunc);
  // 0-cells from base; only identity-pattern higher cells.
  static GOperad discrete(SetOperad base, int trunc);
  // truncation 1: one 0-cell per arity, hom = Z_r of parallel loops, vertical
  // composition is addition mod r; the delooping of cyclic(r).
  static GOperad delooped_cyclic(int r, int max_arity = 6);

  const std::string& kind() const { return kind_; }
  int truncation() const { return trunc_; }
  int max_arity() const { return max_arity_; }
  const SetOperad* base() const { return base_ ? &*base_ : nullptr; }
  const GlobularSet& at(int k) const;
  int unit0() const;                 // unit 0-cell index in P(1)
  int unit_cell(int dim) const;      // identity-pattern cell over the unit

  int gamma(int dim, int m, int top, const std::vector<std::pair<int, int>>& args) const;

  // categorical (vertical) structure of the truncation-1 families, used by
  // the distributive law and by Q-multiplication at n = 2
  int videntity(int k, int obj) const;
  int vcompose(int k, int f, int g) const;  // f then g; 1-cells of P(k)
  // free-category algebra action on a vertical path of 1-cells; the empty
  // path at a 0-cell gives its identity
  int act_path(int k, const std::vector<int>& edges, int obj_if_empty) const;

 private:
  std::string kind_;
  int trunc_ = 0;
  int r_ = 0;
  int max_arity_ = 0;
  std::optional<SetOperad> base_;
  std::vector<GlobularSet> fibers_;  // P(k) for k = 0..max_arity
};

// Axiom reports: unit and associativity instances, exhaustively when the
// instance count stays within budget, otherwise by seeded sampling.
Report check_operad_axioms(const SetOperad& P, int max_arity, int sample_budget = 2000,
                           unsigned seed = 0);
Report check_operad_axioms(const GOperad& P, int max_arity, int sample_budget = 2000,
                           unsigned seed = 0);

Report operad_contractible(const GOperad& P, int max_arity);
bool operad_is_contractible(const GOperad& P, int max_arity);

// The data of an iterative operadic theory: P[i] has truncation i and P[0]
// is terminal.
struct OperadSeries {
  int n = 0;
  std::vector<GOperad> P;
};

SetOperad set_operad_from_json(const nlohmann::json& j);
GOperad goperad_from_json(const nlohmann::json& j);
OperadSeries series_from_json(const nlohmann::json& j);

}  // namespace gwop
