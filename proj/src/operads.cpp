#include "gwop/operads.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <numeric>
#include <random>
#include <sstream>

namespace gwop {

// ---------------------------------------------------------------------------
// SetOperad

SetOperad SetOperad::terminal(int max_arity) {
  SetOperad p;
  p.kind_ = "terminal";
  p.max_arity_ = max_arity;
  p.elems_.assign(max_arity + 1, {"*"});
  p.unit_ = 0;
  return p;
}

SetOperad SetOperad::cyclic(int r, int max_arity) {
  if (r < 1) throw Error("cyclic operad: modulus must be positive");
  SetOperad p;
  p.kind_ = "cyclic";
  p.r_ = r;
  p.max_arity_ = max_arity;
  p.elems_.resize(max_arity + 1);
  for (int k = 0; k <= max_arity; ++k)
    for (int a = 0; a < r; ++a) p.elems_[k].push_back(std::to_string(a));
  p.unit_ = 0;
  return p;
}

SetOperad SetOperad::magma(int max_arity) {
  SetOperad p;
  p.kind_ = "magma";
  p.max_arity_ = max_arity;
  p.elems_.resize(max_arity + 1);
  // planar binary bracketings of k letters; none for k = 0
  if (max_arity >= 1) p.elems_[1] = {"*"};
  for (int k = 2; k <= max_arity; ++k)
    for (int i = 1; i < k; ++i)
      for (const auto& l : p.elems_[i])
        for (const auto& r : p.elems_[k - i]) p.elems_[k].push_back("(" + l + r + ")");
  p.unit_ = 0;
  return p;
}

SetOperad SetOperad::table(int max_arity, std::vector<std::vector<std::string>> elems, int unit,
                           std::vector<std::pair<std::string, int>> gamma_table) {
  if (static_cast<int>(elems.size()) != max_arity + 1)
    throw Error("table operad: expected elements for arities 0.." + std::to_string(max_arity));
  if (unit < 0 || elems.size() < 2 || unit >= static_cast<int>(elems[1].size()))
    throw Error("table operad: unit must be an element of arity 1");
  SetOperad p;
  p.kind_ = "table";
  p.max_arity_ = max_arity;
  p.elems_ = std::move(elems);
  p.unit_ = unit;
  p.gamma_table_ = std::move(gamma_table);
  return p;
}

int SetOperad::size(int k) const {
  if (k < 0 || k > max_arity_)
    throw Error("operad: arity " + std::to_string(k) + " exceeds cap " +
                std::to_string(max_arity_));
  return static_cast<int>(elems_[k].size());
}

const std::string& SetOperad::elem(int k, int i) const {
  if (i < 0 || i >= size(k)) throw Error("operad: no element " + std::to_string(i));
  return elems_[k][i];
}

int SetOperad::index_of_elem(int k, const std::string& name) const {
  if (k < 0 || k > max_arity_) return -1;
  for (std::size_t i = 0; i < elems_[k].size(); ++i)
    if (elems_[k][i] == name) return static_cast<int>(i);
  return -1;
}

std::string SetOperad::gamma_key(int m, int top, const std::vector<std::pair<int, int>>& args) {
  std::ostringstream os;
  os << m << ":" << top << "|";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) os << ",";
    os << args[i].first << ":" << args[i].second;
  }
  return os.str();
}

int SetOperad::gamma(int m, int top, const std::vector<std::pair<int, int>>& args) const {
  if (static_cast<int>(args.size()) != m) throw Error("gamma: arity mismatch");
  if (top < 0 || top >= size(m)) throw Error("gamma: no such top element");
  int total = 0;
  for (auto [k, i] : args) {
    if (i < 0 || i >= size(k)) throw Error("gamma: argument out of range");
    total += k;
  }
  if (total > max_arity_)
    throw Error("gamma: result arity " + std::to_string(total) + " exceeds cap " +
                std::to_string(max_arity_));
  if (kind_ == "terminal") return 0;
  if (kind_ == "cyclic") {
    int s = top;
    for (auto [k, i] : args) s = (s + i) % r_;
    return s;
  }
  if (kind_ == "magma") {
    // grafting: replace the leaves of top, left to right, by the arguments
    std::string grafted;
    std::size_t ai = 0;
    for (char c : elems_[m][top]) {
      if (c == '*')
        grafted += elems_[args[ai].first][args[ai].second], ++ai;
      else
        grafted += c;
    }
    int idx = index_of_elem(total, grafted);
    if (idx < 0) throw Error("magma gamma: grafting produced unknown bracketing " + grafted);
    return idx;
  }
  std::string key = gamma_key(m, top, args);
  for (const auto& [entryKey, result] : gamma_table_)
    if (entryKey == key) {
      if (result < 0 || result >= size(total))
        throw Error("table operad: gamma entry " + key + " out of range");
      return result;
    }
  throw Error("table operad: missing gamma entry " + key);
}

// ---------------------------------------------------------------------------
// GOperad

GOperad GOperad::terminal(int trunc, int max_arity) {
  GOperad p;
  p.kind_ = "terminal";
  p.trunc_ = trunc;
  p.max_arity_ = max_arity;
  p.fibers_.assign(max_arity + 1, terminal_gset(trunc));
  return p;
}

GOperad GOperad::chaotic(SetOperad base, int trunc) {
  GOperad p;
  p.kind_ = "chaotic";
  p.trunc_ = trunc;
  p.max_arity_ = base.max_arity();
  for (int k = 0; k <= p.max_arity_; ++k) {
    std::vector<std::string> pts;
    for (int i = 0; i < base.size(k); ++i) pts.push_back(base.elem(k, i));
    p.fibers_.push_back(chaotic_gset(pts, trunc));
  }
  p.base_ = std::move(base);
  return p;
}

GOperad GOperad::discrete(SetOperad base, int trunc) {
  GOperad p;
  p.kind_ = "discrete";
  p.trunc_ = trunc;
  p.max_arity_ = base.max_arity();
  for (int k = 0; k <= p.max_arity_; ++k) {
    std::vector<std::string> pts;
    for (int i = 0; i < base.size(k); ++i) pts.push_back(base.elem(k, i));
    p.fibers_.push_back(discrete_gset(pts, trunc));
  }
  p.base_ = std::move(base);
  return p;
}

GOperad GOperad::delooped_cyclic(int r, int max_arity) {
  if (r < 1) throw Error("delooped cyclic operad: modulus must be positive");
  GOperad p;
  p.kind_ = "delooped_cyclic";
  p.trunc_ = 1;
  p.r_ = r;
  p.max_arity_ = max_arity;
  std::vector<std::vector<std::string>> cells(2);
  cells[0] = {"*"};
  for (int a = 0; a < r; ++a) cells[1].push_back(std::to_string(a));
  std::vector<std::vector<int>> src{std::vector<int>(r, 0)}, tgt{std::vector<int>(r, 0)};
  p.fibers_.assign(max_arity + 1, GlobularSet(1, cells, src, tgt));
  return p;
}

const GlobularSet& GOperad::at(int k) const {
  if (k < 0 || k > max_arity_)
    throw Error("operad: arity " + std::to_string(k) + " exceeds cap " +
                std::to_string(max_arity_));
  return fibers_[k];
}

int GOperad::unit0() const {
  if (kind_ == "terminal" || kind_ == "delooped_cyclic") return 0;
  return base_->unit();
}

int GOperad::unit_cell(int dim) const {
  if (dim < 0 || dim > trunc_) throw Error("unit_cell: dimension out of range");
  if (dim == 0) return unit0();
  if (kind_ == "chaotic") {
    int below = unit_cell(dim - 1);
    const GlobularSet& f = at(1);
    for (int x = 0; x < f.size(dim); ++x)
      if (f.src(dim, x) == below && f.tgt(dim, x) == below) return x;
    throw Error("unit_cell: missing chaotic filler");
  }
  return dim == 0 ? unit0() : (kind_ == "discrete" ? unit0() : 0);
}

int GOperad::gamma(int dim, int m, int top, const std::vector<std::pair<int, int>>& args) const {
  if (dim < 0 || dim > trunc_) throw Error("gamma: dimension out of range");
  if (static_cast<int>(args.size()) != m) throw Error("gamma: arity mismatch");
  int total = 0;
  for (auto [k, i] : args) {
    if (i < 0 || i >= at(k).size(dim)) throw Error("gamma: argument out of range");
    total += k;
  }
  if (top < 0 || top >= at(m).size(dim)) throw Error("gamma: no such top element");
  if (total > max_arity_)
    throw Error("gamma: result arity " + std::to_string(total) + " exceeds cap " +
                std::to_string(max_arity_));
  if (kind_ == "terminal") return 0;
  if (kind_ == "discrete") {
    std::vector<std::pair<int, int>> a0 = args;  // indices coincide across dimensions
    return base_->gamma(m, top, a0);
  }
  if (kind_ == "delooped_cyclic") {
    if (dim == 0) return 0;
    int s = top;
    for (auto [k, i] : args) s = (s + i) % r_;
    return s;
  }
  // chaotic: at dimension 0 compose in the base; above, the composite is the
  // unique cell over the composite of the boundaries
  if (dim == 0) return base_->gamma(m, top, args);
  std::vector<std::pair<int, int>> s_args, t_args;
  for (auto [k, i] : args) {
    s_args.emplace_back(k, at(k).src(dim, i));
    t_args.emplace_back(k, at(k).tgt(dim, i));
  }
  int s = gamma(dim - 1, m, at(m).src(dim, top), s_args);
  int t = gamma(dim - 1, m, at(m).tgt(dim, top), t_args);
  const GlobularSet& f = at(total);
  for (int x = 0; x < f.size(dim); ++x)
    if (f.src(dim, x) == s && f.tgt(dim, x) == t) return x;
  throw Error("gamma: missing chaotic filler");
}

int GOperad::videntity(int k, int obj) const {
  if (trunc_ < 1) throw Error("videntity: operad is 0-truncated");
  const GlobularSet& f = at(k);
  if (obj < 0 || obj >= f.size(0)) throw Error("videntity: no such 0-cell");
  if (kind_ == "terminal" || kind_ == "delooped_cyclic") return 0;
  if (kind_ == "discrete") return obj;
  for (int x = 0; x < f.size(1); ++x)
    if (f.src(1, x) == obj && f.tgt(1, x) == obj) return x;
  throw Error("videntity: missing chaotic filler");
}

int GOperad::vcompose(int k, int f, int g) const {
  if (trunc_ < 1) throw Error("vcompose: operad is 0-truncated");
  const GlobularSet& fib = at(k);
  if (f < 0 || f >= fib.size(1) || g < 0 || g >= fib.size(1))
    throw Error("vcompose: no such 1-cell");
  if (fib.tgt(1, f) != fib.src(1, g))
    throw Error("vcompose: cells " + fib.id(1, f) + " and " + fib.id(1, g) +
                " are not composable");
  if (kind_ == "terminal") return 0;
  if (kind_ == "discrete") return f;
  if (kind_ == "delooped_cyclic") return (f + g) % r_;
  int s = fib.src(1, f), t = fib.tgt(1, g);
  for (int x = 0; x < fib.size(1); ++x)
    if (fib.src(1, x) == s && fib.tgt(1, x) == t) return x;
  throw Error("vcompose: missing chaotic filler");
}

int GOperad::act_path(int k, const std::vector<int>& edges, int obj_if_empty) const {
  if (edges.empty()) return videntity(k, obj_if_empty);
  int acc = edges[0];
  for (std::size_t i = 1; i < edges.size(); ++i) acc = vcompose(k, acc, edges[i]);
  return acc;
}

// ---------------------------------------------------------------------------
// axiom checks

namespace {

// All tuples (k_1..k_m) with 0 <= k_i <= cap and sum <= cap.
void arity_tuples(int m, int cap, std::vector<int>& acc, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(acc.size()) == m) {
    out.push_back(acc);
    return;
  }
  int used = std::accumulate(acc.begin(), acc.end(), 0);
  for (int k = 0; k + used <= cap; ++k) {
    acc.push_back(k);
    arity_tuples(m, cap, acc, out);
    acc.pop_back();
  }
}

std::vector<std::vector<int>> arity_tuples(int m, int cap) {
  std::vector<int> acc;
  std::vector<std::vector<int>> out;
  arity_tuples(m, cap, acc, out);
  return out;
}

// Uniform generic access so one checker serves both operad flavours.
struct OperadView {
  const SetOperad* s = nullptr;
  const GOperad* g = nullptr;
  int dims() const { return g ? g->truncation() : 0; }
  int size(int k, int dim) const { return g ? g->at(k).size(dim) : s->size(k); }
  std::string name(int k, int dim, int i) const {
    return g ? g->at(k).id(dim, i) : s->elem(k, i);
  }
  int cap() const { return g ? g->max_arity() : s->max_arity(); }
  int unit(int dim) const { return g ? g->unit_cell(dim) : s->unit(); }
  int gamma(int dim, int m, int top, const std::vector<std::pair<int, int>>& args) const {
    return g ? g->gamma(dim, m, top, args) : s->gamma(m, top, args);
  }
};

Report check_axioms(const OperadView& P, int max_arity, int sample_budget, unsigned seed) {
  int cap = std::min(max_arity, P.cap());
  std::mt19937 rng(seed);

  // unit laws, exhaustive: gamma(u; x) = x and gamma(x; u..u) = x
  for (int dim = 0; dim <= P.dims(); ++dim) {
    for (int k = 0; k <= cap; ++k) {
      for (int x = 0; x < P.size(k, dim); ++x) {
        int left = P.gamma(dim, 1, P.unit(dim), {{k, x}});
        if (left != x)
          return Report::fail("unit law: gamma(u;" + P.name(k, dim, x) + ") = " +
                              P.name(k, dim, left) + " != " + P.name(k, dim, x));
        std::vector<std::pair<int, int>> units(k, {1, P.unit(dim)});
        int right = P.gamma(dim, k, x, units);
        if (right != x)
          return Report::fail("unit law: gamma(" + P.name(k, dim, x) + ";u..u) = " +
                              P.name(k, dim, right) + " != " + P.name(k, dim, x));
      }
    }
  }

  // associativity over two-level arity shapes: gamma(gamma(x;ys);zs) vs
  // gamma(x; gamma(y_i;zs_i)).  Count instances per shape; sample when the
  // total exceeds the budget.
  struct Shape {
    int m;
    std::vector<int> ks;               // middle arities
    std::vector<std::vector<int>> ls;  // leaf arities per middle slot
    long long count;
  };
  std::vector<Shape> shapes;
  long long total_count = 0;
  for (int m = 0; m <= cap; ++m) {
    for (const auto& ks : arity_tuples(m, cap)) {
      // leaf tuples per middle slot, constrained by the global cap on the sum
      std::vector<std::vector<std::vector<int>>> per_slot;
      for (int ki : ks) per_slot.push_back(arity_tuples(ki, cap));
      std::vector<std::vector<int>> chosen(m);
      std::function<void(int, int)> rec = [&](int i, int leafsum) {
        if (leafsum > cap) return;
        if (i == m) {
          Shape sh{m, ks, chosen, 0};
          for (int dim = 0; dim <= P.dims(); ++dim) {
            long long c = P.size(m, dim);
            for (int j = 0; j < m; ++j) {
              c *= P.size(ks[j], dim);
              for (int l : chosen[j]) c *= P.size(l, dim);
            }
            sh.count += c;
          }
          if (sh.count > 0) {
            shapes.push_back(sh);
            total_count += sh.count;
          }
          return;
        }
        for (const auto& ls : per_slot[i]) {
          chosen[i] = ls;
          rec(i + 1, leafsum + std::accumulate(ls.begin(), ls.end(), 0));
        }
      };
      rec(0, 0);
    }
  }
  bool exhaustive = total_count <= sample_budget;
  long long checked = 0;

  for (const auto& sh : shapes) {
    for (int dim = 0; dim <= P.dims(); ++dim) {
      // one instance = a choice of top, middles, leaves at this dimension
      std::vector<int> slot_sizes{P.size(sh.m, dim)};
      for (int j = 0; j < sh.m; ++j) {
        slot_sizes.push_back(P.size(sh.ks[j], dim));
        for (int l : sh.ls[j]) slot_sizes.push_back(P.size(l, dim));
      }
      long long inst = 1;
      for (int s : slot_sizes) inst *= s;
      if (inst == 0) continue;

      auto run_instance = [&](const std::vector<int>& pick) -> Report {
        std::size_t at = 0;
        int top = pick[at++];
        std::vector<std::pair<int, int>> mids;
        std::vector<std::vector<std::pair<int, int>>> leaves(sh.m);
        for (int j = 0; j < sh.m; ++j) {
          mids.emplace_back(sh.ks[j], pick[at++]);
          for (int l : sh.ls[j]) leaves[j].emplace_back(l, pick[at++]);
        }
        int inner_first = P.gamma(dim, sh.m, top, mids);
        std::vector<std::pair<int, int>> flat;
        for (auto& v : leaves) flat.insert(flat.end(), v.begin(), v.end());
        int mid_total = 0;
        for (auto [k, i] : mids) mid_total += k;
        int lhs = P.gamma(dim, mid_total, inner_first, flat);
        std::vector<std::pair<int, int>> composed;
        for (int j = 0; j < sh.m; ++j) {
          int lt = 0;
          for (auto [k, i] : leaves[j]) lt += k;
          composed.emplace_back(lt, P.gamma(dim, sh.ks[j], mids[j].second, leaves[j]));
        }
        int rhs = P.gamma(dim, sh.m, top, composed);
        if (lhs != rhs)
          return Report::fail("associativity: top " + P.name(sh.m, dim, top) + " gives " +
                              std::to_string(lhs) + " vs " + std::to_string(rhs) +
                              " at dimension " + std::to_string(dim));
        return Report::pass();
      };

      if (exhaustive) {
        std::vector<int> pick(slot_sizes.size(), 0);
        while (true) {
          Report rep = run_instance(pick);
          if (!rep.ok) return rep;
          ++checked;
          std::size_t i = 0;
          for (; i < pick.size(); ++i) {
            if (++pick[i] < slot_sizes[i]) break;
            pick[i] = 0;
          }
          if (i == pick.size()) break;
        }
      } else {
        long long quota = std::max<long long>(1, sample_budget / std::max<std::size_t>(
                                                                     1, shapes.size()));
        for (long long q = 0; q < quota; ++q) {
          std::vector<int> pick;
          for (int s : slot_sizes)
            pick.push_back(std::uniform_int_distribution<int>(0, s - 1)(rng));
          Report rep = run_instance(pick);
          if (!rep.ok) return rep;
          ++checked;
        }
      }
    }
  }

  // globular operads: gamma must commute with src and tgt
  if (P.g) {
    const GOperad& G = *P.g;
    std::mt19937 rng2(seed + 1);
    int probes = 0;
    for (int dim = 1; dim <= G.truncation(); ++dim) {
      for (int m = 0; m <= cap && probes < 500; ++m) {
        for (const auto& ks : arity_tuples(m, cap)) {
          long long inst = G.at(m).size(dim);
          for (int k : ks) inst *= G.at(k).size(dim);
          if (inst == 0) continue;
          for (int rep = 0; rep < 3; ++rep, ++probes) {
            int top = std::uniform_int_distribution<int>(0, G.at(m).size(dim) - 1)(rng2);
            std::vector<std::pair<int, int>> args, s_args, t_args;
            for (int k : ks) {
              int i = std::uniform_int_distribution<int>(0, G.at(k).size(dim) - 1)(rng2);
              args.emplace_back(k, i);
              s_args.emplace_back(k, G.at(k).src(dim, i));
              t_args.emplace_back(k, G.at(k).tgt(dim, i));
            }
            int total = std::accumulate(ks.begin(), ks.end(), 0);
            int comp = G.gamma(dim, m, top, args);
            if (G.at(total).src(dim, comp) !=
                    G.gamma(dim - 1, m, G.at(m).src(dim, top), s_args) ||
                G.at(total).tgt(dim, comp) !=
                    G.gamma(dim - 1, m, G.at(m).tgt(dim, top), t_args))
              return Report::fail("gamma does not commute with boundaries at dimension " +
                                  std::to_string(dim));
          }
        }
      }
    }
  }

  return Report{true, (exhaustive ? "exhaustive, " : "sampled, ") + std::to_string(checked) +
                          " associativity instances"};
}

}  // namespace

Report check_operad_axioms(const SetOperad& P, int max_arity, int sample_budget, unsigned seed) {
  OperadView v;
  v.s = &P;
  return check_axioms(v, max_arity, sample_budget, seed);
}

Report check_operad_axioms(const GOperad& P, int max_arity, int sample_budget, unsigned seed) {
  OperadView v;
  v.g = &P;
  return check_axioms(v, max_arity, sample_budget, seed);
}

Report operad_contractible(const GOperad& P, int max_arity) {
  int cap = std::min(max_arity, P.max_arity());
  for (int k = 0; k <= cap; ++k) {
    Report r = gset_contractible(P.at(k));
    if (!r.ok) return Report::fail("P(" + std::to_string(k) + "): " + r.witness);
  }
  return Report{true, "contractible up to arity " + std::to_string(cap)};
}

bool operad_is_contractible(const GOperad& P, int max_arity) {
  return operad_contractible(P, max_arity).ok;
}

// ---------------------------------------------------------------------------
// JSON specs

SetOperad set_operad_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) throw Error("operad spec: expected {\"kind\":...}");
  std::string kind = j.at("kind").get<std::string>();
  int cap = j.value("max_arity", 6);
  if (cap < 1) throw Error("operad spec: max_arity must be positive");
  if (kind == "terminal") return SetOperad::terminal(cap);
  if (kind == "cyclic") return SetOperad::cyclic(j.at("r").get<int>(), cap);
  if (kind == "magma") return SetOperad::magma(cap);
  if (kind == "table") {
    const auto& data = j.at("data");
    auto elems = data.at("elems").get<std::vector<std::vector<std::string>>>();
    if (elems.size() < 2) throw Error("table operad: need elements up to arity 1");
    std::string unit_id = data.at("unit").get<std::string>();
    int unit = -1;
    for (std::size_t i = 0; i < elems[1].size(); ++i)
      if (elems[1][i] == unit_id) unit = static_cast<int>(i);
    if (unit < 0) throw Error("table operad: unknown unit " + unit_id);
    std::vector<std::pair<std::string, int>> table;
    SetOperad probe = SetOperad::table(static_cast<int>(elems.size()) - 1, elems, unit, {});
    for (const auto& entry : data.at("gamma")) {
      int m = static_cast<int>(entry.at("args").size());
      int top = probe.index_of_elem(m, entry.at("top").get<std::string>());
      if (top < 0) throw Error("table operad: unknown top in gamma entry");
      std::vector<std::pair<int, int>> args;
      int total = 0;
      for (const auto& a : entry.at("args")) {
        int k = a.at(0).get<int>();
        int idx = probe.index_of_elem(k, a.at(1).get<std::string>());
        if (idx < 0) throw Error("table operad: unknown argument in gamma entry");
        args.emplace_back(k, idx);
        total += k;
      }
      int res = probe.index_of_elem(total, entry.at("result").get<std::string>());
      if (res < 0) throw Error("table operad: unknown result in gamma entry");
      table.emplace_back(SetOperad::gamma_key(m, top, args), res);
    }
    return SetOperad::table(static_cast<int>(elems.size()) - 1, elems, unit, std::move(table));
  }
  throw Error("operad spec: unknown kind " + kind);
}

GOperad goperad_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) throw Error("operad spec: expected {\"kind\":...}");
  std::string kind = j.at("kind").get<std::string>();
  int trunc = j.value("n", 0);
  int cap = j.value("max_arity", 6);
  if (kind == "terminal") return GOperad::terminal(trunc, cap);
  if (kind == "delooped_cyclic") return GOperad::delooped_cyclic(j.at("r").get<int>(), cap);
  if (kind == "chaotic" || kind == "discrete") {
    nlohmann::json base = j.at("base");
    if (!base.contains("max_arity")) base["max_arity"] = cap;
    SetOperad b = set_operad_from_json(base);
    return kind == "chaotic" ? GOperad::chaotic(std::move(b), trunc)
                             : GOperad::discrete(std::move(b), trunc);
  }
  // a bare Set-operad spec is its 0-truncated discrete incarnation
  if (kind == "cyclic" || kind == "magma" || kind == "table")
    return GOperad::discrete(set_operad_from_json(j), trunc);
  throw Error("operad spec: unknown kind " + kind);
}

OperadSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("P"))
    throw Error("series spec: expected {\"n\":..., \"P\":[...]}");
  OperadSeries s;
  s.n = j.at("n").get<int>();
  if (s.n < 1) throw Error("series spec: n must be at least 1");
  const auto& arr = j.at("P");
  if (static_cast<int>(arr.size()) != s.n)
    throw Error("series spec: expected " + std::to_string(s.n) + " operads");
  for (int i = 0; i < s.n; ++i) {
    nlohmann::json pj = arr.at(i);
    pj["n"] = i;  // truncation of P_i is forced by its position
    s.P.push_back(goperad_from_json(pj));
    if (i == 0 && s.P[0].kind() != "terminal")
      throw Error("series spec: P_0 must be the terminal operad");
  }
  return s;
}

}  // namespace gwop
