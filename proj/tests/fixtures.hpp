#pragma once

// shared constructions used by the unit tests and the acceptance suite:
// small enriched categories with known composition rules, operad series,
// and a few globular sets to apply monads to

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gwop/enrich.hpp"
#include "gwop/globop.hpp"

namespace fixtures {

inline gwop::VGraph loop_graph(gwop::GlobularSet hom) {
  gwop::VGraph A;
  A.objects = {"x"};
  A.hom = {{std::move(hom)}};
  return A;
}

// objects a, b, c with terminal homs a -> b -> c, all else empty
inline gwop::VGraph chain_graph(int trunc) {
  gwop::VGraph A;
  A.objects = {"a", "b", "c"};
  A.hom.assign(3, std::vector<gwop::GlobularSet>(3, gwop::empty_gset(trunc)));
  A.hom[0][1] = gwop::terminal_gset(trunc);
  A.hom[1][2] = gwop::terminal_gset(trunc);
  return A;
}

using CompRule = std::function<int(int dim, int k, const std::vector<int>& objs, int p,
                                   const std::vector<int>& args)>;

// fills every composition table (args in path order) from a pointwise rule
inline gwop::VPCategory build_category(gwop::VGraph graph, gwop::GOperad P, int max_k,
                                       const CompRule& rule) {
  gwop::VPCategory A;
  A.graph = std::move(graph);
  A.P = std::move(P);
  A.max_k = max_k;
  int n = A.graph.truncation(), nobj = static_cast<int>(A.graph.objects.size());
  for (int k = 0; k <= max_k; ++k) {
    std::vector<int> objs(k + 1, 0);
    std::function<void(int)> strings = [&](int pos) {
      if (pos == k + 1) {
        auto& tables = A.comp[gwop::VPCategory::comp_key(k, objs)];
        tables.resize(n + 1);
        for (int d = 0; d <= n; ++d) tables[d].assign(A.table_size(d, k, objs), -1);
        for (int d = 0; d <= n; ++d) {
          std::vector<int> args(k, 0);
          for (int p = 0; p < A.P.at(k).size(d); ++p) {
            std::function<void(int)> walk = [&](int j) {
              if (j == k) {
                A.set_entry(d, k, objs, p, args, rule(d, k, objs, p, args));
                return;
              }
              for (int c = 0; c < A.graph.hom[objs[j]][objs[j + 1]].size(d); ++c) {
                args[j] = c;
                walk(j + 1);
              }
            };
            walk(0);
          }
        }
        return;
      }
      for (int o = 0; o < nobj; ++o) {
        objs[pos] = o;
        strings(pos + 1);
      }
    };
    strings(0);
  }
  return A;
}

// the cyclic group Z_r as a one-object algebra: composition adds labels
inline gwop::VPCategory zr_category(int r, int max_k) {
  std::vector<std::string> pts;
  for (int i = 0; i < r; ++i) pts.push_back(std::to_string(i));
  return build_category(
      loop_graph(gwop::discrete_gset(pts, 0)),
      gwop::GOperad::discrete(gwop::SetOperad::cyclic(r), 0), max_k,
      [r](int, int, const std::vector<int>&, int p, const std::vector<int>& args) {
        int sum = p;
        for (int a : args) sum += a;
        return sum % r;
      });
}

// one object, hom the chaotic set on {0,1}, composition XOR on points and
// the induced map on the unique connecting 1-cells
inline gwop::VPCategory xor_category() {
  gwop::GlobularSet hom = gwop::chaotic_gset({"0", "1"}, 1);
  CompRule rule = [hom](int dim, int k, const std::vector<int>&, int,
                        const std::vector<int>& args) {
    if (dim == 0) {
      int x = 0;
      for (int a : args) x ^= a;
      return x;
    }
    int s = 0, t = 0;
    for (int a : args) {
      s ^= hom.src(1, a);
      t ^= hom.tgt(1, a);
    }
    (void)k;
    return 2 * s + t;  // chaotic 1-cells are ordered (src, tgt) pairs
  };
  return build_category(loop_graph(hom), gwop::GOperad::terminal(1), 2, rule);
}

// two objects with terminal homs except hom(b,a) empty; all composites land
// in terminal homs
inline gwop::VPCategory two_object_chain_category() {
  gwop::VGraph A;
  A.objects = {"a", "b"};
  A.hom.assign(2, std::vector<gwop::GlobularSet>(2, gwop::terminal_gset(1)));
  A.hom[1][0] = gwop::empty_gset(1);
  return build_category(std::move(A), gwop::GOperad::terminal(1), 2,
                        [](int, int, const std::vector<int>&, int, const std::vector<int>&) {
                          return 0;
                        });
}

inline gwop::OperadSeries terminal_series(int n, int max_arity = 6) {
  gwop::OperadSeries S;
  S.n = n;
  for (int i = 0; i < std::max(n, 1); ++i)
    S.P.push_back(gwop::GOperad::terminal(i, max_arity));
  return S;
}

inline gwop::OperadSeries cyclic_series(int n, int r, bool chaotic) {
  gwop::OperadSeries S;
  S.n = n;
  S.P.push_back(gwop::GOperad::terminal(0));
  for (int i = 1; i < n; ++i)
    S.P.push_back(chaotic ? gwop::GOperad::chaotic(gwop::SetOperad::cyclic(r), i)
                          : gwop::GOperad::discrete(gwop::SetOperad::cyclic(r), i));
  return S;
}

inline gwop::OperadSeries chaotic_cy2_series(int n) { return cyclic_series(n, 2, true); }

inline gwop::OperadSeries one_kind_series(int n, const std::string& kind) {
  gwop::OperadSeries S;
  S.n = n;
  S.P.push_back(gwop::GOperad::terminal(0));
  for (int i = 1; i < n; ++i) {
    if (kind == "chaotic_magma")
      S.P.push_back(gwop::GOperad::chaotic(gwop::SetOperad::magma(6), i));
    if (kind == "discrete_magma")
      S.P.push_back(gwop::GOperad::discrete(gwop::SetOperad::magma(6), i));
    if (kind == "discrete_cyclic")
      S.P.push_back(gwop::GOperad::discrete(gwop::SetOperad::cyclic(2), i));
    if (kind == "delooped") S.P.push_back(gwop::GOperad::delooped_cyclic(2));
  }
  return S;
}

inline gwop::GlobularSet arrow_gset() {
  return gwop::GlobularSet(2, {{"x", "y"}, {"u"}, {}}, {{0}, {}}, {{1}, {}});
}

inline gwop::GlobularSet loop_gset() {
  return gwop::GlobularSet(1, {{"x"}, {"u"}}, {{0}}, {{0}});
}

// x -> y by parallel u, v with one 2-cell u => v
inline gwop::GlobularSet twocell_gset() {
  return gwop::GlobularSet(2, {{"x", "y"}, {"u", "v"}, {"a"}}, {{0, 0}, {0}}, {{1, 1}, {1}});
}

}  // namespace fixtures
