#include "gwop/enrich.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <nlohmann/json.hpp>

namespace gwop {

// ---------------------------------------------------------------------------
// VGraph

int VGraph::truncation() const {
  if (objects.empty()) return 0;
  return hom.at(0).at(0).truncation();
}

void VGraph::validate() const {
  if (hom.size() != objects.size()) throw Error("vgraph: hom table must be square over objects");
  {
    std::vector<std::string> sorted = objects;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error("vgraph: duplicate object name");
  }
  int n = -1;
  for (const auto& row : hom) {
    if (row.size() != objects.size()) throw Error("vgraph: hom table must be square over objects");
    for (const auto& h : row) {
      if (n < 0) n = h.truncation();
      if (h.truncation() != n) throw Error("vgraph: homs must share one truncation");
    }
  }
}

VGraph terminal_vgraph(int trunc) {
  VGraph A;
  A.objects = {"*"};
  A.hom = {{terminal_gset(trunc)}};
  return A;
}

nlohmann::json vgraph_to_json(const VGraph& A) {
  nlohmann::json hom = nlohmann::json::array();
  for (const auto& row : A.hom) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& h : row) r.push_back(gset_to_json(h));
    hom.push_back(std::move(r));
  }
  return nlohmann::json{{"objects", A.objects}, {"hom", std::move(hom)}};
}

VGraph vgraph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("objects") || !j.contains("hom"))
    throw Error("vgraph json: expected {\"objects\":..., \"hom\":...}");
  VGraph A;
  A.objects = j.at("objects").get<std::vector<std::string>>();
  for (const auto& row : j.at("hom")) {
    std::vector<GlobularSet> r;
    for (const auto& h : row) r.push_back(gset_from_json(h));
    A.hom.push_back(std::move(r));
  }
  A.validate();
  return A;
}

// ---------------------------------------------------------------------------
// free V-category

namespace {

// all object strings a = o_0, ..., o_k = b; positions 1..k-1 range over all
// objects, the endpoints are fixed
std::vector<std::vector<int>> object_strings(int nobj, int a, int b, int k) {
  std::vector<std::vector<int>> out;
  if (k == 0) {
    if (a == b) out.push_back({a});
    return out;
  }
  std::vector<int> acc{a};
  std::function<void(int)> rec = [&](int pos) {
    if (pos == k) {
      acc.push_back(b);
      out.push_back(acc);
      acc.pop_back();
      return;
    }
    for (int o = 0; o < nobj; ++o) {
      acc.push_back(o);
      rec(pos + 1);
      acc.pop_back();
    }
  };
  rec(1);
  return out;
}

std::string join_ints(const std::vector<int>& v, const std::vector<std::string>& names,
                      const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += names[v[i]];
  }
  return out;
}

std::string path_id(const VGraph& A, int d, int k, const std::vector<int>& objs,
                    const std::vector<int>& cells) {
  std::string id = std::to_string(k) + "|" + join_ints(objs, A.objects, ">") + "|";
  for (int j = 0; j < k; ++j) {
    if (j) id += ";";
    id += A.hom[objs[j]][objs[j + 1]].id(d, cells[j]);
  }
  return id;
}

std::string vp_id(const VGraph& A, const GOperad& P, int d, int k, const std::vector<int>& objs,
                  int p, const std::vector<int>& cells) {
  std::string id =
      std::to_string(k) + "|" + join_ints(objs, A.objects, ">") + "|" + P.at(k).id(d, p) + "|";
  for (int j = 0; j < k; ++j) {
    if (j) id += ";";
    id += A.hom[objs[j]][objs[j + 1]].id(d, cells[j]);
  }
  return id;
}

// iterate over all component tuples for a fixed string at a fixed dimension
void component_tuples(const VGraph& A, int d, const std::vector<int>& objs,
                      const std::function<void(const std::vector<int>&)>& emit) {
  int k = static_cast<int>(objs.size()) - 1;
  std::vector<int> comp(k, 0);
  std::function<void(int)> rec = [&](int j) {
    if (j == k) {
      emit(comp);
      return;
    }
    int sz = A.hom[objs[j]][objs[j + 1]].size(d);
    for (int c = 0; c < sz; ++c) {
      comp[j] = c;
      rec(j + 1);
    }
  };
  rec(0);
}

}  // namespace

FcResult fc_v(const VGraph& A, int max_len) {
  A.validate();
  int n = A.truncation();
  int nobj = static_cast<int>(A.objects.size());
  FcResult R;
  R.graph.objects = A.objects;
  R.graph.hom.resize(nobj);
  R.decode.assign(nobj, std::vector<std::vector<std::vector<PathCell>>>(nobj));
  for (int i = 0; i < nobj; ++i) {
    for (int j = 0; j < nobj; ++j) {
      std::vector<std::vector<std::string>> cells(n + 1);
      std::vector<std::vector<int>> src(n), tgt(n);
      std::vector<std::vector<PathCell>> dec(n + 1);
      std::vector<std::map<std::string, int>> index(n + 1);
      for (int d = 0; d <= n; ++d) {
        for (int k = 0; k <= max_len; ++k) {
          for (const auto& objs : object_strings(nobj, i, j, k)) {
            component_tuples(A, d, objs, [&](const std::vector<int>& comp) {
              std::string id = path_id(A, d, k, objs, comp);
              int idx = static_cast<int>(cells[d].size());
              cells[d].push_back(id);
              index[d][id] = idx;
              dec[d].push_back(PathCell{k, objs, comp});
              if (d >= 1) {
                std::vector<int> sc(k), tc(k);
                for (int q = 0; q < k; ++q) {
                  const GlobularSet& h = A.hom[objs[q]][objs[q + 1]];
                  sc[q] = h.src(d, comp[q]);
                  tc[q] = h.tgt(d, comp[q]);
                }
                src[d - 1].push_back(index[d - 1].at(path_id(A, d - 1, k, objs, sc)));
                tgt[d - 1].push_back(index[d - 1].at(path_id(A, d - 1, k, objs, tc)));
              }
            });
          }
        }
      }
      R.graph.hom[i].emplace_back(n, std::move(cells), std::move(src), std::move(tgt));
      R.decode[i][j] = std::move(dec);
    }
  }
  return R;
}

// ---------------------------------------------------------------------------
// suspension

SigmaCollection suspend_operad(const GOperad& P, int max_k) {
  if (max_k > P.max_arity()) throw Error("suspend: max_k exceeds the operad's arity cap");
  int n = P.truncation();
  std::vector<std::vector<std::string>> cells(n + 1);
  std::vector<std::vector<int>> src(n), tgt(n);
  std::vector<std::vector<std::pair<int, int>>> dec(n + 1);
  // start[k][d]: first index of the P(k) block at dimension d
  std::vector<std::vector<int>> start(max_k + 1, std::vector<int>(n + 1, 0));
  for (int k = 0; k <= max_k; ++k) {
    for (int d = 0; d <= n; ++d) {
      start[k][d] = static_cast<int>(cells[d].size());
      const GlobularSet& f = P.at(k);
      for (int c = 0; c < f.size(d); ++c) {
        cells[d].push_back(std::to_string(k) + ":" + f.id(d, c));
        dec[d].emplace_back(k, c);
        if (d >= 1) {
          src[d - 1].push_back(start[k][d - 1] + f.src(d, c));
          tgt[d - 1].push_back(start[k][d - 1] + f.tgt(d, c));
        }
      }
    }
  }
  auto hom = std::make_shared<const GlobularSet>(n, cells, src, tgt);
  FcResult one = fc_v(terminal_vgraph(n), max_k);
  auto D = std::make_shared<const GlobularSet>(one.graph.hom[0][0]);
  std::vector<std::vector<int>> deg(n + 1);
  for (int d = 0; d <= n; ++d)
    for (const auto& [k, c] : dec[d]) deg[d].push_back(k);  // length-k cell sits at index k
  SigmaCollection out{*hom, *D, make_gmorphism(hom, D, std::move(deg)), std::move(dec)};
  return out;
}

// ---------------------------------------------------------------------------
// free (V,P)-category

FcVpResult fc_vp(const VGraph& A, const GOperad& P, int max_len) {
  A.validate();
  if (P.truncation() != A.truncation())
    throw Error("fc_vp: operad truncation does not match the graph");
  int n = A.truncation();
  int nobj = static_cast<int>(A.objects.size());
  FcVpResult R;

  // (i) direct formula
  R.direct.objects = A.objects;
  R.direct.hom.resize(nobj);
  R.decode.assign(nobj, std::vector<std::vector<std::vector<VpCell>>>(nobj));
  for (int i = 0; i < nobj; ++i) {
    for (int j = 0; j < nobj; ++j) {
      std::vector<std::vector<std::string>> cells(n + 1);
      std::vector<std::vector<int>> src(n), tgt(n);
      std::vector<std::vector<VpCell>> dec(n + 1);
      std::vector<std::map<std::string, int>> index(n + 1);
      for (int d = 0; d <= n; ++d) {
        for (int k = 0; k <= max_len; ++k) {
          for (const auto& objs : object_strings(nobj, i, j, k)) {
            for (int p = 0; p < P.at(k).size(d); ++p) {
              component_tuples(A, d, objs, [&](const std::vector<int>& comp) {
                std::string id = vp_id(A, P, d, k, objs, p, comp);
                int idx = static_cast<int>(cells[d].size());
                cells[d].push_back(id);
                index[d][id] = idx;
                dec[d].push_back(VpCell{k, objs, p, comp});
                if (d >= 1) {
                  std::vector<int> sc(k), tc(k);
                  for (int q = 0; q < k; ++q) {
                    const GlobularSet& h = A.hom[objs[q]][objs[q + 1]];
                    sc[q] = h.src(d, comp[q]);
                    tc[q] = h.tgt(d, comp[q]);
                  }
                  src[d - 1].push_back(
                      index[d - 1].at(vp_id(A, P, d - 1, k, objs, P.at(k).src(d, p), sc)));
                  tgt[d - 1].push_back(
                      index[d - 1].at(vp_id(A, P, d - 1, k, objs, P.at(k).tgt(d, p), tc)));
                }
              });
            }
          }
        }
      }
      R.direct.hom[i].emplace_back(n, std::move(cells), std::move(src), std::move(tgt));
      R.decode[i][j] = std::move(dec);
    }
  }

  // (ii) pullback of Sigma P and fc_v(A) over fc_v(1)
  SigmaCollection sigma = suspend_operad(P, max_len);
  FcResult fc = fc_v(A, max_len);
  auto D = std::make_shared<const GlobularSet>(sigma.degree_cod);
  auto sig_hom = std::make_shared<const GlobularSet>(sigma.hom);
  GMorphism degree = make_gmorphism(sig_hom, D, sigma.degree.map);
  R.via_pullback.objects = A.objects;
  R.via_pullback.hom.resize(nobj);
  R.bijection.assign(nobj, std::vector<std::vector<std::vector<int>>>(nobj));
  for (int i = 0; i < nobj; ++i) {
    for (int j = 0; j < nobj; ++j) {
      auto fch = std::make_shared<const GlobularSet>(fc.graph.hom[i][j]);
      std::vector<std::vector<int>> lenmap(n + 1);
      for (int d = 0; d <= n; ++d)
        for (const auto& pc : fc.decode[i][j][d]) lenmap[d].push_back(pc.k);
      GMorphism len = make_gmorphism(fch, D, std::move(lenmap));
      PullbackResult pb = gset_pullback(degree, len);
      const GlobularSet& apex = *pb.apex;

      // witness bijection from the direct formula onto the apex
      std::vector<std::vector<int>> bij(n + 1);
      for (int d = 0; d <= n; ++d) {
        if (R.direct.hom[i][j].size(d) != apex.size(d))
          throw Error("fc_vp: direct and pullback cell counts differ at dimension " +
                      std::to_string(d));
        std::vector<bool> hit(apex.size(d), false);
        for (int c = 0; c < R.direct.hom[i][j].size(d); ++c) {
          const VpCell& vc = R.decode[i][j][d][c];
          std::string sid = std::to_string(vc.k) + ":" + P.at(vc.k).id(d, vc.p);
          std::string pid = path_id(A, d, vc.k, vc.objs, vc.cells);
          int t = apex.index_of(d, "(" + sid + "|" + pid + ")");
          if (t < 0) throw Error("fc_vp: direct cell missing from the pullback apex");
          if (hit[t]) throw Error("fc_vp: witness map is not injective");
          hit[t] = true;
          bij[d].push_back(t);
        }
      }
      // boundary compatibility of the witness
      auto dhom = std::make_shared<const GlobularSet>(R.direct.hom[i][j]);
      make_gmorphism(dhom, pb.apex, bij);
      R.via_pullback.hom[i].push_back(apex);
      R.bijection[i][j] = std::move(bij);
    }
  }
  return R;
}

// ---------------------------------------------------------------------------
// (V,P)-categories

std::string VPCategory::comp_key(int k, const std::vector<int>& objs) {
  std::string key = std::to_string(k) + "|";
  for (std::size_t i = 0; i < objs.size(); ++i) {
    if (i) key += ",";
    key += std::to_string(objs[i]);
  }
  return key;
}

int VPCategory::table_size(int dim, int k, const std::vector<int>& objs) const {
  int sz = P.at(k).size(dim);
  for (int j = 0; j < k; ++j) sz *= graph.hom[objs[j]][objs[j + 1]].size(dim);
  return sz;
}

namespace {

int flat_index(const VPCategory& A, int dim, int k, const std::vector<int>& objs, int p,
               const std::vector<int>& args) {
  int idx = p;
  for (int j = 0; j < k; ++j) idx = idx * A.graph.hom[objs[j]][objs[j + 1]].size(dim) + args[j];
  return idx;
}

}  // namespace

int VPCategory::lookup(int dim, int k, const std::vector<int>& objs, int p,
                       const std::vector<int>& args) const {
  auto it = comp.find(comp_key(k, objs));
  if (it == comp.end())
    throw Error("vp category: missing composition table " + comp_key(k, objs));
  const auto& table = it->second.at(dim);
  int idx = flat_index(*this, dim, k, objs, p, args);
  if (idx < 0 || idx >= static_cast<int>(table.size()) || table[idx] < 0)
    throw Error("vp category: missing composition entry in table " + comp_key(k, objs));
  return table[idx];
}

void VPCategory::set_entry(int dim, int k, const std::vector<int>& objs, int p,
                           const std::vector<int>& args, int result) {
  auto& tables = comp[comp_key(k, objs)];
  if (tables.empty()) {
    tables.resize(graph.truncation() + 1);
    for (int d = 0; d <= graph.truncation(); ++d)
      tables[d].assign(table_size(d, k, objs), -1);
  }
  tables[dim][flat_index(*this, dim, k, objs, p, args)] = result;
}

namespace {

struct CheckFail {
  std::string msg;
};

// all (p, args) picks of one composition table at one dimension
std::vector<std::pair<int, std::vector<int>>> table_picks(const VPCategory& A, int dim, int k,
                                                          const std::vector<int>& objs) {
  std::vector<std::pair<int, std::vector<int>>> out;
  std::vector<int> args(k, 0);
  for (int p = 0; p < A.P.at(k).size(dim); ++p) {
    std::function<void(int)> walk = [&](int j) {
      if (j == k) {
        out.emplace_back(p, args);
        return;
      }
      int sz = A.graph.hom[objs[j]][objs[j + 1]].size(dim);
      for (int c = 0; c < sz; ++c) {
        args[j] = c;
        walk(j + 1);
      }
    };
    walk(0);
  }
  return out;
}

void validate_vp_impl(const VPCategory& A) {
  A.graph.validate();
  if (A.P.truncation() != A.graph.truncation())
    throw CheckFail{"operad truncation does not match the graph"};
  if (A.max_k > A.P.max_arity()) throw CheckFail{"max_k exceeds the operad's arity cap"};
  int n = A.graph.truncation();
  int nobj = static_cast<int>(A.graph.objects.size());

  // structure: every table present, filled, in range, compatible with src/tgt
  for (int k = 0; k <= A.max_k; ++k) {
    for (int a = 0; a < nobj; ++a) {
      for (int b = 0; b < nobj; ++b) {
        for (const auto& objs : object_strings(nobj, a, b, k)) {
          std::string key = VPCategory::comp_key(k, objs);
          auto it = A.comp.find(key);
          if (it == A.comp.end()) throw CheckFail{"missing composition table " + key};
          if (static_cast<int>(it->second.size()) != n + 1)
            throw CheckFail{"table " + key + " must have one layer per dimension"};
          const GlobularSet& H = A.graph.hom[a][b];
          for (int d = 0; d <= n; ++d) {
            if (static_cast<int>(it->second[d].size()) != A.table_size(d, k, objs))
              throw CheckFail{"table " + key + " has the wrong size at dimension " +
                              std::to_string(d)};
            for (int v : it->second[d])
              if (v < 0 || v >= H.size(d))
                throw CheckFail{"table " + key + " has an entry out of range at dimension " +
                                std::to_string(d)};
          }
          for (int d = 1; d <= n; ++d) {
            for (const auto& [p, args] : table_picks(A, d, k, objs)) {
              int res = A.lookup(d, k, objs, p, args);
              std::vector<int> sa(k), ta(k);
              for (int j = 0; j < k; ++j) {
                const GlobularSet& hj = A.graph.hom[objs[j]][objs[j + 1]];
                sa[j] = hj.src(d, args[j]);
                ta[j] = hj.tgt(d, args[j]);
              }
              if (H.src(d, res) != A.lookup(d - 1, k, objs, A.P.at(k).src(d, p), sa))
                throw CheckFail{"src of a composite disagrees in table " + key +
                                " at dimension " + std::to_string(d)};
              if (H.tgt(d, res) != A.lookup(d - 1, k, objs, A.P.at(k).tgt(d, p), ta))
                throw CheckFail{"tgt of a composite disagrees in table " + key +
                                " at dimension " + std::to_string(d)};
            }
          }
        }
      }
    }
  }

  // unit law: the unit of P acts as the identity on every cell
  for (int a = 0; a < nobj; ++a) {
    for (int b = 0; b < nobj; ++b) {
      std::vector<int> objs{a, b};
      for (int d = 0; d <= n; ++d) {
        for (int x = 0; x < A.graph.hom[a][b].size(d); ++x) {
          if (A.lookup(d, 1, objs, A.P.unit_cell(d), {x}) != x)
            throw CheckFail{"unit law fails on cell " + A.graph.hom[a][b].id(d, x) + " of hom(" +
                            A.graph.objects[a] + "," + A.graph.objects[b] + ")"};
        }
      }
    }
  }

  // compatibility square: acting by gamma(p; q_1..q_m) equals acting by p on
  // the actions of the q_j
  for (int m = 0; m <= A.max_k; ++m) {
    for (int a = 0; a < nobj; ++a) {
      for (int b = 0; b < nobj; ++b) {
        for (const auto& outer : object_strings(nobj, a, b, m)) {
          // arity tuples with total within the cap
          std::vector<std::vector<int>> tuples;
          std::vector<int> ks(m, 0);
          std::function<void(int, int)> pick = [&](int j, int left) {
            if (j == m) {
              tuples.push_back(ks);
              return;
            }
            for (int k = 0; k <= left; ++k) {
              ks[j] = k;
              pick(j + 1, left - k);
            }
          };
          pick(0, A.max_k);
          for (const auto& kt : tuples) {
            // middle object strings, one per slot
            std::vector<std::vector<std::vector<int>>> slot_strings(m);
            bool possible = true;
            for (int j = 0; j < m; ++j) {
              slot_strings[j] = object_strings(nobj, outer[j], outer[j + 1], kt[j]);
              if (slot_strings[j].empty()) possible = false;
            }
            if (!possible) continue;
            std::vector<int> choice(m, 0);
            std::function<void(int)> over_strings = [&](int j) {
              if (j < m) {
                for (std::size_t s = 0; s < slot_strings[j].size(); ++s) {
                  choice[j] = static_cast<int>(s);
                  over_strings(j + 1);
                }
                return;
              }
              std::vector<int> flat{outer.empty() ? a : outer[0]};
              for (int q = 0; q < m; ++q) {
                const auto& sq = slot_strings[q][choice[q]];
                flat.insert(flat.end(), sq.begin() + 1, sq.end());
              }
              int total = static_cast<int>(flat.size()) - 1;
              for (int d = 0; d <= n; ++d) {
                // per-slot picks of (q_j, args_j)
                std::vector<std::vector<std::pair<int, std::vector<int>>>> picks(m);
                for (int q = 0; q < m; ++q)
                  picks[q] = table_picks(A, d, kt[q], slot_strings[q][choice[q]]);
                for (int p = 0; p < A.P.at(m).size(d); ++p) {
                  std::vector<int> sel(m, 0);
                  std::function<void(int)> over_picks = [&](int q) {
                    if (q < m) {
                      for (std::size_t z = 0; z < picks[q].size(); ++z) {
                        sel[q] = static_cast<int>(z);
                        over_picks(q + 1);
                      }
                      return;
                    }
                    std::vector<int> inners(m);
                    std::vector<std::pair<int, int>> gargs(m);
                    std::vector<int> flat_args;
                    for (int z = 0; z < m; ++z) {
                      const auto& [qq, gg] = picks[z][sel[z]];
                      inners[z] = A.lookup(d, kt[z], slot_strings[z][choice[z]], qq, gg);
                      gargs[z] = {kt[z], qq};
                      flat_args.insert(flat_args.end(), gg.begin(), gg.end());
                    }
                    int lhs = A.lookup(d, m, outer, p, inners);
                    int glabel = A.P.gamma(d, m, p, gargs);
                    int rhs = A.lookup(d, total, flat, glabel, flat_args);
                    if (lhs != rhs)
                      throw CheckFail{"compatibility square fails over table " +
                                      VPCategory::comp_key(m, outer) + " at dimension " +
                                      std::to_string(d)};
                  };
                  over_picks(0);
                }
              }
            };
            over_strings(0);
          }
        }
      }
    }
  }
}

}  // namespace

Report validate_vpcategory(const VPCategory& A) {
  try {
    validate_vp_impl(A);
  } catch (const CheckFail& f) {
    return Report::fail(f.msg);
  } catch (const Error& e) {
    return Report::fail(e.what());
  }
  return Report::pass();
}

Report vp_roundtrip(const VPCategory& A) {
  Report v = validate_vpcategory(A);
  if (!v.ok) return v;
  try {
    int n = A.graph.truncation();
    int nobj = static_cast<int>(A.graph.objects.size());
    FcVpResult F = fc_vp(A.graph, A.P, A.max_k);

    // forward: the action on the pullback apex induced by the tables
    std::vector<std::vector<std::vector<std::vector<int>>>> alpha(
        nobj, std::vector<std::vector<std::vector<int>>>(nobj));
    for (int i = 0; i < nobj; ++i) {
      for (int j = 0; j < nobj; ++j) {
        alpha[i][j].resize(n + 1);
        for (int d = 0; d <= n; ++d) {
          alpha[i][j][d].assign(F.via_pullback.hom[i][j].size(d), -1);
          for (int c = 0; c < F.direct.hom[i][j].size(d); ++c) {
            const VpCell& vc = F.decode[i][j][d][c];
            alpha[i][j][d][F.bijection[i][j][d][c]] =
                A.lookup(d, vc.k, vc.objs, vc.p, vc.cells);
          }
        }
      }
    }

    // back: rebuild every table entry from the apex action and compare
    VPCategory B{A.graph, A.P, A.max_k, {}};
    for (int k = 0; k <= A.max_k; ++k) {
      for (int a = 0; a < nobj; ++a) {
        for (int b = 0; b < nobj; ++b) {
          for (const auto& objs : object_strings(nobj, a, b, k)) {
            for (int d = 0; d <= n; ++d) {
              for (const auto& [p, args] : table_picks(A, d, k, objs)) {
                std::string id = vp_id(A.graph, A.P, d, k, objs, p, args);
                int di = F.direct.hom[a][b].index_of(d, id);
                if (di < 0) return Report::fail("free cell not found: " + id);
                B.set_entry(d, k, objs, p, args,
                            alpha[a][b][d][F.bijection[a][b][d][di]]);
              }
            }
          }
        }
      }
    }
    for (int k = 0; k <= A.max_k; ++k) {
      for (int a = 0; a < nobj; ++a) {
        for (int b = 0; b < nobj; ++b) {
          for (const auto& objs : object_strings(nobj, a, b, k)) {
            for (int d = 0; d <= n; ++d) {
              for (const auto& [p, args] : table_picks(A, d, k, objs)) {
                if (B.lookup(d, k, objs, p, args) != A.lookup(d, k, objs, p, args))
                  return Report::fail("composite changed after the roundtrip in table " +
                                      VPCategory::comp_key(k, objs) + " at dimension " +
                                      std::to_string(d));
              }
            }
          }
        }
      }
    }
  } catch (const Error& e) {
    return Report::fail(e.what());
  }
  return Report::pass();
}

// ---------------------------------------------------------------------------
// pullbacks of V-graphs

void validate_vgraph_morphism(const VGraph& dom, const VGraph& cod, const VGraphMorphism& f) {
  dom.validate();
  cod.validate();
  if (dom.truncation() != cod.truncation()) throw Error("vgraph morphism: truncation mismatch");
  int n = dom.truncation();
  if (f.obj_map.size() != dom.objects.size())
    throw Error("vgraph morphism: object map has the wrong size");
  for (int o : f.obj_map)
    if (o < 0 || o >= static_cast<int>(cod.objects.size()))
      throw Error("vgraph morphism: object image out of range");
  if (f.hom_map.size() != dom.objects.size())
    throw Error("vgraph morphism: hom map must cover every object pair");
  for (std::size_t i = 0; i < dom.objects.size(); ++i) {
    if (f.hom_map[i].size() != dom.objects.size())
      throw Error("vgraph morphism: hom map must cover every object pair");
    for (std::size_t j = 0; j < dom.objects.size(); ++j) {
      const GlobularSet& H = dom.hom[i][j];
      const GlobularSet& K = cod.hom[f.obj_map[i]][f.obj_map[j]];
      const auto& m = f.hom_map[i][j];
      if (static_cast<int>(m.size()) != n + 1)
        throw Error("vgraph morphism: hom map at (" + dom.objects[i] + "," + dom.objects[j] +
                    ") must cover every dimension");
      for (int d = 0; d <= n; ++d) {
        if (static_cast<int>(m[d].size()) != H.size(d))
          throw Error("vgraph morphism: hom map at (" + dom.objects[i] + "," + dom.objects[j] +
                      ") has the wrong size at dimension " + std::to_string(d));
        for (int c : m[d])
          if (c < 0 || c >= K.size(d))
            throw Error("vgraph morphism: hom image out of range at dimension " +
                        std::to_string(d));
      }
      for (int d = 1; d <= n; ++d) {
        for (int c = 0; c < H.size(d); ++c) {
          if (K.src(d, m[d][c]) != m[d - 1][H.src(d, c)] ||
              K.tgt(d, m[d][c]) != m[d - 1][H.tgt(d, c)])
            throw Error("vgraph morphism: does not commute with src/tgt on cell " + H.id(d, c));
        }
      }
    }
  }
}

VGraphPullback vgraph_pullback(const VGraph& A, const VGraph& B, const VGraph& C,
                               const VGraphMorphism& f, const VGraphMorphism& g) {
  validate_vgraph_morphism(A, C, f);
  validate_vgraph_morphism(B, C, g);
  VGraphPullback R;
  for (std::size_t i = 0; i < A.objects.size(); ++i)
    for (std::size_t j = 0; j < B.objects.size(); ++j)
      if (f.obj_map[i] == g.obj_map[j]) {
        R.obj_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        R.apex.objects.push_back("(" + A.objects[i] + "|" + B.objects[j] + ")");
      }
  std::size_t N = R.obj_pairs.size();
  R.apex.hom.resize(N);
  R.to_a.obj_map.resize(N);
  R.to_b.obj_map.resize(N);
  R.to_a.hom_map.assign(N, std::vector<std::vector<std::vector<int>>>(N));
  R.to_b.hom_map.assign(N, std::vector<std::vector<std::vector<int>>>(N));
  for (std::size_t u = 0; u < N; ++u) {
    R.to_a.obj_map[u] = R.obj_pairs[u].first;
    R.to_b.obj_map[u] = R.obj_pairs[u].second;
  }
  for (std::size_t u = 0; u < N; ++u) {
    auto [i, j] = R.obj_pairs[u];
    for (std::size_t v = 0; v < N; ++v) {
      auto [i2, j2] = R.obj_pairs[v];
      auto ha = std::make_shared<const GlobularSet>(A.hom[i][i2]);
      auto hb = std::make_shared<const GlobularSet>(B.hom[j][j2]);
      auto hc = std::make_shared<const GlobularSet>(C.hom[f.obj_map[i]][f.obj_map[i2]]);
      PullbackResult pb = gset_pullback(make_gmorphism(ha, hc, f.hom_map[i][i2]),
                                        make_gmorphism(hb, hc, g.hom_map[j][j2]));
      R.apex.hom[u].push_back(*pb.apex);
      R.to_a.hom_map[u][v] = pb.to_a.map;
      R.to_b.hom_map[u][v] = pb.to_b.map;
    }
  }
  validate_vgraph_morphism(R.apex, A, R.to_a);
  validate_vgraph_morphism(R.apex, B, R.to_b);
  return R;
}

Report fc_preserves_pullback(const VGraph& A, const VGraph& B, const VGraph& C,
                             const VGraphMorphism& f, const VGraphMorphism& g, int max_len) {
  VGraphPullback PB = vgraph_pullback(A, B, C, f, g);
  FcResult FP = fc_v(PB.apex, max_len);
  FcResult FA = fc_v(A, max_len);
  FcResult FB = fc_v(B, max_len);
  FcResult FC = fc_v(C, max_len);
  int n = A.truncation();

  // fc_v applied to a morphism: a path maps to the path of image cells
  auto induced = [&](const VGraph& cod, const FcResult& FDom, const FcResult& FCod,
                     const VGraphMorphism& h, int i, int i2) {
    const GlobularSet& D = FDom.graph.hom[i][i2];
    const GlobularSet& K = FCod.graph.hom[h.obj_map[i]][h.obj_map[i2]];
    std::vector<std::vector<int>> map(n + 1);
    for (int d = 0; d <= n; ++d) {
      for (int c = 0; c < D.size(d); ++c) {
        const PathCell& pc = FDom.decode[i][i2][d][c];
        std::vector<int> io(pc.k + 1), ic(pc.k);
        for (int q = 0; q <= pc.k; ++q) io[q] = h.obj_map[pc.objs[q]];
        for (int q = 0; q < pc.k; ++q)
          ic[q] = h.hom_map[pc.objs[q]][pc.objs[q + 1]][d][pc.cells[q]];
        int idx = K.index_of(d, path_id(cod, d, pc.k, io, ic));
        if (idx < 0) throw Error("fc pullback: image of a path is missing from the codomain");
        map[d].push_back(idx);
      }
    }
    return map;
  };

  for (std::size_t u = 0; u < PB.obj_pairs.size(); ++u) {
    auto [i, j] = PB.obj_pairs[u];
    for (std::size_t v = 0; v < PB.obj_pairs.size(); ++v) {
      auto [i2, j2] = PB.obj_pairs[v];
      auto ha = std::make_shared<const GlobularSet>(FA.graph.hom[i][i2]);
      auto hb = std::make_shared<const GlobularSet>(FB.graph.hom[j][j2]);
      auto hc = std::make_shared<const GlobularSet>(FC.graph.hom[f.obj_map[i]][f.obj_map[i2]]);
      PullbackResult pb = gset_pullback(make_gmorphism(ha, hc, induced(C, FA, FC, f, i, i2)),
                                        make_gmorphism(hb, hc, induced(C, FB, FC, g, j, j2)));
      const GlobularSet& apex = *pb.apex;
      const GlobularSet& FPh = FP.graph.hom[u][v];
      for (int d = 0; d <= n; ++d) {
        if (FPh.size(d) != apex.size(d))
          return Report::fail("cell counts differ over (" + PB.apex.objects[u] + "," +
                              PB.apex.objects[v] + ") at dimension " + std::to_string(d) + ": " +
                              std::to_string(FPh.size(d)) + " vs " +
                              std::to_string(apex.size(d)));
        std::vector<bool> hit(apex.size(d), false);
        for (int c = 0; c < FPh.size(d); ++c) {
          const PathCell& pc = FP.decode[u][v][d][c];
          std::vector<int> ao(pc.k + 1), bo(pc.k + 1), ac(pc.k), bc(pc.k);
          for (int q = 0; q <= pc.k; ++q) {
            ao[q] = PB.to_a.obj_map[pc.objs[q]];
            bo[q] = PB.to_b.obj_map[pc.objs[q]];
          }
          for (int q = 0; q < pc.k; ++q) {
            ac[q] = PB.to_a.hom_map[pc.objs[q]][pc.objs[q + 1]][d][pc.cells[q]];
            bc[q] = PB.to_b.hom_map[pc.objs[q]][pc.objs[q + 1]][d][pc.cells[q]];
          }
          int t = apex.index_of(d, "(" + path_id(A, d, pc.k, ao, ac) + "|" +
                                        path_id(B, d, pc.k, bo, bc) + ")");
          if (t < 0)
            return Report::fail("the path of pairs " + FPh.id(d, c) +
                                " has no matching pair of paths");
          if (hit[t])
            return Report::fail("canonical comparison map is not injective at dimension " +
                                std::to_string(d));
          hit[t] = true;
        }
      }
    }
  }
  return Report::pass();
}

// ---------------------------------------------------------------------------
// the distributive law

FTerm FTerm::base(int dim, int a, int b, int cell) {
  FTerm t;
  t.kind = Kind::Base;
  t.dim = dim;
  t.a = a;
  t.b = b;
  t.cell = cell;
  return t;
}

FTerm FTerm::snode(int dim, int k, std::vector<int> objs, int plabel, std::vector<FTerm> args) {
  FTerm t;
  t.kind = Kind::SNode;
  t.dim = dim;
  t.k = k;
  t.objs = std::move(objs);
  t.plabel = plabel;
  t.args = std::move(args);
  t.a = t.objs.front();
  t.b = t.objs.back();
  return t;
}

FTerm FTerm::tpath(std::vector<FTerm> edges) {
  if (edges.empty()) throw Error("tpath: an empty path needs a basepoint; use tempty");
  FTerm t;
  t.kind = Kind::TPath;
  t.dim = 1;
  t.a = edges.front().a;
  t.b = edges.front().b;
  t.args = std::move(edges);
  return t;
}

FTerm FTerm::tempty(FTerm at) {
  FTerm t;
  t.kind = Kind::TPath;
  t.dim = 1;
  t.a = at.a;
  t.b = at.b;
  t.args.push_back(std::move(at));
  return t;
}

namespace {

// an empty path stores its dim-0 basepoint; edges always have dim >= 1
bool tpath_empty(const FTerm& t) { return t.args.empty() || t.args[0].dim == 0; }

}  // namespace

std::string fterm_encode(const FTerm& t) {
  switch (t.kind) {
    case FTerm::Kind::Base:
      return "c" + std::to_string(t.dim) + ":" + std::to_string(t.a) + "," +
             std::to_string(t.b) + ":" + std::to_string(t.cell);
    case FTerm::Kind::SNode: {
      std::string s = "S" + std::to_string(t.k) + "d" + std::to_string(t.dim) + "[";
      for (std::size_t i = 0; i < t.objs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t.objs[i]);
      }
      s += "](" + std::to_string(t.plabel);
      for (const FTerm& c : t.args) s += ";" + fterm_encode(c);
      return s + ")";
    }
    case FTerm::Kind::TPath: {
      if (tpath_empty(t)) return "T0(" + fterm_encode(t.args[0]) + ")";
      std::string s = "T[";
      for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) s += ";";
        s += fterm_encode(t.args[i]);
      }
      return s + "]";
    }
  }
  throw Error("fterm: unknown kind");
}

namespace {

// number of Base edges inside the term: the path-length grading
int term_weight(const FTerm& t) {
  if (t.kind == FTerm::Kind::Base) return t.dim == 1 ? 1 : 0;
  int w = 0;
  for (const FTerm& c : t.args) w += term_weight(c);
  return w;
}

// eta of the free-category monad (or of the identity monad)
FTerm eta_t(const FTerm& x, bool tid) {
  if (tid || x.dim == 0) return x;
  return FTerm::tpath({x});
}

// mu of the free-category monad: path-of-paths concatenation
FTerm mu_t(const FTerm& x, bool tid) {
  if (tid || x.dim == 0) return x;
  if (tpath_empty(x)) return x;
  std::vector<FTerm> edges;
  for (const FTerm& e : x.args)
    if (!tpath_empty(e)) edges.insert(edges.end(), e.args.begin(), e.args.end());
  if (edges.empty()) return x.args.front();
  return FTerm::tpath(std::move(edges));
}

// T applied to a morphism: act on the edges (or the basepoint)
template <typename F>
FTerm tmap(const FTerm& x, bool tid, F&& fn) {
  if (tid || x.dim == 0) return fn(x);
  if (tpath_empty(x)) return FTerm::tempty(fn(x.args[0]));
  std::vector<FTerm> edges;
  edges.reserve(x.args.size());
  for (const FTerm& e : x.args) edges.push_back(fn(e));
  return FTerm::tpath(std::move(edges));
}

// S applied to a morphism: act on the components
template <typename F>
FTerm smap(const FTerm& x, F&& fn) {
  FTerm y = x;
  for (FTerm& c : y.args) c = fn(c);
  return y;
}

// eta of the free-(V,P) monad: the unary composite with the unit label
FTerm eta_s(const FTerm& x, const GOperad& P) {
  return FTerm::snode(x.dim, 1, {x.a, x.b}, P.unit_cell(x.dim), {x});
}

// mu of the free-(V,P) monad: flatten one S layer through gamma
FTerm mu_s(const FTerm& x, const GOperad& P) {
  std::vector<std::pair<int, int>> gargs;
  std::vector<FTerm> comps;
  std::vector<int> objs{x.objs.front()};
  int total = 0;
  for (const FTerm& q : x.args) {
    gargs.emplace_back(q.k, q.plabel);
    total += q.k;
    objs.insert(objs.end(), q.objs.begin() + 1, q.objs.end());
    comps.insert(comps.end(), q.args.begin(), q.args.end());
  }
  int label = P.gamma(x.dim, x.k, x.plabel, gargs);
  return FTerm::snode(x.dim, total, std::move(objs), label, std::move(comps));
}

}  // namespace

FTerm lambda_apply(const FTerm& x, const GOperad& P, bool t_identity) {
  if (t_identity || x.dim == 0) return x;
  if (tpath_empty(x)) {
    // the empty path at one composite: the identity label over the
    // componentwise empty paths
    const FTerm& v = x.args[0];
    std::vector<FTerm> comps;
    comps.reserve(v.args.size());
    for (const FTerm& c : v.args) comps.push_back(FTerm::tempty(c));
    return FTerm::snode(1, v.k, v.objs, P.videntity(v.k, v.plabel), std::move(comps));
  }
  // composability forces one (k, objs) across the path
  const FTerm& e0 = x.args.front();
  std::vector<int> labels;
  labels.reserve(x.args.size());
  for (const FTerm& e : x.args) labels.push_back(e.plabel);
  int label = P.act_path(e0.k, labels, -1);
  std::vector<FTerm> comps;
  comps.reserve(e0.k);
  for (int c = 0; c < e0.k; ++c) {
    std::vector<FTerm> col;
    col.reserve(x.args.size());
    for (const FTerm& e : x.args) col.push_back(e.args[c]);
    comps.push_back(FTerm::tpath(std::move(col)));
  }
  return FTerm::snode(1, e0.k, e0.objs, label, std::move(comps));
}

namespace {

// One functor tower (A, SA, TA, TSA, ...): enumerates its formal cells per
// hom pair within a weight budget and computes boundaries.
struct Level {
  virtual ~Level() = default;
  virtual std::vector<FTerm> enumerate(int a, int b, int dim, int budget) const = 0;
  virtual FTerm src(const FTerm& t) const = 0;
  virtual FTerm tgt(const FTerm& t) const = 0;

  const std::vector<FTerm>& cells(int a, int b, int dim, int budget) const {
    std::array<int, 4> key{a, b, dim, budget};
    auto it = memo_.find(key);
    if (it == memo_.end()) it = memo_.emplace(key, enumerate(a, b, dim, budget)).first;
    return it->second;
  }

 private:
  mutable std::map<std::array<int, 4>, std::vector<FTerm>> memo_;
};

struct BaseLevel : Level {
  const VGraph* A;
  explicit BaseLevel(const VGraph* g) : A(g) {}

  std::vector<FTerm> enumerate(int a, int b, int dim, int budget) const override {
    std::vector<FTerm> out;
    if (dim == 1 && budget < 1) return out;
    const GlobularSet& H = A->hom[a][b];
    for (int c = 0; c < H.size(dim); ++c) out.push_back(FTerm::base(dim, a, b, c));
    return out;
  }
  FTerm src(const FTerm& t) const override {
    return FTerm::base(0, t.a, t.b, A->hom[t.a][t.b].src(1, t.cell));
  }
  FTerm tgt(const FTerm& t) const override {
    return FTerm::base(0, t.a, t.b, A->hom[t.a][t.b].tgt(1, t.cell));
  }
};

struct SLevel : Level {
  const Level* inner;
  const GOperad* P;
  int max_k;
  int nobj;
  SLevel(const Level* in, const GOperad* p, int mk, int no)
      : inner(in), P(p), max_k(mk), nobj(no) {}

  std::vector<FTerm> enumerate(int a, int b, int dim, int budget) const override {
    std::vector<FTerm> out;
    for (int k = 0; k <= max_k; ++k) {
      for (const auto& objs : object_strings(nobj, a, b, k)) {
        for (int p = 0; p < P->at(k).size(dim); ++p) {
          std::vector<FTerm> acc;
          std::function<void(int, int)> rec = [&](int j, int left) {
            if (j == k) {
              out.push_back(FTerm::snode(dim, k, objs, p, acc));
              return;
            }
            for (const FTerm& c : inner->cells(objs[j], objs[j + 1], dim, left)) {
              acc.push_back(c);
              rec(j + 1, left - term_weight(c));
              acc.pop_back();
            }
          };
          rec(0, budget);
        }
      }
    }
    return out;
  }
  FTerm src(const FTerm& t) const override {
    std::vector<FTerm> sargs;
    sargs.reserve(t.args.size());
    for (const FTerm& c : t.args) sargs.push_back(inner->src(c));
    return FTerm::snode(0, t.k, t.objs, P->at(t.k).src(1, t.plabel), std::move(sargs));
  }
  FTerm tgt(const FTerm& t) const override {
    std::vector<FTerm> targs;
    targs.reserve(t.args.size());
    for (const FTerm& c : t.args) targs.push_back(inner->tgt(c));
    return FTerm::snode(0, t.k, t.objs, P->at(t.k).tgt(1, t.plabel), std::move(targs));
  }
};

struct TLevel : Level {
  const Level* inner;
  int max_len;
  TLevel(const Level* in, int ml) : inner(in), max_len(ml) {}

  std::vector<FTerm> enumerate(int a, int b, int dim, int budget) const override {
    if (dim == 0) return inner->cells(a, b, 0, budget);
    std::vector<FTerm> out;
    for (const FTerm& v : inner->cells(a, b, 0, budget)) out.push_back(FTerm::tempty(v));
    std::vector<FTerm> path;
    std::function<void(const std::string&, int)> extend = [&](const std::string& at, int left) {
      if (static_cast<int>(path.size()) == max_len) return;
      for (const FTerm& e : inner->cells(a, b, 1, left)) {
        if (!path.empty() && fterm_encode(inner->src(e)) != at) continue;
        path.push_back(e);
        out.push_back(FTerm::tpath(path));
        extend(fterm_encode(inner->tgt(e)), left - term_weight(e));
        path.pop_back();
      }
    };
    extend("", budget);
    return out;
  }
  FTerm src(const FTerm& t) const override {
    if (tpath_empty(t)) return t.args[0];
    return inner->src(t.args.front());
  }
  FTerm tgt(const FTerm& t) const override {
    if (tpath_empty(t)) return t.args[0];
    return inner->tgt(t.args.back());
  }
};

}  // namespace

Report check_distributive_law(const VGraph& A, const GOperad& P, bool t_identity,
                              const DistLawBounds& bounds) {
  A.validate();
  if (A.truncation() != 1) throw Error("distributive law: graph homs must have truncation 1");
  if (P.truncation() != 1) throw Error("distributive law: operad must have truncation 1");
  if (bounds.max_k > P.max_arity())
    throw Error("distributive law: max_k exceeds the operad's arity cap");
  int nobj = static_cast<int>(A.objects.size());
  const bool tid = t_identity;

  BaseLevel base(&A);
  SLevel sa(&base, &P, bounds.max_k, nobj);
  SLevel ssa(&sa, &P, bounds.max_k, nobj);
  TLevel ta(&base, bounds.max_len);
  TLevel tsa(&sa, bounds.max_len);
  TLevel ttsa(&tsa, bounds.max_len);
  TLevel tssa(&ssa, bounds.max_len);
  const Level* dom1 = tid ? static_cast<const Level*>(&base) : &ta;
  const Level* dom3 = tid ? static_cast<const Level*>(&sa) : &ttsa;
  const Level* dom4 = tid ? static_cast<const Level*>(&ssa) : &tssa;

  long long checked = 0;
  auto mismatch = [](int axiom, const FTerm& x, const FTerm& l, const FTerm& r) {
    return Report::fail("axiom " + std::to_string(axiom) + " fails on " + fterm_encode(x) +
                        ": " + fterm_encode(l) + " != " + fterm_encode(r));
  };

  for (int dim = 0; dim <= 1; ++dim) {
    for (int a = 0; a < nobj; ++a) {
      for (int b = 0; b < nobj; ++b) {
        // lambda . T(eta_S) = eta_S T
        for (const FTerm& x : dom1->cells(a, b, dim, bounds.max_weight)) {
          FTerm lhs = lambda_apply(
              tmap(x, tid, [&](const FTerm& e) { return eta_s(e, P); }), P, tid);
          FTerm rhs = eta_s(x, P);
          ++checked;
          if (fterm_encode(lhs) != fterm_encode(rhs)) return mismatch(1, x, lhs, rhs);
        }
        // lambda . eta_T S = S(eta_T)
        for (const FTerm& x : sa.cells(a, b, dim, bounds.max_weight)) {
          FTerm lhs = lambda_apply(eta_t(x, tid), P, tid);
          FTerm rhs = smap(x, [&](const FTerm& c) { return eta_t(c, tid); });
          ++checked;
          if (fterm_encode(lhs) != fterm_encode(rhs)) return mismatch(2, x, lhs, rhs);
        }
        // lambda . mu_T S = S(mu_T) . lambda T . T(lambda)
        for (const FTerm& x : dom3->cells(a, b, dim, bounds.max_weight)) {
          FTerm lhs = lambda_apply(mu_t(x, tid), P, tid);
          FTerm y = lambda_apply(
              tmap(x, tid, [&](const FTerm& e) { return lambda_apply(e, P, tid); }), P, tid);
          FTerm rhs = smap(y, [&](const FTerm& c) { return mu_t(c, tid); });
          ++checked;
          if (fterm_encode(lhs) != fterm_encode(rhs)) return mismatch(3, x, lhs, rhs);
        }
        // lambda . T(mu_S) = mu_S T . S(lambda) . lambda S
        for (const FTerm& x : dom4->cells(a, b, dim, bounds.max_weight)) {
          FTerm lhs = lambda_apply(
              tmap(x, tid, [&](const FTerm& e) { return mu_s(e, P); }), P, tid);
          FTerm y = smap(lambda_apply(x, P, tid),
                         [&](const FTerm& c) { return lambda_apply(c, P, tid); });
          FTerm rhs = mu_s(y, P);
          ++checked;
          if (fterm_encode(lhs) != fterm_encode(rhs)) return mismatch(4, x, lhs, rhs);
        }
      }
    }
  }
  return Report{true, std::to_string(checked) + " instances checked"};
}

}  // namespace gwop
