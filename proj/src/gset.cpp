#include "gwop/gset.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>

namespace gwop {

GlobularSet::GlobularSet(int n, std::vector<std::vector<std::string>> cells,
                         std::vector<std::vector<int>> src, std::vector<std::vector<int>> tgt)
    : n_(n), cells_(std::move(cells)), src_(std::move(src)), tgt_(std::move(tgt)) {
  if (n_ < 0) throw Error("globular set: negative truncation");
  if (static_cast<int>(cells_.size()) != n_ + 1)
    throw Error("globular set: expected " + std::to_string(n_ + 1) + " cell levels");
  if (static_cast<int>(src_.size()) != n_ || static_cast<int>(tgt_.size()) != n_)
    throw Error("globular set: src/tgt must cover dimensions 1.." + std::to_string(n_));
  for (int m = 0; m <= n_; ++m) {
    std::vector<std::string> sorted = cells_[m];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error("globular set: duplicate id at dimension " + std::to_string(m));
  }
  for (int m = 1; m <= n_; ++m) {
    if (src_[m - 1].size() != cells_[m].size() || tgt_[m - 1].size() != cells_[m].size())
      throw Error("globular set: boundary arrays mismatch at dimension " + std::to_string(m));
    for (std::size_t i = 0; i < cells_[m].size(); ++i) {
      int s = src_[m - 1][i], t = tgt_[m - 1][i];
      if (s < 0 || s >= static_cast<int>(cells_[m - 1].size()) || t < 0 ||
          t >= static_cast<int>(cells_[m - 1].size()))
        throw Error("globular set: boundary out of range for cell " + cells_[m][i]);
      if (m >= 2) {
        // globularity: ss = st and ts = tt
        if (src_[m - 2][s] != src_[m - 2][t] || tgt_[m - 2][s] != tgt_[m - 2][t])
          throw Error("globular set: globularity fails at cell " + cells_[m][i]);
      }
    }
  }
}

int GlobularSet::size(int m) const {
  if (m < 0 || m > n_) return 0;
  return static_cast<int>(cells_[m].size());
}

const std::vector<std::string>& GlobularSet::ids(int m) const {
  if (m < 0 || m > n_) throw Error("globular set: dimension out of range");
  return cells_[m];
}

const std::string& GlobularSet::id(int m, int i) const {
  if (m < 0 || m > n_ || i < 0 || i >= size(m)) throw Error("globular set: no such cell");
  return cells_[m][i];
}

int GlobularSet::index_of(int m, const std::string& id) const {
  if (m < 0 || m > n_) return -1;
  for (std::size_t i = 0; i < cells_[m].size(); ++i)
    if (cells_[m][i] == id) return static_cast<int>(i);
  return -1;
}

int GlobularSet::src(int m, int i) const {
  if (m < 1 || m > n_ || i < 0 || i >= size(m)) throw Error("globular set: no such cell");
  return src_[m - 1][i];
}

int GlobularSet::tgt(int m, int i) const {
  if (m < 1 || m > n_ || i < 0 || i >= size(m)) throw Error("globular set: no such cell");
  return tgt_[m - 1][i];
}

GlobularSet terminal_gset(int n) {
  std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>{"*"});
  std::vector<std::vector<int>> src(n, std::vector<int>{0}), tgt(n, std::vector<int>{0});
  return GlobularSet(n, std::move(cells), std::move(src), std::move(tgt));
}

GlobularSet empty_gset(int n) {
  return GlobularSet(n, std::vector<std::vector<std::string>>(n + 1),
                     std::vector<std::vector<int>>(n), std::vector<std::vector<int>>(n));
}

GlobularSet sphere(int m) {
  std::vector<std::vector<std::string>> cells(m + 1, std::vector<std::string>{"0", "1"});
  std::vector<std::vector<int>> src(m, std::vector<int>{0, 0}), tgt(m, std::vector<int>{1, 1});
  return GlobularSet(m, std::move(cells), std::move(src), std::move(tgt));
}

GlobularSet ball(int m) {
  std::vector<std::vector<std::string>> cells(m + 1, std::vector<std::string>{"0", "1"});
  cells[m] = {"0"};
  std::vector<std::vector<int>> src(m, std::vector<int>{0, 0}), tgt(m, std::vector<int>{1, 1});
  if (m >= 1) {
    src[m - 1] = {0};
    tgt[m - 1] = {1};
  }
  return GlobularSet(m, std::move(cells), std::move(src), std::move(tgt));
}

GlobularSet chaotic_gset(const std::vector<std::string>& points, int n) {
  std::vector<std::vector<std::string>> cells(n + 1);
  std::vector<std::vector<int>> src(n), tgt(n);
  cells[0] = points;
  for (int m = 1; m <= n; ++m) {
    GlobularSet below(m - 1, {cells.begin(), cells.begin() + m},
                      {src.begin(), src.begin() + m - 1}, {tgt.begin(), tgt.begin() + m - 1});
    for (auto [a, b] : parallel_pairs(below, m - 1)) {
      cells[m].push_back("(" + cells[m - 1][a] + ">" + cells[m - 1][b] + ")");
      src[m - 1].push_back(a);
      tgt[m - 1].push_back(b);
    }
  }
  return GlobularSet(n, std::move(cells), std::move(src), std::move(tgt));
}

GlobularSet discrete_gset(const std::vector<std::string>& points, int n) {
  std::vector<std::vector<std::string>> cells(n + 1, points);
  std::vector<int> idmap(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) idmap[i] = static_cast<int>(i);
  std::vector<std::vector<int>> src(n, idmap), tgt(n, idmap);
  return GlobularSet(n, std::move(cells), std::move(src), std::move(tgt));
}

nlohmann::json gset_to_json(const GlobularSet& A) {
  nlohmann::json j;
  j["n"] = A.truncation();
  nlohmann::json cells = nlohmann::json::array(), src = nlohmann::json::array(),
                 tgt = nlohmann::json::array();
  for (int m = 0; m <= A.truncation(); ++m) {
    cells.push_back(A.ids(m));
    if (m >= 1) {
      nlohmann::json s = nlohmann::json::array(), t = nlohmann::json::array();
      for (int i = 0; i < A.size(m); ++i) {
        s.push_back(A.id(m - 1, A.src(m, i)));
        t.push_back(A.id(m - 1, A.tgt(m, i)));
      }
      src.push_back(std::move(s));
      tgt.push_back(std::move(t));
    }
  }
  j["cells"] = std::move(cells);
  j["src"] = std::move(src);
  j["tgt"] = std::move(tgt);
  return j;
}

GlobularSet gset_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("cells"))
    throw Error("gset json: expected an object with 'n' and 'cells'");
  int n = j.at("n").get<int>();
  std::vector<std::vector<std::string>> cells =
      j.at("cells").get<std::vector<std::vector<std::string>>>();
  if (static_cast<int>(cells.size()) != n + 1) throw Error("gset json: wrong number of levels");
  std::vector<std::vector<int>> src(n), tgt(n);
  auto resolve = [&](const nlohmann::json& arr, int m, std::vector<int>& out) {
    if (static_cast<int>(arr.size()) != static_cast<int>(cells[m].size()))
      throw Error("gset json: boundary array size mismatch at dimension " + std::to_string(m));
    for (const auto& idj : arr) {
      std::string id = idj.get<std::string>();
      auto it = std::find(cells[m - 1].begin(), cells[m - 1].end(), id);
      if (it == cells[m - 1].end()) throw Error("gset json: unknown boundary id " + id);
      out.push_back(static_cast<int>(it - cells[m - 1].begin()));
    }
  };
  for (int m = 1; m <= n; ++m) {
    resolve(j.at("src").at(m - 1), m, src[m - 1]);
    resolve(j.at("tgt").at(m - 1), m, tgt[m - 1]);
  }
  return GlobularSet(n, std::move(cells), std::move(src), std::move(tgt));
}

GMorphism make_gmorphism(std::shared_ptr<const GlobularSet> dom,
                         std::shared_ptr<const GlobularSet> cod,
                         std::vector<std::vector<int>> map) {
  if (!dom || !cod) throw Error("gmorphism: null endpoint");
  if (dom->truncation() > cod->truncation()) throw Error("gmorphism: codomain truncation too low");
  if (static_cast<int>(map.size()) != dom->truncation() + 1)
    throw Error("gmorphism: expected one level per dimension");
  for (int m = 0; m <= dom->truncation(); ++m) {
    if (static_cast<int>(map[m].size()) != dom->size(m))
      throw Error("gmorphism: level size mismatch at dimension " + std::to_string(m));
    for (int i = 0; i < dom->size(m); ++i) {
      int im = map[m][i];
      if (im < 0 || im >= cod->size(m))
        throw Error("gmorphism: image out of range for " + dom->id(m, i));
      if (m >= 1) {
        if (cod->src(m, im) != map[m - 1][dom->src(m, i)] ||
            cod->tgt(m, im) != map[m - 1][dom->tgt(m, i)])
          throw Error("gmorphism: does not commute with boundaries at " + dom->id(m, i));
      }
    }
  }
  return GMorphism{std::move(dom), std::move(cod), std::move(map)};
}

GMorphism sphere_to_ball(int m) {
  auto s = std::make_shared<GlobularSet>(sphere(m));
  auto b = std::make_shared<GlobularSet>(ball(m + 1));
  std::vector<std::vector<int>> map(m + 1, std::vector<int>{0, 1});
  return make_gmorphism(s, b, std::move(map));
}

std::vector<std::pair<int, int>> parallel_pairs(const GlobularSet& A, int m) {
  if (m < 0 || m > A.truncation()) throw Error("parallel_pairs: dimension out of range");
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < A.size(m); ++a)
    for (int b = 0; b < A.size(m); ++b) {
      if (m >= 1 && (A.src(m, a) != A.src(m, b) || A.tgt(m, a) != A.tgt(m, b))) continue;
      out.emplace_back(a, b);
    }
  return out;
}

Report gset_contractible(const GlobularSet& A) {
  int n = A.truncation();
  if (A.size(0) == 0) return Report::fail("no 0-cells");
  for (int m = 0; m < n; ++m) {
    for (auto [a, b] : parallel_pairs(A, m)) {
      bool filled = false;
      for (int x = 0; x < A.size(m + 1) && !filled; ++x)
        if (A.src(m + 1, x) == a && A.tgt(m + 1, x) == b) filled = true;
      if (!filled)
        return Report::fail("no " + std::to_string(m + 1) + "-cell from " + A.id(m, a) + " to " +
                            A.id(m, b));
    }
  }
  for (auto [a, b] : parallel_pairs(A, n)) {
    if (a != b)
      return Report::fail("parallel " + std::to_string(n) + "-cells " + A.id(n, a) + " and " +
                          A.id(n, b) + " are distinct");
  }
  return Report::pass();
}

bool is_contractible(const GlobularSet& A) { return gset_contractible(A).ok; }

AssociatedGset associated_gset(const PastingDiagram& pd) {
  int m = pd.dim;
  std::vector<std::vector<std::string>> cells(m + 1);
  std::vector<std::vector<int>> src(m), tgt(m);
  std::vector<std::vector<std::vector<int>>> column_cell;
  if (m == 0) {
    cells[0] = {"v0"};
    auto gs = std::make_shared<const GlobularSet>(0, std::move(cells), std::move(src),
                                                  std::move(tgt));
    return AssociatedGset{gs, std::nullopt, std::nullopt, {}};
  }
  int k = static_cast<int>(pd.children.size());
  for (int i = 0; i <= k; ++i) cells[0].push_back("v" + std::to_string(i));
  std::vector<AssociatedGset> kids;
  kids.reserve(k);
  for (const auto& c : pd.children) kids.push_back(associated_gset(c));
  column_cell.resize(k);
  for (int i = 0; i < k; ++i) {
    const GlobularSet& K = *kids[i].gset;
    column_cell[i].resize(m);
    for (int d = 0; d <= m - 1; ++d) {
      for (int j = 0; j < K.size(d); ++j) {
        int idx = static_cast<int>(cells[d + 1].size());
        cells[d + 1].push_back(std::to_string(i) + ":" + K.id(d, j));
        column_cell[i][d].push_back(idx);
        if (d == 0) {
          src[0].push_back(i);
          tgt[0].push_back(i + 1);
        } else {
          src[d].push_back(column_cell[i][d - 1][K.src(d, j)]);
          tgt[d].push_back(column_cell[i][d - 1][K.tgt(d, j)]);
        }
      }
    }
  }
  auto gs =
      std::make_shared<const GlobularSet>(m, std::move(cells), std::move(src), std::move(tgt));

  // boundary inclusions
  AssociatedGset out{gs, std::nullopt, std::nullopt, std::move(column_cell)};
  PastingDiagram bd = pd_boundary(pd);
  AssociatedGset B = associated_gset(bd);
  std::vector<std::vector<int>> smap(m), tmap(m);
  if (m == 1) {
    smap[0] = {0};
    tmap[0] = {k};
  } else {
    smap[0].resize(B.gset->size(0));
    tmap[0].resize(B.gset->size(0));
    for (int i = 0; i <= k; ++i) smap[0][i] = tmap[0][i] = i;
    for (int d = 1; d <= m - 1; ++d) {
      smap[d].resize(B.gset->size(d));
      tmap[d].resize(B.gset->size(d));
      for (int i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < B.column_cell[i][d - 1].size(); ++j) {
          int bidx = B.column_cell[i][d - 1][j];
          int js = kids[i].src_inclusion->map[d - 1][j];
          int jt = kids[i].tgt_inclusion->map[d - 1][j];
          smap[d][bidx] = out.column_cell[i][d - 1][js];
          tmap[d][bidx] = out.column_cell[i][d - 1][jt];
        }
      }
    }
  }
  out.src_inclusion = make_gmorphism(B.gset, gs, std::move(smap));
  out.tgt_inclusion = make_gmorphism(B.gset, gs, std::move(tmap));
  return out;
}

std::vector<GMorphism> diagrams(const GlobularSet& X, const PastingDiagram& pd) {
  if (pd.dim > X.truncation()) return {};
  AssociatedGset A = associated_gset(pd);
  const GlobularSet& G = *A.gset;
  auto cod = std::make_shared<const GlobularSet>(X);
  std::vector<GMorphism> out;
  std::vector<std::vector<int>> map(G.truncation() + 1);
  for (int m = 0; m <= G.truncation(); ++m) map[m].resize(G.size(m));

  std::function<void(int, int)> fill = [&](int m, int i) {
    if (m > G.truncation()) {
      out.push_back(GMorphism{A.gset, cod, map});
      return;
    }
    if (i == G.size(m)) {
      fill(m + 1, 0);
      return;
    }
    for (int x = 0; x < X.size(m); ++x) {
      if (m >= 1 && (X.src(m, x) != map[m - 1][G.src(m, i)] ||
                     X.tgt(m, x) != map[m - 1][G.tgt(m, i)]))
        continue;
      map[m][i] = x;
      fill(m, i + 1);
    }
  };
  fill(0, 0);
  return out;
}

PullbackResult gset_pullback(const GMorphism& f, const GMorphism& g) {
  if (!(*f.cod == *g.cod)) throw Error("pullback: codomains differ");
  const GlobularSet& A = *f.dom;
  const GlobularSet& B = *g.dom;
  if (A.truncation() != B.truncation()) throw Error("pullback: truncations differ");
  int n = A.truncation();
  std::vector<std::vector<std::string>> cells(n + 1);
  std::vector<std::vector<int>> src(n), tgt(n);
  std::vector<std::vector<int>> pa(n + 1), pb(n + 1);
  std::vector<std::map<std::pair<int, int>, int>> index(n + 1);
  for (int m = 0; m <= n; ++m) {
    for (int i = 0; i < A.size(m); ++i)
      for (int j = 0; j < B.size(m); ++j) {
        if (f.map[m][i] != g.map[m][j]) continue;
        int idx = static_cast<int>(cells[m].size());
        cells[m].push_back("(" + A.id(m, i) + "|" + B.id(m, j) + ")");
        index[m][{i, j}] = idx;
        pa[m].push_back(i);
        pb[m].push_back(j);
        if (m >= 1) {
          src[m - 1].push_back(index[m - 1].at({A.src(m, i), B.src(m, j)}));
          tgt[m - 1].push_back(index[m - 1].at({A.tgt(m, i), B.tgt(m, j)}));
        }
      }
  }
  auto apex =
      std::make_shared<const GlobularSet>(n, std::move(cells), std::move(src), std::move(tgt));
  GMorphism to_a = make_gmorphism(apex, f.dom, std::move(pa));
  GMorphism to_b = make_gmorphism(apex, g.dom, std::move(pb));
  return PullbackResult{apex, std::move(to_a), std::move(to_b)};
}

void validate_labeling(const PastingDiagram& pd, const SubstLabeling& labels) {
  AssociatedGset A = associated_gset(pd);
  const GlobularSet& G = *A.gset;
  if (static_cast<int>(labels.size()) != pd.dim + 1)
    throw Error("labeling: expected " + std::to_string(pd.dim + 1) + " levels");
  for (int d = 0; d <= pd.dim; ++d) {
    if (static_cast<int>(labels[d].size()) != G.size(d))
      throw Error("labeling: level " + std::to_string(d) + " must have " +
                  std::to_string(G.size(d)) + " entries");
    for (int i = 0; i < G.size(d); ++i) {
      const PastingDiagram& l = labels[d][i];
      if (l.dim != d)
        throw Error("labeling: label of cell " + G.id(d, i) + " must have dimension " +
                    std::to_string(d));
      if (d == 0 && !(l == point()))
        throw Error("labeling: 0-cell " + G.id(0, i) + " must be labelled o");
      if (d >= 1) {
        PastingDiagram b = pd_boundary(l);
        if (!(b == labels[d - 1][G.src(d, i)]) || !(b == labels[d - 1][G.tgt(d, i)]))
          throw Error("labeling: boundary mismatch at cell " + G.id(d, i));
      }
    }
  }
}

namespace {

// raw embedding data: per cell (d, idx) of Gl(pd), index maps
// Gl(label) dims -> Gl(result) indices
using RawEmb = std::vector<std::vector<std::vector<std::vector<int>>>>;

struct SubstRec {
  PastingDiagram result;
  RawEmb emb;
};

SubstRec subst_rec(const PastingDiagram& pd, const AssociatedGset& A, const SubstLabeling& labels,
                   bool with_emb) {
  int m = pd.dim;
  SubstRec out;
  if (m == 0) {
    out.result = point();
    if (with_emb) out.emb = {{{{0}}}};
    return out;
  }
  int k = static_cast<int>(pd.children.size());
  std::vector<int> n(k), off(k + 1, 0);
  std::vector<SubstRec> parts;  // per (i, j), j fastest
  std::vector<AssociatedGset> kidsA;
  kidsA.reserve(k);
  for (int i = 0; i < k; ++i) kidsA.push_back(associated_gset(pd.children[i]));
  for (int i = 0; i < k; ++i) {
    n[i] = static_cast<int>(labels[1][A.column_cell[i][0][0]].children.size());
    off[i + 1] = off[i] + n[i];
    for (int j = 0; j < n[i]; ++j) {
      SubstLabeling lij(m);
      for (int d = 0; d <= m - 1; ++d) {
        lij[d].reserve(A.column_cell[i][d].size());
        for (int idx : A.column_cell[i][d]) lij[d].push_back(labels[d + 1][idx].children[j]);
      }
      parts.push_back(subst_rec(pd.children[i], kidsA[i], lij, with_emb));
    }
  }
  std::vector<PastingDiagram> children;
  children.reserve(parts.size());
  for (auto& p : parts) children.push_back(p.result);
  out.result = PastingDiagram{m, std::move(children)};

  if (with_emb) {
    AssociatedGset AR = associated_gset(out.result);
    const GlobularSet& G = *A.gset;
    out.emb.resize(m + 1);
    for (int d = 0; d <= m; ++d) out.emb[d].resize(G.size(d));
    // 0-cells v_i land on the column boundaries u_{off[i]}
    for (int i = 0; i <= k; ++i) out.emb[0][i] = {{off[i]}};
    for (int i = 0; i < k; ++i) {
      for (int d = 0; d <= m - 1; ++d) {
        for (std::size_t x = 0; x < A.column_cell[i][d].size(); ++x) {
          int cellIdx = A.column_cell[i][d][x];
          const PastingDiagram& sigma = labels[d + 1][cellIdx];
          AssociatedGset As = associated_gset(sigma);
          std::vector<std::vector<int>> map(d + 2);
          map[0].resize(As.gset->size(0));
          for (int j = 0; j <= n[i]; ++j) map[0][j] = off[i] + j;
          for (int e = 0; e <= d; ++e) {
            map[e + 1].resize(As.gset->size(e + 1));
            for (int j = 0; j < n[i]; ++j) {
              const SubstRec& part = parts[off[i] + j];
              for (std::size_t w = 0; w < As.column_cell[j][e].size(); ++w) {
                int inner = part.emb[d][x][e][w];
                map[e + 1][As.column_cell[j][e][w]] = AR.column_cell[off[i] + j][e][inner];
              }
            }
          }
          out.emb[d + 1][cellIdx] = std::move(map);
        }
      }
    }
  }
  return out;
}

}  // namespace

PastingDiagram substitute(const PastingDiagram& pd, const SubstLabeling& labels) {
  validate_labeling(pd, labels);
  AssociatedGset A = associated_gset(pd);
  return subst_rec(pd, A, labels, false).result;
}

SubstResult substitute_with_embeddings(const PastingDiagram& pd, const SubstLabeling& labels) {
  validate_labeling(pd, labels);
  AssociatedGset A = associated_gset(pd);
  SubstRec rec = subst_rec(pd, A, labels, true);
  AssociatedGset AR = associated_gset(rec.result);
  const GlobularSet& G = *A.gset;
  SubstResult out;
  out.result = rec.result;
  out.embeddings.resize(pd.dim + 1);
  for (int d = 0; d <= pd.dim; ++d) {
    out.embeddings[d].reserve(G.size(d));
    for (int i = 0; i < G.size(d); ++i) {
      AssociatedGset Al = associated_gset(labels[d][i]);
      out.embeddings[d].push_back(make_gmorphism(Al.gset, AR.gset, rec.emb[d][i]));
    }
  }
  return out;
}

}  // namespace gwop
