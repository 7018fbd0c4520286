#include "gwop/globop.hpp"

#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <set>

namespace gwop {

namespace {

// fiber and cell dimension for one node of an m-dimensional shape
struct LabelSlot {
  const GlobularSet* fiber;
  int dim;
};

std::vector<LabelSlot> label_slots(const OperadSeries& S, const PastingDiagram& pd,
                                   const std::vector<Node>& nodes) {
  if (pd.dim > S.n)
    throw Error("q_cells: shape dimension " + std::to_string(pd.dim) + " exceeds n = " +
                std::to_string(S.n));
  std::vector<LabelSlot> slots;
  slots.reserve(nodes.size());
  for (const Node& nd : nodes) {
    const GOperad& P = S.P.at(S.n - nd.height - 1);
    if (nd.arity > P.max_arity())
      throw Error("q_cells: arity " + std::to_string(nd.arity) + " exceeds the cap of P_" +
                  std::to_string(S.n - nd.height - 1));
    slots.push_back({&P.at(nd.arity), pd.dim - nd.height - 1});
  }
  return slots;
}

}  // namespace

void validate_qcell(const OperadSeries& S, const QCell& q) {
  std::vector<Node> nodes = pd_nodes(q.shape);
  std::vector<LabelSlot> slots = label_slots(S, q.shape, nodes);
  if (q.labels.size() != nodes.size())
    throw Error("qcell: expected " + std::to_string(nodes.size()) + " labels over " +
                print_pd(q.shape) + ", got " + std::to_string(q.labels.size()));
  for (std::size_t i = 0; i < slots.size(); ++i)
    if (q.labels[i] < 0 || q.labels[i] >= slots[i].fiber->size(slots[i].dim))
      throw Error("qcell: label " + std::to_string(i) + " out of range over " +
                  print_pd(q.shape));
}

std::string qcell_key(const OperadSeries& S, const QCell& q) {
  std::vector<Node> nodes = pd_nodes(q.shape);
  std::vector<LabelSlot> slots = label_slots(S, q.shape, nodes);
  std::string key = print_pd(q.shape) + "{";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) key += ";";
    key += "h" + std::to_string(nodes[i].height) + "a" + std::to_string(nodes[i].arity) + ":" +
           slots[i].fiber->id(slots[i].dim, q.labels[i]);
  }
  return key + "}";
}

std::vector<QCell> q_cells(const OperadSeries& S, const PastingDiagram& pd) {
  std::vector<Node> nodes = pd_nodes(pd);
  std::vector<LabelSlot> slots = label_slots(S, pd, nodes);
  std::vector<QCell> out;
  for (const LabelSlot& s : slots)
    if (s.fiber->size(s.dim) == 0) return out;
  std::vector<int> cur(nodes.size(), 0);
  while (true) {
    out.push_back(QCell{pd, cur});
    int i = static_cast<int>(cur.size()) - 1;
    while (i >= 0 && cur[i] + 1 == slots[i].fiber->size(slots[i].dim)) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

long long q_count(const OperadSeries& S, const PastingDiagram& pd) {
  std::vector<Node> nodes = pd_nodes(pd);
  std::vector<LabelSlot> slots = label_slots(S, pd, nodes);
  long long total = 1;
  for (const LabelSlot& s : slots) total *= s.fiber->size(s.dim);
  return total;
}

QCell q_boundary(const OperadSeries& S, const QCell& q, Which which) {
  validate_qcell(S, q);
  int m = q.shape.dim;
  if (m < 1) throw Error("q_boundary: a 0-dimensional cell has no boundary");
  std::vector<Node> nodes = pd_nodes(q.shape);
  std::vector<LabelSlot> slots = label_slots(S, q.shape, nodes);
  PastingDiagram bshape = pd_boundary(q.shape);
  // the boundary keeps exactly the nodes of height < m-1, matched by path
  std::map<std::vector<int>, std::size_t> by_path;
  for (std::size_t i = 0; i < nodes.size(); ++i) by_path[nodes[i].path] = i;
  std::vector<int> labels;
  for (const Node& bn : pd_nodes(bshape)) {
    std::size_t i = by_path.at(bn.path);
    const LabelSlot& s = slots[i];
    labels.push_back(which == Which::source ? s.fiber->src(s.dim, q.labels[i])
                                            : s.fiber->tgt(s.dim, q.labels[i]));
  }
  return QCell{std::move(bshape), std::move(labels)};
}

PastingDiagram q_project(const QCell& q) { return q.shape; }

QCell q_unit(const OperadSeries& S, int m) {
  if (m > S.n) throw Error("q_unit: dimension exceeds n");
  PastingDiagram g = globe(m);
  std::vector<int> labels;
  for (const Node& nd : pd_nodes(g))
    labels.push_back(S.P.at(S.n - nd.height - 1).unit_cell(m - nd.height - 1));
  return QCell{std::move(g), std::move(labels)};
}

bool q_is_contractible_exact(const OperadSeries& S) {
  for (const GOperad& P : S.P)
    if (!operad_is_contractible(P, P.max_arity())) return false;
  return true;
}

Report q_contractible_lifting(const OperadSeries& S, int max_vertices) {
  for (int m = 0; m <= S.n; ++m) {
    std::vector<PastingDiagram> sigmas = enumerate_pds(m, max_vertices);
    std::map<std::string, std::vector<const PastingDiagram*>> by_boundary;
    std::vector<PastingDiagram> psis;
    if (m < S.n) {
      psis = enumerate_pds(m + 1, max_vertices);
      for (const PastingDiagram& psi : psis)
        by_boundary[print_pd(pd_boundary(psi))].push_back(&psi);
    }
    for (const PastingDiagram& sigma : sigmas) {
      std::vector<QCell> cells = q_cells(S, sigma);
      std::vector<std::string> keys(cells.size());
      for (std::size_t i = 0; i < cells.size(); ++i) keys[i] = qcell_key(S, cells[i]);
      // bucket by boundary pair; every ordered pair in a bucket is parallel
      std::map<std::string, std::vector<std::size_t>> buckets;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        std::string bk;
        if (m >= 1)
          bk = qcell_key(S, q_boundary(S, cells[i], Which::source)) + "#" +
               qcell_key(S, q_boundary(S, cells[i], Which::target));
        buckets[bk].push_back(i);
      }
      if (m == S.n) {
        for (const auto& [bk, idxs] : buckets)
          for (std::size_t z = 1; z < idxs.size(); ++z)
            if (!(cells[idxs[z]] == cells[idxs[0]]))
              return Report::fail("parallel " + std::to_string(m) + "-cells differ over " +
                                  print_pd(sigma) + ": " + keys[idxs[0]] + " and " +
                                  keys[idxs[z]]);
        continue;
      }
      auto fit = by_boundary.find(print_pd(sigma));
      if (fit == by_boundary.end()) continue;  // no candidate shape within the bound
      for (const PastingDiagram* psi : fit->second) {
        std::set<std::string> covered;
        for (const QCell& x : q_cells(S, *psi))
          covered.insert(qcell_key(S, q_boundary(S, x, Which::source)) + "#" +
                         qcell_key(S, q_boundary(S, x, Which::target)));
        for (const auto& [bk, idxs] : buckets)
          for (std::size_t za = 0; za < idxs.size(); ++za)
            for (std::size_t zb = 0; zb < idxs.size(); ++zb)
              if (!covered.count(keys[idxs[za]] + "#" + keys[idxs[zb]]))
                return Report::fail("no " + std::to_string(m + 1) + "-filler over " +
                                    print_pd(*psi) + " for the parallel pair " +
                                    keys[idxs[za]] + " -> " + keys[idxs[zb]]);
      }
    }
  }
  return Report::pass();
}

bool q_is_contractible_lifting(const OperadSeries& S, int max_vertices) {
  return q_contractible_lifting(S, max_vertices).ok;
}

namespace {

std::string delta_key(const std::vector<std::vector<int>>& map) {
  std::string s = "<";
  for (std::size_t d = 0; d < map.size(); ++d) {
    if (d) s += "|";
    for (std::size_t c = 0; c < map[d].size(); ++c) {
      if (c) s += ",";
      s += std::to_string(map[d][c]);
    }
  }
  return s + ">";
}

}  // namespace

QApplyResult q_apply(const OperadSeries& S, const GlobularSet& X, int max_vertices) {
  if (X.truncation() != S.n)
    throw Error("q_apply: the truncation of X must equal n = " + std::to_string(S.n));
  int n = S.n;
  std::vector<std::vector<std::string>> cells(n + 1);
  std::vector<std::vector<int>> src(n), tgt(n);
  std::vector<std::vector<FreeCell>> decode(n + 1);
  std::vector<std::map<std::string, int>> index(n + 1);
  for (int m = 0; m <= n; ++m) {
    for (const PastingDiagram& sigma : enumerate_pds(m, max_vertices)) {
      std::vector<QCell> qcs = q_cells(S, sigma);
      if (qcs.empty()) continue;
      std::vector<GMorphism> ds = diagrams(X, sigma);
      if (ds.empty()) continue;
      AssociatedGset A = associated_gset(sigma);
      for (const QCell& q : qcs) {
        std::string qk = qcell_key(S, q);
        std::string bsk, btk;
        if (m >= 1) {
          bsk = qcell_key(S, q_boundary(S, q, Which::source));
          btk = qcell_key(S, q_boundary(S, q, Which::target));
        }
        for (const GMorphism& delta : ds) {
          std::string id = qk + "@" + delta_key(delta.map);
          index[m][id] = static_cast<int>(cells[m].size());
          cells[m].push_back(id);
          decode[m].push_back(FreeCell{q, delta});
          if (m >= 1) {
            const GMorphism& is = *A.src_inclusion;
            const GMorphism& it = *A.tgt_inclusion;
            std::vector<std::vector<int>> sm(m), tm(m);
            for (int d = 0; d < m; ++d) {
              sm[d].resize(is.map[d].size());
              for (std::size_t c = 0; c < is.map[d].size(); ++c)
                sm[d][c] = delta.map[d][is.map[d][c]];
              tm[d].resize(it.map[d].size());
              for (std::size_t c = 0; c < it.map[d].size(); ++c)
                tm[d][c] = delta.map[d][it.map[d][c]];
            }
            src[m - 1].push_back(index[m - 1].at(bsk + "@" + delta_key(sm)));
            tgt[m - 1].push_back(index[m - 1].at(btk + "@" + delta_key(tm)));
          }
        }
      }
    }
  }
  return QApplyResult{GlobularSet(n, std::move(cells), std::move(src), std::move(tgt)),
                      std::move(decode)};
}

QCell q2_multiply(const OperadSeries& S, const QCell& q, const SubstLabeling& subst,
                  const QArgs& args) {
  if (S.n > 2) throw Error("q2_multiply: only supported for n <= 2");
  validate_qcell(S, q);
  validate_labeling(q.shape, subst);
  int m = q.shape.dim;
  AssociatedGset A = associated_gset(q.shape);
  const GlobularSet& G = *A.gset;
  if (static_cast<int>(args.size()) != m + 1)
    throw Error("q2_multiply: args must cover every dimension up to " + std::to_string(m));
  for (int d = 0; d <= m; ++d) {
    if (static_cast<int>(args[d].size()) != G.size(d))
      throw Error("q2_multiply: args must cover every cell at dimension " + std::to_string(d));
    for (int i = 0; i < G.size(d); ++i) {
      validate_qcell(S, args[d][i]);
      if (!(args[d][i].shape == subst[d][i]))
        throw Error("q2_multiply: the argument over cell " + G.id(d, i) +
                    " does not match its substituted shape");
    }
  }
  for (int d = 1; d <= m; ++d)
    for (int i = 0; i < G.size(d); ++i)
      if (!(q_boundary(S, args[d][i], Which::source) == args[d - 1][G.src(d, i)]) ||
          !(q_boundary(S, args[d][i], Which::target) == args[d - 1][G.tgt(d, i)]))
        throw Error("q2_multiply: argument boundaries disagree at cell " + G.id(d, i));

  PastingDiagram rshape = substitute(q.shape, subst);
  if (m == 0) return q;
  const GOperad& P = S.P.at(S.n - 1);
  if (m == 1) {
    int k = static_cast<int>(q.shape.children.size());
    std::vector<std::pair<int, int>> gargs(k);
    for (int i = 0; i < k; ++i) {
      int e = A.column_cell[i][0][0];
      gargs[i] = {static_cast<int>(subst[1][e].children.size()), args[1][e].labels.at(0)};
    }
    int label = P.gamma(0, k, q.labels.at(0), gargs);
    return QCell{std::move(rshape), {label}};
  }
  // m == 2: compose each column vertically, then apply the root label
  int j = static_cast<int>(q.shape.children.size());
  std::vector<std::pair<int, int>> gargs(j);
  for (int i = 0; i < j; ++i) {
    int e0 = A.column_cell[i][0][0];
    int ni = static_cast<int>(subst[1][e0].children.size());
    const std::vector<int>& twos = A.column_cell[i][1];
    if (twos.empty()) {
      gargs[i] = {ni, P.videntity(ni, args[1][e0].labels.at(0))};
    } else {
      std::vector<int> edges;
      edges.reserve(twos.size());
      for (int x : twos) edges.push_back(args[2][x].labels.at(0));
      gargs[i] = {ni, P.act_path(ni, edges, -1)};
    }
  }
  int label = P.gamma(1, j, q.labels.at(0), gargs);
  std::vector<int> labels{label};
  labels.resize(1 + rshape.children.size(), 0);  // height-1 labels over terminal P_0
  return QCell{std::move(rshape), std::move(labels)};
}

Report interchange_check(const OperadSeries& S, int f, int g) {
  if (S.n != 2) throw Error("interchange: the series must have n = 2");
  const GOperad& P = S.P.at(1);
  if (P.max_arity() < 2) throw Error("interchange: P_1 needs arity 2");
  const GlobularSet& P2 = P.at(2);
  if (f < 0 || f >= P2.size(1) || g < 0 || g >= P2.size(1))
    throw Error("interchange: f and g must be 1-cells of P_1(2)");
  if (P2.tgt(1, f) != P2.src(1, g)) throw Error("interchange: f and g are not composable");
  int gf = P.vcompose(2, f, g);

  PastingDiagram two = line(2);
  PastingDiagram onecol = make_pd(2, {line(2)});
  PastingDiagram hshape = make_pd(2, {line(1), line(1)});
  PastingDiagram expect = make_pd(2, {line(2), line(2)});
  QCell pt{point(), {}};
  auto edge = [](int r, int lab) { return QCell{line(r), {lab}}; };

  // left: the vertical binary applied to the f- and g-labelled horizontals
  QCell vert{onecol, {P.unit_cell(1), 0}};
  SubstLabeling ls{{point(), point()}, {two, two, two}, {hshape, hshape}};
  QArgs la{{pt, pt},
           {edge(2, P2.src(1, f)), edge(2, P2.tgt(1, f)), edge(2, P2.tgt(1, g))},
           {QCell{hshape, {f, 0, 0}}, QCell{hshape, {g, 0, 0}}}};
  QCell lhs = q2_multiply(S, vert, ls, la);

  // right: the (g after f)-labelled horizontal applied to vertical binaries
  QCell horiz{hshape, {gf, 0, 0}};
  SubstLabeling rs{{point(), point(), point()},
                   {line(1), line(1), line(1), line(1)},
                   {onecol, onecol}};
  QArgs ra{{pt, pt, pt},
           {edge(1, P.unit0()), edge(1, P.unit0()), edge(1, P.unit0()), edge(1, P.unit0())},
           {vert, vert}};
  QCell rhs = q2_multiply(S, horiz, rs, ra);

  if (!(lhs == rhs) || !(lhs.shape == expect) || lhs.labels.at(0) != gf)
    return Report::fail("interchange fails for f = " + P2.id(1, f) + ", g = " + P2.id(1, g) +
                        ": left " + qcell_key(S, lhs) + ", right " + qcell_key(S, rhs) +
                        ", composite " + P2.id(1, gf));
  return Report{true, "both sides equal " + qcell_key(S, lhs)};
}

nlohmann::json qcell_to_json(const OperadSeries& S, const QCell& q) {
  validate_qcell(S, q);
  std::vector<Node> nodes = pd_nodes(q.shape);
  std::vector<LabelSlot> slots = label_slots(S, q.shape, nodes);
  nlohmann::json labels = nlohmann::json::array();
  for (std::size_t i = 0; i < nodes.size(); ++i)
    labels.push_back({{"height", nodes[i].height},
                      {"arity", nodes[i].arity},
                      {"cell", slots[i].fiber->id(slots[i].dim, q.labels[i])}});
  return nlohmann::json{{"shape", print_pd(q.shape)}, {"labels", std::move(labels)}};
}

QCell qcell_from_json(const OperadSeries& S, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("labels"))
    throw Error("qcell json: expected {\"shape\":..., \"labels\":...}");
  PastingDiagram pd = parse_pd(j.at("shape").get<std::string>());
  std::vector<Node> nodes = pd_nodes(pd);
  std::vector<LabelSlot> slots = label_slots(S, pd, nodes);
  const nlohmann::json& ls = j.at("labels");
  if (ls.size() != nodes.size())
    throw Error("qcell json: expected " + std::to_string(nodes.size()) + " labels");
  std::vector<int> labels;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const nlohmann::json& e = ls.at(i);
    if (e.at("height").get<int>() != nodes[i].height ||
        e.at("arity").get<int>() != nodes[i].arity)
      throw Error("qcell json: label " + std::to_string(i) +
                  " does not match the canonical node order");
    std::string id = e.at("cell").get<std::string>();
    int idx = slots[i].fiber->index_of(slots[i].dim, id);
    if (idx < 0)
      throw Error("qcell json: unknown cell '" + id + "' at label " + std::to_string(i));
    labels.push_back(idx);
  }
  return QCell{std::move(pd), std::move(labels)};
}

}  // namespace gwop
