#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "gwop/gset.hpp"
#include "gwop/operads.hpp"
#include "gwop/pd.hpp"
#include "gwop/util.hpp"

namespace gwop {

// A cell of the compiled globular operad Q over one pasting diagram: one
// label per node of the shape, aligned with pd_nodes(shape).  The label of a
// node (b, k) in an m-dimensional shape is an (m-b-1)-cell of P_{n-b-1}(k),
// stored as a cell index into that fiber.
struct QCell {
  PastingDiagram shape;
  std::vector<int> labels;

  bool operator==(const QCell&) const = default;
};

enum class Which { source, target };

// Throws when a label index is out of range or the shape exceeds dimension n.
void validate_qcell(const OperadSeries& S, const QCell& q);

// Stable printable form "<shape>{h<b>a<k>:<cell id>;...}" used for witnesses
// and for equality-by-key tests.
std::string qcell_key(const OperadSeries& S, const QCell& q);

// All cells over one shape: the full product of the label fibers, last label
// varying fastest.  Throws when a needed arity exceeds an operad's cap.
std::vector<QCell> q_cells(const OperadSeries& S, const PastingDiagram& pd);

// Fiber size by the product formula, without materializing.
long long q_count(const OperadSeries& S, const PastingDiagram& pd);

// Source/target: the boundary shape keeps the nodes of height < m-1 with
// their labels replaced by their sources (resp. targets).
QCell q_boundary(const OperadSeries& S, const QCell& q, Which which);

// The underlying shape (the projection to the free strict theory).
PastingDiagram q_project(const QCell& q);

// The unit cell over globe(m): identity-pattern labels over the units.
QCell q_unit(const OperadSeries& S, int m);

// Exact criterion: every P_i is contractible (up to its arity cap).
bool q_is_contractible_exact(const OperadSeries& S);

// Literal lifting search over all shapes within the vertex bound; the
// witness names the first missing filler or unequal parallel top cells.
Report q_contractible_lifting(const OperadSeries& S, int max_vertices);
bool q_is_contractible_lifting(const OperadSeries& S, int max_vertices);

// One free-algebra cell: a QCell together with a diagram of its shape in X.
struct FreeCell {
  QCell q;
  GMorphism delta;  // associated_gset(q.shape) -> X
};

struct QApplyResult {
  GlobularSet gset;
  std::vector<std::vector<FreeCell>> decode;  // [m][cell index]
};

// The free Q-algebra on X, with shapes bounded by max_vertices.
QApplyResult q_apply(const OperadSeries& S, const GlobularSet& X, int max_vertices);

// args[d][i] is the QCell substituted into the i-th d-cell of
// associated_gset(q.shape); its shape must equal subst[d][i].
using QArgs = std::vector<std::vector<QCell>>;

// Operadic multiplication for n <= 2 via the P_{n-1}(root arity) labels:
// dim 1 composes by gamma, dim 2 composes the columns vertically first.
QCell q2_multiply(const OperadSeries& S, const QCell& q, const SubstLabeling& subst,
                  const QArgs& args);

// Both sides of the parametrised interchange law over the shape [2,2] for
// 1-cells f, g of P_{n-1}(2); passes when both equal the composite of f
// followed by g.
Report interchange_check(const OperadSeries& S, int f, int g);

nlohmann::json qcell_to_json(const OperadSeries& S, const QCell& q);
QCell qcell_from_json(const OperadSeries& S, const nlohmann::json& j);

}  // namespace gwop
