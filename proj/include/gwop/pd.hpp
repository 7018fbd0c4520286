#pragma once

#include <string>
#include <vector>

#include "gwop/util.hpp"

namespace gwop {

// A pasting diagram of dimension `dim`: a (possibly empty) sequence of
// diagrams of dimension dim-1.  dim 0 is the point `o` and has no children.
// A childless diagram of positive dimension is the empty composite at that
// dimension; diagrams whose drawn tree is shorter than dim are degenerate.
struct PastingDiagram {
  int dim = 0;
  std::vector<PastingDiagram> children;

  bool operator==(const PastingDiagram&) const = default;
  bool operator<(const PastingDiagram& o) const;
};

// A sequence-constructor occurrence inside a diagram (every subdiagram of
// dimension >= 1).  height is the distance from the root, arity the child
// count, path the child indices leading to it from the root.
struct Node {
  int height = 0;
  int arity = 0;
  std::vector<int> path;

  bool operator==(const Node&) const = default;
};

// Substitution labels: labels[d][i] is the d-dimensional diagram assigned to
// the i-th d-cell of associated_gset(pd) (see gset.hpp for the cell order).
using SubstLabeling = std::vector<std::vector<PastingDiagram>>;

PastingDiagram point();
PastingDiagram line(int arity);  // the dim-1 diagram with `arity` arrows
PastingDiagram make_pd(int dim, std::vector<PastingDiagram> children);
PastingDiagram globe(int m);

// Text form "dim=<m>:<term>" with <term> := "o" | "[" <term>* "]"; a dim-1
// term may also be a decimal arity.  `o` above dimension 0 parses to the
// empty composite of that dimension.  print_pd emits the canonical bracket
// form with no whitespace; parse errors carry the byte offset.
PastingDiagram parse_pd(const std::string& text);
std::string print_pd(const PastingDiagram& pd);

int pd_vertices(const PastingDiagram& pd);

// Shared source/target: strips the top level of the tree (dim >= 1).
PastingDiagram pd_boundary(const PastingDiagram& pd);

// All nodes, bottom-up by height, then left to right.
std::vector<Node> pd_nodes(const PastingDiagram& pd);

const PastingDiagram& pd_subdiagram(const PastingDiagram& pd, const std::vector<int>& path);

// All diagrams of the given dimension with at most max_vertices tree
// vertices, duplicate-free, in a deterministic order.
std::vector<PastingDiagram> enumerate_pds(int dim, int max_vertices);

// Substitution of labelled diagrams into pd (monad multiplication).
// Every 0-cell must be labelled `o` and boundaries must be compatible:
// pd_boundary(label(c)) == label(src c) == label(tgt c).
PastingDiagram substitute(const PastingDiagram& pd, const SubstLabeling& labels);

}  // namespace gwop
