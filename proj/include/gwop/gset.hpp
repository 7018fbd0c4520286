#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gwop/pd.hpp"
#include "gwop/util.hpp"

namespace gwop {

// Finite n-truncated globular set.  cells(m) lists the m-cell identifiers
// for 0 <= m <= n; src/tgt index into the level below and satisfy the
// globular identities ss = st and ts = tt (checked on construction).
class GlobularSet {
 public:
  GlobularSet(int n, std::vector<std::vector<std::string>> cells,
              std::vector<std::vector<int>> src, std::vector<std::vector<int>> tgt);

  int truncation() const { return n_; }
  int size(int m) const;
  const std::vector<std::string>& ids(int m) const;
  const std::string& id(int m, int i) const;
  int index_of(int m, const std::string& id) const;  // -1 when absent
  int src(int m, int i) const;                       // m >= 1
  int tgt(int m, int i) const;

  bool operator==(const GlobularSet&) const = default;

 private:
  int n_;
  std::vector<std::vector<std::string>> cells_;
  std::vector<std::vector<int>> src_, tgt_;  // src_[m-1] holds dim-m boundaries
};

GlobularSet terminal_gset(int n);
GlobularSet empty_gset(int n);
GlobularSet sphere(int m);  // truncation m, two cells per dimension
GlobularSet ball(int m);    // as sphere with a single top cell
// One m-cell per ordered pair of parallel (m-1)-cells over the given points.
GlobularSet chaotic_gset(const std::vector<std::string>& points, int n);
// Identity pattern: one m-cell per point at every dimension.
GlobularSet discrete_gset(const std::vector<std::string>& points, int n);

nlohmann::json gset_to_json(const GlobularSet&);
GlobularSet gset_from_json(const nlohmann::json&);

// Morphism of globular sets; commutation with src/tgt is checked.
struct GMorphism {
  std::shared_ptr<const GlobularSet> dom, cod;
  std::vector<std::vector<int>> map;  // map[m][i] = image index at dimension m
};

GMorphism make_gmorphism(std::shared_ptr<const GlobularSet> dom,
                         std::shared_ptr<const GlobularSet> cod,
                         std::vector<std::vector<int>> map);
GMorphism sphere_to_ball(int m);  // boundary inclusion S^m -> B^{m+1}

// Ordered pairs of parallel m-cells (all ordered pairs when m = 0).
std::vector<std::pair<int, int>> parallel_pairs(const GlobularSet& A, int m);

// Contractible: nonempty, every parallel pair below the top dimension has a
// filler, and parallel top-dimensional cells are equal.
Report gset_contractible(const GlobularSet& A);
bool is_contractible(const GlobularSet& A);

// The globular set of a pasting diagram, built by suspension: 0-cells
// v0..vk, and for each column i the suspended cells of child i, in column
// order.  Identifiers: "v<i>" at the root, "<column>:<inner id>" suspended.
struct AssociatedGset {
  std::shared_ptr<const GlobularSet> gset;
  // inclusions Gl(boundary(pd)) -> Gl(pd); absent for the point
  std::optional<GMorphism> src_inclusion, tgt_inclusion;
  // column_cell[i][d][j]: index at dimension d+1 of the suspension of the
  // j-th d-cell of Gl(children[i])
  std::vector<std::vector<std::vector<int>>> column_cell;
};

AssociatedGset associated_gset(const PastingDiagram& pd);

// All morphisms Gl(pd) -> X, in a deterministic order.
std::vector<GMorphism> diagrams(const GlobularSet& X, const PastingDiagram& pd);

struct PullbackResult {
  std::shared_ptr<const GlobularSet> apex;
  GMorphism to_a, to_b;
};

// Pullback of f: A -> C, g: B -> C (dimension-wise pairs, ids "(a|b)").
PullbackResult gset_pullback(const GMorphism& f, const GMorphism& g);

// Substitution together with, for each cell c of Gl(pd), the embedding
// Gl(labels(c)) -> Gl(result) of the pasted sub-diagram.
struct SubstResult {
  PastingDiagram result;
  std::vector<std::vector<GMorphism>> embeddings;  // [d][cell index]
};

SubstResult substitute_with_embeddings(const PastingDiagram& pd, const SubstLabeling& labels);

// Checks dimensions, point labels and boundary compatibility; throws Error
// naming the offending cell.
void validate_labeling(const PastingDiagram& pd, const SubstLabeling& labels);

}  // namespace gwop
