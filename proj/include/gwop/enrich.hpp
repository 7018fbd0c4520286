#pragma once

#include <map>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "gwop/gset.hpp"
#include "gwop/operads.hpp"
#include "gwop/util.hpp"

namespace gwop {

// A V-graph for V = finite n-truncated globular sets: a set of objects and a
// hom-object for every ordered pair, all of one truncation.
struct VGraph {
  std::vector<std::string> objects;
  std::vector<std::vector<GlobularSet>> hom;  // hom[i][j] : objects[i] -> objects[j]

  int truncation() const;
  void validate() const;
};

VGraph terminal_vgraph(int trunc);
nlohmann::json vgraph_to_json(const VGraph& A);
VGraph vgraph_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// free V-category

// One formal path: arity k, the object string a_0..a_k, and one component
// cell per step.  Cells are indices into hom(a_j, a_{j+1}) at a fixed dim.
struct PathCell {
  int k = 0;
  std::vector<int> objs;
  std::vector<int> cells;
};

struct FcResult {
  VGraph graph;
  // decode[i][j][d][cell index] describes the path behind each formal cell
  std::vector<std::vector<std::vector<std::vector<PathCell>>>> decode;
};

// hom(a,a') = disjoint union over k <= max_len and object strings of the
// product of the homs along the string
FcResult fc_v(const VGraph& A, int max_len);

// ---------------------------------------------------------------------------
// suspension

// The one-object V-graph with hom = coprod_k P(k), plus the degree map into
// fc_V(1)'s single hom-object (one cell per length).
struct SigmaCollection {
  GlobularSet hom;
  GlobularSet degree_cod;
  GMorphism degree;
  std::vector<std::vector<std::pair<int, int>>> decode;  // [d][cell] -> (k, cell of P(k))
};

SigmaCollection suspend_operad(const GOperad& P, int max_k);

// ---------------------------------------------------------------------------
// free (V,P)-category, two ways

struct VpCell {
  int k = 0;
  std::vector<int> objs;
  int p = 0;  // cell of P(k)
  std::vector<int> cells;
};

struct FcVpResult {
  VGraph direct;
  std::vector<std::vector<std::vector<std::vector<VpCell>>>> decode;
  VGraph via_pullback;
  // witness bijection direct -> pullback apex, per hom pair and dimension;
  // fc_vp verifies it is bijective and commutes with src/tgt
  std::vector<std::vector<std::vector<std::vector<int>>>> bijection;
};

FcVpResult fc_vp(const VGraph& A, const GOperad& P, int max_len);

// ---------------------------------------------------------------------------
// (V,P)-categories

// Composition tables: for every k <= max_k and object string, a map
// P(k) x hom(a_{k-1},a_k) x ... x hom(a_0,a_1) -> hom(a_0,a_k), stored
// dimension-wise as a flat table (p slowest, then the args left to right).
struct VPCategory {
  VGraph graph;
  GOperad P;
  int max_k = 2;
  std::map<std::string, std::vector<std::vector<int>>> comp;

  static std::string comp_key(int k, const std::vector<int>& objs);
  int table_size(int dim, int k, const std::vector<int>& objs) const;
  int lookup(int dim, int k, const std::vector<int>& objs, int p,
             const std::vector<int>& args) const;
  void set_entry(int dim, int k, const std::vector<int>& objs, int p,
                 const std::vector<int>& args, int result);
};

// structural validation, unit law, src/tgt compatibility and the
// compatibility square with operad composition, all exhaustively
Report validate_vpcategory(const VPCategory& A);

// converts A to an algebra action on the pullback form of fc_vp and back,
// asserting cell-level equality of all composition tables
Report vp_roundtrip(const VPCategory& A);

// ---------------------------------------------------------------------------
// pullbacks of V-graphs and cartesianness of fc_v

struct VGraphMorphism {
  std::vector<int> obj_map;
  // hom_map[i][j][d][cell] -> cell of cod.hom(obj_map[i], obj_map[j])
  std::vector<std::vector<std::vector<std::vector<int>>>> hom_map;
};

void validate_vgraph_morphism(const VGraph& dom, const VGraph& cod, const VGraphMorphism& f);

struct VGraphPullback {
  VGraph apex;
  std::vector<std::pair<int, int>> obj_pairs;
  VGraphMorphism to_a, to_b;
};

VGraphPullback vgraph_pullback(const VGraph& A, const VGraph& B, const VGraph& C,
                               const VGraphMorphism& f, const VGraphMorphism& g);

// spot check of Thm-2.6-style cartesianness: fc_v of the pullback is
// canonically isomorphic to the pullback of the fc_v images
Report fc_preserves_pullback(const VGraph& A, const VGraph& B, const VGraph& C,
                             const VGraphMorphism& f, const VGraphMorphism& g, int max_len);

// ---------------------------------------------------------------------------
// the distributive law  lambda : T o fc_{(V,UP)}  =>  fc_{(V,UP)} o T
//
// Formal elements of the functor towers are terms: a Base cell of some
// hom-object, an SNode (one formal P-labeled horizontal composite) or a
// TPath (one formal vertical path).  T is the free-category monad on the
// truncation-1 hom-objects ("vertical"), or the identity monad.

struct FTerm {
  enum class Kind { Base, SNode, TPath };
  Kind kind = Kind::Base;
  int dim = 0;
  // Base
  int a = -1, b = -1, cell = -1;
  // SNode
  int k = 0, plabel = -1;
  std::vector<int> objs;
  // SNode components / TPath edges; an empty TPath keeps its basepoint here
  std::vector<FTerm> args;

  static FTerm base(int dim, int a, int b, int cell);
  static FTerm snode(int dim, int k, std::vector<int> objs, int plabel, std::vector<FTerm> args);
  static FTerm tpath(std::vector<FTerm> edges);
  static FTerm tempty(FTerm at);
};

std::string fterm_encode(const FTerm& t);

// one component of lambda: a vertical path of P-labeled horizontal composites
// becomes one horizontal composite of vertical paths, the label transported
// through the algebra action (act_path)
FTerm lambda_apply(const FTerm& x, const GOperad& P, bool t_identity);

struct DistLawBounds {
  int max_k = 3;      // horizontal arity of every SNode
  int max_len = 3;    // vertical length of every TPath
  int max_weight = 3; // total number of Base cells per element
};

// verifies the four distributive-law axioms elementwise on every formal
// element of the four domain towers within the bounds
Report check_distributive_law(const VGraph& A, const GOperad& P, bool t_identity,
                              const DistLawBounds& bounds);

}  // namespace gwop
