#include <memory>
#include <numeric>
#include <set>
#include <string>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "gwop/gset.hpp"
#include "gwop/pd.hpp"
#include "oracles.hpp"

using namespace gwop;

namespace {

GlobularSet loop_gset() {
  return GlobularSet(1, {{"x"}, {"u"}}, {{0}}, {{0}});
}

GlobularSet arrow_gset() {
  return GlobularSet(2, {{"x", "y"}, {"u"}, {}}, {{0}, {}}, {{1}, {}});
}

// constant morphism to the terminal globular set
GMorphism to_terminal(std::shared_ptr<const GlobularSet> X,
                      std::shared_ptr<const GlobularSet> T) {
  std::vector<std::vector<int>> m(X->truncation() + 1);
  for (int d = 0; d <= X->truncation(); ++d) m[d].assign(X->size(d), 0);
  return make_gmorphism(std::move(X), std::move(T), std::move(m));
}

}  // namespace

TEST_CASE("GlobularSet construction validates shape and globularity") {
  CHECK_THROWS_WITH_AS(
      GlobularSet(2, {{"x", "y"}, {"u", "v"}, {"a"}}, {{0, 0}, {0}}, {{1, 0}, {1}}),
      "globular set: globularity fails at cell a", Error);
  CHECK_THROWS_AS(GlobularSet(1, {{"x"}, {"u"}}, {{0}}, {{3}}), Error);   // out of range
  CHECK_THROWS_AS(GlobularSet(1, {{"x", "x"}, {}}, {{}}, {{}}), Error);   // duplicate id
  CHECK_THROWS_AS(GlobularSet(1, {{"x"}, {"u"}}, {}, {}), Error);         // missing levels

  GlobularSet ok(2, {{"x", "y"}, {"u", "v"}, {"a"}}, {{0, 0}, {0}}, {{1, 1}, {1}});
  CHECK(ok.src(2, 0) == 0);
  CHECK(ok.tgt(2, 0) == 1);
  CHECK(ok.index_of(1, "v") == 1);
  CHECK(ok.index_of(1, "w") == -1);
}

TEST_CASE("standard shapes have the expected cells") {
  CHECK(sphere(1).size(0) == 2);
  CHECK(sphere(1).size(1) == 2);
  CHECK(ball(2).size(0) == 2);
  CHECK(ball(2).size(1) == 2);
  CHECK(ball(2).size(2) == 1);
  CHECK(terminal_gset(2).size(0) == 1);
  CHECK(terminal_gset(2).size(2) == 1);
  CHECK(empty_gset(1).size(0) == 0);
  CHECK(empty_gset(1).size(1) == 0);
  CHECK(empty_gset(0).truncation() == 0);
  CHECK(sphere(1).id(1, 0) == "0");
  CHECK(sphere(1).id(1, 1) == "1");

  GMorphism inc = sphere_to_ball(0);
  CHECK(inc.map[0] == std::vector<int>{0, 1});

  GlobularSet ch = chaotic_gset({"a", "b", "c"}, 2);
  CHECK(ch.size(0) == 3);
  CHECK(ch.size(1) == 9);  // one 1-cell per ordered pair
  CHECK(ch.size(2) == 9);  // parallel 1-cells coincide, so pairs are diagonal
  GlobularSet di = discrete_gset({"a", "b"}, 2);
  CHECK(di.size(0) == 2);
  CHECK(di.size(1) == 2);
  CHECK(di.size(2) == 2);
}

TEST_CASE("parallel_pairs") {
  CHECK(parallel_pairs(sphere(1), 1).size() == 4);
  CHECK(parallel_pairs(ball(1), 1).size() == 1);
  CHECK(parallel_pairs(sphere(1), 0).size() == 4);  // all ordered pairs at m = 0
  CHECK(parallel_pairs(terminal_gset(3), 2).size() == 1);
  // pairs are ordered and include the diagonal
  for (auto [a, b] : parallel_pairs(sphere(2), 2)) {
    CHECK(sphere(2).src(2, a) == sphere(2).src(2, b));
    CHECK(sphere(2).tgt(2, a) == sphere(2).tgt(2, b));
  }
}

TEST_CASE("gset_contractible verdicts and witnesses") {
  CHECK(is_contractible(chaotic_gset({"a", "b", "c"}, 2)));
  CHECK(is_contractible(terminal_gset(3)));
  CHECK(is_contractible(chaotic_gset({"a"}, 0)));

  Report r = gset_contractible(discrete_gset({"a", "b"}, 1));
  CHECK_FALSE(r.ok);
  CHECK(r.witness == "no 1-cell from a to b");
  CHECK(gset_contractible(empty_gset(2)).witness == "no 0-cells");
  CHECK(gset_contractible(sphere(1)).witness == "no 1-cell from 0 to 0");

  // parallel top-dimensional cells must coincide
  GlobularSet two_loops(1, {{"x"}, {"u", "v"}}, {{0, 0}}, {{0, 0}});
  Report r2 = gset_contractible(two_loops);
  CHECK_FALSE(r2.ok);
  CHECK(r2.witness == "parallel 1-cells u and v are distinct");
}

TEST_CASE("gset json round trip") {
  GlobularSet arrow = arrow_gset();
  nlohmann::json j = gset_to_json(arrow);
  CHECK(j["n"] == 2);
  CHECK(j["cells"][0] == nlohmann::json({"x", "y"}));
  CHECK(j["src"][0] == nlohmann::json({"x"}));  // boundaries serialized by id
  GlobularSet back = gset_from_json(j);
  CHECK(back.size(0) == 2);
  CHECK(back.size(1) == 1);
  CHECK(back.src(1, 0) == back.index_of(0, "x"));
  CHECK(back.tgt(1, 0) == back.index_of(0, "y"));

  CHECK_THROWS_WITH_AS(
      gset_from_json(nlohmann::json::parse(
          R"({"n":1,"cells":[["x"],["u"]],"src":[["z"]],"tgt":[["x"]]})")),
      "gset json: unknown boundary id z", Error);
}

TEST_CASE("make_gmorphism checks commutation with boundaries") {
  auto sp = std::make_shared<GlobularSet>(sphere(1));
  CHECK_NOTHROW(make_gmorphism(sp, sp, {{0, 1}, {0, 1}}));
  CHECK_THROWS_WITH_AS(make_gmorphism(sp, sp, {{1, 0}, {0, 1}}),
                       "gmorphism: does not commute with boundaries at 0", Error);
  CHECK_THROWS_WITH_AS(make_gmorphism(sp, sp, {{0, 1}}),
                       "gmorphism: expected one level per dimension", Error);
  CHECK_THROWS_WITH_AS(make_gmorphism(sp, sp, {{0, 5}, {0, 1}}),
                       "gmorphism: image out of range for 1", Error);
}

TEST_CASE("associated_gset of a 2-diagram") {
  PastingDiagram big = make_pd(2, {line(2), line(1), line(0), line(4)});
  AssociatedGset A = associated_gset(big);
  CHECK(A.gset->size(0) == 5);
  CHECK(A.gset->size(1) == 11);
  CHECK(A.gset->size(2) == 7);
  CHECK(A.gset->id(0, 0) == "v0");
  CHECK(A.gset->id(1, 0) == "0:v0");
  CHECK(A.gset->id(2, 6) == "3:3:v0");
  CHECK(A.column_cell[0][0] == std::vector<int>{0, 1, 2});
  CHECK(A.column_cell[3][1] == std::vector<int>{3, 4, 5, 6});

  // source/target inclusions embed Gl(boundary)
  REQUIRE(A.src_inclusion.has_value());
  REQUIRE(A.tgt_inclusion.has_value());
  CHECK(A.src_inclusion->dom->size(0) == 5);  // Gl(line(4))
  CHECK(A.src_inclusion->dom->size(1) == 4);
  CHECK(A.src_inclusion->map[0] == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("associated_gset of a globe is a ball") {
  for (int m = 0; m <= 4; ++m) {
    AssociatedGset G = associated_gset(globe(m));
    GlobularSet B = ball(m);
    for (int d = 0; d <= m; ++d) CHECK(G.gset->size(d) == B.size(d));
    for (int d = 1; d <= m; ++d)
      for (int i = 0; i < B.size(d); ++i) {
        CHECK(G.gset->src(d, i) == B.src(d, i));
        CHECK(G.gset->tgt(d, i) == B.tgt(d, i));
      }
  }
  AssociatedGset P = associated_gset(point());
  CHECK(P.gset->size(0) == 1);
  CHECK_FALSE(P.src_inclusion.has_value());
}

TEST_CASE("associated_gset column bookkeeping is consistent") {
  for (const PastingDiagram& pd : enumerate_pds(3, 6)) {
    AssociatedGset A = associated_gset(pd);
    CHECK(A.column_cell.size() == pd.children.size());
    std::vector<std::set<int>> seen(pd.dim + 1);
    for (std::size_t i = 0; i < pd.children.size(); ++i) {
      AssociatedGset inner = associated_gset(pd.children[i]);
      REQUIRE(A.column_cell[i].size() == static_cast<std::size_t>(pd.dim));
      for (int d = 0; d < pd.dim; ++d) {
        CHECK(static_cast<int>(A.column_cell[i][d].size()) == inner.gset->size(d));
        for (int idx : A.column_cell[i][d]) CHECK(seen[d + 1].insert(idx).second);
        // suspended boundaries: a suspended d-cell (d >= 1) keeps its column
        for (int j = 0; d >= 1 && j < inner.gset->size(d); ++j) {
          int up = A.column_cell[i][d][j];
          CHECK(A.gset->src(d + 1, up) == A.column_cell[i][d - 1][inner.gset->src(d, j)]);
          CHECK(A.gset->tgt(d + 1, up) == A.column_cell[i][d - 1][inner.gset->tgt(d, j)]);
        }
      }
      // suspended 0-cells span v_i -> v_{i+1}
      for (int up : A.column_cell[i][0]) {
        CHECK(A.gset->src(1, up) == static_cast<int>(i));
        CHECK(A.gset->tgt(1, up) == static_cast<int>(i) + 1);
      }
    }
    // every positive-dimensional cell lies in exactly one column
    for (int d = 1; d <= pd.dim; ++d)
      CHECK(static_cast<int>(seen[d].size()) == A.gset->size(d));
  }
}

TEST_CASE("diagrams enumerates morphisms Gl(pd) -> X") {
  CHECK(diagrams(terminal_gset(1), line(3)).size() == 1);
  CHECK(diagrams(loop_gset(), line(3)).size() == 1);
  CHECK(diagrams(arrow_gset(), line(2)).size() == 0);
  CHECK(diagrams(arrow_gset(), line(1)).size() == 1);

  // deterministic, and each result is a valid morphism onto the right shape
  GlobularSet ch = chaotic_gset({"a", "b"}, 2);
  std::vector<GMorphism> ds = diagrams(ch, parse_pd("dim=2:[[o][]]"));
  CHECK(ds.size() == diagrams(ch, parse_pd("dim=2:[[o][]]")).size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    CHECK(ds[i].cod->size(0) == 2);
    CHECK_NOTHROW(make_gmorphism(ds[i].dom, ds[i].cod, ds[i].map));
  }
  // chaotic target: one morphism per function on 0-cells, lifted uniquely
  // upward; Gl has 3 zero-cells here so 2^3 morphisms
  CHECK(ds.size() == 8);
}

TEST_CASE("gset_pullback") {
  auto sp = std::make_shared<GlobularSet>(sphere(1));
  auto bl = std::make_shared<GlobularSet>(ball(1));
  auto t1 = std::make_shared<GlobularSet>(terminal_gset(1));

  GMorphism idm = make_gmorphism(sp, sp, {{0, 1}, {0, 1}});
  PullbackResult diag = gset_pullback(idm, idm);
  CHECK(diag.apex->size(0) == 2);
  CHECK(diag.apex->size(1) == 2);
  CHECK(diag.apex->id(0, 0) == "(0|0)");

  // over the terminal set the pullback is the product
  PullbackResult prod = gset_pullback(to_terminal(sp, t1), to_terminal(bl, t1));
  CHECK(prod.apex->size(0) == 4);
  CHECK(prod.apex->size(1) == 2);

  // projections commute with boundaries and recover the fiber condition
  GMorphism f = to_terminal(sp, t1), g = to_terminal(bl, t1);
  for (int d = 0; d <= 1; ++d)
    for (int i = 0; i < prod.apex->size(d); ++i)
      CHECK(f.map[d][prod.to_a.map[d][i]] == g.map[d][prod.to_b.map[d][i]]);
  CHECK_NOTHROW(make_gmorphism(prod.apex, sp, prod.to_a.map));
  CHECK_NOTHROW(make_gmorphism(prod.apex, bl, prod.to_b.map));

  // fibers multiply: map both spheres onto the ball's skeleton
  GMorphism collapse = make_gmorphism(sp, bl, {{0, 1}, {0, 0}});
  PullbackResult fib = gset_pullback(collapse, collapse);
  CHECK(fib.apex->size(1) == 4);  // 2 x 2 over the unique 1-cell
}

TEST_CASE("substitute_with_embeddings produces valid embeddings") {
  for (const PastingDiagram& pd : enumerate_pds(2, 5))
    for (int variant = 0; variant < 2; ++variant) {
      SubstLabeling L = oracles::make_labeling(pd, variant);
      SubstResult R = substitute_with_embeddings(pd, L);
      CHECK(R.result == substitute(pd, L));
      AssociatedGset res = associated_gset(R.result);
      for (int d = 0; d <= pd.dim; ++d) {
        REQUIRE(R.embeddings[d].size() == L[d].size());
        for (std::size_t i = 0; i < L[d].size(); ++i) {
          const GMorphism& emb = R.embeddings[d][i];
          CHECK(emb.dom->size(d) == associated_gset(L[d][i]).gset->size(d));
          CHECK_NOTHROW(make_gmorphism(emb.dom, res.gset, emb.map));
        }
      }
    }
}

TEST_CASE("substitution satisfies the monad associativity law") {
  for (const PastingDiagram& pd : enumerate_pds(2, 5)) {
    SubstLabeling L = oracles::make_labeling(pd, 1);
    PastingDiagram mid = substitute(pd, L);
    SubstLabeling M = oracles::make_labeling(mid, 2);
    CHECK(oracles::subst_assoc_holds(pd, L, M));
  }
  for (const PastingDiagram& pd : enumerate_pds(1, 6)) {
    SubstLabeling L = oracles::make_labeling(pd, 0);
    SubstLabeling M = oracles::make_labeling(substitute(pd, L), 1);
    CHECK(oracles::subst_assoc_holds(pd, L, M));
  }
}

TEST_CASE("validate_labeling rejects structural mistakes") {
  PastingDiagram base = parse_pd("dim=2:[[oo]]");
  SubstLabeling good(3);
  good[0] = {point(), point()};
  good[1] = {line(2), line(2), line(2)};
  good[2] = {parse_pd("dim=2:[[o][oo]]"), parse_pd("dim=2:[[o][]]")};
  CHECK_NOTHROW(validate_labeling(base, good));

  SubstLabeling bad = good;
  bad[1][1] = line(1);
  CHECK_THROWS_AS(validate_labeling(base, bad), Error);

  SubstLabeling wrong_dim = good;
  wrong_dim[1][0] = point();
  CHECK_THROWS_AS(validate_labeling(base, wrong_dim), Error);

  SubstLabeling short_level = good;
  short_level[2].pop_back();
  CHECK_THROWS_AS(validate_labeling(base, short_level), Error);
}
