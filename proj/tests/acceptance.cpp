// Acceptance suite: one pass/fail line per criterion, exit status counts
// the failures.  Each criterion is exact (no tolerances); the enumeration
// bounds used below are pinned here as constants.

#include <cstdio>
#include <nlohmann/json.hpp>
#include <functional>
#include <string>
#include <vector>

#include "gwop/globop.hpp"
#include "gwop/interval.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gwop;
using namespace fixtures;

namespace {

constexpr int kLiftingBound = 6;       // pd vertex cap for contractibility search
constexpr int kCollapseBound = 8;      // pd vertex cap for the terminal-collapse sweep
constexpr int kMonadBound = 6;         // pd vertex cap for substitution laws
constexpr int kGlobularityBound = 6;   // pd vertex cap for q_boundary globularity
constexpr int kRoundTripMinimum = 20;  // seeded enriched-category instances
constexpr int kPLTriples = 100;        // seeded interval-operad triples
constexpr unsigned kPLSeed = 7;

Report fail(const std::string& witness) { return {false, witness}; }
Report pass() { return {true, ""}; }

// criterion 1: the fiber over the running diagram [2,1,0,4] factors as
// P_{n-1}(4)_1 x P_{n-2}(2)_0 x P_{n-2}(1)_0 x P_{n-2}(0)_0 x P_{n-2}(4)_0
Report criterion_intro_formula() {
  PastingDiagram big = make_pd(2, {line(2), line(1), line(0), line(4)});
  struct Entry {
    std::string name;
    OperadSeries S;
  };
  std::vector<Entry> batch;
  batch.push_back({"chaotic cyclic(2) n=2", chaotic_cy2_series(2)});
  batch.push_back({"discrete magma n=2", one_kind_series(2, "discrete_magma")});
  batch.push_back({"terminal n=2", terminal_series(2)});
  batch.push_back({"chaotic cyclic(2) n=3", chaotic_cy2_series(3)});
  batch.push_back({"chaotic cyclic(3) n=3", cyclic_series(3, 3, true)});
  for (const Entry& e : batch) {
    int n = e.S.n;
    long long want = e.S.P[n - 1].at(4).size(1);
    for (int k : {2, 1, 0, 4}) want *= e.S.P[n - 2].at(k).size(0);
    long long got = q_count(e.S, big);
    if (got != want)
      return fail(e.name + ": count " + std::to_string(got) + " != product " +
                  std::to_string(want));
  }
  OperadSeries S = chaotic_cy2_series(2);
  if (q_count(S, big) != 4) return fail("chaotic cyclic(2) n=2: count != 4");
  std::vector<QCell> cells = q_cells(S, big);
  if (qcell_key(S, cells[0]) !=
      "dim=2:[[oo][o][][oooo]]{h0a4:(0>0);h1a2:*;h1a1:*;h1a0:*;h1a4:*}")
    return fail("unexpected first cell " + qcell_key(S, cells[0]));
  return pass();
}

// criterion 2: the exact contractibility criterion agrees with the
// sphere-vs-ball lifting search on a battery of series
Report criterion_contractibility() {
  struct Entry {
    std::string name;
    OperadSeries S;
    bool expected;
  };
  std::vector<Entry> battery;
  battery.push_back({"terminal n=1", terminal_series(1), true});
  battery.push_back({"terminal n=2", terminal_series(2), true});
  battery.push_back({"terminal n=3", terminal_series(3), true});
  battery.push_back({"chaotic cyclic(2) n=2", cyclic_series(2, 2, true), true});
  battery.push_back({"chaotic cyclic(3) n=2", cyclic_series(2, 3, true), true});
  battery.push_back({"chaotic cyclic(2) n=3", cyclic_series(3, 2, true), true});
  battery.push_back({"chaotic cyclic(3) n=3", cyclic_series(3, 3, true), true});
  battery.push_back({"discrete cyclic(2) n=2", cyclic_series(2, 2, false), false});
  battery.push_back({"chaotic magma n=2", one_kind_series(2, "chaotic_magma"), false});
  battery.push_back({"discrete magma n=2", one_kind_series(2, "discrete_magma"), false});
  battery.push_back({"delooped cyclic(2) n=2", one_kind_series(2, "delooped"), false});
  for (const Entry& e : battery) {
    bool exact = q_is_contractible_exact(e.S);
    bool lifting = q_is_contractible_lifting(e.S, kLiftingBound);
    if (exact != e.expected)
      return fail(e.name + ": exact criterion reports " + (exact ? "true" : "false"));
    if (lifting != exact) return fail(e.name + ": lifting search disagrees with exact");
  }
  return pass();
}

// criterion 3: all-terminal series collapse every fiber to a point and
// q_apply reproduces the strict free-category counts from the fc oracle
Report criterion_terminal_collapse() {
  for (int n = 1; n <= 3; ++n) {
    OperadSeries T = terminal_series(n, kCollapseBound);
    for (int d = 0; d <= n; ++d)
      for (const PastingDiagram& pd : enumerate_pds(d, kCollapseBound))
        if (q_count(T, pd) != 1)
          return fail("terminal n=" + std::to_string(n) + ": fiber over " + print_pd(pd) +
                      " has size " + std::to_string(q_count(T, pd)));
  }
  OperadSeries T1 = terminal_series(1, kCollapseBound),
               T2 = terminal_series(2, kCollapseBound);
  GlobularSet loop = loop_gset();
  for (int bound = 1; bound <= kCollapseBound; ++bound) {
    long long got = q_apply(T1, loop, bound).gset.size(1);
    long long want = oracles::free_counts(loop, bound)[1];
    if (got != want)
      return fail("loop at bound " + std::to_string(bound) + ": " + std::to_string(got) +
                  " != " + std::to_string(want));
  }
  for (const GlobularSet& X : {arrow_gset(), twocell_gset()})
    for (int bound = 1; bound <= kCollapseBound; ++bound) {
      QApplyResult got = q_apply(T2, X, bound);
      std::vector<long long> want = oracles::free_counts(X, bound);
      for (int d = 0; d <= 2; ++d)
        if (got.gset.size(d) != want[d])
          return fail("free counts differ at dimension " + std::to_string(d) +
                      ", bound " + std::to_string(bound) + ": " +
                      std::to_string(got.gset.size(d)) + " != " + std::to_string(want[d]));
    }
  return pass();
}

// criterion 4: substitution satisfies the monad unit/associativity laws and
// matches the independent column-counting oracle in dimension 2
Report criterion_substitution_monad() {
  for (int d = 1; d <= 2; ++d)
    for (const PastingDiagram& pd : enumerate_pds(d, kMonadBound)) {
      if (substitute(pd, oracles::globe_labeling(pd)) != pd)
        return fail("right unit fails over " + print_pd(pd));
      SubstLabeling into_globe(d + 1);
      PastingDiagram b = pd;
      for (int lev = d; lev >= 0; --lev) {
        into_globe[lev].assign(lev == d ? 1 : 2, b);
        if (lev > 0) b = pd_boundary(b);
      }
      if (substitute(globe(d), into_globe) != pd)
        return fail("left unit fails over " + print_pd(pd));
      for (int variant = 0; variant < 3; ++variant) {
        SubstLabeling L = oracles::make_labeling(pd, variant);
        SubstLabeling M = oracles::make_labeling(substitute(pd, L), (variant + 1) % 3);
        if (!oracles::subst_assoc_holds(pd, L, M))
          return fail("associativity fails over " + print_pd(pd) + " variant " +
                      std::to_string(variant));
        if (d == 2 && oracles::subst2_columns(pd, L) != oracles::cols(substitute(pd, L)))
          return fail("column oracle disagrees over " + print_pd(pd) + " variant " +
                      std::to_string(variant));
      }
    }
  return pass();
}

// criterion 5: decomposing an enriched category through the suspension and
// rebuilding it is the identity on >= 20 instances
Report criterion_round_trips() {
  std::vector<std::pair<std::string, VPCategory>> batch;
  for (int r = 1; r <= 12; ++r)
    batch.emplace_back("Z_" + std::to_string(r) + " max_k=2", zr_category(r, 2));
  for (int r = 1; r <= 5; ++r)
    batch.emplace_back("Z_" + std::to_string(r) + " max_k=3", zr_category(r, 3));
  for (int r = 1; r <= 2; ++r)
    batch.emplace_back("Z_" + std::to_string(r) + " max_k=4", zr_category(r, 4));
  batch.emplace_back("xor category", xor_category());
  batch.emplace_back("two-object chain", two_object_chain_category());
  if (static_cast<int>(batch.size()) < kRoundTripMinimum)
    return fail("only " + std::to_string(batch.size()) + " instances");
  for (const auto& [name, A] : batch) {
    Report r = vp_roundtrip(A);
    if (!r.ok) return fail(name + ": " + r.witness);
  }
  return pass();
}

// criterion 6: the four distributive-law axioms hold elementwise on every
// formal element within the bounds, over graphs with up to three objects
Report criterion_distributive_law() {
  DistLawBounds bounds{3, 3, 3};
  struct Entry {
    std::string name;
    VGraph A;
    GOperad P;
    bool t_identity;
  };
  std::vector<Entry> batch;
  batch.push_back({"loop / terminal", loop_graph(chaotic_gset({"0", "1"}, 1)),
                   GOperad::terminal(1, 9), false});
  batch.push_back({"loop / terminal / identity cells",
                   loop_graph(chaotic_gset({"0", "1"}, 1)), GOperad::terminal(1, 9), true});
  batch.push_back({"loop / delooped cyclic(2)", loop_graph(chaotic_gset({"0", "1"}, 1)),
                   GOperad::delooped_cyclic(2, 9), false});
  batch.push_back({"chain / terminal", chain_graph(1), GOperad::terminal(1, 9), false});
  batch.push_back({"chain / delooped cyclic(2)", chain_graph(1),
                   GOperad::delooped_cyclic(2, 9), true});
  for (const Entry& e : batch) {
    Report r = check_distributive_law(e.A, e.P, e.t_identity, bounds);
    if (!r.ok) return fail(e.name + ": " + r.witness);
  }
  return pass();
}

// criterion 7: parametrised interchange holds for every composable pair of
// parameters, with both sides equal to the categorical composite
Report criterion_interchange() {
  OperadSeries S = chaotic_cy2_series(2);
  const GOperad& P = S.P[1];
  const GlobularSet& P2 = P.at(2);
  int pairs = 0;
  for (int f = 0; f < P2.size(1); ++f)
    for (int g = 0; g < P2.size(1); ++g) {
      if (P2.tgt(1, f) != P2.src(1, g)) continue;
      Report r = interchange_check(S, f, g);
      if (!r.ok)
        return fail("pair (" + std::to_string(f) + "," + std::to_string(g) + "): " +
                    r.witness);
      std::string want = "both sides equal dim=2:[[oo][oo]]{h0a2:" +
                         P2.id(1, P.vcompose(2, f, g)) + ";h1a2:*;h1a2:*}";
      if (r.witness != want)
        return fail("pair (" + std::to_string(f) + "," + std::to_string(g) +
                    ") is not the composite: " + r.witness);
      ++pairs;
    }
  if (pairs != 8) return fail("expected 8 composable pairs, found " + std::to_string(pairs));
  OperadSeries T = terminal_series(2);
  Report t = interchange_check(T, 0, 0);
  if (!t.ok || t.witness != "both sides equal dim=2:[[oo][oo]]{h0a2:*;h1a2:*;h1a2:*}")
    return fail("terminal series: " + t.witness);
  return pass();
}

// criterion 8: interval-operad axioms on seeded triples, plus the worked
// composite of f linear onto [0,2] with g1 = 3t and g2 = 0
Report criterion_interval() {
  Report ax = pl_check_axioms(kPLTriples, kPLSeed);
  if (!ax.ok) return fail(ax.witness);
  PLMap f = make_plmap(2, {{Rational(0), Rational(0)}, {Rational(1), Rational(2)}});
  PLMap g1 = make_plmap(3, {{Rational(0), Rational(0)}, {Rational(1), Rational(3)}});
  PLMap g2 = make_plmap(0, {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}});
  PLMap got = pl_compose(f, {g1, g2});
  PLMap want = make_plmap(3, {{Rational(0), Rational(0)},
                              {parse_rational("1/2"), Rational(3)},
                              {Rational(1), Rational(3)}});
  if (!(got == want)) return fail("worked composite is " + plmap_to_json(got).dump());
  return pass();
}

// criterion 9: ss = st and ts = tt for q_boundary on every enumerated cell
// and for every globular set constructed along the way
Report criterion_globularity() {
  for (const OperadSeries& S : {terminal_series(3), chaotic_cy2_series(3)})
    for (int d = 2; d <= 3; ++d)
      for (const PastingDiagram& pd : enumerate_pds(d, kGlobularityBound))
        for (const QCell& c : q_cells(S, pd)) {
          QCell s = q_boundary(S, c, Which::source);
          QCell t = q_boundary(S, c, Which::target);
          if (!(q_boundary(S, s, Which::source) == q_boundary(S, t, Which::source)) ||
              !(q_boundary(S, s, Which::target) == q_boundary(S, t, Which::target)))
            return fail("q_boundary globularity fails over " + print_pd(pd));
        }
  std::vector<GlobularSet> constructed;
  for (int m = 0; m <= 3; ++m) {
    constructed.push_back(sphere(m));
    constructed.push_back(ball(m));
  }
  constructed.push_back(terminal_gset(3));
  constructed.push_back(empty_gset(2));
  constructed.push_back(chaotic_gset({"a", "b", "c"}, 2));
  constructed.push_back(discrete_gset({"p", "q"}, 2));
  for (int d = 0; d <= 3; ++d)
    for (const PastingDiagram& pd : enumerate_pds(d, kGlobularityBound))
      constructed.push_back(*associated_gset(pd).gset);
  constructed.push_back(q_apply(terminal_series(2), arrow_gset(), 5).gset);
  constructed.push_back(q_apply(chaotic_cy2_series(2), twocell_gset(), 4).gset);
  for (const GlobularSet& G : constructed)
    for (int m = 2; m <= G.truncation(); ++m)
      for (int i = 0; i < G.size(m); ++i) {
        int s = G.src(m, i), t = G.tgt(m, i);
        if (G.src(m - 1, s) != G.src(m - 1, t) || G.tgt(m - 1, s) != G.tgt(m - 1, t))
          return fail("globularity fails in a constructed set at dimension " +
                      std::to_string(m) + ", cell " + G.id(m, i));
      }
  return pass();
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<Report()> run;
  };
  std::vector<Criterion> criteria = {
      {"intro factorisation formula", criterion_intro_formula},
      {"contractibility: exact vs lifting", criterion_contractibility},
      {"terminal collapse to strict free categories", criterion_terminal_collapse},
      {"substitution monad laws and column oracle", criterion_substitution_monad},
      {"enriched category round trips", criterion_round_trips},
      {"distributive law axioms", criterion_distributive_law},
      {"parametrised interchange", criterion_interchange},
      {"interval operad composite", criterion_interval},
      {"globularity everywhere", criterion_globularity},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Report r;
    try {
      r = criteria[i].run();
    } catch (const std::exception& e) {
      r = fail(std::string("exception: ") + e.what());
    }
    if (r.ok) {
      std::printf("PASS criterion %zu: %s\n", i + 1, criteria[i].name.c_str());
    } else {
      std::printf("FAIL criterion %zu: %s -- %s\n", i + 1, criteria[i].name.c_str(),
                  r.witness.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  return failures;
}
