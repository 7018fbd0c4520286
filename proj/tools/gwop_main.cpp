// gwop: command-line front end for pasting diagrams, operad series, the
// induced higher operad Q, enriched-category checks and the interval operad.
// Exit codes: 0 success / property true, 1 property false (witness printed),
// 2 usage or data error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "gwop/enrich.hpp"
#include "gwop/globop.hpp"
#include "gwop/interval.hpp"
#include "gwop/operads.hpp"
#include "gwop/pd.hpp"

using namespace gwop;

namespace {

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    nlohmann::json j;
    in >> j;
    return j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

// 0 on pass (printing `ok` or the pass witness), 1 on fail with the witness
int emit(const Report& r, const std::string& ok = "ok") {
  if (r.ok) {
    std::cout << (r.witness.empty() ? ok : r.witness) << "\n";
    return 0;
  }
  std::cout << r.witness << "\n";
  return 1;
}

SubstLabeling labeling_from_json(const nlohmann::json& j) {
  SubstLabeling labels;
  for (const auto& level : j) {
    std::vector<PastingDiagram> row;
    for (const auto& s : level) row.push_back(parse_pd(s.get<std::string>()));
    labels.push_back(std::move(row));
  }
  return labels;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operad-to-higher-operad compiler and checker"};
  app.require_subcommand(1);

  std::string pd_text, input_path, series_path, operad_path, gset_path;
  int dim = 0, max_vertices = 4, max_arity = -1, budget = 2000, triples = 100;
  int cell_f = -1, cell_g = -1;
  unsigned seed = 0;
  bool as_json = false, lifting = false;

  // ---- pd ----------------------------------------------------------------
  CLI::App* pd_cmd = app.add_subcommand("pd", "pasting diagrams");
  pd_cmd->require_subcommand(1);
  CLI::App* pd_dim = pd_cmd->add_subcommand("dim", "print the dimension");
  pd_dim->add_option("--pd", pd_text, "diagram, e.g. dim=2:[[oo][o]]")->required();
  CLI::App* pd_bound = pd_cmd->add_subcommand("boundary", "print the boundary diagram");
  pd_bound->add_option("--pd", pd_text)->required();
  CLI::App* pd_nodes_cmd = pd_cmd->add_subcommand("nodes", "list nodes (height, arity, path)");
  pd_nodes_cmd->add_option("--pd", pd_text)->required();
  pd_nodes_cmd->add_flag("--json", as_json);
  CLI::App* pd_subst = pd_cmd->add_subcommand("subst", "substitute diagrams into a diagram");
  pd_subst->add_option("--input", input_path, "json {\"pd\":..., \"labels\":[[...],...]}")
      ->required();
  CLI::App* pd_enum = pd_cmd->add_subcommand("enumerate", "list diagrams up to a size bound");
  pd_enum->add_option("--dim", dim)->required();
  pd_enum->add_option("--max-vertices", max_vertices)->required();
  pd_enum->add_flag("--json", as_json);

  // ---- operad ------------------------------------------------------------
  CLI::App* op_cmd = app.add_subcommand("operad", "single operads");
  op_cmd->require_subcommand(1);
  CLI::App* op_check = op_cmd->add_subcommand("check", "unit and associativity laws");
  op_check->add_option("--operad", operad_path, "operad spec json")->required();
  op_check->add_option("--max-arity", max_arity);
  op_check->add_option("--budget", budget, "instance budget before sampling");
  op_check->add_option("--seed", seed);
  CLI::App* op_contr = op_cmd->add_subcommand("contractible", "contractibility of the fibers");
  op_contr->add_option("--operad", operad_path)->required();
  op_contr->add_option("--max-arity", max_arity);

  // ---- q -----------------------------------------------------------------
  CLI::App* q_cmd = app.add_subcommand("q", "the induced higher operad");
  q_cmd->require_subcommand(1);
  CLI::App* q_count_cmd = q_cmd->add_subcommand("count", "number of cells over a diagram");
  q_count_cmd->add_option("--series", series_path, "series json {\"n\":..., \"P\":[...]}")
      ->required();
  q_count_cmd->add_option("--pd", pd_text)->required();
  CLI::App* q_enum = q_cmd->add_subcommand("enumerate", "list the cells over a diagram");
  q_enum->add_option("--series", series_path)->required();
  q_enum->add_option("--pd", pd_text)->required();
  q_enum->add_flag("--json", as_json);
  CLI::App* q_contr = q_cmd->add_subcommand("contractible", "contractibility of the series");
  q_contr->add_option("--series", series_path)->required();
  q_contr->add_flag("--lifting", lifting, "search for fillers instead of the exact test");
  q_contr->add_option("--max-vertices", max_vertices, "shape bound for --lifting");
  CLI::App* q_inter = q_cmd->add_subcommand("interchange", "binary interchange at n = 2");
  q_inter->add_option("--series", series_path)->required();
  q_inter->add_option("--f", cell_f, "first 1-cell of P_1(2); default all pairs");
  q_inter->add_option("--g", cell_g, "second 1-cell of P_1(2)");
  CLI::App* q_apply_cmd = q_cmd->add_subcommand("apply", "free algebra on a globular set");
  q_apply_cmd->add_option("--series", series_path)->required();
  q_apply_cmd->add_option("--gset", gset_path, "globular set json")->required();
  q_apply_cmd->add_option("--max-vertices", max_vertices);
  q_apply_cmd->add_flag("--json", as_json);

  // ---- e -----------------------------------------------------------------
  CLI::App* e_cmd = app.add_subcommand("e", "the interval operad");
  e_cmd->require_subcommand(1);
  CLI::App* e_compose = e_cmd->add_subcommand("compose", "operadic composite of pl maps");
  e_compose->add_option("--input", input_path, "json {\"f\":..., \"gs\":[...]}")->required();
  CLI::App* e_check = e_cmd->add_subcommand("check", "unit and associativity on random maps");
  e_check->add_option("--triples", triples);
  e_check->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (pd_dim->parsed()) {
      std::cout << parse_pd(pd_text).dim << "\n";
    } else if (pd_bound->parsed()) {
      std::cout << print_pd(pd_boundary(parse_pd(pd_text))) << "\n";
    } else if (pd_nodes_cmd->parsed()) {
      std::vector<Node> nodes = pd_nodes(parse_pd(pd_text));
      if (as_json) {
        nlohmann::json out = nlohmann::json::array();
        for (const Node& nd : nodes)
          out.push_back({{"height", nd.height}, {"arity", nd.arity}, {"path", nd.path}});
        std::cout << out.dump() << "\n";
      } else {
        for (const Node& nd : nodes) {
          std::cout << "height=" << nd.height << " arity=" << nd.arity << " path=[";
          for (std::size_t i = 0; i < nd.path.size(); ++i)
            std::cout << (i ? "," : "") << nd.path[i];
          std::cout << "]\n";
        }
      }
    } else if (pd_subst->parsed()) {
      nlohmann::json j = load_json(input_path);
      PastingDiagram base = parse_pd(j.at("pd").get<std::string>());
      SubstLabeling labels = labeling_from_json(j.at("labels"));
      validate_labeling(base, labels);
      std::cout << print_pd(substitute(base, labels)) << "\n";
    } else if (pd_enum->parsed()) {
      std::vector<PastingDiagram> all = enumerate_pds(dim, max_vertices);
      if (as_json) {
        nlohmann::json out = nlohmann::json::array();
        for (const PastingDiagram& p : all) out.push_back(print_pd(p));
        std::cout << out.dump() << "\n";
      } else {
        for (const PastingDiagram& p : all) std::cout << print_pd(p) << "\n";
      }
    } else if (op_check->parsed()) {
      GOperad P = goperad_from_json(load_json(operad_path));
      int cap = max_arity < 0 ? P.max_arity() : max_arity;
      return emit(check_operad_axioms(P, cap, budget, seed));
    } else if (op_contr->parsed()) {
      GOperad P = goperad_from_json(load_json(operad_path));
      int cap = max_arity < 0 ? P.max_arity() : max_arity;
      return emit(operad_contractible(P, cap), "contractible");
    } else if (q_count_cmd->parsed()) {
      OperadSeries S = series_from_json(load_json(series_path));
      std::cout << q_count(S, parse_pd(pd_text)) << "\n";
    } else if (q_enum->parsed()) {
      OperadSeries S = series_from_json(load_json(series_path));
      std::vector<QCell> cells = q_cells(S, parse_pd(pd_text));
      if (as_json) {
        nlohmann::json out = nlohmann::json::array();
        for (const QCell& q : cells) out.push_back(qcell_to_json(S, q));
        std::cout << out.dump() << "\n";
      } else {
        for (const QCell& q : cells) std::cout << qcell_key(S, q) << "\n";
      }
    } else if (q_contr->parsed()) {
      OperadSeries S = series_from_json(load_json(series_path));
      if (lifting) return emit(q_contractible_lifting(S, max_vertices), "contractible");
      for (int i = 0; i < S.n; ++i) {
        Report r = operad_contractible(S.P[i], S.P[i].max_arity());
        if (!r.ok) {
          // name the offending member: "P(0): ..." -> "P_1(0): ..."
          std::cout << "P_" << i << r.witness.substr(1) << "\n";
          return 1;
        }
      }
      std::cout << "contractible\n";
    } else if (q_inter->parsed()) {
      OperadSeries S = series_from_json(load_json(series_path));
      if (cell_f >= 0 || cell_g >= 0) {
        if (cell_f < 0 || cell_g < 0) throw Error("interchange: give both --f and --g");
        return emit(interchange_check(S, cell_f, cell_g));
      }
      const GlobularSet& P2 = S.P.at(1).at(2);
      int pairs = 0;
      for (int f = 0; f < P2.size(1); ++f)
        for (int g = 0; g < P2.size(1); ++g) {
          if (P2.tgt(1, f) != P2.src(1, g)) continue;
          ++pairs;
          Report r = interchange_check(S, f, g);
          if (!r.ok) return emit(r);
        }
      std::cout << "interchange holds for " << pairs << " composable pairs\n";
    } else if (q_apply_cmd->parsed()) {
      OperadSeries S = series_from_json(load_json(series_path));
      GlobularSet X = gset_from_json(load_json(gset_path));
      QApplyResult res = q_apply(S, X, max_vertices);
      if (as_json) {
        std::cout << gset_to_json(res.gset).dump() << "\n";
      } else {
        for (int m = 0; m <= res.gset.truncation(); ++m)
          std::cout << "dim " << m << ": " << res.gset.size(m) << " cells\n";
      }
    } else if (e_compose->parsed()) {
      nlohmann::json j = load_json(input_path);
      PLMap f = plmap_from_json(j.at("f"));
      std::vector<PLMap> gs;
      for (const auto& g : j.at("gs")) gs.push_back(plmap_from_json(g));
      std::cout << plmap_to_json(pl_compose(f, gs)).dump() << "\n";
    } else if (e_check->parsed()) {
      return emit(pl_check_axioms(triples, seed));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
