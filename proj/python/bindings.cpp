// Python surface for the core library.  Structured values (operad series,
// globular sets, Q-cells, pl maps) cross the boundary as JSON strings in the
// same schemas the CLI reads; diagrams use the dim=<m>:<term> text form.

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gwop/enrich.hpp"
#include "gwop/globop.hpp"
#include "gwop/interval.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace gwop;

namespace {

OperadSeries series_of(const std::string& text) {
  return series_from_json(json::parse(text));
}

Which which_of(const std::string& side) {
  if (side == "source") return Which::source;
  if (side == "target") return Which::target;
  throw Error("which: expected 'source' or 'target', got " + side);
}

std::pair<bool, std::string> unpack(const Report& r) { return {r.ok, r.witness}; }

}  // namespace

PYBIND11_MODULE(_gwop, m) {
  m.doc() = "globular operads from series of classical operads";

  py::register_exception<Error>(m, "GwopError", PyExc_ValueError);

  // pasting diagrams
  m.def("pd_dim", [](const std::string& pd) { return parse_pd(pd).dim; });
  m.def("pd_boundary",
        [](const std::string& pd) { return print_pd(pd_boundary(parse_pd(pd))); });
  m.def("pd_vertices", [](const std::string& pd) { return pd_vertices(parse_pd(pd)); });
  m.def("pd_nodes", [](const std::string& pd) {
    std::vector<std::pair<int, int>> out;
    for (const Node& nd : pd_nodes(parse_pd(pd))) out.emplace_back(nd.height, nd.arity);
    return out;
  });
  m.def("enumerate_pds", [](int dim, int max_vertices) {
    std::vector<std::string> out;
    for (const PastingDiagram& pd : enumerate_pds(dim, max_vertices))
      out.push_back(print_pd(pd));
    return out;
  });
  m.def("substitute",
        [](const std::string& pd, const std::vector<std::vector<std::string>>& labels) {
          SubstLabeling L(labels.size());
          for (size_t b = 0; b < labels.size(); ++b)
            for (const std::string& cell : labels[b]) L[b].push_back(parse_pd(cell));
          return print_pd(substitute(parse_pd(pd), L));
        });

  // globular sets (JSON in, JSON out)
  m.def("terminal_gset", [](int n) { return gset_to_json(terminal_gset(n)).dump(); });
  m.def("chaotic_gset", [](const std::vector<std::string>& points, int n) {
    return gset_to_json(chaotic_gset(points, n)).dump();
  });

  // the induced higher operad
  m.def("q_count", [](const std::string& series, const std::string& pd) {
    return q_count(series_of(series), parse_pd(pd));
  });
  m.def("q_cells", [](const std::string& series, const std::string& pd) {
    OperadSeries S = series_of(series);
    std::vector<std::string> out;
    for (const QCell& c : q_cells(S, parse_pd(pd)))
      out.push_back(qcell_to_json(S, c).dump());
    return out;
  });
  m.def("qcell_key", [](const std::string& series, const std::string& cell) {
    OperadSeries S = series_of(series);
    return qcell_key(S, qcell_from_json(S, json::parse(cell)));
  });
  m.def("q_unit", [](const std::string& series, int m) {
    OperadSeries S = series_of(series);
    return qcell_to_json(S, q_unit(S, m)).dump();
  });
  m.def("q_boundary",
        [](const std::string& series, const std::string& cell, const std::string& side) {
          OperadSeries S = series_of(series);
          QCell c = qcell_from_json(S, json::parse(cell));
          return qcell_to_json(S, q_boundary(S, c, which_of(side))).dump();
        });
  m.def("q_contractible",
        [](const std::string& series) { return q_is_contractible_exact(series_of(series)); });
  m.def("q_contractible_lifting", [](const std::string& series, int max_vertices) {
    return unpack(q_contractible_lifting(series_of(series), max_vertices));
  });
  m.def("q_apply", [](const std::string& series, const std::string& gset, int max_vertices) {
    QApplyResult r = q_apply(series_of(series), gset_from_json(json::parse(gset)),
                             max_vertices);
    return gset_to_json(r.gset).dump();
  });
  m.def("interchange", [](const std::string& series, int f, int g) {
    return unpack(interchange_check(series_of(series), f, g));
  });

  // distributive law between the two free-category monads
  m.def("distributive_law", [](const std::string& vgraph, const std::string& operad,
                               bool t_identity, int max_k, int max_len, int max_weight) {
    DistLawBounds bounds{max_k, max_len, max_weight};
    return unpack(check_distributive_law(vgraph_from_json(json::parse(vgraph)),
                                         goperad_from_json(json::parse(operad)),
                                         t_identity, bounds));
  });

  // interval operad
  m.def("pl_compose", [](const std::string& f, const std::vector<std::string>& gs) {
    std::vector<PLMap> maps;
    for (const std::string& g : gs) maps.push_back(plmap_from_json(json::parse(g)));
    return plmap_to_json(pl_compose(plmap_from_json(json::parse(f)), maps)).dump();
  });
  m.def("pl_eval", [](const std::string& f, const std::string& t) {
    return format_rational(pl_eval(plmap_from_json(json::parse(f)), parse_rational(t)));
  });
  m.def("pl_check", [](int triples, unsigned seed) {
    return unpack(pl_check_axioms(triples, seed));
  });
}
