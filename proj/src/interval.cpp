#include "gwop/interval.hpp"

#include <algorithm>
#include <cctype>
#include <nlohmann/json.hpp>
#include <random>

namespace gwop {

using boost::multiprecision::cpp_int;

namespace {

bool is_integer_text(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  std::string num_text = text.substr(0, slash);
  if (!is_integer_text(num_text) ||
      (slash != std::string::npos && !is_integer_text(text.substr(slash + 1))))
    throw Error("rational: cannot parse " + text);
  if (slash == std::string::npos) return Rational(cpp_int(num_text));
  cpp_int num(num_text), den(text.substr(slash + 1));
  if (den == 0) throw Error("rational: zero denominator in " + text);
  return Rational(num, den);
}

std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

PLMap make_plmap(int k, std::vector<std::pair<Rational, Rational>> pts) {
  if (k < 0) throw Error("plmap: negative codomain");
  if (pts.size() < 2) throw Error("plmap: need at least the two endpoints");
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (!(pts[i - 1].first < pts[i].first))
      throw Error("plmap: breakpoints must be strictly increasing");
  if (pts.front().first != 0 || pts.back().first != 1)
    throw Error("plmap: domain must be [0,1]");
  if (pts.front().second != 0 || pts.back().second != Rational(k))
    throw Error("plmap: map must preserve endpoints 0 and " + std::to_string(k));
  for (const auto& [t, v] : pts)
    if (v < 0 || v > Rational(k)) throw Error("plmap: value out of [0," + std::to_string(k) + "]");
  // canonical form: drop interior points collinear with their neighbours
  std::vector<std::pair<Rational, Rational>> canon;
  canon.push_back(pts[0]);
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const auto& [t0, v0] = canon.back();
    const auto& [t1, v1] = pts[i];
    const auto& [t2, v2] = pts[i + 1];
    if ((v1 - v0) * (t2 - t0) == (v2 - v0) * (t1 - t0)) continue;
    canon.push_back(pts[i]);
  }
  canon.push_back(pts.back());
  PLMap f;
  f.k = k;
  f.pts = std::move(canon);
  return f;
}

PLMap pl_identity() { return make_plmap(1, {{0, 0}, {1, 1}}); }

Rational pl_eval(const PLMap& f, const Rational& t) {
  if (t < 0 || t > 1) throw Error("pl_eval: argument out of [0,1]");
  for (std::size_t i = 0; i + 1 < f.pts.size(); ++i) {
    const auto& [t0, v0] = f.pts[i];
    const auto& [t1, v1] = f.pts[i + 1];
    if (t <= t1) return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
  }
  return f.pts.back().second;
}

PLMap pl_compose(const PLMap& f, const std::vector<PLMap>& gs) {
  if (static_cast<int>(gs.size()) != f.k) throw Error("pl_compose: arity mismatch");
  std::vector<int> off{0};
  for (const auto& g : gs) off.push_back(off.back() + g.k);

  // subdivision: f's breakpoints, parameters where f crosses an integer
  // level, and preimages of the inner breakpoints of the g_j
  std::vector<Rational> grid;
  std::vector<Rational> levels;
  for (int l = 0; l <= f.k; ++l) levels.emplace_back(l);
  for (int j = 0; j < f.k; ++j)
    for (std::size_t i = 1; i + 1 < gs[j].pts.size(); ++i)
      levels.push_back(Rational(j) + gs[j].pts[i].first);
  for (std::size_t i = 0; i + 1 < f.pts.size(); ++i) {
    const auto& [t0, v0] = f.pts[i];
    const auto& [t1, v1] = f.pts[i + 1];
    grid.push_back(t0);
    if (v0 == v1) continue;
    for (const Rational& l : levels) {
      if ((l - v0) * (l - v1) > 0) continue;  // level not hit on this segment
      grid.push_back(t0 + (l - v0) * (t1 - t0) / (v1 - v0));
    }
  }
  grid.push_back(1);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<std::pair<Rational, Rational>> pts;
  for (const Rational& t : grid) {
    Rational fv = pl_eval(f, t);
    Rational h;
    if (denominator(fv) == 1) {
      // integer level: both adjacent cells give the prefix sum (g(0)=0,
      // g(1)=k make them agree)
      h = off[static_cast<int>(numerator(fv))];
    } else {
      int c = static_cast<int>(numerator(fv) / denominator(fv));
      h = Rational(off[c]) + pl_eval(gs[c], fv - c);
    }
    pts.emplace_back(t, h);
  }
  return make_plmap(off.back(), std::move(pts));
}

namespace {

// random endpoint-preserving PL map with small denominators
PLMap random_plmap(std::mt19937& rng, int k) {
  int inner = std::uniform_int_distribution<int>(0, 3)(rng);
  std::vector<Rational> ts{0, 1};
  while (static_cast<int>(ts.size()) < inner + 2) {
    int den = std::uniform_int_distribution<int>(2, 8)(rng);
    int num = std::uniform_int_distribution<int>(1, den - 1)(rng);
    Rational t(num, den);
    if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end());
  std::vector<std::pair<Rational, Rational>> pts;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    Rational v;
    if (i == 0)
      v = 0;
    else if (i + 1 == ts.size())
      v = k;
    else {
      int den = std::uniform_int_distribution<int>(1, 6)(rng);
      int num = std::uniform_int_distribution<int>(0, k * den)(rng);
      v = Rational(num, den);
    }
    pts.emplace_back(ts[i], v);
  }
  return make_plmap(k, std::move(pts));
}

}  // namespace

Report pl_check_axioms(int triples, unsigned seed) {
  std::mt19937 rng(seed);
  for (int trial = 0; trial < triples; ++trial) {
    int m = std::uniform_int_distribution<int>(0, 3)(rng);
    PLMap f = random_plmap(rng, m);
    std::vector<PLMap> gs, units;
    std::vector<std::vector<PLMap>> hs;
    for (int j = 0; j < m; ++j) {
      int kj = std::uniform_int_distribution<int>(0, 3)(rng);
      gs.push_back(random_plmap(rng, kj));
      units.push_back(pl_identity());
      std::vector<PLMap> row;
      for (int i = 0; i < kj; ++i)
        row.push_back(random_plmap(rng, std::uniform_int_distribution<int>(0, 2)(rng)));
      hs.push_back(std::move(row));
    }

    if (!(pl_compose(f, units) == f))
      return Report::fail("unit law gamma(f;id..id) failed at trial " + std::to_string(trial));
    if (m == 1 && !(pl_compose(pl_identity(), {f}) == f))
      return Report::fail("unit law gamma(id;f) failed at trial " + std::to_string(trial));

    // associativity: compose(compose(f,gs), flatten(hs)) vs
    // compose(f, [compose(g_j, hs_j)])
    std::vector<PLMap> flat;
    for (const auto& row : hs) flat.insert(flat.end(), row.begin(), row.end());
    PLMap lhs = pl_compose(pl_compose(f, gs), flat);
    std::vector<PLMap> inner;
    for (int j = 0; j < m; ++j) inner.push_back(pl_compose(gs[j], hs[j]));
    PLMap rhs = pl_compose(f, inner);
    if (!(lhs == rhs))
      return Report::fail("associativity failed at trial " + std::to_string(trial) + ": " +
                          format_rational(lhs.pts[1].first) + " breakpoint mismatch");

    // range invariants at the breakpoints (sufficient for PL maps)
    for (const auto& [t, v] : lhs.pts)
      if (v < 0 || v > Rational(lhs.k))
        return Report::fail("range violated at trial " + std::to_string(trial));
  }
  return Report{true, std::to_string(triples) + " seeded triples"};
}

nlohmann::json plmap_to_json(const PLMap& f) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& [t, v] : f.pts)
    pts.push_back(nlohmann::json::array({format_rational(t), format_rational(v)}));
  return nlohmann::json{{"k", f.k}, {"pts", std::move(pts)}};
}

PLMap plmap_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("pts"))
    throw Error("plmap json: expected {\"k\":..., \"pts\":[...]}");
  std::vector<std::pair<Rational, Rational>> pts;
  for (const auto& p : j.at("pts"))
    pts.emplace_back(parse_rational(p.at(0).get<std::string>()),
                     parse_rational(p.at(1).get<std::string>()));
  return make_plmap(j.at("k").get<int>(), std::move(pts));
}

}  // namespace gwop
