#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <utility>
#include <vector>

#include "gwop/util.hpp"

namespace gwop {

using Rational = boost::multiprecision::cpp_rational;

Rational parse_rational(const std::string& text);  // "p" or "p/q"
std::string format_rational(const Rational& q);

// An element of E(k): an endpoint-preserving piecewise-linear map
// [0,1] -> [0,k] with rational breakpoints, linear in between.  Monotonicity
// is not required.  Values are kept in canonical form (no collinear interior
// breakpoints), so structural equality decides equality of maps.
struct PLMap {
  int k = 0;
  std::vector<std::pair<Rational, Rational>> pts;  // (t, value), t strictly increasing

  bool operator==(const PLMap&) const = default;
};

// Validates endpoints/range and merges collinear segments.
PLMap make_plmap(int k, std::vector<std::pair<Rational, Rational>> pts);
PLMap pl_identity();  // the unit of E, the identity in E(1)

Rational pl_eval(const PLMap& f, const Rational& t);

// operadic composition: h(t) = k_1+...+k_{j-1} + g_j(f(t) - (j-1)) whenever
// f(t) lies in [j-1, j]; exact breakpoints from integer crossings of f and
// preimages of the g_j breakpoints
PLMap pl_compose(const PLMap& f, const std::vector<PLMap>& gs);

// seeded random maps + unit/associativity checks as canonical-form equalities
Report pl_check_axioms(int triples, unsigned seed);

nlohmann::json plmap_to_json(const PLMap& f);
PLMap plmap_from_json(const nlohmann::json& j);

}  // namespace gwop
