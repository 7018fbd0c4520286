#include "gwop/pd.hpp"

#include <algorithm>
#include <sstream>

namespace gwop {

bool PastingDiagram::operator<(const PastingDiagram& o) const {
  if (dim != o.dim) return dim < o.dim;
  return children < o.children;
}

PastingDiagram point() { return PastingDiagram{0, {}}; }

PastingDiagram line(int arity) {
  if (arity < 0) throw Error("line: negative arity");
  PastingDiagram pd{1, {}};
  pd.children.assign(arity, point());
  return pd;
}

PastingDiagram make_pd(int dim, std::vector<PastingDiagram> children) {
  if (dim < 0) throw Error("make_pd: negative dimension");
  if (dim == 0 && !children.empty()) throw Error("make_pd: the point has no children");
  for (const auto& c : children)
    if (c.dim != dim - 1) throw Error("make_pd: child dimension must be dim-1");
  return PastingDiagram{dim, std::move(children)};
}

PastingDiagram globe(int m) {
  if (m < 0) throw Error("globe: negative dimension");
  PastingDiagram pd = point();
  for (int d = 1; d <= m; ++d) pd = PastingDiagram{d, {pd}};
  return pd;
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("parse_pd: " + msg + " at offset " + std::to_string(pos));
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  int parse_nat() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return std::stoi(text.substr(start, pos - start));
  }

  PastingDiagram parse_term(int dim) {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == 'o') {
      ++pos;
      // `o` above dimension 0 denotes the empty composite there (the
      // degenerate continuation of the branch).
      return PastingDiagram{dim, {}};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (dim != 1) fail("decimal arity is only allowed for dim-1 terms");
      return line(parse_nat());
    }
    if (c != '[') fail("expected 'o', '[' or a dim-1 arity");
    if (dim == 0) fail("declared dim smaller than drawn height");
    ++pos;
    std::vector<PastingDiagram> children;
    while (true) {
      skip_ws();
      if (pos >= text.size()) fail("unterminated '['");
      if (text[pos] == ']') {
        ++pos;
        break;
      }
      children.push_back(parse_term(dim - 1));
    }
    return PastingDiagram{dim, std::move(children)};
  }
};

void print_term(const PastingDiagram& pd, std::ostream& os) {
  if (pd.dim == 0) {
    os << 'o';
    return;
  }
  os << '[';
  for (const auto& c : pd.children) print_term(c, os);
  os << ']';
}

}  // namespace

PastingDiagram parse_pd(const std::string& text) {
  Parser p{text};
  p.skip_ws();
  if (text.compare(p.pos, 4, "dim=") != 0) p.fail("expected 'dim='");
  p.pos += 4;
  int dim = p.parse_nat();
  if (!p.eat(':')) p.fail("expected ':'");
  PastingDiagram pd = p.parse_term(dim);
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return pd;
}

std::string print_pd(const PastingDiagram& pd) {
  std::ostringstream os;
  os << "dim=" << pd.dim << ':';
  print_term(pd, os);
  return os.str();
}

int pd_vertices(const PastingDiagram& pd) {
  int n = 1;
  for (const auto& c : pd.children) n += pd_vertices(c);
  return n;
}

PastingDiagram pd_boundary(const PastingDiagram& pd) {
  if (pd.dim == 0) throw Error("pd_boundary: the point has no boundary");
  if (pd.dim == 1) return point();
  std::vector<PastingDiagram> children;
  children.reserve(pd.children.size());
  for (const auto& c : pd.children) children.push_back(pd_boundary(c));
  return PastingDiagram{pd.dim - 1, std::move(children)};
}

namespace {

void collect_nodes(const PastingDiagram& pd, int height, std::vector<int>& path,
                   std::vector<Node>& out) {
  if (pd.dim == 0) return;
  out.push_back(Node{height, static_cast<int>(pd.children.size()), path});
  for (std::size_t i = 0; i < pd.children.size(); ++i) {
    path.push_back(static_cast<int>(i));
    collect_nodes(pd.children[i], height + 1, path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<Node> pd_nodes(const PastingDiagram& pd) {
  std::vector<Node> out;
  std::vector<int> path;
  collect_nodes(pd, 0, path, out);
  // reorder bottom-up by height, left to right; collection order is
  // depth-first so a stable sort on height gives the canonical order
  std::stable_sort(out.begin(), out.end(),
                   [](const Node& a, const Node& b) { return a.height < b.height; });
  return out;
}

const PastingDiagram& pd_subdiagram(const PastingDiagram& pd, const std::vector<int>& path) {
  const PastingDiagram* cur = &pd;
  for (int i : path) {
    if (i < 0 || i >= static_cast<int>(cur->children.size()))
      throw Error("pd_subdiagram: path out of range");
    cur = &cur->children[i];
  }
  return *cur;
}

namespace {

// Sequences of children drawing at most `budget` vertices, with the first
// child varying fastest within each arity.
void enumerate_tuples(const std::vector<PastingDiagram>& pool, const std::vector<int>& sizes,
                      int k, int budget, std::vector<PastingDiagram>& acc,
                      std::vector<std::vector<PastingDiagram>>& out) {
  if (k == 0) {
    std::vector<PastingDiagram> tuple(acc.rbegin(), acc.rend());
    out.push_back(std::move(tuple));
    return;
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (sizes[i] > budget - (k - 1)) continue;  // remaining slots need one vertex each
    acc.push_back(pool[i]);
    enumerate_tuples(pool, sizes, k - 1, budget - sizes[i], acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<PastingDiagram> enumerate_pds(int dim, int max_vertices) {
  if (dim < 0) throw Error("enumerate_pds: negative dimension");
  if (max_vertices < 1) return {};
  if (dim == 0) return {point()};
  std::vector<PastingDiagram> pool = enumerate_pds(dim - 1, max_vertices - 1);
  std::vector<int> sizes;
  sizes.reserve(pool.size());
  for (const auto& p : pool) sizes.push_back(pd_vertices(p));
  std::vector<PastingDiagram> out;
  for (int k = 0; k <= max_vertices - 1; ++k) {
    std::vector<std::vector<PastingDiagram>> tuples;
    std::vector<PastingDiagram> acc;
    enumerate_tuples(pool, sizes, k, max_vertices - 1, acc, tuples);
    if (k > 0 && tuples.empty()) break;
    for (auto& t : tuples) out.push_back(PastingDiagram{dim, std::move(t)});
  }
  return out;
}

}  // namespace gwop
