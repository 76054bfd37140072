#include "milnorfiber/dualgraph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace mf {

const GraphVertex& DecoratedGraph::vertex(int id) const {
  for (const auto& v : vertices)
    if (v.id == id) return v;
  throw input_error("unknown vertex " + std::to_string(id));
}

GraphVertex& DecoratedGraph::vertex(int id) {
  for (auto& v : vertices)
    if (v.id == id) return v;
  throw input_error("unknown vertex " + std::to_string(id));
}

std::vector<int> DecoratedGraph::neighbors(int id) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges) {
    if (a == id) out.push_back(b);
    if (b == id) out.push_back(a);
  }
  return out;
}

std::vector<std::pair<long, long>> divisor_multiplicities(const ClusterTree& t) {
  std::vector<std::pair<long, long>> ml(t.points.size());
  for (std::size_t i = 0; i < t.points.size(); ++i) {
    long m = t.points[i].strict_mult_f;
    long l = t.points[i].strict_mult_g;
    for (int q : t.points[i].proximate_to) {
      m += ml[q].first;
      l += ml[q].second;
    }
    ml[i] = {m, l};
  }
  return ml;
}

DecoratedGraph to_dual_graph(const ClusterTree& t) {
  DecoratedGraph g;
  auto ml = divisor_multiplicities(t);
  std::vector<int> prox_count(t.points.size(), 0);
  for (const auto& p : t.points)
    for (int q : p.proximate_to) ++prox_count[q];

  for (std::size_t i = 0; i < t.points.size(); ++i) {
    GraphVertex v;
    v.id = static_cast<int>(i);
    v.m = ml[i].first;
    v.l = ml[i].second;
    v.euler = -1 - prox_count[i];
    g.vertices.push_back(v);
  }

  // edge (v,w): w proximate to v and no later point proximate to both
  for (const auto& w : t.points) {
    for (int v : w.proximate_to) {
      bool killed = false;
      for (const auto& u : t.points) {
        if (u.id <= w.id) continue;
        bool hasv = false, hasw = false;
        for (int x : u.proximate_to) {
          if (x == v) hasv = true;
          if (x == w.id) hasw = true;
        }
        if (hasv && hasw) {
          killed = true;
          break;
        }
      }
      if (!killed) g.edges.emplace_back(std::min(v, w.id), std::max(v, w.id));
    }
  }
  std::sort(g.edges.begin(), g.edges.end());

  int fid = 0, gid = 0;
  for (const auto& inst : t.instances) {
    GraphArrow a;
    a.attach = inst.last_point;
    a.alpha = inst.alpha;
    if (inst.germ == 0) {
      a.id = fid++;
      g.f_arrows.push_back(a);
    } else {
      a.id = gid++;
      g.g_arrows.push_back(a);
    }
  }
  return g;
}

DecoratedGraph blowup_free_point(const DecoratedGraph& g, int v) {
  DecoratedGraph r = g;
  const GraphVertex& old = r.vertex(v);  // throws for unknown vertex
  GraphVertex nv;
  nv.id = 0;
  for (const auto& w : r.vertices) nv.id = std::max(nv.id, w.id + 1);
  nv.m = old.m;
  nv.l = old.l;
  nv.euler = -1;
  r.vertex(v).euler -= 1;
  r.vertices.push_back(nv);
  r.edges.emplace_back(std::min(v, nv.id), std::max(v, nv.id));
  std::sort(r.edges.begin(), r.edges.end());
  return r;
}

bool total_transform_vanishing(const DecoratedGraph& g, std::string* detail) {
  for (const auto& v : g.vertices) {
    long sm = v.euler * v.m, sl = v.euler * v.l;
    for (int w : g.neighbors(v.id)) {
      sm += g.vertex(w).m;
      sl += g.vertex(w).l;
    }
    for (const auto& a : g.f_arrows)
      if (a.attach == v.id) sm += a.alpha;
    for (const auto& a : g.g_arrows)
      if (a.attach == v.id) sl += a.alpha;
    if (sm != 0 || sl != 0) {
      if (detail)
        *detail = "vertex " + std::to_string(v.id) + ": residual (" + std::to_string(sm) +
                  ", " + std::to_string(sl) + ")";
      return false;
    }
  }
  return true;
}

namespace {

std::vector<std::vector<Int>> intersection_matrix(const DecoratedGraph& g) {
  std::size_t n = g.vertices.size();
  std::vector<std::vector<Int>> M(n, std::vector<Int>(n, Int(0)));
  std::vector<int> ids;
  for (const auto& v : g.vertices) ids.push_back(v.id);
  auto idx = [&ids](int id) {
    return std::distance(ids.begin(), std::find(ids.begin(), ids.end(), id));
  };
  for (std::size_t i = 0; i < n; ++i) M[i][i] = g.vertices[i].euler;
  for (const auto& [a, b] : g.edges) {
    auto i = idx(a), j = idx(b);
    M[i][j] += 1;
    M[j][i] += 1;
  }
  return M;
}

}  // namespace

Int intersection_determinant(const DecoratedGraph& g) {
  auto M = intersection_matrix(g);
  std::size_t n = M.size();
  // Bareiss fraction-free elimination
  Int prev(1);
  long sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && M[p][k] == 0) ++p;
      if (p == n) return Int(0);
      std::swap(M[p], M[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
    prev = M[k][k];
  }
  return n == 0 ? Int(1) : Int(sign) * M[n - 1][n - 1];
}

bool negative_definite(const DecoratedGraph& g) {
  auto M = intersection_matrix(g);
  std::size_t n = M.size();
  std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = Rat(M[i][j]);
  // -M must be positive definite: Cholesky-style pivots all positive
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = -A[i][j];
  for (std::size_t k = 0; k < n; ++k) {
    if (!(A[k][k] > 0)) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rat f = A[i][k] / A[k][k];
      for (std::size_t j = k; j < n; ++j) A[i][j] -= f * A[k][j];
    }
  }
  return true;
}

bool is_tree(const DecoratedGraph& g) {
  if (g.vertices.empty()) return false;
  if (g.edges.size() + 1 != g.vertices.size()) return false;
  // connectivity
  std::set<int> seen;
  std::vector<int> stack = {g.vertices[0].id};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (!seen.insert(v).second) continue;
    for (int w : g.neighbors(v)) stack.push_back(w);
  }
  return seen.size() == g.vertices.size();
}

void validate_graph(const DecoratedGraph& g) {
  if (g.vertices.empty()) throw input_error("graph has no vertices");
  std::set<int> ids;
  for (const auto& v : g.vertices) {
    if (!ids.insert(v.id).second) throw input_error("duplicate vertex id");
    if (v.euler >= 0) throw input_error("Euler numbers must be negative");
    if (v.m < 0 || v.l < 0) throw input_error("multiplicities must be non-negative");
  }
  for (const auto& [a, b] : g.edges) {
    if (!ids.count(a) || !ids.count(b)) throw input_error("edge references unknown vertex");
    if (a == b) throw input_error("self-loop edge");
  }
  for (const auto& a : g.f_arrows)
    if (!ids.count(a.attach)) throw input_error("f-arrow attaches to unknown vertex");
  for (const auto& a : g.g_arrows)
    if (!ids.count(a.attach)) throw input_error("g-arrow attaches to unknown vertex");
  if (g.f_arrows.empty()) throw input_error("graph has no f-arrows");
  if (!is_tree(g)) throw input_error("graph is not a tree");
  std::string detail;
  if (!total_transform_vanishing(g, &detail))
    throw input_error("total transform does not vanish: " + detail);
  Int det = intersection_determinant(g);
  if (det != 1 && det != -1) throw input_error("intersection determinant is not +-1");
  if (!negative_definite(g)) throw input_error("intersection matrix is not negative definite");
}

}  // namespace mf
