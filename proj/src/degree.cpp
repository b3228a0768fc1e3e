#include "anota/degree.hpp"

#include <algorithm>
#include <optional>

namespace anota {

namespace {

struct Weight {
  Rational c;
  long strict = 0;  // negated count of strict edges, so lexicographic min is tightest

  Weight operator+(const Weight& o) const { return {c + o.c, strict + o.strict}; }
  bool operator<(const Weight& o) const {
    if (c != o.c) return c < o.c;
    return strict < o.strict;
  }
};

struct Edge {
  int from, to;
  Weight w;
  size_t src;
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) {
    for (size_t i = 0; i < n; ++i) parent[i] = (int)i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool cmp_holds(CmpOp op, const Rational& l, const Rational& r) {
  switch (op) {
    case CmpOp::Gt: return l > r;
    case CmpOp::Ge: return l >= r;
    case CmpOp::Lt: return l < r;
    case CmpOp::Le: return l <= r;
    case CmpOp::Eq: return l == r;
  }
  return false;
}

}  // namespace

bool model_satisfies(const DegreeModel& m, const std::vector<DegConstraint>& cs) {
  auto value = [&](const DegSide& s) -> std::optional<Rational> {
    if (s.atom.empty()) return s.offset;
    auto it = m.values.find(s.atom);
    if (it == m.values.end()) return std::nullopt;
    return it->second + s.offset;
  };
  for (const DegConstraint& c : cs) {
    auto l = value(c.lhs), r = value(c.rhs);
    if (!l || !r) return false;
    if (!cmp_holds(c.op, *l, *r)) return false;
  }
  return true;
}

DegreeResult check_constraints(const std::vector<DegConstraint>& cs, const IntegralFn& integral) {
  // atom indexing
  std::map<std::string, int> atom_id;
  std::vector<std::string> atoms;
  auto intern = [&](const std::string& a) {
    auto it = atom_id.find(a);
    if (it != atom_id.end()) return it->second;
    int id = (int)atoms.size();
    atom_id[a] = id;
    atoms.push_back(a);
    return id;
  };
  for (const DegConstraint& c : cs) {
    if (!c.lhs.atom.empty()) intern(c.lhs.atom);
    if (!c.rhs.atom.empty()) intern(c.rhs.atom);
  }

  // connected components over atoms; literal-touching constraints anchor the
  // component to its origin, so dims flow through literals as well
  UnionFind uf(atoms.size());
  for (const DegConstraint& c : cs) {
    if (!c.lhs.atom.empty() && !c.rhs.atom.empty())
      uf.unite(atom_id[c.lhs.atom], atom_id[c.rhs.atom]);
  }
  std::map<int, std::string> comp_dim;
  auto meld_dim = [&](int root, const std::string& dim, const std::string& what) {
    if (dim.empty()) return;
    auto it = comp_dim.find(root);
    if (it == comp_dim.end()) {
      comp_dim[root] = dim;
    } else if (it->second != dim) {
      throw MixedDimensionError(it->second, dim + " (" + what + ")");
    }
  };
  for (const DegConstraint& c : cs) {
    int root = -1;
    if (!c.lhs.atom.empty()) root = uf.find(atom_id[c.lhs.atom]);
    else if (!c.rhs.atom.empty()) root = uf.find(atom_id[c.rhs.atom]);
    if (root < 0) {
      // literal-only: dims must agree when both given
      if (!c.lhs.dim.empty() && !c.rhs.dim.empty() && c.lhs.dim != c.rhs.dim)
        throw MixedDimensionError(c.lhs.dim, c.rhs.dim);
      continue;
    }
    meld_dim(root, c.lhs.dim, c.lhs.atom.empty() ? "literal" : c.lhs.atom);
    meld_dim(root, c.rhs.dim, c.rhs.atom.empty() ? "literal" : c.rhs.atom);
  }

  // nodes: atoms, then one origin per component root
  int n_nodes = (int)atoms.size();
  std::map<int, int> origin_of_root;
  auto origin_node = [&](int root) {
    auto it = origin_of_root.find(root);
    if (it != origin_of_root.end()) return it->second;
    int id = n_nodes++;
    origin_of_root[root] = id;
    return id;
  };
  auto comp_root_of_constraint = [&](const DegConstraint& c) {
    if (!c.lhs.atom.empty()) return uf.find(atom_id[c.lhs.atom]);
    return uf.find(atom_id[c.rhs.atom]);
  };

  auto comp_integral = [&](int root) {
    auto it = comp_dim.find(root);
    return it != comp_dim.end() && integral(it->second);
  };

  std::vector<Edge> edges;
  for (size_t i = 0; i < cs.size(); ++i) {
    const DegConstraint& c = cs[i];
    if (c.lhs.atom.empty() && c.rhs.atom.empty()) {
      if (!cmp_holds(c.op, c.lhs.offset, c.rhs.offset)) return DegreeCore{{i}};
      continue;
    }
    int root = comp_root_of_constraint(c);
    bool integ = comp_integral(root);
    auto side_node = [&](const DegSide& s) {
      return s.atom.empty() ? origin_node(root) : atom_id[s.atom];
    };
    int ln = side_node(c.lhs), rn = side_node(c.rhs);
    // emit l <= r (+strict) as edge r -> l with weight r.off - l.off
    auto emit = [&](int lnode, const Rational& loff, int rnode, const Rational& roff,
                    bool strict) {
      Rational w = roff - loff;
      if (integ) {
        if (strict) {
          w = rat_is_integer(w) ? w - 1 : Rational(rat_floor(w));
          strict = false;
        } else {
          w = Rational(rat_floor(w));
        }
      }
      edges.push_back(Edge{rnode, lnode, Weight{w, strict ? -1L : 0L}, i});
    };
    switch (c.op) {
      case CmpOp::Le: emit(ln, c.lhs.offset, rn, c.rhs.offset, false); break;
      case CmpOp::Lt: emit(ln, c.lhs.offset, rn, c.rhs.offset, true); break;
      case CmpOp::Ge: emit(rn, c.rhs.offset, ln, c.lhs.offset, false); break;
      case CmpOp::Gt: emit(rn, c.rhs.offset, ln, c.lhs.offset, true); break;
      case CmpOp::Eq:
        emit(ln, c.lhs.offset, rn, c.rhs.offset, false);
        emit(rn, c.rhs.offset, ln, c.lhs.offset, false);
        break;
    }
  }

  // Bellman-Ford from a virtual source connected to every node with weight 0
  std::vector<Weight> dist(n_nodes, Weight{Rational(0), 0});
  std::vector<int> pred_edge(n_nodes, -1);
  int changed_node = -1;
  for (int round = 0; round < n_nodes + 1; ++round) {
    changed_node = -1;
    for (size_t e = 0; e < edges.size(); ++e) {
      Weight cand = dist[edges[e].from] + edges[e].w;
      if (cand < dist[edges[e].to]) {
        dist[edges[e].to] = cand;
        pred_edge[edges[e].to] = (int)e;
        changed_node = edges[e].to;
      }
    }
    if (changed_node < 0) break;
  }

  if (changed_node >= 0) {
    // walk predecessors n_nodes times to land inside the cycle, then collect it
    int v = changed_node;
    for (int k = 0; k < n_nodes; ++k) v = edges[pred_edge[v]].from;
    std::vector<size_t> core;
    int u = v;
    do {
      const Edge& e = edges[pred_edge[u]];
      core.push_back(e.src);
      u = e.from;
    } while (u != v);
    std::sort(core.begin(), core.end());
    core.erase(std::unique(core.begin(), core.end()), core.end());
    return DegreeCore{core};
  }

  // model: shift each component so its origin sits at zero, then realize
  // strict counts with a replayed epsilon
  DegreeModel m;
  for (Rational eps(1, 1);; eps /= 2) {
    m.values.clear();
    for (size_t a = 0; a < atoms.size(); ++a) {
      int root = uf.find((int)a);
      Weight base{Rational(0), 0};
      auto it = origin_of_root.find(root);
      if (it != origin_of_root.end()) base = dist[it->second];
      Weight w = dist[a];
      m.values[atoms[a]] = (w.c - base.c) + Rational(w.strict - base.strict) * eps;
    }
    if (model_satisfies(m, cs)) break;
    if (eps < Rational(Integer(1), Integer(1) << 120))
      throw std::runtime_error("degree model epsilon replay failed to converge");
  }
  return m;
}

}  // namespace anota
