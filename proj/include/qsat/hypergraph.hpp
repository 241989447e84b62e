#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace qsat {

// Vertices are dense 1-based integer ids. Edges keep their stored vertex
// order: downstream constraint tensors index slots by that order, so it is
// part of the data, not a presentation detail. Duplicate edges (same vertex
// set) are allowed; they model stacked clauses.
struct Hypergraph {
  int n = 0;
  std::vector<std::vector<int>> edges;

  int m() const { return static_cast<int>(edges.size()); }

  void check() const {
    for (const auto& e : edges) {
      std::set<int> seen;
      for (int v : e) {
        if (v < 1 || v > n) throw std::invalid_argument("vertex id out of range");
        if (!seen.insert(v).second)
          throw std::invalid_argument("repeated vertex inside an edge");
      }
    }
  }

  std::vector<int> degrees() const {
    std::vector<int> deg(n + 1, 0);
    for (const auto& e : edges)
      for (int v : e) ++deg[v];
    return deg;
  }
};

inline nlohmann::json to_json(const Hypergraph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  j["edges"] = g.edges;
  return j;
}

inline Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  Hypergraph g;
  g.n = j.at("n").get<int>();
  g.edges = j.at("edges").get<std::vector<std::vector<int>>>();
  g.check();
  return g;
}

// Canonical text form: compact dump (sorted keys come free with nlohmann's
// std::map storage) plus one trailing newline. Files written this way
// round-trip byte-identically.
inline std::string canonical_dump(const nlohmann::json& j) {
  return j.dump() + "\n";
}

inline bool is_k_uniform(const Hypergraph& g, int k) {
  return std::all_of(g.edges.begin(), g.edges.end(),
                     [k](const auto& e) { return static_cast<int>(e.size()) == k; });
}

// Uniformity k of the hypergraph, if it has one (empty edge list: none).
inline std::optional<int> uniformity(const Hypergraph& g) {
  if (g.edges.empty()) return std::nullopt;
  int k = static_cast<int>(g.edges.front().size());
  return is_k_uniform(g, k) ? std::optional<int>(k) : std::nullopt;
}

// Simple undirected graph on 0-based node ids; used for line graphs and edge
// intersection graphs, whose nodes are hyperedge indices.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // each pair (a,b) with a < b

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
  }
};

inline int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  std::set<int> sa(a.begin(), a.end());
  int c = 0;
  for (int v : b) c += sa.count(v);
  return c;
}

inline SimpleGraph tight_line_graph(const Hypergraph& g) {
  auto k = uniformity(g);
  if (!g.edges.empty() && !k)
    throw std::invalid_argument("tight_line_graph requires a k-uniform hypergraph");
  SimpleGraph lg;
  lg.n = g.m();
  for (int i = 0; i < g.m(); ++i)
    for (int j = i + 1; j < g.m(); ++j)
      if (k && intersection_size(g.edges[i], g.edges[j]) == *k - 1)
        lg.edges.emplace_back(i, j);
  return lg;
}

inline SimpleGraph edge_intersection_graph(const Hypergraph& g) {
  SimpleGraph eig;
  eig.n = g.m();
  for (int i = 0; i < g.m(); ++i)
    for (int j = i + 1; j < g.m(); ++j)
      if (intersection_size(g.edges[i], g.edges[j]) > 0) eig.edges.emplace_back(i, j);
  return eig;
}

// --- SDR / matching ---------------------------------------------------------

// assignment[i] = representative vertex of edge i; representatives pairwise
// distinct and members of their edges.
struct SDR {
  std::vector<int> assignment;
};

// A Hall violator: a set of edges whose union is smaller than the set.
struct HallCertificate {
  std::vector<int> edge_subset;  // sorted edge indices
  std::vector<int> union_vertices;
  int union_size = 0;
};

using SdrResult = std::variant<SDR, HallCertificate>;

inline bool sdr_valid(const Hypergraph& g, const SDR& sdr) {
  if (static_cast<int>(sdr.assignment.size()) != g.m()) return false;
  std::set<int> used;
  for (int i = 0; i < g.m(); ++i) {
    int v = sdr.assignment[i];
    if (std::find(g.edges[i].begin(), g.edges[i].end(), v) == g.edges[i].end())
      return false;
    if (!used.insert(v).second) return false;
  }
  return true;
}

inline bool certificate_valid(const Hypergraph& g, const HallCertificate& c) {
  std::set<int> u;
  for (int i : c.edge_subset) {
    if (i < 0 || i >= g.m()) return false;
    u.insert(g.edges[i].begin(), g.edges[i].end());
  }
  return c.union_size == static_cast<int>(u.size()) &&
         c.union_size < static_cast<int>(c.edge_subset.size());
}

// Maximum bipartite matching, edges on the left, vertices on the right,
// Kuhn's augmenting paths with smallest-vertex-first tie-breaking. If some
// edge stays unmatched, the Hall violator is read off the set of edges
// reachable by alternating paths from an unmatched edge.
inline SdrResult find_sdr(const Hypergraph& g) {
  int m = g.m();
  std::vector<std::vector<int>> cand(m);
  for (int i = 0; i < m; ++i) {
    cand[i] = g.edges[i];
    std::sort(cand[i].begin(), cand[i].end());
  }
  std::vector<int> match_edge(m, 0);        // edge -> vertex (0 = none)
  std::vector<int> match_vertex(g.n + 1, -1);  // vertex -> edge

  std::vector<char> visited(g.n + 1);
  auto augment = [&](auto&& self, int e) -> bool {
    for (int v : cand[e]) {
      if (visited[v]) continue;
      visited[v] = 1;
      if (match_vertex[v] == -1 || self(self, match_vertex[v])) {
        match_vertex[v] = e;
        match_edge[e] = v;
        return true;
      }
    }
    return false;
  };

  int unmatched = -1;
  for (int e = 0; e < m; ++e) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(augment, e) && unmatched == -1) unmatched = e;
  }
  if (unmatched == -1) return SDR{match_edge};

  // Alternating BFS from every unmatched edge: edge -> any member vertex,
  // vertex -> its matched edge. Reachable edges form the violator.
  std::vector<char> edge_seen(m, 0), vert_seen(g.n + 1, 0);
  std::vector<int> queue;
  for (int e = 0; e < m; ++e)
    if (match_edge[e] == 0) {
      edge_seen[e] = 1;
      queue.push_back(e);
    }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int e = queue[qi];
    for (int v : cand[e]) {
      if (vert_seen[v]) continue;
      vert_seen[v] = 1;
      int e2 = match_vertex[v];
      if (e2 != -1 && !edge_seen[e2]) {
        edge_seen[e2] = 1;
        queue.push_back(e2);
      }
    }
  }
  HallCertificate cert;
  std::set<int> u;
  for (int e = 0; e < m; ++e)
    if (edge_seen[e]) {
      cert.edge_subset.push_back(e);
      u.insert(g.edges[e].begin(), g.edges[e].end());
    }
  cert.union_vertices.assign(u.begin(), u.end());
  cert.union_size = static_cast<int>(u.size());
  return cert;
}

// --- constructive SDR for degree <= 2, edge size >= 2 -----------------------

namespace detail {

// Modified DFS over the line graph: an L-edge may be consumed at most once,
// exactly when it leads to a node not yet seen; the root starts unseen and is
// picked up later through one of its cycle edges.
struct SdrDfs {
  const std::vector<std::vector<std::pair<int, int>>>& adj;  // node -> (nbr, shared vertex)
  std::vector<char> seen, visited;
  std::set<std::pair<int, int>> used;  // L-edges, normalized (min,max)
  std::vector<int>& out;               // hyperedge -> matched vertex

  void run(int u) {
    visited[u] = 1;
    for (auto [w, shared] : adj[u]) {
      auto key = std::minmax(u, w);
      if (used.count({key.first, key.second}) || seen[w]) continue;
      used.insert({key.first, key.second});
      seen[w] = 1;
      out[w] = shared;
      if (!visited[w]) run(w);
    }
  }
};

}  // namespace detail

inline SDR construct_sdr_deg2(const Hypergraph& g) {
  for (const auto& e : g.edges)
    if (e.size() < 2) throw std::invalid_argument("edge of size < 2");
  for (int v = 1; v <= g.n; ++v) {
    int d = 0;
    for (const auto& e : g.edges)
      d += std::count(e.begin(), e.end(), v);
    if (d > 2) throw std::invalid_argument("vertex degree > 2");
  }

  int m = g.m();
  std::vector<int> match(m, 0);
  std::vector<char> edge_alive(m, 1);

  // Step 1: pairs intersecting in >= 2 vertices. The two chosen vertices are
  // exhausted by this pair (degree <= 2), so removing them is safe.
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < m && !changed; ++i) {
      if (!edge_alive[i]) continue;
      for (int j = i + 1; j < m && !changed; ++j) {
        if (!edge_alive[j]) continue;
        std::vector<int> common;
        for (int v : g.edges[i])
          if (std::find(g.edges[j].begin(), g.edges[j].end(), v) != g.edges[j].end())
            common.push_back(v);
        if (common.size() >= 2) {
          std::sort(common.begin(), common.end());
          match[i] = common[0];
          match[j] = common[1];
          edge_alive[i] = edge_alive[j] = 0;
          changed = true;
        }
      }
    }
  }

  auto degree_of = [&](int v) {
    int d = 0;
    for (int i = 0; i < m; ++i)
      if (edge_alive[i] &&
          std::find(g.edges[i].begin(), g.edges[i].end(), v) != g.edges[i].end())
        ++d;
    return d;
  };

  // Step 2: degree-1 vertices take their unique edge.
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 1; v <= g.n && !changed; ++v) {
      if (degree_of(v) != 1) continue;
      for (int i = 0; i < m; ++i)
        if (edge_alive[i] &&
            std::find(g.edges[i].begin(), g.edges[i].end(), v) != g.edges[i].end()) {
          match[i] = v;
          edge_alive[i] = 0;
          changed = true;
          break;
        }
    }
  }

  // Steps 3-6: what remains is linear with every live vertex of degree
  // exactly 2, so the ordinary line graph applies and each component
  // contains a cycle.
  std::vector<int> live;
  for (int i = 0; i < m; ++i)
    if (edge_alive[i]) live.push_back(i);
  if (live.empty()) return SDR{match};

  int ln = static_cast<int>(live.size());
  std::vector<std::vector<std::pair<int, int>>> adj(ln);
  for (int a = 0; a < ln; ++a)
    for (int b = a + 1; b < ln; ++b) {
      std::vector<int> common;
      for (int v : g.edges[live[a]])
        if (std::find(g.edges[live[b]].begin(), g.edges[live[b]].end(), v) !=
            g.edges[live[b]].end())
          common.push_back(v);
      if (common.size() == 1) {
        adj[a].emplace_back(b, common[0]);
        adj[b].emplace_back(a, common[0]);
      } else if (common.size() >= 2) {
        throw std::logic_error("step 1 left a >=2 intersection");
      }
    }
  for (auto& row : adj) std::sort(row.begin(), row.end());

  std::vector<int> out(ln, 0);
  std::vector<char> component_done(ln, 0);
  for (int start = 0; start < ln; ++start) {
    if (component_done[start]) continue;
    // Collect the component and find a node on a cycle via DFS back edge.
    std::vector<int> comp;
    {
      std::vector<int> stack{start};
      std::vector<char> in(ln, 0);
      in[start] = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        comp.push_back(u);
        for (auto [w, sv] : adj[u])
          if (!in[w]) {
            in[w] = 1;
            stack.push_back(w);
          }
      }
    }
    int root = -1;
    {
      std::vector<int> parent(ln, -2);
      std::vector<int> stack{start};
      parent[start] = -1;
      while (!stack.empty() && root == -1) {
        int u = stack.back();
        stack.pop_back();
        for (auto [w, sv] : adj[u]) {
          if (parent[w] == -2) {
            parent[w] = u;
            stack.push_back(w);
          } else if (w != parent[u]) {
            root = u;  // back edge: u lies on a cycle
            break;
          }
        }
      }
    }
    if (root == -1) throw std::logic_error("acyclic line-graph component");

    detail::SdrDfs dfs{adj, std::vector<char>(ln, 0), std::vector<char>(ln, 0), {}, out};
    dfs.run(root);
    for (int u : comp) {
      component_done[u] = 1;
      if (!dfs.seen[u]) throw std::logic_error("line-graph DFS missed a node");
      match[live[u]] = out[u];
    }
  }
  return SDR{match};
}

// --- structural predicates ---------------------------------------------------

struct Predicates {
  bool linear = true;
  bool intersecting_family = true;
  std::optional<int> k_intersecting;
  bool helly = true;
  std::vector<std::vector<int>> blocks;     // maximal within the search bound
  std::vector<std::vector<int>> t_stacked;  // groups of identical vertex sets
};

namespace detail {

inline std::vector<std::vector<int>> maximal_blocks(const Hypergraph& g) {
  int m = g.m();
  std::vector<std::vector<int>> found;
  if (m <= 16 && m > 0) {
    std::vector<std::uint32_t> masks;
    for (std::uint32_t s = 1; s < (1u << m); ++s) {
      std::set<int> u;
      int cnt = 0;
      for (int i = 0; i < m; ++i)
        if (s >> i & 1) {
          ++cnt;
          u.insert(g.edges[i].begin(), g.edges[i].end());
        }
      if (static_cast<int>(u.size()) == cnt) masks.push_back(s);
    }
    std::sort(masks.begin(), masks.end(), [](auto a, auto b) {
      return __builtin_popcount(a) > __builtin_popcount(b);
    });
    std::vector<std::uint32_t> keep;
    for (auto s : masks) {
      bool sub = std::any_of(keep.begin(), keep.end(),
                             [s](auto t) { return (s & t) == s; });
      if (!sub) keep.push_back(s);
    }
    std::sort(keep.begin(), keep.end());
    for (auto s : keep) {
      std::vector<int> b;
      for (int i = 0; i < m; ++i)
        if (s >> i & 1) b.push_back(i);
      found.push_back(b);
    }
    return found;
  }
  // Larger instances: only whole connected components of the edge
  // intersection graph are examined.
  auto adj = edge_intersection_graph(g).adjacency();
  std::vector<char> done(m, 0);
  for (int s = 0; s < m; ++s) {
    if (done[s]) continue;
    std::vector<int> comp{s};
    done[s] = 1;
    for (std::size_t qi = 0; qi < comp.size(); ++qi)
      for (int w : adj[comp[qi]])
        if (!done[w]) {
          done[w] = 1;
          comp.push_back(w);
        }
    std::set<int> u;
    for (int i : comp) u.insert(g.edges[i].begin(), g.edges[i].end());
    if (u.size() == comp.size()) {
      std::sort(comp.begin(), comp.end());
      found.push_back(comp);
    }
  }
  return found;
}

}  // namespace detail

inline Predicates structural_predicates(const Hypergraph& g) {
  Predicates p;
  int m = g.m();

  std::optional<int> common;
  bool uniform_int = true;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int c = intersection_size(g.edges[i], g.edges[j]);
      if (c > 1) p.linear = false;
      if (c < 1) p.intersecting_family = false;
      if (!common)
        common = c;
      else if (*common != c)
        uniform_int = false;
    }
  if (m >= 2 && uniform_int) p.k_intersecting = common;

  // Helly via the three-vertex criterion: for every vertex triple, the edges
  // containing at least two of the three must share a common vertex.
  for (int a = 1; a <= g.n && p.helly; ++a)
    for (int b = a + 1; b <= g.n && p.helly; ++b)
      for (int c = b + 1; c <= g.n && p.helly; ++c) {
        std::vector<int> fam;
        for (int i = 0; i < m; ++i) {
          int hits = 0;
          for (int v : {a, b, c})
            hits += std::find(g.edges[i].begin(), g.edges[i].end(), v) != g.edges[i].end();
          if (hits >= 2) fam.push_back(i);
        }
        if (fam.size() < 2) continue;
        std::set<int> inter(g.edges[fam[0]].begin(), g.edges[fam[0]].end());
        for (std::size_t t = 1; t < fam.size() && !inter.empty(); ++t) {
          std::set<int> next;
          for (int v : g.edges[fam[t]])
            if (inter.count(v)) next.insert(v);
          inter.swap(next);
        }
        if (inter.empty()) p.helly = false;
      }

  p.blocks = detail::maximal_blocks(g);

  std::map<std::vector<int>, std::vector<int>> groups;
  for (int i = 0; i < m; ++i) {
    auto key = g.edges[i];
    std::sort(key.begin(), key.end());
    groups[key].push_back(i);
  }
  for (auto& [key, idx] : groups)
    if (idx.size() >= 2) p.t_stacked.push_back(idx);

  return p;
}

}  // namespace qsat
