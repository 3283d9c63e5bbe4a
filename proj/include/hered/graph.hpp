#ifndef HERED_GRAPH_HPP
#define HERED_GRAPH_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hered {

using VertexSet = std::uint64_t;

/// Hard cap on the order of any Graph: one machine word per adjacency row.
inline constexpr int kMaxVertices = 64;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

inline constexpr VertexSet low_bits(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }

template <typename F>
inline void for_each_vertex(VertexSet set, F &&f) {
    while (set) {
        int v = std::countr_zero(set);
        set &= set - 1;
        f(v);
    }
}

inline std::vector<int> to_vector(VertexSet set) {
    std::vector<int> out;
    for_each_vertex(set, [&](int v) { out.push_back(v); });
    return out;
}

/// Simple undirected graph on vertices {0..n-1}, stored as bitset rows.
/// Values are immutable once built; the edit operations return new graphs.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices)
            throw GraphError("graph order " + std::to_string(n) + " outside [0, " +
                             std::to_string(kMaxVertices) + "]");
    }

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.set_edge(u, v);
        return g;
    }

    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
    }

    /// Rows must be symmetric with an empty diagonal.
    static Graph from_rows(int n, std::span<const VertexSet> rows) {
        Graph g(n);
        if (static_cast<int>(rows.size()) != n) throw GraphError("row count does not match order");
        for (int u = 0; u < n; ++u) {
            if (rows[u] & ~low_bits(n)) throw GraphError("adjacency row refers to a vertex >= n");
            if (rows[u] & bit(u)) throw GraphError("self-loop at vertex " + std::to_string(u));
            g.rows_[u] = rows[u];
        }
        for (int u = 0; u < n; ++u)
            for_each_vertex(g.rows_[u], [&](int v) {
                if (!(g.rows_[v] & bit(u))) throw GraphError("adjacency rows are not symmetric");
            });
        return g;
    }

    int order() const { return n_; }
    VertexSet vertices() const { return low_bits(n_); }
    VertexSet neighbors(int v) const { return rows_[v]; }
    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
    int degree(int v) const { return std::popcount(rows_[v]); }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += std::popcount(rows_[v]);
        return total / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for_each_vertex(rows_[u] & ~low_bits(u + 1), [&](int v) { out.emplace_back(u, v); });
        return out;
    }

    Graph with_edge(int u, int v) const {
        Graph g = *this;
        g.set_edge(u, v);
        return g;
    }

    Graph without_edge(int u, int v) const {
        Graph g = *this;
        g.check_pair(u, v);
        g.rows_[u] &= ~bit(v);
        g.rows_[v] &= ~bit(u);
        return g;
    }

    Graph with_edge_toggled(int u, int v) const {
        return adjacent(u, v) ? without_edge(u, v) : with_edge(u, v);
    }

    /// New graph on n+1 vertices; the new vertex n is joined to `nbrs`.
    Graph with_vertex(VertexSet nbrs) const {
        if (n_ >= kMaxVertices) throw GraphError("vertex cap exceeded");
        if (nbrs & ~vertices()) throw GraphError("neighbourhood refers to a missing vertex");
        Graph g = *this;
        g.n_ = n_ + 1;
        g.rows_[n_] = nbrs;
        for_each_vertex(nbrs, [&](int v) { g.rows_[v] |= bit(n_); });
        return g;
    }

    /// Subgraph induced by `verts`, relabelled 0..k-1 in the given order.
    Graph induced(std::span<const int> verts) const {
        Graph g(static_cast<int>(verts.size()));
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (adjacent(verts[i], verts[j])) g.set_edge(static_cast<int>(i), static_cast<int>(j));
        return g;
    }

    Graph induced(VertexSet verts) const {
        auto list = to_vector(verts & vertices());
        return induced(std::span<const int>(list));
    }

    Graph without_vertex(int v) const { return induced(vertices() & ~bit(v)); }

    /// Graph whose vertex i is this graph's vertex order[i].
    Graph relabelled(std::span<const int> order) const {
        if (static_cast<int>(order.size()) != n_) throw GraphError("permutation size mismatch");
        return induced(order);
    }

    /// Graph on the same vertex set where vertex v becomes perm[v].
    Graph permuted(std::span<const int> perm) const {
        if (static_cast<int>(perm.size()) != n_) throw GraphError("permutation size mismatch");
        Graph g(n_);
        for (auto [u, v] : edges()) g.set_edge(perm[u], perm[v]);
        return g;
    }

    friend bool operator==(const Graph &a, const Graph &b) {
        if (a.n_ != b.n_) return false;
        return std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
    }

private:
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside vertex range");
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    }

    void set_edge(int u, int v) {
        check_pair(u, v);
        rows_[u] |= bit(v);
        rows_[v] |= bit(u);
    }

    int n_ = 0;
    std::array<VertexSet, kMaxVertices> rows_{};
};

// ---------------------------------------------------------------------------
// Constructors for the named families.

inline Graph complete_graph(int r) {
    if (r < 0) throw GraphError("negative order");
    std::vector<VertexSet> rows(r);
    for (int v = 0; v < r; ++v) rows[v] = low_bits(r) & ~bit(v);
    return Graph::from_rows(r, rows);
}

inline Graph edgeless_graph(int n) { return Graph(n); }

/// Complete multipartite graph with the given part sizes. An empty list
/// yields the null graph.
inline Graph complete_multipartite(std::span<const int> parts) {
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw GraphError("complete multipartite part sizes must be >= 1");
        n += p;
    }
    if (n > kMaxVertices) throw GraphError("complete multipartite graph exceeds vertex cap");
    std::vector<VertexSet> rows(n);
    VertexSet all = low_bits(n);
    int start = 0;
    for (int p : parts) {
        VertexSet part = low_bits(start + p) & ~low_bits(start);
        for (int v = start; v < start + p; ++v) rows[v] = all & ~part;
        start += p;
    }
    return Graph::from_rows(n, rows);
}

inline Graph complete_multipartite(std::initializer_list<int> parts) {
    return complete_multipartite(std::span<const int>(parts.begin(), parts.size()));
}

/// Part sizes of the balanced r-partite split of n (sizes differ by at most one).
inline std::vector<int> turan_parts(int r, int n) {
    if (r <= 0) {
        if (n == 0) return {};
        throw GraphError("Turan graph needs r >= 1 when n > 0");
    }
    std::vector<int> parts;
    for (int i = 0; i < r; ++i) {
        int size = n / r + (i < n % r ? 1 : 0);
        if (size > 0) parts.push_back(size);
    }
    return parts;
}

/// T_r(n): complete r-partite graph on n vertices with balanced parts. When
/// r > n the surplus parts are empty, giving K_n.
inline Graph turan_graph(int r, int n) {
    if (n < 0) throw GraphError("negative order");
    auto parts = turan_parts(r, n);
    return complete_multipartite(std::span<const int>(parts));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw GraphError("cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g = g.with_edge(i, (i + 1) % n);
    return g;
}

/// Path on n vertices.
inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g = g.with_edge(i, i + 1);
    return g;
}

inline Graph star_graph(int leaves) { return complete_multipartite({1, leaves}); }

// ---------------------------------------------------------------------------
// Structural helpers.

inline Graph complement(const Graph &g) {
    int n = g.order();
    std::vector<VertexSet> rows(n);
    for (int v = 0; v < n; ++v) rows[v] = g.vertices() & ~g.neighbors(v) & ~bit(v);
    return Graph::from_rows(n, rows);
}

/// Vertex sets of the connected components, ordered by smallest vertex.
inline std::vector<VertexSet> connected_components(const Graph &g) {
    std::vector<VertexSet> out;
    VertexSet unseen = g.vertices();
    while (unseen) {
        VertexSet comp = bit(std::countr_zero(unseen));
        VertexSet frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
            frontier = next & ~comp;
            comp |= next;
        }
        out.push_back(comp);
        unseen &= ~comp;
    }
    return out;
}

inline bool is_clique(const Graph &g, VertexSet set) {
    bool ok = true;
    for_each_vertex(set, [&](int v) {
        if (((g.neighbors(v) | bit(v)) & set) != set) ok = false;
    });
    return ok;
}

inline bool is_clique(const Graph &g) { return is_clique(g, g.vertices()); }

/// Number of parts if g is complete multipartite, otherwise 0. Uses the fact
/// that g is complete multipartite iff its complement is a disjoint union of
/// cliques. The null graph is reported as 0-partite.
inline int multipartite_part_count(const Graph &g) {
    Graph co = complement(g);
    auto comps = connected_components(co);
    for (VertexSet c : comps)
        if (!is_clique(co, c)) return 0;
    return static_cast<int>(comps.size());
}

namespace detail {

inline void max_clique_expand(const Graph &g, VertexSet current, int size, VertexSet candidates,
                              VertexSet &best, int &best_size) {
    if (!candidates) {
        if (size > best_size) {
            best_size = size;
            best = current;
        }
        return;
    }
    if (size + std::popcount(candidates) <= best_size) return;
    // pivot: candidate with the most neighbours among the candidates
    int pivot = -1, pivot_deg = -1;
    for_each_vertex(candidates, [&](int u) {
        int d = std::popcount(g.neighbors(u) & candidates);
        if (d > pivot_deg) {
            pivot_deg = d;
            pivot = u;
        }
    });
    VertexSet branch = candidates & ~g.neighbors(pivot);
    while (branch) {
        int v = std::countr_zero(branch);
        branch &= branch - 1;
        max_clique_expand(g, current | bit(v), size + 1, candidates & g.neighbors(v), best, best_size);
        candidates &= ~bit(v);
        if (size + std::popcount(candidates) <= best_size) return;
    }
}

template <typename F>
void maximal_cliques_expand(const Graph &g, VertexSet r, VertexSet p, VertexSet x, F &f, bool &stop) {
    if (stop) return;
    if (!p && !x) {
        if (!f(r)) stop = true;
        return;
    }
    VertexSet px = p | x;
    int pivot = std::countr_zero(px);
    int best = -1;
    for_each_vertex(px, [&](int u) {
        int d = std::popcount(g.neighbors(u) & p);
        if (d > best) {
            best = d;
            pivot = u;
        }
    });
    VertexSet branch = p & ~g.neighbors(pivot);
    while (branch && !stop) {
        int v = std::countr_zero(branch);
        branch &= branch - 1;
        maximal_cliques_expand(g, r | bit(v), p & g.neighbors(v), x & g.neighbors(v), f, stop);
        p &= ~bit(v);
        x |= bit(v);
    }
}

}  // namespace detail

/// Vertex set of one maximum clique (Bron-Kerbosch with pivoting plus a
/// size bound). Empty for the null graph.
inline VertexSet maximum_clique(const Graph &g) {
    VertexSet best = 0;
    int best_size = 0;
    detail::max_clique_expand(g, 0, 0, g.vertices(), best, best_size);
    return best;
}

inline int clique_number(const Graph &g) { return std::popcount(maximum_clique(g)); }

/// Visits maximal cliques until the visitor returns false.
template <typename F>
void for_each_maximal_clique(const Graph &g, F &&visit) {
    bool stop = false;
    detail::maximal_cliques_expand(g, 0, g.vertices(), 0, visit, stop);
}

}  // namespace hered

#endif
