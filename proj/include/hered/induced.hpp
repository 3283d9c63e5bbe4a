#ifndef HERED_INDUCED_HPP
#define HERED_INDUCED_HPP

#include "hered/graph.hpp"

#include <vector>

namespace hered {

namespace detail {

class InducedMatcher {
public:
    InducedMatcher(const Graph &g, const Graph &h) : g_(g), h_(h) {}

    /// Searches with pattern vertex `first` mapped first, optionally pinned
    /// to the target vertex `pinned`.
    bool search(int first, int pinned) {
        const int k = h_.order();
        build_order(first);
        image_.assign(static_cast<std::size_t>(k), -1);
        VertexSet start = pinned >= 0 ? bit(pinned) : g_.vertices();
        return extend(0, 0, start);
    }

private:
    // Pattern vertices in an order that keeps each prefix as connected as
    // possible, so adjacency constraints bite early.
    void build_order(int first) {
        const int k = h_.order();
        order_.clear();
        VertexSet placed = 0;
        int next = first;
        for (int step = 0; step < k; ++step) {
            if (step > 0) {
                int best = -1, best_links = -1, best_deg = -1;
                for_each_vertex(h_.vertices() & ~placed, [&](int v) {
                    int links = std::popcount(h_.neighbors(v) & placed);
                    int deg = h_.degree(v);
                    if (links > best_links || (links == best_links && deg > best_deg)) {
                        best = v;
                        best_links = links;
                        best_deg = deg;
                    }
                });
                next = best;
            }
            order_.push_back(next);
            placed |= bit(next);
        }
    }

    bool extend(std::size_t depth, VertexSet used, VertexSet allowed) {
        if (depth == order_.size()) return true;
        const int hv = order_[depth];
        VertexSet cand = allowed & ~used;
        for (std::size_t i = 0; i < depth; ++i) {
            int hw = order_[i];
            int gw = image_[hw];
            cand &= h_.adjacent(hv, hw) ? g_.neighbors(gw) : ~g_.neighbors(gw);
        }
        const int need_deg = h_.degree(hv);
        const int need_codeg = h_.order() - 1 - need_deg;
        const int n = g_.order();
        while (cand) {
            int gv = std::countr_zero(cand);
            cand &= cand - 1;
            int d = g_.degree(gv);
            if (d < need_deg || n - 1 - d < need_codeg) continue;
            image_[hv] = gv;
            if (extend(depth + 1, used | bit(gv), g_.vertices())) return true;
        }
        image_[hv] = -1;
        return false;
    }

    const Graph &g_;
    const Graph &h_;
    std::vector<int> order_;
    std::vector<int> image_;
};

inline bool quick_reject(const Graph &g, const Graph &h) {
    if (h.order() > g.order()) return true;
    if (h.edge_count() > g.edge_count()) return true;
    auto non_edges = [](const Graph &x) { return x.order() * (x.order() - 1) / 2 - x.edge_count(); };
    return non_edges(h) > non_edges(g);
}

}  // namespace detail

/// True iff some vertex subset of g induces a graph isomorphic to h.
inline bool contains_induced(const Graph &g, const Graph &h) {
    if (h.order() == 0) return true;
    if (detail::quick_reject(g, h)) return false;
    int first = 0;
    for (int v = 1; v < h.order(); ++v)
        if (h.degree(v) > h.degree(first)) first = v;
    detail::InducedMatcher m(g, h);
    return m.search(first, -1);
}

/// As contains_induced, restricted to copies of h that use vertex `v` of g.
inline bool contains_induced_through(const Graph &g, const Graph &h, int v) {
    if (h.order() == 0) return false;
    if (detail::quick_reject(g, h)) return false;
    detail::InducedMatcher m(g, h);
    std::vector<int> tried;
    for (int hv = 0; hv < h.order(); ++hv) {
        bool redundant = false;
        for (int w : tried)
            if ((h.neighbors(hv) & ~bit(w)) == (h.neighbors(w) & ~bit(hv))) {
                redundant = true;
                break;
            }
        if (redundant) continue;
        tried.push_back(hv);
        if (m.search(hv, v)) return true;
    }
    return false;
}

}  // namespace hered

#endif
