#ifndef HERED_CANONICAL_HPP
#define HERED_CANONICAL_HPP

#include "hered/graph.hpp"
#include "hered/graph_io.hpp"

#include <compare>
#include <string>
#include <vector>

namespace hered {

/// Isomorphism-class key. Holds the graph6 encoding of the canonical
/// relabelling, so it is printable and totally ordered.
struct CanonicalForm {
    std::string bytes;

    friend auto operator<=>(const CanonicalForm &, const CanonicalForm &) = default;
    friend bool operator==(const CanonicalForm &, const CanonicalForm &) = default;
};

struct CanonicalLabeling {
    /// order[i] is the original vertex placed at canonical position i.
    std::vector<int> order;
    Graph graph;
};

namespace detail {

using Cells = std::vector<std::vector<int>>;

// Equitable refinement. Cells are split by neighbour counts into each
// splitter cell; fragments are ordered by count, which keeps the result
// independent of the input labelling.
inline void refine(const Graph &g, Cells &cells) {
    bool changed = true;
    std::vector<int> count(static_cast<std::size_t>(g.order()));
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            VertexSet splitter = 0;
            for (int v : cells[s]) splitter |= bit(v);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                auto &cell = cells[c];
                if (cell.size() < 2) continue;
                bool uniform = true;
                for (int v : cell) {
                    count[v] = std::popcount(g.neighbors(v) & splitter);
                    if (count[v] != count[cell.front()]) uniform = false;
                }
                if (uniform) continue;
                std::vector<int> sorted = cell;
                std::stable_sort(sorted.begin(), sorted.end(), [&](int a, int b) { return count[a] < count[b]; });
                Cells pieces;
                for (int v : sorted) {
                    if (pieces.empty() || count[pieces.back().front()] != count[v]) pieces.emplace_back();
                    pieces.back().push_back(v);
                }
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
                changed = true;
                break;
            }
        }
    }
}

// Relabelled adjacency rows; compared lexicographically.
inline std::vector<VertexSet> leaf_code(const Graph &g, const Cells &cells) {
    const int n = g.order();
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < cells.size(); ++i) pos[cells[i].front()] = static_cast<int>(i);
    std::vector<VertexSet> code(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for_each_vertex(g.neighbors(v), [&](int w) { code[pos[v]] |= bit(n - 1 - pos[w]); });
    return code;
}

inline bool twins(const Graph &g, int u, int v) {
    return (g.neighbors(u) & ~bit(v)) == (g.neighbors(v) & ~bit(u));
}

struct CanonSearch {
    const Graph &g;
    std::vector<VertexSet> best_code;
    std::vector<int> best_order;
    bool have_best = false;

    void run(Cells cells) {
        refine(g, cells);
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size()))
                target = i;
        if (target == cells.size()) {
            auto code = leaf_code(g, cells);
            if (!have_best || code > best_code) {
                best_code = std::move(code);
                best_order.clear();
                for (const auto &c : cells) best_order.push_back(c.front());
                have_best = true;
            }
            return;
        }
        const auto cell = cells[target];
        std::vector<int> tried;
        for (int v : cell) {
            // Swapping twins is an automorphism fixing everything individualised
            // so far, so their subtrees produce identical leaf codes.
            bool redundant = false;
            for (int w : tried)
                if (twins(g, v, w)) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;
            tried.push_back(v);
            Cells next = cells;
            std::vector<int> rest;
            for (int w : cell)
                if (w != v) rest.push_back(w);
            next[target] = {v};
            next.insert(next.begin() + static_cast<std::ptrdiff_t>(target) + 1, rest);
            run(std::move(next));
        }
    }
};

}  // namespace detail

/// Canonical relabelling by individualisation-refinement: every leaf of the
/// search tree is a discrete equitable partition, and the leaf with the
/// largest relabelled adjacency code wins. Twin vertices are branched once.
inline CanonicalLabeling canonical_labeling(const Graph &g) {
    const int n = g.order();
    CanonicalLabeling out;
    if (n == 0) return out;
    detail::Cells cells(1);
    for (int v = 0; v < n; ++v) cells[0].push_back(v);
    detail::CanonSearch search{g, {}, {}, false};
    search.run(std::move(cells));
    out.order = std::move(search.best_order);
    out.graph = g.relabelled(out.order);
    return out;
}

inline CanonicalForm canonical_form(const Graph &g) { return {to_graph6(canonical_labeling(g).graph)}; }

inline bool isomorphic(const Graph &a, const Graph &b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace hered

#endif
