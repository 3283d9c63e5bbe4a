#ifndef HERED_EXTREMAL_HPP
#define HERED_EXTREMAL_HPP

#include "hered/canonical.hpp"
#include "hered/family.hpp"
#include "hered/graph.hpp"
#include "hered/lambda.hpp"
#include "hered/rational.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hered {

inline constexpr int kDefaultSearchOrder = 8;
inline constexpr int kMaxSearchOrder = 10;

struct SearchOptions {
    int threads = 1;
};

namespace detail {

inline void check_search_order(int n) {
    if (n < 0 || n > kMaxSearchOrder)
        throw std::out_of_range("search order " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxSearchOrder) + "]");
}

// Children of one canonical parent on k vertices. A child (parent plus
// vertex k) is kept iff
//   * no forbidden graph occurs through vertex k (anything not through k sits
//     inside the parent, which is already in Her(F), and stays an induced
//     copy in every extension, so pruning here loses nothing), and
//   * deleting the canonically last vertex of the child yields a graph
//     isomorphic to the parent, i.e. the parent is the child's canonical
//     parent. Each class then arises from exactly one parent class.
// Repeats from the same parent are dropped by canonical form.
inline std::vector<Graph> canonical_children(const GraphFamily &f, const Graph &parent) {
    const int k = parent.order();
    const std::string parent_key = to_graph6(parent);
    std::set<std::string> seen;
    std::vector<Graph> out;
    const VertexSet limit = VertexSet{1} << k;
    for (VertexSet nbrs = 0; nbrs < limit; ++nbrs) {
        Graph child = parent.with_vertex(nbrs);
        if (!f.empty() && !membership_extending(f, child, k)) continue;
        auto lab = canonical_labeling(child);
        const int last = lab.order.back();
        if (last != k && to_graph6(canonical_labeling(child.without_vertex(last)).graph) != parent_key) continue;
        if (seen.insert(to_graph6(lab.graph)).second) out.push_back(std::move(lab.graph));
    }
    return out;
}

inline std::vector<Graph> next_level(const GraphFamily &f, const std::vector<Graph> &level, int threads) {
    std::vector<std::vector<Graph>> per_parent(level.size());
    auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < level.size(); i += stride) per_parent[i] = canonical_children(f, level[i]);
    };
    threads = std::max(1, threads);
    if (threads == 1 || level.size() < 2) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, static_cast<std::size_t>(t), static_cast<std::size_t>(threads));
        for (auto &th : pool) th.join();
    }
    std::vector<Graph> out;
    for (auto &children : per_parent)
        for (auto &c : children) out.push_back(std::move(c));
    return out;
}

}  // namespace detail

/// Visits one canonical representative of every isomorphism class in
/// Her(F)_k for k = 0..n_max, level by level (vertex-by-vertex canonical
/// augmentation). Graphs are handed out in canonical labelling.
template <typename Visit>
void enumerate_levels(const GraphFamily &f, int n_max, Visit &&visit, const SearchOptions &opt = {}) {
    detail::check_search_order(n_max);
    std::vector<Graph> level;
    if (membership(f, Graph(0))) level.emplace_back(0);
    for (int k = 0;; ++k) {
        visit(k, std::as_const(level));
        if (k == n_max || level.empty()) {
            for (int j = k + 1; j <= n_max; ++j) visit(j, std::vector<Graph>{});
            return;
        }
        level = detail::next_level(f, level, opt.threads);
    }
}

/// Her(F)_n up to isomorphism, in canonical labelling and canonical order.
inline std::vector<Graph> enumerate_property(const GraphFamily &f, int n, const SearchOptions &opt = {}) {
    std::vector<Graph> out;
    enumerate_levels(
        f, n,
        [&](int k, const std::vector<Graph> &level) {
            if (k == n) out = level;
        },
        opt);
    return out;
}

struct ExtremalValue {
    int ex = 0;
    std::vector<CanonicalForm> witnesses;  // sorted
};

inline std::optional<ExtremalValue> ex_value_of(const std::vector<Graph> &graphs) {
    if (graphs.empty()) return std::nullopt;
    ExtremalValue r;
    r.ex = -1;
    for (const auto &g : graphs) {
        int e = g.edge_count();
        if (e > r.ex) {
            r.ex = e;
            r.witnesses.clear();
        }
        if (e == r.ex) r.witnesses.push_back(canonical_form(g));
    }
    std::sort(r.witnesses.begin(), r.witnesses.end());
    return r;
}

/// ex(Her(F), n) with every extremal graph; nullopt when Her(F)_n is empty.
inline std::optional<ExtremalValue> ex_value(const GraphFamily &f, int n, const SearchOptions &opt = {}) {
    return ex_value_of(enumerate_property(f, n, opt));
}

struct LambdaValue {
    double value = 0.0;
    CanonicalForm witness;
    std::optional<Rational> exact;  // alpha = 1
    bool converged = true;
};

inline std::optional<LambdaValue> lambda_value_of(const std::vector<Graph> &graphs, double alpha,
                                                  const LambdaOptions &lopt = {}) {
    detail::check_alpha(alpha);
    if (graphs.empty()) return std::nullopt;
    LambdaValue best;
    if (alpha - 1.0 <= kAlphaSnap) {
        // Motzkin-Straus: the maximum is 1 - 1/r for the largest clique order r
        int best_w = -1;
        for (const auto &g : graphs) {
            int w = clique_number(g);
            auto form = canonical_form(g);
            if (w > best_w || (w == best_w && form < best.witness)) {
                best_w = w;
                best.witness = form;
            }
        }
        best.exact = best_w == 0 ? Rational(0) : Rational(1) - Rational(1, best_w);
        best.value = best.exact->to_double();
        return best;
    }
    bool have = false;
    for (const auto &g : graphs) {
        auto r = lambda_alpha(g, alpha, lopt);
        if (!have || r.value > best.value) {
            best.value = r.value;
            best.witness = canonical_form(g);
            best.converged = r.converged;
            have = true;
        }
    }
    return best;
}

/// lambda^(alpha)(Her(F), n) with a witness; nullopt when Her(F)_n is empty.
inline std::optional<LambdaValue> lambda_value(const GraphFamily &f, int n, double alpha,
                                               const LambdaOptions &lopt = {}, const SearchOptions &opt = {}) {
    return lambda_value_of(enumerate_property(f, n, opt), alpha, lopt);
}

// ---------------------------------------------------------------------------

struct PerOrderRecord {
    int n = 0;
    std::size_t count_of_graphs = 0;
    std::optional<ExtremalValue> ex;                     // unset when Her(F)_n is empty
    std::map<double, std::optional<LambdaValue>> lambda_by_alpha;
};

struct RatioTerm {
    int n = 0;
    Rational ratio;  // ex / C(n,2)
};

struct ReportChecks {
    /// ex/C(n,2) nonincreasing, compared exactly.
    bool edge_sequence_nonincreasing = true;
    /// every ratio >= predicted pi (vacuous when pi is undefined).
    bool ratios_dominate_pi = true;
    /// T_{beta-1}(n) or K_n lies in Her(F)_n and ex >= its edge count.
    bool density_witness_realised = true;
    /// lambda(P,n) n^(2/alpha-2) >= 2 ex / n^2 for every alpha.
    bool lambda_dominates_edges = true;
};

struct SearchReport {
    GraphFamily family;
    PropertyClassification classification;
    std::vector<double> alphas;
    std::vector<PerOrderRecord> per_n;
    std::vector<RatioTerm> normalized_edge_sequence;
    std::map<double, std::vector<std::pair<int, double>>> normalized_lambda_sequences;
    ReportChecks checks;
    std::vector<std::string> notes;
};

/// Exhaustive report for n = 1..n_max: extremal values, lambda maxima,
/// normalised sequences and the finite checks that stand in for the limit
/// statements. Limits themselves are only reported as trends.
inline SearchReport build_report(const GraphFamily &f, int n_max, const std::vector<double> &alphas,
                                 const LambdaOptions &lopt = {}, const SearchOptions &opt = {}) {
    detail::check_search_order(n_max);
    for (double a : alphas) detail::check_alpha(a);
    SearchReport rep;
    rep.family = f;
    rep.classification = classify(f);
    rep.alphas = alphas;

    enumerate_levels(
        f, n_max,
        [&](int n, const std::vector<Graph> &level) {
            if (n == 0) return;
            PerOrderRecord rec;
            rec.n = n;
            rec.count_of_graphs = level.size();
            rec.ex = ex_value_of(level);
            for (double a : alphas) rec.lambda_by_alpha[a] = lambda_value_of(level, a, lopt);
            rep.per_n.push_back(std::move(rec));
        },
        opt);

    const auto &cls = rep.classification;
    for (const auto &rec : rep.per_n) {
        const int n = rec.n;
        if (n >= 2 && rec.ex) {
            Rational ratio(rec.ex->ex, static_cast<std::int64_t>(n) * (n - 1) / 2);
            if (!rep.normalized_edge_sequence.empty() && ratio > rep.normalized_edge_sequence.back().ratio)
                rep.checks.edge_sequence_nonincreasing = false;
            if (cls.pi && ratio < *cls.pi) rep.checks.ratios_dominate_pi = false;
            rep.normalized_edge_sequence.push_back({n, ratio});
        }
        if (auto w = density_witness(cls, n)) {
            if (!membership(f, *w) || !rec.ex || rec.ex->ex < w->edge_count())
                rep.checks.density_witness_realised = false;
        }
        for (const auto &[a, lv] : rec.lambda_by_alpha) {
            if (!lv) continue;
            double scaled = lv->value * std::pow(static_cast<double>(n), 2.0 / a - 2.0);
            rep.normalized_lambda_sequences[a].emplace_back(n, scaled);
            if (rec.ex && scaled < 2.0 * rec.ex->ex / (static_cast<double>(n) * n) - 1e-9)
                rep.checks.lambda_dominates_edges = false;
        }
    }

    rep.notes.push_back(
        "Finite-n values are trend evidence only: the normalised sequences are reported against the predicted "
        "limits, but no limit is verified.");
    if (!cls.infinite) rep.notes.push_back("Her(F) is finite, so pi and the lambda limits are undefined.");
    return rep;
}

}  // namespace hered

#endif
