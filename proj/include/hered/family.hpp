#ifndef HERED_FAMILY_HPP
#define HERED_FAMILY_HPP

#include "hered/canonical.hpp"
#include "hered/graph.hpp"
#include "hered/graph_io.hpp"
#include "hered/induced.hpp"
#include "hered/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hered {

/// Finite set of forbidden induced subgraphs, one member per isomorphism
/// class, kept in canonical-form order. The null graph cannot be a member.
class GraphFamily {
public:
    GraphFamily() = default;

    explicit GraphFamily(const std::vector<Graph> &members) {
        for (const auto &g : members) add(g);
    }

    /// Each entry is a graph name ("K3", "C5", "K2,2,2", ...) or a graph6 string.
    static GraphFamily parse(const std::vector<std::string> &specs) {
        GraphFamily f;
        for (const auto &s : specs) f.add(parse_graph(s));
        return f;
    }

    const std::vector<Graph> &members() const { return members_; }
    const std::vector<CanonicalForm> &forms() const { return forms_; }
    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }

private:
    void add(const Graph &g) {
        if (g.order() == 0) throw GraphError("the null graph cannot be forbidden");
        auto form = canonical_form(g);
        auto it = std::lower_bound(forms_.begin(), forms_.end(), form);
        if (it != forms_.end() && *it == form) return;
        auto idx = it - forms_.begin();
        forms_.insert(it, form);
        members_.insert(members_.begin() + idx, canonical_labeling(g).graph);
    }

    std::vector<Graph> members_;
    std::vector<CanonicalForm> forms_;
};

/// Smallest r with K_r in the family; 0 if the family has no clique.
inline int omega_lower(const GraphFamily &f) {
    int best = 0;
    for (const auto &g : f.members())
        if (is_clique(g) && (best == 0 || g.order() < best)) best = g.order();
    return best;
}

/// Smallest r such that the family holds a complete r-partite graph; 0 if none.
inline int beta(const GraphFamily &f) {
    int best = 0;
    for (const auto &g : f.members()) {
        int parts = multipartite_part_count(g);
        if (parts > 0 && (best == 0 || parts < best)) best = parts;
    }
    return best;
}

/// Whether Her(F) has members of every order. The necessary direction is the
/// Ramsey argument (K_r and E_s both forbidden leaves only finitely many
/// graphs); sufficiency comes from the witnesses K_n (no clique forbidden)
/// and T_{beta-1}(n) (every induced subgraph is complete (beta-1)-partite or
/// smaller, hence never forbidden).
inline bool is_infinite(const GraphFamily &f) {
    const int w = omega_lower(f);
    return w == 0 || (w >= 2 && beta(f) >= 2);
}

inline bool membership(const GraphFamily &f, const Graph &g) {
    for (const auto &h : f.members())
        if (contains_induced(g, h)) return false;
    return true;
}

/// Membership test for g when g minus vertex v is already known to be in
/// Her(F): only copies through v can be new.
inline bool membership_extending(const GraphFamily &f, const Graph &g, int v) {
    for (const auto &h : f.members())
        if (contains_induced_through(g, h, v)) return false;
    return true;
}

struct PropertyClassification {
    int omega_lower = 0;
    int beta = 0;
    bool infinite = false;
    /// Limits; unset when the property is finite.
    std::optional<Rational> pi;
    std::optional<Rational> lambda_alpha_limit;  // for every alpha > 1
    std::optional<Rational> lambda_one_limit;
};

inline PropertyClassification classify(const GraphFamily &f) {
    PropertyClassification c;
    c.omega_lower = omega_lower(f);
    c.beta = beta(f);
    c.infinite = is_infinite(f);
    if (!c.infinite) return c;
    if (c.omega_lower == 0) {
        c.pi = Rational(1);
        c.lambda_one_limit = Rational(1);
    } else {
        c.pi = Rational(1) - Rational(1, c.beta - 1);
        // the largest clique in Her(F) is K_{omega-1}
        c.lambda_one_limit = Rational(1) - Rational(1, c.omega_lower - 1);
    }
    c.lambda_alpha_limit = c.pi;
    return c;
}

/// Witness graph of order n inside Her(F) realising the density lower
/// bound: K_n when no clique is forbidden, else T_{beta-1}(n).
inline std::optional<Graph> density_witness(const PropertyClassification &c, int n) {
    if (!c.infinite) return std::nullopt;
    if (c.omega_lower == 0) return complete_graph(n);
    return turan_graph(c.beta - 1, n);
}

}  // namespace hered

#endif
