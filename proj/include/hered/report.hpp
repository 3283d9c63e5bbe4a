#ifndef HERED_REPORT_HPP
#define HERED_REPORT_HPP

#include "hered/extremal.hpp"
#include "hered/family.hpp"
#include "hered/graph_io.hpp"
#include "hered/lambda.hpp"
#include "hered/verify.hpp"

#include "json.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace hered {

/// Bumped whenever a field changes meaning or disappears.
inline constexpr int kSchemaVersion = 1;

/// Shortest round-trip decimal form, e.g. "2", "1.5", "1e-04".
inline std::string format_real(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) return "nan";
    return {buf, ptr};
}

namespace detail {

inline nlohmann::json rational_or_null(const std::optional<Rational> &r) {
    return r ? nlohmann::json(r->str()) : nlohmann::json(nullptr);
}

inline nlohmann::json finite_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

inline nlohmann::json family_json(const GraphFamily &f) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &form : f.forms()) out.push_back(form.bytes);
    return out;
}

}  // namespace detail

inline nlohmann::json classification_json(const GraphFamily &f, const PropertyClassification &c) {
    return {
        {"schema_version", kSchemaVersion},
        {"kind", "classification"},
        {"family", detail::family_json(f)},
        {"omega_lower", c.omega_lower},
        {"beta", c.beta},
        {"infinite", c.infinite},
        {"pi", detail::rational_or_null(c.pi)},
        {"lambda_alpha_limit", detail::rational_or_null(c.lambda_alpha_limit)},
        {"lambda_one_limit", detail::rational_or_null(c.lambda_one_limit)},
    };
}

inline nlohmann::json lambda_result_json(const LambdaResult &r) {
    return {
        {"alpha", r.alpha},
        {"value", r.value},
        {"exact", detail::rational_or_null(r.exact)},
        {"vector", r.vector},
        {"kkt_residual", detail::finite_or_null(r.kkt_residual)},
        {"restarts_used", r.restarts_used},
        {"converged", r.converged},
    };
}

inline nlohmann::json lambda_report_json(const Graph &g, const std::vector<LambdaResult> &results) {
    nlohmann::json rs = nlohmann::json::array();
    for (const auto &r : results) {
        auto j = lambda_result_json(r);
        if (g.order() > 0) j["lower_bound"] = lambda_lower_bound(g, r.alpha);
        rs.push_back(std::move(j));
    }
    return {
        {"schema_version", kSchemaVersion},
        {"kind", "lambda"},
        {"graph", to_graph6(g)},
        {"order", g.order()},
        {"edges", g.edge_count()},
        {"clique_number", clique_number(g)},
        {"spectral_radius", spectral_radius(g)},
        {"results", std::move(rs)},
    };
}

inline nlohmann::json search_report_json(const SearchReport &rep) {
    nlohmann::json per_n = nlohmann::json::array();
    for (const auto &rec : rep.per_n) {
        nlohmann::json row{{"n", rec.n}, {"count_of_graphs", rec.count_of_graphs}};
        if (rec.ex) {
            row["ex"] = rec.ex->ex;
            nlohmann::json w = nlohmann::json::array();
            for (const auto &f : rec.ex->witnesses) w.push_back(f.bytes);
            row["ex_witnesses"] = std::move(w);
        } else {
            row["ex"] = nullptr;
            row["ex_witnesses"] = nlohmann::json::array();
        }
        nlohmann::json lam = nlohmann::json::object();
        for (const auto &[a, lv] : rec.lambda_by_alpha) {
            if (!lv) {
                lam[format_real(a)] = nullptr;
                continue;
            }
            lam[format_real(a)] = {{"value", lv->value},
                                   {"exact", detail::rational_or_null(lv->exact)},
                                   {"witness", lv->witness.bytes},
                                   {"converged", lv->converged}};
        }
        row["lambda_by_alpha"] = std::move(lam);
        per_n.push_back(std::move(row));
    }

    nlohmann::json edge_seq = nlohmann::json::array();
    for (const auto &t : rep.normalized_edge_sequence)
        edge_seq.push_back({{"n", t.n}, {"ratio", t.ratio.str()}, {"value", t.ratio.to_double()}});

    nlohmann::json lam_seq = nlohmann::json::object();
    for (const auto &[a, seq] : rep.normalized_lambda_sequences) {
        nlohmann::json s = nlohmann::json::array();
        for (const auto &[n, v] : seq) s.push_back({{"n", n}, {"value", v}});
        lam_seq[format_real(a)] = std::move(s);
    }

    nlohmann::json alphas = nlohmann::json::array();
    for (double a : rep.alphas) alphas.push_back(a);

    auto cls = classification_json(rep.family, rep.classification);
    cls.erase("schema_version");
    cls.erase("kind");
    return {
        {"schema_version", kSchemaVersion},
        {"kind", "extremal_report"},
        {"family", detail::family_json(rep.family)},
        {"classification", std::move(cls)},
        {"alphas", std::move(alphas)},
        {"per_n", std::move(per_n)},
        {"normalized_edge_sequence", std::move(edge_seq)},
        {"normalized_lambda_sequences", std::move(lam_seq)},
        {"checks",
         {{"edge_sequence_nonincreasing", rep.checks.edge_sequence_nonincreasing},
          {"ratios_dominate_pi", rep.checks.ratios_dominate_pi},
          {"density_witness_realised", rep.checks.density_witness_realised},
          {"lambda_dominates_edges", rep.checks.lambda_dominates_edges}}},
        {"notes", rep.notes},
    };
}

inline bool report_checks_pass(const SearchReport &rep) {
    const auto &c = rep.checks;
    return c.edge_sequence_nonincreasing && c.ratios_dominate_pi && c.density_witness_realised &&
           c.lambda_dominates_edges;
}

inline nlohmann::json verification_json(const std::vector<VerificationOutcome> &outcomes, const std::string &corpus,
                                        std::size_t corpus_size, const std::vector<double> &alphas) {
    nlohmann::json list = nlohmann::json::array();
    bool passed = true;
    for (const auto &o : outcomes) {
        nlohmann::json v = nlohmann::json::array();
        for (const auto &c : o.violations)
            v.push_back({{"graph6", c.graph6},
                         {"other", c.other_graph6},
                         {"alpha", c.alpha},
                         {"r", c.r},
                         {"k", c.k},
                         {"lhs", c.lhs},
                         {"rhs", c.rhs},
                         {"trace", c.trace}});
        passed = passed && o.passed();
        list.push_back({{"claim_id", o.claim_id},
                        {"instances_checked", o.instances_checked},
                        {"max_slack", detail::finite_or_null(o.max_slack)},
                        {"min_slack", detail::finite_or_null(o.min_slack)},
                        {"violations", std::move(v)}});
    }
    return {
        {"schema_version", kSchemaVersion},
        {"kind", "verification"},
        {"corpus", corpus},
        {"corpus_size", corpus_size},
        {"alphas", alphas},
        {"outcomes", std::move(list)},
        {"passed", passed},
    };
}

// ---------------------------------------------------------------------------
// CSV tables (one row per record).

inline std::string search_report_csv(const SearchReport &rep) {
    std::ostringstream out;
    out << "n,count_of_graphs,ex,ratio,ratio_value";
    for (double a : rep.alphas) out << ",lambda_" << format_real(a) << ",normalized_lambda_" << format_real(a);
    out << '\n';
    for (const auto &rec : rep.per_n) {
        out << rec.n << ',' << rec.count_of_graphs << ',';
        if (rec.ex) out << rec.ex->ex;
        out << ',';
        for (const auto &t : rep.normalized_edge_sequence)
            if (t.n == rec.n) out << t.ratio.str() << ',' << format_real(t.ratio.to_double());
        if (rec.n < 2 || !rec.ex) out << ',';
        for (double a : rep.alphas) {
            out << ',';
            auto it = rec.lambda_by_alpha.find(a);
            if (it != rec.lambda_by_alpha.end() && it->second) {
                out << format_real(it->second->value) << ','
                    << format_real(it->second->value * std::pow(static_cast<double>(rec.n), 2.0 / a - 2.0));
            } else {
                out << ',';
            }
        }
        out << '\n';
    }
    return out.str();
}

inline std::string verification_csv(const std::vector<VerificationOutcome> &outcomes) {
    std::ostringstream out;
    out << "claim_id,instances_checked,violations,max_slack,min_slack\n";
    for (const auto &o : outcomes)
        out << o.claim_id << ',' << o.instances_checked << ',' << o.violations.size() << ','
            << format_real(o.max_slack) << ',' << format_real(o.min_slack) << '\n';
    return out.str();
}

inline std::string classification_csv(const GraphFamily &f, const PropertyClassification &c) {
    std::ostringstream out;
    out << "family,omega_lower,beta,infinite,pi,lambda_alpha_limit,lambda_one_limit\n";
    std::string fam;
    for (const auto &form : f.forms()) fam += (fam.empty() ? "" : " ") + form.bytes;
    auto r = [](const std::optional<Rational> &x) { return x ? x->str() : std::string(); };
    out << '"' << fam << "\"," << c.omega_lower << ',' << c.beta << ',' << (c.infinite ? "true" : "false") << ','
        << r(c.pi) << ',' << r(c.lambda_alpha_limit) << ',' << r(c.lambda_one_limit) << '\n';
    return out.str();
}

inline std::string lambda_csv(const std::vector<LambdaResult> &results) {
    std::ostringstream out;
    out << "alpha,value,exact,kkt_residual,restarts_used,converged\n";
    for (const auto &r : results)
        out << format_real(r.alpha) << ',' << format_real(r.value) << ',' << (r.exact ? r.exact->str() : "") << ','
            << format_real(r.kkt_residual) << ',' << r.restarts_used << ',' << (r.converged ? "true" : "false")
            << '\n';
    return out.str();
}

}  // namespace hered

#endif
