#ifndef HERED_LAMBDA_HPP
#define HERED_LAMBDA_HPP

#include "hered/graph.hpp"
#include "hered/rational.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace hered {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2012ULL;

/// Values of alpha this close to 1 or 2 take the exact routes.
inline constexpr double kAlphaSnap = 1e-9;

struct LambdaOptions {
    int random_restarts = 16;
    std::uint64_t seed = kDefaultSeed;
    /// KKT residual required to report convergence.
    double tolerance = 1e-8;
    int max_iterations = 100000;
    /// Also start from every maximal clique (capped), which matters when
    /// alpha is close to 1 and local maxima sit on smaller cliques.
    bool clique_starts = true;
    int max_clique_starts = 32;
};

struct LambdaResult {
    double alpha = 1.0;
    double value = 0.0;
    /// Nonnegative weights with unit alpha-norm attaining `value`.
    std::vector<double> vector;
    double kkt_residual = 0.0;
    int restarts_used = 0;
    bool converged = true;
    /// Set when the value is known exactly (alpha = 1).
    std::optional<Rational> exact;
};

/// 2 * sum over edges of x_u x_v.
inline double lambda_objective(const Graph &g, std::span<const double> x) {
    double total = 0.0;
    for (int u = 0; u < g.order(); ++u) {
        double row = 0.0;
        for_each_vertex(g.neighbors(u), [&](int v) { row += x[v]; });
        total += x[u] * row;
    }
    return total;
}

namespace detail {

inline double power_pos(double x, double p) {
    if (x <= 0.0) return p == 0.0 ? 1.0 : 0.0;
    if (p == 1.0) return x;
    return std::pow(x, p);
}

inline void adjacency_times(const Graph &g, std::span<const double> x, std::vector<double> &out) {
    out.assign(static_cast<std::size_t>(g.order()), 0.0);
    for (int u = 0; u < g.order(); ++u) {
        double s = 0.0;
        for_each_vertex(g.neighbors(u), [&](int v) { s += x[v]; });
        out[u] = s;
    }
}

inline double alpha_norm(std::span<const double> x, double alpha) {
    double s = 0.0;
    for (double v : x) s += power_pos(std::abs(v), alpha);
    return std::pow(s, 1.0 / alpha);
}

inline bool normalize_alpha(std::vector<double> &x, double alpha) {
    double norm = alpha_norm(x, alpha);
    if (!(norm > 0.0) || !std::isfinite(norm)) return false;
    for (double &v : x) v /= norm;
    return true;
}

// Lagrangian gradient 2(Ax)_u - 2 f x_u^(alpha-1) of the scale-invariant
// objective x'Ax / |x|_alpha^2 at a unit vector.
inline void stationarity_gradient(const Graph &g, std::span<const double> x, double alpha, double f,
                                  std::vector<double> &ax, std::vector<double> &grad) {
    adjacency_times(g, x, ax);
    grad.resize(ax.size());
    for (std::size_t u = 0; u < ax.size(); ++u) grad[u] = 2.0 * ax[u] - 2.0 * f * power_pos(x[u], alpha - 1.0);
}

}  // namespace detail

/// Stationarity residual of a nonnegative unit vector: on the support,
/// |2(Ax)_u - 2 value x_u^(alpha-1)|; off the support, the positive part of
/// the same expression (a zero entry must not want to grow).
inline double kkt_residual(const Graph &g, std::span<const double> x, double alpha) {
    double f = lambda_objective(g, x);
    std::vector<double> ax, grad;
    detail::stationarity_gradient(g, x, alpha, f, ax, grad);
    double res = 0.0;
    for (std::size_t u = 0; u < grad.size(); ++u)
        res = std::max(res, x[u] > 0.0 ? std::abs(grad[u]) : std::max(0.0, grad[u]));
    return res;
}

namespace detail {

struct ComponentOptimum {
    std::vector<double> x;
    double value = 0.0;
    double residual = std::numeric_limits<double>::infinity();
    bool converged = false;
    long iterations = 0;
};

// Multi-start ascent on one connected component with at least one edge.
class ComponentOptimizer {
public:
    ComponentOptimizer(const Graph &g, double alpha, const LambdaOptions &opt) : g_(g), alpha_(alpha), opt_(opt) {}

    ComponentOptimum ascend(std::vector<double> x) const {
        ComponentOptimum out;
        if (!normalize_alpha(x, alpha_)) return out;
        const int m = g_.order();
        double f = lambda_objective(g_, x);
        double step = 0.5;
        std::vector<double> ax, grad, trial(static_cast<std::size_t>(m)), shorter(static_cast<std::size_t>(m));
        int flat = 0;
        double res = 0.0;
        int it = 0;
        for (; it < opt_.max_iterations; ++it) {
            stationarity_gradient(g_, x, alpha_, f, ax, grad);
            res = 0.0;
            for (int u = 0; u < m; ++u) res = std::max(res, x[u] > 0.0 ? std::abs(grad[u]) : std::max(0.0, grad[u]));
            if (res <= kPolishThreshold) break;

            // grad is the gradient of the scale-invariant objective, so the
            // directional derivative along it is |grad|^2 (Armijo test)
            double slope = 0.0;
            for (int u = 0; u < m; ++u) slope += grad[u] * grad[u];
            bool accepted = false;
            double t = std::min(step * 2.0, kMaxStep);
            while (t > 1e-20) {
                for (int u = 0; u < m; ++u) trial[u] = std::max(0.0, x[u] + t * grad[u]);
                if (normalize_alpha(trial, alpha_)) {
                    double ft = lambda_objective(g_, trial);
                    if (ft > f && ft - f >= 1e-4 * t * slope) {
                        // keep halving while that still helps; a plain Armijo
                        // step can settle into a neutral oscillation on
                        // bipartite components
                        while (t > 1e-20) {
                            for (int u = 0; u < m; ++u) shorter[u] = std::max(0.0, x[u] + 0.5 * t * grad[u]);
                            if (!normalize_alpha(shorter, alpha_)) break;
                            double fs = lambda_objective(g_, shorter);
                            if (!(fs > ft)) break;
                            trial.swap(shorter);
                            ft = fs;
                            t *= 0.5;
                        }
                        flat = (ft - f) <= 1e-15 * std::max(1.0, f) ? flat + 1 : 0;
                        x.swap(trial);
                        f = ft;
                        accepted = true;
                        break;
                    }
                }
                t *= 0.5;
            }
            if (!accepted || flat > kFlatLimit) break;
            step = t;
        }
        polish(x);
        out.value = lambda_objective(g_, x);
        out.residual = kkt_residual(g_, x, alpha_);
        out.converged = out.residual <= opt_.tolerance;
        out.iterations = it;
        out.x = std::move(x);
        return out;
    }

    ComponentOptimum best_of_starts(std::uint64_t stream, int &restarts) const {
        const int m = g_.order();
        ComponentOptimum best;
        bool have = false;
        auto consider = [&](std::vector<double> start) {
            ++restarts;
            auto r = ascend(std::move(start));
            if (r.x.empty()) return;
            if (!have || r.value > best.value) {
                best = std::move(r);
                have = true;
            }
        };

        consider(std::vector<double>(static_cast<std::size_t>(m), 1.0));
        for (int v = 0; v < m; ++v) {
            std::vector<double> s(static_cast<std::size_t>(m), 1e-3);
            s[v] = 1.0;
            consider(std::move(s));
        }
        std::mt19937_64 rng(opt_.seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        for (int k = 0; k < opt_.random_restarts; ++k) {
            std::vector<double> s(static_cast<std::size_t>(m));
            for (double &v : s) v = unif(rng);
            consider(std::move(s));
        }
        if (opt_.clique_starts) {
            int count = 0;
            for_each_maximal_clique(g_, [&](VertexSet c) {
                std::vector<double> s(static_cast<std::size_t>(m), 1e-3);
                for_each_vertex(c, [&](int v) { s[v] = 1.0; });
                consider(std::move(s));
                return ++count < opt_.max_clique_starts;
            });
        }
        return best;
    }

private:
    static constexpr double kPolishThreshold = 1e-6;
    static constexpr double kMaxStep = 1e6;
    static constexpr int kFlatLimit = 200;

    // Newton iterations on (Ax)_u x_u^(1-alpha) = mu, sum x_u^alpha = 1, in
    // the variables s_u = log x_u. Every local maximiser on a connected
    // component is strictly positive for alpha > 1, but for alpha near 1 some
    // entries are tiny (x_u = ((Ax)_u / mu)^(1/(alpha-1))) and the curvature
    // x^(alpha-2) stalls plain gradient steps there; in log form every row
    // stays of order mu. Entries the ascent clipped to zero are seeded from
    // that coordinate-wise fixed point. The result is kept only if it lowers
    // the residual without losing value.
    void polish(std::vector<double> &x) const {
        const int m = g_.order();
        double f0 = lambda_objective(g_, x);
        double r0 = kkt_residual(g_, x, alpha_);
        if (!std::isfinite(r0) || r0 > 1e-2 || !(f0 > 0.0)) return;

        std::vector<double> ax;
        adjacency_times(g_, x, ax);
        Eigen::VectorXd s(m + 1);
        for (int u = 0; u < m; ++u) {
            double xu = x[u];
            if (!(xu > 0.0)) {
                if (!(ax[u] > 0.0)) return;
                xu = std::pow(ax[u] / f0, 1.0 / (alpha_ - 1.0));
            }
            if (!(xu > 0.0) || !std::isfinite(xu)) return;
            s[u] = std::log(xu);
        }
        s[m] = f0;

        Eigen::MatrixXd jac(m + 1, m + 1);
        Eigen::VectorXd rhs(m + 1), xs(m);
        for (int iter = 0; iter < 50; ++iter) {
            for (int u = 0; u < m; ++u) xs[u] = std::exp(s[u]);
            jac.setZero();
            double worst = 0.0, norm_sum = -1.0;
            for (int u = 0; u < m; ++u) {
                const double scale = std::exp((1.0 - alpha_) * s[u]);
                double axu = 0.0;
                for_each_vertex(g_.neighbors(u), [&](int v) {
                    axu += xs[v];
                    jac(u, v) = xs[v] * scale;
                });
                rhs[u] = -(axu * scale - s[m]);
                worst = std::max(worst, std::abs(rhs[u]));
                jac(u, u) = (1.0 - alpha_) * axu * scale;
                jac(u, m) = -1.0;
                const double xa = std::exp(alpha_ * s[u]);
                jac(m, u) = alpha_ * xa;
                norm_sum += xa;
            }
            rhs[m] = -norm_sum;
            if (worst < 1e-14 * std::max(1.0, s[m]) && std::abs(norm_sum) < 1e-15) break;
            Eigen::FullPivLU<Eigen::MatrixXd> lu(jac);
            if (!lu.isInvertible()) return;
            Eigen::VectorXd ds = lu.solve(rhs);
            if (!ds.allFinite()) return;
            // damp very long steps in log space (a factor e^4 per entry)
            double longest = ds.head(m).cwiseAbs().maxCoeff();
            if (longest > 4.0) ds *= 4.0 / longest;
            s += ds;
        }
        std::vector<double> cand(x.size());
        for (int u = 0; u < m; ++u) cand[u] = std::exp(s[u]);
        if (!normalize_alpha(cand, alpha_)) return;
        double f1 = lambda_objective(g_, cand);
        double r1 = kkt_residual(g_, cand, alpha_);
        if (r1 < r0 && f1 >= f0 - 1e-12 * std::max(1.0, f0)) x.swap(cand);
    }

    const Graph &g_;
    double alpha_;
    const LambdaOptions &opt_;
};

inline void check_alpha(double alpha) {
    if (!(alpha >= 1.0) || !std::isfinite(alpha))
        throw std::invalid_argument("alpha must be a finite real >= 1, got " + std::to_string(alpha));
}

}  // namespace detail

/// Lagrangian endpoint: 1 - 1/omega(G) exactly (Motzkin-Straus), witnessed
/// by the uniform vector on a maximum clique.
inline LambdaResult lambda_one(const Graph &g) {
    LambdaResult r;
    r.alpha = 1.0;
    r.vector.assign(static_cast<std::size_t>(g.order()), 0.0);
    if (g.order() == 0) {
        r.exact = Rational(0);
        return r;
    }
    VertexSet clique = maximum_clique(g);
    int w = std::popcount(clique);
    for_each_vertex(clique, [&](int v) { r.vector[v] = 1.0 / w; });
    r.exact = Rational(1) - Rational(1, w);
    r.value = lambda_objective(g, r.vector);
    r.kkt_residual = kkt_residual(g, r.vector, 1.0);
    r.restarts_used = 0;
    r.converged = true;
    return r;
}

/// lambda^(alpha)(G) for alpha >= 1. Each connected component is optimised by
/// multi-start projected gradient ascent with a Newton polish; component
/// optima are then combined exactly (for alpha <= 2 the best single component
/// wins, for alpha > 2 the weights follow the Hoelder split).
inline LambdaResult lambda_alpha(const Graph &g, double alpha, const LambdaOptions &opt = {}) {
    detail::check_alpha(alpha);
    if (alpha - 1.0 <= kAlphaSnap) return lambda_one(g);
    if (std::abs(alpha - 2.0) <= kAlphaSnap) alpha = 2.0;

    const int n = g.order();
    LambdaResult r;
    r.alpha = alpha;
    r.vector.assign(static_cast<std::size_t>(n), 0.0);
    if (n == 0) return r;

    struct Part {
        VertexSet verts;
        detail::ComponentOptimum opt;
    };
    std::vector<Part> parts;
    std::uint64_t stream = 0;
    for (VertexSet comp : connected_components(g)) {
        ++stream;
        if (std::popcount(comp) < 2) continue;
        Graph sub = g.induced(comp);
        detail::ComponentOptimizer optimizer(sub, alpha, opt);
        parts.push_back({comp, optimizer.best_of_starts(stream, r.restarts_used)});
    }

    if (parts.empty()) {
        // edgeless: every unit vector gives 0
        double w = std::pow(static_cast<double>(n), -1.0 / alpha);
        std::fill(r.vector.begin(), r.vector.end(), w);
        r.kkt_residual = 0.0;
        return r;
    }

    std::vector<double> weight(parts.size(), 0.0);  // alpha-mass per component
    if (alpha <= 2.0) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < parts.size(); ++i)
            if (parts[i].opt.value > parts[best].opt.value) best = i;
        weight[best] = 1.0;
    } else {
        // maximise sum_i lambda_i a_i^(2/alpha) over the simplex:
        // a_i proportional to lambda_i^q with q = alpha/(alpha-2)
        const double q = alpha / (alpha - 2.0);
        double top = -std::numeric_limits<double>::infinity();
        for (const auto &p : parts) top = std::max(top, q * std::log(p.opt.value));
        double sum = 0.0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            weight[i] = std::exp(q * std::log(parts[i].opt.value) - top);
            sum += weight[i];
        }
        for (double &w : weight) w /= sum;
    }

    bool converged = true;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (weight[i] <= 0.0) continue;
        converged = converged && parts[i].opt.converged;
        double scale = std::pow(weight[i], 1.0 / alpha);
        int k = 0;
        for_each_vertex(parts[i].verts, [&](int v) { r.vector[v] = scale * parts[i].opt.x[k++]; });
    }
    detail::normalize_alpha(r.vector, alpha);
    r.value = lambda_objective(g, r.vector);
    r.kkt_residual = kkt_residual(g, r.vector, alpha);
    r.converged = converged && r.kkt_residual <= opt.tolerance;
    return r;
}

/// 2 e(G) / n^(2/alpha): the value of the uniform vector.
inline double lambda_lower_bound(const Graph &g, double alpha) {
    detail::check_alpha(alpha);
    if (g.order() == 0) throw std::invalid_argument("lower bound undefined for the null graph");
    return 2.0 * g.edge_count() / std::pow(static_cast<double>(g.order()), 2.0 / alpha);
}

/// Largest adjacency eigenvalue by power iteration on A + I (the shift keeps
/// bipartite graphs from oscillating), stopped on the Rayleigh quotient.
inline double spectral_radius(const Graph &g, double tolerance = 1e-10) {
    const int n = g.order();
    if (n == 0 || g.edge_count() == 0) return 0.0;
    std::vector<double> x(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> ax;
    double theta = 0.0;
    for (int it = 0; it < 2000000; ++it) {
        detail::adjacency_times(g, x, ax);
        double rq = 0.0, norm2 = 0.0;
        for (int u = 0; u < n; ++u) {
            rq += x[u] * ax[u];
            norm2 += x[u] * x[u];
        }
        rq /= norm2;
        double resid = 0.0;
        for (int u = 0; u < n; ++u) resid += (ax[u] - rq * x[u]) * (ax[u] - rq * x[u]);
        resid = std::sqrt(resid / norm2);
        theta = rq;
        // Rayleigh quotient error is quadratic in the residual
        if (resid <= tolerance) break;
        double norm = 0.0;
        for (int u = 0; u < n; ++u) {
            x[u] += ax[u];
            norm += x[u] * x[u];
        }
        norm = std::sqrt(norm);
        for (double &v : x) v /= norm;
    }
    return theta;
}

}  // namespace hered

#endif
