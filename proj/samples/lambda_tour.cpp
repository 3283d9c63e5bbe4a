// Walks through the main entry points on a few small graphs.
#include "hered.hpp"

#include <cstdio>

int main() {
    using namespace hered;

    Graph c5 = parse_graph("C5");
    std::printf("C5 as graph6: %s\n", to_graph6(c5).c_str());
    for (double a : {1.0, 1.5, 2.0, 3.0}) {
        auto r = lambda_alpha(c5, a);
        std::printf("  lambda^(%g)(C5) = %.10f%s\n", a, r.value, r.exact ? (" = " + r.exact->str()).c_str() : "");
    }

    auto tri_free = GraphFamily::parse({"K3"});
    auto cls = classify(tri_free);
    std::printf("Her(K3): omega=%d beta=%d pi=%s\n", cls.omega_lower, cls.beta, cls.pi->str().c_str());
    for (int n = 2; n <= 7; ++n) {
        auto ex = ex_value(tri_free, n);
        std::printf("  ex(n=%d) = %d, %zu extremal graph(s), first %s\n", n, ex->ex, ex->witnesses.size(),
                    ex->witnesses.front().bytes.c_str());
    }

    Graph t = turan_graph(3, 7);
    auto check = evaluate_in1(t, 3, 2.0);
    std::printf("T_3(7) at alpha=2: lambda=%.10f bound=%.10f\n", check.lhs, check.rhs);
    return 0;
}
