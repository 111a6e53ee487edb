// One line per acceptance criterion: PASS/FAIL, wall time against its limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "motivic/verify.hpp"

using namespace motivic;

namespace {

struct Criterion {
    const char* name;
    double limit_s;
    std::function<SuiteReport()> run;
    std::size_t min_cases = 0;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"1 h2 swap table (points, P1+P1 over odd q < 200, conjugation)", 1.0, [] { return run_h2_table_suite(); }},
        {"2 zeta from counts equals catalog product, q in {3,5,7,9}", 30.0, [] { return run_zeta_square_suite(); }},
        {"3 scissor corpus, m <= 6, Witt precision 10", 60.0, [] { return run_scissor_suite({}, 6, 10); }, 20},
        {"4 Witt ring: ghosts, inverse, Teichmuller", 10.0, [] { return run_witt_ring_suite({}, 500, 12); }},
        {"5 Hilbert symbol vs mod 2^8 oracle, Steinberg relations", 5.0, [] { return run_hilbert_oracle_suite({}, 200); }},
        {"6 genus-one curves over F2 and F3: zeta and Weil", 10.0, [] { return run_curve_suite(); }},
        {"7 Euler product equals measure zeta, q in {2,3}", 20.0, [] { return run_euler_suite({}, 10); }},
        {"8 odd primes 3, 5, 7 give 0 on the swap scenarios", 1.0, [] { return run_odd_blind_suite(); }},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        SuiteReport r;
        std::string why;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.passed = false;
            why = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = r.passed && secs < c.limit_s && r.cases.size() >= c.min_cases;
        if (secs >= c.limit_s) why = "over time limit";
        if (r.cases.size() < c.min_cases) why = "only " + std::to_string(r.cases.size()) + " cases";
        for (const auto& k : r.cases)
            if (!k.passed && why.empty()) why = k.name + ": " + k.detail;
        std::printf("%s  criterion %-62s %7.3f s (limit %g s, %zu checks)%s%s\n", ok ? "PASS" : "FAIL", c.name, secs,
                    c.limit_s, r.cases.size(), why.empty() ? "" : "  ", why.c_str());
        failed += ok ? 0 : 1;
    }
    std::printf("%d of %zu criteria failed\n", failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
