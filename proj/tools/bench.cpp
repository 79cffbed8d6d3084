// Benchmark harness with two comparisons:
//  1. kernel check: serial scalar truth-table weight vs the bitsliced
//     OpenMP kernel (same result, different speed);
//  2. scaling check: recursion / trace / root-based weights at large n,
//     where brute force is out of reach entirely.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rswt/truth_table.hpp"
#include "rswt/weights.hpp"

using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
    std::string spec = "(1,5)+(1,3)";
    int kernel_n = 24;
    if (argc > 1) spec = argv[1];
    if (argc > 2) kernel_n = std::atoi(argv[2]);

    const rswt::QuadraticRS q = rswt::parse_function(spec);
    std::printf("function %s\n", q.to_spec().c_str());
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled\n");
#endif

    {
        std::printf("\n-- truth-table kernels at n = %d (%llu inputs) --\n", kernel_n,
                    static_cast<unsigned long long>(1ull << kernel_n));
        const rswt::FunctionInstance f(q, kernel_n);
        auto t0 = Clock::now();
        const uint64_t ws = rswt::brute_force_weight_serial(f, kernel_n);
        const double ts = seconds_since(t0);
        t0 = Clock::now();
        const uint64_t wb = rswt::brute_force_weight(f, kernel_n);
        const double tb = seconds_since(t0);
        std::printf("serial scalar  : %llu in %.3fs\n", static_cast<unsigned long long>(ws), ts);
        std::printf("bitsliced/omp  : %llu in %.3fs (%.1fx)\n",
                    static_cast<unsigned long long>(wb), tb, ts / (tb > 0 ? tb : 1e-9));
        std::printf("agreement      : %s\n", ws == wb ? "exact" : "MISMATCH");
    }

    {
        std::printf("\n-- weight scaling in n (brute force would need 2^n evaluations) --\n");
        auto t0 = Clock::now();
        const rswt::FunctionAnalysis a = rswt::analyze(q);
        const double tsetup = seconds_since(t0);
        std::printf("one-time setup (rules matrix, polynomials, brute-forced window): %.3fs\n",
                    tsetup);
        for (long n : {100L, 250L, 500L}) {
            t0 = Clock::now();
            const mpz_class wr = rswt::weight_by_recursion(a, n);
            const double t_rec = seconds_since(t0);
            t0 = Clock::now();
            const mpz_class wt = rswt::weight_by_trace(a, n);
            const double t_tr = seconds_since(t0);
            t0 = Clock::now();
            const mpz_class wo = rswt::weight_by_roots(a, n);
            const double t_rt = seconds_since(t0);
            std::printf("n=%-4ld recursion %.4fs  trace %.4fs  roots %.4fs  agree=%s\n", n, t_rec,
                        t_tr, t_rt, (wr == wt && wt == wo) ? "exact" : "MISMATCH");
            std::printf("       w = %s\n", wr.get_str().c_str());
        }
    }
    return 0;
}
