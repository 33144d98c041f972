// Oracle benchmark: the exact-arithmetic reference scan vs the modular
// kernel, serial and with OpenMP threads.  Instances are infeasible, so
// every implementation scans the whole candidate space and the throughput
// numbers are comparable.  Exits nonzero if the implementations disagree.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "unitnil/matrix.hpp"
#include "unitnil/verify.hpp"

using namespace unitnil;

namespace {

int g_disagreements = 0;

struct Run {
    verify::OracleOutcome outcome;
    double seconds;
};

Run timed(const std::function<verify::OracleOutcome()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    auto out = fn();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {std::move(out), secs};
}

void report(const std::string& name, const Run& run) {
    std::printf("  %-22s %12llu candidates  %8.3f s  %10.2f k/s  -> %s\n", name.c_str(),
                static_cast<unsigned long long>(run.outcome.candidates), run.seconds,
                run.outcome.candidates / run.seconds / 1000.0,
                run.outcome.feasible ? "feasible" : "infeasible");
}

void check_agree(const std::string& what, const Run& a, const Run& b) {
    const bool same = a.outcome.feasible == b.outcome.feasible &&
                      a.outcome.witness_index == b.outcome.witness_index &&
                      a.outcome.candidates == b.outcome.candidates;
    if (!same) {
        std::printf("  DISAGREEMENT: %s\n", what.c_str());
        ++g_disagreements;
    }
}

int omp_threads() {
#ifdef _OPENMP
    return omp_get_max_threads() > 1 ? omp_get_max_threads() : 2;
#else
    return 2;
#endif
}

}  // namespace

int main() {
    const auto f2 = FieldSpec::prime(2);
    const int threads = omp_threads();

    {
        const Matrix a = verify::random_matrix_of_rank(4, 1, f2, 1);
        const int k = 2;  // k * rank = 2 < 4: infeasible, full scan
        std::printf("M_4(F_2), rank 1, k = 2 (65536 candidates, all implementations):\n");
        const Run ref = timed([&] { return verify::exhaustive_feasible_reference(a, k); });
        const Run serial = timed([&] { return verify::exhaustive_feasible(a, k, {}, 1); });
        const Run parallel =
            timed([&] { return verify::exhaustive_feasible(a, k, {}, threads); });
        report("reference", ref);
        report("kernel serial", serial);
        report("kernel " + std::to_string(threads) + " threads", parallel);
        check_agree("reference vs kernel serial", ref, serial);
        check_agree("kernel serial vs parallel", serial, parallel);
        std::printf("  kernel speedup over reference: %.1fx\n\n", ref.seconds / serial.seconds);
    }

    {
        const Matrix a = verify::random_matrix_of_rank(5, 2, f2, 2);
        const int k = 2;  // k * rank = 4 < 5: infeasible, full scan
        std::printf("M_5(F_2), rank 2, k = 2 (2^25 candidates, kernel only):\n");
        const Run serial = timed([&] { return verify::exhaustive_feasible(a, k, {}, 1); });
        const Run parallel =
            timed([&] { return verify::exhaustive_feasible(a, k, {}, threads); });
        report("kernel serial", serial);
        report("kernel " + std::to_string(threads) + " threads", parallel);
        check_agree("kernel serial vs parallel", serial, parallel);
        std::printf("  parallel speedup: %.2fx with %d threads\n", serial.seconds / parallel.seconds,
                    threads);
    }

    if (g_disagreements != 0) {
        std::printf("BENCH: %d disagreement(s)\n", g_disagreements);
        return 1;
    }
    std::printf("BENCH: all implementations agree\n");
    return 0;
}
