/*
 * Timing harness: runs the serial reference engine and the task-parallel
 * engine on the same quiver and verifies that the reports agree exactly.
 *
 *   bench_search [preset] [max_depth] [repetitions]
 *
 * Defaults: Atilde(3,1), depth 12, 3 repetitions.
 */
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "greenseq/presets.hpp"
#include "greenseq/search.hpp"

using namespace greenseq;

namespace {

bool reports_equal(const SearchReport& a, const SearchReport& b) {
    return a.mgs == b.mgs && a.mgs_total == b.mgs_total && a.complete == b.complete &&
           a.truncated_branches == b.truncated_branches && a.overflow == b.overflow &&
           a.length_hist == b.length_hist && a.nodes == b.nodes && a.edges == b.edges;
}

double run_once(const QuiverSpec& q, int depth, bool parallel, SearchReport* out) {
    auto t0 = std::chrono::steady_clock::now();
    *out = enumerate_mgs(q, depth, parallel);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::string name = argc > 1 ? argv[1] : "Atilde(3,1)";
    int depth = argc > 2 ? std::atoi(argv[2]) : 12;
    int reps = argc > 3 ? std::atoi(argv[3]) : 3;

    QuiverFile qf = preset(name);
    std::cout << "quiver " << name << ", n=" << qf.spec.n << ", depth " << depth << ", " << reps
              << " repetition(s)\n";

    double best_serial = 1e300, best_parallel = 1e300;
    SearchReport serial, parallel;
    for (int r = 0; r < reps; ++r) {
        SearchReport rep;
        double ms = run_once(qf.spec, depth, false, &rep);
        best_serial = std::min(best_serial, ms);
        serial = std::move(rep);
    }
    for (int r = 0; r < reps; ++r) {
        SearchReport rep;
        double ms = run_once(qf.spec, depth, true, &rep);
        best_parallel = std::min(best_parallel, ms);
        parallel = std::move(rep);
    }

    std::cout << "serial:   " << best_serial << " ms (best of " << reps << ")\n";
    std::cout << "parallel: " << best_parallel << " ms (best of " << reps << ")\n";
    std::cout << "speedup:  " << best_serial / best_parallel << "x\n";
    std::cout << "mgs found: " << serial.mgs_total << ", complete: "
              << (serial.complete ? "yes" : "no") << "\n";

    if (!reports_equal(serial, parallel)) {
        std::cout << "MISMATCH: serial and parallel reports differ\n";
        return 1;
    }
    std::cout << "reports identical\n";
    return 0;
}
