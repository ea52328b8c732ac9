// Benchmark: serial reference vs OpenMP-sharded stable-matching enumeration.
// Runs each workload in both modes, checks the outputs are identical, and
// prints a small table with the speedup. Not part of the test suite.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "smti/io.hpp"
#include "smti/model.hpp"
#include "smti/oracle.hpp"
#include "smti/threedim.hpp"

using namespace smti;

namespace {

double seconds(const std::function<void()>& work) {
    const auto start = std::chrono::steady_clock::now();
    work();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Median-of-three timing to dampen scheduler noise.
double timed(const std::function<void()>& work) {
    double a = seconds(work);
    double b = seconds(work);
    double c = seconds(work);
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    return b;
}

void row(const std::string& label, std::size_t results, double serial, double parallel) {
    std::printf("%-28s %9zu %10.3f %10.3f %8.2fx\n", label.c_str(), results, serial * 1e3,
                parallel * 1e3, parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main(int argc, char** argv) {
    // Sizes are capped so the whole run stays in the tens of seconds; pass a
    // larger bound to push further (exponential growth!).
    const int maxSide = argc > 1 ? std::atoi(argv[1]) : 7;

#ifdef _OPENMP
    std::printf("OpenMP: %d threads\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP: not enabled in this build\n\n");
#endif
    std::printf("%-28s %9s %10s %10s %9s\n", "workload", "results", "serial/ms",
                "parallel/ms", "speedup");

    for (int k = 5; k <= maxSide; ++k) {
        const Instance inst = io::generateInstance(k, k, 0.4, 0.2, 42 + k);
        std::vector<Matching> fromSerial;
        std::vector<Matching> fromParallel;
        const double serial = timed([&] {
            fromSerial = oracle::enumerateStable(inst, 2 * static_cast<std::size_t>(k),
                                                 oracle::Mode::Serial);
        });
        const double parallel = timed([&] {
            fromParallel = oracle::enumerateStable(inst, 2 * static_cast<std::size_t>(k),
                                                   oracle::Mode::Parallel);
        });
        if (fromSerial != fromParallel) {
            std::fprintf(stderr, "mode mismatch on enumerate %dx%d\n", k, k);
            return 1;
        }
        row("enumerate " + std::to_string(k) + "x" + std::to_string(k), fromSerial.size(),
            serial, parallel);
    }

    for (int k = 5; k <= maxSide; ++k) {
        const Instance inst = io::generateInstance(k, k, 0.4, 0.2, 42 + k);
        oracle::Optimum fromSerial;
        oracle::Optimum fromParallel;
        const double serial = timed([&] {
            fromSerial = oracle::optimize(inst, Criterion::Egalitarian, Direction::Minimize,
                                          2 * static_cast<std::size_t>(k),
                                          oracle::Mode::Serial);
        });
        const double parallel = timed([&] {
            fromParallel = oracle::optimize(inst, Criterion::Egalitarian, Direction::Minimize,
                                            2 * static_cast<std::size_t>(k),
                                            oracle::Mode::Parallel);
        });
        if (fromSerial.value != fromParallel.value ||
            fromSerial.matchings != fromParallel.matchings) {
            std::fprintf(stderr, "mode mismatch on optimize %dx%d\n", k, k);
            return 1;
        }
        row("optimize egal " + std::to_string(k) + "x" + std::to_string(k),
            fromSerial.matchings.size(), serial, parallel);
    }

    for (int k = 2; k <= std::min(3, maxSide); ++k) {
        const threedim::Instance3 inst = io::generateInstance3(k, k, k, 0.4, 0.2, 42 + k);
        std::vector<threedim::Matching3> fromSerial;
        std::vector<threedim::Matching3> fromParallel;
        const double serial = timed([&] {
            fromSerial = threedim::enumerateStable3(inst, 3 * static_cast<std::size_t>(k),
                                                    threedim::Mode::Serial);
        });
        const double parallel = timed([&] {
            fromParallel = threedim::enumerateStable3(inst, 3 * static_cast<std::size_t>(k),
                                                      threedim::Mode::Parallel);
        });
        if (fromSerial != fromParallel) {
            std::fprintf(stderr, "mode mismatch on 3d enumerate %d^3\n", k);
            return 1;
        }
        row("enumerate3 " + std::to_string(k) + "^3", fromSerial.size(), serial, parallel);
    }

    return 0;
}
