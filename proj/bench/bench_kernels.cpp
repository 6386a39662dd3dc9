// Compares the serial reference kernels against the OpenMP ones: conjugacy
// class enumeration and induction of the full midafi batch.
//
//   ./bench_kernels [--q N] [--threads N] [--large]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "d4u/chars.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace d4u;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& fn) {
    auto t0 = Clock::now();
    fn();
    return seconds(t0, Clock::now());
}

}  // namespace

int main(int argc, char** argv) {
    int q = 3;
    std::uint64_t guard = 1ull << 25;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--q") && i + 1 < argc) q = std::atoi(argv[++i]);
#ifdef _OPENMP
        else if (!std::strcmp(argv[i], "--threads") && i + 1 < argc)
            omp_set_num_threads(std::atoi(argv[++i]));
#endif
        else if (!std::strcmp(argv[i], "--large"))
            guard = 300'000'000;
    }

    Field f = Field::of_order(q);
    Group g(f);
#ifdef _OPENMP
    std::printf("q = %d, OpenMP max threads = %d\n", q, omp_get_max_threads());
#else
    std::printf("q = %d, OpenMP disabled\n", q);
#endif
    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial", "parallel",
                "speedup");

    ClassData serial_cd;
    double ts = timed([&] { serial_cd = conjugacy_classes_serial(g, {}, guard); });
    ClassOptions popts;
    popts.parallel = true;
    popts.state_guard = guard;
    ClassData parallel_cd;
    double tp = timed([&] { parallel_cd = conjugacy_classes(g, {}, popts); });
    bool same = serial_cd.reps == parallel_cd.reps &&
                serial_cd.sizes == parallel_cd.sizes;
    std::printf("%-28s %9.3fs %9.3fs %7.2fx%s\n", "conjugacy classes", ts, tp,
                ts / tp, same ? "" : "  MISMATCH");

    const ClassData& cd = serial_cd;
    auto run_midafis = [&](bool parallel) {
        for (int alpha = 1; alpha <= kNumRoots; ++alpha)
            for (int s = 1; s < q; ++s) {
                ClassFunction mu = midafi(g, alpha, (fe)s, cd, parallel);
                (void)mu;
            }
    };
    double is = timed([&] { run_midafis(false); });
    double ip = timed([&] { run_midafis(true); });
    std::printf("%-28s %9.3fs %9.3fs %7.2fx\n", "midafi batch (12(q-1))", is,
                ip, is / ip);
    return 0;
}
