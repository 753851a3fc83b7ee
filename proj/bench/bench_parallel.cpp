// Serial reference vs OpenMP kernels. Prints one line per kernel with the
// best of several runs and checks that both paths return identical results.

#include "tropsl/random.hpp"
#include "tropsl/tropconv.hpp"
#include "tropsl/weight_fan.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

using namespace tropsl;

namespace {

double best_of(int reps, const std::function<void()>& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void report(const char* name, double serial, double parallel, bool same) {
    std::printf("%-28s serial %9.4fs  parallel %9.4fs  speedup %5.2fx  %s\n", name, serial, parallel,
                serial / parallel, same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());

    const Partition lambda = Partition::parse("6,4,2,1,0");
    SchurExpansion s1, s2;
    double ts = best_of(3, [&] { s1 = schur_expand(lambda, 5, Execution::serial); });
    double tp = best_of(3, [&] { s2 = schur_expand(lambda, 5, Execution::parallel); });
    report("schur_expand (6,4,2,1,0)", ts, tp, s1 == s2);

    const Partition rho = Partition::staircase(4);
    WeightFanReport f1, f2;
    ts = best_of(3, [&] { f1 = fan_F_rho(rho, 4, Execution::serial); });
    tp = best_of(3, [&] { f2 = fan_F_rho(rho, 4, Execution::parallel); });
    report("fan_F_rho (4,3,2,1)", ts, tp, f1.highest_weights == f2.highest_weights);

    SeededRng rng(1);
    std::vector<RationalVector> pts;
    for (int i = 0; i < 5; ++i) {
        RationalVector p(4);
        for (auto& c : p) c = rng.uniform(-6, 6);
        pts.push_back(p);
    }
    PointConfiguration m(pts);
    std::vector<RationalVector> xs;
    for (int k = 0; k < 20000; ++k) {
        RationalVector x(4);
        for (auto& c : x) c = Rational(rng.uniform(-20, 20), 2);
        for (auto& c : x) c.canonicalize();
        xs.push_back(x);
    }
    std::vector<PointClass> c1, c2;
    ts = best_of(3, [&] { c1 = classify_points(xs, m, Execution::serial); });
    tp = best_of(3, [&] { c2 = classify_points(xs, m, Execution::parallel); });
    report("classify_points 20000 pts", ts, tp, c1 == c2);
}
