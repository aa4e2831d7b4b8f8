#include "nielsen/coincidence.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace nielsen;

// Valid n-valued map of degree a with dense per-branch PL wiggles. The
// wiggle amplitude stays below half the branch gap 1/n, so disjointness
// survives by construction.
MultiMap wiggled_power_map(int n, int a, int knots, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> numer(-2, 2);
    std::vector<LiftBranch> branches;
    for (int u = 0; u < n; ++u) {
        LiftBranch br;
        br.points.emplace_back(Rational(0), Rational(u, n));
        for (int k = 1; k < knots; ++k) {
            Rational t(k, knots);
            Rational base = Rational(a, n) * t + Rational(u, n);
            br.points.emplace_back(t, base + Rational(numer(rng), 8 * n));
        }
        br.points.emplace_back(Rational(1), Rational(a + u, n));
        branches.push_back(std::move(br));
    }
    return MultiMap(std::move(branches));
}

double time_solve(const MultiMap& f, const MultiMap& g, Execution exec, int reps,
                  std::size_t& points_out) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        GraphIntersections gi = graph_intersections(f, g, exec);
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
        points_out = gi.points.size();
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 18;
    int knots = argc > 2 ? std::atoi(argv[2]) : 48;
    int reps = argc > 3 ? std::atoi(argv[3]) : 3;

    MultiMap f = wiggled_power_map(n, 1, knots, 17);
    MultiMap g = wiggled_power_map(n, -2, knots, 99);
    require_valid(f);
    require_valid(g);

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    std::cout << "instance: two " << n << "-valued maps, " << knots << " knots per branch, "
              << n * n << " branch pairs\n";

    std::size_t serial_points = 0, parallel_points = 0;
    double serial = time_solve(f, g, Execution::serial, reps, serial_points);
    std::cout << "serial:   " << serial << " s, " << serial_points << " intersection points\n";
    double parallel = time_solve(f, g, Execution::parallel, reps, parallel_points);
    std::cout << "parallel: " << parallel << " s, " << parallel_points << " intersection points\n";

    GraphIntersections a = graph_intersections(f, g, Execution::serial);
    GraphIntersections b = graph_intersections(f, g, Execution::parallel);
    bool equal = a.points.size() == b.points.size() && a.arcs.size() == b.arcs.size();
    for (std::size_t i = 0; equal && i < a.points.size(); ++i) {
        equal = a.points[i].x == b.points[i].x && a.points[i].y == b.points[i].y &&
                a.points[i].f_branch == b.points[i].f_branch &&
                a.points[i].g_branch == b.points[i].g_branch &&
                a.points[i].offset == b.points[i].offset;
    }
    std::cout << "outputs identical: " << (equal ? "yes" : "NO") << "\n";
    std::cout << "speedup: " << (parallel > 0 ? serial / parallel : 0.0) << "x\n";
    return equal ? 0 : 1;
}
