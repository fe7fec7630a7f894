// Timing harness for the two OpenMP kernels against their serial
// reference implementations:
//   - oracle sweep: evaluate every exchange relation at many SL(n) points
//   - matrix assembly: generator matrices column by column
// Both pairs must agree exactly; the benchmark asserts that before
// printing timings.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "shapes/groebner.hpp"
#include "shapes/oracle.hpp"
#include "shapes/representation.hpp"

using namespace shapes;
using clk = std::chrono::steady_clock;

static double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel timings"};
    int n = 4, points = 40, repeat = 3;
    app.add_option("--n", n, "rank for the oracle sweep (default 4)");
    app.add_option("--points", points, "SL(n) sample count (default 40)");
    app.add_option("--repeat", repeat, "repetitions per kernel (default 3)");
    CLI11_PARSE(app, argc, argv);

    std::cout << "kernel                      serial(ms)  parallel(ms)\n";

    // Oracle sweep.
    std::vector<Poly> rels = generating_set(n, Ring::full);
    std::vector<GroupPoint> pts;
    for (int k = 0; k < points; ++k) pts.push_back(random_sl_point(n, 1000 + k));
    double ts = 0, tp = 0;
    bool ok_s = true, ok_p = true;
    for (int r = 0; r < repeat; ++r) {
        auto t0 = clk::now();
        ok_s = all_vanish_serial(rels, pts);
        ts += ms_since(t0);
        t0 = clk::now();
        ok_p = all_vanish_parallel(rels, pts);
        tp += ms_since(t0);
    }
    if (ok_s != ok_p) {
        std::cerr << "oracle kernels disagree\n";
        return 1;
    }
    std::printf("oracle sweep (n=%d, %d pts)  %10.2f  %12.2f\n", n, points, ts / repeat,
                tp / repeat);

    // Matrix assembly on a mid-sized sl(4) slice (dim 64).
    Weight lambda(4, {1, 1, 1});
    groebner_basis(4, Ring::reduced_plus);  // warm the cache outside the timer
    double ms = 0, mp = 0;
    RepresentationMatrix a, b;
    for (int r = 0; r < repeat; ++r) {
        for (int k = 1; k <= 3; ++k) {
            auto t0 = clk::now();
            a = matrix_of_generator(Generator::E(k, k + 1), lambda,
                                    BasisKind::quasi_standard_cone);
            ms += ms_since(t0);
            t0 = clk::now();
            b = matrix_of_generator_parallel(Generator::E(k, k + 1), lambda,
                                             BasisKind::quasi_standard_cone);
            mp += ms_since(t0);
            if (a.entries != b.entries) {
                std::cerr << "matrix kernels disagree\n";
                return 1;
            }
        }
    }
    std::printf("matrix assembly (dim %d)    %10.2f  %12.2f\n", a.basis.size(), ms / repeat,
                mp / repeat);
    return 0;
}
