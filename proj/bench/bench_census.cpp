// Serial vs OpenMP census timings. Usage: bench_census [max_n] [repeats]

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <omp.h>

#include "hookclusters/oracle.hpp"

using clk = std::chrono::steady_clock;

template <class F>
double best_of(int repeats, F&& f)
{
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = clk::now();
        f();
        best = std::min(best, std::chrono::duration<double>(clk::now() - t0).count());
    }
    return best;
}

int main(int argc, char** argv)
{
    const int max_n = argc > 1 ? std::atoi(argv[1]) : 40;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
    std::cout << "threads " << omp_get_max_threads() << "\n";
    std::cout << "n,partitions,serial_s,parallel_s,speedup,identical\n";
    for (int n = 10; n <= max_n; n += 5) {
        hc::WeightCensus a, b;
        const double ts = best_of(repeats, [&] { a = hc::census_serial(n); });
        const double tp = best_of(repeats, [&] { b = hc::census(n); });
        bool same = a.hook_groups.size() == b.hook_groups.size() && a.m_of_n == b.m_of_n;
        for (std::size_t i = 0; same && i < a.hook_groups.size(); ++i)
            same = a.hook_groups[i].members == b.hook_groups[i].members;
        std::cout << n << ',' << a.partitions.size() << ',' << ts << ',' << tp << ','
                  << ts / tp << ',' << (same ? "yes" : "NO") << "\n";
    }
}
