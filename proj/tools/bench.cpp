#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "piq/classify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

// Times the two sweep kernels (character keys, pairwise similarity
// verdicts) in their serial reference version and the OpenMP version,
// and checks that both produce identical results.

namespace {

using namespace piq;

double ms_since(std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration<double, std::milli>(dt).count();
}

template <typename F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return ms_since(t0);
}

void print_row(const std::string& kernel, size_t items, double serial_ms,
               double parallel_ms, bool match) {
    double speedup = parallel_ms > 0.0 ? serial_ms / parallel_ms : 0.0;
    std::printf("%-18s %8zu %12.1f %12.1f %9.2fx   %s\n", kernel.c_str(), items,
                serial_ms, parallel_ms, speedup, match ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel benchmark"};
    i64 modulus = 59;
    int jobs = 0;
    size_t pair_cap = 4000;
    app.add_option("--modulus", modulus, "modulus for the sweep (default 59)");
    app.add_option("--jobs", jobs, "threads for the parallel kernels (0 = all cores)");
    app.add_option("--pair-cap", pair_cap,
                   "cap on the number of pairs timed (default 4000)");
    CLI11_PARSE(app, argc, argv);

    int threads = 1;
#ifdef _OPENMP
    threads = jobs <= 0 ? omp_get_max_threads() : jobs;
    std::cout << "OpenMP enabled, " << threads << " thread(s)\n";
#else
    std::cout << "built without OpenMP; parallel kernels fall back to serial\n";
#endif

    Modulus n(modulus);
    std::vector<LinearPique> piques = enumerate_piques(n);
    std::cout << "modulus " << modulus << ", " << piques.size() << " piques\n\n";
    std::printf("%-18s %8s %12s %12s %10s\n", "kernel", "items", "serial ms",
                "parallel ms", "speedup");

    std::vector<std::vector<i64>> keys_serial, keys_parallel;
    double t_keys_s = time_ms([&] { keys_serial = character_keys_serial(piques); });
    double t_keys_p =
        time_ms([&] { keys_parallel = character_keys_parallel(piques, jobs); });
    print_row("character keys", piques.size(), t_keys_s, t_keys_p,
              keys_serial == keys_parallel);

    // within-class pairs, as the classify driver would generate them
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < piques.size() && pairs.size() < pair_cap; ++i)
        for (size_t j = i + 1; j < piques.size() && pairs.size() < pair_cap; ++j)
            if (keys_serial[i] == keys_serial[j])
                pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));

    std::vector<PairVerdict> v_serial, v_parallel;
    double t_pairs_s = time_ms([&] { v_serial = pair_verdicts_serial(piques, pairs); });
    double t_pairs_p =
        time_ms([&] { v_parallel = pair_verdicts_parallel(piques, pairs, jobs); });
    bool same = v_serial.size() == v_parallel.size();
    for (size_t i = 0; same && i < v_serial.size(); ++i)
        same = v_serial[i].a == v_parallel[i].a && v_serial[i].b == v_parallel[i].b &&
               v_serial[i].similar == v_parallel[i].similar &&
               v_serial[i].witness == v_parallel[i].witness;
    size_t similar_count = 0;
    for (const PairVerdict& v : v_serial)
        if (v.similar)
            ++similar_count;
    print_row("pair verdicts", pairs.size(), t_pairs_s, t_pairs_p, same);
    std::cout << "\n" << similar_count << " of " << pairs.size()
              << " equal-character pairs similar (all witnesses verified)\n";
    return 0;
}
