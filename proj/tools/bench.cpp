// Benchmark for the property suites: wall time with one worker versus all
// cores, plus a head-to-head of the production H->V conversion against the
// serial brute-force enumeration kept for testing.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pcvx/oracle.hpp"
#include "pcvx/polyhedron.hpp"
#include "pcvx/sampling.hpp"
#include "pcvx/suites.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench_suites(std::uint64_t seed, int count) {
#ifdef _OPENMP
    const int max_jobs = omp_get_max_threads();
#else
    const int max_jobs = 1;
#endif
    std::cout << "suite           count  serial[s]  " << max_jobs << "-jobs[s]  speedup  ok\n";
    for (const std::string& name : pcvx::suite_names()) {
        const int n = count > 0 ? count : pcvx::suite_default_count(name);
        const pcvx::SuiteResult serial = pcvx::run_suite(name, seed, n, 1);
        const pcvx::SuiteResult parallel = pcvx::run_suite(name, seed, n, max_jobs);
        const bool same = serial.ok() == parallel.ok() && serial.passed == parallel.passed;
        std::cout << std::left << std::setw(15) << name << " " << std::setw(6) << n << " "
                  << std::right << std::fixed << std::setprecision(3) << std::setw(9)
                  << serial.seconds << "  " << std::setw(9) << parallel.seconds << "  "
                  << std::setw(7) << std::setprecision(2)
                  << (parallel.seconds > 0 ? serial.seconds / parallel.seconds : 0.0) << "  "
                  << (serial.ok() && parallel.ok() && same ? "yes" : "NO") << "\n";
    }
}

void bench_conversion(std::uint64_t seed, int count) {
    const int n = count > 0 ? count : 200;
    std::vector<pcvx::HRep> instances;
    pcvx::Rng rng(seed ^ 0xabcdef12345ULL);
    while (static_cast<int>(instances.size()) < n) {
        pcvx::HRep p = pcvx::random_hrep(rng, rng.uniform_int(1, 3), 6);
        instances.push_back(std::move(p));
    }

    auto t0 = std::chrono::steady_clock::now();
    std::vector<pcvx::VRep> dd;
    for (const pcvx::HRep& p : instances) dd.push_back(pcvx::h_to_v(p));
    const double t_dd = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    std::vector<pcvx::VRep> brute;
    for (const pcvx::HRep& p : instances) brute.push_back(pcvx::oracle::enumerate_basic_solutions(p));
    const double t_brute = seconds_since(t0);

    int agree = 0;
    for (int i = 0; i < n; ++i) {
        if (pcvx::set_equal(pcvx::v_to_h(dd[i]), pcvx::v_to_h(brute[i]))) ++agree;
    }

    std::cout << "\nconversion on " << n << " random sets (dim <= 3, <= 6 rows)\n";
    std::cout << "  double description: " << std::fixed << std::setprecision(3) << t_dd << " s\n";
    std::cout << "  brute-force basis enumeration: " << t_brute << " s\n";
    std::cout << "  agreement: " << agree << "/" << n << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = 0;
    int count = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--seed" && i + 1 < argc) {
            seed = std::stoull(argv[++i]);
        } else if (arg == "--count" && i + 1 < argc) {
            count = std::stoi(argv[++i]);
        } else {
            std::cerr << "usage: polycalc-bench [--seed S] [--count N]\n";
            return 1;
        }
    }
    bench_suites(seed, count);
    bench_conversion(seed, count);
    return 0;
}
