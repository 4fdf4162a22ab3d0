// Wall-clock comparison of the serial reference kernels against the
// OpenMP-parallel ones on a few representative workloads.  Results must be
// identical; only the timing differs.

#include <chrono>
#include <iomanip>
#include <iostream>

#include "freefield/parallel.hpp"
#include "freefield/pipeline.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace freefield;

namespace {

double seconds(const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const std::string& name, double serial, double parallel, bool same) {
    std::cout << std::left << std::setw(38) << name << std::right << std::fixed
              << std::setprecision(3) << std::setw(9) << serial << " s" << std::setw(9)
              << parallel << " s   speedup " << std::setprecision(2)
              << (parallel > 0 ? serial / parallel : 0.0) << (same ? "" : "   MISMATCH")
              << "\n";
}

} // namespace

int main() {
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "OpenMP disabled; the parallel kernels fall back to serial.\n";
#endif
    Alphabet a = Alphabet::from_csv("x,y");

    // workload 1: ball extraction on a star product (dense-ish support)
    LinearRepresentation r1 =
        normalize_expression(parse_expression("(x + y + 1/2 x y)^* ", a), 2).series;
    // workload 2: a hadamard square (dimension grows multiplicatively)
    LinearRepresentation r2 = hadamard(r1, r1);

    for (auto [name, rep, radius] :
         {std::tuple<const char*, const LinearRepresentation*, std::size_t>{
              "ball radius 9, star series", &r1, 9},
          {"ball radius 8, hadamard square", &r2, 8}}) {
        std::vector<kernels::BallEntry> out_serial, out_parallel;
        double ts = seconds([&] { out_serial = kernels::ball_coefficients_serial(*rep, radius); });
        double tp =
            seconds([&] { out_parallel = kernels::ball_coefficients_parallel(*rep, radius); });
        bool same = out_serial.size() == out_parallel.size();
        for (std::size_t i = 0; same && i < out_serial.size(); ++i)
            same = out_serial[i].element == out_parallel[i].element &&
                   out_serial[i].value == out_parallel[i].value;
        report(name, ts, tp, same);
    }

    // workload 3: Magnus-minimum reduction over a large candidate list
    auto candidates = kernels::ball_coefficients_serial(r1, 8);
    std::size_t min_serial = 0, min_parallel = 0;
    double ts = seconds([&] { min_serial = kernels::magnus_min_index_serial(candidates); });
    double tp = seconds([&] { min_parallel = kernels::magnus_min_index_parallel(candidates); });
    report("magnus minimum over ball radius 8", ts, tp, min_serial == min_parallel);
    return 0;
}
