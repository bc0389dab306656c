// Compares the serial reference kernels against the OpenMP versions on long
// loose paths: all-pairs BFS distance matrix and the D*x product.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "hyperspec/families.hpp"
#include "hyperspec/parallel.hpp"
#include "hyperspec/spectral.hpp"

using namespace hyperspec;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds(clock_type::time_point a, clock_type::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double time_best_of(int reps, F&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = clock_type::now();
    fn();
    const auto t1 = clock_type::now();
    best = std::min(best, seconds(t0, t1));
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int reps = 3;
  std::vector<int> sizes{257, 513, 1025, 2049};
  if (argc > 1) {
    sizes.clear();
    for (int i = 1; i < argc; ++i) sizes.push_back(std::atoi(argv[i]));
  }

  std::printf("workers: %d\n", worker_count());
  std::printf("%8s  %12s  %12s  %8s  %12s  %12s  %8s\n", "n", "apsp_ser", "apsp_omp",
              "speedup", "matvec_ser", "matvec_omp", "speedup");

  for (int n : sizes) {
    const int k = 3;
    const int m = (n - 1) / (k - 1);
    const Hypergraph g = loose_path(1 + m * (k - 1), k);

    DistanceMatrix d_serial, d_parallel;
    const double t_apsp_ser = time_best_of(reps, [&] { d_serial = distance_matrix_serial(g); });
    const double t_apsp_omp = time_best_of(reps, [&] { d_parallel = distance_matrix(g); });
    if (d_serial.d != d_parallel.d) {
      std::fprintf(stderr, "kernel mismatch at n=%d\n", g.n);
      return 1;
    }

    std::vector<double> x(g.n, 1.0), y_ser(g.n), y_omp(g.n);
    const int matvec_reps = 50;
    const double t_mv_ser = time_best_of(reps, [&] {
      for (int r = 0; r < matvec_reps; ++r) dist_matvec_serial(d_serial, x.data(), y_ser.data());
    });
    const double t_mv_omp = time_best_of(reps, [&] {
      for (int r = 0; r < matvec_reps; ++r) dist_matvec(d_serial, x.data(), y_omp.data());
    });
    if (y_ser != y_omp) {
      std::fprintf(stderr, "matvec mismatch at n=%d\n", g.n);
      return 1;
    }

    std::printf("%8d  %12.6f  %12.6f  %8.2f  %12.6f  %12.6f  %8.2f\n", g.n, t_apsp_ser,
                t_apsp_omp, t_apsp_ser / t_apsp_omp, t_mv_ser, t_mv_omp,
                t_mv_ser / t_mv_omp);
  }
  return 0;
}
