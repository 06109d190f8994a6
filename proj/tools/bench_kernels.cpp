#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "orbikit/cp1.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace orbikit;

namespace {

template <typename F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<long> sizes = {16, 32, 64};
  if (argc > 1) {
    sizes.clear();
    for (int i = 1; i < argc; ++i) sizes.push_back(std::strtol(argv[i], nullptr, 10));
  }
#ifdef _OPENMP
  std::printf("intersection-matrix kernel, %d OpenMP threads\n", omp_get_max_threads());
#else
  std::printf("intersection-matrix kernel, OpenMP unavailable (serial build)\n");
#endif
  std::printf("%6s %8s %12s %12s %9s %6s\n", "k", "entries", "serial[s]", "parallel[s]",
              "speedup", "equal");
  for (long k : sizes) {
    const std::vector<EquivLineBundle> basis = mv_generators(k);
    IntMatrix serial(0, 0), parallel(0, 0);
    const double t_serial = seconds([&] { serial = pairing_matrix_serial(basis); });
    const double t_parallel = seconds([&] { parallel = pairing_matrix(basis); });
    const bool equal = serial == parallel;
    std::printf("%6ld %8zu %12.4f %12.4f %8.2fx %6s\n", k, basis.size() * basis.size(),
                t_serial, t_parallel, t_serial / t_parallel, equal ? "yes" : "NO");
    if (!equal) return 1;
  }
  return 0;
}
