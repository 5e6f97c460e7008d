// Serial reference vs OpenMP enumeration of separable labelings.
//   bench_oracle [n] [h] [max_workers]
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "shatter/oracle.hpp"

namespace {

template <class Fn>
double seconds(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 12;
  const std::size_t h = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 3;
  const int max_workers = argc > 3 ? std::atoi(argv[3]) : 4;

  const auto ps = shatter::generate_general_position(n, h, 1);
  shatter::BigCount reference;
  const double serial = seconds([&] { reference = shatter::count_dichotomies_serial(ps); });
  std::printf("n=%zu h=%zu labelings=%llu count=%s\n", n, h, 1ULL << n, reference.get_str().c_str());
  std::printf("%-10s %10s %10s %8s\n", "kernel", "workers", "seconds", "speedup");
  std::printf("%-10s %10d %10.4f %8.2f\n", "serial", 1, serial, 1.0);
  for (int w = 1; w <= max_workers; w *= 2) {
    shatter::BigCount count;
    const double t = seconds([&] { count = shatter::count_dichotomies(ps, w); });
    std::printf("%-10s %10d %10.4f %8.2f%s\n", "openmp", w, t, serial / t, count == reference ? "" : "  MISMATCH");
    if (count != reference) return 1;
  }
  return 0;
}
