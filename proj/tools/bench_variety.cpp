// Compares the serial reference and the OpenMP kernel of the brute-force
// variety verification on the largest desk-scale splits.
#include <chrono>
#include <functional>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "vizing/certificate.hpp"

using namespace viz;

namespace {

double time_ms(const std::function<BruteForceStats()>& fn, BruteForceStats& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP; parallel kernel runs serially\n";
#endif
  std::cout << "d  (n_g,n_h)   points      serial-ms  parallel-ms  speedup  agree\n";

  const std::pair<int, std::pair<int, int>> cases[] = {
      {5, {3, 3}}, {5, {4, 2}}, {6, {4, 3}}, {7, {6, 2}}};
  for (const auto& [d, split] : cases) {
    const auto res = find_certificate(d);
    const auto* cert = std::get_if<Certificate>(&res);
    if (!cert) {
      std::cout << d << "  search failed, skipping\n";
      continue;
    }
    const VarietyDomain dom(ClassParams(split.first, split.second));
    double best_serial = 1e300, best_par = 1e300;
    BruteForceStats ss{}, ps{};
    for (int r = 0; r < repeats; ++r) {
      BruteForceStats s, p;
      best_serial = std::min(best_serial, time_ms([&] {
        return brute_force_scan_serial(*cert, dom, split.first, split.second);
      }, s));
      best_par = std::min(best_par, time_ms([&] {
        return brute_force_scan_parallel(*cert, dom, split.first, split.second);
      }, p));
      ss = s;
      ps = p;
    }
    const bool agree = ss.variety_points == ps.variety_points &&
                       ss.equality_failures == ps.equality_failures &&
                       ss.negativity_failures == ps.negativity_failures;
    std::printf("%-2d (%d,%d)  %10llu  %9.2f  %10.2f  %6.2fx  %s\n", d, split.first,
                split.second, static_cast<unsigned long long>(ss.variety_points),
                best_serial, best_par, best_serial / best_par, agree ? "yes" : "NO");
  }
  return 0;
}
