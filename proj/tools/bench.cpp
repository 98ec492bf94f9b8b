#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kdesc/descent_dp.hpp"
#include "kdesc/equidist.hpp"
#include "kdesc/oracle.hpp"
#include "kdesc/series2d.hpp"

// Wall-clock comparison of the threaded kernels against their serial
// reference. The two runs must also agree exactly; a mismatch is reported
// loudly since it would mean the reference tests are too small.

namespace {

using clock_type = std::chrono::steady_clock;

double seconds(clock_type::time_point a, clock_type::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

void report(const std::string& name, double serial, double parallel,
            bool equal) {
  std::printf("%-28s serial %8.3fs   threaded %8.3fs   speedup %5.2fx   %s\n",
              name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0,
              equal ? "match" : "MISMATCH");
}

void bench_oracle(int n) {
  kdesc::PatternQuery q{kdesc::decreasing_pattern(3), n,
                        kdesc::Grouping::by_set_and_first};
  auto t0 = clock_type::now();
  kdesc::OracleReport serial = kdesc::enumerate_serial(q);
  auto t1 = clock_type::now();
  kdesc::OracleReport par = kdesc::enumerate(q);
  auto t2 = clock_type::now();
  report("oracle n=" + std::to_string(n), seconds(t0, t1), seconds(t1, t2),
         serial.counts == par.counts);
}

void bench_table(int max_n) {
  kdesc::DescentSpec spec(3, {1, 4});
  auto t0 = clock_type::now();
  kdesc::GeneralTable serial(spec, max_n, false);
  auto t1 = clock_type::now();
  kdesc::GeneralTable par(spec, max_n, true);
  auto t2 = clock_type::now();
  bool equal = true;
  for (int n = 1; n <= max_n; ++n) equal = equal && serial.row(n) == par.row(n);
  report("table rows to " + std::to_string(max_n), seconds(t0, t1),
         seconds(t1, t2), equal);
}

void bench_series(int cap) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> coef(-99, 99);
  kdesc::Series2D a(cap), b(cap);
  for (int i = 0; i <= cap; ++i)
    for (int j = 0; i + j <= cap; ++j) {
      a.set_coeff(i, j, coef(rng));
      b.set_coeff(i, j, coef(rng));
    }
  auto t0 = clock_type::now();
  kdesc::Series2D serial = a.mul(b, false);
  auto t1 = clock_type::now();
  kdesc::Series2D par = a.mul(b, true);
  auto t2 = clock_type::now();
  report("series product cap " + std::to_string(cap), seconds(t0, t1),
         seconds(t1, t2), serial == par);
}

void bench_sampler(long long samples) {
  // strata merge serially, so thread count only changes the wall time;
  // compare one thread against the default team on identical seeds
#ifdef _OPENMP
  int team = omp_get_max_threads();
  omp_set_num_threads(1);
#endif
  auto t0 = clock_type::now();
  kdesc::EquidistReport serial = kdesc::equidist_constant(3, 2, samples, 5);
  auto t1 = clock_type::now();
#ifdef _OPENMP
  omp_set_num_threads(team);
#endif
  kdesc::EquidistReport par = kdesc::equidist_constant(3, 2, samples, 5);
  auto t2 = clock_type::now();
  report("sampler " + std::to_string(samples) + " draws", seconds(t0, t1),
         seconds(t1, t2),
         serial.value == par.value && serial.event_value == par.event_value);
}

}

int main(int argc, char** argv) {
  int oracle_n = argc > 1 ? std::atoi(argv[1]) : 9;
#ifdef _OPENMP
  std::printf("threads available: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serially\n");
#endif
  bench_oracle(oracle_n);
  bench_table(120);
  bench_series(48);
  bench_sampler(400000);
  return 0;
}
