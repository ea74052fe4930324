// Shared small utilities: error types, compensated/pairwise summation,
// a deterministic parallel map, and a couple of smooth helper functions.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace vf {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;

// Error taxonomy.  Callers that violate a stated precondition get
// premise_error/regime_error; resource limits get capacity_error; file
// problems get format_error.
struct premise_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct regime_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};
struct format_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// e(z) = exp(2*pi*i*z) on the fractional part of z.
inline cplx e_of(double z) {
  double f = z - std::floor(z);
  return std::polar(1.0, two_pi * f);
}

// Kahan-compensated accumulator.
template <typename T>
struct kahan_sum {
  T sum{};
  T carry{};
  void add(T v) {
    T y = v - carry;
    T t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  T value() const { return sum; }
};

// Pairwise reduction over [lo, hi).  The reduction tree depends only on the
// index range, never on chunking or thread count, so results are bitwise
// reproducible.
template <typename T, typename F>
T pairwise_sum(std::size_t lo, std::size_t hi, F&& term) {
  std::size_t n = hi - lo;
  if (n == 0) return T{};
  if (n <= 8) {
    T acc = term(lo);
    for (std::size_t i = lo + 1; i < hi; ++i) acc += term(i);
    return acc;
  }
  std::size_t mid = lo + n / 2;
  return pairwise_sum<T>(lo, mid, term) + pairwise_sum<T>(mid, hi, term);
}

inline unsigned hardware_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// Evaluates body(i) for i in [0, n) on up to `threads` workers.  Each result
// lands in a preassigned slot, so the output order is deterministic.
template <typename F>
void parallel_for(std::size_t n, F&& body, unsigned threads = 0) {
  if (threads == 0) threads = hardware_threads();
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += threads) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

// C2 smoothstep on [a, b]: 0 below a, 1 above b.
inline double smoothstep(double x, double a, double b) {
  if (x <= a) return 0.0;
  if (x >= b) return 1.0;
  double t = (x - a) / (b - a);
  return t * t * t * (t * (6.0 * t - 15.0) + 10.0);
}

// Least-squares slope of y against x.
inline double fit_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw premise_error("fit_slope: need at least two points");
  double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0) throw premise_error("fit_slope: degenerate abscissae");
  return (n * sxy - sx * sy) / denom;
}

}  // namespace vf
