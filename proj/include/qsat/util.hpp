#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qsat {

using cplx = std::complex<double>;

namespace util {

// splitmix64: tiny, seedable, platform-independent. All randomness in the
// library flows through this so results are reproducible across toolchains
// (std::normal_distribution is not bit-stable between standard libraries).
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in (0,1]; never returns 0 so log() below is safe.
  double uniform() {
    return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Standard complex Gaussian via Box-Muller (real/imag each N(0,1/2) would
  // also work; we use N(0,1) per component, which only rescales).
  cplx gaussian() {
    double u = uniform();
    double v = uniform();
    double r = std::sqrt(-2.0 * std::log(u));
    return {r * std::cos(2.0 * M_PI * v), r * std::sin(2.0 * M_PI * v)};
  }
};

// Deterministic per-stream sub-seed, e.g. hash_seed(seed, edge_index).
inline std::uint64_t hash_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 mix(seed ^ (0xD1B54A32D192ED03ULL * (stream + 1)));
  mix.next();
  return mix.next();
}

// Shortest decimal string that round-trips the double exactly.
inline std::string format_double(double x) {
  char buf[64];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) return buf;
  }
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline double parse_double(const std::string& s) {
  char* end = nullptr;
  double x = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw std::invalid_argument("not a decimal number: " + s);
  return x;
}

}  // namespace util
}  // namespace qsat
