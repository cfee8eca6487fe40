#pragma once
// Seeded RNG used everywhere randomness is needed. One root Rng per
// command/run; child streams via fork(). The gaussian path is a hand-rolled
// Box-Muller so the sample sequence is pinned by this file, not by the
// standard library's distribution internals.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bcgan/core/errors.hpp"

namespace bcgan {

class Rng {
 public:
  explicit Rng(uint64_t seed = 0) : eng_(seed) {}

  uint64_t raw() { return eng_(); }

  // uniform on [0, 1), 53-bit resolution
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer on [0, n), rejection sampled
  int64_t uniform_int(int64_t n) {
    if (n <= 0) throw RangeError("uniform_int: n must be positive");
    const uint64_t un = static_cast<uint64_t>(n);
    const uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    uint64_t r;
    do {
      r = eng_();
    } while (r >= limit);
    return static_cast<int64_t>(r % un);
  }

  // standard normal via Box-Muller, second sample cached
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    // u1 in (0, 1] so log never sees zero
    const double u1 = (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

  double normal(double mu, double sd) { return mu + sd * normal(); }

  // independent child stream (order of fork() calls is part of the seed path)
  Rng fork() { return Rng(eng_()); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<size_t>(uniform_int(static_cast<int64_t>(i)))]);
    }
  }

  std::string save_state() const {
    std::ostringstream os;
    os << eng_ << "|" << (has_cached_ ? 1 : 0) << "|";
    os << std::hexfloat << cached_;
    return os.str();
  }

  void load_state(const std::string& s) {
    const auto p1 = s.find('|');
    const auto p2 = s.find('|', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
      throw IngestError("Rng::load_state: malformed state string");
    std::istringstream is(s.substr(0, p1));
    is >> eng_;
    has_cached_ = s.substr(p1 + 1, p2 - p1 - 1) == "1";
    cached_ = std::strtod(s.c_str() + p2 + 1, nullptr);
  }

 private:
  std::mt19937_64 eng_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace bcgan
