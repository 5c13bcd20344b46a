#ifndef CONJLIM_RANDOM_HPP
#define CONJLIM_RANDOM_HPP

#include <cstdint>
#include <random>

#include "conjlim/rational.hpp"

namespace conjlim {

/// Default seed for every randomized routine; fixed so runs are
/// reproducible byte for byte.
inline constexpr std::uint64_t kDefaultSeed = 20210316;

/// Small deterministic sampler. mt19937_64 with explicit modulo
/// reduction, so the stream does not depend on the standard library's
/// distribution implementations.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : eng_(seed) {}

  long next(long lo, long hi) {  // inclusive bounds
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(eng_() % span);
  }

  Rational rational(long max_num, long max_den) {
    return Rational(next(-max_num, max_num), next(1, max_den));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace conjlim

#endif
