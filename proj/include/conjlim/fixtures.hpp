#ifndef CONJLIM_FIXTURES_HPP
#define CONJLIM_FIXTURES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "conjlim/random.hpp"

namespace conjlim {

struct FixtureResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Known-limit regression fixtures: the spherical-to-Euclidean
/// degeneration, the classical small-group limits, the shear family,
/// the three-dimensional containment checks, and the characteristic
/// polynomial obstruction.
std::vector<FixtureResult> run_regression_fixtures(std::uint64_t seed = kDefaultSeed);

/// Oracle vs closed form vs block form over every catalog family with
/// ambient dimension <= max_n, one result per family.
std::vector<FixtureResult> run_agreement_sweep(int max_n = 6);

}  // namespace conjlim

#endif
