#ifndef CONJLIM_CHARPOLY_HPP
#define CONJLIM_CHARPOLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "conjlim/matrix.hpp"

namespace conjlim {

/// x^n + a_{n-1} x^{n-1} + ... + a_0, coefficients stored as
/// (a_{n-1}, ..., a_0).
struct MonicPoly {
  int degree = 0;
  std::vector<Rational> coeffs;

  /// a_k for 0 <= k < degree.
  const Rational& coeff_of(int power) const { return coeffs[static_cast<std::size_t>(degree - 1 - power)]; }

  std::string str() const;

  friend bool operator==(const MonicPoly& a, const MonicPoly& b) {
    return a.degree == b.degree && a.coeffs == b.coeffs;
  }
};

/// Exact characteristic polynomial (Faddeev-LeVerrier recurrence).
MonicPoly char_poly(const RatMatrix& m);

/// Membership in the closed family { (x^2 - lambda^2)(x^2 + theta^2) :
/// lambda, theta real }: odd coefficients vanish and the constant term
/// is non-positive.
bool in_char_so31(const MonicPoly& p);

/// Membership in the closed family { (x-t)((x-t)^2 - s)(x+3t) :
/// t real, s real } (s plays the role of lambda^2 and may be negative).
/// Eliminating s leaves two polynomial conditions on t; membership is
/// the existence of a common real root.
bool in_char_h2xr(const MonicPoly& p);

struct ObstructionReport {
  RatMatrix witness;
  MonicPoly witness_poly;
  bool witness_in_h2xr = false;
  bool witness_in_so31 = true;  // expected false
  int samples = 0;
  bool all_samples_odd_free = false;  // a_3 = a_1 = 0 on every sample
  bool pass() const { return witness_in_h2xr && !witness_in_so31 && all_samples_odd_free; }
};

/// Builds the diag(1,1,1,-3) element of the H^2 x R isometry algebra,
/// tests both memberships, and draws seeded random elements of
/// so(3,1) checking that their odd coefficients vanish.
ObstructionReport obstruction_witness(std::uint64_t seed, int samples = 1000);

}  // namespace conjlim

#endif
