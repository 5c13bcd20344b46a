#include "conjlim/charpoly.hpp"

#include <sstream>

#include "conjlim/catalog.hpp"
#include "conjlim/error.hpp"
#include "conjlim/random.hpp"

namespace conjlim {

std::string MonicPoly::str() const {
  std::ostringstream os;
  os << "x^" << degree;
  for (int k = degree - 1; k >= 0; --k) {
    const Rational& a = coeff_of(k);
    if (a.is_zero()) continue;
    os << (a.sign() > 0 ? " + " : " - ") << abs(a).str();
    if (k > 0) os << "*x";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

MonicPoly char_poly(const RatMatrix& a) {
  if (!a.is_square()) throw Error("char_poly: matrix must be square");
  const int n = a.rows();
  MonicPoly p{n, std::vector<Rational>(static_cast<std::size_t>(n), Rational(0))};
  RatMatrix m = a;
  Rational c = -m.trace();
  if (n >= 1) p.coeffs[0] = c;
  for (int k = 2; k <= n; ++k) {
    RatMatrix shifted = m;
    for (int i = 0; i < n; ++i) shifted.at(i, i) += c;
    m = a * shifted;
    c = -m.trace() / Rational(k);
    p.coeffs[static_cast<std::size_t>(k) - 1] = c;
  }
  return p;
}

bool in_char_so31(const MonicPoly& p) {
  if (p.degree != 4) throw Error("in_char_so31: degree 4 required");
  return p.coeff_of(3).is_zero() && p.coeff_of(1).is_zero() && p.coeff_of(0).sign() <= 0;
}

namespace {

// dense polynomials over Q, ascending coefficients
using Poly = std::vector<Rational>;

void trim(Poly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly remainder(Poly f, const Poly& g) {
  while (degree(f) >= degree(g)) {
    const Rational lead = f.back() / g.back();
    const int shift = degree(f) - degree(g);
    for (int i = 0; i <= degree(g); ++i)
      f[static_cast<std::size_t>(i + shift)] -= lead * g[static_cast<std::size_t>(i)];
    trim(f);
    if (f.empty()) break;
  }
  return f;
}

Poly poly_gcd(Poly f, Poly g) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Poly r = remainder(f, g);
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.empty()) {
    const Rational lead = f.back();
    for (auto& c : f) c /= lead;
  }
  return f;
}

bool has_real_root(const Poly& g) {
  switch (degree(g)) {
    case -1:  // zero polynomial cannot occur here
    case 0:
      return false;
    case 1:
    case 3:
      return true;  // odd degree
    case 2: {
      const Rational a = g[2], b = g[1], c = g[0];
      return (b * b - Rational(4) * a * c).sign() >= 0;
    }
    default:
      throw Error("has_real_root: unexpected degree");
  }
}

}  // namespace

bool in_char_h2xr(const MonicPoly& p) {
  if (p.degree != 4) throw Error("in_char_h2xr: degree 4 required");
  if (!p.coeff_of(3).is_zero()) return false;
  const Rational a2 = p.coeff_of(2), a1 = p.coeff_of(1), a0 = p.coeff_of(0);
  // with s eliminated via a2 = -6t^2 - s:
  //   a1 = 20 t^3 + 2 a2 t,   a0 = -21 t^4 - 3 a2 t^2
  const Poly p1 = {-a1, Rational(2) * a2, Rational(0), Rational(20)};
  const Poly p2 = {a0, Rational(0), Rational(3) * a2, Rational(0), Rational(21)};
  return has_real_root(poly_gcd(p1, p2));
}

ObstructionReport obstruction_witness(std::uint64_t seed, int samples) {
  ObstructionReport rep;
  // t = 1, a = 0 element of the H^2 x R isometry algebra: diag(I_3, -3)
  std::vector<Rational> d{1, 1, 1, -3};
  rep.witness = RatMatrix::diagonal(d);
  rep.witness_poly = char_poly(rep.witness);
  rep.witness_in_h2xr = in_char_h2xr(rep.witness_poly);
  rep.witness_in_so31 = in_char_so31(rep.witness_poly);

  RatMatrix j(4, 4);
  for (int i = 0; i < 4; ++i) j.at(i, i) = Rational(i < 3 ? -1 : 1);
  const MatrixSubspace so31 = form_algebra(j);
  SampleRng rng(seed);
  rep.samples = samples;
  rep.all_samples_odd_free = true;
  for (int s = 0; s < samples; ++s) {
    RatMatrix y(4, 4);
    for (const auto& b : so31.basis()) y += rng.rational(9, 4) * b;
    const MonicPoly cp = char_poly(y);
    if (!cp.coeff_of(3).is_zero() || !cp.coeff_of(1).is_zero()) {
      rep.all_samples_odd_free = false;
      break;
    }
  }
  return rep;
}

}  // namespace conjlim
