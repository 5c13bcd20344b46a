#include "conjlim/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "conjlim/error.hpp"

namespace conjlim {

std::string kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Orthogonal: return "O";
    case FamilyKind::GlSum: return "GLpGLq";
    case FamilyKind::GlComplex: return "GLC";
    case FamilyKind::Symplectic: return "Sp";
  }
  throw Error("unknown family kind");
}

std::string SymmetricFamily::name() const {
  std::ostringstream os;
  switch (kind) {
    case FamilyKind::Orthogonal: os << "O(" << p << "," << q << ")"; break;
    case FamilyKind::GlSum: os << "GLpGLq(" << p << "," << q << ")"; break;
    case FamilyKind::GlComplex: os << "GLC(" << m << ")"; break;
    case FamilyKind::Symplectic: os << "Sp(" << 2 * m << ")"; break;
  }
  return os.str();
}

MatrixSubspace form_algebra(const RatMatrix& j) {
  if (!j.is_square()) throw Error("form_algebra: J must be square");
  const int n = j.rows();
  std::vector<RatVector> equations;
  equations.reserve(static_cast<std::size_t>(n) * n);
  // (Y^T J + J Y)_{i,l} = sum_k Y_ki J_kl + sum_k J_ik Y_kl = 0
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      RatVector eq(static_cast<std::size_t>(n) * n, Rational(0));
      for (int k = 0; k < n; ++k) {
        eq[static_cast<std::size_t>(k) * n + i] += j.at(k, l);
        eq[static_cast<std::size_t>(k) * n + l] += j.at(i, k);
      }
      equations.push_back(std::move(eq));
    }
  const auto basis = nullspace(equations, n * n);
  std::vector<RatMatrix> gens;
  for (const auto& v : basis) {
    RatMatrix mtx(n, n);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) mtx.at(i, l) = v[static_cast<std::size_t>(i) * n + l];
    gens.push_back(std::move(mtx));
  }
  return MatrixSubspace::echelonize(n, gens);
}

MatrixSubspace commutant(const RatMatrix& j) {
  if (!j.is_square()) throw Error("commutant: J must be square");
  const int n = j.rows();
  std::vector<RatVector> equations;
  // (J Y - Y J)_{i,l} = sum_k J_ik Y_kl - sum_k Y_ik J_kl = 0
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      RatVector eq(static_cast<std::size_t>(n) * n, Rational(0));
      for (int k = 0; k < n; ++k) {
        eq[static_cast<std::size_t>(k) * n + l] += j.at(i, k);
        eq[static_cast<std::size_t>(i) * n + k] -= j.at(k, l);
      }
      equations.push_back(std::move(eq));
    }
  const auto basis = nullspace(equations, n * n);
  std::vector<RatMatrix> gens;
  for (const auto& v : basis) {
    RatMatrix mtx(n, n);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) mtx.at(i, l) = v[static_cast<std::size_t>(i) * n + l];
    gens.push_back(std::move(mtx));
  }
  return MatrixSubspace::echelonize(n, gens);
}

RatMatrix SymmetricFamily::involution(const RatMatrix& y) const {
  RatMatrix jinv = form;
  if (kind == FamilyKind::GlComplex || kind == FamilyKind::Symplectic) jinv = -form;
  if (kind == FamilyKind::Orthogonal || kind == FamilyKind::Symplectic)
    return -(form * y.transpose() * jinv);
  return form * y * jinv;
}

SymmetricFamily make_orthogonal(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) throw Error("O(p,q) needs p,q >= 0 and p+q >= 1");
  const int n = p + q;
  RatMatrix j(n, n);
  for (int i = 0; i < n; ++i) j.at(i, i) = Rational(i < p ? -1 : 1);
  SymmetricFamily fam{FamilyKind::Orthogonal, n, p, q, 0, j, form_algebra(j)};
  if (fam.algebra.dim() != n * (n - 1) / 2) throw Error("O(p,q) dimension check failed");
  return fam;
}

SymmetricFamily make_gl_sum(int p, int q) {
  if (p < 1 || q < 1) throw Error("GLpGLq(p,q) needs p,q >= 1");
  const int n = p + q;
  const int k = std::min(p, q);
  const int residual_sign = (q >= p) ? 1 : -1;
  RatMatrix j(n, n);
  for (int i = 0; i < k; ++i) {
    j.at(i, k + i) = Rational(-1);
    j.at(k + i, i) = Rational(-1);
  }
  for (int i = 2 * k; i < n; ++i) j.at(i, i) = Rational(residual_sign);
  SymmetricFamily fam{FamilyKind::GlSum, n, p, q, 0, j, commutant(j)};
  if (fam.algebra.dim() != p * p + q * q) throw Error("GLpGLq dimension check failed");
  return fam;
}

SymmetricFamily make_gl_complex(int m) {
  if (m < 1) throw Error("GLC(m) needs m >= 1");
  const int n = 2 * m;
  RatMatrix j(n, n);
  for (int i = 0; i < m; ++i) {
    j.at(i, m + i) = Rational(1);
    j.at(m + i, i) = Rational(-1);
  }
  SymmetricFamily fam{FamilyKind::GlComplex, n, 0, 0, m, j, commutant(j)};
  if (fam.algebra.dim() != 2 * m * m) throw Error("GLC dimension check failed");
  return fam;
}

SymmetricFamily make_symplectic(int m) {
  if (m < 1) throw Error("Sp(2m) needs m >= 1");
  const int n = 2 * m;
  RatMatrix j(n, n);
  for (int i = 0; i < m; ++i) {
    j.at(2 * i, 2 * i + 1) = Rational(1);
    j.at(2 * i + 1, 2 * i) = Rational(-1);
  }
  SymmetricFamily fam{FamilyKind::Symplectic, n, 0, 0, m, j, form_algebra(j)};
  if (fam.algebra.dim() != m * (2 * m + 1)) throw Error("Sp dimension check failed");
  return fam;
}

int simple_root_count(const SymmetricFamily& family) {
  switch (family.kind) {
    case FamilyKind::Orthogonal: return family.n - 1;
    case FamilyKind::GlSum: return std::min(family.p, family.q);
    case FamilyKind::GlComplex: return family.m;
    case FamilyKind::Symplectic: return family.m - 1;
  }
  throw Error("unknown family kind");
}

namespace {

// Shift to zero trace, then scale so every weight is an integer.
std::vector<Rational> normalize_traceless_integer(std::vector<Rational> d) {
  Rational total(0);
  for (const auto& v : d) total += v;
  const Rational mean = total / Rational(static_cast<long>(d.size()));
  mpz_class lcm_den(1);
  for (auto& v : d) {
    v -= mean;
    mpz_class den = v.denominator();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    lcm_den = lcm_den / g * den;
  }
  if (lcm_den != 1) {
    const Rational scale = Rational::parse(lcm_den.get_str());
    for (auto& v : d) v *= scale;
  }
  return d;
}

// d_1 <= ... <= d_count from the unit gaps of the surviving roots.
std::vector<Rational> gap_profile(int count, const std::vector<bool>& killed) {
  std::vector<Rational> d(static_cast<std::size_t>(count), Rational(0));
  for (int i = 1; i < count; ++i)
    d[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(i) - 1] + Rational(killed[static_cast<std::size_t>(i) - 1] ? 0 : 1);
  return d;
}

DiagonalDirection direction_for(const SymmetricFamily& family, const std::vector<bool>& killed) {
  switch (family.kind) {
    case FamilyKind::Orthogonal:
      return DiagonalDirection(normalize_traceless_integer(gap_profile(family.n, killed)));
    case FamilyKind::Symplectic: {
      auto d = normalize_traceless_integer(gap_profile(family.m, killed));
      std::vector<Rational> w;
      for (const auto& v : d) {
        w.push_back(v);
        w.push_back(v);
      }
      return DiagonalDirection(w);
    }
    case FamilyKind::GlComplex:
    case FamilyKind::GlSum: {
      // gap roots d_{i+1} - d_i (indices 0..k-2) plus 2 d_1 (index k-1);
      // closed chamber 0 <= d_1 <= ... <= d_k.
      const int k = simple_root_count(family);
      std::vector<Rational> d(static_cast<std::size_t>(k), Rational(0));
      d[0] = Rational(killed[static_cast<std::size_t>(k) - 1] ? 0 : 1);
      for (int i = 0; i + 1 < k; ++i)
        d[static_cast<std::size_t>(i) + 1] = d[static_cast<std::size_t>(i)] + Rational(killed[static_cast<std::size_t>(i)] ? 0 : 1);
      std::vector<Rational> w(d);
      for (const auto& v : d) w.push_back(-v);
      if (family.kind == FamilyKind::GlSum)
        for (int i = 2 * k; i < family.n; ++i) w.push_back(Rational(0));
      return DiagonalDirection(w);
    }
  }
  throw Error("unknown family kind");
}

std::vector<std::vector<int>> orthogonal_weyl_reps(int p, int q) {
  const int n = p + q;
  std::vector<std::vector<int>> reps;
  std::vector<int> subset;  // positions receiving the p minus signs
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::function<void(int, int)> rec = [&](int start, int chosen) {
    if (chosen == p) {
      std::vector<bool> is_minus(static_cast<std::size_t>(n), false);
      for (int s : subset) is_minus[static_cast<std::size_t>(s)] = true;
      int mi = 0, pi = 0;
      for (int pos = 0; pos < n; ++pos) {
        if (is_minus[static_cast<std::size_t>(pos)])
          perm[static_cast<std::size_t>(mi++)] = pos;  // old minus index -> new position
        else
          perm[static_cast<std::size_t>(p + pi++)] = pos;
      }
      reps.push_back(perm);
      return;
    }
    for (int s = start; s <= n - (p - chosen); ++s) {
      subset.push_back(s);
      rec(s + 1, chosen + 1);
      subset.pop_back();
    }
  };
  rec(0, 0);
  return reps;
}

}  // namespace

RootChoice root_choice(const SymmetricFamily& family) {
  RootChoice rc;
  const int n = family.n;
  auto direction_from = [&](std::vector<Rational> w) { return DiagonalDirection(std::move(w)); };
  switch (family.kind) {
    case FamilyKind::Orthogonal: {
      for (int i = 0; i + 1 < n; ++i) {
        std::vector<Rational> w(static_cast<std::size_t>(n), Rational(0));
        w[static_cast<std::size_t>(i)] = Rational(1);
        w[static_cast<std::size_t>(i) + 1] = Rational(-1);
        rc.b_basis.push_back(direction_from(std::move(w)));
      }
      rc.weyl_reps = orthogonal_weyl_reps(family.p, family.q);
      break;
    }
    case FamilyKind::Symplectic: {
      for (int i = 0; i + 1 < family.m; ++i) {
        std::vector<Rational> w(static_cast<std::size_t>(n), Rational(0));
        w[static_cast<std::size_t>(2 * i)] = w[static_cast<std::size_t>(2 * i) + 1] = Rational(1);
        w[static_cast<std::size_t>(2 * i) + 2] = w[static_cast<std::size_t>(2 * i) + 3] = Rational(-1);
        rc.b_basis.push_back(direction_from(std::move(w)));
      }
      std::vector<int> id(static_cast<std::size_t>(n));
      std::iota(id.begin(), id.end(), 0);
      rc.weyl_reps = {id};
      break;
    }
    case FamilyKind::GlComplex:
    case FamilyKind::GlSum: {
      const int k = simple_root_count(family);
      for (int i = 0; i < k; ++i) {
        std::vector<Rational> w(static_cast<std::size_t>(n), Rational(0));
        w[static_cast<std::size_t>(i)] = Rational(1);
        w[static_cast<std::size_t>(k + i)] = Rational(-1);
        rc.b_basis.push_back(direction_from(std::move(w)));
      }
      std::vector<int> id(static_cast<std::size_t>(n));
      std::iota(id.begin(), id.end(), 0);
      rc.weyl_reps = {id};
      break;
    }
  }
  // Simple roots as value vectors on the b-basis.
  const int k_roots = simple_root_count(family);
  auto root_value = [&](int root, const DiagonalDirection& b) -> Rational {
    const auto& w = b.weights();
    switch (family.kind) {
      case FamilyKind::Orthogonal:
        return w[static_cast<std::size_t>(root) + 1] - w[static_cast<std::size_t>(root)];
      case FamilyKind::Symplectic:
        return w[static_cast<std::size_t>(2 * root) + 2] - w[static_cast<std::size_t>(2 * root)];
      case FamilyKind::GlComplex:
      case FamilyKind::GlSum: {
        const int k = simple_root_count(family);
        if (root + 1 < k) return w[static_cast<std::size_t>(root) + 1] - w[static_cast<std::size_t>(root)];
        return Rational(2) * w[0];
      }
    }
    throw Error("unknown family kind");
  };
  for (int r = 0; r < k_roots; ++r) {
    std::vector<Rational> values;
    for (const auto& b : rc.b_basis) values.push_back(root_value(r, b));
    rc.simple_roots.push_back(std::move(values));
  }
  return rc;
}

std::vector<EnumeratedDirection> enumerate_directions(const SymmetricFamily& family) {
  const int k_roots = simple_root_count(family);
  std::vector<std::vector<int>> weyl;
  if (family.kind == FamilyKind::Orthogonal) {
    weyl = orthogonal_weyl_reps(family.p, family.q);
  } else {
    std::vector<int> id(static_cast<std::size_t>(family.n));
    std::iota(id.begin(), id.end(), 0);
    weyl = {id};
  }

  std::vector<EnumeratedDirection> out;
  for (unsigned mask = 0; mask < (1u << k_roots); ++mask) {
    std::vector<bool> killed(static_cast<std::size_t>(k_roots), false);
    std::vector<int> killed_idx;
    for (int r = 0; r < k_roots; ++r)
      if (mask & (1u << r)) {
        killed[static_cast<std::size_t>(r)] = true;
        killed_idx.push_back(r);
      }
    const DiagonalDirection x = direction_for(family, killed);
    for (const auto& w : weyl) {
      EnumeratedDirection dir{killed_idx, w, x, family.form, family.algebra};
      if (family.kind == FamilyKind::Orthogonal) {
        RatMatrix jw(family.n, family.n);
        for (int i = 0; i < family.n; ++i)
          jw.at(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i)]) = family.form.at(i, i);
        dir.form_w = jw;
        dir.algebra_w = form_algebra(jw);
      }
      out.push_back(std::move(dir));
    }
  }
  return out;
}

namespace {

std::vector<std::vector<int>> value_classes_ascending(const DiagonalDirection& x) {
  std::map<Rational, std::vector<int>> by_value;
  for (int i = 0; i < x.n(); ++i) by_value[x.weights()[static_cast<std::size_t>(i)]].push_back(i);
  std::vector<std::vector<int>> classes;
  for (auto& [v, coords] : by_value) classes.push_back(coords);
  return classes;
}

void embed_subalgebra_gens(const MatrixSubspace& sub, const std::vector<int>& coords, int n,
                           std::vector<RatMatrix>* gens) {
  for (const auto& b : sub.basis()) {
    RatMatrix m(n, n);
    for (int a = 0; a < b.rows(); ++a)
      for (int c = 0; c < b.cols(); ++c)
        m.at(coords[static_cast<std::size_t>(a)], coords[static_cast<std::size_t>(c)]) = b.at(a, c);
    gens->push_back(std::move(m));
  }
}

RatMatrix restrict_to(const RatMatrix& m, const std::vector<int>& coords) {
  const int k = static_cast<int>(coords.size());
  RatMatrix out(k, k);
  for (int a = 0; a < k; ++a)
    for (int c = 0; c < k; ++c) out.at(a, c) = m.at(coords[static_cast<std::size_t>(a)], coords[static_cast<std::size_t>(c)]);
  return out;
}

}  // namespace

std::string BlockForm::describe() const {
  std::ostringstream os;
  os << "blocks=[";
  for (std::size_t i = 0; i < blocks.size(); ++i) os << (i ? "," : "") << blocks[i].label;
  os << "] unipotent=" << unipotent.size();
  return os.str();
}

BlockForm predicted_block_form(const SymmetricFamily& family, const EnumeratedDirection& dir) {
  const int n = family.n;
  BlockForm bf{{}, {}, MatrixSubspace::zero(n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (dir.x.weight(i, j).sign() > 0) bf.unipotent.emplace_back(i, j);

  std::vector<RatMatrix> gens;
  const auto classes = value_classes_ascending(dir.x);

  switch (family.kind) {
    case FamilyKind::Orthogonal: {
      for (const auto& coords : classes) {
        int pc = 0, qc = 0;
        for (int c : coords) (dir.form_w.at(c, c).sign() < 0 ? pc : qc)++;
        std::ostringstream label;
        label << "O(" << pc << "," << qc << ")";
        bf.blocks.push_back({label.str(), coords});
        for (std::size_t a = 0; a < coords.size(); ++a)
          for (std::size_t b = a + 1; b < coords.size(); ++b) {
            const int i = coords[a], j = coords[b];
            RatMatrix g = RatMatrix::unit(n, i, j);
            g -= dir.form_w.at(i, i) * dir.form_w.at(j, j) * RatMatrix::unit(n, j, i);
            gens.push_back(std::move(g));
          }
      }
      break;
    }
    case FamilyKind::Symplectic: {
      for (const auto& coords : classes) {
        std::ostringstream label;
        label << "Sp(" << coords.size() << ")";
        bf.blocks.push_back({label.str(), coords});
        embed_subalgebra_gens(form_algebra(restrict_to(family.form, coords)), coords, n, &gens);
      }
      break;
    }
    case FamilyKind::GlComplex:
    case FamilyKind::GlSum: {
      const int half = (family.kind == FamilyKind::GlComplex) ? family.m
                                                              : std::min(family.p, family.q);
      for (const auto& coords : classes) {
        const Rational v = dir.x.weights()[static_cast<std::size_t>(coords[0])];
        if (v.sign() < 0) {
          // paired with the mirror class of value -v; same matrix on both
          std::vector<int> upper;
          for (int c : coords) upper.push_back(c - half);
          std::ostringstream label;
          label << "GL(" << coords.size() << ",R)";
          bf.blocks.push_back({label.str(), coords});
          for (int a : upper)
            for (int b : upper) {
              RatMatrix g = RatMatrix::unit(n, a, b);
              g += RatMatrix::unit(n, half + a, half + b);
              gens.push_back(std::move(g));
            }
        } else if (v.sign() > 0) {
          std::ostringstream label;
          label << "GL(" << coords.size() << ",R)";
          bf.blocks.push_back({label.str(), coords});  // generators shared with the mirror class
        } else {
          std::ostringstream label;
          if (family.kind == FamilyKind::GlComplex) {
            label << "GL(" << coords.size() / 2 << ",C)";
          } else {
            const int m0 = (static_cast<int>(coords.size()) - (family.n - 2 * half)) / 2;
            label << "GL(" << m0 + family.n - 2 * half << ",R)";
            if (m0 > 0) label << "+GL(" << m0 << ",R)";
          }
          bf.blocks.push_back({label.str(), coords});
          embed_subalgebra_gens(commutant(restrict_to(family.form, coords)), coords, n, &gens);
        }
      }
      break;
    }
  }
  for (const auto& [i, j] : bf.unipotent) gens.push_back(RatMatrix::unit(n, i, j));
  bf.span = MatrixSubspace::echelonize(n, gens);
  return bf;
}

}  // namespace conjlim
