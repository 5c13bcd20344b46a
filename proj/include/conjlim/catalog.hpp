#ifndef CONJLIM_CATALOG_HPP
#define CONJLIM_CATALOG_HPP

#include <string>
#include <vector>

#include "conjlim/limits.hpp"

namespace conjlim {

enum class FamilyKind { Orthogonal, GlSum, GlComplex, Symplectic };

std::string kind_name(FamilyKind kind);

/// Lie algebra of a symmetric subgroup of GL_n(R), in coordinates where
/// the conjugating directions form a diagonal subalgebra b.
///   Orthogonal O(p,q):   { Y : Y^T J + J Y = 0 },  J = diag(-I_p, I_q)
///   GlSum GL_p + GL_q:   { Y : J Y = Y J },        J = [[0,-I_k,0],[-I_k,0,0],[0,0,±I_r]]
///   GlComplex GL_m(C):   { Y : J Y = Y J },        J = [[0, I_m],[-I_m, 0]]
///   Symplectic Sp(2m):   { Y : Y^T J + J Y = 0 },  J = diag(J_0, ..., J_0)
/// GlSum is stated in the basis u_i = (e_i + e_{k+i})/sqrt(2),
/// v_i = (e_i - e_{k+i})/sqrt(2) that diagonalizes its b; the form J
/// above is the conjugated involution matrix, which is rational.
struct SymmetricFamily {
  FamilyKind kind;
  int n = 0;  // ambient: matrices are n x n
  int p = 0, q = 0;  // Orthogonal / GlSum parameters
  int m = 0;         // GlComplex / Symplectic parameter
  RatMatrix form;    // the J above
  MatrixSubspace algebra;

  /// The defining involution at the algebra level; fixes every element
  /// of `algebra`.
  RatMatrix involution(const RatMatrix& y) const;

  std::string name() const;
};

SymmetricFamily make_orthogonal(int p, int q);
SymmetricFamily make_gl_sum(int p, int q);
SymmetricFamily make_gl_complex(int m);
SymmetricFamily make_symplectic(int m);  // ambient 2m

/// Restricted-root data: basis of b, the simple roots as value vectors
/// on that basis, and the Weyl coset representatives (identity except
/// for the orthogonal family, which gets one representative per
/// arrangement of the form's signs).
struct RootChoice {
  std::vector<DiagonalDirection> b_basis;
  std::vector<std::vector<Rational>> simple_roots;  // alpha(b_1), ..., alpha(b_k) per root
  std::vector<std::vector<int>> weyl_reps;          // permutations, image form
};

RootChoice root_choice(const SymmetricFamily& family);

int simple_root_count(const SymmetricFamily& family);

/// One enumerated limit datum: the killed root subset I, the Weyl
/// representative w, the direction x in the closure of b_I^+ with
/// integer weights, and the w-conjugated form and algebra.
struct EnumeratedDirection {
  std::vector<int> killed_roots;  // indices into the simple roots (the set I)
  std::vector<int> weyl_perm;     // w as images: position i of J_w holds sign w^-1(i) of J
  DiagonalDirection x;
  RatMatrix form_w;
  MatrixSubspace algebra_w;
};

/// All (I, w) pairs of the family, each with its representative
/// direction. Redundant labels are kept; dedup happens at the
/// signature level downstream.
std::vector<EnumeratedDirection> enumerate_directions(const SymmetricFamily& family);

struct DiagonalBlockSpec {
  std::string label;        // "O(p,q)", "Sp(2k)", "GL(k,R)", "GL(k,C)", "GL(a,R)+GL(b,R)"
  std::vector<int> coords;  // the coordinates the block acts on
};

/// The explicit block shape of the limit L_{I,w}: diagonal blocks in
/// increasing eigenvalue order plus the flag-unipotent support set.
/// `span` is the flattened subspace of the whole description and must
/// equal both limit engines' output.
struct BlockForm {
  std::vector<DiagonalBlockSpec> blocks;
  std::vector<std::pair<int, int>> unipotent;
  MatrixSubspace span;

  std::string describe() const;
};

BlockForm predicted_block_form(const SymmetricFamily& family, const EnumeratedDirection& dir);

/// { Y : Y^T J + J Y = 0 } for any symmetric nondegenerate J.
MatrixSubspace form_algebra(const RatMatrix& j);
/// { Y : J Y = Y J }.
MatrixSubspace commutant(const RatMatrix& j);

}  // namespace conjlim

#endif
