#ifndef CONJLIM_PFQF_HPP
#define CONJLIM_PFQF_HPP

#include <string>
#include <utility>
#include <vector>

#include "conjlim/catalog.hpp"

namespace conjlim {

/// Ordered list of signature pairs (p_i, q_i), the canonical name of a
/// partial-flag-of-quadratic-forms group X((p_0,q_0)...(p_k,q_k)).
struct SignatureSequence {
  std::vector<std::pair<int, int>> sigs;

  int total() const;
  int block_count() const { return static_cast<int>(sigs.size()); }
  /// A geometry (nonempty domain) needs p_0 > 0.
  bool geometry_valid() const { return !sigs.empty() && sigs[0].first > 0; }

  /// "X(1,3)" for one block, "X((1,0)(3))" otherwise; (p,0) blocks past
  /// the first abbreviate to (p).
  std::string label(const std::string& prefix = "X") const;

  friend bool operator==(const SignatureSequence& a, const SignatureSequence& b) {
    return a.sigs == b.sigs;
  }
  friend bool operator!=(const SignatureSequence& a, const SignatureSequence& b) {
    return !(a == b);
  }
  /// Deterministic order: fewer blocks first, then lexicographic.
  friend bool operator<(const SignatureSequence& a, const SignatureSequence& b) {
    if (a.sigs.size() != b.sigs.size()) return a.sigs.size() < b.sigs.size();
    return a.sigs < b.sigs;
  }
};

void validate(const SignatureSequence& s);

enum class Mode { Group, Geometry };

/// Group level: every pair to its max-first form. Geometry level: the
/// same for i >= 1, pair 0 untouched. Idempotent.
SignatureSequence canonicalize(SignatureSequence s, Mode mode);

/// diag(-1 x p_i, +1 x q_i) per block.
RatMatrix standard_form(const SignatureSequence& s);

/// Block-diagonal so(p_i, q_i) pieces plus every strictly-lower cross
/// block coordinate.
MatrixSubspace isom_algebra(const SignatureSequence& s);
int isom_dim(const SignatureSequence& s);

/// All canonical refinements of s (including s), sorted.
std::vector<SignatureSequence> enumerate_limits(const SignatureSequence& s, Mode mode);

/// Hasse diagram of the refinement order: edges are covers
/// (coarser -> strictly finer, transitively reduced).
struct LimitPoset {
  Mode mode;
  std::vector<SignatureSequence> nodes;
  std::vector<std::pair<int, int>> edges;  // indices into nodes

  int edge_count() const { return static_cast<int>(edges.size()); }
};

LimitPoset build_poset(const SignatureSequence& root, Mode mode);
LimitPoset build_poset(const std::vector<SignatureSequence>& roots, Mode mode);

std::string to_dot(const LimitPoset& poset);
std::string to_text(const LimitPoset& poset);

/// Witness data for one geometry-mode refinement: the conjugating
/// direction and the coordinate reordering that carries the computed
/// limit onto the canonical form of the target.
struct GeometryWitness {
  DiagonalDirection x;
  std::vector<int> order;  // order[k] = source coordinate at canonical position k
};

GeometryWitness geometry_limit_witness_full(const SignatureSequence& from,
                                            const SignatureSequence& to);
DiagonalDirection geometry_limit_witness(const SignatureSequence& from,
                                         const SignatureSequence& to);

/// grassmann_limit(isom(from), witness) equals isom(to) after the
/// canonical permutation, and the witness fixes a negative-form base
/// coordinate in its lowest eigenvalue class.
bool verify_geometry_edge(const SignatureSequence& from, const SignatureSequence& to);

/// Exact-containment facts about the three-dimensional geometries:
/// the nilpotent isometry algebra sits inside X((1,0)(2)(1)), the
/// boost-translation algebra acts simply transitively on X((1,1)(2))
/// at the infinitesimal level, and the so(2,1) block of X((1,2)(1))
/// has no centralizer direction left over for an extra R factor.
struct ThurstonReport {
  bool nil_contained = false;
  bool nil_subalgebra = false;
  bool sol_contained = false;
  bool sol_subalgebra = false;
  int sol_evaluation_rank = 0;
  int halfpipe_centralizer_dim = -1;
  bool halfpipe_centralizer_scalar_block = false;
};

ThurstonReport thurston_subalgebra_checks();

/// Signature sequence of one enumerated orthogonal-family limit:
/// eigenvalue classes in increasing order, each scored against the
/// permuted form. Not canonicalized.
SignatureSequence signature_of(const SymmetricFamily& family, const EnumeratedDirection& dir);

}  // namespace conjlim

#endif
