#ifndef LEFLAB_LIEALG_HPP
#define LEFLAB_LIEALG_HPP

#include "leflab/exactlin.hpp"

#include <optional>
#include <vector>

namespace leflab {

/// A subspace of D x D matrices with a canonical basis (the RREF rows of the
/// row-major vectorizations) and a certificate that it is closed under the
/// commutator.
struct LieBasis {
  Index ambient_dim = 0;          // matrices are ambient_dim x ambient_dim
  std::vector<RatMatrix> basis;   // canonical, deterministic
  RatMatrix row_span;             // dim x D^2 canonical RREF rows
  std::vector<Index> pivots;      // pivot column of each row of row_span
  bool closed = false;

  Index dim() const { return static_cast<Index>(basis.size()); }
  bool contains(const RatMatrix& x) const;
  bool contains(const LieBasis& other) const;
};

struct Sl2Triple {
  RatMatrix e, h, f;
  bool relations_hold() const;  // [e,f] = h, [h,e] = 2e, [h,f] = -2f
};

/// Canonical LieBasis spanned by the given matrices, without any closure
/// step. With check_closed the closed flag is set by brute-force pairwise
/// bracketing; `assume_closed` marks spans that are closed by construction
/// (kernels of Lie-algebra conditions, intersections).
enum class ClosurePolicy { check, assume_closed, leave_open };
LieBasis span_basis(const std::vector<RatMatrix>& mats,
                    ClosurePolicy policy = ClosurePolicy::check);

/// Smallest bracket-closed subspace containing the generators, by span
/// saturation and pairwise brackets until a fixpoint. Brackets are taken
/// newest-against-all and reduced into the canonical basis, so the result is
/// independent of generator order. If the dimension would exceed max_dim
/// (default D^2) the partial basis is returned flagged not closed.
LieBasis lie_closure(const std::vector<RatMatrix>& generators,
                     std::optional<Index> max_dim = std::nullopt);

/// Brute-force re-verification of the closed certificate.
bool is_bracket_closed(const LieBasis& g);

struct GradedComponent {
  long weight = 0;
  std::vector<RatMatrix> basis;
};

/// Splits g into eigenspaces of ad_h; the candidate eigenvalues are the
/// differences of eigenvalues of h, which must act diagonalizably with
/// integer spectrum. Throws when ad_h does not preserve g.
std::vector<GradedComponent> graded_decompose(const LieBasis& g, const RatMatrix& h);

/// True iff every basis element X satisfies X^T G + G X = 0, i.e. the span
/// lies in the orthogonal (or symplectic, for skew G) Lie algebra of the form.
bool preserves_form(const LieBasis& g, const RatMatrix& form);

}  // namespace leflab

#endif
