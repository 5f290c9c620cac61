#ifndef LEFLAB_EXACTLIN_HPP
#define LEFLAB_EXACTLIN_HPP

#include "leflab/rational.hpp"

#include <optional>
#include <vector>

namespace leflab {

struct RrefResult {
  RatMatrix reduced;
  std::vector<Index> pivots;  // pivot column per nonzero row
  Index rank = 0;
};

/// Reduced row echelon form over the rationals. The pivot of each row is the
/// first nonzero entry scanning left to right, so the output is the unique
/// canonical RREF of the row space.
RrefResult rref(const RatMatrix& m);

/// Canonical basis of {x : m x = 0}, returned as the columns of the result.
/// Free variables are the non-pivot columns of rref(m); basis vector j has a
/// 1 in its free coordinate and the negated reduced column elsewhere.
RatMatrix kernel(const RatMatrix& m);

/// Some solution of a x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero after row reduction, so the choice is
/// deterministic.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

struct SnfResult {
  IntMatrix u, d, v;  // a = u * d * v, u and v unimodular, d diagonal
  std::vector<Integer> elementary_divisors() const;
};

/// Smith normal form with transforms: a = u * d * v with |det u| = |det v| = 1
/// and d diagonal, nonnegative, each entry dividing the next. Pivoting picks
/// the smallest nonzero absolute value to limit coefficient growth.
SnfResult smith_normal_form(const IntMatrix& a);

struct Signature {
  Index positive = 0, negative = 0, zero = 0;
  bool positive_definite() const { return negative == 0 && zero == 0; }
  bool negative_definite() const { return positive == 0 && zero == 0; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Exact signature of a symmetric form by congruence elimination (Sylvester's
/// law); the zero count is the dimension of the radical. Rejects
/// non-symmetric input.
Signature signature(const RatMatrix& gram);
Signature signature(const IntMatrix& gram);

/// Canonical basis of the span of the given vectors: the nonzero RREF rows,
/// returned as matrix rows. Idempotent and independent of input order.
RatMatrix span_saturate(const std::vector<RatVector>& vectors);
RatMatrix span_saturate(const RatMatrix& rows);

Rational determinant(const RatMatrix& a);
Integer determinant(const IntMatrix& a);

/// Exact inverse; throws Error when singular.
RatMatrix inverse(const RatMatrix& a);

/// Integer basis of {x in Z^n : a x = 0}, returned as columns. The basis
/// spans a saturated (primitive) sublattice; computed through the Smith
/// normal form of a.
IntMatrix integer_kernel(const IntMatrix& a);

/// Primitive closure: saturated integer basis of the rational column span of
/// a, as columns. Canonical for a given span.
IntMatrix saturate_columns(const IntMatrix& a);
IntMatrix saturate_columns(const RatMatrix& a);

}  // namespace leflab

#endif
