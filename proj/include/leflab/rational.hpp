#ifndef LEFLAB_RATIONAL_HPP
#define LEFLAB_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace leflab {

// Every scalar in the library is an exact GMP-backed rational or integer.
// There is no floating point anywhere.
namespace mp = boost::multiprecision;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using Integer = mp::number<mp::gmp_int, mp::et_off>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = DenseMatrix<Rational>;
using RatVector = DenseVector<Rational>;
using IntMatrix = DenseMatrix<Integer>;
using IntVector = DenseVector<Integer>;

using Index = Eigen::Index;

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

/// Exact conversion; throws if an entry has a nontrivial denominator.
IntMatrix to_integer(const RatMatrix& m);
RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);

inline bool is_symmetric(const RatMatrix& m) { return m == m.transpose().eval(); }
inline bool is_skew(const RatMatrix& m) { return m == (-m.transpose()).eval(); }
inline bool is_symmetric(const IntMatrix& m) { return m == m.transpose().eval(); }
inline bool is_skew(const IntMatrix& m) { return m == (-m.transpose()).eval(); }

inline RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) {
  return a * b - b * a;
}

/// Row-major vectorization of a matrix, the canonical coordinates used when
/// spaces of operators are handled as plain vectors.
RatVector vectorize(const RatMatrix& m);
RatMatrix unvectorize(const RatVector& v, Index rows, Index cols);

/// Smallest positive integer d with d*m integral, and the scaled matrix.
IntMatrix clear_denominators(const RatMatrix& m, Integer* denom = nullptr);

std::string to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

}  // namespace leflab

#endif
