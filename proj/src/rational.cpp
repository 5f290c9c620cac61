#include "leflab/rational.hpp"

namespace leflab {

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j)))
        throw Error("to_integer: entry " + to_string(m(i, j)) + " is not an integer");
      out(i, j) = numerator(m(i, j));
    }
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

RatVector to_rational(const IntVector& v) {
  RatVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
  return out;
}

RatVector vectorize(const RatMatrix& m) {
  RatVector out(m.rows() * m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i * m.cols() + j) = m(i, j);
  return out;
}

RatMatrix unvectorize(const RatVector& v, Index rows, Index cols) {
  if (v.size() != rows * cols) throw Error("unvectorize: size mismatch");
  RatMatrix out(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) out(i, j) = v(i * cols + j);
  return out;
}

IntMatrix clear_denominators(const RatMatrix& m, Integer* denom) {
  Integer d = 1;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) d = lcm(d, denominator(m(i, j)));
  IntMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      out(i, j) = numerator(m(i, j)) * (d / denominator(m(i, j)));
  if (denom) *denom = d;
  return out;
}

std::string to_string(const Rational& q) { return q.str(); }

Rational rational_from_string(const std::string& s) {
  try {
    Rational q(s);
    if (denominator(q) == 0) throw Error("rational_from_string: zero denominator");
    if (denominator(q) < 0) q = Rational(-numerator(q), -denominator(q));
    return q;
  } catch (const std::exception&) {
    throw Error("rational_from_string: cannot parse '" + s + "'");
  }
}

}  // namespace leflab
