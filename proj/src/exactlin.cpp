#include "leflab/exactlin.hpp"

#include <algorithm>

namespace leflab {

RrefResult rref(const RatMatrix& m) {
  RrefResult res;
  res.reduced = m;
  RatMatrix& a = res.reduced;
  const Index rows = a.rows(), cols = a.cols();
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index pivot = -1;
    for (Index i = row; i < rows; ++i)
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    a.row(row).swap(a.row(pivot));
    const Rational inv = 1 / a(row, col);
    a.row(row) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == row || a(i, col) == 0) continue;
      a.row(i) -= a(i, col) * a.row(row);
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

RatMatrix kernel(const RatMatrix& m) {
  const RrefResult r = rref(m);
  const Index cols = m.cols();
  std::vector<Index> free_cols;
  {
    std::vector<bool> is_pivot(cols, false);
    for (Index p : r.pivots) is_pivot[p] = true;
    for (Index j = 0; j < cols; ++j)
      if (!is_pivot[j]) free_cols.push_back(j);
  }
  RatMatrix basis = RatMatrix::Zero(cols, static_cast<Index>(free_cols.size()));
  for (Index k = 0; k < basis.cols(); ++k) {
    const Index j = free_cols[static_cast<size_t>(k)];
    basis(j, k) = 1;
    for (Index i = 0; i < r.rank; ++i) basis(r.pivots[static_cast<size_t>(i)], k) = -r.reduced(i, j);
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw Error("solve: dimension mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const RrefResult r = rref(aug);
  // Inconsistent iff the last column is a pivot column.
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  RatVector x = RatVector::Zero(a.cols());
  for (Index i = 0; i < r.rank; ++i) x(r.pivots[static_cast<size_t>(i)]) = r.reduced(i, a.cols());
  return x;
}

namespace {

// Elementary operations maintaining a = u * d * v throughout: a row operation
// e on d is compensated on u by the inverse column operation, and likewise
// for columns and v.
struct SnfWork {
  IntMatrix u, d, v;

  void swap_rows(Index i, Index j) {
    d.row(i).swap(d.row(j));
    u.col(i).swap(u.col(j));
  }
  void swap_cols(Index i, Index j) {
    d.col(i).swap(d.col(j));
    v.row(i).swap(v.row(j));
  }
  void add_row(Index dst, Index src, const Integer& k) {  // row dst += k * row src
    d.row(dst) += k * d.row(src);
    u.col(src) -= k * u.col(dst);
  }
  void add_col(Index dst, Index src, const Integer& k) {  // col dst += k * col src
    d.col(dst) += k * d.col(src);
    v.row(src) -= k * v.row(dst);
  }
  void negate_row(Index i) {
    d.row(i) = -d.row(i);
    u.col(i) = -u.col(i);
  }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
  const Index rows = a.rows(), cols = a.cols();
  SnfWork w{IntMatrix::Identity(rows, rows), a, IntMatrix::Identity(cols, cols)};

  const Index steps = std::min(rows, cols);
  for (Index t = 0; t < steps; ++t) {
    // Smallest-nonzero-absolute-value pivot in the trailing submatrix.
    auto find_pivot = [&]() -> std::pair<Index, Index> {
      Index pi = -1, pj = -1;
      Integer best = 0;
      for (Index i = t; i < rows; ++i)
        for (Index j = t; j < cols; ++j) {
          if (w.d(i, j) == 0) continue;
          const Integer m = abs(w.d(i, j));
          if (pi < 0 || m < best) {
            best = m;
            pi = i;
            pj = j;
          }
        }
      return {pi, pj};
    };

    bool settled = false;
    while (!settled) {
      auto [pi, pj] = find_pivot();
      if (pi < 0) { settled = true; break; }  // trailing block is zero
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);
      settled = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (w.d(i, t) == 0) continue;
        const Integer q = w.d(i, t) / w.d(t, t);
        w.add_row(i, t, -q);
        if (w.d(i, t) != 0) settled = false;  // remainder became the new smaller pivot
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (w.d(t, j) == 0) continue;
        const Integer q = w.d(t, j) / w.d(t, t);
        w.add_col(j, t, -q);
        if (w.d(t, j) != 0) settled = false;
      }
      if (settled && w.d(t, t) != 0) {
        // Pivot must divide every remaining entry; if not, fold the offending
        // row in and keep reducing.
        for (Index i = t + 1; i < rows && settled; ++i)
          for (Index j = t + 1; j < cols; ++j)
            if (w.d(i, j) % w.d(t, t) != 0) {
              w.add_row(t, i, 1);
              settled = false;
              break;
            }
      }
    }
    if (w.d(t, t) < 0) w.negate_row(t);
  }

  SnfResult res{w.u, w.d, w.v};
  // Off-diagonal entries are zero by construction; keep d literally diagonal.
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      if (i != j && res.d(i, j) != 0) throw Error("smith_normal_form: internal error");
  return res;
}

std::vector<Integer> SnfResult::elementary_divisors() const {
  std::vector<Integer> out;
  const Index n = std::min(d.rows(), d.cols());
  for (Index i = 0; i < n; ++i)
    if (d(i, i) != 0) out.push_back(d(i, i));
  return out;
}

Signature signature(const RatMatrix& gram) {
  if (gram.rows() != gram.cols() || !is_symmetric(gram))
    throw Error("signature: form must be symmetric");
  RatMatrix g = gram;
  const Index n = g.rows();
  Signature sig;
  for (Index k = 0; k < n; ++k) {
    if (g(k, k) == 0) {
      // Congruence-swap a nonzero diagonal entry into place, or create one
      // from an off-diagonal entry (g'(i,i) = 2 g(i,j) after folding row j in).
      Index swap_i = -1;
      for (Index i = k + 1; i < n; ++i)
        if (g(i, i) != 0) {
          swap_i = i;
          break;
        }
      if (swap_i >= 0) {
        g.row(k).swap(g.row(swap_i));
        g.col(k).swap(g.col(swap_i));
      } else {
        Index oi = -1, oj = -1;
        for (Index i = k; i < n && oi < 0; ++i)
          for (Index j = i + 1; j < n; ++j)
            if (g(i, j) != 0) {
              oi = i;
              oj = j;
              break;
            }
        if (oi < 0) {
          sig.zero += n - k;  // remaining block is the radical
          break;
        }
        g.row(oi) += g.row(oj);
        g.col(oi) += g.col(oj);
        if (oi != k) {
          g.row(k).swap(g.row(oi));
          g.col(k).swap(g.col(oi));
        }
      }
    }
    if (g(k, k) > 0)
      ++sig.positive;
    else
      ++sig.negative;
    for (Index i = k + 1; i < n; ++i) {
      if (g(i, k) == 0) continue;
      const Rational f = g(i, k) / g(k, k);
      g.row(i) -= f * g.row(k);
      g.col(i) -= f * g.col(k);
    }
  }
  return sig;
}

Signature signature(const IntMatrix& gram) { return signature(to_rational(gram)); }

RatMatrix span_saturate(const RatMatrix& rows) {
  const RrefResult r = rref(rows);
  return r.reduced.topRows(r.rank);
}

RatMatrix span_saturate(const std::vector<RatVector>& vectors) {
  if (vectors.empty()) return RatMatrix(0, 0);
  RatMatrix rows(static_cast<Index>(vectors.size()), vectors.front().size());
  for (Index i = 0; i < rows.rows(); ++i) {
    if (vectors[static_cast<size_t>(i)].size() != rows.cols())
      throw Error("span_saturate: vectors of unequal length");
    rows.row(i) = vectors[static_cast<size_t>(i)].transpose();
  }
  return span_saturate(rows);
}

Rational determinant(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw Error("determinant: matrix not square");
  RatMatrix m = a;
  const Index n = m.rows();
  Rational det = 1;
  for (Index k = 0; k < n; ++k) {
    Index pivot = -1;
    for (Index i = k; i < n; ++i)
      if (m(i, k) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      det = -det;
    }
    det *= m(k, k);
    for (Index i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      m.row(i) -= (m(i, k) / m(k, k)) * m.row(k);
    }
  }
  return det;
}

Integer determinant(const IntMatrix& a) {
  const Rational d = determinant(to_rational(a));
  return numerator(d);
}

RatMatrix inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw Error("inverse: matrix not square");
  const Index n = a.rows();
  RatMatrix aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = RatMatrix::Identity(n, n);
  const RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[static_cast<size_t>(n - 1)] != n - 1)
    throw Error("inverse: matrix is singular");
  return r.reduced.rightCols(n);
}

IntMatrix integer_kernel(const IntMatrix& a) {
  // a = u d v, so a x = 0 iff d (v x) = 0; the kernel is spanned by the
  // columns of v^{-1} at the zero entries of d, and v^{-1} is integral.
  const SnfResult s = smith_normal_form(a);
  const IntMatrix vinv = to_integer(inverse(to_rational(s.v)));
  std::vector<Index> zero_cols;
  const Index n = a.cols();
  for (Index j = 0; j < n; ++j)
    if (j >= std::min(a.rows(), a.cols()) || s.d(j, j) == 0) zero_cols.push_back(j);
  IntMatrix basis(n, static_cast<Index>(zero_cols.size()));
  for (Index k = 0; k < basis.cols(); ++k) basis.col(k) = vinv.col(zero_cols[static_cast<size_t>(k)]);
  return basis;
}

IntMatrix saturate_columns(const RatMatrix& a) {
  // The saturation of span(a) in Z^n is the integer kernel of any integer
  // matrix whose rational kernel is span(a); rows annihilating the span give
  // one.
  const RatMatrix ann = kernel(a.transpose()).transpose();  // rows * a = 0
  if (ann.rows() == 0) return IntMatrix::Identity(a.rows(), a.rows());
  return integer_kernel(clear_denominators(ann));
}

IntMatrix saturate_columns(const IntMatrix& a) { return saturate_columns(to_rational(a)); }

}  // namespace leflab
