#include "leflab/liealg.hpp"

#include <map>

namespace leflab {

namespace {

// Reduce v against canonical RREF rows; returns the remainder.
RatVector reduce_against(const RatMatrix& rows, const std::vector<Index>& pivots,
                         RatVector v) {
  for (Index i = 0; i < rows.rows(); ++i) {
    const Index p = pivots[static_cast<size_t>(i)];
    if (v(p) != 0) v -= v(p) * rows.row(i).transpose();
  }
  return v;
}

std::vector<RatMatrix> unvectorize_rows(const RatMatrix& rows, Index d) {
  std::vector<RatMatrix> out;
  out.reserve(static_cast<size_t>(rows.rows()));
  for (Index i = 0; i < rows.rows(); ++i)
    out.push_back(unvectorize(rows.row(i).transpose(), d, d));
  return out;
}

}  // namespace

bool Sl2Triple::relations_hold() const {
  return commutator(e, f) == h && commutator(h, e) == 2 * e && commutator(h, f) == -2 * f;
}

bool LieBasis::contains(const RatMatrix& x) const {
  if (x.rows() != ambient_dim || x.cols() != ambient_dim) return false;
  const RatVector rem = reduce_against(row_span, pivots, vectorize(x));
  return rem == RatVector::Zero(rem.size());
}

bool LieBasis::contains(const LieBasis& other) const {
  if (other.ambient_dim != ambient_dim) return false;
  for (const RatMatrix& x : other.basis)
    if (!contains(x)) return false;
  return true;
}

LieBasis span_basis(const std::vector<RatMatrix>& mats, ClosurePolicy policy) {
  LieBasis out;
  if (mats.empty()) {
    out.closed = policy != ClosurePolicy::leave_open;
    return out;
  }
  out.ambient_dim = mats.front().rows();
  std::vector<RatVector> rows;
  for (const RatMatrix& m : mats) {
    if (m.rows() != out.ambient_dim || m.cols() != out.ambient_dim)
      throw Error("span_basis: matrices must be square and of equal size");
    rows.push_back(vectorize(m));
  }
  RatMatrix stacked(static_cast<Index>(rows.size()), out.ambient_dim * out.ambient_dim);
  for (Index i = 0; i < stacked.rows(); ++i)
    stacked.row(i) = rows[static_cast<size_t>(i)].transpose();
  const RrefResult r = rref(stacked);
  out.row_span = r.reduced.topRows(r.rank);
  out.pivots = r.pivots;
  out.basis = unvectorize_rows(out.row_span, out.ambient_dim);
  switch (policy) {
    case ClosurePolicy::check: out.closed = is_bracket_closed(out); break;
    case ClosurePolicy::assume_closed: out.closed = true; break;
    case ClosurePolicy::leave_open: out.closed = false; break;
  }
  return out;
}

LieBasis lie_closure(const std::vector<RatMatrix>& generators, std::optional<Index> max_dim) {
  LieBasis out;
  if (generators.empty()) {
    out.closed = true;
    return out;
  }
  const Index d = generators.front().rows();
  out.ambient_dim = d;
  const Index cap = max_dim.value_or(d * d);

  // Canonical working basis plus the matrices themselves; new elements are
  // bracketed against everything already present.
  RatMatrix rows(0, d * d);
  std::vector<Index> pivots;
  std::vector<RatMatrix> elements;

  auto insert = [&](const RatMatrix& m) -> bool {
    RatVector rem = reduce_against(rows, pivots, vectorize(m));
    Index lead = -1;
    for (Index i = 0; i < rem.size(); ++i)
      if (rem(i) != 0) {
        lead = i;
        break;
      }
    if (lead < 0) return false;
    rem /= rem(lead);
    // Keep rows in RREF: clear the new pivot column above, then insert the
    // row in pivot order.
    for (Index i = 0; i < rows.rows(); ++i)
      if (rows(i, lead) != 0) rows.row(i) -= rows(i, lead) * rem.transpose();
    Index at = rows.rows();
    for (Index i = 0; i < rows.rows(); ++i)
      if (pivots[static_cast<size_t>(i)] > lead) {
        at = i;
        break;
      }
    RatMatrix next(rows.rows() + 1, d * d);
    next.topRows(at) = rows.topRows(at);
    next.row(at) = rem.transpose();
    next.bottomRows(rows.rows() - at) = rows.bottomRows(rows.rows() - at);
    rows = std::move(next);
    pivots.insert(pivots.begin() + at, lead);
    elements.push_back(unvectorize(rem, d, d));
    return true;
  };

  for (const RatMatrix& g : generators) {
    if (g.rows() != d || g.cols() != d) throw Error("lie_closure: generators of unequal size");
    insert(g);
  }

  bool truncated = false;
  size_t next_new = 0;
  while (next_new < elements.size() && !truncated) {
    const size_t upto = elements.size();
    for (size_t i = next_new; i < upto && !truncated; ++i)
      for (size_t j = 0; j < upto; ++j) {
        if (i == j) continue;
        if (insert(commutator(elements[i], elements[j])) &&
            static_cast<Index>(elements.size()) > cap) {
          truncated = true;
          break;
        }
      }
    next_new = upto;
  }

  out.row_span = rows;
  out.pivots = pivots;
  out.basis = unvectorize_rows(rows, d);
  out.closed = !truncated;
  return out;
}

bool is_bracket_closed(const LieBasis& g) {
  const Index n = g.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const RatMatrix br = commutator(g.basis[static_cast<size_t>(i)], g.basis[static_cast<size_t>(j)]);
      if (!g.contains(br)) return false;
    }
  return true;
}

std::vector<GradedComponent> graded_decompose(const LieBasis& g, const RatMatrix& h) {
  const Index n = g.dim();
  if (n == 0) return {};
  const Index d = g.ambient_dim;
  if (h.rows() != d || h.cols() != d) throw Error("graded_decompose: dimension mismatch");

  // Coordinates of ad_h on the basis of g; failure to solve means ad_h does
  // not preserve g.
  RatMatrix ad(n, n);
  for (Index j = 0; j < n; ++j) {
    const RatVector image = vectorize(commutator(h, g.basis[static_cast<size_t>(j)]));
    const auto coords = solve(g.row_span.transpose(), image);
    if (!coords) throw Error("graded_decompose: ad_h does not preserve the subspace");
    ad.col(j) = *coords;
  }

  // Integer eigenvalue candidates: differences of diagonal entries when h is
  // diagonal; otherwise integer roots read off by trial kernel computation
  // over a small symmetric range of the trace bound.
  std::map<long, std::vector<RatMatrix>> parts;
  Index found = 0;
  std::vector<long> candidates;
  {
    std::map<long, bool> seen;
    bool diagonal = true;
    for (Index i = 0; i < d && diagonal; ++i)
      for (Index j = 0; j < d; ++j)
        if (i != j && h(i, j) != 0) {
          diagonal = false;
          break;
        }
    if (diagonal) {
      for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) {
          const Rational diff = h(i, i) - h(j, j);
          if (is_integral(diff)) seen[static_cast<long>(numerator(diff))] = true;
        }
    } else {
      for (long l = -2 * d; l <= 2 * d; ++l) seen[l] = true;
    }
    for (auto& [k, v] : seen) candidates.push_back(k);
  }

  for (long lambda : candidates) {
    RatMatrix shifted = ad - Rational(lambda) * RatMatrix::Identity(n, n);
    const RatMatrix k = kernel(shifted);
    if (k.cols() == 0) continue;
    std::vector<RatMatrix>& slot = parts[lambda];
    for (Index c = 0; c < k.cols(); ++c) {
      RatMatrix m = RatMatrix::Zero(d, d);
      for (Index b = 0; b < n; ++b) m += k(b, c) * g.basis[static_cast<size_t>(b)];
      slot.push_back(m);
      ++found;
    }
  }
  if (found != n)
    throw Error("graded_decompose: ad_h is not diagonalizable with integer eigenvalues");

  std::vector<GradedComponent> out;
  for (auto& [lambda, mats] : parts) out.push_back({lambda, std::move(mats)});
  return out;
}

bool preserves_form(const LieBasis& g, const RatMatrix& form) {
  if (g.dim() == 0) return true;
  if (form.rows() != g.ambient_dim || form.cols() != g.ambient_dim)
    throw Error("preserves_form: dimension mismatch");
  for (const RatMatrix& x : g.basis)
    if (x.transpose() * form + form * x != RatMatrix::Zero(form.rows(), form.cols()))
      return false;
  return true;
}

}  // namespace leflab
