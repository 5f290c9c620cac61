#include "leflab/abelian.hpp"

namespace leflab {

namespace {

RatMatrix block(const RatMatrix& tl, const RatMatrix& tr, const RatMatrix& bl,
                const RatMatrix& br) {
  const Index m = tl.rows();
  RatMatrix out(2 * m, 2 * m);
  out.topLeftCorner(m, m) = tl;
  out.topRightCorner(m, m) = tr;
  out.bottomLeftCorner(m, m) = bl;
  out.bottomRightCorner(m, m) = br;
  return out;
}

}  // namespace

TorusData::TorusData(Index n_, RatMatrix j_) : n(n_), j(std::move(j_)) {
  if (n < 1) throw Error("TorusData: complex dimension must be positive");
  if (j.rows() != 2 * n || j.cols() != 2 * n)
    throw Error("TorusData: J must act on a rank-2n lattice");
  if (j * j != (-RatMatrix::Identity(2 * n, 2 * n)).eval())
    throw Error("TorusData: J^2 = -1 fails");
}

IntMatrix lambda_q(Index n) {
  IntMatrix q = IntMatrix::Zero(4 * n, 4 * n);
  q.topRightCorner(2 * n, 2 * n) = IntMatrix::Identity(2 * n, 2 * n);
  q.bottomLeftCorner(2 * n, 2 * n) = IntMatrix::Identity(2 * n, 2 * n);
  return q;
}

LambdaSpace lambda_space(const TorusData& a) {
  LambdaSpace l;
  l.qgram = lambda_q(a.n);
  const Index m = 2 * a.n;
  l.jtilde = block(a.j, RatMatrix::Zero(m, m), RatMatrix::Zero(m, m), -a.j.transpose());
  const RatMatrix q = to_rational(l.qgram);
  if (l.jtilde.transpose() * q * l.jtilde != q)
    throw Error("lambda_space: Jtilde is not a Q-isometry");
  if (determinant(l.jtilde) != 1)
    throw Error("lambda_space: Jtilde must have determinant one");
  return l;
}

bool is_ns_form(const TorusData& a, const RatMatrix& c) {
  if (c.rows() != 2 * a.n || c.cols() != 2 * a.n) return false;
  if (!is_skew(c)) return false;
  return a.j.transpose() * c * a.j == c;
}

NSForm make_ns_form(const TorusData& a, RatMatrix c) {
  if (!is_ns_form(a, c))
    throw Error("make_ns_form: matrix is not a J-invariant skew form");
  return NSForm{std::move(c)};
}

std::vector<NSForm> ns_basis(const TorusData& a) {
  const Index m = 2 * a.n;
  // Conditions on the entries of C: C + C^T = 0 and J^T C J - C = 0.
  RatMatrix rows(2 * m * m, m * m);
  for (Index i = 0; i < m; ++i)
    for (Index jx = 0; jx < m; ++jx) {
      const Index r = i * m + jx;
      for (Index p = 0; p < m; ++p)
        for (Index q = 0; q < m; ++q) {
          const Index col = p * m + q;
          Rational skew = 0, inv = 0;
          if (p == i && q == jx) skew += 1;
          if (p == jx && q == i) skew += 1;
          // (J^T C J)(i,jx) = sum_{p,q} J(p,i) C(p,q) J(q,jx)
          inv = a.j(p, i) * a.j(q, jx);
          if (p == i && q == jx) inv -= 1;
          rows(r, col) = skew;
          rows(m * m + r, col) = inv;
        }
    }
  const RatMatrix k = kernel(rows);
  std::vector<NSForm> out;
  for (Index c = 0; c < k.cols(); ++c)
    out.push_back(NSForm{unvectorize(k.col(c), m, m)});
  return out;
}

bool is_ample(const TorusData& a, const NSForm& c) {
  if (!is_ns_form(a, c.gram)) throw Error("is_ample: form is not in NS");
  const RatMatrix b = a.j.transpose() * c.gram;  // b(v, w) = c(Jv, w)
  if (!is_symmetric(b)) throw Error("is_ample: symmetrization failed");
  return signature(b).positive_definite();
}

void validate_kahler(const TorusData& a, const KahlerParam& w) {
  if (!is_ns_form(a, w.phi1.gram))
    throw Error("KahlerParam: phi1 is not a J-invariant skew form");
  if (!is_ample(a, w.phi2)) throw Error("KahlerParam: phi2 is not ample");
}

RatMatrix iomega(const TorusData& a, const KahlerParam& w) {
  validate_kahler(a, w);
  const Index m = 2 * a.n;
  // Blocks act as maps Gamma -> Gamma^*, i.e. through the transposed Grams.
  const RatMatrix p1 = w.phi1.map_matrix();
  const RatMatrix p2 = w.phi2.map_matrix();
  const RatMatrix p2inv = inverse(p2);
  const RatMatrix i =
      block(p2inv * p1, -p2inv, p2 + p1 * p2inv * p1, -p1 * p2inv);

  const RatMatrix id = RatMatrix::Identity(2 * m, 2 * m);
  const LambdaSpace l = lambda_space(a);
  const RatMatrix q = to_rational(l.qgram);
  if (i * i != (-id).eval()) throw Error("iomega: I^2 = -1 fails");
  if (i.transpose() * q * i != q) throw Error("iomega: Q-isometry fails");
  if (i * l.jtilde != l.jtilde * i) throw Error("iomega: does not commute with Jtilde");
  const RatMatrix zero = RatMatrix::Zero(m, m);
  const RatMatrix idm = RatMatrix::Identity(m, m);
  const RatMatrix factored = block(idm, zero, p1, idm) * block(zero, -p2inv, p2, zero) *
                             block(idm, zero, -p1, idm);
  if (i != factored) throw Error("iomega: factorization identity fails");
  return i;
}

std::optional<KahlerParam> iomega_invert(const TorusData& a, const RatMatrix& i) {
  const Index m = 2 * a.n;
  if (i.rows() != 2 * m || i.cols() != 2 * m) throw Error("iomega_invert: size mismatch");
  if (i * i != (-RatMatrix::Identity(2 * m, 2 * m)).eval())
    throw Error("iomega_invert: I^2 = -1 fails");
  const RatMatrix q = to_rational(lambda_q(a.n));
  if (i.transpose() * q * i != q) throw Error("iomega_invert: not a Q-isometry");

  const RatMatrix tr = i.topRightCorner(m, m);
  if (determinant(tr) == 0) throw Error("iomega_invert: top-right block is singular");
  const RatMatrix p2 = -inverse(tr);              // map of phi2
  const RatMatrix p1 = p2 * i.topLeftCorner(m, m);  // from p2^{-1} p1
  const KahlerParam w{NSForm{p1.transpose()}, NSForm{p2.transpose()}};
  if (!is_ns_form(a, w.phi1.gram) || !is_ns_form(a, w.phi2.gram)) return std::nullopt;
  if (!is_ample(a, w.phi2)) return std::nullopt;
  if (iomega(a, w) != i) return std::nullopt;
  return w;
}

EFormReport e_form_test(const TorusData& a, const RatMatrix& i) {
  const Index d = 4 * a.n;
  if (i.rows() != d || i.cols() != d) throw Error("e_form_test: size mismatch");
  if (i * i != (-RatMatrix::Identity(d, d)).eval())
    throw Error("e_form_test: I^2 = -1 fails");
  const LambdaSpace l = lambda_space(a);
  const RatMatrix q = to_rational(l.qgram);
  if (i.transpose() * q * i != q) throw Error("e_form_test: not a Q-isometry");
  if (i * l.jtilde != l.jtilde * i)
    throw Error("e_form_test: I does not commute with Jtilde");

  const RatMatrix c = i * l.jtilde;
  const RatMatrix e = c.transpose() * q;  // E(x, y) = Q(c x, y)
  EFormReport rep;
  rep.symmetric = is_symmetric(e);
  if (rep.symmetric) {
    rep.sig = signature(e);
    rep.positive_definite = rep.sig.positive_definite();
  }
  return rep;
}

bool u_membership(const TorusData& a, const IntMatrix& g) {
  const Index d = 4 * a.n;
  if (g.rows() != d || g.cols() != d) return false;
  const Integer det = determinant(g);
  if (det != 1 && det != -1) return false;
  const IntMatrix q = lambda_q(a.n);
  if (g.transpose() * q * g != q) return false;
  const LambdaSpace l = lambda_space(a);
  const RatMatrix gr = to_rational(g);
  if (gr * l.jtilde != l.jtilde * gr) return false;

  // Accepted: re-check the block-adjoint description of the inverse, which
  // is equivalent to the Q-isometry condition.
  const Index m = 2 * a.n;
  const RatMatrix ginv = inverse(gr);
  RatMatrix adj(d, d);
  adj.topLeftCorner(m, m) = gr.bottomRightCorner(m, m).transpose();
  adj.topRightCorner(m, m) = gr.topRightCorner(m, m).transpose();
  adj.bottomLeftCorner(m, m) = gr.bottomLeftCorner(m, m).transpose();
  adj.bottomRightCorner(m, m) = gr.topLeftCorner(m, m).transpose();
  if (ginv != adj) throw Error("u_membership: block-adjoint re-check failed");
  return true;
}

LieBasis u_lie_algebra(const TorusData& a) {
  const Index d = 4 * a.n;
  const RatMatrix q = to_rational(lambda_q(a.n));
  const RatMatrix jt = lambda_space(a).jtilde;

  // Unknowns: entries of X. Conditions: X^T Q + Q X = 0 and X Jt - Jt X = 0.
  RatMatrix rows(2 * d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index jx = 0; jx < d; ++jx) {
      const Index r = i * d + jx;
      for (Index p = 0; p < d; ++p)
        for (Index s = 0; s < d; ++s) {
          const Index col = p * d + s;
          // (X^T Q)(i,jx) = sum_k X(k,i) Q(k,jx); (Q X)(i,jx) = sum_k Q(i,k) X(k,jx)
          Rational iso = 0;
          if (s == i) iso += q(p, jx);
          if (s == jx) iso += q(i, p);
          // (X Jt - Jt X)(i,jx)
          Rational comm = 0;
          if (p == i) comm += jt(s, jx);
          if (s == jx) comm -= jt(i, p);
          rows(r, col) = iso;
          rows(d * d + r, col) = comm;
        }
    }
  const RatMatrix k = kernel(rows);
  std::vector<RatMatrix> gens;
  for (Index c = 0; c < k.cols(); ++c) gens.push_back(unvectorize(k.col(c), d, d));
  // Intersection of so(Q) with the centralizer of Jtilde: closed under the
  // bracket by construction.
  return span_basis(gens, ClosurePolicy::assume_closed);
}

Sl2Triple polarization_sl2(const TorusData& a, const NSForm& c) {
  if (!is_ns_form(a, c.gram)) throw Error("polarization_sl2: form is not in NS");
  const Index m = 2 * a.n;
  const RatMatrix phi = c.map_matrix();
  if (determinant(phi) == 0) throw Error("polarization_sl2: polarization must be invertible");
  const RatMatrix zero = RatMatrix::Zero(m, m);
  const RatMatrix idm = RatMatrix::Identity(m, m);
  Sl2Triple t{block(zero, zero, phi, zero), block(-idm, zero, zero, idm),
              block(zero, inverse(phi), zero, zero)};
  if (!t.relations_hold()) throw Error("polarization_sl2: internal error");
  return t;
}

LieBasis hodge_envelope_deg2(const TorusData& a, const RatMatrix& i) {
  const Index d = i.rows();
  if (i.cols() != d || (d != 2 * a.n && d != 4 * a.n))
    throw Error("hodge_envelope_deg2: I must act on Gamma or Lambda");
  if (i * i != (-RatMatrix::Identity(d, d)).eval())
    throw Error("hodge_envelope_deg2: I^2 = -1 fails");

  // Degree <= 2 invariant tensors of the circle through I: endomorphisms
  // commuting with I and bilinear forms b with b(Iv,w) + b(v,Iw) = 0.
  RatMatrix comm_rows(d * d, d * d);
  RatMatrix form_rows(d * d, d * d);
  for (Index r = 0; r < d; ++r)
    for (Index cx = 0; cx < d; ++cx) {
      const Index row = r * d + cx;
      for (Index p = 0; p < d; ++p)
        for (Index s = 0; s < d; ++s) {
          const Index col = p * d + s;
          Rational ce = 0, fe = 0;
          // (E I - I E)(r,cx)
          if (p == r) ce += i(s, cx);
          if (s == cx) ce -= i(r, p);
          // (I^T B + B I)(r,cx)
          if (s == cx) fe += i(p, r);
          if (p == r) fe += i(cx, s);
          comm_rows(row, col) = ce;
          form_rows(row, col) = fe;
        }
    }
  const RatMatrix cent = kernel(comm_rows);   // E with [E, I] = 0
  const RatMatrix forms = kernel(form_rows);  // B with I^T B + B I = 0

  // X must commute with every such E and infinitesimally fix every such B.
  const Index conditions = (cent.cols() + forms.cols()) * d * d;
  RatMatrix rows(conditions, d * d);
  Index base = 0;
  for (Index e = 0; e < cent.cols(); ++e) {
    const RatMatrix em = unvectorize(cent.col(e), d, d);
    for (Index r = 0; r < d; ++r)
      for (Index cx = 0; cx < d; ++cx) {
        const Index row = base + r * d + cx;
        for (Index p = 0; p < d; ++p)
          for (Index s = 0; s < d; ++s) {
            Rational v = 0;
            if (p == r) v += em(s, cx);
            if (s == cx) v -= em(r, p);
            rows(row, p * d + s) = v;
          }
      }
    base += d * d;
  }
  for (Index b = 0; b < forms.cols(); ++b) {
    const RatMatrix bm = unvectorize(forms.col(b), d, d);
    for (Index r = 0; r < d; ++r)
      for (Index cx = 0; cx < d; ++cx) {
        const Index row = base + r * d + cx;
        for (Index p = 0; p < d; ++p)
          for (Index s = 0; s < d; ++s) {
            Rational v = 0;
            if (s == r) v += bm(p, cx);
            if (p == cx) v += bm(r, s);
            rows(row, p * d + s) = v;
          }
      }
    base += d * d;
  }
  const RatMatrix k = kernel(rows);
  std::vector<RatMatrix> gens;
  for (Index c = 0; c < k.cols(); ++c) gens.push_back(unvectorize(k.col(c), d, d));
  // Centralizer of a set intersected with form stabilizers: bracket closed.
  LieBasis out = span_basis(gens, ClosurePolicy::assume_closed);
  if (!out.contains(i)) throw Error("hodge_envelope_deg2: internal error, I not contained");
  return out;
}

MirrorCertificate mirror_check(const TorusData& a, const KahlerParam& wa, const TorusData& b,
                               const KahlerParam& wb, const IntMatrix& alpha) {
  if (a.n != b.n) throw Error("mirror_check: dimensions must match");
  const Index d = 4 * a.n;
  if (alpha.rows() != d || alpha.cols() != d) throw Error("mirror_check: alpha size mismatch");

  MirrorCertificate cert;
  cert.alpha = alpha;
  const Integer det = determinant(alpha);
  cert.unimodular = det == 1 || det == -1;
  const IntMatrix q = lambda_q(a.n);
  cert.isometry = alpha.transpose() * q * alpha == q;

  const RatMatrix ar = to_rational(alpha);
  const RatMatrix ja = lambda_space(a).jtilde;
  const RatMatrix jb = lambda_space(b).jtilde;
  const RatMatrix ia = iomega(a, wa);
  const RatMatrix ib = iomega(b, wb);
  cert.intertwine_ab = ar * ja == ib * ar;
  cert.intertwine_ba = ar * ia == jb * ar;
  return cert;
}

namespace {

// Depth-first search for one isotropic I-invariant half, lexicographically
// least candidates first. `fixed` holds columns that the new subspace must
// stay independent from (the first half when searching for the second).
struct SplitSearch {
  const RatMatrix& i;
  const RatMatrix& q;
  long box;
  long max_steps;
  long steps = 0;
  Index dim;  // 4n

  bool budget_ok() { return ++steps <= max_steps; }

  // Enumerates primitive vectors with positive leading coordinate in
  // lexicographic order; `idx` is the odometer state.
  bool next_candidate(RatVector& v) const {
    for (Index k = dim - 1; k >= 0; --k) {
      if (v(k) < box) {
        v(k) += 1;
        for (Index l = k + 1; l < dim; ++l) v(l) = Rational(-box);
        return true;
      }
    }
    return false;
  }

  bool admissible(const RatVector& v) const {
    Integer g = 0;
    Index lead = -1;
    for (Index k = 0; k < dim; ++k) {
      if (!is_integral(v(k))) return false;
      g = gcd(g, numerator(v(k)));
      if (lead < 0 && v(k) != 0) lead = k;
    }
    return lead >= 0 && v(lead) > 0 && g == 1;
  }

  // span: current columns (pairs v, Iv). Returns true when a half was
  // completed and accepted by `finish`.
  template <typename Finish>
  bool extend(RatMatrix span, const RatMatrix& fixed, Finish&& finish) {
    if (span.cols() == dim / 2) return finish(span);
    RatVector v = RatVector::Constant(dim, Rational(-box));
    v(dim - 1) -= 1;  // so the first next_candidate lands on the corner
    while (next_candidate(v)) {
      if (!budget_ok()) return false;
      if (!admissible(v)) continue;
      if ((v.transpose() * q * v)(0, 0) != 0) continue;
      const RatVector iv = i * v;
      bool isotropic = true;
      for (Index c = 0; c < span.cols() && isotropic; ++c) {
        if ((v.transpose() * q * span.col(c))(0, 0) != 0) isotropic = false;
        if ((iv.transpose() * q * span.col(c))(0, 0) != 0) isotropic = false;
      }
      if (!isotropic) continue;
      // Independence from the fixed half and the current span; I-invariant
      // spans have even dimension, so v alone decides.
      RatMatrix test(dim, fixed.cols() + span.cols() + 1);
      test.leftCols(fixed.cols()) = fixed;
      test.middleCols(fixed.cols(), span.cols()) = span;
      test.col(fixed.cols() + span.cols()) = v;
      if (rref(test.transpose()).rank != test.cols()) continue;
      RatMatrix grown(dim, span.cols() + 2);
      grown.leftCols(span.cols()) = span;
      grown.col(span.cols()) = v;
      grown.col(span.cols() + 1) = iv;
      if (extend(std::move(grown), fixed, finish)) return true;
      if (steps > max_steps) return false;
    }
    return false;
  }
};

}  // namespace

std::optional<SplitResult> isotropic_invariant_split(const TorusData& a, const RatMatrix& i,
                                                     SearchBudget budget) {
  const Index d = 4 * a.n;
  if (i.rows() != d || i.cols() != d) throw Error("isotropic_invariant_split: size mismatch");
  if (i * i != (-RatMatrix::Identity(d, d)).eval())
    throw Error("isotropic_invariant_split: I^2 = -1 fails");
  const RatMatrix q = to_rational(lambda_q(a.n));
  if (i.transpose() * q * i != q)
    throw Error("isotropic_invariant_split: not a Q-isometry");

  SplitSearch search{i, q, budget.box, budget.max_steps, 0, d};
  std::optional<SplitResult> found;
  const RatMatrix none(d, 0);
  search.extend(RatMatrix(d, 0), none, [&](const RatMatrix& w1) {
    const IntMatrix g1 = saturate_columns(w1);
    return search.extend(RatMatrix(d, 0), to_rational(g1), [&](const RatMatrix& w2) {
      const IntMatrix g2 = saturate_columns(w2);
      IntMatrix p(d, d);
      p.leftCols(d / 2) = g1;
      p.rightCols(d / 2) = g2;
      const Integer det = determinant(p);
      if (det != 1 && det != -1) return false;  // index > 1, keep searching
      found = SplitResult{g1, g2};
      return true;
    });
  });
  return found;
}

std::optional<MirrorPair> construct_mirror(const TorusData& a, const KahlerParam& wa,
                                           SearchBudget budget) {
  const RatMatrix ia = iomega(a, wa);
  const auto split = isotropic_invariant_split(a, ia, budget);
  if (!split) return std::nullopt;

  const Index m = 2 * a.n, d = 4 * a.n;
  IntMatrix p1 = split->gamma1, p2 = split->gamma2;
  // Normalize the second basis so the two halves pair to the identity;
  // the pairing block is unimodular because the split has index one.
  const IntMatrix q = lambda_q(a.n);
  const IntMatrix pairing = (p1.transpose() * q * p2).eval();
  p2 = (p2 * to_integer(inverse(to_rational(pairing)))).eval();

  IntMatrix p(d, d);
  p.leftCols(m) = p1;
  p.rightCols(m) = p2;
  if (p.transpose() * q * p != q)
    throw Error("construct_mirror: internal error, basis change is not a Q-isometry");
  const RatMatrix pr = to_rational(p);
  const RatMatrix pinv = inverse(pr);
  const IntMatrix alpha = to_integer(pinv);

  // I_omega in the new basis is diag(J_B, -J_B^T).
  const RatMatrix m_new = pinv * ia * pr;
  const RatMatrix jb = m_new.topLeftCorner(m, m);
  if (m_new.topRightCorner(m, m) != RatMatrix::Zero(m, m) ||
      m_new.bottomLeftCorner(m, m) != RatMatrix::Zero(m, m) ||
      m_new.bottomRightCorner(m, m) != (-jb.transpose()).eval())
    throw Error("construct_mirror: internal error, restricted structure is not block diagonal");
  const TorusData b(a.n, jb);

  // omega_B comes from the matrix of J_{AxA^} in the new basis; recovery is
  // expected to succeed whenever a split exists, so a failure here is
  // flagged loudly instead of being swallowed.
  const RatMatrix jprime = pinv * lambda_space(a).jtilde * pr;
  const auto wb = iomega_invert(b, jprime);
  if (!wb)
    throw Error(
        "construct_mirror: split found but omega_B recovery failed; "
        "suspected bug or a genuine counter-instance");

  MirrorPair pair{b, *wb, alpha, mirror_check(a, wa, b, *wb, alpha), *split};
  if (!pair.cert.all_passed())
    throw Error("construct_mirror: internal error, certificate failed");
  return pair;
}

std::optional<KahlerParam> monodromy_witness(const TorusData& a, const IntMatrix& g,
                                             const KahlerParam& w1) {
  validate_kahler(a, w1);
  if (!u_membership(a, g)) return std::nullopt;
  const RatMatrix gr = to_rational(g);
  const RatMatrix conj = gr * iomega(a, w1) * inverse(gr);
  try {
    return iomega_invert(a, conj);
  } catch (const Error&) {
    return std::nullopt;  // singular top-right block: not of Kahler shape
  }
}

KahlerParam siegel_action(const TorusData& a, const RatMatrix& g, const KahlerParam& w) {
  validate_kahler(a, w);
  const Index m = 2 * a.n;
  if (g.rows() != 2 * m || g.cols() != 2 * m) throw Error("siegel_action: size mismatch");
  const RatMatrix ab = g.topLeftCorner(m, m), bb = g.topRightCorner(m, m);
  const RatMatrix cb = g.bottomLeftCorner(m, m), db = g.bottomRightCorner(m, m);
  const RatMatrix p1 = w.phi1.map_matrix(), p2 = w.phi2.map_matrix();

  // Complex matrices X + iY as real 2x2 blocks [[X, -Y], [Y, X]].
  auto embed = [&](const RatMatrix& x, const RatMatrix& y) { return block(x, -y, y, x); };
  const RatMatrix den = embed(ab + bb * p1, bb * p2);
  if (determinant(den) == 0)
    throw Error("siegel_action: a + b omega is singular, action undefined here");
  const RatMatrix quot = embed(cb + db * p1, db * p2) * inverse(den);
  const RatMatrix q1 = quot.topLeftCorner(m, m), q2 = quot.bottomLeftCorner(m, m);
  if (quot != embed(q1, q2))
    throw Error("siegel_action: internal error, quotient is not complex linear");

  const KahlerParam out{NSForm{q1.transpose()}, NSForm{q2.transpose()}};
  if (!is_ns_form(a, out.phi1.gram) || !is_ns_form(a, out.phi2.gram))
    throw Error("siegel_action: transformed parameter left NS; g is not in the U-group");
  return out;
}

std::pair<TorusData, NSForm> example_pair(Index n) {
  if (n < 1) throw Error("example_pair: n must be positive");
  RatMatrix j0 = RatMatrix::Zero(2 * n, 2 * n);
  RatMatrix s = RatMatrix::Zero(2 * n, 2 * n);
  for (Index i = 0; i < n; ++i) {
    j0(i + n, i) = -1;  // J0 e_i = -e_{i+n}
    j0(i, i + n) = 1;   // J0 e_{i+n} = e_i
    s(i, i + n) = 1;    // s(e_i, e_{j+n}) = delta_ij
    s(i + n, i) = -1;
  }
  TorusData torus(n, j0);
  NSForm form = make_ns_form(torus, s);
  if (!is_ample(torus, form)) throw Error("example_pair: internal error, s not ample");
  return {std::move(torus), std::move(form)};
}

PerfectnessReport perfectness_proxy(const TorusData& a, const KahlerParam& w) {
  const LieBasis envelope = hodge_envelope_deg2(a, iomega(a, w));
  const LieBasis u = u_lie_algebra(a);
  PerfectnessReport rep;
  rep.envelope_dim = envelope.dim();
  rep.u_dim = u.dim();
  rep.envelope_in_u = u.contains(envelope);
  rep.u_in_envelope = envelope.contains(u);
  rep.equal = rep.envelope_in_u && rep.u_in_envelope;
  return rep;
}

}  // namespace leflab
