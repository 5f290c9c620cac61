#include "leflab/sympdensity.hpp"

#include "leflab/exactlin.hpp"

namespace leflab {

CohClass line_bundle_ch(const GradedAlgebra& alg, const CohClass& c1) {
  if (c1.alg != &alg || !c1.is_homogeneous(1))
    throw Error("line_bundle_ch: c1 must be a degree-2 class");
  CohClass out = alg.unit(), power = alg.unit();
  Rational fact = 1;
  for (Index k = 1; k <= alg.n(); ++k) {
    power = power * c1;
    fact *= k;
    out = out + power * (1 / fact);
  }
  return out;
}

CohClass mukai_vector(const GradedAlgebra& alg, const CohClass& ch) {
  if (ch.alg != &alg) throw Error("mukai_vector: mixing algebras");
  return ch * sqrt_unit_series(todd_class(alg));
}

CohClass line_bundle_mukai_vector(const GradedAlgebra& alg, const CohClass& h, long k) {
  return mukai_vector(alg, line_bundle_ch(alg, h * Rational(k)));
}

namespace {

void require_skew_pairing(const GradedAlgebra& alg) {
  if (alg.n() % 2 == 0)
    throw Error("pairing is not skew: complex dimension must be odd");
  if (alg.has_chern() && !alg.c1_is_zero())
    throw Error("pairing is not skew: c_1 must vanish");
}

}  // namespace

ReflectionDatum reflection(const GradedAlgebra& alg, const CohClass& delta) {
  if (delta.alg != &alg) throw Error("reflection: mixing algebras");
  require_skew_pairing(alg);
  const Index n = alg.total_dim();
  const RatMatrix p = mukai_pairing_gram(alg);
  // N x = <x, delta> delta with <x, delta> = x^T P delta.
  const RatMatrix nil = delta.coeffs * (p * delta.coeffs).transpose();
  ReflectionDatum out{delta, RatMatrix::Identity(n, n) + nil, nil};
  if (out.nilpotent_generator * out.nilpotent_generator != RatMatrix::Zero(n, n))
    throw Error("reflection: internal error, generator does not square to zero");
  if (out.matrix.transpose() * p * out.matrix != p)
    throw Error("reflection: internal error, not a pairing isometry");
  return out;
}

SpanReport spans_check(const GradedAlgebra& alg,
                       const std::vector<std::vector<long>>& exponent_tuples) {
  if (!generated_in_degree_two(alg))
    throw Error("spans_check: algebra is not generated in degree 2");
  const Index p = alg.degree_dim(1);
  std::vector<RatVector> vectors;
  for (const auto& tuple : exponent_tuples) {
    if (static_cast<Index>(tuple.size()) != p)
      throw Error("spans_check: exponent tuple length mismatch");
    CohClass c1 = alg.zero_class();
    for (Index i = 0; i < p; ++i)
      c1 = c1 + alg.basis_class(alg.degree_start(1) + i) * Rational(tuple[static_cast<size_t>(i)]);
    vectors.push_back(mukai_vector(alg, line_bundle_ch(alg, c1)).coeffs);
  }
  SpanReport rep;
  rep.rank = span_saturate(vectors).rows();
  rep.spans = rep.rank == alg.total_dim();
  return rep;
}

DensityReport density_certificate(const GradedAlgebra& alg,
                                  const std::vector<CohClass>& deltas) {
  require_skew_pairing(alg);
  const RatMatrix p = mukai_pairing_gram(alg);
  if (determinant(p) == 0) throw Error("density_certificate: pairing is degenerate");

  DensityReport rep;
  rep.generator_count = static_cast<Index>(deltas.size());

  std::vector<RatMatrix> nilpotents;
  for (const CohClass& d : deltas) nilpotents.push_back(reflection(alg, d).nilpotent_generator);

  const LieBasis closure = lie_closure(nilpotents);
  rep.closure_dim = closure.dim();
  const Index two_g = alg.total_dim();
  rep.sp_dim = (two_g / 2) * (two_g + 1);
  rep.in_sp = preserves_form(closure, p);

  // Orbit-span witness: eta together with its reflections r_delta(eta).
  const RatVector eta = alg.eta().coeffs;
  std::vector<RatVector> orbit{eta};
  for (const CohClass& d : deltas)
    orbit.push_back(reflection(alg, d).matrix * eta);
  rep.orbit_span_rank = span_saturate(orbit).rows();
  rep.orbit_spans = rep.orbit_span_rank == two_g;

  rep.dense = rep.closure_dim == rep.sp_dim;
  return rep;
}

GrowthProbe growth_probe(const GradedAlgebra& alg, const CohClass& ample_h, long m_lo,
                         long m_hi) {
  if (ample_h.alg != &alg || !ample_h.is_homogeneous(1))
    throw Error("growth_probe: ample generator must be a degree-2 class");
  if (m_lo > m_hi) throw Error("growth_probe: empty range");
  GrowthProbe probe;
  // The eta-coefficient of a class is its integral: eta is normalized so
  // that integrate(eta) = 1 and the integral kills lower degrees.
  for (long m = m_lo; m <= m_hi; ++m)
    probe.table.emplace_back(m, integrate(line_bundle_mukai_vector(alg, ample_h, m)));

  const Index deg = alg.n();
  if (static_cast<Index>(probe.table.size()) < deg + 1)
    throw Error("growth_probe: need at least n+1 sample points");
  // Exact interpolation on the first n+1 points, then verification on the
  // rest; the values of a degree-n polynomial must match everywhere.
  RatMatrix vand(deg + 1, deg + 1);
  RatVector vals(deg + 1);
  for (Index i = 0; i <= deg; ++i) {
    const Rational m(probe.table[static_cast<size_t>(i)].first);
    Rational pw = 1;
    for (Index j = 0; j <= deg; ++j) {
      vand(i, j) = pw;
      pw *= m;
    }
    vals(i) = probe.table[static_cast<size_t>(i)].second;
  }
  const auto coeffs = solve(vand, vals);
  if (!coeffs) throw Error("growth_probe: interpolation failed");
  for (const auto& [m, val] : probe.table) {
    Rational acc = 0, pw = 1;
    for (Index j = 0; j <= deg; ++j) {
      acc += (*coeffs)(j)*pw;
      pw *= m;
    }
    if (acc != val)
      throw Error("growth_probe: values do not lie on a degree-n polynomial");
  }
  probe.poly.assign(coeffs->data(), coeffs->data() + coeffs->size());
  probe.leading = (*coeffs)(deg);
  return probe;
}

}  // namespace leflab
