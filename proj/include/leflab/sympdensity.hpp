#ifndef LEFLAB_SYMPDENSITY_HPP
#define LEFLAB_SYMPDENSITY_HPP

#include "leflab/gradedring.hpp"
#include "leflab/liealg.hpp"

#include <vector>

namespace leflab {

/// Chern character exp(c1) of a line bundle, truncated at the top degree.
CohClass line_bundle_ch(const GradedAlgebra& alg, const CohClass& c1);

/// Mukai vector ch * sqrt(td).
CohClass mukai_vector(const GradedAlgebra& alg, const CohClass& ch);

/// v(O(k)) for the ample generator h, i.e. exp(k h) sqrt(td).
CohClass line_bundle_mukai_vector(const GradedAlgebra& alg, const CohClass& h, long k);

/// Reflection r_delta(x) = x - <delta, x> delta in the skew Mukai pairing,
/// together with its nilpotent logarithm N_delta(x) = <x, delta> delta.
struct ReflectionDatum {
  CohClass delta;
  RatMatrix matrix;               // identity + nilpotent_generator
  RatMatrix nilpotent_generator;  // squares to zero, lies in sp of the pairing
};

ReflectionDatum reflection(const GradedAlgebra& alg, const CohClass& delta);

struct SpanReport {
  Index rank = 0;
  bool spans = false;
};

/// Rank of the span of Mukai vectors of the line bundles with the given
/// exponent tuples (one integer per degree-2 basis class). Requires the
/// algebra to be generated in degree two.
SpanReport spans_check(const GradedAlgebra& alg,
                       const std::vector<std::vector<long>>& exponent_tuples);

struct DensityReport {
  Index closure_dim = 0;
  Index sp_dim = 0;          // g(2g+1) for dim H^even = 2g
  Index orbit_span_rank = 0; // rank of {eta} plus {r_delta(eta)}
  bool orbit_spans = false;
  bool in_sp = false;        // closure lies in the symplectic Lie algebra
  bool dense = false;        // closure_dim == sp_dim
  Index generator_count = 0;
};

/// Exact surrogate for Zariski density of the group generated by the
/// transvections along the given classes: the Q-Lie algebra generated by the
/// nilpotent generators equals sp iff the generated complex group is dense.
DensityReport density_certificate(const GradedAlgebra& alg, const std::vector<CohClass>& deltas);

struct GrowthProbe {
  std::vector<std::pair<long, Rational>> table;  // (m, eta-coefficient of v(O(m)))
  std::vector<Rational> poly;                    // exact interpolating coefficients, low to high
  Rational leading;                              // coefficient of m^n
};

/// Top-component growth of v(O(m)): the eta-coefficient for each m in
/// [m_lo, m_hi], with the exact degree-n polynomial interpolation.
GrowthProbe growth_probe(const GradedAlgebra& alg, const CohClass& ample_h, long m_lo, long m_hi);

}  // namespace leflab

#endif
