#include <doctest.h>

#include "leflab/exactlin.hpp"
#include "leflab/sympdensity.hpp"
#include "test_support.hpp"

using namespace leflab;
namespace ts = leflab::testsupport;

namespace {

GradedAlgebra k3_model() {
  RatVector hh = RatVector::Zero(3);
  hh(2) = 2;
  RatVector integral = RatVector::Zero(3);
  integral(2) = 1;
  RatVector c1 = RatVector::Zero(3), c2 = RatVector::Zero(3);
  c2(2) = 24;
  return GradedAlgebra({1, 1, 1}, {"1", "H", "pt"}, {{1, 1, hh}}, integral, {c1, c2});
}

std::vector<CohClass> quintic_deltas(const GradedAlgebra& x, long lo, long hi) {
  std::vector<CohClass> deltas;
  for (long k = lo; k <= hi; ++k)
    deltas.push_back(line_bundle_mukai_vector(x, x.basis_class(1), k));
  deltas.push_back(x.eta());
  return deltas;
}

}  // namespace

TEST_CASE("line bundle chern character") {
  const GradedAlgebra x = hypersurface_even_ring(3, 5);
  const CohClass h = x.basis_class(1);
  CHECK(line_bundle_ch(x, x.zero_class()) == x.unit());

  for (long k : {-2L, 1L, 3L}) {
    const CohClass ch = line_bundle_ch(x, h * Rational(k));
    CHECK(ch.coeffs(0) == 1);
    CHECK(ch.coeffs(1) == k);
    CHECK(ch.coeffs(2) == Rational(k * k, 2));
    CHECK(ch.coeffs(3) == Rational(k * k * k, 6));
  }

  // Multiplicativity: ch(L1 (x) L2) = ch(L1) ch(L2).
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational a(ts::rand_range(rng, -4, 4)), b(ts::rand_range(rng, -4, 4));
    CHECK(line_bundle_ch(x, h * (a + b)) ==
          line_bundle_ch(x, h * a) * line_bundle_ch(x, h * b));
  }
}

TEST_CASE("mukai vectors") {
  const GradedAlgebra k3 = k3_model();
  CHECK(mukai_vector(k3, k3.unit()) == k3.unit() + k3.basis_class(2));

  const GradedAlgebra x = hypersurface_even_ring(3, 5);
  const CohClass h = x.basis_class(1);
  CHECK(mukai_vector(x, x.unit()) == x.unit() + (h * h) * Rational(5, 12));

  for (long k = -3; k <= 3; ++k)
    CHECK(line_bundle_mukai_vector(x, h, k).coeffs(0) == 1);
}

TEST_CASE("reflections") {
  const GradedAlgebra x = hypersurface_even_ring(3, 5);
  const Index n = x.total_dim();

  // delta = 0 gives the identity.
  CHECK(reflection(x, x.zero_class()).matrix == RatMatrix::Identity(n, n));

  // r_{v(M)}(eta) = eta - v(M) for line-bundle Mukai vectors.
  const CohClass eta = x.eta();
  for (long k = -2; k <= 2; ++k) {
    const CohClass v = line_bundle_mukai_vector(x, x.basis_class(1), k);
    const ReflectionDatum r = reflection(x, v);
    CHECK(x.make_class(r.matrix * eta.coeffs) == eta - v);
  }

  // Powers: r^k = 1 + k N, checked for k in {-2..3}; with N^2 = 0 the
  // inverse is 1 - N.
  const ReflectionDatum r = reflection(x, line_bundle_mukai_vector(x, x.basis_class(1), 2));
  const RatMatrix rinv = inverse(r.matrix);
  RatMatrix pw = RatMatrix::Identity(n, n);
  for (long k = 1; k <= 3; ++k) {
    pw = pw * r.matrix;
    CHECK(pw == RatMatrix::Identity(n, n) + Rational(k) * r.nilpotent_generator);
  }
  pw = RatMatrix::Identity(n, n);
  for (long k = 1; k <= 2; ++k) {
    pw = pw * rinv;
    CHECK(pw == RatMatrix::Identity(n, n) - Rational(k) * r.nilpotent_generator);
  }

  // Exact isometry and sp-membership invariants on random skew classes.
  const RatMatrix p = mukai_pairing_gram(x);
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    const CohClass d = x.make_class(ts::random_rat_matrix(rng, n, 1, -3, 3));
    const ReflectionDatum rd = reflection(x, d);
    CHECK(rd.matrix.transpose() * p * rd.matrix == p);
    CHECK(rd.nilpotent_generator * rd.nilpotent_generator == RatMatrix::Zero(n, n));
    CHECK(rd.nilpotent_generator.transpose() * p + p * rd.nilpotent_generator ==
          RatMatrix::Zero(n, n));
    CHECK(rd.matrix == RatMatrix::Identity(n, n) + rd.nilpotent_generator);
  }

  // Even-dimensional targets have a symmetric pairing and are rejected.
  CHECK_THROWS_AS(reflection(k3_model(), k3_model().unit()), Error);
}

TEST_CASE("spans check on the quintic") {
  const GradedAlgebra x = hypersurface_even_ring(3, 5);
  CHECK(spans_check(x, {{0}, {1}, {2}, {3}}).spans);
  CHECK(spans_check(x, {{0}, {1}, {2}, {3}}).rank == 4);
  CHECK(spans_check(x, {{1}}).rank == 1);
  const SpanReport partial = spans_check(x, {{0}, {1}});
  CHECK(partial.rank == 2);
  CHECK(!partial.spans);

  // The degree-2 generation hypothesis is verified first: with q = 0 the
  // extension algebra never reaches eta.
  const GradedAlgebra degenerate = mukai_extension_algebra(1, RatMatrix::Zero(1, 1));
  CHECK(!generated_in_degree_two(degenerate));
  CHECK_THROWS_AS(spans_check(degenerate, {{0}}), Error);
}

TEST_CASE("density certificate on the quintic") {
  const GradedAlgebra x = hypersurface_even_ring(3, 5);
  const DensityReport rep = density_certificate(x, quintic_deltas(x, -3, 3));
  CHECK(rep.closure_dim == 10);
  CHECK(rep.sp_dim == 10);
  CHECK(rep.dense);
  CHECK(rep.in_sp);
  CHECK(rep.orbit_span_rank == 4);
  CHECK(rep.orbit_spans);

  // A single transvection generates a one-dimensional algebra.
  const DensityReport single =
      density_certificate(x, {line_bundle_mukai_vector(x, x.basis_class(1), 1)});
  CHECK(single.closure_dim == 1);
  CHECK(!single.dense);
}

TEST_CASE("density certificate on the elliptic cubic") {
  const GradedAlgebra e = hypersurface_even_ring(1, 3);
  std::vector<CohClass> deltas;
  for (long k = -2; k <= 2; ++k)
    deltas.push_back(line_bundle_mukai_vector(e, e.basis_class(1), k));
  deltas.push_back(e.eta());
  const DensityReport rep = density_certificate(e, deltas);
  CHECK(rep.sp_dim == 3);
  CHECK(rep.closure_dim == 3);
  CHECK(rep.dense);
  CHECK(rep.in_sp);
}

TEST_CASE("growth probe") {
  const GradedAlgebra x = hypersurface_even_ring(3, 5);
  const CohClass h = x.basis_class(1);
  const GrowthProbe probe = growth_probe(x, h, 0, 8);
  CHECK(probe.leading == Rational(5, 6));
  CHECK(probe.leading > 0);
  CHECK(probe.table.front().second == 0);  // m = 0: sqrt(td) has no top term
  REQUIRE(probe.poly.size() == 4);
  // eta-coefficient is (5/6) m^3 + (25/12) m.
  CHECK(probe.poly[1] == Rational(25, 12));
  CHECK(probe.poly[0] == 0);
  CHECK(probe.poly[2] == 0);

  const GradedAlgebra e = hypersurface_even_ring(1, 3);
  const GrowthProbe pe = growth_probe(e, e.basis_class(1), 1, 6);
  CHECK(pe.leading == 3);
}
