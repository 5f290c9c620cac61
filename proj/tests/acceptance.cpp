// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Everything is exact rational arithmetic; there are no tolerances.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "leflab/abelian.hpp"
#include "leflab/lattices.hpp"
#include "leflab/lefschetz.hpp"
#include "leflab/sympdensity.hpp"

using namespace leflab;

namespace {

long rand_range(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

struct Checker {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << (detail.str().empty() ? "" : "; ") << what;
    }
  }
};

RatMatrix random_nondegenerate_symmetric(std::mt19937_64& rng, Index m) {
  for (;;) {
    RatMatrix q(m, m);
    for (Index i = 0; i < m; ++i)
      for (Index j = i; j < m; ++j) q(i, j) = q(j, i) = Rational(rand_range(rng, -3, 3));
    if (determinant(q) != 0) return q;
  }
}

std::vector<CohClass> degree2_basis(const GradedAlgebra& alg) {
  std::vector<CohClass> out;
  for (Index i = 0; i < alg.degree_dim(1); ++i)
    out.push_back(alg.basis_class(alg.degree_start(1) + i));
  return out;
}

void criterion1(Checker& c) {
  const IntLattice l = k3_lattice();
  c.require(l.signature() == Signature{3, 19, 0}, "signature (3,19)");
  c.require(l.is_even(), "evenness");
  c.require(abs(l.det()) == 1, "unimodularity");
}

void criterion2(Checker& c) {
  for (Index m = 2; m <= 5; ++m) {
    for (int trial = 0; trial < 3; ++trial) {
      std::mt19937_64 rng(1000 * m + trial);
      const RatMatrix q = random_nondegenerate_symmetric(rng, m);
      const GradedAlgebra v = mukai_extension_algebra(m, q);
      const NsLieResult res = neron_severi_lie(v, 2, degree2_basis(v), 77 * m + trial);
      const std::string tag = "m=" + std::to_string(m) + " trial " + std::to_string(trial);
      c.require(res.algebra.closed, tag + ": closure incomplete");
      c.require(res.algebra.dim() == (m + 2) * (m + 1) / 2, tag + ": dim != so-dim");
      const auto parts = graded_decompose(res.algebra, grading_operator(v, 2));
      Index zero_dim = 0;
      for (const auto& p : parts) {
        c.require(p.weight == -2 || p.weight == 0 || p.weight == 2,
                  tag + ": stray ad-h eigenvalue " + std::to_string(p.weight));
        if (p.weight == 0) zero_dim = static_cast<Index>(p.basis.size());
      }
      c.require(zero_dim == m * (m - 1) / 2 + 1, tag + ": degree-0 dimension");
    }
  }
}

void criterion3(Checker& c) {
  std::vector<RatMatrix> ns_models;
  {
    RatMatrix r1(1, 1);
    r1 << Rational(2);
    RatMatrix r2(2, 2);
    r2 << Rational(0), Rational(1), Rational(1), Rational(0);
    RatMatrix r3 = RatMatrix::Zero(3, 3);
    r3.topLeftCorner(2, 2) = r2;
    r3(2, 2) = -2;
    ns_models = {r1, r2, r3};
  }
  for (Index rho = 1; rho <= 3; ++rho) {
    const RatMatrix& q = ns_models[static_cast<size_t>(rho - 1)];
    const GradedAlgebra v = mukai_extension_algebra(rho, q);
    const NsLieResult res = neron_severi_lie(v, 2, degree2_basis(v), 11 + rho);
    c.require(res.algebra.dim() == (rho + 2) * (rho + 1) / 2,
              "rho=" + std::to_string(rho) + ": dim != dim so(Lambda')");
  }
}

void criterion4(Checker& c) {
  const IntLattice l = k3_lattice();
  const Embedding m = coordinate_embedding(l, 16, 2);
  const Embedding ucopy = coordinate_embedding(l, 18, 2);
  const Embedding mirror = mirror_partner(l, m, ucopy);

  c.require(mirror.sublattice().signature() == Signature{1, 17, 0}, "mirror signature (1,17)");
  c.require(is_primitive(mirror), "mirror primitivity");
  c.require(m.sub_rank() + ucopy.sub_rank() + mirror.sub_rank() == 22, "rank sum 22");
  const Signature sm = m.sublattice().signature();
  const Signature su = ucopy.sublattice().signature();
  const Signature sv = mirror.sublattice().signature();
  c.require(sm.positive + su.positive + sv.positive == 3 &&
                sm.negative + su.negative + sv.negative == 19,
            "signature sum (3,19)");
  const Embedding back = mirror_partner(l, mirror, ucopy);
  c.require(back.sublattice() == m.sublattice(), "double mirror returns M's Gram");
}

void criterion5(Checker& c) {
  const GradedAlgebra x = hypersurface_even_ring(3, 5);
  std::vector<CohClass> deltas;
  for (long k = -3; k <= 3; ++k)
    deltas.push_back(line_bundle_mukai_vector(x, x.basis_class(1), k));
  deltas.push_back(x.eta());
  const DensityReport rep = density_certificate(x, deltas);
  c.require(rep.closure_dim == 10, "closure dim 10");
  c.require(rep.sp_dim == 10, "sp4 dimension 10");
  c.require(rep.dense, "dense verdict");
  c.require(rep.in_sp, "closure inside sp");
  c.require(rep.orbit_span_rank == 4 && rep.orbit_spans, "orbit span rank 4");
}

void criterion6(Checker& c) {
  for (Index n : {Index(1), Index(3)}) {
    const GradedAlgebra x = hypersurface_even_ring(n, n + 2);
    const RatMatrix p = mukai_pairing_gram(x);
    const Index total = x.total_dim();
    std::mt19937_64 rng(600 + n);
    const std::string tag = "n=" + std::to_string(n);
    for (int trial = 0; trial < 60; ++trial) {
      RatVector av(total), bv(total);
      for (Index i = 0; i < total; ++i) {
        av(i) = Rational(rand_range(rng, -5, 5));
        bv(i) = Rational(rand_range(rng, -5, 5));
      }
      const CohClass a = x.make_class(av), b = x.make_class(bv);
      c.require(mukai_pairing(a, b) == -mukai_pairing(b, a), tag + ": skewness");

      const ReflectionDatum r = reflection(x, a);
      c.require(r.matrix.transpose() * p * r.matrix == p, tag + ": reflection isometry");
      // r^k = 1 + k N for k in {-2..3}.
      const RatMatrix id = RatMatrix::Identity(total, total);
      const RatMatrix rinv = inverse(r.matrix);
      RatMatrix fwd = id, bwd = id;
      for (long k = 1; k <= 3; ++k) {
        fwd = fwd * r.matrix;
        c.require(fwd == id + Rational(k) * r.nilpotent_generator,
                  tag + ": power identity k=" + std::to_string(k));
      }
      for (long k = 1; k <= 2; ++k) {
        bwd = bwd * rinv;
        c.require(bwd == id - Rational(k) * r.nilpotent_generator,
                  tag + ": power identity k=-" + std::to_string(k));
      }
    }
  }
}

void criterion7(Checker& c) {
  for (Index n : {Index(1), Index(2)}) {
    const auto [torus, s] = example_pair(n);
    const auto basis = ns_basis(torus);
    const RatMatrix q = to_rational(lambda_q(n));
    const LambdaSpace l = lambda_space(torus);
    std::mt19937_64 rng(700 + n);
    const std::string tag = "n=" + std::to_string(n);
    int sampled = 0;
    while (sampled < 12) {
      RatMatrix phi1 = RatMatrix::Zero(2 * n, 2 * n);
      RatMatrix phi2 = Rational(rand_range(rng, 1, 3)) * s.gram;
      for (const NSForm& f : basis) {
        phi1 += Rational(rand_range(rng, -2, 2)) * f.gram;
        phi2 += Rational(rand_range(rng, 0, 1)) * f.gram;
      }
      if (!is_ample(torus, NSForm{phi2})) continue;
      ++sampled;
      const KahlerParam w{NSForm{phi1}, NSForm{phi2}};
      // iomega re-checks the square, isometry, commutation, and
      // factorization identities exactly on every call.
      RatMatrix i;
      try {
        i = iomega(torus, w);
      } catch (const Error& e) {
        c.require(false, tag + ": iomega contract (" + e.what() + ")");
        continue;
      }
      c.require(i * i == (-RatMatrix::Identity(4 * n, 4 * n)).eval(), tag + ": I^2 = -1");
      c.require(i.transpose() * q * i == q, tag + ": isometry");
      c.require(i * l.jtilde == l.jtilde * i, tag + ": commutation");
      const EFormReport plus = e_form_test(torus, i);
      c.require(plus.symmetric && plus.positive_definite, tag + ": E-form positive definite");
      const EFormReport minus = e_form_test(torus, (-i).eval());
      c.require(minus.symmetric && minus.sig.negative_definite(),
                tag + ": E-form of -I negative definite");
    }
  }
}

void criterion8(Checker& c) {
  const auto [e_i, s] = example_pair(1);
  for (long m = 1; m <= 3; ++m) {
    const KahlerParam w{NSForm{RatMatrix::Zero(2, 2)}, NSForm{(Rational(m) * s.gram).eval()}};
    const auto pair = construct_mirror(e_i, w);
    const std::string tag = "m=" + std::to_string(m);
    if (!pair) {
      c.require(false, tag + ": no split found");
      continue;
    }
    c.require(pair->cert.all_passed(), tag + ": certificate");
  }

  // Round trip of iomega_invert on sampled parameters.
  const auto basis = ns_basis(e_i);
  std::mt19937_64 rng(800);
  int sampled = 0;
  while (sampled < 20) {
    RatMatrix phi1 = Rational(rand_range(rng, -3, 3)) * basis[0].gram;
    RatMatrix phi2 = Rational(rand_range(rng, -3, 3)) * s.gram;
    if (!is_ample(e_i, NSForm{phi2})) continue;
    ++sampled;
    const KahlerParam w{NSForm{phi1}, NSForm{phi2}};
    const auto back = iomega_invert(e_i, iomega(e_i, w));
    c.require(back.has_value() && back->phi1.gram == w.phi1.gram &&
                  back->phi2.gram == w.phi2.gram,
              "invert round trip");
  }
}

void criterion9(Checker& c) {
  const auto [e_i, s] = example_pair(1);
  const Index m = 2;

  auto tensor_block = [&](const NSForm& f) {
    RatMatrix g = RatMatrix::Identity(2 * m, 2 * m);
    g.bottomLeftCorner(m, m) = f.map_matrix();
    return to_integer(g);
  };
  const IntMatrix s_isometry =
      to_integer(iomega(e_i, KahlerParam{NSForm{RatMatrix::Zero(m, m)}, s}));

  std::vector<IntMatrix> members;
  for (long k : {-2L, 1L, 3L}) members.push_back(tensor_block(NSForm{(Rational(k) * s.gram).eval()}));
  members.push_back(s_isometry);
  for (const IntMatrix& g : members)
    c.require(u_membership(e_i, g), "membership of generator");

  // Unipotents act on omega by translation.
  const KahlerParam w{NSForm{s.gram}, NSForm{(Rational(2) * s.gram).eval()}};
  for (long k : {-2L, 1L, 3L}) {
    const NSForm f{(Rational(k) * s.gram).eval()};
    const auto moved = monodromy_witness(e_i, tensor_block(f), w);
    c.require(moved.has_value() && moved->phi1.gram == w.phi1.gram + f.gram &&
                  moved->phi2.gram == w.phi2.gram,
              "monodromy witness translation k=" + std::to_string(k));
  }

  // Siegel equivariance over words in the generators.
  std::vector<RatMatrix> words;
  for (const IntMatrix& g : members) words.push_back(to_rational(g));
  words.push_back(to_rational(members[1]) * to_rational(members[3]));
  words.push_back(to_rational(members[3]) * to_rational(members[0]));
  std::mt19937_64 rng(900);
  for (const RatMatrix& g : words) {
    int sampled = 0;
    while (sampled < 4) {
      const long a = rand_range(rng, -2, 2), b = rand_range(rng, 1, 3);
      const KahlerParam wt{NSForm{(Rational(a) * s.gram).eval()},
                           NSForm{(Rational(b) * s.gram).eval()}};
      ++sampled;
      KahlerParam gw{NSForm{RatMatrix::Zero(2, 2)}, NSForm{RatMatrix::Zero(2, 2)}};
      try {
        gw = siegel_action(e_i, g, wt);
      } catch (const Error&) {
        continue;  // the action is rational; singular points are legitimate
      }
      c.require(iomega(e_i, gw) == g * iomega(e_i, wt) * inverse(g),
                "siegel equivariance");
    }
  }
}

void criterion10(Checker& c) {
  const GradedAlgebra x = hypersurface_even_ring(3, 5);
  const GrowthProbe probe = growth_probe(x, x.basis_class(1), 1, 8);
  c.require(probe.poly.size() == 4, "cubic fit");
  c.require(probe.leading == Rational(5, 6), "leading coefficient 5/6");
  c.require(probe.leading > 0, "positive leading coefficient");
}

struct Criterion {
  int number;
  std::string label;
  std::function<void(Checker&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "K3 lattice: signature (3,19), even, |det| = 1", criterion1},
      {2, "g(V) = so(V~, q~): dimensions, degree-0 part, ad-h spectrum", criterion2},
      {3, "NS-model Lie shadow: dim g_NS = dim so(Lambda')", criterion3},
      {4, "K3 mirror duality: signature (1,17), primitive, double mirror", criterion4},
      {5, "quintic density certificate: closure = sp_4, orbit span", criterion5},
      {6, "Mukai pairing skewness and reflection calculus", criterion6},
      {7, "I_omega contract and E-form definiteness", criterion7},
      {8, "mirror pipeline round trip on the CM curve", criterion8},
      {9, "monodromy membership, translation, Siegel equivariance", criterion9},
      {10, "growth probe: exact cubic with leading coefficient 5/6", criterion10},
  };

  int failures = 0;
  for (const Criterion& crit : criteria) {
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(checker);
    } catch (const std::exception& e) {
      checker.ok = false;
      checker.detail << "exception: " << e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << "criterion " << crit.number << " [" << (checker.ok ? "PASS" : "FAIL") << "] "
              << crit.label << " (" << ms << " ms)";
    if (!checker.ok) {
      std::cout << " -- " << checker.detail.str();
      ++failures;
    }
    std::cout << "\n";
  }
  if (failures > 0) std::cout << failures << " criteria failed\n";
  return failures == 0 ? 0 : 1;
}
