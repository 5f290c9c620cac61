#include "leflab/lefschetz.hpp"

#include <random>
#include <set>

namespace leflab {

namespace {

// Kronecker products matching row-major vectorization: vec(A X) =
// (A (x) I) vec(X) and vec(X B) = (I (x) B^T) vec(X).
RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

RatMatrix grading_operator(const GradedAlgebra& alg, Index n) {
  if (alg.n() > n) throw Error("grading_operator: algebra degrees exceed 2n");
  RatMatrix h = RatMatrix::Zero(alg.total_dim(), alg.total_dim());
  for (Index i = 0; i < alg.total_dim(); ++i)
    h(i, i) = Rational(2 * alg.degree_of_index(i) - n);
  return h;
}

RatMatrix lefschetz_e(const GradedAlgebra& alg, const CohClass& kappa) {
  if (!kappa.is_homogeneous(1))
    throw Error("lefschetz_e: class must be homogeneous of degree 2");
  return alg.multiplication_operator(kappa);
}

Sl2Triple sl2_complete(const RatMatrix& e, const RatMatrix& h) {
  const Index d = e.rows();
  if (e.cols() != d || h.rows() != d || h.cols() != d)
    throw Error("sl2_complete: operators must be square of equal size");
  if (commutator(h, e) != 2 * e) throw Error("sl2_complete: [h, e] = 2e fails");

  const RatMatrix id = RatMatrix::Identity(d, d);
  const RatMatrix idn = RatMatrix::Identity(d * d, d * d);
  // [h, f] + 2 f = 0 and [e, f] = h, stacked on vec(f).
  RatMatrix sys(2 * d * d, d * d);
  sys.topRows(d * d) = kron(h, id) - kron(id, h.transpose()) + 2 * idn;
  sys.bottomRows(d * d) = kron(e, id) - kron(id, e.transpose());
  RatVector rhs = RatVector::Zero(2 * d * d);
  rhs.tail(d * d) = vectorize(h);

  const auto x = solve(sys, rhs);
  if (!x) throw NoLefschetzError("sl2_complete: no solution, e is not a Lefschetz operator");
  if (kernel(sys).cols() > 0)
    throw NonUniqueSl2Error("sl2_complete: completing operator is not unique");
  Sl2Triple triple{e, h, unvectorize(*x, d, d)};
  if (!triple.relations_hold()) throw Error("sl2_complete: internal error");
  return triple;
}

NsLieResult neron_severi_lie(const GradedAlgebra& alg, Index n,
                             const std::vector<CohClass>& kappas, std::uint64_t seed) {
  for (const CohClass& k : kappas)
    if (k.alg != &alg || !k.is_homogeneous(1))
      throw Error("neron_severi_lie: classes must be degree-2 classes of the algebra");

  NsLieResult res;
  const RatMatrix h = grading_operator(alg, n);

  std::vector<RatMatrix> generators{h};
  std::set<std::string> tried;
  auto describe = [&](const CohClass& k) {
    std::string s;
    for (Index i = 0; i < k.coeffs.size(); ++i) s += to_string(k.coeffs(i)) + ",";
    return s;
  };
  auto add_triple = [&](const CohClass& k) {
    if (k.is_zero() || !tried.insert(describe(k)).second) return;
    try {
      const Sl2Triple t = sl2_complete(lefschetz_e(alg, k), h);
      generators.push_back(t.e);
      generators.push_back(t.f);
    } catch (const NoLefschetzError&) {
      res.notices.push_back("skipped non-Lefschetz class (" + describe(k) + ")");
    }
  };

  for (const CohClass& k : kappas) add_triple(k);
  for (size_t i = 0; i < kappas.size(); ++i)
    for (size_t j = i + 1; j < kappas.size(); ++j) add_triple(kappas[i] + kappas[j]);

  LieBasis closure = lie_closure(generators);
  Index dim = closure.dim();

  // Escalation: pseudorandom small-positive-integer combinations until the
  // dimension is stable for two rounds. The Lie algebra over the full ample
  // cone has no finite generating recipe, so this is a sampling heuristic.
  std::mt19937_64 rng(seed);
  int stable = 0, sampling_rounds = 0;
  const int max_rounds = 16;
  while (stable < 2 && sampling_rounds < max_rounds && !kappas.empty()) {
    ++sampling_rounds;
    for (size_t c = 0; c < kappas.size() + 1; ++c) {
      CohClass combo = alg.zero_class();
      for (const CohClass& k : kappas)
        combo = combo + k * Rational(1 + static_cast<long>(rng() % 3));
      add_triple(combo);
    }
    closure = lie_closure(generators);
    if (closure.dim() == dim) {
      ++stable;
    } else {
      stable = 0;
      ++res.rounds;  // a round that actually grew the closure
    }
    dim = closure.dim();
  }
  if (sampling_rounds == max_rounds && stable < 2)
    res.notices.push_back("escalation round cap reached before stabilization");
  if (res.rounds > 0)
    res.notices.push_back("escalation grew the closure in " + std::to_string(res.rounds) +
                          " extra rounds");

  res.algebra = std::move(closure);
  return res;
}

}  // namespace leflab
