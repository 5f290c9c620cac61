#ifndef LEFLAB_LEFSCHETZ_HPP
#define LEFLAB_LEFSCHETZ_HPP

#include "leflab/gradedring.hpp"
#include "leflab/liealg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace leflab {

/// Raised when no f completes (e, h): e is not a Lefschetz operator.
struct NoLefschetzError : Error {
  explicit NoLefschetzError(const std::string& what) : Error(what) {}
};
/// Raised when the completing f is not unique (degenerate configuration).
struct NonUniqueSl2Error : Error {
  explicit NonUniqueSl2Error(const std::string& what) : Error(what) {}
};

/// Diagonal operator acting as (i - n) on the degree-i block.
RatMatrix grading_operator(const GradedAlgebra& alg, Index n);

/// Cup product with a degree-2 class.
RatMatrix lefschetz_e(const GradedAlgebra& alg, const CohClass& kappa);

/// Solves {[h,f] = -2f, [e,f] = h} for the unique f. Requires [h,e] = 2e.
/// Existence of f certifies that e has the hard Lefschetz property.
Sl2Triple sl2_complete(const RatMatrix& e, const RatMatrix& h);

struct NsLieResult {
  LieBasis algebra;
  std::vector<std::string> notices;  // skipped isotropic classes, escalation info
  int rounds = 0;                    // escalation rounds beyond the initial sample
  bool escalated() const { return rounds > 0; }
};

/// Lie algebra generated by the sl2-triples of the sampled Lefschetz
/// classes. The sample is the supplied classes, their pairwise sums, and,
/// while the closure still grows, pseudorandom small-positive-integer
/// combinations from the seeded generator; sampling stops after two rounds
/// with no growth. Classes whose triple does not exist are skipped with a
/// notice.
NsLieResult neron_severi_lie(const GradedAlgebra& alg, Index n,
                             const std::vector<CohClass>& kappas,
                             std::uint64_t seed = 0);

}  // namespace leflab

#endif
