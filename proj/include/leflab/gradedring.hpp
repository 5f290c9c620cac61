#ifndef LEFLAB_GRADEDRING_HPP
#define LEFLAB_GRADEDRING_HPP

#include "leflab/rational.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace leflab {

class GradedAlgebra;

/// Element of a graded algebra, stored as coefficients over the basis.
struct CohClass {
  const GradedAlgebra* alg = nullptr;
  RatVector coeffs;

  CohClass() = default;
  CohClass(const GradedAlgebra& a, RatVector c);

  /// The homogeneous piece in cohomological degree 2p.
  CohClass component(Index p) const;
  bool is_homogeneous(Index p) const;
  bool is_zero() const { return coeffs == RatVector::Zero(coeffs.size()); }

  CohClass operator+(const CohClass& other) const;
  CohClass operator-(const CohClass& other) const;
  CohClass operator*(const CohClass& other) const;  // cup product
  CohClass operator*(const Rational& s) const;
  friend CohClass operator*(const Rational& s, const CohClass& a) { return a * s; }
  friend bool operator==(const CohClass& a, const CohClass& b) {
    return a.alg == b.alg && a.coeffs == b.coeffs;
  }
};

/// Finite dimensional graded commutative algebra concentrated in even
/// degrees 0, 2, ..., 2n, with an integration functional supported in the
/// top degree and optional Chern class data. Graded commutativity,
/// associativity on basis triples, the unit axiom and the support of the
/// integral are all checked at construction.
class GradedAlgebra {
 public:
  /// products lists b_i * b_j = coeffs for i <= j; omitted pairs are zero,
  /// except that unit products are filled in automatically.
  GradedAlgebra(std::vector<Index> degree_dims, std::vector<std::string> labels,
                const std::vector<std::tuple<Index, Index, RatVector>>& products,
                RatVector integral, std::vector<RatVector> chern = {});

  Index total_dim() const { return total_; }
  /// Complex dimension n; the top degree is 2n.
  Index n() const { return static_cast<Index>(dims_.size()) - 1; }
  Index degree_dim(Index p) const { return dims_[static_cast<size_t>(p)]; }
  Index degree_start(Index p) const { return starts_[static_cast<size_t>(p)]; }
  Index degree_of_index(Index i) const;  // p with basis i in degree 2p
  const std::vector<std::string>& labels() const { return labels_; }

  CohClass unit() const;
  CohClass basis_class(Index i) const;
  CohClass make_class(RatVector coeffs) const;
  CohClass zero_class() const;
  /// The top class normalized so that its integral is 1. Defined when the
  /// top degree is one dimensional.
  CohClass eta() const;

  CohClass multiply(const CohClass& a, const CohClass& b) const;
  /// Matrix of x -> a x on the basis.
  RatMatrix multiplication_operator(const CohClass& a) const;
  Rational integrate_class(const CohClass& a) const;

  bool has_chern() const { return !chern_.empty(); }
  /// c_1, ..., as classes; index k is c_{k+1}.
  std::vector<CohClass> chern_classes() const;
  bool c1_is_zero() const;

  const RatVector& integral_vector() const { return integral_; }
  const std::vector<RatMatrix>& multiplication_table() const { return mult_; }
  const std::vector<Index>& degree_dims() const { return dims_; }

 private:
  std::vector<Index> dims_, starts_;
  Index total_ = 0;
  std::vector<std::string> labels_;
  std::vector<RatMatrix> mult_;  // mult_[i].col(j) = coords of b_i * b_j
  RatVector integral_;
  std::vector<RatVector> chern_;

  void validate() const;
};

/// The extension Qe + V + Q.eta of a quadratic space (V, q): degrees
/// (0, 2, 4), e the unit, x y = q(x, y) eta for x, y in V, and the integral
/// picking the eta coefficient.
GradedAlgebra mukai_extension_algebra(Index v_dim, const RatMatrix& q);

/// Gram matrix of the extended form: q on V, e and eta isotropic and
/// orthogonal to V, pairing to e_eta_pairing. The default +1 is the
/// normalization stated with the extension; the Lefschetz triples of the
/// extension algebra are isometries of the -1 variant (the two forms are
/// isometric via e -> -e). Basis order (e, V, eta) as in the algebra.
RatMatrix mukai_extension_form(const RatMatrix& q, int e_eta_pairing = 1);

/// Truncated polynomial ring Q[H]/(H^{n+1}) of a degree-d hypersurface in
/// P^{n+1}, n odd: integral(H^n) = d and Chern classes from the truncated
/// series (1+H)^{n+2} / (1+dH). For d = n+2 this gives c_1 = 0.
GradedAlgebra hypersurface_even_ring(Index n, Index d);

/// Todd class expanded in the Chern classes through the universal series of
/// prod x_i / (1 - exp(-x_i)), evaluated with Newton's identities on the
/// power sums of the Chern roots.
CohClass todd_class(const GradedAlgebra& alg);

/// The unique b with b*b = a and degree-0 part 1; requires a_0 = 1.
CohClass sqrt_unit_series(const CohClass& a);

Rational integrate(const CohClass& a);

/// a^vee: negate the degree-2p components with p odd.
CohClass dual_class(const CohClass& a);

/// Mukai pairing <a, b> = integral(a^vee b). Skew-symmetric when n is odd,
/// symmetric when n is even. Requires c_1 = 0 when Chern data is present.
Rational mukai_pairing(const CohClass& a, const CohClass& b);

/// Gram matrix of the Mukai pairing on the basis.
RatMatrix mukai_pairing_gram(const GradedAlgebra& alg);

/// True iff products of degree <= 2 classes span the whole algebra.
bool generated_in_degree_two(const GradedAlgebra& alg);

/// Bernoulli numbers with the plus convention (B1 = +1/2); index k.
Rational bernoulli_plus(Index k);

}  // namespace leflab

#endif
