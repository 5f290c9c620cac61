#include "leflab/gradedring.hpp"

#include "leflab/exactlin.hpp"

#include <algorithm>

namespace leflab {

CohClass::CohClass(const GradedAlgebra& a, RatVector c) : alg(&a), coeffs(std::move(c)) {
  if (coeffs.size() != a.total_dim()) throw Error("CohClass: coefficient length mismatch");
}

CohClass CohClass::component(Index p) const {
  RatVector out = RatVector::Zero(coeffs.size());
  if (p >= 0 && p <= alg->n()) {
    const Index s = alg->degree_start(p), d = alg->degree_dim(p);
    out.segment(s, d) = coeffs.segment(s, d);
  }
  return CohClass(*alg, out);
}

bool CohClass::is_homogeneous(Index p) const { return component(p) == *this; }

CohClass CohClass::operator+(const CohClass& other) const {
  if (alg != other.alg) throw Error("CohClass: mixing algebras");
  return CohClass(*alg, coeffs + other.coeffs);
}

CohClass CohClass::operator-(const CohClass& other) const {
  if (alg != other.alg) throw Error("CohClass: mixing algebras");
  return CohClass(*alg, coeffs - other.coeffs);
}

CohClass CohClass::operator*(const CohClass& other) const {
  return alg->multiply(*this, other);
}

CohClass CohClass::operator*(const Rational& s) const { return CohClass(*alg, coeffs * s); }

GradedAlgebra::GradedAlgebra(std::vector<Index> degree_dims, std::vector<std::string> labels,
                             const std::vector<std::tuple<Index, Index, RatVector>>& products,
                             RatVector integral, std::vector<RatVector> chern)
    : dims_(std::move(degree_dims)), labels_(std::move(labels)), integral_(std::move(integral)),
      chern_(std::move(chern)) {
  if (dims_.empty() || dims_[0] != 1)
    throw Error("GradedAlgebra: degree 0 must be one dimensional");
  starts_.resize(dims_.size());
  for (size_t p = 0; p < dims_.size(); ++p) {
    if (dims_[p] < 0) throw Error("GradedAlgebra: negative dimension");
    starts_[p] = total_;
    total_ += dims_[p];
  }
  if (labels_.empty()) {
    for (Index i = 0; i < total_; ++i) labels_.push_back("b" + std::to_string(i));
  }
  if (static_cast<Index>(labels_.size()) != total_)
    throw Error("GradedAlgebra: label count mismatch");
  if (integral_.size() != total_) throw Error("GradedAlgebra: integral length mismatch");

  mult_.assign(static_cast<size_t>(total_), RatMatrix::Zero(total_, total_));
  // Unit row and column first, then the listed products symmetrically.
  for (Index j = 0; j < total_; ++j) {
    mult_[0](j, j) = 1;
    mult_[static_cast<size_t>(j)].col(0) = RatVector::Unit(total_, j);
  }
  for (const auto& [i, j, coeffs] : products) {
    if (i < 0 || j < 0 || i >= total_ || j >= total_)
      throw Error("GradedAlgebra: product index out of range");
    if (coeffs.size() != total_) throw Error("GradedAlgebra: product coefficient length");
    if (i == 0 || j == 0) {
      if (coeffs != RatVector::Unit(total_, std::max(i, j)).eval())
        throw Error("GradedAlgebra: listed unit product is inconsistent");
      continue;
    }
    mult_[static_cast<size_t>(i)].col(j) = coeffs;
    mult_[static_cast<size_t>(j)].col(i) = coeffs;
  }
  validate();
}

void GradedAlgebra::validate() const {
  const Index nn = n();
  // Grading: b_i b_j is supported in degree deg(i) + deg(j).
  for (Index i = 0; i < total_; ++i)
    for (Index j = 0; j < total_; ++j) {
      const Index p = degree_of_index(i) + degree_of_index(j);
      const RatVector prod = mult_[static_cast<size_t>(i)].col(j);
      for (Index k = 0; k < total_; ++k)
        if (prod(k) != 0 && degree_of_index(k) != p)
          throw Error("GradedAlgebra: product violates the grading");
      if (p > nn && prod != RatVector::Zero(total_).eval())
        throw Error("GradedAlgebra: product above the top degree");
      if (mult_[static_cast<size_t>(j)].col(i) != prod)
        throw Error("GradedAlgebra: product is not commutative");
    }
  // Associativity on all basis triples.
  for (Index i = 0; i < total_; ++i)
    for (Index j = 0; j < total_; ++j)
      for (Index k = 0; k < total_; ++k) {
        const CohClass bi = basis_class(i), bj = basis_class(j), bk = basis_class(k);
        if (!((bi * bj) * bk == bi * (bj * bk)))
          throw Error("GradedAlgebra: product is not associative");
      }
  // Integral vanishes below the top degree.
  for (Index i = 0; i < total_; ++i)
    if (integral_(i) != 0 && degree_of_index(i) != nn)
      throw Error("GradedAlgebra: integral supported below top degree");
  // Chern classes: c_k homogeneous of degree 2k.
  if (static_cast<Index>(chern_.size()) > nn)
    throw Error("GradedAlgebra: too many Chern classes");
  for (size_t k = 0; k < chern_.size(); ++k) {
    if (chern_[k].size() != total_) throw Error("GradedAlgebra: Chern class length");
    const CohClass c = make_class(chern_[k]);
    if (!c.is_homogeneous(static_cast<Index>(k) + 1))
      throw Error("GradedAlgebra: c_" + std::to_string(k + 1) + " is not homogeneous");
  }
}

Index GradedAlgebra::degree_of_index(Index i) const {
  for (size_t p = 0; p < dims_.size(); ++p)
    if (i < starts_[p] + dims_[p]) return static_cast<Index>(p);
  throw Error("GradedAlgebra: basis index out of range");
}

CohClass GradedAlgebra::unit() const { return basis_class(0); }

CohClass GradedAlgebra::basis_class(Index i) const {
  if (i < 0 || i >= total_) throw Error("GradedAlgebra: basis index out of range");
  return CohClass(*this, RatVector::Unit(total_, i));
}

CohClass GradedAlgebra::make_class(RatVector coeffs) const {
  return CohClass(*this, std::move(coeffs));
}

CohClass GradedAlgebra::zero_class() const { return CohClass(*this, RatVector::Zero(total_)); }

CohClass GradedAlgebra::eta() const {
  if (dims_.back() != 1) throw Error("eta: top degree is not one dimensional");
  const Index i = total_ - 1;
  if (integral_(i) == 0) throw Error("eta: integral vanishes on the top degree");
  return basis_class(i) * (1 / integral_(i));
}

CohClass GradedAlgebra::multiply(const CohClass& a, const CohClass& b) const {
  if (a.alg != this || b.alg != this) throw Error("multiply: mixing algebras");
  RatVector out = RatVector::Zero(total_);
  for (Index i = 0; i < total_; ++i)
    if (a.coeffs(i) != 0) out += a.coeffs(i) * (mult_[static_cast<size_t>(i)] * b.coeffs);
  return CohClass(*this, out);
}

RatMatrix GradedAlgebra::multiplication_operator(const CohClass& a) const {
  if (a.alg != this) throw Error("multiplication_operator: mixing algebras");
  RatMatrix out = RatMatrix::Zero(total_, total_);
  for (Index i = 0; i < total_; ++i)
    if (a.coeffs(i) != 0) out += a.coeffs(i) * mult_[static_cast<size_t>(i)];
  return out;
}

Rational GradedAlgebra::integrate_class(const CohClass& a) const {
  if (a.alg != this) throw Error("integrate: mixing algebras");
  return (integral_.transpose() * a.coeffs)(0, 0);
}

std::vector<CohClass> GradedAlgebra::chern_classes() const {
  if (!has_chern()) throw Error("chern_classes: no Chern data");
  std::vector<CohClass> out;
  for (const RatVector& c : chern_) out.push_back(make_class(c));
  return out;
}

bool GradedAlgebra::c1_is_zero() const {
  if (!has_chern()) throw Error("c1_is_zero: no Chern data");
  return chern_[0] == RatVector::Zero(total_);
}

GradedAlgebra mukai_extension_algebra(Index v_dim, const RatMatrix& q) {
  if (q.rows() != v_dim || q.cols() != v_dim || !is_symmetric(q))
    throw Error("mukai_extension_algebra: q must be symmetric of size v_dim");
  const Index total = v_dim + 2;
  std::vector<std::string> labels{"e"};
  for (Index i = 1; i <= v_dim; ++i) labels.push_back("v" + std::to_string(i));
  labels.push_back("eta");

  std::vector<std::tuple<Index, Index, RatVector>> products;
  for (Index i = 1; i <= v_dim; ++i)
    for (Index j = i; j <= v_dim; ++j) {
      RatVector c = RatVector::Zero(total);
      c(total - 1) = q(i - 1, j - 1);
      products.emplace_back(i, j, c);
    }
  RatVector integral = RatVector::Zero(total);
  integral(total - 1) = 1;
  return GradedAlgebra({1, v_dim, 1}, std::move(labels), products, integral);
}

RatMatrix mukai_extension_form(const RatMatrix& q, int e_eta_pairing) {
  if (q.rows() != q.cols() || !is_symmetric(q))
    throw Error("mukai_extension_form: q must be symmetric");
  if (e_eta_pairing != 1 && e_eta_pairing != -1)
    throw Error("mukai_extension_form: pairing normalization must be +1 or -1");
  const Index m = q.rows();
  RatMatrix g = RatMatrix::Zero(m + 2, m + 2);
  g.block(1, 1, m, m) = q;
  g(0, m + 1) = e_eta_pairing;
  g(m + 1, 0) = e_eta_pairing;
  return g;
}

namespace {

// Coefficients of (1+H)^{n+2} / (1+dH) truncated at H^n.
std::vector<Rational> total_chern_series(Index n, Index d) {
  std::vector<Rational> binom(static_cast<size_t>(n) + 1, Rational(0));
  Rational c = 1;
  for (Index k = 0; k <= n; ++k) {
    binom[static_cast<size_t>(k)] = c;  // C(n+2, k)
    c = c * (n + 2 - k) / (k + 1);
  }
  // Division by (1+dH) is multiplication by sum (-d)^k H^k.
  std::vector<Rational> out(static_cast<size_t>(n) + 1, Rational(0));
  for (Index k = 0; k <= n; ++k) {
    Rational pow = 1, acc = 0;
    for (Index j = k; j >= 0; --j) {
      acc += binom[static_cast<size_t>(j)] * pow;
      pow *= -Rational(d);
    }
    out[static_cast<size_t>(k)] = acc;
  }
  return out;
}

}  // namespace

GradedAlgebra hypersurface_even_ring(Index n, Index d) {
  if (n < 1 || n % 2 == 0) throw Error("hypersurface_even_ring: n must be odd and positive");
  if (d < 1) throw Error("hypersurface_even_ring: degree must be positive");
  const Index total = n + 1;
  std::vector<Index> dims(static_cast<size_t>(total), 1);
  std::vector<std::string> labels{"1", "H"};
  for (Index i = 2; i <= n; ++i) labels.push_back("H^" + std::to_string(i));

  std::vector<std::tuple<Index, Index, RatVector>> products;
  for (Index i = 1; i <= n; ++i)
    for (Index j = i; j <= n; ++j) {
      RatVector c = RatVector::Zero(total);
      if (i + j <= n) c(i + j) = 1;
      products.emplace_back(i, j, c);
    }
  RatVector integral = RatVector::Zero(total);
  integral(n) = d;

  const std::vector<Rational> chern = total_chern_series(n, d);
  std::vector<RatVector> chern_classes;
  for (Index k = 1; k <= n; ++k) {
    RatVector c = RatVector::Zero(total);
    c(k) = chern[static_cast<size_t>(k)];
    chern_classes.push_back(c);
  }
  return GradedAlgebra(std::move(dims), std::move(labels), products, integral,
                       std::move(chern_classes));
}

Rational bernoulli_plus(Index k) {
  static std::vector<Rational> cache{Rational(1)};
  while (static_cast<Index>(cache.size()) <= k) {
    const Index m = static_cast<Index>(cache.size());
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 with the minus convention; switch the
    // sign of B_1 at the end.
    Rational acc = 0, binom = 1;  // C(m+1, 0)
    for (Index j = 0; j < m; ++j) {
      Rational bj = cache[static_cast<size_t>(j)];
      if (j == 1) bj = -bj;  // back to the minus convention
      acc += binom * bj;
      binom = binom * (m + 1 - j) / (j + 1);
    }
    Rational bm = -acc / Rational(m + 1);
    if (m == 1) bm = -bm;
    cache.push_back(bm);
  }
  return cache[static_cast<size_t>(k)];
}

namespace {

// Coefficients a_1..a_n of log(x / (1 - e^{-x})).
std::vector<Rational> log_todd_series(Index n) {
  // q_k = B^+_k / k!
  std::vector<Rational> q(static_cast<size_t>(n) + 1);
  Rational fact = 1;
  for (Index k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    q[static_cast<size_t>(k)] = bernoulli_plus(k) / fact;
  }
  // log(1 + u) with u = q - 1 (so u_0 = 0), truncated at degree n.
  std::vector<Rational> log_acc(static_cast<size_t>(n) + 1, Rational(0));
  std::vector<Rational> upow(static_cast<size_t>(n) + 1, Rational(0));
  upow[0] = 1;  // u^0
  for (Index m = 1; m <= n; ++m) {
    // upow <- upow * u
    std::vector<Rational> next(static_cast<size_t>(n) + 1, Rational(0));
    for (Index i = 0; i <= n; ++i)
      for (Index j = 1; i + j <= n; ++j)
        next[static_cast<size_t>(i + j)] += upow[static_cast<size_t>(i)] * q[static_cast<size_t>(j)];
    upow = next;
    const Rational sign = (m % 2 == 1) ? Rational(1) : Rational(-1);
    for (Index k = 0; k <= n; ++k)
      log_acc[static_cast<size_t>(k)] += sign / Rational(m) * upow[static_cast<size_t>(k)];
  }
  return log_acc;
}

}  // namespace

CohClass todd_class(const GradedAlgebra& alg) {
  if (!alg.has_chern()) throw Error("todd_class: missing Chern data");
  const Index n = alg.n();
  std::vector<CohClass> c = alg.chern_classes();
  while (static_cast<Index>(c.size()) < n) c.push_back(alg.zero_class());

  // Power sums of the Chern roots by Newton's identities:
  // p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^k k e_k with e_k = c_k.
  std::vector<CohClass> p(static_cast<size_t>(n) + 1, alg.zero_class());
  for (Index k = 1; k <= n; ++k) {
    CohClass acc = c[static_cast<size_t>(k - 1)] * Rational((k % 2 == 1) ? k : -k);
    for (Index i = 1; i < k; ++i) {
      const CohClass term = c[static_cast<size_t>(k - i - 1)] * p[static_cast<size_t>(i)];
      acc = (((k - i) % 2 == 1) ? acc + term : acc - term);
    }
    p[static_cast<size_t>(k)] = acc;
  }

  const std::vector<Rational> a = log_todd_series(n);
  CohClass arg = alg.zero_class();
  for (Index k = 1; k <= n; ++k) arg = arg + p[static_cast<size_t>(k)] * a[static_cast<size_t>(k)];

  // exp of a nilpotent element.
  CohClass todd = alg.unit(), power = alg.unit();
  Rational fact = 1;
  for (Index k = 1; k <= n; ++k) {
    power = power * arg;
    fact *= k;
    todd = todd + power * (1 / fact);
  }
  return todd;
}

CohClass sqrt_unit_series(const CohClass& a) {
  const GradedAlgebra& alg = *a.alg;
  if (a.component(0) != alg.unit())
    throw Error("sqrt_unit_series: degree-0 part must be 1");
  CohClass b = alg.unit();
  for (Index p = 1; p <= alg.n(); ++p) {
    const CohClass rem = (a - b * b).component(p);
    b = b + rem * Rational(1, 2);
  }
  if (!(b * b == a)) throw Error("sqrt_unit_series: internal error");
  return b;
}

Rational integrate(const CohClass& a) { return a.alg->integrate_class(a); }

CohClass dual_class(const CohClass& a) {
  const GradedAlgebra& alg = *a.alg;
  CohClass out = alg.zero_class();
  for (Index p = 0; p <= alg.n(); ++p) {
    const CohClass comp = a.component(p);
    out = (p % 2 == 0) ? out + comp : out - comp;
  }
  return out;
}

Rational mukai_pairing(const CohClass& a, const CohClass& b) {
  const GradedAlgebra& alg = *a.alg;
  if (b.alg != &alg) throw Error("mukai_pairing: mixing algebras");
  if (alg.has_chern() && !alg.c1_is_zero())
    throw Error("mukai_pairing: defined here only for c_1 = 0");
  return integrate(dual_class(a) * b);
}

RatMatrix mukai_pairing_gram(const GradedAlgebra& alg) {
  const Index n = alg.total_dim();
  RatMatrix g(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      g(i, j) = mukai_pairing(alg.basis_class(i), alg.basis_class(j));
  return g;
}

bool generated_in_degree_two(const GradedAlgebra& alg) {
  // Close the span of degrees 0 and 2 under multiplication by degree-2
  // basis classes.
  const Index total = alg.total_dim();
  std::vector<RatVector> spanning;
  for (Index i = 0; i < alg.degree_dim(0); ++i)
    spanning.push_back(RatVector::Unit(total, alg.degree_start(0) + i));
  if (alg.n() >= 1)
    for (Index i = 0; i < alg.degree_dim(1); ++i)
      spanning.push_back(RatVector::Unit(total, alg.degree_start(1) + i));

  RatMatrix span = span_saturate(spanning);
  for (;;) {
    std::vector<RatVector> next;
    for (Index r = 0; r < span.rows(); ++r) next.push_back(span.row(r).transpose());
    for (Index r = 0; r < span.rows(); ++r)
      for (Index i = 0; i < alg.degree_dim(1); ++i) {
        const CohClass prod = alg.basis_class(alg.degree_start(1) + i) *
                              alg.make_class(span.row(r).transpose());
        next.push_back(prod.coeffs);
      }
    RatMatrix grown = span_saturate(next);
    if (grown.rows() == span.rows()) break;
    span = grown;
  }
  return span.rows() == total;
}

}  // namespace leflab
