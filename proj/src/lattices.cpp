#include "leflab/lattices.hpp"

namespace leflab {

IntLattice::IntLattice(IntMatrix g) : rank(g.rows()), gram(std::move(g)) {
  if (gram.rows() != gram.cols() || !is_symmetric(gram))
    throw Error("IntLattice: Gram matrix must be square and symmetric");
}

bool IntLattice::is_even() const {
  for (Index i = 0; i < rank; ++i)
    if (gram(i, i) % 2 != 0) return false;
  return true;
}

Integer IntLattice::pairing(const IntVector& v, const IntVector& w) const {
  if (v.size() != rank || w.size() != rank) throw Error("pairing: dimension mismatch");
  return (v.transpose() * gram * w)(0, 0);
}

Embedding::Embedding(IntLattice amb, IntMatrix cols)
    : ambient(std::move(amb)), columns(std::move(cols)) {
  if (columns.rows() != ambient.rank) throw Error("Embedding: column length mismatch");
  if (rref(to_rational(columns)).rank != columns.cols())
    throw Error("Embedding: columns must be linearly independent");
}

IntLattice Embedding::sublattice() const {
  return IntLattice((columns.transpose() * ambient.gram * columns).eval());
}

IntLattice hyperbolic_plane() {
  IntMatrix g(2, 2);
  g << Integer(0), Integer(1), Integer(1), Integer(0);
  return IntLattice(g);
}

IntLattice e8_lattice() {
  // Cartan matrix of E8, Bourbaki numbering: the chain 1-3-4-5-6-7-8 with
  // node 2 attached to node 4.
  IntMatrix g = IntMatrix::Zero(8, 8);
  for (Index i = 0; i < 8; ++i) g(i, i) = 2;
  auto link = [&](Index a, Index b) { g(a, b) = g(b, a) = -1; };
  link(0, 2);
  link(2, 3);
  link(3, 4);
  link(4, 5);
  link(5, 6);
  link(6, 7);
  link(1, 3);
  return IntLattice(g);
}

IntLattice negate(const IntLattice& l) { return IntLattice((-l.gram).eval()); }

IntLattice k3_lattice() {
  const IntLattice me8 = negate(e8_lattice());
  const IntLattice u = hyperbolic_plane();
  return direct_sum(direct_sum(me8, me8), direct_sum(u, direct_sum(u, u)));
}

IntLattice direct_sum(const IntLattice& a, const IntLattice& b) {
  IntMatrix g = IntMatrix::Zero(a.rank + b.rank, a.rank + b.rank);
  g.topLeftCorner(a.rank, a.rank) = a.gram;
  g.bottomRightCorner(b.rank, b.rank) = b.gram;
  return IntLattice(g);
}

Embedding coordinate_embedding(const IntLattice& ambient, Index offset, Index count) {
  if (offset < 0 || count < 0 || offset + count > ambient.rank)
    throw Error("coordinate_embedding: range out of bounds");
  IntMatrix cols = IntMatrix::Zero(ambient.rank, count);
  for (Index j = 0; j < count; ++j) cols(offset + j, j) = 1;
  return Embedding(ambient, cols);
}

bool is_primitive(const Embedding& e) {
  for (const Integer& d : smith_normal_form(e.columns).elementary_divisors())
    if (d != 1) return false;
  return true;
}

Embedding orthogonal_complement(const Embedding& e) {
  if (!e.ambient.is_nondegenerate())
    throw Error("orthogonal_complement: ambient lattice is degenerate");
  const IntMatrix conditions = (e.columns.transpose() * e.ambient.gram).eval();
  return Embedding(e.ambient, integer_kernel(conditions));
}

Embedding mirror_partner(const IntLattice& l, const Embedding& m, const Embedding& ucopy) {
  // Even unimodular of signature (3,19) pins the isometry class of L.
  if (l.rank != 22 || !l.is_even() || abs(l.det()) != 1 ||
      !(l.signature() == Signature{3, 19, 0}))
    throw Error("mirror_partner: ambient must be the K3 lattice");
  if (!(m.ambient == l) || !(ucopy.ambient == l))
    throw Error("mirror_partner: embeddings must live in the given lattice");
  if (!is_primitive(m)) throw Error("mirror_partner: M is not primitive");
  const Signature ms = m.sublattice().signature();
  if (ms.positive != 1 || ms.zero != 0)
    throw Error("mirror_partner: M must have signature (1, s)");
  const IntLattice usub = ucopy.sublattice();
  if (usub.rank != 2 || !usub.is_even() || usub.det() != -1)
    throw Error("mirror_partner: Ucopy is not a hyperbolic plane");
  if (m.columns.transpose() * l.gram * ucopy.columns !=
      IntMatrix::Zero(m.sub_rank(), ucopy.sub_rank()))
    throw Error("mirror_partner: Ucopy is not orthogonal to M");

  IntMatrix joint(l.rank, m.sub_rank() + ucopy.sub_rank());
  joint.leftCols(m.sub_rank()) = m.columns;
  joint.rightCols(ucopy.sub_rank()) = ucopy.columns;
  const Embedding mirror = orthogonal_complement(Embedding(l, joint));

  if (m.sub_rank() + 2 + mirror.sub_rank() != l.rank)
    throw Error("mirror_partner: decomposition does not have full rank");
  if (mirror.columns.transpose() * l.gram * joint !=
      IntMatrix::Zero(mirror.sub_rank(), joint.cols()))
    throw Error("mirror_partner: blocks are not orthogonal");
  return mirror;
}

IntLattice mukai_extend(const IntLattice& m) { return direct_sum(m, hyperbolic_plane()); }

ChamberReport chamber_predicates(const IntLattice& m, const IntVector& h,
                                 const std::vector<IntVector>& roots) {
  for (const IntVector& delta : roots)
    if (m.pairing(delta, delta) != -2)
      throw Error("chamber_predicates: a supplied root does not have square -2");
  ChamberReport rep;
  rep.h_square_positive = m.pairing(h, h) > 0;
  rep.all_roots_positive = true;
  for (const IntVector& delta : roots)
    if (m.pairing(h, delta) <= 0) rep.all_roots_positive = false;
  return rep;
}

LieBasis pointwise_stabilizer_lie(const IntLattice& l, const Embedding& m) {
  if (!l.is_nondegenerate()) throw Error("pointwise_stabilizer_lie: degenerate lattice");
  // X^T G + G X = 0 iff G X is skew, so X = G^{-1} S with S skew; the
  // annihilation X m = 0 becomes S m = 0, linear in the skew coordinates.
  const Index n = l.rank;
  const RatMatrix ginv = inverse(to_rational(l.gram));
  std::vector<std::pair<Index, Index>> coords;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) coords.emplace_back(i, j);
  const Index skew_dim = static_cast<Index>(coords.size());
  const RatMatrix b = to_rational(m.columns);

  RatMatrix conditions(n * m.sub_rank(), skew_dim);
  for (Index c = 0; c < skew_dim; ++c) {
    const auto [i, j] = coords[static_cast<size_t>(c)];
    for (Index col = 0; col < m.sub_rank(); ++col)
      for (Index row = 0; row < n; ++row) {
        Rational val = 0;
        if (row == i) val = b(j, col);
        if (row == j) val = -b(i, col);
        conditions(col * n + row, c) = val;
      }
  }
  const RatMatrix sol = kernel(conditions);

  std::vector<RatMatrix> gens;
  for (Index c = 0; c < sol.cols(); ++c) {
    RatMatrix s = RatMatrix::Zero(n, n);
    for (Index k = 0; k < skew_dim; ++k) {
      const auto [i, j] = coords[static_cast<size_t>(k)];
      s(i, j) = sol(k, c);
      s(j, i) = -sol(k, c);
    }
    gens.push_back(ginv * s);
  }
  // Intersection of so(G) with the annihilator of the image, both closed
  // under the bracket, so no closure check is needed.
  return span_basis(gens, ClosurePolicy::assume_closed);
}

std::optional<Embedding> find_hyperbolic_copy(const IntLattice& l, const Embedding& m,
                                              long box, long budget) {
  const Embedding comp = orthogonal_complement(m);
  const IntLattice n = comp.sublattice();
  const Index r = n.rank;
  if (r < 2) return std::nullopt;

  // Odometer over [-box, box]^r in lexicographic order, primitive vectors
  // with positive leading coordinate only.
  std::vector<IntVector> isotropic;
  IntVector v = IntVector::Constant(r, Integer(-box));
  long spent = 0;
  auto advance = [&]() -> bool {
    for (Index i = r - 1; i >= 0; --i) {
      if (v(i) < box) {
        v(i) += 1;
        for (Index j = i + 1; j < r; ++j) v(j) = -box;
        return true;
      }
    }
    return false;
  };
  auto admissible = [&](const IntVector& x) {
    Integer g = 0;
    Index lead = -1;
    for (Index i = 0; i < r; ++i) {
      g = gcd(g, x(i));
      if (lead < 0 && x(i) != 0) lead = i;
    }
    return lead >= 0 && x(lead) > 0 && g == 1;
  };
  do {
    if (++spent > budget) return std::nullopt;
    if (admissible(v) && n.pairing(v, v) == 0) isotropic.push_back(v);
  } while (advance());

  for (size_t a = 0; a < isotropic.size(); ++a)
    for (size_t b = 0; b < isotropic.size(); ++b) {
      if (a == b) continue;
      if (++spent > budget) return std::nullopt;
      if (n.pairing(isotropic[a], isotropic[b]) != 1) continue;
      IntMatrix pair(r, 2);
      pair.col(0) = isotropic[a];
      pair.col(1) = isotropic[b];
      return Embedding(l, (comp.columns * pair).eval());
    }
  return std::nullopt;
}

}  // namespace leflab
