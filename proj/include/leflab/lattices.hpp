#ifndef LEFLAB_LATTICES_HPP
#define LEFLAB_LATTICES_HPP

#include "leflab/exactlin.hpp"
#include "leflab/liealg.hpp"

#include <optional>
#include <vector>

namespace leflab {

/// Free finitely generated abelian group with an integral symmetric pairing
/// of basis vectors.
struct IntLattice {
  Index rank = 0;
  IntMatrix gram;  // rank x rank, symmetric

  IntLattice() = default;
  explicit IntLattice(IntMatrix g);

  bool is_even() const;
  bool is_nondegenerate() const { return det() != 0; }
  Integer det() const { return determinant(gram); }
  Signature signature() const { return leflab::signature(to_rational(gram)); }
  Integer pairing(const IntVector& v, const IntVector& w) const;

  friend bool operator==(const IntLattice& a, const IntLattice& b) {
    return a.rank == b.rank && a.gram == b.gram;
  }
};

/// Sublattice of an ambient lattice, spanned by the columns of image_basis
/// written in ambient coordinates.
struct Embedding {
  IntLattice ambient;
  IntMatrix columns;  // ambient.rank x k, linearly independent

  Embedding(IntLattice amb, IntMatrix cols);

  Index sub_rank() const { return columns.cols(); }
  /// Pulled-back Gram matrix, i.e. the sublattice as an abstract lattice.
  IntLattice sublattice() const;
};

IntLattice hyperbolic_plane();
/// Positive definite E8 (Gram = the E8 Cartan matrix); negate for -E8.
IntLattice e8_lattice();
IntLattice negate(const IntLattice& l);
/// The K3 lattice (-E8)^2 + U^3: even, unimodular, signature (3,19).
IntLattice k3_lattice();
IntLattice direct_sum(const IntLattice& a, const IntLattice& b);

/// Sublattice of the first `count` basis vectors, starting at `offset`.
Embedding coordinate_embedding(const IntLattice& ambient, Index offset, Index count);

/// True iff the cokernel is torsion free, i.e. every elementary divisor of
/// the column matrix is 1.
bool is_primitive(const Embedding& e);

/// The primitive sublattice {x : <x, m> = 0 for all m in the image}. Rejects
/// a degenerate ambient lattice.
Embedding orthogonal_complement(const Embedding& e);

/// Mirror-dual sublattice M^vee = (M + Ucopy)^perp inside the K3 lattice.
/// Requires M primitive of signature (1, s) and Ucopy a hyperbolic-plane
/// embedding orthogonal to M; the three blocks are checked to be pairwise
/// orthogonal of full combined rank.
Embedding mirror_partner(const IntLattice& l, const Embedding& m, const Embedding& ucopy);

/// M + U with the two new vectors e, eta pairing to 1 and orthogonal to M.
IntLattice mukai_extend(const IntLattice& m);

struct ChamberReport {
  bool h_square_positive = false;
  bool all_roots_positive = false;
  bool inside() const { return h_square_positive && all_roots_positive; }
};

/// Checks (h,h) > 0 and (h, delta) > 0 for the supplied roots; every delta
/// must satisfy (delta, delta) = -2.
ChamberReport chamber_predicates(const IntLattice& m, const IntVector& h,
                                 const std::vector<IntVector>& roots);

/// Canonical basis of {X : X^T G + G X = 0 and X m = 0 for all m in the
/// image}, the Lie algebra of the pointwise stabilizer of the sublattice.
LieBasis pointwise_stabilizer_lie(const IntLattice& l, const Embedding& m);

/// Bounded-enumeration search for a hyperbolic-plane embedding inside the
/// orthogonal complement of m, scanning primitive isotropic vectors with
/// coordinates in [-box, box]. Returns nullopt when the budget is exhausted.
std::optional<Embedding> find_hyperbolic_copy(const IntLattice& l, const Embedding& m,
                                              long box = 2, long budget = 200000);

}  // namespace leflab

#endif
