#ifndef LEFLAB_ABELIAN_HPP
#define LEFLAB_ABELIAN_HPP

#include "leflab/exactlin.hpp"
#include "leflab/liealg.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace leflab {

/// Complex torus with a rational complex structure: J acts on the lattice
/// coordinates of Gamma with J^2 = -1. Rationality of J keeps every
/// computation exact; this covers the CM-type examples.
struct TorusData {
  Index n = 0;  // complex dimension; the lattice has rank 2n
  RatMatrix j;

  TorusData(Index n_, RatMatrix j_);
};

/// Lambda = Gamma + Gamma^* with the canonical pairing
/// Q((a1,b1),(a2,b2)) = b1(a2) + b2(a1) and the product complex structure
/// Jtilde = diag(J, -J^T).
struct LambdaSpace {
  IntMatrix qgram;    // [[0, I], [I, 0]], size 4n
  RatMatrix jtilde;   // in SO(Lambda_R, Q)
};

LambdaSpace lambda_space(const TorusData& a);
IntMatrix lambda_q(Index n);

/// Integral (or rational) skew form on Gamma whose real extension is
/// J-invariant. The stored matrix is the Gram matrix c(v, w) = v^T gram w;
/// the associated map Gamma -> Gamma^*, v -> c(v, .), has matrix gram^T.
struct NSForm {
  RatMatrix gram;
  RatMatrix map_matrix() const { return gram.transpose(); }
};

/// Skewness and J-invariance test for a candidate Gram matrix.
bool is_ns_form(const TorusData& a, const RatMatrix& c);
NSForm make_ns_form(const TorusData& a, RatMatrix c);

/// Canonical basis of NS(A)_Q = {c skew : J^T c J = c}, computed as a kernel.
std::vector<NSForm> ns_basis(const TorusData& a);

/// Exact positive definiteness of the symmetric form (v, w) -> c(Jv, w);
/// the symmetry itself is certified first. Throws when c is not in NS.
bool is_ample(const TorusData& a, const NSForm& c);

/// omega = phi1 + i phi2 in the complexified ample cone: phi2 must be ample.
struct KahlerParam {
  NSForm phi1, phi2;
};

void validate_kahler(const TorusData& a, const KahlerParam& w);

/// The complex structure I_omega on Lambda attached to omega: in map blocks,
/// [[p2^{-1} p1, -p2^{-1}], [p2 + p1 p2^{-1} p1, -p1 p2^{-1}]].
/// Verified exactly on every call: I^2 = -1, I^T Q I = Q, [I, Jtilde] = 0,
/// and the three-factor factorization through the unipotents of phi1.
RatMatrix iomega(const TorusData& a, const KahlerParam& w);

/// Recovers omega from I when I = I_omega for some omega in C_A; nullopt
/// otherwise. Throws when the top-right block is singular or the stated
/// preconditions (I^2 = -1, isometry) fail.
std::optional<KahlerParam> iomega_invert(const TorusData& a, const RatMatrix& i);

struct EFormReport {
  bool symmetric = false;
  bool positive_definite = false;
  Signature sig;
};

/// The form E_I = Q((I Jtilde)(-), -): symmetric under the preconditions,
/// and positive definite exactly when I = I_omega for omega in C_A.
EFormReport e_form_test(const TorusData& a, const RatMatrix& i);

/// Membership in U(A): integral invertibility, Q-isometry, and commutation
/// with Jtilde. The block-adjoint description of the inverse is re-checked
/// on every accepted element.
bool u_membership(const TorusData& a, const IntMatrix& g);

/// Lie algebra of the U(A)-side group: {X : X^T Q + Q X = 0, [X, Jtilde] = 0},
/// the centralizer of the product complex structure inside so(Lambda_Q, Q).
LieBasis u_lie_algebra(const TorusData& a);

/// sl2-triple attached to an invertible polarization: e is the tensor
/// nilpotent [[0,0],[phi,0]] on Lambda, f its partner through phi^{-1},
/// h = diag(-1, 1) on the two halves.
Sl2Triple polarization_sl2(const TorusData& a, const NSForm& c);

/// Degree <= 2 tensor-invariant upper bound for the Hodge Lie algebra of a
/// complex structure I (on Gamma_Q or Lambda_Q): all X commuting with every
/// rational E commuting with I and infinitesimally fixing every I-invariant
/// bilinear form. Always contains I and is bracket closed.
LieBasis hodge_envelope_deg2(const TorusData& a, const RatMatrix& i);

struct MirrorCertificate {
  IntMatrix alpha;
  bool unimodular = false;
  bool isometry = false;      // alpha^T Q_B alpha = Q_A
  bool intertwine_ab = false; // alpha J_{AxA^} = I_{omega_B} alpha
  bool intertwine_ba = false; // alpha I_{omega_A} = J_{BxB^} alpha
  bool all_passed() const { return unimodular && isometry && intertwine_ab && intertwine_ba; }
};

/// Evaluates every mirror-pair equation exactly; failures are recorded in
/// the certificate, not thrown.
MirrorCertificate mirror_check(const TorusData& a, const KahlerParam& wa, const TorusData& b,
                               const KahlerParam& wb, const IntMatrix& alpha);

struct SplitResult {
  IntMatrix gamma1, gamma2;  // 4n x 2n integral bases, saturated
};

struct SearchBudget {
  long box = 3;          // coordinate box for candidate vectors
  long max_steps = 200000;
};

/// Searches for a Q-isotropic decomposition Lambda = Gamma_1 + Gamma_2 into
/// I-invariant halves of index one, by depth-first extension of pairs
/// {v, Iv} over the coordinate box, lexicographically least first, with
/// saturation. nullopt means the budget was exhausted, never a proof of
/// nonexistence.
std::optional<SplitResult> isotropic_invariant_split(const TorusData& a, const RatMatrix& i,
                                                     SearchBudget budget = {});

struct MirrorPair {
  TorusData b;
  KahlerParam wb;
  IntMatrix alpha;
  MirrorCertificate cert;
  SplitResult split;
};

/// Builds a mirror pair from a split of I_omega: B carries I_omega restricted
/// to Gamma_1 and omega_B is recovered from the matrix of Jtilde in the new
/// basis. nullopt when no split is found within the budget; a split whose
/// omega_B recovery fails raises an error with diagnostics.
std::optional<MirrorPair> construct_mirror(const TorusData& a, const KahlerParam& wa,
                                           SearchBudget budget = {});

/// g I_{omega_1} g^{-1} = I_{omega_2} test: returns omega_2 when the
/// conjugated structure is again of Kahler type, nullopt otherwise (also for
/// g outside U(A)).
std::optional<KahlerParam> monodromy_witness(const TorusData& a, const IntMatrix& g,
                                             const KahlerParam& w1);

/// The rational action (c + d omega)(a + b omega)^{-1} of a block matrix on
/// the parameter; throws when a + b omega is singular (the action is only
/// rational). Blocks act on maps, matching iomega.
KahlerParam siegel_action(const TorusData& a, const RatMatrix& g, const KahlerParam& w);

/// The 2n-dimensional torus with J0 e_i = -e_{i+n}, J0 e_{i+n} = e_i and the
/// polarization s(e_i, e_{j+n}) = delta_ij; validated ample.
std::pair<TorusData, NSForm> example_pair(Index n);

struct PerfectnessReport {
  Index envelope_dim = 0;
  Index u_dim = 0;
  bool envelope_in_u = false;
  bool u_in_envelope = false;
  bool equal = false;
};

/// Proxy comparison of the Hodge envelope of I_omega with Lie(U_A): equality
/// is evidence for a perfect pair, but the envelope is only an upper bound
/// for the true Hodge Lie algebra.
PerfectnessReport perfectness_proxy(const TorusData& a, const KahlerParam& w);

}  // namespace leflab

#endif
