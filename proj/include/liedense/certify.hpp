#pragma once

#include <string>
#include <vector>

#include "liedense/representation.hpp"

namespace liedense {

// Outcome of a generation run on W (x) g.  `generated` means the canonical
// seed generates; false is reported as "not generated by this seed", not as
// a refutation (a larger seed could generate in principle).
struct Certificate {
  std::string module_desc;
  int target_dim = 0;             // dim W * dim g
  int seed_dim = 0;               // rank of the seed span
  std::vector<int> closure_dims;  // subspace dimension after each round
  bool generated = false;         // final dimension == target_dim
};

// Canonical overshear seed of W (x) g in flattened coordinates
// ((i, j) -> i * dim g + j): for every nilpotent basis element xi (each E_k
// and F_k), all of ker rho(xi)^2 (x) xi; and for every weight lambda of W,
// W_lambda (x) (h intersect ker lambda) -- those vectors are killed by their
// Cartan factor outright.
std::vector<QVec> overshear_seed(const Representation& w);

// Smallest subspace containing the seed and invariant under every basis
// action of m; closed by rounds that apply all basis actions, no early exit.
Subspace generated_submodule(const std::vector<QVec>& seed, const Representation& m);

// Decide whether the canonical seed generates all of W (x) g.  Internally
// works weight block by weight block, so W (x) g is never materialized as
// matrices; the ambient dimension is still guarded by the dense limit.
Certificate certify(const Representation& w, const std::string& module_desc = "");

// Case analysis in the dual adjoint module W = g^*, identified with g via
// the invariant form (phi_x = B(x, .)).  For each positive-root pair
// (alpha, beta), writing h = phi_{H_alpha}, e = phi_{E_alpha},
// f = phi_{F_alpha}:
//   shear_ok:      H_beta . h = 0
//   overshear_ok:  E_beta^2 . h = 0
//   case2_ok:  f (x) E_beta = 1/2 ( F_alpha.(h (x) E_beta) + n2 h (x) H_beta
//                                   + r2 h (x) e_{beta-alpha} )
//   case3_ok:  e (x) H_beta = -1/2 ( E_alpha.(h (x) H_beta) + n3 h (x) E_alpha )
//   case4_ok:  e (x) E_beta = -1/2 ( E_beta.(e (x) H_beta)
//                                    + c4 phi_{E_{alpha+beta}} (x) H_beta )
// with every coefficient computed from the structure constants (n2, r2, c4
// vanish when the named root is absent).  Each right-hand side uses only
// vectors covered by an earlier case.
struct AdjointPairCase {
  int alpha = 0, beta = 0;  // positive-root indices
  bool shear_ok = false, overshear_ok = false;
  bool case2_ok = false, case3_ok = false, case4_ok = false;
  Rational n2, r2, n3, c4;
};

struct AdjointCasesReport {
  RootSystemType rtype;
  bool ok = false;
  std::vector<AdjointPairCase> pairs;
};

AdjointCasesReport verify_adjoint_cases(const std::shared_ptr<const LieAlgebra>& g);

// Exact verification of the lowering-power identities in V(n) (x) sl2 for
// v = v_k (weight lambda = n - 2k, j = k the largest power with E^j v != 0):
//   F E^j v = (lambda + 2j) E^{j-1} v
//   F^{j+1}(E^j v (x) E) = (F^{j+1}E^j v) (x) E - (j+1)(F^j E^j v) (x) H
//                          - j(j+1) F^{j-1}E^j v (x) F
//   F^j(E^{j-1} v (x) E) = (F^j E^{j-1} v) (x) E - j (F^{j-1}E^{j-1} v) (x) H
//                          - j(j-1) F^{j-2}E^{j-1} v (x) F
// plus: E^j v (x) E and E^{j-1} v (x) E are overshears, and the vectors
// v (x) H, F^{j+1}(E^j v (x) E), F^j(E^{j-1} v (x) E) are independent.
// Requires lambda != 0, E v != 0, F v != 0, and j >= 2.
struct OldSl2Report {
  int n = 0, k = 0, j = 0;
  long long lambda = 0;
  bool lowering_identity_ok = false;
  bool top_power_identity_ok = false;
  bool next_power_identity_ok = false;
  bool overshears_ok = false;
  bool independent = false;
  bool ok = false;
};

OldSl2Report verify_old_sl2(int n, int v_index);

// Odd/even weight case identities for polynomial multiples of rank-one
// fields.  Coordinates x_0..x_n are dual weight vectors of V(n); for every
// odd-weight coordinate x1 (weight lambda) and every even-weight quadratic
// monomial g (weight 2k), check as polynomial vector fields:
//   [g H, x1 H] = (lambda - 2k) x1 g H
//   [g H, x1 E] = (lambda + 2) x1 g E - x1 (E.g) H
//   [g H, x1 F] = (lambda - 2) x1 g F - x1 (F.g) H
// and that each scalar coefficient is odd, hence nonzero.  For even n every
// coordinate weight is even and there is nothing to check.
struct OddWeightCasesReport {
  int n = 0;
  long long cartan_checked = 0, raising_checked = 0, lowering_checked = 0;
  long long skipped_even = 0;
  bool coefficients_odd = false;
  bool ok = false;
};

OddWeightCasesReport verify_odd_weight_cases(int n);

// The Cartan slice generates: 2 w (x) X_gamma = (X_gamma w) (x) H_gamma
// - X_gamma.(w (x) H_gamma) for every basis w and root gamma, and the
// closure of W (x) h under the action is all of W (x) g.
struct CartanGenerationReport {
  bool identity_ok = false;
  long long pairs_checked = 0;
  int ambient_dim = 0;
  int closure_dim = 0;
  bool generates = false;
  bool ok = false;
};

CartanGenerationReport verify_cartan_generation(const Representation& w);

}  // namespace liedense
