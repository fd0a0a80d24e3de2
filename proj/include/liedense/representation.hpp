#pragma once

#include <memory>
#include <string>
#include <vector>

#include "liedense/lie_algebra.hpp"
#include "liedense/linalg.hpp"
#include "liedense/root_system.hpp"

namespace liedense {

// Dense constructions refuse above this dimension (LIEDENSE_MAX_DIM overrides).
int max_dense_dim();
void check_dense_dim(long long n);

// A finite-dimensional module over a Chevalley-basis Lie algebra: one rational
// dim x dim matrix per algebra basis element, acting on column vectors.
struct Representation {
  std::shared_ptr<const LieAlgebra> algebra;
  int dim = 0;
  std::vector<QMat> matrices;

  const QMat& matrix(int b) const { return matrices[static_cast<std::size_t>(b)]; }
  // Matrix of an arbitrary algebra element (linear combination of the basis).
  QMat matrix_of(const LieAlgebra::Element& x) const;
};

// rho(x) rho(y) - rho(y) rho(x) = rho([x, y]) on all basis pairs.
bool homomorphism_ok(const Representation& rep);

Representation trivial_rep(std::shared_ptr<const LieAlgebra> g);
Representation adjoint_rep(std::shared_ptr<const LieAlgebra> g);

// Irreducible module of the rank-one algebra with highest weight n:
// H v_k = (n - 2k) v_k, F v_k = v_{k+1}, E v_k = k (n - k + 1) v_{k-1}.
Representation sl2_irrep(int n);

// Contragredient action x . phi = -phi o x, i.e. negated transposes.
Representation dual(const Representation& rep);

Representation direct_sum(const Representation& a, const Representation& b);

// Tensor product with basis v_i (x) w_j at index i * dim(b) + j.
Representation tensor(const Representation& a, const Representation& b);

// W (x) g with the action xi . (v (x) eta) = (xi v) (x) eta + v (x) [xi, eta].
Representation module_tensor_g(const Representation& w);

struct WeightSpace {
  Weight weight;   // ambient-coordinates weight vector
  Subspace space;  // the corresponding simultaneous eigenspace
};

struct WeightDecomposition {
  std::vector<WeightSpace> spaces;  // sorted by weight, lexicographically
};

// Simultaneous rational eigenspace decomposition of the Cartan action.
WeightDecomposition weight_decomposition(const Representation& rep);

// max over roots alpha and weights lambda of |<lambda, alpha^vee>|.
long long boundedness(const Representation& rep);

// Product formula dimension of the irreducible with highest weight lambda.
long long weyl_dim(const RootSystem& rs, const Weight& lambda);

// Search adjoint tensor powers k = 1..k_max for a highest-weight vector of
// weight lambda (lambda dominant, in the root lattice) and return the
// submodule it generates; its dimension must match weyl_dim.
Representation construct_irrep(const RootSystem& rs, const Weight& lambda, int k_max);

}  // namespace liedense
