#pragma once

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "liedense/polynomial.hpp"
#include "liedense/representation.hpp"

namespace liedense {

// Polynomial vector field on complex affine space: component p is the
// coefficient of d/dx_p, so the field acts on functions as
// sum_p components[p] * d/dx_p.
struct PolyVectorField {
  int n = 0;  // ambient complex dimension = number of variables
  std::vector<Polynomial> components;
};

using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

// Endpoint of a numeric flow computation.
struct FlowResult {
  CVec endpoint;
  long long steps = 0;
  std::string scheme;
};

// The n(n+1)/2 rotation fields x_i d/dx_j - x_j d/dx_i, 0 <= i < j <= n, on
// the (n+1)-dimensional space; all are tangent to the unit quadric.
std::vector<PolyVectorField> quadric_fields(int n);

// Derivation action sum_p xi_p df/dx_p.
Polynomial apply_field(const PolyVectorField& xi, const Polynomial& f);

// Commutator of derivations, componentwise xi(eta_p) - eta(xi_p).
PolyVectorField bracket_fields(const PolyVectorField& xi, const PolyVectorField& eta);

// f is a first integral of xi when xi f = 0, a second integral when only
// xi^2 f = 0.
enum class IntegralClass { FirstIntegral, SecondIntegral, Neither };
IntegralClass integrals(const PolyVectorField& xi, const Polynomial& f);

// Time-t flow of f * xi for an affine-linear field xi annihilating f: f is
// constant along xi-orbits, so the flow is the affine exponential
// exp(t f(p) xi) applied to p (computed via the homogeneous embedding that
// carries the translation part).  Throws NotAShear unless xi is affine
// linear and xi f = 0 symbolically (checked exactly).
CVec shear_flow(const PolyVectorField& xi, const Polynomial& f, std::complex<double> t,
                const CVec& p);

// Classical fourth-order integration of dx/ds = t * xi(x), s in [0,1].
// Throws NonFinite when a coordinate leaves the guarded range (1e12),
// signalling likely blow-up of an incomplete field.
FlowResult flow_rk4(const PolyVectorField& xi, const CVec& p, std::complex<double> t,
                    long long steps);

// Parameterized self-map family; F(0, .) should be the identity.
using MapFamily = std::function<CVec(std::complex<double>, const CVec&)>;

// N-fold composition of F_{t/N}; converges to the flow of the generator of
// the family as N grows.
CVec euler_product(const MapFamily& family, std::complex<double> t, long long n_steps,
                   const CVec& p);

// phi_eta^{-s} . phi_xi^{-s} . phi_eta^{s} . phi_xi^{s} applied to p (the
// xi-flow acts first), each leg integrated with the fourth-order scheme;
// (result - p)/s^2 approaches the commutator field at p as s -> 0.
CVec commutator_flow(const PolyVectorField& xi, const PolyVectorField& eta, double s,
                     const CVec& p, long long steps_per_leg);

// Conjugates diag(I, -I) by g and verifies the orbit's block equations
// (symmetric off-diagonal blocks, x^2 + yz = I) exactly over the rationals.
// Throws NotSymplectic unless g^T J g = J exactly.
bool symplectic_orbit_check(int n, const QMat& g);

// Deterministic integer symplectic matrix of size 2n, built as a product of
// `factors` elementary symplectic generators drawn from the given seed.
QMat random_symplectic(int n, unsigned seed, int factors);

// The standard (n+1)-dimensional orthogonal module, produced from the
// quadric fields: the rotation fields are linearized, transported to the
// hyperbolic basis x_{2j} +- i x_{2j+1} over the Gaussian rationals, and
// matched there to the Chevalley basis of the corresponding root system
// (rank-one for n = 2, odd orthogonal for even n, and the rank-three
// realizations for odd n >= 5).  Every returned matrix is verified to be a
// homomorphism image lying in the span of the linearized quadric fields.
// n = 3 splits into two commuting rank-one factors; use so4_factor_reps.
Representation so_standard_rep(int n);

// The two commuting rank-one factors of the four-dimensional orthogonal
// algebra, each acting on the ambient space; each factor is bounded by 1.
std::pair<Representation, Representation> so4_factor_reps();

}  // namespace liedense
