#pragma once

// Chevalley basis of the simple Lie algebra attached to a root system:
// integer structure constants, sl(2)-triples, Killing form.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "liedense/root_system.hpp"

namespace liedense {

// Sparse combination of basis elements; coefficients are integer-valued
// rationals for every bracket of basis elements.
using BasisCombo = std::vector<std::pair<int, Rational>>;

class LieAlgebra {
 public:
  // Coordinate vector in the Chevalley basis.
  using Element = QVec;

  // Builds the Chevalley basis.  Signs of the structure constants are fixed
  // by the extraspecial-pair recursion over positive roots ordered by
  // (height, lex); |N_{a,b}| = p+1 with p the largest k with b - k*a a root.
  static std::shared_ptr<const LieAlgebra> build(const RootSystem& rs);

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }
  int num_positive() const { return static_cast<int>(rs_.positive_roots().size()); }
  // Basis order: E_a (a in positive-root order), F_a (same order), H_1..H_l.
  int dim() const { return 2 * num_positive() + rank(); }

  int e_index(int k) const { return k; }
  int f_index(int k) const { return num_positive() + k; }
  int h_index(int i) const { return 2 * num_positive() + i; }
  bool is_cartan_index(int b) const { return b >= 2 * num_positive(); }
  // "E1".."Em", "F1".."Fm", "H1".."Hl" (1-based within each group).
  std::string basis_label(int b) const;
  // Inverse of basis_label; -1 if unknown.
  int basis_index(const std::string& label) const;

  // Weight of a basis vector under the adjoint action of the Cartan
  // subalgebra: the root for E/F vectors, zero for H vectors.
  const QVec& basis_weight(int b) const { return basis_weights_[static_cast<std::size_t>(b)]; }

  const BasisCombo& bracket_basis(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(dim()) +
                  static_cast<std::size_t>(b)];
  }

  Element basis_element(int b) const;
  Element bracket(const Element& x, const Element& y) const;

  // Integer coefficients of coroot(alpha) in the simple coroots H_1..H_l.
  QVec coroot_coords(const QVec& alpha) const;
  // coroot(alpha) as an algebra element supported on the Cartan basis.
  Element coroot_element(const QVec& alpha) const;

  // Killing form B(x, y) = tr(ad x . ad y); the Gram matrix over the basis is
  // built on first use.
  Rational killing_form(const Element& x, const Element& y) const;
  const QMat& killing_matrix() const;

 private:
  explicit LieAlgebra(RootSystem rs) : rs_(std::move(rs)) {}

  RootSystem rs_;
  std::vector<BasisCombo> table_;  // dim x dim, row-major
  std::vector<QVec> basis_weights_;
  std::vector<QVec> coroot_h_;  // per positive root: coroot in simple coroots
  mutable QMat killing_;        // lazily filled Gram matrix
};

struct Sl2Triple {
  LieAlgebra::Element e, f, h;
};

// The triple (E_a, F_a, H_a) for a positive root; NotARoot otherwise.
Sl2Triple sl2_triple(const LieAlgebra& g, const QVec& alpha);

struct JacobiReport {
  bool ok = true;
  long long checked_triples = 0;
  int bad_i = -1, bad_j = -1, bad_k = -1;  // first failing triple, if any
};

// Exhaustive Jacobi identity check over all basis triples.
JacobiReport verify_jacobi(const LieAlgebra& g);

}  // namespace liedense
