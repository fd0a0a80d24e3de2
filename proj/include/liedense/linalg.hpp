#pragma once

// Exact dense linear algebra over an arbitrary field scalar, as free functions
// on Eigen types.  Pivoting is first-nonzero: magnitude-based pivot selection
// is meaningless for exact scalars.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "liedense/errors.hpp"
#include "liedense/rational.hpp"

namespace liedense {

template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using RowVec = Eigen::Matrix<S, 1, Eigen::Dynamic>;
template <class S>
using DMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

using QVec = Vector<Rational>;
using QRowVec = RowVec<Rational>;
using QMat = DMatrix<Rational>;
using GVec = Vector<GaussianRational>;
using GMat = DMatrix<GaussianRational>;

// Reduced row echelon form in place.  Returns the pivot columns in order.
template <class S>
std::vector<Eigen::Index> rref_in_place(DMatrix<S>& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!(m(i, c) == S(0))) { p = i; break; }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    S inv = S(1) / m(r, c);
    m.row(r) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r) continue;
      if (!(m(i, c) == S(0))) m.row(i) -= m(i, c) * m.row(r);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class S>
Eigen::Index rank_of(DMatrix<S> m) {
  return static_cast<Eigen::Index>(rref_in_place(m).size());
}

// One solution of A x = b (free variables set to zero), or nullopt if
// inconsistent.
template <class S>
std::optional<Vector<S>> solve_linear(const DMatrix<S>& a, const Vector<S>& b) {
  DMatrix<S> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  std::vector<Eigen::Index> piv = rref_in_place(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  Vector<S> x = Vector<S>::Constant(a.cols(), S(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x(piv[r]) = aug(static_cast<Eigen::Index>(r), a.cols());
  return x;
}

// Columns form a basis of the null space of a.
template <class S>
DMatrix<S> kernel_basis(DMatrix<S> a) {
  const Eigen::Index n = a.cols();
  std::vector<Eigen::Index> piv = rref_in_place(a);
  std::vector<bool> is_pivot(n, false);
  for (Eigen::Index c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
  DMatrix<S> k(n, n - static_cast<Eigen::Index>(piv.size()));
  Eigen::Index kc = 0;
  for (Eigen::Index c = 0; c < n; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    Vector<S> v = Vector<S>::Constant(n, S(0));
    v(c) = S(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v(piv[r]) = -a(static_cast<Eigen::Index>(r), c);
    k.col(kc++) = v;
  }
  return k;
}

template <class S>
DMatrix<S> inverse_of(const DMatrix<S>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse_of: non-square matrix");
  const Eigen::Index n = a.rows();
  DMatrix<S> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = DMatrix<S>::Identity(n, n);
  std::vector<Eigen::Index> piv = rref_in_place(aug);
  if (static_cast<Eigen::Index>(piv.size()) != n || piv.back() != n - 1)
    throw std::invalid_argument("inverse_of: singular matrix");
  return aug.rightCols(n);
}

// Incrementally maintained reduced row echelon basis of a subspace.
// Rows are fully reduced: row r has a 1 in its pivot column and every other
// row has 0 there, so coordinates of members can be read off pivot entries.
template <class S>
class EchelonBasis {
 public:
  explicit EchelonBasis(Eigen::Index ambient_dim) : ambient_(ambient_dim) {}

  Eigen::Index ambient_dim() const { return ambient_; }
  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }

  // Fully reduces v against the current rows in place.  Returns the column of
  // the first nonzero entry of the residual, or -1 if the residual is zero.
  // (Rows are zero left of their pivot, so a single left-to-right sweep is a
  // complete reduction.)
  Eigen::Index reduce(RowVec<S>& v) const {
    Eigen::Index first = -1;
    for (Eigen::Index c = 0; c < ambient_; ++c) {
      if (v(c) == S(0)) continue;
      auto it = by_pivot_.find(c);
      if (it == by_pivot_.end()) {
        if (first < 0) first = c;
        continue;
      }
      v -= v(c) * rows_[it->second];
    }
    return first;
  }

  // Adds v to the span; returns true if the rank grew.
  bool insert(RowVec<S> v) {
    Eigen::Index p = reduce(v);
    if (p < 0) return false;
    v *= S(1) / v(p);
    for (auto& row : rows_)
      if (!(row(p) == S(0))) row -= row(p) * v;
    by_pivot_[p] = rows_.size();
    pivcols_.push_back(p);
    rows_.push_back(std::move(v));
    return true;
  }

  bool contains(RowVec<S> v) const { return reduce(v) < 0; }

  // Coordinates of v in the row basis (rows in insertion order), if a member.
  std::optional<Vector<S>> coordinates(const RowVec<S>& v) const {
    Vector<S> coords(rank());
    RowVec<S> res = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      coords(static_cast<Eigen::Index>(r)) = v(pivcols_[r]);
      res -= coords(static_cast<Eigen::Index>(r)) * rows_[r];
    }
    for (Eigen::Index c = 0; c < ambient_; ++c)
      if (!(res(c) == S(0))) return std::nullopt;
    return coords;
  }

  Eigen::Index pivot_of(std::size_t row_index) const { return pivcols_.at(row_index); }

  const std::vector<RowVec<S>>& rows() const { return rows_; }

  // Rows sorted by pivot column (canonical RREF matrix of the subspace).
  DMatrix<S> matrix() const {
    DMatrix<S> m(rank(), ambient_);
    Eigen::Index r = 0;
    for (const auto& [c, idx] : by_pivot_) m.row(r++) = rows_[idx];
    return m;
  }

  std::vector<Eigen::Index> pivots() const {
    std::vector<Eigen::Index> p;
    p.reserve(by_pivot_.size());
    for (const auto& [c, idx] : by_pivot_) p.push_back(c);
    return p;
  }

 private:
  Eigen::Index ambient_;
  std::vector<RowVec<S>> rows_;
  std::vector<Eigen::Index> pivcols_;             // pivot column of each row
  std::map<Eigen::Index, std::size_t> by_pivot_;  // pivot column -> row index
};

// A subspace in canonical form: RREF basis rows sorted by pivot.
template <class S>
struct SubspaceT {
  Eigen::Index ambient_dim = 0;
  DMatrix<S> basis;                   // rank x ambient_dim, RREF
  std::vector<Eigen::Index> pivots;   // pivot column of each basis row

  Eigen::Index rank() const { return basis.rows(); }

  bool contains(const RowVec<S>& v) const {
    RowVec<S> res = v;
    for (Eigen::Index r = 0; r < basis.rows(); ++r) {
      const S& c = res(pivots[static_cast<std::size_t>(r)]);
      if (!(c == S(0))) res -= c * basis.row(r);
    }
    for (Eigen::Index c = 0; c < ambient_dim; ++c)
      if (!(res(c) == S(0))) return false;
    return true;
  }

  static SubspaceT from_echelon(const EchelonBasis<S>& eb) {
    return SubspaceT{eb.ambient_dim(), eb.matrix(), eb.pivots()};
  }

  static SubspaceT from_rows(DMatrix<S> rows) {
    std::vector<Eigen::Index> piv = rref_in_place(rows);
    SubspaceT s;
    s.ambient_dim = rows.cols();
    s.basis = rows.topRows(static_cast<Eigen::Index>(piv.size()));
    s.pivots = std::move(piv);
    return s;
  }
};

using Subspace = SubspaceT<Rational>;

// A joint eigenspace of a commuting family: the eigenvalue tuple (one entry
// per matrix) and a column basis.
template <class S>
struct EigenspaceBlock {
  std::vector<S> eigenvalues;
  DMatrix<S> basis;  // ambient_dim x block_dim, columns form a basis
};

// Splits the ambient space into joint eigenspaces of a commuting family whose
// eigenvalues all lie in `candidates`.  Throws if the family is not
// simultaneously diagonalizable with those eigenvalues.
template <class S>
std::vector<EigenspaceBlock<S>> simultaneous_eigensplit(const std::vector<DMatrix<S>>& mats,
                                                        const std::vector<S>& candidates) {
  if (mats.empty()) throw std::invalid_argument("simultaneous_eigensplit: empty family");
  const Eigen::Index n = mats.front().rows();
  for (const auto& m : mats)
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("simultaneous_eigensplit: shape mismatch");

  std::vector<EigenspaceBlock<S>> blocks;
  blocks.push_back({{}, DMatrix<S>::Identity(n, n)});
  for (const auto& a : mats) {
    std::vector<EigenspaceBlock<S>> next;
    for (auto& blk : blocks) {
      const Eigen::Index d = blk.basis.cols();
      // Restriction M of `a` to the block: a * basis = basis * M, with basis
      // columns stored as RREF rows so coordinates read off pivot entries.
      DMatrix<S> rows = blk.basis.transpose();
      std::vector<Eigen::Index> piv = rref_in_place(rows);
      if (static_cast<Eigen::Index>(piv.size()) != d)
        fail(ErrorKind::Internal, "simultaneous_eigensplit: degenerate block basis");
      DMatrix<S> cbasis = rows.transpose();  // ambient x d, pivot-normalized
      DMatrix<S> image = a * cbasis;         // ambient x d
      DMatrix<S> restricted(d, d);
      for (Eigen::Index j = 0; j < d; ++j) {
        Vector<S> residual = image.col(j);
        for (Eigen::Index r = 0; r < d; ++r) {
          restricted(r, j) = residual(piv[static_cast<std::size_t>(r)]);
          if (!(restricted(r, j) == S(0))) residual -= restricted(r, j) * cbasis.col(r);
        }
        for (Eigen::Index i = 0; i < n; ++i)
          if (!(residual(i) == S(0)))
            fail(ErrorKind::NonDiagonalizable,
                 "simultaneous_eigensplit: family does not preserve a joint eigenspace");
      }
      Eigen::Index found = 0;
      for (const S& c : candidates) {
        DMatrix<S> shifted = restricted - c * DMatrix<S>::Identity(d, d);
        DMatrix<S> k = kernel_basis(shifted);
        if (k.cols() == 0) continue;
        found += k.cols();
        EigenspaceBlock<S> nb;
        nb.eigenvalues = blk.eigenvalues;
        nb.eigenvalues.push_back(c);
        nb.basis = cbasis * k;
        next.push_back(std::move(nb));
      }
      if (found != d)
        fail(ErrorKind::NonDiagonalizable,
             "simultaneous_eigensplit: not diagonalizable over the candidate eigenvalues");
    }
    blocks = std::move(next);
  }
  return blocks;
}

// Lexicographic comparison for exact vectors, for use as container keys.
template <class S>
struct VecLess {
  bool operator()(const Vector<S>& a, const Vector<S>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) < b(i)) return true;
      if (b(i) < a(i)) return false;
    }
    return false;
  }
};

using QVecLess = VecLess<Rational>;

}  // namespace liedense
