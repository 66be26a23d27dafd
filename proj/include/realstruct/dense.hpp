#pragma once

#include <Eigen/Dense>

#include "realstruct/rational.hpp"

namespace realstruct {

using Index = Eigen::Index;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using BoolMatrix = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;
using BoolVector = Eigen::Array<bool, Eigen::Dynamic, 1>;

template <typename Scalar>
using SquareMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename DerivedA, typename DerivedB>
bool entrywise_leq(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return (a.array() <= b.array()).all();
}

template <typename DerivedA, typename DerivedB>
bool entrywise_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return (a.array() == b.array()).all();
}

template <typename Derived>
bool is_symmetric_dense(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

inline RationalMatrix zero_matrix(Index n) {
  return RationalMatrix::Constant(n, n, Rational(0));
}

inline RationalMatrix constant_matrix(Index n, const Rational& v) {
  return RationalMatrix::Constant(n, n, v);
}

// Subset inclusion on characteristic vectors/matrices: a implies b.
inline bool mask_subset(const BoolVector& a, const BoolVector& b) { return (!a || b).all(); }
inline bool mask_subset(const BoolMatrix& a, const BoolMatrix& b) { return (!a || b).all(); }

}  // namespace realstruct
