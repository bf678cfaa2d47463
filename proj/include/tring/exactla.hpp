#pragma once

// Dense exact linear algebra over prime fields F_p.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tring/error.hpp"

namespace tr {

using Scalar = std::uint32_t;
using Vec = std::vector<Scalar>;

/// The prime field F_p. Residues are kept in [0, p).
class Field {
 public:
  explicit Field(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  Scalar add(Scalar a, Scalar b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Scalar>(s >= p_ ? s - p_ : s);
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>((std::uint64_t{a} * b) % p_);
  }
  Scalar inv(Scalar a) const;
  Scalar reduce(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint32_t p_;
};

bool isPrime(std::uint64_t n);

/// Row-major dense matrix over a prime field.
class Mat {
 public:
  Mat(Field field, std::size_t rows, std::size_t cols);
  Mat(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Mat zeros(Field field, std::size_t rows, std::size_t cols) { return Mat(field, rows, cols); }
  static Mat identity(Field field, std::size_t n);
  /// Entries are reduced mod p; all rows must have equal length.
  static Mat fromRows(Field field, const std::vector<std::vector<long long>>& rows);
  static Mat fromColumns(Field field, std::size_t rows, const std::vector<Vec>& cols);
  static Mat columnVector(Field field, const Vec& v);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Scalar>& entries() const noexcept { return data_; }

  Vec col(std::size_t c) const;
  void setCol(std::size_t c, std::span<const Scalar> v);
  bool isZero() const;

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void setBlock(std::size_t r0, std::size_t c0, const Mat& b);
  Mat columns(std::size_t c0, std::size_t nc) const { return block(0, c0, rows_, nc); }
  Mat selectColumns(std::span<const std::size_t> idx) const;

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Mat reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Mat& a);
std::size_t rank(const Mat& a);

/// Columns span the null space of `a`; cols(result) = cols(a) - rank(a).
Mat kernelBasis(const Mat& a);
/// Canonical basis of the column space (columns of the transposed rref).
Mat imageBasis(const Mat& a);

/// Realizes F^n / span(sub) with a fixed complement: the quotient basis is the
/// standard vectors at the non-pivot positions of rref(sub^T).
struct QuotientData {
  Mat proj;     // q x n, surjective, kernel = span(sub)
  Mat section;  // n x q, proj * section = I_q
};
QuotientData quotientData(std::size_t ambientDim, const Mat& sub);

std::optional<Vec> solveLinear(const Mat& a, const Vec& b);
/// For a matrix with linearly independent columns, returns L with L * b = I.
Mat leftInverse(const Mat& b);
/// Inverse of a square invertible matrix; throws otherwise.
Mat inverse(const Mat& a);

Mat matMul(const Mat& a, const Mat& b);
Vec matVec(const Mat& a, std::span<const Scalar> v);
Mat add(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);
Mat scale(const Mat& a, Scalar s);
Mat negate(const Mat& a);
Mat transpose(const Mat& a);
Mat directSum(const Mat& a, const Mat& b);
Mat directSum(std::span<const Mat> blocks);
Mat kroneckerProduct(const Mat& a, const Mat& b);
Mat hstack(std::span<const Mat> blocks);
Mat vstack(std::span<const Mat> blocks);

/// Incrementally maintained reduced row echelon basis of a subspace of F^n.
class EchelonBasis {
 public:
  EchelonBasis(Field field, std::size_t n);

  /// Returns true when v enlarged the span.
  bool add(std::span<const Scalar> v);
  bool contains(std::span<const Scalar> v) const;
  /// Reduces v against the stored rows in place.
  void reduce(std::span<Scalar> v) const;
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t ambient() const noexcept { return n_; }
  /// Rows sorted by pivot; equals rref of any matrix whose rows span the space.
  RrefResult toRref() const;
  /// Null space of any matrix whose rows span this space (columns).
  Mat nullSpace() const;
  /// Quotient of F^n by this space, as in quotientData.
  QuotientData quotient() const;

 private:
  Field field_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace tr
