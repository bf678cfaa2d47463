#pragma once

// Finite-dimensional associative algebras given by structure constants,
// plus constructors for monomial path-algebra quotients, opposites and
// direct products.
//
// Path convention: in a product q*p the path p acts first, and q*p is
// nonzero only when target(p) = source(q). The left ideal A*e_s is spanned
// by the paths starting at s.

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "tring/exactla.hpp"

namespace tr {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// The indecomposable projective A*e_s, realized inside the regular module.
struct IndecomposableProjective {
  Mat basis;                // dim(A) x d, columns in algebra coordinates
  std::vector<Mat> action;  // left action of each algebra basis element
  Vec generator;            // coordinates of e_s in `basis`
};

class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  struct Data {
    Field field;
    std::vector<std::string> labels;
    /// structConst[(i*dim + j)*dim + l] = coordinate l of b_i * b_j.
    std::vector<Scalar> structConst;
    Vec unit;
    std::vector<Vec> idempotents;
    std::vector<Vec> radical;
  };

  /// Validates every algebra axiom; throws Error(AxiomViolation) otherwise.
  static AlgebraPtr create(Data data);

  const Field& field() const noexcept { return data_.field; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return data_.labels; }
  const Vec& unit() const noexcept { return data_.unit; }
  const std::vector<Vec>& idempotents() const noexcept { return data_.idempotents; }
  std::size_t idempotentCount() const noexcept { return data_.idempotents.size(); }
  const std::vector<Vec>& radical() const noexcept { return data_.radical; }
  const std::vector<Scalar>& structConst() const noexcept { return data_.structConst; }
  const Data& data() const noexcept { return data_; }

  Scalar constant(std::size_t i, std::size_t j, std::size_t l) const {
    return data_.structConst[(i * dim_ + j) * dim_ + l];
  }
  Vec basisProduct(std::size_t i, std::size_t j) const;
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec basisVector(std::size_t i) const;

  /// Left regular action of b_i.
  const Mat& leftMul(std::size_t i) const { return leftMul_[i]; }
  const std::vector<Mat>& leftMulAll() const noexcept { return leftMul_; }
  /// Right regular action x -> x * b_i.
  const Mat& rightMul(std::size_t i) const { return rightMul_[i]; }

  /// Elements generating the algebra: the idempotents, lifts of a basis of
  /// J/J^2, and lifts completing a basis of A/(J + span of idempotents).
  const std::vector<Vec>& generators() const noexcept { return generators_; }

  const IndecomposableProjective& projective(std::size_t s) const { return projectives_[s]; }

  /// Structural equality of field and multiplication table.
  bool sameStructure(const Algebra& other) const;
  /// FNV-1a digest of the field and table, as 16 hex digits.
  std::string digest() const;

  /// The opposite algebra; built once and cached.
  AlgebraPtr opposite() const;

 private:
  explicit Algebra(Data data);
  void validate() const;
  void computeDerived();

  Data data_;
  std::size_t dim_;
  std::vector<Mat> leftMul_;
  std::vector<Mat> rightMul_;
  std::vector<Vec> generators_;
  std::vector<IndecomposableProjective> projectives_;
  mutable std::mutex oppositeMutex_;
  mutable AlgebraPtr opposite_;
};

/// Same algebra object, or identical structure.
bool sameAlgebra(const AlgebraPtr& a, const AlgebraPtr& b);
void requireSameAlgebra(const AlgebraPtr& a, const AlgebraPtr& b, const char* context);

struct Arrow {
  std::string name;
  std::size_t source;  // 0-based
  std::size_t target;
};

struct Quiver {
  std::size_t vertexCount = 0;
  std::vector<Arrow> arrows;
};

/// Paths are listed in traversal order: {"a","b"} means a first, then b.
using MonomialRelation = std::vector<std::string>;

struct PathAlgebraOptions {
  std::size_t pathCap = 10000;
};

AlgebraPtr buildPathAlgebra(Field field, const Quiver& q, const std::vector<MonomialRelation>& relations,
                            PathAlgebraOptions options = {});

/// Cyclic quiver 1 -> 2 -> ... -> n -> 1 modulo all paths of length h.
AlgebraPtr cyclicNakayama(Field field, std::size_t n, std::size_t h);

AlgebraPtr oppositeAlgebra(const Algebra& a);
AlgebraPtr directProductAlgebra(const Algebra& a, const Algebra& b);

/// Span of the radical basis as matrix columns.
Mat radicalMatrix(const Algebra& a);

}  // namespace tr
