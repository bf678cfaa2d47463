#pragma once

// Finite-dimensional modules, bimodules and the constructions between them.
//
// Right modules are left modules over the opposite algebra: the action
// matrix of b is y -> y*b. Tensor products keep the plain tensor space
// (index l*rightDim + r) together with a fixed projection onto the balanced
// quotient and a section of it, so every canonical map is a literal matrix.

#include <vector>

#include "tring/algebra.hpp"

namespace tr {

class FdModule {
 public:
  FdModule(AlgebraPtr algebra, std::size_t dim, std::vector<Mat> action, bool check = true);

  static FdModule zero(AlgebraPtr algebra);
  /// The algebra as a left module over itself.
  static FdModule regular(AlgebraPtr algebra);
  /// The indecomposable projective A*e_s.
  static FdModule projective(AlgebraPtr algebra, std::size_t s);

  const AlgebraPtr& algebraPtr() const noexcept { return algebra_; }
  const Algebra& algebra() const noexcept { return *algebra_; }
  const Field& field() const noexcept { return algebra_->field(); }
  std::size_t dim() const noexcept { return dim_; }
  const Mat& action(std::size_t i) const { return action_[i]; }
  const std::vector<Mat>& actions() const noexcept { return action_; }
  /// Action of an arbitrary algebra element given in coordinates.
  Mat actionOf(const Vec& a) const;

  /// Throws Error(AxiomViolation) when the action is not multiplicative.
  void check() const;

 private:
  AlgebraPtr algebra_;
  std::size_t dim_;
  std::vector<Mat> action_;
};

/// A left-A, right-B bimodule. rightAction(b) is the matrix of m -> m*b.
class Bimodule {
 public:
  Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Mat> leftAction,
           std::vector<Mat> rightAction, bool check = true);

  static Bimodule zero(AlgebraPtr left, AlgebraPtr right);
  /// The algebra as a bimodule over itself.
  static Bimodule regular(AlgebraPtr algebra);

  const AlgebraPtr& leftAlgebra() const noexcept { return left_; }
  const AlgebraPtr& rightAlgebra() const noexcept { return right_; }
  const Field& field() const noexcept { return left_->field(); }
  std::size_t dim() const noexcept { return dim_; }
  const Mat& leftAction(std::size_t i) const { return leftAction_[i]; }
  const Mat& rightAction(std::size_t i) const { return rightAction_[i]; }
  const std::vector<Mat>& leftActions() const noexcept { return leftAction_; }
  const std::vector<Mat>& rightActions() const noexcept { return rightAction_; }

  FdModule asLeftModule() const;
  /// As a left module over `rightOp`, which must be the opposite of the right algebra.
  FdModule asRightModule(AlgebraPtr rightOp) const;
  /// Same space with the two sides exchanged, as a bimodule over the opposites.
  Bimodule swapped(AlgebraPtr rightOp, AlgebraPtr leftOp) const;

  void check() const;

 private:
  AlgebraPtr left_;
  AlgebraPtr right_;
  std::size_t dim_;
  std::vector<Mat> leftAction_;
  std::vector<Mat> rightAction_;
};

struct ModHom {
  FdModule source;
  FdModule target;
  Mat matrix;  // target.dim x source.dim

  /// Throws Error(AxiomViolation) if the matrix does not intertwine the actions.
  void check() const;
  bool isInjective() const;
  bool isSurjective() const;
};

/// True when the matrix intertwines the generator actions of the two modules.
bool isModuleMap(const FdModule& source, const FdModule& target, const Mat& matrix);

std::vector<ModHom> homBasis(const FdModule& x, const FdModule& y);
/// Dimension of Hom(X, Y) without materializing the basis.
std::size_t homDim(const FdModule& x, const FdModule& y);

struct SubmoduleResult {
  FdModule module;
  ModHom inclusion;
};
struct QuotientResult {
  FdModule module;
  ModHom projection;
  Mat section;  // source.dim x quotient.dim, projection * section = I
};

/// Submodule spanned by the (invariant) columns of `span`.
SubmoduleResult submodule(const FdModule& x, const Mat& span);
QuotientResult quotientModule(const FdModule& x, const Mat& span);

SubmoduleResult kernelMod(const ModHom& f);
QuotientResult cokernelMod(const ModHom& f);
SubmoduleResult imageMod(const ModHom& f);

FdModule directSumModules(const std::vector<FdModule>& parts, AlgebraPtr algebra);
/// rad(X) = J*X as a subspace (columns).
Mat radicalSubspace(const FdModule& x);
/// soc(X) = {x : J x = 0} as a subspace (columns).
Mat socleSubspace(const FdModule& x);

/// Balanced tensor space of a right module (actions rightActs, one per
/// generator) with a left module (leftActs); both over the same algebra.
QuotientData balancedTensor(const Field& field, std::size_t rightDim, const std::vector<Mat>& rightActs,
                            std::size_t leftDim, const std::vector<Mat>& leftActs);

struct TensorModule {
  FdModule module;  // over the left algebra of the first factor
  Mat proj;         // dim x (leftDim*rightDim)
  Mat section;      // (leftDim*rightDim) x dim
  std::size_t leftDim;
  std::size_t rightDim;
};
struct TensorBimodule {
  Bimodule bimodule;
  Mat proj;
  Mat section;
  std::size_t leftDim;
  std::size_t rightDim;
};
struct TensorSpace {
  std::size_t dim;
  Mat proj;
  Mat section;
};

/// M (x)_R X for an (S,R)-bimodule M and a left R-module X.
TensorModule tensorOverAlgebra(const Bimodule& m, const FdModule& x);
/// M (x)_R N for an (S,R)-bimodule M and an (R,U)-bimodule N.
TensorBimodule tensorOverAlgebra(const Bimodule& m, const Bimodule& n);
/// Y (x)_R M for a right R-module Y (over R^op) and an (R,S)-bimodule M;
/// the result is a right S-module, i.e. a module over `rightOp` = S^op.
TensorModule tensorOverAlgebra(const FdModule& yRight, const Bimodule& m, AlgebraPtr rightOp);
/// Y (x)_R X as a vector space.
TensorSpace tensorOverAlgebra(const FdModule& yRight, const FdModule& x);

/// M (x) f for a module map f: X -> X', relative to the given tensor data.
Mat tensorMap(const Bimodule& m, const TensorModule& mx, const TensorModule& mxPrime, const Mat& f);

/// Hom_{R^op}(M, Y) for an (S,R)-bimodule M and a right R-module Y.
/// Elements are dimY x dimM matrices flattened row-major into `basis` columns;
/// the right S-action is (f*s)(m) = f(s*m).
struct HomModule {
  FdModule module;  // over S^op
  Mat basis;        // (dimY*dimM) x dim
  Mat coords;       // left inverse of basis
  std::size_t targetDim;
  std::size_t sourceDim;

  /// Coordinates of a map given as a targetDim x sourceDim matrix.
  Vec coordinatesOf(const Mat& map) const;
  /// The map with coordinate vector c, as a targetDim x sourceDim matrix.
  Mat mapOf(std::span<const Scalar> c) const;
};
HomModule homFromRight(const Bimodule& m, const FdModule& yRight, AlgebraPtr leftOp);

/// Field dual: transposed action, over the opposite algebra.
FdModule kDual(const FdModule& x, AlgebraPtr opposite = nullptr);
ModHom kDualMap(const ModHom& f, const FdModule& dualSource, const FdModule& dualTarget);

}  // namespace tr
