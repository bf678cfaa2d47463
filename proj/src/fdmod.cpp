#include "tring/fdmod.hpp"

namespace tr {

namespace {

Mat combination(const Field& f, std::size_t dim, const std::vector<Mat>& mats, const Vec& coeffs) {
  Mat out(f, dim, dim);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) out = add(out, coeffs[i] == 1 ? mats[i] : scale(mats[i], coeffs[i]));
  }
  return out;
}

// Checks rho(g) rho(b_j) = rho(g b_j) (or rho(b_j g) for right actions) for
// every generator g and basis element b_j, and rho(1) = I. Generators
// suffice because the relation propagates along words in them.
void checkAction(const Algebra& a, std::size_t dim, const std::vector<Mat>& act, bool rightAction, const char* what) {
  const Field& f = a.field();
  if (act.size() != a.dim()) throw Error(ErrorKind::AxiomViolation, std::string(what) + ": wrong number of action matrices");
  for (const Mat& m : act) {
    if (m.rows() != dim || m.cols() != dim) throw Error(ErrorKind::AxiomViolation, std::string(what) + ": action matrix has wrong shape");
    if (!(m.field() == f)) throw Error(ErrorKind::FieldMismatch, std::string(what) + ": action over a different field");
  }
  if (combination(f, dim, act, a.unit()) != Mat::identity(f, dim)) {
    throw Error(ErrorKind::AxiomViolation, std::string(what) + ": unit does not act as the identity");
  }
  for (const Vec& g : a.generators()) {
    Mat rg = combination(f, dim, act, g);
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec prod = rightAction ? a.multiply(a.basisVector(j), g) : a.multiply(g, a.basisVector(j));
      if (matMul(rg, act[j]) != combination(f, dim, act, prod)) {
        throw Error(ErrorKind::AxiomViolation, std::string(what) + ": action is not multiplicative at " + a.labels()[j]);
      }
    }
  }
}

std::vector<Mat> generatorActions(const FdModule& x) {
  std::vector<Mat> out;
  for (const Vec& g : x.algebra().generators()) out.push_back(x.actionOf(g));
  return out;
}

std::vector<Mat> generatorActions(const Algebra& a, std::size_t dim, const std::vector<Mat>& act) {
  std::vector<Mat> out;
  for (const Vec& g : a.generators()) out.push_back(combination(a.field(), dim, act, g));
  return out;
}

// Basis of {F : F srcAct(g) = tgtAct(g) F for all g}, F flattened row-major
// (tgtDim x srcDim) into columns.
EchelonBasis intertwinerSystem(const Field& f, std::size_t srcDim, const std::vector<Mat>& srcActs, std::size_t tgtDim,
                               const std::vector<Mat>& tgtActs) {
  const std::size_t n = srcDim * tgtDim;
  EchelonBasis eb(f, n);
  Vec row(n);
  for (std::size_t g = 0; g < srcActs.size(); ++g) {
    const Mat& a = tgtActs[g];
    const Mat& b = srcActs[g];
    for (std::size_t i = 0; i < tgtDim; ++i) {
      for (std::size_t j = 0; j < srcDim; ++j) {
        std::fill(row.begin(), row.end(), 0);
        for (std::size_t k = 0; k < tgtDim; ++k) {
          if (a(i, k) != 0) row[k * srcDim + j] = f.add(row[k * srcDim + j], a(i, k));
        }
        for (std::size_t k = 0; k < srcDim; ++k) {
          if (b(k, j) != 0) row[i * srcDim + k] = f.sub(row[i * srcDim + k], b(k, j));
        }
        eb.add(row);
        if (eb.rank() == n) return eb;
      }
    }
  }
  return eb;
}

Mat unflatten(const Field& f, std::span<const Scalar> v, std::size_t rows, std::size_t cols) {
  return Mat(f, rows, cols, std::vector<Scalar>(v.begin(), v.end()));
}

// (L (x) I_d) * s, where s has rows indexed by (l, r) = l*d + r.
Mat leftKronApply(const Mat& l, std::size_t d, const Mat& s) {
  const Field& f = s.field();
  Mat out(f, l.rows() * d, s.cols());
  for (std::size_t a = 0; a < l.rows(); ++a) {
    for (std::size_t b = 0; b < l.cols(); ++b) {
      Scalar c = l(a, b);
      if (c == 0) continue;
      for (std::size_t r = 0; r < d; ++r) {
        auto src = s.row(b * d + r);
        auto dst = out.row(a * d + r);
        for (std::size_t k = 0; k < s.cols(); ++k) {
          if (src[k] != 0) dst[k] = f.add(dst[k], f.mul(c, src[k]));
        }
      }
    }
  }
  return out;
}

// (I_d (x) R) * s, where s has rows indexed by (l, r) = l*R.cols() + r.
Mat rightKronApply(std::size_t d, const Mat& r, const Mat& s) {
  const Field& f = s.field();
  Mat out(f, d * r.rows(), s.cols());
  for (std::size_t l = 0; l < d; ++l) {
    for (std::size_t a = 0; a < r.rows(); ++a) {
      auto dst = out.row(l * r.rows() + a);
      for (std::size_t b = 0; b < r.cols(); ++b) {
        Scalar c = r(a, b);
        if (c == 0) continue;
        auto src = s.row(l * r.cols() + b);
        for (std::size_t k = 0; k < s.cols(); ++k) {
          if (src[k] != 0) dst[k] = f.add(dst[k], f.mul(c, src[k]));
        }
      }
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- FdModule

FdModule::FdModule(AlgebraPtr algebra, std::size_t dim, std::vector<Mat> action, bool checkAxioms)
    : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)) {
  if (!algebra_) throw Error(ErrorKind::InvalidInput, "module without algebra");
  if (checkAxioms) check();
}

FdModule FdModule::zero(AlgebraPtr algebra) {
  std::vector<Mat> act(algebra->dim(), Mat(algebra->field(), 0, 0));
  return FdModule(std::move(algebra), 0, std::move(act), false);
}

FdModule FdModule::regular(AlgebraPtr algebra) {
  std::vector<Mat> act = algebra->leftMulAll();
  std::size_t d = algebra->dim();
  return FdModule(std::move(algebra), d, std::move(act), false);
}

FdModule FdModule::projective(AlgebraPtr algebra, std::size_t s) {
  const IndecomposableProjective& p = algebra->projective(s);
  std::size_t d = p.basis.cols();
  std::vector<Mat> act = p.action;
  return FdModule(std::move(algebra), d, std::move(act), false);
}

Mat FdModule::actionOf(const Vec& a) const { return combination(field(), dim_, action_, a); }

void FdModule::check() const { checkAction(*algebra_, dim_, action_, false, "module"); }

// ---------------------------------------------------------------- Bimodule

Bimodule::Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Mat> leftAction,
                   std::vector<Mat> rightAction, bool checkAxioms)
    : left_(std::move(left)), right_(std::move(right)), dim_(dim), leftAction_(std::move(leftAction)),
      rightAction_(std::move(rightAction)) {
  if (!left_ || !right_) throw Error(ErrorKind::InvalidInput, "bimodule without algebras");
  if (!(left_->field() == right_->field())) throw Error(ErrorKind::FieldMismatch, "bimodule over different fields");
  if (checkAxioms) check();
}

Bimodule Bimodule::zero(AlgebraPtr left, AlgebraPtr right) {
  const Field f = left->field();
  std::vector<Mat> l(left->dim(), Mat(f, 0, 0));
  std::vector<Mat> r(right->dim(), Mat(f, 0, 0));
  return Bimodule(std::move(left), std::move(right), 0, std::move(l), std::move(r), false);
}

Bimodule Bimodule::regular(AlgebraPtr algebra) {
  std::vector<Mat> l, r;
  for (std::size_t i = 0; i < algebra->dim(); ++i) {
    l.push_back(algebra->leftMul(i));
    r.push_back(algebra->rightMul(i));
  }
  std::size_t d = algebra->dim();
  return Bimodule(algebra, algebra, d, std::move(l), std::move(r), false);
}

FdModule Bimodule::asLeftModule() const { return FdModule(left_, dim_, leftAction_, false); }

FdModule Bimodule::asRightModule(AlgebraPtr rightOp) const {
  if (rightOp->dim() != right_->dim()) throw Error(ErrorKind::AlgebraMismatch, "asRightModule: not the opposite algebra");
  return FdModule(std::move(rightOp), dim_, rightAction_, false);
}

Bimodule Bimodule::swapped(AlgebraPtr rightOp, AlgebraPtr leftOp) const {
  return Bimodule(std::move(rightOp), std::move(leftOp), dim_, rightAction_, leftAction_, false);
}

void Bimodule::check() const {
  checkAction(*left_, dim_, leftAction_, false, "bimodule left action");
  checkAction(*right_, dim_, rightAction_, true, "bimodule right action");
  auto lg = generatorActions(*left_, dim_, leftAction_);
  auto rg = generatorActions(*right_, dim_, rightAction_);
  for (const Mat& l : lg) {
    for (const Mat& r : rg) {
      if (matMul(l, r) != matMul(r, l)) throw Error(ErrorKind::AxiomViolation, "bimodule actions do not commute");
    }
  }
}

// ---------------------------------------------------------------- homs

bool isModuleMap(const FdModule& source, const FdModule& target, const Mat& matrix) {
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) return false;
  for (const Vec& g : source.algebra().generators()) {
    if (matMul(matrix, source.actionOf(g)) != matMul(target.actionOf(g), matrix)) return false;
  }
  return true;
}

void ModHom::check() const {
  requireSameAlgebra(source.algebraPtr(), target.algebraPtr(), "ModHom: source and target over different algebras");
  if (!isModuleMap(source, target, matrix)) throw Error(ErrorKind::AxiomViolation, "matrix is not a module homomorphism");
}

bool ModHom::isInjective() const { return rank(matrix) == source.dim(); }
bool ModHom::isSurjective() const { return rank(matrix) == target.dim(); }

std::vector<ModHom> homBasis(const FdModule& x, const FdModule& y) {
  requireSameAlgebra(x.algebraPtr(), y.algebraPtr(), "homBasis: modules over different algebras");
  EchelonBasis eb = intertwinerSystem(x.field(), x.dim(), generatorActions(x), y.dim(), generatorActions(y));
  Mat k = eb.nullSpace();
  std::vector<ModHom> out;
  for (std::size_t c = 0; c < k.cols(); ++c) {
    Vec v = k.col(c);
    out.push_back({x, y, unflatten(x.field(), v, y.dim(), x.dim())});
  }
  return out;
}

std::size_t homDim(const FdModule& x, const FdModule& y) {
  requireSameAlgebra(x.algebraPtr(), y.algebraPtr(), "homDim: modules over different algebras");
  EchelonBasis eb = intertwinerSystem(x.field(), x.dim(), generatorActions(x), y.dim(), generatorActions(y));
  return x.dim() * y.dim() - eb.rank();
}

// ---------------------------------------------------------------- sub/quotients

SubmoduleResult submodule(const FdModule& x, const Mat& span) {
  Mat basis = imageBasis(span);
  Mat inv = leftInverse(basis);
  std::vector<Mat> act;
  act.reserve(x.actions().size());
  for (const Mat& a : x.actions()) act.push_back(matMul(inv, matMul(a, basis)));
  for (const Vec& g : x.algebra().generators()) {
    Mat moved = matMul(x.actionOf(g), basis);
    if (matMul(basis, matMul(inv, moved)) != moved) {
      throw Error(ErrorKind::AxiomViolation, "submodule: subspace is not invariant");
    }
  }
  FdModule sub(x.algebraPtr(), basis.cols(), std::move(act), false);
  ModHom inc{sub, x, basis};
  return {std::move(sub), std::move(inc)};
}

QuotientResult quotientModule(const FdModule& x, const Mat& span) {
  QuotientData qd = quotientData(x.dim(), span);
  std::vector<Mat> act;
  act.reserve(x.actions().size());
  for (const Mat& a : x.actions()) act.push_back(matMul(qd.proj, matMul(a, qd.section)));
  FdModule q(x.algebraPtr(), qd.proj.rows(), std::move(act), false);
  ModHom proj{x, q, qd.proj};
  return {std::move(q), std::move(proj), std::move(qd.section)};
}

SubmoduleResult kernelMod(const ModHom& f) { return submodule(f.source, kernelBasis(f.matrix)); }
QuotientResult cokernelMod(const ModHom& f) { return quotientModule(f.target, f.matrix); }
SubmoduleResult imageMod(const ModHom& f) { return submodule(f.target, f.matrix); }

FdModule directSumModules(const std::vector<FdModule>& parts, AlgebraPtr algebra) {
  std::size_t d = 0;
  for (const FdModule& p : parts) {
    requireSameAlgebra(p.algebraPtr(), algebra, "directSumModules: summand over a different algebra");
    d += p.dim();
  }
  std::vector<Mat> act;
  for (std::size_t i = 0; i < algebra->dim(); ++i) {
    Mat m(algebra->field(), d, d);
    std::size_t off = 0;
    for (const FdModule& p : parts) {
      m.setBlock(off, off, p.action(i));
      off += p.dim();
    }
    act.push_back(std::move(m));
  }
  return FdModule(std::move(algebra), d, std::move(act), false);
}

Mat radicalSubspace(const FdModule& x) {
  std::vector<Mat> parts;
  for (const Vec& r : x.algebra().radical()) parts.push_back(x.actionOf(r));
  if (parts.empty() || x.dim() == 0) return Mat(x.field(), x.dim(), 0);
  return imageBasis(hstack(parts));
}

Mat socleSubspace(const FdModule& x) {
  std::vector<Mat> parts;
  for (const Vec& r : x.algebra().radical()) parts.push_back(x.actionOf(r));
  if (parts.empty()) return Mat::identity(x.field(), x.dim());
  return kernelBasis(vstack(parts));
}

// ---------------------------------------------------------------- tensors

QuotientData balancedTensor(const Field& f, std::size_t rightDim, const std::vector<Mat>& rightActs,
                            std::size_t leftDim, const std::vector<Mat>& leftActs) {
  const std::size_t n = rightDim * leftDim;
  EchelonBasis rel(f, n);
  Vec v(n);
  for (std::size_t g = 0; g < rightActs.size(); ++g) {
    const Mat& r = rightActs[g];
    const Mat& l = leftActs[g];
    for (std::size_t m = 0; m < rightDim; ++m) {
      for (std::size_t x = 0; x < leftDim; ++x) {
        std::fill(v.begin(), v.end(), 0);
        // (m.g) (x) x  -  m (x) (g.x)
        for (std::size_t mp = 0; mp < rightDim; ++mp) {
          if (r(mp, m) != 0) v[mp * leftDim + x] = f.add(v[mp * leftDim + x], r(mp, m));
        }
        for (std::size_t xp = 0; xp < leftDim; ++xp) {
          if (l(xp, x) != 0) v[m * leftDim + xp] = f.sub(v[m * leftDim + xp], l(xp, x));
        }
        rel.add(v);
        if (rel.rank() == n) return rel.quotient();
      }
    }
  }
  return rel.quotient();
}

TensorModule tensorOverAlgebra(const Bimodule& m, const FdModule& x) {
  requireSameAlgebra(m.rightAlgebra(), x.algebraPtr(), "tensorOverAlgebra: right algebra of M differs from algebra of X");
  const Algebra& r = *m.rightAlgebra();
  QuotientData qd = balancedTensor(m.field(), m.dim(), generatorActions(r, m.dim(), m.rightActions()), x.dim(),
                                   generatorActions(x));
  std::vector<Mat> act;
  for (const Mat& l : m.leftActions()) act.push_back(matMul(qd.proj, leftKronApply(l, x.dim(), qd.section)));
  std::size_t d = qd.proj.rows();
  return {FdModule(m.leftAlgebra(), d, std::move(act), false), std::move(qd.proj), std::move(qd.section), m.dim(),
          x.dim()};
}

TensorBimodule tensorOverAlgebra(const Bimodule& m, const Bimodule& n) {
  requireSameAlgebra(m.rightAlgebra(), n.leftAlgebra(), "tensorOverAlgebra: bimodule algebras do not match");
  const Algebra& r = *m.rightAlgebra();
  QuotientData qd = balancedTensor(m.field(), m.dim(), generatorActions(r, m.dim(), m.rightActions()), n.dim(),
                                   generatorActions(r, n.dim(), n.leftActions()));
  std::vector<Mat> left, right;
  for (const Mat& l : m.leftActions()) left.push_back(matMul(qd.proj, leftKronApply(l, n.dim(), qd.section)));
  for (const Mat& rr : n.rightActions()) right.push_back(matMul(qd.proj, rightKronApply(m.dim(), rr, qd.section)));
  std::size_t d = qd.proj.rows();
  return {Bimodule(m.leftAlgebra(), n.rightAlgebra(), d, std::move(left), std::move(right), false), std::move(qd.proj),
          std::move(qd.section), m.dim(), n.dim()};
}

TensorModule tensorOverAlgebra(const FdModule& yRight, const Bimodule& m, AlgebraPtr rightOp) {
  const Algebra& r = *m.leftAlgebra();
  if (yRight.algebra().dim() != r.dim()) throw Error(ErrorKind::AlgebraMismatch, "tensorOverAlgebra: Y is not over R^op");
  QuotientData qd = balancedTensor(m.field(), yRight.dim(), generatorActions(r, yRight.dim(), yRight.actions()), m.dim(),
                                   generatorActions(r, m.dim(), m.leftActions()));
  std::vector<Mat> act;
  for (const Mat& rr : m.rightActions()) act.push_back(matMul(qd.proj, rightKronApply(yRight.dim(), rr, qd.section)));
  std::size_t d = qd.proj.rows();
  return {FdModule(std::move(rightOp), d, std::move(act), false), std::move(qd.proj), std::move(qd.section),
          yRight.dim(), m.dim()};
}

TensorSpace tensorOverAlgebra(const FdModule& yRight, const FdModule& x) {
  if (yRight.algebra().dim() != x.algebra().dim()) {
    throw Error(ErrorKind::AlgebraMismatch, "tensorOverAlgebra: right module and left module over different algebras");
  }
  QuotientData qd = balancedTensor(x.field(), yRight.dim(), generatorActions(x.algebra(), yRight.dim(), yRight.actions()),
                                   x.dim(), generatorActions(x));
  std::size_t d = qd.proj.rows();
  return {d, std::move(qd.proj), std::move(qd.section)};
}

Mat tensorMap(const Bimodule& m, const TensorModule& mx, const TensorModule& mxPrime, const Mat& f) {
  return matMul(mxPrime.proj, rightKronApply(m.dim(), f, mx.section));
}

// ---------------------------------------------------------------- Hom from right

Vec HomModule::coordinatesOf(const Mat& map) const { return matVec(coords, map.entries()); }

Mat HomModule::mapOf(std::span<const Scalar> c) const {
  return unflatten(basis.field(), matVec(basis, c), targetDim, sourceDim);
}

HomModule homFromRight(const Bimodule& m, const FdModule& yRight, AlgebraPtr leftOp) {
  const Algebra& r = *m.rightAlgebra();
  if (yRight.algebra().dim() != r.dim()) throw Error(ErrorKind::AlgebraMismatch, "homFromRight: Y is not over R^op");
  const Field& f = m.field();
  EchelonBasis eb = intertwinerSystem(f, m.dim(), generatorActions(r, m.dim(), m.rightActions()), yRight.dim(),
                                      generatorActions(r, yRight.dim(), yRight.actions()));
  Mat basis = eb.nullSpace();
  Mat coords = leftInverse(basis);
  std::vector<Mat> act;
  for (const Mat& l : m.leftActions()) {
    Mat a(f, basis.cols(), basis.cols());
    for (std::size_t c = 0; c < basis.cols(); ++c) {
      Mat fc = unflatten(f, basis.col(c), yRight.dim(), m.dim());
      a.setCol(c, matVec(coords, matMul(fc, l).entries()));
    }
    act.push_back(std::move(a));
  }
  std::size_t d = basis.cols();
  return {FdModule(std::move(leftOp), d, std::move(act), false), std::move(basis), std::move(coords), yRight.dim(),
          m.dim()};
}

// ---------------------------------------------------------------- duality

FdModule kDual(const FdModule& x, AlgebraPtr opposite) {
  if (!opposite) opposite = x.algebra().opposite();
  if (opposite->dim() != x.algebra().dim()) throw Error(ErrorKind::AlgebraMismatch, "kDual: not the opposite algebra");
  std::vector<Mat> act;
  act.reserve(x.actions().size());
  for (const Mat& a : x.actions()) act.push_back(transpose(a));
  return FdModule(std::move(opposite), x.dim(), std::move(act), false);
}

ModHom kDualMap(const ModHom& f, const FdModule& dualSource, const FdModule& dualTarget) {
  // D(f): D(target) -> D(source).
  return {dualTarget, dualSource, transpose(f.matrix)};
}

}  // namespace tr
