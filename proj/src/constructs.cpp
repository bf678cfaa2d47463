#include "tring/constructs.hpp"

namespace tr {

namespace {

// e_t R as a right module, i.e. a module over R^op.
FdModule rightIdeal(const AlgebraPtr& r, std::size_t t) {
  Mat basis = imageBasis(FdModule::regular(r).actionOf(r->idempotents()[t]));
  Mat inv = leftInverse(basis);
  std::vector<Mat> act;
  for (std::size_t b = 0; b < r->dim(); ++b) act.push_back(matMul(inv, matMul(r->rightMul(b), basis)));
  return FdModule(r->opposite(), basis.cols(), std::move(act), false);
}

}  // namespace

Bimodule outerBimodule(const AlgebraPtr& r, const AlgebraPtr& s, const FdModule& x, const FdModule& yRight) {
  requireSameAlgebra(x.algebraPtr(), r, "outerBimodule: X is not over the left algebra");
  if (yRight.algebra().dim() != s->dim()) throw Error(ErrorKind::AlgebraMismatch, "outerBimodule: Y is not over S^op");
  const Field& f = r->field();
  Mat ix = Mat::identity(f, x.dim()), iy = Mat::identity(f, yRight.dim());
  std::vector<Mat> left, right;
  for (const Mat& a : x.actions()) left.push_back(kroneckerProduct(a, iy));
  for (const Mat& b : yRight.actions()) right.push_back(kroneckerProduct(ix, b));
  return Bimodule(r, s, x.dim() * yRight.dim(), std::move(left), std::move(right), true);
}

Bimodule cornerBimodule(const AlgebraPtr& r, std::size_t s, std::size_t t) {
  if (s >= r->idempotentCount() || t >= r->idempotentCount()) {
    throw Error(ErrorKind::InvalidInput, "cornerBimodule: vertex out of range");
  }
  return outerBimodule(r, r, FdModule::projective(r, s), rightIdeal(r, t));
}

FdModule simpleModule(const AlgebraPtr& a, std::size_t s) {
  FdModule p = FdModule::projective(a, s);
  return quotientModule(p, radicalSubspace(p)).module;
}

Bimodule simpleProductBimodule(const AlgebraPtr& r, std::size_t s, std::size_t t) {
  return outerBimodule(r, r, simpleModule(r, s), simpleModule(r->opposite(), t));
}

AlgebraBimodule exampleQNak(Field field, std::size_t n, std::size_t h, std::size_t i, std::size_t j, bool reversed) {
  if (h < 2 || h > n) throw Error(ErrorKind::PreconditionViolated, "qnak: need 2 <= h <= n");
  if (i < 1 || i >= j || j > n) throw Error(ErrorKind::PreconditionViolated, "qnak: need 1 <= i < j <= n");
  if (j - i < h) {
    throw Error(ErrorKind::PreconditionViolated,
                "qnak: need j - i >= h (otherwise e_j R e_i is nonzero and M (x) M does not vanish)");
  }
  AlgebraPtr r = cyclicNakayama(field, n, h);
  Bimodule m = reversed ? cornerBimodule(r, j - 1, i - 1) : cornerBimodule(r, i - 1, j - 1);
  if (tensorOverAlgebra(m, m).bimodule.dim() != 0) {
    throw Error(ErrorKind::PreconditionViolated, "qnak: M (x)_R M is nonzero for this index order");
  }
  return {std::move(r), std::move(m)};
}

AlgebraBimodule arrowBimodule(Field field, const Quiver& q) {
  AlgebraPtr k = buildPathAlgebra(field, Quiver{q.vertexCount, {}}, {});
  const std::size_t n = q.vertexCount, d = q.arrows.size();
  std::vector<Mat> left, right;
  for (std::size_t v = 0; v < n; ++v) {
    Mat l(field, d, d), r(field, d, d);
    for (std::size_t a = 0; a < d; ++a) {
      if (q.arrows[a].target == v) l(a, a) = 1;
      if (q.arrows[a].source == v) r(a, a) = 1;
    }
    left.push_back(std::move(l));
    right.push_back(std::move(r));
  }
  Bimodule m(k, k, d, std::move(left), std::move(right), true);
  return {std::move(k), std::move(m)};
}

AlgebraPtr trivialExtension(const AlgebraPtr& r, const Bimodule& m) {
  requireSameAlgebra(m.leftAlgebra(), r, "trivialExtension: M is not an R-bimodule");
  requireSameAlgebra(m.rightAlgebra(), r, "trivialExtension: M is not an R-bimodule");
  std::size_t mm = tensorOverAlgebra(m, m).bimodule.dim();
  if (mm != 0) throw Error(ErrorKind::NotOneNilpotent, "trivialExtension: dim M (x)_R M = " + std::to_string(mm));
  return buildTensorRing(tensorPowers(r, m, 1));
}

// ---------------------------------------------------------------- Morita

MoritaRing moritaContextRing(const AlgebraPtr& a, const AlgebraPtr& b, const Bimodule& u, const Bimodule& v) {
  requireSameAlgebra(u.leftAlgebra(), b, "morita: U must be a (B,A)-bimodule");
  requireSameAlgebra(u.rightAlgebra(), a, "morita: U must be a (B,A)-bimodule");
  requireSameAlgebra(v.leftAlgebra(), a, "morita: V must be an (A,B)-bimodule");
  requireSameAlgebra(v.rightAlgebra(), b, "morita: V must be an (A,B)-bimodule");
  std::size_t uv = tensorOverAlgebra(u, v).bimodule.dim();
  std::size_t vu = tensorOverAlgebra(v, u).bimodule.dim();
  if (uv != 0 || vu != 0) {
    throw Error(ErrorKind::NonzeroContextProducts,
                "morita: dim U (x)_A V = " + std::to_string(uv) + ", dim V (x)_B U = " + std::to_string(vu));
  }
  const Field& f = a->field();
  AlgebraPtr c = directProductAlgebra(*a, *b);
  const std::size_t na = a->dim(), nb = b->dim(), du = u.dim(), dv = v.dim(), dw = du + dv;

  // (a,b).(u,v) = (b u, a v) and (u,v).(a,b) = (u a, v b).
  std::vector<Mat> left, right;
  for (std::size_t k = 0; k < na + nb; ++k) {
    Mat l(f, dw, dw), r(f, dw, dw);
    if (k < na) {
      l.setBlock(du, du, v.leftAction(k));
      r.setBlock(0, 0, u.rightAction(k));
    } else {
      l.setBlock(0, 0, u.leftAction(k - na));
      r.setBlock(du, du, v.rightAction(k - na));
    }
    left.push_back(std::move(l));
    right.push_back(std::move(r));
  }
  Bimodule w(c, c, dw, std::move(left), std::move(right), true);
  TensorRing ring = TensorRing::build(c, w, 1);
  if (ring.nilIndex() > 1) throw Error(ErrorKind::NonzeroContextProducts, "morita: W (x) W is nonzero");

  std::vector<MatrixSlot> slots;
  for (std::size_t k = 0; k < na; ++k) slots.push_back({1, 1, k});
  for (std::size_t k = 0; k < nb; ++k) slots.push_back({2, 2, k});
  for (std::size_t k = 0; k < du; ++k) slots.push_back({2, 1, k});
  for (std::size_t k = 0; k < dv; ++k) slots.push_back({1, 2, k});
  return {a, b, u, v, std::move(c), std::move(w), std::move(ring), std::move(slots)};
}

void checkQuadruple(const MoritaRing& mr, const MoritaQuadruple& q) {
  requireSameAlgebra(q.x.algebraPtr(), mr.a, "quadruple: X is not an A-module");
  requireSameAlgebra(q.y.algebraPtr(), mr.b, "quadruple: Y is not a B-module");
  TensorModule ux = tensorOverAlgebra(mr.u, q.x);
  TensorModule vy = tensorOverAlgebra(mr.v, q.y);
  if (q.f.rows() != q.y.dim() || q.f.cols() != ux.module.dim() || q.g.rows() != q.x.dim() ||
      q.g.cols() != vy.module.dim()) {
    throw Error(ErrorKind::ShapeMismatch, "quadruple: f or g has the wrong shape");
  }
  if (!isModuleMap(ux.module, q.y, q.f)) throw Error(ErrorKind::AxiomViolation, "quadruple: f is not a B-module map");
  if (!isModuleMap(vy.module, q.x, q.g)) throw Error(ErrorKind::AxiomViolation, "quadruple: g is not an A-module map");
}

PairModule moritaTranslate(const MoritaRing& mr, const MoritaQuadruple& q) {
  checkQuadruple(mr, q);
  const Field& f = mr.c->field();
  const std::size_t na = mr.a->dim(), nb = mr.b->dim(), dx = q.x.dim(), dy = q.y.dim(), dz = dx + dy;
  const std::size_t du = mr.u.dim(), dv = mr.v.dim();
  std::vector<Mat> act;
  for (std::size_t k = 0; k < na + nb; ++k) {
    Mat m(f, dz, dz);
    if (k < na) {
      m.setBlock(0, 0, q.x.action(k));
    } else {
      m.setBlock(dx, dx, q.y.action(k - na));
    }
    act.push_back(std::move(m));
  }
  FdModule z(mr.c, dz, std::move(act), true);

  // u(u (x) x) = f(u (x) x), u(v (x) y) = g(v (x) y); the cross terms vanish.
  TensorModule ux = tensorOverAlgebra(mr.u, q.x);
  TensorModule vy = tensorOverAlgebra(mr.v, q.y);
  Mat fp = matMul(q.f, ux.proj);
  Mat gp = matMul(q.g, vy.proj);
  Mat plain(f, dz, (du + dv) * dz);
  for (std::size_t w = 0; w < du; ++w) {
    for (std::size_t x = 0; x < dx; ++x) {
      for (std::size_t r = 0; r < dy; ++r) plain(dx + r, w * dz + x) = fp(r, w * dx + x);
    }
  }
  for (std::size_t w = 0; w < dv; ++w) {
    for (std::size_t y = 0; y < dy; ++y) {
      for (std::size_t r = 0; r < dx; ++r) plain(r, (du + w) * dz + dx + y) = gp(r, w * dy + y);
    }
  }
  TensorModule wz = tensorOverAlgebra(mr.w, z);
  Mat u = matMul(plain, wz.section);
  if (matMul(u, wz.proj) != plain) throw Error(ErrorKind::AxiomViolation, "moritaTranslate: structure map is not balanced");
  return makePair(mr.ring, std::move(z), std::move(u), true);
}

MoritaQuadruple moritaTranslateInverse(const MoritaRing& mr, const PairModule& p) {
  requireSameAlgebra(p.x.algebraPtr(), mr.c, "moritaTranslateInverse: pair is not over A x B");
  const Field& f = mr.c->field();
  const std::size_t na = mr.a->dim(), nb = mr.b->dim(), dz = p.x.dim();
  const std::size_t du = mr.u.dim(), dv = mr.v.dim();
  Vec oneA(na + nb, 0), oneB(na + nb, 0);
  for (std::size_t k = 0; k < na; ++k) oneA[k] = mr.a->unit()[k];
  for (std::size_t k = 0; k < nb; ++k) oneB[na + k] = mr.b->unit()[k];
  Mat xb = imageBasis(p.x.actionOf(oneA));
  Mat yb = imageBasis(p.x.actionOf(oneB));
  Mat xi = leftInverse(xb), yi = leftInverse(yb);
  const std::size_t dx = xb.cols(), dy = yb.cols();

  std::vector<Mat> xa, ya;
  for (std::size_t k = 0; k < na; ++k) xa.push_back(matMul(xi, matMul(p.x.action(k), xb)));
  for (std::size_t k = 0; k < nb; ++k) ya.push_back(matMul(yi, matMul(p.x.action(na + k), yb)));
  FdModule x(mr.a, dx, std::move(xa), true);
  FdModule y(mr.b, dy, std::move(ya), true);

  Mat up = matMul(p.u, p.mx.proj);  // plain W (x) Z -> Z
  TensorModule ux = tensorOverAlgebra(mr.u, x);
  TensorModule vy = tensorOverAlgebra(mr.v, y);
  Mat fPlain(f, dy, du * dx), gPlain(f, dx, dv * dy);
  for (std::size_t w = 0; w < du; ++w) {
    Mat block = up.columns(w * dz, dz);
    fPlain.setBlock(0, w * dx, matMul(yi, matMul(block, xb)));
  }
  for (std::size_t w = 0; w < dv; ++w) {
    Mat block = up.columns((du + w) * dz, dz);
    gPlain.setBlock(0, w * dy, matMul(xi, matMul(block, yb)));
  }
  MoritaQuadruple q{std::move(x), std::move(y), matMul(fPlain, ux.section), matMul(gPlain, vy.section)};
  checkQuadruple(mr, q);
  return q;
}

}  // namespace tr
