#include "tring/tring.hpp"

namespace tr {

namespace {

Mat zeroMat(const Field& f, std::size_t r, std::size_t c) { return Mat(f, r, c); }

std::size_t degreeDim(const TensorRing& ctx, std::size_t k) { return ctx.tp.dim(k); }

// Matrix of a degree-k basis element acting on a pair or copair, built from
// the degree-1 actions: z = sum c (m (x) z') acts as a_m a_z' (left) or
// a_z' a_m (right).
std::vector<std::vector<Mat>> iterateActions(const TensorPowers& tp, const std::vector<Mat>& deg1, bool right) {
  std::vector<std::vector<Mat>> byDegree(tp.nilIndex + 1);
  if (tp.nilIndex == 0) return byDegree;
  byDegree[1] = deg1;
  const std::size_t n = deg1.empty() ? 0 : deg1[0].rows();
  const Field& f = tp.base->field();
  const std::size_t d1 = tp.dim(1);
  for (std::size_t k = 2; k <= tp.nilIndex; ++k) {
    const std::size_t dk = tp.dim(k), dprev = tp.dim(k - 1);
    const Mat& sec = tp.section[k];
    for (std::size_t z = 0; z < dk; ++z) {
      Mat acc(f, n, n);
      for (std::size_t m = 0; m < d1; ++m) {
        for (std::size_t zp = 0; zp < dprev; ++zp) {
          Scalar c = sec(m * dprev + zp, z);
          if (c == 0) continue;
          Mat prod = right ? matMul(byDegree[k - 1][zp], deg1[m]) : matMul(deg1[m], byDegree[k - 1][zp]);
          acc = add(acc, c == 1 ? prod : scale(prod, c));
        }
      }
      byDegree[k].push_back(std::move(acc));
    }
  }
  return byDegree;
}

bool exactAt(const ModHom& in, const ModHom& out) {
  return rank(in.matrix) == in.source.dim() && rank(out.matrix) == out.target.dim() &&
         matMul(out.matrix, in.matrix).isZero() && in.target.dim() == in.source.dim() + out.target.dim();
}

}  // namespace

// ---------------------------------------------------------------- powers

TensorPowers tensorPowers(const AlgebraPtr& r, const Bimodule& m, std::size_t cap) {
  requireSameAlgebra(m.leftAlgebra(), r, "tensorPowers: left algebra of M differs from R");
  requireSameAlgebra(m.rightAlgebra(), r, "tensorPowers: right algebra of M differs from R");
  const Field& f = r->field();
  TensorPowers tp{r, r->opposite(), m, {}, {}, {}, {}, 0};
  tp.powers.push_back(Bimodule::regular(r));
  tp.proj.push_back(zeroMat(f, 0, 0));
  tp.section.push_back(zeroMat(f, 0, 0));
  if (m.dim() != 0) {
    tp.powers.push_back(m);
    tp.proj.push_back(zeroMat(f, 0, 0));
    tp.section.push_back(zeroMat(f, 0, 0));
    for (std::size_t k = 1;; ++k) {
      TensorBimodule next = tensorOverAlgebra(m, tp.powers[k]);
      if (next.bimodule.dim() == 0) break;
      if (k + 1 > cap) {
        throw Error(ErrorKind::NotNilpotentWithinCap,
                    "tensor power " + std::to_string(k + 1) + " is nonzero (cap " + std::to_string(cap) + ")");
      }
      tp.powers.push_back(std::move(next.bimodule));
      tp.proj.push_back(std::move(next.proj));
      tp.section.push_back(std::move(next.section));
    }
  }
  const std::size_t n = tp.powers.size() - 1;
  tp.nilIndex = n;

  tp.mult.assign(n + 1, std::vector<Mat>(n + 1, zeroMat(f, 0, 0)));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      const std::size_t di = tp.dim(i), dj = tp.dim(j), dk = tp.dim(i + j);
      if (i + j > n) {
        tp.mult[i][j] = zeroMat(f, 0, di * dj);
      } else if (i == 0) {
        Mat out(f, dk, di * dj);
        for (std::size_t a = 0; a < di; ++a) out.setBlock(0, a * dj, tp.powers[j].leftAction(a));
        tp.mult[i][j] = std::move(out);
      } else if (j == 0) {
        Mat out(f, dk, di * dj);
        for (std::size_t b = 0; b < dj; ++b) {
          const Mat& ra = tp.powers[i].rightAction(b);
          for (std::size_t a = 0; a < di; ++a) out.setCol(a * dj + b, ra.col(a));
        }
        tp.mult[i][j] = std::move(out);
      } else if (i == 1) {
        tp.mult[i][j] = tp.proj[1 + j];
      } else {
        Mat s = kroneckerProduct(tp.section[i], Mat::identity(f, dj));
        Mat k = kroneckerProduct(Mat::identity(f, tp.dim(1)), tp.mult[i - 1][j]);
        tp.mult[i][j] = matMul(tp.proj[i + j], matMul(k, s));
      }
    }
  }
  return tp;
}

AlgebraPtr buildTensorRing(const TensorPowers& tp) {
  const Algebra& r = *tp.base;
  const std::size_t n = tp.nilIndex;
  std::vector<std::size_t> off(n + 2, 0);
  for (std::size_t k = 0; k <= n; ++k) off[k + 1] = off[k] + tp.dim(k);
  const std::size_t dim = off[n + 1];

  Algebra::Data d{r.field(), {}, std::vector<Scalar>(dim * dim * dim, 0), Vec(dim, 0), {}, {}};
  d.labels = r.labels();
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t a = 0; a < tp.dim(k); ++a) d.labels.push_back("M" + std::to_string(k) + "." + std::to_string(a));
  }
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; i + j <= n; ++j) {
      const Mat& mu = tp.mult[i][j];
      const std::size_t di = tp.dim(i), dj = tp.dim(j);
      for (std::size_t a = 0; a < di; ++a) {
        for (std::size_t b = 0; b < dj; ++b) {
          const std::size_t base = ((off[i] + a) * dim + (off[j] + b)) * dim + off[i + j];
          for (std::size_t l = 0; l < mu.rows(); ++l) d.structConst[base + l] = mu(l, a * dj + b);
        }
      }
    }
  }
  auto embed = [&](const Vec& v) {
    Vec out(dim, 0);
    std::copy(v.begin(), v.end(), out.begin());
    return out;
  };
  d.unit = embed(r.unit());
  for (const Vec& e : r.idempotents()) d.idempotents.push_back(embed(e));
  for (const Vec& j : r.radical()) d.radical.push_back(embed(j));
  for (std::size_t i = off[1]; i < dim; ++i) {
    Vec e(dim, 0);
    e[i] = 1;
    d.radical.push_back(std::move(e));
  }
  return Algebra::create(std::move(d));
}

TensorRing TensorRing::build(const AlgebraPtr& r, const Bimodule& m, std::size_t cap) {
  TensorRing ctx{tensorPowers(r, m, cap), nullptr, nullptr, {}};
  ctx.t = buildTensorRing(ctx.tp);
  ctx.tOp = ctx.t->opposite();
  std::size_t off = 0;
  for (std::size_t k = 0; k <= ctx.tp.nilIndex; ++k) {
    ctx.offsets.push_back(off);
    off += ctx.tp.dim(k);
  }
  return ctx;
}

// ---------------------------------------------------------------- pairs

bool PairModule::uInjective() const { return rank(u) == mx.module.dim(); }

PairModule makePair(const TensorRing& ctx, FdModule x, Mat u, bool check) {
  requireSameAlgebra(x.algebraPtr(), ctx.r(), "pair: X is not a module over R");
  TensorModule mx = tensorOverAlgebra(ctx.m(), x);
  if (u.rows() != x.dim() || u.cols() != mx.module.dim()) {
    throw Error(ErrorKind::ShapeMismatch, "pair: u must be " + std::to_string(x.dim()) + "x" +
                                              std::to_string(mx.module.dim()));
  }
  if (check && !isModuleMap(mx.module, x, u)) throw Error(ErrorKind::AxiomViolation, "pair: u is not an R-module map");
  return {std::move(x), std::move(mx), std::move(u)};
}

FdModule pairToFlat(const TensorRing& ctx, const PairModule& p) {
  const TensorPowers& tp = ctx.tp;
  const std::size_t dx = p.x.dim();
  std::vector<Mat> acts;
  acts.reserve(ctx.t->dim());
  for (const Mat& a : p.x.actions()) acts.push_back(a);
  if (tp.nilIndex > 0) {
    Mat up = matMul(p.u, p.mx.proj);
    std::vector<Mat> deg1;
    for (std::size_t m = 0; m < tp.dim(1); ++m) deg1.push_back(up.columns(m * dx, dx));
    auto all = iterateActions(tp, deg1, false);
    for (std::size_t k = 1; k <= tp.nilIndex; ++k) {
      for (Mat& a : all[k]) acts.push_back(std::move(a));
    }
  }
  return FdModule(ctx.t, dx, std::move(acts), true);
}

PairModule flatToPair(const TensorRing& ctx, const FdModule& z) {
  requireSameAlgebra(z.algebraPtr(), ctx.t, "flatToPair: module is not over T");
  const std::size_t d0 = degreeDim(ctx, 0), d1 = degreeDim(ctx, 1), dz = z.dim();
  std::vector<Mat> acts(z.actions().begin(), z.actions().begin() + d0);
  FdModule x(ctx.r(), dz, std::move(acts), false);
  TensorModule mx = tensorOverAlgebra(ctx.m(), x);
  Mat plain(z.field(), dz, d1 * dz);
  for (std::size_t m = 0; m < d1; ++m) plain.setBlock(0, m * dz, z.action(ctx.offsets[1] + m));
  Mat u = matMul(plain, mx.section);
  if (matMul(u, mx.proj) != plain) throw Error(ErrorKind::AxiomViolation, "flatToPair: degree-one action is not balanced");
  return {std::move(x), std::move(mx), std::move(u)};
}

InducedModule induce(const TensorRing& ctx, const FdModule& x) {
  requireSameAlgebra(x.algebraPtr(), ctx.r(), "ind: X is not a module over R");
  const std::size_t n = ctx.nilIndex();
  InducedModule out{PairModule{x, tensorOverAlgebra(ctx.m(), x), Mat(x.field(), 0, 0)}, {x}, {}, {0}};
  for (std::size_t i = 0; i < n; ++i) {
    out.steps.push_back(tensorOverAlgebra(ctx.m(), out.layers[i]));
    out.layers.push_back(out.steps.back().module);
    out.offsets.push_back(out.offsets.back() + out.layers[i].dim());
  }
  FdModule sum = directSumModules(out.layers, ctx.r());
  const std::size_t total = sum.dim(), dm = ctx.m().dim();
  Mat plain(x.field(), total, dm * total);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t di = out.layers[i].dim();
    const Mat& pr = out.steps[i].proj;
    for (std::size_t m = 0; m < dm; ++m) {
      for (std::size_t w = 0; w < di; ++w) {
        Vec col = pr.col(m * di + w);
        for (std::size_t r = 0; r < col.size(); ++r) plain(out.offsets[i + 1] + r, m * total + out.offsets[i] + w) = col[r];
      }
    }
  }
  TensorModule mx = tensorOverAlgebra(ctx.m(), sum);
  Mat u = matMul(plain, mx.section);
  out.pair = PairModule{std::move(sum), std::move(mx), std::move(u)};
  return out;
}

Mat indMap(const TensorRing& ctx, const InducedModule& src, const InducedModule& tgt, const Mat& g) {
  const Field& f = g.field();
  const std::size_t dm = ctx.m().dim();
  Mat out(f, tgt.pair.x.dim(), src.pair.x.dim());
  Mat gi = g;
  out.setBlock(0, 0, gi);
  for (std::size_t i = 0; i + 1 < src.layers.size(); ++i) {
    gi = matMul(tgt.steps[i].proj, matMul(kroneckerProduct(Mat::identity(f, dm), gi), src.steps[i].section));
    out.setBlock(tgt.offsets[i + 1], src.offsets[i + 1], gi);
  }
  return out;
}

PairModule stalk(const TensorRing& ctx, const FdModule& x) {
  TensorModule mx = tensorOverAlgebra(ctx.m(), x);
  Mat u(x.field(), x.dim(), mx.module.dim());
  return makePair(ctx, x, std::move(u), false);
}

QuotientResult cokFunctor(const PairModule& p) { return cokernelMod(p.uHom()); }

Presentation canonicalPresentation(const TensorRing& ctx, const PairModule& p) {
  const Field& f = p.x.field();
  const std::size_t n = ctx.nilIndex(), dm = ctx.m().dim();
  InducedModule mid = induce(ctx, p.x);
  InducedModule src = induce(ctx, p.mx.module);
  for (std::size_t j = 0; j < n; ++j) {
    if (src.layers[j].actions() != mid.layers[j + 1].actions()) {
      throw Error(ErrorKind::AxiomViolation, "canonicalPresentation: layers of Ind(M(x)X) and Ind(X) disagree");
    }
  }

  // phi: column block j has -F_j in row block j and the identity in row block j+1.
  Mat phi(f, mid.pair.x.dim(), src.pair.x.dim());
  Mat fj = p.u;
  for (std::size_t j = 0; j <= n; ++j) {
    if (j > 0) fj = matMul(mid.steps[j - 1].proj, matMul(kroneckerProduct(Mat::identity(f, dm), fj), src.steps[j - 1].section));
    phi.setBlock(mid.offsets[j], src.offsets[j], negate(fj));
    if (j + 1 <= n) phi.setBlock(mid.offsets[j + 1], src.offsets[j], Mat::identity(f, src.layers[j].dim()));
  }

  // eps: component i is u o (M(x)u) o ... applied i times.
  Mat eps(f, p.x.dim(), mid.pair.x.dim());
  Mat ei = Mat::identity(f, p.x.dim());
  Mat up = matMul(p.u, p.mx.proj);
  for (std::size_t i = 0; i <= n; ++i) {
    if (i > 0) ei = matMul(up, matMul(kroneckerProduct(Mat::identity(f, dm), ei), mid.steps[i - 1].section));
    eps.setBlock(0, mid.offsets[i], ei);
  }

  FdModule zs = pairToFlat(ctx, src.pair);
  FdModule zm = pairToFlat(ctx, mid.pair);
  FdModule zt = pairToFlat(ctx, p);
  ModHom phiHom{zs, zm, std::move(phi)};
  ModHom epsHom{zm, zt, std::move(eps)};
  bool exact = isModuleMap(zs, zm, phiHom.matrix) && isModuleMap(zm, zt, epsHom.matrix) && exactAt(phiHom, epsHom);
  return {std::move(src), std::move(mid), std::move(zt), std::move(phiHom), std::move(epsHom), exact};
}

// ---------------------------------------------------------------- copairs

bool CopairModule::vSurjective() const { return rank(v) == homMY.module.dim(); }

CopairModule makeCopair(const TensorRing& ctx, FdModule y, Mat vbar, bool check) {
  requireSameAlgebra(y.algebraPtr(), ctx.rOp(), "copair: Y is not a right R-module");
  const Bimodule& m = ctx.m();
  TensorModule ym = tensorOverAlgebra(y, m, ctx.rOp());
  if (vbar.rows() != y.dim() || vbar.cols() != ym.module.dim()) {
    throw Error(ErrorKind::ShapeMismatch, "copair: vbar must be " + std::to_string(y.dim()) + "x" +
                                              std::to_string(ym.module.dim()));
  }
  if (check && !isModuleMap(ym.module, y, vbar)) {
    throw Error(ErrorKind::AxiomViolation, "copair: vbar is not a right R-module map");
  }
  HomModule hom = homFromRight(m, y, ctx.rOp());
  const std::size_t dy = y.dim(), dm = m.dim();
  Mat vp = matMul(vbar, ym.proj);
  Mat v(y.field(), hom.module.dim(), dy);
  for (std::size_t c = 0; c < dy; ++c) {
    Mat map = vp.columns(c * dm, dm);
    Vec coords = hom.coordinatesOf(map);
    if (check && hom.mapOf(coords) != map) throw Error(ErrorKind::AxiomViolation, "copair: adjoint of vbar is not a hom");
    v.setCol(c, coords);
  }
  return {std::move(y), std::move(ym), std::move(vbar), std::move(hom), std::move(v)};
}

FdModule copairToFlat(const TensorRing& ctx, const CopairModule& c) {
  const TensorPowers& tp = ctx.tp;
  const std::size_t dy = c.y.dim(), dm = tp.dim(1);
  std::vector<Mat> acts(c.y.actions().begin(), c.y.actions().end());
  if (tp.nilIndex > 0) {
    Mat vp = matMul(c.vbar, c.ym.proj);
    std::vector<Mat> deg1;
    for (std::size_t m = 0; m < dm; ++m) {
      Mat b(c.y.field(), dy, dy);
      for (std::size_t y = 0; y < dy; ++y) b.setCol(y, vp.col(y * dm + m));
      deg1.push_back(std::move(b));
    }
    auto all = iterateActions(tp, deg1, true);
    for (std::size_t k = 1; k <= tp.nilIndex; ++k) {
      for (Mat& a : all[k]) acts.push_back(std::move(a));
    }
  }
  return FdModule(ctx.tOp, dy, std::move(acts), true);
}

CopairModule flatToCopair(const TensorRing& ctx, const FdModule& z) {
  requireSameAlgebra(z.algebraPtr(), ctx.tOp, "flatToCopair: module is not over T^op");
  const std::size_t d0 = degreeDim(ctx, 0), dm = degreeDim(ctx, 1), dz = z.dim();
  std::vector<Mat> acts(z.actions().begin(), z.actions().begin() + d0);
  FdModule y(ctx.rOp(), dz, std::move(acts), false);
  TensorModule ym = tensorOverAlgebra(y, ctx.m(), ctx.rOp());
  Mat plain(z.field(), dz, dz * dm);
  for (std::size_t m = 0; m < dm; ++m) {
    const Mat& b = z.action(ctx.offsets[1] + m);
    for (std::size_t c = 0; c < dz; ++c) plain.setCol(c * dm + m, b.col(c));
  }
  Mat vbar = matMul(plain, ym.section);
  if (matMul(vbar, ym.proj) != plain) throw Error(ErrorKind::AxiomViolation, "flatToCopair: degree-one action is not balanced");
  return makeCopair(ctx, std::move(y), std::move(vbar), true);
}

CoinducedModule coinduce(const TensorRing& ctx, const FdModule& yRight) {
  requireSameAlgebra(yRight.algebraPtr(), ctx.rOp(), "coind: Y is not a right R-module");
  const TensorPowers& tp = ctx.tp;
  const std::size_t n = tp.nilIndex, dm = tp.dim(1);
  std::vector<HomModule> layers;
  std::vector<std::size_t> offsets;
  std::vector<FdModule> parts;
  std::size_t off = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    layers.push_back(homFromRight(tp.powers[i], yRight, ctx.rOp()));
    offsets.push_back(off);
    off += layers.back().module.dim();
    parts.push_back(layers.back().module);
  }
  FdModule sum = directSumModules(parts, ctx.rOp());
  const std::size_t total = sum.dim();

  // (f.m)(w) = f(m w): component i+1 moves to component i.
  Mat plain(yRight.field(), total, total * dm);
  for (std::size_t i = 0; i < n; ++i) {
    const HomModule& hi = layers[i + 1];
    const HomModule& lo = layers[i];
    const std::size_t di = tp.dim(i);
    const Mat& mu = tp.mult[1][i];
    for (std::size_t q = 0; q < hi.module.dim(); ++q) {
      Vec e(hi.module.dim(), 0);
      e[q] = 1;
      Mat fq = hi.mapOf(e);
      for (std::size_t m = 0; m < dm; ++m) {
        Mat g = matMul(fq, mu.columns(m * di, di));
        Vec coords = lo.coordinatesOf(g);
        for (std::size_t r = 0; r < coords.size(); ++r) plain(offsets[i] + r, (offsets[i + 1] + q) * dm + m) = coords[r];
      }
    }
  }
  TensorModule ym = tensorOverAlgebra(sum, ctx.m(), ctx.rOp());
  Mat vbar = matMul(plain, ym.section);
  return {makeCopair(ctx, std::move(sum), std::move(vbar), true), std::move(layers), std::move(offsets)};
}

Mat coindMap(const CoinducedModule& src, const CoinducedModule& tgt, const Mat& h) {
  Mat out(h.field(), tgt.copair.y.dim(), src.copair.y.dim());
  for (std::size_t i = 0; i < src.layers.size(); ++i) {
    const HomModule& s = src.layers[i];
    for (std::size_t q = 0; q < s.module.dim(); ++q) {
      Vec e(s.module.dim(), 0);
      e[q] = 1;
      Vec coords = tgt.layers[i].coordinatesOf(matMul(h, s.mapOf(e)));
      for (std::size_t r = 0; r < coords.size(); ++r) out(tgt.offsets[i] + r, src.offsets[i] + q) = coords[r];
    }
  }
  return out;
}

Mat coindEvaluation(const TensorRing& ctx, const CoinducedModule& c) {
  const HomModule& h0 = c.layers[0];
  Mat out(ctx.r()->field(), h0.targetDim, c.copair.y.dim());
  for (std::size_t q = 0; q < h0.module.dim(); ++q) {
    Vec e(h0.module.dim(), 0);
    e[q] = 1;
    out.setCol(q, matVec(h0.mapOf(e), ctx.r()->unit()));
  }
  return out;
}

SubmoduleResult kFunctor(const CopairModule& c) { return kernelMod(c.vHom()); }

Copresentation canonicalCopresentation(const TensorRing& ctx, const CopairModule& c) {
  const TensorPowers& tp = ctx.tp;
  const Field& f = c.y.field();
  const std::size_t n = tp.nilIndex, dm = tp.dim(1), dy = c.y.dim();
  FdModule zs = copairToFlat(ctx, c);
  CoinducedModule mid = coinduce(ctx, c.y);
  CoinducedModule tgt = coinduce(ctx, c.homMY.module);

  // eta(y)_i(w) = y.w
  Mat eta(f, mid.copair.y.dim(), dy);
  for (std::size_t y = 0; y < dy; ++y) {
    for (std::size_t i = 0; i <= n; ++i) {
      const std::size_t di = tp.dim(i);
      Mat map(f, dy, di);
      for (std::size_t w = 0; w < di; ++w) map.setCol(w, zs.action(ctx.offsets[i] + w).col(y));
      Vec coords = mid.layers[i].coordinatesOf(map);
      for (std::size_t r = 0; r < coords.size(); ++r) eta(mid.offsets[i] + r, y) = coords[r];
    }
  }

  // psi(f)_i(w)(m) = f_{i+1}(w m) - f_i(w).m
  std::vector<Mat> bm;
  for (std::size_t m = 0; m < dm; ++m) bm.push_back(zs.action(ctx.offsets[1] + m));
  const HomModule& hmy = c.homMY;
  Mat psi(f, tgt.copair.y.dim(), mid.copair.y.dim());
  for (std::size_t ip = 0; ip <= n; ++ip) {
    const HomModule& layer = mid.layers[ip];
    for (std::size_t q = 0; q < layer.module.dim(); ++q) {
      Vec e(layer.module.dim(), 0);
      e[q] = 1;
      Mat fq = layer.mapOf(e);
      const std::size_t col = mid.offsets[ip] + q;
      auto place = [&](std::size_t i, const Mat& values) {
        Vec coords = tgt.layers[i].coordinatesOf(values);
        for (std::size_t r = 0; r < coords.size(); ++r) psi(tgt.offsets[i] + r, col) = f.add(psi(tgt.offsets[i] + r, col), coords[r]);
      };
      if (ip >= 1) {
        const std::size_t i = ip - 1, di = tp.dim(i);
        Mat values(f, hmy.module.dim(), di);
        for (std::size_t w = 0; w < di; ++w) {
          Mat g(f, dy, dm);
          for (std::size_t m = 0; m < dm; ++m) g.setCol(m, matVec(fq, tp.mult[i][1].col(w * dm + m)));
          values.setCol(w, hmy.coordinatesOf(g));
        }
        place(i, values);
      }
      {
        const std::size_t di = tp.dim(ip);
        Mat values(f, hmy.module.dim(), di);
        for (std::size_t w = 0; w < di; ++w) {
          Vec fw = fq.col(w);
          Mat g(f, dy, dm);
          for (std::size_t m = 0; m < dm; ++m) {
            Vec moved = matVec(bm[m], fw);
            for (Scalar& s : moved) s = f.neg(s);
            g.setCol(m, moved);
          }
          values.setCol(w, hmy.coordinatesOf(g));
        }
        place(ip, values);
      }
    }
  }

  FdModule zm = copairToFlat(ctx, mid.copair);
  FdModule zt = copairToFlat(ctx, tgt.copair);
  ModHom etaHom{zs, zm, std::move(eta)};
  ModHom psiHom{zm, zt, std::move(psi)};
  bool exact = isModuleMap(zs, zm, etaHom.matrix) && isModuleMap(zm, zt, psiHom.matrix) && exactAt(etaHom, psiHom);
  return {std::move(zs), std::move(mid), std::move(tgt), std::move(etaHom), std::move(psiHom), exact};
}

// ---------------------------------------------------------------- classes

const char* classTagName(ClassTag c) {
  switch (c) {
    case ClassTag::Proj: return "proj";
    case ClassTag::Inj: return "inj";
    case ClassTag::Flat: return "flat";
    case ClassTag::GP: return "gp";
    case ClassTag::GI: return "gi";
    case ClassTag::GF: return "gf";
  }
  return "gp";
}

ClassTag parseClassTag(const std::string& s) {
  for (ClassTag c : {ClassTag::Proj, ClassTag::Inj, ClassTag::Flat, ClassTag::GP, ClassTag::GI, ClassTag::GF}) {
    if (s == classTagName(c)) return c;
  }
  throw Error(ErrorKind::InvalidInput, "unknown class tag '" + s + "'");
}

const char* methodName(Method m) {
  switch (m) {
    case Method::Phi: return "phi";
    case Method::Direct: return "direct";
    case Method::Both: return "both";
  }
  return "both";
}

Method parseMethod(const std::string& s) {
  for (Method m : {Method::Phi, Method::Direct, Method::Both}) {
    if (s == methodName(m)) return m;
  }
  throw Error(ErrorKind::InvalidInput, "unknown method '" + s + "'");
}

Verdict classifyModule(const FdModule& x, ClassTag tag, const IgCertificate& cert, std::size_t maxLen) {
  switch (tag) {
    case ClassTag::Proj: return toVerdict(isProjective(x));
    case ClassTag::Inj: return toVerdict(isInjective(x));
    case ClassTag::Flat: return toVerdict(isFlat(x));
    case ClassTag::GP: return isGorensteinProjective(x, cert, maxLen);
    case ClassTag::GF: return isGorensteinFlat(x, cert, maxLen);
    case ClassTag::GI: return isGorensteinInjective(x, cert.opposite(), maxLen);
  }
  return Verdict::Unknown;
}

PhiVerdict phiMembership(const TensorRing& ctx, const PairModule& p, ClassTag tag, const IgCertificate& certR,
                         std::size_t maxLen) {
  (void)ctx;
  PhiVerdict out;
  out.uMono = p.uInjective();
  out.cokVerdict = classifyModule(cokFunctor(p).module, tag, certR, maxLen);
  out.verdict = out.uMono ? out.cokVerdict : Verdict::False;
  return out;
}

PsiVerdict psiMembership(const TensorRing& ctx, const CopairModule& c, ClassTag tag, const IgCertificate& certR,
                         std::size_t maxLen) {
  (void)ctx;
  PsiVerdict out;
  out.vEpi = c.vSurjective();
  out.kerVerdict = classifyModule(kFunctor(c).module, tag, certR.opposite(), maxLen);
  out.verdict = out.vEpi ? out.kerVerdict : Verdict::False;
  return out;
}

Certificates computeCertificates(const TensorRing& ctx, std::size_t maxLen) {
  return {igData(ctx.r(), maxLen), igData(ctx.t, maxLen), maxLen};
}

namespace {

void combine(ClassifyResult& r) {
  switch (r.method) {
    case Method::Phi: r.combined = r.structural; break;
    case Method::Direct: r.combined = r.direct; break;
    case Method::Both:
      if (r.structural == Verdict::Unknown || r.direct == Verdict::Unknown) {
        r.combined = Verdict::Unknown;
      } else if (r.structural != r.direct) {
        r.counterexample = true;
        r.combined = Verdict::Unknown;
      } else {
        r.combined = r.structural;
      }
      break;
  }
}

}  // namespace

ClassifyResult classifyOverT(const TensorRing& ctx, const PairModule& p, ClassTag tag, Method method,
                             const Certificates& certs) {
  ClassifyResult r;
  r.tag = tag;
  r.method = method;
  if (method != Method::Direct) {
    PhiVerdict pv = phiMembership(ctx, p, tag, certs.r, certs.maxLen);
    r.structural = pv.verdict;
    r.uMono = pv.uMono;
    r.partVerdict = pv.cokVerdict;
  }
  if (method != Method::Phi) r.direct = classifyModule(pairToFlat(ctx, p), tag, certs.t, certs.maxLen);
  combine(r);
  return r;
}

ClassifyResult classifyCopairOverT(const TensorRing& ctx, const CopairModule& c, ClassTag tag, Method method,
                                   const Certificates& certs) {
  ClassifyResult r;
  r.tag = tag;
  r.method = method;
  if (method != Method::Direct) {
    PsiVerdict pv = psiMembership(ctx, c, tag, certs.r, certs.maxLen);
    r.structural = pv.verdict;
    r.uMono = pv.vEpi;
    r.partVerdict = pv.kerVerdict;
  }
  if (method != Method::Phi) r.direct = classifyModule(copairToFlat(ctx, c), tag, certs.t.opposite(), certs.maxLen);
  combine(r);
  return r;
}

}  // namespace tr
