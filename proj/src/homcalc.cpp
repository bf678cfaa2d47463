#include "tring/homcalc.hpp"

namespace tr {

const char* verdictName(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

Verdict verdictAnd(Verdict a, Verdict b) {
  if (a == Verdict::False || b == Verdict::False) return Verdict::False;
  if (a == Verdict::Unknown || b == Verdict::Unknown) return Verdict::Unknown;
  return Verdict::True;
}

std::string DimBound::str() const {
  return (finite ? "Finite(" : "AtLeast(") + std::to_string(value) + ")";
}

// ---------------------------------------------------------------- ProjSum

ProjSum makeProjSum(const AlgebraPtr& a, std::vector<std::size_t> vertices) {
  std::vector<FdModule> parts;
  std::vector<std::size_t> offsets;
  std::size_t off = 0;
  for (std::size_t s : vertices) {
    if (s >= a->idempotentCount()) throw Error(ErrorKind::InvalidInput, "makeProjSum: vertex out of range");
    parts.push_back(FdModule::projective(a, s));
    offsets.push_back(off);
    off += parts.back().dim();
  }
  FdModule m = directSumModules(parts, a);
  return {std::move(vertices), std::move(offsets), std::move(m)};
}

Vec ProjSum::generator(std::size_t k) const {
  Vec v(module.dim(), 0);
  const Vec& g = module.algebra().projective(vertices[k]).generator;
  for (std::size_t i = 0; i < g.size(); ++i) v[offsets[k] + i] = g[i];
  return v;
}

// ---------------------------------------------------------------- covers

ProjectiveCover projectiveCover(const FdModule& x) {
  const Algebra& a = x.algebra();
  const Field& f = x.field();
  EchelonBasis span(f, x.dim());
  Mat rad = radicalSubspace(x);
  for (std::size_t c = 0; c < rad.cols(); ++c) span.add(rad.col(c));

  std::vector<std::size_t> vertices;
  std::vector<Vec> gens;
  for (std::size_t s = 0; s < a.idempotentCount() && span.rank() < x.dim(); ++s) {
    Mat es = x.actionOf(a.idempotents()[s]);
    for (std::size_t c = 0; c < es.cols() && span.rank() < x.dim(); ++c) {
      Vec v = es.col(c);
      if (span.add(v)) {
        vertices.push_back(s);
        gens.push_back(std::move(v));
      }
    }
  }
  if (span.rank() != x.dim()) throw Error(ErrorKind::AxiomViolation, "projectiveCover: idempotents do not span the top");

  ProjSum p = makeProjSum(x.algebraPtr(), vertices);
  Mat epi(f, x.dim(), p.module.dim());
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    Mat orbit(f, x.dim(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) orbit.setCol(i, matVec(x.action(i), gens[k]));
    epi.setBlock(0, p.offsets[k], matMul(orbit, a.projective(vertices[k]).basis));
  }

  // Minimality: ker(epi) lies in rad(P).
  Mat ker = kernelBasis(epi);
  if (ker.cols() + x.dim() != p.module.dim()) throw Error(ErrorKind::AxiomViolation, "projectiveCover: map is not onto");
  if (ker.cols() > 0) {
    Mat radP = radicalSubspace(p.module);
    EchelonBasis rp(f, p.module.dim());
    for (std::size_t c = 0; c < radP.cols(); ++c) rp.add(radP.col(c));
    for (std::size_t c = 0; c < ker.cols(); ++c) {
      if (!rp.contains(ker.col(c))) throw Error(ErrorKind::AxiomViolation, "projectiveCover: cover is not minimal");
    }
  }
  ModHom h{p.module, x, std::move(epi)};
  return {std::move(p), std::move(h)};
}

SubmoduleResult syzygy(const FdModule& x) { return kernelMod(projectiveCover(x).epi); }

Resolution minimalResolution(const FdModule& x, std::size_t maxLen) {
  Resolution res;
  ProjectiveCover pc = projectiveCover(x);
  res.terms.push_back(pc.cover);
  res.maps.push_back(pc.epi);
  SubmoduleResult omega = kernelMod(pc.epi);
  while (true) {
    if (omega.module.dim() == 0) {
      res.complete = true;
      break;
    }
    if (res.terms.size() > maxLen) {
      res.truncated = true;
      break;
    }
    ProjectiveCover next = projectiveCover(omega.module);
    ModHom d{next.cover.module, res.terms.back().module, matMul(omega.inclusion.matrix, next.epi.matrix)};
    SubmoduleResult nextOmega = kernelMod(next.epi);
    res.terms.push_back(std::move(next.cover));
    res.maps.push_back(std::move(d));
    omega = std::move(nextOmega);
  }
  return res;
}

// ---------------------------------------------------------------- Ext / Tor

namespace {

// Coefficients a_{kl} in the algebra with d(g'_l) = sum_k a_{kl} g_k, for the
// differential d: terms[i] -> terms[i-1].
std::vector<std::vector<Vec>> differentialCoefficients(const Resolution& res, std::size_t i) {
  const ProjSum& src = res.terms[i];
  const ProjSum& tgt = res.terms[i - 1];
  const Algebra& a = src.module.algebra();
  const Mat& d = res.maps[i].matrix;
  std::vector<std::vector<Vec>> out(tgt.count(), std::vector<Vec>(src.count()));
  for (std::size_t l = 0; l < src.count(); ++l) {
    Vec img = matVec(d, src.generator(l));
    for (std::size_t k = 0; k < tgt.count(); ++k) {
      const Mat& basis = a.projective(tgt.vertices[k]).basis;
      Vec slice(img.begin() + tgt.offsets[k], img.begin() + tgt.offsets[k] + basis.cols());
      out[k][l] = matVec(basis, slice);
    }
  }
  return out;
}

Mat idempotentImageBasis(const FdModule& y, std::size_t s) {
  return imageBasis(y.actionOf(y.algebra().idempotents()[s]));
}

Mat blockDiagonal(const Field& f, const std::vector<Mat>& blocks) {
  std::size_t r = 0, c = 0;
  for (const Mat& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Mat out(f, r, c);
  r = c = 0;
  for (const Mat& b : blocks) {
    out.setBlock(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

// dim of Hom(P_i, Y) = sum_k dim e_{s_k} Y, and the restriction basis.
Mat homRestriction(const ProjSum& p, const FdModule& y) {
  std::vector<Mat> blocks;
  for (std::size_t s : p.vertices) blocks.push_back(idempotentImageBasis(y, s));
  return blockDiagonal(y.field(), blocks);
}

// Hom(P_{i-1}, Y) -> Hom(P_i, Y), f -> f o d_i.
Mat homCoboundary(const Resolution& res, std::size_t i, const FdModule& y) {
  const Field& f = y.field();
  const ProjSum& src = res.terms[i];
  const ProjSum& tgt = res.terms[i - 1];
  auto coeff = differentialCoefficients(res, i);
  Mat big(f, src.count() * y.dim(), tgt.count() * y.dim());
  for (std::size_t l = 0; l < src.count(); ++l) {
    for (std::size_t k = 0; k < tgt.count(); ++k) big.setBlock(l * y.dim(), k * y.dim(), y.actionOf(coeff[k][l]));
  }
  return matMul(big, homRestriction(tgt, y));
}

// Y (x) P_i -> Y (x) P_{i-1} using Y (x) A e_s = Y e_s.
Mat tensorBoundary(const Resolution& res, std::size_t i, const FdModule& yRight) {
  const Field& f = yRight.field();
  const ProjSum& src = res.terms[i];
  const ProjSum& tgt = res.terms[i - 1];
  auto coeff = differentialCoefficients(res, i);
  Mat big(f, tgt.count() * yRight.dim(), src.count() * yRight.dim());
  for (std::size_t k = 0; k < tgt.count(); ++k) {
    for (std::size_t l = 0; l < src.count(); ++l) {
      big.setBlock(k * yRight.dim(), l * yRight.dim(), yRight.actionOf(coeff[k][l]));
    }
  }
  return matMul(big, homRestriction(src, yRight));
}

std::size_t homTermDim(const Resolution& res, std::size_t i, const FdModule& y) {
  if (i >= res.terms.size()) return 0;
  return homRestriction(res.terms[i], y).cols();
}

}  // namespace

std::optional<std::size_t> extDimFrom(const Resolution& res, const FdModule& y, std::size_t n) {
  if (!res.knows(n + 1)) return std::nullopt;
  if (y.algebra().dim() != res.terms[0].module.algebra().dim()) {
    throw Error(ErrorKind::AlgebraMismatch, "extDim: modules over different algebras");
  }
  std::size_t here = homTermDim(res, n, y);
  if (here == 0) return 0;
  std::size_t out = n + 1 < res.terms.size() ? rank(homCoboundary(res, n + 1, y)) : 0;
  std::size_t in = (n >= 1 && n < res.terms.size()) ? rank(homCoboundary(res, n, y)) : 0;
  return here - out - in;
}

std::optional<std::size_t> torDimFrom(const Resolution& res, const FdModule& yRight, std::size_t n) {
  if (!res.knows(n + 1)) return std::nullopt;
  if (yRight.algebra().dim() != res.terms[0].module.algebra().dim()) {
    throw Error(ErrorKind::AlgebraMismatch, "torDim: modules over different algebras");
  }
  std::size_t here = homTermDim(res, n, yRight);
  if (here == 0) return 0;
  std::size_t out = (n >= 1 && n < res.terms.size()) ? rank(tensorBoundary(res, n, yRight)) : 0;
  std::size_t in = n + 1 < res.terms.size() ? rank(tensorBoundary(res, n + 1, yRight)) : 0;
  return here - out - in;
}

std::optional<std::size_t> extDim(const FdModule& x, const FdModule& y, std::size_t n, std::size_t maxLen) {
  requireSameAlgebra(x.algebraPtr(), y.algebraPtr(), "extDim: modules over different algebras");
  return extDimFrom(minimalResolution(x, std::max(maxLen, n + 1)), y, n);
}

std::optional<std::size_t> torDim(const FdModule& yRight, const FdModule& x, std::size_t n, std::size_t maxLen) {
  return torDimFrom(minimalResolution(x, std::max(maxLen, n + 1)), yRight, n);
}

// ---------------------------------------------------------------- bounds

DimBound pdBound(const FdModule& x, std::size_t maxLen) {
  Resolution r = minimalResolution(x, maxLen);
  if (r.complete) return DimBound::Finite(r.terms[0].module.dim() == 0 ? 0 : r.length());
  return DimBound::AtLeast(maxLen);
}

DimBound idBound(const FdModule& x, std::size_t maxLen) { return pdBound(kDual(x), maxLen); }

IgCertificate igData(const AlgebraPtr& a, std::size_t maxLen) {
  IgCertificate c;
  c.bound = maxLen;
  c.gLeft = idBound(FdModule::regular(a), maxLen);
  c.gRight = idBound(FdModule::regular(a->opposite()), maxLen);
  if (c.finite() && c.gLeft.value != c.gRight.value) {
    throw Error(ErrorKind::AxiomViolation, "igData: left and right self-injective dimensions differ");
  }
  return c;
}

// ---------------------------------------------------------------- classifiers

bool isProjective(const FdModule& x) {
  ProjectiveCover pc = projectiveCover(x);
  return pc.cover.module.dim() == x.dim();
}

bool isInjective(const FdModule& x) { return isProjective(kDual(x)); }

bool isFlat(const FdModule& x) { return isProjective(x); }

Verdict isGorensteinProjective(const FdModule& x, const IgCertificate& cert, std::size_t maxLen) {
  if (!cert.gLeft.finite) return Verdict::Unknown;
  const std::size_t g = cert.gLeft.value;
  if (g == 0) return Verdict::True;
  Resolution res = minimalResolution(x, std::max(maxLen, g + 1));
  if (res.complete && res.length() == 0) return Verdict::True;
  FdModule a = FdModule::regular(x.algebraPtr());
  for (std::size_t i = 1; i <= g; ++i) {
    auto d = extDimFrom(res, a, i);
    if (!d) return Verdict::Unknown;
    if (*d != 0) return Verdict::False;
  }
  return Verdict::True;
}

Verdict isGorensteinInjective(const FdModule& y, const IgCertificate& cert, std::size_t maxLen) {
  return isGorensteinProjective(kDual(y), cert, maxLen);
}

Verdict isGorensteinFlat(const FdModule& x, const IgCertificate& cert, std::size_t maxLen) {
  return isGorensteinProjective(x, cert, maxLen);
}

}  // namespace tr
