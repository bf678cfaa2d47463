// Acceptance checks. One line per criterion; exit status 1 if any fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.hpp"

using namespace tt;

namespace {

// Pinned limits: all comparisons are exact; only runtimes carry a tolerance.
constexpr double kLimitExample = 1.0;
constexpr double kLimitCampaign = 300.0;
constexpr double kLimitStructural = 120.0;
constexpr double kLimitMorita = 120.0;
constexpr std::size_t kCampaignSamples = 200;
constexpr std::uint64_t kCampaignSeed = 7;
constexpr std::size_t kStructuralSamples = 100;
constexpr std::size_t kLemmaSamples = 60;
constexpr std::size_t kTransferSamples = 40;
constexpr std::size_t kTransferMinimum = 20;
constexpr std::size_t kMoritaSamples = 100;

struct Outcome {
  bool ok = true;
  std::vector<std::string> problems;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (problems.size() < 5) problems.push_back(what);
    }
  }
};

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << "s";
  return o.str();
}

/// Coefficients c with sum c_i images[i] = target, if any.
std::optional<Vec> preimage(const Field& f, const std::vector<Mat>& images, const Mat& target) {
  std::vector<Vec> cols;
  for (const Mat& m : images) cols.push_back(m.entries());
  Mat a = Mat::fromColumns(f, target.rows() * target.cols(), cols);
  return solveLinear(a, target.entries());
}

Mat combine(const Field& f, const std::vector<ModHom>& basis, const Vec& c, std::size_t rows, std::size_t cols) {
  Mat out = Mat::zeros(f, rows, cols);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t k = 0; k < cols; ++k) out(r, k) = f.add(out(r, k), f.mul(c[i], basis[i].matrix(r, k)));
    }
  }
  return out;
}

/// Rank of the linear map sending each basis element to images[i].
std::size_t imageRank(const Field& f, const std::vector<Mat>& images, std::size_t entries) {
  std::vector<Vec> cols;
  for (const Mat& m : images) cols.push_back(m.entries());
  return rank(Mat::fromColumns(f, entries, cols));
}

// ------------------------------------------------------------------ 1

Outcome criterion1() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  AlgebraBimodule ex = exampleQNak(Field(2), 3, 2, 1, 3);
  TensorRing ctx = TensorRing::build(ex.r, ex.m);
  HypothesisReport h = hypothesisReport(ctx, Variant::GP);
  double t = seconds(t0);
  o.require(ex.r->dim() == 6, "dim R");
  o.require(ex.m.dim() == 4, "dim M");
  o.require(ctx.nilIndex() == 1, "nilpotency index");
  o.require(ctx.t->dim() == 10, "dim T");
  o.require(h.applicable == Verdict::True, "applicable");
  o.require(h.conditionT.status == ConditionT::Status::Holds && h.conditionT.reason == "M right-projective",
            "conditionT " + h.conditionT.str());
  o.require(h.pdLeftM == DimBound::Finite(0), "pd_R M " + h.pdLeftM.str());
  o.require(h.fdRightM == DimBound::Finite(0), "fd M " + h.fdRightM.str());
  o.require(t < kLimitExample, "runtime " + fmt(t));
  o.detail = "R=6 M=4 N=1 T=10, " + h.conditionT.str() + ", " + fmt(t);
  return o;
}

// ------------------------------------------------------------------ 2-4

Outcome pairCampaign(ClassTag tag, Variant variant) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  const TensorRing& ctx = qnakRing();
  Certificates certs = computeCertificates(ctx);
  CampaignConfig cfg;
  cfg.seed = kCampaignSeed;
  cfg.samples = kCampaignSamples;
  std::size_t mono = 0, positive = 0;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    Rng rng(sampleSeed(cfg.seed, i));
    PairModule p = randomPair(ctx, cfg, rng);
    PhiVerdict phi = phiMembership(ctx, p, tag, certs.r);
    FdModule z = pairToFlat(ctx, p);
    Verdict direct = tag == ClassTag::GF ? isGorensteinFlat(z, certs.t) : isGorensteinProjective(z, certs.t);
    const bool uMono = p.uInjective();
    mono += uMono;
    positive += direct == Verdict::True;
    o.require(phi.verdict != Verdict::Unknown && direct != Verdict::Unknown, "inconclusive sample " + std::to_string(i));
    o.require(phi.verdict == direct, "disagreement at sample " + std::to_string(i));
    o.require(direct == toVerdict(uMono), "verdict differs from u injective at sample " + std::to_string(i));
  }
  VerdictReport rep = verifyTheorem(ctx, variant, cfg);
  o.require(rep.status == "VERIFIED", "campaign status " + rep.status);
  o.require(rep.disagreeCount() == 0, "campaign disagreements");
  if (variant == Variant::GF) {
    bool flagged = false;
    for (const std::string& n : rep.notes) flagged = flagged || n.find("Gorenstein projective") != std::string::npos;
    o.require(flagged, "GF reduction not flagged in the report");
  }
  double t = seconds(t0);
  o.require(t < kLimitCampaign, "runtime " + fmt(t));
  o.detail = std::to_string(cfg.samples) + " pairs, 0 disagreements required, " + std::to_string(mono) +
             " with u injective, " + std::to_string(positive) + " in class, " + fmt(t);
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  const TensorRing& ctx = qnakRing();
  Certificates certs = computeCertificates(ctx);
  CampaignConfig cfg;
  cfg.seed = kCampaignSeed;
  cfg.samples = kCampaignSamples;
  std::size_t epi = 0;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    Rng rng(sampleSeed(cfg.seed, i));
    CopairModule c = randomCopair(ctx, cfg, rng);
    PsiVerdict psi = psiMembership(ctx, c, ClassTag::GI, certs.r);
    // direct route: Gorenstein projectivity of the field dual over T
    FdModule dual = kDual(copairToFlat(ctx, c), ctx.t);
    Verdict direct = isGorensteinProjective(dual, certs.t);
    epi += c.vSurjective();
    o.require(psi.verdict != Verdict::Unknown && direct != Verdict::Unknown, "inconclusive sample " + std::to_string(i));
    o.require(psi.verdict == direct, "disagreement at sample " + std::to_string(i));
    o.require(direct == toVerdict(c.vSurjective()), "verdict differs from v surjective at sample " + std::to_string(i));
  }
  VerdictReport rep = verifyTheorem(ctx, Variant::GI, cfg);
  o.require(rep.status == "VERIFIED", "campaign status " + rep.status);
  double t = seconds(t0);
  o.require(t < kLimitCampaign, "runtime " + fmt(t));
  o.detail = std::to_string(cfg.samples) + " copairs, " + std::to_string(epi) + " with v surjective, " + fmt(t);
  return o;
}

// ------------------------------------------------------------------ 5

void checkPairStructure(const TensorRing& ctx, const PairModule& p, const FdModule& xR, Rng& rng, Outcome& o,
                        std::size_t i) {
  const Field& f = ctx.r()->field();
  const std::string at = " (pair " + std::to_string(i) + ")";
  Presentation pr = canonicalPresentation(ctx, p);
  o.require(isModuleMap(pr.phi.source, pr.phi.target, pr.phi.matrix), "phi not a T-map" + at);
  o.require(isModuleMap(pr.eps.source, pr.eps.target, pr.eps.matrix), "eps not a T-map" + at);
  o.require(rank(pr.phi.matrix) == pr.phi.source.dim(), "phi not injective" + at);
  o.require(rank(pr.eps.matrix) == pr.eps.target.dim(), "eps not surjective" + at);
  o.require(matMul(pr.eps.matrix, pr.phi.matrix).isZero(), "eps phi != 0" + at);
  o.require(pr.phi.source.dim() + pr.eps.target.dim() == pr.eps.source.dim(), "not exact in the middle" + at);

  // C(Ind X) = X: degree-zero inclusion followed by the cokernel projection
  InducedModule ind = induce(ctx, xR);
  QuotientResult cok = cokFunctor(ind.pair);
  Mat deg0 = Mat::zeros(f, ind.pair.x.dim(), xR.dim());
  deg0.setBlock(0, 0, Mat::identity(f, xR.dim()));
  o.require(isIsomorphism(xR, cok.module, matMul(cok.projection.matrix, deg0)), "C Ind != id" + at);

  // Ind -| U: restriction to degree zero is a bijection
  FdModule z = pairToFlat(ctx, p);
  FdModule indFlat = pairToFlat(ctx, ind.pair);
  auto hb = homBasis(indFlat, z);
  std::vector<Mat> restr;
  for (const ModHom& h : hb) restr.push_back(matMul(h.matrix, deg0));
  const std::size_t homR = homDim(xR, p.x);
  o.require(hb.size() == homR, "Ind adjunction dimensions" + at);
  o.require(imageRank(f, restr, p.x.dim() * xR.dim()) == hb.size(), "Ind adjunction not injective" + at);
  Mat g = randomHom(xR, p.x, rng);
  auto c = preimage(f, restr, g);
  o.require(c.has_value(), "Ind adjunction round trip" + at);
  if (c) {
    Mat ext = combine(f, hb, *c, z.dim(), indFlat.dim());
    o.require(isModuleMap(indFlat, z, ext) && matMul(ext, deg0) == g, "Ind round trip mismatch" + at);
  }

  // C -| S: precomposition with the cokernel projection
  QuotientResult cz = cokFunctor(p);
  FdModule y = xR;
  FdModule sy = pairToFlat(ctx, stalk(ctx, y));
  auto hc = homBasis(cz.module, y);
  std::vector<Mat> pre;
  bool maps = true;
  for (const ModHom& h : hc) {
    pre.push_back(matMul(h.matrix, cz.projection.matrix));
    maps = maps && isModuleMap(z, sy, pre.back());
  }
  o.require(maps, "C adjunction images not T-maps" + at);
  o.require(hc.size() == homDim(z, sy), "C adjunction dimensions" + at);
  o.require(imageRank(f, pre, y.dim() * z.dim()) == hc.size(), "C adjunction not injective" + at);
}

void checkCopairStructure(const TensorRing& ctx, const CopairModule& cp, const FdModule& yR, Rng& rng, Outcome& o,
                          std::size_t i) {
  const Field& f = ctx.r()->field();
  const std::string at = " (copair " + std::to_string(i) + ")";
  Copresentation pr = canonicalCopresentation(ctx, cp);
  o.require(isModuleMap(pr.eta.source, pr.eta.target, pr.eta.matrix), "eta not a map" + at);
  o.require(isModuleMap(pr.psi.source, pr.psi.target, pr.psi.matrix), "psi not a map" + at);
  o.require(rank(pr.eta.matrix) == pr.eta.source.dim(), "eta not injective" + at);
  o.require(rank(pr.psi.matrix) == pr.psi.target.dim(), "psi not surjective" + at);
  o.require(matMul(pr.psi.matrix, pr.eta.matrix).isZero(), "psi eta != 0" + at);
  o.require(pr.eta.source.dim() + pr.psi.target.dim() == pr.eta.target.dim(), "not exact in the middle" + at);

  // K(Coind Y) = Y: inclusion of K followed by evaluation
  CoinducedModule co = coinduce(ctx, yR);
  SubmoduleResult k = kFunctor(co.copair);
  Mat ev = coindEvaluation(ctx, co);
  o.require(isIsomorphism(k.module, yR, matMul(ev, k.inclusion.matrix)), "K Coind != id" + at);

  // U -| Coind: composition with the evaluation is a bijection
  FdModule w = copairToFlat(ctx, cp);
  FdModule coFlat = copairToFlat(ctx, co.copair);
  auto hb = homBasis(w, coFlat);
  std::vector<Mat> post;
  for (const ModHom& h : hb) post.push_back(matMul(ev, h.matrix));
  o.require(hb.size() == homDim(cp.y, yR), "Coind adjunction dimensions" + at);
  o.require(imageRank(f, post, yR.dim() * w.dim()) == hb.size(), "Coind adjunction not injective" + at);
  Mat g = randomHom(cp.y, yR, rng);
  auto c = preimage(f, post, g);
  o.require(c.has_value(), "Coind adjunction round trip" + at);
  if (c) {
    Mat ext = combine(f, hb, *c, coFlat.dim(), w.dim());
    o.require(isModuleMap(w, coFlat, ext) && matMul(ev, ext) == g, "Coind round trip mismatch" + at);
  }

  // S -| K: composition with the inclusion of K
  SubmoduleResult kw = kFunctor(cp);
  TensorModule ym = tensorOverAlgebra(yR, ctx.m(), ctx.rOp());
  FdModule sy = copairToFlat(ctx, makeCopair(ctx, yR, Mat::zeros(f, yR.dim(), ym.module.dim())));
  auto hk = homBasis(yR, kw.module);
  std::vector<Mat> inc;
  bool maps = true;
  for (const ModHom& h : hk) {
    inc.push_back(matMul(kw.inclusion.matrix, h.matrix));
    maps = maps && isModuleMap(sy, w, inc.back());
  }
  o.require(maps, "K adjunction images not maps" + at);
  o.require(hk.size() == homDim(sy, w), "K adjunction dimensions" + at);
  o.require(imageRank(f, inc, w.dim() * yR.dim()) == hk.size(), "K adjunction not injective" + at);
}

Outcome criterion5() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  const TensorRing& ctx = qnakRing();
  CampaignConfig cfg;
  for (std::size_t i = 0; i < kStructuralSamples; ++i) {
    Rng rng(sampleSeed(5, i));
    PairModule p = randomPair(ctx, cfg, rng);
    FdModule x = randomModule(ctx.r(), cfg, rng);
    checkPairStructure(ctx, p, x, rng, o, i);
    CopairModule c = randomCopair(ctx, cfg, rng);
    FdModule y = randomModule(ctx.rOp(), cfg, rng);
    checkCopairStructure(ctx, c, y, rng, o, i);
  }
  double t = seconds(t0);
  o.require(t < kLimitStructural, "runtime " + fmt(t));
  o.detail = std::to_string(kStructuralSamples) + " pairs and " + std::to_string(kStructuralSamples) + " copairs, " +
             fmt(t);
  return o;
}

// ------------------------------------------------------------------ 6

Outcome criterion6() {
  Outcome o;
  const TensorRing& ctx = qnakRing();
  Certificates certs = computeCertificates(ctx);
  AlgebraPtr r = ctx.r();
  for (std::size_t s = 0; s < r->idempotentCount(); ++s) {
    o.require(isProjective(pairToFlat(ctx, ind(ctx, FdModule::projective(r, s)))), "Ind P not projective");
    FdModule inj = kDual(FdModule::projective(r, s), ctx.rOp());
    o.require(isInjective(copairToFlat(ctx, coind(ctx, inj))), "Coind E not injective");
  }
  CampaignConfig cfg;
  std::size_t projPos = 0, injPos = 0, flatPos = 0;
  for (std::size_t i = 0; i < kLemmaSamples; ++i) {
    Rng rng(sampleSeed(6, i));
    // every third sample is induced from a random module so positives occur
    PairModule p = i % 3 == 0 ? ind(ctx, randomModule(r, cfg, rng)) : randomPair(ctx, cfg, rng);
    FdModule z = pairToFlat(ctx, p);
    const bool proj = isProjective(z), flat = isFlat(z);
    projPos += proj;
    flatPos += flat;
    o.require(toVerdict(proj) == phiMembership(ctx, p, ClassTag::Proj, certs.r).verdict, "Proj vs Phi(Proj)");
    o.require(toVerdict(flat) == phiMembership(ctx, p, ClassTag::Flat, certs.r).verdict, "Flat vs Phi(Flat)");
    CopairModule c = i % 3 == 0 ? coind(ctx, randomModule(ctx.rOp(), cfg, rng)) : randomCopair(ctx, cfg, rng);
    const bool inj = isInjective(copairToFlat(ctx, c));
    injPos += inj;
    o.require(toVerdict(inj) == psiMembership(ctx, c, ClassTag::Inj, certs.r).verdict, "Inj vs Psi(Inj)");
  }
  o.require(projPos > 0 && injPos > 0, "no positive samples");
  o.detail = std::to_string(kLemmaSamples) + " pairs/copairs; projective " + std::to_string(projPos) + ", flat " +
             std::to_string(flatPos) + ", injective " + std::to_string(injPos);
  return o;
}

// ------------------------------------------------------------------ 7

Outcome criterion7() {
  Outcome o;
  const TensorRing& ctx = a3Ring();
  FdModule mRight = ctx.m().asRightModule(ctx.rOp());
  CampaignConfig cfg;
  std::size_t pdChecked = 0, pdPositive = 0, idChecked = 0, idPositive = 0;
  for (std::size_t i = 0; i < kTransferSamples; ++i) {
    Rng rng(sampleSeed(7, i));
    FdModule x = randomModule(ctx.r(), cfg, rng);
    DimBound pdx = pdBound(x);
    if (pdx.finite) {
      bool torZero = true;
      for (std::size_t n = 1; n <= pdx.value; ++n) torZero = torZero && torDim(mRight, x, n) == 0u;
      if (torZero) {
        ++pdChecked;
        pdPositive += pdx.value > 0;
        DimBound pdt = pdBound(pairToFlat(ctx, ind(ctx, x)));
        o.require(pdt == pdx, "pd transfer at sample " + std::to_string(i) + ": " + pdx.str() + " vs " + pdt.str());
      }
    }
    FdModule y = randomModule(ctx.rOp(), cfg, rng);
    DimBound idy = idBound(y);
    if (idy.finite) {
      bool extZero = true;
      for (std::size_t n = 1; n <= idy.value; ++n) extZero = extZero && extDim(mRight, y, n) == 0u;
      if (extZero) {
        ++idChecked;
        idPositive += idy.value > 0;
        DimBound idt = idBound(copairToFlat(ctx, coind(ctx, y)));
        o.require(idt == idy, "id transfer at sample " + std::to_string(i) + ": " + idy.str() + " vs " + idt.str());
      }
    }
  }
  o.require(pdChecked >= kTransferMinimum, "too few pd samples");
  o.require(idChecked >= kTransferMinimum, "too few id samples");
  o.detail = "pd: " + std::to_string(pdChecked) + " checked (" + std::to_string(pdPositive) + " with pd > 0); id: " +
             std::to_string(idChecked) + " checked (" + std::to_string(idPositive) + " with id > 0)";
  return o;
}

// ------------------------------------------------------------------ 8

/// Structure constants of [[A, V], [U, B]] with zero pairings, basis A, B, U, V.
std::vector<Scalar> matrixRingTable(const Algebra& a, const Algebra& b, const Bimodule& u, const Bimodule& v) {
  const std::size_t da = a.dim(), db = b.dim(), du = u.dim(), dv = v.dim();
  const std::size_t n = da + db + du + dv, oB = da, oU = da + db, oV = da + db + du;
  std::vector<Scalar> t(n * n * n, 0);
  auto at = [&](std::size_t i, std::size_t j, std::size_t l) -> Scalar& { return t[(i * n + j) * n + l]; };
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      for (std::size_t l = 0; l < da; ++l) at(i, j, l) = a.constant(i, j, l);
    }
  }
  for (std::size_t i = 0; i < db; ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      for (std::size_t l = 0; l < db; ++l) at(oB + i, oB + j, oB + l) = b.constant(i, j, l);
    }
  }
  // row 2 col 1: b * u and u * a
  for (std::size_t j = 0; j < du; ++j) {
    for (std::size_t l = 0; l < du; ++l) {
      for (std::size_t i = 0; i < db; ++i) at(oB + i, oU + j, oU + l) = u.leftAction(i)(l, j);
      for (std::size_t i = 0; i < da; ++i) at(oU + j, i, oU + l) = u.rightAction(i)(l, j);
    }
  }
  // row 1 col 2: a * v and v * b
  for (std::size_t j = 0; j < dv; ++j) {
    for (std::size_t l = 0; l < dv; ++l) {
      for (std::size_t i = 0; i < da; ++i) at(i, oV + j, oV + l) = v.leftAction(i)(l, j);
      for (std::size_t i = 0; i < db; ++i) at(oV + j, oB + i, oV + l) = v.rightAction(i)(l, j);
    }
  }
  return t;
}

Outcome criterion8() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  AlgebraPtr r = qnak().r;
  MoritaRing mr = moritaContextRing(r, r, qnak().m, qnak().m);
  std::vector<Scalar> oracle = matrixRingTable(*mr.a, *mr.b, mr.u, mr.v);
  const std::vector<Scalar>& table = mr.ring.t->structConst();
  o.require(table.size() == oracle.size(), "table size");
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < std::min(table.size(), oracle.size()); ++i) mismatches += table[i] != oracle[i];
  o.require(mismatches == 0, std::to_string(mismatches) + " structure constants differ");

  IgCertificate certL = igData(mr.ring.t), certA = igData(mr.a), certB = igData(mr.b);
  CampaignConfig cfg;
  std::size_t positives = 0;
  for (std::size_t i = 0; i < kMoritaSamples; ++i) {
    Rng rng(sampleSeed(8, i));
    auto draw = [&]() -> MoritaQuadruple {
      if (i % 2 == 1) return moritaTranslateInverse(mr, ind(mr.ring, randomModule(mr.c, cfg, rng)));
      FdModule x = randomModule(mr.a, cfg, rng), y = randomModule(mr.b, cfg, rng);
      FdModule ux = tensorOverAlgebra(mr.u, x).module, vy = tensorOverAlgebra(mr.v, y).module;
      return MoritaQuadruple{x, y, randomHom(ux, y, rng), randomHom(vy, x, rng)};
    };
    MoritaQuadruple q = draw();
    checkQuadruple(mr, q);
    // quadruple route: f, g injective with Gorenstein projective cokernels
    FdModule ux = tensorOverAlgebra(mr.u, q.x).module, vy = tensorOverAlgebra(mr.v, q.y).module;
    ModHom f{ux, q.y, q.f}, g{vy, q.x, q.g};
    Verdict quad = verdictAnd(toVerdict(f.isInjective() && g.isInjective()),
                              verdictAnd(isGorensteinProjective(cokernelMod(f).module, certB),
                                         isGorensteinProjective(cokernelMod(g).module, certA)));
    // ring route: direct test over the context ring
    Verdict direct = isGorensteinProjective(pairToFlat(mr.ring, moritaTranslate(mr, q)), certL);
    positives += direct == Verdict::True;
    o.require(quad != Verdict::Unknown && quad == direct, "quadruple " + std::to_string(i) + " routes differ");
  }
  double t = seconds(t0);
  o.require(t < kLimitMorita, "runtime " + fmt(t));
  o.detail = std::to_string(table.size()) + " constants, " + std::to_string(kMoritaSamples) + " quadruples (" +
             std::to_string(positives) + " Gorenstein projective), " + fmt(t);
  return o;
}

// ------------------------------------------------------------------ 9

/// dim Tor_1(M, X) = dim ker(M (x) Omega X -> M (x) P).
std::size_t torOneBySyzygy(const Bimodule& m, const FdModule& x) {
  ProjectiveCover pc = projectiveCover(x);
  SubmoduleResult om = kernelMod(pc.epi);
  TensorModule mo = tensorOverAlgebra(m, om.module);
  TensorModule mp = tensorOverAlgebra(m, pc.cover.module);
  Mat map = tensorMap(m, mo, mp, om.inclusion.matrix);
  return mo.module.dim() - rank(map);
}

Outcome criterion9() {
  Outcome o;
  const TensorRing& ctx = qnakRing();
  Certificates certs = computeCertificates(ctx);
  ClassifyResult st = classifyOverT(ctx, stalk(ctx, FdModule::regular(ctx.r())), ClassTag::GP, Method::Both, certs);
  o.require(st.structural == Verdict::False && st.direct == Verdict::False, "stalk (R,0) not rejected by both routes");

  for (auto [n, h, i, j] : std::vector<std::array<std::size_t, 4>>{{3, 2, 2, 3}, {4, 3, 1, 3}, {5, 3, 2, 4}}) {
    bool rejected = false;
    try {
      exampleQNak(Field(2), n, h, i, j);
    } catch (const Error& e) {
      rejected = e.kind() == ErrorKind::PreconditionViolated;
    }
    o.require(rejected, "guard accepted j - i < h");
  }

  AlgebraPtr r = buildPathAlgebra(Field(3), Quiver{2, {{"a", 0, 1}, {"b", 1, 0}}}, {{"a", "b"}});
  TensorRing neg = TensorRing::build(r, simpleProductBimodule(r, 0, 1));
  ConditionT c = checkConditionT(neg);
  o.require(c.status == ConditionT::Status::Fails && c.witness.has_value(), "conditionT did not fail");
  std::string wit = c.str();
  if (c.witness) {
    const TorWitness& w = *c.witness;
    o.require(w.degree == 1, "witness degree");
    FdModule arg = tensorOverAlgebra(neg.tp.powers[w.power], FdModule::projective(r, w.vertex)).module;
    std::size_t oracle = torOneBySyzygy(neg.m(), arg);
    o.require(oracle == w.torDim && oracle > 0, "witness Tor_1 " + std::to_string(w.torDim) + " vs oracle " +
                                                    std::to_string(oracle));
  }
  CampaignConfig cfg;
  cfg.samples = 5;
  o.require(verifyTheorem(neg, Variant::GP, cfg).status == "HYPOTHESES-UNMET", "campaign not flagged");
  o.detail = "stalk rejected, guard rejects j - i < h, " + wit;
  return o;
}

// ------------------------------------------------------------------ 10

std::pair<int, std::string> runCli(const std::string& args) {
  std::string cmd = std::string(TR_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Outcome criterion10() {
  Outcome o;
  const TensorRing& ctx = qnakRing();
  CampaignConfig cfg;
  cfg.seed = 1234;
  cfg.samples = 50;
  for (Variant v : {Variant::GP, Variant::GI, Variant::GF}) {
    o.require(dumpJson(verifyTheorem(ctx, v, cfg).toJson()) == dumpJson(verifyTheorem(ctx, v, cfg).toJson()),
              std::string("library report differs for ") + variantName(v));
  }
  o.require(dumpJson(runLemmaSuite(ctx, cfg).toJson()) == dumpJson(runLemmaSuite(ctx, cfg).toJson()),
            "lemma report differs");

  auto dir = std::filesystem::temp_directory_path() / "tring_acceptance";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  auto ex = dir / "ex";
  o.require(runCli("example qnak --field 2 --n 3 --h 2 --i 1 --j 3 -o " + ex.string()).first == 0, "example failed");
  for (const std::string v : {"gp", "gi", "gf"}) {
    auto a = dir / (v + "_a.json"), b = dir / (v + "_b.json");
    auto ra = runCli("verify " + v + " " + ex.string() + " --samples 200 --seed 7 -o " + a.string());
    auto rb = runCli("verify " + v + " " + ex.string() + " --samples 200 --seed 7 -o " + b.string());
    o.require(ra.first == 0 && rb.first == 0, "verify " + v + " exit codes");
    o.require(!slurp(a).empty() && slurp(a) == slurp(b), "CLI report differs for " + v);
  }
  std::filesystem::remove_all(dir);
  o.detail = "library and CLI reports byte-identical on repeat";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{
      {1, "example reconstruction", criterion1},
      {2, "GP campaign, pair route vs direct route", [] { return pairCampaign(ClassTag::GP, Variant::GP); }},
      {3, "GI campaign over copairs", criterion3},
      {4, "GF campaign", [] { return pairCampaign(ClassTag::GF, Variant::GF); }},
      {5, "canonical sequences and adjunctions", criterion5},
      {6, "Ind/Coind of projectives/injectives, Proj/Flat/Inj membership", criterion6},
      {7, "pd and id transfer", criterion7},
      {8, "Morita context ring", criterion8},
      {9, "negative controls", criterion9},
      {10, "determinism", criterion10},
  };
  int failed = 0;
  for (const Criterion& c : all) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.name;
    if (!o.detail.empty()) std::cout << " -- " << o.detail;
    for (const std::string& p : o.problems) std::cout << " | " << p;
    std::cout << std::endl;
    failed += !o.ok;
  }
  std::cout << (all.size() - failed) << "/" << all.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
