#include "tring/verhar.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>

namespace tr {

std::uint64_t sampleSeed(std::uint64_t seed, std::size_t index) {
  // splitmix64 of the seed offset by the sample index
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

Scalar draw(Rng& rng, std::uint32_t n) { return static_cast<Scalar>(rng() % n); }

Vec randomVec(const Field& f, std::size_t n, Rng& rng) {
  Vec v(n);
  for (auto& s : v) s = draw(rng, f.p());
  return v;
}

}  // namespace

FdModule randomModule(const AlgebraPtr& a, const CampaignConfig& cfg, Rng& rng) {
  if (cfg.maxGenerators == 0 || a->idempotentCount() == 0) return FdModule::zero(a);
  const auto n = static_cast<std::uint32_t>(a->idempotentCount());
  const std::size_t g = 1 + rng() % cfg.maxGenerators;
  std::vector<std::size_t> verts(g);
  for (auto& v : verts) v = draw(rng, n);
  ProjSum p0 = makeProjSum(a, verts);
  const FdModule& p = p0.module;
  const std::size_t rels = rng() % (cfg.maxPresentationCols + 1);
  std::vector<Vec> span;
  for (std::size_t k = 0; k < rels; ++k) {
    const std::size_t t = draw(rng, n);
    // a map A e_t -> P0 is determined by the image of e_t, any element of e_t P0
    Vec x = matVec(p.actionOf(a->idempotents()[t]), randomVec(a->field(), p.dim(), rng));
    for (std::size_t i = 0; i < a->dim(); ++i) span.push_back(matVec(p.action(i), x));
  }
  if (span.empty()) return p;
  return quotientModule(p, Mat::fromColumns(a->field(), p.dim(), span)).module;
}

Mat randomHom(const FdModule& x, const FdModule& y, Rng& rng) {
  const Field& f = x.field();
  Mat out(f, y.dim(), x.dim());
  for (const ModHom& h : homBasis(x, y)) {
    const Scalar c = draw(rng, f.p());
    if (c != 0) out = add(out, scale(h.matrix, c));
  }
  return out;
}

PairModule randomPair(const TensorRing& ctx, const CampaignConfig& cfg, Rng& rng) {
  FdModule x = randomModule(ctx.r(), cfg, rng);
  TensorModule mx = tensorOverAlgebra(ctx.m(), x);
  Mat u = randomHom(mx.module, x, rng);
  return makePair(ctx, std::move(x), std::move(u), false);
}

CopairModule randomCopair(const TensorRing& ctx, const CampaignConfig& cfg, Rng& rng) {
  FdModule y = randomModule(ctx.rOp(), cfg, rng);
  TensorModule ym = tensorOverAlgebra(y, ctx.m(), ctx.rOp());
  Mat vbar = randomHom(ym.module, y, rng);
  return makeCopair(ctx, std::move(y), std::move(vbar), false);
}

// ---------------------------------------------------------------- reports

std::size_t VerdictReport::agreeCount() const {
  return static_cast<std::size_t>(std::count_if(samples.begin(), samples.end(), [](const SampleRecord& r) {
    return r.agree && r.structural != Verdict::Unknown && r.direct != Verdict::Unknown;
  }));
}

std::size_t VerdictReport::disagreeCount() const {
  return static_cast<std::size_t>(
      std::count_if(samples.begin(), samples.end(), [](const SampleRecord& r) { return !r.agree; }));
}

std::size_t VerdictReport::unknownCount() const {
  return static_cast<std::size_t>(std::count_if(samples.begin(), samples.end(), [](const SampleRecord& r) {
    return r.structural == Verdict::Unknown || r.direct == Verdict::Unknown;
  }));
}

const PropertyResult* VerdictReport::property(const std::string& name) const {
  for (const auto& p : properties) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

int VerdictReport::exitCode() const {
  switch (verdict) {
    case Verdict::True: return 0;
    case Verdict::False: return 1;
    case Verdict::Unknown: return 2;
  }
  return 2;
}

namespace {

Json configToJson(const CampaignConfig& c) {
  Json classes = Json::array();
  for (ClassTag t : c.classes) classes.push_back(classTagName(t));
  return Json{{"seed", c.seed},
              {"samples", c.samples},
              {"maxGenerators", c.maxGenerators},
              {"maxPresentationCols", c.maxPresentationCols},
              {"classes", classes},
              {"maxLen", c.maxLen},
              {"torBound", c.k}};
}

Json dimBoundJson(const DimBound& b) { return Json{{"finite", b.finite}, {"value", b.value}, {"text", b.str()}}; }

}  // namespace

Json VerdictReport::toJson() const {
  Json s = Json::array();
  std::size_t structuralTrue = 0, mono = 0;
  for (const auto& r : samples) {
    structuralTrue += r.structural == Verdict::True;
    mono += r.partMono;
    s.push_back(Json{{"index", r.index},
                     {"seed", r.seed},
                     {"dim", r.dim},
                     {"partMono", r.partMono},
                     {"structural", verdictName(r.structural)},
                     {"direct", verdictName(r.direct)},
                     {"combined", verdictName(r.combined)},
                     {"agree", r.agree}});
  }
  Json props = Json::array();
  for (const auto& p : properties) {
    props.push_back(Json{{"name", p.name},
                         {"checked", p.checked},
                         {"skipped", p.skipped},
                         {"positives", p.positives},
                         {"passed", p.passed()},
                         {"failures", p.failures}});
  }
  Json out{{"kind", kind},
           {"status", status},
           {"verdict", verdictName(verdict)},
           {"config", configToJson(config)},
           {"summary", Json{{"samples", samples.size()},
                            {"agree", agreeCount()},
                            {"disagree", disagreeCount()},
                            {"unknown", unknownCount()},
                            {"structuralTrue", structuralTrue},
                            {"partMono", mono}}},
           {"samples", std::move(s)},
           {"counterexamples", counterexamples},
           {"properties", std::move(props)},
           {"hypotheses", hypotheses},
           {"certificates", certificates},
           {"environment", environment},
           {"notes", notes}};
  if (!variant.empty()) out["variant"] = variant;
  return out;
}

Json hypothesisToJson(const HypothesisReport& h) {
  Json ct{{"status", h.conditionT.str()}, {"verdict", verdictName(h.conditionT.verdict())}, {"reason", h.conditionT.reason},
          {"bound", h.conditionT.bound}};
  if (h.conditionT.witness) {
    const TorWitness& w = *h.conditionT.witness;
    ct["witness"] = Json{{"power", w.power}, {"vertex", w.vertex + 1}, {"degree", w.degree}, {"torDim", w.torDim}};
  }
  return Json{{"variant", variantName(h.variant)},
              {"conditionT", std::move(ct)},
              {"pdLeftM", dimBoundJson(h.pdLeftM)},
              {"fdLeftM", dimBoundJson(h.fdLeftM)},
              {"pdRightM", dimBoundJson(h.pdRightM)},
              {"fdRightM", dimBoundJson(h.fdRightM)},
              {"leftFlat", h.leftFlat},
              {"applicable", verdictName(h.applicable)},
              {"notes", h.notes}};
}

Json certificatesToJson(const Certificates& c) {
  auto one = [](const IgCertificate& g) {
    return Json{{"gLeft", dimBoundJson(g.gLeft)}, {"gRight", dimBoundJson(g.gRight)}, {"bound", g.bound}};
  };
  return Json{{"R", one(c.r)}, {"T", one(c.t)}, {"maxLen", c.maxLen}};
}

std::string bimoduleDigest(const Bimodule& m) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : dumpJson(bimoduleToJson(m))) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json environmentJson(const TensorRing& ctx) {
  return Json{{"field", fieldToJson(ctx.r()->field())},
              {"digests", Json{{"R", ctx.r()->digest()}, {"M", bimoduleDigest(ctx.m())}, {"T", ctx.t->digest()}}},
              {"dims", Json{{"R", ctx.r()->dim()}, {"M", ctx.m().dim()}, {"T", ctx.t->dim()}, {"N", ctx.nilIndex()}}},
              {"version", kLibraryVersion}};
}

Json sampleBundle(const SampleRecord& rec, const Json& object, const std::string& objectKind, ClassTag tag,
                  const Certificates& certs) {
  return Json{{"sample", rec.index},
              {"seed", rec.seed},
              {"kind", objectKind},
              {"class", classTagName(tag)},
              {"object", object},
              {"structural", verdictName(rec.structural)},
              {"direct", verdictName(rec.direct)},
              {"certificates", certificatesToJson(certs)}};
}

ClassifyResult replayBundle(const TensorRing& ctx, const Json& bundle, const Certificates& certs) {
  const ClassTag tag = parseClassTag(bundle.at("class").get<std::string>());
  const std::string kind = bundle.at("kind").get<std::string>();
  if (kind == "pair") return classifyOverT(ctx, pairFromJson(bundle.at("object"), ctx, "/object"), tag, Method::Both, certs);
  if (kind == "copair") {
    return classifyCopairOverT(ctx, copairFromJson(bundle.at("object"), ctx, "/object"), tag, Method::Both, certs);
  }
  throw Error(ErrorKind::InvalidInput, "unknown bundle kind '" + kind + "'");
}

VerdictReport verifyTheorem(const TensorRing& ctx, Variant variant, const CampaignConfig& cfg) {
  VerdictReport rep;
  rep.kind = "theorem";
  rep.variant = variantName(variant);
  rep.config = cfg;
  HypothesisReport hyp = hypothesisReport(ctx, variant, cfg.k, cfg.maxLen);
  rep.hypotheses = hypothesisToJson(hyp);
  const Certificates certs = computeCertificates(ctx, cfg.maxLen);
  rep.certificates = certificatesToJson(certs);
  rep.environment = environmentJson(ctx);
  const ClassTag tag = variant == Variant::GP ? ClassTag::GP : variant == Variant::GI ? ClassTag::GI : ClassTag::GF;
  if (variant == Variant::GF) rep.notes.push_back("Gorenstein flat is tested as Gorenstein projective");

  for (std::size_t i = 0; i < cfg.samples; ++i) {
    SampleRecord rec;
    rec.index = i;
    rec.seed = sampleSeed(cfg.seed, i);
    Rng rng(rec.seed);
    ClassifyResult res;
    Json object;
    std::string kind;
    if (variant == Variant::GI) {
      CopairModule c = randomCopair(ctx, cfg, rng);
      res = classifyCopairOverT(ctx, c, tag, Method::Both, certs);
      object = copairToJson(c);
      kind = "copair";
      rec.dim = c.y.dim();
    } else {
      PairModule p = randomPair(ctx, cfg, rng);
      res = classifyOverT(ctx, p, tag, Method::Both, certs);
      object = pairToJson(p);
      kind = "pair";
      rec.dim = p.x.dim();
    }
    rec.partMono = res.uMono;
    rec.structural = res.structural;
    rec.direct = res.direct;
    rec.combined = res.combined;
    rec.agree = !res.counterexample;
    if (res.counterexample) rep.counterexamples.push_back(sampleBundle(rec, object, kind, tag, certs));
    rep.samples.push_back(rec);
  }

  if (hyp.applicable != Verdict::True) {
    rep.status = "HYPOTHESES-UNMET";
    rep.verdict = Verdict::Unknown;
    rep.notes.push_back("hypotheses not verified; both routes were run for exploration only");
  } else if (rep.disagreeCount() > 0) {
    rep.status = "COUNTEREXAMPLE";
    rep.verdict = Verdict::False;
  } else if (rep.unknownCount() > 0) {
    rep.status = "UNKNOWN";
    rep.verdict = Verdict::Unknown;
  } else {
    rep.status = "VERIFIED";
    rep.verdict = Verdict::True;
  }
  return rep;
}

// ---------------------------------------------------------------- lemma suite

namespace {

class Suite {
 public:
  PropertyResult& operator[](const std::string& name) {
    for (auto& p : props_) {
      if (p.name == name) return p;
    }
    props_.push_back(PropertyResult{name, 0, 0, 0, {}});
    return props_.back();
  }
  std::vector<PropertyResult> take() { return std::move(props_); }

 private:
  std::vector<PropertyResult> props_;
};

void expect(PropertyResult& p, bool ok, const std::string& what) {
  ++p.checked;
  if (!ok) p.failures.push_back(what);
}

std::string tag(std::size_t sample, const std::string& what) { return "sample " + std::to_string(sample) + ": " + what; }

std::vector<std::size_t> topCounts(const FdModule& x) {
  std::vector<std::size_t> counts(x.algebra().idempotentCount(), 0);
  if (x.dim() == 0) return counts;
  for (std::size_t s : projectiveCover(x).cover.vertices) ++counts[s];
  return counts;
}

/// Free of finite rank: projective with top a multiple of the top of A.
bool isFree(const FdModule& x, const std::vector<std::size_t>& regularTop) {
  if (x.dim() == 0) return true;
  if (x.dim() % x.algebra().dim() != 0 || !isProjective(x)) return false;
  const std::size_t rk = x.dim() / x.algebra().dim();
  auto counts = topCounts(x);
  for (std::size_t s = 0; s < counts.size(); ++s) {
    if (counts[s] != rk * regularTop[s]) return false;
  }
  return true;
}

bool isIso(const FdModule& src, const FdModule& tgt, const Mat& m) {
  return src.dim() == tgt.dim() && rank(m) == src.dim() && isModuleMap(src, tgt, m);
}

/// Tor_{>=1}(yRight, x) vanishing: False with a nonzero witness, True when
/// the resolution of x is finite and all groups vanish, Unknown otherwise.
Verdict torVanishes(const std::vector<const FdModule*>& rights, const FdModule& x, std::size_t k) {
  Resolution res = minimalResolution(x, k + 1);
  const std::size_t top = res.complete ? res.length() : k;
  for (const FdModule* y : rights) {
    for (std::size_t n = 1; n <= top; ++n) {
      auto d = torDimFrom(res, *y, n);
      if (d && *d != 0) return Verdict::False;
    }
  }
  return res.complete ? Verdict::True : Verdict::Unknown;
}

bool conflict(Verdict a, Verdict b) {
  return a != Verdict::Unknown && b != Verdict::Unknown && a != b;
}

FdModule injectiveSum(const TensorRing& ctx, const std::vector<std::size_t>& verts) {
  std::vector<FdModule> parts;
  for (std::size_t s : verts) parts.push_back(kDual(FdModule::projective(ctx.r(), s), ctx.rOp()));
  return directSumModules(parts, ctx.rOp());
}

std::vector<std::size_t> randomVertices(const Algebra& a, const CampaignConfig& cfg, Rng& rng) {
  std::vector<std::size_t> v(1 + rng() % std::max<std::size_t>(cfg.maxGenerators, 1));
  for (auto& s : v) s = rng() % a.idempotentCount();
  return v;
}

}  // namespace

VerdictReport runLemmaSuite(const TensorRing& ctx, const CampaignConfig& cfg) {
  VerdictReport rep;
  rep.kind = "lemmas";
  rep.config = cfg;
  rep.environment = environmentJson(ctx);
  const Certificates certs = computeCertificates(ctx, cfg.maxLen);
  rep.certificates = certificatesToJson(certs);
  const TensorPowers& tp = ctx.tp;
  const AlgebraPtr& r = ctx.r();
  const Field& f = r->field();
  const std::size_t n = tp.nilIndex;
  const std::size_t L = cfg.maxLen;
  Suite suite;

  std::vector<FdModule> rightPowers;  // M^{(x)i} as right modules, i = 0..N
  for (std::size_t i = 0; i <= n; ++i) rightPowers.push_back(tp.powers[i].asRightModule(ctx.rOp()));
  const FdModule& mRight = rightPowers[1];
  const auto regTopR = topCounts(FdModule::regular(r));
  const auto regTopT = topCounts(FdModule::regular(ctx.t));
  const ConditionT condT = checkConditionT(ctx, cfg.k);

  // Ind of indecomposable projectives, Coind of indecomposable injectives.
  for (std::size_t s = 0; s < r->idempotentCount(); ++s) {
    PairModule ip = ind(ctx, FdModule::projective(r, s));
    const bool direct = isProjective(pairToFlat(ctx, ip));
    const Verdict phi = phiMembership(ctx, ip, ClassTag::Proj, certs.r, L).verdict;
    expect(suite["ind-of-projectives"], direct && phi == Verdict::True,
           "vertex " + std::to_string(s + 1) + ": direct=" + (direct ? "true" : "false") + " phi=" + verdictName(phi));
    CopairModule ci = coind(ctx, kDual(FdModule::projective(r, s), ctx.rOp()));
    const bool directI = isInjective(copairToFlat(ctx, ci));
    const Verdict psi = psiMembership(ctx, ci, ClassTag::Inj, certs.r, L).verdict;
    expect(suite["coind-of-injectives"], directI && psi == Verdict::True,
           "vertex " + std::to_string(s + 1) + ": direct=" + (directI ? "true" : "false") + " psi=" + verdictName(psi));
  }
  for (std::size_t k = 1; k <= std::max<std::size_t>(cfg.maxGenerators, 1); ++k) {
    std::vector<FdModule> parts(k, FdModule::regular(r));
    PairModule ip = ind(ctx, directSumModules(parts, r));
    expect(suite["free-equals-ind-free"], isFree(pairToFlat(ctx, ip), regTopT), "Ind(R^" + std::to_string(k) + ") not free");
  }

  // Lemma on powers of M under condition (T).
  {
    PropertyResult& p = suite["power-dimensions-finite"];
    if (condT.status != ConditionT::Status::Holds) {
      ++p.skipped;
    } else {
      for (bool left : {true, false}) {
        DimBound base = left ? pdBound(ctx.m().asLeftModule(), L) : pdBound(mRight, L);
        if (!base.finite) {
          ++p.skipped;
          continue;
        }
        for (std::size_t i = 1; i <= n; ++i) {
          DimBound b = left ? pdBound(tp.powers[i].asLeftModule(), L) : pdBound(rightPowers[i], L);
          ++p.positives;
          expect(p, b.finite,
                 std::string(left ? "left" : "right") + " pd of M^" + std::to_string(i) + " is " + b.str());
        }
      }
    }
  }

  for (std::size_t i = 0; i < cfg.samples; ++i) {
    Rng rng(sampleSeed(cfg.seed, i));
    PairModule p = randomPair(ctx, cfg, rng);
    CopairModule c = randomCopair(ctx, cfg, rng);
    FdModule x2 = randomModule(r, cfg, rng);
    FdModule y2 = randomModule(ctx.rOp(), cfg, rng);
    const std::vector<std::size_t> pv = randomVertices(*r, cfg, rng);
    const std::size_t freeRank = 1 + rng() % std::max<std::size_t>(cfg.maxGenerators, 1);
    const FdModule& x = p.x;
    const FdModule& y = c.y;
    const FdModule zp = pairToFlat(ctx, p);
    const FdModule zc = copairToFlat(ctx, c);

    // Proj(T) = Phi(Proj R), Flat(T) = Phi(Flat R), free modules.
    {
      std::vector<PairModule> objs{p, ind(ctx, x), ind(ctx, makeProjSum(r, pv).module),
                                   ind(ctx, directSumModules(std::vector<FdModule>(freeRank, FdModule::regular(r)), r))};
      for (const PairModule& o : objs) {
        const FdModule z = pairToFlat(ctx, o);
        const bool dp = isProjective(z);
        const Verdict phiP = phiMembership(ctx, o, ClassTag::Proj, certs.r, L).verdict;
        PropertyResult& pp = suite["projective-equals-phi-proj"];
        pp.positives += dp;
        expect(pp, toVerdict(dp) == phiP,
               tag(i, std::string("direct=") + (dp ? "true" : "false") + " phi=" + verdictName(phiP)));
        const bool df = isFlat(z);
        const Verdict phiF = phiMembership(ctx, o, ClassTag::Flat, certs.r, L).verdict;
        PropertyResult& pf = suite["flat-equals-phi-flat"];
        pf.positives += df;
        expect(pf, toVerdict(df) == phiF,
               tag(i, std::string("direct=") + (df ? "true" : "false") + " phi=" + verdictName(phiF)));
        const bool freeT = isFree(z, regTopT);
        const bool freeR = o.uInjective() && isFree(cokFunctor(o).module, regTopR);
        PropertyResult& pfree = suite["free-equals-ind-free"];
        pfree.positives += freeT;
        expect(pfree, freeT == freeR, tag(i, std::string("free over T=") + (freeT ? "true" : "false")));
      }
    }

    // Inj(T^op) = Psi(Inj R^op).
    {
      std::vector<CopairModule> objs{c, coind(ctx, y), coind(ctx, injectiveSum(ctx, pv))};
      for (const CopairModule& o : objs) {
        const bool di = isInjective(copairToFlat(ctx, o));
        const Verdict psi = psiMembership(ctx, o, ClassTag::Inj, certs.r, L).verdict;
        PropertyResult& pi = suite["injective-equals-psi-inj"];
        pi.positives += di;
        expect(pi, toVerdict(di) == psi, tag(i, std::string("direct=") + (di ? "true" : "false") + " psi=" + verdictName(psi)));
      }
    }

    // Zero detection and the essential monomorphism S K [Y,v] -> [Y,v].
    {
      SubmoduleResult k = kFunctor(c);
      PropertyResult& pz = suite["zero-detection"];
      pz.positives += y.dim() == 0;
      expect(pz, (k.module.dim() == 0) == (y.dim() == 0), tag(i, "ker v dim " + std::to_string(k.module.dim())));
      CopairModule sk = makeCopair(ctx, k.module, Mat(f, k.module.dim(), tensorOverAlgebra(k.module, ctx.m(), ctx.rOp()).module.dim()));
      const Mat& incl = k.inclusion.matrix;
      bool ok = isModuleMap(copairToFlat(ctx, sk), zc, incl) && rank(incl) == incl.cols();
      EchelonBasis img(f, y.dim());
      for (std::size_t col = 0; col < incl.cols(); ++col) img.add(incl.col(col));
      const Mat soc = socleSubspace(zc);
      for (std::size_t col = 0; ok && col < soc.cols(); ++col) ok = img.contains(soc.col(col));
      expect(suite["socle-essential"], ok, tag(i, "kernel of v is not an essential submodule"));
    }

    // Canonical sequences.
    Presentation pres = canonicalPresentation(ctx, p);
    expect(suite["presentation-exact"], pres.exact, tag(i, "presentation not exact"));
    Copresentation copres = canonicalCopresentation(ctx, c);
    expect(suite["copresentation-exact"], copres.exact, tag(i, "copresentation not exact"));

    // C o Ind = Id and K o Coind = Id.
    {
      InducedModule ix = induce(ctx, x2);
      QuotientResult q = cokFunctor(ix.pair);
      expect(suite["cok-ind-identity"], isIso(x2, q.module, q.projection.matrix.columns(0, x2.dim())),
             tag(i, "X -> C(Ind X) not an isomorphism"));
      CoinducedModule cy = coinduce(ctx, y2);
      SubmoduleResult k = kFunctor(cy.copair);
      expect(suite["k-coind-identity"], isIso(k.module, y2, matMul(coindEvaluation(ctx, cy), k.inclusion.matrix)),
             tag(i, "K(Coind Y) -> Y not an isomorphism"));
    }

    // Ind -| U: Hom_T(Ind X, Z) = Hom_R(X, U Z).
    {
      InducedModule ix = induce(ctx, x2);
      const FdModule zi = pairToFlat(ctx, ix.pair);
      PropertyResult& pa = suite["ind-adjunction"];
      expect(pa, homDim(zi, zp) == homDim(x2, x), tag(i, "hom dimensions differ"));
      Mat g = randomHom(x2, x, rng);
      Mat gh = matMul(pres.eps.matrix, indMap(ctx, ix, pres.middle, g));
      expect(pa, isModuleMap(zi, zp, gh) && gh.columns(0, x2.dim()) == g, tag(i, "extension of an R-map failed"));
      Mat h = randomHom(zi, zp, rng);
      Mat back = matMul(pres.eps.matrix, indMap(ctx, ix, pres.middle, h.columns(0, x2.dim())));
      expect(pa, back == h, tag(i, "T-map not recovered from its restriction"));
    }

    // C -| S: Hom_T(Z, S W) = Hom_R(C Z, W).
    {
      const FdModule zs = pairToFlat(ctx, stalk(ctx, x2));
      QuotientResult q = cokFunctor(p);
      PropertyResult& pa = suite["cok-stalk-adjunction"];
      expect(pa, homDim(zp, zs) == homDim(q.module, x2), tag(i, "hom dimensions differ"));
      Mat g = randomHom(q.module, x2, rng);
      expect(pa, isModuleMap(zp, zs, matMul(g, q.projection.matrix)), tag(i, "composite with cokernel not a T-map"));
      Mat h = randomHom(zp, zs, rng);
      expect(pa, matMul(matMul(h, q.section), q.projection.matrix) == h, tag(i, "T-map does not factor through cok"));
    }

    // U -| Coind for right modules.
    {
      CoinducedModule cy = coinduce(ctx, y2);
      const FdModule zt = copairToFlat(ctx, cy.copair);
      const Mat ev = coindEvaluation(ctx, cy);
      PropertyResult& pa = suite["coind-adjunction"];
      expect(pa, homDim(zc, zt) == homDim(y, y2), tag(i, "hom dimensions differ"));
      Mat g = randomHom(y, y2, rng);
      Mat gh = matMul(coindMap(copres.middle, cy, g), copres.eta.matrix);
      expect(pa, isModuleMap(zc, zt, gh) && matMul(ev, gh) == g, tag(i, "coextension of an R-map failed"));
      Mat h = randomHom(zc, zt, rng);
      Mat back = matMul(coindMap(copres.middle, cy, matMul(ev, h)), copres.eta.matrix);
      expect(pa, back == h, tag(i, "T-map not recovered from its evaluation"));
    }

    // S -| K for right modules.
    {
      const FdModule ys = copairToFlat(
          ctx, makeCopair(ctx, y2, Mat(f, y2.dim(), tensorOverAlgebra(y2, ctx.m(), ctx.rOp()).module.dim())));
      expect(suite["stalk-k-adjunction"], homDim(ys, zc) == homDim(y2, kFunctor(c).module),
             tag(i, "hom dimensions differ"));
    }

    // pd transfer along Ind under Tor vanishing.
    {
      PropertyResult& pt = suite["pd-transfer"];
      DimBound pdx = pdBound(x2, L);
      bool torOk = pdx.finite;
      if (torOk) {
        Resolution res = minimalResolution(x2, pdx.value + 1);
        for (std::size_t j = 1; torOk && j <= n; ++j) {
          for (std::size_t d = 1; torOk && d <= pdx.value; ++d) {
            auto t = torDimFrom(res, rightPowers[j], d);
            torOk = t && *t == 0;
          }
        }
      }
      if (!torOk) {
        ++pt.skipped;
      } else {
        DimBound pdt = pdBound(pairToFlat(ctx, ind(ctx, x2)), L);
        pt.positives += pdx.value > 0;
        expect(pt, pdt == pdx, tag(i, "pd_R X = " + pdx.str() + ", pd_T Ind X = " + pdt.str()));
      }
    }

    // id transfer along Coind under Ext vanishing.
    {
      PropertyResult& pt = suite["id-transfer"];
      DimBound idy = idBound(y2, L);
      bool extOk = idy.finite;
      for (std::size_t j = 1; extOk && j <= n; ++j) {
        Resolution res = minimalResolution(rightPowers[j], idy.value + 1);
        for (std::size_t d = 1; extOk && d <= idy.value; ++d) {
          auto e = extDimFrom(res, y2, d);
          extOk = e && *e == 0;
        }
      }
      if (!extOk) {
        ++pt.skipped;
      } else {
        DimBound idt = idBound(copairToFlat(ctx, coind(ctx, y2)), L);
        pt.positives += idy.value > 0;
        expect(pt, idt == idy, tag(i, "id Y = " + idy.str() + ", id Coind Y = " + idt.str()));
      }
    }

    // Equivalent Tor vanishing conditions under (T).
    {
      PropertyResult& pe = suite["tor-vanishing-equivalence"];
      if (condT.status != ConditionT::Status::Holds) {
        ++pe.skipped;
      } else {
        std::vector<const FdModule*> onlyM{&mRight};
        std::vector<const FdModule*> allPowers;
        for (std::size_t s = 1; s <= n; ++s) allPowers.push_back(&rightPowers[s]);
        Verdict a = Verdict::True, b = Verdict::True;
        for (std::size_t j = 0; j <= n; ++j) {
          const FdModule w = j == 0 ? x2 : tensorOverAlgebra(tp.powers[j], x2).module;
          a = verdictAnd(a, torVanishes(onlyM, w, cfg.k));
          b = verdictAnd(b, torVanishes(allPowers, w, cfg.k));
        }
        Verdict cc = torVanishes(allPowers, x2, cfg.k);
        pe.positives += a != Verdict::Unknown && b != Verdict::Unknown && cc != Verdict::Unknown;
        expect(pe, !conflict(a, b) && !conflict(b, cc) && !conflict(a, cc),
               tag(i, std::string("conditions ") + verdictName(a) + "/" + verdictName(b) + "/" + verdictName(cc)));
      }
    }

    // Tor_1(M, X) = 0 from u mono and Tor_1(M, M^i (x) cok u) = 0.
    {
      PropertyResult& pv2 = suite["tor-vanish-from-cokernel"];
      for (const PairModule* o : {&p, &pres.middle.pair}) {
        if (!o->uInjective()) {
          ++pv2.skipped;
          continue;
        }
        const FdModule ck = cokFunctor(*o).module;
        bool premise = true;
        for (std::size_t j = 0; premise && j <= n; ++j) {
          const FdModule w = j == 0 ? ck : tensorOverAlgebra(tp.powers[j], ck).module;
          auto t = torDim(mRight, w, 1, 2);
          premise = t && *t == 0;
        }
        if (!premise) {
          ++pv2.skipped;
          continue;
        }
        auto t = torDim(mRight, o->x, 1, 2);
        ++pv2.positives;
        expect(pv2, t && *t == 0, tag(i, "Tor_1(M, X) = " + (t ? std::to_string(*t) : std::string("?"))));
      }
    }
  }

  rep.properties = suite.take();
  const bool ok = std::all_of(rep.properties.begin(), rep.properties.end(), [](const PropertyResult& p) { return p.passed(); });
  rep.status = ok ? "PASS" : "FAIL";
  rep.verdict = toVerdict(ok);
  return rep;
}

}  // namespace tr
