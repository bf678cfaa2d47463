#include <doctest.h>

#include "support.hpp"

using namespace tt;

TEST_SUITE("verhar") {
  TEST_CASE("random modules") {
    AlgebraPtr r = qnak().r;
    CampaignConfig cfg;
    cfg.maxGenerators = 0;
    Rng rng(1);
    CHECK(randomModule(r, cfg, rng).dim() == 0);

    cfg.maxGenerators = 3;
    Rng a(99), b(99);
    for (int t = 0; t < 20; ++t) {
      FdModule x = randomModule(r, cfg, a), y = randomModule(r, cfg, b);
      CHECK(x.actions() == y.actions());
      // a quotient of at most maxGenerators indecomposable projectives of dimension h
      CHECK(x.dim() <= cfg.maxGenerators * 2);
      CHECK_NOTHROW(x.check());
    }
    CHECK(sampleSeed(5, 0) != sampleSeed(5, 1));
    CHECK(sampleSeed(5, 3) == sampleSeed(5, 3));
  }

  TEST_CASE("random homs are module maps") {
    AlgebraPtr r = qnak().r;
    CampaignConfig cfg;
    Rng rng(2);
    for (int t = 0; t < 10; ++t) {
      FdModule x = randomModule(r, cfg, rng), y = randomModule(r, cfg, rng);
      CHECK(isModuleMap(x, y, randomHom(x, y, rng)));
    }
    FdModule z = FdModule::zero(r);
    CHECK(randomHom(z, z, rng).rows() == 0);
  }

  TEST_CASE("random pairs") {
    const TensorRing& ctx = qnakRing();
    CampaignConfig cfg;
    cfg.maxGenerators = 0;
    Rng rng(3);
    PairModule p = randomPair(ctx, cfg, rng);
    CHECK(p.x.dim() == 0);
    CHECK(p.u.rows() == 0);
    CHECK(p.u.cols() == 0);

    cfg = CampaignConfig{};
    std::size_t mono = 0, nonMono = 0;
    for (std::size_t i = 0; i < 10; ++i) {
      Rng s(sampleSeed(42, i));
      PairModule q = randomPair(ctx, cfg, s);
      (q.uInjective() ? mono : nonMono)++;
    }
    CHECK(mono > 0);
    CHECK(nonMono > 0);
  }

  TEST_CASE("theorem campaign on the example") {
    const TensorRing& ctx = qnakRing();
    CampaignConfig cfg;
    cfg.seed = 7;
    cfg.samples = 30;
    for (Variant v : {Variant::GP, Variant::GI, Variant::GF}) {
      VerdictReport rep = verifyTheorem(ctx, v, cfg);
      CHECK(rep.status == "VERIFIED");
      CHECK(rep.exitCode() == 0);
      CHECK(rep.samples.size() == 30);
      CHECK(rep.disagreeCount() == 0);
      CHECK(rep.agreeCount() == 30);
      CHECK(rep.counterexamples.empty());
    }
    VerdictReport a = verifyTheorem(ctx, Variant::GP, cfg);
    VerdictReport b = verifyTheorem(ctx, Variant::GP, cfg);
    CHECK(a.toJson().dump() == b.toJson().dump());
    Json j = a.toJson();
    CHECK(j["kind"] == "theorem");
    CHECK(j["summary"]["samples"] == 30);
    CHECK(j["environment"]["dims"]["T"] == 10);
  }

  TEST_CASE("zero bimodule campaign") {
    AlgebraPtr r = a3Corner().r;
    TensorRing ctx = TensorRing::build(r, Bimodule::zero(r, r));
    CampaignConfig cfg;
    cfg.samples = 15;
    VerdictReport rep = verifyTheorem(ctx, Variant::GP, cfg);
    CHECK(rep.status == "VERIFIED");
    CHECK(rep.disagreeCount() == 0);
  }

  TEST_CASE("unmet hypotheses are reported, not verified") {
    AlgebraPtr r = buildPathAlgebra(Field(3), Quiver{2, {{"a", 0, 1}, {"b", 1, 0}}}, {{"a", "b"}});
    TensorRing ctx = TensorRing::build(r, simpleProductBimodule(r, 0, 1));
    CampaignConfig cfg;
    cfg.samples = 5;
    VerdictReport rep = verifyTheorem(ctx, Variant::GP, cfg);
    CHECK(rep.status == "HYPOTHESES-UNMET");
    CHECK(rep.verdict == Verdict::Unknown);
    CHECK(rep.exitCode() == 2);
    CHECK(rep.toJson()["hypotheses"]["applicable"] == "false");
  }

  TEST_CASE("counterexample bundles replay") {
    const TensorRing& ctx = qnakRing();
    Certificates certs = computeCertificates(ctx);
    CampaignConfig cfg;
    Rng rng(sampleSeed(11, 0));
    PairModule p = randomPair(ctx, cfg, rng);
    ClassifyResult res = classifyOverT(ctx, p, ClassTag::GP, Method::Both, certs);
    SampleRecord rec;
    rec.seed = sampleSeed(11, 0);
    rec.structural = res.structural;
    rec.direct = res.direct;
    Json bundle = sampleBundle(rec, pairToJson(p), "pair", ClassTag::GP, certs);
    CHECK(bundle["kind"] == "pair");
    ClassifyResult again = replayBundle(ctx, Json::parse(bundle.dump()), certs);
    CHECK(again.structural == res.structural);
    CHECK(again.direct == res.direct);
  }

  TEST_CASE("lemma suite") {
    CampaignConfig cfg;
    cfg.samples = 10;
    for (const TensorRing* ctx : {&qnakRing(), &a3Ring()}) {
      VerdictReport rep = runLemmaSuite(*ctx, cfg);
      CHECK(rep.status == "PASS");
      for (const PropertyResult& pr : rep.properties) {
        INFO(pr.name);
        CHECK(pr.passed());
      }
      REQUIRE(rep.property("pd-transfer") != nullptr);
      CHECK(rep.property("pd-transfer")->checked > 0);
      CHECK(rep.property("no-such") == nullptr);
    }
  }
}
