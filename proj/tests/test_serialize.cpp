#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "support.hpp"

using namespace tt;

namespace {

std::filesystem::path scratchDir(const std::string& name) {
  auto d = std::filesystem::temp_directory_path() / ("tring_test_" + name);
  std::filesystem::remove_all(d);
  std::filesystem::create_directories(d);
  return d;
}

ErrorKind kindOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidInput;
}

std::string messageOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("matrices") {
    Field f(5);
    Mat m = Mat::fromRows(f, {{1, 2, 3}, {4, 0, 1}});
    Json j = matrixToJson(m);
    CHECK(j["rows"] == 2);
    CHECK(j["cols"] == 3);
    CHECK(matrixFromJson(j, f, "") == m);
    CHECK(matrixFromJson(Json::parse("[[1,2,3],[4,0,1]]"), f, "") == m);
    CHECK(matrixFromJson(Json::array(), f, "", 0, 3).cols() == 3);
    CHECK(kindOf([&] { matrixFromJson(Json::parse("[[1,7]]"), f, "/m"); }) == ErrorKind::InvalidInput);
    CHECK(messageOf([&] { matrixFromJson(Json::parse("[[1,7]]"), f, "/m"); }).find("/m/0/1") != std::string::npos);
    CHECK(kindOf([&] { matrixFromJson(Json::parse("[[1,2],[3]]"), f, "/m"); }) == ErrorKind::InvalidInput);
    CHECK(kindOf([&] { matrixFromJson(Json::parse(R"({"rows":1,"cols":2,"entries":[[1]]})"), f, ""); }) ==
          ErrorKind::InvalidInput);
  }

  TEST_CASE("algebras") {
    AlgebraPtr r = qnak().r;
    AlgebraPtr back = algebraFromJson(Json::parse(algebraToJson(*r).dump()));
    CHECK(back->sameStructure(*r));
    CHECK(back->labels() == r->labels());

    Quiver q{3, {{"a1", 0, 1}, {"a2", 1, 2}, {"a3", 2, 0}}};
    std::vector<MonomialRelation> rels{{"a1", "a2"}, {"a2", "a3"}, {"a3", "a1"}};
    Json qj = quiverToJson(Field(2), q, rels);
    CHECK(qj["arrows"][0]["from"] == 1);
    CHECK(algebraFromJson(qj)->sameStructure(*r));
    Json noField = qj;
    noField.erase("field");
    CHECK(kindOf([&] { algebraFromJson(noField); }) == ErrorKind::InvalidInput);
    Json badVertex = qj;
    badVertex["arrows"][0]["to"] = 4;
    CHECK(kindOf([&] { algebraFromJson(badVertex); }) == ErrorKind::InvalidInput);
    CHECK(kindOf([&] { fieldFromJson(Json(4)); }) == ErrorKind::InvalidInput);
  }

  TEST_CASE("modules, bimodules, pairs and copairs") {
    const TensorRing& ctx = qnakRing();
    AlgebraPtr r = ctx.r();
    FdModule s = simpleModule(r, 1);
    CHECK(moduleFromJson(moduleToJson(s), r).actions() == s.actions());
    Bimodule m = bimoduleFromJson(bimoduleToJson(ctx.m()), r, r);
    CHECK(m.leftActions() == ctx.m().leftActions());
    CHECK(m.rightActions() == ctx.m().rightActions());

    Rng rng(13);
    CampaignConfig cfg;
    for (int t = 0; t < 5; ++t) {
      PairModule p = randomPair(ctx, cfg, rng);
      PairModule pb = pairFromJson(Json::parse(pairToJson(p).dump()), ctx);
      CHECK(pb.u == p.u);
      CopairModule c = randomCopair(ctx, cfg, rng);
      CopairModule cb = copairFromJson(Json::parse(copairToJson(c).dump()), ctx);
      CHECK(cb.vbar == c.vbar);
    }
    Json bad = pairToJson(ind(ctx, FdModule::regular(r)));
    bad["u"]["entries"][0][0] = 1 - bad["u"]["entries"][0][0].get<int>();
    CHECK_THROWS_AS(pairFromJson(bad, ctx), Error);
  }

  TEST_CASE("files and manifests") {
    auto dir = scratchDir("manifest");
    writeInstance(dir, *qnak().r, qnak().m);
    CHECK(std::filesystem::exists(dir / "manifest.json"));
    Json man = readJsonFile(dir / "manifest.json");
    CHECK(man["version"] == "1");
    Instance inst = loadManifest(dir);
    CHECK(inst.r->sameStructure(*qnak().r));
    CHECK(inst.m.dim() == 4);
    Instance inst2 = loadInstance(dir / "algebra.json", dir / "bimodule.json");
    CHECK(inst2.m.leftActions() == qnak().m.leftActions());

    std::ofstream(dir / "broken.json") << "{\"a\": [1, 2,";
    std::string msg = messageOf([&] { readJsonFile(dir / "broken.json"); });
    CHECK(msg.find("broken.json") != std::string::npos);
    CHECK(msg.find("byte") != std::string::npos);
    CHECK(kindOf([&] { readJsonFile(dir / "missing.json"); }) == ErrorKind::InvalidInput);
    CHECK(dumpJson(Json{{"b", 1}, {"a", 2}}) == "{\n  \"a\": 2,\n  \"b\": 1\n}\n");
    std::filesystem::remove_all(dir);
  }
}
