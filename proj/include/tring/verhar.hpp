#pragma once

// Randomized verification campaigns: random modules, pairs and copairs,
// two-route classification over the tensor ring, the lemma property suite,
// and JSON reports with replayable counterexample bundles.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tring/hypo.hpp"
#include "tring/serialize.hpp"

namespace tr {

struct CampaignConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  std::size_t maxGenerators = 3;
  std::size_t maxPresentationCols = 4;
  std::vector<ClassTag> classes{ClassTag::Proj, ClassTag::Inj, ClassTag::Flat, ClassTag::GP, ClassTag::GI, ClassTag::GF};
  std::size_t maxLen = 32;
  std::size_t k = 16;
};

/// Portable generator; draws are taken as rng() % n.
using Rng = std::mt19937_64;

/// Seed of sample `index`, derived from the campaign seed.
std::uint64_t sampleSeed(std::uint64_t seed, std::size_t index);

/// Cokernel of a random map sum_j A e_{t_j} -> sum_i A e_{s_i} with
/// 1..maxGenerators generators and 0..maxPresentationCols relations.
FdModule randomModule(const AlgebraPtr& a, const CampaignConfig& cfg, Rng& rng);
/// Random element of Hom(X, Y) as a matrix, uniform over the hom space.
Mat randomHom(const FdModule& x, const FdModule& y, Rng& rng);
PairModule randomPair(const TensorRing& ctx, const CampaignConfig& cfg, Rng& rng);
CopairModule randomCopair(const TensorRing& ctx, const CampaignConfig& cfg, Rng& rng);

struct SampleRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::size_t dim = 0;
  bool partMono = false;  // u injective, or v surjective for copairs
  Verdict structural = Verdict::Unknown;
  Verdict direct = Verdict::Unknown;
  Verdict combined = Verdict::Unknown;
  bool agree = true;
};

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t positives = 0;  // checks where the property's premise was nontrivially met
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

struct VerdictReport {
  std::string kind;     // theorem, lemmas or classify
  std::string variant;  // gp, gi, gf for theorem campaigns
  std::string status;   // VERIFIED, COUNTEREXAMPLE, UNKNOWN, HYPOTHESES-UNMET, PASS, FAIL
  Verdict verdict = Verdict::Unknown;
  CampaignConfig config;
  std::vector<SampleRecord> samples;
  std::vector<Json> counterexamples;
  std::vector<PropertyResult> properties;
  Json hypotheses;    // null when not applicable
  Json certificates;  // null when not computed
  Json environment;
  std::vector<std::string> notes;

  std::size_t agreeCount() const;
  std::size_t disagreeCount() const;
  std::size_t unknownCount() const;
  const PropertyResult* property(const std::string& name) const;
  Json toJson() const;
  /// 0 verified, 1 false or counterexample, 2 unknown or hypotheses unmet.
  int exitCode() const;
};

Json hypothesisToJson(const HypothesisReport& h);
Json certificatesToJson(const Certificates& c);
Json environmentJson(const TensorRing& ctx);
std::string bimoduleDigest(const Bimodule& m);

/// Pair samples for GP and GF, copair samples over T^op for GI.
VerdictReport verifyTheorem(const TensorRing& ctx, Variant variant, const CampaignConfig& cfg);

/// Re-runs the classification stored in a counterexample bundle.
ClassifyResult replayBundle(const TensorRing& ctx, const Json& bundle, const Certificates& certs);
/// The bundle for one sample: the serialized pair or copair, both route
/// verdicts and both certificates.
Json sampleBundle(const SampleRecord& rec, const Json& object, const std::string& objectKind, ClassTag tag,
                  const Certificates& certs);

VerdictReport runLemmaSuite(const TensorRing& ctx, const CampaignConfig& cfg);

}  // namespace tr
