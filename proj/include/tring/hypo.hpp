#pragma once

// Hypothesis checks for the equalities GP(T) = Phi(GP(R)), GI(T^op) = Psi(GI(R^op))
// and GF(T) = Phi(GF(R)): condition (T) and one-sided dimension bounds of M.

#include <optional>
#include <string>
#include <vector>

#include "tring/tring.hpp"

namespace tr {

/// Tor_n(M, M^{(x)i} (x) A e_s) != 0.
struct TorWitness {
  std::size_t power;   // i >= 1
  std::size_t vertex;  // s, 0-based
  std::size_t degree;  // n >= 1
  std::size_t torDim;
};

struct ConditionT {
  enum class Status { Holds, Fails, UnknownUpTo };
  Status status = Status::UnknownUpTo;
  std::string reason;
  std::optional<TorWitness> witness;
  std::size_t bound = 0;

  Verdict verdict() const;
  std::string str() const;
};

/// Fast paths: M projective as a right module, or every M^{(x)i} (x) P_s
/// projective as a left module. Otherwise sweeps Tor degrees 1..K.
ConditionT checkConditionT(const TensorRing& ctx, std::size_t k = 16);

enum class Variant { GP, GI, GF };
const char* variantName(Variant v);
Variant parseVariant(const std::string& s);

struct HypothesisReport {
  Variant variant = Variant::GP;
  ConditionT conditionT;
  DimBound pdLeftM;   // pd of M as a left R-module
  DimBound fdLeftM;   // equals pdLeftM for finitely generated modules
  DimBound pdRightM;  // pd of M as a right R-module
  DimBound fdRightM;  // equals pdRightM
  bool leftFlat = false;
  Verdict applicable = Verdict::Unknown;
  std::vector<std::string> notes;
};

HypothesisReport hypothesisReport(const TensorRing& ctx, Variant variant, std::size_t k = 16, std::size_t maxLen = 32);

}  // namespace tr
