#pragma once

// Projective covers, minimal resolutions, Ext and Tor dimensions, and the
// projective / injective / flat / Gorenstein classifiers.

#include <optional>
#include <string>
#include <vector>

#include "tring/fdmod.hpp"

namespace tr {

enum class Verdict { False, True, Unknown };

const char* verdictName(Verdict v);
inline Verdict toVerdict(bool b) { return b ? Verdict::True : Verdict::False; }
/// Conjunction in the three-valued sense: False dominates, then Unknown.
Verdict verdictAnd(Verdict a, Verdict b);

/// Finite(n), or AtLeast(n) when a bounded computation was cut off.
struct DimBound {
  bool finite = true;
  std::size_t value = 0;

  static DimBound Finite(std::size_t n) { return {true, n}; }
  static DimBound AtLeast(std::size_t n) { return {false, n}; }
  std::string str() const;
  friend bool operator==(const DimBound&, const DimBound&) = default;
};

/// A finite direct sum of indecomposable projectives A*e_s in the given order.
struct ProjSum {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> offsets;  // start of each summand in the module coordinates
  FdModule module;

  std::size_t count() const { return vertices.size(); }
  /// Coordinates of the generator e_s of summand k.
  Vec generator(std::size_t k) const;
};
ProjSum makeProjSum(const AlgebraPtr& a, std::vector<std::size_t> vertices);

struct ProjectiveCover {
  ProjSum cover;
  ModHom epi;
};
/// Minimal projective cover; asserts ker(epi) is contained in rad(P).
ProjectiveCover projectiveCover(const FdModule& x);

/// P_L -> ... -> P_0 -> X -> 0. maps[0] is the augmentation P_0 -> X and
/// maps[i] is the differential P_i -> P_{i-1}.
struct Resolution {
  std::vector<ProjSum> terms;
  std::vector<ModHom> maps;
  bool complete = false;   // kernel of the last map is zero
  bool truncated = false;  // stopped at maxLen with a nonzero kernel

  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
  /// True when P_k is known (possibly as zero because the resolution ended).
  bool knows(std::size_t k) const { return complete || k < terms.size(); }
};
Resolution minimalResolution(const FdModule& x, std::size_t maxLen);

/// Omega(X), the kernel of the projective cover.
SubmoduleResult syzygy(const FdModule& x);

std::optional<std::size_t> extDimFrom(const Resolution& res, const FdModule& y, std::size_t n);
/// `yRight` is a module over the opposite of the algebra of the resolution.
std::optional<std::size_t> torDimFrom(const Resolution& res, const FdModule& yRight, std::size_t n);

std::optional<std::size_t> extDim(const FdModule& x, const FdModule& y, std::size_t n, std::size_t maxLen = 32);
std::optional<std::size_t> torDim(const FdModule& yRight, const FdModule& x, std::size_t n, std::size_t maxLen = 32);

DimBound pdBound(const FdModule& x, std::size_t maxLen = 32);
DimBound idBound(const FdModule& x, std::size_t maxLen = 32);

struct IgCertificate {
  DimBound gLeft;   // injective dimension of A as a left module
  DimBound gRight;  // injective dimension of A as a right module
  std::size_t bound = 32;

  bool finite() const { return gLeft.finite && gRight.finite; }
  /// The certificate of the opposite algebra.
  IgCertificate opposite() const { return {gRight, gLeft, bound}; }
};
IgCertificate igData(const AlgebraPtr& a, std::size_t maxLen = 32);

bool isProjective(const FdModule& x);
bool isInjective(const FdModule& x);
/// Finite-dimensional flat modules are exactly the projective ones.
bool isFlat(const FdModule& x);

/// Ext^i(X, A) = 0 for 1 <= i <= gLeft; Unknown without a finite certificate.
Verdict isGorensteinProjective(const FdModule& x, const IgCertificate& cert, std::size_t maxLen = 32);
/// GP test of the field dual; `cert` belongs to the algebra the dual lives over.
Verdict isGorensteinInjective(const FdModule& y, const IgCertificate& cert, std::size_t maxLen = 32);
/// Identified with the GP test for finite-dimensional modules.
Verdict isGorensteinFlat(const FdModule& x, const IgCertificate& cert, std::size_t maxLen = 32);

}  // namespace tr
