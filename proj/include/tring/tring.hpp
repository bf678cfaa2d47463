#pragma once

// Tensor rings T = R + M + M(x)M + ... of a nilpotent bimodule, modules over
// them as pairs (X, u: M(x)X -> X) and right modules as copairs
// (Y, vbar: Y(x)M -> Y), the functors between R- and T-modules, and the two
// canonical exact sequences.
//
// Summands of Ind, Coind and the canonical sequences are ordered by ascending
// tensor degree.

#include <string>
#include <vector>

#include "tring/homcalc.hpp"

namespace tr {

struct TensorPowers {
  AlgebraPtr base;    // R
  AlgebraPtr baseOp;  // R^op
  Bimodule m;
  /// powers[0] = R, powers[1] = M, powers[k] = M (x)_R powers[k-1].
  std::vector<Bimodule> powers;
  /// For k >= 2: plain M (x) powers[k-1] -> powers[k] and a section of it.
  std::vector<Mat> proj;
  std::vector<Mat> section;
  /// mult[i][j]: plain powers[i] (x) powers[j] -> powers[i+j] (zero when i+j > N).
  std::vector<std::vector<Mat>> mult;
  std::size_t nilIndex = 0;

  std::size_t dim(std::size_t k) const { return k < powers.size() ? powers[k].dim() : 0; }
};

/// Throws Error(NotNilpotentWithinCap) when M^{(x)(cap+1)} is nonzero.
TensorPowers tensorPowers(const AlgebraPtr& r, const Bimodule& m, std::size_t cap = 16);

/// The tensor ring with basis ordered by degree blocks.
AlgebraPtr buildTensorRing(const TensorPowers& tp);

/// R, M, T and T^op together with the degree offsets in T.
struct TensorRing {
  TensorPowers tp;
  AlgebraPtr t;
  AlgebraPtr tOp;
  std::vector<std::size_t> offsets;  // offsets[k] = first basis index of degree k

  static TensorRing build(const AlgebraPtr& r, const Bimodule& m, std::size_t cap = 16);
  std::size_t nilIndex() const { return tp.nilIndex; }
  const Bimodule& m() const { return tp.m; }
  const AlgebraPtr& r() const { return tp.base; }
  const AlgebraPtr& rOp() const { return tp.baseOp; }
};

// ---------------------------------------------------------------- pairs

struct PairModule {
  FdModule x;
  TensorModule mx;  // M (x)_R X
  Mat u;            // dim X x dim(M(x)X)

  ModHom uHom() const { return {mx.module, x, u}; }
  bool uInjective() const;
};
/// Validates that u is an R-module map.
PairModule makePair(const TensorRing& ctx, FdModule x, Mat u, bool check = true);

FdModule pairToFlat(const TensorRing& ctx, const PairModule& p);
PairModule flatToPair(const TensorRing& ctx, const FdModule& z);

/// A pair of the form Ind(X), with the layers W_0 = X, W_{i+1} = M(x)W_i.
struct InducedModule {
  PairModule pair;
  std::vector<FdModule> layers;
  std::vector<TensorModule> steps;  // steps[i] realizes layers[i+1] = M (x) layers[i]
  std::vector<std::size_t> offsets;
};
InducedModule induce(const TensorRing& ctx, const FdModule& x);
inline PairModule ind(const TensorRing& ctx, const FdModule& x) { return induce(ctx, x).pair; }
/// Ind(g) for an R-map g: X -> X', as a matrix between the induced spaces.
Mat indMap(const TensorRing& ctx, const InducedModule& src, const InducedModule& tgt, const Mat& g);

inline const FdModule& uFunctor(const PairModule& p) { return p.x; }
PairModule stalk(const TensorRing& ctx, const FdModule& x);
QuotientResult cokFunctor(const PairModule& p);

/// 0 -> Ind(M(x)X) -phi-> Ind(X) -eps-> (X,u) -> 0, as T-module maps.
struct Presentation {
  InducedModule source;  // Ind(M (x) X)
  InducedModule middle;  // Ind(X)
  FdModule target;       // (X,u) over T
  ModHom phi;
  ModHom eps;
  bool exact = false;
};
Presentation canonicalPresentation(const TensorRing& ctx, const PairModule& p);

// ---------------------------------------------------------------- copairs

struct CopairModule {
  FdModule y;       // over R^op
  TensorModule ym;  // Y (x)_R M, over R^op
  Mat vbar;         // dim Y x dim(Y(x)M)
  HomModule homMY;  // Hom_{R^op}(M, Y)
  Mat v;            // dim Hom(M,Y) x dim Y, adjoint of vbar

  ModHom vHom() const { return {y, homMY.module, v}; }
  bool vSurjective() const;
};
/// Validates that vbar is a right R-module map and derives v.
CopairModule makeCopair(const TensorRing& ctx, FdModule y, Mat vbar, bool check = true);

FdModule copairToFlat(const TensorRing& ctx, const CopairModule& c);
CopairModule flatToCopair(const TensorRing& ctx, const FdModule& z);

/// Coind(Y) = sum_i Hom_{R^op}(M^{(x)i}, Y).
struct CoinducedModule {
  CopairModule copair;
  std::vector<HomModule> layers;
  std::vector<std::size_t> offsets;
};
CoinducedModule coinduce(const TensorRing& ctx, const FdModule& yRight);
inline CopairModule coind(const TensorRing& ctx, const FdModule& yRight) { return coinduce(ctx, yRight).copair; }
/// Coind(h) for a right R-map h: Y -> Y'.
Mat coindMap(const CoinducedModule& src, const CoinducedModule& tgt, const Mat& h);
/// The evaluation Coind(Y) -> Y at the unit of R (degree-0 component).
Mat coindEvaluation(const TensorRing& ctx, const CoinducedModule& c);

SubmoduleResult kFunctor(const CopairModule& c);

/// 0 -> [Y,v] -eta-> Coind(Y) -psi-> Coind(Hom(M,Y)) -> 0 over T^op.
struct Copresentation {
  FdModule source;           // [Y,v] over T^op
  CoinducedModule middle;    // Coind(Y)
  CoinducedModule target;    // Coind(Hom(M,Y))
  ModHom eta;
  ModHom psi;
  bool exact = false;
};
Copresentation canonicalCopresentation(const TensorRing& ctx, const CopairModule& c);

// ---------------------------------------------------------------- classes

enum class ClassTag { Proj, Inj, Flat, GP, GI, GF };
const char* classTagName(ClassTag c);
ClassTag parseClassTag(const std::string& s);

/// Applies the classifier for `tag` to a module. GI is applied as written
/// (GP of the field dual); `cert` belongs to the algebra the GP test runs over.
Verdict classifyModule(const FdModule& x, ClassTag tag, const IgCertificate& cert, std::size_t maxLen);

struct PhiVerdict {
  Verdict verdict = Verdict::Unknown;
  bool uMono = false;
  Verdict cokVerdict = Verdict::Unknown;
};
/// (X,u) lies in Phi(class) iff u is injective and cok(u) lies in the class.
PhiVerdict phiMembership(const TensorRing& ctx, const PairModule& p, ClassTag tag, const IgCertificate& certR,
                         std::size_t maxLen = 32);

struct PsiVerdict {
  Verdict verdict = Verdict::Unknown;
  bool vEpi = false;
  Verdict kerVerdict = Verdict::Unknown;
};
/// [Y,v] lies in Psi(class) iff v is surjective and ker(v) lies in the class.
/// For GI, `certR` is the certificate of R (the GP test runs on D(ker v)).
PsiVerdict psiMembership(const TensorRing& ctx, const CopairModule& c, ClassTag tag, const IgCertificate& certR,
                         std::size_t maxLen = 32);

enum class Method { Phi, Direct, Both };
const char* methodName(Method m);
Method parseMethod(const std::string& s);

struct ClassifyResult {
  ClassTag tag = ClassTag::GP;
  Method method = Method::Both;
  Verdict structural = Verdict::Unknown;  // Phi or Psi route
  Verdict direct = Verdict::Unknown;
  Verdict combined = Verdict::Unknown;
  bool counterexample = false;  // both routes conclusive and opposite
  bool uMono = false;           // resp. vEpi for copairs
  Verdict partVerdict = Verdict::Unknown;
};

/// Certificates needed by the classifiers; computed once per tensor ring.
struct Certificates {
  IgCertificate r;
  IgCertificate t;
  std::size_t maxLen = 32;
};
Certificates computeCertificates(const TensorRing& ctx, std::size_t maxLen = 32);

ClassifyResult classifyOverT(const TensorRing& ctx, const PairModule& p, ClassTag tag, Method method,
                             const Certificates& certs);
/// Copair variant for tags inj and gi; the direct route tests the T^op-module.
ClassifyResult classifyCopairOverT(const TensorRing& ctx, const CopairModule& c, ClassTag tag, Method method,
                                   const Certificates& certs);

}  // namespace tr
