#pragma once

// Named instances: the cyclic Nakayama example, small bimodules used as
// test instances, trivial extensions and Morita context rings with zero
// bimodule maps.

#include <string>
#include <vector>

#include "tring/tring.hpp"

namespace tr {

struct AlgebraBimodule {
  AlgebraPtr r;
  Bimodule m;
};

/// R = kQ/J^h on the cyclic quiver with n vertices and M = R e_i (x)_k e_j R
/// (vertices 1-based). With `reversed`, M = R e_j (x)_k e_i R. Throws
/// PreconditionViolated unless 2 <= h <= n, 1 <= i < j <= n and j - i >= h,
/// and when M (x)_R M is nonzero.
AlgebraBimodule exampleQNak(Field field, std::size_t n, std::size_t h, std::size_t i, std::size_t j,
                            bool reversed = false);

/// R e_s (x)_k e_t R for 0-based vertices s, t.
Bimodule cornerBimodule(const AlgebraPtr& r, std::size_t s, std::size_t t);

/// X (x)_k Y for a left R-module X and a right S-module Y (over S^op).
Bimodule outerBimodule(const AlgebraPtr& r, const AlgebraPtr& s, const FdModule& x, const FdModule& yRight);

/// The simple module at vertex s (0-based): top of A e_s.
FdModule simpleModule(const AlgebraPtr& a, std::size_t s);

/// S_s (x)_k S_t: left simple at s, right simple at t.
Bimodule simpleProductBimodule(const AlgebraPtr& r, std::size_t s, std::size_t t);

/// The span of the arrows of q as a bimodule over the semisimple algebra k^n;
/// its tensor ring is the path algebra of q (for acyclic q).
AlgebraBimodule arrowBimodule(Field field, const Quiver& q);

/// R (x) M with (r,m)(r',m') = (rr', rm' + mr'). Throws NotOneNilpotent
/// when M (x)_R M is nonzero.
AlgebraPtr trivialExtension(const AlgebraPtr& r, const Bimodule& m);

/// Position of a basis element of the Morita context ring in 2x2 matrix form.
struct MatrixSlot {
  std::size_t row;    // 1 or 2
  std::size_t col;    // 1 or 2
  std::size_t index;  // basis index inside the slot's algebra or bimodule
};

/// Lambda = (A x B) (x) (U + V) with U a (B,A)-bimodule in slot (2,1) and
/// V an (A,B)-bimodule in slot (1,2). Basis order: A, B, U, V.
struct MoritaRing {
  AlgebraPtr a;
  AlgebraPtr b;
  Bimodule u;
  Bimodule v;
  AlgebraPtr c;  // A x B
  Bimodule w;    // U + V over C
  TensorRing ring;
  std::vector<MatrixSlot> slots;  // one per basis element of ring.t
};

/// Throws NonzeroContextProducts when U (x)_A V or V (x)_B U is nonzero.
MoritaRing moritaContextRing(const AlgebraPtr& a, const AlgebraPtr& b, const Bimodule& u, const Bimodule& v);

/// A module over the Morita context ring: X over A, Y over B,
/// f: U (x)_A X -> Y and g: V (x)_B Y -> X.
struct MoritaQuadruple {
  FdModule x;
  FdModule y;
  Mat f;  // dim Y x dim(U (x)_A X)
  Mat g;  // dim X x dim(V (x)_B Y)
};

/// Validates that f and g are module maps.
void checkQuadruple(const MoritaRing& mr, const MoritaQuadruple& q);
PairModule moritaTranslate(const MoritaRing& mr, const MoritaQuadruple& q);
MoritaQuadruple moritaTranslateInverse(const MoritaRing& mr, const PairModule& p);

}  // namespace tr
