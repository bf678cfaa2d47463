#pragma once

// Shared fixtures and brute-force oracles for the unit and acceptance tests.
// Oracles here never call the routine they check.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tring/constructs.hpp"
#include "tring/verhar.hpp"

namespace tt {

using namespace tr;

inline const AlgebraBimodule& qnak() {
  static const AlgebraBimodule ex = exampleQNak(Field(2), 3, 2, 1, 3);
  return ex;
}

inline const TensorRing& qnakRing() {
  static const TensorRing ctx = TensorRing::build(qnak().r, qnak().m);
  return ctx;
}

/// Path algebra of 1 -> 2 -> 3 over F_3 with M = R e_3 (x)_k e_1 R (1-nilpotent).
inline const AlgebraBimodule& a3Corner() {
  static const AlgebraBimodule ex = [] {
    AlgebraPtr r = buildPathAlgebra(Field(3), Quiver{3, {{"a", 0, 1}, {"b", 1, 2}}}, {});
    return AlgebraBimodule{r, cornerBimodule(r, 2, 0)};
  }();
  return ex;
}

inline const TensorRing& a3Ring() {
  static const TensorRing ctx = TensorRing::build(a3Corner().r, a3Corner().m);
  return ctx;
}

/// Calls f on every vector of F_p^n.
inline void forEachVector(const Field& f, std::size_t n, const std::function<void(const Vec&)>& fn) {
  Vec v(n, 0);
  while (true) {
    fn(v);
    std::size_t k = 0;
    while (k < n && ++v[k] == f.p()) v[k++] = 0;
    if (k == n) return;
  }
}

/// Number of vectors x with a x = 0, by enumeration.
inline std::size_t bruteKernelSize(const Mat& a) {
  std::size_t count = 0;
  forEachVector(a.field(), a.cols(), [&](const Vec& v) {
    Vec w = matVec(a, v);
    bool zero = true;
    for (Scalar s : w) zero = zero && s == 0;
    count += zero;
  });
  return count;
}

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Number of module maps X -> Y by enumeration of all matrices (tiny cases only).
inline std::size_t bruteHomCount(const FdModule& x, const FdModule& y) {
  std::size_t count = 0;
  forEachVector(x.field(), x.dim() * y.dim(), [&](const Vec& v) {
    Mat m(x.field(), y.dim(), x.dim(), v);
    bool ok = true;
    for (std::size_t i = 0; ok && i < x.algebra().dim(); ++i) ok = matMul(m, x.action(i)) == matMul(y.action(i), m);
    count += ok;
  });
  return count;
}

/// Logarithm base p of an exact power of p.
inline std::size_t logp(std::size_t n, std::size_t p) {
  std::size_t k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

inline Rng rngFor(std::uint64_t seed) { return Rng(seed); }

inline Mat randomMat(const Field& f, std::size_t r, std::size_t c, Rng& rng) {
  Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Scalar>(rng() % f.p());
  }
  return m;
}

/// A matrix with columns spanning the module's image under m (rank only).
inline bool isIsomorphism(const FdModule& src, const FdModule& tgt, const Mat& m) {
  return src.dim() == tgt.dim() && rank(m) == src.dim() && isModuleMap(src, tgt, m);
}

/// The cyclic map T -> Z, t |-> t.z, as a matrix; an isomorphism iff Z is free of rank one on z.
inline Mat orbitMatrix(const FdModule& z, const Vec& gen) {
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < z.algebra().dim(); ++i) cols.push_back(matVec(z.action(i), gen));
  return Mat::fromColumns(z.field(), z.dim(), cols);
}

}  // namespace tt
