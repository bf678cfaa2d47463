#include "tring/algebra.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <mutex>
#include <random>

namespace tr {

namespace {

constexpr std::size_t kExhaustiveAssociativityDim = 64;
constexpr std::size_t kSampledTriples = 20000;

Vec unitVector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

}  // namespace

Algebra::Algebra(Data data) : data_(std::move(data)), dim_(data_.labels.size()) {}

AlgebraPtr Algebra::create(Data data) {
  std::shared_ptr<Algebra> a(new Algebra(std::move(data)));
  a->validate();
  a->computeDerived();
  return a;
}

Vec Algebra::basisVector(std::size_t i) const { return unitVector(dim_, i); }

Vec Algebra::basisProduct(std::size_t i, std::size_t j) const {
  auto first = data_.structConst.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
  return Vec(first, first + static_cast<std::ptrdiff_t>(dim_));
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
  const Field& f = data_.field;
  Vec out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      Scalar ab = f.mul(a[i], b[j]);
      const Scalar* c = &data_.structConst[(i * dim_ + j) * dim_];
      for (std::size_t l = 0; l < dim_; ++l) {
        if (c[l] != 0) out[l] = f.add(out[l], f.mul(ab, c[l]));
      }
    }
  }
  return out;
}

void Algebra::validate() const {
  const Field& f = data_.field;
  const std::size_t n = dim_;
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::AxiomViolation, msg); };
  if (n == 0) fail("algebra must have positive dimension");
  if (data_.structConst.size() != n * n * n) fail("structure constant table has wrong size");
  for (Scalar s : data_.structConst) {
    if (s >= f.p()) fail("structure constant out of range");
  }
  auto checkVec = [&](const Vec& v, const char* what) {
    if (v.size() != n) fail(std::string(what) + " has wrong length");
    for (Scalar s : v) {
      if (s >= f.p()) fail(std::string(what) + " entry out of range");
    }
  };
  checkVec(data_.unit, "unit");
  for (const Vec& e : data_.idempotents) checkVec(e, "idempotent");
  for (const Vec& r : data_.radical) checkVec(r, "radical vector");

  for (std::size_t i = 0; i < n; ++i) {
    Vec e = basisVector(i);
    if (multiply(data_.unit, e) != e || multiply(e, data_.unit) != e) {
      fail("unit law fails at basis element " + data_.labels[i]);
    }
  }

  // Associativity: (b_i b_j) b_k = b_i (b_j b_k), iterating only over nonzeros.
  auto checkTriple = [&](std::size_t i, std::size_t j, std::size_t k) {
    const Scalar* ij = &data_.structConst[(i * n + j) * n];
    const Scalar* jk = &data_.structConst[(j * n + k) * n];
    Vec lhs(n, 0), rhs(n, 0);
    for (std::size_t l = 0; l < n; ++l) {
      if (ij[l] != 0) {
        const Scalar* lk = &data_.structConst[(l * n + k) * n];
        for (std::size_t t = 0; t < n; ++t) {
          if (lk[t] != 0) lhs[t] = f.add(lhs[t], f.mul(ij[l], lk[t]));
        }
      }
      if (jk[l] != 0) {
        const Scalar* il = &data_.structConst[(i * n + l) * n];
        for (std::size_t t = 0; t < n; ++t) {
          if (il[t] != 0) rhs[t] = f.add(rhs[t], f.mul(jk[l], il[t]));
        }
      }
    }
    if (lhs != rhs) {
      fail("associativity fails at (" + data_.labels[i] + ", " + data_.labels[j] + ", " + data_.labels[k] + ")");
    }
  };
  if (n <= kExhaustiveAssociativityDim) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) checkTriple(i, j, k);
  } else {
    std::mt19937_64 rng(0x5eed);
    for (std::size_t t = 0; t < kSampledTriples; ++t) checkTriple(rng() % n, rng() % n, rng() % n);
  }

  Vec sum(n, 0);
  for (std::size_t s = 0; s < data_.idempotents.size(); ++s) {
    for (std::size_t t = 0; t < data_.idempotents.size(); ++t) {
      Vec prod = multiply(data_.idempotents[s], data_.idempotents[t]);
      Vec expect = s == t ? data_.idempotents[s] : Vec(n, 0);
      if (prod != expect) fail("idempotents are not orthogonal idempotents");
    }
    for (std::size_t l = 0; l < n; ++l) sum[l] = f.add(sum[l], data_.idempotents[s][l]);
  }
  if (sum != data_.unit) fail("idempotents do not sum to the unit");

  EchelonBasis j(f, n);
  for (const Vec& r : data_.radical) j.add(r);
  for (const Vec& r : data_.radical) {
    for (std::size_t i = 0; i < n; ++i) {
      Vec e = basisVector(i);
      if (!j.contains(multiply(e, r)) || !j.contains(multiply(r, e))) fail("radical is not a two-sided ideal");
    }
  }
  // Nilpotency: J^(m) = 0 for some m <= dim + 1.
  std::vector<Vec> power;
  {
    RrefResult rr = j.toRref();
    for (std::size_t r = 0; r < rr.rank; ++r) {
      auto row = rr.reduced.row(r);
      power.emplace_back(row.begin(), row.end());
    }
  }
  for (std::size_t m = 1; !power.empty(); ++m) {
    if (m > n + 1) fail("radical is not nilpotent");
    EchelonBasis next(f, n);
    for (const Vec& x : power)
      for (const Vec& r : data_.radical) next.add(multiply(x, r));
    RrefResult rr = next.toRref();
    power.clear();
    for (std::size_t r = 0; r < rr.rank; ++r) {
      auto row = rr.reduced.row(r);
      power.emplace_back(row.begin(), row.end());
    }
  }
  for (const Vec& e : data_.idempotents) {
    if (j.contains(e)) fail("an idempotent lies in the radical");
  }
}

void Algebra::computeDerived() {
  const Field& f = data_.field;
  const std::size_t n = dim_;
  leftMul_.assign(n, Mat(f, n, n));
  rightMul_.assign(n, Mat(f, n, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        Scalar c = constant(i, j, l);
        leftMul_[i](l, j) = c;
        rightMul_[j](l, i) = c;
      }
    }
  }

  generators_ = data_.idempotents;
  EchelonBasis modSquare(f, n);
  for (const Vec& r : data_.radical)
    for (const Vec& s : data_.radical) modSquare.add(multiply(r, s));
  for (const Vec& r : data_.radical) {
    if (modSquare.add(r)) generators_.push_back(r);
  }
  EchelonBasis semisimplePart(f, n);
  for (const Vec& r : data_.radical) semisimplePart.add(r);
  for (const Vec& e : data_.idempotents) semisimplePart.add(e);
  for (std::size_t i = 0; i < n; ++i) {
    Vec b = basisVector(i);
    if (semisimplePart.add(b)) generators_.push_back(b);
  }

  projectives_.clear();
  for (const Vec& e : data_.idempotents) {
    Mat rightByE(f, n, n);
    for (std::size_t l = 0; l < n; ++l) {
      if (e[l] != 0) rightByE = add(rightByE, scale(rightMul_[l], e[l]));
    }
    IndecomposableProjective p{imageBasis(rightByE), {}, {}};
    Mat inv = leftInverse(p.basis);
    for (std::size_t i = 0; i < n; ++i) p.action.push_back(matMul(inv, matMul(leftMul_[i], p.basis)));
    p.generator = matVec(inv, e);
    projectives_.push_back(std::move(p));
  }
}

bool Algebra::sameStructure(const Algebra& other) const {
  return data_.field == other.data_.field && dim_ == other.dim_ && data_.structConst == other.data_.structConst;
}

std::string Algebra::digest() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint32_t v) {
    for (int b = 0; b < 4; ++b) {
      h ^= (v >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(data_.field.p());
  mix(static_cast<std::uint32_t>(dim_));
  for (Scalar s : data_.structConst) mix(s);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

AlgebraPtr Algebra::opposite() const {
  std::lock_guard<std::mutex> lock(oppositeMutex_);
  if (!opposite_) opposite_ = oppositeAlgebra(*this);
  return opposite_;
}

bool sameAlgebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && a->sameStructure(*b));
}

void requireSameAlgebra(const AlgebraPtr& a, const AlgebraPtr& b, const char* context) {
  if (!sameAlgebra(a, b)) throw Error(ErrorKind::AlgebraMismatch, context);
}

Mat radicalMatrix(const Algebra& a) {
  if (a.radical().empty()) return Mat(a.field(), a.dim(), 0);
  return Mat::fromColumns(a.field(), a.dim(), a.radical());
}

AlgebraPtr buildPathAlgebra(Field field, const Quiver& q, const std::vector<MonomialRelation>& relations,
                            PathAlgebraOptions options) {
  std::map<std::string, std::size_t> arrowIndex;
  for (std::size_t k = 0; k < q.arrows.size(); ++k) {
    const Arrow& a = q.arrows[k];
    if (a.source >= q.vertexCount || a.target >= q.vertexCount) {
      throw Error(ErrorKind::InvalidInput, "arrow " + a.name + " has an endpoint out of range");
    }
    if (!arrowIndex.emplace(a.name, k).second) throw Error(ErrorKind::InvalidInput, "duplicate arrow name " + a.name);
  }
  if (q.vertexCount == 0) throw Error(ErrorKind::InvalidInput, "quiver has no vertices");

  std::vector<std::vector<std::size_t>> rels;
  for (const MonomialRelation& rel : relations) {
    if (rel.size() < 2) throw Error(ErrorKind::MalformedRelation, "relations must have length at least 2");
    std::vector<std::size_t> idx;
    for (const std::string& name : rel) {
      auto it = arrowIndex.find(name);
      if (it == arrowIndex.end()) throw Error(ErrorKind::MalformedRelation, "unknown arrow " + name);
      if (!idx.empty() && q.arrows[idx.back()].target != q.arrows[it->second].source) {
        throw Error(ErrorKind::MalformedRelation, "relation is not a composable path at arrow " + name);
      }
      idx.push_back(it->second);
    }
    rels.push_back(std::move(idx));
  }

  struct Path {
    std::size_t source;
    std::size_t target;
    std::vector<std::size_t> arrows;
  };
  auto endsWithRelation = [&](const std::vector<std::size_t>& arrows) {
    for (const auto& rel : rels) {
      if (rel.size() <= arrows.size() && std::equal(rel.rbegin(), rel.rend(), arrows.rbegin())) return true;
    }
    return false;
  };

  std::vector<Path> paths;
  for (std::size_t v = 0; v < q.vertexCount; ++v) paths.push_back({v, v, {}});
  std::size_t levelStart = 0;
  while (levelStart < paths.size()) {
    std::size_t levelEnd = paths.size();
    for (std::size_t p = levelStart; p < levelEnd; ++p) {
      for (std::size_t k = 0; k < q.arrows.size(); ++k) {
        if (q.arrows[k].source != paths[p].target) continue;
        std::vector<std::size_t> arrows = paths[p].arrows;
        arrows.push_back(k);
        if (endsWithRelation(arrows)) continue;
        paths.push_back({paths[p].source, q.arrows[k].target, std::move(arrows)});
        if (paths.size() > options.pathCap) {
          throw Error(ErrorKind::InfiniteDimensional,
                      "more than " + std::to_string(options.pathCap) + " basis paths; the quotient is not finite-dimensional");
        }
      }
    }
    levelStart = levelEnd;
  }

  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index[{paths[i].source, paths[i].arrows}] = i;

  const std::size_t n = paths.size();
  Algebra::Data data{field, {}, std::vector<Scalar>(n * n * n, 0), Vec(n, 0), {}, {}};
  for (const Path& p : paths) {
    if (p.arrows.empty()) {
      data.labels.push_back("e" + std::to_string(p.source + 1));
      continue;
    }
    std::string label;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
      if (!label.empty()) label += "*";
      label += q.arrows[*it].name;
    }
    data.labels.push_back(label);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // b_i * b_j: b_j acts first.
      const Path& first = paths[j];
      const Path& second = paths[i];
      if (first.target != second.source) continue;
      std::vector<std::size_t> arrows = first.arrows;
      arrows.insert(arrows.end(), second.arrows.begin(), second.arrows.end());
      auto it = index.find({first.source, arrows});
      if (it != index.end()) data.structConst[(i * n + j) * n + it->second] = 1;
    }
  }
  for (std::size_t v = 0; v < q.vertexCount; ++v) {
    data.unit[v] = 1;
    data.idempotents.push_back(unitVector(n, v));
  }
  for (std::size_t i = q.vertexCount; i < n; ++i) data.radical.push_back(unitVector(n, i));
  return Algebra::create(std::move(data));
}

AlgebraPtr cyclicNakayama(Field field, std::size_t n, std::size_t h) {
  if (n == 0 || h < 2) throw Error(ErrorKind::PreconditionViolated, "cyclic Nakayama algebra needs n >= 1 and h >= 2");
  Quiver q{n, {}};
  for (std::size_t v = 0; v < n; ++v) q.arrows.push_back({"a" + std::to_string(v + 1), v, (v + 1) % n});
  std::vector<MonomialRelation> rels;
  for (std::size_t v = 0; v < n; ++v) {
    MonomialRelation rel;
    for (std::size_t k = 0; k < h; ++k) rel.push_back(q.arrows[(v + k) % n].name);
    rels.push_back(std::move(rel));
  }
  return buildPathAlgebra(field, q, rels);
}

AlgebraPtr oppositeAlgebra(const Algebra& a) {
  const std::size_t n = a.dim();
  Algebra::Data data = a.data();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) data.structConst[(i * n + j) * n + l] = a.constant(j, i, l);
  return Algebra::create(std::move(data));
}

AlgebraPtr directProductAlgebra(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "direct product of algebras over different fields");
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  Algebra::Data data{a.field(), {}, std::vector<Scalar>(n * n * n, 0), Vec(n, 0), {}, {}};
  for (const auto& l : a.labels()) data.labels.push_back(l + "@1");
  for (const auto& l : b.labels()) data.labels.push_back(l + "@2");
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t l = 0; l < na; ++l) data.structConst[(i * n + j) * n + l] = a.constant(i, j, l);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t l = 0; l < nb; ++l)
        data.structConst[((na + i) * n + (na + j)) * n + (na + l)] = b.constant(i, j, l);
  auto embed = [&](const Vec& v, std::size_t offset) {
    Vec out(n, 0);
    std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(offset));
    return out;
  };
  std::copy(a.unit().begin(), a.unit().end(), data.unit.begin());
  std::copy(b.unit().begin(), b.unit().end(), data.unit.begin() + static_cast<std::ptrdiff_t>(na));
  for (const Vec& e : a.idempotents()) data.idempotents.push_back(embed(e, 0));
  for (const Vec& e : b.idempotents()) data.idempotents.push_back(embed(e, na));
  for (const Vec& r : a.radical()) data.radical.push_back(embed(r, 0));
  for (const Vec& r : b.radical()) data.radical.push_back(embed(r, na));
  return Algebra::create(std::move(data));
}

}  // namespace tr
