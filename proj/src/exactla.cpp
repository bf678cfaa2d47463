#include "tring/exactla.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace tr {

const char* errorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::InfiniteDimensional: return "InfiniteDimensional";
    case ErrorKind::MalformedRelation: return "MalformedRelation";
    case ErrorKind::NotNilpotentWithinCap: return "NotNilpotentWithinCap";
    case ErrorKind::NotOneNilpotent: return "NotOneNilpotent";
    case ErrorKind::NonzeroContextProducts: return "NonzeroContextProducts";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
  }
  return "Unknown";
}

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !isPrime(p)) {
    throw Error(ErrorKind::InvalidInput, "field modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

Scalar Field::inv(Scalar a) const {
  if (a == 0) throw Error(ErrorKind::InvalidInput, "inverse of zero");
  long long t = 0, newT = 1;
  long long r = p_, newR = a;
  while (newR != 0) {
    long long q = r / newR;
    t = std::exchange(newT, t - q * newT);
    r = std::exchange(newR, r - q * newR);
  }
  return reduce(t);
}

namespace {

void requireSameField(const Mat& a, const Mat& b, const char* op) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorKind::FieldMismatch, std::string(op) + ": operands over different fields");
  }
}

// Dot-product accumulation: small primes let us defer the modular reduction.
struct Accumulator {
  explicit Accumulator(const Field& f) : p(f.p()), small(f.p() < (1u << 16)) {}
  std::uint64_t p;
  bool small;
  std::uint64_t acc = 0;
  std::uint32_t pending = 0;
  void add(Scalar a, Scalar b) {
    if (small) {
      acc += std::uint64_t{a} * b;
      if (++pending == (1u << 30)) {
        acc %= p;
        pending = 0;
      }
    } else {
      acc = (acc + (std::uint64_t{a} * b) % p) % p;
    }
  }
  Scalar value() const { return static_cast<Scalar>(acc % p); }
};

}  // namespace

Mat::Mat(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Mat::Mat(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorKind::ShapeMismatch, "entry count does not match rows*cols");
  }
  for (Scalar& s : data_) {
    if (s >= field_.p()) throw Error(ErrorKind::InvalidInput, "matrix entry out of range [0,p)");
  }
}

Mat Mat::identity(Field field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::fromRows(Field field, const std::vector<std::vector<long long>>& rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr == 0 ? 0 : rows.front().size();
  Mat m(field, nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    if (rows[r].size() != nc) throw Error(ErrorKind::ShapeMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = field.reduce(rows[r][c]);
  }
  return m;
}

Mat Mat::fromColumns(Field field, std::size_t rows, const std::vector<Vec>& cols) {
  Mat m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.setCol(c, cols[c]);
  return m;
}

Mat Mat::columnVector(Field field, const Vec& v) { return fromColumns(field, v.size(), {v}); }

Vec Mat::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Mat::setCol(std::size_t c, std::span<const Scalar> v) {
  if (v.size() != rows_) throw Error(ErrorKind::ShapeMismatch, "setCol: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Mat::isZero() const {
  return std::all_of(data_.begin(), data_.end(), [](Scalar s) { return s == 0; });
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::ShapeMismatch, "block out of range");
  Mat b(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    std::copy_n(data_.begin() + (r0 + r) * cols_ + c0, nc, b.data_.begin() + r * nc);
  }
  return b;
}

void Mat::setBlock(std::size_t r0, std::size_t c0, const Mat& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw Error(ErrorKind::ShapeMismatch, "setBlock out of range");
  for (std::size_t r = 0; r < b.rows_; ++r) {
    std::copy_n(b.data_.begin() + r * b.cols_, b.cols_, data_.begin() + (r0 + r) * cols_ + c0);
  }
}

Mat Mat::selectColumns(std::span<const std::size_t> idx) const {
  Mat m(field_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    for (std::size_t r = 0; r < rows_; ++r) m(r, j) = (*this)(r, idx[j]);
  }
  return m;
}

RrefResult rref(const Mat& a) {
  const Field& f = a.field();
  Mat m = a;
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
    std::size_t sel = prow;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != prow) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(sel, k), m(prow, k));
    }
    Scalar iv = f.inv(m(prow, c));
    for (std::size_t k = c; k < m.cols(); ++k) m(prow, k) = f.mul(m(prow, k), iv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == prow || m(r, c) == 0) continue;
      Scalar factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (m(prow, k) != 0) m(r, k) = f.sub(m(r, k), f.mul(factor, m(prow, k)));
      }
    }
    pivots.push_back(c);
    ++prow;
  }
  return {std::move(m), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Mat& a) {
  if (a.rows() <= a.cols()) {
    EchelonBasis eb(a.field(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) eb.add(a.row(r));
    return eb.rank();
  }
  Mat t = transpose(a);
  EchelonBasis eb(a.field(), t.cols());
  for (std::size_t r = 0; r < t.rows(); ++r) eb.add(t.row(r));
  return eb.rank();
}

namespace {

Mat kernelFromRref(const RrefResult& rr, std::size_t cols) {
  const Field& f = rr.reduced.field();
  std::vector<bool> isPivot(cols, false);
  for (std::size_t pc : rr.pivots) isPivot[pc] = true;
  std::vector<std::size_t> freeCols;
  for (std::size_t c = 0; c < cols; ++c) {
    if (!isPivot[c]) freeCols.push_back(c);
  }
  Mat k(f, cols, freeCols.size());
  for (std::size_t j = 0; j < freeCols.size(); ++j) {
    std::size_t fc = freeCols[j];
    k(fc, j) = 1;
    for (std::size_t r = 0; r < rr.rank; ++r) k(rr.pivots[r], j) = f.neg(rr.reduced(r, fc));
  }
  return k;
}

}  // namespace

Mat kernelBasis(const Mat& a) {
  EchelonBasis eb(a.field(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) eb.add(a.row(r));
  return eb.nullSpace();
}

Mat imageBasis(const Mat& a) {
  EchelonBasis eb(a.field(), a.rows());
  for (std::size_t c = 0; c < a.cols(); ++c) eb.add(a.col(c));
  RrefResult rr = eb.toRref();
  return transpose(rr.reduced.block(0, 0, rr.rank, a.rows()));
}

QuotientData quotientData(std::size_t ambientDim, const Mat& sub) {
  if (sub.rows() != ambientDim) throw Error(ErrorKind::ShapeMismatch, "quotientData: subspace not in ambient space");
  EchelonBasis eb(sub.field(), ambientDim);
  for (std::size_t c = 0; c < sub.cols(); ++c) eb.add(sub.col(c));
  return eb.quotient();
}

std::optional<Vec> solveLinear(const Mat& a, const Vec& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::ShapeMismatch, "solveLinear: rhs length mismatch");
  const Field& f = a.field();
  Mat aug(f, a.rows(), a.cols() + 1);
  aug.setBlock(0, 0, a);
  aug.setCol(a.cols(), b);
  RrefResult rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), 0);
  for (std::size_t r = 0; r < rr.rank; ++r) x[rr.pivots[r]] = rr.reduced(r, a.cols());
  return x;
}

Mat inverse(const Mat& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::ShapeMismatch, "inverse: matrix not square");
  std::size_t n = a.rows();
  Mat aug(a.field(), n, 2 * n);
  aug.setBlock(0, 0, a);
  aug.setBlock(0, n, Mat::identity(a.field(), n));
  RrefResult rr = rref(aug);
  if (rr.rank < n || (n > 0 && rr.pivots[n - 1] != n - 1)) {
    throw Error(ErrorKind::InvalidInput, "inverse: matrix is singular");
  }
  return rr.reduced.block(0, n, n, n);
}

Mat leftInverse(const Mat& b) {
  // Pick independent rows of b, invert that square block, scatter back.
  const Field& f = b.field();
  std::size_t k = b.cols();
  EchelonBasis eb(f, k);
  std::vector<std::size_t> chosen;
  for (std::size_t r = 0; r < b.rows() && chosen.size() < k; ++r) {
    if (eb.add(b.row(r))) chosen.push_back(r);
  }
  if (chosen.size() < k) throw Error(ErrorKind::InvalidInput, "leftInverse: columns are dependent");
  Mat square(f, k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) square(i, j) = b(chosen[i], j);
  }
  Mat si = inverse(square);
  Mat l(f, k, b.rows());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) l(i, chosen[j]) = si(i, j);
  }
  return l;
}

Mat matMul(const Mat& a, const Mat& b) {
  requireSameField(a, b, "matMul");
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::ShapeMismatch, "matMul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                              " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  const Field& f = a.field();
  Mat c(f, a.rows(), b.cols());
  const bool small = f.p() < (1u << 16);
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    std::uint32_t pending = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Scalar aik = a(i, k);
      if (aik == 0) continue;
      auto brow = b.row(k);
      if (small) {
        for (std::size_t j = 0; j < b.cols(); ++j) acc[j] += std::uint64_t{aik} * brow[j];
        if (++pending == (1u << 30)) {
          for (auto& x : acc) x %= f.p();
          pending = 0;
        }
      } else {
        for (std::size_t j = 0; j < b.cols(); ++j) acc[j] = (acc[j] + std::uint64_t{aik} * brow[j] % f.p()) % f.p();
      }
    }
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = static_cast<Scalar>(acc[j] % f.p());
  }
  return c;
}

Vec matVec(const Mat& a, std::span<const Scalar> v) {
  if (v.size() != a.cols()) throw Error(ErrorKind::ShapeMismatch, "matVec: length mismatch");
  Vec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Accumulator acc(a.field());
    auto r = a.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (r[k] != 0 && v[k] != 0) acc.add(r[k], v[k]);
    }
    out[i] = acc.value();
  }
  return out;
}

Mat add(const Mat& a, const Mat& b) {
  requireSameField(a, b, "add");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::ShapeMismatch, "add: shape mismatch");
  Mat c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto cr = c.row(i);
    auto br = b.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) cr[j] = a.field().add(cr[j], br[j]);
  }
  return c;
}

Mat sub(const Mat& a, const Mat& b) { return add(a, negate(b)); }

Mat scale(const Mat& a, Scalar s) {
  Mat c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (Scalar& x : c.row(i)) x = a.field().mul(x, s);
  }
  return c;
}

Mat negate(const Mat& a) { return scale(a, a.field().neg(1)); }

Mat transpose(const Mat& a) {
  Mat t(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

Mat directSum(const Mat& a, const Mat& b) {
  const Mat blocks[] = {a, b};
  return directSum(blocks);
}

Mat directSum(std::span<const Mat> blocks) {
  if (blocks.empty()) throw Error(ErrorKind::InvalidInput, "directSum of nothing");
  std::size_t r = 0, c = 0;
  for (const Mat& b : blocks) {
    requireSameField(blocks.front(), b, "directSum");
    r += b.rows();
    c += b.cols();
  }
  Mat out(blocks.front().field(), r, c);
  r = c = 0;
  for (const Mat& b : blocks) {
    out.setBlock(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

Mat kroneckerProduct(const Mat& a, const Mat& b) {
  requireSameField(a, b, "kroneckerProduct");
  const Field& f = a.field();
  Mat k(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Scalar aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) {
          k(i * b.rows() + p, j * b.cols() + q) = f.mul(aij, b(p, q));
        }
      }
    }
  }
  return k;
}

Mat hstack(std::span<const Mat> blocks) {
  if (blocks.empty()) throw Error(ErrorKind::InvalidInput, "hstack of nothing");
  std::size_t c = 0;
  for (const Mat& b : blocks) {
    if (b.rows() != blocks.front().rows()) throw Error(ErrorKind::ShapeMismatch, "hstack: row mismatch");
    c += b.cols();
  }
  Mat out(blocks.front().field(), blocks.front().rows(), c);
  c = 0;
  for (const Mat& b : blocks) {
    out.setBlock(0, c, b);
    c += b.cols();
  }
  return out;
}

Mat vstack(std::span<const Mat> blocks) {
  if (blocks.empty()) throw Error(ErrorKind::InvalidInput, "vstack of nothing");
  std::size_t r = 0;
  for (const Mat& b : blocks) {
    if (b.cols() != blocks.front().cols()) throw Error(ErrorKind::ShapeMismatch, "vstack: column mismatch");
    r += b.rows();
  }
  Mat out(blocks.front().field(), r, blocks.front().cols());
  r = 0;
  for (const Mat& b : blocks) {
    out.setBlock(r, 0, b);
    r += b.rows();
  }
  return out;
}

EchelonBasis::EchelonBasis(Field field, std::size_t n) : field_(field), n_(n) {}

void EchelonBasis::reduce(std::span<Scalar> v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar c = v[pivots_[i]];
    if (c == 0) continue;
    const Vec& row = rows_[i];
    for (std::size_t k = pivots_[i]; k < n_; ++k) {
      if (row[k] != 0) v[k] = field_.sub(v[k], field_.mul(c, row[k]));
    }
  }
}

bool EchelonBasis::contains(std::span<const Scalar> v) const {
  Vec w(v.begin(), v.end());
  reduce(w);
  return std::all_of(w.begin(), w.end(), [](Scalar s) { return s == 0; });
}

bool EchelonBasis::add(std::span<const Scalar> v) {
  if (v.size() != n_) throw Error(ErrorKind::ShapeMismatch, "EchelonBasis::add: length mismatch");
  Vec w(v.begin(), v.end());
  reduce(w);
  std::size_t piv = 0;
  while (piv < n_ && w[piv] == 0) ++piv;
  if (piv == n_) return false;
  Scalar iv = field_.inv(w[piv]);
  for (std::size_t k = piv; k < n_; ++k) w[k] = field_.mul(w[k], iv);
  // Keep every stored row fully reduced against the new pivot.
  for (Vec& row : rows_) {
    Scalar c = row[piv];
    if (c == 0) continue;
    for (std::size_t k = piv; k < n_; ++k) {
      if (w[k] != 0) row[k] = field_.sub(row[k], field_.mul(c, w[k]));
    }
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(piv);
  return true;
}

RrefResult EchelonBasis::toRref() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  Mat m(field_, rows_.size(), n_);
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::copy(rows_[order[i]].begin(), rows_[order[i]].end(), m.row(i).begin());
    piv.push_back(pivots_[order[i]]);
  }
  return {std::move(m), piv.size(), std::move(piv)};
}

Mat EchelonBasis::nullSpace() const { return kernelFromRref(toRref(), n_); }

QuotientData EchelonBasis::quotient() const {
  RrefResult rr = toRref();
  std::vector<bool> isPivot(n_, false);
  for (std::size_t pc : rr.pivots) isPivot[pc] = true;
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < n_; ++c) {
    if (!isPivot[c]) keep.push_back(c);
  }
  Mat proj(field_, keep.size(), n_);
  Mat section(field_, n_, keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k) {
    std::size_t j = keep[k];
    proj(k, j) = 1;
    section(j, k) = 1;
    for (std::size_t r = 0; r < rr.rank; ++r) proj(k, rr.pivots[r]) = field_.neg(rr.reduced(r, j));
  }
  return {std::move(proj), std::move(section)};
}

}  // namespace tr
