#include "tring/serialize.hpp"

#include <fstream>
#include <sstream>

namespace tr {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::InvalidInput, "at " + (path.empty() ? std::string("/") : path) + ": " + msg);
}

std::string sub(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string sub(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const Json& member(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, "missing key \"" + key + "\"");
  return *it;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

std::size_t asSize(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || (j.is_number_integer() && j.get<long long>() < 0)) {
    bad(path, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

Scalar asScalar(const Json& j, const Field& f, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer field element");
  long long v = j.get<long long>();
  if (v < 0 || v >= static_cast<long long>(f.p())) {
    bad(path, "field element " + std::to_string(v) + " outside 0.." + std::to_string(f.p() - 1));
  }
  return static_cast<Scalar>(v);
}

std::string asString(const Json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

Json vecToJson(const Vec& v) {
  Json out = Json::array();
  for (Scalar s : v) out.push_back(s);
  return out;
}

Vec vecFromJson(const Json& j, const Field& f, const std::string& path, std::size_t len) {
  array(j, path);
  if (j.size() != len) bad(path, "expected " + std::to_string(len) + " entries, found " + std::to_string(j.size()));
  Vec v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = asScalar(j[i], f, sub(path, i));
  return v;
}

std::vector<Vec> vecListFromJson(const Json& j, const Field& f, const std::string& path, std::size_t len) {
  array(j, path);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vecFromJson(j[i], f, sub(path, i), len));
  return out;
}

std::vector<Mat> matListFromJson(const Json& j, const Field& f, const std::string& path, std::size_t count,
                                 std::size_t dim) {
  array(j, path);
  if (j.size() != count) {
    bad(path, "expected " + std::to_string(count) + " action matrices, found " + std::to_string(j.size()));
  }
  std::vector<Mat> out;
  for (std::size_t i = 0; i < count; ++i) {
    Mat m = matrixFromJson(j[i], f, sub(path, i), dim, dim);
    if (m.rows() != dim || m.cols() != dim) {
      bad(sub(path, i), "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    }
    out.push_back(std::move(m));
  }
  return out;
}

Json matListToJson(const std::vector<Mat>& ms) {
  Json out = Json::array();
  for (const Mat& m : ms) out.push_back(matrixToJson(m));
  return out;
}

/// Runs a library constructor and reattaches the document path to its errors.
template <class F>
auto located(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidInput) throw;
    throw Error(e.kind(), "at " + (path.empty() ? std::string("/") : path) + ": " + e.detail());
  }
}

}  // namespace

Json fieldToJson(const Field& f) { return Json{{"p", f.p()}}; }

Field fieldFromJson(const Json& j, const std::string& path) {
  std::size_t p = asSize(member(j, "p", path), sub(path, "p"));
  if (!isPrime(p) || p > 0xFFFFFFFFull) bad(sub(path, "p"), "characteristic " + std::to_string(p) + " is not a prime");
  return Field(static_cast<std::uint32_t>(p));
}

Json matrixToJson(const Mat& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Mat matrixFromJson(const Json& j, const Field& f, const std::string& path, std::size_t expectRows,
                   std::size_t expectCols) {
  std::size_t rows = expectRows;
  std::size_t cols = expectCols;
  const Json* entries = &j;
  std::string epath = path;
  if (j.is_object()) {
    rows = asSize(member(j, "rows", path), sub(path, "rows"));
    cols = asSize(member(j, "cols", path), sub(path, "cols"));
    entries = &member(j, "entries", path);
    epath = sub(path, "entries");
  } else if (j.is_array()) {
    if (!j.empty()) {
      rows = j.size();
      cols = array(j[0], sub(path, 0)).size();
    }
  } else {
    bad(path, "expected a matrix object or nested array");
  }
  array(*entries, epath);
  if (entries->size() != rows) {
    bad(epath, "expected " + std::to_string(rows) + " rows, found " + std::to_string(entries->size()));
  }
  Mat out(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vec row = vecFromJson((*entries)[r], f, sub(epath, r), cols);
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = row[c];
  }
  return out;
}

Json algebraToJson(const Algebra& a) {
  const std::size_t d = a.dim();
  Json sc = Json::array();
  for (std::size_t i = 0; i < d; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < d; ++j) row.push_back(vecToJson(a.basisProduct(i, j)));
    sc.push_back(std::move(row));
  }
  Json idem = Json::array();
  for (const Vec& e : a.idempotents()) idem.push_back(vecToJson(e));
  Json rad = Json::array();
  for (const Vec& r : a.radical()) rad.push_back(vecToJson(r));
  return Json{{"field", fieldToJson(a.field())},
              {"dim", d},
              {"labels", a.labels()},
              {"unit", vecToJson(a.unit())},
              {"structconst", std::move(sc)},
              {"idempotents", std::move(idem)},
              {"radical", std::move(rad)}};
}

Json quiverToJson(const Field& f, const Quiver& q, const std::vector<MonomialRelation>& rels) {
  Json arrows = Json::array();
  for (const Arrow& a : q.arrows) arrows.push_back(Json{{"name", a.name}, {"from", a.source + 1}, {"to", a.target + 1}});
  return Json{{"field", fieldToJson(f)}, {"vertices", q.vertexCount}, {"arrows", std::move(arrows)}, {"relations", rels}};
}

namespace {

AlgebraPtr quiverFromJson(const Json& j, const std::string& path) {
  Field f = fieldFromJson(member(j, "field", path), sub(path, "field"));
  Quiver q;
  q.vertexCount = asSize(member(j, "vertices", path), sub(path, "vertices"));
  const std::string apath = sub(path, "arrows");
  const Json& arrows = array(member(j, "arrows", path), apath);
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const std::string p = sub(apath, k);
    Arrow a;
    a.name = asString(member(arrows[k], "name", p), sub(p, "name"));
    std::size_t from = asSize(member(arrows[k], "from", p), sub(p, "from"));
    std::size_t to = asSize(member(arrows[k], "to", p), sub(p, "to"));
    if (from < 1 || from > q.vertexCount) bad(sub(p, "from"), "vertex out of range 1.." + std::to_string(q.vertexCount));
    if (to < 1 || to > q.vertexCount) bad(sub(p, "to"), "vertex out of range 1.." + std::to_string(q.vertexCount));
    a.source = from - 1;
    a.target = to - 1;
    q.arrows.push_back(std::move(a));
  }
  std::vector<MonomialRelation> rels;
  if (j.contains("relations")) {
    const std::string rpath = sub(path, "relations");
    const Json& rj = array(j["relations"], rpath);
    for (std::size_t k = 0; k < rj.size(); ++k) {
      array(rj[k], sub(rpath, k));
      MonomialRelation rel;
      for (std::size_t t = 0; t < rj[k].size(); ++t) rel.push_back(asString(rj[k][t], sub(sub(rpath, k), t)));
      rels.push_back(std::move(rel));
    }
  }
  return located(path, [&] { return buildPathAlgebra(f, q, rels); });
}

}  // namespace

AlgebraPtr algebraFromJson(const Json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  if (j.contains("vertices")) return quiverFromJson(j, path);
  Algebra::Data data{fieldFromJson(member(j, "field", path), sub(path, "field")), {}, {}, {}, {}, {}};
  const Field& f = data.field;
  const std::size_t d = asSize(member(j, "dim", path), sub(path, "dim"));
  const std::string lpath = sub(path, "labels");
  if (j.contains("labels")) {
    const Json& lj = array(j["labels"], lpath);
    if (lj.size() != d) bad(lpath, "expected " + std::to_string(d) + " labels");
    for (std::size_t i = 0; i < d; ++i) data.labels.push_back(asString(lj[i], sub(lpath, i)));
  } else {
    for (std::size_t i = 0; i < d; ++i) data.labels.push_back("b" + std::to_string(i + 1));
  }
  data.unit = vecFromJson(member(j, "unit", path), f, sub(path, "unit"), d);
  const std::string spath = sub(path, "structconst");
  const Json& sc = array(member(j, "structconst", path), spath);
  if (sc.size() != d) bad(spath, "expected " + std::to_string(d) + " rows");
  data.structConst.assign(d * d * d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    const Json& row = array(sc[i], sub(spath, i));
    if (row.size() != d) bad(sub(spath, i), "expected " + std::to_string(d) + " entries");
    for (std::size_t k = 0; k < d; ++k) {
      Vec v = vecFromJson(row[k], f, sub(sub(spath, i), k), d);
      std::copy(v.begin(), v.end(), data.structConst.begin() + static_cast<std::ptrdiff_t>((i * d + k) * d));
    }
  }
  data.idempotents = vecListFromJson(member(j, "idempotents", path), f, sub(path, "idempotents"), d);
  data.radical = vecListFromJson(member(j, "radical", path), f, sub(path, "radical"), d);
  return located(path, [&] { return Algebra::create(std::move(data)); });
}

Json moduleToJson(const FdModule& x) { return Json{{"dim", x.dim()}, {"action", matListToJson(x.actions())}}; }

FdModule moduleFromJson(const Json& j, const AlgebraPtr& a, const std::string& path) {
  const std::size_t d = asSize(member(j, "dim", path), sub(path, "dim"));
  auto acts = matListFromJson(member(j, "action", path), a->field(), sub(path, "action"), a->dim(), d);
  return located(path, [&] { return FdModule(a, d, std::move(acts)); });
}

Json bimoduleToJson(const Bimodule& m) {
  return Json{{"dim", m.dim()}, {"left", matListToJson(m.leftActions())}, {"right", matListToJson(m.rightActions())}};
}

Bimodule bimoduleFromJson(const Json& j, const AlgebraPtr& left, const AlgebraPtr& right, const std::string& path) {
  const std::size_t d = asSize(member(j, "dim", path), sub(path, "dim"));
  auto l = matListFromJson(member(j, "left", path), left->field(), sub(path, "left"), left->dim(), d);
  auto r = matListFromJson(member(j, "right", path), right->field(), sub(path, "right"), right->dim(), d);
  return located(path, [&] { return Bimodule(left, right, d, std::move(l), std::move(r)); });
}

Json pairToJson(const PairModule& p) { return Json{{"X", moduleToJson(p.x)}, {"u", matrixToJson(p.u)}}; }

PairModule pairFromJson(const Json& j, const TensorRing& ctx, const std::string& path) {
  FdModule x = moduleFromJson(member(j, "X", path), ctx.r(), sub(path, "X"));
  Mat u = matrixFromJson(member(j, "u", path), ctx.r()->field(), sub(path, "u"));
  return located(path, [&] { return makePair(ctx, std::move(x), std::move(u)); });
}

Json copairToJson(const CopairModule& c) { return Json{{"Y", moduleToJson(c.y)}, {"vbar", matrixToJson(c.vbar)}}; }

CopairModule copairFromJson(const Json& j, const TensorRing& ctx, const std::string& path) {
  FdModule y = moduleFromJson(member(j, "Y", path), ctx.rOp(), sub(path, "Y"));
  Mat vbar = matrixFromJson(member(j, "vbar", path), ctx.r()->field(), sub(path, "vbar"));
  return located(path, [&] { return makeCopair(ctx, std::move(y), std::move(vbar)); });
}

Json readJsonFile(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, p.string() + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string dumpJson(const Json& j) { return j.dump(2) + "\n"; }

void writeJsonFile(const std::filesystem::path& p, const Json& j) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + p.string());
  out << dumpJson(j);
}

namespace {

template <class F>
auto inFile(const std::filesystem::path& p, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), p.string() + ": " + e.detail());
  }
}

}  // namespace

Instance loadInstance(const std::filesystem::path& algebra, const std::filesystem::path& bimodule) {
  AlgebraPtr r = inFile(algebra, [&] { return algebraFromJson(readJsonFile(algebra)); });
  Bimodule m = inFile(bimodule, [&] { return bimoduleFromJson(readJsonFile(bimodule), r, r); });
  return {r, std::move(m)};
}

Instance loadManifest(const std::filesystem::path& dirOrFile) {
  std::filesystem::path file = dirOrFile;
  if (std::filesystem::is_directory(file)) file /= "manifest.json";
  Json j = readJsonFile(file);
  return inFile(file, [&] {
    std::string version = asString(member(j, "version", ""), "/version");
    if (version != "1") bad("/version", "unsupported manifest version \"" + version + "\"");
    std::filesystem::path base = file.parent_path();
    Instance inst = loadInstance(base / asString(member(j, "algebra", ""), "/algebra"),
                                 base / asString(member(j, "bimodule", ""), "/bimodule"));
    if (j.contains("field")) {
      Field f = fieldFromJson(j["field"], "/field");
      if (!(f == inst.r->field())) bad("/field", "field does not match the algebra document");
    }
    return inst;
  });
}

void writeInstance(const std::filesystem::path& dir, const Algebra& r, const Bimodule& m) {
  std::filesystem::create_directories(dir);
  writeJsonFile(dir / "algebra.json", algebraToJson(r));
  writeJsonFile(dir / "bimodule.json", bimoduleToJson(m));
  writeJsonFile(dir / "manifest.json", Json{{"version", "1"},
                                            {"field", fieldToJson(r.field())},
                                            {"algebra", "algebra.json"},
                                            {"bimodule", "bimodule.json"}});
}

}  // namespace tr
