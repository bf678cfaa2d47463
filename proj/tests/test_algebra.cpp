#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "support.hpp"

using namespace tt;

namespace {

std::string reverseLabel(const std::string& label) {
  if (label.rfind('e', 0) == 0) return label;
  std::vector<std::string> parts;
  std::stringstream ss(label);
  std::string tok;
  while (std::getline(ss, tok, '*')) parts.push_back(tok);
  std::reverse(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "*") + p;
  return out;
}

/// Every algebra axiom checked by brute force on the table.
void checkAxioms(const Algebra& a) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(a.multiply(a.unit(), a.basisVector(i)) == a.basisVector(i));
    CHECK(a.multiply(a.basisVector(i), a.unit()) == a.basisVector(i));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        CHECK(a.multiply(a.basisProduct(i, j), a.basisVector(k)) == a.multiply(a.basisVector(i), a.basisProduct(j, k)));
      }
    }
  }
  Vec sum(n, 0);
  for (std::size_t s = 0; s < a.idempotentCount(); ++s) {
    for (std::size_t t = 0; t < a.idempotentCount(); ++t) {
      Vec prod = a.multiply(a.idempotents()[s], a.idempotents()[t]);
      CHECK(prod == (s == t ? a.idempotents()[s] : Vec(n, 0)));
    }
    for (std::size_t l = 0; l < n; ++l) sum[l] = f.add(sum[l], a.idempotents()[s][l]);
  }
  CHECK(sum == a.unit());
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("path algebra examples") {
    AlgebraPtr k = buildPathAlgebra(Field(2), Quiver{1, {}}, {});
    CHECK(k->dim() == 1);
    CHECK(k->idempotentCount() == 1);

    // cyclic 1->2->3->1 with all length-2 paths as relations: trivial paths and arrows
    Quiver cyc{3, {{"a1", 0, 1}, {"a2", 1, 2}, {"a3", 2, 0}}};
    AlgebraPtr r = buildPathAlgebra(Field(2), cyc, {{"a1", "a2"}, {"a2", "a3"}, {"a3", "a1"}});
    CHECK(r->dim() == 6);
    CHECK(r->radical().size() == 3);
    checkAxioms(*r);

    AlgebraPtr nak = cyclicNakayama(Field(2), 3, 2);
    CHECK(nak->dim() == 6);
    CHECK(nak->radical().size() == 3);
    CHECK(nak->sameStructure(*r));
  }

  TEST_CASE("path algebra dimensions against path enumeration") {
    // number of paths of length < h in the cyclic quiver is n*h
    for (std::size_t n = 2; n <= 4; ++n) {
      for (std::size_t h = 2; h <= n; ++h) {
        AlgebraPtr a = cyclicNakayama(Field(3), n, h);
        CHECK(a->dim() == n * h);
        std::size_t sum = 0;
        for (std::size_t s = 0; s < n; ++s) sum += a->projective(s).basis.cols();
        CHECK(sum == a->dim());
      }
    }
    // A3 linear quiver: 3 trivial paths, 2 arrows, 1 path of length 2
    AlgebraPtr a3 = buildPathAlgebra(Field(2), Quiver{3, {{"a", 0, 1}, {"b", 1, 2}}}, {});
    CHECK(a3->dim() == 6);
    checkAxioms(*a3);
    AlgebraPtr a3r = buildPathAlgebra(Field(2), Quiver{3, {{"a", 0, 1}, {"b", 1, 2}}}, {{"a", "b"}});
    CHECK(a3r->dim() == 5);
  }

  TEST_CASE("path algebra errors") {
    Quiver loop{1, {{"x", 0, 0}}};
    CHECK_THROWS_AS(buildPathAlgebra(Field(2), loop, {}, PathAlgebraOptions{50}), Error);
    try {
      buildPathAlgebra(Field(2), loop, {}, PathAlgebraOptions{50});
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InfiniteDimensional);
    }
    Quiver q{2, {{"a", 0, 1}, {"b", 0, 1}}};
    try {
      buildPathAlgebra(Field(2), q, {{"a", "b"}});
      FAIL("expected a malformed relation error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::MalformedRelation);
    }
  }

  TEST_CASE("structure constant validation") {
    Algebra::Data d{Field(2), {"x"}, {0}, {1}, {{1}}, {}};
    CHECK_THROWS_AS(Algebra::create(d), Error);
  }

  TEST_CASE("opposite algebra") {
    AlgebraPtr k2 = directProductAlgebra(*buildPathAlgebra(Field(5), Quiver{1, {}}, {}),
                                         *buildPathAlgebra(Field(5), Quiver{1, {}}, {}));
    CHECK(oppositeAlgebra(*k2)->sameStructure(*k2));
    AlgebraPtr r = qnak().r;
    CHECK(oppositeAlgebra(*oppositeAlgebra(*r))->sameStructure(*r));
    CHECK(r->opposite() == r->opposite());

    // opposite of the cyclic Nakayama algebra = path algebra of the reversed quiver
    const std::size_t n = 3, h = 2;
    Quiver rev{n, {}};
    for (std::size_t v = 0; v < n; ++v) rev.arrows.push_back({"a" + std::to_string(v + 1), (v + 1) % n, v});
    std::vector<MonomialRelation> rels;
    for (std::size_t v = 0; v < n; ++v) {
      MonomialRelation rel;
      for (std::size_t k = 0; k < h; ++k) rel.push_back("a" + std::to_string((v + h - 1 - k) % n + 1));
      rels.push_back(rel);
    }
    AlgebraPtr b = buildPathAlgebra(Field(2), rev, rels);
    AlgebraPtr op = r->opposite();
    REQUIRE(b->dim() == op->dim());
    std::map<std::string, std::size_t> where;
    for (std::size_t i = 0; i < b->dim(); ++i) where[b->labels()[i]] = i;
    std::vector<std::size_t> perm(op->dim());
    for (std::size_t i = 0; i < op->dim(); ++i) {
      auto it = where.find(reverseLabel(op->labels()[i]));
      REQUIRE(it != where.end());
      perm[i] = it->second;
    }
    for (std::size_t i = 0; i < op->dim(); ++i) {
      for (std::size_t j = 0; j < op->dim(); ++j) {
        for (std::size_t l = 0; l < op->dim(); ++l) CHECK(op->constant(i, j, l) == b->constant(perm[i], perm[j], perm[l]));
      }
    }
  }

  TEST_CASE("direct products") {
    AlgebraPtr k = buildPathAlgebra(Field(3), Quiver{1, {}}, {});
    AlgebraPtr kk = directProductAlgebra(*k, *k);
    CHECK(kk->dim() == 2);
    CHECK(kk->idempotentCount() == 2);
    AlgebraPtr r = qnak().r;
    CHECK(directProductAlgebra(*r, *buildPathAlgebra(Field(2), Quiver{1, {}}, {}))->dim() == r->dim() + 1);
    AlgebraPtr rr = directProductAlgebra(*r, *r);
    CHECK(rr->dim() == 12);
    CHECK(rr->idempotentCount() == 6);
    checkAxioms(*rr);
    try {
      directProductAlgebra(*r, *k);
      FAIL("expected a field mismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::FieldMismatch);
    }
  }

  TEST_CASE("digest is structural") {
    CHECK(cyclicNakayama(Field(2), 3, 2)->digest() == qnak().r->digest());
    CHECK(cyclicNakayama(Field(3), 3, 2)->digest() != qnak().r->digest());
  }
}
