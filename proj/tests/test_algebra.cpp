#include <doctest.h>

#include <vector>

#include "demorgan/algebra.hpp"
#include "demorgan/generator.hpp"
#include "demorgan/isomorphism.hpp"

using namespace demorgan;

namespace {

// The chain 0 < x < y < 1 with the given negation, as raw tables.
AlgebraTables chain4(std::vector<std::int64_t> neg) {
  AlgebraTables t;
  t.size = 4;
  t.bottom = 0;
  t.top = 3;
  t.join.assign(4, std::vector<std::int64_t>(4));
  t.meet.assign(4, std::vector<std::int64_t>(4));
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      t.join[x][y] = std::max(x, y);
      t.meet[x][y] = std::min(x, y);
    }
  }
  t.neg = std::move(neg);
  return t;
}

bool has_axiom(const ValidationResult& r, const std::string& axiom) {
  for (const auto& v : r.violations) {
    if (v.axiom == axiom) return true;
  }
  return false;
}

std::vector<Index> labels_to_indices(const DeMorganAlgebra& m, std::vector<std::string> names) {
  std::vector<Index> out;
  for (const auto& n : names) out.push_back(*m.find_label(n));
  return out;
}

}  // namespace

TEST_CASE("named algebras pass validation") {
  for (const auto& m : {trivial(), b2(), k3(), m1(), c4()}) {
    auto r = validate_algebra(m.to_tables());
    CHECK(r.ok());
    CHECK(r.violations.empty());
  }
}

TEST_CASE("M1 matches the diamond with fixed atoms") {
  const auto m = m1();
  const Index zero = *m.find_label("0"), a = *m.find_label("a"), b = *m.find_label("b"),
              one = *m.find_label("1");
  CHECK(m.bottom() == zero);
  CHECK(m.top() == one);
  CHECK(m.neg(zero) == one);
  CHECK(m.neg(one) == zero);
  CHECK(m.neg(a) == a);
  CHECK(m.neg(b) == b);
  CHECK(m.join(a, b) == one);
  CHECK(m.meet(a, b) == zero);
  CHECK_FALSE(m.leq(a, b));
  CHECK_FALSE(m.leq(b, a));
}

TEST_CASE("one-element algebra is valid") {
  AlgebraTables t;
  t.size = 1;
  t.join = {{0}};
  t.meet = {{0}};
  t.neg = {0};
  auto r = validate_algebra(t);
  REQUIRE(r.ok());
  CHECK(r.algebra->bottom() == r.algebra->top());
}

TEST_CASE("4-chain with identity negation violates 1' = 0") {
  auto r = validate_algebra(chain4({0, 1, 2, 3}));
  CHECK_FALSE(r.ok());
  REQUIRE(has_axiom(r, "1' = 0"));
  for (const auto& v : r.violations) {
    if (v.axiom == "1' = 0") CHECK(v.witness == std::vector<Index>{3});
  }
  CHECK(has_axiom(r, "0' = 1"));
  CHECK_FALSE(has_axiom(r, "involution x'' = x"));
  CHECK_THROWS_AS(make_algebra(chain4({0, 1, 2, 3})), InputError);
}

TEST_CASE("an involution that is not order-reversing is reported") {
  // 0 <-> 1 swapped, x and y fixed: x <= y but y' = y is not <= x' = x.
  auto r = validate_algebra(chain4({3, 1, 2, 0}));
  CHECK(has_axiom(r, "negation order-reversing"));
}

TEST_CASE("non-distributive lattice is rejected") {
  // The pentagon N5: 0 < p < q < 1, 0 < r < 1, r incomparable to p and q.
  AlgebraTables t;
  t.size = 5;
  t.bottom = 0;
  t.top = 4;
  const int le[5][5] = {{1, 1, 1, 1, 1}, {0, 1, 1, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1},
                        {0, 0, 0, 0, 1}};
  t.join.assign(5, std::vector<std::int64_t>(5));
  t.meet.assign(5, std::vector<std::int64_t>(5));
  for (int x = 0; x < 5; ++x) {
    for (int y = 0; y < 5; ++y) {
      int lub = 4, glb = 0;
      for (int z = 0; z < 5; ++z) {
        if (le[x][z] && le[y][z] && le[z][lub]) lub = z;
        if (le[z][x] && le[z][y] && le[glb][z]) glb = z;
      }
      t.join[x][y] = lub;
      t.meet[x][y] = glb;
    }
  }
  t.neg = {4, 3, 3, 1, 0};
  auto r = validate_algebra(t);
  CHECK_FALSE(r.ok());
  CHECK(has_axiom(r, "distributive x ^ (y v z) = (x ^ y) v (x ^ z)"));
}

TEST_CASE("malformed tables throw") {
  auto t = chain4({3, 2, 1, 0});
  SUBCASE("entry out of range") {
    t.join[1][2] = 4;
    CHECK_THROWS_AS(validate_algebra(t), InputError);
  }
  SUBCASE("ragged row") {
    t.meet[2].pop_back();
    CHECK_THROWS_AS(validate_algebra(t), InputError);
  }
  SUBCASE("negative entry") {
    t.neg[0] = -1;
    CHECK_THROWS_AS(validate_algebra(t), InputError);
  }
  SUBCASE("size zero") {
    t.size = 0;
    CHECK_THROWS_AS(validate_algebra(t), InputError);
  }
  SUBCASE("labels of wrong length") {
    t.labels = {"0", "1"};
    CHECK_THROWS_AS(validate_algebra(t), InputError);
  }
}

TEST_CASE("skeleton examples") {
  SUBCASE("M1 -> {0, 1}") {
    const auto m = m1();
    auto sk = skeleton(m);
    CHECK(sk.subset == labels_to_indices(m, {"0", "1"}));
    CHECK(sk.induced.size() == 2);
  }
  SUBCASE("C4 -> {0, 1}") {
    const auto m = c4();
    CHECK(skeleton(m).subset == labels_to_indices(m, {"0", "1"}));
  }
  SUBCASE("Boolean algebras are their own skeleton") {
    const DeMorganAlgebra b4 = product(b2(), b2());
    const DeMorganAlgebra b8 = product(b4, b2());
    for (const auto& b : {b2(), b4, b8}) CHECK(skeleton(b).subset.size() == b.size());
  }
}

TEST_CASE("skeleton properties over the corpus") {
  CorpusSpec spec;
  spec.max_dual_points = 4;
  for (const auto& entry : corpus(spec)) {
    const auto& m = entry.algebra;
    auto sk = skeleton(m);
    for (Index x = 0; x < m.size(); ++x) {
      CHECK(sk.contains(x) == (m.join(x, m.neg(x)) == m.top()));
    }
    // Boolean, closed, and idempotent.
    CHECK(classify(sk.induced).boolean);
    CHECK(validate_algebra(sk.induced.to_tables()).ok());
    CHECK(skeleton(sk.induced).subset.size() == sk.induced.size());
  }
}

TEST_CASE("classify examples") {
  CHECK(classify(m1()).tags() == std::vector<std::string>{"de_morgan"});
  CHECK(classify(k3()).tags() == std::vector<std::string>{"kleene", "de_morgan"});
  CHECK(classify(b2()).tags() == std::vector<std::string>{"boolean", "kleene", "de_morgan"});
  // C4 is a chain, and every chain is Kleene.
  CHECK(classify(c4()).tags() == std::vector<std::string>{"kleene", "de_morgan"});
}

TEST_CASE("classify monotonicity over the corpus") {
  CorpusSpec spec;
  spec.max_dual_points = 4;
  for (const auto& entry : corpus(spec)) {
    auto c = classify(entry.algebra);
    CHECK(c.de_morgan);
    if (c.boolean) CHECK(c.kleene);
  }
}

TEST_CASE("product examples") {
  const auto b4 = product(b2(), b2());
  CHECK(b4.size() == 4);
  CHECK(classify(b4).boolean);
  // Row-major pair encoding.
  CHECK(b4.bottom() == 0);
  CHECK(b4.top() == 3);

  // Skeleton of a product is the product of skeletons: 2 * 2.
  const auto mk = product(m1(), k3());
  CHECK(mk.size() == 12);
  CHECK(skeleton(mk).subset.size() == skeleton(m1()).subset.size() * skeleton(k3()).subset.size());
  CHECK(skeleton(mk).subset.size() == 4);

  const auto a = c4();
  CHECK(find_isomorphism(product(a, trivial()), a).has_value());
  CHECK(find_isomorphism(product(trivial(), a), a).has_value());
  CHECK(validate_algebra(mk.to_tables()).ok());
}

TEST_CASE("product is associative up to re-encoding") {
  const std::vector<DeMorganAlgebra> named = {b2(), k3(), m1(), c4()};
  for (const auto& a : named) {
    for (const auto& b : named) {
      const auto left = product(product(a, b), b2());
      const auto right = product(a, product(b, b2()));
      CHECK(find_isomorphism(left, right).has_value());
    }
  }
}

TEST_CASE("product respects the size limit") {
  CHECK_THROWS_AS(product(m1(), m1(), 15), SizeLimitError);
  CHECK_NOTHROW(product(m1(), m1(), 16));
  const std::vector<DeMorganAlgebra> none;
  CHECK(product(none).size() == 1);
}

TEST_CASE("subalgebra_generated examples") {
  const auto m = m1();
  const Index a = *m.find_label("a"), b = *m.find_label("b");
  const std::vector<Index> just_a{a}, nothing{}, both{a, b};
  CHECK(subalgebra_generated(m, just_a).subset == labels_to_indices(m, {"0", "a", "1"}));
  CHECK(subalgebra_generated(m, nothing).subset == labels_to_indices(m, {"0", "1"}));
  CHECK(subalgebra_generated(m, both).subset.size() == 4);
  // C4: p generates p' = q.
  const auto c = c4();
  const std::vector<Index> p{*c.find_label("p")};
  CHECK(subalgebra_generated(c, p).subset.size() == 4);
}

TEST_CASE("subalgebra embeddings are injective homomorphisms") {
  const auto m = product(m1(), c4());
  for (Index g = 0; g < m.size(); ++g) {
    const std::vector<Index> gens{g};
    auto e = subalgebra_generated(m, gens);
    const auto& s = e.induced;
    for (Index x = 0; x < s.size(); ++x) {
      CHECK(e.inclusion[s.neg(x)] == m.neg(e.inclusion[x]));
      for (Index y = 0; y < s.size(); ++y) {
        CHECK(e.inclusion[s.join(x, y)] == m.join(e.inclusion[x], e.inclusion[y]));
        CHECK(e.inclusion[s.meet(x, y)] == m.meet(e.inclusion[x], e.inclusion[y]));
      }
    }
    CHECK(e.contains(g));
  }
}

TEST_CASE("embed_closed_subset rejects non-closed subsets") {
  const auto m = m1();
  CHECK_THROWS_AS(embed_closed_subset(m, {*m.find_label("a")}), InputError);
}
