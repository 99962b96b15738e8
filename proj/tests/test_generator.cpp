#include <doctest.h>

#include <set>
#include <vector>

#include "demorgan/duality.hpp"
#include "demorgan/generator.hpp"
#include "oracles.hpp"

using namespace demorgan;

namespace {

// Every labelled dual space on n points, counted up to isomorphism with the
// permutation oracle.
std::size_t brute_force_class_count(std::size_t n) {
  std::vector<DualSpace> classes;
  std::vector<std::pair<Index, Index>> slots;
  for (Index p = 0; p < n; ++p) {
    for (Index q = 0; q < n; ++q) {
      if (p != q) slots.emplace_back(p, q);
    }
  }
  // Involutions as arrays.
  std::vector<std::vector<Index>> involutions;
  std::vector<Index> f(n);
  for (Index p = 0; p < n; ++p) f[p] = p;
  do {
    bool ok = true;
    for (Index p = 0; p < n; ++p) ok = ok && f[f[p]] == p;
    if (ok) involutions.push_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    std::vector<std::uint8_t> leq(n * n, 0);
    for (Index p = 0; p < n; ++p) leq[p * n + p] = 1;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (bits >> s & 1) leq[slots[s].first * n + slots[s].second] = 1;
    }
    for (const auto& inv : involutions) {
      DualSpace x(DualSpace::Unchecked{}, n, leq, inv);
      if (!is_valid_dual_space(x)) continue;
      bool seen = false;
      for (const auto& c : classes) {
        if (oracle::isomorphic_by_permutation(c, x)) {
          seen = true;
          break;
        }
      }
      if (!seen) classes.push_back(x);
    }
  }
  return classes.size();
}

}  // namespace

TEST_CASE("enumeration examples") {
  CHECK(enumerate_dual_spaces(1).size() == 1);
  const auto two = enumerate_dual_spaces(2);
  CHECK(two.size() == 4);
  // One point, two fixed points (chain and antichain), and the swapped antichain and chain.
  std::size_t swapped = 0;
  for (const auto& x : two) {
    if (x.size() == 2 && x.f(0) == 1) ++swapped;
  }
  CHECK(swapped == 2);
  CHECK(enumerate_dual_spaces(0).empty());
  CHECK_THROWS_AS(enumerate_dual_spaces(8), SizeLimitError);
}

TEST_CASE("enumeration is valid, sorted and free of duplicates") {
  const auto spaces = enumerate_dual_spaces(5);
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    CHECK(is_valid_dual_space(spaces[i]));
    if (i > 0) CHECK(spaces[i - 1].size() <= spaces[i].size());
    for (std::size_t j = i + 1; j < spaces.size(); ++j) {
      if (spaces[i].size() == spaces[j].size()) {
        CHECK_FALSE(find_isomorphism(spaces[i], spaces[j]).has_value());
      }
    }
  }
}

TEST_CASE("enumeration matches labelled brute force") {
  std::vector<std::size_t> by_size(5, 0);
  for (const auto& x : enumerate_dual_spaces(4)) ++by_size[x.size()];
  for (std::size_t n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(by_size[n] == brute_force_class_count(n));
  }
}

TEST_CASE("enumeration is deterministic") {
  const auto a = enumerate_dual_spaces(5);
  const auto b = enumerate_dual_spaces(5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("random dual spaces are valid and reproducible") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t n = 1 + seed % 9;
    const auto x = random_dual_space(n, seed);
    CHECK(x.size() == n);
    CHECK(is_valid_dual_space(x));
    CHECK(random_dual_space(n, seed) == x);
  }
  const auto one = random_dual_space(1, 42);
  CHECK(one.f(0) == 0);
  CHECK_THROWS_AS(random_dual_space(0, 1), PreconditionError);
  CHECK_THROWS_AS(random_dual_space(25, 1), SizeLimitError);
}

TEST_CASE("corpus with two-point duals and no named algebras") {
  CorpusSpec spec;
  spec.max_dual_points = 2;
  spec.include_named = false;
  const auto entries = corpus(spec);
  CHECK(entries.size() == 4);
  const std::vector<DeMorganAlgebra> expected{b2(), k3(), m1(), product(b2(), b2())};
  for (const auto& m : expected) {
    bool found = false;
    for (const auto& e : entries) {
      found = found || find_isomorphism(e.algebra, m).has_value();
      CHECK(e.source == CorpusSource::enumerated);
      CHECK(e.dual_space.has_value());
    }
    CHECK(found);
  }
}

TEST_CASE("corpus contents") {
  CorpusSpec spec;
  spec.max_dual_points = 4;
  spec.random_count = 20;
  spec.seed = 7;
  const auto entries = corpus(spec);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CHECK(ids.insert(entries[i].id).second);
    CHECK(entries[i].algebra.size() <= spec.max_algebra_size);
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (entries[i].algebra.size() == entries[j].algebra.size()) {
        CHECK_FALSE(find_isomorphism(entries[i].algebra, entries[j].algebra).has_value());
      }
    }
  }
  // C4 is named and equals the algebra of the three-chain with swapped ends.
  const DualSpace chain(DualSpace::Unchecked{}, 3, {1, 1, 1, 0, 1, 1, 0, 0, 1}, {2, 1, 0});
  REQUIRE(is_valid_dual_space(chain));
  bool c4_named = false;
  for (const auto& e : entries) {
    if (e.id == "named:C4") {
      c4_named = true;
      CHECK(find_isomorphism(e.algebra, algebra_of(chain)).has_value());
    }
  }
  CHECK(c4_named);

  // Same CorpusSpec, same corpus.
  const auto again = corpus(spec);
  REQUIRE(again.size() == entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CHECK(again[i].id == entries[i].id);
    CHECK(again[i].algebra == entries[i].algebra);
  }
}

TEST_CASE("every de Morgan algebra of size at most 7 is in the corpus") {
  CorpusSpec spec;
  spec.max_dual_points = 7;
  const auto entries = corpus(spec);
  for (std::size_t n = 1; n <= 7; ++n) {
    std::size_t classes = 0;
    std::vector<const DeMorganAlgebra*> in_corpus;
    for (const auto& e : entries) {
      if (e.algebra.size() == n) in_corpus.push_back(&e.algebra);
    }
    std::vector<bool> hit(in_corpus.size(), false);
    for (const auto& m : oracle::raw_de_morgan_algebras(n)) {
      bool found = false;
      for (std::size_t i = 0; i < in_corpus.size() && !found; ++i) {
        if (find_isomorphism(m, *in_corpus[i]).has_value()) {
          found = true;
          if (!hit[i]) ++classes;
          hit[i] = true;
        }
      }
      CHECK_MESSAGE(found, "size " << n);
    }
    CHECK(classes == in_corpus.size());
  }
}
