#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "demorgan/algebra.hpp"
#include "demorgan/dual_space.hpp"

namespace demorgan {

// Every dual space with 1..max_points points, one per isomorphism class.
// Spaces are grown one f-orbit at a time (a fixed point or an f-swapped
// pair); removing an orbit from a dual space leaves a dual space, so every
// class is reached. Output is ordered by size, then canonical_key(), then
// discovery order.
std::vector<DualSpace> enumerate_dual_spaces(std::size_t max_points, const Limits& limits = {});

// Reproducible random dual space on n points using std::mt19937_64 seeded
// with `seed`. The involution is drawn first (random pairing of a shuffled
// point list), then candidate relations x <= y are visited in random order
// and kept with probability 0.35 whenever the transitive closure of the
// relation together with f(y) <= f(x) stays antisymmetric.
DualSpace random_dual_space(std::size_t n, std::uint64_t seed);

struct CorpusSpec {
  std::size_t max_dual_points = 5;
  std::size_t max_algebra_size = 64;
  std::uint64_t seed = 0;
  bool include_named = true;
  std::size_t random_count = 0;
};

enum class CorpusSource { named, enumerated, random };

std::string to_string(CorpusSource source);

struct CorpusEntry {
  std::string id;
  CorpusSource source = CorpusSource::named;
  std::optional<DualSpace> dual_space;
  DeMorganAlgebra algebra;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> index;
};

// Named algebras (the one-element algebra, B2, K3, M1, C4 and their
// products within the size cap), then algebra_of() of every enumerated dual
// space, then the random ones; algebras isomorphic to an earlier entry are
// dropped.
std::vector<CorpusEntry> corpus(const CorpusSpec& spec);

// The named part of the corpus alone, without deduplication.
std::vector<CorpusEntry> named_algebras(std::size_t max_algebra_size);

}  // namespace demorgan
