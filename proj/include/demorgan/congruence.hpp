#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "demorgan/algebra.hpp"

namespace demorgan {

/// A partition of a carrier in canonical form: block_id[x] is the smallest
/// element of x's block. Compatibility with the operations is not enforced
/// by the type; see is_compatible().
class Congruence {
 public:
  Congruence() = default;
  // Canonicalizes any block labelling (equal labels = same block).
  static Congruence from_labels(std::span<const Index> labels);
  static Congruence from_blocks(std::size_t size, const std::vector<std::vector<Index>>& blocks);
  static Congruence identity(std::size_t size);  // Delta
  static Congruence total(std::size_t size);     // Nabla

  std::size_t algebra_size() const noexcept { return block_id_.size(); }
  const std::vector<Index>& block_id() const noexcept { return block_id_; }
  bool related(Index x, Index y) const noexcept { return block_id_[x] == block_id_[y]; }
  std::size_t num_blocks() const;
  // Blocks sorted by smallest element, each block sorted.
  std::vector<std::vector<Index>> blocks() const;

  bool is_identity() const;
  bool is_total() const;
  // Refinement order: *this is contained in other.
  bool refines(const Congruence& other) const;

  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend auto operator<=>(const Congruence&, const Congruence&) = default;

 private:
  explicit Congruence(std::vector<Index> block_id) : block_id_(std::move(block_id)) {}
  std::vector<Index> block_id_;
};

// Intersection of two partitions of the same carrier.
Congruence intersect(const Congruence& a, const Congruence& b);

bool is_compatible(const DeMorganAlgebra& m, const Congruence& theta);

/// Con(M) as a sorted, deduplicated list.
class CongruenceSet {
 public:
  CongruenceSet() = default;
  explicit CongruenceSet(std::vector<Congruence> members);

  const std::vector<Congruence>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const Congruence& c) const;
  std::optional<std::size_t> position(const Congruence& c) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const CongruenceSet&, const CongruenceSet&) = default;

 private:
  std::vector<Congruence> members_;
};

// Least congruence containing (x, y).
Congruence principal_congruence(const DeMorganAlgebra& m, Index x, Index y);
// Least congruence containing both.
Congruence congruence_join(const DeMorganAlgebra& m, const Congruence& a, const Congruence& b);
// Least congruence containing all the given pairs.
Congruence generated_congruence(const DeMorganAlgebra& m,
                                std::span<const std::pair<Index, Index>> pairs);

// Join-closure of the principal congruences. SizeLimitError above limits.max_size.
CongruenceSet all_congruences(const DeMorganAlgebra& m, const Limits& limits = {});

// Every partition of the carrier filtered by compatibility. SizeLimitError
// above limits.bell_cap.
CongruenceSet brute_force_congruences(const DeMorganAlgebra& m, const Limits& limits = {});

// theta restricted to e.induced, re-indexed.
Congruence restrict(const Congruence& theta, const SubalgebraEmbedding& e);

struct ExtensionFiber {
  Congruence skeleton_congruence;
  std::vector<Congruence> extensions;
};

struct ExtensionReport {
  SubalgebraEmbedding skeleton;
  CongruenceSet algebra_congruences;
  CongruenceSet skeleton_congruences;
  std::vector<ExtensionFiber> fibers;  // in skeleton_congruences order
};

ExtensionReport extension_report(const DeMorganAlgebra& m, const Limits& limits = {});

struct PerfectExtensionResult {
  bool perfect = false;
  // False only through an implementation bug: some skeleton congruence had
  // no extension at all.
  bool cep_holds = true;
  ExtensionReport report;
  // Indices into report.fibers of fibers whose size is not exactly one.
  std::vector<std::size_t> irregular_fibers;
};

PerfectExtensionResult is_perfect_extension(const DeMorganAlgebra& m, const Limits& limits = {});

}  // namespace demorgan
