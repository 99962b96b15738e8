#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "demorgan/errors.hpp"

namespace demorgan {

using Index = std::uint32_t;

// Candidate operation tables as read from disk. Entries are signed so that
// out-of-range input can be reported instead of silently wrapping.
struct AlgebraTables {
  std::int64_t size = 0;
  std::int64_t bottom = 0;
  std::int64_t top = 0;
  std::vector<std::vector<std::int64_t>> join;
  std::vector<std::vector<std::int64_t>> meet;
  std::vector<std::int64_t> neg;
  std::vector<std::string> labels;
};

/// A finite de Morgan algebra (L; join, meet, neg, bottom, top) over the
/// carrier {0, ..., size-1}.
///
/// Instances built through validate_algebra() or make_algebra() satisfy every
/// axiom. The unchecked constructor is for internal constructions whose
/// result is valid by construction (products, subalgebras, morphism sets).
/// The order is derived: x <= y iff meet(x, y) == x.
class DeMorganAlgebra {
 public:
  struct Unchecked {};

  DeMorganAlgebra(Unchecked, std::size_t size, Index bottom, Index top,
                  std::vector<Index> join, std::vector<Index> meet,
                  std::vector<Index> neg, std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return size_; }
  Index bottom() const noexcept { return bottom_; }
  Index top() const noexcept { return top_; }

  Index join(Index x, Index y) const noexcept { return join_[x * size_ + y]; }
  Index meet(Index x, Index y) const noexcept { return meet_[x * size_ + y]; }
  Index neg(Index x) const noexcept { return neg_[x]; }
  bool leq(Index x, Index y) const noexcept { return meet(x, y) == x; }

  std::span<const Index> join_table() const noexcept { return join_; }
  std::span<const Index> meet_table() const noexcept { return meet_; }
  std::span<const Index> neg_table() const noexcept { return neg_; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  // Label of x, or its decimal index when the algebra is unlabelled.
  std::string label(Index x) const;
  // Element carrying the given label, if any.
  std::optional<Index> find_label(std::string_view label) const;

  AlgebraTables to_tables() const;

  friend bool operator==(const DeMorganAlgebra&, const DeMorganAlgebra&) = default;

 private:
  std::size_t size_;
  Index bottom_;
  Index top_;
  std::vector<Index> join_;
  std::vector<Index> meet_;
  std::vector<Index> neg_;
  std::vector<std::string> labels_;
};

struct AxiomViolation {
  std::string axiom;
  std::vector<Index> witness;
};

struct ValidationResult {
  std::optional<DeMorganAlgebra> algebra;
  std::vector<AxiomViolation> violations;

  bool ok() const noexcept { return algebra.has_value(); }
};

// Throws InputError for malformed tables (bad size, ragged rows, entries out
// of range). Axiom failures are returned, one entry per violated axiom with
// its first witness in lexicographic order.
ValidationResult validate_algebra(const AlgebraTables& tables);

// validate_algebra() that throws InputError listing every violated axiom.
DeMorganAlgebra make_algebra(const AlgebraTables& tables);

/// A subset of a parent algebra closed under all operations, together with
/// the induced algebra on the re-indexed subset. Induced index i corresponds
/// to parent index inclusion[i]; subset is sorted, so inclusion == subset.
struct SubalgebraEmbedding {
  DeMorganAlgebra parent;
  std::vector<Index> subset;
  DeMorganAlgebra induced;
  std::vector<Index> inclusion;

  bool contains(Index parent_element) const;
  // Induced index of a parent element; the element must be in the subset.
  Index induced_index(Index parent_element) const;
};

// The Boolean skeleton {x | x v x' = 1}.
SubalgebraEmbedding skeleton(const DeMorganAlgebra& m);
bool in_skeleton(const DeMorganAlgebra& m, Index x);

SubalgebraEmbedding subalgebra_generated(const DeMorganAlgebra& m,
                                         std::span<const Index> generators);

// Induced algebra on a subset already known to be closed; throws
// InputError otherwise.
SubalgebraEmbedding embed_closed_subset(const DeMorganAlgebra& m,
                                        std::vector<Index> subset);

struct Classification {
  bool boolean = false;
  bool kleene = false;
  bool de_morgan = true;

  std::vector<std::string> tags() const;
};

Classification classify(const DeMorganAlgebra& m);

// Componentwise product; pair (i, j) is encoded as i * |b| + j.
DeMorganAlgebra product(const DeMorganAlgebra& a, const DeMorganAlgebra& b,
                        std::size_t max_size = Limits{}.max_size);
// Left fold of product() over the factors; the empty list yields the
// one-element algebra.
DeMorganAlgebra product(std::span<const DeMorganAlgebra> factors,
                        std::size_t max_size = Limits{}.max_size);

// Named algebras.
DeMorganAlgebra trivial();  // one element, 0 = 1
DeMorganAlgebra b2();       // {0, 1}
DeMorganAlgebra k3();       // chain 0 < a < 1 with a' = a
DeMorganAlgebra m1();       // diamond {0, a, b, 1}, a' = a, b' = b
DeMorganAlgebra c4();       // chain 0 < p < q < 1 with p' = q

// Elements of x's down-set, excluding x, that x covers.
std::vector<Index> lower_covers(const DeMorganAlgebra& m, Index x);
std::vector<Index> upper_covers(const DeMorganAlgebra& m, Index x);
// Length of the longest chain from bottom to x.
std::vector<std::size_t> heights(const DeMorganAlgebra& m);

}  // namespace demorgan
