#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "demorgan/algebra.hpp"
#include "demorgan/congruence.hpp"
#include "demorgan/dual_space.hpp"
#include "demorgan/isomorphism.hpp"

namespace demorgan {

// A map from dual points (or algebra elements) into the alter ego.
using AlterEgoMap = std::vector<alter_ego::Value>;

// Elements with exactly one lower cover.
std::vector<Index> join_irreducibles(const DeMorganAlgebra& m);

/// The dual space of an algebra realized by prime filters. Point i is the
/// filter generated by generators[i]; points are ordered by filter size,
/// then by generator index, so every point precedes the points above it.
struct NaturalDual {
  DualSpace space;
  std::vector<Index> generators;

  bool in_filter(const DeMorganAlgebra& m, Index point, Index x) const {
    return m.leq(generators[point], x);
  }
};

// Order is filter inclusion; f(F) = {x | x' not in F}. Throws InternalError
// when f leaves the prime filters or fails to be an order-reversing
// involution.
NaturalDual dual_space(const DeMorganAlgebra& m);

// Element x as the morphism F -> (x in F, x in f(F)) on the dual points.
AlterEgoMap evaluation_map(const DeMorganAlgebra& m, const NaturalDual& dual, Index x);

// All order-preserving, f-commuting maps X -> alter ego, in lexicographic
// order of their value vectors. SizeLimitError past max_size maps.
std::vector<AlterEgoMap> morphisms(const DualSpace& x, std::size_t max_size);

// The morphism set with pointwise M1 operations; element i is morphisms()[i].
DeMorganAlgebra algebra_of(const DualSpace& x, const Limits& limits = {});

struct Condition3Result {
  bool holds = true;
  // First (x, y) in lexicographic order with x <= y, x != y, x != f(y).
  std::optional<std::pair<Index, Index>> violation;
};

Condition3Result condition3_holds(const DualSpace& x);

// Every fixed point, and the smaller point of each two-element f-orbit.
// The induced topology on a finite selection is discrete.
std::vector<Index> select_y(const DualSpace& x);

enum class FactorTag { B2, K3, M1 };

std::string to_string(FactorTag tag);
DeMorganAlgebra factor_algebra(FactorTag tag);

/// Witness that an algebra is the full direct product of copies of {0,1},
/// {0,a,1} and M1, one factor per point of Y.
struct FactorDecomposition {
  DeMorganAlgebra algebra;
  std::vector<Index> y;            // dual points, ascending
  std::vector<FactorTag> tags;     // per point of y
  // Per point of y: the image was {0,b,1}, and its coordinates were renamed
  // by the automorphism of M1 exchanging a and b.
  std::vector<bool> renamed;
  std::array<std::size_t, 3> counts{};  // (B2, K3, M1)
  // coordinates[x][k]: value of x at y[k] as an element of M1, after renaming.
  std::vector<AlterEgoMap> coordinates;
  // Row-major index of x in product(factors()).
  std::vector<std::size_t> product_index;

  std::vector<DeMorganAlgebra> factors() const;
  // Tuple of factor-local indices of element x.
  std::vector<Index> local_tuple(Index x) const;
};

// Empty when d is a valid decomposition of its algebra; otherwise the defect.
std::optional<std::string> decomposition_defect(const FactorDecomposition& d);

struct DecomposeResult {
  NaturalDual dual;
  std::optional<FactorDecomposition> decomposition;
  std::optional<std::pair<Index, Index>> violation;

  bool ok() const noexcept { return decomposition.has_value(); }
};

DecomposeResult decompose(const DeMorganAlgebra& m, const Limits& limits = {});

struct SkeletonDeterminationResult {
  bool holds = true;
  std::size_t pairs_checked = 0;
  std::optional<std::pair<Index, Index>> witness;
  std::string detail;
};

// For every pair (u, v): (u, v) in theta iff (0, s_N) in theta, where N is
// the equalizer of u ^ v and u v v and s_N is 0 on N and 1 elsewhere.
// Throws InputError when d is not a valid product decomposition.
SkeletonDeterminationResult skeleton_determination_check(const FactorDecomposition& d,
                                                         const Congruence& theta);

struct PatchFailure {
  Index coordinate = 0;  // K = {coordinate}
  std::vector<Index> a;
  std::vector<Index> b;
  std::vector<Index> patched;
};

struct BooleanProductReport {
  bool holds = false;
  bool is_subalgebra = false;
  bool is_subdirect = false;
  // Vacuous over a finite index set: the topology is discrete, every set clopen.
  bool equalizers_clopen = true;
  bool patchwork = false;
  bool full_product = false;
  std::optional<PatchFailure> patch_failure;
  std::string detail;
};

// elements[e][k] is the factor-local index of element e at coordinate k.
// Over a finite discrete index set the patchwork property for every K
// follows from the singleton patches, which are the ones checked.
BooleanProductReport boolean_product_check(std::span<const std::vector<Index>> elements,
                                           std::span<const DeMorganAlgebra> factors);

// Agreement kernels on {x, f(x)} and {y, f(y)} over algebra_of(X).
// PreconditionError unless x <= y, x != y, x != f(y).
std::pair<Congruence, Congruence> congruence_witnesses_from_violation(const DualSpace& x,
                                                                      Index p, Index q,
                                                                      const Limits& limits = {});
// The same kernels on m itself, through its evaluation maps.
std::pair<Congruence, Congruence> congruence_witnesses_from_violation(const DeMorganAlgebra& m,
                                                                      const NaturalDual& dual,
                                                                      Index p, Index q);

// Isomorphism m -> algebra_of(dual_space(m)). InternalError if none exists.
IsoWitness double_dual_check(const DeMorganAlgebra& m, const Limits& limits = {});

}  // namespace demorgan
