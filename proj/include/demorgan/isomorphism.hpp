#pragma once

#include <optional>
#include <string>
#include <vector>

#include "demorgan/algebra.hpp"
#include "demorgan/dual_space.hpp"

namespace demorgan {

enum class IsoKind { algebra, dual_space };

std::string to_string(IsoKind kind);

struct IsoWitness {
  IsoKind kind = IsoKind::algebra;
  std::vector<Index> mapping;  // source index -> target index
  bool verified = false;
};

inline constexpr std::size_t kIsoSizeLimit = 4096;

// Full table check of a candidate mapping.
bool is_isomorphism(const DeMorganAlgebra& a, const DeMorganAlgebra& b,
                    const std::vector<Index>& mapping);
bool is_isomorphism(const DualSpace& x, const DualSpace& y, const std::vector<Index>& mapping);

// Backtracking search. Algebras: join-irreducibles are matched first, pruned
// by per-element invariants and by the order and negation relations between
// already matched join-irreducibles; the remaining elements follow as joins.
// Dual spaces: points are matched together with their f-images.
// Returned witnesses have been re-verified by is_isomorphism().
std::optional<IsoWitness> find_isomorphism(const DeMorganAlgebra& a, const DeMorganAlgebra& b,
                                           std::size_t max_size = kIsoSizeLimit);
std::optional<IsoWitness> find_isomorphism(const DualSpace& x, const DualSpace& y,
                                           std::size_t max_size = kIsoSizeLimit);

// Isomorphism invariants serialized as bytes. Different keys prove
// non-isomorphism; equal keys prove nothing.
std::string canonical_key(const DeMorganAlgebra& a);
std::string canonical_key(const DualSpace& x);

}  // namespace demorgan
