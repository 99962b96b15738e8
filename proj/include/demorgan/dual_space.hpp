#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "demorgan/algebra.hpp"

namespace demorgan {

// Values of the alter ego, shared with the carrier of M1. A value is the bit
// pair (bit0, bit1); as an element of M1, join and meet are bitwise.
// In the alter-ego order b is the bottom, a the top, and 0, 1 the atoms.
namespace alter_ego {

using Value = std::uint8_t;

inline constexpr Value kZero = 0;
inline constexpr Value kA = 1;
inline constexpr Value kB = 2;
inline constexpr Value kOne = 3;

constexpr Value f(Value v) noexcept { return static_cast<Value>(((v & 1) << 1) | (v >> 1)); }
constexpr bool leq(Value v, Value w) noexcept {
  return (v & 1) <= (w & 1) && (v >> 1) >= (w >> 1);
}
constexpr Value join(Value v, Value w) noexcept { return v | w; }
constexpr Value meet(Value v, Value w) noexcept { return v & w; }
constexpr Value neg(Value v) noexcept { return static_cast<Value>(3 ^ f(v)); }

char symbol(Value v) noexcept;

}  // namespace alter_ego

struct DualSpaceTables {
  std::int64_t size = 0;
  std::vector<std::vector<std::int64_t>> leq;
  std::vector<std::int64_t> f;
  std::vector<std::string> labels;
};

/// A finite poset (X; <=) with an order-reversing involution f. The topology
/// of a finite dual space is discrete and is not represented.
class DualSpace {
 public:
  struct Unchecked {};

  DualSpace() = default;
  DualSpace(Unchecked, std::size_t size, std::vector<std::uint8_t> leq, std::vector<Index> f,
            std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return size_; }
  bool leq(Index x, Index y) const noexcept { return leq_[x * size_ + y] != 0; }
  Index f(Index x) const noexcept { return f_[x]; }
  const std::vector<Index>& involution() const noexcept { return f_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Index x) const;

  DualSpaceTables to_tables() const;

  friend bool operator==(const DualSpace&, const DualSpace&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<Index> f_;
  std::vector<std::string> labels_;
};

// Empty when x is a valid dual space; otherwise one message per failed
// axiom with its first witness.
std::vector<std::string> dual_space_violations(const DualSpace& x);
bool is_valid_dual_space(const DualSpace& x);

// Throws InputError when malformed or when any axiom fails.
DualSpace make_dual_space(const DualSpaceTables& tables);

}  // namespace demorgan
