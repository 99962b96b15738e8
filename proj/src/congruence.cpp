#include "demorgan/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace demorgan {

Congruence Congruence::from_labels(std::span<const Index> labels) {
  std::vector<Index> ids(labels.size());
  std::vector<std::pair<Index, Index>> first;  // label -> first element
  for (Index x = 0; x < labels.size(); ++x) {
    auto it = std::find_if(first.begin(), first.end(),
                           [&](const auto& p) { return p.first == labels[x]; });
    if (it == first.end()) {
      first.emplace_back(labels[x], x);
      ids[x] = x;
    } else {
      ids[x] = it->second;
    }
  }
  return Congruence(std::move(ids));
}

Congruence Congruence::from_blocks(std::size_t size,
                                   const std::vector<std::vector<Index>>& blocks) {
  constexpr Index kUnset = static_cast<Index>(-1);
  std::vector<Index> labels(size, kUnset);
  for (Index b = 0; b < blocks.size(); ++b) {
    for (auto x : blocks[b]) {
      if (x >= size) throw InputError("block element " + std::to_string(x) + " out of range");
      if (labels[x] != kUnset) {
        throw InputError("element " + std::to_string(x) + " appears in two blocks");
      }
      labels[x] = b;
    }
  }
  for (Index x = 0; x < size; ++x) {
    if (labels[x] == kUnset) {
      throw InputError("element " + std::to_string(x) + " is in no block");
    }
  }
  return from_labels(labels);
}

Congruence Congruence::identity(std::size_t size) {
  std::vector<Index> ids(size);
  std::iota(ids.begin(), ids.end(), Index{0});
  return Congruence(std::move(ids));
}

Congruence Congruence::total(std::size_t size) {
  return Congruence(std::vector<Index>(size, 0));
}

std::size_t Congruence::num_blocks() const {
  std::size_t count = 0;
  for (Index x = 0; x < block_id_.size(); ++x) count += block_id_[x] == x ? 1 : 0;
  return count;
}

std::vector<std::vector<Index>> Congruence::blocks() const {
  std::vector<std::vector<Index>> out;
  std::vector<std::size_t> slot(block_id_.size());
  for (Index x = 0; x < block_id_.size(); ++x) {
    if (block_id_[x] == x) {
      slot[x] = out.size();
      out.push_back({x});
    } else {
      out[slot[block_id_[x]]].push_back(x);
    }
  }
  return out;
}

bool Congruence::is_identity() const {
  for (Index x = 0; x < block_id_.size(); ++x) {
    if (block_id_[x] != x) return false;
  }
  return true;
}

bool Congruence::is_total() const {
  return std::all_of(block_id_.begin(), block_id_.end(), [](Index b) { return b == 0; });
}

bool Congruence::refines(const Congruence& other) const {
  for (Index x = 0; x < block_id_.size(); ++x) {
    if (!other.related(x, block_id_[x])) return false;
  }
  return true;
}

Congruence intersect(const Congruence& a, const Congruence& b) {
  const std::size_t n = a.algebra_size();
  std::vector<Index> labels(n);
  for (Index x = 0; x < n; ++x) {
    labels[x] = static_cast<Index>(a.block_id()[x] * n + b.block_id()[x]);
  }
  return Congruence::from_labels(labels);
}

bool is_compatible(const DeMorganAlgebra& m, const Congruence& theta) {
  const Index n = static_cast<Index>(m.size());
  if (theta.algebra_size() != n) return false;
  // Compatibility with each basic translation of each related pair (x, rep).
  for (Index x = 0; x < n; ++x) {
    const Index r = theta.block_id()[x];
    if (r == x) continue;
    if (!theta.related(m.neg(x), m.neg(r))) return false;
    for (Index z = 0; z < n; ++z) {
      if (!theta.related(m.join(x, z), m.join(r, z))) return false;
      if (!theta.related(m.meet(x, z), m.meet(r, z))) return false;
    }
  }
  return true;
}

CongruenceSet::CongruenceSet(std::vector<Congruence> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool CongruenceSet::contains(const Congruence& c) const { return position(c).has_value(); }

std::optional<std::size_t> CongruenceSet::position(const Congruence& c) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), c);
  if (it == members_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Index{0});
  }

  Index find(Index x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // True when two distinct classes were merged.
  bool unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
    return true;
  }

  std::vector<Index> labels() {
    std::vector<Index> out(parent_.size());
    for (Index x = 0; x < parent_.size(); ++x) out[x] = find(x);
    return out;
  }

 private:
  std::vector<Index> parent_;
};

// Closes the equivalence generated by the seed pairs under the basic
// translations u -> u v z, u -> u ^ z, u -> u'. Only pairs that merged two
// classes are propagated: any other related pair is linked to processed
// pairs through a chain, and translations respect chains.
Congruence close(const DeMorganAlgebra& m, std::span<const std::pair<Index, Index>> seeds) {
  const Index n = static_cast<Index>(m.size());
  UnionFind uf(n);
  std::deque<std::pair<Index, Index>> work;
  auto merge = [&](Index u, Index v) {
    if (uf.unite(u, v)) work.emplace_back(u, v);
  };
  for (auto [u, v] : seeds) {
    if (u >= n || v >= n) throw PreconditionError("congruence generator out of range");
    merge(u, v);
  }
  while (!work.empty()) {
    auto [u, v] = work.front();
    work.pop_front();
    merge(m.neg(u), m.neg(v));
    for (Index z = 0; z < n; ++z) {
      merge(m.join(u, z), m.join(v, z));
      merge(m.meet(u, z), m.meet(v, z));
    }
  }
  return Congruence::from_labels(uf.labels());
}

std::vector<std::pair<Index, Index>> generating_pairs(const Congruence& c) {
  std::vector<std::pair<Index, Index>> out;
  for (Index x = 0; x < c.algebra_size(); ++x) {
    if (c.block_id()[x] != x) out.emplace_back(c.block_id()[x], x);
  }
  return out;
}

}  // namespace

Congruence principal_congruence(const DeMorganAlgebra& m, Index x, Index y) {
  const std::pair<Index, Index> seed{x, y};
  return close(m, std::span(&seed, 1));
}

Congruence generated_congruence(const DeMorganAlgebra& m,
                                std::span<const std::pair<Index, Index>> pairs) {
  return close(m, pairs);
}

Congruence congruence_join(const DeMorganAlgebra& m, const Congruence& a, const Congruence& b) {
  auto pairs = generating_pairs(a);
  auto more = generating_pairs(b);
  pairs.insert(pairs.end(), more.begin(), more.end());
  return close(m, pairs);
}

CongruenceSet all_congruences(const DeMorganAlgebra& m, const Limits& limits) {
  if (m.size() > limits.max_size) {
    throw SizeLimitError("all_congruences", m.size(), limits.max_size);
  }
  const Index n = static_cast<Index>(m.size());
  std::set<Congruence> principals;
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (x != y && m.leq(x, y)) principals.insert(principal_congruence(m, x, y));
    }
  }
  // Every congruence is the join of the principal congruences below it, so
  // joining each known congruence with each principal one reaches them all.
  std::set<Congruence> found(principals.begin(), principals.end());
  found.insert(Congruence::identity(n));
  std::deque<Congruence> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    Congruence c = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& p : principals) {
      if (p.refines(c)) continue;
      auto joined = congruence_join(m, c, p);
      if (found.insert(joined).second) frontier.push_back(std::move(joined));
    }
  }
  return CongruenceSet(std::vector<Congruence>(found.begin(), found.end()));
}

CongruenceSet brute_force_congruences(const DeMorganAlgebra& m, const Limits& limits) {
  const std::size_t n = m.size();
  if (n > limits.bell_cap) throw SizeLimitError("brute_force_congruences", n, limits.bell_cap);
  std::vector<Congruence> out;
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<Index> rgs(n, 0);
  std::vector<Index> prefix_max(n, 0);
  while (true) {
    auto c = Congruence::from_labels(rgs);
    if (is_compatible(m, c)) out.push_back(std::move(c));
    // Advance the rightmost position that can still grow.
    std::size_t i = n;
    bool advanced = false;
    while (i-- > 1) {
      if (rgs[i] <= prefix_max[i - 1]) {
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return CongruenceSet(std::move(out));
}

Congruence restrict(const Congruence& theta, const SubalgebraEmbedding& e) {
  if (theta.algebra_size() != e.parent.size()) {
    throw PreconditionError("congruence is not on the parent algebra of the embedding");
  }
  std::vector<Index> labels(e.inclusion.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = theta.block_id()[e.inclusion[i]];
  return Congruence::from_labels(labels);
}

ExtensionReport extension_report(const DeMorganAlgebra& m, const Limits& limits) {
  auto sk = skeleton(m);
  auto con_m = all_congruences(m, limits);
  auto con_b = all_congruences(sk.induced, limits);
  std::vector<ExtensionFiber> fibers;
  fibers.reserve(con_b.size());
  for (const auto& theta : con_b) fibers.push_back({theta, {}});
  for (const auto& big : con_m) {
    auto pos = con_b.position(restrict(big, sk));
    if (!pos) {
      throw InternalError("restriction of a congruence to the skeleton is not a congruence");
    }
    fibers[*pos].extensions.push_back(big);
  }
  return ExtensionReport{std::move(sk), std::move(con_m), std::move(con_b), std::move(fibers)};
}

PerfectExtensionResult is_perfect_extension(const DeMorganAlgebra& m, const Limits& limits) {
  PerfectExtensionResult result{false, true, extension_report(m, limits), {}};
  for (std::size_t i = 0; i < result.report.fibers.size(); ++i) {
    const auto k = result.report.fibers[i].extensions.size();
    if (k != 1) result.irregular_fibers.push_back(i);
    if (k == 0) result.cep_holds = false;
  }
  result.perfect = result.irregular_fibers.empty();
  return result;
}

}  // namespace demorgan
