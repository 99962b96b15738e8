#include "demorgan/algebra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace demorgan {

DeMorganAlgebra::DeMorganAlgebra(Unchecked, std::size_t size, Index bottom,
                                 Index top, std::vector<Index> join,
                                 std::vector<Index> meet, std::vector<Index> neg,
                                 std::vector<std::string> labels)
    : size_(size),
      bottom_(bottom),
      top_(top),
      join_(std::move(join)),
      meet_(std::move(meet)),
      neg_(std::move(neg)),
      labels_(std::move(labels)) {}

std::string DeMorganAlgebra::label(Index x) const {
  if (x < labels_.size()) return labels_[x];
  return std::to_string(x);
}

std::optional<Index> DeMorganAlgebra::find_label(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Index>(i);
  }
  return std::nullopt;
}

AlgebraTables DeMorganAlgebra::to_tables() const {
  AlgebraTables t;
  t.size = static_cast<std::int64_t>(size_);
  t.bottom = bottom_;
  t.top = top_;
  t.join.assign(size_, std::vector<std::int64_t>(size_));
  t.meet.assign(size_, std::vector<std::int64_t>(size_));
  for (std::size_t x = 0; x < size_; ++x) {
    for (std::size_t y = 0; y < size_; ++y) {
      t.join[x][y] = join_[x * size_ + y];
      t.meet[x][y] = meet_[x * size_ + y];
    }
  }
  t.neg.assign(neg_.begin(), neg_.end());
  t.labels = labels_;
  return t;
}

namespace {

void check_entry(std::int64_t v, std::int64_t n, const std::string& where) {
  if (v < 0 || v >= n) {
    throw InputError("malformed table: " + where + " entry " + std::to_string(v) +
                     " outside 0.." + std::to_string(n - 1));
  }
}

std::vector<Index> flatten_square(const std::vector<std::vector<std::int64_t>>& rows,
                                  std::int64_t n, const std::string& name) {
  if (static_cast<std::int64_t>(rows.size()) != n) {
    throw InputError("malformed table: " + name + " has " + std::to_string(rows.size()) +
                     " rows, expected " + std::to_string(n));
  }
  std::vector<Index> flat;
  flat.reserve(static_cast<std::size_t>(n * n));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<std::int64_t>(rows[r].size()) != n) {
      throw InputError("malformed table: " + name + " row " + std::to_string(r) +
                       " is ragged");
    }
    for (auto v : rows[r]) {
      check_entry(v, n, name);
      flat.push_back(static_cast<Index>(v));
    }
  }
  return flat;
}

// Collects the first witness of each failing axiom.
class AxiomChecker {
 public:
  explicit AxiomChecker(const DeMorganAlgebra& m) : m_(m), n_(static_cast<Index>(m.size())) {}

  void unary(const std::string& name, const std::function<bool(Index)>& holds) {
    for (Index x = 0; x < n_; ++x) {
      if (!holds(x)) {
        violations_.push_back({name, {x}});
        return;
      }
    }
  }

  void binary(const std::string& name, const std::function<bool(Index, Index)>& holds) {
    for (Index x = 0; x < n_; ++x) {
      for (Index y = 0; y < n_; ++y) {
        if (!holds(x, y)) {
          violations_.push_back({name, {x, y}});
          return;
        }
      }
    }
  }

  void ternary(const std::string& name,
               const std::function<bool(Index, Index, Index)>& holds) {
    for (Index x = 0; x < n_; ++x) {
      for (Index y = 0; y < n_; ++y) {
        for (Index z = 0; z < n_; ++z) {
          if (!holds(x, y, z)) {
            violations_.push_back({name, {x, y, z}});
            return;
          }
        }
      }
    }
  }

  void constant(const std::string& name, bool holds, std::vector<Index> witness) {
    if (!holds) violations_.push_back({name, std::move(witness)});
  }

  std::vector<AxiomViolation> take() { return std::move(violations_); }

 private:
  const DeMorganAlgebra& m_;
  Index n_;
  std::vector<AxiomViolation> violations_;
};

}  // namespace

ValidationResult validate_algebra(const AlgebraTables& t) {
  if (t.size < 1) {
    throw InputError("malformed table: size must be at least 1, got " +
                     std::to_string(t.size));
  }
  const std::int64_t n = t.size;
  check_entry(t.bottom, n, "bottom");
  check_entry(t.top, n, "top");
  auto join = flatten_square(t.join, n, "join");
  auto meet = flatten_square(t.meet, n, "meet");
  if (static_cast<std::int64_t>(t.neg.size()) != n) {
    throw InputError("malformed table: neg has length " + std::to_string(t.neg.size()) +
                     ", expected " + std::to_string(n));
  }
  std::vector<Index> neg;
  for (auto v : t.neg) {
    check_entry(v, n, "neg");
    neg.push_back(static_cast<Index>(v));
  }
  if (!t.labels.empty() && static_cast<std::int64_t>(t.labels.size()) != n) {
    throw InputError("malformed table: labels has length " +
                     std::to_string(t.labels.size()) + ", expected " + std::to_string(n));
  }

  DeMorganAlgebra m(DeMorganAlgebra::Unchecked{}, static_cast<std::size_t>(n),
                    static_cast<Index>(t.bottom), static_cast<Index>(t.top),
                    std::move(join), std::move(meet), std::move(neg), t.labels);

  const Index bot = m.bottom();
  const Index top = m.top();
  auto J = [&m](Index x, Index y) { return m.join(x, y); };
  auto M = [&m](Index x, Index y) { return m.meet(x, y); };
  auto N = [&m](Index x) { return m.neg(x); };

  AxiomChecker c(m);
  // Bounded distributive lattice.
  c.binary("join commutative", [&](Index x, Index y) { return J(x, y) == J(y, x); });
  c.binary("meet commutative", [&](Index x, Index y) { return M(x, y) == M(y, x); });
  c.ternary("join associative",
            [&](Index x, Index y, Index z) { return J(J(x, y), z) == J(x, J(y, z)); });
  c.ternary("meet associative",
            [&](Index x, Index y, Index z) { return M(M(x, y), z) == M(x, M(y, z)); });
  c.binary("absorption x v (x ^ y) = x", [&](Index x, Index y) { return J(x, M(x, y)) == x; });
  c.binary("absorption x ^ (x v y) = x", [&](Index x, Index y) { return M(x, J(x, y)) == x; });
  c.ternary("distributive x ^ (y v z) = (x ^ y) v (x ^ z)", [&](Index x, Index y, Index z) {
    return M(x, J(y, z)) == J(M(x, y), M(x, z));
  });
  c.unary("bottom x v 0 = x", [&](Index x) { return J(x, bot) == x; });
  c.unary("top x ^ 1 = x", [&](Index x) { return M(x, top) == x; });
  // De Morgan negation.
  c.unary("involution x'' = x", [&](Index x) { return N(N(x)) == x; });
  c.binary("de Morgan (x ^ y)' = x' v y'",
           [&](Index x, Index y) { return N(M(x, y)) == J(N(x), N(y)); });
  c.constant("1' = 0", N(top) == bot, {top});
  c.binary("de Morgan (x v y)' = x' ^ y'",
           [&](Index x, Index y) { return N(J(x, y)) == M(N(x), N(y)); });
  c.constant("0' = 1", N(bot) == top, {bot});
  c.binary("negation order-reversing",
           [&](Index x, Index y) { return !m.leq(x, y) || m.leq(N(y), N(x)); });

  ValidationResult result;
  result.violations = c.take();
  if (result.violations.empty()) result.algebra = std::move(m);
  return result;
}

DeMorganAlgebra make_algebra(const AlgebraTables& tables) {
  auto result = validate_algebra(tables);
  if (result.ok()) return std::move(*result.algebra);
  std::ostringstream os;
  os << "not a de Morgan algebra:";
  for (const auto& v : result.violations) {
    os << " [" << v.axiom << " at";
    for (auto w : v.witness) os << ' ' << w;
    os << ']';
  }
  throw InputError(os.str());
}

bool SubalgebraEmbedding::contains(Index parent_element) const {
  return std::binary_search(subset.begin(), subset.end(), parent_element);
}

Index SubalgebraEmbedding::induced_index(Index parent_element) const {
  auto it = std::lower_bound(subset.begin(), subset.end(), parent_element);
  if (it == subset.end() || *it != parent_element) {
    throw PreconditionError("element " + std::to_string(parent_element) +
                            " is not in the subalgebra");
  }
  return static_cast<Index>(it - subset.begin());
}

SubalgebraEmbedding embed_closed_subset(const DeMorganAlgebra& m, std::vector<Index> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  const std::size_t n = m.size();
  std::vector<std::int64_t> position(n, -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= n) throw InputError("subset element out of range");
    position[subset[i]] = static_cast<std::int64_t>(i);
  }
  auto pos = [&](Index parent) -> Index {
    if (position[parent] < 0) {
      throw InputError("subset is not closed under the operations at element " +
                       std::to_string(parent));
    }
    return static_cast<Index>(position[parent]);
  };
  const std::size_t k = subset.size();
  std::vector<Index> join(k * k), meet(k * k), neg(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      join[i * k + j] = pos(m.join(subset[i], subset[j]));
      meet[i * k + j] = pos(m.meet(subset[i], subset[j]));
    }
    neg[i] = pos(m.neg(subset[i]));
  }
  std::vector<std::string> labels;
  if (!m.labels().empty()) {
    for (auto x : subset) labels.push_back(m.labels()[x]);
  }
  DeMorganAlgebra induced(DeMorganAlgebra::Unchecked{}, k, pos(m.bottom()), pos(m.top()),
                          std::move(join), std::move(meet), std::move(neg),
                          std::move(labels));
  auto inclusion = subset;
  return SubalgebraEmbedding{m, std::move(subset), std::move(induced), std::move(inclusion)};
}

bool in_skeleton(const DeMorganAlgebra& m, Index x) {
  return m.join(x, m.neg(x)) == m.top();
}

SubalgebraEmbedding skeleton(const DeMorganAlgebra& m) {
  std::vector<Index> subset;
  for (Index x = 0; x < m.size(); ++x) {
    if (in_skeleton(m, x)) subset.push_back(x);
  }
  return embed_closed_subset(m, std::move(subset));
}

SubalgebraEmbedding subalgebra_generated(const DeMorganAlgebra& m,
                                         std::span<const Index> generators) {
  const std::size_t n = m.size();
  std::vector<bool> in(n, false);
  std::vector<Index> members;
  auto add = [&](Index x) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
    }
  };
  add(m.bottom());
  add(m.top());
  for (auto g : generators) {
    if (g >= n) throw PreconditionError("generator " + std::to_string(g) + " out of range");
    add(g);
  }
  // Every new element is combined with everything present before it.
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Index x = members[i];
    add(m.neg(x));
    for (std::size_t j = 0; j <= i; ++j) {
      add(m.join(x, members[j]));
      add(m.meet(x, members[j]));
    }
  }
  return embed_closed_subset(m, std::move(members));
}

std::vector<std::string> Classification::tags() const {
  std::vector<std::string> out;
  if (boolean) out.emplace_back("boolean");
  if (kleene) out.emplace_back("kleene");
  if (de_morgan) out.emplace_back("de_morgan");
  return out;
}

Classification classify(const DeMorganAlgebra& m) {
  Classification c;
  const Index n = static_cast<Index>(m.size());
  c.boolean = true;
  for (Index x = 0; x < n; ++x) c.boolean = c.boolean && in_skeleton(m, x);
  c.kleene = true;
  for (Index x = 0; x < n && c.kleene; ++x) {
    const Index lhs_x = m.meet(x, m.neg(x));
    for (Index y = 0; y < n; ++y) {
      const Index yy = m.join(y, m.neg(y));
      if (m.join(lhs_x, yy) != yy) {
        c.kleene = false;
        break;
      }
    }
  }
  return c;
}

DeMorganAlgebra product(const DeMorganAlgebra& a, const DeMorganAlgebra& b,
                        std::size_t max_size) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  if (na > max_size || nb > max_size || na * nb > max_size) {
    throw SizeLimitError("product", na * nb, max_size);
  }
  const std::size_t n = na * nb;
  auto enc = [nb](Index i, Index j) { return static_cast<Index>(i * nb + j); };
  std::vector<Index> join(n * n), meet(n * n), neg(n);
  for (Index x = 0; x < n; ++x) {
    const Index xi = static_cast<Index>(x / nb), xj = static_cast<Index>(x % nb);
    neg[x] = enc(a.neg(xi), b.neg(xj));
    for (Index y = 0; y < n; ++y) {
      const Index yi = static_cast<Index>(y / nb), yj = static_cast<Index>(y % nb);
      join[x * n + y] = enc(a.join(xi, yi), b.join(xj, yj));
      meet[x * n + y] = enc(a.meet(xi, yi), b.meet(xj, yj));
    }
  }
  std::vector<std::string> labels;
  if (!a.labels().empty() && !b.labels().empty()) {
    for (Index x = 0; x < n; ++x) {
      labels.push_back("(" + a.labels()[x / nb] + "," + b.labels()[x % nb] + ")");
    }
  }
  return DeMorganAlgebra(DeMorganAlgebra::Unchecked{}, n, enc(a.bottom(), b.bottom()),
                         enc(a.top(), b.top()), std::move(join), std::move(meet),
                         std::move(neg), std::move(labels));
}

DeMorganAlgebra product(std::span<const DeMorganAlgebra> factors, std::size_t max_size) {
  if (factors.empty()) return trivial();
  DeMorganAlgebra acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = product(acc, factors[i], max_size);
  if (acc.size() > max_size) throw SizeLimitError("product", acc.size(), max_size);
  return acc;
}

namespace {

// Algebra on a chain 0 < 1 < ... < n-1 with the given negation.
DeMorganAlgebra chain(std::vector<Index> neg, std::vector<std::string> labels) {
  const std::size_t n = neg.size();
  std::vector<Index> join(n * n), meet(n * n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      join[x * n + y] = std::max(x, y);
      meet[x * n + y] = std::min(x, y);
    }
  }
  return DeMorganAlgebra(DeMorganAlgebra::Unchecked{}, n, 0, static_cast<Index>(n - 1),
                         std::move(join), std::move(meet), std::move(neg),
                         std::move(labels));
}

}  // namespace

DeMorganAlgebra trivial() { return chain({0}, {"0"}); }
DeMorganAlgebra b2() { return chain({1, 0}, {"0", "1"}); }
DeMorganAlgebra k3() { return chain({2, 1, 0}, {"0", "a", "1"}); }
DeMorganAlgebra c4() { return chain({3, 2, 1, 0}, {"0", "p", "q", "1"}); }

DeMorganAlgebra m1() {
  // Elements 0, a, b, 1 are the bit pairs 00, 01, 10, 11: join is bitwise or,
  // meet is bitwise and.
  std::vector<Index> join(16), meet(16);
  for (Index x = 0; x < 4; ++x) {
    for (Index y = 0; y < 4; ++y) {
      join[x * 4 + y] = x | y;
      meet[x * 4 + y] = x & y;
    }
  }
  return DeMorganAlgebra(DeMorganAlgebra::Unchecked{}, 4, 0, 3, std::move(join),
                         std::move(meet), {3, 1, 2, 0}, {"0", "a", "b", "1"});
}

std::vector<Index> lower_covers(const DeMorganAlgebra& m, Index x) {
  std::vector<Index> out;
  const Index n = static_cast<Index>(m.size());
  for (Index y = 0; y < n; ++y) {
    if (y == x || !m.leq(y, x)) continue;
    bool cover = true;
    for (Index z = 0; z < n && cover; ++z) {
      if (z != x && z != y && m.leq(y, z) && m.leq(z, x)) cover = false;
    }
    if (cover) out.push_back(y);
  }
  return out;
}

std::vector<Index> upper_covers(const DeMorganAlgebra& m, Index x) {
  std::vector<Index> out;
  const Index n = static_cast<Index>(m.size());
  for (Index y = 0; y < n; ++y) {
    if (y == x || !m.leq(x, y)) continue;
    bool cover = true;
    for (Index z = 0; z < n && cover; ++z) {
      if (z != x && z != y && m.leq(x, z) && m.leq(z, y)) cover = false;
    }
    if (cover) out.push_back(y);
  }
  return out;
}

std::vector<std::size_t> heights(const DeMorganAlgebra& m) {
  const std::size_t n = m.size();
  // Process elements by down-set size, which is a linear extension.
  std::vector<std::size_t> down(n, 0);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) down[x] += m.leq(y, x) ? 1 : 0;
  }
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return down[a] < down[b]; });
  std::vector<std::size_t> h(n, 0);
  for (auto x : order) {
    for (auto y : lower_covers(m, x)) h[x] = std::max(h[x], h[y] + 1);
  }
  return h;
}

}  // namespace demorgan
