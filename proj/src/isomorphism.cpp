#include "demorgan/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace demorgan {

std::string to_string(IsoKind kind) {
  return kind == IsoKind::algebra ? "algebra" : "dual_space";
}

bool is_isomorphism(const DeMorganAlgebra& a, const DeMorganAlgebra& b,
                    const std::vector<Index>& mapping) {
  const std::size_t n = a.size();
  if (b.size() != n || mapping.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto y : mapping) {
    if (y >= n || hit[y]) return false;
    hit[y] = true;
  }
  if (mapping[a.bottom()] != b.bottom() || mapping[a.top()] != b.top()) return false;
  for (Index x = 0; x < n; ++x) {
    if (mapping[a.neg(x)] != b.neg(mapping[x])) return false;
    for (Index y = 0; y < n; ++y) {
      if (mapping[a.join(x, y)] != b.join(mapping[x], mapping[y])) return false;
      if (mapping[a.meet(x, y)] != b.meet(mapping[x], mapping[y])) return false;
    }
  }
  return true;
}

bool is_isomorphism(const DualSpace& x, const DualSpace& y, const std::vector<Index>& mapping) {
  const std::size_t m = x.size();
  if (y.size() != m || mapping.size() != m) return false;
  std::vector<bool> hit(m, false);
  for (auto p : mapping) {
    if (p >= m || hit[p]) return false;
    hit[p] = true;
  }
  for (Index p = 0; p < m; ++p) {
    if (mapping[x.f(p)] != y.f(mapping[p])) return false;
    for (Index q = 0; q < m; ++q) {
      if (x.leq(p, q) != y.leq(mapping[p], mapping[q])) return false;
    }
  }
  return true;
}

namespace {

using Invariant = std::array<std::size_t, 9>;

struct AlgebraProfile {
  std::vector<Invariant> invariants;
  std::vector<Index> join_irreducibles;  // sorted by height, then index
  std::size_t skeleton_size = 0;
};

AlgebraProfile profile(const DeMorganAlgebra& a) {
  const std::size_t n = a.size();
  const auto h = heights(a);
  AlgebraProfile p;
  p.invariants.resize(n);
  for (Index x = 0; x < n; ++x) {
    std::size_t down = 0, up = 0;
    for (Index y = 0; y < n; ++y) {
      down += a.leq(y, x) ? 1 : 0;
      up += a.leq(x, y) ? 1 : 0;
    }
    const auto lower = lower_covers(a, x).size();
    const bool sk = in_skeleton(a, x);
    p.skeleton_size += sk ? 1 : 0;
    p.invariants[x] = {h[x],  lower, upper_covers(a, x).size(), down, up,
                       a.neg(x) == x ? 1u : 0u, sk ? 1u : 0u, h[a.neg(x)],
                       a.leq(x, a.neg(x)) ? 1u : 0u};
    if (x != a.bottom() && lower == 1) p.join_irreducibles.push_back(x);
  }
  std::stable_sort(p.join_irreducibles.begin(), p.join_irreducibles.end(),
                   [&](Index u, Index v) { return h[u] < h[v]; });
  return p;
}

using DualInvariant = std::array<std::size_t, 4>;

std::vector<DualInvariant> dual_profile(const DualSpace& x) {
  const std::size_t m = x.size();
  std::vector<DualInvariant> out(m);
  for (Index p = 0; p < m; ++p) {
    std::size_t down = 0, up = 0;
    for (Index q = 0; q < m; ++q) {
      down += x.leq(q, p) ? 1 : 0;
      up += x.leq(p, q) ? 1 : 0;
    }
    const Index fp = x.f(p);
    out[p] = {down, up, fp == p ? 1u : 0u,
              x.leq(p, fp) ? 1u : (x.leq(fp, p) ? 2u : 0u)};
  }
  return out;
}

template <typename T>
std::string serialize(std::initializer_list<std::size_t> head, std::vector<T> rows) {
  std::sort(rows.begin(), rows.end());
  std::string key;
  auto put = [&key](std::size_t v) {
    for (int i = 0; i < 4; ++i) key.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  };
  for (auto h : head) put(h);
  for (const auto& row : rows) {
    for (auto v : row) put(v);
  }
  return key;
}

class AlgebraSearch {
 public:
  AlgebraSearch(const DeMorganAlgebra& a, const DeMorganAlgebra& b, AlgebraProfile pa,
                AlgebraProfile pb)
      : a_(a), b_(b), pa_(std::move(pa)), pb_(std::move(pb)), image_(pa_.join_irreducibles.size()),
        used_(b.size(), false) {}

  std::optional<std::vector<Index>> run() { return extend(0); }

 private:
  bool consistent(std::size_t k, Index candidate) const {
    const Index u = pa_.join_irreducibles[k];
    for (std::size_t i = 0; i < k; ++i) {
      const Index w = pa_.join_irreducibles[i];
      const Index w2 = image_[i];
      if (a_.leq(w, u) != b_.leq(w2, candidate)) return false;
      if (a_.leq(u, w) != b_.leq(candidate, w2)) return false;
      if (a_.leq(w, a_.neg(u)) != b_.leq(w2, b_.neg(candidate))) return false;
      if (a_.leq(u, a_.neg(w)) != b_.leq(candidate, b_.neg(w2))) return false;
    }
    return a_.leq(u, a_.neg(u)) == b_.leq(candidate, b_.neg(candidate));
  }

  std::optional<std::vector<Index>> complete() const {
    const std::size_t n = a_.size();
    std::vector<Index> mapping(n, b_.bottom());
    for (Index x = 0; x < n; ++x) {
      for (std::size_t k = 0; k < image_.size(); ++k) {
        if (a_.leq(pa_.join_irreducibles[k], x)) mapping[x] = b_.join(mapping[x], image_[k]);
      }
    }
    if (is_isomorphism(a_, b_, mapping)) return mapping;
    return std::nullopt;
  }

  std::optional<std::vector<Index>> extend(std::size_t k) {
    if (k == image_.size()) return complete();
    const Index u = pa_.join_irreducibles[k];
    for (Index candidate : pb_.join_irreducibles) {
      if (used_[candidate] || pa_.invariants[u] != pb_.invariants[candidate]) continue;
      if (!consistent(k, candidate)) continue;
      used_[candidate] = true;
      image_[k] = candidate;
      if (auto found = extend(k + 1)) return found;
      used_[candidate] = false;
    }
    return std::nullopt;
  }

  const DeMorganAlgebra& a_;
  const DeMorganAlgebra& b_;
  AlgebraProfile pa_;
  AlgebraProfile pb_;
  std::vector<Index> image_;
  std::vector<bool> used_;
};

class DualSearch {
 public:
  DualSearch(const DualSpace& x, const DualSpace& y)
      : x_(x), y_(y), px_(dual_profile(x)), py_(dual_profile(y)),
        mapping_(x.size(), kUnset), used_(y.size(), false) {}

  std::optional<std::vector<Index>> run() {
    if (extend(0)) return mapping_;
    return std::nullopt;
  }

 private:
  static constexpr Index kUnset = static_cast<Index>(-1);

  bool fits(Index p, Index q) const {
    if (used_[q] || px_[p] != py_[q]) return false;
    for (Index r = 0; r < x_.size(); ++r) {
      const Index s = mapping_[r];
      if (s == kUnset) continue;
      if (x_.leq(p, r) != y_.leq(q, s) || x_.leq(r, p) != y_.leq(s, q)) return false;
    }
    return true;
  }

  bool extend(Index p) {
    while (p < x_.size() && mapping_[p] != kUnset) ++p;
    if (p == x_.size()) return is_isomorphism(x_, y_, mapping_);
    const Index fp = x_.f(p);
    for (Index q = 0; q < y_.size(); ++q) {
      if (!fits(p, q)) continue;
      mapping_[p] = q;
      used_[q] = true;
      const Index fq = y_.f(q);
      bool paired = false;
      if (fp != p) {
        if (fits(fp, fq)) {
          mapping_[fp] = fq;
          used_[fq] = true;
          paired = true;
        } else {
          mapping_[p] = kUnset;
          used_[q] = false;
          continue;
        }
      }
      if (extend(p + 1)) return true;
      if (paired) {
        mapping_[fp] = kUnset;
        used_[fq] = false;
      }
      mapping_[p] = kUnset;
      used_[q] = false;
    }
    return false;
  }

  const DualSpace& x_;
  const DualSpace& y_;
  std::vector<DualInvariant> px_;
  std::vector<DualInvariant> py_;
  std::vector<Index> mapping_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<IsoWitness> find_isomorphism(const DeMorganAlgebra& a, const DeMorganAlgebra& b,
                                           std::size_t max_size) {
  if (a.size() > max_size) throw SizeLimitError("find_isomorphism", a.size(), max_size);
  if (b.size() > max_size) throw SizeLimitError("find_isomorphism", b.size(), max_size);
  if (a.size() != b.size()) return std::nullopt;
  auto pa = profile(a);
  auto pb = profile(b);
  if (pa.join_irreducibles.size() != pb.join_irreducibles.size() ||
      pa.skeleton_size != pb.skeleton_size) {
    return std::nullopt;
  }
  auto sa = pa.invariants, sb = pb.invariants;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  auto mapping = AlgebraSearch(a, b, std::move(pa), std::move(pb)).run();
  if (!mapping) return std::nullopt;
  return IsoWitness{IsoKind::algebra, std::move(*mapping), true};
}

std::optional<IsoWitness> find_isomorphism(const DualSpace& x, const DualSpace& y,
                                           std::size_t max_size) {
  if (x.size() > max_size) throw SizeLimitError("find_isomorphism", x.size(), max_size);
  if (y.size() > max_size) throw SizeLimitError("find_isomorphism", y.size(), max_size);
  if (x.size() != y.size()) return std::nullopt;
  auto sx = dual_profile(x), sy = dual_profile(y);
  std::sort(sx.begin(), sx.end());
  std::sort(sy.begin(), sy.end());
  if (sx != sy) return std::nullopt;
  auto mapping = DualSearch(x, y).run();
  if (!mapping) return std::nullopt;
  return IsoWitness{IsoKind::dual_space, std::move(*mapping), true};
}

std::string canonical_key(const DeMorganAlgebra& a) {
  auto p = profile(a);
  return serialize({0xA1, a.size(), p.skeleton_size, p.join_irreducibles.size()},
                   std::move(p.invariants));
}

std::string canonical_key(const DualSpace& x) {
  std::size_t fixed = 0;
  for (Index p = 0; p < x.size(); ++p) fixed += x.f(p) == p ? 1 : 0;
  return serialize({0xD1, x.size(), fixed}, dual_profile(x));
}

}  // namespace demorgan
