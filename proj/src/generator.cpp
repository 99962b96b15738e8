#include "demorgan/generator.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "demorgan/duality.hpp"
#include "demorgan/isomorphism.hpp"

namespace demorgan {

namespace {

// Relation of an existing point w to a new point z.
enum class Rel { none, below, above };

// Keeps one representative per isomorphism class, in insertion order.
template <typename T>
class IsoClassSet {
 public:
  bool insert(const T& item) {
    auto& bucket = buckets_[canonical_key(item)];
    for (auto i : bucket) {
      if (find_isomorphism(items_[i], item)) return false;
    }
    bucket.push_back(items_.size());
    items_.push_back(item);
    return true;
  }

  const std::vector<T>& items() const { return items_; }

 private:
  std::map<std::string, std::vector<std::size_t>> buckets_;
  std::vector<T> items_;
};

std::vector<DualSpace> extend_by_orbit(const DualSpace& base, bool pair) {
  const std::size_t k = base.size();
  const std::size_t m = k + (pair ? 2 : 1);
  const Index z = static_cast<Index>(k);
  const Index zf = pair ? z + 1 : z;
  std::vector<Index> f(m);
  for (Index p = 0; p < k; ++p) f[p] = base.f(p);
  f[z] = zf;
  f[zf] = z;

  std::vector<DualSpace> out;
  std::size_t combos = 1;
  for (std::size_t i = 0; i < k; ++i) combos *= 3;
  const int z_relations = pair ? 3 : 1;  // z vs f(z): none, z <= f(z), f(z) <= z
  for (std::size_t code = 0; code < combos; ++code) {
    std::vector<Rel> rel(k);
    std::size_t c = code;
    for (std::size_t i = 0; i < k; ++i, c /= 3) rel[i] = static_cast<Rel>(c % 3);
    for (int zr = 0; zr < z_relations; ++zr) {
      std::vector<std::uint8_t> leq(m * m, 0);
      for (Index p = 0; p < k; ++p) {
        for (Index q = 0; q < k; ++q) leq[p * m + q] = base.leq(p, q) ? 1 : 0;
      }
      for (Index p = 0; p < m; ++p) leq[p * m + p] = 1;
      for (Index w = 0; w < k; ++w) {
        if (rel[w] == Rel::below) leq[w * m + z] = 1;
        if (rel[w] == Rel::above) leq[z * m + w] = 1;
        if (pair) {
          // Order reversal of f fixes the relations of the partner.
          if (rel[f[w]] == Rel::above) leq[w * m + zf] = 1;
          if (rel[f[w]] == Rel::below) leq[zf * m + w] = 1;
        }
      }
      if (zr == 1) leq[z * m + zf] = 1;
      if (zr == 2) leq[zf * m + z] = 1;
      DualSpace x(DualSpace::Unchecked{}, m, std::move(leq), f);
      if (is_valid_dual_space(x)) out.push_back(std::move(x));
    }
  }
  return out;
}

}  // namespace

std::vector<DualSpace> enumerate_dual_spaces(std::size_t max_points, const Limits& limits) {
  if (max_points > limits.max_dual_points) {
    throw SizeLimitError("enumerate_dual_spaces", max_points, limits.max_dual_points);
  }
  std::vector<std::vector<DualSpace>> levels(max_points + 1);
  levels[0].push_back(DualSpace(DualSpace::Unchecked{}, 0, {}, {}));
  std::vector<DualSpace> out;
  for (std::size_t m = 1; m <= max_points; ++m) {
    IsoClassSet<DualSpace> level;
    for (const auto& base : levels[m - 1]) {
      for (auto& x : extend_by_orbit(base, false)) level.insert(x);
    }
    if (m >= 2) {
      for (const auto& base : levels[m - 2]) {
        for (auto& x : extend_by_orbit(base, true)) level.insert(x);
      }
    }
    auto items = level.items();
    std::vector<std::string> keys;
    for (const auto& x : items) keys.push_back(canonical_key(x));
    std::vector<std::size_t> order(items.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    for (auto i : order) levels[m].push_back(items[i]);
    out.insert(out.end(), levels[m].begin(), levels[m].end());
  }
  return out;
}

DualSpace random_dual_space(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("random_dual_space: n must be at least 1");
  constexpr std::size_t kMaxPoints = 24;
  if (n > kMaxPoints) throw SizeLimitError("random_dual_space", n, kMaxPoints);
  std::mt19937_64 rng(seed);
  auto coin = [&rng](double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
  };

  std::vector<Index> points(n);
  std::iota(points.begin(), points.end(), Index{0});
  std::shuffle(points.begin(), points.end(), rng);
  std::vector<Index> f(n);
  for (std::size_t i = 0; i < n;) {
    if (i + 1 < n && coin(0.5)) {
      f[points[i]] = points[i + 1];
      f[points[i + 1]] = points[i];
      i += 2;
    } else {
      f[points[i]] = points[i];
      i += 1;
    }
  }

  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t p = 0; p < n; ++p) leq[p * n + p] = 1;
  std::vector<std::pair<Index, Index>> candidates;
  for (Index p = 0; p < n; ++p) {
    for (Index q = 0; q < n; ++q) {
      if (p != q) candidates.emplace_back(p, q);
    }
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  for (auto [p, q] : candidates) {
    if (leq[p * n + q] || !coin(0.35)) continue;
    auto trial = leq;
    trial[p * n + q] = 1;
    trial[f[q] * n + f[p]] = 1;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!trial[i * n + k]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (trial[k * n + j]) trial[i * n + j] = 1;
        }
      }
    }
    bool antisymmetric = true;
    for (std::size_t i = 0; i < n && antisymmetric; ++i) {
      for (std::size_t j = i + 1; j < n && antisymmetric; ++j) {
        antisymmetric = !(trial[i * n + j] && trial[j * n + i]);
      }
    }
    if (antisymmetric) leq = std::move(trial);
  }
  DualSpace x(DualSpace::Unchecked{}, n, std::move(leq), std::move(f));
  if (!is_valid_dual_space(x)) {
    throw GenerationError("random_dual_space: invalid structure for seed " + std::to_string(seed));
  }
  return x;
}

std::string to_string(CorpusSource source) {
  switch (source) {
    case CorpusSource::named:
      return "named";
    case CorpusSource::enumerated:
      return "enumerated";
    default:
      return "random";
  }
}

std::vector<CorpusEntry> named_algebras(std::size_t max_algebra_size) {
  struct Named {
    std::string name;
    DeMorganAlgebra algebra;
  };
  const std::vector<Named> base = {{"B2", b2()}, {"K3", k3()}, {"M1", m1()}, {"C4", c4()}};
  std::vector<CorpusEntry> out;
  if (max_algebra_size >= 1) {
    out.push_back({"named:one", CorpusSource::named, std::nullopt, trivial(), {}, {}});
  }
  // Products over non-decreasing factor sequences, by number of factors.
  std::vector<std::vector<std::size_t>> current{{}};
  for (std::size_t length = 1; !current.empty(); ++length) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& seq : current) {
      const std::size_t start = seq.empty() ? 0 : seq.back();
      for (std::size_t i = start; i < base.size(); ++i) {
        auto extended = seq;
        extended.push_back(i);
        std::size_t size = 1;
        for (auto j : extended) size *= base[j].algebra.size();
        if (size > max_algebra_size) continue;
        std::vector<DeMorganAlgebra> factors;
        std::string name;
        for (auto j : extended) {
          factors.push_back(base[j].algebra);
          name += (name.empty() ? "" : "x") + base[j].name;
        }
        out.push_back({"named:" + name, CorpusSource::named, std::nullopt,
                       product(factors, max_algebra_size), {}, {}});
        next.push_back(std::move(extended));
      }
    }
    current = std::move(next);
  }
  return out;
}

std::vector<CorpusEntry> corpus(const CorpusSpec& spec) {
  Limits limits;
  limits.max_size = spec.max_algebra_size;
  limits.max_dual_points = std::max(limits.max_dual_points, spec.max_dual_points);

  std::vector<CorpusEntry> candidates;
  if (spec.include_named) candidates = named_algebras(spec.max_algebra_size);

  auto add_dual = [&](const DualSpace& x, CorpusSource source, std::string id,
                      std::optional<std::uint64_t> seed, std::size_t index) {
    try {
      auto algebra = algebra_of(x, limits);
      candidates.push_back({std::move(id), source, x, std::move(algebra), seed, index});
    } catch (const SizeLimitError&) {
      // Above the algebra size cap: not part of this corpus.
    }
  };
  const auto duals = enumerate_dual_spaces(spec.max_dual_points, limits);
  for (std::size_t i = 0; i < duals.size(); ++i) {
    add_dual(duals[i], CorpusSource::enumerated, "enumerated:" + std::to_string(i), std::nullopt, i);
  }
  for (std::size_t i = 0; i < spec.random_count; ++i) {
    const std::uint64_t seed = spec.seed + i;
    const std::size_t points = 1 + static_cast<std::size_t>(seed % std::max<std::size_t>(spec.max_dual_points, 1));
    add_dual(random_dual_space(points, seed), CorpusSource::random,
             "random:" + std::to_string(seed), seed, i);
  }

  IsoClassSet<DeMorganAlgebra> seen;
  std::vector<CorpusEntry> out;
  for (auto& entry : candidates) {
    if (seen.insert(entry.algebra)) out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace demorgan
