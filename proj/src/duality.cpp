#include "demorgan/duality.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace demorgan {

namespace ae = alter_ego;

std::vector<Index> join_irreducibles(const DeMorganAlgebra& m) {
  std::vector<Index> out;
  for (Index x = 0; x < m.size(); ++x) {
    if (x != m.bottom() && lower_covers(m, x).size() == 1) out.push_back(x);
  }
  return out;
}

NaturalDual dual_space(const DeMorganAlgebra& m) {
  const std::size_t n = m.size();
  auto gens = join_irreducibles(m);
  auto filter_size = [&](Index j) {
    std::size_t s = 0;
    for (Index x = 0; x < n; ++x) s += m.leq(j, x) ? 1 : 0;
    return s;
  };
  std::stable_sort(gens.begin(), gens.end(),
                   [&](Index u, Index v) { return filter_size(u) < filter_size(v); });
  const std::size_t k = gens.size();

  // f(F) = {x | x' not in F} must again be a principal filter up(j).
  std::vector<Index> f(k);
  for (Index p = 0; p < k; ++p) {
    std::vector<bool> image(n);
    for (Index x = 0; x < n; ++x) image[x] = !m.leq(gens[p], m.neg(x));
    bool matched = false;
    for (Index q = 0; q < k && !matched; ++q) {
      bool same = true;
      for (Index x = 0; x < n && same; ++x) same = image[x] == m.leq(gens[q], x);
      if (same) {
        f[p] = q;
        matched = true;
      }
    }
    if (!matched) {
      throw InternalError("dual_space: image of the prime filter of " + m.label(gens[p]) +
                          " is not a prime filter");
    }
  }
  // up(u) is contained in up(v) iff v <= u.
  std::vector<std::uint8_t> leq(k * k);
  for (Index p = 0; p < k; ++p) {
    for (Index q = 0; q < k; ++q) leq[p * k + q] = m.leq(gens[q], gens[p]) ? 1 : 0;
  }
  std::vector<std::string> labels;
  for (auto g : gens) labels.push_back("F(" + m.label(g) + ")");
  DualSpace space(DualSpace::Unchecked{}, k, std::move(leq), std::move(f), std::move(labels));
  auto violations = dual_space_violations(space);
  if (!violations.empty()) {
    throw InternalError("dual_space: prime filter space is not a dual space: " + violations[0]);
  }
  return NaturalDual{std::move(space), std::move(gens)};
}

AlterEgoMap evaluation_map(const DeMorganAlgebra& m, const NaturalDual& dual, Index x) {
  const std::size_t k = dual.generators.size();
  AlterEgoMap out(k);
  for (Index p = 0; p < k; ++p) {
    const bool in_f = dual.in_filter(m, p, x);
    const bool in_gf = !dual.in_filter(m, p, m.neg(x));
    out[p] = static_cast<ae::Value>((in_f ? 1 : 0) | (in_gf ? 2 : 0));
  }
  return out;
}

namespace {

class MorphismEnumerator {
 public:
  MorphismEnumerator(const DualSpace& x, std::size_t cap)
      : x_(x), cap_(cap), current_(x.size()), assigned_(x.size(), false) {}

  std::vector<AlterEgoMap> run() {
    extend(0);
    return std::move(out_);
  }

 private:
  bool fits(Index p, ae::Value v) const {
    for (Index q = 0; q < x_.size(); ++q) {
      if (!assigned_[q]) continue;
      if (x_.leq(q, p) && !ae::leq(current_[q], v)) return false;
      if (x_.leq(p, q) && !ae::leq(v, current_[q])) return false;
    }
    return true;
  }

  void extend(Index p) {
    if (p == x_.size()) {
      if (out_.size() == cap_) throw SizeLimitError("algebra_of", cap_ + 1, cap_);
      out_.push_back(current_);
      return;
    }
    const Index fp = x_.f(p);
    if (assigned_[p]) {
      // Fixed by an earlier f-partner.
      extend(p + 1);
      return;
    }
    for (ae::Value v = 0; v < 4; ++v) {
      if (fp == p && ae::f(v) != v) continue;
      if (!fits(p, v)) continue;
      current_[p] = v;
      assigned_[p] = true;
      bool partner_ok = true;
      if (fp != p) {
        const ae::Value fv = ae::f(v);
        partner_ok = fits(fp, fv);
        if (partner_ok) {
          current_[fp] = fv;
          assigned_[fp] = true;
        }
      }
      if (partner_ok) {
        extend(p + 1);
        if (fp != p) assigned_[fp] = false;
      }
      assigned_[p] = false;
    }
  }

  const DualSpace& x_;
  std::size_t cap_;
  AlterEgoMap current_;
  std::vector<bool> assigned_;
  std::vector<AlterEgoMap> out_;
};

}  // namespace

std::vector<AlterEgoMap> morphisms(const DualSpace& x, std::size_t max_size) {
  auto maps = MorphismEnumerator(x, max_size).run();
  // A partner assigned before its own turn makes the recursion order differ
  // from the lexicographic order of the value vectors.
  std::sort(maps.begin(), maps.end());
  return maps;
}

DeMorganAlgebra algebra_of(const DualSpace& x, const Limits& limits) {
  auto maps = morphisms(x, limits.max_size);
  const std::size_t n = maps.size();
  auto index_of = [&maps](const AlterEgoMap& phi) {
    auto it = std::lower_bound(maps.begin(), maps.end(), phi);
    if (it == maps.end() || *it != phi) {
      throw InternalError("algebra_of: morphisms are not closed under the pointwise operations");
    }
    return static_cast<Index>(it - maps.begin());
  };
  const std::size_t m = x.size();
  std::vector<Index> join(n * n), meet(n * n), neg(n);
  AlterEgoMap scratch(m);
  for (Index i = 0; i < n; ++i) {
    for (Index p = 0; p < m; ++p) scratch[p] = ae::neg(maps[i][p]);
    neg[i] = index_of(scratch);
    for (Index j = 0; j < n; ++j) {
      for (Index p = 0; p < m; ++p) scratch[p] = ae::join(maps[i][p], maps[j][p]);
      join[i * n + j] = index_of(scratch);
      for (Index p = 0; p < m; ++p) scratch[p] = ae::meet(maps[i][p], maps[j][p]);
      meet[i * n + j] = index_of(scratch);
    }
  }
  std::vector<std::string> labels;
  for (const auto& phi : maps) {
    std::string s;
    for (auto v : phi) s.push_back(ae::symbol(v));
    labels.push_back(s.empty() ? "()" : s);
  }
  const AlterEgoMap zero(m, ae::kZero), one(m, ae::kOne);
  const Index bottom = index_of(zero);
  const Index top = index_of(one);
  return DeMorganAlgebra(DeMorganAlgebra::Unchecked{}, n, bottom, top, std::move(join),
                         std::move(meet), std::move(neg), std::move(labels));
}

Condition3Result condition3_holds(const DualSpace& x) {
  for (Index p = 0; p < x.size(); ++p) {
    for (Index q = 0; q < x.size(); ++q) {
      if (x.leq(p, q) && p != q && p != x.f(q)) return {false, std::pair{p, q}};
    }
  }
  return {};
}

std::vector<Index> select_y(const DualSpace& x) {
  // Fixed points satisfy the first selection rule, orbit minima the second.
  // For finite X the system {Z | Z u f(Z) open} is every subset of Y.
  std::vector<Index> y;
  for (Index p = 0; p < x.size(); ++p) {
    if (p <= x.f(p)) y.push_back(p);
  }
  return y;
}

std::string to_string(FactorTag tag) {
  switch (tag) {
    case FactorTag::B2:
      return "B2";
    case FactorTag::K3:
      return "K3";
    default:
      return "M1";
  }
}

DeMorganAlgebra factor_algebra(FactorTag tag) {
  switch (tag) {
    case FactorTag::B2:
      return b2();
    case FactorTag::K3:
      return k3();
    default:
      return m1();
  }
}

namespace {

std::size_t factor_size(FactorTag tag) {
  switch (tag) {
    case FactorTag::B2:
      return 2;
    case FactorTag::K3:
      return 3;
    default:
      return 4;
  }
}

// Local index in b2(), k3() or m1() of an M1 value; -1 if outside the factor.
int local_index(FactorTag tag, ae::Value v) {
  switch (tag) {
    case FactorTag::B2:
      return v == ae::kZero ? 0 : (v == ae::kOne ? 1 : -1);
    case FactorTag::K3:
      return v == ae::kZero ? 0 : (v == ae::kA ? 1 : (v == ae::kOne ? 2 : -1));
    default:
      return v;
  }
}

ae::Value swap_ab(ae::Value v) { return (v == ae::kA || v == ae::kB) ? ae::f(v) : v; }

std::size_t product_position(const FactorDecomposition& d, const AlterEgoMap& coords) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const int local = local_index(d.tags[k], coords[k]);
    if (local < 0) return static_cast<std::size_t>(-1);
    index = index * factor_size(d.tags[k]) + static_cast<std::size_t>(local);
  }
  return index;
}

}  // namespace

std::vector<DeMorganAlgebra> FactorDecomposition::factors() const {
  std::vector<DeMorganAlgebra> out;
  for (auto t : tags) out.push_back(factor_algebra(t));
  return out;
}

std::vector<Index> FactorDecomposition::local_tuple(Index x) const {
  std::vector<Index> out;
  for (std::size_t k = 0; k < tags.size(); ++k) {
    out.push_back(static_cast<Index>(local_index(tags[k], coordinates[x][k])));
  }
  return out;
}

std::optional<std::string> decomposition_defect(const FactorDecomposition& d) {
  const auto& m = d.algebra;
  const std::size_t n = m.size();
  const std::size_t k = d.tags.size();
  if (d.y.size() != k || d.renamed.size() != k) return "Y, tags and renaming differ in length";
  if (d.coordinates.size() != n || d.product_index.size() != n) {
    return "coordinate table does not cover the algebra";
  }
  std::array<std::size_t, 3> counts{};
  std::size_t expected = 1;
  for (auto t : d.tags) {
    ++counts[static_cast<std::size_t>(t)];
    expected *= factor_size(t);
  }
  if (counts != d.counts) return "factor counts do not match the tags";
  if (expected != n) {
    return "algebra has " + std::to_string(n) + " elements but the product has " +
           std::to_string(expected);
  }
  std::vector<bool> hit(n, false);
  for (Index x = 0; x < n; ++x) {
    if (d.coordinates[x].size() != k) return "coordinate tuple of wrong length";
    const auto pos = product_position(d, d.coordinates[x]);
    if (pos >= n) return "element " + m.label(x) + " has a coordinate outside its factor";
    if (pos != d.product_index[x]) return "product index of " + m.label(x) + " is inconsistent";
    if (hit[pos]) return "two elements share the product index " + std::to_string(pos);
    hit[pos] = true;
  }
  auto coords_match = [&](Index target, auto&& value_at) {
    for (std::size_t c = 0; c < k; ++c) {
      if (d.coordinates[target][c] != value_at(c)) return false;
    }
    return true;
  };
  if (!coords_match(m.bottom(), [](std::size_t) { return ae::kZero; }) ||
      !coords_match(m.top(), [](std::size_t) { return ae::kOne; })) {
    return "bounds are not the constant tuples";
  }
  for (Index x = 0; x < n; ++x) {
    const auto& cx = d.coordinates[x];
    if (!coords_match(m.neg(x), [&](std::size_t c) { return ae::neg(cx[c]); })) {
      return "negation of " + m.label(x) + " is not componentwise";
    }
    for (Index y = 0; y < n; ++y) {
      const auto& cy = d.coordinates[y];
      if (!coords_match(m.join(x, y), [&](std::size_t c) { return ae::join(cx[c], cy[c]); }) ||
          !coords_match(m.meet(x, y), [&](std::size_t c) { return ae::meet(cx[c], cy[c]); })) {
        return "operations on " + m.label(x) + ", " + m.label(y) + " are not componentwise";
      }
    }
  }
  return std::nullopt;
}

DecomposeResult decompose(const DeMorganAlgebra& m, const Limits& limits) {
  if (m.size() > limits.max_size) throw SizeLimitError("decompose", m.size(), limits.max_size);
  DecomposeResult result{dual_space(m), std::nullopt, std::nullopt};
  const auto& space = result.dual.space;
  if (auto c3 = condition3_holds(space); !c3.holds) {
    result.violation = c3.violation;
    return result;
  }
  const std::size_t n = m.size();
  std::vector<AlterEgoMap> eval(n);
  for (Index x = 0; x < n; ++x) eval[x] = evaluation_map(m, result.dual, x);

  FactorDecomposition d{m, select_y(space), {}, {}, {}, {}, {}};
  for (auto p : d.y) {
    // The image A_y of the evaluation at p is a subalgebra of M1.
    unsigned seen = 0;
    for (Index x = 0; x < n; ++x) seen |= 1u << eval[x][p];
    FactorTag tag;
    bool renamed = false;
    switch (seen) {
      case 0b1001:
        tag = FactorTag::B2;
        break;
      case 0b1011:
        tag = FactorTag::K3;
        break;
      case 0b1101:
        tag = FactorTag::K3;
        renamed = true;
        break;
      case 0b1111:
        tag = FactorTag::M1;
        break;
      default:
        throw InternalError("decompose: evaluation image at a dual point is not a subalgebra of M1");
    }
    d.tags.push_back(tag);
    d.renamed.push_back(renamed);
    ++d.counts[static_cast<std::size_t>(tag)];
  }
  d.coordinates.resize(n);
  d.product_index.resize(n);
  for (Index x = 0; x < n; ++x) {
    for (std::size_t k = 0; k < d.y.size(); ++k) {
      const auto v = eval[x][d.y[k]];
      d.coordinates[x].push_back(d.renamed[k] ? swap_ab(v) : v);
    }
    d.product_index[x] = product_position(d, d.coordinates[x]);
  }
  if (auto defect = decomposition_defect(d)) {
    throw InternalError("decompose: restriction to Y is not an isomorphism onto the product: " +
                        *defect);
  }
  result.decomposition = std::move(d);
  return result;
}

SkeletonDeterminationResult skeleton_determination_check(const FactorDecomposition& d,
                                                         const Congruence& theta) {
  if (auto defect = decomposition_defect(d)) {
    throw InputError("not a product decomposition: " + *defect);
  }
  const auto& m = d.algebra;
  const std::size_t n = m.size();
  if (theta.algebra_size() != n) {
    throw PreconditionError("congruence is not on the decomposed algebra");
  }
  const std::size_t k = d.y.size();
  std::vector<Index> element_at(n);
  for (Index x = 0; x < n; ++x) element_at[d.product_index[x]] = x;
  auto s_of = [&](const std::vector<bool>& in_n) {
    AlterEgoMap coords(k);
    for (std::size_t c = 0; c < k; ++c) coords[c] = in_n[c] ? ae::kZero : ae::kOne;
    return element_at[product_position(d, coords)];
  };

  SkeletonDeterminationResult result;
  for (Index u = 0; u < n; ++u) {
    for (Index v = 0; v < n; ++v) {
      ++result.pairs_checked;
      const auto& lo = d.coordinates[m.meet(u, v)];
      const auto& hi = d.coordinates[m.join(u, v)];
      std::vector<bool> equalizer(k);
      std::size_t j = 0, kk = 0, l = 0;
      for (std::size_t c = 0; c < k; ++c) {
        equalizer[c] = lo[c] == hi[c];
        const bool lo_mid = lo[c] == ae::kA || lo[c] == ae::kB;
        const bool hi_mid = hi[c] == ae::kA || hi[c] == ae::kB;
        j += (lo[c] == ae::kZero && hi[c] == ae::kOne) ? 1 : 0;
        kk += (lo[c] == ae::kZero && hi_mid) ? 1 : 0;
        l += (lo_mid && hi[c] == ae::kOne) ? 1 : 0;
      }
      const std::size_t unequal = static_cast<std::size_t>(
          std::count(equalizer.begin(), equalizer.end(), false));
      if (j + kk + l != unequal) {
        // J, K, L must partition the complement of the equalizer.
        throw InternalError("skeleton_determination_check: J, K, L do not cover the "
                            "complement of the equalizer");
      }
      const Index s = s_of(equalizer);
      if (theta.related(u, v) != theta.related(m.bottom(), s)) {
        result.holds = false;
        result.witness = std::pair{u, v};
        result.detail = "|J|=" + std::to_string(j) + " |K|=" + std::to_string(kk) +
                        " |L|=" + std::to_string(l) + " s=" + m.label(s);
        return result;
      }
    }
  }
  return result;
}

BooleanProductReport boolean_product_check(std::span<const std::vector<Index>> elements,
                                           std::span<const DeMorganAlgebra> factors) {
  if (factors.empty()) throw InputError("boolean_product_check: the index set must be non-empty");
  const std::size_t k = factors.size();
  for (const auto& e : elements) {
    if (e.size() != k) throw InputError("boolean_product_check: tuple of wrong length");
    for (std::size_t c = 0; c < k; ++c) {
      if (e[c] >= factors[c].size()) {
        throw InputError("boolean_product_check: coordinate out of range");
      }
    }
  }
  using Tuple = std::vector<Index>;
  const std::set<Tuple> a(elements.begin(), elements.end());
  BooleanProductReport r;

  auto apply = [&](const Tuple& x, const Tuple& y, int op) {
    Tuple out(k);
    for (std::size_t c = 0; c < k; ++c) {
      out[c] = op == 0 ? factors[c].join(x[c], y[c])
                       : (op == 1 ? factors[c].meet(x[c], y[c]) : factors[c].neg(x[c]));
    }
    return out;
  };
  Tuple bottom(k), top(k);
  for (std::size_t c = 0; c < k; ++c) {
    bottom[c] = factors[c].bottom();
    top[c] = factors[c].top();
  }
  r.is_subalgebra = a.contains(bottom) && a.contains(top);
  for (auto it = a.begin(); it != a.end() && r.is_subalgebra; ++it) {
    r.is_subalgebra = a.contains(apply(*it, *it, 2));
    for (auto jt = a.begin(); jt != a.end() && r.is_subalgebra; ++jt) {
      r.is_subalgebra = a.contains(apply(*it, *jt, 0)) && a.contains(apply(*it, *jt, 1));
    }
  }
  r.is_subdirect = true;
  for (std::size_t c = 0; c < k && r.is_subdirect; ++c) {
    std::set<Index> projection;
    for (const auto& t : a) projection.insert(t[c]);
    r.is_subdirect = projection.size() == factors[c].size();
  }
  r.patchwork = true;
  for (auto it = a.begin(); it != a.end() && r.patchwork; ++it) {
    for (auto jt = a.begin(); jt != a.end() && r.patchwork; ++jt) {
      for (std::size_t c = 0; c < k; ++c) {
        Tuple patched = *jt;
        patched[c] = (*it)[c];
        if (!a.contains(patched)) {
          r.patchwork = false;
          r.patch_failure = PatchFailure{static_cast<Index>(c), *it, *jt, patched};
          break;
        }
      }
    }
  }
  std::size_t full = 1;
  for (const auto& f : factors) full *= f.size();
  r.full_product = a.size() == full;
  r.holds = r.is_subalgebra && r.is_subdirect && r.patchwork;
  if (!r.is_subalgebra) {
    r.detail = "not a subalgebra of the product";
  } else if (!r.is_subdirect) {
    r.detail = "a projection is not surjective";
  } else if (!r.patchwork) {
    r.detail = "patchwork fails for K = {" + std::to_string(r.patch_failure->coordinate) + "}";
  } else {
    r.detail = "Boolean product over a discrete index set (the full product)";
  }
  return r;
}

namespace {

std::pair<Congruence, Congruence> agreement_kernels(const DualSpace& x,
                                                    const std::vector<AlterEgoMap>& maps,
                                                    Index p, Index q) {
  if (p >= x.size() || q >= x.size()) throw PreconditionError("dual point out of range");
  if (!x.leq(p, q) || p == q || p == x.f(q)) {
    throw PreconditionError("congruence witnesses need x <= y with x != y and x != f(y)");
  }
  auto kernel = [&](Index point) {
    std::vector<Index> labels;
    for (const auto& phi : maps) labels.push_back(phi[point] * 4u + phi[x.f(point)]);
    return Congruence::from_labels(labels);
  };
  return {kernel(p), kernel(q)};
}

}  // namespace

std::pair<Congruence, Congruence> congruence_witnesses_from_violation(const DualSpace& x,
                                                                      Index p, Index q,
                                                                      const Limits& limits) {
  return agreement_kernels(x, morphisms(x, limits.max_size), p, q);
}

std::pair<Congruence, Congruence> congruence_witnesses_from_violation(const DeMorganAlgebra& m,
                                                                      const NaturalDual& dual,
                                                                      Index p, Index q) {
  std::vector<AlterEgoMap> maps;
  for (Index x = 0; x < m.size(); ++x) maps.push_back(evaluation_map(m, dual, x));
  return agreement_kernels(dual.space, maps, p, q);
}

IsoWitness double_dual_check(const DeMorganAlgebra& m, const Limits& limits) {
  const auto dual = dual_space(m);
  const auto maps = morphisms(dual.space, limits.max_size);
  auto target = algebra_of(dual.space, limits);
  std::vector<Index> mapping(m.size());
  for (Index x = 0; x < m.size(); ++x) {
    const auto phi = evaluation_map(m, dual, x);
    auto it = std::lower_bound(maps.begin(), maps.end(), phi);
    if (it == maps.end() || *it != phi) {
      throw InternalError("double_dual_check: evaluation of " + m.label(x) +
                          " is not a morphism");
    }
    mapping[x] = static_cast<Index>(it - maps.begin());
  }
  if (!is_isomorphism(m, target, mapping)) {
    throw InternalError("double_dual_check: evaluation is not an isomorphism");
  }
  return IsoWitness{IsoKind::algebra, std::move(mapping), true};
}

}  // namespace demorgan
