#include "demorgan/dual_space.hpp"

#include <sstream>

namespace demorgan {

char alter_ego::symbol(Value v) noexcept {
  switch (v) {
    case kZero:
      return '0';
    case kA:
      return 'a';
    case kB:
      return 'b';
    default:
      return '1';
  }
}

DualSpace::DualSpace(Unchecked, std::size_t size, std::vector<std::uint8_t> leq,
                     std::vector<Index> f, std::vector<std::string> labels)
    : size_(size), leq_(std::move(leq)), f_(std::move(f)), labels_(std::move(labels)) {}

std::string DualSpace::label(Index x) const {
  if (x < labels_.size()) return labels_[x];
  return std::to_string(x);
}

DualSpaceTables DualSpace::to_tables() const {
  DualSpaceTables t;
  t.size = static_cast<std::int64_t>(size_);
  t.leq.assign(size_, std::vector<std::int64_t>(size_));
  for (Index x = 0; x < size_; ++x) {
    for (Index y = 0; y < size_; ++y) t.leq[x][y] = leq(x, y) ? 1 : 0;
  }
  t.f.assign(f_.begin(), f_.end());
  t.labels = labels_;
  return t;
}

namespace {

std::string witness(std::initializer_list<Index> points) {
  std::ostringstream os;
  os << " at (";
  bool first = true;
  for (auto p : points) {
    os << (first ? "" : ", ") << p;
    first = false;
  }
  os << ')';
  return os.str();
}

}  // namespace

std::vector<std::string> dual_space_violations(const DualSpace& x) {
  std::vector<std::string> out;
  const Index m = static_cast<Index>(x.size());
  auto first_unary = [&](const std::string& name, auto holds) {
    for (Index p = 0; p < m; ++p) {
      if (!holds(p)) {
        out.push_back(name + witness({p}));
        return;
      }
    }
  };
  auto first_binary = [&](const std::string& name, auto holds) {
    for (Index p = 0; p < m; ++p) {
      for (Index q = 0; q < m; ++q) {
        if (!holds(p, q)) {
          out.push_back(name + witness({p, q}));
          return;
        }
      }
    }
  };
  first_unary("reflexive", [&](Index p) { return x.leq(p, p); });
  first_binary("antisymmetric",
               [&](Index p, Index q) { return p == q || !(x.leq(p, q) && x.leq(q, p)); });
  [&] {
    for (Index p = 0; p < m; ++p) {
      for (Index q = 0; q < m; ++q) {
        for (Index r = 0; r < m; ++r) {
          if (x.leq(p, q) && x.leq(q, r) && !x.leq(p, r)) {
            out.push_back("transitive" + witness({p, q, r}));
            return;
          }
        }
      }
    }
  }();
  for (Index p = 0; p < m; ++p) {
    if (x.f(p) >= m) {
      out.push_back("f maps into the space" + witness({p}));
      return out;
    }
  }
  first_unary("f is an involution", [&](Index p) { return x.f(x.f(p)) == p; });
  first_binary("f is order-reversing",
               [&](Index p, Index q) { return !x.leq(p, q) || x.leq(x.f(q), x.f(p)); });
  return out;
}

bool is_valid_dual_space(const DualSpace& x) {
  const Index m = static_cast<Index>(x.size());
  for (Index p = 0; p < m; ++p) {
    if (!x.leq(p, p) || x.f(p) >= m || x.f(x.f(p)) != p) return false;
  }
  for (Index p = 0; p < m; ++p) {
    for (Index q = 0; q < m; ++q) {
      if (!x.leq(p, q)) continue;
      if (p != q && x.leq(q, p)) return false;
      if (!x.leq(x.f(q), x.f(p))) return false;
      for (Index r = 0; r < m; ++r) {
        if (x.leq(q, r) && !x.leq(p, r)) return false;
      }
    }
  }
  return true;
}

DualSpace make_dual_space(const DualSpaceTables& t) {
  if (t.size < 0) throw InputError("malformed dual space: negative size");
  const auto m = static_cast<std::size_t>(t.size);
  if (t.leq.size() != m) throw InputError("malformed dual space: leq must have size rows");
  std::vector<std::uint8_t> leq;
  leq.reserve(m * m);
  for (const auto& row : t.leq) {
    if (row.size() != m) throw InputError("malformed dual space: leq row is ragged");
    for (auto v : row) {
      if (v != 0 && v != 1) throw InputError("malformed dual space: leq entries must be 0 or 1");
      leq.push_back(static_cast<std::uint8_t>(v));
    }
  }
  if (t.f.size() != m) throw InputError("malformed dual space: f must have size entries");
  std::vector<Index> f;
  for (auto v : t.f) {
    if (v < 0 || v >= t.size) {
      throw InputError("malformed dual space: f entry " + std::to_string(v) + " out of range");
    }
    f.push_back(static_cast<Index>(v));
  }
  if (!t.labels.empty() && t.labels.size() != m) {
    throw InputError("malformed dual space: labels must have size entries");
  }
  DualSpace x(DualSpace::Unchecked{}, m, std::move(leq), std::move(f), t.labels);
  auto violations = dual_space_violations(x);
  if (!violations.empty()) {
    std::string msg = "not a dual space:";
    for (const auto& v : violations) msg += " [" + v + "]";
    throw InputError(msg);
  }
  return x;
}

}  // namespace demorgan
