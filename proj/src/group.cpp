#include "quospec/group.hpp"

#include <algorithm>
#include <string>

namespace quospec {

namespace {

std::int64_t floor_mod(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

void check_same_group(const Group& a, const Group& b) {
  if (!(a == b)) {
    fail(ErrorCode::MismatchedGroup,
         "elements belong to different groups");
  }
}

}  // namespace

Group Group::abelian(int rank, std::vector<std::int64_t> torsion_orders) {
  if (rank < 0) {
    fail(ErrorCode::InvalidParams, "abelian rank must be nonnegative");
  }
  if (rank + static_cast<int>(torsion_orders.size()) < 1) {
    fail(ErrorCode::InvalidParams,
         "abelian group needs at least one generator");
  }
  for (std::int64_t t : torsion_orders) {
    if (t < 2) {
      fail(ErrorCode::InvalidParams,
           "torsion orders must be >= 2, got " + std::to_string(t));
    }
  }
  Group g;
  g.family = Family::Abelian;
  g.moduli.assign(static_cast<std::size_t>(rank), 0);
  g.moduli.insert(g.moduli.end(), torsion_orders.begin(), torsion_orders.end());
  return g;
}

Group Group::heisenberg(std::int64_t modulus) {
  if (modulus != 0 && modulus < 2) {
    fail(ErrorCode::InvalidParams, "Heisenberg modulus must be 0 or >= 2");
  }
  Group g;
  g.family = Family::Heisenberg;
  g.moduli = {modulus, modulus, modulus};
  return g;
}

int Group::rank() const {
  return static_cast<int>(std::count(moduli.begin(), moduli.end(), 0));
}

bool Group::is_finite() const {
  return std::none_of(moduli.begin(), moduli.end(),
                      [](std::int64_t m) { return m == 0; });
}

std::int64_t Group::order() const {
  if (!is_finite()) return 0;
  std::int64_t n = 1;
  for (std::int64_t m : moduli) n *= m;
  return n;
}

Coords identity_coords(const Group& g) {
  return Coords(g.moduli.size(), 0);
}

Coords normalize_coords(const Group& g, Coords c) {
  if (c.size() != g.moduli.size()) {
    fail(ErrorCode::InvalidParams, "coordinate count does not match group");
  }
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (g.moduli[j] != 0) c[j] = floor_mod(c[j], g.moduli[j]);
  }
  return c;
}

Coords multiply_coords(const Group& g, const Coords& a, const Coords& b) {
  Coords r(g.moduli.size());
  if (g.family == Family::Abelian) {
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = a[j] + b[j];
  } else {
    r[0] = a[0] + b[0];
    r[1] = a[1] + b[1];
    r[2] = a[2] + b[2] + a[0] * b[1];
  }
  return normalize_coords(g, std::move(r));
}

Coords inverse_coords(const Group& g, const Coords& a) {
  Coords r(g.moduli.size());
  if (g.family == Family::Abelian) {
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = -a[j];
  } else {
    // (x,y,z)^-1 = (-x,-y,-z+xy)
    r[0] = -a[0];
    r[1] = -a[1];
    r[2] = -a[2] + a[0] * a[1];
  }
  return normalize_coords(g, std::move(r));
}

Coords power_coords(const Group& g, const Coords& a, std::int64_t e) {
  Coords base = e < 0 ? inverse_coords(g, a) : a;
  std::int64_t k = e < 0 ? -e : e;
  Coords acc = identity_coords(g);
  while (k > 0) {
    if (k & 1) acc = multiply_coords(g, acc, base);
    base = multiply_coords(g, base, base);
    k >>= 1;
  }
  return acc;
}

GroupElement identity(const Group& g) { return {g, identity_coords(g)}; }

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  check_same_group(a.group, b.group);
  return {a.group, multiply_coords(a.group, a.coords, b.coords)};
}

GroupElement inverse(const GroupElement& a) {
  return {a.group, inverse_coords(a.group, a.coords)};
}

GroupElement power(const GroupElement& a, std::int64_t e) {
  return {a.group, power_coords(a.group, a.coords, e)};
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

QuotientSpec QuotientSpec::abelian(std::vector<std::int64_t> moduli) {
  for (std::int64_t m : moduli) {
    if (m < 1) {
      fail(ErrorCode::InvalidParams,
           "abelian quotient moduli must be positive");
    }
  }
  QuotientSpec q;
  q.family = Family::Abelian;
  q.abelian_moduli = std::move(moduli);
  return q;
}

QuotientSpec QuotientSpec::heisenberg(std::int64_t p, int level) {
  if (!is_prime(p)) {
    fail(ErrorCode::NotPrime,
         "Heisenberg quotient parameter p = " + std::to_string(p) +
             " is not prime");
  }
  if (level < 1) {
    fail(ErrorCode::InvalidParams, "Heisenberg quotient level must be >= 1");
  }
  QuotientSpec q;
  q.family = Family::Heisenberg;
  q.p = p;
  q.level = level;
  return q;
}

std::int64_t QuotientSpec::heisenberg_modulus() const {
  std::int64_t n = 1;
  for (int i = 0; i < level; ++i) {
    if (n > kDefaultEnumerationCap * 8) {
      fail(ErrorCode::Overflow, "p^level out of range");
    }
    n *= p;
  }
  return n;
}

Group QuotientSpec::quotient_group(const Group& base) const {
  if (base.family != family) {
    fail(ErrorCode::MismatchedGroup, "quotient family does not match group");
  }
  if (family == Family::Heisenberg) {
    std::int64_t n = heisenberg_modulus();
    std::int64_t base_mod = base.moduli[0];
    if (base_mod != 0 && base_mod % n != 0) {
      fail(ErrorCode::MismatchedGroup,
           "Heisenberg projection requires p^level to divide the modulus");
    }
    return Group::heisenberg(n);
  }
  if (static_cast<int>(abelian_moduli.size()) != base.rank()) {
    fail(ErrorCode::MismatchedGroup,
         "expected one modulus per free generator");
  }
  Group g = base;
  std::size_t next = 0;
  for (std::size_t j = 0; j < g.moduli.size(); ++j) {
    if (g.moduli[j] == 0) g.moduli[j] = abelian_moduli[next++];
  }
  return g;
}

std::int64_t QuotientSpec::order(const Group& base) const {
  return quotient_group(base).order();
}

GroupElement project(const GroupElement& g, const QuotientSpec& q) {
  Group target = q.quotient_group(g.group);
  return {target, normalize_coords(target, g.coords)};
}

Coords project_coords(const Group& base, const QuotientSpec& q,
                      const Coords& c) {
  return normalize_coords(q.quotient_group(base), c);
}

std::vector<GroupElement> enumerate_quotient(const Group& base,
                                             const QuotientSpec& q,
                                             std::int64_t cap) {
  Group target = q.quotient_group(base);
  std::int64_t n = target.order();
  if (n > cap) {
    fail(ErrorCode::QuotientTooLarge,
         "quotient order " + std::to_string(n) + " exceeds cap " +
             std::to_string(cap));
  }
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(n));
  Coords c(target.moduli.size(), 0);
  for (std::int64_t idx = 0; idx < n; ++idx) {
    out.push_back({target, c});
    // lexicographic successor, rightmost coordinate fastest
    for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j) {
      if (++c[j] < target.moduli[j]) break;
      c[j] = 0;
    }
  }
  return out;
}

std::int64_t coords_index(const Group& finite_group, const Coords& c) {
  if (!finite_group.is_finite()) {
    fail(ErrorCode::InvalidParams, "coords_index requires a finite group");
  }
  std::int64_t idx = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    idx = idx * finite_group.moduli[j] + c[j];
  }
  return idx;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MismatchedGroup: return "MismatchedGroup";
    case ErrorCode::QuotientTooLarge: return "QuotientTooLarge";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::OffTorus: return "OffTorus";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnsupportedRank: return "UnsupportedRank";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotOddPrime: return "NotOddPrime";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::Config: return "ConfigError";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::Internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace quospec
