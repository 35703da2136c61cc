#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quospec/error.hpp"

namespace quospec {

inline constexpr std::int64_t kDefaultEnumerationCap = 1'000'000;

enum class Family { Abelian, Heisenberg };

/// A group from one of the two supported families, in canonical coordinates.
///
/// Abelian: one coordinate per generator; `moduli[j] == 0` means the
/// coordinate is free (a copy of Z), `moduli[j] == m >= 2` means Z/mZ.
/// Free coordinates always come first, torsion coordinates after them.
///
/// Heisenberg: three coordinates (x, y, z) for the unitriangular matrix
/// with x top-middle, y middle-right, z top-right. `moduli` is {n, n, n}
/// with n == 0 for H3(Z) and n >= 2 for H3(Z/nZ). Group law:
///   (x1,y1,z1)*(x2,y2,z2) = (x1+x2, y1+y2, z1+z2+x1*y2).
struct Group {
  Family family = Family::Abelian;
  std::vector<std::int64_t> moduli;

  static Group abelian(int rank, std::vector<std::int64_t> torsion_orders = {});
  static Group heisenberg(std::int64_t modulus = 0);

  bool operator==(const Group& other) const = default;

  int coordinates() const { return static_cast<int>(moduli.size()); }
  /// Number of free (infinite-order) coordinates.
  int rank() const;
  bool is_finite() const;
  /// Group order; 0 when infinite.
  std::int64_t order() const;
};

using Coords = std::vector<std::int64_t>;

struct GroupElement {
  Group group;
  Coords coords;

  bool operator==(const GroupElement& other) const = default;
};

/// Coordinate-level group operations. All take coordinates already
/// canonical for `g` (finite coordinates in [0, m)) and return canonical
/// coordinates.
Coords identity_coords(const Group& g);
Coords normalize_coords(const Group& g, Coords c);
Coords multiply_coords(const Group& g, const Coords& a, const Coords& b);
Coords inverse_coords(const Group& g, const Coords& a);
Coords power_coords(const Group& g, const Coords& a, std::int64_t e);

GroupElement identity(const Group& g);
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
GroupElement power(const GroupElement& a, std::int64_t e);

/// A finite quotient of a base group: coordinatewise moduli for the free
/// generators of an abelian group, or H3(Z/p^i Z) for the Heisenberg family.
struct QuotientSpec {
  Family family = Family::Abelian;
  std::vector<std::int64_t> abelian_moduli;  // one per free generator
  std::int64_t p = 0;                        // Heisenberg: prime
  int level = 0;                             // Heisenberg: i >= 1, quotient mod p^i

  static QuotientSpec abelian(std::vector<std::int64_t> moduli);
  static QuotientSpec heisenberg(std::int64_t p, int level);

  std::int64_t heisenberg_modulus() const;  // p^level
  /// The quotient as a Group (all coordinates finite).
  Group quotient_group(const Group& base) const;
  std::int64_t order(const Group& base) const;
};

bool is_prime(std::int64_t n);

GroupElement project(const GroupElement& g, const QuotientSpec& q);
Coords project_coords(const Group& base, const QuotientSpec& q, const Coords& c);

/// All elements of the quotient in lexicographic coordinate order; the
/// identity (all-zero tuple) comes first. Throws QuotientTooLarge above `cap`.
std::vector<GroupElement> enumerate_quotient(
    const Group& base, const QuotientSpec& q,
    std::int64_t cap = kDefaultEnumerationCap);

/// Position of canonical coordinates in the enumerate_quotient order.
std::int64_t coords_index(const Group& finite_group, const Coords& c);

}  // namespace quospec
