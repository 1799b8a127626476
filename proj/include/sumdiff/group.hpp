#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sumdiff {

// Element of a finite group, addressed by its index in the multiplication table.
using Element = std::uint32_t;

enum class Family { Cyclic, Dihedral, Dicyclic, CyclicCrossZ2 };

// Largest order a subset can be enumerated over with one 64-bit word.
inline constexpr int kMaxExhaustiveOrder = 64;
// Largest order representable by SubsetMask at all.
inline constexpr int kMaxOrder = 128;

struct GroupSpec {
  Family family = Family::Cyclic;
  int n = 1;

  // 0 when the parameter is not positive.
  int order() const;
  bool operator==(const GroupSpec&) const = default;
};

std::string_view family_name(Family f);
// Accepts "dic", "dicyclic", "dihedral", "dih", "cyclic", "cyclic2", "cxz2".
Family parse_family(std::string_view text);
// "dic:3", "dihedral:4", ...
GroupSpec parse_group_spec(std::string_view text);
// Conventional display name: Dic_12, D_8, Z_5, Z_4xZ_2.
std::string group_name(const GroupSpec& spec);

/*
 * Dense Cayley table over indexed elements.
 *
 * Index layout:
 *   Dicyclic  n: k in [0,2n) is a^k, 2n+k is a^k b
 *   Dihedral  n: k in [0,n)  is r^k, n+k  is r^k s
 *   Cyclic    n: k is g^k
 *   Z_n x Z_2  : i + n*j is (i, j)
 *
 * Immutable after construction.
 */
class GroupTable {
 public:
  GroupTable() = default;

  const GroupSpec& spec() const { return spec_; }
  int order() const { return order_; }
  Element identity() const { return 0; }

  // Bounds-checked; throw std::out_of_range.
  Element mul(Element x, Element y) const;
  Element inv(Element x) const;

  // Row x of the table: row(x)[y] == x*y. No bounds check on x.
  std::span<const Element> row(Element x) const {
    return {mul_.data() + static_cast<std::size_t>(x) * order_, static_cast<std::size_t>(order_)};
  }
  Element inv_unchecked(Element x) const { return inv_[x]; }

  // Human readable: "1", "a^2", "a^3b", "rs", "(1,0)".
  const std::string& label(Element x) const;
  // CLI token: r<k> for the first half of the index range, f<k> for the second half.
  std::string token(Element x) const;
  // Inverse of token(); throws std::invalid_argument on malformed or out of range input.
  Element parse_token(std::string_view token) const;

  // Dicyclic and dihedral tables split into rotations (a^k / r^k) and reflections (a^k b / r^k s).
  bool has_rotation_split() const;
  // Number of rotation elements; the order for families without a split.
  int rotation_count() const;
  bool is_reflection(Element x) const { return static_cast<int>(x) >= rotation_count(); }

 private:
  friend GroupTable build_group(const GroupSpec& spec, int max_order);

  GroupSpec spec_;
  int order_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<std::string> labels_;
};

// Throws std::invalid_argument for an empty group and std::length_error above max_order.
GroupTable build_group(const GroupSpec& spec, int max_order = kMaxOrder);

}  // namespace sumdiff
