#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "sumdiff/group.hpp"

namespace sumdiff {

// Subset of a group of order at most 128, one bit per element index.
class SubsetMask {
 public:
  static constexpr int kWords = 2;
  static constexpr int kBits = 64 * kWords;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t low) : words_{low, 0} {}
  constexpr SubsetMask(std::uint64_t low, std::uint64_t high) : words_{low, high} {}
  SubsetMask(std::initializer_list<Element> elements) {
    for (Element e : elements) set(e);
  }

  constexpr void set(Element e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  constexpr void reset(Element e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
  constexpr bool test(Element e) const { return (words_[e >> 6] >> (e & 63)) & 1U; }

  constexpr int count() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
  constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }
  constexpr std::uint64_t word(int i) const { return words_[i]; }

  // True when no bit at or above `order` is set.
  bool fits(int order) const;
  std::vector<Element> elements() const;

  template <typename F>
  void for_each(F&& f) const {
    for (int w = 0; w < kWords; ++w) {
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
        f(static_cast<Element>(64 * w + std::countr_zero(bits)));
      }
    }
  }

  constexpr SubsetMask& operator|=(const SubsetMask& o) {
    words_[0] |= o.words_[0];
    words_[1] |= o.words_[1];
    return *this;
  }
  constexpr SubsetMask& operator&=(const SubsetMask& o) {
    words_[0] &= o.words_[0];
    words_[1] &= o.words_[1];
    return *this;
  }
  friend constexpr SubsetMask operator|(SubsetMask a, const SubsetMask& b) { return a |= b; }
  friend constexpr SubsetMask operator&(SubsetMask a, const SubsetMask& b) { return a &= b; }
  constexpr bool operator==(const SubsetMask&) const = default;

  static SubsetMask full(int order);

 private:
  std::array<std::uint64_t, kWords> words_{};
};

enum class Classification { MSTD, MDTS, Balanced };

std::string_view classification_name(Classification c);

struct SumDiffSizes {
  int sums = 0;
  int differences = 0;
};

// {xy : x, y in A}
SubsetMask sumset(const GroupTable& g, const SubsetMask& a);
// {x y^-1 : x, y in A}
SubsetMask diffset(const GroupTable& g, const SubsetMask& a);

SumDiffSizes measure(const GroupTable& g, const SubsetMask& a);
// Throws std::invalid_argument for the empty set.
Classification classify(const GroupTable& g, const SubsetMask& a);
Classification classify_sizes(SumDiffSizes s);

// Parses a comma separated token list ("r1,r4,f0"). Duplicates are rejected.
SubsetMask parse_subset(const GroupTable& g, std::string_view text);
std::string format_subset(const GroupTable& g, const SubsetMask& a);

// Hot-loop kernel over a subset listed as element indices (order <= 64).
// Returns |AA| and |AA^-1| without materialising SubsetMask objects.
SumDiffSizes measure_small(const GroupTable& g, std::span<const Element> elements);

}  // namespace sumdiff
