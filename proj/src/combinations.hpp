#pragma once

#include <cstdint>

namespace sumdiff::detail {

// Visits every k-bit pattern inside the low `width` bits in increasing order
// (next-higher-with-same-popcount). width <= 63.
template <typename F>
void for_each_combination(int width, int k, F&& f) {
  if (k < 0 || k > width) return;
  if (k == 0) {
    f(std::uint64_t{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << width;
  std::uint64_t v = (std::uint64_t{1} << k) - 1;
  while (v < limit) {
    f(v);
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
}

}  // namespace sumdiff::detail
