#include "sumdiff/enumerator.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "combinations.hpp"

namespace sumdiff {

void CountTriple::add(Classification c) {
  switch (c) {
    case Classification::MSTD:
      ++mstd;
      break;
    case Classification::MDTS:
      ++mdts;
      break;
    case Classification::Balanced:
      ++balanced;
      break;
  }
}

CountTriple& CountTriple::operator+=(const CountTriple& o) {
  mstd += o.mstd;
  mdts += o.mdts;
  balanced += o.balanced;
  return *this;
}

std::vector<TypeDescriptor> type_descriptors(int k) {
  std::vector<TypeDescriptor> out;
  for (int r = k; r >= 0; --r) out.push_back({r, k - r});
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (n > 64) throw std::out_of_range("binomial: n above 64");
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(r);
}

namespace {

using detail::for_each_combination;

void check_exhaustive(const GroupTable& g, int k) {
  if (g.order() > kMaxExhaustiveOrder) {
    throw std::length_error("order " + std::to_string(g.order()) + " is too large for exhaustive counting");
  }
  if (k < 1 || k > g.order()) {
    throw std::out_of_range("subset size " + std::to_string(k) + " outside [1, " +
                            std::to_string(g.order()) + "]");
  }
}

// Subsets whose smallest element is `s`.
CountTriple count_stratum(const GroupTable& g, int k, int s) {
  CountTriple out;
  const int m = g.order();
  std::array<Element, 64> elems{};
  elems[0] = static_cast<Element>(s);
  for_each_combination(m - 1 - s, k - 1, [&](std::uint64_t rest) {
    int len = 1;
    for (std::uint64_t bits = rest; bits != 0; bits &= bits - 1) {
      elems[len++] = static_cast<Element>(s + 1 + std::countr_zero(bits));
    }
    out.add(classify_sizes(measure_small(g, std::span<const Element>(elems.data(), len))));
  });
  return out;
}

}  // namespace

CountTriple count_by_size(const GroupTable& g, int k) {
  check_exhaustive(g, k);
  CountTriple total;
  for (int s = 0; s + k <= g.order(); ++s) total += count_stratum(g, k, s);
  return total;
}

CountTriple parallel_count(const GroupTable& g, int k, int workers) {
  check_exhaustive(g, k);
  if (workers < 1) throw std::invalid_argument("worker count must be positive");
  const int m = g.order();
  const int strata = m - k + 1;
  workers = std::min(workers, strata);
  if (workers == 1) return count_by_size(g, k);

  // Longest-stratum-first onto the least loaded worker.
  std::vector<int> order(strata);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return binomial(m - 1 - a, k - 1) > binomial(m - 1 - b, k - 1);
  });
  std::vector<std::vector<int>> assigned(workers);
  std::vector<std::uint64_t> load(workers, 0);
  for (int s : order) {
    const auto w = std::distance(load.begin(), std::min_element(load.begin(), load.end()));
    assigned[w].push_back(s);
    load[w] += binomial(m - 1 - s, k - 1);
  }

  std::vector<CountTriple> partial(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (int s : assigned[w]) partial[w] += count_stratum(g, k, s);
      });
    }
  }
  CountTriple total;
  for (const auto& p : partial) total += p;
  return total;
}

CountTriple count_by_type(const GroupTable& g, int k, TypeDescriptor t) {
  if (!g.has_rotation_split()) {
    throw std::invalid_argument(group_name(g.spec()) + " has no rotation/reflection split");
  }
  check_exhaustive(g, k);
  if (t.rotations < 0 || t.reflections < 0 || t.size() != k) {
    throw std::invalid_argument("type descriptor does not match the subset size");
  }
  const int half = g.rotation_count();
  const int rest = g.order() - half;
  CountTriple out;
  std::array<Element, 64> elems{};
  for_each_combination(half, t.rotations, [&](std::uint64_t rot) {
    for_each_combination(rest, t.reflections, [&](std::uint64_t refl) {
      int len = 0;
      for (std::uint64_t bits = rot; bits != 0; bits &= bits - 1) {
        elems[len++] = static_cast<Element>(std::countr_zero(bits));
      }
      for (std::uint64_t bits = refl; bits != 0; bits &= bits - 1) {
        elems[len++] = static_cast<Element>(half + std::countr_zero(bits));
      }
      out.add(classify_sizes(measure_small(g, std::span<const Element>(elems.data(), len))));
    });
  });
  return out;
}

std::uint64_t triple_congruence_count(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("triple congruence count needs odd n >= 3");
  const int m = 2 * n;
  auto cong = [m](int a, int b) { return (a - b) % m == 0; };
  std::uint64_t count = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        if (cong(2 * i, j + k) || cong(2 * j, i + k) || cong(2 * k, i + j)) ++count;
      }
    }
  }
  return count;
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SUMDIFF_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace sumdiff
