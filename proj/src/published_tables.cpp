#include "sumdiff/published_tables.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

#include "published_tables_data.hpp"

namespace sumdiff {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = line.find(sep, pos);
    out.push_back(line.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view s) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("bad number '" + std::string(s) + "' in published table");
  }
  return v;
}

}  // namespace

std::vector<PublishedCell> parse_published_csv(std::string_view text) {
  std::vector<PublishedCell> cells;
  bool header_seen = false;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != "family,n,size,mstd,mdts") throw std::invalid_argument("unexpected published table header");
      header_seen = true;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 5) throw std::invalid_argument("published table row needs 5 fields");
    cells.push_back({parse_family(f[0]), parse_number<int>(f[1]), parse_number<int>(f[2]),
                     parse_number<std::uint64_t>(f[3]), parse_number<std::uint64_t>(f[4])});
  }
  return cells;
}

const std::vector<PublishedCell>& published_cells() {
  static const std::vector<PublishedCell> cells = parse_published_csv(detail::kPublishedTablesCsv);
  return cells;
}

std::optional<PublishedCell> find_published(Family family, int n, int size) {
  for (const auto& c : published_cells()) {
    if (c.family == family && c.n == n && c.size == size) return c;
  }
  return std::nullopt;
}

}  // namespace sumdiff
