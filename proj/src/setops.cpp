#include "sumdiff/setops.hpp"

#include <stdexcept>

namespace sumdiff {

bool SubsetMask::fits(int order) const {
  if (order >= kBits) return true;
  for (int w = 0; w < kWords; ++w) {
    const int lo = 64 * w;
    if (order <= lo) {
      if (words_[w] != 0) return false;
    } else if (order < lo + 64) {
      if ((words_[w] >> (order - lo)) != 0) return false;
    }
  }
  return true;
}

std::vector<Element> SubsetMask::elements() const {
  std::vector<Element> out;
  out.reserve(count());
  for_each([&](Element e) { out.push_back(e); });
  return out;
}

SubsetMask SubsetMask::full(int order) {
  SubsetMask m;
  for (int i = 0; i < order && i < kBits; ++i) m.set(i);
  return m;
}

std::string_view classification_name(Classification c) {
  switch (c) {
    case Classification::MSTD:
      return "MSTD";
    case Classification::MDTS:
      return "MDTS";
    case Classification::Balanced:
      return "Balanced";
  }
  return "?";
}

namespace {

void require_fits(const GroupTable& g, const SubsetMask& a) {
  if (!a.fits(g.order())) throw std::invalid_argument("subset mask has bits beyond the group order");
}

}  // namespace

SubsetMask sumset(const GroupTable& g, const SubsetMask& a) {
  require_fits(g, a);
  const auto elems = a.elements();
  SubsetMask out;
  for (Element x : elems) {
    const auto row = g.row(x);
    for (Element y : elems) out.set(row[y]);
  }
  return out;
}

SubsetMask diffset(const GroupTable& g, const SubsetMask& a) {
  require_fits(g, a);
  const auto elems = a.elements();
  SubsetMask out;
  for (Element y : elems) {
    const Element iy = g.inv_unchecked(y);
    for (Element x : elems) out.set(g.row(x)[iy]);
  }
  return out;
}

SumDiffSizes measure(const GroupTable& g, const SubsetMask& a) {
  if (g.order() <= 64) {
    require_fits(g, a);
    const auto elems = a.elements();
    return measure_small(g, elems);
  }
  return {sumset(g, a).count(), diffset(g, a).count()};
}

Classification classify_sizes(SumDiffSizes s) {
  if (s.sums > s.differences) return Classification::MSTD;
  if (s.sums < s.differences) return Classification::MDTS;
  return Classification::Balanced;
}

Classification classify(const GroupTable& g, const SubsetMask& a) {
  if (a.empty()) throw std::invalid_argument("cannot classify the empty set");
  return classify_sizes(measure(g, a));
}

SumDiffSizes measure_small(const GroupTable& g, std::span<const Element> elements) {
  std::uint64_t sums = 0;
  std::uint64_t diffs = 0;
  for (Element x : elements) {
    const auto row = g.row(x);
    for (Element y : elements) {
      sums |= std::uint64_t{1} << row[y];
      diffs |= std::uint64_t{1} << row[g.inv_unchecked(y)];
    }
  }
  return {std::popcount(sums), std::popcount(diffs)};
}

SubsetMask parse_subset(const GroupTable& g, std::string_view text) {
  SubsetMask out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) throw std::invalid_argument("empty element token in set list");
    const Element e = g.parse_token(tok);
    if (out.test(e)) throw std::invalid_argument("duplicate element '" + std::string(tok) + "'");
    out.set(e);
    pos = comma + 1;
  }
  return out;
}

std::string format_subset(const GroupTable& g, const SubsetMask& a) {
  std::string out = "{";
  bool first = true;
  a.for_each([&](Element e) {
    if (!first) out += ", ";
    out += g.label(e);
    first = false;
  });
  out += "}";
  return out;
}

}  // namespace sumdiff
