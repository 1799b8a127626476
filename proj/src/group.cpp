#include "sumdiff/group.hpp"

#include <charconv>
#include <stdexcept>

namespace sumdiff {

namespace {

int mod(int x, int m) {
  int r = x % m;
  return r < 0 ? r + m : r;
}

std::string power_label(std::string_view gen, int k) {
  if (k == 0) return "";
  if (k == 1) return std::string(gen);
  return std::string(gen) + "^" + std::to_string(k);
}

// Normal form a^i b^e, e in {0,1}, index e*half + i.
struct TwoPart {
  int i;
  int e;
};

Element dicyclic_mul(int n, Element x, Element y) {
  const int m = 2 * n;
  const TwoPart p{static_cast<int>(x) % m, static_cast<int>(x) / m};
  const TwoPart q{static_cast<int>(y) % m, static_cast<int>(y) / m};
  // b a^k = a^-k b, b^2 = a^n
  if (p.e == 0 && q.e == 0) return mod(p.i + q.i, m);
  if (p.e == 0) return m + mod(p.i + q.i, m);
  if (q.e == 0) return m + mod(p.i - q.i, m);
  return mod(p.i - q.i + n, m);
}

Element dihedral_mul(int n, Element x, Element y) {
  const TwoPart p{static_cast<int>(x) % n, static_cast<int>(x) / n};
  const TwoPart q{static_cast<int>(y) % n, static_cast<int>(y) / n};
  // s r^k = r^-k s, s^2 = 1
  if (p.e == 0 && q.e == 0) return mod(p.i + q.i, n);
  if (p.e == 0) return n + mod(p.i + q.i, n);
  if (q.e == 0) return n + mod(p.i - q.i, n);
  return mod(p.i - q.i, n);
}

Element cyclic_cross_mul(int n, Element x, Element y) {
  const int i = (static_cast<int>(x) % n + static_cast<int>(y) % n) % n;
  const int j = (static_cast<int>(x) / n + static_cast<int>(y) / n) % 2;
  return i + n * j;
}

std::string make_label(const GroupSpec& spec, Element x) {
  const int k = static_cast<int>(x);
  switch (spec.family) {
    case Family::Cyclic:
      return k == 0 ? "1" : power_label("g", k);
    case Family::Dihedral: {
      const int i = k % spec.n;
      if (k < spec.n) return i == 0 ? "1" : power_label("r", i);
      return power_label("r", i) + "s";
    }
    case Family::Dicyclic: {
      const int m = 2 * spec.n;
      const int i = k % m;
      if (k < m) return i == 0 ? "1" : power_label("a", i);
      return power_label("a", i) + "b";
    }
    case Family::CyclicCrossZ2:
      return "(" + std::to_string(k % spec.n) + "," + std::to_string(k / spec.n) + ")";
  }
  return {};
}

}  // namespace

int GroupSpec::order() const {
  if (n < 1) return 0;
  switch (family) {
    case Family::Cyclic:
      return n;
    case Family::Dihedral:
      return 2 * n;
    case Family::Dicyclic:
      return 4 * n;
    case Family::CyclicCrossZ2:
      return 2 * n;
  }
  return 0;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Cyclic:
      return "cyclic";
    case Family::Dihedral:
      return "dihedral";
    case Family::Dicyclic:
      return "dic";
    case Family::CyclicCrossZ2:
      return "cyclic2";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "dic" || text == "dicyclic") return Family::Dicyclic;
  if (text == "dihedral" || text == "dih") return Family::Dihedral;
  if (text == "cyclic" || text == "z") return Family::Cyclic;
  if (text == "cyclic2" || text == "cxz2") return Family::CyclicCrossZ2;
  throw std::invalid_argument("unknown group family '" + std::string(text) + "'");
}

GroupSpec parse_group_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("group must look like family:n, got '" + std::string(text) + "'");
  }
  GroupSpec spec;
  spec.family = parse_family(text.substr(0, colon));
  const auto digits = text.substr(colon + 1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), spec.n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    throw std::invalid_argument("bad group parameter in '" + std::string(text) + "'");
  }
  return spec;
}

std::string group_name(const GroupSpec& spec) {
  const auto order = std::to_string(spec.order());
  switch (spec.family) {
    case Family::Cyclic:
      return "Z_" + std::to_string(spec.n);
    case Family::Dihedral:
      return "D_" + order;
    case Family::Dicyclic:
      return "Dic_" + order;
    case Family::CyclicCrossZ2:
      return "Z_" + std::to_string(spec.n) + "xZ_2";
  }
  return "?";
}

Element GroupTable::mul(Element x, Element y) const {
  if (static_cast<int>(x) >= order_ || static_cast<int>(y) >= order_) {
    throw std::out_of_range("element index out of range");
  }
  return mul_[static_cast<std::size_t>(x) * order_ + y];
}

Element GroupTable::inv(Element x) const {
  if (static_cast<int>(x) >= order_) throw std::out_of_range("element index out of range");
  return inv_[x];
}

const std::string& GroupTable::label(Element x) const {
  if (static_cast<int>(x) >= order_) throw std::out_of_range("element index out of range");
  return labels_[x];
}

bool GroupTable::has_rotation_split() const {
  return spec_.family == Family::Dicyclic || spec_.family == Family::Dihedral;
}

int GroupTable::rotation_count() const {
  switch (spec_.family) {
    case Family::Dicyclic:
      return 2 * spec_.n;
    case Family::Dihedral:
    case Family::CyclicCrossZ2:
    case Family::Cyclic:
      return spec_.n;
  }
  return order_;
}

std::string GroupTable::token(Element x) const {
  if (static_cast<int>(x) >= order_) throw std::out_of_range("element index out of range");
  const int half = rotation_count();
  const int k = static_cast<int>(x);
  return k < half ? "r" + std::to_string(k) : "f" + std::to_string(k - half);
}

Element GroupTable::parse_token(std::string_view token) const {
  if (token.size() < 2 || (token[0] != 'r' && token[0] != 'f')) {
    throw std::invalid_argument("element token must be r<k> or f<k>, got '" + std::string(token) + "'");
  }
  int k = 0;
  const auto digits = token.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("bad exponent in element token '" + std::string(token) + "'");
  }
  const int half = rotation_count();
  const int limit = token[0] == 'r' ? half : order_ - half;
  if (k < 0 || k >= limit) {
    throw std::invalid_argument("element token '" + std::string(token) + "' out of range for " +
                                group_name(spec_));
  }
  return static_cast<Element>(token[0] == 'r' ? k : half + k);
}

GroupTable build_group(const GroupSpec& spec, int max_order) {
  const int m = spec.order();
  if (m < 1) throw std::invalid_argument("group parameter must be positive");
  if (m > max_order) {
    throw std::length_error(group_name(spec) + " has order " + std::to_string(m) +
                            ", above the limit " + std::to_string(max_order));
  }

  GroupTable g;
  g.spec_ = spec;
  g.order_ = m;
  g.mul_.resize(static_cast<std::size_t>(m) * m);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      Element z = 0;
      switch (spec.family) {
        case Family::Cyclic:
          z = (x + y) % m;
          break;
        case Family::Dihedral:
          z = dihedral_mul(spec.n, x, y);
          break;
        case Family::Dicyclic:
          z = dicyclic_mul(spec.n, x, y);
          break;
        case Family::CyclicCrossZ2:
          z = cyclic_cross_mul(spec.n, x, y);
          break;
      }
      g.mul_[static_cast<std::size_t>(x) * m + y] = z;
    }
  }

  g.inv_.assign(m, 0);
  for (int x = 0; x < m; ++x) {
    const auto r = g.row(x);
    for (int y = 0; y < m; ++y) {
      if (r[y] == g.identity()) {
        g.inv_[x] = y;
        break;
      }
    }
  }

  g.labels_.reserve(m);
  for (int x = 0; x < m; ++x) g.labels_.push_back(make_label(spec, x));
  return g;
}

}  // namespace sumdiff
