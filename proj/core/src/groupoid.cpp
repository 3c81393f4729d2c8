#include "coarse/groupoid.hpp"

#include <algorithm>
#include <sstream>

#include "coarse/error.hpp"

namespace coarse {

Rat parse_rational(const std::string& text) {
  long long num = 0, den = 1;
  char slash = 0;
  std::istringstream is(text);
  if (!(is >> num)) throw ParseError("bad rational: " + text);
  if (is >> slash) {
    if (slash != '/' || !(is >> den) || den == 0) throw ParseError("bad rational: " + text);
  }
  std::string rest;
  if (is >> rest) throw ParseError("bad rational: " + text);
  return Rat(num, den);
}

std::string format_rational(const Rat& q) {
  std::ostringstream os;
  os << q.numerator();
  if (q.denominator() != 1) os << '/' << q.denominator();
  return os.str();
}

PartialOrderMap PartialOrderMap::from_pairs(std::vector<std::pair<Rat, Rat>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  for (size_t i = 0; i + 1 < pairs.size(); ++i) {
    if (pairs[i].first == pairs[i + 1].first)
      throw StructureError("partial map defined twice at a point");
    if (!(pairs[i].second < pairs[i + 1].second))
      throw StructureError("partial map is not order preserving");
  }
  return PartialOrderMap{std::move(pairs)};
}

std::vector<Rat> PartialOrderMap::domain() const {
  std::vector<Rat> d;
  d.reserve(pairs.size());
  for (const auto& p : pairs) d.push_back(p.first);
  return d;
}

std::vector<Rat> PartialOrderMap::range() const {
  std::vector<Rat> r;
  r.reserve(pairs.size());
  for (const auto& p : pairs) r.push_back(p.second);
  return r;
}

std::optional<Rat> PartialOrderMap::at(const Rat& x) const {
  for (const auto& p : pairs)
    if (p.first == x) return p.second;
  return std::nullopt;
}

bool PartialOrderMap::extends(const PartialOrderMap& other) const {
  for (const auto& p : other.pairs)
    if (!std::binary_search(pairs.begin(), pairs.end(), p)) return false;
  return true;
}

PartialOrderMap PartialOrderMap::inverted() const {
  std::vector<std::pair<Rat, Rat>> inv;
  inv.reserve(pairs.size());
  for (const auto& p : pairs) inv.emplace_back(p.second, p.first);
  return from_pairs(std::move(inv));
}

bool PartialOrderMap::is_identity_map() const {
  for (const auto& p : pairs)
    if (p.first != p.second) return false;
  return true;
}

std::string PartialOrderMap::label() const {
  std::ostringstream os;
  os << "map:{";
  bool first = true;
  for (const auto& p : pairs) {
    if (!first) os << ',';
    os << format_rational(p.first) << "↦" << format_rational(p.second);
    first = false;
  }
  os << '}';
  return os.str();
}

PartialOrderMap compose(const PartialOrderMap& a, const PartialOrderMap& b) {
  std::vector<std::pair<Rat, Rat>> pairs;
  for (const auto& p : b.pairs)
    if (auto v = a.at(p.second)) pairs.emplace_back(p.first, *v);
  return PartialOrderMap::from_pairs(std::move(pairs));
}

int RationalGroupoid::index_of(const PartialOrderMap& m) const {
  auto cmp = [](const PartialOrderMap& x, const PartialOrderMap& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.pairs < y.pairs;
  };
  auto it = std::lower_bound(elements.begin(), elements.end(), m, cmp);
  if (it == elements.end() || !(*it == m)) return -1;
  return static_cast<int>(it - elements.begin());
}

RationalGroupoid rationals_groupoid(std::vector<Rat> support, int max_points) {
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  const int n = static_cast<int>(support.size());
  if (n > max_points) throw BoundError("support exceeds bound");

  RationalGroupoid Gd;
  Gd.support = support;
  // Domain and range k-subsets carry a unique increasing pairing.
  for (uint32_t dm = 0; dm < (1u << n); ++dm) {
    for (uint32_t rm = 0; rm < (1u << n); ++rm) {
      if (__builtin_popcount(dm) != __builtin_popcount(rm)) continue;
      std::vector<std::pair<Rat, Rat>> pairs;
      int j = 0;
      for (int i = 0; i < n; ++i) {
        if (!(dm & (1u << i))) continue;
        while (!(rm & (1u << j))) ++j;
        pairs.emplace_back(support[static_cast<size_t>(i)], support[static_cast<size_t>(j)]);
        ++j;
      }
      Gd.elements.push_back(PartialOrderMap::from_pairs(std::move(pairs)));
    }
  }
  std::sort(Gd.elements.begin(), Gd.elements.end(),
            [](const PartialOrderMap& x, const PartialOrderMap& y) {
              if (x.size() != y.size()) return x.size() < y.size();
              return x.pairs < y.pairs;
            });
  Gd.elements.erase(std::unique(Gd.elements.begin(), Gd.elements.end()), Gd.elements.end());
  return Gd;
}

GroupoidCoarse groupoid_to_coarse(const RationalGroupoid& Gd) {
  const int n = static_cast<int>(Gd.elements.size());
  std::vector<Triple> triples;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const PartialOrderMap prod = compose(Gd.elements[static_cast<size_t>(a)],
                                           Gd.elements[static_cast<size_t>(b)]);
      for (int c = 0; c < n; ++c)
        if (prod.extends(Gd.elements[static_cast<size_t>(c)])) triples.push_back({a, b, c});
    }
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n));
  for (const auto& m : Gd.elements) labels.push_back(m.label());
  return GroupoidCoarse{CoarseStructure(n, std::move(triples), std::move(labels)), Gd};
}

}  // namespace coarse
