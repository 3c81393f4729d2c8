#include "coarse/tower.hpp"

#include <numeric>
#include <sstream>

#include "coarse/error.hpp"

namespace coarse {

TowerReport validate_tower(const ProfiniteTower& T) {
  TowerReport rep;
  if (T.levels.empty()) {
    rep.valid = false;
    rep.message = "tower has no levels";
    return rep;
  }
  if (T.maps.size() + 1 != T.levels.size()) {
    rep.valid = false;
    rep.message = "expected one connecting map per adjacent level pair";
    return rep;
  }
  for (size_t k = 0; k < T.maps.size(); ++k) {
    const PermGroup& upper = T.levels[k + 1];
    const PermGroup& lower = T.levels[k];
    const std::vector<int>& p = T.maps[k];
    auto fail = [&](const std::string& what, std::pair<int, int> w) {
      rep.valid = false;
      rep.level = static_cast<int>(k);
      rep.witness = w;
      std::ostringstream os;
      os << "map " << k + 1 << "->" << k << ": " << what;
      rep.message = os.str();
      return rep;
    };
    if (static_cast<int>(p.size()) != upper.size())
      return fail("wrong domain size", {-1, -1});
    for (int i = 0; i < upper.size(); ++i)
      if (p[static_cast<size_t>(i)] < 0 || p[static_cast<size_t>(i)] >= lower.size())
        return fail("image index out of range", {i, -1});
    if (p[0] != lower.identity_index()) return fail("identity not sent to identity", {0, -1});
    for (int a = 0; a < upper.size(); ++a)
      for (int b = 0; b < upper.size(); ++b)
        if (p[static_cast<size_t>(upper.mul(a, b))] !=
            lower.mul(p[static_cast<size_t>(a)], p[static_cast<size_t>(b)]))
          return fail("not a homomorphism", {a, b});
    std::vector<char> hit(static_cast<size_t>(lower.size()), 0);
    for (int v : p) hit[static_cast<size_t>(v)] = 1;
    for (int j = 0; j < lower.size(); ++j)
      if (!hit[static_cast<size_t>(j)]) return fail("not surjective", {j, -1});
  }
  return rep;
}

std::vector<int> composite_map(const ProfiniteTower& T, int k) {
  const int top = T.top();
  std::vector<int> f(static_cast<size_t>(T.levels[static_cast<size_t>(top)].size()));
  std::iota(f.begin(), f.end(), 0);
  for (int j = top - 1; j >= k; --j)
    for (int& v : f) v = T.maps[static_cast<size_t>(j)][static_cast<size_t>(v)];
  return f;
}

}  // namespace coarse
