#include "coarse/perm.hpp"

#include <numeric>
#include <sstream>

#include "coarse/error.hpp"

namespace coarse {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
      throw StructureError("not a permutation");
    seen[static_cast<size_t>(v)] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> im(static_cast<size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  return Perm(std::move(im));
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[static_cast<size_t>(x)] != x) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> im(images_.size());
  for (int x = 0; x < degree(); ++x) im[static_cast<size_t>(images_[static_cast<size_t>(x)])] = x;
  return Perm(std::move(im));
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw StructureError("degree mismatch");
  std::vector<int> im(static_cast<size_t>(a.degree()));
  for (int x = 0; x < a.degree(); ++x) im[static_cast<size_t>(x)] = a(b(x));
  return Perm(std::move(im));
}

std::string Perm::cycles() const {
  std::ostringstream out;
  std::vector<char> done(images_.size(), 0);
  bool any = false;
  for (int start = 0; start < degree(); ++start) {
    if (done[static_cast<size_t>(start)] || images_[static_cast<size_t>(start)] == start) continue;
    any = true;
    out << '(';
    int x = start;
    bool first = true;
    while (!done[static_cast<size_t>(x)]) {
      done[static_cast<size_t>(x)] = 1;
      if (!first) out << ' ';
      out << x;
      first = false;
      x = images_[static_cast<size_t>(x)];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace coarse
