#pragma once

#include <compare>
#include <string>
#include <vector>

namespace coarse {

/// A permutation of {0..degree-1}, stored as its image array.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);  // validates bijectivity

  static Perm identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  /// Cycle notation, e.g. "(0 1)(2 4 3)"; the identity prints as "()".
  std::string cycles() const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> images_;
};

/// compose(a, b) applies b first: x -> a(b(x)).
Perm compose(const Perm& a, const Perm& b);

}  // namespace coarse
