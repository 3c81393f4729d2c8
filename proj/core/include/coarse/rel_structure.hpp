#pragma once

#include <string>
#include <vector>

namespace coarse {

struct Relation {
  std::string name;
  int arity = 0;
  std::vector<std::vector<int>> tuples;  // sorted lexicographically
};

/// A finite relational structure over domain {0..domain_size-1}.
struct RelationalStructure {
  int domain_size = 0;
  std::vector<Relation> relations;
};

}  // namespace coarse
