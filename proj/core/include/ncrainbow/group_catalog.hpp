#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ncrainbow/group.hpp"

namespace ncrainbow {

struct NamedGroup {
  std::string id;
  Group group;
};

// The nine non-abelian groups of order 16.
std::vector<NamedGroup> order16_groups();

// The two extraspecial groups of order 32, as D8 o D8 and D8 o Q8.
std::vector<NamedGroup> extraspecial32_groups();

// Groups whose two-coloring failure bound is at least 1: the small dihedral
// and dicyclic groups, three products with Z3, all order-16 non-abelian
// groups and the two extraspecial groups of order 32.
std::vector<NamedGroup> exception_groups();

// Dihedral groups D_{2n} and dicyclic groups Q_{4m} of order at most
// `max_order` that are not in exception_groups().
std::vector<NamedGroup> non_exception_suite(std::size_t max_order);

}  // namespace ncrainbow
