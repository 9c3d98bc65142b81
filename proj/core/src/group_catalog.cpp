#include "ncrainbow/group_catalog.hpp"

#include <set>
#include <string>
#include <utility>

namespace ncrainbow {
namespace {

std::string dihedral_id(std::size_t n) { return "D" + std::to_string(2 * n); }
std::string dicyclic_id(std::size_t m) { return "Q" + std::to_string(4 * m); }

// Element index of a^k in cyclic(n), r^k in dihedral(n), a^k in dicyclic(m).
Element rotation(std::size_t k) { return static_cast<Element>(k); }

}  // namespace

std::vector<NamedGroup> order16_groups() {
  std::vector<NamedGroup> out;
  out.push_back({"D16", dihedral(8)});
  out.push_back({"SD16", metacyclic(8, 3)});
  out.push_back({"M16", metacyclic(8, 5)});
  out.push_back({"Q16", dicyclic(4)});
  out.push_back({"D8xZ2", direct_product(dihedral(4), cyclic(2))});
  out.push_back({"Q8xZ2", direct_product(dicyclic(2), cyclic(2))});

  // C4 x| C4, generator of the acting C4 inverts the normal C4.
  {
    const Group c4 = cyclic(4);
    std::vector<std::vector<Element>> action(4, std::vector<Element>(4));
    for (Element h = 0; h < 4; ++h)
      for (Element a = 0; a < 4; ++a)
        action[h][a] = h % 2 == 0 ? a : c4.inverse(a);
    out.push_back({"C4sdC4", semidirect_product(c4, c4, action)});
  }
  // (C2 x C2) x| C4, generator of C4 swaps the two C2 factors.
  {
    const Group v4 = direct_product(cyclic(2), cyclic(2));
    const Element swap[4] = {0, 2, 1, 3};  // (x,y) at 2x+y -> (y,x)
    std::vector<std::vector<Element>> action(4, std::vector<Element>(4));
    for (Element h = 0; h < 4; ++h)
      for (Element a = 0; a < 4; ++a) action[h][a] = h % 2 == 0 ? a : swap[a];
    out.push_back({"V4sdC4", semidirect_product(v4, cyclic(4), action)});
  }
  // Pauli group C4 o D8.
  out.push_back({"C4oD8", central_product(cyclic(4), dihedral(4), rotation(2), rotation(2))});
  return out;
}

std::vector<NamedGroup> extraspecial32_groups() {
  std::vector<NamedGroup> out;
  out.push_back({"D8oD8", central_product(dihedral(4), dihedral(4), rotation(2), rotation(2))});
  out.push_back({"D8oQ8", central_product(dihedral(4), dicyclic(2), rotation(2), rotation(2))});
  return out;
}

std::vector<NamedGroup> exception_groups() {
  std::vector<NamedGroup> out;
  out.push_back({"D6", dihedral(3)});
  out.push_back({"D8", dihedral(4)});
  out.push_back({"Q8", dicyclic(2)});
  out.push_back({"D10", dihedral(5)});
  out.push_back({"D12", dihedral(6)});
  out.push_back({"Q12", dicyclic(3)});
  out.push_back({"D14", dihedral(7)});
  out.push_back({"D6xZ3", direct_product(dihedral(3), cyclic(3))});
  out.push_back({"D8xZ3", direct_product(dihedral(4), cyclic(3))});
  out.push_back({"Q8xZ3", direct_product(dicyclic(2), cyclic(3))});
  for (auto& g : order16_groups()) out.push_back(std::move(g));
  for (auto& g : extraspecial32_groups()) out.push_back(std::move(g));
  return out;
}

std::vector<NamedGroup> non_exception_suite(std::size_t max_order) {
  std::set<std::string> excluded;
  for (const auto& g : exception_groups()) excluded.insert(g.id);
  std::vector<NamedGroup> out;
  for (std::size_t n = 3; 2 * n <= max_order; ++n)
    if (!excluded.contains(dihedral_id(n))) out.push_back({dihedral_id(n), dihedral(n)});
  for (std::size_t m = 2; 4 * m <= max_order; ++m)
    if (!excluded.contains(dicyclic_id(m))) out.push_back({dicyclic_id(m), dicyclic(m)});
  return out;
}

}  // namespace ncrainbow
