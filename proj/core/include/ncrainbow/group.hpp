#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ncrainbow {

using Element = std::uint32_t;
inline constexpr Element kIdentity = 0;

// A subset of a group's elements, kept sorted. Used for centers and
// centralizers, so in practice always a subgroup.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::size_t group_order, std::vector<Element> members);

  std::size_t size() const noexcept { return members_.size(); }
  std::size_t group_order() const noexcept { return mask_.size(); }
  bool contains(Element e) const { return e < mask_.size() && mask_[e]; }
  std::span<const Element> members() const noexcept { return members_; }

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.members_ == b.members_ && a.mask_.size() == b.mask_.size();
  }

 private:
  std::vector<Element> members_;
  std::vector<bool> mask_;
};

// Finite group given by a validated Cayley table. The identity is always
// element 0. Immutable once built.
class Group {
 public:
  using Table = std::vector<std::vector<Element>>;

  // Validates the table (identity, inverses, Latin square, associativity)
  // and relabels so the identity sits at index 0. Empty `names` yields
  // generated names "g0", "g1", ... (after relabeling, "e" for identity).
  static Group from_cayley_table(const Table& table,
                                 std::vector<std::string> names = {});

  std::size_t order() const noexcept { return order_; }
  Element multiply(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inverse(Element a) const { return inverses_[a]; }
  Element power(Element a, std::int64_t exponent) const;
  std::size_t element_order(Element a) const;
  bool commute(Element a, Element b) const {
    return multiply(a, b) == multiply(b, a);
  }
  bool is_abelian() const;

  const std::string& name(Element a) const { return names_[a]; }
  std::span<const std::string> names() const noexcept { return names_; }
  Table table() const;

  friend bool operator==(const Group& a, const Group& b) {
    return a.order_ == b.order_ && a.table_ == b.table_ && a.names_ == b.names_;
  }

 private:
  Group(std::size_t order, std::vector<Element> flat,
        std::vector<std::string> names);

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::string> names_;
};

ElementSet center(const Group& g);
ElementSet centralizer(const Group& g, Element x);

Group cyclic(std::size_t n);
// D_{2n} = <r, s | r^n = s^2 = 1, srs = r^-1>; element r^i s^j at i + n*j.
Group dihedral(std::size_t n);
// Q_{4m} = <a, b | a^{2m} = 1, b^2 = a^m, bab^-1 = a^-1>; a^i b^j at i + 2m*j.
Group dicyclic(std::size_t m);
// <r, s | r^m = s^2 = 1, srs = r^t>; needs t^2 = 1 (mod m).
Group metacyclic(std::size_t m, std::int64_t t);
// Pairs (g, h) at index g*|H| + h.
Group direct_product(const Group& g, const Group& h);

// action[h] is a permutation of N's elements: the automorphism by which h
// acts. (n1,h1)(n2,h2) = (n1 * action[h1](n2), h1*h2), stored at n*|H| + h.
Group semidirect_product(const Group& n, const Group& h,
                         const std::vector<std::vector<Element>>& action);

// (G x H) / <(zG, zH^-1)> for central zG, zH of equal order. Cosets are
// represented by their least element index in G x H.
Group central_product(const Group& g, const Group& h, Element zg, Element zh);

}  // namespace ncrainbow
