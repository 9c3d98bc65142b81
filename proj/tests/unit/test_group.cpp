#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "ncrainbow/error.hpp"
#include "ncrainbow/group.hpp"
#include "ncrainbow/group_catalog.hpp"
#include "oracles.hpp"

using namespace ncrainbow;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kInternal;
}

// S3 as permutations of {0,1,2}, composed right to left.
Group::Table s3_table() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  Group::Table t(6, std::vector<Element>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      t[i][j] = static_cast<Element>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

std::vector<Group> built_groups() {
  std::vector<Group> gs = {cyclic(1), cyclic(6), dihedral(3), dihedral(4), dihedral(6),
                           dicyclic(2), dicyclic(3), metacyclic(8, 3), metacyclic(8, 5),
                           direct_product(dihedral(3), cyclic(3))};
  for (auto& g : order16_groups()) gs.push_back(g.group);
  for (auto& g : extraspecial32_groups()) gs.push_back(g.group);
  return gs;
}

}  // namespace

TEST_CASE("cayley table import") {
  const Group trivial = Group::from_cayley_table({{0}});
  CHECK(trivial.order() == 1);

  const Group s3 = Group::from_cayley_table(s3_table());
  CHECK(s3.order() == 6);
  CHECK(center(s3).size() == 1);
  CHECK(oracle::group_isomorphism(s3, dihedral(3)).has_value());

  SUBCASE("identity is moved to index 0") {
    // Z3 with the identity stored at index 2.
    const Group g = Group::from_cayley_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}, {"x", "y", "e"});
    CHECK(g.name(0) == "e");
    for (Element a = 0; a < 3; ++a) CHECK(g.multiply(0, a) == a);
  }
}

TEST_CASE("cayley table errors") {
  CHECK(code_of([] { Group::from_cayley_table({{0, 1}, {1}}); }) == ErrorCode::kMalformedTable);
  CHECK(code_of([] { Group::from_cayley_table({{0, 2}, {1, 0}}); }) == ErrorCode::kMalformedTable);
  CHECK(code_of([] { Group::from_cayley_table({{1, 0}, {0, 0}}); }) == ErrorCode::kNoIdentity);
  CHECK(code_of([] { Group::from_cayley_table({{0, 1, 2}, {1, 1, 1}, {2, 1, 1}}); }) ==
        ErrorCode::kNoInverse);
  // Latin square with identity 0 but (1*2)*3 != 1*(2*3).
  const Group::Table bad = {{0, 1, 2, 3, 4},
                            {1, 0, 3, 4, 2},
                            {2, 4, 0, 1, 3},
                            {3, 2, 4, 0, 1},
                            {4, 3, 1, 2, 0}};
  CHECK(code_of([&] { Group::from_cayley_table(bad); }) == ErrorCode::kAssociativityViolation);
}

TEST_CASE("cyclic") {
  CHECK(cyclic(1).order() == 1);
  CHECK(cyclic(3).is_abelian());
  CHECK(center(cyclic(3)).size() == 3);
  CHECK(cyclic(4).element_order(1) == 4);
  CHECK(center(cyclic(5)).size() == 5);
}

TEST_CASE("dihedral and dicyclic") {
  CHECK(dihedral(3).order() == 6);
  CHECK(center(dihedral(3)).size() == 1);
  CHECK(center(dihedral(4)).size() == 2);
  CHECK(center(dihedral(4)).contains(2));
  CHECK(center(dihedral(6)).size() == 2);
  for (std::size_t n = 3; n <= 12; ++n) CHECK(center(dihedral(n)).size() == (n % 2 ? 1 : 2));

  const Group q8 = dicyclic(2);
  CHECK(q8.order() == 8);
  CHECK(center(q8).size() == 2);
  const Element a = 1, b = 4;
  CHECK(q8.multiply(b, b) == q8.multiply(a, a));
  std::size_t involutions = 0;
  for (Element x = 1; x < 8; ++x) involutions += q8.element_order(x) == 2;
  CHECK(involutions == 1);
  CHECK(dicyclic(3).order() == 12);
}

TEST_CASE("metacyclic") {
  CHECK(oracle::group_isomorphism(metacyclic(8, 7), dihedral(8)).has_value());
  for (std::size_t m = 3; m <= 8; ++m)
    CHECK(oracle::group_isomorphism(metacyclic(m, static_cast<std::int64_t>(m) - 1), dihedral(m)));
  const Group sd16 = metacyclic(8, 3);
  CHECK(sd16.order() == 16);
  CHECK(center(sd16).size() == 2);
  CHECK(code_of([] { metacyclic(5, 2); }) == ErrorCode::kInvalidTwist);
  CHECK(metacyclic(8, -1).order() == 16);
}

TEST_CASE("direct product") {
  const Group g = direct_product(dihedral(3), cyclic(3));
  CHECK(g.order() == 18);
  CHECK(center(g).size() == 3);
  CHECK(direct_product(dicyclic(2), cyclic(3)).order() == 24);
  CHECK(oracle::group_isomorphism(direct_product(dihedral(4), cyclic(1)), dihedral(4)));
  const Group a = dihedral(4), b = dicyclic(3);
  CHECK(center(direct_product(a, b)).size() == center(a).size() * center(b).size());
}

TEST_CASE("semidirect product") {
  const Group z3 = cyclic(3), z2 = cyclic(2);
  const std::vector<std::vector<Element>> trivial = {{0, 1, 2}, {0, 1, 2}};
  CHECK(semidirect_product(z3, z2, trivial).table() == direct_product(z3, z2).table());

  const std::vector<std::vector<Element>> inversion = {{0, 1, 2}, {0, 2, 1}};
  CHECK(oracle::group_isomorphism(semidirect_product(z3, z2, inversion), dihedral(3)));

  // action(2) must be action(1) o action(1) = id, not inversion.
  const std::vector<std::vector<Element>> bad = {{0, 1, 2}, {0, 2, 1}, {0, 2, 1}};
  CHECK(code_of([&] { semidirect_product(z3, z3, bad); }) == ErrorCode::kNotHomomorphism);

  const std::vector<std::vector<Element>> not_auto = {{0, 1, 2}, {1, 0, 2}};
  CHECK(code_of([&] { semidirect_product(z3, z2, not_auto); }) == ErrorCode::kNotAutomorphism);
}

TEST_CASE("central product") {
  const Group d8 = dihedral(4), q8 = dicyclic(2);
  const Group dd = central_product(d8, d8, 2, 2);
  const Group dq = central_product(d8, q8, 2, 2);
  CHECK(dd.order() == 32);
  CHECK(dq.order() == 32);
  CHECK(center(dd).size() == 2);
  CHECK(center(dq).size() == 2);
  CHECK_FALSE(oracle::group_isomorphism(dd, dq).has_value());
  CHECK(code_of([&] { central_product(d8, d8, 1, 2); }) == ErrorCode::kNotCentral);
  CHECK(code_of([&] { central_product(d8, cyclic(4), 2, 1); }) == ErrorCode::kOrderMismatch);
}

TEST_CASE("centralizers") {
  const Group d6 = dihedral(3);
  CHECK(centralizer(d6, 1).size() == 3);
  CHECK(centralizer(d6, 3).size() == 2);
  CHECK(centralizer(d6, 0).size() == 6);
  for (const Group& g : built_groups()) {
    const ElementSet z = center(g);
    CHECK(z.contains(0));
    CHECK(z.size() == oracle::center_size(g));
    for (Element x = 0; x < g.order(); ++x) {
      const ElementSet c = centralizer(g, x);
      CHECK(g.order() % c.size() == 0);
      CHECK(c.contains(x));
      for (Element e : z) CHECK(c.contains(e));
    }
  }
}

TEST_CASE("built groups satisfy the table axioms") {
  for (const Group& g : built_groups()) {
    // Re-importing runs the full validation.
    const Group again = Group::from_cayley_table(g.table());
    CHECK(again.table() == g.table());
  }
}

TEST_CASE("catalog") {
  const auto order16 = order16_groups();
  CHECK(order16.size() == 9);
  for (const auto& g : order16) {
    CHECK(g.group.order() == 16);
    CHECK_FALSE(g.group.is_abelian());
  }
  // Pairwise non-isomorphic.
  for (std::size_t i = 0; i < order16.size(); ++i)
    for (std::size_t j = i + 1; j < order16.size(); ++j)
      CHECK_FALSE(oracle::group_isomorphism(order16[i].group, order16[j].group).has_value());

  const auto ids = [](const std::vector<NamedGroup>& gs) {
    std::vector<std::string> out;
    for (const auto& g : gs) out.push_back(g.id);
    return out;
  };
  const auto suite = ids(non_exception_suite(24));
  CHECK(suite == std::vector<std::string>{"D18", "D20", "D22", "D24", "Q20", "Q24"});
}
