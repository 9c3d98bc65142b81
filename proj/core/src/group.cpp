#include "ncrainbow/group.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "ncrainbow/error.hpp"

namespace ncrainbow {
namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

std::string power_name(const std::string& base, std::size_t exponent) {
  if (exponent == 0) return "";
  if (exponent == 1) return base;
  return base + "^" + std::to_string(exponent);
}

// "r^i*s^j" style naming shared by the two-generator constructors.
std::string word_name(const std::string& first, std::size_t i,
                      const std::string& second, std::size_t j) {
  std::string a = power_name(first, i);
  std::string b = power_name(second, j);
  if (a.empty() && b.empty()) return "e";
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "*" + b;
}

std::size_t mod(std::int64_t value, std::size_t m) {
  const auto sm = static_cast<std::int64_t>(m);
  return static_cast<std::size_t>(((value % sm) + sm) % sm);
}

Group from_product_rule(std::size_t order, std::vector<std::string> names,
                        auto&& product) {
  Group::Table table(order, std::vector<Element>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      table[a][b] = static_cast<Element>(product(a, b));
  return Group::from_cayley_table(table, std::move(names));
}

}  // namespace

ElementSet::ElementSet(std::size_t group_order, std::vector<Element> members)
    : members_(std::move(members)), mask_(group_order, false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Element e : members_) {
    if (e >= group_order)
      throw Error(ErrorCode::kInvalidArgument,
                  "element " + idx(e) + " out of range for group of order " +
                      idx(group_order));
    mask_[e] = true;
  }
}

Group::Group(std::size_t order, std::vector<Element> flat,
             std::vector<std::string> names)
    : order_(order), table_(std::move(flat)), inverses_(order),
      names_(std::move(names)) {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      if (table_[a * order_ + b] == kIdentity) inverses_[a] = static_cast<Element>(b);
}

Group Group::from_cayley_table(const Table& table,
                               std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::kMalformedTable, "empty Cayley table");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw Error(ErrorCode::kMalformedTable,
                  "row " + idx(i) + " has " + idx(table[i].size()) +
                      " entries, expected " + idx(n));
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] >= n)
        throw Error(ErrorCode::kMalformedTable,
                    "entry (" + idx(i) + "," + idx(j) + ") = " +
                        idx(table[i][j]) + " out of range");
  }
  if (!names.empty() && names.size() != n)
    throw Error(ErrorCode::kMalformedTable,
                "expected " + idx(n) + " names, got " + idx(names.size()));

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      ok = table[e][j] == j && table[j][e] == j;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorCode::kNoIdentity, "no two-sided identity element");
  const std::size_t e = *identity;

  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j)
      found = table[i][j] == e && table[j][i] == e;
    if (!found)
      throw Error(ErrorCode::kNoInverse, "element " + idx(i) + " has no inverse");
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      if (row_seen[table[i][j]])
        throw Error(ErrorCode::kNotLatinSquare,
                    "row " + idx(i) + " repeats value " + idx(table[i][j]));
      if (col_seen[table[j][i]])
        throw Error(ErrorCode::kNotLatinSquare,
                    "column " + idx(i) + " repeats value " + idx(table[j][i]));
      row_seen[table[i][j]] = true;
      col_seen[table[j][i]] = true;
    }
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorCode::kAssociativityViolation,
                      "(" + idx(a) + "*" + idx(b) + ")*" + idx(c) + " != " +
                          idx(a) + "*(" + idx(b) + "*" + idx(c) + ")");

  // Swap the identity into slot 0.
  std::vector<std::size_t> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::swap(relabel[0], relabel[e]);
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      flat[relabel[a] * n + relabel[b]] =
          static_cast<Element>(relabel[table[a][b]]);

  if (names.empty()) {
    names.resize(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = i == 0 ? "e" : "g" + idx(i);
  } else {
    std::swap(names[0], names[e]);
  }
  return Group(n, std::move(flat), std::move(names));
}

Element Group::power(Element a, std::int64_t exponent) const {
  if (exponent < 0) {
    a = inverse(a);
    exponent = -exponent;
  }
  Element result = kIdentity;
  for (std::int64_t i = 0; i < exponent; ++i) result = multiply(result, a);
  return result;
}

std::size_t Group::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != kIdentity; x = multiply(x, a)) ++k;
  return k;
}

bool Group::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (!commute(a, b)) return false;
  return true;
}

Group::Table Group::table() const {
  Table t(order_, std::vector<Element>(order_));
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) t[a][b] = table_[a * order_ + b];
  return t;
}

ElementSet center(const Group& g) {
  std::vector<Element> members;
  for (Element z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Element x = 0; x < g.order() && central; ++x) central = g.commute(z, x);
    if (central) members.push_back(z);
  }
  return ElementSet(g.order(), std::move(members));
}

ElementSet centralizer(const Group& g, Element x) {
  if (x >= g.order())
    throw Error(ErrorCode::kInvalidArgument, "element " + idx(x) + " out of range");
  std::vector<Element> members;
  for (Element y = 0; y < g.order(); ++y)
    if (g.commute(x, y)) members.push_back(y);
  return ElementSet(g.order(), std::move(members));
}

Group cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "cyclic group needs n >= 1");
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = i == 0 ? "e" : power_name("a", i);
  return from_product_rule(n, std::move(names),
                           [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

Group dihedral(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "dihedral group needs n >= 3");
  std::vector<std::string> names(2 * n);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < n; ++i) names[i + n * j] = word_name("r", i, "s", j);
  // (r^i s^a)(r^j s^b) = r^(i + (-1)^a j) s^(a+b)
  return from_product_rule(2 * n, std::move(names), [n](std::size_t x, std::size_t y) {
    const std::size_t i = x % n, a = x / n, j = y % n, b = y / n;
    const std::size_t rot = a == 0 ? (i + j) % n : (i + n - j) % n;
    return rot + n * ((a + b) % 2);
  });
}

Group dicyclic(std::size_t m) {
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "dicyclic group needs m >= 2");
  const std::size_t n = 2 * m;
  std::vector<std::string> names(2 * n);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < n; ++i) names[i + n * j] = word_name("a", i, "b", j);
  // b a^j = a^-j b and b^2 = a^m.
  return from_product_rule(2 * n, std::move(names), [n, m](std::size_t x, std::size_t y) {
    const std::size_t i = x % n, a = x / n, j = y % n, b = y / n;
    std::size_t rot = a == 0 ? (i + j) % n : (i + n - j) % n;
    if (a == 1 && b == 1) rot = (rot + m) % n;
    return rot + n * ((a + b) % 2);
  });
}

Group metacyclic(std::size_t m, std::int64_t t) {
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "metacyclic group needs m >= 1");
  const std::size_t tm = mod(t, m);
  if ((tm * tm) % m != 1 % m)
    throw Error(ErrorCode::kInvalidTwist,
                "t = " + std::to_string(t) + " does not satisfy t^2 = 1 mod " + idx(m));
  std::vector<std::string> names(2 * m);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < m; ++i) names[i + m * j] = word_name("r", i, "s", j);
  // s r^j = r^(t j) s
  return from_product_rule(2 * m, std::move(names), [m, tm](std::size_t x, std::size_t y) {
    const std::size_t i = x % m, a = x / m, j = y % m, b = y / m;
    const std::size_t twisted = a == 0 ? j : (tm * j) % m;
    return (i + twisted) % m + m * ((a + b) % 2);
  });
}

Group direct_product(const Group& g, const Group& h) {
  const std::size_t nh = h.order();
  std::vector<std::string> names(g.order() * nh);
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < nh; ++b)
      names[a * nh + b] = "(" + g.name(a) + "," + h.name(b) + ")";
  return from_product_rule(g.order() * nh, std::move(names),
                           [&](std::size_t x, std::size_t y) {
                             const auto gx = static_cast<Element>(x / nh);
                             const auto hx = static_cast<Element>(x % nh);
                             const auto gy = static_cast<Element>(y / nh);
                             const auto hy = static_cast<Element>(y % nh);
                             return g.multiply(gx, gy) * nh + h.multiply(hx, hy);
                           });
}

Group semidirect_product(const Group& n, const Group& h,
                         const std::vector<std::vector<Element>>& action) {
  const std::size_t nn = n.order(), nh = h.order();
  if (action.size() != nh)
    throw Error(ErrorCode::kInvalidArgument,
                "action has " + idx(action.size()) + " entries, expected " + idx(nh));
  for (std::size_t x = 0; x < nh; ++x) {
    const auto& phi = action[x];
    if (phi.size() != nn)
      throw Error(ErrorCode::kNotAutomorphism,
                  "action of " + h.name(static_cast<Element>(x)) + " has wrong length");
    std::vector<bool> seen(nn, false);
    for (Element v : phi) {
      if (v >= nn || seen[v])
        throw Error(ErrorCode::kNotAutomorphism,
                    "action of " + h.name(static_cast<Element>(x)) + " is not a bijection");
      seen[v] = true;
    }
    for (Element a = 0; a < nn; ++a)
      for (Element b = 0; b < nn; ++b)
        if (phi[n.multiply(a, b)] != n.multiply(phi[a], phi[b]))
          throw Error(ErrorCode::kNotAutomorphism,
                      "action of " + h.name(static_cast<Element>(x)) +
                          " does not respect " + idx(a) + "*" + idx(b));
  }
  for (Element x = 0; x < nh; ++x)
    for (Element y = 0; y < nh; ++y) {
      const auto& composite = action[h.multiply(x, y)];
      for (Element a = 0; a < nn; ++a)
        if (composite[a] != action[x][action[y][a]])
          throw Error(ErrorCode::kNotHomomorphism,
                      "action(" + h.name(x) + "*" + h.name(y) + ") != action(" +
                          h.name(x) + ") o action(" + h.name(y) + ")");
    }

  std::vector<std::string> names(nn * nh);
  for (Element a = 0; a < nn; ++a)
    for (Element b = 0; b < nh; ++b)
      names[a * nh + b] = "(" + n.name(a) + "," + h.name(b) + ")";
  return from_product_rule(nn * nh, std::move(names), [&](std::size_t x, std::size_t y) {
    const auto n1 = static_cast<Element>(x / nh), h1 = static_cast<Element>(x % nh);
    const auto n2 = static_cast<Element>(y / nh), h2 = static_cast<Element>(y % nh);
    return n.multiply(n1, action[h1][n2]) * nh + h.multiply(h1, h2);
  });
}

Group central_product(const Group& g, const Group& h, Element zg, Element zh) {
  if (zg >= g.order() || zh >= h.order())
    throw Error(ErrorCode::kInvalidArgument, "central product element out of range");
  if (!center(g).contains(zg))
    throw Error(ErrorCode::kNotCentral, g.name(zg) + " is not central in the first factor");
  if (!center(h).contains(zh))
    throw Error(ErrorCode::kNotCentral, h.name(zh) + " is not central in the second factor");
  const std::size_t k = g.element_order(zg);
  if (k != h.element_order(zh))
    throw Error(ErrorCode::kOrderMismatch,
                "identified elements have orders " + idx(k) + " and " +
                    idx(h.element_order(zh)));

  const Group product = direct_product(g, h);
  const std::size_t nh = h.order();
  const auto generator = static_cast<Element>(zg * nh + h.inverse(zh));
  std::vector<Element> kernel;
  for (Element x = kIdentity;;) {
    kernel.push_back(x);
    x = product.multiply(x, generator);
    if (x == kIdentity) break;
  }

  // Coset representative = least index in the coset; quotient elements are
  // numbered by ascending representative.
  const std::size_t total = product.order();
  std::vector<Element> rep(total);
  for (Element x = 0; x < total; ++x) {
    Element least = x;
    for (Element z : kernel) least = std::min(least, product.multiply(x, z));
    rep[x] = least;
  }
  std::vector<Element> reps;
  for (Element x = 0; x < total; ++x)
    if (rep[x] == x) reps.push_back(x);
  std::vector<Element> quotient_index(total);
  for (Element x = 0; x < total; ++x)
    quotient_index[x] = static_cast<Element>(
        std::lower_bound(reps.begin(), reps.end(), rep[x]) - reps.begin());

  std::vector<std::string> names;
  names.reserve(reps.size());
  for (Element r : reps) names.push_back(product.name(r));
  return from_product_rule(reps.size(), std::move(names),
                           [&](std::size_t a, std::size_t b) {
                             return quotient_index[product.multiply(reps[a], reps[b])];
                           });
}

}  // namespace ncrainbow
