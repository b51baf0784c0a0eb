#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hopfpi/errors.hpp"

namespace hopfpi {

/// A finite group given by its Cayley table. Element 0 is the identity.
class GroupTable {
 public:
  using Table = std::vector<std::vector<std::size_t>>;

  std::size_t order() const { return table_.size(); }
  std::size_t mul(std::size_t g, std::size_t h) const { return table_.at(g).at(h); }
  std::size_t inv(std::size_t g) const { return inverse_.at(g); }
  static constexpr std::size_t identity() { return 0; }
  const Table& table() const { return table_; }

  bool operator==(const GroupTable& o) const { return table_ == o.table_; }

 private:
  friend GroupTable validate_group(Table table);

  Table table_;
  std::vector<std::size_t> inverse_;
};

/// Checks the group axioms in the order closure, inverse, identity,
/// associativity and throws NotAGroup naming the first failure.
///
/// The inverse scan covers the non-identity elements and asks for a unique
/// h with g*h = 0, which must also satisfy h*g = 0.
inline GroupTable validate_group(GroupTable::Table table) {
  const std::size_t n = table.size();
  if (n == 0) throw NotAGroup("closure", "empty table");
  for (std::size_t g = 0; g < n; ++g) {
    if (table[g].size() != n) throw NotAGroup("closure", "row " + std::to_string(g) + " has wrong length");
    for (std::size_t h = 0; h < n; ++h)
      if (table[g][h] >= n) throw NotAGroup("closure", "(" + std::to_string(g) + "," + std::to_string(h) + ")");
  }
  std::vector<std::size_t> inverse(n, 0);
  for (std::size_t g = 1; g < n; ++g) {
    std::size_t found = n;
    std::size_t count = 0;
    for (std::size_t h = 0; h < n; ++h)
      if (table[g][h] == 0) {
        found = h;
        ++count;
      }
    if (count != 1 || table[found][g] != 0) throw NotAGroup("inverse", std::to_string(g));
    inverse[g] = found;
  }
  for (std::size_t g = 0; g < n; ++g)
    if (table[0][g] != g || table[g][0] != g) throw NotAGroup("identity", std::to_string(g));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw NotAGroup("associativity", "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
  GroupTable out;
  out.table_ = std::move(table);
  out.inverse_ = std::move(inverse);
  return out;
}

inline GroupTable cyclic_group(std::size_t n) {
  GroupTable::Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return validate_group(std::move(t));
}

inline GroupTable trivial_group() { return cyclic_group(1); }

/// Permutations of {0,1,2} as images of 0,1,2.
inline const std::vector<std::vector<std::size_t>>& s3_permutations() {
  // e, (123), (132), (12), (13), (23)
  static const std::vector<std::vector<std::size_t>> perms = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
  return perms;
}

/// S3 with elements ordered e, (123), (132), (12), (13), (23) and product
/// (st)(i) = s(t(i)).
inline GroupTable symmetric_group_3() {
  const auto& p = s3_permutations();
  GroupTable::Table t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<std::size_t> c(3);
      for (std::size_t i = 0; i < 3; ++i) c[i] = p[a][p[b][i]];
      for (std::size_t k = 0; k < 6; ++k)
        if (p[k] == c) t[a][b] = k;
    }
  return validate_group(std::move(t));
}

inline int s3_sign(std::size_t g) { return g < 3 ? 1 : -1; }

}  // namespace hopfpi
