#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "hopfpi/hopfpi.hpp"

namespace testing_support {

using hopfpi::Matrix;
using hopfpi::Rational;
using Q = hopfpi::Rational;

template <class K = Q>
Matrix<K> mat(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix<K> m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long x : row) m(i, j++) = K(x);
    ++i;
  }
  return m;
}

template <class K = Q>
std::vector<K> vec(std::initializer_list<long> xs) {
  std::vector<K> v;
  for (long x : xs) v.push_back(K(x));
  return v;
}

/// Small integer entries, sparse enough that random matrices are often singular.
template <class K = Q>
Matrix<K> random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix<K> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = K(d(rng));
  return m;
}

}  // namespace testing_support
