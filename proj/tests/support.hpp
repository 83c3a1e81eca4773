#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ginv/matrix.hpp"

namespace ginv::test {

inline GaussianRational q(long num, long den = 1) { return Rational(num, den); }

/// Matrix from scalar text, e.g. gm({{"1", "1/2i"}, {"0", "-1"}}).
template <class S>
Matrix<S> parse_rows(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<S> data;
  std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  for (auto row : rows)
    for (const char* x : row) data.push_back(S::parse(x));
  return Matrix<S>(rows.size(), cols, std::move(data));
}

inline GMatrix gm(std::initializer_list<std::initializer_list<const char*>> rows) {
  return parse_rows<GaussianRational>(rows);
}
inline DMatrix dm(std::initializer_list<std::initializer_list<const char*>> rows) {
  return parse_rows<DualGaussian>(rows);
}

inline GMatrix e_unit(std::size_t n, std::size_t i, std::size_t j) { return GMatrix::unit(n, n, i, j); }
inline DMatrix eps_unit(std::size_t n, std::size_t i, std::size_t j) { return DMatrix::unit(n, n, i, j, DualGaussian::eps()); }

}  // namespace ginv::test
