// Shared test helpers: small builders for scalars and matrices so the test
// bodies read like the worked examples they encode.
#pragma once

#include <initializer_list>
#include <vector>

#include "nilrad/blockstruct.hpp"
#include "nilrad/matrix.hpp"

namespace testutil {

inline nilrad::Field Q() { return nilrad::Field::rationals(); }
inline nilrad::Field Fp(std::uint64_t p) { return nilrad::Field::prime(p); }

inline nilrad::Scalar sc(long long v, const nilrad::Field& f = Q()) {
  return nilrad::Scalar::from_int(f, v);
}

inline nilrad::Matrix mat(const nilrad::Field& f,
                          std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = rows.begin()->size();
  nilrad::Matrix m(f, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long long v : row) m.at(i, j++) = nilrad::Scalar::from_int(f, v);
    ++i;
  }
  return m;
}

/// Elementary matrix with a single 1, 1-based indices as in the worked
/// examples.
inline nilrad::Matrix unit1(const nilrad::Field& f, std::size_t d, std::size_t i, std::size_t j) {
  return nilrad::Matrix::unit(f, d, i - 1, j - 1);
}

inline nilrad::Shape shape(std::initializer_list<int> d) { return nilrad::Shape(std::vector<int>(d)); }

}  // namespace testutil
