#pragma once

#include <cmath>

#include <doctest.h>

#include "renyilab/channels.hpp"
#include "renyilab/hyptest.hpp"

namespace testing {

using namespace renyilab;

inline StateFunctional diag_state(std::initializer_list<double> d) {
  RealVector v(static_cast<Index>(d.size()));
  Index i = 0;
  for (double x : d) v(i++) = x;
  return StateFunctional(HermitianMatrix::diagonal(v));
}

inline StateFunctional plus_state() {
  return StateFunctional::pure((ComplexVector(2) << 1.0, 1.0).finished() / std::sqrt(2.0));
}

inline ComplexMatrix diag_matrix(std::initializer_list<double> d) {
  RealVector v(static_cast<Index>(d.size()));
  Index i = 0;
  for (double x : d) v(i++) = x;
  return v.cast<cplx>().asDiagonal();
}

inline ComplexMatrix pauli_x() { return (ComplexMatrix(2, 2) << 0.0, 1.0, 1.0, 0.0).finished(); }

template <class F>
ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a renyilab::Error");
  return ErrorCode::ConfigError;
}

}  // namespace testing

#define CHECK_ERROR(expr, code) CHECK(::testing::error_code_of([&] { (void)(expr); }) == (code))
