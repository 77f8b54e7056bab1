#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "koszul/errors.hpp"
#include "koszul/koszul.hpp"
#include "koszul/matrix.hpp"
#include "koszul/poly.hpp"
#include "koszul/scalar.hpp"

namespace koszul::test {

inline Matrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<GaussianRational>> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (const char* s : r) out.back().push_back(parse_gaussian(s));
  }
  return Matrix::from_exact_rows(out);
}

inline Matrix imat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<GaussianRational>> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (long v : r) out.back().emplace_back(v);
  }
  return Matrix::from_exact_rows(out);
}

/// Lower shift on C^d.
inline Matrix jordan(std::size_t d, Backend backend = Backend::Exact) {
  Matrix m = Matrix::zeros(d, d, backend);
  for (std::size_t i = 1; i < d; ++i) m.set(i, i - 1, Scalar::one(backend));
  return m;
}

inline std::vector<Polynomial> sys(const std::string& text, std::size_t n = 0) {
  return parse_system(text, n == 0 ? infer_variable_count(text) : n);
}

inline std::vector<GaussianRational> pt(const std::string& text) { return parse_point(text); }

inline void expect_code(ErrorCode code, const std::function<void()>& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace koszul::test
