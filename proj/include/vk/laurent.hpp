#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "vk/error.hpp"

namespace vk {

// Element of Z[x, 1/x, y, 1/y] with 64-bit coefficients; arithmetic throws Overflow rather than wrapping.
class LaurentPolynomial2 {
 public:
  using Exponent = std::pair<int, int>;
  using Terms = std::map<Exponent, std::int64_t>;

  LaurentPolynomial2() = default;
  static LaurentPolynomial2 constant(std::int64_t c) { return monomial(c, 0, 0); }
  static LaurentPolynomial2 monomial(std::int64_t c, int i, int j);
  static LaurentPolynomial2 x() { return monomial(1, 1, 0); }
  static LaurentPolynomial2 y() { return monomial(1, 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(int i, int j) const;

  int min_x() const;
  int max_x() const;
  int min_y() const;
  int max_y() const;

  LaurentPolynomial2 operator-() const;
  LaurentPolynomial2& operator+=(const LaurentPolynomial2& other);
  LaurentPolynomial2& operator-=(const LaurentPolynomial2& other);
  LaurentPolynomial2 scaled(std::int64_t c) const;
  LaurentPolynomial2 shifted(int di, int dj) const;
  // Swaps the roles of x and y.
  LaurentPolynomial2 transposed() const;
  // Substitutes x -> 1/x and y -> 1/y.
  LaurentPolynomial2 reciprocal() const;

  // Quotient of an exact division; throws InexactDivision otherwise.
  LaurentPolynomial2 divide_exact(const LaurentPolynomial2& divisor) const;

  friend LaurentPolynomial2 operator+(LaurentPolynomial2 a, const LaurentPolynomial2& b) { return a += b; }
  friend LaurentPolynomial2 operator-(LaurentPolynomial2 a, const LaurentPolynomial2& b) { return a -= b; }
  friend LaurentPolynomial2 operator*(const LaurentPolynomial2& a, const LaurentPolynomial2& b);
  friend bool operator==(const LaurentPolynomial2&, const LaurentPolynomial2&) = default;

  // Terms "c*x^i*y^j" in ascending (i, j) order joined by " + "; the zero polynomial is "0".
  std::string to_string() const;
  static LaurentPolynomial2 parse(std::string_view text);

 private:
  void add_term(const Exponent& e, std::int64_t c);
  Terms terms_;
};

}  // namespace vk
