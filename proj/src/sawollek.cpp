#include "vk/sawollek.hpp"

#include <cstdint>
#include <unordered_map>

namespace vk {

PolyMatrix sawollek_matrix(const GaussDiagram& d) {
  using P = LaurentPolynomial2;
  int m = d.length();
  PolyMatrix a(m, std::vector<P>(m));
  for (int k = 0; k < m; ++k) a[k][k] = P::constant(1);
  const P one = P::constant(1);
  const P positive[2][2] = {{one - P::monomial(1, 1, 1), P::x()}, {P::y(), P{}}};
  const P negative[2][2] = {{P{}, P::monomial(1, 0, -1)}, {P::monomial(1, -1, 0), one - P::monomial(1, -1, -1)}};
  for (int arrow = 0; arrow < d.size(); ++arrow) {
    int p = d.over_position(arrow);
    int q = d.under_position(arrow);
    int over_in = d.wrap(p - 1), over_out = p, under_in = d.wrap(q - 1), under_out = q;
    bool plus = d.sign(arrow) == Sign::Plus;
    int in[2] = {plus ? over_in : under_in, plus ? under_in : over_in};
    int out[2] = {plus ? under_out : over_out, plus ? over_out : under_out};
    const P(&block)[2][2] = plus ? positive : negative;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) a[out[i]][in[j]] -= block[i][j];
    }
  }
  return a;
}

LaurentPolynomial2 determinant(const PolyMatrix& input) {
  using P = LaurentPolynomial2;
  int n = static_cast<int>(input.size());
  if (n == 0) return P::constant(1);
  PolyMatrix a = input;
  P previous = P::constant(1);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    int pivot = k;
    while (pivot < n && a[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return P{};
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        P v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = v.divide_exact(previous);
      }
      a[i][k] = P{};
    }
    previous = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

LaurentPolynomial2 determinant_by_cofactors(const PolyMatrix& a) {
  using P = LaurentPolynomial2;
  int n = static_cast<int>(a.size());
  if (n > 62) throw Error(ErrorKind::Overflow, "matrix too large for cofactor expansion");
  std::unordered_map<std::uint64_t, P> memo;
  // det of rows [n - |cols|, n) restricted to the column set `cols`.
  auto rec = [&](auto& self, std::uint64_t cols) -> P {
    if (cols == 0) return P::constant(1);
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    int row = n - __builtin_popcountll(cols);
    P total;
    int parity = 0;
    for (int j = 0; j < n; ++j) {
      if (!((cols >> j) & 1)) continue;
      if (!a[row][j].is_zero()) {
        P minor = self(self, cols & ~(std::uint64_t{1} << j));
        if (!minor.is_zero()) {
          P term = a[row][j] * minor;
          if (parity) total -= term;
          else total += term;
        }
      }
      parity ^= 1;
    }
    memo.emplace(cols, total);
    return total;
  };
  std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return rec(rec, all);
}

LaurentPolynomial2 sawollek_raw(const GaussDiagram& d) {
  if (d.empty()) return LaurentPolynomial2{};
  return determinant(sawollek_matrix(d));
}

LaurentPolynomial2 normalize_sawollek(const LaurentPolynomial2& raw) {
  if (raw.is_zero()) return raw;
  int k = -raw.min_x();
  return raw.shifted(k, k);
}

LaurentPolynomial2 normalized_sawollek(const GaussDiagram& d) { return normalize_sawollek(sawollek_raw(d)); }

bool distinguishes_inverse(const GaussDiagram& d) { return normalized_sawollek(d) != normalized_sawollek(inverse(d)); }

}  // namespace vk
