#include "vk/laurent.hpp"

#include <algorithm>
#include <charconv>
#include <climits>

namespace vk {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "coefficient addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "coefficient multiplication");
  return r;
}

std::int64_t checked_neg(std::int64_t a) {
  if (a == INT64_MIN) throw Error(ErrorKind::Overflow, "coefficient negation");
  return -a;
}

}  // namespace

LaurentPolynomial2 LaurentPolynomial2::monomial(std::int64_t c, int i, int j) {
  LaurentPolynomial2 p;
  if (c != 0) p.terms_[{i, j}] = c;
  return p;
}

std::int64_t LaurentPolynomial2::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPolynomial2::min_x() const { return terms_.empty() ? 0 : terms_.begin()->first.first; }
int LaurentPolynomial2::max_x() const { return terms_.empty() ? 0 : terms_.rbegin()->first.first; }

int LaurentPolynomial2::min_y() const {
  int m = INT_MAX;
  for (auto& [e, c] : terms_) m = std::min(m, e.second);
  return terms_.empty() ? 0 : m;
}

int LaurentPolynomial2::max_y() const {
  int m = INT_MIN;
  for (auto& [e, c] : terms_) m = std::max(m, e.second);
  return terms_.empty() ? 0 : m;
}

void LaurentPolynomial2::add_term(const Exponent& e, std::int64_t c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (fresh) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

LaurentPolynomial2 LaurentPolynomial2::operator-() const {
  LaurentPolynomial2 p;
  for (auto& [e, c] : terms_) p.terms_[e] = checked_neg(c);
  return p;
}

LaurentPolynomial2& LaurentPolynomial2::operator+=(const LaurentPolynomial2& other) {
  for (auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial2& LaurentPolynomial2::operator-=(const LaurentPolynomial2& other) {
  for (auto& [e, c] : other.terms_) add_term(e, checked_neg(c));
  return *this;
}

LaurentPolynomial2 LaurentPolynomial2::scaled(std::int64_t k) const {
  LaurentPolynomial2 p;
  if (k == 0) return p;
  for (auto& [e, c] : terms_) p.terms_[e] = checked_mul(c, k);
  return p;
}

LaurentPolynomial2 LaurentPolynomial2::shifted(int di, int dj) const {
  LaurentPolynomial2 p;
  for (auto& [e, c] : terms_) p.terms_[{e.first + di, e.second + dj}] = c;
  return p;
}

LaurentPolynomial2 LaurentPolynomial2::transposed() const {
  LaurentPolynomial2 p;
  for (auto& [e, c] : terms_) p.terms_[{e.second, e.first}] = c;
  return p;
}

LaurentPolynomial2 LaurentPolynomial2::reciprocal() const {
  LaurentPolynomial2 p;
  for (auto& [e, c] : terms_) p.terms_[{-e.first, -e.second}] = c;
  return p;
}

LaurentPolynomial2 operator*(const LaurentPolynomial2& a, const LaurentPolynomial2& b) {
  LaurentPolynomial2 p;
  for (auto& [ea, ca] : a.terms_) {
    for (auto& [eb, cb] : b.terms_) p.add_term({ea.first + eb.first, ea.second + eb.second}, checked_mul(ca, cb));
  }
  return p;
}

LaurentPolynomial2 LaurentPolynomial2::divide_exact(const LaurentPolynomial2& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::InexactDivision, "division by zero");
  LaurentPolynomial2 quotient;
  if (is_zero()) return quotient;
  // Exponents of an exact quotient lie in the difference of the two exponent boxes.
  const int lo_i = min_x() - divisor.min_x(), hi_i = max_x() - divisor.max_x();
  const int lo_j = min_y() - divisor.min_y(), hi_j = max_y() - divisor.max_y();
  LaurentPolynomial2 rest = *this;
  const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
  while (!rest.is_zero()) {
    const auto& [e, c] = *rest.terms_.rbegin();
    int i = e.first - lead_e.first;
    int j = e.second - lead_e.second;
    if (c % lead_c != 0 || i < lo_i || i > hi_i || j < lo_j || j > hi_j) {
      throw Error(ErrorKind::InexactDivision, to_string() + " by " + divisor.to_string());
    }
    LaurentPolynomial2 t = monomial(c / lead_c, i, j);
    quotient += t;
    rest -= t * divisor;
  }
  return quotient;
}

std::string LaurentPolynomial2::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + "*x^" + std::to_string(e.first) + "*y^" + std::to_string(e.second);
  }
  return out;
}

LaurentPolynomial2 LaurentPolynomial2::parse(std::string_view text) {
  auto bad = [&]() { return Error(ErrorKind::SyntaxError, "polynomial '" + std::string(text) + "'"); };
  LaurentPolynomial2 p;
  if (text == "0") return p;
  auto read_int = [&](std::string_view& s, auto& value) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc()) throw bad();
    s.remove_prefix(ptr - s.data());
  };
  auto expect = [&](std::string_view& s, std::string_view lit) {
    if (s.substr(0, lit.size()) != lit) throw bad();
    s.remove_prefix(lit.size());
  };
  std::string_view s = text;
  while (true) {
    std::int64_t c;
    int i, j;
    read_int(s, c);
    expect(s, "*x^");
    read_int(s, i);
    expect(s, "*y^");
    read_int(s, j);
    if (c == 0) throw bad();
    p.add_term({i, j}, c);
    if (s.empty()) break;
    expect(s, " + ");
  }
  return p;
}

}  // namespace vk
