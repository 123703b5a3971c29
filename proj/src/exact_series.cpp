#include "qmc/exact_series.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "qmc/errors.hpp"

namespace qmc {

std::string to_string(const ExactRational& r) {
  if (is_integral(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

namespace {
const ExactRational kZero{0};
}

TruncSeries::TruncSeries(std::size_t order) : coeffs_(order + 1) {}

TruncSeries::TruncSeries(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncSeries needs at least one coefficient");
}

TruncSeries TruncSeries::constant(const ExactRational& c, std::size_t order) {
  TruncSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncSeries TruncSeries::monomial(const ExactRational& c, std::size_t power, std::size_t order) {
  TruncSeries s(order);
  if (power <= order) s.coeffs_[power] = c;
  return s;
}

const ExactRational& TruncSeries::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

TruncSeries TruncSeries::truncated(std::size_t order) const {
  std::vector<ExactRational> c(order + 1);
  std::copy_n(coeffs_.begin(), std::min(order + 1, coeffs_.size()), c.begin());
  return TruncSeries(std::move(c));
}

bool TruncSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ExactRational& c) { return c == 0; });
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& rhs) {
  *this = *this * rhs;
  return *this;
}

TruncSeries& TruncSeries::operator*=(const ExactRational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
TruncSeries operator*(TruncSeries a, const ExactRational& s) { return a *= s; }
TruncSeries operator*(const ExactRational& s, TruncSeries a) { return a *= s; }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<ExactRational> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j] == 0) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return TruncSeries(std::move(c));
}

TruncSeries reciprocal(const TruncSeries& a) {
  if (a[0] == 0) throw ZeroConstantTerm();
  const std::size_t n = a.order();
  std::vector<ExactRational> b(n + 1);
  const ExactRational inv0 = 1 / a[0];
  b[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    ExactRational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (a[i] != 0) acc += a[i] * b[k - i];
    }
    b[k] = -acc * inv0;
  }
  return TruncSeries(std::move(b));
}

TruncSeries exp(const TruncSeries& a) {
  if (a[0] != 0) throw NonzeroConstantTerm();
  const std::size_t n = a.order();
  TruncSeries result = TruncSeries::one(n);
  TruncSeries power = TruncSeries::one(n);
  BigInt kfact = 1;
  // a^k vanishes below u^k, so terms past k = n contribute nothing.
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * a;
    kfact *= k;
    result += power * ExactRational(1, kfact);
  }
  return result;
}

TruncSeries pow(const TruncSeries& a, const BigInt& k) {
  if (k < 0) throw std::invalid_argument("negative series exponent");
  TruncSeries result = TruncSeries::one(a.order());
  TruncSeries base = a;
  BigInt e = k;
  while (e > 0) {
    if (bit_test(e, 0)) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

TruncSeries dilate(const TruncSeries& a, std::size_t d) {
  if (d == 0) throw std::invalid_argument("dilation factor must be positive");
  std::vector<ExactRational> c(a.order() + 1);
  for (std::size_t i = 0; i * d <= a.order(); ++i) c[i * d] = a[i];
  return TruncSeries(std::move(c));
}

TruncSeries geometric(const ExactRational& c, std::size_t d, std::size_t order) {
  if (d == 0) throw std::invalid_argument("geometric step must be positive");
  std::vector<ExactRational> coeffs(order + 1);
  ExactRational term = 1;
  for (std::size_t i = 0; i <= order; i += d) {
    coeffs[i] = term;
    term *= c;
  }
  return TruncSeries(std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const TruncSeries& s) {
  bool first = true;
  for (std::size_t i = 0; i <= s.order(); ++i) {
    if (s[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << to_string(s[i]);
    if (i > 0) os << "*u^" << i;
  }
  if (first) os << "0";
  return os << " + O(u^" << s.order() + 1 << ")";
}

}  // namespace qmc
