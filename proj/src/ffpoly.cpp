#include "qmc/ffpoly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "qmc/errors.hpp"

namespace qmc {

int moebius(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("moebius needs n >= 1");
  int sign = 1;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    while (n % d == 0) n /= d;
    result -= result / d;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

BigInt nu_irreducible(const PrimePower& q, std::size_t d) {
  if (d == 0) throw std::invalid_argument("nu_irreducible needs d >= 1");
  BigInt total = 0;
  for (std::int64_t e : divisors(static_cast<std::int64_t>(d))) {
    const int mu = moebius(static_cast<std::int64_t>(d) / e);
    if (mu != 0) total += mu * ipow(q.big(), static_cast<std::uint64_t>(e));
  }
  return total / d;
}

std::int64_t mult_order(std::int64_t q, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("mult_order needs m >= 1");
  if (std::gcd(q, m) != 1) {
    throw NotCoprime("gcd(" + std::to_string(q) + ", " + std::to_string(m) + ") > 1");
  }
  if (m == 1) return 1;
  const std::int64_t base = q % m;
  std::int64_t acc = base;
  std::int64_t t = 1;
  while (acc != 1) {
    acc = static_cast<std::int64_t>((static_cast<__int128>(acc) * base) % m);
    ++t;
  }
  return t;
}

std::vector<std::int64_t> cyclotomic_factor_type(const PrimePower& q, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("cyclotomic_factor_type needs k >= 1");
  if (k % q.p() == 0) {
    throw NotCoprime("characteristic " + std::to_string(q.p()) + " divides k = " + std::to_string(k));
  }
  std::vector<std::int64_t> degrees;
  for (std::int64_t m : divisors(k)) {
    const std::int64_t t = mult_order(q.q(), m);
    const std::int64_t copies = euler_phi(m) / t;
    degrees.insert(degrees.end(), static_cast<std::size_t>(copies), t);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

// ---------------------------------------------------------------------------
// Prime-field polynomial helpers used while constructing extension fields.

namespace {

using IntPoly = std::vector<std::int64_t>;

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

std::int64_t inverse_mod_prime(std::int64_t a, std::int64_t p) {
  // a^{p-2}
  std::int64_t result = 1, base = mod(a, p);
  for (std::int64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

IntPoly int_poly_rem(IntPoly a, const IntPoly& b, std::int64_t p) {
  trim(a);
  const std::int64_t lead_inv = inverse_mod_prime(b.back(), p);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const std::int64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - c * b[i], p);
    trim(a);
  }
  return a;
}

// Visits every monic polynomial of the given degree over F_p in
// lexicographic order of (c_0, c_1, ..., c_{deg-1}); stops when fn returns true.
template <typename Fn>
bool for_each_monic(std::size_t deg, std::int64_t p, Fn&& fn) {
  IntPoly poly(deg + 1, 0);
  poly[deg] = 1;
  while (true) {
    if (fn(static_cast<const IntPoly&>(poly))) return true;
    // Odometer with c_{deg-1} varying fastest.
    std::size_t i = deg;
    while (i > 0) {
      --i;
      if (++poly[i] < p) break;
      poly[i] = 0;
      if (i == 0) return false;
    }
    if (deg == 0) return false;
  }
}

}  // namespace

bool is_irreducible_over_prime(std::span<const std::int64_t> monic, std::int64_t p) {
  const std::size_t deg = monic.size() - 1;
  if (deg == 0) return false;
  const IntPoly target(monic.begin(), monic.end());
  for (std::size_t d = 1; d < deg; ++d) {
    const bool has_divisor = for_each_monic(d, p, [&](const IntPoly& cand) {
      return int_poly_rem(target, cand, p).empty();
    });
    if (has_divisor) return false;
  }
  return true;
}

FieldSpec FieldSpec::build(std::int64_t p, int e) {
  const PrimePower q(p, e);
  if (q.q() > 256) throw std::invalid_argument("FieldSpec supports q <= 256");
  IntPoly modulus;
  if (e == 1) {
    modulus = {0, 1};
  } else {
    for_each_monic(static_cast<std::size_t>(e), p, [&](const IntPoly& cand) {
      if (!is_irreducible_over_prime(cand, p)) return false;
      modulus = cand;
      return true;
    });
  }
  return FieldSpec(q, std::move(modulus));
}

FieldSpec::FieldSpec(PrimePower q, std::vector<std::int64_t> modulus)
    : q_(q), modulus_(std::move(modulus)) {
  const std::int64_t p = q_.p();
  const std::size_t e = static_cast<std::size_t>(q_.e());
  const std::size_t n = static_cast<std::size_t>(q_.q());

  auto digits = [&](std::size_t v) {
    IntPoly d(e);
    for (std::size_t i = 0; i < e; ++i) {
      d[i] = static_cast<std::int64_t>(v % static_cast<std::size_t>(p));
      v /= static_cast<std::size_t>(p);
    }
    return d;
  };
  auto encode = [&](const IntPoly& d) {
    std::size_t v = 0;
    for (std::size_t i = d.size(); i > 0; --i) v = v * static_cast<std::size_t>(p) + static_cast<std::size_t>(d[i - 1]);
    return static_cast<Element>(v);
  };

  add_.resize(n * n);
  sub_.resize(n * n);
  mul_.resize(n * n);
  inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const IntPoly da = digits(a);
    for (std::size_t b = 0; b < n; ++b) {
      const IntPoly db = digits(b);
      IntPoly s(e), t(e);
      for (std::size_t i = 0; i < e; ++i) {
        s[i] = mod(da[i] + db[i], p);
        t[i] = mod(da[i] - db[i], p);
      }
      add_[a * n + b] = encode(s);
      sub_[a * n + b] = encode(t);

      IntPoly prod(2 * e, 0);
      for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j < e; ++j) prod[i + j] = mod(prod[i + j] + da[i] * db[j], p);
      IntPoly r = e == 1 ? IntPoly{prod[0]} : int_poly_rem(prod, modulus_, p);
      r.resize(e, 0);
      mul_[a * n + b] = encode(r);
      if (mul_[a * n + b] == 1) inv_[a] = static_cast<Element>(b);
    }
  }
}

Element FieldSpec::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero field element");
  return inv_[a];
}

Element FieldSpec::from_int(std::int64_t m) const { return static_cast<Element>(mod(m, p())); }

// ---------------------------------------------------------------------------
// Polynomials over F_q

namespace {
void trim(std::vector<Element>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

FqPoly::FqPoly(std::vector<Element> c) : coeffs(std::move(c)) { trim(coeffs); }

FqPoly poly_add(const FqPoly& a, const FqPoly& b, const FieldSpec& f) {
  std::vector<Element> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Element x = i < a.coeffs.size() ? a.coeffs[i] : 0;
    const Element y = i < b.coeffs.size() ? b.coeffs[i] : 0;
    c[i] = f.add(x, y);
  }
  return FqPoly(std::move(c));
}

FqPoly poly_sub(const FqPoly& a, const FqPoly& b, const FieldSpec& f) {
  std::vector<Element> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Element x = i < a.coeffs.size() ? a.coeffs[i] : 0;
    const Element y = i < b.coeffs.size() ? b.coeffs[i] : 0;
    c[i] = f.sub(x, y);
  }
  return FqPoly(std::move(c));
}

FqPoly poly_mul(const FqPoly& a, const FqPoly& b, const FieldSpec& f) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Element> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      c[i + j] = f.add(c[i + j], f.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return FqPoly(std::move(c));
}

FqPoly poly_scale(const FqPoly& a, Element c, const FieldSpec& f) {
  std::vector<Element> r(a.coeffs);
  for (auto& x : r) x = f.mul(x, c);
  return FqPoly(std::move(r));
}

std::pair<FqPoly, FqPoly> poly_divmod(const FqPoly& a, const FqPoly& b, const FieldSpec& f) {
  if (b.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  std::vector<Element> rem = a.coeffs;
  const std::size_t db = b.coeffs.size() - 1;
  std::vector<Element> quot(rem.size() >= b.coeffs.size() ? rem.size() - db : 0, 0);
  const Element lead_inv = f.inv(b.lead());
  while (rem.size() >= b.coeffs.size()) {
    const Element c = f.mul(rem.back(), lead_inv);
    const std::size_t shift = rem.size() - 1 - db;
    quot[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) rem[shift + i] = f.sub(rem[shift + i], f.mul(c, b.coeffs[i]));
    trim(rem);
  }
  return {FqPoly(std::move(quot)), FqPoly(std::move(rem))};
}

FqPoly poly_monic(const FqPoly& a, const FieldSpec& f) {
  if (a.is_zero()) return a;
  return poly_scale(a, f.inv(a.lead()), f);
}

FqPoly poly_gcd(const FqPoly& a, const FqPoly& b, const FieldSpec& f) {
  if (a.is_zero() && b.is_zero()) throw ZeroPolynomial("gcd(0, 0) is undefined");
  FqPoly x = a, y = b;
  while (!y.is_zero()) {
    FqPoly r = poly_divmod(x, y, f).second;
    x = std::move(y);
    y = std::move(r);
  }
  return poly_monic(x, f);
}

FqPoly poly_derivative(const FqPoly& a, const FieldSpec& f) {
  if (a.coeffs.size() <= 1) return {};
  std::vector<Element> d(a.coeffs.size() - 1);
  for (std::size_t i = 1; i < a.coeffs.size(); ++i) {
    d[i - 1] = f.mul(f.from_int(static_cast<std::int64_t>(i)), a.coeffs[i]);
  }
  return FqPoly(std::move(d));
}

bool squarefree_test(const FqPoly& a, const FieldSpec& f) {
  if (a.is_zero()) throw ZeroPolynomial("squarefree_test of the zero polynomial");
  return poly_gcd(a, poly_derivative(a, f), f).degree() == 0;
}

Element poly_eval(const FqPoly& a, Element x, const FieldSpec& f) {
  Element acc = 0;
  for (std::size_t i = a.coeffs.size(); i > 0; --i) acc = f.add(f.mul(acc, x), a.coeffs[i - 1]);
  return acc;
}

std::ostream& operator<<(std::ostream& os, const FqPoly& a) {
  if (a.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t i = a.coeffs.size(); i > 0; --i) {
    const std::size_t k = i - 1;
    const int c = a.coeffs[k];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "z";
    if (k > 1) os << "^" << k;
  }
  return os;
}

}  // namespace qmc
