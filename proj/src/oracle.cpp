#include "qmc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "qmc/errors.hpp"

namespace qmc::oracle {

FqMatrix::FqMatrix(FieldPtr field, std::size_t n)
    : field_(std::move(field)), n_(n), entries_(n * n, 0) {
  if (!field_) throw std::invalid_argument("FqMatrix needs a field");
  if (n == 0) throw std::invalid_argument("FqMatrix dimension must be >= 1");
}

FqMatrix FqMatrix::identity(FieldPtr field, std::size_t n) {
  FqMatrix m(std::move(field), n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FqMatrix FqMatrix::decode(FieldPtr field, std::size_t n, MatrixCode code) {
  FqMatrix m(std::move(field), n);
  const auto q = static_cast<std::uint64_t>(m.field().q());
  std::uint64_t v = code.value;
  for (auto& e : m.entries_) {
    e = static_cast<Element>(v % q);
    v /= q;
  }
  return m;
}

FqMatrix FqMatrix::from_entries(FieldPtr field, std::size_t n, std::vector<Element> entries) {
  FqMatrix m(std::move(field), n);
  if (entries.size() != n * n) throw std::invalid_argument("wrong number of matrix entries");
  for (Element e : entries) {
    if (e >= m.field().q()) throw std::invalid_argument("matrix entry outside the field");
  }
  m.entries_ = std::move(entries);
  return m;
}

MatrixCode FqMatrix::encode() const {
  const auto q = static_cast<std::uint64_t>(field_->q());
  std::uint64_t v = 0;
  for (std::size_t i = entries_.size(); i > 0; --i) v = v * q + entries_[i - 1];
  return {v};
}

bool FqMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Element e) { return e == 0; });
}

bool FqMatrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
  const FieldSpec& f = a.field();
  const std::size_t n = a.n();
  FqMatrix c(a.field_ptr(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Element aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
    }
  }
  return c;
}

FqMatrix operator+(const FqMatrix& a, const FqMatrix& b) {
  FqMatrix c(a.field_ptr(), a.n());
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    c.entries()[i] = a.field().add(a.entries()[i], b.entries()[i]);
  return c;
}

FqMatrix operator-(const FqMatrix& a, const FqMatrix& b) {
  FqMatrix c(a.field_ptr(), a.n());
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    c.entries()[i] = a.field().sub(a.entries()[i], b.entries()[i]);
  return c;
}

FqMatrix matrix_pow(const FqMatrix& a, std::uint64_t k) {
  FqMatrix result = FqMatrix::identity(a.field_ptr(), a.n());
  FqMatrix base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

namespace {

// Row-reduces in place; returns the rank.
std::size_t row_reduce(std::vector<Element>& m, std::size_t rows, std::size_t cols, const FieldSpec& f) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[pivot * cols + j], m[r * cols + j]);
    const Element inv = f.inv(m[r * cols + c]);
    for (std::size_t j = 0; j < cols; ++j) m[r * cols + j] = f.mul(m[r * cols + j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i * cols + c] == 0) continue;
      const Element factor = m[i * cols + c];
      for (std::size_t j = 0; j < cols; ++j)
        m[i * cols + j] = f.sub(m[i * cols + j], f.mul(factor, m[r * cols + j]));
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const FqMatrix& a) {
  std::vector<Element> m(a.entries().begin(), a.entries().end());
  return row_reduce(m, a.n(), a.n(), a.field());
}

std::optional<FqMatrix> inverse(const FqMatrix& a) {
  const std::size_t n = a.n();
  std::vector<Element> aug(n * 2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i * 2 * n + j] = a(i, j);
    aug[i * 2 * n + n + i] = 1;
  }
  if (row_reduce(aug, n, 2 * n, a.field()) < n) return std::nullopt;
  // Full rank means the left block reduced to I.
  for (std::size_t i = 0; i < n; ++i)
    if (aug[i * 2 * n + i] != 1) return std::nullopt;
  FqMatrix inv(a.field_ptr(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug[i * 2 * n + n + j];
  return inv;
}

FqPoly char_poly(const FqMatrix& a) {
  const FieldSpec& f = a.field();
  const std::size_t n = a.n();
  if (n > 16) throw std::invalid_argument("char_poly supports n <= 16");

  // zI - A as a matrix of polynomials.
  std::vector<FqPoly> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i * n + j] = FqPoly(i == j ? std::vector<Element>{f.neg(a(i, j)), 1}
                                   : std::vector<Element>{f.neg(a(i, j))});

  // det[mask] = determinant of rows 0..|mask|-1 restricted to the columns in
  // mask, expanded along the last row.
  std::vector<FqPoly> det(std::size_t{1} << n);
  det[0] = FqPoly({1});
  for (std::size_t mask = 1; mask < det.size(); ++mask) {
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
    FqPoly acc;
    std::size_t pos = 0;
    for (std::size_t col = 0; col < n; ++col) {
      if (!(mask & (std::size_t{1} << col))) continue;
      FqPoly term = poly_mul(m[row * n + col], det[mask ^ (std::size_t{1} << col)], f);
      acc = ((row + pos) % 2 == 0) ? poly_add(acc, term, f) : poly_sub(acc, term, f);
      ++pos;
    }
    det[mask] = std::move(acc);
  }
  return det.back();
}

FqPoly min_poly(const FqMatrix& a) {
  const FieldSpec& f = a.field();
  const std::size_t n = a.n();
  const std::size_t len = n * n;

  // Reduced echelon basis of {I, A, A^2, ...} flattened, each row carrying the
  // polynomial that produces it.
  struct BasisRow {
    std::size_t pivot;
    std::vector<Element> vec;
    std::vector<Element> combo;
  };
  std::vector<BasisRow> basis;
  FqMatrix power = FqMatrix::identity(a.field_ptr(), n);

  for (std::size_t j = 0; j <= n; ++j) {
    std::vector<Element> vec(power.entries().begin(), power.entries().end());
    std::vector<Element> combo(j + 1, 0);
    combo[j] = 1;
    for (const BasisRow& b : basis) {
      const Element c = vec[b.pivot];
      if (c == 0) continue;
      for (std::size_t i = 0; i < len; ++i) vec[i] = f.sub(vec[i], f.mul(c, b.vec[i]));
      for (std::size_t i = 0; i < b.combo.size(); ++i) combo[i] = f.sub(combo[i], f.mul(c, b.combo[i]));
    }
    const auto nz = std::find_if(vec.begin(), vec.end(), [](Element e) { return e != 0; });
    if (nz == vec.end()) return FqPoly(std::move(combo));

    const std::size_t pivot = static_cast<std::size_t>(nz - vec.begin());
    const Element inv = f.inv(vec[pivot]);
    for (auto& e : vec) e = f.mul(e, inv);
    for (auto& e : combo) e = f.mul(e, inv);
    // Keep the basis fully reduced at the new pivot column.
    for (BasisRow& b : basis) {
      const Element c = b.vec[pivot];
      if (c == 0) continue;
      for (std::size_t i = 0; i < len; ++i) b.vec[i] = f.sub(b.vec[i], f.mul(c, vec[i]));
      b.combo.resize(combo.size(), 0);
      for (std::size_t i = 0; i < combo.size(); ++i) b.combo[i] = f.sub(b.combo[i], f.mul(c, combo[i]));
    }
    basis.push_back({pivot, std::move(vec), std::move(combo)});
    power = power * a;
  }
  throw std::logic_error("min_poly: no dependency up to degree n (Cayley-Hamilton violated)");
}

MatrixRange::iterator::iterator(FqMatrix start, std::uint64_t code, std::uint64_t end)
    : current_(std::move(start)), code_(code), end_(end) {}

MatrixRange::iterator& MatrixRange::iterator::operator++() {
  ++code_;
  if (code_ >= end_) return *this;
  const auto q = static_cast<Element>(current_->field().q());
  for (Element& e : current_->entries()) {
    if (++e < q) break;
    e = 0;
  }
  return *this;
}

MatrixRange::MatrixRange(FieldPtr field, std::size_t n, std::uint64_t first, std::uint64_t last)
    : field_(std::move(field)), n_(n), first_(first), last_(last) {}

MatrixRange::iterator MatrixRange::begin() const {
  if (first_ >= last_) return end();
  return iterator(FqMatrix::decode(field_, n_, {first_}), first_, last_);
}

MatrixRange::iterator MatrixRange::end() const {
  return iterator(FqMatrix(field_, n_), last_, last_);
}

std::uint64_t matrix_count_within(const FieldSpec& field, std::size_t n, std::uint64_t budget) {
  const BigInt total = ipow(BigInt(field.q()), n * n);
  if (total > budget) {
    throw BudgetExceeded("enumerating " + std::to_string(n) + "x" + std::to_string(n) +
                             " matrices over F_" + std::to_string(field.q()),
                         total, budget);
  }
  return static_cast<std::uint64_t>(total);
}

MatrixRange enumerate(FieldPtr field, std::size_t n, std::uint64_t budget) {
  const std::uint64_t total = matrix_count_within(*field, n, budget);
  return MatrixRange(std::move(field), n, 0, total);
}

const char* to_string(Property p) {
  switch (p) {
    case Property::invertible: return "invertible";
    case Property::nilpotent: return "nilpotent";
    case Property::projection: return "projection";
    case Property::linear_derangement: return "linear_derangement";
    case Property::projective_derangement: return "projective_derangement";
    case Property::diagonalizable: return "diagonalizable";
    case Property::cyclic: return "cyclic";
    case Property::semisimple: return "semisimple";
    case Property::separable: return "separable";
  }
  return "unknown";
}

Classification classify(const FqMatrix& a, std::size_t max_power) {
  const FieldSpec& f = a.field();
  const std::size_t n = a.n();
  Classification c;
  auto set = [&](Property p, bool v) { c.flags[static_cast<std::size_t>(p)] = v; };

  c.rank = rank(a);
  c.char_poly = char_poly(a);
  c.min_poly = min_poly(a);

  c.power_identity.assign(max_power + 1, false);
  c.power_identity[0] = true;
  FqMatrix power = FqMatrix::identity(a.field_ptr(), n);
  bool nilpotent = false;
  for (std::size_t k = 1; k <= std::max(max_power, n); ++k) {
    power = power * a;
    if (k <= max_power) c.power_identity[k] = power.is_identity();
    if (k == n) nilpotent = power.is_zero();
  }

  bool root_in_field = false;
  for (std::int64_t x = 0; x < f.q(); ++x) {
    if (poly_eval(c.char_poly, static_cast<Element>(x), f) == 0) root_in_field = true;
  }

  set(Property::invertible, c.rank == n);
  set(Property::nilpotent, nilpotent);
  set(Property::projection, a * a == a);
  set(Property::linear_derangement, poly_eval(c.char_poly, 0, f) != 0 && poly_eval(c.char_poly, 1, f) != 0);
  set(Property::projective_derangement, !root_in_field);
  set(Property::diagonalizable, matrix_pow(a, static_cast<std::uint64_t>(f.q())) == a);
  set(Property::cyclic, c.min_poly.degree() == static_cast<std::int64_t>(n));
  set(Property::semisimple, squarefree_test(c.min_poly, f));
  set(Property::separable, squarefree_test(c.char_poly, f));
  return c;
}

bool consistent(const Classification& c, const FqMatrix& a) {
  const FieldSpec& f = a.field();
  const bool projection = c.has(Property::projection);
  const bool diagonalizable = c.has(Property::diagonalizable);
  const bool semisimple = c.has(Property::semisimple);
  if (projection && !diagonalizable) return false;
  if (diagonalizable && !semisimple) return false;
  if (c.has(Property::separable) != (c.has(Property::cyclic) && semisimple)) return false;
  if (c.has(Property::nilpotent) && c.has(Property::invertible)) return false;
  if (c.has(Property::linear_derangement) && !c.has(Property::invertible)) return false;
  if (c.has(Property::projective_derangement) && !c.has(Property::linear_derangement)) return false;
  // min poly divides char poly.
  if (!poly_divmod(c.char_poly, c.min_poly, f).second.is_zero()) return false;
  // A^q = A exactly when the min poly is squarefree and splits over F_q.
  std::int64_t roots = 0;
  for (std::int64_t x = 0; x < f.q(); ++x)
    if (poly_eval(c.min_poly, static_cast<Element>(x), f) == 0) ++roots;
  const bool splits_squarefree = semisimple && roots == c.min_poly.degree();
  return diagonalizable == splits_squarefree;
}

namespace {

template <typename Visit, typename Merge, typename State>
State sweep(const FieldPtr& field, std::size_t n, const SweepOptions& opts, State init,
            Visit visit, Merge merge) {
  const std::uint64_t total = matrix_count_within(*field, n, opts.budget);
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(std::min<std::uint64_t>(total, 256))));
  std::vector<State> partial(jobs, init);
  auto work = [&](unsigned w) {
    const std::uint64_t lo = total * w / jobs;
    const std::uint64_t hi = total * (w + 1) / jobs;
    for (const FqMatrix& m : MatrixRange(field, n, lo, hi)) visit(partial[w], m);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  State result = init;
  for (const State& s : partial) merge(result, s);
  return result;
}

}  // namespace

Census census(const FieldPtr& field, std::size_t n, const SweepOptions& opts) {
  Census init;
  init.by_rank.assign(n + 1, 0);
  init.power_identity.assign(opts.max_power + 1, 0);
  return sweep(
      field, n, opts, init,
      [&](Census& acc, const FqMatrix& m) {
        const Classification c = classify(m, opts.max_power);
        ++acc.total;
        for (std::size_t i = 0; i < kPropertyCount; ++i) acc.counts[i] += c.flags[i] ? 1 : 0;
        ++acc.by_rank[c.rank];
        for (std::size_t k = 0; k <= opts.max_power; ++k) acc.power_identity[k] += c.power_identity[k] ? 1 : 0;
        if (!consistent(c, m)) ++acc.inconsistent;
      },
      [](Census& acc, const Census& part) {
        acc.total += part.total;
        for (std::size_t i = 0; i < kPropertyCount; ++i) acc.counts[i] += part.counts[i];
        for (std::size_t k = 0; k < acc.by_rank.size(); ++k) acc.by_rank[k] += part.by_rank[k];
        for (std::size_t k = 0; k < acc.power_identity.size(); ++k) acc.power_identity[k] += part.power_identity[k];
        acc.inconsistent += part.inconsistent;
      });
}

std::uint64_t count_matching(const FieldPtr& field, std::size_t n,
                             const std::function<bool(const FqMatrix&)>& predicate,
                             const SweepOptions& opts) {
  return sweep(
      field, n, opts, std::uint64_t{0},
      [&](std::uint64_t& acc, const FqMatrix& m) { acc += predicate(m) ? 1 : 0; },
      [](std::uint64_t& acc, std::uint64_t part) { acc += part; });
}

namespace {

struct GroupElement {
  FqMatrix g;
  FqMatrix g_inv;
};

std::vector<GroupElement> general_linear_group(const FieldPtr& field, std::size_t n, std::uint64_t budget) {
  std::vector<GroupElement> group;
  for (const FqMatrix& m : enumerate(field, n, budget)) {
    if (auto inv = inverse(m)) group.push_back({m, std::move(*inv)});
  }
  return group;
}

void check_pairs(const std::string& what, const BigInt& pairs, std::uint64_t budget) {
  if (pairs > budget) throw BudgetExceeded(what, pairs, budget);
}

}  // namespace

OrbitCensus orbit_census(const FieldPtr& field, std::size_t n, bool restrict_gl, std::uint64_t pair_budget) {
  const PrimePower& q = field->order();
  const BigInt domain = ipow(q.big(), n * n);
  check_pairs("conjugacy orbit sweep", gamma(q, n) * domain, pair_budget);
  const auto total = static_cast<std::uint64_t>(domain);
  const std::vector<GroupElement> group = general_linear_group(field, n, total);

  std::vector<bool> visited(total, false);
  std::vector<bool> eligible(total, !restrict_gl);
  if (restrict_gl)
    for (const auto& e : group) eligible[e.g.encode().value] = true;

  OrbitCensus out;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (visited[code] || !eligible[code]) continue;
    const FqMatrix a = FqMatrix::decode(field, n, {code});
    std::uint64_t orbit = 0, centralizer = 0;
    for (const auto& e : group) {
      const FqMatrix b = e.g * a * e.g_inv;
      const std::uint64_t bc = b.encode().value;
      if (!visited[bc]) {
        visited[bc] = true;
        ++orbit;
      }
      if (bc == code) ++centralizer;
    }
    ++out.classes;
    out.orbit_sizes.push_back(orbit);
    out.centralizer_orders.push_back(centralizer);
  }
  return out;
}

std::uint64_t conjugacy_class_count(const FieldPtr& field, std::size_t n, bool restrict_gl,
                                    std::uint64_t pair_budget) {
  return orbit_census(field, n, restrict_gl, pair_budget).classes;
}

std::uint64_t min_centralizer_order(const FieldPtr& field, std::size_t n, std::uint64_t pair_budget) {
  const BigInt g = gamma(field->order(), n);
  check_pairs("centralizer sweep over GL_" + std::to_string(n), g * g, pair_budget);
  const std::uint64_t total = matrix_count_within(*field, n, pair_budget);
  const std::vector<GroupElement> group = general_linear_group(field, n, total);

  std::vector<bool> visited(total, false);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (const auto& rep : group) {
    const std::uint64_t code = rep.g.encode().value;
    if (visited[code]) continue;
    std::uint64_t centralizer = 0;
    for (const auto& e : group) {
      const FqMatrix b = e.g * rep.g * e.g_inv;
      visited[b.encode().value] = true;
      if (b == rep.g) ++centralizer;
    }
    best = std::min(best, centralizer);
  }
  return best;
}

std::uint64_t max_class_size(const FieldPtr& field, std::size_t n, std::uint64_t pair_budget) {
  const std::uint64_t c = min_centralizer_order(field, n, pair_budget);
  return static_cast<std::uint64_t>(gamma(field->order(), n) / c);
}

}  // namespace qmc::oracle
