#include "ffhg/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ffhg/error.hpp"
#include "ffhg/field.hpp"

namespace ffhg {

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (const auto r : prime_factors(n)) result = result / static_cast<std::uint32_t>(r) * (static_cast<std::uint32_t>(r) - 1);
  return result;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

namespace {

int mobius(std::uint32_t n) {
  int sign = 1;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

// Phi_n = prod_{d | n} (x^d - 1)^mu(n/d): multiply the mu = +1 factors, then
// divide out the mu = -1 factors exactly.
std::vector<std::int64_t> compute_cyclotomic(std::uint32_t n) {
  std::vector<std::int64_t> poly{1};
  std::vector<std::uint32_t> divide_by;
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(n / d);
    if (mu == 1) {
      std::vector<std::int64_t> next(poly.size() + d, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + d] += poly[i];
        next[i] -= poly[i];
      }
      poly = std::move(next);
    } else if (mu == -1) {
      divide_by.push_back(d);
    }
  }
  for (const auto d : divide_by) {
    // P = Q (x^d - 1)  =>  Q[i] = Q[i - d] - P[i]
    std::vector<std::int64_t> quotient(poly.size() - d, 0);
    for (std::size_t i = 0; i < quotient.size(); ++i)
      quotient[i] = (i >= d ? quotient[i - d] : 0) - poly[i];
    poly = std::move(quotient);
  }
  return poly;
}

std::uint32_t normalized_order(std::uint32_t n) { return n % 4 == 2 ? n / 2 : n; }

void require_order(std::uint32_t n) {
  if (n == 0) throw InvalidInput("root-of-unity order must be positive");
}

// Reduces a vector indexed mod n (n already normalized) modulo Phi_n, in place,
// leaving phi(n) entries.
void reduce_mod_phi(std::uint32_t n, std::vector<Integer>& raw) {
  const auto phi_poly = cyclotomic_polynomial(n);
  const std::size_t deg = phi_poly.size() - 1;
  Integer c;
  for (std::size_t k = raw.size(); k-- > deg;) {
    if (raw[k] == 0) continue;
    c = raw[k];
    const std::size_t base = k - deg;
    for (std::size_t i = 0; i < deg; ++i) {
      if (phi_poly[i] != 0) raw[base + i] -= c * phi_poly[i];
    }
    raw[k] = 0;
  }
  raw.resize(deg);
}

}  // namespace

std::span<const std::int64_t> cyclotomic_polynomial(std::uint32_t n) {
  require_order(n);
  static std::mutex mutex;
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto poly = compute_cyclotomic(n);
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::move(poly));
  return it->second;
}

// ---------------------------------------------------------------------------
// Cyclotomic

Cyclotomic::Cyclotomic() : num_{Integer(0)} {}

Cyclotomic::Cyclotomic(std::int64_t v) : num_{Integer(static_cast<long>(v))} {}

Cyclotomic::Cyclotomic(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  num_ = {c.get_num()};
  den_ = c.get_den();
}

Cyclotomic::Cyclotomic(std::uint32_t n, std::vector<Integer> raw, Integer den) : order_(n), den_(std::move(den)) {
  require_order(n);
  if (den_ == 0) throw std::domain_error("zero denominator");
  canonicalize(std::move(raw));
}

void Cyclotomic::canonicalize(std::vector<Integer> raw) {
  std::uint32_t n = order_;
  if (raw.size() != n) {
    std::vector<Integer> folded(n, 0);
    for (std::size_t k = 0; k < raw.size(); ++k) folded[k % n] += raw[k];
    raw = std::move(folded);
  }
  if (n % 4 == 2) {
    // zeta_{2m} = -zeta_m^((m+1)/2) for odd m
    const std::uint32_t m = n / 2;
    const std::uint64_t half = (m + 1) / 2;
    std::vector<Integer> folded(m, 0);
    for (std::uint32_t k = 0; k < n; ++k) {
      if (raw[k] == 0) continue;
      auto& slot = folded[(k * half) % m];
      if (k % 2 == 0) slot += raw[k];
      else slot -= raw[k];
    }
    raw = std::move(folded);
    n = m;
  }
  reduce_mod_phi(n, raw);

  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : raw) c = -c;
  }
  Integer g = den_;
  for (const auto& c : raw) {
    if (g == 1) break;
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1) {
    den_ /= g;
    for (auto& c : raw) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }

  const bool rational = std::all_of(raw.begin() + 1, raw.end(), [](const Integer& c) { return c == 0; });
  if (rational) {
    raw.resize(1);
    n = 1;
  }
  if (raw[0] == 0 && rational) den_ = 1;
  order_ = n;
  num_ = std::move(raw);
}

Cyclotomic Cyclotomic::root(std::uint32_t n, std::int64_t k) {
  require_order(n);
  std::vector<Integer> raw(n, 0);
  const std::int64_t nn = n;
  raw[static_cast<std::size_t>(((k % nn) + nn) % nn)] = 1;
  return Cyclotomic(n, std::move(raw), 1);
}

Cyclotomic Cyclotomic::from_coefficients(std::uint32_t n, std::span<const Rational> c) {
  require_order(n);
  Integer den = 1;
  for (const auto& r : c) den = lcm(den, Integer(r.get_den()));
  std::vector<Integer> raw(n, 0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    raw[k % n] += c[k].get_num() * (den / c[k].get_den());
  }
  return Cyclotomic(n, std::move(raw), std::move(den));
}

Cyclotomic Cyclotomic::from_root_counts(std::uint32_t n, std::span<const std::int64_t> counts,
                                        const Integer& denominator) {
  require_order(n);
  if (counts.size() != n) throw std::invalid_argument("root count vector length must equal the order");
  std::vector<Integer> raw;
  raw.reserve(n);
  for (const auto c : counts) raw.emplace_back(static_cast<long>(c));
  return Cyclotomic(n, std::move(raw), denominator);
}

std::vector<Rational> Cyclotomic::coefficients() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coefficient(i));
  return out;
}

Rational Cyclotomic::coefficient(std::size_t i) const {
  Rational r(num_.at(i), den_);
  r.canonicalize();
  return r;
}

bool Cyclotomic::is_zero() const noexcept { return order_ == 1 && num_[0] == 0; }

std::optional<Rational> Cyclotomic::as_rational() const {
  if (order_ != 1) return std::nullopt;
  return coefficient(0);
}

std::optional<std::int64_t> Cyclotomic::as_integer() const {
  if (order_ != 1 || den_ != 1 || !num_[0].fits_slong_p()) return std::nullopt;
  return num_[0].get_si();
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  const std::int64_t n = order_;
  if (std::gcd(((k % n) + n) % n, n) != 1) throw InvalidInput("Galois exponent must be coprime to the order");
  std::vector<Integer> raw(order_, 0);
  const std::uint64_t kk = static_cast<std::uint64_t>(((k % n) + n) % n);
  for (std::size_t j = 0; j < num_.size(); ++j) raw[(j * kk) % order_] += num_[j];
  return Cyclotomic(order_, std::move(raw), den_);
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& b) {
  if (order_ == b.order_) {
    std::vector<Integer> raw(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i) raw[i] = num_[i] * b.den_ + b.num_[i] * den_;
    Integer den = den_ * b.den_;
    // Same order: only gcd normalization and possible collapse to Q remain.
    raw.resize(order_ == 1 ? 1 : order_, 0);
    den_ = std::move(den);
    canonicalize(std::move(raw));
    return *this;
  }
  const auto L = static_cast<std::uint32_t>(lcm_u64(order_, b.order_));
  std::vector<Integer> raw(L, 0);
  const std::uint32_t sa = L / order_, sb = L / b.order_;
  for (std::size_t i = 0; i < num_.size(); ++i) raw[i * sa] += num_[i] * b.den_;
  for (std::size_t i = 0; i < b.num_.size(); ++i) raw[i * sb] += b.num_[i] * den_;
  den_ *= b.den_;
  order_ = L;
  canonicalize(std::move(raw));
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& b) { return *this += -b; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& b) {
  const auto L = static_cast<std::uint32_t>(lcm_u64(order_, b.order_));
  const std::uint64_t sa = L / order_, sb = L / b.order_;
  std::vector<Integer> raw(L, 0);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < b.num_.size(); ++j) {
      if (b.num_[j] == 0) continue;
      raw[(i * sa + j * sb) % L] += num_[i] * b.num_[j];
    }
  }
  den_ *= b.den_;
  order_ = L;
  canonicalize(std::move(raw));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : num_) c *= r.get_num();
  den_ *= r.get_den();
  std::vector<Integer> raw = std::move(num_);
  raw.resize(order_, 0);
  canonicalize(std::move(raw));
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.den_ == b.den_ && a.num_ == b.num_;
  return (a - b).is_zero();
}

Cyclotomic Cyclotomic::compressed() const {
  if (order_ == 1) return *this;
  const std::uint32_t n = order_;
  const std::size_t rows = num_.size();
  for (std::uint32_t d = 3; d < n; ++d) {
    if (n % d != 0 || d % 4 == 2) continue;
    const std::size_t cols = euler_phi(d);
    // Columns: zeta_d^j = zeta_n^(j n / d) in the reduced basis of Q(zeta_n).
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1, 0));
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<Integer> raw(n, 0);
      raw[j * (n / d)] = 1;
      reduce_mod_phi(n, raw);
      for (std::size_t r = 0; r < rows; ++r) m[r][j] = raw[r];
    }
    for (std::size_t r = 0; r < rows; ++r) m[r][cols] = coefficient(r);

    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
      std::size_t sel = pivot_row;
      while (sel < rows && m[sel][c] == 0) ++sel;
      if (sel == rows) continue;
      std::swap(m[sel], m[pivot_row]);
      for (std::size_t r = 0; r < rows; ++r) {
        if (r == pivot_row || m[r][c] == 0) continue;
        const Rational f = m[r][c] / m[pivot_row][c];
        for (std::size_t k = c; k <= cols; ++k) m[r][k] -= f * m[pivot_row][k];
      }
      pivot_col.push_back(c);
      ++pivot_row;
    }
    bool consistent = true;
    for (std::size_t r = pivot_row; r < rows; ++r)
      if (m[r][cols] != 0) consistent = false;
    if (!consistent) continue;
    std::vector<Rational> y(cols, 0);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) y[pivot_col[r]] = m[r][cols] / m[r][pivot_col[r]];
    Cyclotomic candidate = from_coefficients(d, y);
    if (candidate == *this) return candidate;
  }
  return *this;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<long double> acc = 0;
  const long double den = den_.get_d();
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(j) / order_;
    acc += (static_cast<long double>(num_[j].get_d()) / den) * std::polar(1.0L, angle);
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    Rational c = coefficient(j);
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    if (j == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "z";
    if (j > 1) os << "^" << j;
  }
  if (first) os << "0";
  return os.str();
}

Cyclotomic Cyclotomic::parse(std::string_view text, std::uint32_t n) {
  require_order(n);
  std::string s;
  for (const char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw InvalidInput("empty cyclotomic literal");

  std::vector<Rational> coeffs;
  std::size_t i = 0;
  auto fail = [&](const char* why) { throw InvalidInput(std::string("malformed cyclotomic literal '") + std::string(text) + "': " + why); };
  auto read_uint = [&](std::string& out) {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    out = s.substr(start, i - start);
    return i > start;
  };
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (i != 0) {
      fail("expected '+' or '-'");
    }
    Rational c = 1;
    std::string digits;
    if (read_uint(digits)) {
      Integer num(digits), den = 1;
      if (i < s.size() && s[i] == '/') {
        ++i;
        if (!read_uint(digits)) fail("missing denominator");
        den = Integer(digits);
        if (den == 0) fail("zero denominator");
      }
      c = Rational(num, den);
      c.canonicalize();
      if (i < s.size() && s[i] == '*') {
        ++i;
        if (i >= s.size() || s[i] != 'z') fail("expected 'z' after '*'");
      }
    }
    std::size_t power = 0;
    if (i < s.size() && s[i] == 'z') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (!read_uint(digits)) fail("missing exponent");
        power = std::stoul(digits);
      }
    } else if (digits.empty()) {
      fail("expected a coefficient or 'z'");
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1, 0);
    coeffs[power] += negative ? Rational(-c) : c;
  }
  return from_coefficients(n, coeffs);
}

// ---------------------------------------------------------------------------
// RootSum

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("RootSum coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("RootSum coefficient overflow");
  return r;
}

}  // namespace

RootSum::RootSum(std::uint32_t n) : counts_(n, 0) { require_order(n); }

void RootSum::add_root(std::uint64_t k, std::int64_t multiplicity) {
  auto& slot = counts_[k % counts_.size()];
  slot = checked_add(slot, multiplicity);
}

void RootSum::add_rotated(const RootSum& other, std::uint64_t shift, std::int64_t multiplicity) {
  const std::size_t n = counts_.size();
  if (other.counts_.size() != n) throw std::invalid_argument("RootSum orders differ");
  const std::size_t s = shift % n;
  const std::int64_t* src = other.counts_.data();
  std::int64_t* dst = counts_.data();
  if (multiplicity == 1) {
    for (std::size_t i = 0; i < n - s; ++i) dst[i + s] = checked_add(dst[i + s], src[i]);
    for (std::size_t i = n - s; i < n; ++i) dst[i + s - n] = checked_add(dst[i + s - n], src[i]);
    return;
  }
  for (std::size_t i = 0; i < n - s; ++i) dst[i + s] = checked_add(dst[i + s], checked_mul(multiplicity, src[i]));
  for (std::size_t i = n - s; i < n; ++i)
    dst[i + s - n] = checked_add(dst[i + s - n], checked_mul(multiplicity, src[i]));
}

RootSum RootSum::rotated(std::uint64_t shift) const {
  RootSum out(order());
  out.add_rotated(*this, shift);
  return out;
}

void RootSum::negate() noexcept {
  for (auto& c : counts_) c = -c;
}

RootSum operator*(const RootSum& a, const RootSum& b) {
  const std::size_t n = a.counts_.size();
  if (b.counts_.size() != n) throw std::invalid_argument("RootSum orders differ");
  std::vector<__int128> acc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const __int128 ai = a.counts_[i];
    if (ai == 0) continue;
    const std::int64_t* bj = b.counts_.data();
    for (std::size_t j = 0; j < n - i; ++j) acc[i + j] += ai * bj[j];
    for (std::size_t j = n - i; j < n; ++j) acc[i + j - n] += ai * bj[j];
  }
  RootSum out(static_cast<std::uint32_t>(n));
  for (std::size_t k = 0; k < n; ++k) {
    if (acc[k] > INT64_MAX || acc[k] < INT64_MIN) throw std::overflow_error("RootSum product overflow");
    out.counts_[k] = static_cast<std::int64_t>(acc[k]);
  }
  return out;
}

Cyclotomic RootSum::value(const Integer& denominator) const {
  return Cyclotomic::from_root_counts(order(), counts_, denominator);
}

}  // namespace ffhg
