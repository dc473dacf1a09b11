#include "ffhg/field.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace ffhg {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

// Dense polynomials over F_p, coefficients low to high, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p prime, a != 0
  std::uint64_t result = 1, base = a, k = p - 2;
  while (k) {
    if (k & 1) result = result * base % p;
    base = base * base % p;
    k >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = inv_mod(f.back(), p);
  while (a.size() > df) {
    const std::size_t shift = a.size() - 1 - df;
    const std::uint64_t c = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= df; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * f[i]) % p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  Poly out(r.begin(), r.end());
  return poly_mod(std::move(out), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (k) {
    if (k & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    k >>= 1;
  }
  return result;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: f of degree e is irreducible iff x^(p^e) = x mod f and
// gcd(x^(p^(e/r)) - x, f) = 1 for every prime r | e.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t e = static_cast<std::uint32_t>(f.size() - 1);
  if (e == 1) return true;
  const Poly x{0, 1};
  std::vector<Poly> frob(e + 1);  // frob[k] = x^(p^k) mod f
  frob[0] = poly_mod(x, f, p);
  for (std::uint32_t k = 1; k <= e; ++k) frob[k] = poly_powmod(frob[k - 1], p, f, p);
  if (poly_sub(frob[e], frob[0], p).size() != 0) return false;
  for (const auto r : prime_factors(e)) {
    const Poly g = poly_gcd(f, poly_sub(frob[e / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t e) {
  if (e == 1) return Poly{0, 1};
  // Lower coefficients c_0..c_{e-1}; lexicographic order compares c_0 first,
  // so c_{e-1} is the fastest-moving digit.
  std::vector<std::uint32_t> lower(e, 0);
  while (true) {
    Poly f(lower.begin(), lower.end());
    f.push_back(1);
    if (f[0] != 0 && is_irreducible(f, p)) return f;
    std::size_t i = e;
    while (i > 0) {
      --i;
      if (++lower[i] < p) break;
      lower[i] = 0;
      if (i == 0) throw std::logic_error("no irreducible polynomial found");
    }
  }
}

}  // namespace

struct Field::Impl {
  std::uint32_t p = 0, e = 0, q = 0;
  Poly modulus;
  std::uint32_t generator = 0;
  std::vector<std::uint32_t> exp;   // exp[k] = g^k, k in [0, q-2]
  std::vector<std::uint32_t> log;   // log[x], log[0] unused
  std::vector<std::uint32_t> pw;    // pw[i] = p^i

  Poly to_poly(std::uint32_t code) const {
    Poly a(e, 0);
    for (std::uint32_t i = 0; i < e; ++i, code /= p) a[i] = code % p;
    trim(a);
    return a;
  }
  std::uint32_t to_code(const Poly& a) const {
    std::uint32_t code = 0;
    for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
    return code;
  }
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    if (e == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    return to_code(poly_mulmod(to_poly(a), to_poly(b), modulus, p));
  }
  std::uint32_t slow_pow(std::uint32_t a, std::uint64_t k) const {
    std::uint32_t result = 1;
    while (k) {
      if (k & 1) result = slow_mul(result, a);
      a = slow_mul(a, a);
      k >>= 1;
    }
    return result;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (e == 1) return (a + b) % p;
    if (p == 2) return a ^ b;
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < e; ++i, a /= p, b /= p) out += ((a % p + b % p) % p) * pw[i];
    return out;
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (e == 1) return (p - a) % p;
    if (p == 2) return a;
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < e; ++i, a /= p) out += ((p - a % p) % p) * pw[i];
    return out;
  }
};

Field Field::make(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw InvalidInput("characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw InvalidInput("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw InvalidInput("field order " + std::to_string(p) + "^" + std::to_string(e) + " exceeds 2^20");
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->e = e;
  impl->q = static_cast<std::uint32_t>(q);
  impl->pw.resize(e + 1, 1);
  for (std::uint32_t i = 1; i <= e; ++i) impl->pw[i] = impl->pw[i - 1] * p;
  impl->modulus = smallest_irreducible(p, e);

  const std::uint32_t n = impl->q - 1;
  const auto factors = prime_factors(n);
  for (std::uint32_t c = 1; c < impl->q; ++c) {
    if (impl->slow_pow(c, n) != 1) continue;
    const bool full = std::all_of(factors.begin(), factors.end(),
                                  [&](std::uint64_t r) { return impl->slow_pow(c, n / r) != 1; });
    if (full) {
      impl->generator = c;
      break;
    }
  }
  if (impl->generator == 0) throw std::logic_error("no generator found; modulus is not irreducible");

  impl->exp.resize(n);
  impl->log.assign(impl->q, std::numeric_limits<std::uint32_t>::max());
  std::uint32_t x = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    if (impl->log[x] != std::numeric_limits<std::uint32_t>::max())
      throw std::logic_error("generator has order below q - 1");
    impl->exp[k] = x;
    impl->log[x] = k;
    x = impl->slow_mul(x, impl->generator);
  }
  if (x != 1) throw std::logic_error("generator^(q-1) != 1");
  return Field(std::move(impl));
}

Field Field::of_order(std::uint64_t q) {
  if (q < 2) throw InvalidInput("field order must be at least 2");
  if (q > kMaxOrder) throw InvalidInput("field order " + std::to_string(q) + " exceeds 2^20");
  const auto factors = prime_factors(q);
  if (factors.size() != 1) throw InvalidInput(std::to_string(q) + " is not a prime power");
  std::uint32_t e = 0;
  for (std::uint64_t m = q; m > 1; m /= factors[0]) ++e;
  return make(static_cast<std::uint32_t>(factors[0]), e);
}

std::uint32_t Field::p() const noexcept { return impl_->p; }
std::uint32_t Field::e() const noexcept { return impl_->e; }
std::uint32_t Field::q() const noexcept { return impl_->q; }
std::span<const std::uint32_t> Field::modulus() const noexcept { return impl_->modulus; }
Element Field::generator() const noexcept { return Element{impl_->generator}; }

Element Field::from_integer(std::int64_t n) const noexcept {
  const std::int64_t p = impl_->p;
  return Element{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

Element Field::element(std::uint64_t code) const {
  if (code >= q()) throw InvalidInput("element code " + std::to_string(code) + " is not below q = " + std::to_string(q()));
  return Element{static_cast<std::uint32_t>(code)};
}

Element Field::add(Element a, Element b) const noexcept { return Element{impl_->add(a.code, b.code)}; }
Element Field::sub(Element a, Element b) const noexcept { return Element{impl_->add(a.code, impl_->neg(b.code))}; }
Element Field::neg(Element a) const noexcept { return Element{impl_->neg(a.code)}; }

Element Field::mul(Element a, Element b) const noexcept {
  if (a.code == 0 || b.code == 0) return zero();
  const std::uint32_t n = group_order();
  std::uint32_t k = impl_->log[a.code] + impl_->log[b.code];
  if (k >= n) k -= n;
  return Element{impl_->exp[k]};
}

Element Field::inv(Element a) const {
  if (a.code == 0) throw InvalidInput("division by zero in F_" + std::to_string(q()));
  const std::uint32_t k = impl_->log[a.code];
  return Element{impl_->exp[k == 0 ? 0 : group_order() - k]};
}

Element Field::div(Element a, Element b) const { return mul(a, inv(b)); }

Element Field::pow(Element a, std::int64_t k) const {
  if (a.code == 0) {
    if (k < 0) throw InvalidInput("negative power of zero");
    return k == 0 ? one() : zero();
  }
  const std::int64_t n = group_order();
  const std::int64_t r = ((static_cast<std::int64_t>(impl_->log[a.code]) * (k % n)) % n + n) % n;
  return Element{impl_->exp[static_cast<std::size_t>(r)]};
}

std::uint32_t Field::dlog(Element x) const {
  if (x.code == 0) throw InvalidInput("discrete logarithm of zero");
  if (x.code >= q()) throw InvalidInput("element code out of range");
  return impl_->log[x.code];
}

Element Field::exp(std::uint64_t k) const noexcept { return Element{impl_->exp[k % group_order()]}; }

std::vector<std::uint32_t> Field::digits(Element x) const {
  std::vector<std::uint32_t> d(e());
  std::uint32_t c = x.code;
  for (auto& digit : d) {
    digit = c % p();
    c /= p();
  }
  return d;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << q() << " (p = " << p() << ", e = " << e() << ") modulus [";
  for (std::size_t i = 0; i < impl_->modulus.size(); ++i) os << (i ? ", " : "") << impl_->modulus[i];
  os << "] generator " << impl_->generator;
  return os.str();
}

}  // namespace ffhg
