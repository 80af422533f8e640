#include "mwext/gf.hpp"

#include <algorithm>

#include "mwext/error.hpp"

namespace mwext {
namespace {

using Poly = std::vector<unsigned>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
  // p is prime and small; Fermat would also do.
  for (unsigned x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw Error(ErrorCode::DivisionByZero, "no inverse modulo p");
}

// Remainder of a modulo b over GF(p); b must be nonzero after trimming.
Poly poly_mod(Poly a, Poly b, unsigned p) {
  trim(a);
  trim(b);
  const unsigned lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const unsigned factor = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = (a[shift + i] + p * p - factor * b[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

Poly unpack(unsigned value, unsigned p, std::size_t len) {
  Poly r(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    r[i] = value % p;
    value /= p;
  }
  return r;
}

unsigned pack(const Poly& a, unsigned p) {
  unsigned v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(unsigned p, const std::vector<unsigned>& poly) {
  Poly f = poly;
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Try every monic divisor of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    unsigned count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (unsigned low = 0; low < count; ++low) {
      Poly g = unpack(low, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<unsigned> least_irreducible(unsigned p, unsigned m) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, "characteristic is not prime");
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be positive");
  unsigned count = 1;
  for (unsigned i = 0; i < m; ++i) count *= p;
  for (unsigned low = 0; low < count; ++low) {
    Poly g = unpack(low, p, m);
    g.push_back(1);
    if (is_irreducible(p, g)) return g;
  }
  throw Error(ErrorCode::ReduciblePolynomial, "no irreducible polynomial found");
}

FieldPtr Field::make(unsigned p, unsigned m, std::optional<std::vector<unsigned>> modulus,
                     std::size_t max_order) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, "p = " + std::to_string(p) + " is not prime", "p");
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "extension degree m must be >= 1", "m");
  const std::size_t bound = std::min(max_order, kMaxOrder);
  std::size_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > bound)
      throw Error(ErrorCode::OrderTooLarge,
                  "field order exceeds the enumeration bound " + std::to_string(bound), "m");
  }
  Poly mod;
  if (modulus) {
    mod = *modulus;
    for (unsigned c : mod)
      if (c >= p) throw Error(ErrorCode::InvalidArgument, "modulus coefficient out of range", "modulus");
    trim(mod);
    if (mod.size() != m + 1)
      throw Error(ErrorCode::ReduciblePolynomial, "modulus must have degree exactly m", "modulus");
    if (!is_irreducible(p, mod))
      throw Error(ErrorCode::ReduciblePolynomial, "modulus is reducible over GF(p)", "modulus");
  } else {
    mod = least_irreducible(p, m);
  }
  return FieldPtr(new Field(p, m, std::move(mod)));
}

Field::Field(unsigned p, unsigned m, std::vector<unsigned> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < m_; ++i) q_ *= p_;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.resize(q_, 0);
  std::vector<Poly> digits(q_);
  for (unsigned a = 0; a < q_; ++a) digits[a] = unpack(a, p_, m_);
  for (unsigned a = 0; a < q_; ++a) {
    for (unsigned b = 0; b < q_; ++b) {
      Poly s(m_);
      for (unsigned i = 0; i < m_; ++i) s[i] = (digits[a][i] + digits[b][i]) % p_;
      add_[a * q_ + b] = static_cast<std::uint8_t>(pack(s, p_));
      Poly prod = poly_mul(digits[a], digits[b], p_);
      Poly r = m_ == 1 ? prod : poly_mod(prod, modulus_, p_);
      if (m_ == 1 && !r.empty()) r[0] %= p_;
      r.resize(m_, 0);
      mul_[a * q_ + b] = static_cast<std::uint8_t>(pack(r, p_));
    }
  }
  for (unsigned a = 0; a < q_; ++a) {
    for (unsigned b = 0; b < q_; ++b) {
      if (add_[a * q_ + b] == 0) neg_[a] = static_cast<std::uint8_t>(b);
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
    }
  }
}

void Field::check(Elem a) const {
  if (a.index() >= q_)
    throw Error(ErrorCode::FieldMismatch, "element index " + std::to_string(a.index()) +
                                              " is not in " + name());
}

Elem Field::element(unsigned index) const {
  if (index >= q_)
    throw Error(ErrorCode::FieldMismatch,
                "element index " + std::to_string(index) + " is not in " + name());
  return Elem{index};
}

Elem Field::add(Elem a, Elem b) const {
  check(a);
  check(b);
  return add_fast(a, b);
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  check(a);
  check(b);
  return mul_fast(a, b);
}

Elem Field::neg(Elem a) const {
  check(a);
  return Elem{neg_[a.index()]};
}

Elem Field::inv(Elem a) const {
  check(a);
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Elem{inv_[a.index()]};
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out;
  out.reserve(q_);
  for (unsigned i = 0; i < q_; ++i) out.emplace_back(i);
  return out;
}

std::vector<unsigned> Field::coefficients(Elem a) const {
  check(a);
  return unpack(a.index(), p_, m_);
}

std::string Field::name() const {
  return "GF(" + std::to_string(p_) + (m_ > 1 ? "^" + std::to_string(m_) : std::string{}) + ")";
}

}  // namespace mwext
