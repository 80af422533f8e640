#pragma once

// Exact arithmetic in GF(p^m) backed by precomputed tables.
//
// An element is identified by its canonical index: the coefficients of its
// residue polynomial packed base p, constant term least significant. Index 0
// is the additive identity, index 1 the multiplicative identity.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mwext {

class Elem {
 public:
  constexpr Elem() = default;
  constexpr explicit Elem(unsigned index) : index_(static_cast<std::uint8_t>(index)) {}

  constexpr unsigned index() const { return index_; }
  constexpr bool is_zero() const { return index_ == 0; }

  friend constexpr auto operator<=>(Elem, Elem) = default;

 private:
  std::uint8_t index_ = 0;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  // Hard ceiling of the table representation; a configured bound may be lower.
  static constexpr std::size_t kMaxOrder = 256;

  // `modulus` holds coefficients low degree first; std::nullopt selects the
  // least irreducible monic polynomial of degree m (see least_irreducible).
  static FieldPtr make(unsigned p, unsigned m,
                       std::optional<std::vector<unsigned>> modulus = std::nullopt,
                       std::size_t max_order = kMaxOrder);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  unsigned order() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  // Throws FieldMismatch when index >= q.
  Elem element(unsigned index) const;
  bool contains(Elem a) const { return a.index() < q_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;
  Elem div(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem inv(Elem a) const;

  // All q elements ordered by index.
  std::vector<Elem> elements() const;
  // Base-p digits of the residue polynomial, constant term first (length m).
  std::vector<unsigned> coefficients(Elem a) const;

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

  // Unchecked table lookups for inner loops; callers guarantee a, b < q.
  Elem add_fast(Elem a, Elem b) const { return Elem{add_[a.index() * q_ + b.index()]}; }
  Elem mul_fast(Elem a, Elem b) const { return Elem{mul_[a.index() * q_ + b.index()]}; }

 private:
  Field(unsigned p, unsigned m, std::vector<unsigned> modulus);
  void check(Elem a) const;

  unsigned p_;
  unsigned m_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;
};

bool is_prime(unsigned n);

// Exhaustive factor check; coefficients low degree first, leading one nonzero.
bool is_irreducible(unsigned p, const std::vector<unsigned>& poly);

// Least irreducible monic polynomial of degree m over GF(p), ordering
// polynomials by their packed value (constant term least significant).
std::vector<unsigned> least_irreducible(unsigned p, unsigned m);

}  // namespace mwext
