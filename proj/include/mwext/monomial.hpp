#pragma once

#include <span>
#include <vector>

#include "mwext/gf.hpp"

namespace mwext {

// (a_1, ..., a_n) -> (a_sigma(1) w_1, ..., a_sigma(n) w_n), zero-based.
struct MonomialMap {
  std::vector<std::size_t> sigma;
  std::vector<Elem> w;

  static MonomialMap identity(std::size_t n);
  std::size_t size() const { return sigma.size(); }
  // Throws InvalidArgument unless sigma is a permutation and w is nowhere zero.
  void validate(const Field& f) const;

  friend bool operator==(const MonomialMap&, const MonomialMap&) = default;
};

// Throws LengthMismatch.
std::vector<Elem> monomial_apply(const Field& f, const MonomialMap& t, std::span<const Elem> v);

}  // namespace mwext
