#include "mwext/monomial.hpp"

#include <algorithm>

#include "mwext/error.hpp"

namespace mwext {

MonomialMap MonomialMap::identity(std::size_t n) {
  MonomialMap t;
  t.sigma.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.sigma[i] = i;
  t.w.assign(n, Elem{1});
  return t;
}

void MonomialMap::validate(const Field& f) const {
  if (sigma.size() != w.size()) throw Error(ErrorCode::LengthMismatch, "sigma and w differ in length");
  std::vector<bool> hit(sigma.size(), false);
  for (std::size_t s : sigma) {
    if (s >= sigma.size() || hit[s]) throw Error(ErrorCode::InvalidArgument, "sigma is not a permutation", "sigma");
    hit[s] = true;
  }
  for (Elem e : w)
    if (e.is_zero() || !f.contains(e)) throw Error(ErrorCode::InvalidArgument, "weights must be nonzero field elements", "w");
}

std::vector<Elem> monomial_apply(const Field& f, const MonomialMap& t, std::span<const Elem> v) {
  if (v.size() != t.size())
    throw Error(ErrorCode::LengthMismatch,
                "vector of length " + std::to_string(v.size()) + " for a monomial map of size " + std::to_string(t.size()));
  std::vector<Elem> out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = f.mul(v[t.sigma[j]], t.w[j]);
  return out;
}

}  // namespace mwext
