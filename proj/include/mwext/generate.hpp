#pragma once

// Seeded generators of small instances: random codes with random measures,
// planted monomial maps and planted isometries.

#include <random>

#include "mwext/linmap.hpp"
#include "mwext/monomial.hpp"

namespace mwext::gen {

using Rng = std::mt19937_64;

Elem random_elem(Rng& rng, const Field& f);
Elem random_nonzero(Rng& rng, const Field& f);

// Measures num/den with num, den in 1..4 unless uniform (all one).
PointSpace random_space(Rng& rng, std::size_t n, bool uniform, const std::string& prefix = "x");

// Rank-k code without zero columns; k <= n.
SpacePtr random_code(Rng& rng, const FieldPtr& f, const PointSpace& space, std::size_t k);
// F^X with the identity basis.
SpacePtr full_space(const FieldPtr& f, const PointSpace& space);

MonomialMap random_monomial(Rng& rng, const Field& f, std::size_t n);

// H = T restricted to A, onto T(A) over points "y1".."yn" where y_j carries
// the measure of x_sigma(j). Always a Hamming isometry.
LinMap planted_monomial(const SpacePtr& a, const MonomialMap& t);

// Hf(y) = w(y) f(rep(c(y))) where every class c of A's quotient is spread
// over one or two fresh points whose measures add up to the class measure.
// Always a Hamming isometry; the codomain may have a different length.
LinMap planted_isometry(Rng& rng, const SpacePtr& a);

}  // namespace mwext::gen
