#pragma once

// Definition-level oracles for tests. Each one works from the raw definitions
// (plain loops over codewords, subsets and scalars) and avoids the library's
// fast paths, so agreement between the two is meaningful.

#include <optional>
#include <utility>
#include <vector>

#include "mwext/decompose.hpp"
#include "mwext/generate.hpp"
#include "mwext/linmap.hpp"

namespace mwext::oracle {

// Field arithmetic by explicit polynomial arithmetic mod p and the modulus.
unsigned poly_add(unsigned p, unsigned m, unsigned a, unsigned b);
unsigned poly_mul(unsigned p, const std::vector<unsigned>& modulus, unsigned a, unsigned b);

// f = u * G evaluated with plain loops.
std::vector<Elem> values_of(const FunctionSpace& a, const std::vector<Elem>& coeffs);
// Every coefficient vector, digit j of the index giving coefficient j.
std::vector<std::vector<Elem>> all_coeffs(const FunctionSpace& a);
std::vector<std::vector<Elem>> all_values(const FunctionSpace& a);

Rational weight_by_sum(const PointSpace& s, const std::vector<Elem>& values);

// For every f: f(x1) f(x2) == 0 implies f(x1) == f(x2) == 0.
bool related_by_definition(const FunctionSpace& a, PointIndex x1, PointIndex x2);
// The scalar c with f(x1) == c f(x2) for every f, found by trying every c.
std::optional<Elem> lambda_by_search(const FunctionSpace& a, PointIndex x1, PointIndex x2);

// Closure of the cozero sets under union and intersection, recomputed by
// sweeping all pairs until nothing new appears.
std::vector<PointSet> ring_by_definition(const FunctionSpace& a);

// Some f' in A and U in the ring with d1 <= U <= X \ d2, f' == f on d1 and
// f' == 0 on Z(f) and outside U. Tries every f' and every U.
bool control_exists(const FunctionSpace& a, const std::vector<PointSet>& ring, const std::vector<Elem>& f_values,
                    const PointSet& d1, const PointSet& d2);
bool controllable_by_definition(const FunctionSpace& a, const std::vector<PointSet>& ring);

std::vector<Elem> image_values(const LinMap& h, const std::vector<Elem>& coeffs);

bool isometry_by_definition(const LinMap& h);
bool separating_by_definition(const LinMap& h);
// Every f vanishing on k has Hf(y) == 0.
bool support_by_definition(const LinMap& h, PointIndex y, const PointSet& k);
// Whether the functional equals c * (evaluation at x) for some point x and
// nonzero scalar c, trying all of them.
bool proportional_to_some_evaluation(const FunctionSpace& a, const std::vector<Elem>& functional);

// Disjoint ring members D1 >= k1 and D2 >= k2, searched over all pairs.
std::optional<std::pair<PointSet, PointSet>> disjoint_cover(const std::vector<PointSet>& ring, const PointSet& k1,
                                                            const PointSet& k2);

// Every union of classes, including the empty one.
std::vector<PointSet> saturated_sets(const FunctionSpace& a);

}  // namespace mwext::oracle

namespace mwext::corpus {

// Codes over q in {2,3,4,5} with n <= 8, k <= 4 and random positive
// rational measures.
std::vector<SpacePtr> random_codes(std::uint64_t seed, std::size_t count);

// Codes of length 5 over GF(2) and GF(3) with k <= 3: half random, half
// monomial images of the random ones, so that both verdicts occur.
std::vector<SpacePtr> classical_codes(std::uint64_t seed, std::size_t count);

}  // namespace mwext::corpus
