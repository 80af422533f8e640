#pragma once

// The classical case: codes in F^n with uniform coordinate measure. Brute
// force searches for monomial equivalences and for weight-preserving
// isomorphisms, cross-checked against each other and against decompose.

#include <map>
#include <optional>

#include "mwext/decompose.hpp"
#include "mwext/linmap.hpp"
#include "mwext/monomial.hpp"

namespace mwext {

struct SearchOptions {
  Limits limits;
  // Reject early when the weight histograms differ. Sound, never required.
  bool weight_precheck = true;
};

// Weight -> number of codewords of that weight.
std::map<Rational, std::uint64_t> weight_distribution(const FunctionSpace& c, const Limits& limits);

// T(C1) == C2 as subspaces.
bool carries_onto(const MonomialMap& t, const FunctionSpace& c1, const FunctionSpace& c2);

// First T in lexicographic order (sigma first, then w by element index) with
// T(C1) == C2. Requires same field, same length and uniform, equal measures
// (PreconditionFailed otherwise); throws SearchTooLarge when n!(q-1)^n exceeds
// max_search.
std::optional<MonomialMap> monomial_search(const FunctionSpace& c1, const FunctionSpace& c2,
                                           const SearchOptions& options = {});

// First invertible k x k coordinate matrix, in row-major lexicographic order,
// whose induced map C1 -> C2 preserves every weight. Rows are fixed one at a
// time and each partial choice is checked on the codewords it already
// determines. Throws SearchTooLarge when |GL(k, q)| exceeds max_search.
std::optional<LinMap> isometry_search(const SpacePtr& c1, const SpacePtr& c2, const SearchOptions& options = {});

struct EquivalenceReport {
  bool equivalent = false;
  std::optional<MonomialMap> monomial;
  std::optional<LinMap> isometry;
  // Set when the isometry decomposes into a monomial form; true when that
  // form carries C1 onto C2.
  std::optional<bool> decompose_roundtrip;
  std::optional<MonomialMap> recovered;
};

// Runs both searches and throws TheoremViolation if their verdicts differ.
EquivalenceReport equivalence_decide(const SpacePtr& c1, const SpacePtr& c2, const SearchOptions& options = {});

}  // namespace mwext
