#pragma once

// Linear maps H between function spaces and the predicates on them.

#include <cstdint>
#include <memory>
#include <optional>

#include "mwext/funspace.hpp"

namespace mwext {

using SpacePtr = std::shared_ptr<const FunctionSpace>;

class LinMap {
 public:
  // Row i of `matrix` holds the canonical coordinates of H(basis_i).
  LinMap(SpacePtr domain, SpacePtr codomain, Matrix matrix);
  // Matrix given relative to the input rows of both spaces; the domain's
  // input rows must be linearly independent.
  static LinMap from_input_basis(SpacePtr domain, SpacePtr codomain, const Matrix& matrix);
  // H(basis_i) given by its values on Y. Throws SpaceMismatch when an image
  // is not in the codomain.
  static LinMap from_images(SpacePtr domain, SpacePtr codomain, const std::vector<std::vector<Elem>>& images);

  const FunctionSpace& domain() const { return *domain_; }
  const FunctionSpace& codomain() const { return *codomain_; }
  const SpacePtr& domain_ptr() const { return domain_; }
  const SpacePtr& codomain_ptr() const { return codomain_; }
  const Matrix& matrix() const { return matrix_; }
  const Field& field() const { return domain_->field(); }

  Func apply(const Func& u) const;
  std::vector<Elem> image_values(const Func& u) const { return codomain_->values(apply(u)); }

  // Throws PreconditionFailed when the map is not invertible.
  LinMap inverse() const;
  // this after `first`.
  LinMap compose_after(const LinMap& first) const;

 private:
  SpacePtr domain_;
  SpacePtr codomain_;
  Matrix matrix_;
};

bool is_injective(const LinMap& h);
bool is_surjective(const LinMap& h);
bool is_bijective(const LinMap& h);

// Exhaustive unless `samples` is set, in which case that many codewords are
// drawn uniformly with the given seed and the verdict is probabilistic.
struct SampleMode {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct WeightCheck {
  bool preserved = true;
  std::optional<Func> witness;  // least violating codeword
  bool probabilistic = false;
};

// wt(Hf) == wt(f) for every f.
WeightCheck preserves_weight(const LinMap& h, const Limits& limits, std::optional<SampleMode> sample = std::nullopt);

struct IsometryCheck {
  bool isometry = false;
  bool injective = false;
  bool surjective = false;
  bool weight_preserving = false;
  std::optional<Func> witness;
  bool probabilistic = false;
  // "bijective", "weight", or empty when the map is an isometry.
  std::string failed_clause;
};

// A Hamming isometry is a weight-preserving linear isomorphism.
IsometryCheck is_isometry(const LinMap& h, const Limits& limits, std::optional<SampleMode> sample = std::nullopt);

struct SeparatingCheck {
  bool separating = true;
  std::optional<std::pair<Func, Func>> witness;
  bool probabilistic = false;
};

// Disjoint cozero sets map to disjoint cozero sets. Exhaustive over unordered
// pairs of codewords, reduced to projective representatives since scaling
// preserves both sides; the pair count is bounded by `max_search`.
SeparatingCheck is_separating(const LinMap& h, const Limits& limits, std::optional<SampleMode> sample = std::nullopt);

// Both sides of coz(f) & coz(g) == {} <=> wt(f+g) == wt(f) + wt(g); throws
// TheoremViolation if they disagree.
bool disjointness_additivity(const FunctionSpace& a, const Func& f, const Func& g);

}  // namespace mwext
