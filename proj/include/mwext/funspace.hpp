#pragma once

// Linear spaces of F-valued functions on a finite measured space (linear
// codes with weighted coordinates), their Hamming weights, the ring generated
// by cozero sets, and controllability.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mwext/gf.hpp"
#include "mwext/limits.hpp"
#include "mwext/linalg.hpp"
#include "mwext/space.hpp"

namespace mwext {

// A function f = coeffs * G given by its coordinates in the canonical basis.
struct Func {
  std::vector<Elem> coeffs;
  friend bool operator==(const Func&, const Func&) = default;
};

class FunctionSpace {
 public:
  // Row-reduces `rows` to the canonical basis. Points where every row
  // vanishes are dropped when `normalize` is set, otherwise rejected.
  static FunctionSpace make(FieldPtr field, const PointSpace& space,
                            const std::vector<std::vector<Elem>>& rows, bool normalize = false);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const PointSpace& space() const { return space_; }
  const Matrix& generator() const { return gen_; }
  std::size_t dim() const { return gen_.rows(); }
  std::size_t length() const { return gen_.cols(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Canonical coordinates of each input row, one row per input row.
  const Matrix& input_coordinates() const { return input_coords_; }
  // Indices (into the input space) of the points that were kept.
  const std::vector<PointIndex>& kept_points() const { return kept_; }
  // Coordinates relative to the input rows, translated to the canonical basis.
  Func from_input_coeffs(std::span<const Elem> coeffs) const;

  Func zero() const { return Func{std::vector<Elem>(dim())}; }
  Func basis(std::size_t i) const;
  Func add(const Func& a, const Func& b) const;
  Func sub(const Func& a, const Func& b) const;
  Func scale(Elem c, const Func& a) const;

  // Throws UnknownPoint.
  Elem evaluate(const Func& u, PointIndex x) const;
  std::vector<Elem> values(const Func& u) const;
  std::vector<Elem> column(PointIndex x) const { return gen_.column(x); }

  PointSet coz(const Func& u) const { return coz_of(values(u)); }
  PointSet zero_set(const Func& u) const { return coz(u).complement(); }
  PointSet coz_of(std::span<const Elem> values) const;

  Rational weight(const Func& u) const { return space_.measure(coz(u)); }
  Rational distance(const Func& u, const Func& v) const { return weight(sub(u, v)); }

  // Canonical coordinates of the member with these values, if it is one.
  std::optional<Func> coordinates(std::span<const Elem> values) const;
  bool contains_values(std::span<const Elem> values) const { return coordinates(values).has_value(); }

  // q^k, saturating.
  std::uint64_t codeword_count() const;
  // Throws EnumerationTooLarge when q^k exceeds the bound.
  void require_enumerable(const Limits& limits) const;
  // Codeword number `index`: coefficient j is base-q digit j of the index.
  Func codeword(std::uint64_t index) const;
  std::vector<Func> codewords(const Limits& limits) const;
  // Codewords whose first nonzero coefficient is one, in index order.
  std::vector<Func> projective_codewords(const Limits& limits) const;

  friend bool operator==(const FunctionSpace& a, const FunctionSpace& b) {
    return *a.field_ == *b.field_ && a.space_ == b.space_ && a.gen_ == b.gen_;
  }

 private:
  FunctionSpace(FieldPtr field, PointSpace space, Matrix gen, std::vector<std::size_t> pivots,
                Matrix input_coords, std::vector<PointIndex> kept);

  FieldPtr field_;
  PointSpace space_;
  Matrix gen_;
  std::vector<std::size_t> pivots_;
  Matrix input_coords_;
  std::vector<PointIndex> kept_;
};

// The smallest family of point sets closed under pairwise union and
// intersection that contains every cozero set (the empty set included).
class CozRing {
 public:
  // Throws RingTooLarge when the closure outgrows `max_members`.
  static CozRing close(std::vector<PointSet> generators, std::uint64_t max_members);

  // Ordered by cardinality, then lexicographically by point list.
  const std::vector<PointSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const PointSet& s) const;

 private:
  std::vector<PointSet> members_;
};

CozRing coz_ring(const FunctionSpace& a, const Limits& limits);

struct ControlWitness {
  Func f;
  PointSet d1;
  PointSet d2;
};

struct Controllability {
  bool controllable = true;
  std::optional<ControlWitness> witness;
};

struct ControlCertificate {
  PointSet u;
  Func f_prime;
};

// Whether some f' agrees with f on d1 and vanishes on Z(f) and outside u.
std::optional<Func> solve_control_system(const FunctionSpace& a, const Func& f, const PointSet& d1,
                                         const PointSet& u);

// First ring member U (in member order) with d1 <= U <= X \ d2 admitting a
// solution f'.
std::optional<ControlCertificate> find_control(const FunctionSpace& a, const CozRing& ring, const Func& f,
                                               const PointSet& d1, const PointSet& d2);

// Decides controllability over all codewords and disjoint ring pairs. The
// reported witness is the first failing (f, D2, D1) in codeword order, then
// ring order.
Controllability is_controllable(const FunctionSpace& a, const CozRing& ring, const Limits& limits);
Controllability is_controllable(const FunctionSpace& a, const Limits& limits);

}  // namespace mwext
