#pragma once

// Points that no function of the space can tell apart, up to a scalar: the
// relation x1 ~ x2, its connecting scalars lambda(x1, x2), and the quotient
// space of classes.

#include <optional>
#include <vector>

#include "mwext/funspace.hpp"

namespace mwext {

using ClassId = std::size_t;

class Quotient {
 public:
  // Partition by proportional generator columns. Classes are ordered by
  // their least member, which is also the representative.
  static Quotient build(const FunctionSpace& a);

  // Unvalidated assembly from stored parts (deserialization, tests).
  static Quotient from_parts(std::vector<ClassId> class_of, std::vector<Elem> lambda_to_rep);

  std::size_t class_count() const { return classes_.size(); }
  const std::vector<std::vector<PointIndex>>& classes() const { return classes_; }
  const std::vector<PointIndex>& members(ClassId c) const { return classes_.at(c); }
  ClassId class_of(PointIndex x) const { return class_of_.at(x); }
  PointIndex rep(ClassId c) const { return classes_.at(c).front(); }
  // f(x) == lambda_to_rep(x) * f(rep(class_of(x))) for every f.
  Elem lambda_to_rep(PointIndex x) const { return lambda_to_rep_.at(x); }
  bool is_trivial() const { return classes_.size() == class_of_.size(); }

  // The class as a point set over X.
  PointSet class_set(ClassId c) const;
  // pi(s): the classes meeting s.
  std::vector<ClassId> project(const PointSet& s) const;
  // Union of the listed classes.
  PointSet lift(const std::vector<ClassId>& classes) const;

  // Throws NotRelated.
  Elem lambda(const Field& f, PointIndex x1, PointIndex x2) const;
  bool is_saturated(const PointSet& s) const;

 private:
  std::vector<std::vector<PointIndex>> classes_;
  std::vector<ClassId> class_of_;
  std::vector<Elem> lambda_to_rep_;
};

// Definitional check over every codeword. Throws EnumerationTooLarge.
bool related(const FunctionSpace& a, PointIndex x1, PointIndex x2, const Limits& limits);
// Column proportionality; returns lambda(x1, x2) when related.
std::optional<Elem> related_fast(const FunctionSpace& a, PointIndex x1, PointIndex x2);

// Some f with f(x1) != 0 and f(x2) == 0. Throws PointsRelated.
Func separating_witness(const FunctionSpace& a, PointIndex x1, PointIndex x2);

}  // namespace mwext
