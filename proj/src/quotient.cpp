#include "mwext/quotient.hpp"

#include <algorithm>

#include "mwext/error.hpp"

namespace mwext {

Quotient Quotient::build(const FunctionSpace& a) {
  const std::size_t n = a.length();
  Quotient q;
  q.class_of_.assign(n, 0);
  q.lambda_to_rep_.assign(n, Elem{1});
  std::vector<std::vector<Elem>> rep_columns;
  for (PointIndex x = 0; x < n; ++x) {
    const auto col = a.column(x);
    bool placed = false;
    for (ClassId c = 0; c < q.classes_.size() && !placed; ++c) {
      if (auto lam = proportionality(a.field(), col, rep_columns[c])) {
        q.classes_[c].push_back(x);
        q.class_of_[x] = c;
        q.lambda_to_rep_[x] = *lam;
        placed = true;
      }
    }
    if (!placed) {
      q.class_of_[x] = q.classes_.size();
      q.classes_.push_back({x});
      rep_columns.push_back(col);
    }
  }
  return q;
}

Quotient Quotient::from_parts(std::vector<ClassId> class_of, std::vector<Elem> lambda_to_rep) {
  if (class_of.size() != lambda_to_rep.size())
    throw Error(ErrorCode::LengthMismatch, "class map and lambda table differ in length");
  Quotient q;
  for (PointIndex x = 0; x < class_of.size(); ++x) {
    if (class_of[x] >= q.classes_.size()) q.classes_.resize(class_of[x] + 1);
    q.classes_[class_of[x]].push_back(x);
  }
  if (std::any_of(q.classes_.begin(), q.classes_.end(), [](const auto& c) { return c.empty(); }))
    throw Error(ErrorCode::InvalidArgument, "class ids must be contiguous");
  q.class_of_ = std::move(class_of);
  q.lambda_to_rep_ = std::move(lambda_to_rep);
  return q;
}

PointSet Quotient::class_set(ClassId c) const {
  PointSet s(class_of_.size());
  for (PointIndex x : classes_.at(c)) s.insert(x);
  return s;
}

std::vector<ClassId> Quotient::project(const PointSet& s) const {
  std::vector<ClassId> out;
  for (PointIndex x : s.points()) out.push_back(class_of_.at(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PointSet Quotient::lift(const std::vector<ClassId>& classes) const {
  PointSet s(class_of_.size());
  for (ClassId c : classes)
    for (PointIndex x : classes_.at(c)) s.insert(x);
  return s;
}

Elem Quotient::lambda(const Field& f, PointIndex x1, PointIndex x2) const {
  if (class_of_.at(x1) != class_of_.at(x2))
    throw Error(ErrorCode::NotRelated, "points are not related");
  // f(x1) = l(x1,rep) f(rep) and f(x2) = l(x2,rep) f(rep).
  return f.div(lambda_to_rep_[x1], lambda_to_rep_[x2]);
}

bool Quotient::is_saturated(const PointSet& s) const {
  if (s.width() != class_of_.size()) throw Error(ErrorCode::SpaceMismatch, "point set over a different space");
  for (const auto& cls : classes_) {
    const bool first = s.contains(cls.front());
    for (PointIndex x : cls)
      if (s.contains(x) != first) return false;
  }
  return true;
}

bool related(const FunctionSpace& a, PointIndex x1, PointIndex x2, const Limits& limits) {
  if (x1 >= a.length() || x2 >= a.length()) throw Error(ErrorCode::UnknownPoint, "point index out of range");
  a.require_enumerable(limits);
  const auto count = a.codeword_count();
  for (std::uint64_t i = 0; i < count; ++i) {
    const Func f = a.codeword(i);
    const Elem v1 = a.evaluate(f, x1);
    const Elem v2 = a.evaluate(f, x2);
    if (a.field().mul(v1, v2).is_zero() && !(v1.is_zero() && v2.is_zero())) return false;
  }
  return true;
}

std::optional<Elem> related_fast(const FunctionSpace& a, PointIndex x1, PointIndex x2) {
  if (x1 >= a.length() || x2 >= a.length()) throw Error(ErrorCode::UnknownPoint, "point index out of range");
  return proportionality(a.field(), a.column(x1), a.column(x2));
}

Func separating_witness(const FunctionSpace& a, PointIndex x1, PointIndex x2) {
  if (related_fast(a, x1, x2)) throw Error(ErrorCode::PointsRelated, "related points cannot be separated");
  // u . col(x1) = 1 and u . col(x2) = 0.
  Matrix system = a.generator().select_columns({x1, x2});
  const std::vector<Elem> target{Elem{1}, Elem{0}};
  auto u = solve_left(a.field(), system, target);
  if (!u) throw Error(ErrorCode::TheoremViolation, "unrelated points admit no separating function");
  return Func{std::move(*u)};
}

}  // namespace mwext
