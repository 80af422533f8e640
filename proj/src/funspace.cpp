#include "mwext/funspace.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "mwext/error.hpp"

namespace mwext {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < b; ++i) r = saturating_mul(r, a);
  return r;
}

FunctionSpace::FunctionSpace(FieldPtr field, PointSpace space, Matrix gen, std::vector<std::size_t> pivots,
                             Matrix input_coords, std::vector<PointIndex> kept)
    : field_(std::move(field)),
      space_(std::move(space)),
      gen_(std::move(gen)),
      pivots_(std::move(pivots)),
      input_coords_(std::move(input_coords)),
      kept_(std::move(kept)) {}

FunctionSpace FunctionSpace::make(FieldPtr field, const PointSpace& space,
                                  const std::vector<std::vector<Elem>>& rows, bool normalize) {
  const Field& f = *field;
  const std::size_t n = space.size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n)
      throw Error(ErrorCode::WidthMismatch,
                  "row " + std::to_string(r) + " has length " + std::to_string(rows[r].size()) +
                      ", expected " + std::to_string(n),
                  "rows");
    for (Elem e : rows[r])
      if (!f.contains(e)) throw Error(ErrorCode::FieldMismatch, "row entry outside " + f.name(), "rows");
  }
  Matrix input = Matrix::from_rows(rows, n);
  const Echelon e = row_reduce(f, input);
  if (e.rank() == 0) throw Error(ErrorCode::ZeroSpace, "all rows are zero", "rows");

  std::vector<PointIndex> kept;
  for (PointIndex x = 0; x < n; ++x) {
    bool nonzero = false;
    for (std::size_t r = 0; r < e.rank(); ++r) nonzero = nonzero || !e.rref(r, x).is_zero();
    if (nonzero) {
      kept.push_back(x);
    } else if (!normalize) {
      throw Error(ErrorCode::ZeroColumn, "every function vanishes at point '" + space.label(x) + "'", "rows");
    }
  }

  std::vector<std::size_t> nonzero_rows(e.rank());
  for (std::size_t r = 0; r < e.rank(); ++r) nonzero_rows[r] = r;
  Matrix gen = e.rref.select_rows(nonzero_rows).select_columns(kept);
  // Pivot columns shift when points are dropped, but dropped columns are
  // zero so no pivot lands there.
  std::vector<std::size_t> pivots;
  for (std::size_t p : e.pivots)
    pivots.push_back(static_cast<std::size_t>(std::find(kept.begin(), kept.end(), p) - kept.begin()));

  // input == transform^{-1} * rref; the first `rank` columns of the inverse
  // transform express each input row in the canonical basis.
  const Matrix back = *inverse(f, e.transform);
  Matrix input_coords = back.transpose().select_rows(nonzero_rows).transpose();

  PointSpace restricted = kept.size() == n ? space : space.restrict_to(kept);
  return FunctionSpace(std::move(field), std::move(restricted), std::move(gen), std::move(pivots),
                       std::move(input_coords), std::move(kept));
}

Func FunctionSpace::from_input_coeffs(std::span<const Elem> coeffs) const {
  if (coeffs.size() != input_coords_.rows())
    throw Error(ErrorCode::LengthMismatch,
                "expected " + std::to_string(input_coords_.rows()) + " coefficients, got " +
                    std::to_string(coeffs.size()),
                "coeffs");
  for (Elem c : coeffs)
    if (!field_->contains(c)) throw Error(ErrorCode::FieldMismatch, "coefficient outside " + field_->name(), "coeffs");
  return Func{vec_mat(*field_, coeffs, input_coords_)};
}

Func FunctionSpace::basis(std::size_t i) const {
  Func u = zero();
  u.coeffs.at(i) = Elem{1};
  return u;
}

Func FunctionSpace::add(const Func& a, const Func& b) const { return Func{mwext::add(*field_, a.coeffs, b.coeffs)}; }
Func FunctionSpace::sub(const Func& a, const Func& b) const { return Func{mwext::sub(*field_, a.coeffs, b.coeffs)}; }
Func FunctionSpace::scale(Elem c, const Func& a) const { return Func{mwext::scale(*field_, c, a.coeffs)}; }

Elem FunctionSpace::evaluate(const Func& u, PointIndex x) const {
  if (x >= length()) throw Error(ErrorCode::UnknownPoint, "point index " + std::to_string(x) + " out of range");
  if (u.coeffs.size() != dim()) throw Error(ErrorCode::SpaceMismatch, "coefficient vector has wrong dimension");
  Elem acc{0};
  for (std::size_t i = 0; i < dim(); ++i) acc = field_->add_fast(acc, field_->mul_fast(u.coeffs[i], gen_(i, x)));
  return acc;
}

std::vector<Elem> FunctionSpace::values(const Func& u) const {
  if (u.coeffs.size() != dim()) throw Error(ErrorCode::SpaceMismatch, "coefficient vector has wrong dimension");
  return vec_mat(*field_, u.coeffs, gen_);
}

PointSet FunctionSpace::coz_of(std::span<const Elem> values) const {
  PointSet s(values.size());
  for (PointIndex x = 0; x < values.size(); ++x)
    if (!values[x].is_zero()) s.insert(x);
  return s;
}

std::optional<Func> FunctionSpace::coordinates(std::span<const Elem> values) const {
  if (values.size() != length()) throw Error(ErrorCode::WidthMismatch, "value vector has wrong length");
  Func u = zero();
  for (std::size_t i = 0; i < dim(); ++i) u.coeffs[i] = values[pivots_[i]];
  const auto back = vec_mat(*field_, u.coeffs, gen_);
  if (!std::equal(back.begin(), back.end(), values.begin())) return std::nullopt;
  return u;
}

std::uint64_t FunctionSpace::codeword_count() const { return saturating_pow(field_->order(), dim()); }

void FunctionSpace::require_enumerable(const Limits& limits) const {
  if (codeword_count() > limits.max_enum)
    throw Error(ErrorCode::EnumerationTooLarge,
                "q^k = " + std::to_string(field_->order()) + "^" + std::to_string(dim()) +
                    " exceeds the enumeration bound " + std::to_string(limits.max_enum));
}

Func FunctionSpace::codeword(std::uint64_t index) const {
  Func u = zero();
  const unsigned q = field_->order();
  for (std::size_t j = 0; j < dim(); ++j) {
    u.coeffs[j] = Elem{static_cast<unsigned>(index % q)};
    index /= q;
  }
  return u;
}

std::vector<Func> FunctionSpace::codewords(const Limits& limits) const {
  require_enumerable(limits);
  std::vector<Func> out;
  const auto count = codeword_count();
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(codeword(i));
  return out;
}

std::vector<Func> FunctionSpace::projective_codewords(const Limits& limits) const {
  std::vector<Func> out;
  for (auto& u : codewords(limits)) {
    auto it = std::find_if(u.coeffs.begin(), u.coeffs.end(), [](Elem e) { return !e.is_zero(); });
    if (it != u.coeffs.end() && it->index() == 1) out.push_back(std::move(u));
  }
  return out;
}

// ------------------------------------------------------------------ CozRing

CozRing CozRing::close(std::vector<PointSet> generators, std::uint64_t max_members) {
  std::unordered_set<PointSet, PointSetHash> seen;
  std::vector<PointSet> members;
  auto push = [&](PointSet s) {
    if (seen.insert(s).second) {
      members.push_back(std::move(s));
      if (members.size() > max_members)
        throw Error(ErrorCode::RingTooLarge,
                    "cozero ring exceeds the bound of " + std::to_string(max_members) + " members");
    }
  };
  for (auto& g : generators) push(std::move(g));
  // Worklist closure: every member is combined with every earlier member once.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      PointSet u = members[i] | members[j];
      PointSet v = members[i] & members[j];
      push(std::move(u));
      push(std::move(v));
    }
  }
  std::sort(members.begin(), members.end());
  CozRing ring;
  ring.members_ = std::move(members);
  return ring;
}

bool CozRing::contains(const PointSet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

CozRing coz_ring(const FunctionSpace& a, const Limits& limits) {
  // Scalar multiples share cozero sets.
  std::vector<PointSet> gens{PointSet(a.length())};
  for (const auto& u : a.projective_codewords(limits)) gens.push_back(a.coz(u));
  return CozRing::close(std::move(gens), limits.max_ring);
}

// ---------------------------------------------------------- controllability

std::optional<Func> solve_control_system(const FunctionSpace& a, const Func& f, const PointSet& d1,
                                         const PointSet& u) {
  const auto values = a.values(f);
  std::vector<std::size_t> cols;
  std::vector<Elem> target;
  for (PointIndex x = 0; x < a.length(); ++x) {
    const bool vanish = values[x].is_zero() || !u.contains(x);
    if (d1.contains(x)) {
      if (vanish && !values[x].is_zero()) return std::nullopt;
      cols.push_back(x);
      target.push_back(values[x]);
    } else if (vanish) {
      cols.push_back(x);
      target.push_back(Elem{0});
    }
  }
  auto sol = solve_left(a.field(), a.generator().select_columns(cols), target);
  if (!sol) return std::nullopt;
  return Func{std::move(*sol)};
}

std::optional<ControlCertificate> find_control(const FunctionSpace& a, const CozRing& ring, const Func& f,
                                               const PointSet& d1, const PointSet& d2) {
  const PointSet outside = d2.complement();
  for (const auto& u : ring.members()) {
    if (!d1.is_subset_of(u) || !u.is_subset_of(outside)) continue;
    if (auto fp = solve_control_system(a, f, d1, u)) return ControlCertificate{u, std::move(*fp)};
  }
  return std::nullopt;
}

namespace {

// f restricted to u and extended by zero lies in the space.
bool truncation_in_space(const FunctionSpace& a, const std::vector<Elem>& values, const PointSet& u) {
  std::vector<Elem> cut(values.size());
  for (PointIndex x = 0; x < values.size(); ++x)
    if (u.contains(x)) cut[x] = values[x];
  return a.contains_values(cut);
}

}  // namespace

Controllability is_controllable(const FunctionSpace& a, const CozRing& ring, const Limits& limits) {
  a.require_enumerable(limits);
  const auto& members = ring.members();
  // Admissible sets U for a given D2 are exactly the members inside X \ D2;
  // the ring is union-closed, so their union is the largest admissible U and
  // imposes the fewest vanishing constraints. With D1 = that union the
  // requirement becomes: f truncated to it is in the space.
  std::vector<PointSet> largest(members.size(), PointSet(a.length()));
  for (std::size_t j = 0; j < members.size(); ++j)
    for (const auto& m : members)
      if (m.is_disjoint(members[j])) largest[j] = largest[j] | m;

  const auto count = a.codeword_count();
  for (std::uint64_t i = 1; i < count; ++i) {
    const Func f = a.codeword(i);
    const auto values = a.values(f);
    bool fails = false;
    for (std::size_t j = 0; j < members.size() && !fails; ++j)
      fails = !truncation_in_space(a, values, largest[j]);
    if (!fails) continue;
    for (const auto& d1 : members)
      for (std::size_t j = 0; j < members.size(); ++j) {
        const auto& d2 = members[j];
        if (!d1.is_disjoint(d2)) continue;
        if (!solve_control_system(a, f, d1, largest[j]))
          return Controllability{false, ControlWitness{f, d1, d2}};
      }
    throw Error(ErrorCode::TheoremViolation, "controllability shortcut disagrees with the pair scan");
  }
  return Controllability{true, std::nullopt};
}

Controllability is_controllable(const FunctionSpace& a, const Limits& limits) {
  return is_controllable(a, coz_ring(a, limits), limits);
}

}  // namespace mwext
