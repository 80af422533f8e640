#include "mwext/linmap.hpp"

#include <random>

#include "mwext/error.hpp"

namespace mwext {

LinMap::LinMap(SpacePtr domain, SpacePtr codomain, Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (!(domain_->field() == codomain_->field()))
    throw Error(ErrorCode::FieldMismatch, "domain and codomain are over different fields");
  if (matrix_.rows() != domain_->dim() || matrix_.cols() != codomain_->dim())
    throw Error(ErrorCode::WidthMismatch,
                "map matrix must be " + std::to_string(domain_->dim()) + "x" + std::to_string(codomain_->dim()),
                "matrix");
  for (std::size_t r = 0; r < matrix_.rows(); ++r)
    for (Elem e : matrix_.row(r))
      if (!field().contains(e)) throw Error(ErrorCode::FieldMismatch, "matrix entry outside " + field().name(), "matrix");
}

LinMap LinMap::from_input_basis(SpacePtr domain, SpacePtr codomain, const Matrix& matrix) {
  const Field& f = domain->field();
  const Matrix& ca = domain->input_coordinates();
  const Matrix& cb = codomain->input_coordinates();
  if (matrix.rows() != ca.rows() || matrix.cols() != cb.rows())
    throw Error(ErrorCode::WidthMismatch,
                "map matrix must be " + std::to_string(ca.rows()) + "x" + std::to_string(cb.rows()) +
                    " (input rows of domain by input rows of codomain)",
                "matrix");
  auto ca_inv = mwext::inverse(f, ca);
  if (!ca_inv)
    throw Error(ErrorCode::SchemaViolation, "domain rows must be linearly independent to define a map", "matrix");
  for (std::size_t r = 0; r < matrix.rows(); ++r)
    for (Elem e : matrix.row(r))
      if (!f.contains(e)) throw Error(ErrorCode::FieldMismatch, "matrix entry outside " + f.name(), "matrix");
  Matrix canonical = multiply(f, multiply(f, *ca_inv, matrix), cb);
  return LinMap(std::move(domain), std::move(codomain), std::move(canonical));
}

LinMap LinMap::from_images(SpacePtr domain, SpacePtr codomain, const std::vector<std::vector<Elem>>& images) {
  if (images.size() != domain->dim())
    throw Error(ErrorCode::WidthMismatch, "one image per domain basis element is required", "images");
  Matrix m(domain->dim(), codomain->dim());
  for (std::size_t i = 0; i < images.size(); ++i) {
    auto u = codomain->coordinates(images[i]);
    if (!u) throw Error(ErrorCode::SpaceMismatch, "image " + std::to_string(i) + " is not in the codomain", "images");
    std::copy(u->coeffs.begin(), u->coeffs.end(), m.row(i).begin());
  }
  return LinMap(std::move(domain), std::move(codomain), std::move(m));
}

Func LinMap::apply(const Func& u) const {
  if (u.coeffs.size() != domain_->dim()) throw Error(ErrorCode::SpaceMismatch, "function is not over the domain");
  return Func{vec_mat(field(), u.coeffs, matrix_)};
}

LinMap LinMap::inverse() const {
  auto inv = mwext::inverse(field(), matrix_);
  if (!inv) throw Error(ErrorCode::PreconditionFailed, "map is not invertible");
  return LinMap(codomain_, domain_, std::move(*inv));
}

LinMap LinMap::compose_after(const LinMap& first) const {
  if (!(first.codomain() == domain()))
    throw Error(ErrorCode::SpaceMismatch, "codomain of the first map differs from this domain");
  return LinMap(first.domain_, codomain_, multiply(field(), first.matrix_, matrix_));
}

bool is_injective(const LinMap& h) { return rank(h.field(), h.matrix()) == h.domain().dim(); }
bool is_surjective(const LinMap& h) { return rank(h.field(), h.matrix()) == h.codomain().dim(); }
bool is_bijective(const LinMap& h) { return is_injective(h) && is_surjective(h); }

namespace {

std::vector<Func> sample_codewords(const FunctionSpace& a, const SampleMode& mode) {
  std::mt19937_64 rng(mode.seed);
  std::uniform_int_distribution<unsigned> digit(0, a.field().order() - 1);
  std::vector<Func> out;
  for (std::uint64_t s = 0; s < mode.samples; ++s) {
    Func u = a.zero();
    for (auto& c : u.coeffs) c = Elem{digit(rng)};
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace

WeightCheck preserves_weight(const LinMap& h, const Limits& limits, std::optional<SampleMode> sample) {
  const FunctionSpace& a = h.domain();
  const FunctionSpace& b = h.codomain();
  WeightCheck out;
  auto check = [&](const Func& u) {
    if (a.weight(u) != b.weight(h.apply(u))) {
      out.preserved = false;
      out.witness = u;
      return false;
    }
    return true;
  };
  if (sample) {
    out.probabilistic = true;
    for (const auto& u : sample_codewords(a, *sample))
      if (!check(u)) break;
    return out;
  }
  a.require_enumerable(limits);
  const auto count = a.codeword_count();
  for (std::uint64_t i = 0; i < count; ++i)
    if (!check(a.codeword(i))) break;
  return out;
}

IsometryCheck is_isometry(const LinMap& h, const Limits& limits, std::optional<SampleMode> sample) {
  IsometryCheck out;
  out.injective = is_injective(h);
  out.surjective = is_surjective(h);
  const WeightCheck w = preserves_weight(h, limits, sample);
  out.weight_preserving = w.preserved;
  out.witness = w.witness;
  out.probabilistic = w.probabilistic;
  out.isometry = out.injective && out.surjective && out.weight_preserving;
  if (!(out.injective && out.surjective))
    out.failed_clause = "bijective";
  else if (!out.weight_preserving)
    out.failed_clause = "weight";
  return out;
}

SeparatingCheck is_separating(const LinMap& h, const Limits& limits, std::optional<SampleMode> sample) {
  const FunctionSpace& a = h.domain();
  const FunctionSpace& b = h.codomain();
  SeparatingCheck out;
  if (sample) {
    out.probabilistic = true;
    const auto fs = sample_codewords(a, *sample);
    const auto gs = sample_codewords(a, SampleMode{sample->samples, sample->seed ^ 0x5851f42d4c957f2dULL});
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (!a.coz(fs[i]).is_disjoint(a.coz(gs[i]))) continue;
      if (!b.coz(h.apply(fs[i])).is_disjoint(b.coz(h.apply(gs[i])))) {
        out.separating = false;
        out.witness = std::make_pair(fs[i], gs[i]);
        break;
      }
    }
    return out;
  }
  const auto reps = a.projective_codewords(limits);
  const std::uint64_t pairs = saturating_mul(reps.size(), reps.size() > 0 ? reps.size() - 1 : 0) / 2;
  if (pairs > limits.max_search)
    throw Error(ErrorCode::SearchTooLarge,
                std::to_string(pairs) + " codeword pairs exceed the search bound " + std::to_string(limits.max_search));
  std::vector<PointSet> coz_a;
  std::vector<PointSet> coz_b;
  coz_a.reserve(reps.size());
  coz_b.reserve(reps.size());
  for (const auto& u : reps) {
    coz_a.push_back(a.coz(u));
    coz_b.push_back(b.coz(h.apply(u)));
  }
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (coz_a[i].is_disjoint(coz_a[j]) && !coz_b[i].is_disjoint(coz_b[j])) {
        out.separating = false;
        out.witness = std::make_pair(reps[i], reps[j]);
        return out;
      }
  return out;
}

bool disjointness_additivity(const FunctionSpace& a, const Func& f, const Func& g) {
  const bool disjoint = a.coz(f).is_disjoint(a.coz(g));
  const bool additive = a.weight(a.add(f, g)) == a.weight(f) + a.weight(g);
  if (disjoint != additive)
    throw Error(ErrorCode::TheoremViolation, "disjointness and weight additivity disagree");
  return disjoint;
}

}  // namespace mwext
