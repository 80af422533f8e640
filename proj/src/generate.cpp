#include "mwext/generate.hpp"

#include <algorithm>

#include "mwext/error.hpp"
#include "mwext/quotient.hpp"

namespace mwext::gen {

Elem random_elem(Rng& rng, const Field& f) {
  return Elem{std::uniform_int_distribution<unsigned>(0, f.order() - 1)(rng)};
}

Elem random_nonzero(Rng& rng, const Field& f) {
  return Elem{std::uniform_int_distribution<unsigned>(1, f.order() - 1)(rng)};
}

PointSpace random_space(Rng& rng, std::size_t n, bool uniform, const std::string& prefix) {
  std::vector<std::string> labels;
  std::vector<Rational> measures;
  std::uniform_int_distribution<int> part(1, 4);
  for (std::size_t i = 1; i <= n; ++i) {
    labels.push_back(prefix + std::to_string(i));
    measures.push_back(uniform ? Rational(1) : Rational(part(rng), part(rng)));
  }
  return PointSpace(std::move(labels), std::move(measures));
}

SpacePtr random_code(Rng& rng, const FieldPtr& f, const PointSpace& space, std::size_t k) {
  const std::size_t n = space.size();
  if (k == 0 || k > n) throw Error(ErrorCode::InvalidArgument, "need 1 <= k <= n");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Matrix g(k, n);
    for (std::size_t r = 0; r < k; ++r)
      for (auto& e : g.row(r)) e = random_elem(rng, *f);
    bool zero_col = false;
    for (std::size_t c = 0; c < n && !zero_col; ++c) zero_col = is_zero(g.column(c));
    if (zero_col || rank(*f, g) != k) continue;
    std::vector<std::vector<Elem>> rows;
    for (std::size_t r = 0; r < k; ++r) rows.emplace_back(g.row(r).begin(), g.row(r).end());
    return std::make_shared<const FunctionSpace>(FunctionSpace::make(f, space, rows));
  }
  throw Error(ErrorCode::InvalidArgument, "could not generate a code with these parameters");
}

SpacePtr full_space(const FieldPtr& f, const PointSpace& space) {
  const std::size_t n = space.size();
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = Elem{1};
  return std::make_shared<const FunctionSpace>(FunctionSpace::make(f, space, rows));
}

MonomialMap random_monomial(Rng& rng, const Field& f, std::size_t n) {
  MonomialMap t = MonomialMap::identity(n);
  std::shuffle(t.sigma.begin(), t.sigma.end(), rng);
  for (auto& w : t.w) w = random_nonzero(rng, f);
  return t;
}

LinMap planted_monomial(const SpacePtr& a, const MonomialMap& t) {
  const Field& f = a->field();
  t.validate(f);
  if (t.size() != a->length()) throw Error(ErrorCode::LengthMismatch, "monomial size differs from code length");
  std::vector<std::string> labels;
  std::vector<Rational> measures;
  for (std::size_t j = 0; j < t.size(); ++j) {
    labels.push_back("y" + std::to_string(j + 1));
    measures.push_back(a->space().measure_of(t.sigma[j]));
  }
  std::vector<std::vector<Elem>> images;
  for (std::size_t i = 0; i < a->dim(); ++i) images.push_back(monomial_apply(f, t, a->generator().row(i)));
  auto b = std::make_shared<const FunctionSpace>(
      FunctionSpace::make(a->field_ptr(), PointSpace(std::move(labels), std::move(measures)), images));
  return LinMap::from_images(a, b, images);
}

LinMap planted_isometry(Rng& rng, const SpacePtr& a) {
  const Field& f = a->field();
  const Quotient qa = Quotient::build(*a);
  struct Target {
    ClassId cls;
    Rational measure;
  };
  std::vector<Target> targets;
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> third(1, 2);
  for (ClassId c = 0; c < qa.class_count(); ++c) {
    const Rational total = a->space().measure(qa.class_set(c));
    if (coin(rng)) {
      const Rational part = total * Rational(third(rng), 3);
      targets.push_back({c, part});
      targets.push_back({c, total - part});
    } else {
      targets.push_back({c, total});
    }
  }
  std::shuffle(targets.begin(), targets.end(), rng);

  std::vector<std::string> labels;
  std::vector<Rational> measures;
  std::vector<Elem> weights;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    labels.push_back("y" + std::to_string(j + 1));
    measures.push_back(targets[j].measure);
    weights.push_back(random_nonzero(rng, f));
  }
  std::vector<std::vector<Elem>> images(a->dim(), std::vector<Elem>(targets.size()));
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < targets.size(); ++j)
      images[i][j] = f.mul(weights[j], a->generator()(i, qa.rep(targets[j].cls)));
  auto b = std::make_shared<const FunctionSpace>(
      FunctionSpace::make(a->field_ptr(), PointSpace(std::move(labels), std::move(measures)), images));
  return LinMap::from_images(a, b, images);
}

}  // namespace mwext::gen
