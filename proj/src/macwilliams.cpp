#include "mwext/macwilliams.hpp"

#include <algorithm>
#include <numeric>

#include "mwext/error.hpp"

namespace mwext {
namespace {

void require_classical(const FunctionSpace& c1, const FunctionSpace& c2) {
  if (!(c1.field() == c2.field())) throw Error(ErrorCode::FieldMismatch, "codes are over different fields");
  if (c1.length() != c2.length()) throw Error(ErrorCode::LengthMismatch, "codes differ in length");
  if (!c1.space().is_uniform() || !c2.space().is_uniform() ||
      c1.space().measure_of(0) != c2.space().measure_of(0))
    throw Error(ErrorCode::PreconditionFailed, "the classical setting needs one uniform measure on both codes");
}

std::uint64_t index_of(const std::vector<Elem>& coeffs, unsigned q) {
  std::uint64_t idx = 0;
  for (std::size_t j = coeffs.size(); j-- > 0;) idx = idx * q + coeffs[j].index();
  return idx;
}

std::vector<Rational> weights_by_index(const FunctionSpace& c) {
  const auto count = c.codeword_count();
  std::vector<Rational> w(count);
  for (std::uint64_t i = 0; i < count; ++i) w[i] = c.weight(c.codeword(i));
  return w;
}

}  // namespace

std::map<Rational, std::uint64_t> weight_distribution(const FunctionSpace& c, const Limits& limits) {
  c.require_enumerable(limits);
  std::map<Rational, std::uint64_t> hist;
  const auto count = c.codeword_count();
  for (std::uint64_t i = 0; i < count; ++i) ++hist[c.weight(c.codeword(i))];
  return hist;
}

bool carries_onto(const MonomialMap& t, const FunctionSpace& c1, const FunctionSpace& c2) {
  if (c1.dim() != c2.dim() || c1.length() != c2.length() || t.size() != c1.length()) return false;
  for (std::size_t i = 0; i < c1.dim(); ++i) {
    const auto row = monomial_apply(c1.field(), t, c1.generator().row(i));
    if (!c2.contains_values(row)) return false;
  }
  return true;
}

std::optional<MonomialMap> monomial_search(const FunctionSpace& c1, const FunctionSpace& c2,
                                           const SearchOptions& options) {
  require_classical(c1, c2);
  const std::size_t n = c1.length();
  const unsigned q = c1.field().order();
  std::uint64_t size = saturating_pow(q - 1, n);
  for (std::uint64_t i = 2; i <= n; ++i) size = saturating_mul(size, i);
  if (size > options.limits.max_search)
    throw Error(ErrorCode::SearchTooLarge,
                "n!(q-1)^n = " + std::to_string(size) + " exceeds the search bound " +
                    std::to_string(options.limits.max_search));
  if (c1.dim() != c2.dim()) return std::nullopt;
  if (options.weight_precheck &&
      weight_distribution(c1, options.limits) != weight_distribution(c2, options.limits))
    return std::nullopt;

  MonomialMap t = MonomialMap::identity(n);
  do {
    std::fill(t.w.begin(), t.w.end(), Elem{1});
    while (true) {
      if (carries_onto(t, c1, c2)) return t;
      // Next w in lexicographic order; w_0 is the most significant digit.
      std::size_t j = n;
      while (j > 0 && t.w[j - 1].index() == q - 1) {
        t.w[j - 1] = Elem{1};
        --j;
      }
      if (j == 0) break;
      t.w[j - 1] = Elem{t.w[j - 1].index() + 1};
    }
  } while (std::next_permutation(t.sigma.begin(), t.sigma.end()));
  return std::nullopt;
}

std::optional<LinMap> isometry_search(const SpacePtr& c1, const SpacePtr& c2, const SearchOptions& options) {
  if (!(c1->field() == c2->field())) throw Error(ErrorCode::FieldMismatch, "codes are over different fields");
  const std::size_t k = c1->dim();
  const unsigned q = c1->field().order();
  std::uint64_t gl = 1;
  for (std::size_t i = 0; i < k; ++i) gl = saturating_mul(gl, saturating_pow(q, k) - saturating_pow(q, i));
  if (gl > options.limits.max_search)
    throw Error(ErrorCode::SearchTooLarge,
                "|GL(k,q)| = " + std::to_string(gl) + " exceeds the search bound " +
                    std::to_string(options.limits.max_search));
  if (k != c2->dim()) return std::nullopt;
  c1->require_enumerable(options.limits);
  if (options.weight_precheck &&
      weight_distribution(*c1, options.limits) != weight_distribution(*c2, options.limits))
    return std::nullopt;

  const Field& f = c1->field();
  const auto w1 = weights_by_index(*c1);
  const auto w2 = weights_by_index(*c2);
  const std::uint64_t rows_count = saturating_pow(q, k);
  Matrix m(k, k);

  // Codewords u with u_r != 0 and u_j == 0 for j > r, once rows 0..r are set.
  auto level_ok = [&](std::size_t r) {
    const std::uint64_t block = saturating_pow(q, r);
    for (std::uint64_t low = 0; low < block; ++low)
      for (unsigned top = 1; top < q; ++top) {
        const std::uint64_t idx = low + block * top;
        const Func u = c1->codeword(idx);
        const auto image = vec_mat(f, u.coeffs, m);
        if (w2[index_of(image, q)] != w1[idx]) return false;
      }
    return true;
  };

  // Row candidates in lexicographic order: entry 0 most significant.
  auto set_row = [&](std::size_t r, std::uint64_t code) {
    for (std::size_t j = k; j-- > 0;) {
      m(r, j) = Elem{static_cast<unsigned>(code % q)};
      code /= q;
    }
  };

  std::vector<std::uint64_t> choice(k, 0);
  std::size_t r = 0;
  bool advancing = true;
  while (true) {
    if (advancing) {
      choice[r] = 0;
    } else if (++choice[r] >= rows_count) {
      if (r == 0) return std::nullopt;
      --r;
      continue;
    }
    set_row(r, choice[r]);
    if (level_ok(r)) {
      if (r + 1 == k) {
        if (inverse(f, m)) return LinMap(c1, c2, m);
        advancing = false;
        continue;
      }
      ++r;
      advancing = true;
    } else {
      advancing = false;
    }
  }
}

EquivalenceReport equivalence_decide(const SpacePtr& c1, const SpacePtr& c2, const SearchOptions& options) {
  EquivalenceReport report;
  report.monomial = monomial_search(*c1, *c2, options);
  report.isometry = isometry_search(c1, c2, options);
  if (report.monomial.has_value() != report.isometry.has_value())
    throw Error(ErrorCode::TheoremViolation, "monomial equivalence and weight-preserving isomorphism disagree");
  report.equivalent = report.monomial.has_value();
  if (!report.equivalent) return report;

  auto dec = decompose(*report.isometry, DecomposeOptions{false, options.limits});
  if (auto* d = std::get_if<Decomposition>(&dec)) {
    auto form = monomial_form(*d, *report.isometry);
    if (auto* t = std::get_if<MonomialMap>(&form)) {
      report.recovered = *t;
      report.decompose_roundtrip = carries_onto(*t, *c1, *c2);
    }
  } else {
    report.decompose_roundtrip = false;
  }
  return report;
}

}  // namespace mwext
