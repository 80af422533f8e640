#include "mwext/decompose.hpp"

#include <algorithm>

#include "mwext/error.hpp"

namespace mwext {

Functional functional_at(const LinMap& h, PointIndex y) {
  if (y >= h.codomain().length()) throw Error(ErrorCode::UnknownPoint, "point index out of range");
  const Field& f = h.field();
  const Matrix& m = h.matrix();
  const Matrix& gb = h.codomain().generator();
  Functional phi{std::vector<Elem>(m.rows())};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Elem acc{0};
    for (std::size_t j = 0; j < m.cols(); ++j) acc = f.add_fast(acc, f.mul_fast(m(i, j), gb(j, y)));
    phi.coeffs[i] = acc;
  }
  return phi;
}

Functional evaluation_functional(const FunctionSpace& a, PointIndex x) {
  if (x >= a.length()) throw Error(ErrorCode::UnknownPoint, "point index out of range");
  return Functional{a.column(x)};
}

Elem apply_functional(const Field& f, const Functional& phi, const Func& u) {
  if (phi.coeffs.size() != u.coeffs.size()) throw Error(ErrorCode::SpaceMismatch, "functional and function differ in dimension");
  Elem acc{0};
  for (std::size_t i = 0; i < u.coeffs.size(); ++i) acc = f.add_fast(acc, f.mul_fast(u.coeffs[i], phi.coeffs[i]));
  return acc;
}

namespace {

// Functions vanishing on s are the annihilator of the evaluation columns at
// s, so they all lie in ker(phi) iff phi is in the span of those columns.
bool supported_on(const FunctionSpace& a, const Functional& phi, const PointSet& s) {
  const auto pts = s.points();
  Matrix cols(pts.size() + 1, a.dim());
  for (std::size_t r = 0; r < pts.size(); ++r) {
    const auto c = a.column(pts[r]);
    std::copy(c.begin(), c.end(), cols.row(r).begin());
  }
  const std::size_t without = rank(a.field(), cols);
  std::copy(phi.coeffs.begin(), phi.coeffs.end(), cols.row(pts.size()).begin());
  return rank(a.field(), cols) == without;
}

}  // namespace

bool is_support(const LinMap& h, const Quotient& qa, PointIndex y, const PointSet& s) {
  if (!qa.is_saturated(s)) throw Error(ErrorCode::NotSaturated, "support candidates must be saturated");
  return supported_on(h.domain(), functional_at(h, y), s);
}

std::variant<SupportMatch, Refutation> minimal_support(const LinMap& h, const Quotient& qa, PointIndex y) {
  const Field& f = h.field();
  const Functional phi = functional_at(h, y);
  if (is_zero(phi.coeffs))
    throw Error(ErrorCode::ZeroFunctional,
                "every image vanishes at '" + h.codomain().space().label(y) + "'");
  std::optional<SupportMatch> found;
  for (ClassId c = 0; c < qa.class_count(); ++c) {
    const auto omega = proportionality(f, phi.coeffs, h.domain().column(qa.rep(c)));
    if (!omega) continue;
    // Two matching classes would have proportional columns, i.e. be one class.
    if (found) throw Error(ErrorCode::TheoremViolation, "functional matches two distinct classes");
    found = SupportMatch{c, *omega};
  }
  if (found) return *found;
  return Refutation{y, phi};
}

SupportScan scan_supports(const LinMap& h, const Quotient& qa, PointIndex y, const Limits& limits) {
  const std::size_t classes = qa.class_count();
  if (classes >= 64 || (std::uint64_t{1} << classes) > limits.max_enum)
    throw Error(ErrorCode::EnumerationTooLarge,
                "2^" + std::to_string(classes) + " saturated subsets exceed the enumeration bound");
  const Functional phi = functional_at(h, y);
  SupportScan scan;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << classes); ++mask) {
    std::vector<ClassId> chosen;
    for (ClassId c = 0; c < classes; ++c)
      if ((mask >> c) & 1U) chosen.push_back(c);
    PointSet s = qa.lift(chosen);
    if (supported_on(h.domain(), phi, s)) scan.supports.push_back(std::move(s));
  }
  for (const auto& s : scan.supports) {
    const bool has_smaller = std::any_of(scan.supports.begin(), scan.supports.end(), [&](const PointSet& t) {
      return t != s && t.is_subset_of(s);
    });
    if (!has_smaller) scan.minimal.push_back(s);
  }
  std::sort(scan.minimal.begin(), scan.minimal.end());
  return scan;
}

bool confirms_fast_path(const std::variant<SupportMatch, Refutation>& fast, const SupportScan& scan,
                        const Quotient& qa) {
  if (const auto* m = std::get_if<SupportMatch>(&fast)) {
    const PointSet cls = qa.class_set(m->cls);
    return std::find(scan.minimal.begin(), scan.minimal.end(), cls) != scan.minimal.end();
  }
  for (ClassId c = 0; c < qa.class_count(); ++c) {
    const PointSet cls = qa.class_set(c);
    if (std::find(scan.supports.begin(), scan.supports.end(), cls) != scan.supports.end()) return false;
  }
  return true;
}

std::variant<Decomposition, Refutation> decompose(const LinMap& h, const DecomposeOptions& options) {
  const FunctionSpace& b = h.codomain();
  Decomposition d{Quotient::build(h.domain()), Quotient::build(b), {}, {}, {}, false};
  // All functionals are checked before any support search so that a violated
  // precondition is reported as such rather than as a refutation.
  for (PointIndex y = 0; y < b.length(); ++y)
    if (is_zero(functional_at(h, y).coeffs))
      throw Error(ErrorCode::ZeroFunctional, "every image vanishes at '" + b.space().label(y) + "'");

  for (PointIndex y = 0; y < b.length(); ++y) {
    auto found = minimal_support(h, d.domain_classes, y);
    if (options.diagnostic) {
      const auto scan = scan_supports(h, d.domain_classes, y, options.limits);
      if (!confirms_fast_path(found, scan, d.domain_classes))
        throw Error(ErrorCode::TheoremViolation,
                    "exhaustive support scan disagrees with the proportionality test at '" + b.space().label(y) + "'");
    }
    if (auto* r = std::get_if<Refutation>(&found)) return std::move(*r);
    const auto& m = std::get<SupportMatch>(found);
    d.h.push_back(m.cls);
    d.source.push_back(d.domain_classes.rep(m.cls));
    d.omega.push_back(m.omega);
  }
  d.verified = verify(d, h, Limits{0, 0, 0}).ok;
  if (!d.verified) throw Error(ErrorCode::TheoremViolation, "extracted decomposition fails its own identity");
  return d;
}

VerifyResult verify(const Decomposition& d, const LinMap& h, const Limits& limits) {
  const Field& f = h.field();
  const FunctionSpace& a = h.domain();
  const FunctionSpace& b = h.codomain();
  VerifyResult out;
  if (d.source.size() != b.length() || d.omega.size() != b.length())
    throw Error(ErrorCode::LengthMismatch, "decomposition does not cover every point of the codomain");
  for (PointIndex x : d.source)
    if (x >= a.length()) throw Error(ErrorCode::UnknownPoint, "decomposition names a point outside the domain");

  for (PointIndex y = 0; y < b.length() && out.ok; ++y) {
    const Functional phi = functional_at(h, y);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (d.omega[y].is_zero() || phi.coeffs[i] != f.mul(d.omega[y], a.generator()(i, d.source[y]))) {
        out.ok = false;
        out.failing_row = i;
        out.failing_y = y;
        break;
      }
    }
  }
  if (!out.ok || a.codeword_count() > limits.max_enum) return out;

  out.full_check = true;
  const auto count = a.codeword_count();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const Func u = a.codeword(idx);
    const auto fx = a.values(u);
    const auto hy = h.image_values(u);
    for (PointIndex y = 0; y < b.length(); ++y) {
      const Elem expected = f.mul(d.omega[y], fx[d.source[y]]);
      const bool implication = !hy[y].is_zero() || fx[d.source[y]].is_zero();
      if (hy[y] != expected || !implication) {
        out.ok = false;
        out.failing_y = y;
        out.failing_codeword = u;
        return out;
      }
    }
  }
  return out;
}

HProperties h_properties(const Decomposition& d, const LinMap& h) {
  const FunctionSpace& a = h.domain();
  const FunctionSpace& b = h.codomain();
  const Quotient& qa = d.domain_classes;
  const Quotient& qb = d.codomain_classes;
  HProperties p;

  p.constant_on_classes = true;
  for (PointIndex y = 0; y < b.length(); ++y)
    if (d.h[y] != d.h[qb.rep(qb.class_of(y))]) p.constant_on_classes = false;

  p.cozero_inclusion = true;
  for (std::size_t i = 0; i < a.dim() && p.cozero_inclusion; ++i) {
    const Func g = a.basis(i);
    const auto allowed = qa.project(a.coz(g));
    for (PointIndex y : b.coz(h.apply(g)).points())
      if (!std::binary_search(allowed.begin(), allowed.end(), d.h[y])) {
        p.cozero_inclusion = false;
        break;
      }
  }

  std::vector<bool> hit(qa.class_count(), false);
  for (ClassId c : d.h) hit[c] = true;
  p.onto = std::all_of(hit.begin(), hit.end(), [](bool v) { return v; });

  // Induced map on classes of Y.
  bool injective = p.constant_on_classes;
  std::vector<int> seen(qa.class_count(), -1);
  for (ClassId cy = 0; cy < qb.class_count() && injective; ++cy) {
    const ClassId cx = d.h[qb.rep(cy)];
    if (seen[cx] >= 0) injective = false;
    seen[cx] = static_cast<int>(cy);
  }
  p.class_bijection = injective && p.onto;
  return p;
}

bool omega_cocycle_check(const Decomposition& d, const LinMap& h, const Quotient& qa, const Quotient& qb) {
  const Field& f = h.field();
  const FunctionSpace& a = h.domain();
  auto direct = [&](PointIndex x, PointIndex y) {
    return proportionality(f, functional_at(h, y).coeffs, a.column(x));
  };
  for (ClassId cy = 0; cy < qb.class_count(); ++cy) {
    for (PointIndex y : qb.members(cy)) {
      const ClassId cx = d.h.at(y);
      const auto stored = direct(qa.rep(cx), y);
      if (!stored || *stored != d.omega.at(y)) return false;
      for (PointIndex y2 : qb.members(cy)) {
        if (d.h.at(y2) != cx) return false;
        for (PointIndex x : qa.members(cx))
          for (PointIndex x2 : qa.members(cx)) {
            const auto lhs = direct(x2, y2);
            const auto w = direct(x, y);
            if (!lhs || !w) return false;
            const Elem rhs = f.mul(f.mul(qb.lambda(f, y2, y), *w), qa.lambda(f, x, x2));
            if (*lhs != rhs) return false;
          }
      }
    }
  }
  return true;
}

std::variant<MonomialMap, NotMonomial> monomial_form(const Decomposition& d, const LinMap& h) {
  const FunctionSpace& a = h.domain();
  const FunctionSpace& b = h.codomain();
  if (!d.verified) return NotMonomial{"decomposition not verified"};
  if (!d.domain_classes.is_trivial()) return NotMonomial{"nontrivial domain quotient"};
  if (!d.codomain_classes.is_trivial()) return NotMonomial{"nontrivial codomain quotient"};
  if (a.length() != b.length()) return NotMonomial{"domain and codomain differ in length"};
  std::vector<bool> hit(a.length(), false);
  for (PointIndex x : d.source) {
    if (hit[x]) return NotMonomial{"support map is not a bijection"};
    hit[x] = true;
  }
  MonomialMap t{d.source, d.omega};
  const Field& f = h.field();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Func g = a.basis(i);
    const auto expected = monomial_apply(f, t, a.values(g));
    if (expected != h.image_values(g))
      throw Error(ErrorCode::TheoremViolation, "monomial reconstruction differs from the map");
  }
  return t;
}

}  // namespace mwext
