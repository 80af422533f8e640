#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace mwext::oracle {
namespace {

std::vector<unsigned> digits(unsigned p, unsigned m, unsigned a) {
  std::vector<unsigned> d(m);
  for (unsigned i = 0; i < m; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

unsigned pack(unsigned p, const std::vector<unsigned>& d) {
  unsigned v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

bool vanishes_on(const std::vector<Elem>& values, const PointSet& s) {
  for (PointIndex x : s.points())
    if (!values[x].is_zero()) return false;
  return true;
}

PointSet coz(const std::vector<Elem>& values) {
  PointSet s(values.size());
  for (PointIndex x = 0; x < values.size(); ++x)
    if (!values[x].is_zero()) s.insert(x);
  return s;
}

}  // namespace

unsigned poly_add(unsigned p, unsigned m, unsigned a, unsigned b) {
  auto da = digits(p, m, a);
  const auto db = digits(p, m, b);
  for (unsigned i = 0; i < m; ++i) da[i] = (da[i] + db[i]) % p;
  return pack(p, da);
}

unsigned poly_mul(unsigned p, const std::vector<unsigned>& modulus, unsigned a, unsigned b) {
  const unsigned m = static_cast<unsigned>(modulus.size()) - 1;
  const auto da = digits(p, m, a);
  const auto db = digits(p, m, b);
  std::vector<unsigned> prod(2 * m, 0);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  // Long division by the monic modulus, highest degree first.
  const unsigned lead_inv = [&] {
    for (unsigned c = 1; c < p; ++c)
      if (c * modulus[m] % p == 1) return c;
    return 1U;
  }();
  for (std::size_t d = prod.size(); d-- > m;) {
    const unsigned c = prod[d] * lead_inv % p;
    if (c == 0) continue;
    for (unsigned i = 0; i <= m; ++i) prod[d - m + i] = (prod[d - m + i] + p * p - c * modulus[i] % p) % p;
  }
  prod.resize(m);
  return pack(p, prod);
}

std::vector<Elem> values_of(const FunctionSpace& a, const std::vector<Elem>& coeffs) {
  const Field& f = a.field();
  std::vector<Elem> v(a.length());
  for (PointIndex x = 0; x < a.length(); ++x) {
    Elem s = f.zero();
    for (std::size_t i = 0; i < coeffs.size(); ++i) s = f.add(s, f.mul(coeffs[i], a.generator()(i, x)));
    v[x] = s;
  }
  return v;
}

std::vector<std::vector<Elem>> all_coeffs(const FunctionSpace& a) {
  const unsigned q = a.field().order();
  std::vector<std::vector<Elem>> out{std::vector<Elem>(a.dim())};
  for (std::size_t j = 0; j < a.dim(); ++j) {
    std::vector<std::vector<Elem>> next;
    // Coefficient j is digit j, so it varies slowest among the first j + 1.
    for (unsigned c = 0; c < q; ++c)
      for (auto u : out) {
        u[j] = Elem{c};
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<std::vector<Elem>> all_values(const FunctionSpace& a) {
  std::vector<std::vector<Elem>> out;
  for (const auto& u : all_coeffs(a)) out.push_back(values_of(a, u));
  return out;
}

Rational weight_by_sum(const PointSpace& s, const std::vector<Elem>& values) {
  Rational w = 0;
  for (PointIndex x = 0; x < values.size(); ++x)
    if (!values[x].is_zero()) w += s.measure_of(x);
  return w;
}

bool related_by_definition(const FunctionSpace& a, PointIndex x1, PointIndex x2) {
  for (const auto& v : all_values(a)) {
    const bool product_zero = v[x1].is_zero() || v[x2].is_zero();
    if (product_zero && !(v[x1].is_zero() && v[x2].is_zero())) return false;
  }
  return true;
}

std::optional<Elem> lambda_by_search(const FunctionSpace& a, PointIndex x1, PointIndex x2) {
  const Field& f = a.field();
  const auto all = all_values(a);
  for (unsigned c = 1; c < f.order(); ++c) {
    bool ok = true;
    for (const auto& v : all) ok = ok && v[x1] == f.mul(Elem{c}, v[x2]);
    if (ok) return Elem{c};
  }
  return std::nullopt;
}

std::vector<PointSet> ring_by_definition(const FunctionSpace& a) {
  std::set<std::vector<PointIndex>> seen;
  std::vector<PointSet> ring;
  auto add = [&](const PointSet& s) {
    if (seen.insert(s.points()).second) ring.push_back(s);
  };
  for (const auto& v : all_values(a)) add(coz(v));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t before = ring.size();
        add(ring[i] | ring[j]);
        add(ring[i] & ring[j]);
        grew = grew || ring.size() != before;
      }
  }
  return ring;
}

bool control_exists(const FunctionSpace& a, const std::vector<PointSet>& ring, const std::vector<Elem>& f_values,
                    const PointSet& d1, const PointSet& d2) {
  const PointSet zf = coz(f_values).complement();
  const auto all = all_values(a);
  for (const auto& u : ring) {
    if (!d1.is_subset_of(u) || !u.is_disjoint(d2)) continue;
    for (const auto& g : all) {
      bool ok = true;
      for (PointIndex x : d1.points()) ok = ok && g[x] == f_values[x];
      ok = ok && vanishes_on(g, zf | u.complement());
      if (ok) return true;
    }
  }
  return false;
}

bool controllable_by_definition(const FunctionSpace& a, const std::vector<PointSet>& ring) {
  for (const auto& f : all_values(a))
    for (const auto& d1 : ring)
      for (const auto& d2 : ring)
        if (d1.is_disjoint(d2) && !control_exists(a, ring, f, d1, d2)) return false;
  return true;
}

std::vector<Elem> image_values(const LinMap& h, const std::vector<Elem>& coeffs) {
  const Field& f = h.field();
  std::vector<Elem> image(h.codomain().dim());
  for (std::size_t j = 0; j < image.size(); ++j)
    for (std::size_t i = 0; i < coeffs.size(); ++i) image[j] = f.add(image[j], f.mul(coeffs[i], h.matrix()(i, j)));
  return values_of(h.codomain(), image);
}

bool isometry_by_definition(const LinMap& h) {
  std::set<std::vector<Elem>> images;
  for (const auto& u : all_coeffs(h.domain())) {
    const auto hv = image_values(h, u);
    if (weight_by_sum(h.codomain().space(), hv) != weight_by_sum(h.domain().space(), values_of(h.domain(), u)))
      return false;
    images.insert(hv);
  }
  // Injective, and onto because every codomain member is some image.
  return images.size() == all_coeffs(h.codomain()).size() && images.size() == all_coeffs(h.domain()).size();
}

bool separating_by_definition(const LinMap& h) {
  const auto us = all_coeffs(h.domain());
  std::vector<PointSet> cz, hcz;
  for (const auto& u : us) {
    cz.push_back(coz(values_of(h.domain(), u)));
    hcz.push_back(coz(image_values(h, u)));
  }
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = i + 1; j < us.size(); ++j)
      if (cz[i].is_disjoint(cz[j]) && !hcz[i].is_disjoint(hcz[j])) return false;
  return true;
}

bool support_by_definition(const LinMap& h, PointIndex y, const PointSet& k) {
  for (const auto& u : all_coeffs(h.domain()))
    if (vanishes_on(values_of(h.domain(), u), k) && !image_values(h, u)[y].is_zero()) return false;
  return true;
}

bool proportional_to_some_evaluation(const FunctionSpace& a, const std::vector<Elem>& functional) {
  const Field& f = a.field();
  for (PointIndex x = 0; x < a.length(); ++x)
    for (unsigned c = 1; c < f.order(); ++c) {
      bool ok = true;
      for (std::size_t i = 0; i < a.dim(); ++i) ok = ok && functional[i] == f.mul(Elem{c}, a.generator()(i, x));
      if (ok) return true;
    }
  return false;
}

std::optional<std::pair<PointSet, PointSet>> disjoint_cover(const std::vector<PointSet>& ring, const PointSet& k1,
                                                            const PointSet& k2) {
  for (const auto& d1 : ring) {
    if (!k1.is_subset_of(d1)) continue;
    for (const auto& d2 : ring)
      if (k2.is_subset_of(d2) && d1.is_disjoint(d2)) return std::make_pair(d1, d2);
  }
  return std::nullopt;
}

std::vector<PointSet> saturated_sets(const FunctionSpace& a) {
  // Classes straight from the definition: x and y share a class iff related.
  const std::size_t n = a.length();
  std::vector<PointSet> classes;
  std::vector<bool> placed(n, false);
  for (PointIndex x = 0; x < n; ++x) {
    if (placed[x]) continue;
    PointSet c(n);
    for (PointIndex y = x; y < n; ++y)
      if (!placed[y] && related_by_definition(a, x, y)) {
        c.insert(y);
        placed[y] = true;
      }
    classes.push_back(c);
  }
  std::vector<PointSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << classes.size()); ++mask) {
    PointSet s(n);
    for (std::size_t c = 0; c < classes.size(); ++c)
      if ((mask >> c) & 1U) s = s | classes[c];
    out.push_back(s);
  }
  return out;
}

}  // namespace mwext::oracle

namespace mwext::corpus {

std::vector<SpacePtr> random_codes(std::uint64_t seed, std::size_t count) {
  gen::Rng rng(seed);
  const std::vector<std::pair<unsigned, unsigned>> fields{{2, 1}, {3, 1}, {2, 2}, {5, 1}};
  std::vector<SpacePtr> out;
  while (out.size() < count) {
    const auto [p, m] = fields[std::uniform_int_distribution<std::size_t>(0, fields.size() - 1)(rng)];
    const auto n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
    const auto k = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(4, n))(rng);
    out.push_back(gen::random_code(rng, Field::make(p, m), gen::random_space(rng, n, false), k));
  }
  return out;
}

std::vector<SpacePtr> classical_codes(std::uint64_t seed, std::size_t count) {
  gen::Rng rng(seed);
  std::vector<SpacePtr> out;
  const std::size_t per_field = count / 2;
  for (unsigned p : {2U, 3U}) {
    auto f = Field::make(p, 1);
    std::vector<SpacePtr> base;
    for (std::size_t i = 0; i < (per_field + 1) / 2; ++i) {
      const auto k = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
      base.push_back(gen::random_code(rng, f, PointSpace::uniform(5), k));
    }
    for (const auto& c : base) out.push_back(c);
    for (std::size_t i = 0; i < per_field - base.size(); ++i) {
      const auto t = gen::random_monomial(rng, *f, 5);
      const auto image = gen::planted_monomial(base[i % base.size()], t).codomain_ptr();
      std::vector<std::vector<Elem>> rows;
      for (std::size_t r = 0; r < image->dim(); ++r)
        rows.emplace_back(image->generator().row(r).begin(), image->generator().row(r).end());
      out.push_back(std::make_shared<const FunctionSpace>(FunctionSpace::make(f, PointSpace::uniform(5), rows)));
    }
  }
  return out;
}

}  // namespace mwext::corpus
