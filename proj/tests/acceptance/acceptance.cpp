// Acceptance gate: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "mwext/decompose.hpp"
#include "mwext/error.hpp"
#include "mwext/io.hpp"
#include "mwext/macwilliams.hpp"
#include "mwext/report.hpp"
#include "oracles.hpp"

using namespace mwext;

namespace {

// Time budgets in seconds.
constexpr double kFieldBudget = 1.0;
constexpr double kMetricBudget = 30.0;
constexpr double kInstanceBudget = 1.0;
constexpr double kMacwilliamsBudget = 300.0;

constexpr std::uint64_t kCorpusSeed = 20240601;
constexpr std::size_t kCorpusSize = 50;
constexpr std::size_t kPlantedCount = 200;
constexpr std::size_t kTriplesPerInstance = 100;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const std::vector<SpacePtr>& corpus_codes() {
  static const auto codes = corpus::random_codes(kCorpusSeed, kCorpusSize);
  return codes;
}

std::uint64_t index_of(const Field& f, const std::vector<Elem>& coeffs) {
  std::uint64_t idx = 0;
  for (std::size_t j = coeffs.size(); j-- > 0;) idx = idx * f.order() + coeffs[j].index();
  return idx;
}

std::vector<Elem> add_vec(const Field& f, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  std::vector<Elem> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Outcome fields() {
  const auto t0 = Clock::now();
  std::size_t count = 0;
  for (unsigned q = 2; q <= 16; ++q) {
    unsigned p = 0, m = 0;
    for (unsigned cand = 2; cand <= q && !p; ++cand) {
      unsigned v = q, e = 0;
      while (v % cand == 0) v /= cand, ++e;
      if (v == 1) p = cand, m = e;
      else if (e > 0) break;
    }
    if (!p) continue;
    const auto f = Field::make(p, m);
    const auto el = f->elements();
    for (Elem a : el) {
      if (f->add(a, f->zero()) != a || f->mul(a, f->one()) != a) return {false, f->name() + ": identity"};
      if (!f->add(a, f->neg(a)).is_zero()) return {false, f->name() + ": additive inverse"};
      if (!a.is_zero() && f->mul(a, f->inv(a)) != f->one()) return {false, f->name() + ": multiplicative inverse"};
      for (Elem b : el) {
        if (f->add(a, b) != f->add(b, a) || f->mul(a, b) != f->mul(b, a)) return {false, f->name() + ": commutativity"};
        if (f->mul(a, b).index() != oracle::poly_mul(p, f->modulus(), a.index(), b.index()))
          return {false, f->name() + ": product disagrees with polynomial arithmetic"};
        if (f->add(a, b).index() != oracle::poly_add(p, m, a.index(), b.index()))
          return {false, f->name() + ": sum disagrees with polynomial arithmetic"};
        for (Elem c : el) {
          if (f->add(f->add(a, b), c) != f->add(a, f->add(b, c))) return {false, f->name() + ": additive associativity"};
          if (f->mul(f->mul(a, b), c) != f->mul(a, f->mul(b, c))) return {false, f->name() + ": associativity"};
          if (f->mul(a, f->add(b, c)) != f->add(f->mul(a, b), f->mul(a, c))) return {false, f->name() + ": distributivity"};
        }
      }
    }
    ++count;
  }
  const double t = seconds_since(t0);
  std::ostringstream os;
  os << count << " fields, " << t << " s";
  return {count == 10 && t < kFieldBudget, os.str()};
}

// Triangle inequality over all triples follows from wt(a + b) <= wt(a) + wt(b)
// over all pairs once d(u, v) = wt(u - v) is established for every pair.
// Literal triples are sampled on top.
Outcome metric() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(kCorpusSeed + 2);
  std::uint64_t pairs = 0;
  for (const auto& a : corpus_codes()) {
    const Field& f = a->field();
    const auto coeffs = oracle::all_coeffs(*a);
    const auto values = oracle::all_values(*a);
    std::vector<Rational> wt;
    for (const auto& v : values) wt.push_back(oracle::weight_by_sum(a->space(), v));
    std::vector<Func> words;
    for (const auto& c : coeffs) words.push_back(Func{c});
    const std::size_t n = words.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Rational d = a->distance(words[i], words[j]);
        if (d != a->distance(words[j], words[i])) return {false, "symmetry"};
        if ((d == 0) != (i == j)) return {false, "identity of indiscernibles"};
        std::vector<Elem> diff(coeffs[i].size());
        for (std::size_t t = 0; t < diff.size(); ++t) diff[t] = f.sub(coeffs[i][t], coeffs[j][t]);
        if (d != wt[index_of(f, diff)]) return {false, "translation invariance"};
        if (wt[index_of(f, add_vec(f, coeffs[i], coeffs[j]))] > wt[i] + wt[j]) return {false, "triangle inequality"};
        ++pairs;
      }
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int s = 0; s < 200; ++s) {
      const auto& u = words[pick(rng)];
      const auto& v = words[pick(rng)];
      const auto& w = words[pick(rng)];
      if (a->distance(u, w) > a->distance(u, v) + a->distance(v, w)) return {false, "sampled triangle"};
    }
  }
  const double t = seconds_since(t0);
  std::ostringstream os;
  os << corpus_codes().size() << " codes, " << pairs << " pairs, " << t << " s";
  return {t < kMetricBudget, os.str()};
}

Outcome quotient_oracle() {
  std::uint64_t pairs = 0, cocycles = 0;
  for (const auto& a : corpus_codes()) {
    const Quotient q = Quotient::build(*a);
    const Field& f = a->field();
    const std::size_t n = a->length();
    for (PointIndex x1 = 0; x1 < n; ++x1)
      for (PointIndex x2 = 0; x2 < n; ++x2) {
        const bool def = oracle::related_by_definition(*a, x1, x2);
        if (related(*a, x1, x2, {}) != def || related_fast(*a, x1, x2).has_value() != def ||
            (q.class_of(x1) == q.class_of(x2)) != def)
          return {false, "related disagrees with the definition"};
        ++pairs;
        if (!def) continue;
        if (q.lambda(f, x1, x2) != *oracle::lambda_by_search(*a, x1, x2)) return {false, "lambda disagrees with search"};
        if (q.lambda(f, x2, x1) != f.inv(q.lambda(f, x1, x2))) return {false, "lambda inverse identity"};
        for (PointIndex x : q.members(q.class_of(x1))) {
          if (q.lambda(f, x1, x2) != f.mul(q.lambda(f, x1, x), q.lambda(f, x, x2))) return {false, "lambda cocycle"};
          ++cocycles;
        }
      }
  }
  return {true, std::to_string(pairs) + " point pairs, " + std::to_string(cocycles) + " cocycle identities"};
}

Outcome additivity() {
  std::uint64_t pairs = 0, disjoint = 0;
  for (const auto& a : corpus_codes()) {
    const Field& f = a->field();
    const auto coeffs = oracle::all_coeffs(*a);
    const auto values = oracle::all_values(*a);
    std::vector<Rational> wt;
    for (const auto& v : values) wt.push_back(oracle::weight_by_sum(a->space(), v));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        bool dis = true;
        for (std::size_t x = 0; x < a->length(); ++x)
          dis = dis && (values[i][x].is_zero() || values[j][x].is_zero());
        const bool additive = wt[index_of(f, add_vec(f, coeffs[i], coeffs[j]))] == wt[i] + wt[j];
        if (dis != additive) return {false, "lemma fails"};
        if (disjointness_additivity(*a, Func{coeffs[i]}, Func{coeffs[j]}) != dis) return {false, "library disagrees"};
        ++pairs;
        disjoint += dis;
      }
  }
  return {true, std::to_string(pairs) + " pairs, " + std::to_string(disjoint) + " disjoint"};
}

Outcome isometry_separating() {
  std::mt19937_64 rng(kCorpusSeed + 5);
  const std::vector<std::pair<unsigned, unsigned>> fields{{2, 1}, {3, 1}, {2, 2}};
  std::size_t ok = 0;
  for (std::size_t i = 0; i < kPlantedCount; ++i) {
    const auto [p, m] = fields[i % fields.size()];
    const auto f = Field::make(p, m);
    const std::size_t n = 1 + rng() % 6;
    const auto a = gen::full_space(f, PointSpace::uniform(n));
    const LinMap h = gen::planted_monomial(a, gen::random_monomial(rng, *f, n));
    if (is_isometry(h, {}).isometry && is_separating(h, {}).separating) ++ok;
  }
  return {ok == kPlantedCount, std::to_string(ok) + "/" + std::to_string(kPlantedCount) + " planted maps"};
}

// Random isometries of A onto A found by trying random invertible matrices.
std::optional<LinMap> random_found_isometry(gen::Rng& rng, const SpacePtr& a) {
  for (int trial = 0; trial < 200; ++trial) {
    Matrix m(a->dim(), a->dim());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (auto& e : m.row(i)) e = gen::random_elem(rng, a->field());
    if (!inverse(a->field(), m)) continue;
    const LinMap h(a, a, m);
    if (h.matrix() == Matrix::identity(a->dim())) continue;
    if (is_isometry(h, {}).isometry) return h;
  }
  return std::nullopt;
}

bool reconstructs(const Decomposition& d, const LinMap& h) {
  const Field& f = h.domain().field();
  for (const auto& u : oracle::all_coeffs(h.domain())) {
    const auto fx = oracle::values_of(h.domain(), u);
    const auto hy = oracle::image_values(h, u);
    for (PointIndex y = 0; y < hy.size(); ++y)
      if (hy[y] != f.mul(d.omega[y], fx[d.source[y]])) return false;
  }
  return true;
}

Outcome main_theorem() {
  gen::Rng rng(kCorpusSeed + 6);
  std::size_t instances = 0, found = 0;
  double worst = 0;
  for (const auto& a : corpus_codes()) {
    if (!is_controllable(*a, {}).controllable) continue;
    std::vector<LinMap> maps{gen::planted_isometry(rng, a)};
    if (auto r = random_found_isometry(rng, a)) {
      maps.push_back(*r);
      ++found;
    }
    for (const auto& h : maps) {
      const auto t0 = Clock::now();
      const auto r = decompose(h);
      const auto* d = std::get_if<Decomposition>(&r);
      if (!d) return {false, "refutation on a controllable isometry"};
      const auto v = verify(*d, h, {});
      const double t = seconds_since(t0);
      worst = std::max(worst, t);
      if (!d->verified || !v.ok || !v.full_check) return {false, "decomposition not verified on all codewords"};
      if (!reconstructs(*d, h)) return {false, "reconstruction fails under the oracle"};
      ++instances;
    }
  }
  std::ostringstream os;
  os << instances << " instances (" << found << " randomly found), worst " << worst << " s";
  return {instances > 0 && worst < kInstanceBudget, os.str()};
}

Outcome monomial_roundtrip() {
  gen::Rng rng(kCorpusSeed + 7);
  const std::vector<std::pair<unsigned, unsigned>> fields{{2, 1}, {3, 1}, {2, 2}, {5, 1}};
  std::size_t ok = 0;
  for (std::size_t i = 0; i < kPlantedCount; ++i) {
    const auto [p, m] = fields[i % fields.size()];
    const auto f = Field::make(p, m);
    const std::size_t n = 1 + rng() % 8;
    const auto a = gen::full_space(f, PointSpace::uniform(n));
    const MonomialMap t = gen::random_monomial(rng, *f, n);
    const LinMap h = gen::planted_monomial(a, t);
    const auto r = decompose(h);
    const auto* d = std::get_if<Decomposition>(&r);
    if (!d || !d->verified) continue;
    const auto form = monomial_form(*d, h);
    const auto* back = std::get_if<MonomialMap>(&form);
    if (back && *back == t) ++ok;
  }
  return {ok == kPlantedCount, std::to_string(ok) + "/" + std::to_string(kPlantedCount) + " exact recoveries"};
}

Outcome negative_certificate() {
  const auto a = gen::full_space(Field::make(2, 1), PointSpace({"a", "b"}, {1, 1}));
  const LinMap h(a, a, Matrix::from_rows({{Elem{1}, Elem{1}}, {Elem{0}, Elem{1}}}, 2));
  const auto r = decompose(h);
  const auto* ref = std::get_if<Refutation>(&r);
  if (!ref) return {false, "no refutation"};
  // The reported functional is phi_y itself: Hf(y) on every codeword.
  for (const auto& u : oracle::all_coeffs(*a)) {
    Elem dot{0};
    for (std::size_t i = 0; i < u.size(); ++i) dot = a->field().add(dot, a->field().mul(u[i], ref->functional.coeffs[i]));
    if (dot != oracle::image_values(h, u)[ref->y]) return {false, "functional is not phi_y"};
  }
  if (oracle::proportional_to_some_evaluation(*a, ref->functional.coeffs))
    return {false, "functional is proportional to an evaluation"};
  return {true, "refuted at y=" + a->space().label(ref->y)};
}

Outcome macwilliams() {
  const auto t0 = Clock::now();
  const auto codes = corpus::classical_codes(kCorpusSeed + 9, 20);
  std::size_t pairs = 0, equivalent = 0, skipped = 0;
  for (std::size_t i = 0; i < codes.size(); ++i)
    for (std::size_t j = i; j < codes.size(); ++j) {
      if (!(codes[i]->field() == codes[j]->field())) {
        ++skipped;
        continue;
      }
      try {
        const auto r = equivalence_decide(codes[i], codes[j], SearchOptions{{}, false});
        if (r.equivalent) {
          if (!carries_onto(*r.monomial, *codes[i], *codes[j])) return {false, "monomial witness fails"};
          if (!oracle::isometry_by_definition(*r.isometry)) return {false, "isometry witness fails"};
          ++equivalent;
        }
      } catch (const Error& e) {
        if (e.code() == ErrorCode::TheoremViolation) return {false, "TheoremViolation fired"};
        throw;
      }
      ++pairs;
    }
  const double t = seconds_since(t0);
  std::ostringstream os;
  os << pairs << " same-field pairs (" << equivalent << " equivalent), " << skipped << " cross-field pairs skipped, "
     << t << " s";
  return {t < kMacwilliamsBudget, os.str()};
}

Outcome controllability() {
  std::size_t full = 0;
  for (unsigned p : {2U, 3U})
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto a = gen::full_space(Field::make(p, 1), PointSpace::uniform(n));
      if (!is_controllable(*a, {}).controllable) return {false, "F^X not controllable"};
      ++full;
    }
  std::size_t negatives = 0, checked = 0, guarded = 0;
  for (const auto& a : corpus_codes()) {
    Controllability c;
    try {
      c = is_controllable(*a, {});
    } catch (const Error& e) {
      ++guarded;
      continue;
    }
    ++checked;
    if (c.controllable) continue;
    ++negatives;
    if (!c.witness) return {false, "negative verdict without witness"};
    const auto ring = oracle::ring_by_definition(*a);
    const auto& w = *c.witness;
    auto in_ring = [&](const PointSet& s) { return std::find(ring.begin(), ring.end(), s) != ring.end(); };
    if (!in_ring(w.d1) || !in_ring(w.d2) || !w.d1.is_disjoint(w.d2)) return {false, "witness sets invalid"};
    if (oracle::control_exists(*a, ring, oracle::values_of(*a, w.f.coeffs), w.d1, w.d2))
      return {false, "witness passes the definitional check"};
  }
  std::ostringstream os;
  os << full << " full spaces controllable; " << checked << " corpus codes checked, " << negatives
     << " witnesses re-verified";
  if (guarded) os << ", " << guarded << " over guard";
  return {true, os.str()};
}

Outcome supports() {
  gen::Rng rng(kCorpusSeed + 11);
  std::size_t instances = 0, triples = 0, intersections = 0;
  for (const auto& a : corpus_codes()) {
    const LinMap h = gen::planted_isometry(rng, a);
    const Quotient qa = Quotient::build(*a);
    const bool controllable = is_controllable(*a, {}).controllable;
    const auto coeffs = oracle::all_coeffs(*a);
    const auto values = oracle::all_values(*a);
    const PointSet all = PointSet::full(a->length());
    for (PointIndex y = 0; y < h.codomain().length(); ++y) {
      // (a)
      if (!is_support(h, qa, y, all) || !oracle::support_by_definition(h, y, all)) return {false, "(a) fails"};
      const Functional phi = functional_at(h, y);
      const auto scan = scan_supports(h, qa, y, {});
      // (c): g = f + z with z vanishing on a support K.
      std::uniform_int_distribution<std::size_t> pick_k(0, scan.supports.size() - 1);
      std::uniform_int_distribution<std::size_t> pick_f(0, coeffs.size() - 1);
      for (std::size_t s = 0; s < kTriplesPerInstance; ++s) {
        const PointSet& k = scan.supports[pick_k(rng)];
        std::vector<std::size_t> vanishing;
        for (std::size_t i = 0; i < values.size(); ++i) {
          bool zero = true;
          for (PointIndex x : k.points()) zero = zero && values[i][x].is_zero();
          if (zero) vanishing.push_back(i);
        }
        const auto& f = coeffs[pick_f(rng)];
        const auto& z = coeffs[vanishing[std::uniform_int_distribution<std::size_t>(0, vanishing.size() - 1)(rng)]];
        const auto g = add_vec(a->field(), f, z);
        const auto fv = oracle::values_of(*a, f), gv = oracle::values_of(*a, g);
        for (PointIndex x : k.points())
          if (fv[x] != gv[x]) return {false, "(c) premise construction"};
        if (apply_functional(a->field(), phi, Func{f}) != apply_functional(a->field(), phi, Func{g}))
          return {false, "(c) fails"};
        ++triples;
      }
      // (d)
      if (controllable)
        for (const auto& k1 : scan.supports)
          for (const auto& k2 : scan.supports) {
            if (k1.is_disjoint(k2)) return {false, "(d) fails"};
            ++intersections;
          }
    }
    ++instances;
  }
  std::ostringstream os;
  os << instances << " instances, " << triples << " triples, " << intersections << " support pairs intersect";
  return {true, os.str()};
}

std::string report_battery() {
  std::string out;
  auto emit = [&](const Report& r) { out += render(r.body) + "\n"; };
  RunConfig cfg;
  gen::Rng rng(kCorpusSeed + 12);
  for (std::size_t i = 0; i < 12; ++i) {
    const auto& a = corpus_codes()[i];
    emit(quotient_report(cfg, *a));
    emit(ring_report(cfg, *a));
    emit(controllable_report(cfg, *a));
    emit(weight_report(cfg, *a, a->codeword(a->codeword_count() - 1)));
    const LinMap h = gen::planted_isometry(rng, a);
    emit(isometry_report(cfg, h));
    emit(separating_report(cfg, h));
    emit(decompose_report(cfg, h));
    emit(monomial_form_report(cfg, h));
  }
  const auto codes = corpus::classical_codes(kCorpusSeed + 9, 6);
  for (std::size_t i = 0; i + 1 < codes.size(); ++i)
    if (codes[i]->field() == codes[i + 1]->field()) emit(macwilliams_report(cfg, codes[i], codes[i + 1]));
  emit(selftest_report(cfg));
  RunConfig sampled;
  sampled.samples = 16;
  sampled.seed = 3;
  const auto full = gen::full_space(Field::make(3, 1), PointSpace::uniform(3));
  emit(isometry_report(sampled, LinMap(full, full, Matrix::identity(3))));
  return out;
}

Outcome determinism() {
  const std::string first = report_battery();
  const std::string second = report_battery();
  return {first == second, std::to_string(first.size()) + " bytes compared"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"field correctness", fields},
      {"metric axioms", metric},
      {"quotient oracle equivalence", quotient_oracle},
      {"additivity lemma", additivity},
      {"isometry implies separating", isometry_separating},
      {"isometries decompose on controllable codes", main_theorem},
      {"monomial round trip", monomial_roundtrip},
      {"negative certificate", negative_certificate},
      {"MacWilliams consistency", macwilliams},
      {"controllability sanity", controllability},
      {"support properties", supports},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
