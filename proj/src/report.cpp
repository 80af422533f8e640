#include "mwext/report.hpp"

#include <chrono>

#include "mwext/error.hpp"
#include "mwext/generate.hpp"

namespace mwext {
namespace {

json envelope(const RunConfig& cfg, const char* command) {
  return json{{"schema", kSchemaVersion}, {"command", command}, {"config", config_json(cfg)}};
}

std::optional<SampleMode> sample_mode(const RunConfig& cfg) {
  if (cfg.samples == 0) return std::nullopt;
  if (!cfg.seed) throw Error(ErrorCode::SchemaViolation, "sample mode requires an explicit seed", "seed");
  return SampleMode{cfg.samples, *cfg.seed};
}

json func_json(const FunctionSpace& a, const Func& u) {
  return json{{"coeffs", elems_to_json(u.coeffs)}, {"values", elems_to_json(a.values(u))}};
}

json classes_json(const PointSpace& space, const Quotient& q) {
  json out = json::array();
  for (const auto& cls : q.classes()) {
    json c = json::array();
    for (PointIndex x : cls) c.push_back(space.label(x));
    out.push_back(c);
  }
  return out;
}

json monomial_json(const MonomialMap& t) {
  json sigma = json::array();
  for (auto s : t.sigma) sigma.push_back(s);
  return json{{"sigma", sigma}, {"w", elems_to_json(t.w)}};
}

json decomposition_json(const Decomposition& d, const LinMap& h) {
  const auto& xs = h.domain().space();
  const auto& ys = h.codomain().space();
  json hj = json::object();
  json oj = json::object();
  for (PointIndex y = 0; y < d.source.size(); ++y) {
    hj[ys.label(y)] = xs.label(d.source[y]);
    oj[ys.label(y)] = d.omega[y].index();
  }
  return json{{"h", hj}, {"omega", oj}};
}

}  // namespace

std::string render(const json& body) { return body.dump(2) + "\n"; }

json config_json(const RunConfig& cfg) {
  return json{{"max_enum", cfg.limits.max_enum},
              {"max_ring", cfg.limits.max_ring},
              {"max_search", cfg.limits.max_search},
              {"seed", cfg.seed ? json(*cfg.seed) : json(nullptr)},
              {"samples", cfg.samples},
              {"diagnostic", cfg.diagnostic}};
}

json error_json(const Error& e) {
  std::string kind;
  switch (e.code()) {
    case ErrorCode::ParseError: kind = "ParseError"; break;
    case ErrorCode::EnumerationTooLarge:
    case ErrorCode::RingTooLarge:
    case ErrorCode::SearchTooLarge:
    case ErrorCode::OrderTooLarge: kind = "GuardExceeded"; break;
    default: kind = "SchemaViolation"; break;
  }
  if (e.code() == ErrorCode::TheoremViolation) kind = "TheoremViolation";
  // Guards name the bound that tripped unless the thrower was more specific.
  std::string field = e.field();
  if (field.empty()) {
    if (e.code() == ErrorCode::EnumerationTooLarge) field = "max_enum";
    if (e.code() == ErrorCode::RingTooLarge) field = "max_ring";
    if (e.code() == ErrorCode::SearchTooLarge) field = "max_search";
  }
  return json{{"schema", kSchemaVersion},
              {"error", {{"kind", kind},
                         {"code", std::string(error_code_name(e.code()))},
                         {"field", field.empty() ? json(nullptr) : json(field)},
                         {"message", e.what()}}}};
}

Report weight_report(const RunConfig& cfg, const FunctionSpace& a, const Func& u) {
  json body = envelope(cfg, "weight");
  body["f"] = func_json(a, u);
  body["cozero"] = labels_json(a.space(), a.coz(u));
  body["weight"] = to_string(a.weight(u));
  return {body, 0};
}

Report distance_report(const RunConfig& cfg, const FunctionSpace& a, const Func& u, const Func& v) {
  json body = envelope(cfg, "distance");
  body["f"] = func_json(a, u);
  body["g"] = func_json(a, v);
  body["distance"] = to_string(a.distance(u, v));
  return {body, 0};
}

Report quotient_report(const RunConfig& cfg, const FunctionSpace& a) {
  const Quotient q = Quotient::build(a);
  json body = envelope(cfg, "quotient");
  body["classes"] = classes_json(a.space(), q);
  json lam = json::object();
  for (PointIndex x = 0; x < a.length(); ++x)
    if (q.rep(q.class_of(x)) != x) lam[a.space().label(x)] = q.lambda_to_rep(x).index();
  body["lambda"] = lam;
  return {body, 0};
}

Report ring_report(const RunConfig& cfg, const FunctionSpace& a) {
  const CozRing ring = coz_ring(a, cfg.limits);
  const Quotient q = Quotient::build(a);
  json body = envelope(cfg, "ring");
  json members = json::array();
  bool saturated = true;
  for (const auto& m : ring.members()) {
    members.push_back(labels_json(a.space(), m));
    saturated = saturated && q.is_saturated(m);
  }
  body["members"] = members;
  body["size"] = ring.size();
  body["all_saturated"] = saturated;
  return {body, 0};
}

Report controllable_report(const RunConfig& cfg, const FunctionSpace& a) {
  const CozRing ring = coz_ring(a, cfg.limits);
  const Controllability c = is_controllable(a, ring, cfg.limits);
  json body = envelope(cfg, "controllable");
  body["controllable"] = c.controllable;
  body["ring_size"] = ring.size();
  if (c.witness) {
    body["witness"] = json{{"f", func_json(a, c.witness->f)},
                           {"D1", labels_json(a.space(), c.witness->d1)},
                           {"D2", labels_json(a.space(), c.witness->d2)}};
  } else {
    body["witness"] = nullptr;
  }
  return {body, c.controllable ? 0 : 2};
}

Report isometry_report(const RunConfig& cfg, const LinMap& h) {
  const IsometryCheck c = is_isometry(h, cfg.limits, sample_mode(cfg));
  json body = envelope(cfg, "isometry");
  body["isometry"] = c.isometry;
  body["injective"] = c.injective;
  body["surjective"] = c.surjective;
  body["bijective"] = c.injective && c.surjective;
  body["weight_preserving"] = c.weight_preserving;
  body["failed_clause"] = c.failed_clause.empty() ? json(nullptr) : json(c.failed_clause);
  body["mode"] = c.probabilistic ? "probabilistic" : "exact";
  if (c.witness) {
    body["witness"] = json{{"f", func_json(h.domain(), *c.witness)},
                           {"weight", to_string(h.domain().weight(*c.witness))},
                           {"image_weight", to_string(h.codomain().weight(h.apply(*c.witness)))}};
  } else {
    body["witness"] = nullptr;
  }
  return {body, c.isometry ? 0 : 2};
}

Report separating_report(const RunConfig& cfg, const LinMap& h) {
  const SeparatingCheck c = is_separating(h, cfg.limits, sample_mode(cfg));
  json body = envelope(cfg, "separating");
  body["separating"] = c.separating;
  body["mode"] = c.probabilistic ? "probabilistic" : "exact";
  if (c.witness) {
    const auto& [f, g] = *c.witness;
    body["witness"] = json{{"f", func_json(h.domain(), f)},
                           {"g", func_json(h.domain(), g)},
                           {"Hf", elems_to_json(h.image_values(f))},
                           {"Hg", elems_to_json(h.image_values(g))}};
  } else {
    body["witness"] = nullptr;
  }
  return {body, c.separating ? 0 : 2};
}

Report decompose_report(const RunConfig& cfg, const LinMap& h) {
  const auto result = decompose(h, DecomposeOptions{cfg.diagnostic, cfg.limits});
  json body = envelope(cfg, "decompose");
  body["classes_X"] = classes_json(h.domain().space(), Quotient::build(h.domain()));
  body["classes_Y"] = classes_json(h.codomain().space(), Quotient::build(h.codomain()));
  if (const auto* r = std::get_if<Refutation>(&result)) {
    body["status"] = "refuted";
    body["h"] = nullptr;
    body["omega"] = nullptr;
    body["monomial"] = nullptr;
    body["verified"] = false;
    body["h_properties"] = nullptr;
    body["cocycle"] = nullptr;
    body["witness"] = json{{"y", h.codomain().space().label(r->y)}, {"functional", elems_to_json(r->functional.coeffs)}};
    return {body, 2};
  }
  const auto& d = std::get<Decomposition>(result);
  const json dj = decomposition_json(d, h);
  body["status"] = "composition";
  body["h"] = dj["h"];
  body["omega"] = dj["omega"];
  body["verified"] = d.verified;
  const HProperties p = h_properties(d, h);
  body["h_properties"] = json{{"constant_on_classes", p.constant_on_classes},
                              {"cozero_inclusion", p.cozero_inclusion},
                              {"onto", p.onto},
                              {"class_bijection", p.class_bijection}};
  body["cocycle"] = omega_cocycle_check(d, h, d.domain_classes, d.codomain_classes);
  const auto form = monomial_form(d, h);
  if (const auto* t = std::get_if<MonomialMap>(&form))
    body["monomial"] = monomial_json(*t);
  else
    body["monomial"] = nullptr;
  body["witness"] = nullptr;
  return {body, 0};
}

Report verify_report(const RunConfig& cfg, const LinMap& h, const Decomposition& d) {
  const VerifyResult v = verify(d, h, cfg.limits);
  json body = envelope(cfg, "verify");
  body["verified"] = v.ok;
  body["full_check"] = v.full_check;
  if (v.ok) {
    body["failure"] = nullptr;
  } else {
    json fail = json::object();
    fail["y"] = h.codomain().space().label(*v.failing_y);
    fail["row"] = v.failing_row ? json(*v.failing_row) : json(nullptr);
    fail["f"] = v.failing_codeword ? func_json(h.domain(), *v.failing_codeword) : json(nullptr);
    body["failure"] = fail;
  }
  return {body, v.ok ? 0 : 2};
}

Report monomial_form_report(const RunConfig& cfg, const LinMap& h) {
  const auto result = decompose(h, DecomposeOptions{cfg.diagnostic, cfg.limits});
  json body = envelope(cfg, "monomial-form");
  if (const auto* r = std::get_if<Refutation>(&result)) {
    body["monomial"] = nullptr;
    body["obstruction"] = "no weighted composition form: refuted at '" + h.codomain().space().label(r->y) + "'";
    return {body, 2};
  }
  const auto form = monomial_form(std::get<Decomposition>(result), h);
  if (const auto* t = std::get_if<MonomialMap>(&form)) {
    body["monomial"] = monomial_json(*t);
    body["obstruction"] = nullptr;
    return {body, 0};
  }
  body["monomial"] = nullptr;
  body["obstruction"] = std::get<NotMonomial>(form).obstruction;
  return {body, 2};
}

Report macwilliams_report(const RunConfig& cfg, const SpacePtr& c1, const SpacePtr& c2) {
  const EquivalenceReport r = equivalence_decide(c1, c2, SearchOptions{cfg.limits, true});
  json body = envelope(cfg, "macwilliams");
  body["equivalent"] = r.equivalent;
  body["monomial"] = r.monomial ? monomial_json(*r.monomial) : json(nullptr);
  if (r.isometry) {
    json m = json::array();
    for (std::size_t i = 0; i < r.isometry->matrix().rows(); ++i) m.push_back(elems_to_json(r.isometry->matrix().row(i)));
    body["isometry_matrix"] = m;
  } else {
    body["isometry_matrix"] = nullptr;
  }
  body["decompose_roundtrip"] = r.decompose_roundtrip ? json(*r.decompose_roundtrip) : json(nullptr);
  body["recovered_monomial"] = r.recovered ? monomial_json(*r.recovered) : json(nullptr);
  return {body, r.equivalent ? 0 : 2};
}

// ----------------------------------------------------------------- selftest

namespace {

bool field_axioms(const Field& f) {
  const auto el = f.elements();
  for (Elem a : el) {
    if (f.add(a, f.zero()) != a || f.mul(a, f.one()) != a) return false;
    if (f.add(a, f.neg(a)) != f.zero()) return false;
    if (!a.is_zero() && f.mul(a, f.inv(a)) != f.one()) return false;
    for (Elem b : el) {
      if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a)) return false;
      for (Elem c : el) {
        if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) return false;
        if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) return false;
        if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) return false;
      }
    }
  }
  return true;
}

}  // namespace

Report selftest_report(const RunConfig& cfg) {
  gen::Rng rng(cfg.seed.value_or(0));
  json checks = json::array();
  bool all = true;
  auto record = [&](const char* name, bool passed, std::uint64_t cases) {
    checks.push_back(json{{"name", name}, {"passed", passed}, {"cases", cases}});
    all = all && passed;
  };

  {
    bool ok = true;
    std::uint64_t cases = 0;
    for (unsigned q = 2; q <= 16; ++q)
      for (unsigned p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        unsigned m = 0;
        unsigned v = 1;
        while (v < q) {
          v *= p;
          ++m;
        }
        if (v != q) continue;
        ok = ok && field_axioms(*Field::make(p, m));
        ++cases;
      }
    record("field_axioms", ok, cases);
  }

  const std::vector<unsigned> primes{2, 3, 2, 5};
  const std::vector<unsigned> degrees{1, 1, 2, 1};
  std::vector<SpacePtr> corpus;
  for (int i = 0; i < 8; ++i) {
    const auto pick = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
    auto f = Field::make(primes[pick], degrees[pick]);
    const auto n = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
    const auto k = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(n, 3))(rng);
    corpus.push_back(gen::random_code(rng, f, gen::random_space(rng, n, false), k));
  }

  {
    bool ok = true;
    std::uint64_t cases = 0;
    for (const auto& a : corpus) {
      const auto words = a->codewords(cfg.limits);
      for (const auto& u : words)
        for (const auto& v : words) {
          const Rational d = a->distance(u, v);
          ok = ok && d == a->distance(v, u) && ((d == 0) == (u == v)) && d <= a->weight(u) + a->weight(v);
          ok = ok && disjointness_additivity(*a, u, v) == a->coz(u).is_disjoint(a->coz(v));
          ++cases;
        }
    }
    record("metric_and_additivity", ok, cases);
  }

  {
    bool ok = true;
    std::uint64_t cases = 0;
    for (const auto& a : corpus)
      for (PointIndex x = 0; x < a->length(); ++x)
        for (PointIndex y = 0; y < a->length(); ++y) {
          ok = ok && related(*a, x, y, cfg.limits) == related_fast(*a, x, y).has_value();
          ++cases;
        }
    record("related_oracle", ok, cases);
  }

  {
    bool ok = true;
    std::uint64_t cases = 0;
    for (int i = 0; i < 10; ++i) {
      auto f = Field::make(i % 2 ? 3 : 2, 1);
      const auto n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
      const auto a = gen::full_space(f, gen::random_space(rng, n, true));
      const auto t = gen::random_monomial(rng, *f, n);
      const LinMap h = gen::planted_monomial(a, t);
      ok = ok && is_isometry(h, cfg.limits).isometry && is_separating(h, cfg.limits).separating;
      const auto d = decompose(h);
      ok = ok && std::holds_alternative<Decomposition>(d);
      if (const auto* dd = std::get_if<Decomposition>(&d)) {
        const auto form = monomial_form(*dd, h);
        ok = ok && std::holds_alternative<MonomialMap>(form) && std::get<MonomialMap>(form) == t;
      }
      ++cases;
    }
    record("monomial_roundtrip", ok, cases);
  }

  {
    bool ok = true;
    for (const auto& a : corpus) {
      const LinMap h = gen::planted_isometry(rng, a);
      const auto d = decompose(h);
      ok = ok && is_isometry(h, cfg.limits).isometry && std::holds_alternative<Decomposition>(d) &&
           verify(std::get<Decomposition>(d), h, cfg.limits).ok;
    }
    record("planted_isometry_decomposes", ok, corpus.size());
  }

  {
    bool ok = true;
    std::uint64_t cases = 0;
    for (unsigned p : {2U, 3U})
      for (std::size_t n = 1; n <= 4; ++n) {
        ok = ok && is_controllable(*gen::full_space(Field::make(p, 1), PointSpace::uniform(n)), cfg.limits).controllable;
        ++cases;
      }
    record("full_space_controllable", ok, cases);
  }

  {
    auto f = Field::make(2, 1);
    auto a = gen::full_space(f, PointSpace::uniform(2));
    const LinMap h(a, a, Matrix::from_rows({{Elem{1}, Elem{1}}, {Elem{0}, Elem{1}}}, 2));
    const auto d = decompose(h);
    record("nonseparating_refuted", !is_separating(h, cfg.limits).separating && std::holds_alternative<Refutation>(d), 1);
  }

  {
    bool ok = true;
    for (int i = 0; i < 4; ++i) {
      auto f = Field::make(2 + (i % 2), 1);
      const auto a = gen::random_code(rng, f, PointSpace::uniform(4), 2);
      const auto t = gen::random_monomial(rng, *f, 4);
      const auto b = gen::planted_monomial(a, t).codomain_ptr();
      const auto other = gen::random_code(rng, f, PointSpace::uniform(4), 2);
      const auto c = std::make_shared<const FunctionSpace>(FunctionSpace::make(
          f, PointSpace::uniform(4), {{b->generator().row(0).begin(), b->generator().row(0).end()},
                                      {b->generator().row(1).begin(), b->generator().row(1).end()}}));
      ok = ok && equivalence_decide(a, c, SearchOptions{cfg.limits, false}).equivalent;
      equivalence_decide(a, other, SearchOptions{cfg.limits, false});
    }
    record("macwilliams_consistency", ok, 8);
  }

  json body = envelope(cfg, "selftest");
  body["checks"] = checks;
  body["passed"] = all;
  return {body, all ? 0 : 2};
}

}  // namespace mwext
