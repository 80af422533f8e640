#include <gtest/gtest.h>

#include "mwext/error.hpp"
#include "mwext/io.hpp"
#include "mwext/report.hpp"
#include "oracles.hpp"

namespace mwext {
namespace {

const std::filesystem::path kData = MWEXT_TEST_DATA;

std::pair<ErrorCode, std::string> failure_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return {e.code(), e.field()};
  }
  return {ErrorCode::InvalidArgument, "<no error>"};
}

TEST(Io, FieldRoundTrip) {
  for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {3, 2}, {5, 1}, {2, 3}}) {
    const auto f = Field::make(p, m);
    EXPECT_TRUE(*field_from_json(field_to_json(*f)) == *f);
  }
  EXPECT_EQ(field_from_json(json{{"p", 2}, {"m", 2}, {"modulus", "auto"}})->order(), 4U);
  EXPECT_EQ(field_from_json(json{{"p", 3}})->order(), 3U);
}

TEST(Io, SchemaErrorsNameTheField) {
  const json good = load_json_file(kData / "gf3_plane.json");
  auto with = [&](const std::string& path, json value) {
    json j = good;
    j[json::json_pointer(path)] = std::move(value);
    return j;
  };
  EXPECT_EQ(failure_of([&] { code_from_json(with("/field/p", 4)); }), std::make_pair(ErrorCode::NonPrime, std::string("field.p")));
  EXPECT_EQ(failure_of([&] { code_from_json(with("/field/p", "two")); }).second, "field.p");
  EXPECT_EQ(failure_of([&] { code_from_json(with("/rows", json::array({json::array({1, 0}), json::array({0, 0})}))); }).second,
            "rows");
  EXPECT_EQ(failure_of([&] { code_from_json(with("/rows/0/0", 7)); }).first, ErrorCode::FieldMismatch);
  json missing = good;
  missing.erase("rows");
  EXPECT_EQ(failure_of([&] { code_from_json(missing); }), std::make_pair(ErrorCode::SchemaViolation, std::string("rows")));
  EXPECT_EQ(failure_of([] { parse_json("{\"p\": "); }).first, ErrorCode::ParseError);
  EXPECT_EQ(failure_of([] { load_json_file("/nonexistent/code.json"); }).first, ErrorCode::ParseError);
}

TEST(Io, CodeAndSpaceRoundTrip) {
  const auto a = code_from_json(load_json_file(kData / "mu_half_one_two.json"));
  EXPECT_EQ(a->space().measure(PointSet::of(3, {0})), Rational(1, 2));
  const auto back = code_from_json(code_to_json(*a));
  EXPECT_EQ(back->length(), a->length());
  EXPECT_EQ(back->generator(), a->generator());
  EXPECT_EQ(space_to_json(back->space()), space_to_json(a->space()));
  for (const auto& a2 : corpus::random_codes(81, 10)) {
    const auto b = code_from_json(code_to_json(*a2));
    EXPECT_EQ(b->generator(), a2->generator());
    EXPECT_TRUE(b->field() == a2->field());
  }
}

TEST(Io, MapsResolveRelativePaths) {
  const LinMap m = map_from_json(json{{"domain", "planted_a.json"}, {"codomain", "planted_b.json"},
                                      {"matrix", json::array({json::array({1, 0}), json::array({0, 1})})}},
                                 kData);
  EXPECT_EQ(m.domain().length(), 4U);
  const auto mismatch = failure_of([&] {
    map_from_json(json{{"domain", "gf2_plane.json"}, {"codomain", "gf3_plane.json"},
                       {"matrix", json::array({json::array({1, 0}), json::array({0, 1})})}},
                  kData);
  });
  EXPECT_EQ(mismatch, std::make_pair(ErrorCode::FieldMismatch, std::string("codomain.field")));
}

TEST(Io, DecompositionFromJsonRoundTrip) {
  const LinMap h = map_from_json(load_json_file(kData / "identity_map.json"), kData);
  const Report r = decompose_report({}, h);
  ASSERT_EQ(r.verdict, 0);
  const Decomposition d = decomposition_from_json(r.body, h);
  EXPECT_TRUE(verify(d, h, {}).ok);
  EXPECT_EQ(verify_report({}, h, d).body.at("verified"), true);

  json tampered = r.body;
  tampered["omega"]["x1"] = 2;
  const Report bad = verify_report({}, h, decomposition_from_json(tampered, h));
  EXPECT_EQ(bad.body.at("verified"), false);
  EXPECT_EQ(bad.verdict, 2);

  json unknown = r.body;
  unknown["h"]["x1"] = "nowhere";
  EXPECT_EQ(failure_of([&] { decomposition_from_json(unknown, h); }).first, ErrorCode::UnknownPoint);
}

TEST(Report, EnvelopeAndDeterminism) {
  const auto a = code_from_json(load_json_file(kData / "mu_half_one_two.json"));
  const Report w = weight_report({}, *a, a->from_input_coeffs(std::vector<Elem>{Elem{1}, Elem{1}, Elem{0}}));
  EXPECT_EQ(w.body.at("schema"), kSchemaVersion);
  EXPECT_EQ(w.body.at("weight"), "3/2");
  EXPECT_EQ(w.body.at("config").at("seed"), nullptr);
  EXPECT_EQ(render(w.body), render(weight_report({}, *a, a->from_input_coeffs(std::vector<Elem>{Elem{1}, Elem{1}, Elem{0}})).body));

  const LinMap nonsep = map_from_json(load_json_file(kData / "nonseparating_map.json"), kData);
  const Report d1 = decompose_report({}, nonsep);
  EXPECT_EQ(d1.verdict, 2);
  EXPECT_EQ(d1.body.at("status"), "refuted");
  EXPECT_EQ(d1.body.at("witness").at("y"), "b");
  EXPECT_EQ(render(d1.body), render(decompose_report({}, nonsep).body));
}

TEST(Report, SampleModeNeedsASeed) {
  const LinMap id = map_from_json(load_json_file(kData / "identity_map.json"), kData);
  RunConfig cfg;
  cfg.samples = 10;
  EXPECT_EQ(failure_of([&] { isometry_report(cfg, id); }), std::make_pair(ErrorCode::SchemaViolation, std::string("seed")));
  cfg.seed = 7;
  const Report r = isometry_report(cfg, id);
  EXPECT_EQ(r.body.at("mode"), "probabilistic");
  EXPECT_EQ(render(r.body), render(isometry_report(cfg, id).body));
}

TEST(Report, ErrorJsonShape) {
  const json e = error_json(Error(ErrorCode::EnumerationTooLarge, "too many", "max_enum"));
  EXPECT_EQ(e.at("schema"), kSchemaVersion);
  EXPECT_EQ(e.at("error").at("kind"), "GuardExceeded");
  EXPECT_EQ(e.at("error").at("field"), "max_enum");
  EXPECT_EQ(error_json(Error(ErrorCode::SearchTooLarge, "x")).at("error").at("field"), "max_search");
  EXPECT_EQ(error_json(Error(ErrorCode::ParseError, "x")).at("error").at("kind"), "ParseError");
  EXPECT_TRUE(error_json(Error(ErrorCode::ParseError, "x")).at("error").at("field").is_null());
  EXPECT_EQ(error_json(Error(ErrorCode::TheoremViolation, "x")).at("error").at("kind"), "TheoremViolation");
  EXPECT_EQ(error_json(Error(ErrorCode::ZeroColumn, "x", "rows")).at("error").at("kind"), "SchemaViolation");
}

TEST(Report, MacwilliamsAndSelftest) {
  const auto a = code_from_json(load_json_file(kData / "planted_a.json"));
  const auto b = code_from_json(load_json_file(kData / "planted_b.json"));
  const auto c = code_from_json(load_json_file(kData / "inequivalent_b.json"));
  const Report yes = macwilliams_report({}, a, b);
  EXPECT_EQ(yes.verdict, 0);
  EXPECT_EQ(yes.body.at("decompose_roundtrip"), true);
  EXPECT_EQ(macwilliams_report({}, a, c).verdict, 2);
  const Report st = selftest_report({});
  EXPECT_EQ(st.verdict, 0);
}

}  // namespace
}  // namespace mwext
