#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "lspecial/json_io.hpp"
#include "lspecial/quartic.hpp"

using namespace lspecial;

namespace {

std::mt19937 rng(31337);

Scalar random_exact() {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 40);
  return Scalar::exact(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

Scalar random_approx() {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  // exercise non-representable decimals: round trips must still be bit-exact
  return Scalar::approx(u(rng) / 3.0, u(rng) / 7.0);
}

}  // namespace

TEST_CASE("scalar serialization shapes") {
  CHECK(scalar_to_json(Scalar::exact(Rational(1, 2), Rational(-3))).dump() ==
        R"(["1/2","-3/1"])");
  CHECK(scalar_to_json(Scalar::approx(0.5, 0.0)).dump() == "[0.5,0.0]");
  CHECK_THROWS_AS(scalar_from_json(Json::parse(R"(["1/2",0.5])")), ParseError);
  CHECK_THROWS_AS(scalar_from_json(Json::parse(R"([1])")), ParseError);
  CHECK_THROWS_AS(scalar_from_json(Json::parse(R"(["1/0","0"])")),
                  ZeroDenominatorError);
}

TEST_CASE("scalar round trips are bit-exact on both backends") {
  for (int it = 0; it < 200; ++it) {
    const Scalar e = random_exact();
    CHECK(scalar_from_json(scalar_to_json(e)) == e);
    const Scalar a = random_approx();
    CHECK(scalar_from_json(Json::parse(scalar_to_json(a).dump())) == a);
  }
}

TEST_CASE("bivariate polynomials serialize in grlex order") {
  BivarPoly p(VarSpace::XY, Backend::Exact);
  p.add_term(0, 0, Scalar::exact_int(-1));
  p.add_term(0, 2, Scalar::exact_int(2));
  p.add_term(2, 0, Scalar::exact_int(1));
  const Json j = bivar_to_json(p);
  CHECK(j["space"] == "xy");
  REQUIRE(j["terms"].size() == 3);
  CHECK(j["terms"][0]["e"] == Json::array({2, 0}));
  CHECK(j["terms"][1]["e"] == Json::array({0, 2}));
  CHECK(j["terms"][2]["e"] == Json::array({0, 0}));
  CHECK(j.dump() ==
        R"({"space":"xy","terms":[{"e":[2,0],"c":["1/1","0/1"]},)"
        R"({"e":[0,2],"c":["2/1","0/1"]},{"e":[0,0],"c":["-1/1","0/1"]}]})");
  CHECK(bivar_from_json(j) == p);
}

TEST_CASE("polynomial round trips preserve every coefficient") {
  std::uniform_int_distribution<int> deg(0, 5);
  for (int it = 0; it < 50; ++it) {
    BivarPoly p(it % 2 ? VarSpace::XY : VarSpace::ZW, Backend::Exact);
    for (int i = 0; i <= deg(rng); ++i)
      for (int j = 0; j <= deg(rng); ++j) p.add_term(i, j, random_exact());
    CHECK(bivar_from_json(Json::parse(bivar_to_json(p).dump())) == p);
    UnivarPoly f(Backend::Exact);
    for (int k = deg(rng); k >= 0; --k) f.set_coeff(k, random_exact());
    CHECK(univar_from_json(Json::parse(univar_to_json(f).dump())) == f);
  }
}

TEST_CASE("malformed polynomial documents are rejected") {
  CHECK_THROWS_AS(bivar_from_json(Json::parse(R"({"terms":[]})")), ParseError);
  CHECK_THROWS_AS(bivar_from_json(Json::parse(R"({"space":"uv","terms":[]})")),
                  ParseError);
  CHECK_THROWS_AS(
      bivar_from_json(Json::parse(R"({"space":"xy","terms":[{"e":[1]}]})")),
      ParseError);
  CHECK_THROWS_AS(univar_from_json(Json::parse(R"({})")), ParseError);
  // empty term lists are legal and give the zero polynomial
  CHECK(bivar_from_json(Json::parse(R"({"space":"zw","terms":[]})")).is_zero());
  CHECK(univar_from_json(Json::parse(R"({"coeffs":[]})")).is_zero());
}

TEST_CASE("obstruction report document shape") {
  ObstructionReport r;
  r.total_nullity = 2;
  r.trivial_dim = 1;
  r.exists_admissible = true;
  CandidatePair c;
  c.f1.set_coeff(2, Scalar::exact_int(2));
  c.f2.set_coeff(0, Scalar::one(Backend::Exact));
  c.f2.set_coeff(2, Scalar::one(Backend::Exact));
  c.cofactor = BivarPoly::constant(VarSpace::ZW, Scalar::exact_int(1));
  r.genuine_solutions.push_back(c);
  const Json j = obstruction_report_to_json(r);
  CHECK(j["total_nullity"] == 2);
  CHECK(j["trivial_dim"] == 1);
  CHECK(j["exists_admissible"] == true);
  REQUIRE(j["genuine_solutions"].size() == 1);
  CHECK(j["genuine_solutions"][0]["f1"]["coeffs"].size() == 3);
  CHECK(j["genuine_solutions"][0]["cofactor"]["space"] == "zw");
}

TEST_CASE("construction report carries all certificate fields") {
  const QuarticConstruction qc = build_construction(solve_beta());
  const Json j = construction_to_json(qc);
  for (const char* key : {"beta0", "alpha", "alpha_star", "gamma", "C", "C_pq",
                          "curve", "pair", "residuals", "paper_reference_curve",
                          "notes"})
    CHECK(j.contains(key));
  CHECK(j["C_pq"].size() == 4);
  CHECK(j["pair"]["f1"].size() == 6);
  for (const char* key :
       {"gamma_align", "factor_ids", "full_identity", "modulus", "boundary_eval"})
    CHECK(j["residuals"][key].get<double>() < 1e-9);
  CHECK(j["notes"].size() == 2);
  // the reference curve and the constructed one must disagree in the
  // mixed coefficient -- that mismatch is data the report preserves
  const BivarPoly ref = bivar_from_json(j["paper_reference_curve"]);
  const BivarPoly cur = bivar_from_json(j["curve"]);
  CHECK(std::abs(ref.coeff(2, 2).to_complex().real() -
                 cur.coeff(2, 2).to_complex().real()) > 40.0);
}

TEST_CASE("file round trip and error reporting") {
  const auto path =
      std::filesystem::temp_directory_path() / "lspecial_test_io.json";
  BivarPoly p(VarSpace::XY, Backend::Exact);
  p.add_term(3, 1, Scalar::exact(Rational(22, 7), Rational(-1, 3)));
  save_json_file(bivar_to_json(p), path);
  CHECK(bivar_from_json(load_json_file(path)) == p);
  // byte-identical re-serialization: deterministic output
  const std::string once = load_json_file(path).dump(2);
  save_json_file(load_json_file(path), path);
  CHECK(load_json_file(path).dump(2) == once);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_json_file(path), IoError);
  std::ofstream(path) << "{ not json";
  CHECK_THROWS_AS(load_json_file(path), ParseError);
  std::filesystem::remove(path);
}
