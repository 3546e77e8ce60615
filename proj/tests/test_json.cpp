#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>

#include "bac/json.hpp"
#include "bac/randgen.hpp"
#include "bac/torsion.hpp"

using namespace bac;

namespace {
const FieldDesc Q = FieldDesc::rationals();
const FieldDesc F101 = FieldDesc::prime(101);

json fixture(const std::string& name) {
  std::vector<std::string> candidates;
  if (const char* dir = std::getenv("BAC_FIXTURES")) candidates.push_back(dir);
  candidates.push_back("fixtures");
  candidates.push_back("../fixtures");
  candidates.push_back("../../fixtures");
  for (const auto& dir : candidates) {
    std::ifstream in(dir + "/" + name);
    if (in.good()) return json::parse(in);
  }
  FAIL("fixture " << name << " not found; set BAC_FIXTURES");
  return json();
}
}  // namespace

TEST_CASE("scalar and field encodings") {
  CHECK(scalar_to_json(Scalar::rational(2, 3)) == json("2/3"));
  CHECK(scalar_to_json(Scalar::rational(-5, 1)) == json("-5"));
  CHECK(scalar_to_json(Scalar::from_int(F101, 7)) == json(7));
  CHECK(field_to_json(Q) == json({{"field", "Q"}}));
  CHECK(field_to_json(F101) == json({{"field", "Fp"}, {"p", 101}}));
  CHECK(field_from_json(json{{"field", "Q"}}) == Q);
  CHECK(field_from_json(json{{"field", "Fp"}, {"p", 101}}) == F101);
  CHECK_THROWS_AS(field_from_json(json{{"field", "Fp"}, {"p", 4}}), ParseError);
  CHECK_THROWS_AS(field_from_json(json{{"field", "R"}}), ParseError);
  CHECK(scalar_from_json(json("2/3"), Q) == Scalar::rational(2, 3));
  CHECK(scalar_from_json(json(-3), F101).res() == 98);
  CHECK_THROWS_AS(scalar_from_json(json("x"), Q), ParseError);
}

TEST_CASE("complex round trips preserve objects exactly") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const FieldDesc& f = seed % 2 ? Q : F101;
    GenConfig cfg{seed, f, 2, 3, 3};

    ChainComplex c = gen_acyclic(cfg);
    CHECK(chain_from_json(to_json(c)) == c);

    BinaryComplex p = gen_binary(cfg);
    CHECK(binary_from_json(to_json(p)) == p);

    BinaryLadder l = gen_ladder(cfg);
    BinaryLadder l2 = ladder_from_json(to_json(l));
    CHECK(l2.source == l.source);
    CHECK(l2.sigma == l.sigma);
    CHECK(l2.tau == l.tau);

    BinarySes s = gen_ses(cfg);
    BinarySes s2 = ses_from_json(to_json(s));
    CHECK(s2.total == s.total);
    CHECK(s2.incl == s.incl);

    NenashevDiagram d = gen_nenashev(cfg);
    NenashevDiagram d2 = nenashev_from_json(to_json(d));
    CHECK(to_json(d2).dump() == to_json(d).dump());

    RelationExpr e;
    e.add(2, p).add(-1, p);
    RelationExpr e2 = relation_from_json(to_json(e));
    CHECK(eval_torsion(e2) == eval_torsion(e));
  }
}

TEST_CASE("empty matrices survive the round trip") {
  BinaryComplex p = shift_binary(two_term(Matrix::from_ints(Q, {{2}}), Matrix::from_ints(Q, {{3}})), 2);
  CHECK(binary_from_json(to_json(p)) == p);
}

TEST_CASE("fractional entries survive the round trip") {
  Matrix a = Matrix::from_strings({{"7/5", "-1/3"}, {"0", "2"}});
  Matrix b = Matrix::from_strings({{"1", "4"}, {"-2/7", "1/2"}});
  BinaryComplex p = two_term(a, b);
  CHECK(binary_from_json(to_json(p)) == p);
  CHECK(to_json(p)["top"][0][0][0] == "7/5");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(binary_from_json(json{{"field", "Q"}}), json::exception);
  json bad = to_json(gen_binary({3, F101, 2, 3, 3}));
  bad["dims"] = {1, 2};  // differential count no longer matches
  CHECK_THROWS_AS(binary_from_json(bad), ParseError);
  json nonprime = bad;
  nonprime["p"] = 6;
  CHECK_THROWS_AS(binary_from_json(nonprime), ParseError);
}

TEST_CASE("shipped fixtures") {
  BinaryComplex p = binary_from_json(fixture("two_term_2_3.json"));
  CHECK(binary_torsion(p) == Scalar::rational(2, 3));

  BinaryComplex ref = binary_from_json(fixture("reference_121.json"));
  CHECK(binary_torsion(ref) == Scalar::from_int(Q, -1));

  BinaryComplex diag = binary_from_json(fixture("diagonal_11.json"));
  CHECK(diag.is_diagonal());
  CHECK(binary_torsion(diag).is_one());

  BinaryLadder l = ladder_from_json(fixture("ladder_trivial.json"));
  CHECK(validate_ladder(l));
}
