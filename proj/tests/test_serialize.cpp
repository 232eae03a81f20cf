#include <kgenus/number_theory.hpp>
#include <kgenus/serialize.hpp>

#include <doctest.h>

#include <random>

using namespace kgenus;

TEST_CASE("genus JSON") {
  const RectorInvariant g(Sign::plus, {{3, Sign::minus}, {7, Sign::minus}});
  CHECK(to_json(g).dump() == R"({"default":"+1","exceptions":{"3":"-1","7":"-1"}})");
  CHECK(genus_from_json(to_json(g)) == g);
  CHECK(genus_from_json(Json::parse(R"({"default":"-1"})")) == RectorInvariant(Sign::minus));
  CHECK_THROWS_AS(genus_from_json(Json::parse(R"({"default":"0"})")), std::invalid_argument);
  CHECK_THROWS_AS(genus_from_json(Json::parse(R"({"default":"+1","exceptions":{"4":"-1"}})")), std::invalid_argument);
  CHECK_THROWS_AS(genus_from_json(Json::parse(R"({"default":1})")), std::invalid_argument);
  CHECK_THROWS_AS(genus_from_json(Json::parse(R"({"defaults":"+1"})")), std::invalid_argument);
  CHECK_THROWS_AS(genus_from_json(Json::parse("[1]")), std::invalid_argument);
}

TEST_CASE("inline genus grammar") {
  CHECK(parse_genus_spec("default=+1") == RectorInvariant::hp_infinity());
  CHECK(parse_genus_spec("3:-1;default=+1") == RectorInvariant(Sign::plus, {{3, Sign::minus}}));
  CHECK(parse_genus_spec(" 3:-1 , 7:+1 ; default=-1 ") == RectorInvariant(Sign::minus, {{3, Sign::minus}, {7, Sign::plus}}));
  CHECK(parse_genus_spec("5:-1") == RectorInvariant(Sign::plus, {{5, Sign::minus}}));
  CHECK(parse_genus_spec("") == RectorInvariant::hp_infinity());
  CHECK(parse_genus_spec(R"({"default":"+1","exceptions":{"5":"-1"}})") == RectorInvariant(Sign::plus, {{5, Sign::minus}}));
  CHECK_THROWS_AS(parse_genus_spec("3-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_genus_spec("3:-1;default=0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_genus_spec("x:-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_genus_spec("9:-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_genus_spec("3:-1,3:+1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_genus_spec("default=+1;default=-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_genus_spec("{not json"), std::invalid_argument);
}

TEST_CASE("inline and JSON forms round-trip random genus points") {
  std::mt19937_64 rng(37);
  const auto primes = primes_up_to(100);
  for (int trial = 0; trial < 200; ++trial) {
    std::map<std::uint64_t, Sign> ex;
    for (const auto p : primes)
      if (rng() % 4 == 0) ex[p] = rng() % 2 ? Sign::plus : Sign::minus;
    const RectorInvariant g(rng() % 2 ? Sign::plus : Sign::minus, ex);
    REQUIRE(parse_genus_spec(format_genus_spec(g)) == g);
    REQUIRE(genus_from_json(Json::parse(to_json(g).dump())) == g);
  }
}

TEST_CASE("verdict and report JSON") {
  const std::uint64_t primes[] = {3, 5, 7};
  const auto v = admissible(RectorInvariant(Sign::plus, {{3, Sign::minus}}), 2, primes);
  CHECK(to_json(v).dump() ==
        R"({"degree":2,"outcome":"Obstructed","prime":5,"required":"-1","actual":"+1","tested":[3,5,7],"skipped":[]})");
  const auto ok = admissible(RectorInvariant::hp_infinity(), 1, primes);
  CHECK(to_json(ok).dump() ==
        R"({"degree":1,"outcome":"Admissible","prime":null,"required":null,"actual":null,"tested":[3,5,7],"skipped":[]})");
  CHECK(to_json(forced_genus(6, 10)).dump() ==
        R"({"degree":6,"bound":10,"forced":{"5":"+1","7":"-1"},"free":[2,3],"free_count_total":2,"max_surviving_genus_points":4})");
  CHECK(to_json(example_xp(7)).dump() ==
        R"({"prime":7,"genus":{"default":"+1","exceptions":{"7":"-1"}},"witness":3})");
}

TEST_CASE("coefficient JSON") {
  CHECK(coefficient_json(Coefficient(-12)) == Json(-12));
  CHECK(coefficient_json(Coefficient("100000000000000000000000")) == Json("100000000000000000000000"));
}
