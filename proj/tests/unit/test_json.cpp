#include <doctest.h>

#include "fibcl/error.hpp"
#include "fibcl/json_io.hpp"

using namespace fibcl;

TEST_SUITE("json") {

TEST_CASE("Q(sqrt5) round trip") {
  const QSqrt5 x(Rat(-7, 3), Rat(5, 2));
  const Json j = to_json(x);
  CHECK(j.dump() == R"({"a":"-7/3","b":"5/2"})");
  CHECK(qsqrt5_from_json(j) == x);
  CHECK_THROWS_AS(qsqrt5_from_json(Json{{"a", "1"}}), Error);
  CHECK_THROWS_AS(qsqrt5_from_json(Json{{"a", 1}, {"b", "0"}}), Error);
}

TEST_CASE("quaternion round trip") {
  const Quaternion x(AlgebraParams(Rat(-1, 2), 3), {Rat(1), Rat(-2, 5), Rat(0), Rat(7)});
  const Json j = to_json(x);
  CHECK(j.dump() == R"({"beta1":"-1/2","beta2":"3","coeffs":["1","-2/5","0","7"]})");
  CHECK(quaternion_from_json(j) == x);
  CHECK_THROWS_AS(quaternion_from_json(Json::parse(R"({"beta1":"1","beta2":"1","coeffs":["1"]})")), Error);
  CHECK_THROWS_AS(quaternion_from_json(Json::parse(R"({"beta1":"0","beta2":"1","coeffs":["1","0","0","0"]})")),
                  Error);
}

TEST_CASE("certificate round trip") {
  const auto c = invertibility_threshold(AlgebraParams(Rat(-1, 2), Rat(-1, 2)));
  const Json j = to_json(c);
  CHECK(j.at("n_prime") == 1);
  CHECK(j.at("limit_sign") == 1);
  CHECK(certificate_from_json(j) == c);
  CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"n_prime":1,"horizon":2,"limit_sign":0})")), Error);
  CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"n_prime":1})")), Error);
}

TEST_CASE("classification report layout") {
  const Json j = to_json(classify(AlgebraParams(1, -1)));
  CHECK(j.dump() ==
        R"({"beta1":"1","beta2":"-1","E":{"a":"-2","b":"-1"},"sign_E":-1,"input_is_division":false,)"
        R"j("n_prime":0,"form":["-4","-11"],"clifford_class":"Division","canonical":"H(1,1)",)j"
        R"("scaling_witness":["4","11"]})");
  const Json h = to_json(classify(AlgebraParams(Rat(-1, 2), Rat(-1, 2))));
  CHECK(h.at("E").dump() == R"({"a":"3/20","b":"0"})");
  CHECK(h.at("canonical") == "H(-1,-1)");
  CHECK(h.at("n_prime") == 1);
}

TEST_CASE("growth profile serializes every constant") {
  const Json j = to_json(growth_profile(AlgebraParams(1, -1)));
  CHECK(j.size() == 4);
  CHECK(qsqrt5_from_json(j.at("E")) == energy_E(AlgebraParams(1, -1)));
}

}  // TEST_SUITE
