#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "qdrazin/errors.hpp"
#include "qdrazin/json_io.hpp"

namespace qdrazin {
namespace {

TEST(JsonIo, Rationals) {
  EXPECT_EQ(rational_from_json(Json(3)), Rational(3));
  EXPECT_EQ(rational_from_json(Json("-3/6")), Rational(-1, 2));
  EXPECT_EQ(rational_from_json(Json(18446744073709551615ull)).to_string(),
            "18446744073709551615");
  EXPECT_THROW(rational_from_json(Json(0.5)), ParseError);
  EXPECT_THROW(rational_from_json(Json(nullptr)), ParseError);
  EXPECT_THROW(rational_from_json(Json("1/0")), ParseError);
  EXPECT_EQ(rational_to_json(Rational(-7)), Json(-7));
  EXPECT_EQ(rational_to_json(Rational(1, 8)), Json("1/8"));
}

TEST(JsonIo, Quaternions) {
  EXPECT_EQ(quaternion_from_json(Json::parse(R"([1, "1/2", 0, -3])")),
            Quaternion(1, Rational(1, 2), 0, -3));
  EXPECT_THROW(quaternion_from_json(Json::parse("[1, 2, 3]")), ParseError);
  EXPECT_THROW(quaternion_from_json(Json::parse("{}")), ParseError);
  EXPECT_EQ(quaternion_to_json(Quaternion(0, 0, Rational(-3, 8), 2)).dump(), R"([0,0,"-3/8",2])");
}

TEST(JsonIo, Matrices) {
  const Json j = Json::parse(R"({"rows": 1, "cols": 2, "data": [[[1,0,0,0],[0,0,0,"1/2"]]]})");
  const QMatrix m = matrix_from_json(j);
  EXPECT_EQ(m, (QMatrix{{1, Quaternion(0, 0, 0, Rational(1, 2))}}));
  EXPECT_EQ(matrix_to_json(m), j);
  for (const char* bad : {
           R"({"rows": 2, "cols": 1, "data": [[[1,0,0,0]]]})",
           R"({"rows": 1, "cols": 2, "data": [[[1,0,0,0]]]})",
           R"({"rows": 0, "cols": 1, "data": []})",
           R"({"rows": 1, "data": [[[1,0,0,0]]]})",
           R"({"rows": 1, "cols": 1})",
           R"({"rows": 1, "cols": 1, "data": [[[1.5,0,0,0]]]})",
           R"([1, 2])",
       }) {
    EXPECT_THROW(matrix_from_json(Json::parse(bad)), ParseError) << bad;
  }
}

TEST(JsonIo, PrettyForm) {
  const Json p = matrix_to_pretty_json(testing::worked_d_tilde());
  EXPECT_EQ(p["data"][0][0], "1 - i");
  EXPECT_EQ(p["data"][1][1], "1 - k");
}

TEST(JsonIoProperty, RoundTrip) {
  testing::Gen gen(0x150a01);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Quaternion> entries;
    const std::size_t r = static_cast<std::size_t>(gen.integer(1, 4));
    const std::size_t c = static_cast<std::size_t>(gen.integer(1, 4));
    for (std::size_t e = 0; e < r * c; ++e) entries.push_back(gen.rational_quaternion(50));
    const QMatrix m(r, c, std::move(entries));
    EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
    EXPECT_EQ(matrix_from_json(Json::parse(matrix_to_json(m).dump())), m);
  }
}

}  // namespace
}  // namespace qdrazin
