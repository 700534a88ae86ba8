#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rba/constructions.hpp"
#include "rba/serialize.hpp"

using namespace rba;

namespace {

RadicalNumber sq(long q) { return RadicalNumber::sqrt(Rational(q)); }

}  // namespace

TEST_CASE("radical numbers round trip") {
    const std::vector<RadicalNumber> values{
        RadicalNumber(), RadicalNumber(Rational(-7, 3)), sq(2) - sq(3) * RadicalNumber(Rational(5, 12)),
        RadicalNumber(Rational(Integer("123456789012345678901234567890"), Integer("7"))) + sq(30)};
    for (const auto& v : values) {
        CHECK(radical_from_json(to_json(v)) == v);
        CHECK(radical_from_json(Json::parse(to_json(v).dump())) == v);
    }
    CHECK(to_json(RadicalNumber()) == Json::array());
}

TEST_CASE("lenient radical parsing") {
    CHECK(radical_from_json(Json(3)) == RadicalNumber(3L));
    CHECK(radical_from_json(Json("3/4")) == RadicalNumber(Rational(3, 4)));
    CHECK(radical_from_json(Json::parse(R"([{"num": 2, "den": 4, "rad": 8}])")) == sq(2));
    CHECK(radical_from_json(Json::parse(R"([{"num": "1"}])")) == RadicalNumber(1L));
    CHECK_THROWS_AS(radical_from_json(Json::parse(R"([{"num": 1, "den": 0}])")), ParseError);
    CHECK_THROWS_AS(radical_from_json(Json::parse(R"([{"num": 1, "rad": -2}])")), ParseError);
    CHECK_THROWS_AS(radical_from_json(Json::parse(R"([{"den": 1}])")), ParseError);
    CHECK_THROWS_AS(radical_from_json(Json::parse(R"({"num": 1})")), ParseError);
}

TEST_CASE("bases and presentations round trip") {
    const auto basis = cm_basis(CmParams{3, 7});
    CHECK(basis_from_json(Json::parse(to_json(basis).dump())) == basis);
    const auto pres = dim5_presentation(Dim5Params{2, 5, Rational(3, 7)});
    CHECK(presentation_from_json(Json::parse(to_json(pres).dump())) == pres);
    const auto delta = dim5_degree_map(Dim5Params{2, 5, Rational(3, 7)});
    CHECK(degree_map_from_json(to_json(delta)) == delta);
    const Json j = to_json(pres);
    CHECK(j.at("d") == 4);
    CHECK(j.at("star") == Json::parse("[0,1,2,4,3]"));
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"d": 1, "star": [0], "lambda": []})")), ParseError);
    CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"d": 1, "star": [1, 0], "lambda": []})")), ParseError);
    CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"d": 1, "star": [0, 1]})")), ParseError);
    CHECK_THROWS_AS(
        presentation_from_json(Json::parse(R"({"d": 1, "star": [0, 1], "lambda": [{"i":0,"j":0,"k":5,"value":1}]})")),
        ParseError);
    CHECK_THROWS_AS(basis_from_json(Json::parse(R"({"shape": [2], "elements": [[[[1,0],[0]]]]})")), ParseError);
    CHECK_THROWS_AS(basis_from_json(Json::parse(R"({"shape": [1], "elements": [[[[2]]]]})")), ParseError);
}

TEST_CASE("latex matrices factor out the common denominator") {
    const auto b = cm_matrices(CmParams{3, 7});
    CHECK(latex(b[0]) ==
          "\\frac{1}{9}\\begin{bmatrix}-1 - 16\\sqrt{3} & 8 & 8 \\\\ 8 & -1 + 8\\sqrt{3} & 8 \\\\ 8 & 8 & -1 + "
          "8\\sqrt{3}\\end{bmatrix}");
    CHECK(latex(Matrix::identity(2)) == "\\begin{bmatrix}1 & 0 \\\\ 0 & 1\\end{bmatrix}");
    CHECK(latex(RadicalNumber(5L) / sq(6)) == "\\frac{5}{6}\\sqrt{6}");
    CHECK(latex(-sq(2)) == "-\\sqrt{2}");
    CHECK(latex(RadicalNumber()) == "0");
}

TEST_CASE("latex lambda table groups equal values") {
    const auto text = latex_lambda_table(dim5_presentation(Dim5Params{6, 6, 6}));
    const auto at = text.find("\\lambda_{111} = ");
    REQUIRE(at != std::string::npos);
    const auto line_end = text.find('\n', at);
    CHECK(text.substr(at, line_end - at).find("= \\frac{7}{8} \\\\") != std::string::npos);
    CHECK(text.find("\\lambda_{134} = \\lambda_{143}") != std::string::npos);
}

TEST_CASE("decimal display") {
    const auto text = decimal(dim5_family(Dim5Params{6, 6, 6}), 6);
    CHECK(text.find("2.041241") != std::string::npos);
    CHECK(decimal_lambda_table(dim5_presentation(Dim5Params{6, 6, 6}), 3).find("lambda[1,1,1] = 0.875") !=
          std::string::npos);
}
