#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rba/constructions.hpp"
#include "rba/serialize.hpp"

#include <fstream>
#include <random>

using namespace rba;

namespace {

RadicalNumber sq(long q) { return RadicalNumber::sqrt(Rational(q)); }
RadicalNumber frac(long p, long q) { return RadicalNumber(Rational(p, q)); }

Json load(const std::string& name) {
    std::ifstream in(std::string(RBA_TEST_DATA) + "/" + name);
    REQUIRE(in.good());
    return Json::parse(in);
}

std::array<Sign, 3> signs_from(const std::string& s) {
    auto one = [](char c) { return c == '+' ? Sign::Plus : Sign::Minus; };
    return {one(s[0]), one(s[1]), one(s[2])};
}

std::vector<std::array<Sign, 3>> all_signs() {
    std::vector<std::array<Sign, 3>> out;
    for (const Sign a : {Sign::Plus, Sign::Minus})
        for (const Sign b : {Sign::Plus, Sign::Minus})
            for (const Sign c : {Sign::Plus, Sign::Minus}) out.push_back({a, b, c});
    return out;
}

const Matrix& block(const MatrixBasis& b, std::size_t i) { return b[i][1]; }

}  // namespace

TEST_CASE("rational dim5 basis at degrees (6,6,6)") {
    const auto b = dim5_family(Dim5Params{6, 6, 6});
    CHECK(b[1][0] == Matrix{{6L}});
    CHECK(block(b, 1) == Matrix{{(RadicalNumber(-1L) + RadicalNumber(5L) * sq(3)) / RadicalNumber(4L), 0L},
                                {0L, (RadicalNumber(-1L) - RadicalNumber(5L) * sq(3)) / RadicalNumber(4L)}});
    const RadicalNumber w = RadicalNumber(5L) * sq(6) / RadicalNumber(6L);
    CHECK(block(b, 2) == Matrix{{(RadicalNumber(-3L) - RadicalNumber(5L) * sq(3)) / RadicalNumber(12L), w},
                                {w, (RadicalNumber(-3L) + RadicalNumber(5L) * sq(3)) / RadicalNumber(12L)}});
    CHECK(w == RadicalNumber(5L) / sq(6));
    const RadicalNumber s = block(b, 3)(0, 1);
    const RadicalNumber t = block(b, 3)(1, 0);
    CHECK(s == (RadicalNumber(-5L) * sq(6) + RadicalNumber(15L) * sq(2)) / RadicalNumber(12L));
    CHECK(t == (RadicalNumber(-5L) * sq(6) - RadicalNumber(15L) * sq(2)) / RadicalNumber(12L));
    CHECK((w + s + t).is_zero());
    CHECK((s - t) * (s - t) == RadicalNumber(Rational(2 * 6 * 25, 24)));
    CHECK(block(b, 4) == block(b, 3).transpose());
}

TEST_CASE("closed-form table entries") {
    const auto t = dim5_lambda_table(Dim5Params{6, 6, 6});
    CHECK(t(1, 1, 1) == frac(7, 8));
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> num(1, 30);
    for (int trial = 0; trial < 5; ++trial) {
        const Dim5Params p{Rational(num(rng), 3), Rational(num(rng), 2), Rational(num(rng), 5), all_signs()[trial]};
        const auto table = dim5_lambda_table(p);
        const Rational n = p.order();
        const Rational q = (n - 1) * (n - 1);
        const RadicalNumber l134((n + 1) * p.delta1 * p.delta3 / q);
        CHECK(table(1, 3, 4) == l134);
        CHECK(table(1, 4, 3) == l134);
        CHECK(table(3, 1, 4) == l134);
        CHECK(table(4, 1, 3) == l134);
        const RadicalNumber l331((n + 1) * p.delta3 * p.delta3 / q);
        CHECK(table(3, 3, 1) == l331);
        CHECK(table(3, 3, 2) == l331);
        CHECK(table(3, 3, 4) == l331);
        const long eps = static_cast<long>(p.signs[0]) * static_cast<long>(p.signs[1]) * static_cast<long>(p.signs[2]);
        CHECK(table(1, 2, 3) == (RadicalNumber((n + 1) * p.delta1 * p.delta2) +
                                 RadicalNumber(eps) * RadicalNumber(n - 1) * RadicalNumber::sqrt(n * p.delta1 * p.delta2)) *
                                    RadicalNumber(1 / q));
    }
}

TEST_CASE("printed lambda_342 only holds when delta_1 = delta_2") {
    // As printed, λ_342 = λ_431; the extracted value carries δ₂ instead of δ₁.
    const auto equal = extract_structure_constants(dim5_family(Dim5Params{3, 3, 2})).tensor;
    CHECK(equal(3, 4, 2) == equal(4, 3, 1));
    const auto unequal = extract_structure_constants(dim5_family(Dim5Params{2, 5, Rational(3, 7)})).tensor;
    CHECK(unequal(3, 4, 2) != unequal(4, 3, 1));
    CHECK(unequal(3, 4, 2) == dim5_lambda_table(Dim5Params{2, 5, Rational(3, 7)})(3, 4, 2));
}

TEST_CASE("extraction agrees with the independent numeric oracle") {
    const Json fixture = load("oracle_dim5.json");
    const int digits = fixture.at("digits").get<int>();
    std::size_t compared = 0;
    for (const auto& point : fixture.at("points")) {
        const auto& d = point.at("d");
        const Dim5Params p{parse_rational(d[0].get<std::string>()), parse_rational(d[1].get<std::string>()),
                           parse_rational(d[2].get<std::string>()), signs_from(point.at("signs").get<std::string>())};
        const auto pres = extract_structure_constants(dim5_family(p));
        CHECK(pres.tensor == dim5_lambda_table(p));
        for (const auto& [key, value] : point.at("lambda").items()) {
            const auto i = static_cast<std::size_t>(key[0] - '0');
            const auto j = static_cast<std::size_t>(key[1] - '0');
            const auto k = static_cast<std::size_t>(key[2] - '0');
            CHECK(pres.tensor(i, j, k).to_decimal(digits) == value.get<std::string>());
            ++compared;
        }
    }
    CHECK(compared == 8 * 8 * 125);
}

TEST_CASE("degree-map identities of every family member") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> num(1, 12);
    for (int trial = 0; trial < 4; ++trial) {
        for (const auto& signs : all_signs()) {
            const Dim5Params p{Rational(num(rng), 2), Rational(num(rng), 3), Rational(num(rng), 1), signs};
            const auto b = dim5_family(p);
            const RadicalNumber n1(p.order() - 1);
            const auto& B1 = block(b, 1);
            const auto& B2 = block(b, 2);
            const auto& B3 = block(b, 3);
            CHECK((RadicalNumber(1L) + B1(0, 0) + B2(0, 0) + RadicalNumber(2L) * B3(0, 0)).is_zero());
            CHECK((RadicalNumber(1L) + B1(1, 1) + B2(1, 1) + RadicalNumber(2L) * B3(1, 1)).is_zero());
            CHECK((B1(0, 1) + B2(0, 1) + B3(0, 1) + B3(1, 0)).is_zero());
            const RadicalNumber ratio = RadicalNumber(-2L) / n1;
            CHECK(B1.trace() / RadicalNumber(p.delta1) == ratio);
            CHECK(B2.trace() / RadicalNumber(p.delta2) == ratio);
            CHECK(B3.trace() / RadicalNumber(p.delta3) == ratio);
        }
    }
}

TEST_CASE("dim5 parameters are validated") {
    CHECK_THROWS_AS(dim5_family(Dim5Params{0, 1, 1}), DomainError);
    CHECK_THROWS_AS(dim5_lambda_table(Dim5Params{1, -1, 1}), DomainError);
    CHECK(dim5_star() == InvolutionPerm({0, 1, 2, 4, 3}));
}

TEST_CASE("reflection is an isometry commuting with transpose") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> num(-5, 5);
    auto random3 = [&] {
        Matrix m(3, 3);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) m(r, c) = RadicalNumber(num(rng)) + RadicalNumber(num(rng)) * sq(3);
        return m;
    };
    const Matrix axis = Matrix::identity(3) + Matrix{{1L, 1L, 1L}, {1L, 1L, 1L}, {1L, 1L, 1L}};
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix x = random3();
        const Matrix y = random3();
        CHECK(frobenius(reflect(x, axis), reflect(y, axis)) == frobenius(x, y));
        CHECK(reflect(x.transpose(), axis) == reflect(x, axis).transpose());
    }
    CHECK_THROWS_AS(reflect(Matrix::identity(2), Matrix(2, 2)), DomainError);
}

TEST_CASE("reflection sends the sum to -I") {
    for (const CmParams& p : {CmParams{2, 1}, CmParams{3, 7}, CmParams{4, Rational(1, 2)}}) {
        const auto raw = cm_raw_matrices(p);
        Matrix sum(p.m, p.m);
        for (const auto& b : raw) sum += b;
        CHECK(reflect(sum, sum + Matrix::identity(p.m)) == -Matrix::identity(p.m));
    }
}

TEST_CASE("printed reflected matrices for m = 3, delta = 7") {
    const auto b = cm_matrices(CmParams{3, 7});
    const RadicalNumber s3 = sq(3);
    auto e = [&](long a, long c) { return RadicalNumber(a) + RadicalNumber(c) * s3; };
    const RadicalNumber ninth = frac(1, 9);
    const Matrix b11 = Matrix{{e(-1, -16), 8L, 8L}, {8L, e(-1, 8), 8L}, {8L, 8L, e(-1, 8)}} * ninth;
    const Matrix b12 = Matrix{{-1L, e(-4, -20), e(-4, 4)}, {e(-4, 4), -1L, e(-4, 4)}, {e(-4, 4), e(-4, 4), -1L}} * ninth;
    const Matrix b13 = Matrix{{-1L, e(-4, 4), e(-4, -20)}, {e(-4, 4), -1L, e(-4, 4)}, {e(-4, 4), e(-4, 4), -1L}} * ninth;
    const Matrix b22 = Matrix{{e(-1, 8), 8L, 8L}, {8L, e(-1, -16), 8L}, {8L, 8L, e(-1, 8)}} * ninth;
    const Matrix b23 = Matrix{{-1L, e(-4, 4), e(-4, 4)}, {e(-4, 4), -1L, e(-4, -20)}, {e(-4, 4), e(-4, 4), -1L}} * ninth;
    const Matrix b33 = Matrix{{e(-1, 8), 8L, 8L}, {8L, e(-1, 8), 8L}, {8L, 8L, e(-1, -16)}} * ninth;
    CHECK(b[0] == b11);
    CHECK(b[1] == b12);
    CHECK(b[2] == b13);
    CHECK(b[3] == b12.transpose());
    CHECK(b[4] == b22);
    CHECK(b[5] == b23);
    CHECK(b[6] == b13.transpose());
    CHECK(b[7] == b23.transpose());
    CHECK(b[8] == b33);
}

TEST_CASE("reflected matrices agree with the sympy oracle") {
    const Json fixture = load("oracle_cm.json");
    for (const auto& c : fixture.at("cases")) {
        CmParams p;
        p.m = c.at("m").get<std::size_t>();
        p.delta = parse_rational(c.at("delta").get<std::string>());
        const auto ours = cm_matrices(p);
        const auto& theirs = c.at("matrices");
        REQUIRE(theirs.size() == ours.size());
        for (std::size_t i = 0; i < ours.size(); ++i) CHECK(ours[i] == matrix_from_json(theirs[i]));
    }
}

TEST_CASE("basis conditions before and after reflection") {
    const CmParams p{3, 7};
    const std::vector<RadicalNumber> degrees(9, RadicalNumber(7L));
    const auto after = check_p1_conditions(cm_matrices(p), degrees);
    CHECK(after.ok());
    CHECK(after.fixed_points == std::vector<std::size_t>{0, 4, 8});

    const auto before = check_p1_conditions(cm_raw_matrices(p), degrees);
    CHECK(before.gram);
    CHECK(before.transpose_permutation);
    CHECK_FALSE(before.sum);
    const Matrix j{{1L, 1L, 1L}, {1L, 1L, 1L}, {1L, 1L, 1L}};
    CHECK(before.sum_value == j * (RadicalNumber(1L) / sq(3)));

    auto perturbed = cm_matrices(p);
    perturbed[0](0, 0) += RadicalNumber(1L);
    const auto broken = check_p1_conditions(perturbed, degrees);
    CHECK_FALSE(broken.gram);
    REQUIRE(broken.gram_witness);
    CHECK(broken.gram_witness->first == 0);

    CHECK_THROWS_AS(check_p1_conditions(std::vector<Matrix>(3, Matrix::identity(2)), std::vector<RadicalNumber>(3)),
                    StructuralError);
}

TEST_CASE("Gram values for m = 2, delta = 1") {
    for (const auto& mats : {cm_raw_matrices(CmParams{2, 1}), cm_matrices(CmParams{2, 1})}) {
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t k = 0; k < 4; ++k)
                CHECK(frobenius(mats[i], mats[k]) == (i == k ? RadicalNumber(2L) : frac(-1, 2)));
    }
}

TEST_CASE("cm bases verify with a positive degree map") {
    for (const CmParams& p : {CmParams{2, 1}, CmParams{2, 6}, CmParams{3, 7}, CmParams{3, 2, Sign::Plus, Sign::Minus}}) {
        const auto basis = cm_basis(p);
        const auto pres = extract_structure_constants(basis);
        const auto report = verify_rba(pres, cm_degree_map(p));
        CHECK(report.ok());
        CHECK(report.has_positive_degree_map);
        CHECK(verify_degree_map(pres, component_character(basis, 0)).positive);
    }
    const auto stats = constant_stats(extract_structure_constants(cm_basis(CmParams{3, 7})).tensor);
    CHECK(stats.max_denominator == 27);
    CHECK(stats.radicands == std::vector<Integer>{1, 3});
    CHECK_THROWS_AS(cm_basis(CmParams{1, 1}), DomainError);
}

TEST_CASE("printed diagonal tables lift only when traceless") {
    for (const std::size_t k : {2, 3, 4}) {
        const auto diag = diag_basis_small(k);
        CHECK(verify_rba(extract_structure_constants(diag)).ok());
        const auto lifted = verify_rba(extract_structure_constants(lift_diag_to_full(diag)));
        CHECK(is_trace_balanced(diag) == (k != 3));
        CHECK(lifted.ok() == (k != 3));
        if (k == 3) CHECK_FALSE(lifted.passed(Axiom::PositiveNorm));
    }
    CHECK_THROWS_AS(diag_basis_small(5), DomainError);
}

TEST_CASE("affine-plane table algebra") {
    for (const long q : {2L, 3L, 4L, 5L}) {
        const auto plane = affine_plane_ta(q);
        const auto report = verify_rba(plane.presentation);
        CHECK(report.ok());
        CHECK(report.is_table_algebra);
        CHECK(report.stats.is_integral);
        const auto diag = character_table_to_diag(plane.table);
        CHECK(extract_structure_constants(diag) == plane.presentation);
        const auto lifted = verify_rba(extract_structure_constants(lift_diag_to_full(diag)));
        CHECK(lifted.ok() == (q == 2));
    }
    CHECK_THROWS_AS(affine_plane_ta(1), DomainError);
}

TEST_CASE("rational bases of M_k") {
    for (std::size_t k = 2; k <= 7; ++k) {
        const auto basis = rational_basis_mn(k);
        CHECK(basis.size() == k * k);
        const auto report = verify_rba(extract_structure_constants(basis));
        CHECK(report.ok());
        CHECK(report.stats.is_rational);
        CHECK(is_trace_balanced(helmert_diag_basis(k)));
    }
    CHECK_THROWS_AS(rational_basis_mn(1), DomainError);
}

TEST_CASE("iterated circle products") {
    const std::vector<std::vector<std::size_t>> cases{{2}, {1, 2}, {1, 3}, {1, 1, 2}, {2, 3}, {1, 2, 2}};
    for (const auto& dims : cases) {
        const auto pres = semisimple_rational_rba(dims);
        std::size_t dim = 0;
        for (const auto k : dims) dim += k * k;
        CHECK(pres.size() == dim);
        const auto report = verify_rba(pres);
        CHECK(report.ok());
        CHECK(report.stats.is_rational);
        CHECK(extract_structure_constants(semisimple_rational_realization(dims)) == pres);
    }
    CHECK_THROWS_AS(semisimple_rational_rba({}), DomainError);
    CHECK_THROWS_AS(semisimple_rational_rba({0, 2}), DomainError);
}

TEST_CASE("no integral tensors among small integer degrees") {
    for (long d1 = 1; d1 <= 6; ++d1)
        for (long d2 = 1; d2 <= 6; ++d2)
            for (long d3 = 1; d3 <= 6; ++d3)
                for (const auto& signs : all_signs())
                    CHECK_FALSE(constant_stats(dim5_lambda_table(Dim5Params{d1, d2, d3, signs})).is_integral);
}

TEST_CASE("sign flips by conjugation") {
    const Matrix swap{{0L, 1L}, {1L, 0L}};
    const Matrix reflect_second = Matrix::diagonal({RadicalNumber(1L), RadicalNumber(-1L)});
    const Dim5Params base{Rational(7, 2), 2, Rational(5, 3)};
    for (const auto& signs : all_signs()) {
        auto p = base;
        p.signs = signs;
        auto q = p;
        q.signs = {flip(signs[0]), signs[1], flip(signs[2])};
        CHECK(same_element_set(conjugate_basis(dim5_family(p), 1, swap), dim5_family(q)));
        q.signs = {signs[0], flip(signs[1]), flip(signs[2])};
        CHECK(same_element_set(conjugate_basis(dim5_family(p), 1, reflect_second), dim5_family(q)));
    }
}
