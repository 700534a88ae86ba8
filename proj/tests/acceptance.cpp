// One line per acceptance criterion; exit status is nonzero if any fails.
// Every comparison is exact.

#include "rba/cli.hpp"
#include "rba/constructions.hpp"
#include "rba/serialize.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace rba;

namespace {

RadicalNumber sq(long q) { return RadicalNumber::sqrt(Rational(q)); }
RadicalNumber frac(long p, long q) { return RadicalNumber(Rational(p, q)); }
RadicalNumber e3(long a, long c) { return RadicalNumber(a) + RadicalNumber(c) * sq(3); }

std::vector<std::array<Sign, 3>> all_signs() {
    std::vector<std::array<Sign, 3>> out;
    for (const Sign a : {Sign::Plus, Sign::Minus})
        for (const Sign b : {Sign::Plus, Sign::Minus})
            for (const Sign c : {Sign::Plus, Sign::Minus}) out.push_back({a, b, c});
    return out;
}

Rational random_degree(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(1, 12);
    std::uniform_int_distribution<long> den(1, 5);
    return Rational(num(rng), den(rng));
}

Dim5Params random_dim5(std::mt19937& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    Dim5Params p{random_degree(rng), random_degree(rng), random_degree(rng)};
    for (auto& s : p.signs) s = coin(rng) ? Sign::Plus : Sign::Minus;
    return p;
}

// Returns "" on success, otherwise the reason.
using Check = std::function<std::string()>;

std::string first_failure(std::initializer_list<std::pair<bool, const char*>> checks) {
    for (const auto& [ok, what] : checks)
        if (!ok) return what;
    return "";
}

std::string dim5_reproduction() {
    const auto b = dim5_family(Dim5Params{6, 6, 6});
    const Matrix b1{{(e3(-1, 5)) / RadicalNumber(4L), 0L}, {0L, e3(-1, -5) / RadicalNumber(4L)}};
    const RadicalNumber w = RadicalNumber(5L) * sq(6) / RadicalNumber(6L);
    const Matrix b2{{e3(-3, -5) / RadicalNumber(12L), w}, {w, e3(-3, 5) / RadicalNumber(12L)}};
    const RadicalNumber s = b[3][1](0, 1);
    const RadicalNumber t = b[3][1](1, 0);
    const Rational n = Dim5Params{6, 6, 6}.order();
    const auto pres = extract_structure_constants(b);
    const auto report = verify_rba(pres, dim5_degree_map(Dim5Params{6, 6, 6}));
    return first_failure({
        {b[1][0] == Matrix{{6L}} && b[1][1] == b1, "b1 differs"},
        {b[2][0] == Matrix{{6L}} && b[2][1] == b2, "b2 differs"},
        {s == (RadicalNumber(-5L) * sq(6) + RadicalNumber(15L) * sq(2)) / RadicalNumber(12L), "b3 entry s"},
        {t == (RadicalNumber(-5L) * sq(6) - RadicalNumber(15L) * sq(2)) / RadicalNumber(12L), "b3 entry t"},
        {(w + s + t).is_zero(), "w + s + t != 0"},
        {(s - t) * (s - t) == RadicalNumber(2 * 6 * n / (n - 1)), "(s - t)^2"},
        {b[4][1] == b[3][1].transpose(), "b4 != b3^T"},
        {report.ok() && report.is_table_algebra, "not a table algebra"},
        {report.stats.is_rational, "irrational constant"},
        {report.stats.is_nonnegative, "negative constant"},
        {report.stats.max_denominator == 8, "max denominator != 8"},
    });
}

std::string dim5_oracle() {
    std::mt19937 rng(20150315);
    for (int i = 0; i < 20; ++i) {
        auto p = random_dim5(rng);
        for (const auto& signs : all_signs()) {
            p.signs = signs;
            if (extract_structure_constants(dim5_family(p)).tensor != dim5_lambda_table(p))
                return "mismatch at (" + p.delta1.get_str() + ", " + p.delta2.get_str() + ", " + p.delta3.get_str() +
                       ") signs " + cli::sign_string(signs);
        }
    }
    return "";
}

std::string cm_reproduction() {
    const RadicalNumber ninth = frac(1, 9);
    const Matrix b11 = Matrix{{e3(-1, -16), 8L, 8L}, {8L, e3(-1, 8), 8L}, {8L, 8L, e3(-1, 8)}} * ninth;
    const Matrix b12 =
        Matrix{{-1L, e3(-4, -20), e3(-4, 4)}, {e3(-4, 4), -1L, e3(-4, 4)}, {e3(-4, 4), e3(-4, 4), -1L}} * ninth;
    const Matrix b13 =
        Matrix{{-1L, e3(-4, 4), e3(-4, -20)}, {e3(-4, 4), -1L, e3(-4, 4)}, {e3(-4, 4), e3(-4, 4), -1L}} * ninth;
    const Matrix b22 = Matrix{{e3(-1, 8), 8L, 8L}, {8L, e3(-1, -16), 8L}, {8L, 8L, e3(-1, 8)}} * ninth;
    const Matrix b23 =
        Matrix{{-1L, e3(-4, 4), e3(-4, 4)}, {e3(-4, 4), -1L, e3(-4, -20)}, {e3(-4, 4), e3(-4, 4), -1L}} * ninth;
    const Matrix b33 = Matrix{{e3(-1, 8), 8L, 8L}, {8L, e3(-1, 8), 8L}, {8L, 8L, e3(-1, -16)}} * ninth;
    const std::vector<Matrix> printed{b11, b12, b13, b12.transpose(), b22, b23, b13.transpose(), b23.transpose(), b33};
    const CmParams params{3, 7};
    const auto basis = cm_basis(params);
    for (std::size_t i = 0; i < printed.size(); ++i)
        if (basis[i + 1][1] != printed[i]) return "matrix " + std::to_string(i + 1) + " differs";
    const auto report = verify_rba(extract_structure_constants(basis), cm_degree_map(params));
    bool radicands_ok = true;
    for (const auto& r : report.stats.radicands) radicands_ok = radicands_ok && (r == 1 || r == 3);
    return first_failure({
        {report.ok(), "verification failed"},
        {radicands_ok, "radicand outside {1, 3}"},
        {report.stats.max_denominator == 27, "max denominator != 27"},
    });
}

std::string verify_file(const std::string& name) {
    std::ifstream in(std::string(RBA_DATA) + "/" + name);
    if (!in) return "missing " + name;
    const Json doc = Json::parse(in);
    const auto basis = basis_from_json(doc);
    const auto delta = degree_map_from_json(doc.at("degree_map"));
    const DegreeMap expected{{1L, Rational(3, 2), Rational(1, 6), Rational(2, 3), Rational(2, 3)}};
    if (delta != expected) return "unexpected degree map in " + name;
    const auto report = verify_rba(extract_structure_constants(basis), delta);
    if (!report.ok()) {
        const auto& v = report.violations.front();
        std::ostringstream why;
        why << report.violations.size() << " violations, first " << to_string(v.axiom) << " value " << v.value.str();
        return why.str();
    }
    return first_failure({{report.stats.is_rational, "irrational constant"}});
}

std::string rational_mn() {
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto basis = rational_basis_mn(n);
        const auto report = verify_rba(extract_structure_constants(basis));
        if (basis.size() != n * n || !report.ok() || !report.stats.is_rational)
            return "fails for n = " + std::to_string(n);
    }
    return "";
}

std::string circle_products() {
    std::string reasons;
    for (const std::vector<std::size_t> dims : {std::vector<std::size_t>{1, 2}, {1, 3}, {1, 1, 2}}) {
        const auto pres = semisimple_rational_rba(dims);
        const auto report = verify_rba(pres);
        std::string label = "(";
        for (std::size_t i = 0; i < dims.size(); ++i) label += (i ? "," : "") + std::to_string(dims[i]);
        label += ")";
        if (!report.ok() || !report.stats.is_rational) return label + " does not verify with rational constants";
        // Any positive degree map on C ⊕ ... is the projection onto a 1×1 block.
        const auto basis = semisimple_rational_realization(dims);
        bool positive = false;
        for (const auto c : positive_linear_components(basis))
            positive = positive || verify_degree_map(pres, component_character(basis, c)).is_degree_map();
        if (!positive) reasons += (reasons.empty() ? "" : ", ") + label;
    }
    return reasons.empty() ? "" : "no positive degree map for " + reasons;
}

std::string characters_of(const std::string& label, const MatrixBasis& basis, const std::optional<DegreeMap>& delta,
                          const std::optional<Rational>& dim5_order) {
    CharacterData data;
    try {
        data = character_data(basis, delta);
    } catch (const DomainError& e) {
        return label + ": " + e.what();
    }
    for (const auto& chi : data.characters) {
        if (chi.multiplicity.sign() <= 0) return label + ": nonpositive multiplicity";
        for (const auto& psi : data.characters) {
            RadicalNumber value;
            for (std::size_t i = 0; i < basis.size(); ++i) value += psi.idempotent[i] * chi.values[i];
            const RadicalNumber expected = &chi == &psi ? RadicalNumber(static_cast<long>(chi.degree)) : RadicalNumber();
            if (value != expected) return label + ": orthogonality";
        }
        if (dim5_order && chi.degree == 2 && chi.multiplicity != RadicalNumber((*dim5_order - 1) / 2))
            return label + ": m_chi != (n-1)/2";
    }
    return "";
}

std::string character_theory() {
    std::mt19937 rng(7);
    std::vector<Dim5Params> dim5{Dim5Params{6, 6, 6}};
    for (int i = 0; i < 4; ++i) dim5.push_back(random_dim5(rng));
    for (const auto& p : dim5)
        if (auto r = characters_of("dim5", dim5_family(p), dim5_degree_map(p), p.order()); !r.empty()) return r;
    for (const CmParams p : {CmParams{2, 1}, CmParams{3, 7}, CmParams{2, Rational(5, 2)}})
        if (auto r = characters_of("cm", cm_basis(p), cm_degree_map(p), std::nullopt); !r.empty()) return r;
    for (std::size_t n = 2; n <= 6; ++n)
        if (auto r = characters_of("M_" + std::to_string(n), rational_basis_mn(n), std::nullopt, std::nullopt);
            !r.empty())
            return r;
    for (const std::vector<std::size_t> dims : {std::vector<std::size_t>{1, 2}, {1, 3}, {1, 1, 2}})
        if (auto r = characters_of("sum", semisimple_rational_realization(dims), std::nullopt, std::nullopt);
            !r.empty())
            return r;
    for (const long q : {3L, 4L, 5L}) {
        const auto basis = character_table_to_diag(affine_plane_ta(q).table);
        if (auto r = characters_of("affine", basis, component_character(basis, 0), std::nullopt); !r.empty()) return r;
    }
    for (const std::size_t k : {2, 3, 4})
        if (auto r = characters_of("diag", diag_basis_small(k), std::nullopt, std::nullopt); !r.empty()) return r;
    return "";
}

std::string integral_scan() {
    std::vector<Rational> range;
    for (long d = 1; d <= 20; ++d) range.emplace_back(d);
    cli::ScanFilter filter;
    filter.integral = true;
    const auto summary = cli::scan_dim5({range, range, range}, all_signs(), filter, false);
    if (summary.points != 20 * 20 * 20 * 8) return "scanned " + std::to_string(summary.points) + " points";
    return summary.hits.empty() ? "" : std::to_string(summary.hits.size()) + " integral tensors";
}

std::string quadratic_suite() {
    std::mt19937 rng(40315);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    for (int b = 0; b < 5; ++b) {
        const auto p = random_dim5(rng);
        const auto basis = dim5_family(p);
        const auto pres = extract_structure_constants(basis);
        const auto delta = dim5_degree_map(p);
        const BlockTuple all = basis.combine(std::vector<RadicalNumber>(basis.size(), RadicalNumber(1L)));
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<RadicalNumber> x{0L};
            for (int i = 0; i < 4; ++i) x.emplace_back(Rational(num(rng), den(rng)));
            QuadraticData q;
            try {
                q = quadratic_coeffs(basis, pres, delta, x);
            } catch (const LemmaViolation& e) {
                return e.what();
            }
            const auto kappa = x[1] * x[1] * RadicalNumber(p.delta1) + x[2] * x[2] * RadicalNumber(p.delta2) +
                               RadicalNumber(2L) * x[3] * x[4] * RadicalNumber(p.delta3);
            if (q.kappa != kappa) return "kappa differs from its closed form";
            const BlockTuple xt = basis.combine(x);
            const BlockTuple rest = add(add(all, scale(basis[0], RadicalNumber(-1L))), scale(xt, RadicalNumber(-1L)));
            const BlockTuple rhs = add(add(scale(basis[0], q.kappa), scale(xt, q.lambda)), scale(rest, q.mu));
            if (multiply(xt, xt) != rhs) return "x^2 identity fails";
        }
    }
    return "";
}

std::string sign_equivalence() {
    const Matrix swap{{0L, 1L}, {1L, 0L}};
    const Matrix reflect_second = Matrix::diagonal({RadicalNumber(1L), RadicalNumber(-1L)});
    std::mt19937 rng(5);
    for (int i = 0; i < 3; ++i) {
        auto p = random_dim5(rng);
        std::vector<MatrixBasis> family;
        for (const auto& signs : all_signs()) {
            p.signs = signs;
            family.push_back(dim5_family(p));
        }
        for (const auto& conj : {swap, reflect_second}) {
            for (const auto& member : family) {
                const auto image = conjugate_basis(member, 1, conj);
                bool found = false;
                for (const auto& other : family) found = found || same_element_set(image, other);
                if (!found) return "conjugate left the family";
            }
        }
    }
    return "";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Check>> criteria{
        {"dim5 basis at (6,6,6): printed entries, nonnegative rational constants, max denominator 8",
         dim5_reproduction},
        {"closed-form table equals extraction for 20 random triples x 8 signs", dim5_oracle},
        {"cm basis at m = 3, delta = 7: nine printed matrices, radicands in {1,3}, max denominator 27",
         cm_reproduction},
        {"printed rational C + M_2 basis verifies with degree map (1, 3/2, 1/6, 2/3, 2/3)",
         [] { return verify_file("rational_c_m2_printed.json"); }},
        {"rational bases of M_n for n = 2..6", rational_mn},
        {"circle products (1,2), (1,3), (1,1,2): rational constants and positive degree maps", circle_products},
        {"character orthogonality, positive multiplicities, m_chi = (n-1)/2", character_theory},
        {"no integral dim5 tensor for integer degrees in [1,20]^3 x 8 signs", integral_scan},
        {"x^2 = kappa b0 + lambda x + mu (B+ - b0 - x) for 50 x in 5 random bases", quadratic_suite},
        {"conjugation by the swap and by Diag(1,-1) permutes the sign family", sign_equivalence},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string why;
        try {
            why = criteria[i].second();
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        std::cout << (why.empty() ? "[PASS] " : "[FAIL] ") << i + 1 << ": " << criteria[i].first;
        if (!why.empty()) std::cout << " (" << why << ")";
        std::cout << '\n';
        failures += !why.empty();
    }
    const auto corrected = verify_file("rational_c_m2_corrected.json");
    std::cout << "[INFO] corrected rational C + M_2 basis (v = 1/18): "
              << (corrected.empty() ? "verifies" : corrected) << '\n';
    std::cout << failures << " of " << criteria.size() << " criteria failed\n";
    return failures == 0 ? 0 : 1;
}
