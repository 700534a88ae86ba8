#include "rba/constructions.hpp"

#include <initializer_list>
#include <string_view>

namespace rba {

char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

void Dim5Params::validate() const {
    if (sgn(delta1) <= 0 || sgn(delta2) <= 0 || sgn(delta3) <= 0)
        throw DomainError("dim5 degrees must be positive");
}

void CmParams::validate() const {
    if (m < 2) throw DomainError("cm construction needs m >= 2");
    if (sgn(delta) <= 0) throw DomainError("cm construction needs delta > 0");
}

namespace {

BlockTuple diag_tuple(std::initializer_list<long> entries) {
    BlockTuple t;
    for (const long e : entries) t.push_back(Matrix{{RadicalNumber(e)}});
    return t;
}

MatrixBasis trivial_basis() { return MatrixBasis(BlockShape{{1}}, {diag_tuple({1})}); }

Matrix unit(std::size_t m, std::size_t i, std::size_t j) {
    Matrix e(m, m);
    e(i, j) = 1L;
    return e;
}

}  // namespace

MatrixBasis diag_basis_small(std::size_t k) {
    switch (k) {
        case 2:
            return MatrixBasis(BlockShape{{1, 1}}, {diag_tuple({1, 1}), diag_tuple({1, -1})});
        case 3:
            return MatrixBasis(BlockShape{{1, 1, 1}},
                               {diag_tuple({1, 1, 1}), diag_tuple({1, -1, 1}), diag_tuple({2, 0, -2})});
        case 4:
            return MatrixBasis(BlockShape{{1, 1, 1, 1}},
                               {diag_tuple({1, 1, 1, 1}), diag_tuple({1, -1, -1, 1}), diag_tuple({1, -1, 1, -1}),
                                diag_tuple({1, 1, -1, -1})});
        default:
            throw DomainError("diag_basis_small covers k in {2,3,4}; use the affine-plane table algebra");
    }
}

AffinePlane affine_plane_ta(long q) {
    if (q < 2) throw DomainError("affine plane table algebra needs q >= 2");
    const std::size_t size = static_cast<std::size_t>(q) + 2;
    StructureTensor t(size);
    t.set_identity_rows();
    for (std::size_t i = 1; i < size; ++i) {
        for (std::size_t j = 1; j < size; ++j) {
            if (i == j) {
                t(i, i, 0) = q - 1;
                t(i, i, i) = q - 2;
            } else {
                for (std::size_t k = 1; k < size; ++k)
                    if (k != i && k != j) t(i, j, k) = 1L;
            }
        }
    }
    CharacterTable table{Matrix(size, size)};
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            if (i == 0) {
                table.p(i, j) = 1L;
            } else if (j == 0 || i == j) {
                table.p(i, j) = q - 1;
            } else {
                table.p(i, j) = -1L;
            }
        }
    }
    return {RbaPresentation{std::move(t), InvolutionPerm::identity(size)}, std::move(table)};
}

MatrixBasis character_table_to_diag(const CharacterTable& table) {
    const auto& p = table.p;
    if (!p.is_square() || p.rows() == 0) throw StructuralError("character table must be square");
    for (std::size_t j = 0; j < p.cols(); ++j)
        if (p(0, j) != RadicalNumber(1L)) throw StructuralError("first row of the character table must be all 1");
    if (rank(p) != p.rows()) throw RankError("character table is singular");
    BlockShape shape{std::vector<std::size_t>(p.cols(), 1)};
    std::vector<BlockTuple> elements;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        BlockTuple t;
        for (std::size_t j = 0; j < p.cols(); ++j) t.push_back(Matrix{{p(i, j)}});
        elements.push_back(std::move(t));
    }
    return MatrixBasis(std::move(shape), std::move(elements));
}

MatrixBasis lift_diag_to_full(const MatrixBasis& diag) {
    const std::size_t k = diag.shape().sizes.size();
    for (const auto m : diag.shape().sizes)
        if (m != 1) throw StructuralError("lift_diag_to_full expects a basis of 1x1 blocks");
    if (diag.size() != k) throw StructuralError("diagonal basis must span C^k");
    const auto pres = extract_structure_constants(diag);
    if (pres.star != InvolutionPerm::identity(k) || !verify_rba(pres).ok())
        throw StructuralError("diagonal basis must be an RBA-basis with trivial involution");

    auto as_diag = [&](const BlockTuple& t) {
        Matrix d(k, k);
        for (std::size_t c = 0; c < k; ++c) d(c, c) = t[c](0, 0);
        return BlockTuple{d};
    };
    std::vector<BlockTuple> elements{as_diag(diag[0])};
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j) elements.push_back(BlockTuple{unit(k, i, j)});
    for (std::size_t i = 1; i < diag.size(); ++i) elements.push_back(as_diag(diag[i]));
    return MatrixBasis(BlockShape{{k}}, std::move(elements));
}

MatrixBasis helmert_diag_basis(std::size_t k) {
    if (k < 1) throw DomainError("helmert_diag_basis needs k >= 1");
    BlockShape shape{std::vector<std::size_t>(k, 1)};
    std::vector<BlockTuple> elements;
    for (std::size_t j = 0; j < k; ++j) {
        BlockTuple t;
        for (std::size_t c = 0; c < k; ++c) {
            long v = 0;
            if (j == 0 || c < j) {
                v = 1;
            } else if (c == j) {
                v = -static_cast<long>(j);
            }
            t.push_back(Matrix{{RadicalNumber(v)}});
        }
        elements.push_back(std::move(t));
    }
    return MatrixBasis(std::move(shape), std::move(elements));
}

bool is_trace_balanced(const MatrixBasis& diag) {
    for (std::size_t i = 1; i < diag.size(); ++i) {
        RadicalNumber sum;
        for (const auto& block : diag[i]) sum += block(0, 0);
        if (!sum.is_zero()) return false;
    }
    return true;
}

MatrixBasis rational_basis_mn(std::size_t k) {
    if (k < 2) throw DomainError("rational_basis_mn needs k >= 2");
    if (k == 2 || k == 4) return lift_diag_to_full(diag_basis_small(k));
    return lift_diag_to_full(helmert_diag_basis(k));
}

namespace {

MatrixBasis c2_basis() { return MatrixBasis(BlockShape{{1, 1}}, {diag_tuple({1, 1}), diag_tuple({1, -1})}); }

RbaPresentation c2_presentation() {
    StructureTensor t(2);
    t.set_identity_rows();
    t(1, 1, 0) = 1L;
    return {std::move(t), InvolutionPerm::identity(2)};
}

MatrixBasis simple_basis(std::size_t k) { return k == 1 ? trivial_basis() : rational_basis_mn(k); }

RbaPresentation simple_presentation(std::size_t k) {
    if (k == 1) return {StructureTensor(1), InvolutionPerm::identity(1)};
    return extract_structure_constants(rational_basis_mn(k));
}

// δ' on C_2 ∘_δ B: the sign character of C_2 on b_0, x and zero on B \ {b_0}.
DegreeMap projection_character(std::size_t size) {
    DegreeMap d;
    d.degrees.assign(size, RadicalNumber());
    d.degrees[0] = 1L;
    d.degrees[1] = -1L;
    return d;
}

void check_dims(const std::vector<std::size_t>& dims) {
    if (dims.empty()) throw DomainError("need at least one simple component");
    for (const auto k : dims)
        if (k == 0) throw DomainError("component sizes must be positive");
}

}  // namespace

RbaPresentation semisimple_rational_rba(const std::vector<std::size_t>& dims) {
    check_dims(dims);
    if (dims.size() == 1) return simple_presentation(dims.front());
    const std::vector<std::size_t> rest(dims.begin(), dims.end() - 1);
    const DegreeMap trivial{{RadicalNumber(1L), RadicalNumber(1L)}};
    const auto glued = circle_product(c2_presentation(), trivial, simple_presentation(dims.back())).presentation;
    return circle_product(glued, projection_character(glued.size()), semisimple_rational_rba(rest)).presentation;
}

MatrixBasis semisimple_rational_realization(const std::vector<std::size_t>& dims) {
    check_dims(dims);
    if (dims.size() == 1) return simple_basis(dims.front());
    const std::vector<std::size_t> rest(dims.begin(), dims.end() - 1);
    // Component 0 of C_2 is the trivial character; after gluing, the sign
    // character of C_2 is component 0 of the result.
    const auto glued = circle_product_basis(c2_basis(), 0, simple_basis(dims.back()));
    return circle_product_basis(glued, 0, semisimple_rational_realization(rest));
}

// ---------------------------------------------------------------------------

MatrixBasis dim5_family(const Dim5Params& params) {
    params.validate();
    const Rational n = params.order();
    const RadicalNumber e1 = as_scalar(params.signs[0]);
    const RadicalNumber e2 = as_scalar(params.signs[1]);
    const RadicalNumber e3 = as_scalar(params.signs[2]);
    const Rational& d1 = params.delta1;
    const Rational& d2 = params.delta2;
    const Rational& d3 = params.delta3;
    const Rational n1 = n - 1;

    const Rational big_delta = n * d1 * (n1 - d1);
    const RadicalNumber root = RadicalNumber::sqrt(big_delta);
    const RadicalNumber inv_root = root * RadicalNumber(Rational(1) / big_delta);

    const RadicalNumber a = RadicalNumber(Rational(-d1 / n1)) + e1 * root * RadicalNumber(Rational(1 / n1));
    const RadicalNumber d = RadicalNumber(Rational(-d1 / n1)) - e1 * root * RadicalNumber(Rational(1 / n1));
    auto split = [&](const Rational& dk, const RadicalNumber& side) {
        return RadicalNumber(Rational(-dk / n1)) + side * e1 * RadicalNumber(Rational(n * d1 * dk / n1)) * inv_root;
    };
    const RadicalNumber v = split(d2, -1L);
    const RadicalNumber x = split(d2, 1L);
    const RadicalNumber r = split(d3, -1L);
    const RadicalNumber u = split(d3, 1L);
    const RadicalNumber w = e2 * RadicalNumber::sqrt(2 * n * d2 * d3 / (n1 * (n1 - d1)));
    const RadicalNumber half_w = w * RadicalNumber(Rational(1, 2));
    const RadicalNumber spread = e3 * RadicalNumber::sqrt(d3 * n / (2 * n1));
    const RadicalNumber s = -half_w + spread;
    const RadicalNumber t = -half_w - spread;

    auto tuple = [](const Rational& degree, Matrix block) {
        return BlockTuple{Matrix{{RadicalNumber(degree)}}, std::move(block)};
    };
    std::vector<BlockTuple> elements{
        tuple(1, Matrix::identity(2)),
        tuple(d1, Matrix{{a, 0L}, {0L, d}}),
        tuple(d2, Matrix{{v, w}, {w, x}}),
        tuple(d3, Matrix{{r, s}, {t, u}}),
        tuple(d3, Matrix{{r, t}, {s, u}}),
    };
    return MatrixBasis(BlockShape{{1, 2}}, std::move(elements));
}

StructureTensor dim5_lambda_table(const Dim5Params& params) {
    params.validate();
    const Rational n = params.order();
    const Rational n1 = n - 1;
    const Rational np1 = n + 1;
    const Rational& d1 = params.delta1;
    const Rational& d2 = params.delta2;
    const Rational& d3 = params.delta3;
    const long eps = static_cast<long>(params.signs[0]) * static_cast<long>(params.signs[1]) *
                     static_cast<long>(params.signs[2]);
    const RadicalNumber inv_q(Rational(1 / (n1 * n1)));
    // ε(n−1)√(nδ₁δ₂)
    const RadicalNumber er = RadicalNumber(eps) * RadicalNumber(n1) * RadicalNumber::sqrt(n * d1 * d2);
    auto rat = [](const Rational& q) { return RadicalNumber(q); };

    StructureTensor t(5);
    t.set_identity_rows();
    t(1, 1, 0) = rat(d1);
    t(2, 2, 0) = rat(d2);
    t(3, 4, 0) = rat(d3);
    t(4, 3, 0) = rat(d3);

    auto put = [&](std::initializer_list<std::string_view> keys, const RadicalNumber& value) {
        for (const auto key : keys) {
            t(static_cast<std::size_t>(key[0] - '0'), static_cast<std::size_t>(key[1] - '0'),
              static_cast<std::size_t>(key[2] - '0')) = value;
        }
    };

    put({"111"}, rat(np1 * d1 * d1 - 3 * n1 * d1) * inv_q);
    put({"112", "113", "114"}, rat(np1 * d1 * d1 - n1 * d1) * inv_q);
    put({"121", "211"}, rat(np1 * d1 * d2 - n1 * d2) * inv_q);
    put({"122", "212"}, rat(np1 * d1 * d2 - n1 * d1) * inv_q);
    put({"123", "214"}, (rat(np1 * d1 * d2) + er) * inv_q);
    put({"124", "213"}, (rat(np1 * d1 * d2) - er) * inv_q);

    put({"131", "141", "311", "411"}, rat(np1 * d1 * d3 - n1 * d3) * inv_q);
    put({"132", "412"}, (rat(np1 * d1 * d2 * d3) + er * rat(d3)) * inv_q * rat(1 / d2));
    put({"133", "414"}, (rat(np1 * d1 * d3 - n1 * d1) - er) * inv_q);
    put({"134", "143", "314", "413"}, rat(np1 * d1 * d3) * inv_q);
    put({"142", "312"}, (rat(np1 * d1 * d2 * d3) - er * rat(d3)) * inv_q * rat(1 / d2));
    put({"144", "313"}, (rat(np1 * d1 * d3 - n1 * d1) + er) * inv_q);

    put({"221", "223", "224"}, rat(np1 * d2 * d2 - n1 * d2) * inv_q);
    put({"222"}, rat(np1 * d2 * d2 - 3 * n1 * d2) * inv_q);

    put({"231", "421"}, (rat(np1 * d1 * d2 * d3) - er * rat(d3)) * inv_q * rat(1 / d1));
    put({"232", "422", "242", "322"}, rat(np1 * d2 * d3 - n1 * d3) * inv_q);
    put({"233", "424"}, (rat(np1 * d2 * d3 - n1 * d2) + er) * inv_q);
    put({"234", "423", "243", "324"}, rat(np1 * d2 * d3) * inv_q);
    put({"241", "321"}, (rat(np1 * d1 * d2 * d3) + er * rat(d3)) * inv_q * rat(1 / d1));
    put({"244", "323"}, (rat(np1 * d2 * d3 - n1 * d2) - er) * inv_q);

    put({"331", "332", "334"}, rat(np1 * d3 * d3) * inv_q);
    put({"441", "442", "443"}, rat(np1 * d3 * d3) * inv_q);
    put({"343", "344", "433", "434"}, rat(np1 * d3 * d3 - 2 * n1 * d3) * inv_q);
    put({"333", "444"}, rat(np1 * d3 * d3 - 2 * n1 * d3) * inv_q);

    // λ_341 and λ_431 carry δ₁; λ_342 and λ_432 carry δ₂.
    put({"341"}, (rat(np1 * d1 * d3 * d3 - n1 * d1 * d3) - er * rat(d3)) * inv_q * rat(1 / d1));
    put({"431"}, (rat(np1 * d1 * d3 * d3 - n1 * d1 * d3) + er * rat(d3)) * inv_q * rat(1 / d1));
    put({"342"}, (rat(np1 * d2 * d3 * d3 - n1 * d2 * d3) + er * rat(d3)) * inv_q * rat(1 / d2));
    put({"432"}, (rat(np1 * d2 * d3 * d3 - n1 * d2 * d3) - er * rat(d3)) * inv_q * rat(1 / d2));
    return t;
}

InvolutionPerm dim5_star() { return InvolutionPerm({0, 1, 2, 4, 3}); }

RbaPresentation dim5_presentation(const Dim5Params& params) { return {dim5_lambda_table(params), dim5_star()}; }

DegreeMap dim5_degree_map(const Dim5Params& params) {
    return DegreeMap{{RadicalNumber(1L), RadicalNumber(params.delta1), RadicalNumber(params.delta2),
                      RadicalNumber(params.delta3), RadicalNumber(params.delta3)}};
}

// ---------------------------------------------------------------------------

Matrix reflect(const Matrix& x, const Matrix& axis) {
    const RadicalNumber norm = frobenius(axis, axis);
    if (norm.is_zero()) throw DomainError("reflection axis is zero");
    return x - axis * (RadicalNumber(2L) * frobenius(axis, x) / norm);
}

std::vector<Matrix> cm_raw_matrices(const CmParams& params) {
    params.validate();
    const std::size_t m = params.m;
    const Rational n = params.order();
    const Rational mq(static_cast<unsigned long>(m));
    const RadicalNumber x = as_scalar(params.sign_x) * RadicalNumber::sqrt(n / mq);
    const RadicalNumber inv_sqrt_m = RadicalNumber::sqrt(1 / mq);
    const RadicalNumber y =
        (-x + as_scalar(params.sign_y) * inv_sqrt_m) * RadicalNumber(Rational(1, static_cast<unsigned long>(m * m)));
    Matrix j_all(m, m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) j_all(r, c) = y;
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out.push_back(unit(m, i, j) * x + j_all);
    return out;
}

std::vector<Matrix> cm_matrices(const CmParams& params) {
    auto raw = cm_raw_matrices(params);
    Matrix axis = Matrix::identity(params.m);
    for (const auto& b : raw) axis += b;
    for (auto& b : raw) b = reflect(b, axis);
    return raw;
}

DegreeMap cm_degree_map(const CmParams& params) {
    DegreeMap d;
    d.degrees.assign(params.m * params.m + 1, RadicalNumber(params.delta));
    d.degrees[0] = 1L;
    return d;
}

MatrixBasis cm_basis(const CmParams& params) {
    const auto matrices = cm_matrices(params);
    const std::vector<RadicalNumber> degrees(matrices.size(), RadicalNumber(params.delta));
    const auto report = check_p1_conditions(matrices, degrees);
    if (!report.ok()) throw InternalConsistencyError("cm_basis produced matrices violating the basis conditions");
    std::vector<BlockTuple> elements{BlockTuple{Matrix{{1L}}, Matrix::identity(params.m)}};
    for (const auto& b : matrices) elements.push_back(BlockTuple{Matrix{{RadicalNumber(params.delta)}}, b});
    return MatrixBasis(BlockShape{{1, params.m}}, std::move(elements));
}

P1Report check_p1_conditions(const std::vector<Matrix>& matrices, const std::vector<RadicalNumber>& degrees) {
    if (matrices.empty() || matrices.size() != degrees.size())
        throw StructuralError("need one degree per matrix");
    const std::size_t m = matrices.front().rows();
    if (matrices.size() != m * m) throw StructuralError("need m^2 matrices of size m");
    for (const auto& b : matrices)
        if (b.rows() != m || b.cols() != m) throw StructuralError("matrices must all be m x m");

    RadicalNumber n(1L);
    for (const auto& d : degrees) n += d;
    const RadicalNumber scale = RadicalNumber(static_cast<long>(m)) / (n - RadicalNumber(1L));

    P1Report report;
    for (std::size_t i = 0; i < matrices.size() && report.gram; ++i) {
        for (std::size_t j = 0; j < matrices.size(); ++j) {
            const RadicalNumber expected =
                i == j ? degrees[i] * (n - degrees[i]) * scale : -(degrees[i] * degrees[j] * scale);
            if (frobenius(matrices[i], matrices[j]) != expected) {
                report.gram = false;
                report.gram_witness = std::make_pair(i, j);
                break;
            }
        }
    }

    std::vector<std::size_t> image(matrices.size(), matrices.size());
    for (std::size_t i = 0; i < matrices.size(); ++i) {
        const Matrix t = matrices[i].transpose();
        for (std::size_t j = 0; j < matrices.size(); ++j) {
            if (matrices[j] == t && degrees[i] == degrees[j]) {
                image[i] = j;
                break;
            }
        }
        if (image[i] == matrices.size()) {
            report.transpose_permutation = false;
        } else if (image[i] == i) {
            report.fixed_points.push_back(i);
        }
    }
    if (report.transpose_permutation) {
        for (std::size_t i = 0; i < image.size(); ++i)
            if (image[image[i]] != i) report.transpose_permutation = false;
        if (report.fixed_points.size() != m) report.transpose_permutation = false;
    }

    report.sum_value = Matrix(m, m);
    for (const auto& b : matrices) report.sum_value += b;
    report.sum = report.sum_value == -Matrix::identity(m);
    return report;
}

}  // namespace rba
