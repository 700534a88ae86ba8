#include "rba/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace rba {

namespace {

Integer integer_from_json(const Json& j, const char* what) {
    try {
        if (j.is_string()) return Integer(j.get<std::string>());
        if (j.is_number_integer()) return Integer(j.get<long>());
    } catch (const std::invalid_argument&) {
    }
    throw ParseError(std::string("expected an integer for ") + what);
}

std::size_t index_from_json(const Json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0))
        throw ParseError(std::string("expected a nonnegative index for ") + what);
    return j.get<std::size_t>();
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

Json to_json(const RadicalNumber& x) {
    Json out = Json::array();
    for (const auto& t : x.terms()) {
        out.push_back({{"num", t.coeff.get_num().get_str()},
                       {"den", t.coeff.get_den().get_str()},
                       {"rad", t.radicand.get_str()}});
    }
    return out;
}

RadicalNumber radical_from_json(const Json& j) {
    if (j.is_number_integer() || j.is_string()) {
        if (j.is_string()) {
            try {
                return RadicalNumber(parse_rational(j.get<std::string>()));
            } catch (const std::exception& e) {
                throw ParseError(e.what());
            }
        }
        return RadicalNumber(j.get<long>());
    }
    if (!j.is_array()) throw ParseError("a radical number is a list of {num, den, rad} terms");
    std::vector<RadicalNumber::Term> terms;
    for (const auto& t : j) {
        const Integer num = integer_from_json(field(t, "num"), "num");
        const Integer den = t.contains("den") ? integer_from_json(t.at("den"), "den") : Integer(1);
        const Integer rad = t.contains("rad") ? integer_from_json(t.at("rad"), "rad") : Integer(1);
        if (den == 0) throw ParseError("zero denominator");
        if (rad <= 0) throw ParseError("radicand must be positive");
        Rational q(num, den);
        q.canonicalize();
        if (q != 0) terms.push_back({rad, q});
    }
    try {
        return RadicalNumber::from_terms(terms);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("a matrix is a nonempty list of rows");
    const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
    Matrix m(j.size(), cols);
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw ParseError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = radical_from_json(j[r][c]);
    }
    return m;
}

Json to_json(const RbaPresentation& pres) {
    Json lambda = Json::array();
    const std::size_t n = pres.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!pres.tensor(i, j, k).is_zero())
                    lambda.push_back({{"i", i}, {"j", j}, {"k", k}, {"value", to_json(pres.tensor(i, j, k))}});
    return {{"d", pres.tensor.d()}, {"star", pres.star.image()}, {"lambda", std::move(lambda)}};
}

RbaPresentation presentation_from_json(const Json& j) {
    const std::size_t size = index_from_json(field(j, "d"), "d") + 1;
    std::vector<std::size_t> image;
    const Json& star = field(j, "star");
    if (!star.is_array()) throw ParseError("star must be a list");
    for (const auto& s : star) image.push_back(index_from_json(s, "star"));
    if (image.size() != size) throw ParseError("star must have d+1 entries");
    InvolutionPerm perm;
    try {
        perm = InvolutionPerm(image);
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
    StructureTensor t(size);
    t(0, 0, 0) = RadicalNumber();
    const Json& lambda = field(j, "lambda");
    if (!lambda.is_array()) throw ParseError("lambda must be a list");
    for (const auto& e : lambda) {
        const std::size_t i = index_from_json(field(e, "i"), "i");
        const std::size_t jj = index_from_json(field(e, "j"), "j");
        const std::size_t k = index_from_json(field(e, "k"), "k");
        if (i >= size || jj >= size || k >= size) throw ParseError("lambda index out of range");
        t(i, jj, k) = radical_from_json(field(e, "value"));
    }
    return {std::move(t), std::move(perm)};
}

Json to_json(const DegreeMap& delta) {
    Json out = Json::array();
    for (const auto& d : delta.degrees) out.push_back(to_json(d));
    return out;
}

DegreeMap degree_map_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("a degree map is a list of radical numbers");
    DegreeMap d;
    for (const auto& v : j) d.degrees.push_back(radical_from_json(v));
    return d;
}

Json to_json(const MatrixBasis& basis) {
    Json elements = Json::array();
    for (const auto& tuple : basis.elements()) {
        Json blocks = Json::array();
        for (const auto& b : tuple) blocks.push_back(to_json(b));
        elements.push_back(std::move(blocks));
    }
    return {{"shape", basis.shape().sizes}, {"elements", std::move(elements)}};
}

MatrixBasis basis_from_json(const Json& j) {
    BlockShape shape;
    const Json& sizes = field(j, "shape");
    if (!sizes.is_array() || sizes.empty()) throw ParseError("shape must be a nonempty list");
    for (const auto& s : sizes) shape.sizes.push_back(index_from_json(s, "shape"));
    const Json& elements = field(j, "elements");
    if (!elements.is_array()) throw ParseError("elements must be a list");
    std::vector<BlockTuple> tuples;
    for (const auto& e : elements) {
        if (!e.is_array()) throw ParseError("each element is a list of blocks");
        BlockTuple t;
        for (const auto& b : e) t.push_back(matrix_from_json(b));
        tuples.push_back(std::move(t));
    }
    try {
        return MatrixBasis(std::move(shape), std::move(tuples));
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

// ---------------------------------------------------------------------------

namespace {

std::string latex_coeff_root(const Rational& q, const Integer& radicand) {
    std::string out;
    const Integer num = abs(q.get_num());
    const Integer& den = q.get_den();
    const bool unit = num == 1 && den == 1;
    if (radicand == 1 || !unit) {
        out = den == 1 ? num.get_str() : "\\frac{" + num.get_str() + "}{" + den.get_str() + "}";
    }
    if (radicand != 1) out += "\\sqrt{" + radicand.get_str() + "}";
    return out;
}

}  // namespace

std::string latex(const RadicalNumber& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : x.terms()) {
        const bool neg = sgn(t.coeff) < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        out += latex_coeff_root(t.coeff, t.radicand);
        first = false;
    }
    return out;
}

std::string latex(const Matrix& m) {
    Integer den = 1;
    for (const auto& v : m.data()) den = lcm(den, v.denominator_lcm());
    std::ostringstream out;
    if (den != 1) out << "\\frac{1}{" << den.get_str() << "}";
    out << "\\begin{bmatrix}";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r > 0) out << " \\\\ ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) out << " & ";
            out << latex(m(r, c) * RadicalNumber(den));
        }
    }
    out << "\\end{bmatrix}";
    return out.str();
}

std::string latex(const MatrixBasis& basis) {
    std::ostringstream out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        out << "b_{" << i << "} &= \\left(";
        for (std::size_t c = 0; c < basis[i].size(); ++c) {
            if (c > 0) out << ",\\ ";
            const Matrix& block = basis[i][c];
            out << (block.rows() == 1 ? latex(block(0, 0)) : latex(block));
        }
        out << "\\right)" << (i + 1 < basis.size() ? " \\\\\n" : "\n");
    }
    return out.str();
}

std::string latex_lambda_table(const RbaPresentation& pres) {
    // Group index triples with the same value, keeping first-appearance order.
    std::vector<std::pair<RadicalNumber, std::vector<std::string>>> groups;
    const std::size_t n = pres.size();
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 1; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const auto& v = pres.tensor(i, j, k);
                if (v.is_zero()) continue;
                std::ostringstream key;
                key << "\\lambda_{" << i << (n > 10 ? "," : "") << j << (n > 10 ? "," : "") << k << "}";
                auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == v; });
                if (it == groups.end()) {
                    groups.push_back({v, {key.str()}});
                } else {
                    it->second.push_back(key.str());
                }
            }
        }
    }
    std::ostringstream out;
    out << "\\begin{array}{l}\n";
    for (const auto& [value, keys] : groups) {
        for (const auto& k : keys) out << k << " = ";
        out << latex(value) << " \\\\\n";
    }
    out << "\\end{array}\n";
    return out.str();
}

std::string decimal(const Matrix& m, int digits) {
    std::ostringstream out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << "[";
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c > 0 ? ", " : "") << m(r, c).to_decimal(digits);
        out << "]" << (r + 1 < m.rows() ? "\n" : "");
    }
    return out.str();
}

std::string decimal(const MatrixBasis& basis, int digits) {
    std::ostringstream out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        out << "b" << i << ":\n";
        for (const auto& block : basis[i]) out << decimal(block, digits) << "\n";
    }
    return out.str();
}

std::string decimal_lambda_table(const RbaPresentation& pres, int digits) {
    std::ostringstream out;
    const std::size_t n = pres.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!pres.tensor(i, j, k).is_zero())
                    out << "lambda[" << i << "," << j << "," << k << "] = " << pres.tensor(i, j, k).to_decimal(digits)
                        << "\n";
    return out.str();
}

}  // namespace rba
