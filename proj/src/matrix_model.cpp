#include "rba/matrix_model.hpp"

#include <algorithm>
#include <numeric>

namespace rba {

std::size_t BlockShape::dimension() const {
    return std::accumulate(sizes.begin(), sizes.end(), std::size_t{0},
                           [](std::size_t acc, std::size_t m) { return acc + m * m; });
}

BlockTuple identity_tuple(const BlockShape& shape) {
    BlockTuple t;
    for (const auto m : shape.sizes) t.push_back(Matrix::identity(m));
    return t;
}

BlockTuple zero_tuple(const BlockShape& shape) {
    BlockTuple t;
    for (const auto m : shape.sizes) t.emplace_back(m, m);
    return t;
}

BlockTuple multiply(const BlockTuple& a, const BlockTuple& b) {
    if (a.size() != b.size()) throw StructuralError("block tuple length mismatch");
    BlockTuple out;
    out.reserve(a.size());
    for (std::size_t c = 0; c < a.size(); ++c) out.push_back(a[c] * b[c]);
    return out;
}

BlockTuple add(const BlockTuple& a, const BlockTuple& b) {
    if (a.size() != b.size()) throw StructuralError("block tuple length mismatch");
    BlockTuple out;
    out.reserve(a.size());
    for (std::size_t c = 0; c < a.size(); ++c) out.push_back(a[c] + b[c]);
    return out;
}

BlockTuple scale(const BlockTuple& a, const RadicalNumber& s) {
    BlockTuple out;
    out.reserve(a.size());
    for (const auto& block : a) out.push_back(block * s);
    return out;
}

BlockTuple transpose(const BlockTuple& a) {
    BlockTuple out;
    out.reserve(a.size());
    for (const auto& block : a) out.push_back(block.transpose());
    return out;
}

std::vector<RadicalNumber> flatten(const BlockTuple& a) {
    std::vector<RadicalNumber> out;
    for (const auto& block : a) out.insert(out.end(), block.data().begin(), block.data().end());
    return out;
}

MatrixBasis::MatrixBasis(BlockShape shape, std::vector<BlockTuple> elements)
    : shape_(std::move(shape)), elements_(std::move(elements)) {
    if (shape_.sizes.empty()) throw StructuralError("block shape has no components");
    for (const auto m : shape_.sizes)
        if (m == 0) throw StructuralError("block sizes must be positive");
    if (elements_.empty()) throw StructuralError("basis is empty");
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        const auto& e = elements_[i];
        if (e.size() != shape_.sizes.size())
            throw StructuralError("element " + std::to_string(i) + " has the wrong number of blocks");
        for (std::size_t c = 0; c < e.size(); ++c) {
            if (e[c].rows() != shape_.sizes[c] || e[c].cols() != shape_.sizes[c])
                throw StructuralError("element " + std::to_string(i) + " block " + std::to_string(c) +
                                      " has the wrong size");
        }
    }
    if (elements_.front() != identity_tuple(shape_)) throw StructuralError("first basis element must be the identity");
}

BlockTuple MatrixBasis::combine(const std::vector<RadicalNumber>& coords) const {
    if (coords.size() != elements_.size()) throw StructuralError("coordinate length mismatch");
    BlockTuple out = zero_tuple(shape_);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) out = add(out, scale(elements_[i], coords[i]));
    return out;
}

bool same_element_set(const MatrixBasis& a, const MatrixBasis& b) {
    if (a.shape() != b.shape() || a.size() != b.size()) return false;
    std::vector<char> used(b.size(), 0);
    for (const auto& e : a.elements()) {
        bool found = false;
        for (std::size_t j = 0; j < b.size() && !found; ++j) {
            if (used[j] == 0 && b[j] == e) {
                used[j] = 1;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

ClosureError::ClosureError(std::size_t i, std::size_t j)
    : DomainError("product b_" + std::to_string(i) + " b_" + std::to_string(j) + " is outside the span"),
      i_(i),
      j_(j) {}

NotStarClosed::NotStarClosed(std::size_t index)
    : DomainError("transpose of b_" + std::to_string(index) + " is not a basis element"), index_(index) {}

CharacterTheoryFailure::CharacterTheoryFailure(std::size_t component, const std::string& what)
    : DomainError("component " + std::to_string(component) + ": " + what), component_(component) {}

namespace {

Matrix column_matrix(const MatrixBasis& basis) {
    const std::size_t rows = basis.shape().dimension();
    Matrix a(rows, basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto v = flatten(basis[i]);
        for (std::size_t r = 0; r < rows; ++r) a(r, i) = v[r];
    }
    return a;
}

ExactSolver make_solver(const MatrixBasis& basis) {
    try {
        return ExactSolver(column_matrix(basis));
    } catch (const RankError& e) {
        throw RankError(std::string("basis elements are linearly dependent: ") + e.what());
    }
}

}  // namespace

BasisCoordinates::BasisCoordinates(const MatrixBasis& basis) : solver_(make_solver(basis)) {}

std::vector<RadicalNumber> BasisCoordinates::operator()(const BlockTuple& tuple) const {
    return solver_.solve(flatten(tuple));
}

InvolutionPerm involution_on_indices(const MatrixBasis& basis) {
    std::vector<std::size_t> image(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto t = transpose(basis[i]);
        std::size_t j = 0;
        while (j < basis.size() && basis[j] != t) ++j;
        if (j == basis.size()) throw NotStarClosed(i);
        image[i] = j;
    }
    return InvolutionPerm(std::move(image));
}

RbaPresentation extract_structure_constants(const MatrixBasis& basis) {
    const BasisCoordinates coords(basis);
    const std::size_t n = basis.size();
    StructureTensor tensor(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<RadicalNumber> lambda;
            try {
                lambda = coords(multiply(basis[i], basis[j]));
            } catch (const InconsistentSystem&) {
                throw ClosureError(i, j);
            }
            for (std::size_t k = 0; k < n; ++k) tensor(i, j, k) = std::move(lambda[k]);
        }
    }
    return {std::move(tensor), involution_on_indices(basis)};
}

DegreeMap component_character(const MatrixBasis& basis, std::size_t component) {
    if (component >= basis.shape().sizes.size() || basis.shape().sizes[component] != 1)
        throw StructuralError("component " + std::to_string(component) + " is not one-dimensional");
    DegreeMap delta;
    for (const auto& e : basis.elements()) delta.degrees.push_back(e[component](0, 0));
    return delta;
}

std::vector<std::size_t> positive_linear_components(const MatrixBasis& basis) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < basis.shape().sizes.size(); ++c) {
        if (basis.shape().sizes[c] != 1) continue;
        const bool positive = std::all_of(basis.elements().begin(), basis.elements().end(),
                                          [&](const BlockTuple& e) { return e[c](0, 0).sign() > 0; });
        if (positive) out.push_back(c);
    }
    return out;
}

CharacterData character_data(const MatrixBasis& basis, const std::optional<DegreeMap>& delta) {
    return character_data(basis, extract_structure_constants(basis), delta);
}

CharacterData character_data(const MatrixBasis& basis, const RbaPresentation& pres,
                             const std::optional<DegreeMap>& delta) {
    const std::size_t n = basis.size();
    if (pres.size() != n) throw StructuralError("presentation does not match basis");
    CharacterData data;
    data.uses_degree_map = delta.has_value();
    if (delta) {
        const auto check = verify_degree_map(pres, *delta);
        if (!check.is_degree_map() || !check.positive)
            throw CharacterTheoryFailure(0, "supplied map is not a positive degree map");
        data.order = delta->order();
    } else {
        data.order = 1L;
    }
    const BasisCoordinates coords(basis);
    const auto& shape = basis.shape();
    const auto& star = pres.star;

    for (std::size_t c = 0; c < shape.sizes.size(); ++c) {
        ComponentCharacter ch;
        ch.component = c;
        ch.degree = shape.sizes[c];
        for (const auto& e : basis.elements()) ch.values.push_back(e[c].trace());
        BlockTuple idem = zero_tuple(shape);
        idem[c] = Matrix::identity(shape.sizes[c]);
        ch.idempotent = coords(idem);
        // Coordinate of b_0 in e_χ is m_χ χ(1)/n.
        ch.multiplicity = data.order * ch.idempotent[0] / RadicalNumber(static_cast<long>(ch.degree));
        const RadicalNumber factor = ch.multiplicity / data.order;
        for (std::size_t i = 0; i < n; ++i) {
            const RadicalNumber expected = factor * ch.values[star(i)] / pres.tensor(i, star(i), 0);
            if (expected != ch.idempotent[i])
                throw CharacterTheoryFailure(c, "idempotent character formula fails at b_" + std::to_string(i));
        }
        if (ch.multiplicity.sign() <= 0) throw CharacterTheoryFailure(c, "multiplicity is not positive");
        data.characters.push_back(std::move(ch));
    }

    for (const auto& chi : data.characters) {
        for (const auto& psi : data.characters) {
            RadicalNumber value;
            for (std::size_t i = 0; i < n; ++i)
                if (!psi.idempotent[i].is_zero()) value += psi.idempotent[i] * chi.values[i];
            const RadicalNumber expected =
                chi.component == psi.component ? RadicalNumber(static_cast<long>(chi.degree)) : RadicalNumber();
            if (value != expected)
                throw CharacterTheoryFailure(chi.component,
                                             "orthogonality fails against component " + std::to_string(psi.component));
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        RadicalNumber tau;
        for (const auto& ch : data.characters) tau += ch.multiplicity * ch.values[i];
        const RadicalNumber expected = i == 0 ? data.order : RadicalNumber();
        if (tau != expected)
            throw CharacterTheoryFailure(0, "trace decomposition fails at b_" + std::to_string(i));
    }

    if (delta) {
        bool found = false;
        for (const auto& ch : data.characters) {
            if (ch.degree == 1 && ch.values == delta->degrees) {
                found = true;
                if (ch.multiplicity != RadicalNumber(1L))
                    throw CharacterTheoryFailure(ch.component, "degree character has multiplicity != 1");
            }
        }
        if (!found) throw CharacterTheoryFailure(0, "degree map is not a block character");
    }
    return data;
}

QuadraticData quadratic_coeffs(const MatrixBasis& basis, const RbaPresentation& pres, const DegreeMap& delta,
                               const std::vector<RadicalNumber>& x) {
    if (basis.shape() != BlockShape{{1, 2}}) throw StructuralError("quadratic_coeffs needs shape (1,2)");
    const std::size_t size = basis.size();
    if (x.size() != size || delta.degrees.size() != size) throw StructuralError("coordinate length mismatch");
    if (!x[0].is_zero()) throw DomainError("x must be traceless (x_0 = 0)");

    const RadicalNumber n = delta.order();
    const RadicalNumber n1 = n - RadicalNumber(1L);
    const RadicalNumber n1sq_inv = (n1 * n1).inverse();

    QuadraticData q;
    for (std::size_t i = 0; i < size; ++i)
        if (!x[i].is_zero()) q.degree += x[i] * delta.degrees[i];
    for (std::size_t i = 0; i < size; ++i) {
        const std::size_t is = pres.star(i);
        if (!x[i].is_zero() && !x[is].is_zero()) q.kappa += x[i] * x[is] * pres.tensor(i, is, 0);
    }
    const RadicalNumber d2 = q.degree * q.degree;
    const RadicalNumber np1 = n + RadicalNumber(1L);
    q.mu = (np1 * d2 - q.kappa * n1) * n1sq_inv;
    q.lambda = (np1 * d2 - RadicalNumber(2L) * n1 * q.degree - q.kappa * n1) * n1sq_inv;
    q.discriminant = q.kappa * n * n1 - d2 * n;

    // x² = κ b_0 + λ x + μ(𝐁⁺ − b_0 − x)
    const BlockTuple xt = basis.combine(x);
    std::vector<RadicalNumber> rhs(size);
    for (std::size_t i = 0; i < size; ++i) rhs[i] = q.mu + (q.lambda - q.mu) * x[i];
    rhs[0] = q.kappa;
    if (multiply(xt, xt) != basis.combine(rhs)) {
        throw LemmaViolation("x^2 is not kappa b0 + lambda x + mu (B+ - b0 - x)");
    }

    const int disc_sign = q.discriminant.sign();
    q.complex_pair = disc_sign < 0;
    if (disc_sign >= 0) {
        if (const auto d = q.discriminant.to_rational()) {
            const RadicalNumber root = RadicalNumber::sqrt(*d);
            const RadicalNumber inv = n1.inverse();
            const RadicalNumber centre = -q.degree * inv;
            q.eigenvalues = std::make_pair(centre + root * inv, centre - root * inv);
        }
    }
    return q;
}

MatrixBasis conjugate_basis(const MatrixBasis& basis, std::size_t component, const Matrix& p) {
    if (component >= basis.shape().sizes.size()) throw StructuralError("component index out of range");
    if (p.rows() != basis.shape().sizes[component] || !p.is_square())
        throw StructuralError("conjugating matrix has the wrong size");
    const Matrix p_inv = inverse(p);
    std::vector<BlockTuple> elements = basis.elements();
    for (auto& e : elements) e[component] = p * e[component] * p_inv;
    return MatrixBasis(basis.shape(), std::move(elements));
}

MatrixBasis circle_product_basis(const MatrixBasis& left, std::size_t delta_component, const MatrixBasis& right) {
    const auto& ls = left.shape().sizes;
    if (delta_component >= ls.size() || ls[delta_component] != 1)
        throw StructuralError("gluing component must be one-dimensional");
    BlockShape shape;
    for (std::size_t c = 0; c < ls.size(); ++c)
        if (c != delta_component) shape.sizes.push_back(ls[c]);
    shape.sizes.insert(shape.sizes.end(), right.shape().sizes.begin(), right.shape().sizes.end());

    std::vector<BlockTuple> elements;
    for (const auto& b : left.elements()) {
        BlockTuple t;
        for (std::size_t c = 0; c < ls.size(); ++c)
            if (c != delta_component) t.push_back(b[c]);
        const RadicalNumber& value = b[delta_component](0, 0);
        for (const auto m : right.shape().sizes) t.push_back(Matrix::identity(m) * value);
        elements.push_back(std::move(t));
    }
    for (std::size_t j = 1; j < right.size(); ++j) {
        BlockTuple t;
        for (std::size_t c = 0; c < ls.size(); ++c)
            if (c != delta_component) t.emplace_back(ls[c], ls[c]);
        t.insert(t.end(), right[j].begin(), right[j].end());
        elements.push_back(std::move(t));
    }
    return MatrixBasis(std::move(shape), std::move(elements));
}

}  // namespace rba
