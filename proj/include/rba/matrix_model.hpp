#pragma once

// Bases realized inside ⊕_c M_{m_c}(R) with blockwise transpose as the
// involution, plus the character theory that can be read off such bases.

#include "rba/linalg.hpp"
#include "rba/rba_core.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace rba {

struct BlockShape {
    std::vector<std::size_t> sizes;

    /// Σ m_c²; the size of a full basis.
    std::size_t dimension() const;
    bool operator==(const BlockShape&) const = default;
};

/// One block matrix per component.
using BlockTuple = std::vector<Matrix>;

BlockTuple identity_tuple(const BlockShape& shape);
BlockTuple zero_tuple(const BlockShape& shape);
BlockTuple multiply(const BlockTuple& a, const BlockTuple& b);
BlockTuple add(const BlockTuple& a, const BlockTuple& b);
BlockTuple scale(const BlockTuple& a, const RadicalNumber& s);
BlockTuple transpose(const BlockTuple& a);
/// Row-major concatenation of all block entries.
std::vector<RadicalNumber> flatten(const BlockTuple& a);

class MatrixBasis {
public:
    /// Validates block sizes and that the first element is the identity tuple.
    MatrixBasis(BlockShape shape, std::vector<BlockTuple> elements);

    const BlockShape& shape() const { return shape_; }
    std::size_t size() const { return elements_.size(); }
    const BlockTuple& operator[](std::size_t i) const { return elements_.at(i); }
    const std::vector<BlockTuple>& elements() const { return elements_; }

    /// Σ_i coords_i · b_i.
    BlockTuple combine(const std::vector<RadicalNumber>& coords) const;

    bool operator==(const MatrixBasis&) const = default;

private:
    BlockShape shape_;
    std::vector<BlockTuple> elements_;
};

/// Same elements, ignoring order.
bool same_element_set(const MatrixBasis& a, const MatrixBasis& b);

class ClosureError : public DomainError {
public:
    ClosureError(std::size_t i, std::size_t j);
    std::size_t i() const { return i_; }
    std::size_t j() const { return j_; }

private:
    std::size_t i_;
    std::size_t j_;
};

class NotStarClosed : public DomainError {
public:
    explicit NotStarClosed(std::size_t index);
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// Coordinates of block tuples with respect to a basis.
class BasisCoordinates {
public:
    /// Throws RankError if the basis elements are linearly dependent.
    explicit BasisCoordinates(const MatrixBasis& basis);
    /// Throws InconsistentSystem if the tuple is outside the span.
    std::vector<RadicalNumber> operator()(const BlockTuple& tuple) const;

private:
    ExactSolver solver_;
};

InvolutionPerm involution_on_indices(const MatrixBasis& basis);

RbaPresentation extract_structure_constants(const MatrixBasis& basis);

class CharacterTheoryFailure : public DomainError {
public:
    CharacterTheoryFailure(std::size_t component, const std::string& what);
    std::size_t component() const { return component_; }

private:
    std::size_t component_;
};

struct ComponentCharacter {
    std::size_t component = 0;
    std::size_t degree = 0;                  // χ(1) = block size
    std::vector<RadicalNumber> values;       // χ(b_i)
    std::vector<RadicalNumber> idempotent;   // coordinates of e_χ
    RadicalNumber multiplicity;              // m_χ
};

struct CharacterData {
    RadicalNumber order;  // n = δ(𝐁⁺), or 1 for the trace x ↦ x_0
    bool uses_degree_map = false;
    std::vector<ComponentCharacter> characters;
};

/// Block-trace characters, idempotent coordinates and multiplicities in the
/// standard feasible trace τ(x) = n·x_0. Without a degree map the trace
/// x ↦ x_0 is used. Checks the idempotent character formula, orthogonality,
/// positivity of multiplicities, τ = Σ m_χ χ and m_δ = 1; throws
/// CharacterTheoryFailure on any inconsistency.
CharacterData character_data(const MatrixBasis& basis, const RbaPresentation& pres,
                             const std::optional<DegreeMap>& delta);
CharacterData character_data(const MatrixBasis& basis, const std::optional<DegreeMap>& delta);

/// Projection onto a 1×1 component as a candidate degree map.
DegreeMap component_character(const MatrixBasis& basis, std::size_t component);

/// All 1×1 components whose projection is positive on every basis element.
std::vector<std::size_t> positive_linear_components(const MatrixBasis& basis);

class LemmaViolation : public DomainError {
public:
    using DomainError::DomainError;
};

struct QuadraticData {
    RadicalNumber degree;        // δ(x)
    RadicalNumber kappa;         // κ(x) = coefficient of b_0 in x²
    RadicalNumber lambda;        // λ(x)
    RadicalNumber mu;            // μ(x)
    RadicalNumber discriminant;  // κ n(n−1) − δ(x)² n
    bool complex_pair = false;   // discriminant < 0
    /// {r(x), s(x)} when the discriminant is a nonnegative rational.
    std::optional<std::pair<RadicalNumber, RadicalNumber>> eigenvalues;
};

/// For a basis of shape (1,2) with degree map δ and τ-traceless x, computes
/// κ, λ, μ with x² = κ b_0 + λ x + μ(𝐁⁺ − b_0 − x) and verifies that
/// identity by exact matrix arithmetic (throws LemmaViolation otherwise).
QuadraticData quadratic_coeffs(const MatrixBasis& basis, const RbaPresentation& pres, const DegreeMap& delta,
                               const std::vector<RadicalNumber>& x);

/// Conjugates block `component` of every element by p: B ↦ p B p⁻¹.
MatrixBasis conjugate_basis(const MatrixBasis& basis, std::size_t component, const Matrix& p);

/// Matrix realization of the circle product: `left` is glued to `right`
/// through the 1×1 component `delta_component` of `left`.
MatrixBasis circle_product_basis(const MatrixBasis& left, std::size_t delta_component, const MatrixBasis& right);

}  // namespace rba
