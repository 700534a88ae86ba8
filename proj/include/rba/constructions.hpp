#pragma once

#include "rba/matrix_model.hpp"
#include "rba/rba_core.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace rba {

/// First eigenmatrix p_ij: rows are basis elements, columns are characters.
struct CharacterTable {
    Matrix p;
};

enum class Sign : int { Minus = -1, Plus = 1 };

inline RadicalNumber as_scalar(Sign s) { return RadicalNumber(static_cast<long>(s)); }
inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
char to_char(Sign s);

struct Dim5Params {
    Rational delta1;
    Rational delta2;
    Rational delta3;
    std::array<Sign, 3> signs{Sign::Plus, Sign::Plus, Sign::Plus};

    /// n = 1 + δ₁ + δ₂ + 2δ₃.
    Rational order() const { return 1 + delta1 + delta2 + 2 * delta3; }
    void validate() const;
};

struct CmParams {
    std::size_t m = 2;
    Rational delta = 1;
    Sign sign_x = Sign::Minus;
    Sign sign_y = Sign::Plus;

    /// n = 1 + m²δ.
    Rational order() const { return 1 + Rational(static_cast<unsigned long>(m * m)) * delta; }
    void validate() const;
};

/// Diagonal bases of C^k for k ∈ {2,3,4}, as tuples of 1×1 blocks.
MatrixBasis diag_basis_small(std::size_t k);

struct AffinePlane {
    RbaPresentation presentation;
    CharacterTable table;
};
/// The (q+2)-dimensional table algebra with b_i² = (q−1)b_0 + (q−2)b_i and
/// b_i b_j = 𝐁⁺ − b_0 − b_i − b_j.
AffinePlane affine_plane_ta(long q);

/// b_i ↦ (p_i0, p_i1, ...) as tuples of 1×1 blocks.
MatrixBasis character_table_to_diag(const CharacterTable& table);

/// Embeds a diagonal basis of C^k into M_k and adds every off-diagonal E_ij.
/// Order: identity, off-diagonal E_ij (row-major), remaining diagonal elements.
MatrixBasis lift_diag_to_full(const MatrixBasis& diag);

/// {1, (1,−1,0,…), (1,1,−2,0,…), …}: mutually orthogonal rational vectors.
MatrixBasis helmert_diag_basis(std::size_t k);

/// True when every non-identity element has zero trace. The lift is an
/// RBA-basis exactly for such diagonal bases: E_ij E_ji = E_ii and E_ji E_ij
/// = E_jj must carry the same coefficient of I.
bool is_trace_balanced(const MatrixBasis& diag);

/// Rational RBA-basis of M_k (k ≥ 2). Uses the tables of diag_basis_small
/// for k = 2, 4 and the Helmert basis otherwise.
MatrixBasis rational_basis_mn(std::size_t k);

/// Rational RBA presentation of ⊕ M_{dims[i]} by iterated circle products.
RbaPresentation semisimple_rational_rba(const std::vector<std::size_t>& dims);
/// Matrix realization of the same iterated circle product; the element order
/// matches semisimple_rational_rba.
MatrixBasis semisimple_rational_realization(const std::vector<std::size_t>& dims);

/// The 5-dimensional family of standardized RBA^δ-bases of C ⊕ M_2.
MatrixBasis dim5_family(const Dim5Params& params);
/// Closed-form structure constants of dim5_family.
StructureTensor dim5_lambda_table(const Dim5Params& params);
RbaPresentation dim5_presentation(const Dim5Params& params);
DegreeMap dim5_degree_map(const Dim5Params& params);
InvolutionPerm dim5_star();

/// Reflection X ↦ X − 2 (A,X)/(A,A) · A in the Frobenius form.
Matrix reflect(const Matrix& x, const Matrix& axis);

/// B_ij = x E_ij + y J before reflection, row-major in (i,j).
std::vector<Matrix> cm_raw_matrices(const CmParams& params);
/// The reflected matrices B̃_ij, row-major in (i,j).
std::vector<Matrix> cm_matrices(const CmParams& params);
/// (1, I_m) followed by (δ, B̃_ij) row-major; checks the Gram, transpose and
/// sum conditions before returning.
MatrixBasis cm_basis(const CmParams& params);
DegreeMap cm_degree_map(const CmParams& params);

struct P1Report {
    bool gram = true;
    std::optional<std::pair<std::size_t, std::size_t>> gram_witness;
    bool transpose_permutation = true;
    std::vector<std::size_t> fixed_points;
    bool sum = true;
    Matrix sum_value;

    bool ok() const { return gram && transpose_permutation && sum; }
};
/// Gram condition (B_i,B_j) = δ_i(n−δ_i)m/(n−1) or −δ_iδ_j m/(n−1), a
/// transpose-involution with exactly m fixed points and Σ B_i = −I.
P1Report check_p1_conditions(const std::vector<Matrix>& matrices, const std::vector<RadicalNumber>& degrees);

class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace rba
