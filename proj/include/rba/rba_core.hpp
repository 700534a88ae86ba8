#pragma once

// Abstract presentations of reality-based algebras: a basis b_0..b_d with
// b_i b_j = Σ_k λ_ijk b_k and an involution i ↦ i* on indices.

#include "rba/exactreal.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rba {

class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidCharacter : public DomainError {
public:
    using DomainError::DomainError;
};

/// Involutive permutation of {0..d} fixing 0.
class InvolutionPerm {
public:
    InvolutionPerm() : image_{0} {}
    explicit InvolutionPerm(std::vector<std::size_t> image);
    static InvolutionPerm identity(std::size_t size);

    std::size_t size() const { return image_.size(); }
    std::size_t operator()(std::size_t i) const { return image_.at(i); }
    const std::vector<std::size_t>& image() const { return image_; }
    std::vector<std::size_t> fixed_points() const;

    bool operator==(const InvolutionPerm&) const = default;

private:
    std::vector<std::size_t> image_;
};

/// Dense (d+1)³ array of structure constants.
class StructureTensor {
public:
    StructureTensor() : StructureTensor(1) {}
    /// Zero tensor on `size` = d+1 basis elements, except λ_000 = 1.
    explicit StructureTensor(std::size_t size);

    std::size_t size() const { return size_; }
    std::size_t d() const { return size_ - 1; }

    const RadicalNumber& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return lambda_[index(i, j, k)];
    }
    RadicalNumber& operator()(std::size_t i, std::size_t j, std::size_t k) { return lambda_[index(i, j, k)]; }

    /// Nonzero (k, λ_ijk) of the product b_i b_j.
    std::vector<std::pair<std::size_t, RadicalNumber>> product(std::size_t i, std::size_t j) const;
    /// Coordinates of b_i·x for x given in coordinates.
    std::vector<RadicalNumber> left_multiply(std::size_t i, const std::vector<RadicalNumber>& x) const;
    /// Coordinates of x·y.
    std::vector<RadicalNumber> multiply(const std::vector<RadicalNumber>& x,
                                        const std::vector<RadicalNumber>& y) const;

    /// Sets λ_0jk = λ_j0k = [j = k].
    void set_identity_rows();

    bool is_commutative() const;
    const std::vector<RadicalNumber>& entries() const { return lambda_; }

    bool operator==(const StructureTensor&) const = default;

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
        return (i * size_ + j) * size_ + k;
    }

    std::size_t size_;
    std::vector<RadicalNumber> lambda_;
};

struct RbaPresentation {
    StructureTensor tensor;
    InvolutionPerm star;

    std::size_t size() const { return tensor.size(); }
    bool operator==(const RbaPresentation&) const = default;
};

struct DegreeMap {
    std::vector<RadicalNumber> degrees;

    /// n = Σ δ_i.
    RadicalNumber order() const;
    bool positive() const;
    bool operator==(const DegreeMap&) const = default;
};

enum class Axiom {
    Identity,           // b_0 is the identity
    Associativity,      // (b_i b_j) b_k = b_i (b_j b_k)
    StarCompatibility,  // λ_ijk = λ_{j* i* k*}
    IdentityCoefficient,  // λ_ij0 ≠ 0 ⟺ j = i*
    PositiveNorm,       // λ_ii*0 = λ_i*i0 > 0
};

std::string to_string(Axiom axiom);

struct Violation {
    Axiom axiom;
    std::vector<std::size_t> indices;  // (i,j) / (i,j,k) / (i,j,k,l) witness
    RadicalNumber value;               // offending value (or difference of the two sides)
    std::string detail;
};

/// Exact tensor statistics shared by the verifier and the scanners.
struct ConstantStats {
    bool is_rational = true;
    bool is_integral = true;
    bool is_nonnegative = true;
    Integer max_denominator = 1;
    std::vector<Integer> radicands;  // distinct, ascending
};
ConstantStats constant_stats(const StructureTensor& tensor);

struct VerificationReport {
    std::size_t size = 0;
    std::vector<Violation> violations;
    ConstantStats stats;
    std::optional<DegreeMap> degree_map;  // the degree map used for the table-algebra flag
    bool has_positive_degree_map = false;
    bool is_table_algebra = false;

    bool ok() const { return violations.empty(); }
    bool passed(Axiom axiom) const;
    std::size_t count(Axiom axiom) const;
    const Violation* first(Axiom axiom) const;
};

/// Checks every RBA axiom and collects all failures. If `delta` is absent
/// the standard candidate λ_ii*0 is tried as the degree map.
VerificationReport verify_rba(const RbaPresentation& pres,
                              const std::optional<DegreeMap>& delta = std::nullopt);

/// δ_i := λ_ii*0 if that is an algebra homomorphism on the basis.
std::optional<DegreeMap> degree_candidate(const RbaPresentation& pres);

struct DegreeCheck {
    bool homomorphism = false;
    bool star_symmetric = false;
    bool nonzero = false;
    bool positive = false;

    /// A degree map: real-valued homomorphism, star-symmetric and nonzero on the basis.
    bool is_degree_map() const { return homomorphism && star_symmetric && nonzero; }
    /// A real linear character (zeros allowed).
    bool is_linear_character() const { return homomorphism && star_symmetric; }
};
DegreeCheck verify_degree_map(const RbaPresentation& pres, const DegreeMap& delta);

struct Standardized {
    RbaPresentation presentation;
    DegreeMap degree_map;
    std::vector<RadicalNumber> scale;  // b'_i = scale_i · b_i
};
/// Rescales b_i by δ_i/λ_ii*0 so that λ'_ii*0 = δ'_i. Requires a positive degree map.
Standardized standardize(const RbaPresentation& pres, const DegreeMap& delta);

/// Rescales b_i ↦ c_i b_i (c_0 must be 1 and c_i = c_{i*}).
RbaPresentation rescale(const RbaPresentation& pres, const std::vector<RadicalNumber>& scale);

/// τ(Σ x_i b_i) = n·x_0.
RadicalNumber standard_trace(const DegreeMap& delta, const std::vector<RadicalNumber>& coords);

/// Coordinates of the central idempotent of a real linear character ψ:
/// e_ψ ∝ Σ_i ψ(b_i*)/λ_ii*0 · b_i normalised by ψ(e_ψ) = 1. For a positive
/// degree map this is (1/n) Σ_i δ_i/λ_ii*0 · b_i.
std::vector<RadicalNumber> linear_idempotent(const RbaPresentation& pres, const DegreeMap& psi);

struct CircleProduct {
    RbaPresentation presentation;
    bool left_is_c_algebra = false;  // commutative with δ a degree map
    std::size_t left_size = 0;       // b_0..b_{left_size-1} come from the left factor
};

/// Glues `right` onto `left` through the idempotent of the real linear
/// character `delta` of `left`. Result order: b_0..b_dC, then c_1..c_h.
CircleProduct circle_product(const RbaPresentation& left, const DegreeMap& delta,
                             const RbaPresentation& right);

/// Degree map of a circle product built from degree maps of both factors.
DegreeMap circle_degree_map(const DegreeMap& left, const DegreeMap& right);

}  // namespace rba
