#include "rba/rba_core.hpp"

#include <algorithm>
#include <set>

namespace rba {

InvolutionPerm::InvolutionPerm(std::vector<std::size_t> image) : image_(std::move(image)) {
    if (image_.empty()) throw StructuralError("involution on an empty index set");
    if (image_[0] != 0) throw StructuralError("involution must fix index 0");
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (image_[i] >= image_.size()) throw StructuralError("involution image out of range");
        if (image_[image_[i]] != i) {
            throw StructuralError("map is not an involution at index " + std::to_string(i));
        }
    }
}

InvolutionPerm InvolutionPerm::identity(std::size_t size) {
    std::vector<std::size_t> image(size);
    for (std::size_t i = 0; i < size; ++i) image[i] = i;
    return InvolutionPerm(std::move(image));
}

std::vector<std::size_t> InvolutionPerm::fixed_points() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < image_.size(); ++i)
        if (image_[i] == i) out.push_back(i);
    return out;
}

// ---------------------------------------------------------------------------

StructureTensor::StructureTensor(std::size_t size) : size_(size), lambda_(size * size * size) {
    if (size == 0) throw StructuralError("structure tensor needs at least the identity");
    lambda_[0] = 1L;
}

std::vector<std::pair<std::size_t, RadicalNumber>> StructureTensor::product(std::size_t i,
                                                                            std::size_t j) const {
    std::vector<std::pair<std::size_t, RadicalNumber>> out;
    for (std::size_t k = 0; k < size_; ++k) {
        const auto& v = (*this)(i, j, k);
        if (!v.is_zero()) out.emplace_back(k, v);
    }
    return out;
}

std::vector<RadicalNumber> StructureTensor::left_multiply(std::size_t i,
                                                          const std::vector<RadicalNumber>& x) const {
    std::vector<RadicalNumber> out(size_);
    for (std::size_t j = 0; j < size_; ++j) {
        if (x[j].is_zero()) continue;
        for (std::size_t k = 0; k < size_; ++k) {
            const auto& v = (*this)(i, j, k);
            if (!v.is_zero()) out[k] += v * x[j];
        }
    }
    return out;
}

std::vector<RadicalNumber> StructureTensor::multiply(const std::vector<RadicalNumber>& x,
                                                     const std::vector<RadicalNumber>& y) const {
    if (x.size() != size_ || y.size() != size_) throw StructuralError("coordinate length mismatch");
    std::vector<RadicalNumber> out(size_);
    for (std::size_t i = 0; i < size_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < size_; ++j) {
            if (y[j].is_zero()) continue;
            const RadicalNumber xy = x[i] * y[j];
            for (std::size_t k = 0; k < size_; ++k) {
                const auto& v = (*this)(i, j, k);
                if (!v.is_zero()) out[k] += v * xy;
            }
        }
    }
    return out;
}

void StructureTensor::set_identity_rows() {
    for (std::size_t j = 0; j < size_; ++j) {
        for (std::size_t k = 0; k < size_; ++k) {
            const RadicalNumber v = (j == k) ? RadicalNumber(1L) : RadicalNumber();
            (*this)(0, j, k) = v;
            (*this)(j, 0, k) = v;
        }
    }
}

bool StructureTensor::is_commutative() const {
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = i + 1; j < size_; ++j)
            for (std::size_t k = 0; k < size_; ++k)
                if ((*this)(i, j, k) != (*this)(j, i, k)) return false;
    return true;
}

RadicalNumber DegreeMap::order() const {
    RadicalNumber n;
    for (const auto& d : degrees) n += d;
    return n;
}

bool DegreeMap::positive() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const RadicalNumber& d) { return d.sign() > 0; });
}

std::string to_string(Axiom axiom) {
    switch (axiom) {
        case Axiom::Identity: return "identity";
        case Axiom::Associativity: return "associativity";
        case Axiom::StarCompatibility: return "star-compatibility";
        case Axiom::IdentityCoefficient: return "identity-coefficient";
        case Axiom::PositiveNorm: return "positive-norm";
    }
    return "unknown";
}

ConstantStats constant_stats(const StructureTensor& tensor) {
    ConstantStats stats;
    std::set<Integer> radicands;
    for (const auto& v : tensor.entries()) {
        if (v.is_zero()) continue;
        for (const auto& t : v.terms()) {
            radicands.insert(t.radicand);
            if (t.coeff.get_den() > stats.max_denominator) stats.max_denominator = t.coeff.get_den();
        }
        if (!v.is_rational()) stats.is_rational = false;
        if (!v.is_integer()) stats.is_integral = false;
        if (stats.is_nonnegative && v.sign() < 0) stats.is_nonnegative = false;
    }
    stats.radicands.assign(radicands.begin(), radicands.end());
    return stats;
}

bool VerificationReport::passed(Axiom axiom) const { return count(axiom) == 0; }

std::size_t VerificationReport::count(Axiom axiom) const {
    return static_cast<std::size_t>(
        std::count_if(violations.begin(), violations.end(), [&](const Violation& v) { return v.axiom == axiom; }));
}

const Violation* VerificationReport::first(Axiom axiom) const {
    for (const auto& v : violations)
        if (v.axiom == axiom) return &v;
    return nullptr;
}

namespace {

void check_shape(const RbaPresentation& pres) {
    if (pres.star.size() != pres.tensor.size()) {
        throw StructuralError("involution has " + std::to_string(pres.star.size()) + " points but tensor has " +
                              std::to_string(pres.tensor.size()) + " basis elements");
    }
}

void check_identity(const StructureTensor& t, std::vector<Violation>& out) {
    const std::size_t n = t.size();
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            const RadicalNumber expected = (j == k) ? RadicalNumber(1L) : RadicalNumber();
            if (t(0, j, k) != expected)
                out.push_back({Axiom::Identity, {0, j, k}, t(0, j, k), "b_0 b_j must equal b_j"});
            if (j != 0 && t(j, 0, k) != expected)
                out.push_back({Axiom::Identity, {j, 0, k}, t(j, 0, k), "b_j b_0 must equal b_j"});
        }
    }
}

void check_associativity(const StructureTensor& t, std::vector<Violation>& out) {
    const std::size_t n = t.size();
    std::vector<std::vector<std::vector<std::pair<std::size_t, RadicalNumber>>>> prod(n);
    for (std::size_t i = 0; i < n; ++i) {
        prod[i].resize(n);
        for (std::size_t j = 0; j < n; ++j) prod[i][j] = t.product(i, j);
    }
    std::vector<RadicalNumber> diff(n);
    std::vector<std::size_t> touched;
    std::vector<char> seen(n, 0);
    auto add = [&](std::size_t l, const RadicalNumber& v) {
        if (seen[l] == 0) {
            seen[l] = 1;
            touched.push_back(l);
        }
        diff[l] += v;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                // (b_i b_j) b_k − b_i (b_j b_k)
                for (const auto& [m, a] : prod[i][j])
                    for (const auto& [l, c] : prod[m][k]) add(l, a * c);
                for (const auto& [m, a] : prod[j][k])
                    for (const auto& [l, c] : prod[i][m]) add(l, -(a * c));
                for (const std::size_t l : touched) {
                    if (!diff[l].is_zero()) {
                        out.push_back({Axiom::Associativity, {i, j, k, l}, diff[l],
                                       "coefficient of b_l in (b_i b_j) b_k - b_i (b_j b_k)"});
                    }
                    diff[l] = RadicalNumber();
                    seen[l] = 0;
                }
                touched.clear();
            }
        }
    }
}

}  // namespace

VerificationReport verify_rba(const RbaPresentation& pres, const std::optional<DegreeMap>& delta) {
    check_shape(pres);
    const auto& t = pres.tensor;
    const auto& star = pres.star;
    const std::size_t n = t.size();

    VerificationReport report;
    report.size = n;
    check_identity(t, report.violations);
    check_associativity(t, report.violations);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (t(i, j, k) != t(star(j), star(i), star(k))) {
                    report.violations.push_back({Axiom::StarCompatibility,
                                                 {i, j, k},
                                                 t(i, j, k) - t(star(j), star(i), star(k)),
                                                 "lambda_ijk != lambda_{j* i* k*}"});
                }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const bool nonzero = !t(i, j, 0).is_zero();
            if (nonzero != (j == star(i))) {
                report.violations.push_back({Axiom::IdentityCoefficient,
                                             {i, j},
                                             t(i, j, 0),
                                             nonzero ? "lambda_ij0 != 0 with j != i*" : "lambda_ii*0 == 0"});
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = t(i, star(i), 0);
        const auto& b = t(star(i), i, 0);
        if (a.sign() <= 0) {
            report.violations.push_back({Axiom::PositiveNorm, {i, star(i)}, a, "lambda_ii*0 must be positive"});
        }
        if (a != b) {
            report.violations.push_back({Axiom::PositiveNorm, {i, star(i)}, a - b, "lambda_ii*0 != lambda_i*i0"});
        }
    }

    report.stats = constant_stats(t);
    if (report.ok()) {
        std::optional<DegreeMap> used = delta;
        if (!used) used = degree_candidate(pres);
        if (used && used->degrees.size() == n) {
            const auto check = verify_degree_map(pres, *used);
            if (check.is_degree_map()) {
                report.degree_map = used;
                report.has_positive_degree_map = check.positive;
            }
        }
        report.is_table_algebra = report.has_positive_degree_map && report.stats.is_nonnegative;
    }
    return report;
}

DegreeCheck verify_degree_map(const RbaPresentation& pres, const DegreeMap& delta) {
    check_shape(pres);
    const auto& t = pres.tensor;
    const std::size_t n = t.size();
    DegreeCheck check;
    if (delta.degrees.size() != n) return check;
    const auto& dg = delta.degrees;

    check.homomorphism = dg[0] == RadicalNumber(1L);
    for (std::size_t i = 0; i < n && check.homomorphism; ++i) {
        for (std::size_t j = 0; j < n && check.homomorphism; ++j) {
            RadicalNumber rhs;
            for (std::size_t k = 0; k < n; ++k)
                if (!t(i, j, k).is_zero() && !dg[k].is_zero()) rhs += t(i, j, k) * dg[k];
            check.homomorphism = (dg[i] * dg[j] == rhs);
        }
    }
    check.star_symmetric = true;
    for (std::size_t i = 0; i < n; ++i)
        if (dg[i] != dg[pres.star(i)]) check.star_symmetric = false;
    check.nonzero = std::none_of(dg.begin(), dg.end(), [](const RadicalNumber& d) { return d.is_zero(); });
    check.positive = check.nonzero && delta.positive();
    return check;
}

std::optional<DegreeMap> degree_candidate(const RbaPresentation& pres) {
    check_shape(pres);
    DegreeMap delta;
    for (std::size_t i = 0; i < pres.size(); ++i) delta.degrees.push_back(pres.tensor(i, pres.star(i), 0));
    const auto check = verify_degree_map(pres, delta);
    if (!check.is_degree_map()) return std::nullopt;
    return delta;
}

RbaPresentation rescale(const RbaPresentation& pres, const std::vector<RadicalNumber>& scale) {
    check_shape(pres);
    const std::size_t n = pres.size();
    if (scale.size() != n) throw StructuralError("scale vector length mismatch");
    if (scale[0] != RadicalNumber(1L)) throw StructuralError("rescaling must keep b_0");
    std::vector<RadicalNumber> inv(n);
    for (std::size_t k = 0; k < n; ++k) inv[k] = scale[k].inverse();
    RbaPresentation out{StructureTensor(n), pres.star};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const RadicalNumber cij = scale[i] * scale[j];
            for (std::size_t k = 0; k < n; ++k) {
                const auto& v = pres.tensor(i, j, k);
                out.tensor(i, j, k) = v.is_zero() ? RadicalNumber() : v * cij * inv[k];
            }
        }
    return out;
}

Standardized standardize(const RbaPresentation& pres, const DegreeMap& delta) {
    const auto check = verify_degree_map(pres, delta);
    if (!check.is_degree_map() || !check.positive) {
        throw InvalidCharacter("standardize requires a positive degree map");
    }
    const std::size_t n = pres.size();
    Standardized out;
    out.scale.resize(n);
    out.degree_map.degrees.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.scale[i] = delta.degrees[i] / pres.tensor(i, pres.star(i), 0);
        out.degree_map.degrees[i] = out.scale[i] * delta.degrees[i];
    }
    out.presentation = rescale(pres, out.scale);
    return out;
}

RadicalNumber standard_trace(const DegreeMap& delta, const std::vector<RadicalNumber>& coords) {
    if (coords.size() != delta.degrees.size()) throw StructuralError("coordinate length mismatch");
    return delta.order() * coords[0];
}

std::vector<RadicalNumber> linear_idempotent(const RbaPresentation& pres, const DegreeMap& psi) {
    const std::size_t n = pres.size();
    if (psi.degrees.size() != n) throw StructuralError("character length mismatch");
    std::vector<RadicalNumber> coords(n);
    RadicalNumber norm;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& value = psi.degrees[pres.star(i)];
        if (value.is_zero()) continue;
        coords[i] = value / pres.tensor(i, pres.star(i), 0);
        norm += coords[i] * psi.degrees[i];
    }
    if (norm.is_zero()) throw InvalidCharacter("character has a degenerate idempotent");
    const RadicalNumber inv = norm.inverse();
    for (auto& c : coords) c = c * inv;
    return coords;
}

CircleProduct circle_product(const RbaPresentation& left, const DegreeMap& delta, const RbaPresentation& right) {
    check_shape(left);
    check_shape(right);
    const auto check = verify_degree_map(left, delta);
    if (!check.is_linear_character()) {
        throw InvalidCharacter("circle product needs a real linear character of the left factor");
    }
    const std::size_t nb = left.size();
    const std::size_t h = right.size() - 1;
    const std::size_t n = nb + h;
    auto c = [&](std::size_t j) { return nb + j - 1; };  // index of c_j, j ≥ 1

    const auto e_delta = linear_idempotent(left, delta);

    CircleProduct out;
    out.left_size = nb;
    out.left_is_c_algebra = left.tensor.is_commutative() && check.is_degree_map();
    StructureTensor t(n);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < nb; ++k) t(i, j, k) = left.tensor(i, j, k);
    for (std::size_t i = 0; i < nb; ++i) {
        for (std::size_t j = 1; j <= h; ++j) {
            t(i, c(j), c(j)) = delta.degrees[i];
            t(c(j), i, c(j)) = delta.degrees[i];
        }
    }
    for (std::size_t i = 1; i <= h; ++i) {
        for (std::size_t j = 1; j <= h; ++j) {
            for (std::size_t k = 1; k <= h; ++k) t(c(i), c(j), c(k)) = right.tensor(i, j, k);
            if (j == right.star(i)) {
                const auto& beta0 = right.tensor(i, j, 0);
                for (std::size_t k = 0; k < nb; ++k) t(c(i), c(j), k) = beta0 * e_delta[k];
            }
        }
    }

    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < nb; ++i) image[i] = left.star(i);
    for (std::size_t j = 1; j <= h; ++j) image[c(j)] = c(right.star(j));
    out.presentation = RbaPresentation{std::move(t), InvolutionPerm(std::move(image))};
    return out;
}

DegreeMap circle_degree_map(const DegreeMap& left, const DegreeMap& right) {
    DegreeMap out = left;
    out.degrees.insert(out.degrees.end(), right.degrees.begin() + 1, right.degrees.end());
    return out;
}

}  // namespace rba
