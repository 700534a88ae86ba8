#include "rba/exactreal.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>

namespace rba {

namespace {

std::uint64_t initial_factor_bound() {
    if (const char* env = std::getenv("RBA_FORGE_FACTOR_BOUND")) {
        try {
            const auto value = std::stoull(env);
            if (value >= 2) return value;
        } catch (const std::exception&) {
        }
    }
    return 1'000'000;
}

std::atomic<std::uint64_t>& bound_storage() {
    static std::atomic<std::uint64_t> bound{initial_factor_bound()};
    return bound;
}

// Trial division; `on_prime(p, multiplicity)` is called per prime factor.
// Any cofactor left beyond the bound must be prime (d² > n) or a perfect
// square of something we do not need to factor further.
template <typename OnPrime>
Integer trial_divide(Integer n, OnPrime&& on_prime) {
    const Integer bound = static_cast<unsigned long>(factor_bound());
    auto strip = [&](const Integer& p) {
        unsigned mult = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
            n /= p;
            ++mult;
        }
        if (mult > 0) on_prime(p, mult);
    };
    strip(Integer(2));
    Integer d = 3;
    while (d * d <= n) {
        if (d > bound) return n;  // unresolved cofactor
        strip(d);
        d += 2;
    }
    if (n > 1) on_prime(n, 1u);
    return Integer(1);
}

void require_positive(const Integer& n) {
    if (n <= 0) throw DomainError("expected a positive integer, got " + n.get_str());
}

}  // namespace

std::uint64_t factor_bound() { return bound_storage().load(std::memory_order_relaxed); }

void set_factor_bound(std::uint64_t bound) {
    if (bound < 2) throw DomainError("factor bound must be at least 2");
    bound_storage().store(bound, std::memory_order_relaxed);
}

SquareFreeSplit split_square_free(const Integer& n) {
    require_positive(n);
    SquareFreeSplit out{Integer(1), Integer(1)};
    const Integer rest = trial_divide(n, [&](const Integer& p, unsigned mult) {
        for (unsigned i = 0; i < mult / 2; ++i) out.square_root *= p;
        if (mult % 2 == 1) out.squarefree *= p;
    });
    if (rest != 1) {
        if (mpz_perfect_square_p(rest.get_mpz_t()) == 0) {
            throw DomainError("cannot certify square-free part of " + n.get_str() +
                              ": cofactor exceeds factor bound " + std::to_string(factor_bound()));
        }
        Integer root;
        mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
        out.square_root *= root;
    }
    return out;
}

std::vector<Integer> prime_factors(const Integer& n) {
    require_positive(n);
    std::vector<Integer> primes;
    const Integer rest = trial_divide(n, [&](const Integer& p, unsigned) { primes.push_back(p); });
    if (rest != 1) {
        throw DomainError("cannot factor " + n.get_str() + " within factor bound " +
                          std::to_string(factor_bound()));
    }
    return primes;
}

RootForm normalize_root(const Rational& value) {
    Rational q(value);
    if (q.get_den() == 0) throw DivisionByZero();
    q.canonicalize();
    if (sgn(q) < 0) throw DomainError("square root of negative rational " + q.get_str());
    if (sgn(q) == 0) return {Rational(0), Integer(1)};
    // √(a/b) = √(ab)/b
    const Integer ab = q.get_num() * q.get_den();
    const auto split = split_square_free(ab);
    Rational coeff(split.square_root, q.get_den());
    coeff.canonicalize();
    return {coeff, split.squarefree};
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; }),
            s.end());
    if (s.empty()) throw DomainError("empty rational literal");
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    const auto valid = [](const std::string& part) {
        if (part.empty()) return false;
        std::size_t i = (part.front() == '-') ? 1 : 0;
        if (i == part.size()) return false;
        return std::all_of(part.begin() + static_cast<std::ptrdiff_t>(i), part.end(),
                           [](unsigned char c) { return std::isdigit(c) != 0; });
    };
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num) || !valid(den) || den.front() == '-') {
        throw DomainError("malformed rational literal '" + std::string(text) + "'");
    }
    Integer d(den);
    if (d == 0) throw DivisionByZero();
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------

RadicalNumber::RadicalNumber(long value) : RadicalNumber(Rational(value)) {}

RadicalNumber::RadicalNumber(const Integer& value) : RadicalNumber(Rational(value)) {}

namespace {

// mpq_class(p, q) is not reduced on construction; every entry point reduces.
Rational canonical(const Rational& q) {
    if (q.get_den() == 0) throw DivisionByZero();
    Rational c(q);
    c.canonicalize();
    return c;
}

}  // namespace

RadicalNumber::RadicalNumber(const Rational& value) {
    if (sgn(value) != 0) terms_.push_back({Integer(1), canonical(value)});
}

RadicalNumber RadicalNumber::root_term(const Rational& coeff, const Integer& radicand) {
    require_positive(radicand);
    if (sgn(coeff) == 0) return {};
    const auto split = split_square_free(radicand);
    return RadicalNumber(std::vector<Term>{{split.squarefree, canonical(coeff) * Rational(split.square_root)}});
}

RadicalNumber RadicalNumber::sqrt(const Rational& q) {
    const auto root = normalize_root(q);
    if (sgn(root.coeff) == 0) return {};
    return RadicalNumber(std::vector<Term>{{root.radicand, root.coeff}});
}

RadicalNumber RadicalNumber::from_terms(const std::vector<Term>& terms) {
    RadicalNumber sum;
    for (const auto& t : terms) sum += root_term(t.coeff, t.radicand);
    return sum;
}

bool RadicalNumber::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().radicand == 1);
}

bool RadicalNumber::is_integer() const {
    return is_rational() && (terms_.empty() || terms_.front().coeff.get_den() == 1);
}

Rational RadicalNumber::rational_part() const {
    if (!terms_.empty() && terms_.front().radicand == 1) return terms_.front().coeff;
    return Rational(0);
}

std::optional<Rational> RadicalNumber::to_rational() const {
    if (!is_rational()) return std::nullopt;
    return rational_part();
}

Integer RadicalNumber::denominator_lcm() const {
    Integer l = 1;
    for (const auto& t : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    return l;
}

std::vector<Integer> RadicalNumber::radicands() const {
    std::vector<Integer> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(t.radicand);
    return out;
}

RadicalNumber RadicalNumber::operator-() const {
    RadicalNumber out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

RadicalNumber& RadicalNumber::operator+=(const RadicalNumber& rhs) {
    if (rhs.terms_.empty()) return *this;
    if (terms_.empty()) return *this = rhs;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != terms_.end() || b != rhs.terms_.end()) {
        if (b == rhs.terms_.end() || (a != terms_.end() && a->radicand < b->radicand)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->radicand < a->radicand) {
            merged.push_back(*b++);
        } else {
            Rational c = a->coeff + b->coeff;
            if (sgn(c) != 0) merged.push_back({std::move(a->radicand), std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

RadicalNumber& RadicalNumber::operator-=(const RadicalNumber& rhs) { return *this += -rhs; }

RadicalNumber operator*(const RadicalNumber& lhs, const RadicalNumber& rhs) {
    if (lhs.terms_.empty() || rhs.terms_.empty()) return {};
    if (rhs.is_rational()) {
        RadicalNumber out = lhs;
        const Rational& c = rhs.terms_.front().coeff;
        for (auto& t : out.terms_) t.coeff *= c;
        return out;
    }
    if (lhs.is_rational()) return rhs * lhs;
    // √a·√b = g·√((a/g)(b/g)) with g = gcd(a, b); square-free inputs stay square-free.
    std::map<Integer, Rational> acc;
    Integer g;
    for (const auto& x : lhs.terms_) {
        for (const auto& y : rhs.terms_) {
            mpz_gcd(g.get_mpz_t(), x.radicand.get_mpz_t(), y.radicand.get_mpz_t());
            Integer r = (x.radicand / g) * (y.radicand / g);
            acc[std::move(r)] += x.coeff * y.coeff * Rational(g);
        }
    }
    std::vector<RadicalNumber::Term> terms;
    terms.reserve(acc.size());
    for (auto& [r, c] : acc) {
        if (sgn(c) != 0) terms.push_back({r, std::move(c)});
    }
    return RadicalNumber(std::move(terms));
}

RadicalNumber& RadicalNumber::operator*=(const RadicalNumber& rhs) { return *this = *this * rhs; }

RadicalNumber operator/(const RadicalNumber& lhs, const RadicalNumber& rhs) {
    return lhs * rhs.inverse();
}

RadicalNumber& RadicalNumber::operator/=(const RadicalNumber& rhs) { return *this = *this / rhs; }

std::strong_ordering operator<=>(const RadicalNumber& lhs, const RadicalNumber& rhs) {
    const int s = (lhs - rhs).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

RadicalNumber RadicalNumber::galois_flip(const Integer& prime) const {
    RadicalNumber out = *this;
    for (auto& t : out.terms_) {
        if (mpz_divisible_p(t.radicand.get_mpz_t(), prime.get_mpz_t()) != 0) t.coeff = -t.coeff;
    }
    return out;
}

RadicalNumber RadicalNumber::inverse() const {
    if (terms_.empty()) throw DivisionByZero();
    if (is_rational()) return RadicalNumber(Rational(1) / terms_.front().coeff);

    Integer all = 1;
    for (const auto& t : terms_) mpz_lcm(all.get_mpz_t(), all.get_mpz_t(), t.radicand.get_mpz_t());
    // Multiplying by the conjugate in √p removes p from every radicand.
    RadicalNumber numerator(1L);
    RadicalNumber denominator = *this;
    for (const auto& p : prime_factors(all)) {
        const RadicalNumber conj = denominator.galois_flip(p);
        if (conj == denominator) continue;
        numerator *= conj;
        denominator *= conj;
    }
    const auto d = denominator.to_rational();
    if (!d || sgn(*d) == 0) throw std::logic_error("conjugate product did not reduce to a nonzero rational");
    return numerator * RadicalNumber(Rational(1) / *d);
}

std::pair<Rational, Rational> RadicalNumber::enclose(unsigned bits) const {
    Rational lo = 0;
    Rational hi = 0;
    const Integer scale = Integer(1) << bits;
    for (const auto& t : terms_) {
        if (t.radicand == 1) {
            lo += t.coeff;
            hi += t.coeff;
            continue;
        }
        Integer scaled = t.radicand << (2 * bits);
        Integer root;
        mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
        const Rational below(root, scale);
        const Rational above(root + 1, scale);
        if (sgn(t.coeff) > 0) {
            lo += t.coeff * below;
            hi += t.coeff * above;
        } else {
            lo += t.coeff * above;
            hi += t.coeff * below;
        }
    }
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

int RadicalNumber::sign() const {
    if (terms_.empty()) return 0;
    if (terms_.size() == 1) return sgn(terms_.front().coeff);
    // The terms are linearly independent over Q, so a nonempty sum is nonzero
    // and refinement terminates.
    for (unsigned bits = 32;; bits *= 2) {
        const auto [lo, hi] = enclose(bits);
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        if (bits > (1u << 24)) throw std::logic_error("sign refinement did not converge");
    }
}

namespace {

// Round |q|·10^digits half away from zero and format with the sign of q.
std::string format_scaled(const Integer& magnitude, bool negative, int digits) {
    std::string s = magnitude.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    const std::size_t point = s.size() - static_cast<std::size_t>(digits);
    std::string out = s.substr(0, point) + "." + s.substr(point);
    if (negative && magnitude != 0) out.insert(0, "-");
    return out;
}

Integer round_half_up(const Rational& nonneg) {
    Rational shifted = nonneg + Rational(1, 2);
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    return out;
}

}  // namespace

std::string RadicalNumber::to_decimal(int digits) const {
    if (digits < 1) throw DomainError("decimal rendering needs at least one digit");
    Integer pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    if (is_rational()) {
        const Rational q = rational_part();
        return format_scaled(round_half_up(abs(q) * Rational(pow10)), sgn(q) < 0, digits);
    }
    const bool negative = sign() < 0;
    const RadicalNumber magnitude = negative ? -*this : *this;
    // An irrational value never sits exactly on a rounding boundary.
    for (unsigned bits = 64;; bits *= 2) {
        auto [lo, hi] = magnitude.enclose(bits + static_cast<unsigned>(4 * digits));
        if (sgn(lo) < 0) lo = 0;
        const Integer a = round_half_up(lo * Rational(pow10));
        const Integer b = round_half_up(hi * Rational(pow10));
        if (a == b) return format_scaled(a, negative, digits);
        if (bits > (1u << 24)) throw std::logic_error("decimal refinement did not converge");
    }
}

std::string RadicalNumber::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        const bool neg = sgn(t.coeff) < 0;
        const Rational mag = abs(t.coeff);
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (t.radicand == 1) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << '*';
            os << "sqrt(" << t.radicand.get_str() << ')';
        }
    }
    return os.str();
}

RadicalNumber abs(const RadicalNumber& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const RadicalNumber& x) { return os << x.str(); }

}  // namespace rba
