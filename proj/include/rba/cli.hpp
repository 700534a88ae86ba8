#pragma once

// Front end for rba_forge: construct, verify, scan and export. Kept in the
// library so tests drive it without spawning processes.

#include "rba/constructions.hpp"
#include "rba/serialize.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rba::cli {

enum ExitCode : int { Verified = 0, MathFailure = 1, UsageError = 2 };

class UsageFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "a..b" (step 1), "a..b:s", "x,y,z" or a single rational. Values ascend
/// for ranges and keep the given order for lists.
std::vector<Rational> parse_grid(const std::string& text);

Sign parse_sign(const std::string& text);
/// Either three tokens ("+", "-", "+") or one token ("+-+").
std::array<Sign, 3> parse_signs(const std::vector<std::string>& tokens);
std::string sign_string(const std::array<Sign, 3>& signs);

struct ScanFilter {
    bool rational = false;
    bool nonnegative = false;
    bool integral = false;
    std::optional<Integer> max_denominator;
    /// cm only: every radicand (entries and constants) divides sqf(m)·sqf(n).
    bool in_qsqrtm = false;
};
/// Tokens may be comma separated: rational, nonnegative, integral, maxden=D,
/// in-qsqrtm.
ScanFilter parse_filter(const std::vector<std::string>& tokens);

struct ScanFlags {
    bool is_rational = false;
    bool is_integral = false;
    bool is_nonnegative = false;
    Integer max_denominator = 1;
    std::vector<Integer> radicands;
    bool in_qsqrtm = false;
};

struct ScanResult {
    std::vector<Rational> point;  // (δ₁,δ₂,δ₃) or (m,δ)
    std::string signs;            // dim5 only
    ScanFlags flags;
    // Filled from verify_rba for emitted points only.
    bool rba = false;
    bool is_table_algebra = false;
    std::optional<bool> cross_check;
};

bool accepts(const ScanFilter& filter, const ScanFlags& flags);

struct ScanSummary {
    std::size_t points = 0;
    std::vector<ScanResult> hits;
};

/// Evaluates the closed-form λ-table at every grid point and sign triple in
/// lexicographic order. Work is split over `threads` workers; the result
/// order does not depend on it.
ScanSummary scan_dim5(const std::array<std::vector<Rational>, 3>& grid,
                      const std::vector<std::array<Sign, 3>>& signs, const ScanFilter& filter, bool cross_check,
                      unsigned threads = 0);
ScanSummary scan_cm(const std::vector<Rational>& ms, const std::vector<Rational>& deltas, const ScanFilter& filter,
                    bool cross_check, unsigned threads = 0);

Json to_json(const ScanResult& r);
Json to_json(const VerificationReport& report);

/// args excludes the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rba::cli
