#include "rba/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace rba::cli {

std::vector<Rational> parse_grid(const std::string& text) {
    if (text.empty()) throw UsageFailure("empty grid");
    std::vector<Rational> out;
    try {
        const auto dots = text.find("..");
        if (dots == std::string::npos) {
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item.empty()) throw UsageFailure("empty grid entry in '" + text + "'");
                out.push_back(parse_rational(item));
            }
            return out;
        }
        const std::string lo_text = text.substr(0, dots);
        std::string hi_text = text.substr(dots + 2);
        Rational step = 1;
        if (const auto colon = hi_text.find(':'); colon != std::string::npos) {
            step = parse_rational(hi_text.substr(colon + 1));
            hi_text = hi_text.substr(0, colon);
        }
        if (sgn(step) <= 0) throw UsageFailure("grid step must be positive");
        const Rational lo = parse_rational(lo_text);
        const Rational hi = parse_rational(hi_text);
        for (Rational v = lo; v <= hi; v += step) out.push_back(v);
    } catch (const DomainError& e) {
        throw UsageFailure("bad grid '" + text + "': " + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageFailure("bad grid '" + text + "': " + e.what());
    }
    if (out.empty()) throw UsageFailure("grid '" + text + "' is empty");
    return out;
}

Sign parse_sign(const std::string& text) {
    if (text == "+" || text == "+1" || text == "1" || text == "p") return Sign::Plus;
    if (text == "-" || text == "-1" || text == "m") return Sign::Minus;
    throw UsageFailure("sign must be + or -, got '" + text + "'");
}

std::array<Sign, 3> parse_signs(const std::vector<std::string>& tokens) {
    std::vector<std::string> parts = tokens;
    if (parts.size() == 1 && parts.front().size() == 3) {
        const std::string s = parts.front();
        parts = {s.substr(0, 1), s.substr(1, 1), s.substr(2, 1)};
    }
    if (parts.size() != 3) throw UsageFailure("--signs needs three signs");
    return {parse_sign(parts[0]), parse_sign(parts[1]), parse_sign(parts[2])};
}

std::string sign_string(const std::array<Sign, 3>& signs) {
    return {to_char(signs[0]), to_char(signs[1]), to_char(signs[2])};
}

ScanFilter parse_filter(const std::vector<std::string>& tokens) {
    ScanFilter f;
    for (const auto& token : tokens) {
        std::stringstream ss(token);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item == "rational") {
                f.rational = true;
            } else if (item == "nonnegative") {
                f.nonnegative = true;
            } else if (item == "integral") {
                f.integral = true;
            } else if (item == "in-qsqrtm") {
                f.in_qsqrtm = true;
            } else if (item.rfind("maxden=", 0) == 0 || item.rfind("max-denominator<=", 0) == 0) {
                const std::string value = item.substr(item.find_first_of("=") + 1);
                try {
                    f.max_denominator = Integer(value);
                } catch (const std::invalid_argument&) {
                    throw UsageFailure("bad max denominator '" + value + "'");
                }
                if (*f.max_denominator <= 0) throw UsageFailure("max denominator must be positive");
            } else if (!item.empty()) {
                throw UsageFailure("unknown filter '" + item + "'");
            }
        }
    }
    return f;
}

bool accepts(const ScanFilter& filter, const ScanFlags& flags) {
    if (filter.rational && !flags.is_rational) return false;
    if (filter.nonnegative && !flags.is_nonnegative) return false;
    if (filter.integral && !flags.is_integral) return false;
    if (filter.in_qsqrtm && !flags.in_qsqrtm) return false;
    if (filter.max_denominator && flags.max_denominator > *filter.max_denominator) return false;
    return true;
}

namespace {

ScanFlags flags_from(const ConstantStats& s) {
    ScanFlags f;
    f.is_rational = s.is_rational;
    f.is_integral = s.is_integral;
    f.is_nonnegative = s.is_nonnegative;
    f.max_denominator = s.max_denominator;
    f.radicands = s.radicands;
    return f;
}

unsigned worker_count(unsigned requested, std::size_t tasks) {
    unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(tasks, 1)));
}

// Runs `eval` on every task index and keeps results in task order.
template <typename Eval>
std::vector<std::optional<ScanResult>> run_tasks(std::size_t tasks, unsigned threads, Eval eval) {
    std::vector<std::optional<ScanResult>> results(tasks);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks; t = next++) {
            try {
                results[t] = eval(t);
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned n = worker_count(threads, tasks);
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

ScanSummary collect(std::vector<std::optional<ScanResult>> results) {
    ScanSummary summary;
    summary.points = results.size();
    for (auto& r : results)
        if (r) summary.hits.push_back(std::move(*r));
    return summary;
}

Integer squarefree_part(const Rational& q) {
    return split_square_free(q.get_num() * q.get_den()).squarefree;
}

}  // namespace

ScanSummary scan_dim5(const std::array<std::vector<Rational>, 3>& grid,
                      const std::vector<std::array<Sign, 3>>& signs, const ScanFilter& filter, bool cross_check,
                      unsigned threads) {
    for (const auto& axis : grid) {
        if (axis.empty()) throw UsageFailure("empty grid");
        for (const auto& v : axis)
            if (sgn(v) <= 0) throw UsageFailure("dim5 degrees must be positive");
    }
    if (signs.empty()) throw UsageFailure("no sign triples to scan");
    if (filter.in_qsqrtm) throw UsageFailure("in-qsqrtm applies to cm scans only");
    const std::size_t s = signs.size();
    const std::size_t n3 = grid[2].size();
    const std::size_t n2 = grid[1].size();
    const std::size_t tasks = grid[0].size() * n2 * n3 * s;
    auto eval = [&](std::size_t t) -> std::optional<ScanResult> {
        const std::size_t si = t % s;
        const std::size_t i3 = (t / s) % n3;
        const std::size_t i2 = (t / s / n3) % n2;
        const std::size_t i1 = t / s / n3 / n2;
        const Dim5Params p{grid[0][i1], grid[1][i2], grid[2][i3], signs[si]};
        const RbaPresentation pres = dim5_presentation(p);
        ScanFlags flags = flags_from(constant_stats(pres.tensor));
        if (!accepts(filter, flags)) return std::nullopt;
        ScanResult r;
        r.point = {p.delta1, p.delta2, p.delta3};
        r.signs = sign_string(p.signs);
        r.flags = std::move(flags);
        const auto report = verify_rba(pres, dim5_degree_map(p));
        r.rba = report.ok();
        r.is_table_algebra = report.is_table_algebra;
        if (cross_check) r.cross_check = extract_structure_constants(dim5_family(p)) == pres;
        return r;
    };
    return collect(run_tasks(tasks, threads, eval));
}

ScanSummary scan_cm(const std::vector<Rational>& ms, const std::vector<Rational>& deltas, const ScanFilter& filter,
                    bool cross_check, unsigned threads) {
    if (ms.empty() || deltas.empty()) throw UsageFailure("empty grid");
    for (const auto& m : ms)
        if (m.get_den() != 1 || m < 2) throw UsageFailure("cm needs integer m >= 2");
    for (const auto& d : deltas)
        if (sgn(d) <= 0) throw UsageFailure("cm needs delta > 0");
    const std::size_t tasks = ms.size() * deltas.size();
    auto eval = [&](std::size_t t) -> std::optional<ScanResult> {
        CmParams params;
        params.m = ms[t / deltas.size()].get_num().get_ui();
        params.delta = deltas[t % deltas.size()];
        const MatrixBasis basis = cm_basis(params);
        const RbaPresentation pres = extract_structure_constants(basis);
        ScanFlags flags = flags_from(constant_stats(pres.tensor));
        const Integer field = squarefree_part(Rational(static_cast<unsigned long>(params.m))) *
                              squarefree_part(params.order());
        auto inside = [&](const Integer& r) { return mpz_divisible_p(field.get_mpz_t(), r.get_mpz_t()) != 0; };
        flags.in_qsqrtm = std::all_of(flags.radicands.begin(), flags.radicands.end(), inside);
        for (const auto& e : basis.elements())
            for (const auto& block : e)
                for (const auto& v : block.data())
                    for (const auto& r : v.radicands()) flags.in_qsqrtm = flags.in_qsqrtm && inside(r);
        if (!accepts(filter, flags)) return std::nullopt;
        ScanResult r;
        r.point = {Rational(static_cast<unsigned long>(params.m)), params.delta};
        r.flags = std::move(flags);
        const DegreeMap delta = cm_degree_map(params);
        const auto report = verify_rba(pres, delta);
        r.rba = report.ok();
        r.is_table_algebra = report.is_table_algebra;
        if (cross_check) {
            try {
                character_data(basis, pres, delta);
                r.cross_check = check_p1_conditions(cm_matrices(params),
                                                    std::vector<RadicalNumber>(params.m * params.m, params.delta))
                                    .ok();
            } catch (const DomainError&) {
                r.cross_check = false;
            }
        }
        return r;
    };
    return collect(run_tasks(tasks, threads, eval));
}

namespace {

Json strings(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

Json strings(const std::vector<Integer>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(v.get_str());
    return out;
}

}  // namespace

Json to_json(const ScanResult& r) {
    Json out{{"point", strings(r.point)}};
    if (!r.signs.empty()) out["signs"] = r.signs;
    out["rba"] = r.rba;
    out["is_table_algebra"] = r.is_table_algebra;
    out["is_rational"] = r.flags.is_rational;
    out["is_integral"] = r.flags.is_integral;
    out["is_nonnegative"] = r.flags.is_nonnegative;
    out["max_denominator"] = r.flags.max_denominator.get_str();
    out["radicands"] = strings(r.flags.radicands);
    if (r.cross_check) out["cross_check"] = *r.cross_check;
    return out;
}

Json to_json(const VerificationReport& report) {
    constexpr std::size_t kMaxListed = 100;
    Json violations = Json::array();
    for (std::size_t i = 0; i < report.violations.size() && i < kMaxListed; ++i) {
        const auto& v = report.violations[i];
        violations.push_back(
            {{"axiom", to_string(v.axiom)}, {"indices", v.indices}, {"value", v.value.str()}, {"detail", v.detail}});
    }
    Json out{{"rba", report.ok()},
             {"size", report.size},
             {"violation_count", report.violations.size()},
             {"violations", std::move(violations)},
             {"is_rational", report.stats.is_rational},
             {"is_integral", report.stats.is_integral},
             {"is_nonnegative", report.stats.is_nonnegative},
             {"max_denominator", report.stats.max_denominator.get_str()},
             {"radicands", strings(report.stats.radicands)},
             {"has_positive_degree_map", report.has_positive_degree_map},
             {"is_table_algebra", report.is_table_algebra}};
    if (report.degree_map) out["degree_map"] = rba::to_json(*report.degree_map);
    return out;
}

namespace {

struct Document {
    std::string construction;
    Json params = Json::object();
    std::optional<MatrixBasis> basis;
    RbaPresentation presentation;
    std::optional<DegreeMap> degree_map;
    std::vector<std::pair<std::string, bool>> consistency;  // construction-specific exact checks
};

Json character_json(const CharacterData& data) {
    Json chars = Json::array();
    for (const auto& ch : data.characters) {
        Json values = Json::array();
        for (const auto& v : ch.values) values.push_back(v.str());
        chars.push_back({{"component", ch.component},
                         {"degree", ch.degree},
                         {"multiplicity", ch.multiplicity.str()},
                         {"values", std::move(values)}});
    }
    return {{"ok", true}, {"order", data.order.str()}, {"uses_degree_map", data.uses_degree_map}, {"characters", chars}};
}

struct Evaluation {
    Json json;
    bool ok = false;
};

Evaluation evaluate(const Document& doc) {
    Evaluation ev;
    const auto report = verify_rba(doc.presentation, doc.degree_map);
    ev.ok = report.ok();
    Json& j = ev.json;
    j["report"] = to_json(report);
    if (doc.degree_map) {
        const auto dc = verify_degree_map(doc.presentation, *doc.degree_map);
        j["degree_check"] = {{"homomorphism", dc.homomorphism},
                             {"star_symmetric", dc.star_symmetric},
                             {"nonzero", dc.nonzero},
                             {"positive", dc.positive}};
        ev.ok = ev.ok && dc.is_degree_map();
    }
    if (doc.basis) {
        try {
            const auto data = character_data(*doc.basis, doc.presentation,
                                             doc.degree_map && verify_degree_map(doc.presentation, *doc.degree_map).positive
                                                 ? doc.degree_map
                                                 : std::nullopt);
            j["characters"] = character_json(data);
        } catch (const DomainError& e) {
            j["characters"] = {{"ok", false}, {"error", e.what()}};
            ev.ok = false;
        }
    }
    Json checks = Json::object();
    for (const auto& [name, passed] : doc.consistency) {
        checks[name] = passed;
        ev.ok = ev.ok && passed;
    }
    if (!checks.empty()) j["consistency"] = checks;
    j["verified"] = ev.ok;
    return ev;
}

Json document_json(const Document& doc, const Evaluation& ev) {
    Json out{{"construction", doc.construction}, {"params", doc.params}};
    if (doc.basis) out["basis"] = to_json(*doc.basis);
    out["presentation"] = to_json(doc.presentation);
    out["degree_map"] = doc.degree_map ? to_json(*doc.degree_map) : Json(nullptr);
    for (const auto& [key, value] : ev.json.items()) out[key] = value;
    return out;
}

struct Rendering {
    std::string format = "json";
    int digits = 6;
};

std::string render(const std::optional<MatrixBasis>& basis, const std::optional<RbaPresentation>& pres,
                   const Json& json, const Rendering& how) {
    if (how.format == "json") return json.dump(2) + "\n";
    std::ostringstream out;
    if (how.format == "latex") {
        if (basis) out << "\\begin{aligned}\n" << latex(*basis) << "\\end{aligned}\n";
        if (pres) out << latex_lambda_table(*pres);
    } else {
        if (basis) out << decimal(*basis, how.digits);
        if (pres) out << decimal_lambda_table(*pres, how.digits);
    }
    return out.str();
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageFailure("cannot read '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageFailure("'" + path + "' is not valid JSON: " + e.what());
    }
}

struct LoadedInput {
    std::string kind;  // basis | presentation | document
    std::optional<MatrixBasis> basis;
    std::optional<RbaPresentation> presentation;
    std::optional<DegreeMap> degree_map;
};

LoadedInput load_input(const Json& j) {
    LoadedInput in;
    try {
        if (j.contains("elements")) {
            in.kind = "basis";
            in.basis = basis_from_json(j);
        } else if (j.contains("lambda")) {
            in.kind = "presentation";
            in.presentation = presentation_from_json(j);
        } else if (j.contains("basis") || j.contains("presentation")) {
            in.kind = "document";
            if (j.contains("basis")) in.basis = basis_from_json(j.at("basis"));
            if (j.contains("presentation")) in.presentation = presentation_from_json(j.at("presentation"));
        } else {
            throw UsageFailure("input is neither a basis nor a presentation");
        }
        if (j.contains("degree_map") && !j.at("degree_map").is_null())
            in.degree_map = degree_map_from_json(j.at("degree_map"));
    } catch (const ParseError& e) {
        throw UsageFailure(std::string("parse failure: ") + e.what());
    } catch (const StructuralError& e) {
        throw UsageFailure(std::string("parse failure: ") + e.what());
    }
    return in;
}

class Emitter {
public:
    Emitter(std::ostream& out, std::string path) : out_(out), path_(std::move(path)) {}
    void emit(const std::string& text) const {
        if (path_.empty()) {
            out_ << text;
            return;
        }
        std::ofstream f(path_);
        if (!f) throw UsageFailure("cannot write '" + path_ + "'");
        f << text;
    }

private:
    std::ostream& out_;
    std::string path_;
};

Rational positive_rational(const std::string& text, const char* what) {
    Rational q;
    try {
        q = parse_rational(text);
    } catch (const std::exception&) {
        throw UsageFailure(std::string("bad value for ") + what + ": '" + text + "'");
    }
    if (sgn(q) <= 0) throw UsageFailure(std::string(what) + " must be positive");
    return q;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact constructions and verification of RBA-bases", "rba_forge"};
    app.require_subcommand(1);
    Rendering how;
    std::string out_path;
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", how.format, "json | latex | decimal")
            ->check(CLI::IsMember({"json", "latex", "decimal"}));
        sub->add_option("--digits", how.digits, "fractional digits for decimal output")->check(CLI::Range(1, 1000));
        sub->add_option("--out", out_path, "write output to a file");
    };

    auto* construct = app.add_subcommand("construct", "build a basis and verify it");
    construct->require_subcommand(1);
    std::size_t mn_n = 0;
    auto* c_mn = construct->add_subcommand("mn", "rational RBA-basis of M_n");
    c_mn->add_option("--n", mn_n, "matrix size")->required();
    std::vector<std::size_t> sum_dims;
    auto* c_sum = construct->add_subcommand("sum", "rational RBA-basis of a direct sum of matrix algebras");
    c_sum->add_option("--dims", sum_dims, "component sizes")->required()->expected(1, -1);
    std::vector<std::string> d5_d;
    std::vector<std::string> d5_signs{"+", "+", "+"};
    auto* c_dim5 = construct->add_subcommand("dim5", "5-dimensional family in C + M_2");
    c_dim5->add_option("--d", d5_d, "degrees d1 d2 d3")->required()->expected(3);
    c_dim5->add_option("--signs", d5_signs, "three signs")->expected(1, 3);
    std::size_t cm_m = 3;
    std::string cm_delta = "7";
    std::string cm_sx = "-";
    std::string cm_sy = "+";
    auto* c_cm = construct->add_subcommand("cm", "RBA-basis of C + M_m with equal degrees");
    c_cm->add_option("--m", cm_m, "matrix size")->required();
    c_cm->add_option("--delta", cm_delta, "common degree")->required();
    c_cm->add_option("--sign-x", cm_sx, "sign of x");
    c_cm->add_option("--sign-y", cm_sy, "inner sign of y");
    long affine_q = 0;
    auto* c_affine = construct->add_subcommand("affine", "affine-plane table algebra of order q");
    c_affine->add_option("--n", affine_q, "order q")->required();
    for (auto* sub : {c_mn, c_sum, c_dim5, c_cm, c_affine}) add_output(sub);

    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "verify a basis or presentation file");
    verify->add_option("file", verify_path)->required();
    verify->add_option("--out", out_path, "write output to a file");

    auto* scan = app.add_subcommand("scan", "search a parameter grid");
    scan->require_subcommand(1);
    std::vector<std::string> filter_tokens;
    bool cross_check = false;
    unsigned threads = 0;
    auto add_scan_common = [&](CLI::App* sub) {
        sub->add_option("--filter", filter_tokens, "rational, nonnegative, integral, maxden=D, in-qsqrtm")
            ->expected(1, -1);
        sub->add_flag("--cross-check", cross_check, "re-run matrix extraction on hits");
        sub->add_option("--threads", threads, "worker threads (0 = hardware)");
        sub->add_option("--out", out_path, "write output to a file");
    };
    std::vector<std::string> scan_d;
    std::vector<std::string> scan_signs;
    auto* s_dim5 = scan->add_subcommand("dim5", "scan the closed-form dim5 table");
    s_dim5->add_option("--d", scan_d, "one grid for all degrees, or three grids")->required()->expected(1, 3);
    s_dim5->add_option("--signs", scan_signs, "restrict to one sign triple")->expected(1, 3);
    std::string scan_m;
    std::string scan_delta;
    auto* s_cm = scan->add_subcommand("cm", "scan the C + M_m construction");
    s_cm->add_option("--m", scan_m, "grid of m")->required();
    s_cm->add_option("--delta", scan_delta, "grid of delta")->required();
    for (auto* sub : {s_dim5, s_cm}) add_scan_common(sub);

    std::string export_path;
    auto* exp = app.add_subcommand("export", "render a basis or presentation file");
    exp->add_option("file", export_path)->required();
    add_output(exp);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Verified : UsageError;
    }

    try {
        const Emitter emitter(out, out_path);
        if (construct->parsed()) {
            Document doc;
            if (c_mn->parsed()) {
                if (mn_n < 2) throw UsageFailure("mn needs --n >= 2");
                doc.construction = "mn";
                doc.params = {{"n", mn_n}};
                doc.basis = rational_basis_mn(mn_n);
                doc.presentation = extract_structure_constants(*doc.basis);
            } else if (c_sum->parsed()) {
                for (const auto k : sum_dims)
                    if (k == 0) throw UsageFailure("--dims entries must be positive");
                doc.construction = "sum";
                doc.params = {{"dims", sum_dims}};
                doc.presentation = semisimple_rational_rba(sum_dims);
                doc.basis = semisimple_rational_realization(sum_dims);
                doc.consistency.emplace_back("realization_matches",
                                             extract_structure_constants(*doc.basis) == doc.presentation);
            } else if (c_dim5->parsed()) {
                const Dim5Params p{positive_rational(d5_d[0], "d1"), positive_rational(d5_d[1], "d2"),
                                   positive_rational(d5_d[2], "d3"), parse_signs(d5_signs)};
                doc.construction = "dim5";
                doc.params = {{"d", {to_string(p.delta1), to_string(p.delta2), to_string(p.delta3)}},
                              {"signs", sign_string(p.signs)}};
                doc.basis = dim5_family(p);
                doc.presentation = extract_structure_constants(*doc.basis);
                doc.degree_map = dim5_degree_map(p);
                doc.consistency.emplace_back("table_matches", doc.presentation == dim5_presentation(p));
            } else if (c_cm->parsed()) {
                CmParams p;
                p.m = cm_m;
                p.delta = positive_rational(cm_delta, "delta");
                p.sign_x = parse_sign(cm_sx);
                p.sign_y = parse_sign(cm_sy);
                if (p.m < 2) throw UsageFailure("cm needs --m >= 2");
                doc.construction = "cm";
                doc.params = {{"m", p.m},
                              {"delta", to_string(p.delta)},
                              {"sign_x", std::string(1, to_char(p.sign_x))},
                              {"sign_y", std::string(1, to_char(p.sign_y))}};
                doc.basis = cm_basis(p);
                doc.presentation = extract_structure_constants(*doc.basis);
                doc.degree_map = cm_degree_map(p);
            } else {
                if (affine_q < 2) throw UsageFailure("affine needs --n >= 2");
                doc.construction = "affine";
                doc.params = {{"n", affine_q}};
                const auto plane = affine_plane_ta(affine_q);
                doc.presentation = plane.presentation;
                doc.basis = character_table_to_diag(plane.table);
                doc.degree_map = degree_candidate(doc.presentation);
                doc.consistency.emplace_back("realization_matches",
                                             extract_structure_constants(*doc.basis) == doc.presentation);
            }
            const auto ev = evaluate(doc);
            emitter.emit(render(doc.basis, doc.presentation, document_json(doc, ev), how));
            return ev.ok ? Verified : MathFailure;
        }

        if (verify->parsed()) {
            const auto in = load_input(read_json_file(verify_path));
            Document doc;
            doc.construction = in.kind;
            doc.basis = in.basis;
            doc.degree_map = in.degree_map;
            Json result{{"input", in.kind}};
            if (in.basis) {
                try {
                    doc.presentation = extract_structure_constants(*in.basis);
                } catch (const DomainError& e) {
                    result["verified"] = false;
                    result["error"] = std::string("extraction failed: ") + e.what();
                    emitter.emit(result.dump(2) + "\n");
                    return MathFailure;
                }
                if (in.presentation)
                    doc.consistency.emplace_back("presentation_matches", *in.presentation == doc.presentation);
                if (!doc.degree_map) {
                    const auto components = positive_linear_components(*in.basis);
                    if (!components.empty()) doc.degree_map = component_character(*in.basis, components.front());
                }
            } else {
                doc.presentation = *in.presentation;
            }
            const auto ev = evaluate(doc);
            if (doc.degree_map) result["degree_map"] = to_json(*doc.degree_map);
            for (const auto& [key, value] : ev.json.items()) result[key] = value;
            emitter.emit(result.dump(2) + "\n");
            return ev.ok ? Verified : MathFailure;
        }

        if (scan->parsed()) {
            const ScanFilter filter = parse_filter(filter_tokens);
            ScanSummary summary;
            std::string family;
            if (s_dim5->parsed()) {
                family = "dim5";
                std::array<std::vector<Rational>, 3> grid;
                for (std::size_t i = 0; i < 3; ++i) grid[i] = parse_grid(scan_d[scan_d.size() == 3 ? i : 0]);
                if (scan_d.size() == 2) throw UsageFailure("--d takes one grid or three");
                std::vector<std::array<Sign, 3>> signs;
                if (!scan_signs.empty()) {
                    signs.push_back(parse_signs(scan_signs));
                } else {
                    for (const Sign a : {Sign::Plus, Sign::Minus})
                        for (const Sign b : {Sign::Plus, Sign::Minus})
                            for (const Sign c : {Sign::Plus, Sign::Minus}) signs.push_back({a, b, c});
                }
                summary = scan_dim5(grid, signs, filter, cross_check, threads);
            } else {
                family = "cm";
                summary = scan_cm(parse_grid(scan_m), parse_grid(scan_delta), filter, cross_check, threads);
            }
            std::ostringstream text;
            bool all_ok = true;
            for (const auto& r : summary.hits) {
                text << to_json(r).dump() << "\n";
                all_ok = all_ok && r.rba && r.cross_check.value_or(true);
            }
            text << Json{{"summary", {{"family", family}, {"points", summary.points}, {"hits", summary.hits.size()}}}}
                        .dump()
                 << "\n";
            emitter.emit(text.str());
            return all_ok ? Verified : MathFailure;
        }

        const auto in = load_input(read_json_file(export_path));
        Json json;
        if (in.kind == "basis") {
            json = to_json(*in.basis);
        } else if (in.kind == "presentation") {
            json = to_json(*in.presentation);
        } else {
            if (in.basis) json["basis"] = to_json(*in.basis);
            if (in.presentation) json["presentation"] = to_json(*in.presentation);
        }
        if (in.degree_map) json["degree_map"] = to_json(*in.degree_map);
        emitter.emit(render(in.basis, in.presentation, json, how));
        return Verified;
    } catch (const InternalConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return MathFailure;
    } catch (const UsageFailure& e) {
        err << "usage error: " << e.what() << "\n";
        return UsageError;
    } catch (const DomainError& e) {
        err << "invalid parameters: " << e.what() << "\n";
        return UsageError;
    } catch (const StructuralError& e) {
        err << "invalid input: " << e.what() << "\n";
        return UsageError;
    }
}

}  // namespace rba::cli
