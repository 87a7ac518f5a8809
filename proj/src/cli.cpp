#include "qchain/cli.hpp"

#include "qchain/bethe_roots.hpp"
#include "qchain/closed_forms.hpp"
#include "qchain/linear_solve.hpp"
#include "qchain/polynomial.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace qchain::cli {

using nlohmann::json;

// ---------------------------------------------------------------------------
// configuration

void validate(const RunConfig& config) {
    if (config.L_list.empty()) throw ConfigError("at least one L is required");
    for (int L : config.L_list)
        if (L < 3 || L % 2 == 0) throw ConfigError("L must be odd \xE2\x89\xA5 3 (got " + std::to_string(L) + ")");
    if (config.N_max < 1) throw ConfigError("N-max must be \xE2\x89\xA5 1");
    if (config.precision_bits < 128) throw ConfigError("precision must be \xE2\x89\xA5 128 bits");
    if (config.jobs < 1) throw ConfigError("jobs must be \xE2\x89\xA5 1");
}

Method parse_method(const std::string& s) {
    if (s == "closed-form") return Method::closed_form;
    if (s == "linear-system") return Method::linear_system;
    if (s == "both") return Method::both;
    throw ConfigError("unknown method '" + s + "' (closed-form, linear-system, both)");
}

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw ConfigError("unknown format '" + s + "' (json, csv)");
}

std::string check_name(Check c) {
    switch (c) {
        case Check::structure: return "structure";
        case Check::tq: return "tq";
        case Check::linearity: return "linearity";
        case Check::finite_size: return "finite-size";
        case Check::section4: return "section4";
        case Check::roots: return "roots";
    }
    return "?";
}

std::set<Check> parse_checks(const std::string& s) {
    static const std::map<std::string, Check> names{
        {"structure", Check::structure}, {"tq", Check::tq},           {"linearity", Check::linearity},
        {"finite-size", Check::finite_size}, {"section4", Check::section4}, {"roots", Check::roots}};
    std::set<Check> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item == "all") {
            for (const auto& [_, c] : names) out.insert(c);
            continue;
        }
        const auto it = names.find(item);
        if (it == names.end()) throw ConfigError("unknown check '" + item + "'");
        out.insert(it->second);
    }
    if (out.empty()) throw ConfigError("no checks selected");
    return out;
}

Tamper parse_tamper(const std::string& s) {
    const auto colon = s.find(':');
    Tamper t;
    try {
        t.index = static_cast<std::size_t>(std::stoul(s.substr(0, colon)));
        if (colon != std::string::npos) t.delta = Rational::parse(s.substr(colon + 1));
    } catch (const std::exception&) {
        throw ConfigError("tamper hook expects K[:DELTA], got '" + s + "'");
    }
    if (t.delta.is_zero()) throw ConfigError("tamper delta must be nonzero");
    return t;
}

// ---------------------------------------------------------------------------
// serialisation

std::string approx_string(const CyclotomicNumber& x, long precision_bits) {
    const PrecisionComplex v = x.embed(precision_bits);
    const int digits = report_digits(precision_bits);
    if (x.is_real()) return v.real().to_string(digits);
    return v.to_string(digits);
}

json cyclotomic_to_json(const CyclotomicNumber& x, long precision_bits) {
    json coeffs = json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(c.to_string());
    return {{"order", x.order()}, {"coeffs", std::move(coeffs)}, {"approx", approx_string(x, precision_bits)}};
}

CyclotomicNumber cyclotomic_from_json(const json& j) {
    const auto field = make_field(j.at("order").get<unsigned>());
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(Rational::parse(c.get<std::string>()));
    if (coeffs.size() != field->degree())
        throw std::invalid_argument("cyclotomic record has " + std::to_string(coeffs.size()) +
                                    " coefficients, field degree is " + std::to_string(field->degree()));
    return {field, std::move(coeffs)};
}

namespace {

void refresh_approx(json& node, long bits) {
    if (node.is_object()) {
        if (node.contains("order") && node.contains("coeffs") && node.contains("approx")) {
            node["approx"] = approx_string(cyclotomic_from_json(node), bits);
            return;
        }
        for (auto& [_, v] : node.items()) refresh_approx(v, bits);
    } else if (node.is_array()) {
        for (auto& v : node) refresh_approx(v, bits);
    }
}

std::string method_name(Method m) {
    switch (m) {
        case Method::closed_form: return "closed-form";
        case Method::linear_system: return "linear-system";
        case Method::both: return "both";
    }
    return "?";
}

json meta(const RunConfig& config) {
    return {{"version", kVersion},
            {"precision_bits", config.precision_bits},
            {"resolved_sum_range", "p"},
            {"method", method_name(config.method)}};
}

}  // namespace

json recompute_approximations(json doc) {
    const long bits = doc.at("meta").at("precision_bits").get<long>();
    refresh_approx(doc, bits);
    return doc;
}

json compute_document(const RunConfig& config, const std::vector<GridRecord>& records,
                      const std::vector<SpinConstant>& constants) {
    const long bits = config.precision_bits;
    json runs = json::array();
    for (const auto& rec : records) {
        const auto& r = rec.result;
        const auto& params = r.q.params;
        json e = json::array();
        for (const auto& c : r.q.e) e.push_back(c.to_string());
        runs.push_back({{"L", params.L()},
                        {"N", params.N()},
                        {"M", params.M()},
                        {"p", params.p()},
                        {"spin", params.spin()},
                        {"eta", params.eta_label()},
                        {"e", std::move(e)},
                        {"E1", cyclotomic_to_json(r.summary.E1, bits)},
                        {"energy", cyclotomic_to_json(r.summary.energy, bits)},
                        {"energy_per_site", cyclotomic_to_json(r.summary.energy_per_site, bits)}});
    }
    json spins = json::array();
    for (const auto& sc : constants)
        spins.push_back({{"L", sc.L},
                         {"A", cyclotomic_to_json(sc.A, bits)},
                         {"slope", cyclotomic_to_json(sc.slope, bits)},
                         {"anchor_holds", sc.anchor_holds}});
    return {{"meta", meta(config)}, {"runs", std::move(runs)}, {"spin_constants", std::move(spins)}};
}

json report_document(const RunConfig& config, const VerificationReport& report) {
    json m = meta(config);
    json checks = json::array();
    for (Check c : config.checks) checks.push_back(check_name(c));
    m["checks"] = std::move(checks);
    json entries = json::array();
    for (const auto& e : report.entries()) {
        json entry{{"check", e.check_name}, {"L", e.L}, {"pass", e.pass}, {"residual", e.residual}, {"detail", e.detail}};
        entry["N"] = e.N ? json(*e.N) : json(nullptr);
        entries.push_back(std::move(entry));
    }
    const std::size_t failed = report.failures();
    return {{"meta", std::move(m)},
            {"entries", std::move(entries)},
            {"summary", {{"total", report.entries().size()}, {"passed", report.entries().size() - failed}, {"failed", failed}}}};
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

}  // namespace

std::string report_csv(const VerificationReport& report) {
    std::ostringstream os;
    os << "check,L,N,pass,residual,detail\n";
    for (const auto& e : report.entries())
        os << csv_field(e.check_name) << ',' << e.L << ',' << (e.N ? std::to_string(*e.N) : "") << ','
           << (e.pass ? "true" : "false") << ',' << csv_field(e.residual) << ',' << csv_field(e.detail) << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// grid execution

namespace {

/// Runs f(0..n-1) on up to `jobs` threads. Results keep index order; the first
/// exception by index is rethrown after all workers finish.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, F f) {
    std::vector<std::optional<T>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                slots[i].emplace(f(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        const unsigned count = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1)));
        for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
        worker();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<T> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

std::vector<ChainParams> grid_points(const RunConfig& config) {
    std::vector<ChainParams> out;
    for (int L : config.L_list)
        for (int N = 1; N <= config.N_max; ++N) out.push_back(ChainParams::make(L, N));
    return out;
}

struct Built {
    QPolynomial q;
    std::optional<QPolynomial> linear_system;
};

Built build(const RunConfig& config, const ChainParams& params) {
    Built b{build_q(params, config.method == Method::linear_system ? QMethod::linear_system : QMethod::closed_form),
            std::nullopt};
    if (config.method == Method::both) b.linear_system = q_linear_system(params);
    if (config.tamper) b.q = perturbed(b.q, config.tamper->index, config.tamper->delta);
    return b;
}

std::vector<SpinConstant> spin_constants(const RunConfig& config, const std::map<std::pair<int, int>, WSummary>& known) {
    std::vector<SpinConstant> out;
    for (int L : config.L_list) {
        auto summary = [&](int N) {
            const auto it = known.find({L, N});
            return it != known.end() ? it->second : run_chain(ChainParams::make(L, N)).summary;
        };
        out.push_back(extract_A(summary(1), summary(2)));
    }
    return out;
}

void write_output(const RunConfig& config, const std::string& text, std::ostream& out) {
    if (config.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + config.output_path);
    file << text;
}

std::string decimal(const CyclotomicNumber& x, int digits, long bits) {
    return x.embed(bits).real().to_string(digits);
}

}  // namespace

int cmd_compute(const RunConfig& config, std::ostream& out, std::ostream& err) {
    validate(config);
    const auto points = grid_points(config);
    auto records = parallel_map<GridRecord>(points.size(), config.jobs, [&](std::size_t i) {
        Built b = build(config, points[i]);
        if (b.linear_system && b.linear_system->e != b.q.e)
            throw std::logic_error("closed form and linear system disagree at L = " +
                                   std::to_string(points[i].L()) + ", N = " + std::to_string(points[i].N()));
        WSymmetrics ws = w_sum(b.q);
        WSummary summary = energy(ws);
        return GridRecord{{std::move(b.q), std::move(ws), std::move(summary)}, std::move(b.linear_system)};
    });

    std::map<std::pair<int, int>, WSummary> known;
    for (const auto& r : records) known.emplace(std::pair{r.result.q.params.L(), r.result.q.params.N()}, r.result.summary);
    const auto constants = spin_constants(config, known);

    if (config.format == Format::json) {
        write_output(config, compute_document(config, records, constants).dump(2) + "\n", out);
    } else {
        std::ostringstream os;
        const int digits = report_digits(config.precision_bits);
        os << "# decimal values derived from exact cyclotomic results at " << config.precision_bits << " bits\n";
        os << "L,N,M,p,E1,energy,energy_per_site\n";
        for (const auto& rec : records) {
            const auto& s = rec.result.summary;
            os << s.params.L() << ',' << s.params.N() << ',' << s.params.M() << ',' << s.params.p() << ','
               << decimal(s.E1, digits, config.precision_bits) << ',' << decimal(s.energy, digits, config.precision_bits)
               << ',' << decimal(s.energy_per_site, digits, config.precision_bits) << '\n';
        }
        write_output(config, os.str(), out);
    }
    if (!config.output_path.empty()) err << "wrote " << records.size() << " records to " << config.output_path << "\n";
    return kExitOk;
}

namespace {

struct PointOutcome {
    ChainParams params;
    std::optional<WSummary> summary;
    VerificationReport report;
};

PointOutcome verify_point(const RunConfig& config, const ChainParams& params) {
    PointOutcome out{params, std::nullopt, {}};
    const auto& checks = config.checks;
    Built b = build(config, params);
    if (b.linear_system) out.report.add(verify_cross_method(b.q, *b.linear_system));
    if (checks.contains(Check::structure)) out.report.add(verify_structure(b.q));
    if (checks.contains(Check::tq)) out.report.add(verify_tq_identity(b.q));

    std::optional<WSymmetrics> ws;
    try {
        ws = checks.contains(Check::structure) ? w_symmetrics(b.q) : w_sum(b.q);
    } catch (const NonRealSum& e) {
        out.report.add({"w_transform", params.L(), params.N(), false, "n/a", e.what()});
        return out;
    } catch (const ZeroDenominator& e) {
        out.report.add({"w_transform", params.L(), params.N(), false, "n/a", e.what()});
        return out;
    }
    if (checks.contains(Check::structure)) {
        out.report.add(verify_w_transform(b.q, *ws));
        out.report.add(verify_inverse_sum(*ws));
    }
    out.summary = energy(*ws);
    if (checks.contains(Check::roots)) out.report.merge(verify_roots(b.q, *ws, config.precision_bits));
    return out;
}

}  // namespace

VerificationReport verify_grid(const RunConfig& config) {
    validate(config);
    const auto points = grid_points(config);
    auto outcomes = parallel_map<PointOutcome>(points.size(), config.jobs,
                                               [&](std::size_t i) { return verify_point(config, points[i]); });

    VerificationReport report;
    std::map<int, std::vector<WSummary>> by_L;
    std::set<int> broken;
    for (auto& o : outcomes) {
        report.merge(o.report);
        if (o.summary)
            by_L[o.params.L()].push_back(*o.summary);
        else
            broken.insert(o.params.L());
    }

    const auto& checks = config.checks;
    const bool per_L = checks.contains(Check::linearity) || checks.contains(Check::finite_size) ||
                       checks.contains(Check::section4);
    for (int L : config.L_list) {
        if (!per_L) break;
        if (broken.contains(L)) {
            report.add({"pipeline", L, std::nullopt, false, "n/a", "E1 unavailable for part of the grid"});
            continue;
        }
        const auto& summaries = by_L[L];
        std::optional<SpinConstant> sc;
        if (checks.contains(Check::linearity) || checks.contains(Check::finite_size)) {
            const WSummary n2 = summaries.size() >= 2 ? summaries[1] : run_chain(ChainParams::make(L, 2)).summary;
            sc = extract_A(summaries[0], n2);
        }
        if (checks.contains(Check::linearity)) report.merge(verify_linearity(*sc, summaries));
        if (checks.contains(Check::finite_size)) report.merge(verify_no_finite_size_correction(*sc, summaries));
        if (checks.contains(Check::section4) && has_published_closed_form(L))
            report.merge(crosscheck_section4_closed_forms(L, summaries, config.precision_bits));
    }
    report.sort_entries();
    return report;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const VerificationReport report = verify_grid(config);
    const std::string text =
        config.format == Format::json ? report_document(config, report).dump(2) + "\n" : report_csv(report);
    write_output(config, text, out);
    for (const auto& e : report.entries())
        if (!e.pass)
            err << "FAIL " << e.check_name << " L=" << e.L << (e.N ? " N=" + std::to_string(*e.N) : "")
                << " residual=" << e.residual << " (" << e.detail << ")\n";
    err << report.entries().size() - report.failures() << "/" << report.entries().size() << " checks passed\n";
    return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int cmd_table(const RunConfig& config, std::ostream& out, std::ostream&) {
    validate(config);
    const auto points = grid_points(config);
    auto summaries = parallel_map<WSummary>(points.size(), config.jobs, [&](std::size_t i) {
        Built b = build(config, points[i]);
        return energy(w_sum(b.q));
    });
    const int digits = 22;
    std::ostringstream os;
    os << std::left << std::setw(4) << "L" << std::setw(4) << "N" << std::setw(5) << "M" << std::setw(6) << "p"
       << std::setw(30) << "E1" << std::setw(30) << "energy" << "energy/M\n";
    for (const auto& s : summaries)
        os << std::left << std::setw(4) << s.params.L() << std::setw(4) << s.params.N() << std::setw(5)
           << s.params.M() << std::setw(6) << s.params.p() << std::setw(30)
           << decimal(s.E1, digits, config.precision_bits) << std::setw(30)
           << decimal(s.energy, digits, config.precision_bits)
           << decimal(s.energy_per_site, digits, config.precision_bits) << "\n";
    write_output(config, os.str(), out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// entry point

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Q-operator and groundstate-energy engine for the higher-spin XXZ chain"};
    app.require_subcommand(1);

    RunConfig config;
    std::string L_text, method = "closed-form", format = "json", checks = "all", tamper;
    std::optional<long> precision;

    if (const char* env = std::getenv(kPrecisionEnv)) {
        try {
            config.precision_bits = std::stol(env);
        } catch (const std::exception&) {
            err << "error: " << kPrecisionEnv << " is not an integer\n";
            return kExitBadConfig;
        }
    }

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--L", L_text, "comma-separated odd chain parameters L (spin (L-2)/2)");
        sub->add_option("--N-max", config.N_max, "largest N; sites M = 2N+1");
        sub->add_option("--method", method, "closed-form | linear-system | both");
        sub->add_option("--precision", precision, "working precision in bits for decimals and roots");
        sub->add_option("--format", format, "json | csv");
        sub->add_option("-o,--output", config.output_path, "output file (default: stdout)");
        sub->add_option("--jobs", config.jobs, "parallel grid jobs");
    };
    CLI::App* compute = app.add_subcommand("compute", "compute Q, E1 and energies over the grid");
    CLI::App* verify = app.add_subcommand("verify", "run verification checks over the grid");
    CLI::App* table = app.add_subcommand("table", "print the E1 / energy table");
    for (CLI::App* sub : {compute, verify, table}) add_common(sub);
    verify->add_option("--checks", checks, "structure,tq,linearity,finite-size,section4,roots or all");
    verify->add_option("--tamper", tamper, "test hook K[:DELTA]: shift e_K by DELTA after the build")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadConfig;
    }

    try {
        if (!L_text.empty()) {
            config.L_list.clear();
            std::stringstream ss(L_text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                std::size_t used = 0;
                int L = 0;
                try {
                    L = std::stoi(item, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used == 0 || used != item.size()) throw ConfigError("malformed L value '" + item + "'");
                config.L_list.push_back(L);
            }
        }
        if (precision) config.precision_bits = *precision;
        config.method = parse_method(method);
        config.format = parse_format(format);
        config.checks = parse_checks(checks);
        if (!tamper.empty()) config.tamper = parse_tamper(tamper);
        validate(config);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadConfig;
    }

    try {
        if (compute->parsed()) return cmd_compute(config, out, err);
        if (verify->parsed()) return cmd_verify(config, out, err);
        return cmd_table(config, out, err);
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace qchain::cli
