#pragma once

#include "qchain/cyclotomic.hpp"
#include "qchain/energy.hpp"
#include "qchain/report.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qchain::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadConfig = 2;
inline constexpr int kExitInternal = 3;

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kPrecisionEnv = "QCHAIN_PRECISION_BITS";

enum class Method { closed_form, linear_system, both };
enum class Format { json, csv };
enum class Check { structure, tq, linearity, finite_size, section4, roots };

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Tamper {
    std::size_t index = 1;
    Rational delta{1};
};

struct RunConfig {
    std::vector<int> L_list{3, 5, 7, 9, 11};
    int N_max = 4;
    Method method = Method::closed_form;
    long precision_bits = kDefaultPrecisionBits;
    std::set<Check> checks{Check::structure, Check::tq, Check::linearity,
                           Check::finite_size, Check::section4, Check::roots};
    std::string output_path;  // empty: standard output
    Format format = Format::json;
    unsigned jobs = 1;
    std::optional<Tamper> tamper;  // test hook: shifts one e_k after the build
};

/// Throws ConfigError with a user-facing message.
void validate(const RunConfig& config);

Method parse_method(const std::string& s);
Format parse_format(const std::string& s);
std::set<Check> parse_checks(const std::string& s);
std::string check_name(Check c);
Tamper parse_tamper(const std::string& s);

/// Exact cyclotomic value as {order, coeffs: ["n/d", ...], approx}.
nlohmann::json cyclotomic_to_json(const CyclotomicNumber& x, long precision_bits);
CyclotomicNumber cyclotomic_from_json(const nlohmann::json& j);
/// Decimal rendering used for "approx": real part only when the element is real.
std::string approx_string(const CyclotomicNumber& x, long precision_bits);

/// Recomputes every "approx" field of a compute document from its exact
/// coefficients at meta.precision_bits.
nlohmann::json recompute_approximations(nlohmann::json doc);

/// One grid point after the pipeline ran.
struct GridRecord {
    ChainResult result;
    std::optional<QPolynomial> linear_system;  // present for method both
};

nlohmann::json compute_document(const RunConfig& config, const std::vector<GridRecord>& records,
                                const std::vector<SpinConstant>& constants);
VerificationReport verify_grid(const RunConfig& config);
nlohmann::json report_document(const RunConfig& config, const VerificationReport& report);
std::string report_csv(const VerificationReport& report);

int cmd_compute(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_table(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command-line entry point: parses argv, dispatches, maps errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qchain::cli
