// multisym: command-line front end for the multisymmetric polynomial library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <multisym/certify.hpp>
#include <multisym/errors.hpp>
#include <multisym/expr.hpp>
#include <multisym/membership.hpp>
#include <multisym/selftest.hpp>
#include <multisym/symmetric.hpp>
#include <multisym/witness.hpp>

namespace
{

using namespace msym;

enum Exit {
    exit_ok = 0,
    exit_internal = 1,
    exit_config = 2,
    exit_self_check = 3,
    exit_cap = 4,
};

struct RunConfig {
    std::uint32_t p = 2;
    std::size_t width = 2;
    std::uint64_t max_degree = 4;
    std::uint64_t seed = 1;
    std::string format = "text";
    std::size_t cap = default_dimension_cap;
    std::string out;
};

class ConfigError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

void validate(const RunConfig &cfg)
{
    if (!is_prime(cfg.p) || cfg.p > max_prime) {
        throw ConfigError(fmt::format("--p must be a prime <= {}, got {}", max_prime, cfg.p));
    }
    if (cfg.width < 1) {
        throw ConfigError("--width must be at least 1");
    }
    if (cfg.max_degree < 1) {
        throw ConfigError("--max-degree must be at least 1");
    }
}

void require_format(const RunConfig &cfg, std::initializer_list<const char *> allowed, const char *command)
{
    for (const char *f : allowed) {
        if (cfg.format == f) {
            return;
        }
    }
    throw ConfigError(fmt::format("format '{}' is not available for {}", cfg.format, command));
}

void emit(const RunConfig &cfg, const std::string &text)
{
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
        throw ConfigError("cannot write " + cfg.out);
    }
    file << text;
}

std::string dump(const nlohmann::json &j)
{
    return j.dump(2) + "\n";
}

int cmd_eval(const RunConfig &cfg, const std::string &text)
{
    require_format(cfg, {"text", "json"}, "eval");
    const auto f = evaluate(text, cfg.p, cfg.width);
    const auto name = recognize(f);
    if (cfg.format == "json") {
        nlohmann::json j{{"p", cfg.p},          {"width", cfg.width}, {"expr", text}, {"terms", f.size()},
                         {"text", f.to_string()}, {"poly", f.to_json()}};
        j["recognized"] = name ? nlohmann::json(*name) : nlohmann::json(nullptr);
        emit(cfg, dump(j));
    } else {
        std::string out = f.to_string() + "\n";
        if (name && *name != "0") {
            out += "= " + *name + "\n";
        }
        emit(cfg, out);
    }
    return exit_ok;
}

int cmd_member(const RunConfig &cfg, const std::string &text)
{
    require_format(cfg, {"text", "json"}, "member");
    const auto f = evaluate(text, cfg.p, cfg.width);
    nlohmann::json j{{"p", cfg.p}, {"width", cfg.width}, {"expr", text}};
    bool in_gamma = true, in_p = true;
    std::uint64_t degree = 0;
    Coordinates coords;
    std::vector<Monomial> pivots;
    std::size_t dim_gamma = 0, dim_p = 0;
    if (!f.is_zero()) {
        const auto deg = f.homogeneous_degree();
        if (!deg) {
            throw ConfigError("member needs a homogeneous target");
        }
        degree = *deg;
        in_gamma = is_invariant(f);
        PAlgebra algebra(cfg.p, cfg.width, cfg.cap);
        auto span = algebra.span(degree);
        dim_p = span.dimension();
        dim_gamma = span.ambient_dimension();
        auto found = in_gamma ? span.contains(f) : std::nullopt;
        in_p = found.has_value();
        if (found) {
            coords = *found;
            pivots = span.pivots();
        }
    }
    if (cfg.format == "json") {
        j["degree"] = degree;
        j["in_gamma"] = in_gamma;
        j["in_p"] = in_p;
        j["dim_gamma"] = dim_gamma;
        j["dim_p"] = dim_p;
        auto &jc = j["coordinates"] = nlohmann::json::array();
        for (auto [k, c] : coords) {
            jc.push_back({{"row", k}, {"pivot", Poly::monomial(f.shape(), pivots[k]).to_string()}, {"coeff", c}});
        }
        emit(cfg, dump(j));
        return exit_ok;
    }
    std::string out = fmt::format("target: {}\ndegree: {}\nin Gamma: {}\nin P: {}\n", text, degree, in_gamma,
                                  in_p);
    if (!f.is_zero()) {
        out += fmt::format("dim Gamma_{0} = {1}, dim P_{0} = {2}\n", degree, dim_gamma, dim_p);
    }
    for (auto [k, c] : coords) {
        out += fmt::format("  {} * row {} (pivot {})\n", c, k, Poly::monomial(f.shape(), pivots[k]).to_string());
    }
    emit(cfg, out);
    return exit_ok;
}

std::string certificate_text(const Certificate &cert)
{
    std::string out;
    for (const auto &[factors, coeff] : cert.terms.terms()) {
        out += fmt::format("  {}", coeff);
        for (const auto &b : factors) {
            out += " * E" + b.to_string();
        }
        out += "\n";
    }
    return out;
}

int cmd_certify(const RunConfig &cfg, const std::string &tuple, bool pth_power, bool fallback)
{
    require_format(cfg, {"text", "json"}, "certify");
    const auto alpha = ExpTuple::parse(tuple);
    const auto target = pth_power ? alpha.scaled(cfg.p) : alpha;
    const auto width = std::max(cfg.width, target.length());
    CertifyOptions options;
    options.force_fallback = fallback;
    options.cap = cfg.cap;
    const auto cert = pth_power ? certify_pth_power(alpha, cfg.p, width, options)
                                : certify_power_sum(alpha, cfg.p, width, options);
    const auto check = verify(cert);
    bool replayed = !cert.constructive;
    if (cert.constructive) {
        auto rebuilt = replay(cert);
        replayed = rebuilt && *rebuilt == cert.terms;
    }
    const bool ok = check.ok && replayed;
    if (cfg.format == "json") {
        nlohmann::json j{{"certificate", cert.to_json()}, {"verified", check.ok}, {"replayed", replayed},
                         {"report", check.report}};
        emit(cfg, dump(j));
    } else if (!cfg.out.empty()) {
        emit(cfg, dump(cert.to_json()));
        std::cout << fmt::format("certificate for M{} written to {}\nverified: {}\n", target.to_string(), cfg.out,
                                 check.ok ? "true" : "false");
    } else {
        std::string out = fmt::format("M{} in P at p={} width={} ({} terms, {} steps{})\n", target.to_string(),
                                      cfg.p, width, cert.terms.size(), cert.trace.size(),
                                      cert.constructive ? "" : ", non-constructive");
        out += certificate_text(cert);
        out += fmt::format("verified: {}\n", check.ok ? "true" : "false");
        if (!check.ok) {
            out += check.report + "\n";
        }
        emit(cfg, out);
    }
    return ok ? exit_ok : exit_self_check;
}

int cmd_verify(const RunConfig &cfg, const std::string &path)
{
    require_format(cfg, {"text", "json"}, "verify");
    std::ifstream file(path);
    if (!file) {
        throw ConfigError("cannot read " + path);
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(file);
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("malformed certificate: ") + e.what());
    }
    if (j.contains("certificate")) {
        j = j.at("certificate");
    }
    Certificate cert;
    try {
        cert = Certificate::from_json(j);
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("malformed certificate: ") + e.what());
    }
    const auto check = verify(cert);
    std::optional<bool> replayed;
    if (cert.constructive && !cert.trace.empty()) {
        auto rebuilt = replay(cert);
        replayed = rebuilt && *rebuilt == cert.terms;
    }
    const bool ok = check.ok && replayed.value_or(true);
    if (cfg.format == "json") {
        nlohmann::json out{{"verified", check.ok}, {"report", check.report}, {"target", cert.target.to_string()}};
        out["replayed"] = replayed ? nlohmann::json(*replayed) : nlohmann::json(nullptr);
        emit(cfg, dump(out));
    } else {
        std::string out = fmt::format("target: M{}\nverified: {}\n{}\n", cert.target.to_string(),
                                      check.ok ? "true" : "false", check.report);
        if (replayed) {
            out += fmt::format("trace replay: {}\n", *replayed ? "identical" : "MISMATCH");
        }
        emit(cfg, out);
    }
    return ok ? exit_ok : exit_self_check;
}

int cmd_mingens(const RunConfig &cfg)
{
    PAlgebra algebra(cfg.p, cfg.width, cfg.cap);
    std::vector<GradedDimReport> rows;
    bool all = true;
    for (std::uint64_t d = 1; d <= cfg.max_degree; ++d) {
        rows.push_back(square_ideal_quotient(cfg.p, cfg.width, d, cfg.cap, &algebra));
        all = all && rows.back().match();
    }
    if (cfg.format == "csv") {
        std::string out = csv_header() + "\n";
        for (const auto &r : rows) {
            out += to_csv_row(r) + "\n";
        }
        emit(cfg, out);
    } else if (cfg.format == "json") {
        auto j = nlohmann::json::array();
        for (const auto &r : rows) {
            j.push_back({{"p", r.p},
                         {"n", r.width},
                         {"degree", r.degree},
                         {"dim_gamma", r.dim_gamma},
                         {"dim_P", r.dim_p},
                         {"dim_square", r.dim_square},
                         {"dim_quotient", r.dim_quotient},
                         {"predicted_count", r.predicted_count},
                         {"match", r.match()}});
        }
        emit(cfg, dump(j));
    } else {
        std::string out = fmt::format("{:>6} {:>10} {:>8} {:>11} {:>13} {:>10} {:>6}\n", "degree", "dim_gamma",
                                      "dim_P", "dim_square", "dim_quotient", "predicted", "match");
        for (const auto &r : rows) {
            out += fmt::format("{:>6} {:>10} {:>8} {:>11} {:>13} {:>10} {:>6}\n", r.degree, r.dim_gamma, r.dim_p,
                               r.dim_square, r.dim_quotient, r.predicted_count, r.match() ? "true" : "false");
        }
        emit(cfg, out);
    }
    return all ? exit_ok : exit_self_check;
}

int cmd_witness(const RunConfig &cfg, std::uint64_t d, std::size_t N)
{
    require_format(cfg, {"text", "json"}, "witness");
    if (N <= d) {
        throw ConfigError(fmt::format("witness needs N > d (got d = {}, N = {}): with N <= d, M_(p omega) is itself "
                                      "a p-th power of degree at most d and lies in the ideal",
                                      d, N));
    }
    const auto report = witness_check(cfg.p, d, N, std::max(cfg.width, N), cfg.cap);
    emit(cfg, cfg.format == "json" ? dump(report.to_json()) : report.to_text());
    return report.passed() ? exit_ok : exit_self_check;
}

int cmd_selftest(const RunConfig &cfg, bool inject, std::size_t samples)
{
    require_format(cfg, {"text"}, "selftest");
    SelftestOptions options;
    options.seed = cfg.seed;
    options.inject_mutation = inject;
    options.samples = samples;
    const auto report = run_selftest(options);
    emit(cfg, report.log());
    return report.ok() ? exit_ok : exit_self_check;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"multisym: multisymmetric polynomials over GF(p)"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--p", cfg.p, "prime characteristic (rows of the variable matrix)")->envname("MULTISYM_P");
    app.add_option("--width", cfg.width, "number of columns n")->envname("MULTISYM_WIDTH");
    app.add_option("--max-degree", cfg.max_degree, "largest degree for table commands")
        ->envname("MULTISYM_MAX_DEGREE");
    app.add_option("--seed", cfg.seed, "seed for randomized suites")->envname("MULTISYM_SEED");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->envname("MULTISYM_FORMAT");
    app.add_option("--cap", cfg.cap, "dimension cap for linear algebra")->envname("MULTISYM_CAP");
    app.add_option("--out", cfg.out, "write the output to this file")->envname("MULTISYM_OUT");

    std::string expr_text, tuple_text, path;
    bool pth_power = false, fallback = false, inject = false;
    std::uint64_t d = 1;
    std::size_t N = 2, samples = 40;

    auto *eval = app.add_subcommand("eval", "expand an expression");
    eval->add_option("expr", expr_text, "expression, e.g. 'polarize(M(5),1,2,2)'")->required();
    auto *member = app.add_subcommand("member", "test membership in Gamma and in P");
    member->add_option("expr", expr_text, "homogeneous expression")->required();
    auto *certify = app.add_subcommand("certify", "certify that a power sum lies in P");
    certify->add_option("tuple", tuple_text, "exponent tuple, e.g. (1,1)")->required();
    certify->add_flag("--pth-power", pth_power, "certify M_(p alpha) = M_alpha^p");
    certify->add_flag("--fallback", fallback, "solve by elimination instead of the recursion");
    auto *verify_cmd = app.add_subcommand("verify", "re-check a certificate file");
    verify_cmd->add_option("file", path, "certificate JSON")->required();
    auto *mingens = app.add_subcommand("mingens", "minimal generator counts per degree");
    auto *witness = app.add_subcommand("witness", "finite-width witness computation");
    witness->add_option("--d", d, "largest generator degree")->required();
    witness->add_option("--N", N, "length of omega")->required();
    auto *selftest = app.add_subcommand("selftest", "run the property suites");
    selftest->add_flag("--inject-mutation", inject, "break a known identity; the run must turn red");
    selftest->add_option("--samples", samples, "random cases per suite");
    // Accept --seed after the subcommand name as well.
    selftest->add_option("--seed", cfg.seed, "seed for randomized suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try {
        validate(cfg);
        if (*eval) {
            return cmd_eval(cfg, expr_text);
        }
        if (*member) {
            return cmd_member(cfg, expr_text);
        }
        if (*certify) {
            return cmd_certify(cfg, tuple_text, pth_power, fallback);
        }
        if (*verify_cmd) {
            return cmd_verify(cfg, path);
        }
        if (*mingens) {
            return cmd_mingens(cfg);
        }
        if (*witness) {
            return cmd_witness(cfg, d, N);
        }
        if (*selftest) {
            return cmd_selftest(cfg, inject, samples);
        }
    } catch (const CapExceeded &e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return exit_cap;
    } catch (const SelfCheckFailure &e) {
        std::cerr << "self-check failure: " << e.what() << "\n";
        return exit_self_check;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_internal;
}
