// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include <multisym/certify.hpp>
#include <multisym/membership.hpp>
#include <multisym/operators.hpp>
#include <multisym/selftest.hpp>
#include <multisym/symmetric.hpp>
#include <multisym/witness.hpp>

#include "oracles.hpp"

using namespace msym;

namespace
{

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string &what)
    {
        if (!condition && ok) {
            detail = what;
        }
        ok = ok && condition;
    }
};

bool run(int number, const std::string &title, double limit_seconds, const std::function<Outcome()> &body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = body();
    } catch (const std::exception &e) {
        outcome.ok = false;
        outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < limit_seconds;
    const bool ok = outcome.ok && in_time;
    std::string line = fmt::format("criterion {}: {} - {} [{:.1f} s, limit {:.0f} s]", number, ok ? "PASS" : "FAIL",
                                   title, seconds, limit_seconds);
    if (!outcome.ok) {
        line += " (" + outcome.detail + ")";
    } else if (!in_time) {
        line += " (over the time limit)";
    } else if (!outcome.detail.empty()) {
        line += " (" + outcome.detail + ")";
    }
    std::cout << line << std::endl;
    return ok;
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

int main(int argc, char **argv)
{
    const std::string cli = argc > 1 ? argv[1] : "multisym";
    const std::string scratch = argc > 2 ? argv[2] : ".";
    bool all = true;

    all &= run(1, "gamma identities, p in {2,3}, degree <= p+2, width <= 3, 200 samples each", 60, [] {
        Outcome o;
        Rng rng(2024);
        std::size_t cases = 0;
        for (std::uint32_t p : {2u, 3u}) {
            const auto r = suite_gamma_identities(rng, p, 3, 200);
            o.require(r.ok(), r.name + ": " + r.first_failure);
            cases += r.cases;
        }
        o.detail = fmt::format("{} identity checks", cases);
        return o;
    });

    all &= run(2, "Newton calibration and sign regression", 60, [] {
        Outcome o;
        for (std::uint32_t p : {2u, 3u, 5u}) {
            o.require(check_newton_tilde(p), fmt::format("integer identity at p={}", p));
        }
        std::size_t rewrites = 0;
        for (std::uint32_t p : {2u, 3u}) {
            for (std::uint64_t d = p; d <= 8; ++d) {
                for (const auto &alpha : tuples_of_degree(d, 2)) {
                    for (std::size_t col = 0; col < alpha.length(); ++col) {
                        if (alpha[col] >= p) {
                            newton_rewrite(alpha, col, p, 2);
                            ++rewrites;
                        }
                    }
                }
            }
        }
        const bool unsigned_fails = !newton_identity_holds(newton_terms({3}, 0, 3, NewtonSign::none), {3}, 3, 1);
        o.require(unsigned_fails, "unsigned identity unexpectedly holds at p=3, alpha=(3)");
        o.detail = fmt::format("{} self-checked rewrites; unsigned form fails at p=3, alpha=(3)", rewrites);
        return o;
    });

    all &= run(3, "flattening on len <= 2, |alpha| <= 8, p in {2,3}; golden M(5)->M(3,2), M(4)->M(3,1)", 60, [] {
        Outcome o;
        std::size_t cases = 0;
        for (std::uint32_t p : {2u, 3u}) {
            const auto r = suite_flatten(p, 8);
            o.require(r.ok(), r.first_failure);
            cases += r.cases;
        }
        o.require(polarize(power_sum({5}, 3, 2), {0, 1, 2}) == power_sum({3, 2}, 3, 2), "M(5) -> M(3,2)");
        o.require(polarize(power_sum({4}, 3, 2), {0, 1, 1}) == power_sum({3, 1}, 3, 2), "M(4) -> M(3,1)");
        o.detail = fmt::format("{} flattenings", cases);
        return o;
    });

    all &= run(4, "Frobenius splitting axioms, 500 pairs per p in {2,3}, width <= 3, degree <= 8", 120, [] {
        Outcome o;
        Rng rng(4242);
        std::size_t cases = 0;
        for (std::uint32_t p : {2u, 3u}) {
            const auto r = suite_frobenius_split(rng, p, 3, 8, 500);
            o.require(r.ok(), r.name + ": " + r.first_failure);
            cases += r.cases;
        }
        o.detail = fmt::format("{} axiom checks", cases);
        return o;
    });

    all &= run(5, "square-ideal quotient matches the Rydh count (p=2 n<=3 d<=6; p=3 n<=2 d<=6)", 300, [] {
        Outcome o;
        const auto anchor = square_ideal_quotient(2, 2, 2);
        o.require(anchor.dim_quotient == 3 && anchor.match(), "golden p=2 n=2 d=2 quotient dim 3");
        std::size_t rows = 0;
        auto sweep = [&](std::uint32_t p, std::size_t max_n) {
            for (std::size_t n = 1; n <= max_n; ++n) {
                PAlgebra algebra(p, n);
                for (std::uint64_t d = 1; d <= 6; ++d) {
                    const auto r = square_ideal_quotient(p, n, d, default_dimension_cap, &algebra);
                    o.require(r.match() && r.dim_quotient == oracle::rydh_count(p, n, d), to_csv_row(r));
                    ++rows;
                }
            }
        };
        sweep(2, 3);
        sweep(3, 2);
        o.detail = fmt::format("{} degree/width rows", rows);
        return o;
    });

    all &= run(6, "certify_pth_power + verify + membership oracle (p=2 |alpha|<=6, p=3 |alpha|<=4, len <= 3)", 600,
               [] {
                   Outcome o;
                   std::size_t count = 0;
                   for (std::uint32_t p : {2u, 3u}) {
                       PAlgebra algebra(p, 3);
                       const std::uint64_t max_degree = p == 2 ? 6 : 4;
                       for (std::uint64_t d = 1; d <= max_degree; ++d) {
                           for (const auto &alpha : tuples_of_degree(d, 3)) {
                               const auto cert = certify_pth_power(alpha, p, 3);
                               const auto check = verify(cert);
                               o.require(check.ok, fmt::format("p={} M{}: {}", p, alpha.scaled(p).to_string(),
                                                               check.report));
                               const auto target = alpha.scaled(p);
                               const bool member =
                                   algebra.span_at(target).contains(power_sum(target, p, 3)).has_value();
                               o.require(member, fmt::format("oracle rejects M{} at p={}", target.to_string(), p));
                               ++count;
                           }
                       }
                   }
                   o.detail = fmt::format("{} certificates", count);
                   return o;
               });

    all &= run(7, "witness d=1 N=2 at p=2 (degree 4) and p=3 (degree 6)", 120, [] {
        Outcome o;
        for (std::uint32_t p : {2u, 3u}) {
            const auto r = witness_check(p, 1, 2, 2);
            o.require(r.omega_indecomposable, fmt::format("(a) at p={}", p));
            o.require(r.certificate_verified && r.frobenius_matches, fmt::format("(b) at p={}", p));
            o.require(r.outside_ideal && r.outside_ideal_positive, fmt::format("(c) at p={}", p));
            o.require(r.psi_rows == r.psi_rows_in_square && r.psi_target_is_omega,
                      fmt::format("psi replay at p={}", p));
        }
        const auto control = witness_check(2, 1, 1, 2);
        o.require(!control.outside_ideal, "N=1 control unexpectedly passes (c)");
        o.detail = "M(2,2) outside the p=2 truncation; N=1 control fails (c)";
        return o;
    });

    all &= run(8, "selftest with a fixed seed is byte-identical across two runs", 300, [&] {
        Outcome o;
        const auto a = scratch + "/selftest_run_a.log";
        const auto b = scratch + "/selftest_run_b.log";
        for (const auto &path : {a, b}) {
            const auto cmd = fmt::format("\"{}\" selftest --seed 20260101 --out \"{}\"", cli, path);
            o.require(std::system(cmd.c_str()) == 0, "selftest run failed: " + cmd);
        }
        const auto first = read_file(a), second = read_file(b);
        o.require(!first.empty() && first == second, "logs differ");
        o.detail = fmt::format("{} bytes each", first.size());
        return o;
    });

    std::cout << (all ? "all criteria pass" : "some criteria FAIL") << std::endl;
    return all ? 0 : 1;
}
