#include <multisym/witness.hpp>

#include <stdexcept>

#include <fmt/format.h>

#include <multisym/certify.hpp>
#include <multisym/operators.hpp>
#include <multisym/symmetric.hpp>

namespace msym
{

WitnessReport witness_check(std::uint32_t p, std::uint64_t d, std::size_t N, std::size_t width, std::size_t cap)
{
    if (N == 0 || d == 0) {
        throw std::invalid_argument("witness_check needs d >= 1 and N >= 1");
    }
    if (width < N) {
        throw std::invalid_argument(fmt::format("witness_check needs width >= N = {}, got {}", N, width));
    }
    WitnessReport report;
    report.p = p;
    report.d = d;
    report.N = N;
    report.width = width;
    report.precondition = N > d;

    const auto shape = Shape::ring(p, width);
    const auto omega = ExpTuple::ones(N);
    const auto p_omega = omega.scaled(p);
    const auto m_omega = power_sum(omega, p, width);
    const auto m_p_omega = power_sum(p_omega, p, width);

    EchelonComponent square(shape, omega, cap);
    fill_square_component(square);
    report.square_rank = square.rank();
    report.square_columns = square.columns();
    report.omega_indecomposable = !square.reduce(square.coordinates(m_omega)).has_value();

    const auto cert = certify_pth_power(omega, p, width);
    report.certificate_terms = cert.terms.size();
    report.certificate_verified = verify(cert).ok;
    report.frobenius_matches = frobenius(m_omega) == m_p_omega;

    PAlgebra algebra(p, width, cap);
    const auto ideal =
        ideal_truncation_span(p, width, d, p * N, Cofactors::with_generators, p_omega, cap, &algebra);
    const auto positive = ideal_truncation_span(p, width, d, p * N, Cofactors::positive, p_omega, cap, &algebra);
    report.outside_ideal = !ideal.contains(m_p_omega).has_value();
    report.outside_ideal_positive = !positive.contains(m_p_omega).has_value();
    report.ideal_rank = ideal.dimension();
    report.ideal_rank_positive = positive.dimension();
    report.ideal_columns = ideal.ambient_dimension();

    // Psi(g f) = h Psi(f) for g = h^p, so every element of the ideal splits into
    // the square; M_omega = Psi(M_{p omega}) does not.
    report.psi_target_is_omega = frobenius_split(m_p_omega) == m_omega;
    for (const auto &row : ideal.rows()) {
        ++report.psi_rows;
        const auto split = frobenius_split(row);
        if (split.is_zero() || square.reduce(square.coordinates(split)).has_value()) {
            ++report.psi_rows_in_square;
        }
    }
    return report;
}

nlohmann::json WitnessReport::to_json() const
{
    return {
        {"p", p},
        {"d", d},
        {"N", N},
        {"width", width},
        {"precondition", precondition},
        {"a_omega_indecomposable", omega_indecomposable},
        {"square_rank", square_rank},
        {"square_columns", square_columns},
        {"b_certificate_verified", certificate_verified},
        {"b_frobenius_matches", frobenius_matches},
        {"certificate_terms", certificate_terms},
        {"c_outside_ideal", outside_ideal},
        {"c_outside_ideal_positive_cofactors", outside_ideal_positive},
        {"ideal_rank", ideal_rank},
        {"ideal_rank_positive_cofactors", ideal_rank_positive},
        {"ideal_columns", ideal_columns},
        {"psi_rows", psi_rows},
        {"psi_rows_in_square", psi_rows_in_square},
        {"psi_target_is_omega", psi_target_is_omega},
        {"passed", passed()},
    };
}

std::string WitnessReport::to_text() const
{
    auto mark = [](bool b) { return b ? "pass" : "FAIL"; };
    const auto omega = ExpTuple::ones(N);
    std::string out;
    out += fmt::format("witness p={} d={} N={} width={}\n", p, d, N, width);
    if (!precondition) {
        out += fmt::format("precondition: FAIL (need N > d; N = {}, d = {})\n", N, d);
    }
    out += fmt::format("(a) M{} not in (Gamma_+)^2: {} (square rank {} of {})\n", omega.to_string(),
                       mark(omega_indecomposable), square_rank, square_columns);
    out += fmt::format("(b) M{} certified in P: {} ({} terms), frobenius(M{}) = M{}: {}\n",
                       omega.scaled(p).to_string(), mark(certificate_verified), certificate_terms, omega.to_string(),
                       omega.scaled(p).to_string(), mark(frobenius_matches));
    out += fmt::format("(c) M{} not in ideal truncation: {} (rank {} of {}); positive cofactors only: {} (rank {})\n",
                       omega.scaled(p).to_string(), mark(outside_ideal), ideal_rank, ideal_columns,
                       mark(outside_ideal_positive), ideal_rank_positive);
    out += fmt::format("psi replay: {} of {} ideal rows split into (Gamma_+)^2; psi(M{}) = M{}: {}\n",
                       psi_rows_in_square, psi_rows, omega.scaled(p).to_string(), omega.to_string(),
                       mark(psi_target_is_omega));
    out += fmt::format("result: {}\n", passed() ? "pass" : "FAIL");
    return out;
}

} // namespace msym
