#include <multisym/certify.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include <fmt/format.h>

#include <multisym/errors.hpp>
#include <multisym/membership.hpp>
#include <multisym/operators.hpp>
#include <multisym/symmetric.hpp>

namespace msym
{

namespace
{

constexpr std::pair<StepKind, const char *> kind_names[] = {
    {StepKind::base_case, "base-case"}, {StepKind::newton_rewrite, "newton-rewrite"}, {StepKind::merge, "merge"},
    {StepKind::flatten, "flatten"},     {StepKind::frobenius, "frobenius"},
};

void check_precondition(const ExpTuple &alpha, std::uint32_t p)
{
    for (std::size_t i = 0; i + 1 < alpha.length(); ++i) {
        if (alpha[i] % p != 0) {
            throw std::invalid_argument(fmt::format("M{}: entry {} is not divisible by p = {}", alpha.to_string(),
                                                    i + 1, p));
        }
    }
}

class Builder
{
public:
    Builder(std::uint32_t p, std::size_t width) : m_p(p), m_width(width), m_field(p)
    {
    }

    std::vector<CertStep> trace;

    ElementaryExpr build(const ExpTuple &alpha)
    {
        // The induction hypothesis, checked at every call.
        for (std::size_t i = 0; i + 1 < alpha.length(); ++i) {
            if (alpha[i] % m_p != 0) {
                throw SelfCheckFailure(fmt::format("recursion reached M{} with entry {} not divisible by {}",
                                                   alpha.to_string(), i + 1, m_p));
            }
        }
        const std::size_t r = alpha.length() - 1;
        if (alpha.length() == 1) {
            CertStep step;
            step.kind = StepKind::base_case;
            step.tuple = alpha;
            step.power = alpha[0];
            trace.push_back(step);
            return power_to_elementary_one_column(alpha[0], 0, m_p);
        }
        if (alpha[r] < m_p) {
            const auto merged = alpha.with(r - 1, alpha[r - 1] + alpha[r]).with(r, 0);
            CertStep mark;
            mark.kind = StepKind::merge;
            mark.tuple = alpha;
            mark.merged = merged;
            trace.push_back(mark);

            auto inner = build(merged);
            const PolarizationOp op{r - 1, r, alpha[r]};
            const Coeff scale = m_field.binomial(merged[r - 1], alpha[r]);
            if (scale == 0) {
                throw SelfCheckFailure(fmt::format("flattening {} to {} has a vanishing binomial",
                                                   merged.to_string(), alpha.to_string()));
            }
            CertStep step;
            step.kind = StepKind::flatten;
            step.tuple = alpha;
            step.merged = merged;
            step.column = r - 1;
            step.moved = alpha[r];
            trace.push_back(step);
            return polarize_expr(inner, op).scaled(m_field.inv(scale));
        }
        const auto terms = newton_rewrite(alpha, r, m_p, m_width);
        CertStep step;
        step.kind = StepKind::newton_rewrite;
        step.tuple = alpha;
        step.column = r;
        ElementaryExpr out(m_p);
        std::vector<ElementaryExpr> parts;
        for (const auto &t : terms) {
            if (t.power_sum.is_zero() || t.coeff == 0) {
                continue;
            }
            parts.push_back(build(t.power_sum));
            step.coeffs.push_back(t.coeff);
            step.generators.push_back(t.generator);
            step.inner.push_back(t.power_sum);
        }
        for (std::size_t k = 0; k < parts.size(); ++k) {
            out += ElementaryExpr::generator(m_p, step.generators[k], step.coeffs[k]) * parts[k];
        }
        trace.push_back(std::move(step));
        return out;
    }

private:
    std::uint32_t m_p;
    std::size_t m_width;
    PrimeField m_field;
};

// Products of generators E_beta (0 < |beta| <= p) with multidegree exactly `target`.
void enumerate_products(const std::vector<ExpTuple> &gens, std::size_t start, const ExpTuple &remaining,
                        ElementaryExpr::Product &current, std::vector<ElementaryExpr::Product> &out,
                        std::size_t cap)
{
    if (remaining.is_zero()) {
        out.push_back(current);
        if (out.size() > cap) {
            throw CapExceeded(fmt::format("more than {} generator products", cap));
        }
        return;
    }
    for (std::size_t k = start; k < gens.size(); ++k) {
        if (!dominated_by(gens[k], remaining)) {
            continue;
        }
        current.push_back(gens[k]);
        enumerate_products(gens, k, remaining - gens[k], current, out, cap);
        current.pop_back();
    }
}

// Solves M_target = sum c_k prod_k by elimination over the orbit-sum coordinates.
ElementaryExpr solve_by_elimination(const ExpTuple &target, std::uint32_t p, std::size_t width, std::size_t cap)
{
    const PrimeField F(p);
    const auto shape = Shape::ring(p, width);
    EchelonComponent frame(shape, target, cap);
    std::vector<ExpTuple> gens;
    for (std::uint64_t d = 1; d <= p; ++d) {
        for (auto &b : tuples_of_degree(d, width)) {
            if (dominated_by(b, target)) {
                gens.push_back(std::move(b));
            }
        }
    }
    std::vector<ElementaryExpr::Product> products;
    ElementaryExpr::Product current;
    enumerate_products(gens, 0, target, current, products, cap);

    struct Row {
        std::size_t pivot;
        std::vector<Coeff> values;
        std::vector<Coeff> combination;
    };
    std::vector<Row> rows;
    auto reduce = [&](std::vector<Coeff> &v, std::vector<Coeff> &combo) {
        for (const auto &row : rows) {
            const Coeff c = v[row.pivot];
            if (c == 0) {
                continue;
            }
            const Coeff negc = F.neg(c);
            for (std::size_t j = row.pivot; j < v.size(); ++j) {
                v[j] = F.add(v[j], F.mul(negc, row.values[j]));
            }
            for (std::size_t j = 0; j < combo.size(); ++j) {
                combo[j] = F.add(combo[j], F.mul(negc, row.combination[j]));
            }
        }
    };
    for (std::size_t k = 0; k < products.size(); ++k) {
        ElementaryExpr single(p);
        single.add_term(products[k], 1);
        auto v = frame.coordinates(single.expand(width));
        std::vector<Coeff> combo(products.size(), 0);
        combo[k] = 1;
        reduce(v, combo);
        auto lead = std::find_if(v.begin(), v.end(), [](Coeff c) { return c != 0; });
        if (lead == v.end()) {
            continue;
        }
        const std::size_t pivot = static_cast<std::size_t>(lead - v.begin());
        const Coeff inv = F.inv(*lead);
        for (auto &x : v) {
            x = F.mul(x, inv);
        }
        for (auto &x : combo) {
            x = F.mul(x, inv);
        }
        auto pos = std::find_if(rows.begin(), rows.end(), [&](const Row &r) { return r.pivot > pivot; });
        rows.insert(pos, Row{pivot, std::move(v), std::move(combo)});
    }
    auto v = frame.coordinates(power_sum(target, p, width));
    std::vector<Coeff> combo(products.size(), 0);
    reduce(v, combo);
    if (std::any_of(v.begin(), v.end(), [](Coeff c) { return c != 0; })) {
        throw SelfCheckFailure("M" + target.to_string() + " is not in the span of generator products");
    }
    // v - sum combo_k prod_k = 0 after reduction, so M = -sum combo_k prod_k.
    ElementaryExpr out(p);
    for (std::size_t k = 0; k < products.size(); ++k) {
        if (combo[k] != 0) {
            out.add_term(products[k], F.neg(combo[k]));
        }
    }
    return out;
}

nlohmann::json tuple_json(const ExpTuple &t)
{
    return t.entries();
}

ExpTuple tuple_from_json(const nlohmann::json &j)
{
    return ExpTuple(j.get<std::vector<ExpTuple::value_type>>());
}

} // namespace

std::string to_string(StepKind kind)
{
    for (auto [k, name] : kind_names) {
        if (k == kind) {
            return name;
        }
    }
    return "unknown";
}

StepKind step_kind_from_string(const std::string &s)
{
    for (auto [k, name] : kind_names) {
        if (s == name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown certificate step kind '" + s + "'");
}

bool polarization_validated(std::uint32_t p)
{
    static std::mutex lock;
    static std::map<std::uint32_t, bool> cache;
    std::lock_guard guard(lock);
    auto it = cache.find(p);
    if (it == cache.end()) {
        // The closed form involves two columns at a time; width 3 also covers
        // generators with a bystander column.
        it = cache.emplace(p, validate_polarization_closed_form(p, p <= 3 ? 3 : 2)).first;
    }
    return it->second;
}

Certificate certify_power_sum(const ExpTuple &alpha, std::uint32_t p, std::size_t width,
                              const CertifyOptions &options)
{
    if (!is_prime(p) || p > max_prime) {
        throw std::invalid_argument(fmt::format("p = {} is not a supported prime", p));
    }
    if (alpha.is_zero()) {
        throw std::invalid_argument("cannot certify M_0 = 0");
    }
    if (alpha.length() > width) {
        throw std::invalid_argument(fmt::format("M{} needs width {}, got {}", alpha.to_string(), alpha.length(),
                                                width));
    }
    check_precondition(alpha, p);
    Certificate cert;
    cert.p = p;
    cert.width = width;
    cert.target = alpha;
    if (options.force_fallback || !polarization_validated(p)) {
        cert.terms = solve_by_elimination(alpha, p, width, options.cap);
        cert.constructive = false;
        return cert;
    }
    Builder builder(p, width);
    cert.terms = builder.build(alpha);
    cert.trace = std::move(builder.trace);
    return cert;
}

Certificate certify_pth_power(const ExpTuple &alpha, std::uint32_t p, std::size_t width,
                              const CertifyOptions &options)
{
    if (alpha.is_zero()) {
        throw std::invalid_argument("certify_pth_power needs a nonzero tuple");
    }
    auto cert = certify_power_sum(alpha.scaled(p), p, width, options);
    if (cert.constructive) {
        CertStep step;
        step.kind = StepKind::frobenius;
        step.tuple = alpha;
        cert.trace.insert(cert.trace.begin(), step);
    }
    return cert;
}

VerifyResult verify(const Certificate &cert)
{
    VerifyResult result;
    if (!is_prime(cert.p) || cert.p > max_prime) {
        result.report = fmt::format("p = {} is not a supported prime", cert.p);
        return result;
    }
    if (cert.target.length() > cert.width) {
        result.report = "target is wider than the certificate width";
        return result;
    }
    const auto shape = Shape::ring(cert.p, cert.width);
    Poly sum(shape);
    for (const auto &[factors, coeff] : cert.terms.terms()) {
        Poly product = Poly::one(shape);
        ExpTuple degree;
        for (const auto &beta : factors) {
            if (beta.is_zero() || beta.degree() > cert.p || beta.length() > cert.width) {
                result.report = "invalid generator E" + beta.to_string();
                return result;
            }
            degree = degree + beta;
            product = mul(product, elementary(beta, cert.p, cert.width));
        }
        if (degree != cert.target) {
            result.report = fmt::format("term of multidegree {} in a certificate for M{}", degree.to_string(),
                                        cert.target.to_string());
            return result;
        }
        sum.add_scaled(product, coeff);
    }
    const auto expected = power_sum(cert.target, cert.p, cert.width);
    if (sum == expected) {
        result.ok = true;
        result.report = fmt::format("verified: {} terms re-expand to M{}", cert.terms.size(),
                                    cert.target.to_string());
        return result;
    }
    const auto diff = sum - expected;
    const auto &lead = diff.leading();
    result.report = fmt::format("mismatch in {} monomials; first at {} (expansion minus target = {})", diff.size(),
                                Poly::monomial(shape, lead.mono).to_string(), lead.coeff);
    return result;
}

std::optional<ElementaryExpr> replay(const Certificate &cert)
{
    if (!cert.constructive) {
        return std::nullopt;
    }
    const PrimeField F(cert.p);
    std::vector<ElementaryExpr> stack;
    try {
        for (const auto &step : cert.trace) {
            switch (step.kind) {
            case StepKind::base_case:
                stack.push_back(power_to_elementary_one_column(step.power, 0, cert.p));
                break;
            case StepKind::merge:
            case StepKind::frobenius:
                break;
            case StepKind::flatten: {
                if (stack.empty()) {
                    return std::nullopt;
                }
                const Coeff scale = F.binomial(step.merged[step.column], step.moved);
                auto top = polarize_expr(stack.back(), PolarizationOp{step.column, step.column + 1, step.moved});
                stack.back() = top.scaled(F.inv(scale));
                break;
            }
            case StepKind::newton_rewrite: {
                const std::size_t k = step.inner.size();
                if (stack.size() < k || step.coeffs.size() != k || step.generators.size() != k) {
                    return std::nullopt;
                }
                ElementaryExpr out(cert.p);
                for (std::size_t j = 0; j < k; ++j) {
                    out += ElementaryExpr::generator(cert.p, step.generators[j], step.coeffs[j])
                           * stack[stack.size() - k + j];
                }
                stack.erase(stack.end() - static_cast<std::ptrdiff_t>(k), stack.end());
                stack.push_back(std::move(out));
                break;
            }
            }
        }
    } catch (const std::exception &) {
        return std::nullopt;
    }
    if (stack.size() != 1) {
        return std::nullopt;
    }
    return stack.front();
}

nlohmann::json Certificate::to_json() const
{
    nlohmann::json j;
    j["p"] = p;
    j["width"] = width;
    j["target"] = tuple_json(target);
    j["constructive"] = constructive;
    auto &jt = j["terms"] = nlohmann::json::array();
    for (const auto &[factors, coeff] : terms.terms()) {
        nlohmann::json f = nlohmann::json::array();
        for (const auto &b : factors) {
            f.push_back(tuple_json(b));
        }
        jt.push_back({{"coeff", coeff}, {"factors", f}});
    }
    auto &js = j["trace"] = nlohmann::json::array();
    for (const auto &s : trace) {
        nlohmann::json params;
        switch (s.kind) {
        case StepKind::base_case:
            params["column"] = 1;
            params["power"] = s.power;
            break;
        case StepKind::merge:
            params["tuple"] = tuple_json(s.tuple);
            params["merged"] = tuple_json(s.merged);
            break;
        case StepKind::flatten:
            params["tuple"] = tuple_json(s.tuple);
            params["merged"] = tuple_json(s.merged);
            params["column"] = s.column + 1;
            params["moved"] = s.moved;
            break;
        case StepKind::newton_rewrite: {
            params["tuple"] = tuple_json(s.tuple);
            params["column"] = s.column + 1;
            auto &parts = params["parts"] = nlohmann::json::array();
            for (std::size_t k = 0; k < s.inner.size(); ++k) {
                parts.push_back({{"coeff", s.coeffs[k]},
                                 {"generator", tuple_json(s.generators[k])},
                                 {"inner", tuple_json(s.inner[k])}});
            }
            break;
        }
        case StepKind::frobenius:
            params["tuple"] = tuple_json(s.tuple);
            break;
        }
        js.push_back({{"kind", to_string(s.kind)}, {"params", params}});
    }
    return j;
}

Certificate Certificate::from_json(const nlohmann::json &j)
{
    Certificate c;
    c.p = j.at("p").get<std::uint32_t>();
    if (!is_prime(c.p) || c.p > max_prime) {
        throw std::invalid_argument(fmt::format("certificate prime {} is not supported", c.p));
    }
    c.width = j.at("width").get<std::size_t>();
    c.target = tuple_from_json(j.at("target"));
    c.constructive = j.value("constructive", true);
    c.terms = ElementaryExpr(c.p);
    const PrimeField F(c.p);
    for (const auto &t : j.at("terms")) {
        ElementaryExpr::Product factors;
        for (const auto &f : t.at("factors")) {
            factors.push_back(tuple_from_json(f));
        }
        c.terms.add_term(std::move(factors), F.from_int(t.at("coeff").get<std::int64_t>()));
    }
    if (j.contains("trace")) {
        for (const auto &js : j.at("trace")) {
            CertStep s;
            s.kind = step_kind_from_string(js.at("kind").get<std::string>());
            const auto &params = js.at("params");
            auto column = [&] {
                auto v = params.at("column").get<std::size_t>();
                if (v == 0) {
                    throw std::invalid_argument("certificate columns are 1-based");
                }
                return v - 1;
            };
            switch (s.kind) {
            case StepKind::base_case:
                s.power = params.at("power").get<std::uint64_t>();
                s.tuple = ExpTuple{static_cast<ExpTuple::value_type>(s.power)};
                break;
            case StepKind::merge:
                s.tuple = tuple_from_json(params.at("tuple"));
                s.merged = tuple_from_json(params.at("merged"));
                break;
            case StepKind::flatten:
                s.tuple = tuple_from_json(params.at("tuple"));
                s.merged = tuple_from_json(params.at("merged"));
                s.column = column();
                s.moved = params.at("moved").get<std::uint32_t>();
                break;
            case StepKind::newton_rewrite:
                s.tuple = tuple_from_json(params.at("tuple"));
                s.column = column();
                for (const auto &part : params.at("parts")) {
                    s.coeffs.push_back(F.from_int(part.at("coeff").get<std::int64_t>()));
                    s.generators.push_back(tuple_from_json(part.at("generator")));
                    s.inner.push_back(tuple_from_json(part.at("inner")));
                }
                break;
            case StepKind::frobenius:
                s.tuple = tuple_from_json(params.at("tuple"));
                break;
            }
            c.trace.push_back(std::move(s));
        }
    }
    return c;
}

} // namespace msym
