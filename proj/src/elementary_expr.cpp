#include <multisym/elementary_expr.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include <multisym/symmetric.hpp>

namespace msym
{

ElementaryExpr::ElementaryExpr(std::uint32_t p) : m_field(p) {}

ElementaryExpr ElementaryExpr::constant(std::uint32_t p, Coeff c)
{
    ElementaryExpr out(p);
    out.add_term({}, c);
    return out;
}

ElementaryExpr ElementaryExpr::generator(std::uint32_t p, const ExpTuple &beta, Coeff c)
{
    if (beta.is_zero() || beta.degree() > p) {
        throw std::invalid_argument("elementary generator " + beta.to_string() + " needs 0 < |beta| <= p");
    }
    ElementaryExpr out(p);
    out.add_term({beta}, c);
    return out;
}

void ElementaryExpr::add_term(Product factors, Coeff c)
{
    c %= m_field.characteristic();
    if (c == 0) {
        return;
    }
    std::sort(factors.begin(), factors.end());
    auto [it, inserted] = m_terms.try_emplace(std::move(factors), c);
    if (!inserted) {
        it->second = m_field.add(it->second, c);
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

ElementaryExpr &ElementaryExpr::operator+=(const ElementaryExpr &other)
{
    if (!(m_field == other.m_field)) {
        throw std::invalid_argument("adding expressions over different fields");
    }
    for (const auto &[prod, c] : other.m_terms) {
        add_term(prod, c);
    }
    return *this;
}

ElementaryExpr ElementaryExpr::scaled(Coeff c) const
{
    ElementaryExpr out(m_field.characteristic());
    c %= m_field.characteristic();
    if (c == 0) {
        return out;
    }
    for (const auto &[prod, v] : m_terms) {
        out.m_terms.emplace(prod, m_field.mul(v, c));
    }
    return out;
}

ElementaryExpr operator*(const ElementaryExpr &a, const ElementaryExpr &b)
{
    if (!(a.m_field == b.m_field)) {
        throw std::invalid_argument("multiplying expressions over different fields");
    }
    ElementaryExpr out(a.m_field.characteristic());
    for (const auto &[pa, ca] : a.m_terms) {
        for (const auto &[pb, cb] : b.m_terms) {
            ElementaryExpr::Product prod;
            prod.reserve(pa.size() + pb.size());
            std::merge(pa.begin(), pa.end(), pb.begin(), pb.end(), std::back_inserter(prod));
            out.add_term(std::move(prod), a.m_field.mul(ca, cb));
        }
    }
    return out;
}

std::size_t ElementaryExpr::required_width() const noexcept
{
    std::size_t w = 0;
    for (const auto &[prod, c] : m_terms) {
        for (const auto &beta : prod) {
            w = std::max(w, beta.length());
        }
    }
    return w;
}

std::optional<std::uint64_t> ElementaryExpr::homogeneous_degree() const
{
    std::optional<std::uint64_t> deg;
    for (const auto &[prod, c] : m_terms) {
        std::uint64_t d = 0;
        for (const auto &beta : prod) {
            d += beta.degree();
        }
        if (deg && *deg != d) {
            return std::nullopt;
        }
        deg = d;
    }
    return deg;
}

namespace
{

// Products are sorted, so terms sharing a prefix are contiguous in the map;
// each shared prefix is multiplied out once.
struct PrefixExpander {
    std::uint32_t p;
    std::size_t width;
    std::map<ExpTuple, Poly> generators;
    std::vector<std::pair<const ElementaryExpr::Product *, Coeff>> items;

    const Poly &gen(const ExpTuple &beta)
    {
        auto it = generators.find(beta);
        if (it == generators.end()) {
            it = generators.emplace(beta, elementary(beta, p, width)).first;
        }
        return it->second;
    }

    std::unordered_map<Monomial, Coeff, MonomialHash> acc;

    void run(const Poly &prefix, std::size_t depth, std::size_t lo, std::size_t hi)
    {
        const auto &F = prefix.field();
        std::size_t i = lo;
        while (i < hi) {
            const auto &prod = *items[i].first;
            if (prod.size() == depth) {
                for (const auto &t : prefix.terms()) {
                    auto &slot = acc[t.mono];
                    slot = F.add(slot, F.mul(t.coeff, items[i].second));
                }
                ++i;
                continue;
            }
            const auto &beta = prod[depth];
            std::size_t j = i;
            while (j < hi && items[j].first->size() > depth && (*items[j].first)[depth] == beta) {
                ++j;
            }
            run(prefix * gen(beta), depth + 1, i, j);
            i = j;
        }
    }
};

} // namespace

Poly ElementaryExpr::expand(std::size_t width) const
{
    auto shape = Shape::ring(m_field.characteristic(), width);
    if (required_width() > width) {
        throw std::invalid_argument("expression uses columns beyond width " + std::to_string(width));
    }
    PrefixExpander ex{m_field.characteristic(), width, {}, {}, {}};
    ex.items.reserve(m_terms.size());
    for (const auto &[prod, c] : m_terms) {
        ex.items.emplace_back(&prod, c);
    }
    ex.run(Poly::one(shape), 0, 0, ex.items.size());
    std::vector<Term> terms;
    terms.reserve(ex.acc.size());
    for (auto &[m, c] : ex.acc) {
        if (c != 0) {
            terms.push_back({m, c});
        }
    }
    return Poly::from_terms(shape, std::move(terms));
}

} // namespace msym
