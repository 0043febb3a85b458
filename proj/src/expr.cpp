#include <multisym/expr.hpp>

#include <cctype>
#include <vector>

#include <fmt/format.h>

#include <multisym/operators.hpp>
#include <multisym/symmetric.hpp>

namespace msym
{

ParseError::ParseError(const std::string &message, std::size_t position)
    : std::invalid_argument(fmt::format("parse error at position {}: {}", position + 1, message)),
      m_position(position)
{
}

namespace
{

class Parser
{
public:
    Parser(std::string_view text, std::uint32_t p, std::size_t width)
        : m_text(text), m_shape(Shape::ring(p, width))
    {
    }

    Poly parse()
    {
        auto f = expr();
        skip();
        if (m_pos != m_text.size()) {
            throw ParseError(fmt::format("unexpected '{}'", m_text[m_pos]), m_pos);
        }
        return f;
    }

private:
    void skip()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
    }

    bool accept(char c)
    {
        skip();
        if (m_pos < m_text.size() && m_text[m_pos] == c) {
            ++m_pos;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            throw ParseError(m_pos < m_text.size() ? fmt::format("expected '{}', found '{}'", c, m_text[m_pos])
                                                   : fmt::format("expected '{}' at end of input", c),
                             m_pos);
        }
    }

    std::uint64_t integer()
    {
        skip();
        const auto start = m_pos;
        std::uint64_t v = 0;
        while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
            if (v > (std::uint64_t(1) << 40)) {
                throw ParseError("integer too large", start);
            }
            v = v * 10 + static_cast<std::uint64_t>(m_text[m_pos] - '0');
            ++m_pos;
        }
        if (m_pos == start) {
            throw ParseError("expected an integer", start);
        }
        return v;
    }

    std::size_t index(const char *what)
    {
        skip();
        const auto at = m_pos;
        const auto v = integer();
        if (v == 0) {
            throw ParseError(fmt::format("{} indices are 1-based", what), at);
        }
        return static_cast<std::size_t>(v - 1);
    }

    std::string identifier()
    {
        skip();
        const auto start = m_pos;
        while (m_pos < m_text.size() && std::isalpha(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
        return std::string(m_text.substr(start, m_pos - start));
    }

    // Either "a,b,..." or "(a,b,...)" up to the closing parenthesis of the call.
    ExpTuple tuple()
    {
        const bool nested = accept('(');
        std::vector<ExpTuple::value_type> entries;
        skip();
        if (!(m_pos < m_text.size() && m_text[m_pos] == ')')) {
            do {
                entries.push_back(static_cast<ExpTuple::value_type>(integer()));
            } while (accept(','));
        }
        if (nested) {
            expect(')');
        }
        return ExpTuple(std::move(entries));
    }

    Poly expr()
    {
        auto f = term();
        while (true) {
            if (accept('+')) {
                f += term();
            } else if (accept('-')) {
                f -= term();
            } else {
                return f;
            }
        }
    }

    Poly term()
    {
        auto f = unary();
        while (accept('*')) {
            f = f * unary();
        }
        return f;
    }

    Poly unary()
    {
        if (accept('-')) {
            return -unary();
        }
        return power();
    }

    Poly power()
    {
        auto f = atom();
        if (accept('^')) {
            const auto at = m_pos;
            const auto e = integer();
            if (e > 64) {
                throw ParseError("exponent above 64", at);
            }
            f = pow(f, e);
        }
        return f;
    }

    Poly atom()
    {
        skip();
        const auto start = m_pos;
        if (m_pos >= m_text.size()) {
            throw ParseError("unexpected end of input", m_pos);
        }
        const char c = m_text[m_pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const auto v = integer();
            return Poly::constant(m_shape, static_cast<Coeff>(v % m_shape.p()));
        }
        if (accept('(')) {
            auto f = expr();
            expect(')');
            return f;
        }
        const auto name = identifier();
        const auto p = m_shape.p();
        const std::size_t width = m_shape.width;
        try {
            if (name == "x") {
                expect('[');
                const auto r = index("row");
                expect(',');
                const auto col = index("column");
                expect(']');
                if (r >= m_shape.rows || col >= width) {
                    throw ParseError(fmt::format("x[{},{}] is outside the {} x {} matrix", r + 1, col + 1,
                                                 m_shape.rows, width),
                                     start);
                }
                return Poly::variable(m_shape, r, col);
            }
            if (name == "M" || name == "E") {
                expect('(');
                auto alpha = tuple();
                expect(')');
                return name == "M" ? power_sum(alpha, p, width) : elementary(alpha, p, width);
            }
            if (name == "Ep") {
                expect('(');
                const auto col = index("column");
                expect(')');
                return elementary(ExpTuple::unit(col, p), p, width);
            }
            if (name == "frobenius" || name == "psi") {
                expect('(');
                auto f = expr();
                expect(')');
                return name == "psi" ? frobenius_split(f) : frobenius(f);
            }
            if (name == "polarize") {
                expect('(');
                auto f = expr();
                expect(',');
                const auto a = index("column");
                expect(',');
                const auto b = index("column");
                expect(',');
                const auto i = integer();
                expect(')');
                return polarize(f, PolarizationOp{a, b, static_cast<std::uint32_t>(i)});
            }
        } catch (const ParseError &) {
            throw;
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument(fmt::format("{} (in '{}' at position {})", e.what(), name, start + 1));
        }
        if (name.empty()) {
            throw ParseError(fmt::format("unexpected '{}'", c), start);
        }
        throw ParseError("unknown function '" + name + "'", start);
    }

    std::string_view m_text;
    Shape m_shape;
    std::size_t m_pos = 0;
};

std::string tuple_args(const ExpTuple &alpha)
{
    auto s = alpha.to_string();
    return s.substr(1, s.size() - 2);
}

} // namespace

Poly evaluate(std::string_view text, std::uint32_t p, std::size_t width)
{
    return Parser(text, p, width).parse();
}

std::optional<std::string> recognize(const Poly &f)
{
    if (f.is_zero()) {
        return "0";
    }
    const auto md = f.multidegree();
    if (!md || md->is_zero() || !is_invariant(f)) {
        return std::nullopt;
    }
    const auto p = f.shape().p();
    const auto width = f.shape().width;
    const auto &F = f.field();
    auto with_scalar = [&](const Poly &basis, const std::string &name) -> std::optional<std::string> {
        if (basis.is_zero()) {
            return std::nullopt;
        }
        const Coeff c = F.mul(f.leading().coeff, F.inv(basis.leading().coeff));
        if (basis.scaled(c) != f) {
            return std::nullopt;
        }
        return c == 1 ? name : fmt::format("{}*{}", c, name);
    };
    if (f.shape().rows == p) {
        if (auto s = with_scalar(power_sum(*md, p, width), "M(" + tuple_args(*md) + ")")) {
            return s;
        }
        if (md->degree() <= p) {
            if (auto s = with_scalar(elementary(*md, p, width), "E(" + tuple_args(*md) + ")")) {
                return s;
            }
        }
    }
    return std::nullopt;
}

} // namespace msym
