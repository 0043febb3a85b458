#ifndef MULTISYM_EXPR_HPP
#define MULTISYM_EXPR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <multisym/poly.hpp>

namespace msym
{

class ParseError : public std::invalid_argument
{
public:
    ParseError(const std::string &message, std::size_t position);

    /// 0-based offset into the input.
    std::size_t position() const noexcept
    {
        return m_position;
    }

private:
    std::size_t m_position;
};

/// Evaluates an expression in the ring with p rows and the given width.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := '-' unary | power
///   power   := atom ('^' integer)?
///   atom    := integer | '(' expr ')' | 'M(' tuple ')' | 'E(' tuple ')' | 'Ep(' col ')'
///            | 'x[' row ',' col ']' | 'frobenius(' expr ')' | 'psi(' expr ')'
///            | 'polarize(' expr ',' a ',' b ',' i ')'
///
/// Rows and columns are 1-based. Semantic errors (width, degree, invariance)
/// surface as std::invalid_argument.
Poly evaluate(std::string_view text, std::uint32_t p, std::size_t width);

/// "M(a,b)" or "E(a,b)" (with a scalar prefix when needed) if f is a multiple
/// of a single power sum or elementary multisymmetric polynomial; "0" for zero.
std::optional<std::string> recognize(const Poly &f);

} // namespace msym

#endif
