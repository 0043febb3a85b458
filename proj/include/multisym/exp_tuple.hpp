#ifndef MULTISYM_EXP_TUPLE_HPP
#define MULTISYM_EXP_TUPLE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace msym
{

/// A finitely supported tuple of column exponents (a_1, a_2, ...).
///
/// Trailing zeros are never stored, so length() is the index of the last
/// nonzero entry and two tuples compare equal iff they agree entrywise.
/// Indexing is 0-based; reads past the end return 0.
class ExpTuple
{
public:
    using value_type = std::uint32_t;

    ExpTuple() = default;
    ExpTuple(std::initializer_list<value_type> entries);
    explicit ExpTuple(std::vector<value_type> entries);

    /// The unit tuple e_i (0-based column i).
    static ExpTuple unit(std::size_t column, value_type multiplicity = 1);
    /// (1, 1, ..., 1) with n ones.
    static ExpTuple ones(std::size_t n);

    value_type operator[](std::size_t i) const noexcept
    {
        return i < m_entries.size() ? m_entries[i] : 0;
    }
    std::size_t length() const noexcept
    {
        return m_entries.size();
    }
    std::uint64_t degree() const noexcept
    {
        return m_degree;
    }
    bool is_zero() const noexcept
    {
        return m_entries.empty();
    }
    const std::vector<value_type> &entries() const noexcept
    {
        return m_entries;
    }

    ExpTuple with(std::size_t i, value_type v) const;
    ExpTuple scaled(value_type factor) const;

    friend ExpTuple operator+(const ExpTuple &, const ExpTuple &);
    // Throws std::domain_error if any entry would go negative.
    friend ExpTuple operator-(const ExpTuple &, const ExpTuple &);

    friend bool operator==(const ExpTuple &a, const ExpTuple &b) noexcept
    {
        return a.m_entries == b.m_entries;
    }
    friend std::strong_ordering operator<=>(const ExpTuple &a, const ExpTuple &b) noexcept
    {
        return a.m_entries <=> b.m_entries;
    }

    /// "(a1,a2,...)"; the zero tuple prints as "(0)".
    std::string to_string() const;
    /// Accepts "(a1,...)", "a1,..." and "()" with optional whitespace.
    static ExpTuple parse(std::string_view text);

private:
    void normalize();

    std::vector<value_type> m_entries;
    std::uint64_t m_degree = 0;
};

/// Componentwise a <= b.
bool dominated_by(const ExpTuple &a, const ExpTuple &b) noexcept;

/// All tuples of the given degree with length <= width, in ascending order.
std::vector<ExpTuple> tuples_of_degree(std::uint64_t degree, std::size_t width);

} // namespace msym

#endif
