#include "tensorsq/crystal.hpp"

#include <algorithm>
#include <stdexcept>

namespace tensorsq {

Signature::Signature(std::vector<SignatureEntry> entries) : entries_(std::move(entries))
{
    for (std::size_t k = 1; k < entries_.size(); ++k)
        if (entries_[k - 1].col <= entries_[k].col)
            throw std::invalid_argument("signature entries must be ordered right to left");
}

Signature Signature::parse(std::string_view symbols)
{
    std::vector<SignatureEntry> entries;
    for (char c : symbols) {
        if (c == ' ')
            continue;
        if (c != '+' && c != '-')
            throw std::invalid_argument("signature symbols must be '+' or '-'");
        entries.push_back({0, 0, c == '+' ? Sign::plus : Sign::minus});
    }
    int col = static_cast<int>(entries.size());
    for (auto &e : entries)
        e.col = col--;
    return Signature(std::move(entries));
}

std::size_t Signature::count(Sign s) const
{
    return static_cast<std::size_t>(
        std::ranges::count_if(entries_, [s](const SignatureEntry &e) { return e.sign == s; }));
}

std::string Signature::to_string() const
{
    std::string s;
    for (const auto &e : entries_)
        s += static_cast<char>(e.sign);
    return s;
}

namespace {

void require_crystal_element(const ColoredDiagram &d)
{
    if (d.charge() != 0)
        throw std::invalid_argument("crystal operators act on charge-0 diagrams");
    if (!is_n_regular(d.shape(), d.modulus()))
        throw std::invalid_argument("crystal operators act on n-regular diagrams");
}

} // namespace

Signature i_signature(const ColoredDiagram &d, int i)
{
    require_crystal_element(d);
    if (i < 0 || i >= d.modulus())
        throw std::invalid_argument("color out of range");

    const Partition &p = d.shape();
    auto pairs = p.pairs();
    std::vector<SignatureEntry> entries;

    // Corners of the shape, right to left. The block k ends at row s_k; its
    // last cell (s_k, lambda_k) is removable and the cell after the end of
    // row s_{k-1} + 1 is addable in column lambda_k + 1.
    int above = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const int lam = pairs[k].part;
        const int bottom = above + pairs[k].mult;
        if (d.color(above + 1, lam + 1) == i)
            entries.push_back({above + 1, lam + 1, Sign::plus});
        if (d.color(bottom, lam) == i)
            entries.push_back({bottom, lam, Sign::minus});
        above = bottom;
    }
    if (d.color(above + 1, 1) == i)
        entries.push_back({above + 1, 1, Sign::plus});
    return Signature(std::move(entries));
}

Signature reduce(const Signature &s)
{
    std::vector<SignatureEntry> stack;
    for (const auto &e : s.entries()) {
        if (e.sign == Sign::minus && !stack.empty() && stack.back().sign == Sign::plus)
            stack.pop_back();
        else
            stack.push_back(e);
    }
    return Signature(std::move(stack));
}

std::optional<ColoredDiagram> e_tilde(const ColoredDiagram &d, int i)
{
    auto reduced = reduce(i_signature(d, i));
    auto entries = reduced.entries();
    auto it = std::find_if(entries.rbegin(), entries.rend(),
                           [](const SignatureEntry &e) { return e.sign == Sign::minus; });
    if (it == entries.rend())
        return std::nullopt;
    return ColoredDiagram(d.shape().with_cell_removed(it->row), d.modulus(), d.charge());
}

std::optional<ColoredDiagram> f_tilde(const ColoredDiagram &d, int i)
{
    auto reduced = reduce(i_signature(d, i));
    auto entries = reduced.entries();
    auto it = std::ranges::find_if(entries, [](const SignatureEntry &e) { return e.sign == Sign::plus; });
    if (it == entries.end())
        return std::nullopt;
    return ColoredDiagram(d.shape().with_cell_added(it->row), d.modulus(), d.charge());
}

int epsilon(const ColoredDiagram &d, int i)
{
    return static_cast<int>(reduce(i_signature(d, i)).count(Sign::minus));
}

int phi(const ColoredDiagram &d, int i)
{
    return static_cast<int>(reduce(i_signature(d, i)).count(Sign::plus));
}

bool is_maximal_second_factor(const ColoredDiagram &d)
{
    for (int i = 0; i < d.modulus(); ++i)
        if (epsilon(d, i) > (i == 0 ? 1 : 0))
            return false;
    return true;
}

bool satisfies_column_pairing(const ColoredDiagram &d)
{
    require_crystal_element(d);
    auto pairs = d.shape().pairs();
    if (pairs.empty())
        return true;
    // First removable column from the right: column lambda_1, bottom row f_1.
    if (d.color(pairs[0].mult, pairs[0].part) != 0)
        return false;
    int above = 0;
    for (std::size_t k = 0; k + 1 < pairs.size(); ++k) {
        const int admissible = d.color(above + 1, pairs[k].part + 1);
        above += pairs[k].mult;
        const int removable = d.color(above + pairs[k + 1].mult, pairs[k + 1].part);
        if (admissible != removable)
            return false;
    }
    return true;
}

} // namespace tensorsq
