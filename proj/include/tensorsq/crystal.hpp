#ifndef TENSORSQ_CRYSTAL_HPP
#define TENSORSQ_CRYSTAL_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tensorsq/young.hpp"

namespace tensorsq {

enum class Sign : char { plus = '+', minus = '-' };

/// A signature symbol together with the cell it refers to: the cell that
/// would be added (+) or removed (-).
struct SignatureEntry {
    int row = 0;
    int col = 0;
    Sign sign = Sign::plus;
    friend bool operator==(const SignatureEntry &, const SignatureEntry &) = default;
};

/*
 * An i-signature: entries read right to left over the columns of a diagram
 * (strictly decreasing column index).
 */
class Signature
{
public:
    Signature() = default;
    explicit Signature(std::vector<SignatureEntry> entries);

    // Builds a signature from a string of '+'/'-' (spaces ignored), assigning
    // decreasing column indices; handy for exercising `reduce` on its own.
    static Signature parse(std::string_view symbols);

    std::span<const SignatureEntry> entries() const { return entries_; }
    std::size_t count(Sign s) const;
    std::string to_string() const;

    friend bool operator==(const Signature &, const Signature &) = default;

private:
    std::vector<SignatureEntry> entries_;
};

// Every i-addable cell contributes '+', every i-removable cell '-'.
// The input must be an n-regular diagram of charge 0.
Signature i_signature(const ColoredDiagram &d, int i);

// Cancels adjacent "+-" pairs until the string reads "-...-+...+".
Signature reduce(const Signature &s);

std::optional<ColoredDiagram> e_tilde(const ColoredDiagram &d, int i);
std::optional<ColoredDiagram> f_tilde(const ColoredDiagram &d, int i);

int epsilon(const ColoredDiagram &d, int i);
int phi(const ColoredDiagram &d, int i);

// With the first tensor factor forced to the null diagram, the element
// null (x) d is maximal iff epsilon_i(d) <= [i == 0] for every color i.
bool is_maximal_second_factor(const ColoredDiagram &d);

// Structural form of the same test: the first removable column from the
// right is 0-removable, and the k-th admissible column from the right has the
// color of the (k+1)-st removable column whenever the latter exists.
bool satisfies_column_pairing(const ColoredDiagram &d);

} // namespace tensorsq

#endif
