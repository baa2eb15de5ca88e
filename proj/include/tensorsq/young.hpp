#ifndef TENSORSQ_YOUNG_HPP
#define TENSORSQ_YOUNG_HPP

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace tensorsq {

/// Least nonnegative residue of a modulo n (n > 0).
constexpr int residue(long long a, int n)
{
    long long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

/// One block lambda^f of a partition: `mult` rows of length `part`.
struct PartPair {
    int part = 0;
    int mult = 0;
    friend bool operator==(const PartPair &, const PartPair &) = default;
};

/*
 * A partition in multiplicity form (lambda_1^{f_1}, ..., lambda_j^{f_j}) with
 * lambda_1 > ... > lambda_j > 0 and every f_k >= 1. The empty pair list is the
 * null partition.
 */
class Partition
{
public:
    Partition() = default;
    explicit Partition(std::vector<PartPair> pairs);

    // Accepts row lengths in nonincreasing order; zero rows are dropped.
    static Partition from_rows(std::span<const int> rows);
    static Partition from_rows(std::initializer_list<int> rows)
    {
        return from_rows(std::span<const int>(rows.begin(), rows.size()));
    }

    std::span<const PartPair> pairs() const { return pairs_; }
    std::size_t distinct_parts() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }
    int boxes() const { return boxes_; }
    int num_rows() const;

    // s_t = f_1 + ... + f_t, for 0 <= t <= distinct_parts().
    int partial_sum(std::size_t t) const;

    // 1-based; 0 below the last row.
    int row_length(int row) const;
    // 1-based; 0 right of the first row.
    int column_height(int col) const;

    std::vector<int> rows() const;

    // Shape with one cell appended to the end of `row` (1-based, may be
    // num_rows() + 1). The caller guarantees the result is a partition.
    Partition with_cell_added(int row) const;
    Partition with_cell_removed(int row) const;

    // "(4,1^2)"; the null partition prints as "()".
    std::string to_string() const;

    friend bool operator==(const Partition &, const Partition &) = default;

private:
    std::vector<PartPair> pairs_;
    int boxes_ = 0;
};

// Canonical order: lexicographically descending on the flattened row list.
bool canonical_before(const Partition &a, const Partition &b);

class ColoredDiagram
{
public:
    ColoredDiagram(Partition shape, int n, int charge = 0);

    const Partition &shape() const { return shape_; }
    int modulus() const { return n_; }
    int charge() const { return charge_; }
    int color(int row, int col) const;

    friend bool operator==(const ColoredDiagram &, const ColoredDiagram &) = default;

private:
    Partition shape_;
    int n_;
    int charge_;
};

// Color of the cell in row `row` (from the top) and column `col` (from the
// left), both 1-based: (col - row + charge) mod n.
int color_of(int row, int col, int charge, int n);

bool is_n_regular(const Partition &p, int n);

// Membership in C_n: f_k < n, f_1 = lambda_1 (mod n), and
// f_k + f_{k+1} + lambda_k - lambda_{k+1} = 0 (mod n).
bool in_C_n(const Partition &p, int n);

// All members of C_n with exactly `boxes` cells, in canonical order.
std::vector<Partition> enumerate_C_n(int n, int boxes);

// Entry t counts the cells of color t.
std::vector<int> color_counts(const ColoredDiagram &d);

} // namespace tensorsq

#endif
