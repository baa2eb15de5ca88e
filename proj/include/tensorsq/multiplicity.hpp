#ifndef TENSORSQ_MULTIPLICITY_HPP
#define TENSORSQ_MULTIPLICITY_HPP

#include <cstdint>
#include <unordered_map>
#include <span>
#include <stdexcept>
#include <vector>

#include "tensorsq/qseries.hpp"
#include "tensorsq/weightlat.hpp"
#include "tensorsq/young.hpp"

namespace tensorsq {

/// The theta pipeline was asked for a modulus outside the proven cases
/// without opting into the conjectural construction.
class UnsupportedModulus : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct MultiplicityEntry {
    ComponentLabel label;
    std::vector<Partition> witnesses; // canonical order

    std::size_t count() const { return witnesses.size(); }
    friend bool operator==(const MultiplicityEntry &, const MultiplicityEntry &) = default;
};

/*
 * Outer multiplicities b_ik of V(Lambda_i + Lambda_{n-i} - k delta) in the
 * tensor square of V(Lambda_0), for 0 <= i <= n/2 and i <= k <= max_k, with
 * every maximal element kept as a witness.
 */
class MultiplicityTable
{
public:
    MultiplicityTable(int n, int max_k, std::vector<MultiplicityEntry> entries);

    int modulus() const { return n_; }
    int max_k() const { return max_k_; }
    std::span<const MultiplicityEntry> entries() const { return entries_; }

    // 0 for (i, k) outside the table's range.
    std::size_t b(int i, int k) const;
    const MultiplicityEntry *find(int i, int k) const;

    friend bool operator==(const MultiplicityTable &, const MultiplicityTable &) = default;

private:
    int n_;
    int max_k_;
    std::vector<MultiplicityEntry> entries_; // ordered by (i, k)
};

MultiplicityTable b_table(int n, int max_k);

/*
 * Counts of C_n members with `boxes` cells by component index i, computed by
 * a memoized recursion instead of listing them. counts[i] for 0 <= i <= n/2.
 */
class MaximalCounter
{
public:
    explicit MaximalCounter(int n);
    std::vector<Integer> counts(int boxes);

private:
    using Counts = std::vector<std::uint64_t>;

    const Counts &completions(int remaining, int last_part, int last_mult, int rows_mod_n);
    Counts leaf(int last_part, int last_mult, int rows_mod_n) const;

    int n_;
    std::size_t classes_;
    std::unordered_map<std::uint64_t, Counts> memo_;
};

// B_i(q) = sum_{k >= i} b_ik q^{k-i}, from enumeration.
QSeries B_comb(int i, int n, long order);
QSeries B_comb(int i, const MultiplicityTable &table, long order);

// Phi_in(q) = q^{i^2} g(q^{2i+1}, q^{n+1-2i}).
QSeries Phi(int i, int n, long order);

// Psi_ijn(q) = h(q^{n(n+3)/2 - 2i - (n+2)j}, q^{n(n+1)/2 + 2i + (n+2)j}),
// with h = f for even n and g for odd n.
QSeries Psi(int i, int j, int n, long order);

enum class ThetaBranch { odd_prime, twice_prime, conjectural };

ThetaBranch theta_branch(int n);

struct ThetaMatrix {
    int n = 0;
    ThetaBranch branch = ThetaBranch::conjectural;
    SeriesMatrix entries;

    std::size_t size() const { return entries.size(); }
};

// Coefficient matrix of the linear system A (B_0, ..., B_m)^T = (phi, 0, ..., 0)^T
// obtained by splitting the master identity into residue classes of
// exponents mod n and substituting q -> q^{1/n}.
ThetaMatrix build_A(int n, long order, bool allow_conjecture = false);

// B_i(q) = (-1)^i phi(q) det(A without row 0 and column i) / det(A).
QSeries B_theta(int i, int n, long order, bool allow_conjecture = false);
std::vector<QSeries> B_theta_all(int n, long order, bool allow_conjecture = false);

// phi(q^n) = sum_i q^{i^2} g(q^{2i+1}, q^{n+1-2i}) B_i(q^n), coefficient-wise
// below `order`. B must hold B_0 .. B_{n/2}, each of order >= ceil(order/n).
bool verify_master(int n, long order, std::span<const QSeries> B);

// Both sides of the master identity, for reporting.
std::pair<QSeries, QSeries> master_sides(int n, long order, std::span<const QSeries> B);

} // namespace tensorsq

#endif
