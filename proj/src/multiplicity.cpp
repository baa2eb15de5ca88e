#include "tensorsq/multiplicity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace tensorsq {

MultiplicityTable::MultiplicityTable(int n, int max_k, std::vector<MultiplicityEntry> entries)
    : n_(n), max_k_(max_k), entries_(std::move(entries))
{
    std::ranges::sort(entries_, {}, &MultiplicityEntry::label);
    for (const auto &e : entries_)
        if (e.label.k < e.label.i || e.label.i < 0 || e.label.i > n / 2 || e.label.k > max_k)
            throw std::invalid_argument("multiplicity entry out of range");
}

const MultiplicityEntry *MultiplicityTable::find(int i, int k) const
{
    auto it = std::ranges::lower_bound(entries_, ComponentLabel{i, k}, {}, &MultiplicityEntry::label);
    if (it == entries_.end() || it->label != ComponentLabel{i, k})
        return nullptr;
    return &*it;
}

std::size_t MultiplicityTable::b(int i, int k) const
{
    const auto *e = find(i, k);
    return e ? e->count() : 0;
}

MultiplicityTable b_table(int n, int max_k)
{
    if (n < 2)
        throw std::invalid_argument("modulus must be at least 2");
    if (max_k < 0)
        throw std::invalid_argument("max_k must be nonnegative");

    std::map<ComponentLabel, std::vector<Partition>> buckets;
    std::set<int> box_counts;
    for (int i = 0; i <= n / 2; ++i)
        for (int k = i; k <= max_k; ++k) {
            buckets[{i, k}];
            box_counts.insert(i * i + (k - i) * n);
        }

    // Different (i, k) can share a box count, so classification decides.
    for (int boxes : box_counts)
        for (auto &p : enumerate_C_n(n, boxes)) {
            auto label = classify_maximal(p, n);
            if (auto it = buckets.find(label); it != buckets.end())
                it->second.push_back(std::move(p));
        }

    std::vector<MultiplicityEntry> entries;
    entries.reserve(buckets.size());
    for (auto &[label, witnesses] : buckets)
        entries.push_back({label, std::move(witnesses)});
    return MultiplicityTable(n, max_k, std::move(entries));
}

MaximalCounter::MaximalCounter(int n) : n_(n), classes_(static_cast<std::size_t>(n / 2 + 1))
{
    if (n < 2)
        throw std::invalid_argument("modulus must be at least 2");
}

MaximalCounter::Counts MaximalCounter::leaf(int last_part, int last_mult, int rows_mod_n) const
{
    Counts c(classes_, 0);
    const int i = std::min(residue(static_cast<long long>(last_part) - (rows_mod_n - last_mult), n_),
                           residue(-static_cast<long long>(rows_mod_n), n_));
    c[static_cast<std::size_t>(i)] = 1;
    return c;
}

const MaximalCounter::Counts &MaximalCounter::completions(int remaining, int last_part, int last_mult,
                                                           int rows_mod_n)
{
    const std::uint64_t key = (static_cast<std::uint64_t>(remaining) << 40) |
                              (static_cast<std::uint64_t>(last_part) << 16) |
                              (static_cast<std::uint64_t>(last_mult) << 8) |
                              static_cast<std::uint64_t>(rows_mod_n);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;

    Counts total(classes_, 0);
    if (remaining == 0) {
        total = leaf(last_part, last_mult, rows_mod_n);
    } else {
        for (int g = 1; g < n_; ++g) {
            // Next part lam < last_part with lam = last_part + last_mult + g (mod n).
            const int target = residue(static_cast<long long>(last_part) + last_mult + g, n_);
            int lam = last_part - 1 - residue(static_cast<long long>(last_part - 1) - target, n_);
            for (; lam >= 1; lam -= n_) {
                if (static_cast<long long>(lam) * g > remaining)
                    continue;
                const auto &sub = completions(remaining - lam * g, lam, g, (rows_mod_n + g) % n_);
                for (std::size_t c = 0; c < classes_; ++c)
                    if (__builtin_add_overflow(total[c], sub[c], &total[c]))
                        throw std::overflow_error("maximal element count exceeds 64 bits");
            }
        }
    }
    return memo_.emplace(key, std::move(total)).first->second;
}

std::vector<Integer> MaximalCounter::counts(int boxes)
{
    if (boxes < 0)
        throw std::invalid_argument("box count must be nonnegative");
    std::vector<Integer> out(classes_, 0);
    if (boxes == 0) {
        out[0] = 1;
        return out;
    }
    for (int f = 1; f < n_; ++f)
        for (int lam = f; lam * f <= boxes; lam += n_) {
            const auto sub = completions(boxes - lam * f, lam, f, f % n_);
            for (std::size_t c = 0; c < classes_; ++c)
                out[c] += Integer(static_cast<unsigned long>(sub[c]));
        }
    return out;
}

QSeries B_comb(int i, int n, long order)
{
    if (i < 0 || i > n / 2)
        throw std::invalid_argument("component index out of range");
    MaximalCounter counter(n);
    std::vector<Integer> c(static_cast<std::size_t>(std::max(order, 0L)));
    for (long d = 0; d < order; ++d) {
        // k = i + d, boxes = i^2 + d n. Other classes sharing the box count
        // are dropped here.
        auto counts = counter.counts(static_cast<int>(i * i + d * n));
        c[static_cast<std::size_t>(d)] = counts[static_cast<std::size_t>(i)];
    }
    return QSeries::from_coeffs(0, std::move(c), order);
}

QSeries B_comb(int i, const MultiplicityTable &table, long order)
{
    if (i < 0 || i > table.modulus() / 2)
        throw std::invalid_argument("component index out of range");
    if (i + order - 1 > table.max_k())
        throw std::invalid_argument("multiplicity table too short for order " + std::to_string(order));
    std::vector<Integer> c(static_cast<std::size_t>(std::max(order, 0L)));
    for (long d = 0; d < order; ++d)
        c[static_cast<std::size_t>(d)] = static_cast<unsigned long>(table.b(i, static_cast<int>(i + d)));
    return QSeries::from_coeffs(0, std::move(c), order);
}

QSeries Phi(int i, int n, long order)
{
    if (i < 0 || i > n / 2)
        throw std::invalid_argument("component index out of range");
    const long shift = static_cast<long>(i) * i;
    return theta_g(2 * i + 1, n + 1 - 2 * i, order - shift).shifted(shift);
}

QSeries Psi(int i, int j, int n, long order)
{
    if (j < 0 || j >= n)
        throw std::invalid_argument("residue index out of range");
    const long r = static_cast<long>(n) * (n + 3) / 2 - 2L * i - static_cast<long>(n + 2) * j;
    const long s = static_cast<long>(n) * (n + 1) / 2 + 2L * i + static_cast<long>(n + 2) * j;
    if (r + s <= 0)
        throw std::logic_error("Psi exponent sum must be positive");
    return n % 2 == 0 ? theta_f(r, s, order) : theta_g(r, s, order);
}

namespace {

bool is_prime(int p)
{
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

long ceil_div_pos(long a, long b)
{
    return a <= 0 ? -((-a) / b) : (a + b - 1) / b;
}

// (-1)^j q^{n j(j-1)/2 + (i+j)^2} Psi_ijn(q^n), then restricted to its residue
// class r = (i+j)^2 mod n and mapped through q -> q^{1/n}.
QSeries separated_term(int i, int j, int n, long order)
{
    const long big = order * n;
    const long e = static_cast<long>(n) * j * (j - 1) / 2 + static_cast<long>(i + j) * (i + j);
    const int r = residue(static_cast<long long>(i + j) * (i + j), n);
    QSeries term = Psi(i, j, n, ceil_div_pos(big - e, n)).dilated(n).shifted(e).truncated(big);
    if (j % 2 != 0)
        term = -term;
    return term.shifted(-r).contracted(n).truncated(order);
}

} // namespace

ThetaBranch theta_branch(int n)
{
    if (n % 2 == 1 && is_prime(n))
        return ThetaBranch::odd_prime;
    if (n % 2 == 0 && (n == 2 || (is_prime(n / 2) && n / 2 % 2 == 1)))
        return ThetaBranch::twice_prime;
    return ThetaBranch::conjectural;
}

ThetaMatrix build_A(int n, long order, bool allow_conjecture)
{
    if (n < 2)
        throw std::invalid_argument("modulus must be at least 2");
    ThetaMatrix a{n, theta_branch(n), {}};
    if (a.branch == ThetaBranch::conjectural && !allow_conjecture)
        throw UnsupportedModulus("the theta construction is only established for odd primes and twice "
                                 "an odd prime (or 2); n = " +
                                 std::to_string(n) + " needs the conjecture flag");

    const int m = n / 2 + 1;
    a.entries.assign(static_cast<std::size_t>(m), std::vector<QSeries>(static_cast<std::size_t>(m)));
    for (int t = 0; t < m; ++t)
        for (int i = 0; i < m; ++i) {
            std::set<int> js{residue(t - i, n), residue(-t - i, n)};
            QSeries entry = QSeries::zero(order);
            for (int j : js)
                entry += separated_term(i, j, n, order);
            if (!entry.is_zero() && entry.lowest() < 0)
                throw std::logic_error("matrix entry with negative valuation at row " + std::to_string(t));
            a.entries[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)] = std::move(entry);
        }
    return a;
}

std::vector<QSeries> B_theta_all(int n, long order, bool allow_conjecture)
{
    // Rows other than row 0 have zero right-hand side, so a common power of q
    // can be divided out of each without changing the solution.
    ThetaMatrix a = build_A(n, order, allow_conjecture);
    std::vector<long> row_val(a.size(), 0);
    long slack = 0;
    for (std::size_t r = 1; r < a.size(); ++r) {
        long v = -1;
        for (const QSeries &e : a.entries[r])
            if (!e.is_zero())
                v = v < 0 ? e.lowest() : std::min(v, e.lowest());
        row_val[r] = std::max(v, 0L);
        slack = std::max(slack, row_val[r]);
    }
    if (slack > 0) {
        a = build_A(n, order + slack, allow_conjecture);
        for (std::size_t r = 0; r < a.size(); ++r)
            for (QSeries &e : a.entries[r])
                e = e.shifted(-row_val[r]).truncated(order);
    }
    const QSeries denominator = det(a.entries);
    if (a.branch != ThetaBranch::conjectural &&
        (denominator.is_zero() || denominator.lowest() != 0 || abs(denominator.coeff(0)) != 1))
        throw SeriesError("det(A) is not a unit power series for n = " + std::to_string(n));

    const QSeries phi_q = euler_phi(order);
    const std::size_t m = a.size();
    std::vector<QSeries> out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        QSeries cofactor = QSeries::one(order);
        if (m > 1) {
            SeriesMatrix minor;
            for (std::size_t r = 1; r < m; ++r) {
                std::vector<QSeries> row;
                for (std::size_t c = 0; c < m; ++c)
                    if (c != i)
                        row.push_back(a.entries[r][c]);
                minor.push_back(std::move(row));
            }
            cofactor = det(minor);
        }
        QSeries numerator = phi_q * cofactor;
        if (i % 2 != 0)
            numerator = -numerator;
        out.push_back(divide(numerator, denominator));
    }
    return out;
}

QSeries B_theta(int i, int n, long order, bool allow_conjecture)
{
    if (i < 0 || i > n / 2)
        throw std::invalid_argument("component index out of range");
    return B_theta_all(n, order, allow_conjecture)[static_cast<std::size_t>(i)];
}

std::pair<QSeries, QSeries> master_sides(int n, long order, std::span<const QSeries> B)
{
    if (B.size() != static_cast<std::size_t>(n / 2 + 1))
        throw std::invalid_argument("expected one generating function per component index");
    QSeries lhs = euler_phi(order, n);
    QSeries rhs = QSeries::zero(order);
    for (int i = 0; i <= n / 2; ++i) {
        const QSeries &b = B[static_cast<std::size_t>(i)];
        if (b.order() * n < order)
            throw std::invalid_argument("B_" + std::to_string(i) + " is too short for order " +
                                        std::to_string(order));
        rhs += Phi(i, n, order) * b.dilated(n).truncated(order);
    }
    return {std::move(lhs), std::move(rhs)};
}

bool verify_master(int n, long order, std::span<const QSeries> B)
{
    auto [lhs, rhs] = master_sides(n, order, B);
    return lhs == rhs;
}

} // namespace tensorsq
