#include "tensorsq/young.hpp"

#include <algorithm>
#include <stdexcept>

namespace tensorsq {

Partition::Partition(std::vector<PartPair> pairs) : pairs_(std::move(pairs))
{
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
        if (pairs_[k].part <= 0 || pairs_[k].mult <= 0)
            throw std::invalid_argument("partition parts and multiplicities must be positive");
        if (k > 0 && pairs_[k - 1].part <= pairs_[k].part)
            throw std::invalid_argument("partition parts must be strictly decreasing");
        boxes_ += pairs_[k].part * pairs_[k].mult;
    }
}

Partition Partition::from_rows(std::span<const int> rows)
{
    std::vector<PartPair> pairs;
    int previous = -1;
    for (int r : rows) {
        if (r < 0 || (previous >= 0 && r > previous))
            throw std::invalid_argument("row lengths must be nonnegative and nonincreasing");
        previous = r;
        if (r == 0)
            continue;
        if (!pairs.empty() && pairs.back().part == r)
            ++pairs.back().mult;
        else
            pairs.push_back({r, 1});
    }
    return Partition(std::move(pairs));
}

int Partition::num_rows() const
{
    return partial_sum(pairs_.size());
}

int Partition::partial_sum(std::size_t t) const
{
    if (t > pairs_.size())
        throw std::out_of_range("partial sum index");
    int s = 0;
    for (std::size_t k = 0; k < t; ++k)
        s += pairs_[k].mult;
    return s;
}

int Partition::row_length(int row) const
{
    int s = 0;
    for (const auto &pp : pairs_) {
        s += pp.mult;
        if (row <= s)
            return pp.part;
    }
    return 0;
}

int Partition::column_height(int col) const
{
    int h = 0;
    for (const auto &pp : pairs_) {
        if (pp.part < col)
            break;
        h += pp.mult;
    }
    return h;
}

std::vector<int> Partition::rows() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(num_rows()));
    for (const auto &pp : pairs_)
        out.insert(out.end(), static_cast<std::size_t>(pp.mult), pp.part);
    return out;
}

Partition Partition::with_cell_added(int row) const
{
    auto r = rows();
    if (row < 1 || row > static_cast<int>(r.size()) + 1)
        throw std::out_of_range("row out of range");
    if (row == static_cast<int>(r.size()) + 1)
        r.push_back(1);
    else
        ++r[static_cast<std::size_t>(row - 1)];
    if (row > 1 && r[static_cast<std::size_t>(row - 2)] < r[static_cast<std::size_t>(row - 1)])
        throw std::invalid_argument("adding the cell does not leave a partition");
    return from_rows(r);
}

Partition Partition::with_cell_removed(int row) const
{
    auto r = rows();
    if (row < 1 || row > static_cast<int>(r.size()))
        throw std::out_of_range("row out of range");
    auto idx = static_cast<std::size_t>(row - 1);
    if (idx + 1 < r.size() && r[idx + 1] == r[idx])
        throw std::invalid_argument("removing the cell does not leave a partition");
    --r[idx];
    return from_rows(r);
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
        if (k)
            s += ',';
        s += std::to_string(pairs_[k].part);
        if (pairs_[k].mult > 1)
            s += '^' + std::to_string(pairs_[k].mult);
    }
    return s + ')';
}

bool canonical_before(const Partition &a, const Partition &b)
{
    auto ra = a.rows();
    auto rb = b.rows();
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end(), std::greater<>{});
}

ColoredDiagram::ColoredDiagram(Partition shape, int n, int charge)
    : shape_(std::move(shape)), n_(n), charge_(charge)
{
    if (n < 2)
        throw std::invalid_argument("modulus must be at least 2");
    if (charge < 0 || charge >= n)
        throw std::invalid_argument("charge must be a residue mod n");
}

int ColoredDiagram::color(int row, int col) const
{
    return color_of(row, col, charge_, n_);
}

int color_of(int row, int col, int charge, int n)
{
    return residue(static_cast<long long>(col) - row + charge, n);
}

bool is_n_regular(const Partition &p, int n)
{
    return std::ranges::all_of(p.pairs(), [n](const PartPair &pp) { return pp.mult <= n - 1; });
}

bool in_C_n(const Partition &p, int n)
{
    auto pairs = p.pairs();
    if (pairs.empty())
        return true;
    if (!is_n_regular(p, n))
        return false;
    if (residue(pairs[0].mult - pairs[0].part, n) != 0)
        return false;
    for (std::size_t k = 0; k + 1 < pairs.size(); ++k) {
        long long chain = static_cast<long long>(pairs[k].mult) + pairs[k + 1].mult + pairs[k].part -
                          pairs[k + 1].part;
        if (residue(chain, n) != 0)
            return false;
    }
    return true;
}

namespace {

struct CnSearch {
    int n;
    std::vector<PartPair> prefix;
    std::vector<Partition> out;

    // Largest box count reachable with parts < bound and multiplicities < n.
    long long capacity_below(int bound) const
    {
        return static_cast<long long>(n - 1) * bound * (bound - 1) / 2;
    }

    void extend(int remaining)
    {
        if (remaining == 0) {
            out.emplace_back(prefix);
            return;
        }
        const auto [last, f] = prefix.back();
        if (capacity_below(last) < remaining)
            return;
        for (int lam = last - 1; lam >= 1; --lam) {
            if (capacity_below(lam + 1) < remaining)
                break;
            for (int g = n - 1; g >= 1; --g) {
                if (residue(static_cast<long long>(f) + g + last - lam, n) != 0)
                    continue;
                if (static_cast<long long>(lam) * g > remaining)
                    continue;
                prefix.push_back({lam, g});
                extend(remaining - lam * g);
                prefix.pop_back();
            }
        }
    }
};

} // namespace

std::vector<Partition> enumerate_C_n(int n, int boxes)
{
    if (n < 2)
        throw std::invalid_argument("modulus must be at least 2");
    if (boxes < 0)
        throw std::invalid_argument("box count must be nonnegative");
    if (boxes == 0)
        return {Partition{}};
    CnSearch search{n, {}, {}};
    for (int lam = boxes; lam >= 1; --lam) {
        for (int f = n - 1; f >= 1; --f) {
            if (residue(f - lam, n) != 0 || static_cast<long long>(lam) * f > boxes)
                continue;
            search.prefix.assign(1, {lam, f});
            search.extend(boxes - lam * f);
        }
    }
    return std::move(search.out);
}

std::vector<int> color_counts(const ColoredDiagram &d)
{
    const int n = d.modulus();
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    int row = 0;
    for (const auto &pp : d.shape().pairs()) {
        for (int m = 0; m < pp.mult; ++m) {
            ++row;
            // Row `row` holds colors first, first+1, ..., first+len-1 (mod n).
            int first = d.color(row, 1);
            int full = pp.part / n;
            int rest = pp.part % n;
            for (int t = 0; t < n; ++t)
                counts[static_cast<std::size_t>(t)] += full;
            for (int c = 0; c < rest; ++c)
                ++counts[static_cast<std::size_t>(residue(first + c, n))];
        }
    }
    return counts;
}

} // namespace tensorsq
