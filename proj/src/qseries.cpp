#include "tensorsq/qseries.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace tensorsq {

namespace {

// floor(a / b) for b > 0.
long floor_div(long a, long b)
{
    long q = a / b;
    return (a % b != 0 && a < 0) ? q - 1 : q;
}

long ceil_div(long a, long b)
{
    return -floor_div(-a, b);
}

} // namespace

QSeries::QSeries(long lowest, std::vector<Integer> coeffs, long order)
    : lowest_(lowest), coeffs_(std::move(coeffs)), order_(order)
{
    normalize();
}

void QSeries::normalize()
{
    if (lowest_ >= order_) {
        coeffs_.clear();
    } else if (static_cast<long>(coeffs_.size()) > order_ - lowest_) {
        coeffs_.resize(static_cast<std::size_t>(order_ - lowest_));
    }
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer &c) { return c != 0; });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        lowest_ = 0;
        return;
    }
    lowest_ += static_cast<long>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    coeffs_.resize(static_cast<std::size_t>(order_ - lowest_));
}

QSeries QSeries::zero(long order)
{
    return QSeries(0, {}, order);
}

QSeries QSeries::one(long order)
{
    return monomial(1, 0, order);
}

QSeries QSeries::monomial(const Integer &c, long exponent, long order)
{
    return QSeries(exponent, {c}, order);
}

QSeries QSeries::from_coeffs(long lowest, std::vector<Integer> coeffs, long order)
{
    return QSeries(lowest, std::move(coeffs), order);
}

Integer QSeries::coeff(long e) const
{
    if (e >= order_)
        throw SeriesError("coefficient q^" + std::to_string(e) + " is beyond the truncation order " +
                          std::to_string(order_));
    if (e < lowest_ || coeffs_.empty())
        return 0;
    return coeffs_[static_cast<std::size_t>(e - lowest_)];
}

void QSeries::require_same_order(const QSeries &o) const
{
    if (order_ != o.order_)
        throw SeriesError("truncation order mismatch: " + std::to_string(order_) + " vs " +
                          std::to_string(o.order_));
}

QSeries QSeries::operator-() const
{
    QSeries r = *this;
    for (auto &c : r.coeffs_)
        c = -c;
    return r;
}

QSeries &QSeries::operator+=(const QSeries &o)
{
    require_same_order(o);
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    const long lo = std::min(lowest_, o.lowest_);
    std::vector<Integer> out(static_cast<std::size_t>(order_ - lo));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        out[static_cast<std::size_t>(lowest_ - lo) + k] = coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        out[static_cast<std::size_t>(o.lowest_ - lo) + k] += o.coeffs_[k];
    *this = QSeries(lo, std::move(out), order_);
    return *this;
}

QSeries &QSeries::operator-=(const QSeries &o)
{
    return *this += -o;
}

QSeries &QSeries::operator*=(const QSeries &o)
{
    // Unknown tails start at each order plus the other factor's valuation.
    const long order = std::min({order_, o.order_, order_ + o.lowest_, o.order_ + lowest_});
    if (is_zero() || o.is_zero()) {
        *this = zero(order);
        return *this;
    }
    const long lo = lowest_ + o.lowest_;
    if (lo >= order) {
        *this = zero(order);
        return *this;
    }
    std::vector<Integer> out(static_cast<std::size_t>(order - lo));
    const long span = order - lo;
    for (std::size_t a = 0; a < coeffs_.size() && static_cast<long>(a) < span; ++a) {
        if (coeffs_[a] == 0)
            continue;
        const mpz_srcptr x = coeffs_[a].get_mpz_t();
        const std::size_t limit =
            std::min(o.coeffs_.size(), static_cast<std::size_t>(span - static_cast<long>(a)));
        for (std::size_t b = 0; b < limit; ++b) {
            if (o.coeffs_[b] == 0)
                continue;
            mpz_addmul(out[a + b].get_mpz_t(), x, o.coeffs_[b].get_mpz_t());
        }
    }
    *this = QSeries(lo, std::move(out), order);
    return *this;
}

QSeries QSeries::scaled(const Integer &c) const
{
    QSeries r = *this;
    for (auto &x : r.coeffs_)
        x *= c;
    r.normalize();
    return r;
}

QSeries QSeries::shifted(long m) const
{
    QSeries r = *this;
    r.order_ += m;
    if (!r.is_zero())
        r.lowest_ += m;
    return r;
}

QSeries QSeries::truncated(long order) const
{
    if (order > order_)
        throw SeriesError("cannot raise the truncation order from " + std::to_string(order_) + " to " +
                          std::to_string(order));
    return QSeries(lowest_, coeffs_, order);
}

QSeries QSeries::dilated(long n) const
{
    if (n < 1)
        throw SeriesError("dilation factor must be positive");
    if (is_zero())
        return zero(order_ * n);
    std::vector<Integer> out(static_cast<std::size_t>((static_cast<long>(coeffs_.size()) - 1) * n + 1));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        out[k * static_cast<std::size_t>(n)] = coeffs_[k];
    return QSeries(lowest_ * n, std::move(out), order_ * n);
}

QSeries QSeries::contracted(long p) const
{
    if (p < 1)
        throw SeriesError("contraction factor must be positive");
    const long order = ceil_div(order_, p);
    if (is_zero())
        return zero(order);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const long e = lowest_ + static_cast<long>(k);
        if (coeffs_[k] != 0 && e % p != 0)
            throw SeriesError("q -> q^(1/" + std::to_string(p) + ") applied to a series with a term at q^" +
                              std::to_string(e));
    }
    const long lo = lowest_ / p;
    std::vector<Integer> out(static_cast<std::size_t>(order - lo));
    for (std::size_t k = 0; k < out.size(); ++k) {
        const long src = (lo + static_cast<long>(k)) * p - lowest_;
        if (src < static_cast<long>(coeffs_.size()))
            out[k] = coeffs_[static_cast<std::size_t>(src)];
    }
    return QSeries(lo, std::move(out), order);
}

std::string QSeries::to_string() const
{
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Integer &c = coeffs_[k];
        if (c == 0)
            continue;
        const long e = lowest_ + static_cast<long>(k);
        Integer a = abs(c);
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (a != 1 || e == 0)
            s += a.get_str();
        if (e != 0)
            s += e == 1 ? "q" : "q^" + std::to_string(e);
    }
    if (!s.empty())
        s += " + ";
    return s + "O(q^" + std::to_string(order_) + ")";
}

std::optional<long> first_difference(const QSeries &a, const QSeries &b)
{
    const long order = std::min(a.order(), b.order());
    const long lo = std::min(a.is_zero() ? order : a.lowest(), b.is_zero() ? order : b.lowest());
    for (long e = lo; e < order; ++e)
        if (a.coeff(e) != b.coeff(e))
            return e;
    return std::nullopt;
}

QSeries invert(const QSeries &a)
{
    if (a.is_zero() || a.lowest() != 0 || abs(a.coeff(0)) != 1)
        throw SeriesError("only series with constant term +-1 are invertible");
    const long order = a.order();
    const auto ac = a.coeffs();
    const Integer unit = ac[0];
    std::vector<Integer> b(static_cast<std::size_t>(order));
    b[0] = unit;
    Integer acc;
    for (std::size_t k = 1; k < b.size(); ++k) {
        acc = 0;
        for (std::size_t j = 1; j <= k && j < ac.size(); ++j)
            if (ac[j] != 0)
                mpz_addmul(acc.get_mpz_t(), ac[j].get_mpz_t(), b[k - j].get_mpz_t());
        b[k] = -unit * acc;
    }
    return QSeries::from_coeffs(0, std::move(b), order);
}

QSeries divide(const QSeries &num, const QSeries &den)
{
    if (num.order() != den.order())
        throw SeriesError("truncation order mismatch in division");
    if (den.is_zero())
        throw SeriesError("division by the zero series");
    const long v = den.lowest();
    if (abs(den.coeff(v)) != 1)
        throw SeriesError("divisor's lowest coefficient is not a unit");
    return num.shifted(-v) * invert(den.shifted(-v));
}

QSeries euler_phi(long order, long stride)
{
    if (stride < 1)
        throw SeriesError("stride must be positive");
    if (order < 1)
        return QSeries::zero(order);
    std::vector<Integer> c(static_cast<std::size_t>(order));
    c[0] = 1;
    for (long e = stride; e < order; e += stride)
        for (long k = order - 1; k >= e; --k)
            if (c[static_cast<std::size_t>(k - e)] != 0)
                c[static_cast<std::size_t>(k)] -= c[static_cast<std::size_t>(k - e)];
    return QSeries::from_coeffs(0, std::move(c), order);
}

namespace {

long theta_exponent(long r, long s, long j)
{
    return r * j * (j - 1) / 2 + s * j * (j + 1) / 2;
}

QSeries theta_sum(long r, long s, long order, bool alternating)
{
    if (r + s <= 0)
        throw SeriesError("theta series needs r + s > 0, got r=" + std::to_string(r) + " s=" + std::to_string(s));
    // Exponents are convex in j with minimum near (r - s) / (2 (r + s)).
    const long j0 = floor_div(r - s, 2 * (r + s));
    const long lo = std::min(theta_exponent(r, s, j0), theta_exponent(r, s, j0 + 1));
    if (lo >= order)
        return QSeries::zero(order);
    std::vector<Integer> c(static_cast<std::size_t>(order - lo));
    auto add = [&](long j) {
        const long e = theta_exponent(r, s, j);
        if (e >= order)
            return false;
        auto &slot = c[static_cast<std::size_t>(e - lo)];
        if (alternating && (j % 2 != 0))
            --slot;
        else
            ++slot;
        return true;
    };
    for (long j = j0; add(j); --j) {
    }
    for (long j = j0 + 1; add(j); ++j) {
    }
    return QSeries::from_coeffs(lo, std::move(c), order);
}

// Multiplies the dense series c (exponents 0..order-1) by (1 + sign q^e).
void multiply_binomial(std::vector<Integer> &c, long e, int sign)
{
    if (e == 0) {
        for (auto &x : c)
            x *= (1 + sign);
        return;
    }
    for (long k = static_cast<long>(c.size()) - 1; k >= e; --k) {
        const auto &src = c[static_cast<std::size_t>(k - e)];
        if (src == 0)
            continue;
        if (sign > 0)
            c[static_cast<std::size_t>(k)] += src;
        else
            c[static_cast<std::size_t>(k)] -= src;
    }
}

QSeries triple_product(long r, long s, long order, int sign)
{
    if (r < 0 || s < 0 || r + s <= 0)
        throw SeriesError("triple product needs r, s >= 0 and r + s > 0");
    if (order < 1)
        return QSeries::zero(order);
    std::vector<Integer> c(static_cast<std::size_t>(order));
    c[0] = 1;
    for (long j = 1;; ++j) {
        const long e1 = (r + s) * j;
        const long e2 = r * (j - 1) + s * j;
        const long e3 = r * j + s * (j - 1);
        if (std::min({e1, e2, e3}) >= order)
            break;
        if (e1 < order)
            multiply_binomial(c, e1, -1);
        if (e2 < order)
            multiply_binomial(c, e2, sign);
        if (e3 < order)
            multiply_binomial(c, e3, sign);
    }
    return QSeries::from_coeffs(0, std::move(c), order);
}

} // namespace

QSeries theta_f(long r, long s, long order)
{
    return theta_sum(r, s, order, false);
}

QSeries theta_g(long r, long s, long order)
{
    return theta_sum(r, s, order, true);
}

QSeries triple_product_f(long r, long s, long order)
{
    return triple_product(r, s, order, +1);
}

QSeries triple_product_g(long r, long s, long order)
{
    return triple_product(r, s, order, -1);
}

bool transform_check(long r, long s, long order)
{
    const bool f_ok = theta_f(r, s, order) == theta_f(2 * r + s, -r, order - r).shifted(r);
    const bool g_ok = theta_g(r, s, order) == -theta_g(2 * r + s, -r, order - r).shifted(r);
    return f_ok && g_ok;
}

namespace {

QSeries add_truncating(const QSeries &a, const QSeries &b)
{
    const long order = std::min(a.order(), b.order());
    return a.truncated(order) + b.truncated(order);
}

} // namespace

QSeries det(const SeriesMatrix &m)
{
    const std::size_t size = m.size();
    if (size == 0)
        throw SeriesError("determinant of an empty matrix");
    if (size > 20)
        throw SeriesError("matrix too large for cofactor expansion");
    for (const auto &row : m)
        if (row.size() != size)
            throw SeriesError("determinant of a non-square matrix");
    const long order = m[0][0].order();
    for (const auto &row : m)
        for (const auto &x : row)
            if (x.order() != order)
                throw SeriesError("matrix entries have different truncation orders");

    // minors[mask]: determinant of the last popcount(mask) rows restricted
    // to the columns in mask.
    const std::uint32_t full = (1u << size) - 1;
    std::vector<std::optional<QSeries>> minors(static_cast<std::size_t>(full) + 1);
    minors[0] = QSeries::one(order);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const auto cols = static_cast<std::size_t>(std::popcount(mask));
        const std::size_t row = size - cols;
        std::optional<QSeries> acc;
        int position = 0;
        for (std::size_t c = 0; c < size; ++c) {
            if (!(mask & (1u << c)))
                continue;
            QSeries term = m[row][c] * *minors[mask & ~(1u << c)];
            if (position++ % 2 != 0)
                term = -term;
            acc = acc ? add_truncating(*acc, term) : term;
        }
        minors[mask] = std::move(acc);
    }
    return *minors[full];
}

QSeries restricted_partition_gf(const std::set<int> &excluded, int modulus, long order)
{
    if (modulus < 1)
        throw SeriesError("modulus must be positive");
    for (int r : excluded)
        if (r < 0 || r >= modulus)
            throw SeriesError("excluded residues must be reduced mod " + std::to_string(modulus));
    if (order < 1)
        return QSeries::zero(order);
    std::vector<Integer> c(static_cast<std::size_t>(order));
    c[0] = 1;
    for (long j = 1; j < order; ++j) {
        if (excluded.contains(static_cast<int>(j % modulus)))
            continue;
        for (long k = j; k < order; ++k)
            c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - j)];
    }
    return QSeries::from_coeffs(0, std::move(c), order);
}

} // namespace tensorsq
