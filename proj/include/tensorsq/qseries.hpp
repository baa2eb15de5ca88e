#ifndef TENSORSQ_QSERIES_HPP
#define TENSORSQ_QSERIES_HPP

#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tensorsq {

using Integer = mpz_class;

/// Raised when two series of different truncation order are combined, or a
/// precondition on the shape of a series fails (non-unit, bad exponent).
class SeriesError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/*
 * A truncated Laurent series sum_{e < order} c_e q^e with exact integer
 * coefficients. Coefficients are stored densely from `lowest()` up to
 * `order() - 1`; leading zeros are stripped, and the zero series has no
 * coefficients and lowest() == 0.
 *
 * Addition and subtraction require equal orders. A product is kept up to
 * min(Na, Nb, Na + vb, Nb + va), where v is the lowest exponent: below that
 * every coefficient is determined by the known parts of both factors.
 * Multiplication by q^m moves the order by m (a series known mod q^N times
 * q^m is known mod q^{N+m}).
 */
class QSeries
{
public:
    QSeries() = default;

    static QSeries zero(long order);
    static QSeries one(long order);
    static QSeries monomial(const Integer &c, long exponent, long order);
    static QSeries from_coeffs(long lowest, std::vector<Integer> coeffs, long order);

    long lowest() const { return lowest_; }
    long order() const { return order_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Coefficient of q^e; throws if e >= order().
    Integer coeff(long e) const;
    std::span<const Integer> coeffs() const { return coeffs_; }

    QSeries operator-() const;
    QSeries &operator+=(const QSeries &o);
    QSeries &operator-=(const QSeries &o);
    QSeries &operator*=(const QSeries &o);
    friend QSeries operator+(QSeries a, const QSeries &b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries &b) { return a -= b; }
    friend QSeries operator*(QSeries a, const QSeries &b) { return a *= b; }

    QSeries scaled(const Integer &c) const;
    // q^m * this; the order becomes order() + m.
    QSeries shifted(long m) const;
    QSeries truncated(long order) const;
    // q -> q^n.
    QSeries dilated(long n) const;
    // q -> q^{1/p}; throws SeriesError if a nonzero coefficient sits at an
    // exponent that is not a multiple of p.
    QSeries contracted(long p) const;

    // "1 - q - q^2 + O(q^5)".
    std::string to_string() const;

    friend bool operator==(const QSeries &, const QSeries &) = default;

private:
    QSeries(long lowest, std::vector<Integer> coeffs, long order);
    void normalize();
    void require_same_order(const QSeries &o) const;

    long lowest_ = 0;
    std::vector<Integer> coeffs_;
    long order_ = 0;
};

/// First exponent below min(a.order(), b.order()) where a and b differ.
std::optional<long> first_difference(const QSeries &a, const QSeries &b);

// Multiplicative inverse of a series with lowest() == 0 and constant term +-1.
QSeries invert(const QSeries &a);

// Exact quotient num / den where den's lowest coefficient is +-1. The
// result's order drops by den.lowest().
QSeries divide(const QSeries &num, const QSeries &den);

// prod_{j >= 1} (1 - q^{stride j}).
QSeries euler_phi(long order, long stride = 1);

// f(q^r, q^s) = sum_j q^{r j(j-1)/2 + s j(j+1)/2}; requires r + s > 0.
QSeries theta_f(long r, long s, long order);
// g(q^r, q^s) = sum_j (-1)^j q^{r j(j-1)/2 + s j(j+1)/2}; requires r + s > 0.
QSeries theta_g(long r, long s, long order);

// Product sides of the Jacobi triple product, u = q^r, v = q^s, r, s >= 0.
QSeries triple_product_f(long r, long s, long order);
QSeries triple_product_g(long r, long s, long order);

// Checks f(q^r,q^s) = q^r f(q^{2r+s},q^{-r}) and g(q^r,q^s) = -q^r g(q^{2r+s},q^{-r}).
bool transform_check(long r, long s, long order);

using SeriesMatrix = std::vector<std::vector<QSeries>>;

// Laplace expansion along rows, memoized over column subsets.
QSeries det(const SeriesMatrix &m);

// prod over j >= 1 with (j mod m) not in `excluded` of 1 / (1 - q^j).
QSeries restricted_partition_gf(const std::set<int> &excluded, int modulus, long order);

} // namespace tensorsq

#endif
