#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "tensorsq/qseries.hpp"

using namespace tensorsq;

namespace {

QSeries from(const std::vector<mpz_class> &c) { return QSeries::from_coeffs(0, c, static_cast<long>(c.size())); }

QSeries random_series(std::mt19937 &rng, long order)
{
    std::vector<Integer> c(static_cast<std::size_t>(order));
    for (auto &x : c)
        x = static_cast<int>(rng() % 21) - 10;
    const long lowest = static_cast<long>(rng() % 5) - 2;
    return QSeries::from_coeffs(lowest, std::move(c), order);
}

bool agree(const QSeries &x, const QSeries &y)
{
    const long o = std::min(x.order(), y.order());
    return x.truncated(o) == y.truncated(o);
}

QSeries add(const QSeries &x, const QSeries &y)
{
    const long o = std::min(x.order(), y.order());
    return x.truncated(o) + y.truncated(o);
}

} // namespace

TEST_CASE("normal form")
{
    const QSeries z = QSeries::from_coeffs(3, {0, 0}, 10);
    CHECK(z.is_zero());
    CHECK(z.lowest() == 0);
    CHECK(z == QSeries::zero(10));
    const QSeries a = QSeries::from_coeffs(-2, {0, 5, 0}, 4);
    CHECK(a.lowest() == -1);
    CHECK(a.coeff(-1) == 5);
    CHECK(a.coeff(-5) == 0);
    CHECK_THROWS_AS(a.coeff(4), SeriesError);
    CHECK(QSeries::from_coeffs(0, {1, 2, 3, 4}, 2).coeffs().size() == 2);
}

TEST_CASE("basic arithmetic")
{
    const long N = 20;
    const QSeries one_minus_q = QSeries::one(N) - QSeries::monomial(1, 1, N);
    QSeries geometric = QSeries::zero(N);
    for (long e = 0; e < N; ++e)
        geometric += QSeries::monomial(1, e, N);
    CHECK(one_minus_q * geometric == QSeries::one(N));
    CHECK(invert(one_minus_q) == geometric);
    CHECK(invert(QSeries::one(N)) == QSeries::one(N));
    const QSeries a = euler_phi(N);
    CHECK((a + (-a)).is_zero());
    CHECK_THROWS_AS(a + euler_phi(N + 1), SeriesError);
    CHECK_THROWS_AS(invert(QSeries::monomial(2, 0, N)), SeriesError);
}

TEST_CASE("multiplication matches a direct expansion")
{
    const auto phi = oracle::euler(50);
    CHECK(euler_phi(50) * euler_phi(50) == from(oracle::multiply(phi, phi)));
}

TEST_CASE("Laurent multiplication keeps only reliable coefficients")
{
    const QSeries a = QSeries::monomial(1, -2, 10) + QSeries::one(10);
    const QSeries b = QSeries::monomial(1, -1, 10) + QSeries::one(10);
    const QSeries p = a * b;
    CHECK(p.order() == 8);
    CHECK(p.coeff(-3) == 1);
    CHECK(p.coeff(0) == 1);
}

TEST_CASE("partition numbers")
{
    const QSeries p = invert(euler_phi(30));
    CHECK(p.coeff(5) == 7);
    for (int m = 0; m < 20; ++m)
        CHECK(p.coeff(m) == static_cast<long>(oracle::partitions(m).size()));
}

TEST_CASE("ring axioms on random samples")
{
    std::mt19937 rng(2024);
    const long N = 64;
    for (int t = 0; t < 100; ++t) {
        const QSeries a = random_series(rng, N), b = random_series(rng, N), c = random_series(rng, N);
        CHECK(agree((a * b) * c, a * (b * c)));
        CHECK(a * b == b * a);
        CHECK(agree(a * (b + c), add(a * b, a * c)));
        CHECK(agree(a + (b + c), (a + b) + c));
    }
}

TEST_CASE("Euler function")
{
    const QSeries phi = euler_phi(13);
    CHECK(phi == QSeries::from_coeffs(0, {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}, 13));
    CHECK(phi == from(oracle::euler(13)));
    CHECK(phi == theta_g(1, 2, 13));
    CHECK(euler_phi(1) == QSeries::one(1));
    const QSeries dilated = euler_phi(60, 4);
    for (long e = 0; e < 60; ++e)
        if (e % 4 != 0)
            CHECK(dilated.coeff(e) == 0);
    CHECK(dilated == euler_phi(15).dilated(4));
    CHECK(dilated.contracted(4) == euler_phi(15));
    CHECK_THROWS_AS(euler_phi(60).contracted(4), SeriesError);
}

TEST_CASE("theta series against direct summation")
{
    for (long r = 0; r <= 10; ++r)
        for (long s = 0; s <= 10; ++s) {
            if (r + s == 0)
                continue;
            CHECK(theta_f(r, s, 200) == from(oracle::theta(r, s, 200, false)));
            CHECK(theta_g(r, s, 200) == from(oracle::theta(r, s, 200, true)));
            CHECK(theta_f(r, s, 200) == theta_f(s, r, 200));
            CHECK(theta_g(r, s, 200) == theta_g(s, r, 200));
            CHECK(triple_product_f(r, s, 200) == theta_f(r, s, 200));
            CHECK(triple_product_g(r, s, 200) == theta_g(r, s, 200));
        }
    CHECK(theta_g(1, 2, 300) == euler_phi(300));
    CHECK(triple_product_g(1, 2, 300) == euler_phi(300));
    CHECK(triple_product_g(1, 1, 50).coeff(0) == 1);
    CHECK_THROWS(theta_f(3, -3, 10));
}

TEST_CASE("g vanishes with a zero argument exponent")
{
    for (long m = 1; m <= 30; ++m)
        CHECK(theta_g(0, m, 200).is_zero());
}

TEST_CASE("transformation law")
{
    CHECK(transform_check(-1, 9, 200));
    CHECK(transform_check(-3, 18, 200));
    CHECK(transform_check(1, 1, 200));
    for (long r = -5; r <= 10; ++r)
        for (long s = -20; s <= 20; ++s)
            if (r + s > 0)
                CHECK_MESSAGE(transform_check(r, s, 200), "r=" << r << " s=" << s);
    // f(q^-1, q^9) = q^-1 f(q^7, q)
    CHECK(theta_f(-1, 9, 100) == theta_f(7, 1, 101).shifted(-1));
    // g(q^-3, q^18) = -q^-3 g(q^12, q^3)
    CHECK(theta_g(-3, 18, 100) == -theta_g(12, 3, 103).shifted(-3));
}

TEST_CASE("determinants")
{
    const long N = 30;
    const QSeries a = theta_f(5, 3, N), b = theta_f(1, 7, N), c = euler_phi(N), d = theta_g(2, 13, N);
    CHECK(det({{a}}) == a);
    CHECK(det({{a, b}, {c, d}}) == a * d - b * c);
    const SeriesMatrix m3 = {{a, b, c}, {d, a, b}, {c, d, a}};
    const QSeries expected = a * (a * a - b * d) - b * (d * a - b * c) + c * (d * d - a * c);
    CHECK(det(m3) == expected);
    CHECK_THROWS(det({}));
    CHECK_THROWS(det({{a, b}}));
}

TEST_CASE("restricted partitions")
{
    CHECK(restricted_partition_gf({0, 7, 8}, 15, 10).coeff(0) == 1);
    std::set<int> all;
    for (int r = 0; r < 15; ++r)
        all.insert(r);
    CHECK(restricted_partition_gf(all, 15, 20) == QSeries::one(20));
    CHECK(restricted_partition_gf({}, 15, 10).coeff(5) == 7);
    const QSeries s = restricted_partition_gf({0, 4, 11}, 15, 25);
    for (int m = 0; m < 25; ++m)
        CHECK(s.coeff(m) == oracle::restricted_count(m, {0, 4, 11}));
}

TEST_CASE("rendering")
{
    CHECK(QSeries::zero(5).to_string() == "O(q^5)");
    CHECK(QSeries::from_coeffs(-1, {2, 0, -1}, 3).to_string() == "2q^-1 - q + O(q^3)");
}
