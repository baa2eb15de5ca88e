#include "tensorsq/identities.hpp"

#include <algorithm>
#include <vector>

#include "tensorsq/multiplicity.hpp"
#include "tensorsq/young.hpp"

namespace tensorsq {

std::optional<Discrepancy> compare_series(const std::string &where, const QSeries &lhs, const QSeries &rhs)
{
    if (auto e = first_difference(lhs, rhs))
        return Discrepancy{where, *e, lhs.coeff(*e), rhs.coeff(*e)};
    return std::nullopt;
}

namespace {

// q^shift f(q^r, q^s) and q^shift g(q^r, q^s) at a fixed final order.
struct Theta {
    long order;
    QSeries f(long r, long s, long shift = 0) const { return theta_f(r, s, order - shift).shifted(shift); }
    QSeries g(long r, long s, long shift = 0) const { return theta_g(r, s, order - shift).shifted(shift); }
};

IdentityReport make_report(std::string name, long order, std::initializer_list<std::optional<Discrepancy>> checks)
{
    IdentityReport r{std::move(name), order, std::nullopt};
    for (const auto &c : checks)
        if (c) {
            r.first_discrepancy = c;
            break;
        }
    return r;
}

} // namespace

QSeries sumform_n2(int i, long order)
{
    if (i != 0 && i != 1)
        throw std::invalid_argument("n = 2 sum forms exist for i = 0, 1");
    if (order < 1)
        return QSeries::zero(order);
    // partial holds 1 / prod_{k <= used} (1 - q^k).
    std::vector<Integer> partial(static_cast<std::size_t>(order));
    partial[0] = 1;
    long used = 0;
    std::vector<Integer> total(static_cast<std::size_t>(order));
    for (long m = 0;; ++m) {
        const long e = 2 * m * m + (i == 1 ? 2 * m : 0);
        if (e >= order)
            break;
        const long depth = 2 * m + i;
        for (; used < depth; ) {
            ++used;
            for (long k = used; k < order; ++k)
                partial[static_cast<std::size_t>(k)] += partial[static_cast<std::size_t>(k - used)];
        }
        for (long k = e; k < order; ++k)
            total[static_cast<std::size_t>(k)] += partial[static_cast<std::size_t>(k - e)];
    }
    return QSeries::from_coeffs(0, std::move(total), order);
}

QSeries d2_series(long order)
{
    Theta t{order};
    const QSeries a = t.f(5, 3);
    const Theta t1{order - 1};
    const QSeries b = t1.f(1, 7);
    return a * a - (b * b).shifted(1);
}

QSeries d3_series(long order)
{
    Theta t{order};
    const QSeries first = t.g(6, 9) * (t.g(7, 8) - t.g(2, 13, 1));
    const Theta t1{order - 1};
    const QSeries second = t1.g(12, 3) * (t1.g(11, 4) + t1.g(1, 14, 1));
    return first - second.shifted(1);
}

IdentityReport check_sum_forms_n2(long order)
{
    Theta t{order};
    const QSeries phi = euler_phi(order);
    const QSeries d2 = d2_series(order);
    return make_report("sum-forms-n2", order,
                       {compare_series("i=0", sumform_n2(0, order), divide(phi * t.f(5, 3), d2)),
                        compare_series("i=1", sumform_n2(1, order), divide(phi * t.f(1, 7), d2))});
}

IdentityReport check_d2_product(long order)
{
    return make_report("d2-product", order,
                       {compare_series("D2", d2_series(order), euler_phi(order) * euler_phi(order, 2))});
}

IdentityReport check_feingold_forms(long order)
{
    Theta t{order};
    const QSeries phi = euler_phi(order);
    const QSeries phi2 = euler_phi(order, 2);
    return make_report(
        "feingold-forms", order,
        {compare_series("i=0", divide(t.f(5, 3), phi2), divide(t.f(11, 13) - t.f(5, 19, 1), phi)),
         compare_series("i=1", divide(t.f(1, 7), phi2), divide(t.f(7, 17) - t.f(1, 23, 2), phi))});
}

IdentityReport check_d3_square(long order)
{
    Theta t{order};
    const QSeries phi = euler_phi(order);
    const QSeries square = phi * phi;
    // Coset expansion of the double pentagonal sum.
    const QSeries coset = t.g(7, 8) * t.g(6, 9) - t.g(4, 11, 1) * t.g(3, 12) - t.g(1, 14, 2) * t.g(3, 12) -
                          t.g(6, 9, 1) * t.g(2, 13) + t.g(5, 10, 2) * t.g(0, 15);
    return make_report("d3-square", order,
                       {compare_series("D3 printed", d3_series(order), square),
                        compare_series("det A (n=3)", det(build_A(3, order).entries), square),
                        compare_series("g(q^5,q^10) g(1,q^15)", t.g(5, 10) * t.g(0, 15), QSeries::zero(order)),
                        compare_series("coset expansion", coset, square)});
}

namespace {

Integer count_class(int n, int boxes, int i)
{
    if (boxes < 0)
        return 0;
    Integer c = 0;
    for (const auto &p : enumerate_C_n(n, boxes))
        if (classify_maximal(p, n).i == i)
            ++c;
    return c;
}

struct Mod15Series {
    QSeries no_0_7, no_0_2, no_0_4, no_0_1;
    explicit Mod15Series(long order)
        : no_0_7(restricted_partition_gf({0, 7, 8}, 15, order)),
          no_0_2(restricted_partition_gf({0, 2, 13}, 15, order)),
          no_0_4(restricted_partition_gf({0, 4, 11}, 15, order)),
          no_0_1(restricted_partition_gf({0, 1, 14}, 15, order))
    {
    }

    static Integer at(const QSeries &s, long m) { return m < 0 ? Integer(0) : s.coeff(m); }

    Integer c(long k) const { return at(no_0_7, k) - at(no_0_2, k - 1); }
    Integer d(long k) const { return k < 1 ? Integer(0) : at(no_0_4, k - 1) + at(no_0_1, k - 2); }
};

} // namespace

Mod15Counts a_b_c_d(int k)
{
    if (k < 0)
        throw std::invalid_argument("k must be nonnegative");
    const Mod15Series series(k + 1);
    Mod15Counts out;
    out.a = count_class(3, 3 * k, 0);
    out.b = k >= 1 ? count_class(3, 3 * k - 2, 1) : Integer(0);
    out.c = series.c(k);
    out.d = series.d(k);
    return out;
}

IdentityReport check_mod15_identities(int max_k)
{
    IdentityReport report{"mod15-partitions", max_k, std::nullopt};
    const Mod15Series series(max_k + 1);
    for (int k = 0; k <= max_k && report.holds(); ++k) {
        const Integer a = count_class(3, 3 * k, 0);
        const Integer c = series.c(k);
        if (a != c) {
            report.first_discrepancy = Discrepancy{"a=c", k, a, c};
            break;
        }
        if (k >= 1) {
            const Integer b = count_class(3, 3 * k - 2, 1);
            const Integer d = series.d(k);
            if (b != d)
                report.first_discrepancy = Discrepancy{"b=d", k, b, d};
        }
    }
    return report;
}

IdentityReport check_master(int n, long order)
{
    const long inner = (order + n - 1) / n;
    std::vector<QSeries> B;
    for (int i = 0; i <= n / 2; ++i)
        B.push_back(B_comb(i, n, std::max(inner, 1L)));
    auto [lhs, rhs] = master_sides(n, order, B);
    return make_report("master n=" + std::to_string(n), order, {compare_series("phi(q^n)", lhs, rhs)});
}

IdentityReport check_triple_products(long order, int max_rs)
{
    IdentityReport report{"triple-product", order, std::nullopt};
    for (long r = 0; r <= max_rs && report.holds(); ++r)
        for (long s = 0; s <= max_rs && report.holds(); ++s) {
            if (r + s == 0)
                continue;
            const std::string args = "(q^" + std::to_string(r) + ",q^" + std::to_string(s) + ")";
            report.first_discrepancy = compare_series("f" + args, theta_f(r, s, order), triple_product_f(r, s, order));
            if (!report.first_discrepancy)
                report.first_discrepancy =
                    compare_series("g" + args, theta_g(r, s, order), triple_product_g(r, s, order));
        }
    if (report.holds())
        report.first_discrepancy = compare_series("g(q,q^2) = phi", theta_g(1, 2, order), euler_phi(order));
    return report;
}

} // namespace tensorsq
