#ifndef TENSORSQ_IDENTITIES_HPP
#define TENSORSQ_IDENTITIES_HPP

#include <optional>
#include <string>

#include "tensorsq/qseries.hpp"

namespace tensorsq {

struct Discrepancy {
    std::string where; // which side-by-side comparison failed
    long exponent = 0;
    Integer lhs;
    Integer rhs;
};

struct IdentityReport {
    std::string name;
    long order = 0;
    std::optional<Discrepancy> first_discrepancy;

    bool holds() const { return !first_discrepancy.has_value(); }
};

// Compares lhs and rhs below min(order) and records the first mismatch.
std::optional<Discrepancy> compare_series(const std::string &where, const QSeries &lhs, const QSeries &rhs);

/// sum_m q^{2m^2} / prod_{k<=2m} (1-q^k) for i = 0, and
/// sum_m q^{2m^2+2m} / prod_{k<=2m+1} (1-q^k) for i = 1.
QSeries sumform_n2(int i, long order);

// f(q^5,q^3)^2 - q f(q,q^7)^2.
QSeries d2_series(long order);
// g(q^6,q^9)(g(q^7,q^8) - q g(q^2,q^13)) - q g(q^12,q^3)(g(q^11,q^4) + q g(q,q^14)).
QSeries d3_series(long order);

// n = 2 sum forms against phi(q) f(q^5,q^3)/D2 and phi(q) f(q,q^7)/D2.
IdentityReport check_sum_forms_n2(long order);
// D2 = phi(q) phi(q^2).
IdentityReport check_d2_product(long order);
// f(q^5,q^3)/phi(q^2) = (f(q^11,q^13) - q f(q^5,q^19))/phi(q) and
// f(q,q^7)/phi(q^2) = (f(q^7,q^17) - q^2 f(q,q^23))/phi(q).
IdentityReport check_feingold_forms(long order);
// D3 = phi(q)^2, both as printed and as det(A) for n = 3; the vanishing of
// g(q^5,q^10) g(1,q^15); and the five-term coset expansion of phi(q)^2.
IdentityReport check_d3_square(long order);

struct Mod15Counts {
    Integer a, b, c, d;
};

// a(k), b(k) count maximal elements for n = 3 at 3k and 3k - 2 boxes in the
// i = 0 and i = 1 families; c(k), d(k) are differences/sums of mod-15
// restricted partition counts. b(0) and d(0) are reported as 0.
Mod15Counts a_b_c_d(int k);

// a(k) = c(k) for 0 <= k <= max_k and b(k) = d(k) for 1 <= k <= max_k.
IdentityReport check_mod15_identities(int max_k);

// The master identity with enumerated B_i, to the given order.
IdentityReport check_master(int n, long order);

// Sum and product forms of f, g for 0 <= r, s <= max_rs, and g(q,q^2) = phi(q).
IdentityReport check_triple_products(long order, int max_rs = 10);

} // namespace tensorsq

#endif
