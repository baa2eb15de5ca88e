#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "tensorsq/crystal.hpp"
#include "tensorsq/weightlat.hpp"

using namespace tensorsq;

namespace {

ColoredDiagram D(std::initializer_list<int> rows, int n) { return ColoredDiagram(Partition::from_rows(rows), n); }

std::vector<ColoredDiagram> regular_diagrams(int n, int max_boxes)
{
    std::vector<ColoredDiagram> out;
    for (int m = 0; m <= max_boxes; ++m)
        for (const auto &r : oracle::partitions(m))
            if (oracle::regular(r, n))
                out.emplace_back(Partition::from_rows(std::span<const int>(r)), n);
    return out;
}

} // namespace

TEST_CASE("signature parsing and reduction")
{
    CHECK(reduce(Signature::parse("+-")).to_string() == "");
    CHECK(reduce(Signature::parse("-+")).to_string() == "-+");
    CHECK(reduce(Signature::parse("++--")).to_string() == "");
    CHECK(reduce(Signature::parse("-+-++-")).to_string() == "-+");
    CHECK(Signature::parse("+-+").count(Sign::plus) == 2);
    CHECK_THROWS(Signature::parse("+x"));
}

TEST_CASE("reduced signatures have all minuses first")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        std::string s;
        const int len = static_cast<int>(rng() % 12);
        for (int k = 0; k < len; ++k)
            s += (rng() & 1) ? '+' : '-';
        const std::string r = reduce(Signature::parse(s)).to_string();
        const auto first_plus = r.find('+');
        CHECK((first_plus == std::string::npos || r.find('-', first_plus) == std::string::npos));
    }
}

TEST_CASE("signature examples")
{
    const Signature s = i_signature(D({4, 3, 2}, 3), 0);
    bool minus_at_column_4 = false;
    for (const auto &e : s.entries())
        minus_at_column_4 = minus_at_column_4 || (e.col == 4 && e.sign == Sign::minus);
    CHECK(minus_at_column_4);
    CHECK(i_signature(D({}, 3), 0).to_string() == "+");
    CHECK(i_signature(D({}, 3), 1).to_string() == "");
    CHECK(i_signature(D({}, 3), 2).to_string() == "");
}

TEST_CASE("Kashiwara operators on small diagrams")
{
    CHECK(e_tilde(D({1}, 3), 0) == D({}, 3));
    for (int i = 0; i < 3; ++i)
        CHECK_FALSE(e_tilde(D({}, 3), i).has_value());
    CHECK(e_tilde(D({4, 1, 1}, 3), 0) == D({3, 1, 1}, 3));
    CHECK(f_tilde(D({}, 3), 0) == D({1}, 3));
    CHECK_FALSE(f_tilde(D({}, 3), 1).has_value());
    CHECK_FALSE(f_tilde(D({}, 3), 2).has_value());
    CHECK(f_tilde(D({1}, 2), 1) == D({2}, 2));
}

TEST_CASE("epsilon and phi")
{
    CHECK(epsilon(D({}, 3), 0) == 0);
    CHECK(phi(D({}, 3), 0) == 1);
    CHECK(epsilon(D({4, 1, 1}, 3), 0) == 1);
    CHECK(epsilon(D({4, 1, 1}, 3), 0) == oracle::epsilon({4, 1, 1}, 3, 0));
}

TEST_CASE("maximality examples")
{
    CHECK(is_maximal_second_factor(D({4, 3, 2}, 3)));
    CHECK(is_maximal_second_factor(D({7, 1, 1}, 3)));
    CHECK_FALSE(is_maximal_second_factor(D({2}, 3)));
    CHECK(is_maximal_second_factor(D({}, 3)));
}

TEST_CASE("non-regular or charged diagrams are rejected")
{
    CHECK_THROWS(i_signature(D({1, 1, 1}, 3), 0));
    CHECK_THROWS(i_signature(ColoredDiagram(Partition::from_rows({2}), 3, 1), 0));
}

TEST_CASE("operator properties over all small regular diagrams")
{
    for (int n = 2; n <= 5; ++n)
        for (const auto &d : regular_diagrams(n, 10))
            for (int i = 0; i < n; ++i) {
                const int eps = epsilon(d, i);
                CHECK(eps == oracle::epsilon(d.shape().rows(), n, i));

                // phi - epsilon = <wt, h_i>
                CHECK(phi(d, i) - eps == weight_of(d).lambda(i));

                if (auto up = f_tilde(d, i)) {
                    CHECK(e_tilde(*up, i) == d);
                    CHECK(weight_of(*up) == weight_of(d) - simple_root(i, n));
                    CHECK(up->shape().boxes() == d.shape().boxes() + 1);
                }
                if (auto down = e_tilde(d, i)) {
                    CHECK(f_tilde(*down, i) == d);
                    CHECK(weight_of(*down) == weight_of(d) + simple_root(i, n));
                }

                int depth = 0;
                std::optional<ColoredDiagram> cur = d;
                while ((cur = e_tilde(*cur, i)))
                    ++depth;
                CHECK(depth == eps);
            }
}

TEST_CASE("every regular diagram is reached from the empty one")
{
    for (int n = 2; n <= 4; ++n)
        for (const auto &d : regular_diagrams(n, 9)) {
            std::optional<ColoredDiagram> cur = d;
            int steps = 0;
            while (cur && !cur->shape().empty()) {
                std::optional<ColoredDiagram> next;
                for (int i = 0; i < n && !next; ++i)
                    next = e_tilde(*cur, i);
                REQUIRE_MESSAGE(next.has_value(), d.shape().to_string() << " is stuck at n=" << n);
                cur = next;
                ++steps;
            }
            CHECK(steps == d.shape().boxes());
        }
}

TEST_CASE("maximality oracle equivalence up to 12 boxes")
{
    for (int n = 2; n <= 5; ++n)
        for (int m = 0; m <= 12; ++m)
            for (const auto &r : oracle::partitions(m)) {
                const Partition p = Partition::from_rows(std::span<const int>(r));
                if (!oracle::regular(r, n)) {
                    CHECK_FALSE(in_C_n(p, n));
                    continue;
                }
                const ColoredDiagram d(p, n);
                const bool crystal = is_maximal_second_factor(d);
                CHECK_MESSAGE(crystal == in_C_n(p, n), p.to_string() << " n=" << n);
                CHECK(crystal == oracle::maximal(r, n));
                CHECK(crystal == satisfies_column_pairing(d));
            }
}
