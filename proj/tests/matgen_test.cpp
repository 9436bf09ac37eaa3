#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "kaclab/tridiagonal.hpp"

using namespace kaclab;

TEST_CASE("integer matrix bands") {
    const auto m = clement(3);
    CHECK(m.order == 4);
    CHECK(m.superdiag == std::vector<double>{1, 2, 3});
    CHECK(m.subdiag == std::vector<double>{3, 2, 1});
    CHECK(m.label == "clement(n=3)");
    CHECK_THROWS_AS(clement(0), std::invalid_argument);
}

TEST_CASE("two-parameter bands, even order parameter") {
    const auto m = extended({4, 0.5, -0.5});
    CHECK(m.order == 5);
    CHECK(m.superdiag == std::vector<double>{1.5, 2, 3.5, 4});
    CHECK(m.subdiag == std::vector<double>{4, 2.5, 2, 0.5});
    CHECK(m.label == "extended(n=4,a=0.5,b=-0.5)");
}

TEST_CASE("two-parameter bands, odd order parameter") {
    const auto m = extended({3, 1.0, 1.0});
    CHECK(m.superdiag == std::vector<double>{2, 2, 4});
    CHECK(m.subdiag == std::vector<double>{4, 2, 2});

    const auto h = scale(m, 0.5);
    CHECK(h.superdiag == std::vector<double>{1, 1, 2});
    CHECK(h.subdiag == std::vector<double>{2, 1, 1});
    CHECK(h.label == "0.5*extended(n=3,a=1,b=1)");
}

TEST_CASE("a = b = 0 reduces to the integer matrix") {
    for (int n = 1; n <= 12; ++n) {
        const auto zero = extended({n, 0.0, 0.0});
        const auto cl = clement(n);
        CHECK(zero.superdiag == cl.superdiag);
        CHECK(zero.subdiag == cl.subdiag);
    }
}

TEST_CASE("corner entries carry parameters only at odd n") {
    for (double a : {-0.7, 2.3}) {
        for (double b : {-0.7, 2.3}) {
            const auto even = extended({4, a, b});
            CHECK(even.superdiag[3] == 4.0);
            CHECK(even.subdiag[0] == 4.0);
            CHECK(even.subdiag[1] == 3.0 + b);
            const auto odd = extended({5, a, b});
            CHECK(odd.superdiag[4] == 5.0 + a);
            CHECK(odd.subdiag[0] == 5.0 + b);
        }
    }
}

TEST_CASE("one-parameter family ties b to a by parity") {
    const auto even = special(2, 5.0);
    CHECK(even.superdiag == std::vector<double>{6, 2});
    CHECK(even.subdiag == std::vector<double>{2, -4});
    const auto odd = special(3, -2.0);
    CHECK(odd.superdiag == std::vector<double>{-1, 2, 1});
    CHECK(odd.subdiag == std::vector<double>{1, 2, -1});
    CHECK(odd.label == "special(n=3,a=-2)");
}

TEST_CASE("symmetrizing keeps the off-diagonal products") {
    const auto sym = symmetrize(extended({3, 1.0, 1.0}));
    REQUIRE(sym.order == 4);
    CHECK(sym.offdiag[0] == std::sqrt(8.0));
    CHECK(sym.offdiag[1] == 2.0);
    CHECK(sym.offdiag[2] == std::sqrt(8.0));
}

TEST_CASE("direct symmetric form agrees with symmetrizing bitwise") {
    for (int n = 1; n <= 8; ++n) {
        for (double a : {-0.5, 0.0, 1.7}) {
            for (double b : {-0.5, 0.0, 1.7}) {
                const auto direct = symmetric_extended({n, a, b});
                const auto indirect = symmetrize(extended({n, a, b}));
                REQUIRE(direct.order == indirect.order);
                for (int k = 0; k < n; ++k) CHECK(direct.offdiag[k] == indirect.offdiag[k]);
            }
        }
    }
}

TEST_CASE("non-positive products are rejected with position and value") {
    const auto m = extended({3, -5.0, 0.0});
    CHECK_THROWS_AS(symmetrize(m), NonPositiveProductError);
    try {
        symmetrize(m);
    } catch (const NonPositiveProductError& e) {
        CHECK(e.index() == 1);
        CHECK(e.product() == -12.0);
    }
    try {
        symmetrize(extended({1, -1.0, 0.0}));
        CHECK(false);
    } catch (const NonPositiveProductError& e) {
        CHECK(e.index() == 1);
        CHECK(e.product() == 0.0);
    }
    CHECK_THROWS_AS(symmetric_extended({3, -5.0, 0.0}), NonPositiveProductError);
}

TEST_CASE("symmetric view duplicates the band") {
    const auto sym = symmetric_extended({4, 0.25, 0.75});
    const auto gen = as_tridiagonal(sym);
    CHECK(gen.order == sym.order);
    CHECK(gen.superdiag == sym.offdiag);
    CHECK(gen.subdiag == sym.offdiag);
}

TEST_CASE("infinity norm is the largest row sum") {
    CHECK(infinity_norm(clement(3)) == 5.0);
    CHECK(infinity_norm(extended({4, 0.5, -0.5})) == 6.0);
    const auto sym = symmetric_extended({3, 1.0, 1.0});
    CHECK(infinity_norm(sym) == 2.0 + std::sqrt(8.0));
}

TEST_CASE("serialization round-trips bitwise") {
    const auto m = extended({5, 0.25, -0.75});
    const auto back = parse_matrix(format_matrix(m));
    CHECK(back.order == m.order);
    CHECK(back.superdiag == m.superdiag);
    CHECK(back.subdiag == m.subdiag);

    const auto tiny = parse_matrix("tridiag 2\n0.1\n7\n");
    CHECK(tiny.order == 2);
    CHECK(tiny.superdiag == std::vector<double>{0.1});
    CHECK(tiny.subdiag == std::vector<double>{7.0});

    CHECK_THROWS_AS(parse_matrix("diag 3\n1 2\n2 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix("tridiag 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix("tridiag 3\n1 2\n3\n"), std::invalid_argument);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(extended({0, 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(extended({3, std::nan(""), 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(special(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(scale(clement(2), std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
}
