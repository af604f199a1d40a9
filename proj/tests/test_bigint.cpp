#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "coverhom/bigint.hpp"

using coverhom::Zint;

TEST_CASE("small arithmetic agrees with int64") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> d(-1000000, 1000000);
    for (int i = 0; i < 2000; ++i) {
        long long a = d(rng), b = d(rng);
        CHECK((Zint(a) + Zint(b)).as_int64() == a + b);
        CHECK((Zint(a) - Zint(b)).as_int64() == a - b);
        CHECK((Zint(a) * Zint(b)).as_int64() == a * b);
        if (b != 0) {
            CHECK((Zint(a) / Zint(b)).as_int64() == a / b);
            CHECK((Zint(a) % Zint(b)).as_int64() == a % b);
        }
    }
}

TEST_CASE("overflow promotes and stays consistent") {
    Zint big = Zint(INT64_MAX);
    Zint sum = big + big;
    CHECK(sum.to_string() == "18446744073709551614");
    CHECK((sum - big).as_int64() == INT64_MAX);
    CHECK((sum / Zint(2)) == big);
    CHECK((sum % Zint(2)).is_zero());

    Zint neg = -sum;
    CHECK(neg.to_string() == "-18446744073709551614");
    CHECK((neg + sum).is_zero());

    Zint minv(INT64_MIN);
    CHECK((-minv).to_string() == "9223372036854775808");
    CHECK((-(-minv)).as_int64() == INT64_MIN);
}

TEST_CASE("multiplication and division round-trip on large operands") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> d(-INT64_MAX / 2, INT64_MAX / 2);
    for (int i = 0; i < 400; ++i) {
        Zint a = Zint(d(rng)) * Zint(d(rng)) + Zint(d(rng));
        Zint b = Zint(d(rng));
        if (b.is_zero()) continue;
        Zint q, r;
        Zint::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        // truncated division: remainder sign follows the dividend
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("string round-trip") {
    const char* cases[] = {"0", "1", "-1", "123456789012345678901234567890",
                           "-99999999999999999999999999999999999999", "9223372036854775807",
                           "-9223372036854775808"};
    for (const char* s : cases) {
        CHECK(Zint::from_string(s).to_string() == s);
    }
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long long> d(-1000000000, 1000000000);
    for (int i = 0; i < 200; ++i) {
        Zint v = Zint(d(rng)) * Zint(d(rng)) * Zint(d(rng));
        CHECK(Zint::from_string(v.to_string()) == v);
    }
}

TEST_CASE("gcd") {
    CHECK(Zint::gcd(Zint(12), Zint(18)).as_int64() == 6);
    CHECK(Zint::gcd(Zint(0), Zint(-5)).as_int64() == 5);
    CHECK(Zint::gcd(Zint(0), Zint(0)).is_zero());
    Zint a = Zint::from_string("123456789123456789123456789");
    Zint b = Zint::from_string("987654321987654321");
    Zint g = Zint::gcd(a, b);
    CHECK((a % g).is_zero());
    CHECK((b % g).is_zero());
    CHECK(Zint::gcd(a / g, b / g).is_one());
}

TEST_CASE("comparisons across representations") {
    Zint big = Zint(INT64_MAX) * Zint(3);
    CHECK(big > Zint(INT64_MAX));
    CHECK(-big < Zint(INT64_MIN));
    CHECK(Zint(5) < Zint(7));
    CHECK(Zint(-5) > Zint(-7));
    CHECK(big == Zint(INT64_MAX) + Zint(INT64_MAX) + Zint(INT64_MAX));
}
