#include <doctest.h>

#include <random>

#include "focount/bigint.hpp"

using namespace focount;

TEST_CASE("bigint small arithmetic matches int64") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 2000; ++t) {
        long long a = static_cast<long long>(rng() % 2000001) - 1000000;
        long long b = static_cast<long long>(rng() % 2000001) - 1000000;
        CHECK((BigInt(a) + BigInt(b)) == BigInt(a + b));
        CHECK((BigInt(a) - BigInt(b)) == BigInt(a - b));
        CHECK((BigInt(a) * BigInt(b)) == BigInt(a * b));
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("bigint parse and print round-trip") {
    for (const char* s : {"0", "-1", "123456789", "-987654321098765432109876543210",
                          "340282366920938463463374607431768211456"}) {
        CHECK(BigInt::parse(s).to_string() == s);
    }
    CHECK(BigInt::parse("+5") == BigInt(5));
    CHECK(BigInt::parse("-0").to_string() == "0");
    CHECK_THROWS_AS(BigInt::parse("12x"), std::invalid_argument);
}

TEST_CASE("bigint big multiplication identities") {
    BigInt a = BigInt::parse("123456789012345678901234567890");
    BigInt b = BigInt::parse("998877665544332211");
    BigInt c = BigInt(42);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK((a * b).to_string() == (b * a).to_string());
    CHECK(BigInt::pow(BigInt(2), 100).to_string() == "1267650600228229401496703205376");
}

TEST_CASE("bigint int64 bounds") {
    CHECK(BigInt(9007199254740991LL).fits_int64());
    BigInt big = BigInt::parse("9223372036854775807");
    CHECK(big.fits_int64());
    CHECK(big.to_int64() == 9223372036854775807LL);
    CHECK(!(big + BigInt(1)).fits_int64());
    BigInt lo = BigInt::parse("-9223372036854775808");
    CHECK(lo.fits_int64());
    CHECK(lo.to_int64() == std::numeric_limits<long long>::min());
}
