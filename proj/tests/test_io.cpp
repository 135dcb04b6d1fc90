#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <random>

#include "nlkg/errors.hpp"
#include "nlkg/io.hpp"

TEST_CASE("shortest formatting round trips") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t bits = rng();
        double v;
        std::memcpy(&v, &bits, sizeof v);
        if (!std::isfinite(v)) continue;
        const double back = nlkg::io::parse_double(nlkg::io::format_shortest(v));
        CHECK(std::memcmp(&v, &back, sizeof v) == 0);
    }
    CHECK(nlkg::io::format_shortest(0.1) == "0.1");
    CHECK(nlkg::io::format_17g(0.1) == "0.10000000000000001");
}

TEST_CASE("number parsing") {
    CHECK(nlkg::io::parse_double("+2.5") == 2.5);
    CHECK(nlkg::io::parse_double(" -1e-3 ") == -1e-3);
    CHECK(std::isnan(nlkg::io::parse_double("nan")));
    CHECK(nlkg::io::parse_double("inf") == std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS((void)nlkg::io::parse_double("1.5x"), nlkg::ConstraintError);
    CHECK_THROWS_AS((void)nlkg::io::parse_double(""), nlkg::ConstraintError);
    CHECK(nlkg::io::parse_integer("42") == 42);
    CHECK_THROWS_AS((void)nlkg::io::parse_integer("4.2"), nlkg::ConstraintError);
}

TEST_CASE("key-value parsing") {
    const auto kv = nlkg::io::parse_key_value("# header\n a = 1 \n\nb=two # note\n");
    REQUIRE(kv.size() == 2);
    CHECK(kv.at("a") == "1");
    CHECK(kv.at("b") == "two");
    CHECK_THROWS_AS((void)nlkg::io::parse_key_value("a = 1\na = 2\n"), nlkg::ConstraintError);
    CHECK_THROWS_AS((void)nlkg::io::parse_key_value("just words\n"), nlkg::ConstraintError);
    CHECK_THROWS_AS((void)nlkg::io::parse_key_value(" = 3\n"), nlkg::ConstraintError);
    CHECK_THROWS_AS((void)nlkg::io::read_file("/nonexistent/nlkg/file"), nlkg::ConstraintError);
}
