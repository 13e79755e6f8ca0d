#include <doctest.h>

#include <cmath>
#include <vector>

#include "pba/channel.hpp"

using pba::capacity;
using pba::QueryPoint;
using pba::ResponseOracle;

TEST_SUITE("channel") {

TEST_CASE("capacity of the uninformative channel is zero") {
    CHECK(capacity(0.5) == 0.0);
}

TEST_CASE("capacity reference values") {
    CHECK(capacity(0.4) == doctest::Approx(0.02904940554533142).epsilon(1e-10));
    CHECK(std::abs(capacity(0.4) - 0.02905) <= 1e-5);
    CHECK(std::abs(capacity(0.05) - 0.71361) <= 1e-5);
}

TEST_CASE("capacity domain") {
    CHECK_THROWS_AS(capacity(0.0), std::invalid_argument);
    CHECK_THROWS_AS(capacity(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(capacity(0.6), std::invalid_argument);
    CHECK(capacity(1e-12) > 0.999);
}

TEST_CASE("capacity is strictly decreasing on (0, 1/2] with range [0, 1)") {
    double prev = 1.0;
    for (int k = 1; k <= 50; ++k) {
        const double eps = 0.5 * static_cast<double>(k) / 50.0;
        const double c = capacity(eps);
        CHECK(c < prev);
        CHECK(c >= 0.0);
        CHECK(c < 1.0);
        prev = c;
    }
}

TEST_CASE("true_bit is interval membership with closed ties") {
    ResponseOracle oracle(0.3, {0.1}, 1);
    CHECK(oracle.true_bit(QueryPoint{0.5}) == 1);
    CHECK(oracle.true_bit(QueryPoint{0.2}) == 0);
    CHECK(oracle.true_bit(QueryPoint{0.3}) == 1);  // tie counts as inside

    ResponseOracle high(0.9, {0.1}, 1);
    CHECK(high.true_bit(QueryPoint{0.5}) == 0);
}

TEST_CASE("respond with negligible noise always tells the truth") {
    ResponseOracle oracle(0.42, {1e-12}, 7);
    for (int i = 0; i < 1000; ++i) {
        const QueryPoint q{static_cast<double>(i % 100) / 100.0};
        CHECK(oracle.respond(0, q) == oracle.true_bit(q));
    }
}

TEST_CASE("respond flip frequency approaches epsilon") {
    ResponseOracle oracle(0.3, {0.4}, 2024);
    const QueryPoint q{0.5};
    const int n = 100000;
    int flips = 0;
    for (int i = 0; i < n; ++i) {
        flips += oracle.respond(0, q) != oracle.true_bit(q);
    }
    const double freq = static_cast<double>(flips) / n;
    CHECK(std::abs(freq - 0.4) <= 0.01);
}

TEST_CASE("same seed reproduces the response stream bit for bit") {
    ResponseOracle a(0.61, {0.2, 0.45}, 99);
    ResponseOracle b(0.61, {0.2, 0.45}, 99);
    for (int i = 0; i < 1000; ++i) {
        const QueryPoint q{static_cast<double>(i % 37) / 37.0};
        CHECK(a.respond(i % 2, q) == b.respond(i % 2, q));
    }
}

TEST_CASE("agent streams are independent of evaluation order") {
    ResponseOracle a(0.61, {0.2, 0.45}, 99);
    ResponseOracle b(0.61, {0.2, 0.45}, 99);
    const QueryPoint q{0.5};
    std::vector<int> first_then_second;
    for (int i = 0; i < 50; ++i) {
        first_then_second.push_back(a.respond(0, q));
    }
    for (int i = 0; i < 50; ++i) {
        first_then_second.push_back(a.respond(1, q));
    }
    std::vector<int> interleaved_0;
    std::vector<int> interleaved_1;
    for (int i = 0; i < 50; ++i) {
        interleaved_1.push_back(b.respond(1, q));
        interleaved_0.push_back(b.respond(0, q));
    }
    for (int i = 0; i < 50; ++i) {
        CHECK(first_then_second[i] == interleaved_0[i]);
        CHECK(first_then_second[50 + i] == interleaved_1[i]);
    }
}

TEST_CASE("oracle argument validation") {
    CHECK_THROWS_AS(ResponseOracle(0.5, {0.0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(ResponseOracle(0.5, {0.5}, 1), std::invalid_argument);
    CHECK_THROWS_AS(ResponseOracle(1.5, {0.1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(ResponseOracle(0.5, {}, 1), std::invalid_argument);
    ResponseOracle oracle(0.5, {0.1}, 1);
    CHECK_THROWS_AS(oracle.respond(1, QueryPoint{0.5}), std::out_of_range);
    CHECK_THROWS_AS(oracle.true_bit(QueryPoint{1.5}), std::invalid_argument);
}

}  // TEST_SUITE
