#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "hermanlab/cf.hpp"

using namespace hermanlab;
using cf::ContinuedFraction;

namespace {

const long double kGolden = (std::sqrt(5.0L) - 1.0L) / 2.0L;

// Exact continued-fraction digits of (P0 + sqrt(D)) / Q0 by integer long
// division on the surd representation; independent of cf_expand.
std::vector<std::int64_t> surd_cf_digits(std::int64_t P0, std::int64_t D,
                                         std::int64_t Q0, int count) {
    auto isqrt = [](std::int64_t v) {
        std::int64_t r = (std::int64_t)std::sqrt((double)v);
        while ((r + 1) * (r + 1) <= v) ++r;
        while (r * r > v) --r;
        return r;
    };
    std::vector<std::int64_t> out;
    std::int64_t P = P0, Q = Q0, s = isqrt(D);
    for (int i = 0; i < count; ++i) {
        std::int64_t a = (P + s) / Q;
        if (P + s < 0) a = -((-(P + s) + Q - 1) / Q);  // floor for negatives
        out.push_back(a);
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    return out;
}

}  // namespace

TEST_CASE("cf_expand recovers classical expansions") {
    auto golden = cf::cf_expand(kGolden, 10);
    REQUIRE(golden.cf.head().size() == 10);
    for (auto a : golden.cf.head()) CHECK(a == 1);
    CHECK_FALSE(golden.precision_exhausted);

    auto silver = cf::cf_expand(std::sqrt(2.0L) - 1.0L, 6);
    REQUIRE(silver.cf.head().size() == 6);
    for (auto a : silver.cf.head()) CHECK(a == 2);
}

TEST_CASE("cf_expand agrees with the exact surd long-division oracle") {
    // x = (sqrt(3)-1)/2: digits of 1/x, 1/frac(1/x), ... via the exact
    // (P,Q) recurrence on (1 + sqrt(3))/2-type surds. The first digit of
    // the expansion of x in (0,1) is floor(1/x), so run the oracle on 1/x.
    // 1/x = (2)(sqrt(3)+1)/2 = sqrt(3)+1 = (1 + sqrt(3))/1.
    auto oracle = surd_cf_digits(1, 3, 1, 6);
    auto got = cf::cf_expand((std::sqrt(3.0L) - 1.0L) / 2.0L, 6);
    REQUIRE(got.cf.head().size() == 6);
    for (int i = 0; i < 6; ++i) CHECK(got.cf.head()[i] == oracle[i]);
}

TEST_CASE("cf_expand detects rationals and names them") {
    try {
        cf::cf_expand(0.5L, 8);
        FAIL("expected rational_detected");
    } catch (const Error& e) {
        CHECK(e.code() == "rational_detected");
        CHECK(std::string(e.what()).find("/") != std::string::npos);
    }
}

TEST_CASE("cf value reconstruction is the identity within 1/q_N^2") {
    for (long double theta : {0.3819660112501051518L, 0.7548776662466927L, 0.21347283L}) {
        auto ex = cf::cf_expand(theta, 12);
        auto table = cf::convergents(ex.cf, (int)ex.cf.head().size());
        long double qn = (long double)table.rows.back().q;
        CHECK(std::fabs(ex.cf.value() - theta) <= 1.0L / (qn * qn));
    }
}

TEST_CASE("parse and to_string round-trip") {
    auto g = ContinuedFraction::parse("1(1)");
    CHECK(g.periodic());
    CHECK(std::fabs((double)(g.value() - kGolden)) < 1e-18);
    CHECK(g.to_string() == "1(1)");

    auto m = ContinuedFraction::parse("1,2(3,4)");
    CHECK(m.head() == cf::Quotients{1, 2});
    CHECK(m.cycle() == cf::Quotients{3, 4});
    CHECK(m.quotient(3) == 3);
    CHECK(m.quotient(4) == 4);
    CHECK(m.quotient(5) == 3);
    CHECK(m.bound() == 4);

    auto fin = ContinuedFraction::parse("2,2,2,2,2,2");
    CHECK_FALSE(fin.periodic());
    CHECK(fin.max_depth() == 6);

    CHECK_THROWS_AS(ContinuedFraction::parse("1,(2"), Error);
    CHECK_THROWS_AS(ContinuedFraction::parse("0,1"), Error);
}

TEST_CASE("convergents: Fibonacci denominators and seed row") {
    auto g = ContinuedFraction::parse("1(1)");
    auto table = cf::convergents(g, 6);
    std::vector<std::int64_t> fib{1, 1, 2, 3, 5, 8, 13};
    REQUIRE(table.rows.size() == 7);
    CHECK(table.rows[0].p == 0);
    CHECK(table.rows[0].q == 1);
    for (int n = 0; n <= 6; ++n) CHECK(table.rows[n].q == fib[n]);
}

TEST_CASE("golden mean l_n = theta^{n+1}") {
    auto g = ContinuedFraction::parse("1(1)");
    auto table = cf::convergents(g, 10);
    long double pw = g.value();
    for (int n = 0; n <= 10; ++n) {
        CHECK(std::fabs((double)(table.rows[n].l - pw)) < 1e-17);
        pw *= g.value();
    }
}

TEST_CASE("convergent identities hold exactly") {
    auto m = ContinuedFraction::parse("2,1(3,1,2)");
    auto table = cf::convergents(m, 20);
    for (std::size_t n = 0; n + 1 < table.rows.size(); ++n) {
        const auto& r0 = table.rows[n];
        const auto& r1 = table.rows[n + 1];
        // Determinant identity, exact in integers.
        std::int64_t det = r1.q * r0.p - r0.q * r1.p;
        CHECK(std::abs(det) == 1);
        // Same identity in the l_n form: q_{n+1} l_n + q_n l_{n+1} = 1.
        long double s = (long double)r1.q * r0.l + (long double)r0.q * r1.l;
        CHECK(std::fabs((double)(s - 1.0L)) < 1e-15);
        // l alternation and monotone decrease.
        CHECK(r1.l < r0.l);
    }
    // Three-term identity l_n = a_{n+1} l_{n+1} + l_{n+2}.
    for (std::size_t n = 0; n + 2 < table.rows.size(); ++n) {
        long double lhs = table.rows[n].l;
        long double rhs = (long double)m.quotient(n + 1) * table.rows[n + 1].l +
                          table.rows[n + 2].l;
        CHECK(std::fabs((double)(lhs - rhs)) < 1e-15);
    }
}

TEST_CASE("bounded_type_check ratios") {
    auto g = ContinuedFraction::parse("1(1)");
    auto rep = cf::bounded_type_check(cf::convergents(g, 15), 1.5, 1.7);
    CHECK(rep.ok);
    CHECK(std::fabs((double)rep.min_ratio - 1.6180339887) < 1e-9);
    CHECK(std::fabs((double)rep.max_ratio - 1.6180339887) < 1e-9);

    // Silver ratio: oracle the l-sequence by the backward recurrence
    // l_{n+2} = l_n - a_{n+1} l_{n+1} and check every ratio lies in [2,3].
    auto s = ContinuedFraction::parse("2(2)");
    auto table = cf::convergents(s, 15);
    long double l0 = s.value(), l1 = 1.0L - 2.0L * s.value();
    for (std::size_t n = 0; n + 1 < table.rows.size(); ++n) {
        long double ratio = l0 / l1;
        CHECK((double)ratio >= 2.0);
        CHECK((double)ratio <= 3.0);
        long double l2 = l0 - 2.0L * l1;
        l0 = l1;
        l1 = l2;
    }
    auto rep2 = cf::bounded_type_check(table, 2.0, 3.0);
    CHECK(rep2.ok);

    cf::ConvergentTable one;
    one.rows.push_back({0, 1, 0.5L});
    auto rep3 = cf::bounded_type_check(one, 1.0, 10.0);
    CHECK_FALSE(rep3.sufficient_depth);
    CHECK(rep3.note == "insufficient depth");
}

TEST_CASE("circle_order basics and oracle") {
    auto g = ContinuedFraction::parse("1(1)");
    auto perm = cf::circle_order(g.value(), 5);
    CHECK(perm == std::vector<std::size_t>{0, 2, 4, 1, 3});

    CHECK(cf::circle_order(g.value(), 1) == std::vector<std::size_t>{0});

    // Direct-sort oracle at a larger count.
    const std::size_t n = 37;
    std::vector<double> ang(n);
    for (std::size_t i = 0; i < n; ++i)
        ang[i] = std::fmod((double)i * (double)g.value(), 1.0);
    std::vector<std::size_t> oracle(n);
    for (std::size_t i = 0; i < n; ++i) oracle[i] = i;
    std::sort(oracle.begin(), oracle.end(),
              [&](std::size_t a, std::size_t b) { return ang[a] < ang[b]; });
    CHECK(cf::circle_order(g.value(), n) == oracle);
}

TEST_CASE("circle_order of theta and 1-theta are cyclically reversed") {
    auto g = ContinuedFraction::parse("1(1)");
    const std::size_t n = 13;
    auto fwd = cf::circle_order(g.value(), n);
    auto bwd = cf::circle_order(1.0L - g.value(), n);
    std::reverse(fwd.begin(), fwd.end());
    auto zero = std::find(fwd.begin(), fwd.end(), (std::size_t)0);
    std::rotate(fwd.begin(), zero, fwd.end());
    CHECK(fwd == bwd);
}

TEST_CASE("circle_order flags rational input at overlong counts") {
    CHECK_THROWS_AS(cf::circle_order(0.25L, 9), Error);
}

TEST_CASE("circle_order matches rational rotation order at convergents") {
    auto g = ContinuedFraction::parse("1(1)");
    auto table = cf::convergents(g, 9);
    for (std::size_t n = 2; n < table.rows.size(); ++n) {
        auto q = (std::size_t)table.rows[n].q;
        auto p = (long double)table.rows[n].p;
        auto irr = cf::circle_order(g.value(), q);
        auto rat = cf::circle_order(p / (long double)q, q);
        CHECK(irr == rat);
    }
}
