// Exact rational and quadratic-extension arithmetic: canonical forms, field
// axioms, exact sign/compare against a 256-bit floating oracle, and the
// threshold constants' defining identities.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include "gen.hpp"
#include "logcave/qfield.hpp"

using namespace logcave;
using testgen::Rng;

namespace {

// 256-bit floating evaluation of a + b*sqrt(d); test-only oracle.
mpf_class approx(const QField& x) {
    mpf_class a(x.rat_part(), 256);
    mpf_class b(x.rad_coeff(), 256);
    mpf_class d(x.radicand(), 256);
    return a + b * sqrt(d);
}

QField qf(long a_num, long a_den, long b_num, long b_den, long d) {
    return QField(make_rat(a_num, a_den), make_rat(b_num, b_den), Int(d));
}

}  // namespace

TEST_CASE("rationals are canonical") {
    CHECK(make_rat(6, -4) == make_rat(-3, 2));
    CHECK(make_rat(6, -4).get_den() == 2);
    CHECK(make_rat(0, 7) == Rat(0));
    CHECK(make_rat(0, 7).get_den() == 1);
    CHECK_THROWS_AS(make_rat(1, 0), error);

    Rng g(101);
    for (int i = 0; i < 10000; ++i) {
        Rat q = testgen::rand_rat(g, -1000000, 1000000, 1000000);
        CHECK(q.get_den() > 0);
        CHECK(gcd(Int(q.get_num()), Int(q.get_den())) == 1);
        if (q == 0) CHECK(q.get_den() == 1);
    }
}

TEST_CASE("rational powers") {
    CHECK(rat_pow(make_rat(2, 3), -3) == make_rat(27, 8));
    CHECK(rat_pow(make_rat(-2, 3), 2) == make_rat(4, 9));
    CHECK(rat_pow(make_rat(-2, 3), 3) == make_rat(-8, 27));
    CHECK(rat_pow(Rat(0), 5) == 0);
    CHECK(rat_pow(Rat(7), 0) == 1);
    CHECK_THROWS_AS(rat_pow(Rat(0), -1), error);
    CHECK(rat_pow(make_rat(-2, 3), -3).get_den() > 0);
}

TEST_CASE("square-free decomposition") {
    auto check = [](long n, long root, long core) {
        SquareFree sf = square_free_decompose(Int(n));
        CHECK(sf.root == root);
        CHECK(sf.core == core);
    };
    check(0, 1, 0);
    check(1, 1, 1);
    check(2, 1, 2);
    check(4, 2, 1);
    check(8, 2, 2);
    check(12, 2, 3);
    check(98, 7, 2);
    check(3600, 60, 1);
    // residual beyond the trial bound that is a perfect square
    Int big = Int(65537) * Int(65537) * 3;
    SquareFree sf = square_free_decompose(big);
    CHECK(sf.root == 65537);
    CHECK(sf.core == 3);
}

TEST_CASE("exact rational roots") {
    auto r = rat_nth_root(make_rat(27, 64), 3);
    CHECK(r.ok);
    CHECK(r.root == make_rat(3, 4));
    CHECK(rat_nth_root(Rat(8), 3).root == 2);
    CHECK_FALSE(rat_nth_root(Rat(12), 2).ok);
    CHECK(rat_nth_root(Rat(1), 17).root == 1);
}

TEST_CASE("radical normalization") {
    // sqrt(8) = 2 sqrt(2)
    CHECK(qf(0, 1, 1, 1, 8) == qf(0, 1, 2, 1, 2));
    // collapsed radicals become rational
    CHECK(qf(1, 2, 3, 1, 1) == QField(make_rat(7, 2)));
    CHECK(qf(1, 2, 3, 1, 0) == QField(make_rat(1, 2)));
    CHECK(qf(5, 1, 0, 1, 7).is_rational());
    CHECK(qf(0, 1, 1, 1, 9) == QField(Rat(3)));
    CHECK_THROWS_AS(QField(Rat(0), Rat(1), Int(-2)), error);
}

TEST_CASE("sqrt of rationals") {
    CHECK(qf_sqrt(make_rat(9, 4)) == QField(make_rat(3, 2)));
    CHECK(qf_sqrt(Rat(2)) == qf(0, 1, 1, 1, 2));
    // sqrt(1/2) = sqrt(2)/2
    CHECK(qf_sqrt(make_rat(1, 2)) == qf(0, 1, 1, 2, 2));
    CHECK(qf_sqrt(Rat(0)) == QField(Rat(0)));
    CHECK_THROWS_AS(qf_sqrt(Rat(-1)), error);

    Rng g(102);
    for (int i = 0; i < 2000; ++i) {
        Rat v = testgen::rand_rat(g, 0, 100000, 1000);
        QField root = qf_sqrt(v);
        CHECK(qf_mul(root, root) == QField(v));
        CHECK(qf_sign(root) == (v == 0 ? 0 : 1));
    }
}

TEST_CASE("threshold constants satisfy their defining equations") {
    // (1+sqrt(2))^2 = 3 + 2 sqrt(2)
    CHECK(qf_mul(r1(), r1()) == qf(3, 1, 2, 1, 2));
    // (1+sqrt(2))(1-sqrt(2)) = -1
    CHECK(qf_mul(r1(), qf(1, 1, -1, 1, 2)) == QField(Rat(-1)));
    // u^2 - 2u - 1 = 0 at u = 1+sqrt(2)
    QField u = r1();
    CHECK(qf_sub(qf_sub(qf_mul(u, u), qf_mul(QField(Rat(2)), u)), QField(Rat(1))) ==
          QField(Rat(0)));
    // ((1+sqrt(5))/2)^2 = (3+sqrt(5))/2
    QField golden = qf(1, 2, 1, 2, 5);
    CHECK(qf_mul(golden, golden) == r0());
    // golden^2 = golden + 1
    CHECK(qf_mul(golden, golden) == qf_add(golden, QField(Rat(1))));
}

TEST_CASE("golden_ratio_of: positive root of u^2 = u + r") {
    CHECK(golden_ratio_of(Rat(1)) == qf(1, 2, 1, 2, 5));
    // perfect-square discriminants collapse to rationals
    CHECK(golden_ratio_of(Rat(2)) == QField(Rat(2)));
    CHECK(golden_ratio_of(Rat(6)) == QField(Rat(3)));
    CHECK(golden_ratio_of(make_rat(3, 2)) == qf(1, 2, 1, 2, 7));

    Rng g(103);
    for (int i = 0; i < 200; ++i) {
        Rat r = testgen::rand_rat(g, 1, 1000, 100);
        QField u = golden_ratio_of(r);
        CHECK(qf_mul(u, u) == qf_add(u, QField(r)));
        CHECK(qf_sign(u) == 1);
    }
}

TEST_CASE("exact sign agrees with the 256-bit floating oracle") {
    const long radicands[] = {2, 3, 5, 13};
    Rng g(104);
    for (int i = 0; i < 10000; ++i) {
        QField x = qf(testgen::rand_long(g, -1000, 1000), testgen::rand_long(g, 1, 1000),
                      testgen::rand_long(g, -1000, 1000), testgen::rand_long(g, 1, 1000),
                      radicands[testgen::rand_long(g, 0, 3)]);
        int oracle = sgn(approx(x));
        // the oracle resolves these heights: |a^2 - b^2 d| >= 1/(den^2 den^2)
        CHECK(qf_sign(x) == oracle);
    }
    // exact-zero cancellations the oracle cannot certify
    CHECK(qf_sign(qf_sub(qf_sqrt(Rat(8)), qf(0, 1, 2, 1, 2))) == 0);
    CHECK(qf_sign(QField()) == 0);
}

TEST_CASE("field axioms on random triples") {
    const long radicands[] = {2, 7, 11};
    Rng g(105);
    for (int i = 0; i < 1000; ++i) {
        long d = radicands[testgen::rand_long(g, 0, 2)];
        auto rnd = [&] {
            return qf(testgen::rand_long(g, -50, 50), testgen::rand_long(g, 1, 20),
                      testgen::rand_long(g, -50, 50), testgen::rand_long(g, 1, 20), d);
        };
        QField x = rnd(), y = rnd(), z = rnd();
        CHECK(qf_add(x, y) == qf_add(y, x));
        CHECK(qf_mul(x, y) == qf_mul(y, x));
        CHECK(qf_add(qf_add(x, y), z) == qf_add(x, qf_add(y, z)));
        CHECK(qf_mul(qf_mul(x, y), z) == qf_mul(x, qf_mul(y, z)));
        CHECK(qf_mul(x, qf_add(y, z)) == qf_add(qf_mul(x, y), qf_mul(x, z)));
        CHECK(qf_sub(x, x) == QField(Rat(0)));
        if (qf_sign(y) != 0) {
            CHECK(qf_mul(qf_div(x, y), y) == x);
            CHECK(qf_div(y, y) == QField(Rat(1)));
        }
    }
}

TEST_CASE("same-field comparison and the mixed-field guard") {
    CHECK(qf_cmp(qf(1, 1, 1, 1, 2), qf(2, 1, 1, 2, 2)) < 0);
    CHECK(qf_cmp(QField(Rat(2)), r1()) < 0);
    CHECK_THROWS_AS(qf_cmp(r1(), r0()), mixed_field_error);
    CHECK_THROWS_AS(qf_add(r1(), r0()), mixed_field_error);
    CHECK_THROWS_AS(qf_mul(qf(1, 1, 1, 1, 2), qf(1, 1, 1, 1, 3)), mixed_field_error);
}

TEST_CASE("cross-field comparison: 1+sqrt(2) < (3+sqrt(5))/2") {
    CHECK(cross_field_cmp(r1(), r0()) < 0);
    CHECK(cross_field_cmp(r0(), r1()) > 0);
    CHECK(cross_field_cmp(r1(), r1()) == 0);
    // equal values expressed through different radicands compare equal
    CHECK(cross_field_cmp(qf_sub(r1(), QField(Rat(1))),
                          qf_div(QField(Rat(2)), qf(0, 1, 1, 1, 2))) == 0);
}

TEST_CASE("cross-field comparison agrees with the 256-bit oracle") {
    const long radicands[] = {2, 3, 5, 13};
    Rng g(106);
    for (int i = 0; i < 2000; ++i) {
        long d1 = radicands[testgen::rand_long(g, 0, 3)];
        long d2 = radicands[testgen::rand_long(g, 0, 3)];
        QField x = qf(testgen::rand_long(g, -60, 60), testgen::rand_long(g, 1, 12),
                      testgen::rand_long(g, -60, 60), testgen::rand_long(g, 1, 12), d1);
        QField y = qf(testgen::rand_long(g, -60, 60), testgen::rand_long(g, 1, 12),
                      testgen::rand_long(g, -60, 60), testgen::rand_long(g, 1, 12), d2);
        mpf_class diff = approx(x) - approx(y);
        int oracle = sgn(diff);
        // skip oracle ties below certification height (exact path handles them)
        if (oracle == 0 && !(x == y)) continue;
        CHECK(cross_field_cmp(x, y) == oracle);
    }
}
