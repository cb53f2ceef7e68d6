// Sequence construction, the L_r operator, iterated application, the
// factor-r log-concavity predicate, and symmetric materialization.  The
// operator is cross-checked against an independently coded transcription of
// its definition, and iterated examples against a brute-force orbit oracle.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "gen.hpp"
#include "logcave/seq.hpp"

using namespace logcave;
using testgen::Rng;

namespace {

Seq seq_of(std::initializer_list<long> xs) {
    std::vector<QField> v;
    for (long x : xs) v.emplace_back(Rat(x));
    return Seq(std::move(v));
}

// Independent transcription of b_k = a_k^2 - r a_{k-1} a_{k+1} working on a
// zero-padded copy; deliberately avoids Seq::at and apply_lr internals.
std::vector<QField> step_reference(const std::vector<QField>& a, const QField& r) {
    std::vector<QField> pad;
    pad.emplace_back(Rat(0));
    pad.insert(pad.end(), a.begin(), a.end());
    pad.emplace_back(Rat(0));
    std::vector<QField> out;
    for (size_t i = 1; i + 1 < pad.size(); ++i) {
        out.push_back(qf_sub(qf_mul(pad[i], pad[i]),
                             qf_mul(r, qf_mul(pad[i - 1], pad[i + 1]))));
    }
    return out;
}

}  // namespace

TEST_CASE("sequence storage, padding, and field checks") {
    Seq s = seq_of({1, 3, 3, 1});
    CHECK(s.size() == 4);
    CHECK(s.at(-1) == QField(Rat(0)));
    CHECK(s.at(4) == QField(Rat(0)));
    CHECK(s.at(0) == QField(Rat(1)));
    CHECK(s.nonnegative());
    CHECK_THROWS_AS(Seq(std::vector<QField>{}), error);

    // entries may share one extension with rationals mixed in
    Seq t(std::vector<QField>{QField(Rat(1)), r1(), QField(Rat(2))});
    CHECK(t.field() == 2);
    CHECK_THROWS_AS(Seq(std::vector<QField>{r1(), r0()}), mixed_field_error);

    Seq neg(std::vector<QField>{QField(Rat(1)), QField(Rat(-2))});
    CHECK_FALSE(neg.nonnegative());
    CHECK(neg.first_negative() == 1);
}

TEST_CASE("operator application on worked rows") {
    CHECK(apply_lr(seq_of({1, 3, 3, 1}), QField(Rat(1))) == seq_of({1, 6, 6, 1}));
    CHECK(iterate_lr(seq_of({1, 3, 3, 1}), QField(Rat(1)), 2) == seq_of({1, 30, 30, 1}));
    CHECK(iterate_lr(seq_of({1, 3, 3, 1}), QField(Rat(1)), 0) == seq_of({1, 3, 3, 1}));
    // generalized step keeps radical entries exact
    Seq g = apply_lr(seq_of({1, 2, 1}), r1());
    // center: 4 - (1+sqrt 2)*1 = 3 - sqrt 2
    CHECK(g.at(1) == QField(Rat(3), Rat(-1), Int(2)));
    CHECK(g.at(0) == QField(Rat(1)));
}

TEST_CASE("operator r-policy") {
    CHECK_THROWS_AS(apply_lr(seq_of({1, 2, 1}), QField(Rat(0))), r_not_supported_error);
    CHECK_THROWS_AS(apply_lr(seq_of({1, 2, 1}), QField(Rat(-2))), r_not_supported_error);
    CHECK_THROWS_AS(apply_lr(seq_of({1, 2, 1}), QField(make_rat(1, 2))),
                    r_not_supported_error);
    Seq half = apply_lr(seq_of({1, 2, 1}), QField(make_rat(1, 2)),
                        RPolicy::allow_below_one);
    CHECK(half.at(1) == QField(make_rat(7, 2)));
    CHECK_THROWS_AS(
        apply_lr(seq_of({1, 2, 1}), QField(Rat(0)), RPolicy::allow_below_one),
        r_not_supported_error);
}

TEST_CASE("factor-r log-concavity predicate") {
    CHECK(is_r_factor_lc(seq_of({1, 3, 3, 1}), QField(Rat(1))).ok);
    auto bad = is_r_factor_lc(seq_of({1, 1, 2}), QField(Rat(1)));
    CHECK_FALSE(bad.ok);
    CHECK(bad.fail_index == 1);
    // an interior zero with positive neighbours fails at the zero
    auto hole = is_r_factor_lc(seq_of({1, 0, 1}), QField(Rat(1)));
    CHECK_FALSE(hole.ok);
    CHECK(hole.fail_index == 1);
    // zeros at the margin are harmless
    CHECK(is_r_factor_lc(seq_of({5, 5, 0, 0, 5}), QField(Rat(2))).ok);
    // irrational factor, exact comparison: 25/4 >= (1+sqrt 2) * 5/2
    std::vector<QField> v{QField(Rat(1)), QField(make_rat(5, 2)), QField(Rat(1))};
    CHECK(is_r_factor_lc(Seq(v), r1()).ok);
    // and 4 >= (1+sqrt 2)*2 fails
    CHECK_FALSE(is_r_factor_lc(seq_of({1, 2, 2, 1}), r1()).ok);
    CHECK_THROWS_AS(is_r_factor_lc(seq_of({1, -1, 1}), QField(Rat(1))), error);
}

TEST_CASE("iterated nonnegativity") {
    CHECK(is_ifold_lc(seq_of({1, 4, 6, 4, 1}), QField(Rat(1)), 5).ok);
    // the bracketed pair 19/10 shrinks under x -> x^2 - x and goes negative
    std::vector<QField> v{QField(Rat(1)), QField(make_rat(19, 10)),
                          QField(make_rat(19, 10)), QField(Rat(1))};
    Seq s(v);
    auto verdict = is_ifold_lc(s, QField(Rat(1)), 50);
    CHECK_FALSE(verdict.ok);
    // brute-force orbit oracle: iterate the center value directly
    Rat x = make_rat(19, 10);
    long first_bad = -1;
    for (long j = 1; j <= 50 && first_bad < 0; ++j) {
        x = x * x - x;
        if (x < 0) first_bad = j;
    }
    CHECK(verdict.fail_iteration == first_bad);
    CHECK(verdict.fail_iteration == 4);
    CHECK(verdict.fail_index == 1);
    // a fixed point survives any number of folds
    CHECK(is_ifold_lc(seq_of({1, 2, 2, 1}), QField(Rat(1)), 50).ok);
    CHECK_THROWS_AS(is_ifold_lc(s, QField(Rat(1)), 0), error);
}

TEST_CASE("materialization of symmetric cores") {
    SymSeq even{{QField(Rat(3)), QField(Rat(7))}, Parity::even};
    CHECK(materialize(even) == seq_of({1, 3, 7, 7, 3, 1}));
    SymSeq odd{{QField(Rat(3)), QField(Rat(7))}, Parity::odd};
    CHECK(materialize(odd) == seq_of({1, 3, 7, 3, 1}));
    SymSeq tiny{{QField(make_rat(5, 2))}, Parity::odd};
    Seq tm = materialize(tiny);
    CHECK(tm.size() == 3);
    CHECK(tm.at(1) == QField(make_rat(5, 2)));

    SymSeq zero{{QField(Rat(0))}, Parity::even};
    CHECK_THROWS_AS(materialize(zero), error);

    // extract_core inverts materialize
    SymSeq back = extract_core(materialize(even), Parity::even);
    CHECK(back.core == even.core);
    CHECK(extract_core(materialize(odd), Parity::odd).core == odd.core);
    CHECK_THROWS_AS(extract_core(seq_of({1, 3, 7, 3, 1}), Parity::even), error);
    CHECK_THROWS_AS(extract_core(seq_of({2, 3, 3, 2}), Parity::even), error);
    CHECK_THROWS_AS(extract_core(seq_of({1, 3, 4, 5, 1}), Parity::odd), error);
}

TEST_CASE("cross-check against an independent operator transcription") {
    Rng g(201);
    for (int i = 0; i < 500; ++i) {
        int len = static_cast<int>(testgen::rand_long(g, 1, 9));
        std::vector<QField> v;
        for (int k = 0; k < len; ++k) {
            v.emplace_back(testgen::rand_rat(g, 0, 40, 8));
        }
        Seq s(v);
        QField r(testgen::rand_r_ge_1(g, 12, 4));
        CHECK(apply_lr(s, r).values() == step_reference(v, r));
    }
}

TEST_CASE("the operator preserves symmetric shape") {
    Rng g(202);
    int done = 0;
    while (done < 500) {
        Parity parity = done % 2 == 0 ? Parity::even : Parity::odd;
        QField r(testgen::rand_r_ge_1(g, 16, 4));
        SymSeq sym = testgen::random_r_factor_lc_sym(g, r, 5, parity);
        Seq image = apply_lr(materialize(sym), r);
        // palindromic with the bracket 1s intact
        CHECK(image.at(0) == QField(Rat(1)));
        CHECK(image.at(image.size() - 1) == QField(Rat(1)));
        SymSeq back = extract_core(image, parity);
        CHECK(back.n() == sym.n());
        ++done;
    }
}

TEST_CASE("factor ordering: a stronger factor implies every weaker one") {
    Rng g(203);
    for (int i = 0; i < 200; ++i) {
        QField strong(testgen::rand_rat(g, 2, 12, 3));
        QField weak = qf_sub(strong, QField(make_rat(1, 2)));
        Seq s = testgen::random_r_factor_lc_seq(g, strong, 8);
        CHECK(is_r_factor_lc(s, weak, RPolicy::allow_below_one).ok);
    }
}
