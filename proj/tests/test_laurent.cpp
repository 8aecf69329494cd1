#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <ctmac/errors.hpp>
#include <ctmac/laurent.hpp>

#include "oracles.hpp"

using namespace ctmac;

namespace
{

const RatFunc one(1L);
const RatFunc q = RatFunc::q_pow(1);

// x^e in n variables, coefficient c.
LaurentPoly mono(const RatFunc &c, std::initializer_list<int> e)
{
    return LaurentPoly::monomial(c, ExpVec(e));
}

LaurentPoly random_laurent(std::mt19937_64 &rng, int nvars, int terms)
{
    std::uniform_int_distribution<int> ex(-2, 2), co(-3, 3), qd(0, 2);
    std::vector<LaurentPoly::Term> ts;
    for (int i = 0; i < terms; ++i) {
        ExpVec e(nvars);
        for (int v = 0; v < nvars; ++v) {
            e.set(v, ex(rng));
        }
        ts.emplace_back(e, RatFunc(co(rng)) * q.pow(qd(rng)) + RatFunc(co(rng)));
    }
    return LaurentPoly::from_terms(nvars, std::move(ts));
}

} // namespace

TEST_CASE("lp_ops: examples")
{
    const LaurentPoly a = mono(one, {0, 0}) - mono(one, {1, -1});
    const LaurentPoly b = mono(one, {0, 0}) - mono(q, {-1, 1});
    const LaurentPoly expected = mono(one + q, {0, 0}) - mono(q, {-1, 1}) - mono(one, {1, -1});
    CHECK(a * b == expected);
    CHECK((a * LaurentPoly(2)).is_zero());
    CHECK((a * RatFunc(0L)).is_zero());
    CHECK_THROWS_AS(a * LaurentPoly(3, one), StructuralError);
    // Same product through the q-shifted factorial builder.
    const LaurentPoly viaPoch =
        qpoch_monomial(one, ExpVec{1, -1}, 1) * qpoch_monomial(q, ExpVec{-1, 1}, 1);
    CHECK(viaPoch == expected);
}

TEST_CASE("qpoch_monomial: examples")
{
    CHECK(qpoch_monomial(one, ExpVec{1, -1}, 1) == mono(one, {0, 0}) - mono(one, {1, -1}));
    CHECK(qpoch_monomial(q, ExpVec{-1, 1}, 0) == LaurentPoly(2, one));
    const LaurentPoly e2 = qpoch_monomial(q, ExpVec{-1, 1}, 2);
    const LaurentPoly hand = mono(one, {0, 0}) - mono(q + q.pow(2), {-1, 1}) + mono(q.pow(3), {-2, 2});
    CHECK(e2 == hand);
    CHECK(e2.size() == 3);
}

TEST_CASE("ct_var and ct_all: examples")
{
    const LaurentPoly f = qpoch_monomial(one, ExpVec{1, -1}, 1) * qpoch_monomial(q, ExpVec{-1, 1}, 1);
    CHECK(f.ct_var(0) == LaurentPoly(2, one + q));
    CHECK(f.ct_var(0).nvars() == 2);
    CHECK(LaurentPoly(3, q).ct_var(1) == LaurentPoly(3, q));
    // q-Morris at n=1, a=b=1: (q)_2/((q)_1 (q)_1) = 1+q.
    CHECK(f.ct_var(0).ct_var(1).ct_all() == qpoch_scalar(1, 2) / (qpoch_scalar(1, 1) * qpoch_scalar(1, 1)));
    CHECK((mono(one, {0, 0}) - mono(one, {1, -1})).ct_all() == one);
    // q-Morris at n=2, a=b=0, c=1, over x0,x1,x2 with x0 absent.
    const LaurentPoly g = qpoch_monomial(one, ExpVec{0, 1, -1}, 1) * qpoch_monomial(q, ExpVec{0, -1, 1}, 1);
    const RatFunc rhs = (qpoch_scalar(1, 1) / (qpoch_scalar(1, 0) * qpoch_scalar(1, 1))) *
                        (qpoch_scalar(1, 2) / (qpoch_scalar(1, 1) * qpoch_scalar(1, 1)));
    CHECK(g.ct_all() == one + q);
    CHECK(g.ct_all() == rhs);
    // Homogeneous of nonzero degree has no constant term.
    const LaurentPoly h = mono(one, {-1, 1}) * (mono(q, {2, 0}) + mono(one, {1, 1}));
    CHECK(h.ct_all().is_zero());
}

TEST_CASE("degree_in: examples")
{
    CHECK(mono(one, {0, 0}) - mono(one, {1, -1}) == mono(one, {0, 0}) - mono(one, {1, -1}));
    CHECK((mono(one, {0, 0}) - mono(one, {1, -1})).degree_in(0) == std::pair<int, int>{0, 1});
    CHECK(qpoch_monomial(q, ExpVec{-1, 1}, 2).degree_in(0) == std::pair<int, int>{-2, 0});
    CHECK(LaurentPoly(2, q).degree_in(1) == std::pair<int, int>{0, 0});
    CHECK_THROWS(LaurentPoly(2).degree_in(0));
}

TEST_CASE("rendering")
{
    const LaurentPoly f = mono(one, {0, 0}) - mono(q, {-1, 2});
    CHECK(f.to_string() == "(-q)*x0^-1*x1^2 + (1)");
    CHECK(LaurentPoly(2).to_string() == "0");
}

TEST_CASE("exponent overflow is an error")
{
    const ExpVec big{2000000000, 0};
    CHECK_THROWS_AS(big + big, std::overflow_error);
    CHECK_THROWS_AS(mono(one, {2000000000}) * mono(one, {2000000000}), std::overflow_error);
}

TEST_CASE("property: ct_var commutes")
{
    std::mt19937_64 rng(11);
    for (int it = 0; it < 50; ++it) {
        const LaurentPoly f = random_laurent(rng, 3, 30);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                if (i != j) {
                    CHECK(f.ct_var(i).ct_var(j) == f.ct_var(j).ct_var(i));
                }
            }
        }
        CHECK(f.ct_var(0).ct_var(1).ct_var(2).ct_all() == f.ct_all());
    }
}

TEST_CASE("property: homogeneous of nonzero degree has zero constant term")
{
    std::mt19937_64 rng(12);
    for (int it = 0; it < 30; ++it) {
        LaurentPoly f = random_laurent(rng, 3, 20);
        // Keep only terms of total degree 1.
        std::vector<LaurentPoly::Term> ts;
        for (const auto &t : f.terms()) {
            if (t.first.total_degree() == 1) {
                ts.push_back(t);
            }
        }
        const LaurentPoly h = LaurentPoly::from_terms(3, ts);
        CHECK(h.ct_all().is_zero());
        if (!h.is_zero()) {
            CHECK(h.homogeneous_degree() == 1);
        }
    }
}

TEST_CASE("property: qpoch_monomial at x = 1 matches qpoch_scalar")
{
    for (int e = -2; e <= 3; ++e) {
        for (int k = 0; k <= 4; ++k) {
            const LaurentPoly p = qpoch_monomial(RatFunc::q_pow(e), ExpVec{1, -2}, k);
            RatFunc at_one(0L);
            for (const auto &t : p.terms()) {
                at_one += t.second;
            }
            CHECK(at_one == qpoch_scalar(e, k));
            CHECK(p.size() <= (std::size_t{1} << k));
        }
    }
}

TEST_CASE("property: multiplication agrees with point evaluation")
{
    std::mt19937_64 rng(13);
    for (int it = 0; it < 30; ++it) {
        const LaurentPoly a = random_laurent(rng, 3, 12), b = random_laurent(rng, 3, 12);
        std::vector<BigRat> xs;
        for (int v = 0; v < 3; ++v) {
            BigRat x = 0;
            while (sgn(x) == 0) {
                x = oracle::random_rational(rng);
            }
            xs.push_back(x);
        }
        const BigRat q0 = oracle::random_rational(rng);
        CHECK((a * b).eval(xs, q0) == a.eval(xs, q0) * b.eval(xs, q0));
        CHECK((a + b).eval(xs, q0) == a.eval(xs, q0) + b.eval(xs, q0));
    }
}

TEST_CASE("ct_product matches the full product")
{
    std::mt19937_64 rng(14);
    for (int it = 0; it < 20; ++it) {
        std::vector<LaurentPoly> fs;
        LaurentPoly full(3, one);
        for (int k = 0; k < 4; ++k) {
            LaurentPoly f = random_laurent(rng, 3, 5);
            if (f.is_zero()) {
                f = LaurentPoly(3, one);
            }
            // Rational coefficients exercise the denominator clearing.
            f *= one / (one - q.pow(k + 1));
            fs.push_back(f);
            full = full * f;
        }
        CtStats st;
        CHECK(ct_product(fs, &st) == full.ct_all());
        CHECK(st.terms_peak <= full.size() + 64);
    }
    CHECK(ct_product({}) == one);
}

TEST_CASE("substitution helpers")
{
    const LaurentPoly f = mono(one, {1, -1, 0}) + mono(q, {0, 2, 1});
    // x1 -> q x2
    const LaurentPoly g = f.substitute(1, q, 2);
    CHECK(g == mono(q.inverse(), {1, 0, -1}) + mono(q.pow(3), {0, 0, 3}));
    CHECK(f.set_one(0) == mono(one, {0, -1, 0}) + mono(q, {0, 2, 1}));
    CHECK(f.permute({1, 0, 2}) == mono(one, {-1, 1, 0}) + mono(q, {2, 0, 1}));
}
