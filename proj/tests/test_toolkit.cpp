#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>

#include <ctmac/errors.hpp>
#include <ctmac/toolkit.hpp>

#include "oracles.hpp"

using namespace ctmac;

namespace
{

const RatFunc one(1L);
const RatFunc q = RatFunc::q_pow(1);

// A_ij as a residue: F(w) (1 - q^j z_i / w) at w = q^j z_i, with the vanishing
// factor of (z_i/w)_c left out of the denominator.
std::optional<BigRat> residue_oracle(int n, int c, int i, int j, const BigRat &q0, const std::vector<BigRat> &z)
{
    const BigRat w = oracle::pow(q0, j) * z[static_cast<std::size_t>(i)];
    BigRat num = 1, den = 1;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            num *= oracle::qpoch_value(z[u] / z[v], q0, c) * oracle::qpoch_value(q0 * z[v] / z[u], q0, c);
        }
        for (int m = 0; m < c; ++m) {
            if (u == i && m == j) {
                continue;
            }
            den *= 1 - oracle::pow(q0, m) * z[u] / w;
        }
    }
    if (den == 0) {
        return std::nullopt;
    }
    return BigRat(num / den);
}

std::vector<std::vector<int>> tuples(int s, int lo, int hi)
{
    std::vector<std::vector<int>> out{{}};
    for (int i = 0; i < s; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto &t : out) {
            for (int v = lo; v <= hi; ++v) {
                auto u = t;
                u.push_back(v);
                next.push_back(u);
            }
        }
        out = next;
    }
    return out;
}

// Direct search over the three cases, with every case-3 witness enumerated.
bool lemma_holds_brute(const std::vector<int> &k, int b, int c, int t)
{
    const int s = static_cast<int>(k.size());
    for (int ki : k) {
        if (1 <= ki && ki <= b) {
            return true;
        }
    }
    for (int i = 0; i < s; ++i) {
        for (int j = i + 1; j < s; ++j) {
            if (-c <= k[i] - k[j] && k[i] - k[j] <= c - 1) {
                return true;
            }
        }
    }
    std::vector<int> w(static_cast<std::size_t>(s));
    std::iota(w.begin(), w.end(), 1);
    do {
        int total = 0;
        bool ok = true;
        for (int j = 0; j < s && ok; ++j) {
            const int kw = k[w[j] - 1];
            const int tj = j == 0 ? kw - b : kw - k[w[j - 1] - 1] - c;
            const int wprev = j == 0 ? 0 : w[j - 1];
            ok = tj >= 0 && !(wprev < w[j] && tj == 0);
            total += tj;
        }
        if (ok && total >= 1 && total <= t) {
            return true;
        }
    } while (std::next_permutation(w.begin(), w.end()));
    return false;
}

} // namespace

TEST_CASE("cai_coefficient: example point")
{
    const std::vector<BigRat> z{2, 3};
    const BigRat q0(1, 2);
    const BigRat w = 5;
    const BigRat a10 = cai_coefficient(2, 1, 1, 0).eval(z, q0);
    const BigRat a20 = cai_coefficient(2, 1, 2, 0).eval(z, q0);
    CHECK(a10 == BigRat(-1, 6));
    CHECK(a20 == BigRat(1, 4));
    CHECK(a10 / (1 - z[0] / w) + a20 / (1 - z[1] / w) == BigRat(25, 72));
    CHECK_THROWS_AS(cai_coefficient(2, 1, 3, 0), DomainError);
    CHECK_THROWS_AS(cai_coefficient(2, 1, 1, 1), DomainError);
}

TEST_CASE("cai_coefficient: n = 1 is the one-variable partial fraction")
{
    for (int c = 1; c <= 3; ++c) {
        for (int j = 0; j < c; ++j) {
            const RatFunc expect = (qpoch_scalar(-j, j) * qpoch_scalar(1, c - j - 1)).inverse();
            CHECK(cai_coefficient(1, c, 1, j) == LaurentPoly(1, expect));
        }
    }
}

TEST_CASE("cai_coefficient matches the residue oracle")
{
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 3; ++n) {
        for (int c = 1; c <= 2; ++c) {
            for (int trial = 0; trial < 3; ++trial) {
                BigRat q0 = 0;
                while (q0 == 0 || q0 == 1 || q0 == -1) {
                    q0 = oracle::random_rational(rng);
                }
                std::vector<BigRat> z;
                for (int i = 0; i < n; ++i) {
                    BigRat v = 0;
                    while (v == 0) {
                        v = oracle::random_rational(rng);
                    }
                    z.push_back(v);
                }
                for (int i = 0; i < n; ++i) {
                    for (int j = 0; j < c; ++j) {
                        const auto expect = residue_oracle(n, c, i, j, q0, z);
                        if (!expect) {
                            continue;
                        }
                        INFO("n=" << n << " c=" << c << " i=" << i + 1 << " j=" << j);
                        CHECK(cai_coefficient(n, c, i + 1, j).eval(z, q0) == *expect);
                    }
                }
            }
        }
    }
}

TEST_CASE("verify_cai_split: all points agree")
{
    for (int n = 1; n <= 3; ++n) {
        for (int c = 1; c <= 2; ++c) {
            const auto reports = verify_cai_split(n, c, 5);
            CHECK(reports.size() == 4);
            for (const Report &r : reports) {
                INFO(r.check << " n=" << n << " c=" << c << " " << r.lhs << " vs " << r.rhs << " " << r.notes);
                CHECK(r.equal);
            }
        }
    }
    CHECK_THROWS_AS(verify_cai_split(2, 0, 1), DomainError);
}

TEST_CASE("verify_cai_split: deterministic per seed")
{
    const auto a = verify_cai_split(2, 2, 42);
    const auto b = verify_cai_split(2, 2, 42);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].params == b[i].params);
        CHECK(a[i].lhs == b[i].lhs);
    }
}

TEST_CASE("verify_vanishing_h: examples and refusals")
{
    const Report r = verify_vanishing_h(2, 1, {0, 2}, Partition{3, 0});
    CHECK(r.refused);
    const Report ok = verify_vanishing_h(2, 1, {1, 1}, Partition{2});
    CHECK_FALSE(ok.refused);
    CHECK(ok.equal);
    CHECK(ok.lhs == "0");
    CHECK(verify_vanishing_h(2, 1, {2, 0}, Partition{2}).refused);
    CHECK(verify_vanishing_h(1, 1, {1}, Partition{1}).refused);
    CHECK_THROWS_AS(verify_vanishing_h(2, 1, {1}, Partition{1}), StructuralError);
}

TEST_CASE("vanishing: every admissible v for n = 2, c <= 2, |lambda| <= 3")
{
    int checked = 0;
    for (int c = 1; c <= 2; ++c) {
        for (const Partition &lam : enumerate(3)) {
            if (lam.empty()) {
                continue;
            }
            const int m = lam.size();
            for (int v1 = m - lam.part(1) + 1; v1 < lam.part(1); ++v1) {
                const std::vector<int> v{v1, m - v1};
                const Report r = verify_vanishing_h(2, c, v, lam);
                INFO(lam.to_string() << " v=" << v1 << "," << m - v1 << " c=" << c << " " << r.lhs);
                CHECK_FALSE(r.refused);
                CHECK(r.equal);
                ++checked;
            }
            for (const Partition &mu : enumerate(m - 1)) {
                if (!contains(lam, mu) || mu.length() >= lam.length()) {
                    continue;
                }
                const int d = m - mu.size();
                const int bound = lam.part(static_cast<std::size_t>(mu.length() + 1));
                for (int v1 = d - bound + 1; v1 < bound; ++v1) {
                    const Report r = verify_vanishing_skew(2, c, {v1, d - v1}, lam, mu);
                    INFO(lam.to_string() << "/" << mu.to_string() << " v1=" << v1 << " c=" << c << " " << r.lhs);
                    CHECK_FALSE(r.refused);
                    CHECK(r.equal);
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 10);
}

TEST_CASE("vanishing: the bound on v is needed")
{
    // v = (2, 0), lambda = (2), c = 1: lambda_1 = max v and the constant term is q.
    CHECK(verify_vanishing_h(2, 1, {2, 0}, Partition{2}).refused);
    const LaurentPoly h2 = LaurentPoly::monomial(one, ExpVec{2, 0}) + LaurentPoly::monomial(one, ExpVec{1, 1}) +
                           LaurentPoly::monomial(one, ExpVec{0, 2});
    const std::vector<LaurentPoly> fs{LaurentPoly::monomial(one, ExpVec{-2, 0}), h2,
                                      qpoch_monomial(one, ExpVec{1, -1}, 1), qpoch_monomial(q, ExpVec{-1, 1}, 1)};
    CHECK(ct_product(fs) == q);
}

TEST_CASE("key_lemma_classify: examples")
{
    const auto k1 = key_lemma_classify({1, 4}, 1, 1, 2);
    REQUIRE(k1);
    CHECK(k1->kind == 1);
    CHECK(k1->i == 1);
    const auto k2 = key_lemma_classify({3, 3}, 0, 1, 2);
    REQUIRE(k2);
    CHECK(k2->kind == 2);
    const auto k3 = key_lemma_classify({2, 1}, 0, 1, 1);
    REQUIRE(k3);
    CHECK(k3->kind == 3);
    CHECK(k3->w == std::vector<int>{2, 1});
    CHECK(k3->tvec == std::vector<int>{1, 0});
    CHECK_THROWS_AS(key_lemma_classify({0}, 0, 1, 1), Refused);
    CHECK_THROWS_AS(key_lemma_classify({5}, 0, 1, 1), Refused);
}

TEST_CASE("key lemma: exhaustive for s <= 3, b, c, t <= 3")
{
    long instances = 0;
    for (int s = 1; s <= 3; ++s) {
        for (int b = 0; b <= 3; ++b) {
            for (int c = 1; c <= 3; ++c) {
                for (int t = 0; t <= 3; ++t) {
                    const int hi = (s - 1) * c + b + t;
                    if (hi < 1) {
                        continue;
                    }
                    for (const auto &k : tuples(s, 1, hi)) {
                        const auto kc = key_lemma_classify(k, b, c, t);
                        REQUIRE(kc);
                        CHECK(key_case_holds(k, b, c, t, *kc));
                        CHECK(lemma_holds_brute(k, b, c, t));
                        if (kc->kind == 3 && t == 1) {
                            for (int i = 1; i <= s; ++i) {
                                CHECK(k[i - 1] == (s - i) * c + b + 1);
                            }
                        }
                        ++instances;
                    }
                }
            }
        }
    }
    CHECK(instances > 1000);
}

TEST_CASE("key lemma: c = 0 also classifies")
{
    for (int s = 1; s <= 3; ++s) {
        for (int b = 0; b <= 3; ++b) {
            for (int t = 0; t <= 3; ++t) {
                const int hi = b + t;
                if (hi < 1) {
                    continue;
                }
                for (const auto &k : tuples(s, 1, hi)) {
                    const auto kc = key_lemma_classify(k, b, 0, t);
                    INFO("b=" << b << " t=" << t);
                    REQUIRE(kc);
                    CHECK(key_case_holds(k, b, 0, t, *kc));
                }
            }
        }
    }
}

TEST_CASE("key_case_holds rejects bad witnesses")
{
    KeyCase kc;
    kc.kind = 3;
    kc.w = {1, 2};
    kc.tvec = {1, 0};
    // ascent from w(1) = 1 to w(2) = 2 needs t_2 > 0
    CHECK_FALSE(key_case_holds({1, 2}, 0, 1, 2, kc));
    kc.kind = 1;
    kc.i = 1;
    CHECK_FALSE(key_case_holds({3, 1}, 1, 1, 2, kc));
}

TEST_CASE("subs_alphabet_check: every case-3 instance")
{
    int checked = 0;
    for (int s = 1; s <= 3; ++s) {
        for (int b = 0; b <= 3; ++b) {
            for (int c = 1; c <= 3; ++c) {
                for (int t = 1; t <= 3; ++t) {
                    for (const auto &k : tuples(s, 1, (s - 1) * c + b + t)) {
                        const Report r = subs_alphabet_check(b, c, t, k);
                        if (r.refused) {
                            continue;
                        }
                        INFO(r.lhs << " " << r.notes);
                        CHECK(r.equal);
                        ++checked;
                    }
                }
            }
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("subs_alphabet_check: examples")
{
    // s = 1, b = 0, c = 1, t = 1, k = (1): L = 0.
    const Report r0 = subs_alphabet_check(0, 1, 1, {1});
    CHECK(r0.equal);
    CHECK(r0.lhs == "0");
    // s = 1, b = 0, c = 1, t = 2, k = (1): a single power of q.
    const Report r1 = subs_alphabet_check(0, 1, 2, {1});
    CHECK(r1.equal);
    CHECK(r1.lhs == "1/q");
    CHECK(subs_alphabet_check(1, 1, 1, {1}).refused);
    // s = 1, b = 0, c = 2, t = 2, k = (1): q(q^{-2} - q) / (1 - q) - (1 + q) = q^{-1}.
    const Report r2 = subs_alphabet_check(0, 2, 2, {1});
    CHECK(r2.equal);
    CHECK(r2.lhs == "1/q");
    // t = 1 and k_i = (s - i)c + b + 1 give 0.
    const Report r3 = subs_alphabet_check(1, 2, 1, {6, 4, 2});
    CHECK(r3.equal);
    CHECK(r3.lhs == "0");
}

TEST_CASE("subs_alphabet_check: random s = 2 instance with t = 3")
{
    std::vector<std::tuple<int, int, std::vector<int>>> pool;
    for (int b = 0; b <= 3; ++b) {
        for (int c = 1; c <= 3; ++c) {
            for (const auto &k : tuples(2, 1, c + b + 3)) {
                const Report r = subs_alphabet_check(b, c, 3, k);
                if (!r.refused) {
                    pool.emplace_back(b, c, k);
                }
            }
        }
    }
    REQUIRE(!pool.empty());
    std::mt19937_64 rng(2024);
    const auto &[b, c, k] = pool[rng() % pool.size()];
    const Report r = subs_alphabet_check(b, c, 3, k);
    INFO(r.lhs);
    CHECK(r.equal);
    CHECK(r.notes == "2 powers");
}

TEST_CASE("verify_symmetrization: examples")
{
    const Report r = verify_symmetrization(2, 1, LaurentPoly(2, one));
    CHECK(r.equal);
    CHECK(r.lhs == (one + q).to_string());
    const LaurentPoly x1 = LaurentPoly::variable(2, 0);
    CHECK(verify_symmetrization(2, 1, x1).refused);
}

TEST_CASE("verify_symmetrization: symmetric test functions")
{
    for (int n = 1; n <= 3; ++n) {
        std::vector<LaurentPoly> fs{LaurentPoly(n, one)};
        LaurentPoly p1(n), pm1(n), e(n, one);
        for (int i = 0; i < n; ++i) {
            p1 += LaurentPoly::variable(n, i);
            pm1 += LaurentPoly::monomial(one, ExpVec::unit(n, i, -1));
            e = e * LaurentPoly::variable(n, i);
        }
        fs.push_back(p1 * pm1);
        fs.push_back(p1 * p1 * pm1 * pm1);
        fs.push_back(e * pm1.pow(static_cast<unsigned>(n)));
        for (int c = 0; c <= 2; ++c) {
            for (const auto &f : fs) {
                const Report r = verify_symmetrization(n, c, f);
                INFO("n=" << n << " c=" << c << " f=" << f.to_string() << " " << r.lhs << " vs " << r.rhs);
                CHECK_FALSE(r.refused);
                CHECK(r.equal);
            }
        }
    }
}

TEST_CASE("verify_symmetrizer_sum: n <= 4")
{
    for (int n = 1; n <= 4; ++n) {
        for (int c = 0; c <= 2; ++c) {
            for (const Report &r : verify_symmetrizer_sum(n, c, 3)) {
                INFO("n=" << n << " c=" << c << " " << r.lhs << " vs " << r.rhs);
                CHECK(r.equal);
            }
        }
    }
}
