#include <ctmac/toolkit.hpp>

#include <algorithm>
#include <chrono>
#include <numeric>

#include <ctmac/errors.hpp>
#include <ctmac/macdonald.hpp>
#include <ctmac/sampling.hpp>
#include <ctmac/symfunc.hpp>

namespace ctmac
{

namespace
{

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string join(const std::vector<int> &v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s;
}

std::string join(const std::vector<BigRat> &v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + v[i].get_str();
    }
    return s;
}

ExpVec diff(int n, int i, int j)
{
    return ExpVec::unit(n, i) - ExpVec::unit(n, j);
}

// prod_{0<=i<j<n} (x_i/x_j)_c (q x_j/x_i)_c, one factor per Pochhammer.
void push_pair_factors(std::vector<LaurentPoly> &fs, int n, int c, int skip = -1)
{
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (i == skip || j == skip) {
                continue;
            }
            fs.push_back(qpoch_monomial(RatFunc(1L), diff(n, i, j), c));
            fs.push_back(qpoch_monomial(RatFunc::q_pow(1), diff(n, j, i), c));
        }
    }
}

LaurentPoly product(const std::vector<LaurentPoly> &fs, int n)
{
    LaurentPoly out(n, RatFunc(1L));
    for (const auto &f : fs) {
        out = out * f;
    }
    return out;
}

// (x)_k with q = q0, evaluated numerically.
BigRat qpoch_num(const BigRat &x, const BigRat &q0, int k)
{
    BigRat out = 1, qi = 1;
    for (int i = 0; i < k; ++i) {
        out *= 1 - x * qi;
        qi *= q0;
    }
    return out;
}

BigRat qpow_num(const BigRat &q0, int e)
{
    BigRat out = 1;
    for (int i = 0; i < std::abs(e); ++i) {
        out *= q0;
    }
    return e >= 0 ? out : BigRat(1 / out);
}

BigRat checked_div(const BigRat &a, const BigRat &b)
{
    if (b == 0) {
        throw PoleError("division by zero at sample point");
    }
    return a / b;
}

int max_of(const std::vector<int> &v)
{
    return v.empty() ? 0 : *std::max_element(v.begin(), v.end());
}

int sum_of(const std::vector<int> &v)
{
    return std::accumulate(v.begin(), v.end(), 0);
}

RatFunc vanishing_ct(int n, int c, const std::vector<int> &v, const LaurentPoly &sym_part, CtStats *stats)
{
    ExpVec e(n);
    for (int i = 0; i < n; ++i) {
        e.set(i, -v[static_cast<std::size_t>(i)]);
    }
    std::vector<LaurentPoly> fs{LaurentPoly::monomial(RatFunc(1L), e), sym_part};
    push_pair_factors(fs, n, c);
    return ct_product(fs, stats);
}

bool any_case3_witness(const std::vector<int> &k, int b, int c, int t)
{
    for (const KeyCase &kc : key_lemma_witnesses(k, b, c, t)) {
        if (kc.kind == 3) {
            return true;
        }
    }
    return false;
}

} // namespace

LaurentPoly cai_coefficient(int n, int c, int i, int j)
{
    if (n < 1 || c < 1 || i < 1 || i > n || j < 0 || j >= c) {
        throw DomainError("cai_coefficient: requires n >= 1, c >= 1, 1 <= i <= n, 0 <= j < c");
    }
    const int zi = i - 1;
    const RatFunc pref = RatFunc::q_pow(c * ((j + 1) * n - i - j)) / (qpoch_scalar(-j, j) * qpoch_scalar(1, c - j - 1));
    std::vector<LaurentPoly> fs{LaurentPoly(n, pref)};
    for (int l = 0; l < n; ++l) {
        if (l < zi) {
            fs.push_back(qpoch_monomial(RatFunc::q_pow(1 - c), diff(n, zi, l), j));
            fs.push_back(qpoch_monomial(RatFunc::q_pow(j + 1), diff(n, zi, l), c - j));
        } else if (l > zi) {
            fs.push_back(qpoch_monomial(RatFunc::q_pow(-c), diff(n, zi, l), j + 1));
            fs.push_back(qpoch_monomial(RatFunc::q_pow(j + 1), diff(n, zi, l), c - j - 1));
        }
    }
    push_pair_factors(fs, n, c, zi);
    return product(fs, n);
}

std::vector<Report> verify_cai_split(int n, int c, std::uint64_t seed, int points)
{
    if (n < 1 || c < 1) {
        throw DomainError("verify_cai_split: requires n >= 1 and c >= 1");
    }
    std::vector<Report> out;
    std::vector<std::vector<LaurentPoly>> coef(static_cast<std::size_t>(n));
    {
        const auto start = Clock::now();
        Report r;
        r.check = "cai.polynomial";
        r.param("n", n).param("c", c);
        int bad = 0;
        for (int i = 1; i <= n; ++i) {
            for (int j = 0; j < c; ++j) {
                LaurentPoly a = cai_coefficient(n, c, i, j);
                if (!a.is_zero() && a.degree_in(i - 1).first < 0) {
                    ++bad;
                    r.note("A_" + std::to_string(i) + std::to_string(j) + " has a negative power of z_" + std::to_string(i));
                }
                coef[static_cast<std::size_t>(i - 1)].push_back(std::move(a));
            }
        }
        r.lhs = std::to_string(bad);
        r.rhs = "0";
        r.equal = bad == 0;
        r.millis = millis_since(start);
        out.push_back(r);
    }

    RationalSampler rng(seed);
    for (int pt = 0; pt < points; ++pt) {
        const auto start = Clock::now();
        Report r;
        r.check = "cai.split";
        r.param("n", n).param("c", c).param("seed", std::to_string(seed)).param("point", pt);
        for (int attempt = 0;; ++attempt) {
            if (attempt == 100) {
                r.refused = true;
                r.note("no pole-free sample point found");
                break;
            }
            const BigRat q0 = rng.generic_q();
            std::vector<BigRat> z;
            for (int i = 0; i < n; ++i) {
                z.push_back(rng.nonzero());
            }
            const BigRat w = rng.nonzero();
            try {
                BigRat lhs = 1;
                for (int i = 0; i < n; ++i) {
                    for (int k = i + 1; k < n; ++k) {
                        lhs *= qpoch_num(checked_div(z[i], z[k]), q0, c) * qpoch_num(checked_div(q0 * z[k], z[i]), q0, c);
                    }
                    lhs = checked_div(lhs, qpoch_num(checked_div(z[i], w), q0, c));
                }
                BigRat rhs = 0;
                for (int i = 0; i < n; ++i) {
                    for (int j = 0; j < c; ++j) {
                        const BigRat a = coef[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eval(z, q0);
                        rhs += checked_div(a, 1 - qpow_num(q0, j) * z[i] / w);
                    }
                }
                r.param("q", q0.get_str()).param("z", join(z)).param("w", w.get_str());
                r.lhs = lhs.get_str();
                r.rhs = rhs.get_str();
                r.equal = lhs == rhs;
                break;
            } catch (const PoleError &) {
                continue;
            }
        }
        r.millis = millis_since(start);
        out.push_back(r);
    }
    return out;
}

Report verify_vanishing_h(int n, int c, const std::vector<int> &v, const Partition &lambda)
{
    const auto start = Clock::now();
    Report r;
    r.check = "vanish.h";
    r.param("n", n).param("c", c).param("v", join(v)).param("lambda", lambda.to_string());
    if (static_cast<int>(v.size()) != n || n < 1 || c < 0) {
        throw StructuralError("verify_vanishing_h: v must have n entries, n >= 1, c >= 0");
    }
    if (sum_of(v) != lambda.size() || lambda.part(1) <= max_of(v)) {
        r.refused = true;
        r.note("requires |v| = |lambda| and lambda_1 > max v");
        return r;
    }
    Alphabet alpha = Alphabet::plain(n, 0, n);
    for (auto &l : alpha.letters) {
        l.geometric = std::make_pair(RatFunc::q_pow(c), RatFunc::q_pow(1));
    }
    CtStats st;
    const RatFunc ct = vanishing_ct(n, c, v, sym_eval(h_in_p(lambda), alpha), &st);
    r.lhs = ct.to_string();
    r.rhs = "0";
    r.equal = ct.is_zero();
    r.terms_peak = st.terms_peak;
    r.millis = millis_since(start);
    return r;
}

Report verify_vanishing_skew(int n, int c, const std::vector<int> &v, const Partition &lambda, const Partition &mu)
{
    const auto start = Clock::now();
    Report r;
    r.check = "vanish.skew";
    r.param("n", n).param("c", c).param("v", join(v)).param("lambda", lambda.to_string()).param("mu", mu.to_string());
    if (static_cast<int>(v.size()) != n || n < 1 || c < 0) {
        throw StructuralError("verify_vanishing_skew: v must have n entries, n >= 1, c >= 0");
    }
    const int l = mu.length();
    if (!contains(lambda, mu) || l >= lambda.length() || lambda.size() - mu.size() != sum_of(v) ||
        lambda.part(static_cast<std::size_t>(l + 1)) <= max_of(v)) {
        r.refused = true;
        r.note("requires mu in lambda, length(mu) < length(lambda), |lambda/mu| = |v|, lambda_{length(mu)+1} > max v");
        return r;
    }
    const SymF f = skew(lambda, mu, SkewKind::P).specialize_t(c);
    CtStats st;
    const RatFunc ct = vanishing_ct(n, c, v, sym_eval(f, Alphabet::plain(n, 0, n)), &st);
    r.lhs = ct.to_string();
    r.rhs = "0";
    r.equal = ct.is_zero();
    r.terms_peak = st.terms_peak;
    r.millis = millis_since(start);
    return r;
}

std::optional<KeyCase> key_lemma_classify(const std::vector<int> &k, int b, int c, int t)
{
    const int s = static_cast<int>(k.size());
    if (s < 1 || b < 0 || c < 0 || t < 0) {
        throw Refused("key lemma: requires s >= 1 and b, c, t >= 0");
    }
    const int hi = (s - 1) * c + b + t;
    for (int ki : k) {
        if (ki < 1 || ki > hi) {
            throw Refused("key lemma: requires 1 <= k_i <= (s-1)c + b + t");
        }
    }
    for (int i = 0; i < s; ++i) {
        if (k[static_cast<std::size_t>(i)] <= b) {
            KeyCase kc;
            kc.kind = 1;
            kc.i = i + 1;
            return kc;
        }
    }
    for (int i = 0; i < s; ++i) {
        for (int j = i + 1; j < s; ++j) {
            const int d = k[static_cast<std::size_t>(i)] - k[static_cast<std::size_t>(j)];
            if (-c <= d && d <= c - 1) {
                KeyCase kc;
                kc.kind = 2;
                kc.i = i + 1;
                kc.j = j + 1;
                return kc;
            }
        }
    }
    // The tournament is transitive; its Hamilton path orders the indices by
    // increasing k, larger index first on ties.
    KeyCase kc;
    kc.kind = 3;
    kc.w.resize(static_cast<std::size_t>(s));
    std::iota(kc.w.begin(), kc.w.end(), 1);
    std::sort(kc.w.begin(), kc.w.end(), [&](int x, int y) {
        const int kx = k[static_cast<std::size_t>(x - 1)], ky = k[static_cast<std::size_t>(y - 1)];
        return kx != ky ? kx < ky : x > y;
    });
    int prev = b - c;
    for (int wj : kc.w) {
        const int kw = k[static_cast<std::size_t>(wj - 1)];
        kc.tvec.push_back(kw - prev - c);
        prev = kw;
    }
    if (!key_case_holds(k, b, c, t, kc)) {
        return std::nullopt;
    }
    return kc;
}

bool key_case_holds(const std::vector<int> &k, int b, int c, int t, const KeyCase &kc)
{
    const int s = static_cast<int>(k.size());
    auto kk = [&](int i) { return k[static_cast<std::size_t>(i - 1)]; };
    switch (kc.kind) {
    case 1:
        return kc.i >= 1 && kc.i <= s && 1 <= kk(kc.i) && kk(kc.i) <= b;
    case 2:
        return kc.i >= 1 && kc.i < kc.j && kc.j <= s && -c <= kk(kc.i) - kk(kc.j) && kk(kc.i) - kk(kc.j) <= c - 1;
    case 3: {
        if (static_cast<int>(kc.w.size()) != s || static_cast<int>(kc.tvec.size()) != s) {
            return false;
        }
        std::vector<int> sorted = kc.w;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < s; ++i) {
            if (sorted[static_cast<std::size_t>(i)] != i + 1) {
                return false;
            }
        }
        int total = 0;
        for (int j = 1; j <= s; ++j) {
            const int tj = kc.tvec[static_cast<std::size_t>(j - 1)];
            const int wj = kc.w[static_cast<std::size_t>(j - 1)];
            const int wprev = j == 1 ? 0 : kc.w[static_cast<std::size_t>(j - 2)];
            if (tj < 0) {
                return false;
            }
            if (j == 1 ? kk(wj) != b + tj : kk(wj) - kk(wprev) != c + tj) {
                return false;
            }
            if (wprev < wj && tj <= 0) {
                return false;
            }
            total += tj;
        }
        return 1 <= total && total <= t;
    }
    default:
        return false;
    }
}

std::vector<KeyCase> key_lemma_witnesses(const std::vector<int> &k, int b, int c, int t)
{
    const int s = static_cast<int>(k.size());
    std::vector<KeyCase> out;
    for (int i = 1; i <= s; ++i) {
        KeyCase kc;
        kc.kind = 1;
        kc.i = i;
        if (key_case_holds(k, b, c, t, kc)) {
            out.push_back(kc);
        }
    }
    for (int i = 1; i <= s; ++i) {
        for (int j = i + 1; j <= s; ++j) {
            KeyCase kc;
            kc.kind = 2;
            kc.i = i;
            kc.j = j;
            if (key_case_holds(k, b, c, t, kc)) {
                out.push_back(kc);
            }
        }
    }
    std::vector<int> w(static_cast<std::size_t>(s));
    std::iota(w.begin(), w.end(), 1);
    do {
        KeyCase kc;
        kc.kind = 3;
        kc.w = w;
        int prev = b - c; // so that t_1 = k_{w(1)} - b
        for (int wj : w) {
            const int kw = k[static_cast<std::size_t>(wj - 1)];
            kc.tvec.push_back(kw - prev - c);
            prev = kw;
        }
        if (key_case_holds(k, b, c, t, kc)) {
            out.push_back(kc);
        }
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

Report subs_alphabet_check(int b, int c, int t, const std::vector<int> &k)
{
    const auto start = Clock::now();
    Report r;
    r.check = "keylemma.subs";
    r.param("b", b).param("c", c).param("t", t).param("k", join(k));
    const int s = static_cast<int>(k.size());
    bool in_range = s >= 1 && t >= 1 && b >= 0 && c >= 0;
    for (int ki : k) {
        in_range = in_range && 1 <= ki && ki <= (s - 1) * c + b + t;
    }
    if (!in_range || !any_case3_witness(k, b, c, t)) {
        r.refused = true;
        r.note("requires t >= 1, k in range and a case-3 witness");
        return r;
    }
    const int a = -(s - 1) * c - b - t;
    const int ks = k.back();
    const RatFunc one(1L), q = RatFunc::q_pow(1);
    RatFunc L = -(RatFunc::q_pow(c - b - 1) - RatFunc::q_pow(a)) / (one - q) * RatFunc::q_pow(ks);
    for (int ki : k) {
        L -= (one - RatFunc::q_pow(c)) / (one - q) * RatFunc::q_pow(ks - ki);
    }
    r.lhs = L.to_string();
    // Shift to a polynomial and read off the coefficients.
    const int shift = (s - 1) * c + b + t + 1;
    const RatFunc shifted = L * RatFunc::q_pow(shift);
    int count = 0;
    bool zero_one = shifted.is_polynomial() && shifted.is_univariate();
    if (zero_one && !shifted.is_zero()) {
        const QtPoly &num = shifted.num();
        const BigRat d = shifted.den().coeff(0, 0);
        for (int e = 0; e <= num.deg_q(); ++e) {
            const BigRat co = num.coeff(e, 0) / d;
            if (co == 1) {
                ++count;
            } else if (co != 0) {
                zero_one = false;
            }
        }
    }
    r.rhs = std::to_string(t - 1) + " distinct powers of q";
    r.equal = zero_one && count == t - 1;
    if (!zero_one) {
        r.note("not a sum of distinct powers of q");
    } else {
        r.note(std::to_string(count) + " powers");
    }
    r.millis = millis_since(start);
    return r;
}

Report verify_symmetrization(int n, int c, const LaurentPoly &f)
{
    const auto start = Clock::now();
    Report r;
    r.check = "symmetrize.ct";
    r.param("n", n).param("c", c).param("f", f.to_string());
    if (n < 1 || c < 0 || f.nvars() != n) {
        throw StructuralError("verify_symmetrization: f must have n >= 1 variables, c >= 0");
    }
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
        if (f.permute(perm) != f) {
            r.refused = true;
            r.note("f is not symmetric");
            return r;
        }
    }
    std::vector<LaurentPoly> lhs_f{f};
    push_pair_factors(lhs_f, n, c);
    CtStats st;
    const RatFunc lhs = ct_product(lhs_f, &st);

    std::vector<LaurentPoly> rhs_f{f};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) {
                rhs_f.push_back(qpoch_monomial(RatFunc(1L), diff(n, i, j), c));
            }
        }
    }
    RatFunc rhs = ct_product(rhs_f);
    BigInt fact = 1;
    for (int i = 2; i <= n; ++i) {
        fact *= i;
    }
    rhs /= RatFunc(BigRat(fact));
    for (int i = 1; i < n; ++i) {
        // (1 - q^{(i+1)c})/(1 - q^c), read as i + 1 at c = 0
        RatFunc geo(0L);
        for (int k = 0; k <= i; ++k) {
            geo += RatFunc::q_pow(k * c);
        }
        rhs *= geo;
    }
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.equal = lhs == rhs;
    r.terms_peak = st.terms_peak;
    r.millis = millis_since(start);
    return r;
}

std::vector<Report> verify_symmetrizer_sum(int n, int c, std::uint64_t seed, int points)
{
    if (n < 1 || c < 0) {
        throw DomainError("verify_symmetrizer_sum: requires n >= 1 and c >= 0");
    }
    RationalSampler rng(seed);
    std::vector<Report> out;
    for (int pt = 0; pt < points; ++pt) {
        const auto start = Clock::now();
        Report r;
        r.check = "symmetrize.sum";
        r.param("n", n).param("c", c).param("seed", std::to_string(seed)).param("point", pt);
        for (int attempt = 0;; ++attempt) {
            if (attempt == 100) {
                r.refused = true;
                r.note("no pole-free sample point found");
                break;
            }
            const BigRat q0 = rng.generic_q();
            std::vector<BigRat> x;
            for (int i = 0; i < n; ++i) {
                x.push_back(rng.nonzero());
            }
            try {
                const BigRat qc = qpow_num(q0, c);
                BigRat lhs = 0;
                std::vector<int> w(static_cast<std::size_t>(n));
                std::iota(w.begin(), w.end(), 0);
                do {
                    BigRat term = 1;
                    for (int i = 0; i < n; ++i) {
                        for (int j = i + 1; j < n; ++j) {
                            const BigRat ratio = x[static_cast<std::size_t>(w[static_cast<std::size_t>(j)])] /
                                                 x[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])];
                            term *= checked_div(1 - qc * ratio, 1 - ratio);
                        }
                    }
                    lhs += term;
                } while (std::next_permutation(w.begin(), w.end()));
                BigRat rhs = 1;
                for (int i = 1; i < n; ++i) {
                    // (1 - q^{(i+1)c})/(1 - q^c) = 1 + q^c + ... + q^{ic}
                    BigRat geo = 0;
                    for (int k = 0; k <= i; ++k) {
                        geo += qpow_num(qc, k);
                    }
                    rhs *= geo;
                }
                r.param("q", q0.get_str()).param("x", join(x));
                r.lhs = lhs.get_str();
                r.rhs = rhs.get_str();
                r.equal = lhs == rhs;
                break;
            } catch (const PoleError &) {
                continue;
            }
        }
        r.millis = millis_since(start);
        out.push_back(r);
    }
    return out;
}

} // namespace ctmac
