#include "poly_gcd.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <mutex>
#include <random>
#include <stdexcept>

namespace ctmac::detail
{

void trim(ZPoly &a);
void trim(Z2Poly &a);

namespace
{

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using ModPoly = std::vector<u64>;

u64 mulmod(u64 a, u64 b, u64 p)
{
    return static_cast<u64>(static_cast<u128>(a) * b % p);
}

u64 addmod(u64 a, u64 b, u64 p)
{
    u64 s = a + b;
    return s >= p ? s - p : s;
}

u64 submod(u64 a, u64 b, u64 p)
{
    return a >= b ? a - b : a + (p - b);
}

u64 powmod(u64 b, u64 e, u64 p)
{
    u64 r = 1;
    while (e) {
        if (e & 1u) {
            r = mulmod(r, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1u;
    }
    return r;
}

u64 invmod(u64 a, u64 p)
{
    return powmod(a, p - 2, p);
}

bool is_prime_u64(u64 n)
{
    if (n < 2) {
        return false;
    }
    for (u64 sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % sp == 0) {
            return n == sp;
        }
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1u;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

// The i-th prime below 2^62, generated on demand.
u64 nth_prime(std::size_t i)
{
    static std::mutex mtx;
    static std::vector<u64> primes;
    std::lock_guard<std::mutex> lock(mtx);
    while (primes.size() <= i) {
        u64 cand = primes.empty() ? (u64{1} << 62) - 1 : primes.back() - 2;
        while (!is_prime_u64(cand)) {
            cand -= 2;
        }
        primes.push_back(cand);
    }
    return primes[i];
}

u64 mod(const BigInt &x, u64 p)
{
    return mpz_fdiv_ui(x.get_mpz_t(), p);
}

void trim_mod(ModPoly &a)
{
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

ModPoly reduce(const ZPoly &a, u64 p)
{
    ModPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = mod(a[i], p);
    }
    trim_mod(r);
    return r;
}

u64 eval(const ModPoly &a, u64 x, u64 p)
{
    u64 r = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        r = addmod(mulmod(r, x, p), *it, p);
    }
    return r;
}

// a <- a mod b, b nonzero.
void rem_inplace(ModPoly &a, const ModPoly &b, u64 p)
{
    const std::size_t db = b.size() - 1;
    const u64 inv = invmod(b.back(), p);
    while (a.size() >= b.size()) {
        const u64 f = mulmod(a.back(), inv, p);
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = submod(a[shift + i], mulmod(f, b[i], p), p);
        }
        trim_mod(a);
    }
}

// Monic gcd over F_p.
ModPoly gcd_mod(ModPoly a, ModPoly b, u64 p)
{
    while (!b.empty()) {
        rem_inplace(a, b, p);
        std::swap(a, b);
    }
    if (!a.empty()) {
        const u64 inv = invmod(a.back(), p);
        for (auto &c : a) {
            c = mulmod(c, inv, p);
        }
    }
    return a;
}

// Newton interpolation through (xs[k], ys[k]); result in the monomial basis.
ModPoly interpolate(const std::vector<u64> &xs, std::vector<u64> ys, u64 p)
{
    const std::size_t n = xs.size();
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t k = n - 1; k >= j; --k) {
            const u64 num = submod(ys[k], ys[k - 1], p);
            const u64 den = submod(xs[k], xs[k - j], p);
            ys[k] = mulmod(num, invmod(den, p), p);
            if (k == j) {
                break;
            }
        }
    }
    ModPoly r{ys[n - 1]};
    for (std::size_t k = n - 1; k-- > 0;) {
        // r <- r * (x - xs[k]) + ys[k]
        ModPoly next(r.size() + 1, 0);
        for (std::size_t i = 0; i < r.size(); ++i) {
            next[i + 1] = addmod(next[i + 1], r[i], p);
            next[i] = submod(next[i], mulmod(r[i], xs[k], p), p);
        }
        next[0] = addmod(next[0], ys[k], p);
        r = std::move(next);
    }
    trim_mod(r);
    return r;
}

// Chinese remaindering of residues h (mod m, in [0, m)) with hp (mod p); h is
// updated in place to residues mod m*p.
void crt_combine(ZPoly &h, const BigInt &m, const ModPoly &hp, u64 p)
{
    const u64 minv = invmod(mod(m, p), p);
    const std::size_t len = std::max(h.size(), hp.size());
    h.resize(len, BigInt(0));
    for (std::size_t i = 0; i < len; ++i) {
        const u64 target = i < hp.size() ? hp[i] : 0;
        const u64 cur = mod(h[i], p);
        const u64 k = mulmod(submod(target, cur, p), minv, p);
        h[i] += m * BigInt(static_cast<unsigned long>(k));
    }
}

ZPoly symmetric_lift(const ZPoly &h, const BigInt &m)
{
    const BigInt half = m / 2;
    ZPoly r = h;
    for (auto &c : r) {
        if (c > half) {
            c -= m;
        }
    }
    trim(r);
    return r;
}

ZPoly to_zpoly(const ModPoly &a)
{
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = BigInt(static_cast<unsigned long>(a[i]));
    }
    return r;
}

ZPoly primitive_part(const ZPoly &a)
{
    ZPoly r = a;
    const BigInt c = content(a);
    if (c != 0 && c != 1) {
        for (auto &x : r) {
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        }
    }
    if (!r.empty() && r.back() < 0) {
        for (auto &x : r) {
            x = -x;
        }
    }
    return r;
}

ZPoly mul(const ZPoly &a, const ZPoly &b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    ZPoly r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    trim(r);
    return r;
}

ZPoly transpose_column(const Z2Poly &a)
{
    // a has deg_q == 0: read its t-coefficients as a univariate polynomial.
    ZPoly r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        r[j] = a[j].empty() ? BigInt(0) : a[j][0];
    }
    trim(r);
    return r;
}

bool all_rows_constant(const Z2Poly &a)
{
    return std::all_of(a.begin(), a.end(), [](const ZPoly &r) { return r.size() <= 1; });
}

// gcd of two polynomials that are primitive in t over Z[q], both of t-degree >= 1.
Z2Poly brown_gcd(const Z2Poly &a, const Z2Poly &b)
{
    const ZPoly &lca = a.back();
    const ZPoly &lcb = b.back();
    const ZPoly gamma = gcd(lca, lcb);
    const std::size_t npoints = static_cast<std::size_t>(degree(gamma) + std::min(deg_q(a), deg_q(b)) + 1);

    int best_dt = std::numeric_limits<int>::max();
    Z2Poly h;
    BigInt m;
    std::optional<Z2Poly> prev_lift;

    for (std::size_t pi = 0;; ++pi) {
        if (pi > 4000) {
            throw std::runtime_error("bivariate gcd: prime budget exhausted");
        }
        const u64 p = nth_prime(pi);
        if (mod(lca.back(), p) == 0 || mod(lcb.back(), p) == 0) {
            continue;
        }
        std::vector<ModPoly> ap, bp;
        for (const auto &r : a) {
            ap.push_back(reduce(r, p));
        }
        for (const auto &r : b) {
            bp.push_back(reduce(r, p));
        }
        const ModPoly gp = reduce(gamma, p);

        std::vector<u64> xs;
        std::vector<ModPoly> vals;
        int dmin = std::numeric_limits<int>::max();
        // Pseudo-random evaluation points, so a structurally unlucky point (such as
        // a small integer) cannot recur for every prime.
        std::mt19937_64 rng(pi);
        std::uniform_int_distribution<u64> pick(1, p - 1);
        while (xs.size() < npoints) {
            const u64 alpha = pick(rng);
            if (std::find(xs.begin(), xs.end(), alpha) != xs.end()) {
                continue;
            }
            if (eval(ap.back(), alpha, p) == 0 || eval(bp.back(), alpha, p) == 0) {
                continue;
            }
            ModPoly ua(ap.size()), ub(bp.size());
            for (std::size_t j = 0; j < ap.size(); ++j) {
                ua[j] = eval(ap[j], alpha, p);
            }
            for (std::size_t j = 0; j < bp.size(); ++j) {
                ub[j] = eval(bp[j], alpha, p);
            }
            ModPoly g = gcd_mod(std::move(ua), std::move(ub), p);
            const int d = static_cast<int>(g.size()) - 1;
            if (d == 0) {
                return Z2Poly{ZPoly{BigInt(1)}};
            }
            if (d > dmin) {
                continue;
            }
            if (d < dmin) {
                dmin = d;
                xs.clear();
                vals.clear();
            }
            const u64 ga = eval(gp, alpha, p);
            for (auto &c : g) {
                c = mulmod(c, ga, p);
            }
            xs.push_back(alpha);
            vals.push_back(std::move(g));
        }
        if (dmin > best_dt) {
            continue;
        }
        Z2Poly hp_lift;
        std::vector<ModPoly> hp(static_cast<std::size_t>(dmin) + 1);
        for (int j = 0; j <= dmin; ++j) {
            std::vector<u64> ys(xs.size());
            for (std::size_t k = 0; k < xs.size(); ++k) {
                ys[k] = vals[k][static_cast<std::size_t>(j)];
            }
            hp[static_cast<std::size_t>(j)] = interpolate(xs, ys, p);
        }
        if (dmin < best_dt) {
            best_dt = dmin;
            h.assign(hp.size(), ZPoly{});
            for (std::size_t j = 0; j < hp.size(); ++j) {
                h[j] = to_zpoly(hp[j]);
            }
            m = BigInt(static_cast<unsigned long>(p));
            prev_lift.reset();
        } else {
            for (std::size_t j = 0; j < hp.size(); ++j) {
                crt_combine(h[j], m, hp[j], p);
            }
            m *= BigInt(static_cast<unsigned long>(p));
        }
        Z2Poly lift(h.size());
        for (std::size_t j = 0; j < h.size(); ++j) {
            lift[j] = symmetric_lift(h[j], m);
        }
        if (prev_lift && *prev_lift == lift) {
            // Candidate: primitive part in t over Z[q].
            ZPoly cont;
            for (const auto &r : lift) {
                cont = gcd(cont, r);
            }
            Z2Poly g = lift;
            for (auto &r : g) {
                if (!r.empty()) {
                    r = *divide_exact(r, cont);
                }
            }
            trim(g);
            if (divide_exact(a, g) && divide_exact(b, g)) {
                return g;
            }
        }
        prev_lift = std::move(lift);
    }
}

} // namespace

void trim(ZPoly &a)
{
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

void trim(Z2Poly &a)
{
    for (auto &r : a) {
        trim(r);
    }
    while (!a.empty() && a.back().empty()) {
        a.pop_back();
    }
}

int degree(const ZPoly &a)
{
    return static_cast<int>(a.size()) - 1;
}

int deg_q(const Z2Poly &a)
{
    int d = -1;
    for (const auto &r : a) {
        d = std::max(d, degree(r));
    }
    return d;
}

BigInt content(const ZPoly &a)
{
    BigInt g = 0;
    for (const auto &c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    return g;
}

std::optional<ZPoly> divide_exact(const ZPoly &a, const ZPoly &b)
{
    if (b.empty()) {
        throw std::domain_error("polynomial division by zero");
    }
    if (a.empty()) {
        return ZPoly{};
    }
    if (a.size() < b.size()) {
        return std::nullopt;
    }
    ZPoly r = a;
    ZPoly qt(a.size() - b.size() + 1);
    const BigInt &lb = b.back();
    BigInt f, rem;
    for (std::size_t k = qt.size(); k-- > 0;) {
        BigInt &top = r[k + b.size() - 1];
        if (top == 0) {
            continue;
        }
        mpz_tdiv_qr(f.get_mpz_t(), rem.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        if (rem != 0) {
            return std::nullopt;
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
            mpz_submul(r[k + i].get_mpz_t(), f.get_mpz_t(), b[i].get_mpz_t());
        }
        qt[k] = f;
    }
    for (const auto &c : r) {
        if (c != 0) {
            return std::nullopt;
        }
    }
    trim(qt);
    return qt;
}

std::optional<Z2Poly> divide_exact(const Z2Poly &a, const Z2Poly &b)
{
    if (b.empty()) {
        throw std::domain_error("polynomial division by zero");
    }
    if (a.empty()) {
        return Z2Poly{};
    }
    if (a.size() < b.size()) {
        return std::nullopt;
    }
    Z2Poly r = a;
    Z2Poly qt(a.size() - b.size() + 1);
    for (std::size_t k = qt.size(); k-- > 0;) {
        ZPoly &top = r[k + b.size() - 1];
        trim(top);
        if (top.empty()) {
            continue;
        }
        auto f = divide_exact(top, b.back());
        if (!f) {
            return std::nullopt;
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
            const ZPoly prod = mul(*f, b[i]);
            ZPoly &dst = r[k + i];
            if (dst.size() < prod.size()) {
                dst.resize(prod.size(), BigInt(0));
            }
            for (std::size_t j = 0; j < prod.size(); ++j) {
                dst[j] -= prod[j];
            }
            trim(dst);
        }
        qt[k] = std::move(*f);
    }
    for (const auto &row : r) {
        for (const auto &c : row) {
            if (c != 0) {
                return std::nullopt;
            }
        }
    }
    trim(qt);
    return qt;
}

ZPoly gcd(const ZPoly &a0, const ZPoly &b0)
{
    if (a0.empty()) {
        ZPoly r = b0;
        if (!r.empty() && r.back() < 0) {
            for (auto &x : r) {
                x = -x;
            }
        }
        return r;
    }
    if (b0.empty()) {
        return gcd(b0, a0);
    }
    const BigInt ca = content(a0), cb = content(b0);
    BigInt cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a0.size() == 1 || b0.size() == 1) {
        return ZPoly{cg};
    }
    const ZPoly a = primitive_part(a0), b = primitive_part(b0);
    if (a == b) {
        ZPoly r = a;
        for (auto &x : r) {
            x *= cg;
        }
        return r;
    }
    BigInt lcg;
    mpz_gcd(lcg.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

    int best = std::numeric_limits<int>::max();
    ZPoly h;
    BigInt m;
    std::optional<ZPoly> prev_lift;
    for (std::size_t pi = 0;; ++pi) {
        if (pi > 4000) {
            throw std::runtime_error("univariate gcd: prime budget exhausted");
        }
        const u64 p = nth_prime(pi);
        if (mod(a.back(), p) == 0 || mod(b.back(), p) == 0) {
            continue;
        }
        ModPoly g = gcd_mod(reduce(a, p), reduce(b, p), p);
        const int d = static_cast<int>(g.size()) - 1;
        if (d == 0) {
            return ZPoly{cg};
        }
        if (d > best) {
            continue;
        }
        const u64 l = mod(lcg, p);
        for (auto &c : g) {
            c = mulmod(c, l, p);
        }
        if (d < best) {
            best = d;
            h = to_zpoly(g);
            m = BigInt(static_cast<unsigned long>(p));
            prev_lift.reset();
        } else {
            crt_combine(h, m, g, p);
            m *= BigInt(static_cast<unsigned long>(p));
        }
        ZPoly lift = symmetric_lift(h, m);
        if (prev_lift && *prev_lift == lift) {
            ZPoly cand = primitive_part(lift);
            if (divide_exact(a, cand) && divide_exact(b, cand)) {
                for (auto &x : cand) {
                    x *= cg;
                }
                return cand;
            }
        }
        prev_lift = std::move(lift);
    }
}

Z2Poly gcd(const Z2Poly &a, const Z2Poly &b)
{
    if (a.empty()) {
        return b;
    }
    if (b.empty()) {
        return a;
    }
    if (a.size() == 1 || b.size() == 1) {
        const Z2Poly &flat = a.size() == 1 ? a : b;
        const Z2Poly &other = a.size() == 1 ? b : a;
        ZPoly g = flat[0];
        for (const auto &r : other) {
            g = gcd(g, r);
            if (g.size() == 1 && (g[0] == 1 || g[0] == -1)) {
                break;
            }
        }
        return Z2Poly{g};
    }
    if (all_rows_constant(a) && all_rows_constant(b)) {
        const ZPoly g = gcd(transpose_column(a), transpose_column(b));
        Z2Poly r(g.size());
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (g[j] != 0) {
                r[j] = ZPoly{g[j]};
            }
        }
        return r;
    }
    ZPoly ca, cb;
    for (const auto &r : a) {
        ca = gcd(ca, r);
    }
    for (const auto &r : b) {
        cb = gcd(cb, r);
    }
    auto strip = [](const Z2Poly &x, const ZPoly &c) {
        Z2Poly r = x;
        for (auto &row : r) {
            if (!row.empty()) {
                row = *divide_exact(row, c);
            }
        }
        return r;
    };
    const Z2Poly pa = strip(a, ca), pb = strip(b, cb);
    const ZPoly cg = gcd(ca, cb);
    Z2Poly g = pa == pb ? pa : brown_gcd(pa, pb);
    for (auto &row : g) {
        row = mul(row, cg);
    }
    trim(g);
    return g;
}

} // namespace ctmac::detail
