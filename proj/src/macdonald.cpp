#include <ctmac/macdonald.hpp>

#include <cstdlib>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

#include <ctmac/errors.hpp>

namespace ctmac
{

namespace
{

struct Entry {
    SymF P;
    RatFunc b;
};

struct Cache {
    std::shared_mutex mu;
    std::map<Partition, std::shared_ptr<const Entry>> generic;
    std::map<std::pair<Partition, int>, std::shared_ptr<const SymF>> special;
};

Cache &cache()
{
    static Cache c;
    return c;
}

std::vector<Partition> increasing_lex(int degree)
{
    auto ps = partitions_of(degree);
    return {ps.rbegin(), ps.rend()};
}

// Fill the cache for one degree (or return without caching past the bound).
std::map<Partition, std::shared_ptr<const Entry>> compute_degree(int degree)
{
    std::map<Partition, std::shared_ptr<const Entry>> out;
    for (auto &[lam, P] : gram_schmidt(increasing_lex(degree))) {
        const RatFunc b = hall_scalar(P, P).inverse();
        out.emplace(lam, std::make_shared<const Entry>(Entry{std::move(P), b}));
    }
    return out;
}

std::shared_ptr<const Entry> entry(const Partition &lambda)
{
    Cache &c = cache();
    {
        std::shared_lock lock(c.mu);
        if (auto it = c.generic.find(lambda); it != c.generic.end()) {
            return it->second;
        }
    }
    auto fresh = compute_degree(lambda.size());
    auto found = fresh.at(lambda);
    if (lambda.size() <= mac_cache_max_degree()) {
        std::unique_lock lock(c.mu);
        // First write wins; a concurrent duplicate is equal anyway.
        for (auto &kv : fresh) {
            c.generic.emplace(kv.first, kv.second);
        }
        return c.generic.at(lambda);
    }
    return found;
}

} // namespace

int mac_cache_max_degree()
{
    static const int bound = [] {
        const char *env = std::getenv("CT_MACD_CACHE_MAX");
        if (env == nullptr || *env == '\0') {
            return 8;
        }
        try {
            return std::stoi(env);
        } catch (const std::exception &) {
            return 8;
        }
    }();
    return bound;
}

void mac_cache_clear()
{
    Cache &c = cache();
    std::unique_lock lock(c.mu);
    c.generic.clear();
    c.special.clear();
}

std::map<Partition, SymF> gram_schmidt(const std::vector<Partition> &order)
{
    std::map<Partition, SymF> out;
    if (order.empty()) {
        return out;
    }
    const int degree = order.front().size();
    std::map<Partition, RatFunc> norm;
    for (const auto &rho : partitions_of(degree)) {
        norm.emplace(rho, hall_norm_p(rho));
    }
    auto scalar = [&](const SymF &f, const SymF &g) {
        RatFunc s(0L);
        for (const auto &[rho, c] : f.coeffs()) {
            const auto it = g.coeffs().find(rho);
            if (it != g.coeffs().end()) {
                s += c * it->second * norm.at(rho);
            }
        }
        return s;
    };
    std::vector<std::pair<SymF, RatFunc>> done; // (P, <P, P>)
    for (const auto &lam : order) {
        if (lam.size() != degree) {
            throw StructuralError("gram_schmidt: mixed degrees");
        }
        const SymF m = m_in_p(lam);
        SymF P = m;
        for (const auto &[Pm, nm] : done) {
            const RatFunc proj = scalar(m, Pm);
            if (!proj.is_zero()) {
                P -= Pm * (proj / nm);
            }
        }
        const RatFunc nn = scalar(P, P);
        done.emplace_back(P, nn);
        out.emplace(lam, std::move(P));
    }
    return out;
}

SymF mac_P(const Partition &lambda)
{
    return entry(lambda)->P;
}

RatFunc b_norm(const Partition &lambda)
{
    return entry(lambda)->b;
}

SymF mac_Q(const Partition &lambda)
{
    const auto e = entry(lambda);
    return e->P * e->b;
}

SymF mac_P_at(const Partition &lambda, int c)
{
    Cache &ca = cache();
    const auto key = std::make_pair(lambda, c);
    {
        std::shared_lock lock(ca.mu);
        if (auto it = ca.special.find(key); it != ca.special.end()) {
            return *it->second;
        }
    }
    auto P = std::make_shared<const SymF>(mac_P(lambda).specialize_t(c));
    if (lambda.size() <= mac_cache_max_degree()) {
        std::unique_lock lock(ca.mu);
        ca.special.emplace(key, P);
    }
    return *P;
}

RatFunc lr_coeff(const Partition &lambda, const Partition &mu, const Partition &nu)
{
    if (mu.size() + nu.size() != lambda.size()) {
        return RatFunc(0L);
    }
    return hall_scalar(mac_Q(lambda), mac_P(mu) * mac_P(nu));
}

SymF skew(const Partition &lambda, const Partition &mu, SkewKind kind)
{
    const int d = lambda.size() - mu.size();
    if (d < 0 || !contains(lambda, mu)) {
        return SymF(std::max(d, 0));
    }
    // f^lambda_{mu nu} = <Q_lambda, P_mu P_nu>; P_mu P_nu is only needed against Q_lambda.
    const SymF Ql = mac_Q(lambda);
    const SymF Pm = mac_P(mu);
    SymF out(d);
    for (const auto &nu : partitions_of(d)) {
        const RatFunc f = hall_scalar(Ql, Pm * mac_P(nu));
        if (!f.is_zero()) {
            out += mac_Q(nu) * f;
        }
    }
    if (kind == SkewKind::P) {
        out *= b_norm(mu) / b_norm(lambda);
    }
    return out;
}

PartitionCoeffs pieri_expand(const Partition &mu, int r)
{
    if (r < 1) {
        throw DomainError("pieri_expand: r must be positive");
    }
    const SymF prod = mac_P(mu) * g_in_p(r);
    PartitionCoeffs out;
    for (const auto &lam : partitions_of(mu.size() + r)) {
        const RatFunc c = hall_scalar(prod, mac_Q(lam));
        if (!c.is_zero()) {
            out.emplace(lam, c);
        }
    }
    return out;
}

PartitionCoeffs g_expansion(const Partition &lambda)
{
    // g_nu and m_nu are dual bases, so the g-coordinate at nu is <P_lambda, m_nu>.
    const SymF P = mac_P(lambda);
    PartitionCoeffs out;
    for (const auto &nu : partitions_of(lambda.size())) {
        const RatFunc c = hall_scalar(P, m_in_p(nu));
        if (!c.is_zero()) {
            out.emplace(nu, c);
        }
    }
    return out;
}

RatFunc qt_factorial(const Partition &lambda, const RatFunc &a)
{
    RatFunc out(1L);
    for (int i = 1; i <= lambda.length(); ++i) {
        out *= qpoch(a * RatFunc::t_pow(1 - i), lambda.part(static_cast<std::size_t>(i)));
    }
    return out;
}

RatFunc hook_poly(const Partition &lambda, int n)
{
    if (n == 0) {
        n = lambda.length();
    }
    if (n < lambda.length()) {
        throw DomainError("hook_poly: n must be at least the length of lambda");
    }
    auto part = [&](int i) { return lambda.part(static_cast<std::size_t>(i)); };
    RatFunc out(1L);
    for (int i = 1; i <= n; ++i) {
        out *= qpoch(RatFunc::t_pow(n - i + 1), part(i));
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const int k = part(i) - part(j);
            out *= qpoch(RatFunc::t_pow(j - i), k) / qpoch(RatFunc::t_pow(j - i + 1), k);
        }
    }
    return out;
}

RatFunc principal_spec(const Partition &lambda, const RatFunc &a, int n)
{
    return RatFunc::t_pow(lambda.nstat()) * qt_factorial(lambda, a) / hook_poly(lambda, n);
}

DualityPair duality_apply(const Partition &lambda, const Partition &mu)
{
    const RatFunc q = RatFunc::q_pow(1), t = RatFunc::t_pow(1);
    return {omega_uv(skew(lambda, mu, SkewKind::P), q, t),
            skew(lambda.conjugate(), mu.conjugate(), SkewKind::Q).swap_qt()};
}

} // namespace ctmac
