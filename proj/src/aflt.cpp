#include <ctmac/aflt.hpp>

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <tuple>

#include <ctmac/errors.hpp>
#include <ctmac/macdonald.hpp>
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

int part(const Partition &p, int i)
{
    return p.part(static_cast<std::size_t>(i));
}

// sum_{i<=n} lambda_i, only the first n parts.
int size_upto(const Partition &p, int n)
{
    int s = 0;
    for (int i = 1; i <= n; ++i) {
        s += part(p, i);
    }
    return s;
}

long binom2(long k)
{
    return k * (k - 1) / 2;
}

RatFunc sign(long e)
{
    return RatFunc(e % 2 == 0 ? 1L : -1L);
}

RatFunc qp(int base_exp, int k)
{
    return qpoch_scalar(base_exp, k);
}

// (lambda_1 - lambda_n, ..., lambda_{n-1} - lambda_n)
Partition bar_lambda(const Partition &lambda, int n)
{
    std::vector<int> v;
    for (int i = 1; i < n; ++i) {
        v.push_back(part(lambda, i) - part(lambda, n));
    }
    return Partition(v);
}

// (mu_1 + lambda_n, ..., mu_{n-1} + lambda_n)
Partition bar_mu(const Partition &mu, const Partition &lambda, int n)
{
    std::vector<int> v;
    for (int i = 1; i < n; ++i) {
        v.push_back(part(mu, i) + part(lambda, n));
    }
    return Partition(v);
}

// A_{n-1}(c - b - 1, b + c, c, mu bar, lambda bar).
AfltParams reduced(const AfltParams &p)
{
    AfltParams r;
    r.n = p.n - 1;
    r.a = p.c - p.b - 1;
    r.b = p.b + p.c;
    r.c = p.c;
    r.lambda = bar_mu(p.mu, p.lambda, p.n);
    r.mu = bar_lambda(p.lambda, p.n);
    return r;
}

Report base_report(const std::string &check, const AfltParams &p, bool with_a = true)
{
    Report r;
    r.check = check;
    r.param("n", p.n);
    if (with_a) {
        r.param("a", p.a);
    }
    r.param("b", p.b).param("c", p.c).param("lambda", p.lambda.to_string()).param("mu", p.mu.to_string());
    return r;
}

void compare(Report &r, const RatFunc &lhs, const RatFunc &rhs)
{
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.equal = lhs == rhs;
}

} // namespace

std::string AfltParams::to_string() const
{
    return "n=" + std::to_string(n) + " a=" + std::to_string(a) + " b=" + std::to_string(b) +
           " c=" + std::to_string(c) + " lambda=(" + lambda.to_string() + ") mu=(" + mu.to_string() + ")";
}

std::vector<LaurentPoly> integrand_factors(const AfltParams &p)
{
    if (p.n < 0 || p.n + 1 > kMaxVars) {
        throw DomainError("integrand: n must be between 0 and " + std::to_string(kMaxVars - 1));
    }
    if (p.a < 0) {
        throw DomainError("integrand: a must be nonnegative for direct expansion");
    }
    if (p.b < 0 || p.c < 0) {
        throw DomainError("integrand: b and c must be nonnegative");
    }
    if (p.c == 0 && !p.mu.empty()) {
        throw DomainError("integrand: c = 0 makes the x_0 weight of the mu alphabet singular");
    }
    const int nv = p.n + 1;
    const RatFunc one(1L);
    std::vector<LaurentPoly> fs;
    fs.push_back(LaurentPoly::monomial(one, ExpVec::unit(nv, 0, -(p.lambda.size() + p.mu.size()))));
    if (!p.lambda.empty()) {
        fs.push_back(sym_eval(mac_P_at(p.lambda, p.c), Alphabet::plain(nv, 1, p.n)));
    }
    if (!p.mu.empty()) {
        Letter x0;
        x0.mono = ExpVec::unit(nv, 0);
        x0.power_weight = RatFunc::q_pow(p.c - p.b - 1);
        x0.geometric = std::make_pair(RatFunc::q_pow(p.a - p.c + p.b + 1), RatFunc::q_pow(p.c));
        Alphabet alpha;
        alpha.nvars = nv;
        alpha.letters.push_back(x0);
        alpha += Alphabet::plain(nv, 1, p.n);
        fs.push_back(sym_eval(mac_P_at(p.mu, p.c), alpha));
    }
    auto binomial = [&](int k, int i, int j) {
        // 1 - q^k x_i / x_j
        ExpVec e(nv);
        e.set(i, 1);
        e.set(j, -1);
        return LaurentPoly(nv, one) - LaurentPoly::monomial(RatFunc::q_pow(k), e);
    };
    for (int i = 1; i <= p.n; ++i) {
        for (int k = 0; k < p.a; ++k) {
            fs.push_back(binomial(k, 0, i));
        }
        for (int k = 0; k < p.b; ++k) {
            fs.push_back(binomial(k + 1, i, 0));
        }
    }
    for (int i = 1; i <= p.n; ++i) {
        for (int j = i + 1; j <= p.n; ++j) {
            for (int k = 0; k < p.c; ++k) {
                fs.push_back(binomial(k, i, j));
                fs.push_back(binomial(k + 1, j, i));
            }
        }
    }
    return fs;
}

LaurentPoly build_integrand(const AfltParams &p)
{
    const auto fs = integrand_factors(p);
    LaurentPoly out(p.n + 1, RatFunc(1L));
    for (const auto &f : fs) {
        out = out * f;
    }
    return out;
}

LhsResult lhs_eval(const AfltParams &p)
{
    LhsResult r;
    if (p.lambda.length() > p.n) {
        // Still validate the remaining parameters.
        AfltParams q = p;
        q.lambda = Partition{};
        (void)integrand_factors(q);
        r.value = RatFunc(0L);
        r.note = "P_lambda vanishes in n variables since length(lambda) > n";
        return r;
    }
    CtStats st;
    r.value = ct_product(integrand_factors(p), &st);
    r.terms_peak = st.terms_peak;
    return r;
}

RatFunc lhs_value(const AfltParams &p)
{
    return lhs_eval(p).value;
}

RatFunc rhs_aflt(const AfltParams &p)
{
    if (p.c == 0 && !p.mu.empty()) {
        throw DomainError("rhs: c = 0 makes the mu specialization singular");
    }
    if (p.lambda.length() > p.n) {
        return RatFunc(0L);
    }
    const int n = p.n, a = p.a, b = p.b, c = p.c;
    const Partition &lam = p.lambda, &mu = p.mu;
    const RatFunc t = RatFunc::t_pow(1);
    long e = -static_cast<long>(c) * lam.nstat();
    for (int i = 1; i <= n; ++i) {
        e += binom2(part(lam, i));
    }
    RatFunc out = sign(size_upto(lam, n)) * RatFunc::q_pow(static_cast<int>(e));
    out *= principal_spec(lam, t.pow(n)).specialize_t(c);
    if (!mu.empty()) {
        // P_mu[(q^{c-b-1} - q^{a+nc})/(1 - q^c)] = (t q^{-b-1})^{|mu|} P_mu[(1 - q^{a+b+1} t^{n-1})/(1 - t)] at t = q^c.
        const RatFunc scale = (t * RatFunc::q_pow(-b - 1)).pow(mu.size());
        out *= (scale * principal_spec(mu, RatFunc::q_pow(a + b + 1) * t.pow(n - 1))).specialize_t(c);
    }
    const int l = mu.length();
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= l; ++j) {
            out *= qp(b + (n - i - j) * c + part(lam, i) + part(mu, j + 1) + 1, part(mu, j) - part(mu, j + 1));
        }
    }
    for (int i = 1; i <= n; ++i) {
        out *= qp(a + (i - 1) * c - part(lam, i) + 1, b + part(lam, i)) * qp(1, i * c);
        out /= qp(1, b + (n - i) * c + part(lam, i) + part(mu, 1)) * qp(1, c);
    }
    return out;
}

RatFunc rhs_qmorris(int n, int a, int b, int c)
{
    if (a < 0 || b < 0 || c < 0) {
        throw DomainError("q-Morris product: a, b, c must be nonnegative");
    }
    RatFunc out(1L);
    for (int i = 0; i < n; ++i) {
        out *= qp(1, a + b + i * c) * qp(1, (i + 1) * c);
        out /= qp(1, a + i * c) * qp(1, b + i * c) * qp(1, c);
    }
    return out;
}

std::vector<int> RootSets::all() const
{
    std::vector<int> v = A1;
    v.insert(v.end(), A2.begin(), A2.end());
    v.insert(v.end(), A3.begin(), A3.end());
    return v;
}

bool RootSets::distinct() const
{
    const auto v = all();
    return std::set<int>(v.begin(), v.end()).size() == v.size();
}

RootSets root_sets(const AfltParams &p)
{
    RootSets r;
    for (int i = 0; i < p.n; ++i) {
        for (int k = 1; k <= p.b; ++k) {
            r.A1.push_back(-i * p.c - k);
        }
    }
    for (int i = 1; i <= p.lambda.length(); ++i) {
        for (int k = part(p.lambda, i) - 1; k >= 0; --k) {
            r.A2.push_back(-(i - 1) * p.c + k);
        }
    }
    for (int j = 1; j <= p.mu.length(); ++j) {
        for (int k = 1; k <= part(p.mu, j); ++k) {
            r.A3.push_back(-(p.n - j) * p.c - p.b - k);
        }
    }
    return r;
}

int qa_degree_bound(const AfltParams &p)
{
    return p.n * p.b + p.lambda.size() + p.mu.size();
}

int QaPoly::degree() const
{
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        if (!coeffs[k].is_zero()) {
            return static_cast<int>(k);
        }
    }
    return -1;
}

RatFunc QaPoly::at(int a) const
{
    const RatFunc x = RatFunc::q_pow(a);
    RatFunc v(0L);
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        v = v * x + coeffs[k];
    }
    return v;
}

std::string QaPoly::to_string() const
{
    std::string s;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) {
            continue;
        }
        if (!s.empty()) {
            s += " + ";
        }
        s += "(" + coeffs[k].to_string() + ")";
        if (k > 0) {
            s += "*X^" + std::to_string(k);
        }
    }
    return s.empty() ? "0" : s;
}

QaPoly poly_interpolate(const AfltParams &p, const std::vector<int> &sample_as)
{
    const std::size_t m = sample_as.size();
    if (m == 0) {
        return {};
    }
    std::vector<RatFunc> xs, d;
    for (int a : sample_as) {
        if (a < 0) {
            throw DomainError("poly_interpolate: samples must be nonnegative");
        }
        xs.push_back(RatFunc::q_pow(a));
        d.push_back(lhs_value(p.with_a(a)));
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (sample_as[i] == sample_as[j]) {
                throw DomainError("poly_interpolate: samples must be distinct");
            }
        }
    }
    // Newton divided differences.
    for (std::size_t j = 1; j < m; ++j) {
        for (std::size_t i = m - 1; i >= j; --i) {
            d[i] = (d[i] - d[i - 1]) / (xs[i] - xs[i - j]);
        }
    }
    std::vector<RatFunc> poly{d[m - 1]};
    for (std::size_t k = m - 1; k-- > 0;) {
        // poly = poly * (X - xs[k]) + d[k]
        std::vector<RatFunc> next(poly.size() + 1, RatFunc(0L));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * xs[k];
        }
        next[0] += d[k];
        poly = std::move(next);
    }
    QaPoly out{std::move(poly)};
    out.coeffs.resize(static_cast<std::size_t>(std::max(out.degree(), 0)) + 1, RatFunc(0L));
    if (out.degree() < 0) {
        out.coeffs.clear();
    }
    return out;
}

RatFunc a_value(const AfltParams &p)
{
    if (p.a >= 0) {
        return lhs_value(p);
    }
    using Key = std::tuple<int, int, int, Partition, Partition>;
    static std::mutex mu;
    static std::map<Key, std::shared_ptr<const QaPoly>> cache;
    const Key key{p.n, p.b, p.c, p.lambda, p.mu};
    std::shared_ptr<const QaPoly> poly;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) {
            poly = it->second;
        }
    }
    if (!poly) {
        const int bound = qa_degree_bound(p);
        std::vector<int> samples;
        for (int a = 0; a <= bound + 1; ++a) {
            samples.push_back(a);
        }
        auto fresh = std::make_shared<const QaPoly>(poly_interpolate(p, samples));
        if (fresh->degree() > bound) {
            throw InvariantError("constant term is not a polynomial in q^a of degree <= " + std::to_string(bound) +
                                 " for " + p.to_string());
        }
        std::lock_guard lock(mu);
        poly = cache.emplace(key, fresh).first->second;
    }
    return poly->at(p.a);
}

Report verify_aflt(const AfltParams &p)
{
    const auto start = Clock::now();
    Report r = base_report("aflt", p);
    const LhsResult lhs = lhs_eval(p);
    compare(r, lhs.value, rhs_aflt(p));
    if (!lhs.note.empty()) {
        r.note(lhs.note);
    }
    r.terms_peak = lhs.terms_peak;
    r.millis = millis_since(start);
    return r;
}

Report verify_qmorris(int n, int a, int b, int c)
{
    const auto start = Clock::now();
    AfltParams p;
    p.n = n;
    p.a = a;
    p.b = b;
    p.c = c;
    Report r;
    r.check = "qmorris";
    r.param("n", n).param("a", a).param("b", b).param("c", c);
    const LhsResult lhs = lhs_eval(p);
    compare(r, lhs.value, rhs_qmorris(n, a, b, c));
    r.terms_peak = lhs.terms_peak;
    r.millis = millis_since(start);
    return r;
}

std::vector<Report> verify_roots(const AfltParams &p)
{
    std::vector<Report> out;
    if (p.c <= p.b + part(p.lambda, 1) + part(p.mu, 1)) {
        Report r = base_report("roots", p, false);
        r.refused = true;
        r.note("requires c > b + lambda_1 + mu_1");
        out.push_back(r);
        return out;
    }
    if (p.lambda.length() > p.n) {
        Report r = base_report("roots", p, false);
        r.refused = true;
        r.note("requires length(lambda) <= n");
        out.push_back(r);
        return out;
    }
    const RootSets rs = root_sets(p);
    const int bound = qa_degree_bound(p);
    {
        Report r = base_report("roots.distinct", p, false);
        const auto all = rs.all();
        r.lhs = std::to_string(std::set<int>(all.begin(), all.end()).size());
        r.rhs = std::to_string(bound);
        r.equal = rs.distinct() && static_cast<int>(all.size()) == bound;
        r.note("distinct count of A1, A2, A3 against the degree bound");
        out.push_back(r);
    }
    const auto start = Clock::now();
    std::vector<int> samples;
    for (int a = 0; a <= bound + 1; ++a) {
        samples.push_back(a);
    }
    const QaPoly poly = poly_interpolate(p, samples);
    {
        Report r = base_report("roots.degree", p, false);
        r.lhs = std::to_string(poly.degree());
        r.rhs = std::to_string(bound);
        r.equal = poly.degree() <= bound;
        r.note("degree of the interpolant through " + std::to_string(samples.size()) + " samples");
        r.millis = millis_since(start);
        out.push_back(r);
    }
    auto emit = [&](const std::vector<int> &set, const std::string &name) {
        for (int a : set) {
            const auto t0 = Clock::now();
            Report r = base_report("roots." + name, p.with_a(a));
            if (a >= 0) {
                compare(r, lhs_value(p.with_a(a)), RatFunc(0L));
                r.note("direct constant term");
            } else {
                const RatFunc interp = poly.at(a);
                const RatFunc closed = rhs_aflt(p.with_a(a));
                r.lhs = interp.to_string();
                r.rhs = closed.to_string();
                r.equal = interp.is_zero() && closed.is_zero();
                r.note("interpolated value and closed form must both vanish");
            }
            r.millis = millis_since(t0);
            out.push_back(r);
        }
    };
    emit(rs.A1, "A1");
    emit(rs.A2, "A2");
    emit(rs.A3, "A3");
    return out;
}

Report verify_recursion(const AfltParams &p)
{
    const auto start = Clock::now();
    Report r = base_report("recursion", p);
    if (p.n < 1 || p.c < 1 || p.mu.length() > p.n || p.lambda.length() > p.n) {
        r.refused = true;
        r.note("requires n >= 1, c >= 1, length(mu) <= n and length(lambda) <= n");
        return r;
    }
    const int n = p.n, a = p.a, b = p.b, c = p.c;
    const Partition &lam = p.lambda, &mu = p.mu;
    const int ln = part(lam, n), mn = part(mu, n);
    RatFunc f;
    try {
        f = sign(b) * RatFunc::q_pow(static_cast<int>(-binom2(b + 1) - (b + 1) * (ln + mn)));
        f *= qp(n * c, 1) / qp(c, 1);
        for (int i = 0; i < n; ++i) {
            f *= qp(a + i * c + 1, b) / qp(i * c - b, b);
        }
        for (int i = 1; i <= n; ++i) {
            const int li = part(lam, i);
            f *= qp(a + (i - 1) * c - li + 1, li) * qp(i * c - b - li - mn, mn);
            f /= qp((i - 1) * c - b - li - mn, li + mn);
        }
        for (int i = 1; i <= n; ++i) {
            const int mi = part(mu, i);
            f *= qp(a + (n - i) * c + b + 1, mi);
            f /= qp((n - i) * c, mi - mn) * qp((n - i + 1) * c + mi - mn, mn);
        }
    } catch (const PoleError &) {
        r.refused = true;
        r.note("the recursion prefactor has a pole at these parameters");
        return r;
    }
    const AfltParams red = reduced(p);
    const LhsResult lhs = p.a >= 0 ? lhs_eval(p) : LhsResult{a_value(p), 0, "interpolated"};
    compare(r, lhs.value, f * a_value(red));
    r.terms_peak = lhs.terms_peak;
    r.note("reduced term " + red.to_string() + (red.a < 0 ? " by interpolation" : " direct"));
    r.millis = millis_since(start);
    return r;
}

Report verify_addpoints(const AfltParams &p)
{
    const auto start = Clock::now();
    Report r = base_report(p.mu.length() < p.n ? "addpoint.1" : "addpoint.2", p, false);
    if (p.n < 1 || p.c < 1 || p.lambda.length() > p.n) {
        r.refused = true;
        r.note("requires n >= 1, c >= 1 and length(lambda) <= n");
        return r;
    }
    const int n = p.n, b = p.b, c = p.c;
    if (p.mu.length() < n) {
        const AfltParams at = p.with_a(-b - 1);
        RatFunc f = sign(b) * RatFunc::q_pow(static_cast<int>(-binom2(b + 1) - (b + 1) * part(p.lambda, n)));
        f *= qp(n * c, 1) / qp(c, 1);
        const AfltParams red = reduced(p);
        compare(r, a_value(at), f * a_value(red));
        r.param("a", at.a);
        r.note("reduced term " + red.to_string());
    } else {
        const int l = p.mu.length();
        const int ml = part(p.mu, l);
        const int a0 = (l - n + 1) * c - b - 1;
        std::vector<int> lt, mt;
        for (int i = 1; i <= n; ++i) {
            lt.push_back(part(p.lambda, i) + ml);
        }
        for (int j = 1; j < l; ++j) {
            mt.push_back(part(p.mu, j) - ml);
        }
        AfltParams tilde = p.with_a(a0);
        tilde.lambda = Partition(lt);
        tilde.mu = Partition(mt);
        const long e = (binom2(l - n + 1) * c - static_cast<long>(b + 1) * (l - n)) * ml;
        compare(r, a_value(p.with_a(a0)), RatFunc::q_pow(static_cast<int>(e)) * a_value(tilde));
        r.param("a", a0);
        r.note("shifted term " + tilde.to_string());
    }
    r.millis = millis_since(start);
    return r;
}

} // namespace ctmac
