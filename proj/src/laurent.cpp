#include <ctmac/laurent.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <ctmac/errors.hpp>

namespace ctmac
{

namespace
{

std::int32_t checked_add(std::int32_t a, std::int32_t b)
{
    std::int32_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("exponent overflow");
    }
    return r;
}

std::int32_t checked_mul(std::int32_t a, std::int32_t b)
{
    std::int32_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("exponent overflow");
    }
    return r;
}

using Terms = std::vector<LaurentPoly::Term>;

// Merge two sorted term lists, adding coefficients of equal exponents.
Terms merge(Terms &&a, Terms &&b)
{
    if (a.empty()) {
        return std::move(b);
    }
    if (b.empty()) {
        return std::move(a);
    }
    Terms out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) {
            out.push_back(std::move(*ia++));
        } else if (ib->first < ia->first) {
            out.push_back(std::move(*ib++));
        } else {
            ia->second += ib->second;
            if (!ia->second.is_zero()) {
                out.push_back(std::move(*ia));
            }
            ++ia;
            ++ib;
        }
    }
    std::move(ia, a.end(), std::back_inserter(out));
    std::move(ib, b.end(), std::back_inserter(out));
    return out;
}

Terms merge_all(std::vector<Terms> runs)
{
    if (runs.empty()) {
        return {};
    }
    while (runs.size() > 1) {
        std::vector<Terms> next;
        next.reserve((runs.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < runs.size(); i += 2) {
            next.push_back(merge(std::move(runs[i]), std::move(runs[i + 1])));
        }
        if (runs.size() % 2 == 1) {
            next.push_back(std::move(runs.back()));
        }
        runs = std::move(next);
    }
    return std::move(runs.front());
}

// a * b, keeping only exponents accepted by keep.  Shifting a sorted list by a
// fixed exponent keeps it sorted, so every partial product is a sorted run.
template <class Keep>
Terms multiply(const Terms &a, const Terms &b, Keep keep)
{
    const Terms &small = a.size() <= b.size() ? a : b;
    const Terms &large = a.size() <= b.size() ? b : a;
    std::vector<Terms> runs;
    runs.reserve(small.size());
    for (const auto &[es, cs] : small) {
        Terms run;
        run.reserve(large.size());
        for (const auto &[el, cl] : large) {
            ExpVec e = es + el;
            if (!keep(e)) {
                continue;
            }
            run.emplace_back(e, cs * cl);
        }
        runs.push_back(std::move(run));
    }
    return merge_all(std::move(runs));
}

QtPoly lcm(const QtPoly &a, const QtPoly &b)
{
    if (a.is_constant()) {
        return b;
    }
    if (b.is_constant()) {
        return a;
    }
    const QtPoly g = gcd(a, b);
    return *divide_exact(a, g) * b;
}

} // namespace

ExpVec::ExpVec(int nvars) : n_(nvars)
{
    if (nvars < 0 || nvars > kMaxVars) {
        throw StructuralError("ExpVec: unsupported number of variables");
    }
}

ExpVec::ExpVec(std::initializer_list<int> exps) : ExpVec(static_cast<int>(exps.size()))
{
    int i = 0;
    for (int v : exps) {
        e_[static_cast<std::size_t>(i++)] = v;
    }
}

ExpVec ExpVec::unit(int nvars, int i, int k)
{
    ExpVec e(nvars);
    e.set(i, k);
    return e;
}

bool ExpVec::is_zero() const
{
    for (int i = 0; i < n_; ++i) {
        if (e_[static_cast<std::size_t>(i)] != 0) {
            return false;
        }
    }
    return true;
}

long ExpVec::total_degree() const
{
    long s = 0;
    for (int i = 0; i < n_; ++i) {
        s += e_[static_cast<std::size_t>(i)];
    }
    return s;
}

ExpVec &ExpVec::operator+=(const ExpVec &o)
{
    if (n_ != o.n_) {
        throw StructuralError("ExpVec: variable count mismatch");
    }
    for (int i = 0; i < n_; ++i) {
        e_[static_cast<std::size_t>(i)] = checked_add(e_[static_cast<std::size_t>(i)], o.e_[static_cast<std::size_t>(i)]);
    }
    return *this;
}

ExpVec &ExpVec::operator-=(const ExpVec &o)
{
    if (n_ != o.n_) {
        throw StructuralError("ExpVec: variable count mismatch");
    }
    for (int i = 0; i < n_; ++i) {
        e_[static_cast<std::size_t>(i)] =
            checked_add(e_[static_cast<std::size_t>(i)], checked_mul(-1, o.e_[static_cast<std::size_t>(i)]));
    }
    return *this;
}

ExpVec ExpVec::scaled(int k) const
{
    ExpVec r = *this;
    for (int i = 0; i < n_; ++i) {
        r.e_[static_cast<std::size_t>(i)] = checked_mul(e_[static_cast<std::size_t>(i)], k);
    }
    return r;
}

std::string ExpVec::to_string() const
{
    std::string s;
    for (int i = 0; i < n_; ++i) {
        const int v = e_[static_cast<std::size_t>(i)];
        if (v == 0) {
            continue;
        }
        if (!s.empty()) {
            s += "*";
        }
        s += "x" + std::to_string(i);
        if (v != 1) {
            s += "^" + std::to_string(v);
        }
    }
    return s.empty() ? "1" : s;
}

LaurentPoly::LaurentPoly(int nvars, const RatFunc &c) : nvars_(nvars)
{
    if (!c.is_zero()) {
        terms_.emplace_back(ExpVec(nvars), c);
    }
}

LaurentPoly LaurentPoly::monomial(const RatFunc &c, const ExpVec &e)
{
    LaurentPoly p(e.nvars());
    if (!c.is_zero()) {
        p.terms_.emplace_back(e, c);
    }
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i)
{
    return monomial(RatFunc(1L), ExpVec::unit(nvars, i));
}

LaurentPoly LaurentPoly::from_terms(int nvars, std::vector<Term> terms)
{
    for (const auto &t : terms) {
        if (t.first.nvars() != nvars) {
            throw StructuralError("LaurentPoly: term with wrong variable count");
        }
    }
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term &a, const Term &b) { return a.first < b.first; });
    LaurentPoly p(nvars);
    for (auto &t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second.is_zero()) {
                p.terms_.pop_back();
            }
        } else if (!t.second.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

void LaurentPoly::check_nvars(const LaurentPoly &o) const
{
    if (nvars_ != o.nvars_) {
        throw StructuralError("LaurentPoly: variable count mismatch (" + std::to_string(nvars_) + " vs " +
                              std::to_string(o.nvars_) + ")");
    }
}

RatFunc LaurentPoly::coeff(const ExpVec &e) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term &t, const ExpVec &k) { return t.first < k; });
    return it != terms_.end() && it->first == e ? it->second : RatFunc(0L);
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o)
{
    check_nvars(o);
    Terms other = o.terms_;
    terms_ = merge(std::move(terms_), std::move(other));
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o)
{
    return *this += -o;
}

LaurentPoly &LaurentPoly::operator*=(const RatFunc &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &t : terms_) {
        t.second *= c;
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
{
    a.check_nvars(b);
    LaurentPoly r(a.nvars_);
    r.terms_ = multiply(a.terms_, b.terms_, [](const ExpVec &) { return true; });
    return r;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto &t : r.terms_) {
        t.second = -t.second;
    }
    return r;
}

LaurentPoly LaurentPoly::times_monomial(const RatFunc &c, const ExpVec &e) const
{
    if (e.nvars() != nvars_) {
        throw StructuralError("LaurentPoly: monomial with wrong variable count");
    }
    LaurentPoly r(nvars_);
    if (c.is_zero()) {
        return r;
    }
    r.terms_.reserve(terms_.size());
    for (const auto &[ex, co] : terms_) {
        r.terms_.emplace_back(ex + e, co * c);
    }
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const
{
    LaurentPoly r(nvars_, RatFunc(1L));
    for (unsigned i = 0; i < k; ++i) {
        r = r * *this;
    }
    return r;
}

LaurentPoly LaurentPoly::ct_var(int i) const
{
    LaurentPoly r(nvars_);
    for (const auto &t : terms_) {
        if (t.first[i] == 0) {
            r.terms_.push_back(t);
        }
    }
    return r;
}

RatFunc LaurentPoly::ct_all() const
{
    return coeff(ExpVec(nvars_));
}

std::pair<int, int> LaurentPoly::degree_in(int i) const
{
    if (terms_.empty()) {
        throw std::domain_error("degree_in: zero polynomial");
    }
    int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
    for (const auto &t : terms_) {
        lo = std::min(lo, t.first[i]);
        hi = std::max(hi, t.first[i]);
    }
    return {lo, hi};
}

LaurentPoly LaurentPoly::substitute(int i, const RatFunc &c, int j) const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto &[e, co] : terms_) {
        ExpVec ne = e;
        const int k = e[i];
        ne.set(i, 0);
        ne.set(j, checked_add(ne[j], k));
        out.emplace_back(ne, co * c.pow(k));
    }
    return from_terms(nvars_, std::move(out));
}

LaurentPoly LaurentPoly::set_one(int i) const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto &[e, co] : terms_) {
        ExpVec ne = e;
        ne.set(i, 0);
        out.emplace_back(ne, co);
    }
    return from_terms(nvars_, std::move(out));
}

LaurentPoly LaurentPoly::permute(const std::vector<int> &perm) const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto &[e, co] : terms_) {
        ExpVec ne(nvars_);
        for (int k = 0; k < nvars_; ++k) {
            ne.set(perm[static_cast<std::size_t>(k)], e[k]);
        }
        out.emplace_back(ne, co);
    }
    return from_terms(nvars_, std::move(out));
}

LaurentPoly LaurentPoly::specialize_t(int c) const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto &[e, co] : terms_) {
        out.emplace_back(e, co.specialize_t(c));
    }
    return from_terms(nvars_, std::move(out));
}

BigRat LaurentPoly::eval(const std::vector<BigRat> &xs, const BigRat &q0, const BigRat &t0) const
{
    if (static_cast<int>(xs.size()) != nvars_) {
        throw StructuralError("LaurentPoly::eval: wrong number of values");
    }
    BigRat acc = 0;
    for (const auto &[e, co] : terms_) {
        BigRat v = co.eval(q0, t0);
        for (int k = 0; k < nvars_; ++k) {
            const int p = e[k];
            if (p == 0) {
                continue;
            }
            if (sgn(xs[static_cast<std::size_t>(k)]) == 0 && p < 0) {
                throw PoleError("LaurentPoly::eval: negative power of zero");
            }
            BigRat base = p > 0 ? xs[static_cast<std::size_t>(k)] : BigRat(1) / xs[static_cast<std::size_t>(k)];
            for (int r = 0; r < std::abs(p); ++r) {
                v *= base;
            }
        }
        acc += v;
    }
    return acc;
}

std::optional<long> LaurentPoly::homogeneous_degree() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    const long d = terms_.front().first.total_degree();
    for (const auto &t : terms_) {
        if (t.first.total_degree() != d) {
            return std::nullopt;
        }
    }
    return d;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    for (const auto &[e, co] : terms_) {
        if (!s.empty()) {
            s += " + ";
        }
        s += "(" + co.to_string() + ")";
        if (!e.is_zero()) {
            s += "*" + e.to_string();
        }
    }
    return s;
}

LaurentPoly qpoch_monomial(const RatFunc &coef, const ExpVec &mono, int k)
{
    if (k < 0) {
        throw std::invalid_argument("qpoch_monomial: negative length");
    }
    const int n = mono.nvars();
    LaurentPoly r(n, RatFunc(1L));
    for (int i = 0; i < k; ++i) {
        LaurentPoly factor(n, RatFunc(1L));
        factor -= LaurentPoly::monomial(coef * RatFunc::q_pow(i), mono);
        r = r * factor;
    }
    return r;
}

RatFunc ct_product(const std::vector<LaurentPoly> &factors, CtStats *stats)
{
    if (factors.empty()) {
        return RatFunc(1L);
    }
    const int n = factors.front().nvars();
    for (const auto &f : factors) {
        if (f.nvars() != n) {
            throw StructuralError("ct_product: variable count mismatch");
        }
        if (f.is_zero()) {
            return RatFunc(0L);
        }
    }
    const std::size_t m = factors.size();

    // Exponent reach of factors k..m-1, per variable.
    std::vector<std::vector<long>> sufmin(m + 1, std::vector<long>(static_cast<std::size_t>(n), 0));
    std::vector<std::vector<long>> sufmax = sufmin;
    for (std::size_t k = m; k-- > 0;) {
        for (int v = 0; v < n; ++v) {
            const auto [lo, hi] = factors[k].degree_in(v);
            sufmin[k][static_cast<std::size_t>(v)] = sufmin[k + 1][static_cast<std::size_t>(v)] + lo;
            sufmax[k][static_cast<std::size_t>(v)] = sufmax[k + 1][static_cast<std::size_t>(v)] + hi;
        }
    }

    // Clear coefficient denominators factor by factor so products stay polynomial.
    RatFunc scale(1L);
    auto cleared = [&](const LaurentPoly &f) {
        QtPoly common(1L);
        BigInt l = 1;
        for (const auto &t : f.terms()) {
            const QtPoly &d = t.second.den();
            if (d.is_constant()) {
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.coeff(0, 0).get_num_mpz_t());
            } else {
                common = lcm(common, d);
            }
        }
        common *= BigRat(l);
        if (common.is_one()) {
            return f;
        }
        const RatFunc c(common);
        scale *= c;
        return f * c;
    };

    Terms acc;
    {
        const LaurentPoly f0 = cleared(factors.front());
        for (const auto &t : f0.terms()) {
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) {
                const long e = t.first[v];
                ok = e + sufmin[1][static_cast<std::size_t>(v)] <= 0 && 0 <= e + sufmax[1][static_cast<std::size_t>(v)];
            }
            if (ok) {
                acc.push_back(t);
            }
        }
    }
    std::size_t peak = acc.size();
    for (std::size_t k = 1; k < m && !acc.empty(); ++k) {
        const LaurentPoly fk = cleared(factors[k]);
        const auto &lo = sufmin[k + 1];
        const auto &hi = sufmax[k + 1];
        acc = multiply(acc, fk.terms(), [&](const ExpVec &e) {
            for (int v = 0; v < n; ++v) {
                const long x = e[v];
                if (x + lo[static_cast<std::size_t>(v)] > 0 || x + hi[static_cast<std::size_t>(v)] < 0) {
                    return false;
                }
            }
            return true;
        });
        peak = std::max(peak, acc.size());
    }
    if (stats) {
        stats->terms_peak = std::max(stats->terms_peak, peak);
    }
    for (const auto &t : acc) {
        if (t.first.is_zero()) {
            return t.second / scale;
        }
    }
    return RatFunc(0L);
}

} // namespace ctmac
