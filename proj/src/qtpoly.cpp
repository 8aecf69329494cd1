#include <ctmac/qtpoly.hpp>

#include <algorithm>
#include <stdexcept>

#include "poly_gcd.hpp"

namespace ctmac
{

namespace
{

using detail::Z2Poly;
using detail::ZPoly;

bool zero_coef(const BigRat &c)
{
    return sgn(c) == 0;
}

void trim_row(std::vector<BigRat> &r)
{
    while (!r.empty() && zero_coef(r.back())) {
        r.pop_back();
    }
}

// p scaled by the lcm of its denominators, as an integer polynomial.
Z2Poly to_z2(const QtPoly &p, const BigInt &scale)
{
    Z2Poly r(p.rows().size());
    for (std::size_t j = 0; j < r.size(); ++j) {
        const auto &row = p.rows()[j];
        r[j].resize(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) {
            BigInt v = scale * row[i].get_num();
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), row[i].get_den_mpz_t());
            r[j][i] = std::move(v);
        }
    }
    detail::trim(r);
    return r;
}

QtPoly from_z2(const Z2Poly &z)
{
    std::vector<std::vector<BigRat>> rows(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
        rows[j].reserve(z[j].size());
        for (const auto &c : z[j]) {
            rows[j].emplace_back(c);
        }
    }
    return QtPoly::from_rows(std::move(rows));
}

int low_deg_t(const QtPoly &p)
{
    const auto &rows = p.rows();
    for (std::size_t j = 0; j < rows.size(); ++j) {
        if (!rows[j].empty()) {
            return static_cast<int>(j);
        }
    }
    return -1;
}

std::string monomial_text(int dq, int dt)
{
    std::string s;
    if (dq > 0) {
        s += "q";
        if (dq > 1) {
            s += "^" + std::to_string(dq);
        }
    }
    if (dt > 0) {
        if (!s.empty()) {
            s += "*";
        }
        s += "t";
        if (dt > 1) {
            s += "^" + std::to_string(dt);
        }
    }
    return s;
}

} // namespace

QtPoly::QtPoly(long c)
{
    if (c != 0) {
        rows_.push_back({BigRat(c)});
    }
}

QtPoly::QtPoly(const BigRat &c)
{
    if (!zero_coef(c)) {
        rows_.push_back({c});
    }
}

QtPoly QtPoly::monomial(const BigRat &c, int dq, int dt)
{
    if (dq < 0 || dt < 0) {
        throw std::invalid_argument("QtPoly::monomial: negative exponent");
    }
    QtPoly p;
    if (zero_coef(c)) {
        return p;
    }
    p.rows_.resize(static_cast<std::size_t>(dt) + 1);
    p.rows_.back().resize(static_cast<std::size_t>(dq) + 1);
    p.rows_.back().back() = c;
    return p;
}

QtPoly QtPoly::q()
{
    return monomial(1, 1, 0);
}

QtPoly QtPoly::t()
{
    return monomial(1, 0, 1);
}

QtPoly QtPoly::from_rows(std::vector<std::vector<BigRat>> rows)
{
    QtPoly p;
    p.rows_ = std::move(rows);
    p.trim();
    return p;
}

void QtPoly::trim()
{
    for (auto &r : rows_) {
        trim_row(r);
    }
    while (!rows_.empty() && rows_.back().empty()) {
        rows_.pop_back();
    }
}

bool QtPoly::is_constant() const
{
    return rows_.empty() || (rows_.size() == 1 && rows_[0].size() == 1);
}

bool QtPoly::is_one() const
{
    return rows_.size() == 1 && rows_[0].size() == 1 && rows_[0][0] == 1;
}

bool QtPoly::is_integral() const
{
    for (const auto &r : rows_) {
        for (const auto &c : r) {
            if (!ctmac::is_integral(c)) {
                return false;
            }
        }
    }
    return true;
}

int QtPoly::deg_q() const
{
    int d = -1;
    for (const auto &r : rows_) {
        d = std::max(d, static_cast<int>(r.size()) - 1);
    }
    return d;
}

int QtPoly::low_deg_q() const
{
    int lo = -1;
    for (const auto &r : rows_) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (!zero_coef(r[i])) {
                if (lo < 0 || static_cast<int>(i) < lo) {
                    lo = static_cast<int>(i);
                }
                break;
            }
        }
    }
    return lo;
}

BigRat QtPoly::coeff(int dq, int dt) const
{
    if (dq < 0 || dt < 0 || dt >= static_cast<int>(rows_.size())) {
        return 0;
    }
    const auto &r = rows_[static_cast<std::size_t>(dt)];
    return dq < static_cast<int>(r.size()) ? r[static_cast<std::size_t>(dq)] : BigRat(0);
}

std::vector<QtPoly::Term> QtPoly::terms() const
{
    std::vector<Term> out;
    const int dqmax = deg_q();
    for (int i = 0; i <= dqmax; ++i) {
        for (std::size_t j = 0; j < rows_.size(); ++j) {
            const auto &r = rows_[j];
            if (i < static_cast<int>(r.size()) && !zero_coef(r[static_cast<std::size_t>(i)])) {
                out.push_back({i, static_cast<int>(j), r[static_cast<std::size_t>(i)]});
            }
        }
    }
    return out;
}

std::size_t QtPoly::term_count() const
{
    std::size_t n = 0;
    for (const auto &r : rows_) {
        for (const auto &c : r) {
            n += zero_coef(c) ? 0 : 1;
        }
    }
    return n;
}

BigRat QtPoly::leading_coeff() const
{
    const int dq = deg_q();
    for (std::size_t j = rows_.size(); j-- > 0;) {
        if (static_cast<int>(rows_[j].size()) - 1 == dq) {
            return rows_[j].back();
        }
    }
    return 0;
}

BigInt QtPoly::denominator_lcm() const
{
    BigInt l = 1;
    for (const auto &r : rows_) {
        for (const auto &c : r) {
            if (c.get_den() != 1) {
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
            }
        }
    }
    return l;
}

BigInt QtPoly::integer_content() const
{
    BigInt g = 0;
    for (const auto &r : rows_) {
        for (const auto &c : r) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
            if (g == 1) {
                return g;
            }
        }
    }
    return g;
}

QtPoly &QtPoly::operator+=(const QtPoly &o)
{
    if (rows_.size() < o.rows_.size()) {
        rows_.resize(o.rows_.size());
    }
    for (std::size_t j = 0; j < o.rows_.size(); ++j) {
        auto &dst = rows_[j];
        const auto &src = o.rows_[j];
        if (dst.size() < src.size()) {
            dst.resize(src.size());
        }
        for (std::size_t i = 0; i < src.size(); ++i) {
            dst[i] += src[i];
        }
    }
    trim();
    return *this;
}

QtPoly &QtPoly::operator-=(const QtPoly &o)
{
    if (rows_.size() < o.rows_.size()) {
        rows_.resize(o.rows_.size());
    }
    for (std::size_t j = 0; j < o.rows_.size(); ++j) {
        auto &dst = rows_[j];
        const auto &src = o.rows_[j];
        if (dst.size() < src.size()) {
            dst.resize(src.size());
        }
        for (std::size_t i = 0; i < src.size(); ++i) {
            dst[i] -= src[i];
        }
    }
    trim();
    return *this;
}

QtPoly &QtPoly::operator*=(const BigRat &c)
{
    if (zero_coef(c)) {
        rows_.clear();
        return *this;
    }
    for (auto &r : rows_) {
        for (auto &x : r) {
            x *= c;
        }
    }
    return *this;
}

QtPoly &QtPoly::operator*=(const QtPoly &o)
{
    *this = *this * o;
    return *this;
}

QtPoly &QtPoly::divide_coefficients(const BigInt &d)
{
    const BigRat inv = BigRat(1) / BigRat(d);
    return *this *= inv;
}

QtPoly operator*(const QtPoly &a, const QtPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    const auto &ra = a.rows_;
    const auto &rb = b.rows_;
    std::vector<std::vector<BigRat>> out(ra.size() + rb.size() - 1);
    if (a.is_integral() && b.is_integral()) {
        std::vector<std::vector<BigInt>> acc(out.size());
        for (std::size_t ja = 0; ja < ra.size(); ++ja) {
            for (std::size_t jb = 0; jb < rb.size(); ++jb) {
                if (ra[ja].empty() || rb[jb].empty()) {
                    continue;
                }
                auto &dst = acc[ja + jb];
                if (dst.size() < ra[ja].size() + rb[jb].size() - 1) {
                    dst.resize(ra[ja].size() + rb[jb].size() - 1);
                }
                for (std::size_t ia = 0; ia < ra[ja].size(); ++ia) {
                    mpz_srcptr x = mpq_numref(ra[ja][ia].get_mpq_t());
                    if (mpz_sgn(x) == 0) {
                        continue;
                    }
                    for (std::size_t ib = 0; ib < rb[jb].size(); ++ib) {
                        mpz_addmul(dst[ia + ib].get_mpz_t(), x, mpq_numref(rb[jb][ib].get_mpq_t()));
                    }
                }
            }
        }
        for (std::size_t j = 0; j < acc.size(); ++j) {
            out[j].reserve(acc[j].size());
            for (auto &c : acc[j]) {
                out[j].emplace_back(c);
            }
        }
    } else {
        for (std::size_t ja = 0; ja < ra.size(); ++ja) {
            for (std::size_t jb = 0; jb < rb.size(); ++jb) {
                if (ra[ja].empty() || rb[jb].empty()) {
                    continue;
                }
                auto &dst = out[ja + jb];
                if (dst.size() < ra[ja].size() + rb[jb].size() - 1) {
                    dst.resize(ra[ja].size() + rb[jb].size() - 1);
                }
                for (std::size_t ia = 0; ia < ra[ja].size(); ++ia) {
                    if (zero_coef(ra[ja][ia])) {
                        continue;
                    }
                    for (std::size_t ib = 0; ib < rb[jb].size(); ++ib) {
                        dst[ia + ib] += ra[ja][ia] * rb[jb][ib];
                    }
                }
            }
        }
    }
    return QtPoly::from_rows(std::move(out));
}

QtPoly QtPoly::operator-() const
{
    QtPoly r = *this;
    for (auto &row : r.rows_) {
        for (auto &c : row) {
            c = -c;
        }
    }
    return r;
}

QtPoly QtPoly::pow(unsigned e) const
{
    QtPoly result(1L);
    QtPoly base = *this;
    while (e) {
        if (e & 1u) {
            result = result * base;
        }
        e >>= 1u;
        if (e) {
            base = base * base;
        }
    }
    return result;
}

BigRat QtPoly::eval(const BigRat &q0, const BigRat &t0) const
{
    BigRat acc = 0;
    for (std::size_t j = rows_.size(); j-- > 0;) {
        BigRat rv = 0;
        const auto &r = rows_[j];
        for (std::size_t i = r.size(); i-- > 0;) {
            rv = rv * q0 + r[i];
        }
        acc = acc * t0 + rv;
    }
    return acc;
}

QtPoly QtPoly::subs_t_qpow(int c) const
{
    if (c < 0) {
        throw std::invalid_argument("subs_t_qpow: negative exponent");
    }
    if (rows_.size() <= 1) {
        return *this;
    }
    std::vector<BigRat> row(static_cast<std::size_t>(std::max(0, deg_q() + c * deg_t())) + 1);
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        for (std::size_t i = 0; i < rows_[j].size(); ++i) {
            row[i + static_cast<std::size_t>(c) * j] += rows_[j][i];
        }
    }
    return from_rows({std::move(row)});
}

QtPoly QtPoly::shift_q(int k) const
{
    if (k < 0) {
        throw std::invalid_argument("shift_q: negative shift");
    }
    QtPoly r = *this;
    for (auto &row : r.rows_) {
        if (!row.empty()) {
            row.insert(row.begin(), static_cast<std::size_t>(k), BigRat(0));
        }
    }
    return r;
}

QtPoly QtPoly::swap_qt() const
{
    const int dq = deg_q();
    std::vector<std::vector<BigRat>> out(static_cast<std::size_t>(dq + 1));
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        for (std::size_t i = 0; i < rows_[j].size(); ++i) {
            if (!zero_coef(rows_[j][i])) {
                auto &dst = out[i];
                if (dst.size() <= j) {
                    dst.resize(j + 1);
                }
                dst[j] = rows_[j][i];
            }
        }
    }
    return from_rows(std::move(out));
}

std::string QtPoly::to_string() const
{
    const auto ts = terms();
    if (ts.empty()) {
        return "0";
    }
    std::string s;
    bool first = true;
    for (const auto &tm : ts) {
        const bool neg = sgn(tm.coef) < 0;
        const BigRat mag = neg ? BigRat(-tm.coef) : tm.coef;
        if (first) {
            s += neg ? "-" : "";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        const std::string mono = monomial_text(tm.dq, tm.dt);
        if (mono.empty()) {
            s += ctmac::to_string(mag);
        } else if (mag == 1) {
            s += mono;
        } else {
            s += ctmac::to_string(mag) + "*" + mono;
        }
    }
    return s;
}

std::optional<QtPoly> divide_exact(const QtPoly &a, const QtPoly &b)
{
    if (b.is_zero()) {
        throw std::domain_error("QtPoly division by zero");
    }
    if (a.is_zero()) {
        return QtPoly{};
    }
    if (b.is_constant()) {
        return a * (BigRat(1) / b.coeff(0, 0));
    }
    const BigInt da = a.denominator_lcm(), db = b.denominator_lcm();
    auto qz = detail::divide_exact(to_z2(a, da), to_z2(b, db));
    if (!qz) {
        return std::nullopt;
    }
    BigRat scale(db, da);
    scale.canonicalize();
    return from_z2(*qz) * scale;
}

QtPoly gcd(const QtPoly &a, const QtPoly &b)
{
    if (a.is_zero() && b.is_zero()) {
        return {};
    }
    Z2Poly g;
    if (a.is_zero()) {
        g = to_z2(b, b.denominator_lcm());
    } else if (b.is_zero()) {
        g = to_z2(a, a.denominator_lcm());
    } else if (a.is_constant() || b.is_constant()) {
        return QtPoly(1L);
    } else if (a.term_count() == 1 || b.term_count() == 1) {
        const QtPoly &mono = a.term_count() == 1 ? a : b;
        const QtPoly &other = a.term_count() == 1 ? b : a;
        const auto m = mono.terms().front();
        return QtPoly::monomial(1, std::min(m.dq, other.low_deg_q()), std::min(m.dt, low_deg_t(other)));
    } else {
        g = detail::gcd(to_z2(a, a.denominator_lcm()), to_z2(b, b.denominator_lcm()));
    }
    QtPoly r = from_z2(g);
    const BigInt content = r.integer_content();
    if (content != 1) {
        r.divide_coefficients(content);
    }
    if (sgn(r.leading_coeff()) < 0) {
        r = -r;
    }
    return r;
}

} // namespace ctmac
