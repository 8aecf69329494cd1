#include <ctmac/ratfunc.hpp>

#include <ctmac/errors.hpp>

#include <cstdlib>

namespace ctmac
{

namespace
{

QtPoly exact_quotient(const QtPoly &a, const QtPoly &b)
{
    if (b.is_one()) {
        return a;
    }
    auto r = divide_exact(a, b);
    if (!r) {
        throw std::logic_error("RatFunc: gcd does not divide operand");
    }
    return std::move(*r);
}

std::string side_text(const QtPoly &p)
{
    const std::string s = p.to_string();
    return p.term_count() > 1 ? "(" + s + ")" : s;
}

} // namespace

RatFunc::RatFunc(long c) : num_(c), den_(1L) {}

RatFunc::RatFunc(const BigRat &c) : num_(BigRat(c.get_num())), den_(BigRat(c.get_den())) {}

RatFunc::RatFunc(QtPoly p) : num_(std::move(p)), den_(1L)
{
    canonicalize();
}

RatFunc::RatFunc(QtPoly num, QtPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) {
        throw PoleError("RatFunc: zero denominator");
    }
    canonicalize();
}

RatFunc RatFunc::monomial(const BigRat &c, int dq, int dt)
{
    const QtPoly up = QtPoly::monomial(c, std::max(dq, 0), std::max(dt, 0));
    const QtPoly down = QtPoly::monomial(1, std::max(-dq, 0), std::max(-dt, 0));
    return RatFunc(up, down);
}

BigRat RatFunc::constant_value() const
{
    if (!is_constant()) {
        throw std::logic_error("RatFunc::constant_value on non-constant");
    }
    return num_.coeff(0, 0) / den_.coeff(0, 0);
}

void RatFunc::canonicalize()
{
    if (num_.is_zero()) {
        den_ = QtPoly(1L);
        return;
    }
    if (!num_.is_integral() || !den_.is_integral()) {
        BigInt l = num_.denominator_lcm();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den_.denominator_lcm().get_mpz_t());
        num_ *= BigRat(l);
        den_ *= BigRat(l);
    }
    if (!num_.is_constant() && !den_.is_constant()) {
        const QtPoly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = exact_quotient(num_, g);
            den_ = exact_quotient(den_, g);
        }
    }
    normalize_content();
}

void RatFunc::normalize_content()
{
    if (num_.is_zero()) {
        den_ = QtPoly(1L);
        return;
    }
    BigInt c = num_.integer_content();
    const BigInt cd = den_.integer_content();
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
    if (sgn(den_.leading_coeff()) < 0) {
        c = -c;
    }
    if (c != 1) {
        num_.divide_coefficients(c);
        den_.divide_coefficients(c);
    }
}

RatFunc &RatFunc::operator+=(const RatFunc &o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = o;
    }
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        normalize_content();
        return *this;
    }
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize_content();
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        canonicalize();
        return *this;
    }
    // a/b + c/d with g = gcd(b, d): only g can share factors with the new numerator.
    const QtPoly g = gcd(den_, o.den_);
    const QtPoly b1 = exact_quotient(den_, g);
    const QtPoly d1 = exact_quotient(o.den_, g);
    QtPoly n = num_ * d1 + o.num_ * b1;
    if (n.is_zero()) {
        num_ = QtPoly();
        den_ = QtPoly(1L);
        return *this;
    }
    const QtPoly g2 = gcd(n, g);
    num_ = exact_quotient(n, g2);
    den_ = b1 * d1 * exact_quotient(g, g2);
    normalize_content();
    return *this;
}

RatFunc &RatFunc::operator-=(const RatFunc &o)
{
    return *this += -o;
}

RatFunc &RatFunc::operator*=(const RatFunc &o)
{
    if (is_zero() || o.is_zero()) {
        num_ = QtPoly();
        den_ = QtPoly(1L);
        return *this;
    }
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize_content();
        return *this;
    }
    const QtPoly g1 = gcd(num_, o.den_);
    const QtPoly g2 = gcd(o.num_, den_);
    num_ = exact_quotient(num_, g1) * exact_quotient(o.num_, g2);
    den_ = exact_quotient(den_, g2) * exact_quotient(o.den_, g1);
    normalize_content();
    return *this;
}

RatFunc &RatFunc::operator/=(const RatFunc &o)
{
    return *this *= o.inverse();
}

RatFunc RatFunc::operator-() const
{
    return RatFunc(Raw{}, -num_, den_);
}

RatFunc RatFunc::inverse() const
{
    if (is_zero()) {
        throw PoleError("RatFunc: inverse of zero");
    }
    RatFunc r(Raw{}, den_, num_);
    r.normalize_content();
    return r;
}

RatFunc RatFunc::pow(int e) const
{
    if (e < 0) {
        return inverse().pow(-e);
    }
    RatFunc r(Raw{}, num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
    r.normalize_content();
    return r;
}

RatFunc RatFunc::specialize_t(int c) const
{
    if (is_univariate()) {
        return *this;
    }
    QtPoly d = den_.subs_t_qpow(c);
    if (d.is_zero()) {
        throw PoleError("specialize_t: denominator vanishes at t = q^" + std::to_string(c));
    }
    return RatFunc(num_.subs_t_qpow(c), std::move(d));
}

BigRat RatFunc::eval(const BigRat &q0, const BigRat &t0) const
{
    const BigRat d = den_.eval(q0, t0);
    if (sgn(d) == 0) {
        throw PoleError("eval_point: pole");
    }
    return num_.eval(q0, t0) / d;
}

RatFunc RatFunc::swap_qt() const
{
    RatFunc r(Raw{}, num_.swap_qt(), den_.swap_qt());
    r.normalize_content();
    return r;
}

std::string RatFunc::to_string() const
{
    if (den_.is_one()) {
        return num_.to_string();
    }
    return side_text(num_) + "/" + side_text(den_);
}

RatFunc qpoch_scalar(int base_exp, int k)
{
    if (k == 0) {
        return RatFunc(1L);
    }
    if (k < 0) {
        const RatFunc d = qpoch_scalar(base_exp + k, -k);
        if (d.is_zero()) {
            throw PoleError("qpoch_scalar: (q^" + std::to_string(base_exp) + ")_" + std::to_string(k) +
                            " has a vanishing denominator factor");
        }
        return d.inverse();
    }
    // 1 - q^m for m < 0 equals -(1 - q^{-m}) / q^{-m}; collect the monomial separately.
    QtPoly num(1L);
    int shift = 0;
    long sign = 1;
    for (int i = 0; i < k; ++i) {
        const int m = base_exp + i;
        if (m == 0) {
            return RatFunc(0L);
        }
        const int e = std::abs(m);
        num *= QtPoly(1L) - QtPoly::monomial(1, e, 0);
        if (m < 0) {
            shift += e;
            sign = -sign;
        }
    }
    if (sign < 0) {
        num = -num;
    }
    return RatFunc(std::move(num), QtPoly::monomial(1, shift, 0));
}

RatFunc qpoch(const RatFunc &z, int k)
{
    if (k < 0) {
        throw std::invalid_argument("qpoch: negative length for a general base");
    }
    RatFunc r(1L);
    for (int i = 0; i < k; ++i) {
        r *= RatFunc(1L) - z * RatFunc::q_pow(i);
    }
    return r;
}

RatFunc qbinom(int n, int k)
{
    if (k < 0) {
        throw std::invalid_argument("qbinom: negative k");
    }
    return qpoch_scalar(n - k + 1, k) / qpoch_scalar(1, k);
}

} // namespace ctmac
