#pragma once

#include <ostream>
#include <string>

#include <ctmac/bigrat.hpp>
#include <ctmac/qtpoly.hpp>

namespace ctmac
{

// Element of Q(q, t), kept in canonical form:
//   num and den have integer coefficients, gcd(num, den) = 1,
//   the integer content of num and den together is 1,
//   and the q-major leading coefficient of den is positive.
// Equal values therefore have equal representations.
class RatFunc
{
public:
    RatFunc() : den_(1L) {}
    RatFunc(long c);
    RatFunc(const BigRat &c);
    RatFunc(QtPoly p);
    RatFunc(QtPoly num, QtPoly den);

    // c * q^dq * t^dt; exponents may be negative.
    static RatFunc monomial(const BigRat &c, int dq, int dt = 0);
    static RatFunc q_pow(int k)
    {
        return monomial(1, k, 0);
    }
    static RatFunc t_pow(int k)
    {
        return monomial(1, 0, k);
    }

    const QtPoly &num() const
    {
        return num_;
    }
    const QtPoly &den() const
    {
        return den_;
    }

    bool is_zero() const
    {
        return num_.is_zero();
    }
    bool is_one() const
    {
        return num_.is_one() && den_.is_one();
    }
    bool is_constant() const
    {
        return num_.is_constant() && den_.is_constant();
    }
    bool is_polynomial() const
    {
        return den_.is_constant();
    }
    // True if t does not occur.
    bool is_univariate() const
    {
        return num_.is_univariate() && den_.is_univariate();
    }
    // Value of a constant element.
    BigRat constant_value() const;

    RatFunc &operator+=(const RatFunc &o);
    RatFunc &operator-=(const RatFunc &o);
    RatFunc &operator*=(const RatFunc &o);
    RatFunc &operator/=(const RatFunc &o);

    friend RatFunc operator+(RatFunc a, const RatFunc &b)
    {
        return a += b;
    }
    friend RatFunc operator-(RatFunc a, const RatFunc &b)
    {
        return a -= b;
    }
    friend RatFunc operator*(RatFunc a, const RatFunc &b)
    {
        return a *= b;
    }
    friend RatFunc operator/(RatFunc a, const RatFunc &b)
    {
        return a /= b;
    }
    RatFunc operator-() const;

    friend bool operator==(const RatFunc &a, const RatFunc &b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunc inverse() const;
    RatFunc pow(int e) const;

    // Replace t by q^c.  Throws PoleError if the denominator vanishes.
    RatFunc specialize_t(int c) const;
    // Exact value at (q0, t0).  Throws PoleError at a pole.
    BigRat eval(const BigRat &q0, const BigRat &t0 = 0) const;
    RatFunc swap_qt() const;

    std::string to_string() const;

private:
    struct Raw {
    };
    RatFunc(Raw, QtPoly num, QtPoly den) : num_(std::move(num)), den_(std::move(den)) {}

    void canonicalize();
    // Only the integer content and sign; num and den are already coprime.
    void normalize_content();

    QtPoly num_;
    QtPoly den_;
};

inline std::ostream &operator<<(std::ostream &os, const RatFunc &f)
{
    return os << f.to_string();
}

inline RatFunc specialize_t(const RatFunc &f, int c)
{
    return f.specialize_t(c);
}

inline BigRat eval_point(const RatFunc &f, const BigRat &q0, const BigRat &t0 = 0)
{
    return f.eval(q0, t0);
}

// (q^base_exp)_k, including k < 0.  Throws PoleError when a denominator factor vanishes.
RatFunc qpoch_scalar(int base_exp, int k);
// (z)_k = (1 - z)(1 - zq)...(1 - zq^{k-1}) for an arbitrary element z, k >= 0.
RatFunc qpoch(const RatFunc &z, int k);
// (q^{n-k+1})_k / (q)_k.
RatFunc qbinom(int n, int k);

} // namespace ctmac
