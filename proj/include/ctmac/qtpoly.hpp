#pragma once

#include <optional>
#include <string>
#include <vector>

#include <ctmac/bigrat.hpp>

namespace ctmac
{

// Polynomial in the two formal parameters q and t with rational coefficients.
//
// Stored densely by t-degree: rows()[j][i] is the coefficient of q^i t^j.  Every
// row is trimmed of trailing zeros and the last row is nonzero, so the zero
// polynomial has no rows at all and structural equality is value equality.
class QtPoly
{
public:
    struct Term {
        int dq;
        int dt;
        BigRat coef;
    };

    QtPoly() = default;
    QtPoly(long c);
    QtPoly(const BigRat &c);

    static QtPoly monomial(const BigRat &c, int dq, int dt);
    static QtPoly q();
    static QtPoly t();
    static QtPoly from_rows(std::vector<std::vector<BigRat>> rows);

    bool is_zero() const
    {
        return rows_.empty();
    }
    bool is_constant() const;
    bool is_one() const;
    bool is_integral() const;
    // True if no t appears.
    bool is_univariate() const
    {
        return rows_.size() <= 1u;
    }

    // -1 for the zero polynomial.
    int deg_q() const;
    int deg_t() const
    {
        return static_cast<int>(rows_.size()) - 1;
    }
    int low_deg_q() const;

    BigRat coeff(int dq, int dt) const;
    const std::vector<std::vector<BigRat>> &rows() const
    {
        return rows_;
    }
    // Nonzero terms sorted by q-degree, then t-degree, ascending.
    std::vector<Term> terms() const;
    std::size_t term_count() const;

    // Coefficient of the largest monomial in lexicographic order with q major.
    BigRat leading_coeff() const;
    // Least common multiple of the coefficient denominators.
    BigInt denominator_lcm() const;
    // gcd of the numerators of an integral polynomial (positive; 0 for zero).
    BigInt integer_content() const;

    QtPoly &operator+=(const QtPoly &o);
    QtPoly &operator-=(const QtPoly &o);
    QtPoly &operator*=(const BigRat &c);
    QtPoly &operator*=(const QtPoly &o);
    // Exact division of every coefficient by an integer.
    QtPoly &divide_coefficients(const BigInt &d);

    friend QtPoly operator+(QtPoly a, const QtPoly &b)
    {
        return a += b;
    }
    friend QtPoly operator-(QtPoly a, const QtPoly &b)
    {
        return a -= b;
    }
    friend QtPoly operator*(const QtPoly &a, const QtPoly &b);
    friend QtPoly operator*(QtPoly a, const BigRat &c)
    {
        return a *= c;
    }
    QtPoly operator-() const;

    friend bool operator==(const QtPoly &a, const QtPoly &b)
    {
        return a.rows_ == b.rows_;
    }

    QtPoly pow(unsigned e) const;
    BigRat eval(const BigRat &q0, const BigRat &t0) const;
    // Substitute t -> q^c for c >= 0.
    QtPoly subs_t_qpow(int c) const;
    // Multiply by q^k (k >= 0).
    QtPoly shift_q(int k) const;
    QtPoly swap_qt() const;

    std::string to_string() const;

private:
    void trim();

    std::vector<std::vector<BigRat>> rows_;
};

// Exact quotient a / b when b divides a in Q[q,t], otherwise nullopt.  b must be nonzero.
std::optional<QtPoly> divide_exact(const QtPoly &a, const QtPoly &b);

// Greatest common divisor over Q[q,t], returned as a primitive integer polynomial whose
// q-major leading coefficient is positive.  gcd(0, 0) = 0.
QtPoly gcd(const QtPoly &a, const QtPoly &b);

} // namespace ctmac
