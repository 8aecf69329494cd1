#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <ctmac/ratfunc.hpp>

namespace ctmac
{

inline constexpr int kMaxVars = 8;

// Exponent vector over x_0..x_{n-1}.  Entries may be negative; arithmetic that
// would overflow int32 throws std::overflow_error.
class ExpVec
{
public:
    ExpVec() = default;
    explicit ExpVec(int nvars);
    ExpVec(std::initializer_list<int> exps);
    // k in slot i, 0 elsewhere.
    static ExpVec unit(int nvars, int i, int k = 1);

    int nvars() const
    {
        return n_;
    }
    int operator[](int i) const
    {
        return e_[static_cast<std::size_t>(i)];
    }
    void set(int i, int v)
    {
        e_[static_cast<std::size_t>(i)] = v;
    }
    bool is_zero() const;
    long total_degree() const;

    ExpVec &operator+=(const ExpVec &o);
    ExpVec &operator-=(const ExpVec &o);
    friend ExpVec operator+(ExpVec a, const ExpVec &b)
    {
        return a += b;
    }
    friend ExpVec operator-(ExpVec a, const ExpVec &b)
    {
        return a -= b;
    }
    ExpVec scaled(int k) const;

    friend auto operator<=>(const ExpVec &, const ExpVec &) = default;
    friend bool operator==(const ExpVec &, const ExpVec &) = default;

    // "x0^2*x1^-1", "1" for the zero vector.
    std::string to_string() const;

private:
    std::array<std::int32_t, kMaxVars> e_{};
    int n_ = 0;
};

// Sparse Laurent polynomial in x_0..x_{n-1} with RatFunc coefficients.
// Terms are kept sorted by exponent vector with no zero coefficients.
class LaurentPoly
{
public:
    using Term = std::pair<ExpVec, RatFunc>;

    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}
    LaurentPoly(int nvars, const RatFunc &c);

    static LaurentPoly monomial(const RatFunc &c, const ExpVec &e);
    static LaurentPoly variable(int nvars, int i);
    // Terms may be unsorted and repeated; they are collected.
    static LaurentPoly from_terms(int nvars, std::vector<Term> terms);

    int nvars() const
    {
        return nvars_;
    }
    bool is_zero() const
    {
        return terms_.empty();
    }
    std::size_t size() const
    {
        return terms_.size();
    }
    const std::vector<Term> &terms() const
    {
        return terms_;
    }
    RatFunc coeff(const ExpVec &e) const;

    LaurentPoly &operator+=(const LaurentPoly &o);
    LaurentPoly &operator-=(const LaurentPoly &o);
    LaurentPoly &operator*=(const RatFunc &c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b)
    {
        return a += b;
    }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b)
    {
        return a -= b;
    }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    friend LaurentPoly operator*(LaurentPoly a, const RatFunc &c)
    {
        return a *= c;
    }
    LaurentPoly operator-() const;
    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    LaurentPoly times_monomial(const RatFunc &c, const ExpVec &e) const;
    LaurentPoly pow(unsigned k) const;

    // Terms with exponent 0 in slot i.
    LaurentPoly ct_var(int i) const;
    // Coefficient of the zero exponent vector.
    RatFunc ct_all() const;
    // (min, max) exponent of x_i; throws on the zero polynomial.
    std::pair<int, int> degree_in(int i) const;
    // x_i -> c * x_j (i != j); with c = 1 and j = i this is the identity.
    LaurentPoly substitute(int i, const RatFunc &c, int j) const;
    // x_i -> 1.
    LaurentPoly set_one(int i) const;
    // Apply a permutation of the variables: x_k -> x_{perm[k]}.
    LaurentPoly permute(const std::vector<int> &perm) const;
    // Apply f(q, t) -> f(q, q^c) to every coefficient.
    LaurentPoly specialize_t(int c) const;
    // Exact value at x = xs, q = q0, t = t0; throws PoleError at a pole.
    BigRat eval(const std::vector<BigRat> &xs, const BigRat &q0, const BigRat &t0 = 0) const;
    // Common total degree of all terms, nullopt if mixed or zero.
    std::optional<long> homogeneous_degree() const;

    std::string to_string() const;

private:
    void check_nvars(const LaurentPoly &o) const;

    int nvars_ = 0;
    std::vector<Term> terms_;
};

// (c * x^mono)_k = prod_{i<k} (1 - c q^i x^mono).
LaurentPoly qpoch_monomial(const RatFunc &coef, const ExpVec &mono, int k);

// Statistics of a pruned constant-term product.
struct CtStats {
    std::size_t terms_peak = 0;
};

// Constant term of the product of the factors, without forming the full
// product: after each multiplication, terms that cannot return to the zero
// exponent given the exponent ranges of the remaining factors are dropped.
// Factors are used in the given order.
RatFunc ct_product(const std::vector<LaurentPoly> &factors, CtStats *stats = nullptr);

} // namespace ctmac
