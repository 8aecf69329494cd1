#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <ctmac/laurent.hpp>
#include <ctmac/partition.hpp>
#include <ctmac/ratfunc.hpp>

namespace ctmac
{

// Homogeneous symmetric function of a fixed degree, stored in the power-sum
// basis: coeffs()[rho] is the coefficient of p_rho.
class SymF
{
public:
    SymF() = default;
    explicit SymF(int degree) : degree_(degree) {}

    static SymF one()
    {
        return p(Partition{});
    }
    static SymF p(const Partition &rho, const RatFunc &c = RatFunc(1L));

    int degree() const
    {
        return degree_;
    }
    bool is_zero() const
    {
        return coeffs_.empty();
    }
    const std::map<Partition, RatFunc> &coeffs() const
    {
        return coeffs_;
    }
    RatFunc coeff(const Partition &rho) const;
    void add_term(const Partition &rho, const RatFunc &c);

    SymF &operator+=(const SymF &o);
    SymF &operator-=(const SymF &o);
    SymF &operator*=(const RatFunc &c);
    friend SymF operator+(SymF a, const SymF &b)
    {
        return a += b;
    }
    friend SymF operator-(SymF a, const SymF &b)
    {
        return a -= b;
    }
    friend SymF operator*(SymF a, const RatFunc &c)
    {
        return a *= c;
    }
    friend SymF operator*(const SymF &a, const SymF &b);
    friend bool operator==(const SymF &a, const SymF &b)
    {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

    // Multiply the coefficient of p_rho by prod_i factor(rho_i).
    SymF scale_power_sums(const std::function<RatFunc(int)> &factor) const;
    SymF map_coeffs(const std::function<RatFunc(const RatFunc &)> &fn) const;
    SymF specialize_t(int c) const;
    SymF swap_qt() const;

    // One "c . p_rho" line per term, sorted by rho.
    std::string dump() const;

private:
    int degree_ = 0;
    std::map<Partition, RatFunc> coeffs_;
};

inline SymF mul_symf(const SymF &a, const SymF &b)
{
    return a * b;
}

// One letter of a plethystic alphabet.  At level r it contributes
//   linear_weight * power_weight^r * (1 - u^r)/(1 - v^r) * x^{r*mono},
// where (u, v) is the optional geometric pair.  A plain letter x_i has both
// weights 1 and no geometric pair; a binomial element k is linear_weight = k.
struct Letter {
    ExpVec mono;
    RatFunc power_weight = RatFunc(1L);
    RatFunc linear_weight = RatFunc(1L);
    std::optional<std::pair<RatFunc, RatFunc>> geometric;
};

struct Alphabet {
    int nvars = 0;
    std::vector<Letter> letters;

    // Plain letters x_{first}, ..., x_{first+count-1} inside nvars variables.
    static Alphabet plain(int nvars, int first, int count);
    // A single scalar letter group with no variable content (nvars = 0).
    static Alphabet scalar(const Letter &l);
    Alphabet &operator+=(const Alphabet &o);
    friend Alphabet operator+(Alphabet a, const Alphabet &b)
    {
        return a += b;
    }
};

LaurentPoly p_eval(const Alphabet &a, int r);
LaurentPoly sym_eval(const SymF &f, const Alphabet &a);
// Evaluation on an alphabet with no variables.
RatFunc sym_eval_scalar(const SymF &f, const Alphabet &a);

SymF m_in_p(const Partition &lambda);
SymF h_in_p(int r);
// g_r = h_r[(1 - t)X/(1 - q)].
SymF g_in_p(int r);
// Products h_lambda, g_lambda.
SymF h_in_p(const Partition &lambda);
SymF g_in_p(const Partition &lambda);
// Coordinates in the monomial basis.
std::map<Partition, RatFunc> to_m_basis(const SymF &f);

// <p_rho, p_rho> = z_rho prod (1 - q^{rho_i})/(1 - t^{rho_i}).
RatFunc hall_norm_p(const Partition &rho);
RatFunc hall_scalar(const SymF &f, const SymF &g);

// omega_{u,v}(p_r) = (-1)^{r-1} (1 - u^r)/(1 - v^r) p_r.  Throws DomainError if v = +-1.
SymF omega_uv(const SymF &f, const RatFunc &u, const RatFunc &v);

} // namespace ctmac
