#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <ctmac/laurent.hpp>
#include <ctmac/partition.hpp>
#include <ctmac/ratfunc.hpp>
#include <ctmac/report.hpp>

namespace ctmac
{

struct AfltParams {
    int n = 1;
    int a = 0;
    int b = 0;
    int c = 0;
    Partition lambda;
    Partition mu;

    AfltParams with_a(int a2) const
    {
        AfltParams p = *this;
        p.a = a2;
        return p;
    }
    std::string to_string() const;
};

// Factors of the integrand over x_0..x_n, in the order they are multiplied:
// x_0^{-|lambda|-|mu|}, P_lambda(x_1..x_n; q, q^c),
// P_mu[(q^{c-b-1} - q^a)/(1 - q^c) x_0 + x_1 + ... + x_n; q, q^c], then one
// binomial per factor of prod (x_0/x_i)_a (q x_i/x_0)_b prod_{i<j} (x_i/x_j)_c (q x_j/x_i)_c.
// Throws DomainError for a < 0, n < 0, n > 7, or c = 0 with mu nonempty.
std::vector<LaurentPoly> integrand_factors(const AfltParams &p);
LaurentPoly build_integrand(const AfltParams &p);

struct LhsResult {
    RatFunc value;
    std::size_t terms_peak = 0;
    std::string note;
};
LhsResult lhs_eval(const AfltParams &p);
RatFunc lhs_value(const AfltParams &p);

// Closed form of the constant term.  Throws DomainError for c = 0 with mu nonempty.
RatFunc rhs_aflt(const AfltParams &p);
RatFunc rhs_qmorris(int n, int a, int b, int c);

struct RootSets {
    std::vector<int> A1, A2, A3;
    std::vector<int> all() const;
    bool distinct() const;
};
RootSets root_sets(const AfltParams &p);

// Degree bound n b + |lambda| + |mu| for the constant term as a polynomial in q^a.
int qa_degree_bound(const AfltParams &p);

// Polynomial in the symbol X = q^a with coefficients in Q(q).
struct QaPoly {
    std::vector<RatFunc> coeffs; // coeffs[k] multiplies X^k
    int degree() const;
    RatFunc at(int a) const;
    std::string to_string() const;
};
// Interpolates through lhs_value at the given nonnegative a values.
QaPoly poly_interpolate(const AfltParams &p, const std::vector<int> &sample_as);
// Constant term at any integer a: direct for a >= 0, otherwise through the
// polynomial sampled at a = 0..bound+1 (cached).  Throws InvariantError if the
// extra sample disagrees with the degree bound.
RatFunc a_value(const AfltParams &p);

Report verify_aflt(const AfltParams &p);
Report verify_qmorris(int n, int a, int b, int c);
// One report per root plus a degree report and a distinctness report.
std::vector<Report> verify_roots(const AfltParams &p);
Report verify_recursion(const AfltParams &p);
// prop-add-1 when length(mu) < n, prop-add-2 otherwise.
Report verify_addpoints(const AfltParams &p);

} // namespace ctmac
