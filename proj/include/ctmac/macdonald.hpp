#pragma once

#include <map>
#include <vector>

#include <ctmac/partition.hpp>
#include <ctmac/ratfunc.hpp>
#include <ctmac/symfunc.hpp>

namespace ctmac
{

using PartitionCoeffs = std::map<Partition, RatFunc>;

// Macdonald P_lambda(q, t) at generic (q, t), in the power-sum basis.
SymF mac_P(const Partition &lambda);
// P_lambda(q, q^c).
SymF mac_P_at(const Partition &lambda, int c);
// 1 / <P_lambda, P_lambda>.
RatFunc b_norm(const Partition &lambda);
SymF mac_Q(const Partition &lambda);

// Orthogonalize the monomial functions of one degree in the given order,
// which must list every partition of that degree.  Any linear extension of
// dominance gives the Macdonald basis.
std::map<Partition, SymF> gram_schmidt(const std::vector<Partition> &order);

// <Q_lambda, P_mu P_nu>.
RatFunc lr_coeff(const Partition &lambda, const Partition &mu, const Partition &nu);

enum class SkewKind { P, Q };
// Q_{lambda/mu} = sum_nu f^lambda_{mu nu} Q_nu, and P_{lambda/mu} = b_mu b_lambda^{-1} Q_{lambda/mu}.
// Zero unless mu is contained in lambda.
SymF skew(const Partition &lambda, const Partition &mu, SkewKind kind);

// Coefficients of P_mu g_r in the P basis.
PartitionCoeffs pieri_expand(const Partition &mu, int r);
// Coefficients of P_lambda in the g basis.
PartitionCoeffs g_expansion(const Partition &lambda);

// prod_i (a t^{1-i})_{lambda_i}
RatFunc qt_factorial(const Partition &lambda, const RatFunc &a);
// prod_{i<=n} (t^{n-i+1})_{lambda_i} prod_{i<j<=n} (t^{j-i})_{lambda_i-lambda_j} / (t^{j-i+1})_{lambda_i-lambda_j}.
// n = 0 means n = length(lambda).  Throws DomainError if 0 < n < length(lambda).
RatFunc hook_poly(const Partition &lambda, int n = 0);
// P_lambda[(1 - a)/(1 - t)] in closed form.
RatFunc principal_spec(const Partition &lambda, const RatFunc &a, int n = 0);

struct DualityPair {
    SymF omega_skew_p; // omega_{q,t} P_{lambda/mu}(q, t)
    SymF swapped_skew_q; // Q_{lambda'/mu'}(t, q)
};
DualityPair duality_apply(const Partition &lambda, const Partition &mu);

// Largest degree kept in the cache (CT_MACD_CACHE_MAX, default 8).
int mac_cache_max_degree();
void mac_cache_clear();

} // namespace ctmac
