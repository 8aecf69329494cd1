#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <ctmac/laurent.hpp>
#include <ctmac/partition.hpp>
#include <ctmac/report.hpp>

namespace ctmac
{

// Partial-fraction split of prod_{i<j} (z_i/z_j)_c (q z_j/z_i)_c / prod_i (z_i/w)_c
// into sum_{i,j} A_ij / (1 - q^j z_i / w), checked at random rational points
// (one report each), plus one report that every A_ij is a polynomial in z_i.
std::vector<Report> verify_cai_split(int n, int c, std::uint64_t seed, int points = 3);
// A_ij as a Laurent polynomial in z_1..z_n (slots 0..n-1); i is 1-based, 0 <= j < c.
LaurentPoly cai_coefficient(int n, int c, int i, int j);

// CT_z z^{-v} h_lambda[(1 - q^c)/(1 - q) (z_1 + ... + z_n)] prod_{i<j} (z_i/z_j)_c (q z_j/z_i)_c.
// Refused unless |v| = |lambda| and lambda_1 > max v.
Report verify_vanishing_h(int n, int c, const std::vector<int> &v, const Partition &lambda);
// Same with P_{lambda/mu}(z; q, q^c).  Refused unless mu is in lambda, length(mu) < length(lambda),
// |lambda| - |mu| = |v| and lambda_{length(mu)+1} > max v.
Report verify_vanishing_skew(int n, int c, const std::vector<int> &v, const Partition &lambda, const Partition &mu);

struct KeyCase {
    int kind = 0; // 1, 2 or 3
    int i = -1; // case 1: the index; case 2: the pair (i, j); 1-based
    int j = -1;
    std::vector<int> w; // case 3: permutation, 1-based values
    std::vector<int> tvec; // case 3: t_1..t_s
};
// Throws Refused unless 1 <= k_i <= (s - 1) c + b + t for all i.  Returns nullopt
// if none of the three cases can be witnessed.
std::optional<KeyCase> key_lemma_classify(const std::vector<int> &k, int b, int c, int t);
// Independent check of a witness against the case definitions.
bool key_case_holds(const std::vector<int> &k, int b, int c, int t, const KeyCase &kc);
// Every witness of every case, by exhaustive search (case 3 over all permutations).
std::vector<KeyCase> key_lemma_witnesses(const std::vector<int> &k, int b, int c, int t);

// Evaluates -(q^{c-b-1} - q^a)/(1 - q) x_0 - sum_i (1 - q^c)/(1 - q) x_i at
// a = -(s - 1)c - b - t, x_i = q^{k_s - k_i} (k_0 = 0), and checks it is a sum
// of exactly t - 1 distinct powers of q.  Refused unless k admits a case-3 witness.
Report subs_alphabet_check(int b, int c, int t, const std::vector<int> &k);

// Both sides of the symmetrization identity for a symmetric f in x_1..x_n
// (slots 0..n-1).  Refused if f is not symmetric.
Report verify_symmetrization(int n, int c, const LaurentPoly &f);
// sum_{w} w o prod_{i<j} (1 - q^c x_j/x_i)/(1 - x_j/x_i) = prod_{i<n} (1 - q^{(i+1)c})/(1 - q^c)
// at random rational points.
std::vector<Report> verify_symmetrizer_sum(int n, int c, std::uint64_t seed, int points = 3);

} // namespace ctmac
