#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <ctmac/bigrat.hpp>

namespace ctmac
{

// Integer partition: weakly decreasing positive parts, zeros suppressed.
// Ordered lexicographically on the parts, so it can key ordered maps.
class Partition
{
public:
    Partition() = default;
    // Accepts trailing zeros; throws StructuralError if the parts increase or are negative.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // "3,1,1"; "" and "0" give the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int> &parts() const
    {
        return parts_;
    }
    // 1-based part, 0 past the end.
    int part(std::size_t i) const
    {
        return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0;
    }
    bool empty() const
    {
        return parts_.empty();
    }
    int size() const;
    int length() const
    {
        return static_cast<int>(parts_.size());
    }
    // sum (i-1) lambda_i
    int nstat() const;
    Partition conjugate() const;
    // Number of parts equal to each value 1..max: mult[k] counts parts equal to k.
    std::vector<int> multiplicities() const;
    // prod_k k^{m_k} m_k!
    BigInt z() const;

    // "3,1,1", empty partition as "".
    std::string to_string() const;

    friend auto operator<=>(const Partition &, const Partition &) = default;
    friend bool operator==(const Partition &, const Partition &) = default;

private:
    std::vector<int> parts_;
};

struct PartitionStats {
    int size;
    int length;
    int nstat;
};

inline PartitionStats stats(const Partition &p)
{
    return {p.size(), p.length(), p.nstat()};
}

// mu_i <= lambda_i for all i.
bool contains(const Partition &lambda, const Partition &mu);
// Dominance mu <= lambda; throws StructuralError when |mu| != |lambda|.
bool dominance_leq(const Partition &mu, const Partition &lambda);
// lambda / mu is a horizontal r-strip.
bool is_horizontal_strip(const Partition &lambda, const Partition &mu, int r);

// Every partition with size <= maxsize, length <= maxlen and largest part <= maxpart
// (negative bound = unbounded), grouped by size, each size in decreasing lex order.
std::vector<Partition> enumerate(int maxsize, int maxlen = -1, int maxpart = -1);
// Partitions of exactly n, decreasing lex order.
std::vector<Partition> partitions_of(int n);

// Componentwise sum with trailing-zero padding (lambda + mu as vectors).
Partition add_parts(const Partition &a, const Partition &b);

} // namespace ctmac
