#include <ctmac/partition.hpp>

#include <algorithm>
#include <charconv>

#include <ctmac/errors.hpp>

namespace ctmac
{

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) {
            throw StructuralError("partition: negative part");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw StructuralError("partition: parts must be weakly decreasing");
        }
    }
}

Partition Partition::parse(std::string_view text)
{
    std::vector<int> parts;
    if (text.empty()) {
        return {};
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view tok = text.substr(pos, comma - pos);
        int v = 0;
        const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size()) {
            throw StructuralError("malformed partition literal '" + std::string(text) + "'");
        }
        parts.push_back(v);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::size() const
{
    int s = 0;
    for (int p : parts_) {
        s += p;
    }
    return s;
}

int Partition::nstat() const
{
    int s = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        s += static_cast<int>(i) * parts_[i];
    }
    return s;
}

Partition Partition::conjugate() const
{
    std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_) {
        for (int j = 0; j < p; ++j) {
            ++c[static_cast<std::size_t>(j)];
        }
    }
    return Partition(std::move(c));
}

std::vector<int> Partition::multiplicities() const
{
    std::vector<int> m(parts_.empty() ? 1 : static_cast<std::size_t>(parts_.front()) + 1, 0);
    for (int p : parts_) {
        ++m[static_cast<std::size_t>(p)];
    }
    return m;
}

BigInt Partition::z() const
{
    BigInt z = 1;
    const auto m = multiplicities();
    for (std::size_t k = 1; k < m.size(); ++k) {
        for (int i = 1; i <= m[k]; ++i) {
            z *= static_cast<long>(k) * i;
        }
    }
    return z;
}

std::string Partition::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            s += ",";
        }
        s += std::to_string(parts_[i]);
    }
    return s;
}

bool contains(const Partition &lambda, const Partition &mu)
{
    if (mu.length() > lambda.length()) {
        return false;
    }
    for (int i = 1; i <= mu.length(); ++i) {
        if (mu.part(static_cast<std::size_t>(i)) > lambda.part(static_cast<std::size_t>(i))) {
            return false;
        }
    }
    return true;
}

bool dominance_leq(const Partition &mu, const Partition &lambda)
{
    if (mu.size() != lambda.size()) {
        throw StructuralError("dominance order compares partitions of equal size only");
    }
    int sm = 0, sl = 0;
    const int len = std::max(mu.length(), lambda.length());
    for (int i = 1; i <= len; ++i) {
        sm += mu.part(static_cast<std::size_t>(i));
        sl += lambda.part(static_cast<std::size_t>(i));
        if (sm > sl) {
            return false;
        }
    }
    return true;
}

bool is_horizontal_strip(const Partition &lambda, const Partition &mu, int r)
{
    if (!contains(lambda, mu) || lambda.size() - mu.size() != r) {
        return false;
    }
    // At most one box per column: lambda_{i+1} <= mu_i.
    for (int i = 1; i < lambda.length(); ++i) {
        if (lambda.part(static_cast<std::size_t>(i + 1)) > mu.part(static_cast<std::size_t>(i))) {
            return false;
        }
    }
    return true;
}

namespace
{

void fill(int n, int maxpart, int maxlen, std::vector<int> &cur, std::vector<Partition> &out)
{
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    if (maxlen == 0) {
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        fill(n - p, p, maxlen - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate(int maxsize, int maxlen, int maxpart)
{
    std::vector<Partition> out;
    for (int n = 0; n <= maxsize; ++n) {
        std::vector<int> cur;
        fill(n, maxpart < 0 ? n : std::min(n, maxpart), maxlen < 0 ? n : maxlen, cur, out);
    }
    return out;
}

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    fill(n, n, n, cur, out);
    return out;
}

Partition add_parts(const Partition &a, const Partition &b)
{
    const int len = std::max(a.length(), b.length());
    std::vector<int> v(static_cast<std::size_t>(len));
    for (int i = 1; i <= len; ++i) {
        v[static_cast<std::size_t>(i - 1)] = a.part(static_cast<std::size_t>(i)) + b.part(static_cast<std::size_t>(i));
    }
    return Partition(std::move(v));
}

} // namespace ctmac
