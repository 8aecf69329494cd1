#include <ctmac/symfunc.hpp>

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include <ctmac/errors.hpp>

namespace ctmac
{

namespace
{

Partition merge_parts(const Partition &a, const Partition &b)
{
    std::vector<int> v = a.parts();
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    std::sort(v.begin(), v.end(), std::greater<>());
    return Partition(std::move(v));
}

// Transition data for one degree.
//   to_m[i][j]: coefficient of m_{parts[j]} in p_{parts[i]}.
//   from_m[i][j]: coefficient of p_{parts[j]} in m_{parts[i]}.
struct Transition {
    std::vector<Partition> parts;
    std::vector<std::vector<BigRat>> to_m;
    std::vector<std::vector<BigRat>> from_m;
    std::size_t index(const Partition &p) const
    {
        return static_cast<std::size_t>(std::lower_bound(parts.begin(), parts.end(), p, std::greater<>()) -
                                        parts.begin());
    }
};

// Number of ways to place the parts of rho into the rows of lambda so that
// each row sums to its part: the coefficient of x^lambda in p_rho.
BigInt placements(const std::vector<int> &rho, std::size_t k, std::vector<int> &room)
{
    if (k == rho.size()) {
        return std::all_of(room.begin(), room.end(), [](int r) { return r == 0; }) ? 1 : 0;
    }
    BigInt total = 0;
    for (auto &r : room) {
        if (r >= rho[k]) {
            r -= rho[k];
            total += placements(rho, k + 1, room);
            r += rho[k];
        }
    }
    return total;
}

std::shared_ptr<const Transition> build_transition(int degree)
{
    auto tr = std::make_shared<Transition>();
    tr->parts = partitions_of(degree);
    const std::size_t n = tr->parts.size();
    tr->to_m.assign(n, std::vector<BigRat>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<int> room = tr->parts[j].parts();
            tr->to_m[i][j] = placements(tr->parts[i].parts(), 0, room);
        }
    }
    // p_i = sum_j to_m[i][j] m_j, so m = to_m^{-1} p.  Gauss-Jordan on [to_m | I].
    std::vector<std::vector<BigRat>> a = tr->to_m, inv(n, std::vector<BigRat>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        inv[i][i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (sgn(a[piv][col]) == 0) {
            ++piv;
        }
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const BigRat s = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= s;
            inv[col][j] /= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r != col && sgn(a[r][col]) != 0) {
                const BigRat f = a[r][col];
                for (std::size_t j = 0; j < n; ++j) {
                    a[r][j] -= f * a[col][j];
                    inv[r][j] -= f * inv[col][j];
                }
            }
        }
    }
    tr->from_m = std::move(inv);
    return tr;
}

std::shared_ptr<const Transition> transition(int degree)
{
    static std::shared_mutex mu;
    static std::unordered_map<int, std::shared_ptr<const Transition>> cache;
    {
        std::shared_lock lock(mu);
        if (auto it = cache.find(degree); it != cache.end()) {
            return it->second;
        }
    }
    std::unique_lock lock(mu);
    if (auto it = cache.find(degree); it != cache.end()) {
        return it->second;
    }
    auto tr = build_transition(degree);
    cache.emplace(degree, tr);
    return tr;
}

RatFunc one_minus(const RatFunc &x)
{
    return RatFunc(1L) - x;
}

} // namespace

SymF SymF::p(const Partition &rho, const RatFunc &c)
{
    SymF f(rho.size());
    f.add_term(rho, c);
    return f;
}

RatFunc SymF::coeff(const Partition &rho) const
{
    const auto it = coeffs_.find(rho);
    return it == coeffs_.end() ? RatFunc(0L) : it->second;
}

void SymF::add_term(const Partition &rho, const RatFunc &c)
{
    if (rho.size() != degree_) {
        throw StructuralError("SymF: index partition " + rho.to_string() + " has wrong size for degree " +
                              std::to_string(degree_));
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, fresh] = coeffs_.try_emplace(rho, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) {
            coeffs_.erase(it);
        }
    }
}

SymF &SymF::operator+=(const SymF &o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero() && degree_ != o.degree_) {
        degree_ = o.degree_;
    }
    if (degree_ != o.degree_) {
        throw StructuralError("SymF: adding different degrees");
    }
    for (const auto &[rho, c] : o.coeffs_) {
        add_term(rho, c);
    }
    return *this;
}

SymF &SymF::operator-=(const SymF &o)
{
    return *this += o * RatFunc(-1L);
}

SymF &SymF::operator*=(const RatFunc &c)
{
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto &kv : coeffs_) {
        kv.second *= c;
    }
    return *this;
}

SymF operator*(const SymF &a, const SymF &b)
{
    SymF out(a.degree_ + b.degree_);
    for (const auto &[ra, ca] : a.coeffs_) {
        for (const auto &[rb, cb] : b.coeffs_) {
            out.add_term(merge_parts(ra, rb), ca * cb);
        }
    }
    return out;
}

SymF SymF::scale_power_sums(const std::function<RatFunc(int)> &factor) const
{
    std::map<int, RatFunc> memo;
    SymF out(degree_);
    for (const auto &[rho, c] : coeffs_) {
        RatFunc w = c;
        for (int r : rho.parts()) {
            auto it = memo.find(r);
            if (it == memo.end()) {
                it = memo.emplace(r, factor(r)).first;
            }
            w *= it->second;
        }
        out.add_term(rho, w);
    }
    return out;
}

SymF SymF::map_coeffs(const std::function<RatFunc(const RatFunc &)> &fn) const
{
    SymF out(degree_);
    for (const auto &[rho, c] : coeffs_) {
        out.add_term(rho, fn(c));
    }
    return out;
}

SymF SymF::specialize_t(int c) const
{
    return map_coeffs([c](const RatFunc &f) { return f.specialize_t(c); });
}

SymF SymF::swap_qt() const
{
    return map_coeffs([](const RatFunc &f) { return f.swap_qt(); });
}

std::string SymF::dump() const
{
    std::string out;
    for (const auto &[rho, c] : coeffs_) {
        out += c.to_string() + " · p_(" + rho.to_string() + ")\n";
    }
    return out;
}

Alphabet Alphabet::plain(int nvars, int first, int count)
{
    Alphabet a;
    a.nvars = nvars;
    for (int i = first; i < first + count; ++i) {
        Letter l;
        l.mono = ExpVec::unit(nvars, i);
        a.letters.push_back(std::move(l));
    }
    return a;
}

Alphabet Alphabet::scalar(const Letter &l)
{
    Alphabet a;
    a.nvars = 0;
    Letter c = l;
    c.mono = ExpVec(0);
    a.letters.push_back(std::move(c));
    return a;
}

Alphabet &Alphabet::operator+=(const Alphabet &o)
{
    if (letters.empty()) {
        nvars = o.nvars;
    }
    if (!o.letters.empty() && o.nvars != nvars) {
        throw StructuralError("Alphabet: joining alphabets over different variable sets");
    }
    letters.insert(letters.end(), o.letters.begin(), o.letters.end());
    return *this;
}

LaurentPoly p_eval(const Alphabet &a, int r)
{
    if (r < 1) {
        throw DomainError("p_eval: level must be positive");
    }
    std::vector<LaurentPoly::Term> terms;
    for (const auto &l : a.letters) {
        if (l.mono.nvars() != a.nvars) {
            throw StructuralError("p_eval: letter has wrong number of variables");
        }
        RatFunc w = l.linear_weight * l.power_weight.pow(r);
        if (l.geometric) {
            w *= one_minus(l.geometric->first.pow(r)) / one_minus(l.geometric->second.pow(r));
        }
        terms.emplace_back(l.mono.scaled(r), std::move(w));
    }
    return LaurentPoly::from_terms(a.nvars, std::move(terms));
}

LaurentPoly sym_eval(const SymF &f, const Alphabet &a)
{
    std::map<int, LaurentPoly> pr;
    LaurentPoly out(a.nvars);
    for (const auto &[rho, c] : f.coeffs()) {
        LaurentPoly term(a.nvars, c);
        for (int r : rho.parts()) {
            auto it = pr.find(r);
            if (it == pr.end()) {
                it = pr.emplace(r, p_eval(a, r)).first;
            }
            term = term * it->second;
        }
        out += term;
    }
    return out;
}

RatFunc sym_eval_scalar(const SymF &f, const Alphabet &a)
{
    if (a.nvars != 0) {
        throw StructuralError("sym_eval_scalar: alphabet has variables");
    }
    return sym_eval(f, a).ct_all();
}

SymF m_in_p(const Partition &lambda)
{
    const auto tr = transition(lambda.size());
    const auto &row = tr->from_m[tr->index(lambda)];
    SymF out(lambda.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (sgn(row[j]) != 0) {
            out.add_term(tr->parts[j], RatFunc(row[j]));
        }
    }
    return out;
}

SymF h_in_p(int r)
{
    SymF out(r);
    for (const auto &rho : partitions_of(r)) {
        out.add_term(rho, RatFunc(BigRat(1) / BigRat(rho.z())));
    }
    return out;
}

SymF g_in_p(int r)
{
    return h_in_p(r).scale_power_sums(
        [](int k) { return one_minus(RatFunc::t_pow(k)) / one_minus(RatFunc::q_pow(k)); });
}

SymF h_in_p(const Partition &lambda)
{
    SymF out = SymF::one();
    for (int r : lambda.parts()) {
        out = out * h_in_p(r);
    }
    return out;
}

SymF g_in_p(const Partition &lambda)
{
    SymF out = SymF::one();
    for (int r : lambda.parts()) {
        out = out * g_in_p(r);
    }
    return out;
}

std::map<Partition, RatFunc> to_m_basis(const SymF &f)
{
    std::map<Partition, RatFunc> out;
    if (f.is_zero()) {
        return out;
    }
    const auto tr = transition(f.degree());
    for (const auto &[rho, c] : f.coeffs()) {
        const auto &row = tr->to_m[tr->index(rho)];
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (sgn(row[j]) != 0) {
                out[tr->parts[j]] += c * RatFunc(row[j]);
            }
        }
    }
    std::erase_if(out, [](const auto &kv) { return kv.second.is_zero(); });
    return out;
}

RatFunc hall_norm_p(const Partition &rho)
{
    RatFunc w(BigRat(rho.z()));
    for (int r : rho.parts()) {
        w *= one_minus(RatFunc::q_pow(r)) / one_minus(RatFunc::t_pow(r));
    }
    return w;
}

RatFunc hall_scalar(const SymF &f, const SymF &g)
{
    RatFunc out(0L);
    if (f.degree() != g.degree()) {
        return out;
    }
    const SymF &small = f.coeffs().size() <= g.coeffs().size() ? f : g;
    const SymF &large = &small == &f ? g : f;
    for (const auto &[rho, c] : small.coeffs()) {
        const auto it = large.coeffs().find(rho);
        if (it != large.coeffs().end()) {
            out += c * it->second * hall_norm_p(rho);
        }
    }
    return out;
}

SymF omega_uv(const SymF &f, const RatFunc &u, const RatFunc &v)
{
    if (v == RatFunc(1L) || v == RatFunc(-1L)) {
        throw DomainError("omega_uv: v must not be 1 or -1");
    }
    return f.scale_power_sums([&](int r) {
        RatFunc w = one_minus(u.pow(r)) / one_minus(v.pow(r));
        return r % 2 == 0 ? -w : w;
    });
}

} // namespace ctmac
