#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include <ctmac/errors.hpp>
#include <ctmac/partition.hpp>

#include "oracles.hpp"

using namespace ctmac;

namespace
{

// Column lengths by scanning the diagram cell by cell.
std::vector<int> columns_oracle(const Partition &p)
{
    std::vector<int> cols;
    for (int i = 1; i <= p.length(); ++i) {
        for (int j = 1; j <= p.part(static_cast<std::size_t>(i)); ++j) {
            if (static_cast<int>(cols.size()) < j) {
                cols.push_back(0);
            }
            ++cols[static_cast<std::size_t>(j - 1)];
        }
    }
    return cols;
}

} // namespace

TEST_CASE("stats")
{
    const auto s = stats(Partition{7, 4, 3, 1});
    CHECK(s.size == 15);
    CHECK(s.length == 4);
    CHECK(s.nstat == 13);
    const auto e = stats(Partition{});
    CHECK((e.size == 0 && e.length == 0 && e.nstat == 0));
    const auto t = stats(Partition{3, 3});
    CHECK((t.size == 6 && t.length == 2 && t.nstat == 3));
}

TEST_CASE("conjugate")
{
    CHECK(Partition{2, 1}.conjugate() == Partition{2, 1});
    CHECK(Partition{3}.conjugate() == Partition{1, 1, 1});
    const Partition p{7, 4, 3, 1};
    CHECK(p.conjugate() == Partition(columns_oracle(p)));
    CHECK(p.conjugate() == Partition{4, 3, 3, 2, 1, 1, 1});
    CHECK(Partition{}.conjugate() == Partition{});
}

TEST_CASE("containment and dominance")
{
    CHECK(contains(Partition{7, 4, 3, 1}, Partition{4, 3, 1}));
    CHECK_FALSE(contains(Partition{4, 3, 1}, Partition{7, 4, 3, 1}));
    CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
    CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
    CHECK_THROWS_AS(dominance_leq(Partition{3}, Partition{2, 2}), StructuralError);
}

TEST_CASE("horizontal strips")
{
    CHECK(is_horizontal_strip(Partition{7, 4, 3, 1}, Partition{4, 3, 1}, 7));
    CHECK(is_horizontal_strip(Partition{2, 1}, Partition{2, 1}, 0));
    const Partition lam{2, 2}, mu{1};
    CHECK_FALSE(is_horizontal_strip(lam, mu, 3));
    // Column oracle: column 2 gains two boxes.
    const auto cl = columns_oracle(lam), cm = columns_oracle(mu);
    CHECK(cl[1] - (cm.size() > 1 ? cm[1] : 0) == 2);
    CHECK_FALSE(is_horizontal_strip(Partition{3, 1}, Partition{1}, 2));
    CHECK(is_horizontal_strip(Partition{3, 1}, Partition{1}, 3));
}

TEST_CASE("enumeration")
{
    const auto small = enumerate(2);
    REQUIRE(small.size() == 4);
    CHECK(small[0] == Partition{});
    CHECK(small[1] == Partition{1});
    CHECK(small[2] == Partition{2});
    CHECK(small[3] == Partition{1, 1});
    const auto rows = enumerate(3, 1);
    CHECK(rows == std::vector<Partition>{Partition{}, Partition{1}, Partition{2}, Partition{3}});
    // Oracle count by brute enumeration of compositions.
    std::size_t count = 0;
    for (int n = 0; n <= 4; ++n) {
        count += oracle::partitions_of(n).size();
    }
    CHECK(count == 12);
    CHECK(enumerate(4).size() == 12);
    for (int n = 0; n <= 9; ++n) {
        CHECK(partitions_of(n).size() == oracle::partitions_of(n).size());
        const auto ps = partitions_of(n);
        CHECK(std::set<Partition>(ps.begin(), ps.end()).size() == ps.size());
    }
    for (const auto &p : enumerate(8, 3, 4)) {
        CHECK(p.length() <= 3);
        CHECK(p.part(1) <= 4);
    }
}

TEST_CASE("parsing")
{
    CHECK(Partition::parse("3,1,1") == Partition{3, 1, 1});
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition::parse("0") == Partition{});
    CHECK(Partition::parse("2,1,0") == Partition{2, 1});
    CHECK_THROWS_AS(Partition::parse("1,3"), StructuralError);
    CHECK_THROWS_AS(Partition::parse("1,,2"), StructuralError);
    CHECK_THROWS_AS(Partition::parse("a"), StructuralError);
    CHECK_THROWS_AS(Partition::parse("-1"), StructuralError);
    CHECK(Partition{2, 1}.to_string() == "2,1");
}

TEST_CASE("indexing past the length reads zero")
{
    const Partition p{3, 1};
    CHECK(p.part(1) == 3);
    CHECK(p.part(2) == 1);
    CHECK(p.part(3) == 0);
    CHECK(p.part(100) == 0);
}

TEST_CASE("z_lambda")
{
    for (int n = 0; n <= 7; ++n) {
        for (const auto &p : partitions_of(n)) {
            CHECK(p.z() == oracle::z_of(p.parts()));
        }
    }
    CHECK(Partition{2, 1, 1}.z() == 4);
}

TEST_CASE("property: conjugation, containment and dominance")
{
    const auto all = enumerate(7);
    for (const auto &l : all) {
        CHECK(l.conjugate().conjugate() == l);
        CHECK(l.conjugate() == Partition(columns_oracle(l)));
    }
    for (const auto &l : all) {
        for (const auto &m : all) {
            CHECK(contains(l, m) == contains(l.conjugate(), m.conjugate()));
            if (l.size() == m.size()) {
                CHECK(dominance_leq(m, l) == dominance_leq(l.conjugate(), m.conjugate()));
            }
            for (int r = 0; r <= 7; ++r) {
                if (is_horizontal_strip(l, m, r)) {
                    CHECK(contains(l, m));
                    CHECK(l.size() - m.size() == r);
                    // Column criterion: lambda'_i - mu'_i <= 1.
                    const Partition lc = l.conjugate(), mc = m.conjugate();
                    for (int i = 1; i <= lc.length(); ++i) {
                        CHECK(lc.part(static_cast<std::size_t>(i)) - mc.part(static_cast<std::size_t>(i)) <= 1);
                    }
                }
            }
        }
    }
}
