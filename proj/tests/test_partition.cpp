#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "singraph/partition.hpp"
#include "singraph/rational.hpp"

#include <map>
#include <set>

using namespace sg;

TEST_CASE("set partition basics") {
    auto p = SetPartition::from_blocks(5, {{0, 3}, {1, 2, 4}});
    CHECK(p.labels() == std::vector<int>{0, 1, 1, 0, 1});
    CHECK(p.block_count() == 2);
    CHECK(p.type() == std::vector<int>{3, 2});
    CHECK(p.restrict_to({4, 3, 0}).labels() == std::vector<int>{0, 1, 1});
    auto q = SetPartition::from_blocks(5, {{0, 1}, {2, 3, 4}});
    CHECK(p.meet(q).block_count() == 4);
    CHECK(SetPartition::from_labels({1, 1, 0}) == SetPartition::from_labels({0, 0, 1}));
    CHECK_THROWS_AS(SetPartition::from_blocks(3, {{0, 1}}), ValidationError);
    CHECK_THROWS_AS(SetPartition::from_blocks(3, {{0, 1}, {1, 2}}), ValidationError);
}

TEST_CASE("Bell numbers and stream order") {
    std::vector<unsigned long long> bell = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
    for (int n = 1; n <= 10; ++n) {
        CHECK(bell_number(n) == bell[static_cast<size_t>(n)]);
        SetPartitionStream s(n);
        unsigned long long count = 0;
        std::vector<int> prev;
        while (s.next()) {
            ++count;
            if (count == 1) CHECK(s.block_count() == 1);
            CHECK(prev < s.labels());
            prev = s.labels();
        }
        CHECK(count == bell[static_cast<size_t>(n)]);
    }
    unsigned long long via_range = 0;
    for (const SetPartition& p : set_partitions(6)) via_range += static_cast<unsigned long long>(p.size() == 6);
    CHECK(via_range == 203);
}

TEST_CASE("Mobius function sums to zero over the lattice") {
    // sum_{pi} mu(pi, 1) = 0 for n >= 2.
    for (int n = 2; n <= 8; ++n) {
        long long s = 0;
        for (const auto& p : set_partitions(n)) s += mobius(p);
        CHECK(s == 0);
    }
    CHECK(mobius_for_blocks(1) == 1);
    CHECK(mobius_for_blocks(4) == -6);
}

namespace {

// Oracle: hypertrees by brute force over sets of subsets of size >= 2.
auto hypertrees_bruteforce(int s) -> size_t {
    std::vector<int> subsets;
    for (int m = 1; m < (1 << s); ++m)
        if (__builtin_popcount(static_cast<unsigned>(m)) >= 2) subsets.push_back(m);
    size_t count = 0;
    size_t k = subsets.size();
    for (unsigned long long choose = 1; choose < (1ull << k); ++choose) {
        int excess = 0;
        for (size_t i = 0; i < k; ++i)
            if ((choose >> i) & 1) excess += __builtin_popcount(static_cast<unsigned>(subsets[i])) - 1;
        if (excess != s - 1) continue;
        int reach = 1;
        for (bool grew = true; grew;) {
            grew = false;
            for (size_t i = 0; i < k; ++i)
                if (((choose >> i) & 1) && (subsets[i] & reach) && (subsets[i] | reach) != reach) {
                    reach |= subsets[i];
                    grew = true;
                }
        }
        count += reach == (1 << s) - 1;
    }
    return count;
}

}  // namespace

TEST_CASE("hypertree enumeration") {
    for (int s = 2; s <= 4; ++s) CHECK(enumerate_hypertrees(s).size() == hypertrees_bruteforce(s));
    // Labelled hypertree counts 1, 4, 29, 311, 4447.
    CHECK(enumerate_hypertrees(5).size() == 311);
    CHECK(enumerate_hypertrees(6).size() == 4447);
    for (const auto& h : enumerate_hypertrees(5)) {
        CHECK(is_hypertree(h));
        CHECK(h.degree_sum() == 4);
    }
    Hypergraph h3(3, {{0, 1, 2}});
    CHECK(h3.to_string() == "{1,2,3}");
    CHECK(is_hypertree(h3));
    CHECK_FALSE(is_hypertree(Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}})));
    CHECK_FALSE(is_hypertree(Hypergraph(2, {{0, 0, 1}})));
}

TEST_CASE("induced hypergraph") {
    JointGround g({2, 2, 3});
    CHECK(g.total() == 7);
    CHECK(g.index(2, 1) == 5);
    // Block {(0,0),(1,0)} links graphs 1 and 2; block {(1,1),(2,0)} links 2 and 3.
    auto pi = SetPartition::from_blocks(7, {{0, 2}, {1}, {3, 4}, {5}, {6}});
    auto h = induced_hypergraph(pi, g.graph_of, 3);
    CHECK(h == Hypergraph(3, {{0, 1}, {1, 2}}));
    CHECK(is_hypertree(h));
}

TEST_CASE("hypertree partition stream agrees with filtering all partitions") {
    std::vector<std::vector<int>> size_sets = {{2, 2}, {2, 3}, {2, 2, 2}, {3, 2, 2}, {2, 2, 3}};
    for (const auto& sizes : size_sets) {
        JointGround g(sizes);
        int s = static_cast<int>(sizes.size());
        std::map<Hypergraph, std::set<SetPartition>> oracle;
        for (const auto& p : set_partitions(g.total())) {
            auto h = induced_hypergraph(p, g.graph_of, s);
            if (is_hypertree(h)) oracle[h].insert(p);
        }
        size_t trees_seen = 0;
        for (const auto& h : enumerate_hypertrees(s)) {
            auto got = hypertree_partitions(h, sizes);
            std::set<SetPartition> uniq(got.begin(), got.end());
            CHECK(uniq.size() == got.size());
            CHECK(uniq == oracle[h]);
            trees_seen += !got.empty();
        }
        size_t nonempty = 0;
        for (const auto& [h, ps] : oracle) nonempty += !ps.empty();
        CHECK(trees_seen == nonempty);
    }
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("1e-2") == Rational(1, 100));
    CHECK_THROWS_AS(parse_rational("x"), ValidationError);
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK(falling_factorial(5, 3) == 60);
    CHECK(binomial(6, 2) == 15);
}
