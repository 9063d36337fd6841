#include <gtest/gtest.h>

#include <random>

#include <quatheta/rootdata.hpp>

#include "common.hpp"

using namespace quatheta;
using tst::W;
using tst::W2;

namespace {

// Bourbaki simple roots, doubled, typed in independently of the library.
const std::map<std::string, std::vector<oracle::V>>& simple2() {
    static const std::map<std::string, std::vector<oracle::V>> m = {
        {"A2", {{2, -2, 0}, {0, 2, -2}}},
        {"B3", {{2, -2, 0}, {0, 2, -2}, {0, 0, 2}}},
        {"C3", {{2, -2, 0}, {0, 2, -2}, {0, 0, 4}}},
        {"D4", {{2, -2, 0, 0}, {0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 2, 2}}},
        {"G2", {{2, -2, 0}, {-2, 4, -2}}},
        {"F4", {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}}},
        {"E6",
         {{1, -1, -1, -1, -1, -1, -1, 1},
          {2, 2, 0, 0, 0, 0, 0, 0},
          {-2, 2, 0, 0, 0, 0, 0, 0},
          {0, -2, 2, 0, 0, 0, 0, 0},
          {0, 0, -2, 2, 0, 0, 0, 0},
          {0, 0, 0, -2, 2, 0, 0, 0}}},
    };
    return m;
}

}  // namespace

TEST(RootData, G2CountsAndWeylOrder) {
    auto& R = root_system("G2");
    EXPECT_EQ(R.positive_roots.size(), 6u);
    EXPECT_EQ(R.weyl_order, 12);
}

TEST(RootData, E6HighestRootExpansion) {
    auto& R = root_system("E6");
    auto c = simple_coefficients(R, highest_root(R));
    std::vector<Rational> want = {1, 2, 2, 3, 2, 1};
    EXPECT_EQ(c, want);
    EXPECT_EQ(highest_root(R), W2({1, 1, 1, 1, 1, -1, -1, 1}));
}

TEST(RootData, B3Rho) { EXPECT_EQ(root_system("B3").rho, W2({5, 3, 1})); }

TEST(RootData, PositiveRootCounts) {
    const std::map<std::string, std::size_t> n = {{"A1", 1}, {"A2", 3}, {"A5", 15}, {"B3", 9}, {"B4", 16}, {"C2", 4},  {"C3", 9},
                                                  {"D4", 12}, {"D6", 30}, {"G2", 6}, {"F4", 24}, {"E6", 36}, {"E7", 63}, {"E8", 120}};
    for (auto& [l, k] : n) EXPECT_EQ(root_system(l).positive_roots.size(), k) << l;
}

TEST(RootData, RhoIsHalfSumAndPositiveRootsSorted) {
    for (auto l : {"A1", "A2", "A5", "B3", "B4", "C2", "C3", "D4", "D6", "G2", "F4", "E6", "E7", "E8"}) {
        auto& R = root_system(l);
        Weight s(R.dim);
        for (auto& p : R.positive_roots) s += p;
        EXPECT_EQ(2 * R.rho, s) << l;
        EXPECT_TRUE(std::is_sorted(R.positive_roots.begin(), R.positive_roots.end())) << l;
        for (auto& p : R.positive_roots)
            for (auto& q : simple_coefficients(R, p)) {
                EXPECT_EQ(q.denominator(), 1) << l;
                EXPECT_GE(q.numerator(), 0) << l;
            }
    }
}

TEST(RootData, SimpleRootsMatchBourbaki) {
    for (auto& [l, S] : simple2()) {
        auto& R = root_system(l);
        ASSERT_EQ(R.simple_roots.size(), S.size()) << l;
        for (std::size_t i = 0; i < S.size(); ++i) EXPECT_EQ(tst::twice(R.simple_roots[i]), S[i]) << l << " " << i;
    }
}

// rho pairs to 1 with every simple coroot, and its orbit is regular of size |W|.
TEST(RootData, RhoOrbitHasWeylOrder) {
    for (auto& [l, S] : simple2()) {
        auto& R = root_system(l);
        auto r = tst::twice(R.rho);
        for (auto& a : S) EXPECT_EQ(2 * oracle::ip(r, a), oracle::ip(a, a)) << l;
        EXPECT_EQ(static_cast<std::int64_t>(oracle::orbit(r, S).size()), R.weyl_order) << l;
    }
}

TEST(RootData, DominantRepresentativeExamples) {
    auto& B3 = root_system("B3");
    std::int64_t a = 2, b = 1;
    Weight w = W2({1 - a - b, -1 - a - b, a - b + 1});
    EXPECT_EQ(dominant_representative(w, B3), W({2, 1, 1}));
    EXPECT_EQ(dominant_representative(W({0, -2, 1}), B3), W({2, 1, 0}));
    for (auto l : {"B3", "G2", "F4", "D4", "E6"}) {
        auto& R = root_system(l);
        EXPECT_EQ(dominant_representative(R.rho, R), R.rho) << l;
    }
}

TEST(RootData, DominantRepresentativeAgreesWithOrbitEnumeration) {
    std::mt19937_64 rng(7);
    for (auto& [l, S] : simple2()) {
        if (l == "E6") continue;
        auto& R = root_system(l);
        for (int i = 0; i < 60; ++i) {
            oracle::V v(R.dim);
            bool half = (l[0] == 'B' || l[0] == 'D' || l[0] == 'F') && rng() % 2;
            for (auto& x : v) x = 2 * (static_cast<std::int64_t>(rng() % 11) - 5) + (half ? 1 : 0);
            if (l == "A2" || l == "G2") v.back() = -(v[0] + v[1]);
            auto want = oracle::orbit_dominant(v, S);
            EXPECT_EQ(tst::twice(dominant_representative(tst::undouble(v), R)), want) << l;
            if (l == "B3") EXPECT_EQ(oracle::b3_signed_perm_dominant(v), want);
        }
    }
}

TEST(RootData, WeylOrbitMatchesOracle) {
    auto& R = root_system("F4");
    oracle::V v{2, 0, 0, 0};
    auto s = oracle::orbit(v, simple2().at("F4"));
    auto mine = weyl_orbit(R, tst::undouble(v));
    EXPECT_EQ(mine.size(), s.size());
    EXPECT_EQ(mine.size(), 24u);
}

TEST(RootData, LatticeMembership) {
    EXPECT_TRUE(in_weight_lattice(root_system("G2"), W({1, 0, -1})));
    EXPECT_FALSE(in_weight_lattice(root_system("G2"), W({1, 1, -1})));
    EXPECT_TRUE(in_weight_lattice(root_system("B3"), W2({1, 1, 1})));
    EXPECT_FALSE(in_weight_lattice(root_system("B3"), W2({2, 1, 1})));
    EXPECT_FALSE(in_weight_lattice(root_system("C3"), W2({1, 1, 1})));
}

TEST(RootData, UnsupportedLabel) {
    EXPECT_THROW(root_system("H3"), DomainError);
    EXPECT_THROW(root_system("Q7"), DomainError);
}

TEST(Quaternionic, TableRows) {
    auto s43 = quaternionic_structure("Spin(4,3)");
    EXPECT_EQ(s43.m_system, "A1xA1");
    EXPECT_EQ(s43.vm_hw, W({1, 2}));
    EXPECT_EQ(s43.vm_dim, 6);
    EXPECT_EQ(s43.g2_p, (std::vector<int>{3, 1}));
    auto s44 = quaternionic_structure("Spin(4,4)");
    EXPECT_EQ(s44.m_system, "A1xA1xA1");
    EXPECT_EQ(s44.vm_hw, W({1, 1, 1}));
    EXPECT_EQ(s44.vm_dim, 8);
    auto e8 = quaternionic_structure("E8_4");
    EXPECT_EQ(e8.m_system, "E7");
    EXPECT_EQ(e8.vm_dim, 56);
    const std::map<std::string, std::int64_t> dims = {{"E6_4", 20}, {"E7_4", 32}, {"F4_4", 14}, {"G2_2", 4}};
    for (auto& [g, d] : dims) EXPECT_EQ(quaternionic_structure(g).vm_dim, d) << g;
    EXPECT_THROW(quaternionic_structure("SO(5,5)"), DomainError);
}

TEST(Quaternionic, Alpha0IsLowestRoot) {
    for (auto g : {"Spin(4,3)", "Spin(4,4)", "E6_4", "E7_4", "E8_4", "F4_4", "G2_2"}) {
        auto q = quaternionic_structure(g);
        auto& R = root_system(q.g_system);
        Weight mx = R.positive_roots.front();
        for (auto& p : R.positive_roots)
            if (dot4(p, R.rho) > dot4(mx, R.rho)) mx = p;
        EXPECT_EQ(q.alpha0, -mx) << g;
    }
}

TEST(HalfIntegers, ParseAndPrint) {
    EXPECT_EQ(parse_halfint("3/2"), tst::h2(3));
    EXPECT_EQ(parse_halfint("-1/2"), tst::h2(-1));
    EXPECT_EQ(parse_halfint("4"), HalfInt(4));
    EXPECT_EQ(to_string(tst::h2(5)), "5/2");
    EXPECT_THROW(parse_halfint("1/3"), DomainError);
    EXPECT_THROW(parse_halfint("x"), DomainError);
    EXPECT_EQ(tst::h2(1) + tst::h2(1), HalfInt(1));
}
