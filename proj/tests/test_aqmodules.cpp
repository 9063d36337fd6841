#include <gtest/gtest.h>

#include <random>

#include <quatheta/aqmodules.hpp>

#include "aq_table.hpp"
#include "common.hpp"

using namespace quatheta;
using namespace aqtab;

namespace {

const std::vector<Triple> g2_noncompact = {{1, -1, 0}, {-1, 1, 0}, {1, 0, -1}, {-1, 0, 1}, {-1, 2, -1}, {1, -2, 1}, {-1, -1, 2}, {1, 1, -2}};
const std::vector<Triple> pu_noncompact = {{1, -1, 0}, {-1, 1, 0}, {0, 1, -1}, {0, -1, 1}};

// fixed by mu - lambda: a single noncompact root for PU(2,1) Ia.1 and IIa.1
std::size_t weight_count(AqGroup g, const std::string& id) {
    if (g == AqGroup::G2) return id == "Ia.2" || id == "IIa.2" ? 3 : 4;
    return id == "Ia.1" || id == "IIa.1" ? 1 : 2;
}

Triple add(Triple a, const Triple& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

// every sum with up to `depth` copies of each generator
std::set<Triple> brute_cone(const Triple& apex, const std::vector<Triple>& gens, int depth) {
    std::set<Triple> out{apex};
    for (auto& g : gens) {
        std::set<Triple> next;
        for (auto t : out)
            for (int n = 0; n <= depth; ++n) {
                next.insert(t);
                t = add(t, g);
            }
        out = next;
    }
    return out;
}

oracle::V dbl(const Triple& t) { return {2 * t[0], 2 * t[1], 2 * t[2]}; }

std::set<oracle::V> g2_orbit(const Triple& t) {
    std::vector<oracle::V> S;
    for (auto& a : root_system("G2").simple_roots) S.push_back(tst::twice(a));
    return oracle::orbit(dbl(t), S);
}

}  // namespace

TEST(AqData, SpecExamples) {
    auto d = aq_data({AqGroup::G2, "I", {2, 1, -3}});
    EXPECT_EQ(d.inf_char, (Triple{4, 2, -6}));
    EXPECT_EQ(d.minimal_type_abc, (Triple{4, 3, -7}));
    EXPECT_EQ(d.minimal_type_xy, (XY{10, 4}));
    for (std::int64_t a = 1; a <= 4; ++a) {
        std::set<std::array<std::int64_t, 2>> got, want{{a, -2 * a - 1}, {a - 1, -2 * a - 1}, {a + 1, -2 * a - 1}};
        for (auto id : {"Ia.1", "Ia.2", "Ia.3"}) got.insert(aq_data({AqGroup::PU21, id, {a, a, -2 * a}}).u2_type);
        EXPECT_EQ(got, want);
        auto ib = aq_data({AqGroup::G2, "Ib", {2 * a, -a, -a}});
        EXPECT_EQ(ib.minimal_type_abc, (Triple{2 * a + 4, -a - 2, -a - 2}));
        EXPECT_EQ(ib.minimal_type_xy, (XY{0, 2 * a + 4}));
    }
}

TEST(AqData, ReproducesTables) {
    auto all = instantiations();
    EXPECT_GE(all.size(), 20u * 22u);
    for (auto& [g, r] : all) {
        auto d = aq_data({g, r.id, r.lambda});
        std::string tag = to_string(g) + " " + r.id + " " + std::to_string(r.lambda[0]) + "," + std::to_string(r.lambda[1]);
        EXPECT_EQ(d.inf_char, r.inf) << tag;
        EXPECT_EQ(d.minimal_type_abc, r.mu) << tag;
        EXPECT_EQ(d.minimal_type_xy, r.xy) << tag;
        if (g == AqGroup::PU21) EXPECT_EQ(d.u2_type, r.u2) << tag;
    }
}

TEST(AqData, TwoRhoIdentity) {
    std::mt19937_64 rng(5);
    for (auto g : {AqGroup::G2, AqGroup::PU21})
        for (auto& id : aq_case_ids())
            for (int i = 0; i < 50; ++i) {
                std::int64_t a = 1 + rng() % 15, b = 1 + rng() % 15;
                if (a == b) ++a;
                if (a < b) std::swap(a, b);
                Triple lam;
                if (g == AqGroup::G2) {
                    std::int64_t c = -a - b;
                    if (id == "I") lam = {a, b, c};
                    else if (id == "II") lam = {-c, -b, -a};
                    else if (id == "III") lam = {b, a, c};
                    else if (id == "Ib") lam = {2 * a, -a, -a};
                    else if (id == "IIb") lam = {0, a, -a};
                    else if (id[1] == 'a') lam = {a, a, -2 * a};
                    else lam = {a, 0, -a};
                } else {
                    std::int64_t c = -a - b;
                    if (id == "I") lam = {a, b, c};
                    else if (id == "II") lam = {a, c, b};
                    else if (id == "III") lam = {b, a, c};
                    else if (id == "Ib") lam = {a, -2 * a, a};
                    else if (id == "IIb") lam = {-a, 2 * a, -a};
                    else if (id[1] == 'a') lam = {a, a, -2 * a};
                    else lam = {2 * a, -a, -a};
                }
                auto d = aq_data({g, id, lam});
                Triple s = lam;
                for (auto& u : d.u_cap_p) s = add(s, u);
                EXPECT_EQ(s, d.minimal_type_abc) << to_string(g) << id;
                EXPECT_EQ(d.u_cap_p.size(), weight_count(g, id)) << to_string(g) << id;
            }
}

TEST(AqData, RegularWeightsArePositiveNoncompact) {
    for (auto [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 1}, {5, 2}, {7, 6}}) {
        for (auto& r : g2_rows(a, b)) {
            std::multiset<Triple> want, got;
            for (auto& x : g2_noncompact)
                if (dot(r.lambda, x) > 0) want.insert(x);
            auto d = aq_data({AqGroup::G2, r.id, r.lambda});
            got.insert(d.u_cap_p.begin(), d.u_cap_p.end());
            EXPECT_EQ(got, want) << r.id;
        }
        for (auto& r : pu_rows(a, 0, -a)) {
            std::multiset<Triple> want, got;
            for (auto& x : pu_noncompact)
                if (dot(r.lambda, x) > 0) want.insert(x);
            auto d = aq_data({AqGroup::PU21, r.id, r.lambda});
            got.insert(d.u_cap_p.begin(), d.u_cap_p.end());
            EXPECT_EQ(got, want) << r.id;
        }
    }
}

// Exactly one sign pattern on the zero-pairing roots gives each wall minimal type.
TEST(AqData, WallTablesUnique) {
    for (std::int64_t a = 1; a <= 6; ++a) {
        for (auto [g, rows] : {std::pair{AqGroup::G2, g2_wall_rows(a)}, std::pair{AqGroup::PU21, pu_wall_rows(a, -a)}})
            for (auto& r : rows) {
                auto d = aq_data({g, r.id, r.lambda});
                auto pats = wall_patterns(g, r.lambda, r.mu);
                ASSERT_EQ(pats.size(), 1u) << to_string(g) << r.id << a;
                std::multiset<Triple> p(pats[0].begin(), pats[0].end()), q(d.u_cap_p.begin(), d.u_cap_p.end());
                EXPECT_EQ(p, q);
            }
    }
}

TEST(AqData, RejectsBadLambda) {
    EXPECT_THROW(aq_data({AqGroup::G2, "I", {1, 2, -3}}), DomainError);
    EXPECT_THROW(aq_data({AqGroup::G2, "I", {2, 1, -2}}), DomainError);
    EXPECT_THROW(aq_data({AqGroup::G2, "Ia.1", {2, 1, -3}}), DomainError);
    EXPECT_THROW(aq_data({AqGroup::G2, "Ia.4", {1, 1, -2}}), DomainError);
    EXPECT_THROW(aq_data({AqGroup::PU21, "IIa.1", {-2, 1, 1}}), DomainError);
    EXPECT_THROW(aq_data({AqGroup::PU21, "V", {1, 0, -1}}), DomainError);
    EXPECT_THROW(parse_aq_group("E6"), DomainError);
}

TEST(Coordinates, RoundTrip) {
    for (std::int64_t a = -10; a <= 10; ++a)
        for (std::int64_t b = -10; b <= 10; ++b) {
            Triple t{a, b, -a - b};
            auto p = to_xy(t);
            EXPECT_EQ(p, (XY{a + 2 * b, a}));
            EXPECT_EQ(from_xy(p), t);
        }
}

TEST(Cone, Examples) {
    auto d = aq_data({AqGroup::G2, "I", {2, 1, -3}});
    EXPECT_TRUE(cone_contains(d, d.minimal_type_abc));
    EXPECT_TRUE(cone_contains(d, add(d.minimal_type_abc, {1, -1, 0})));
    EXPECT_TRUE(cone_contains_xy(d, d.minimal_type_xy));
    auto e = aq_data({AqGroup::PU21, "II", {3, -2, -1}});
    for (auto& u : e.u_cap_p) EXPECT_FALSE(cone_contains(e, e.minimal_type_abc - u));
    EXPECT_FALSE(cone_contains_xy(e, {e.minimal_type_xy[0] + 1, e.minimal_type_xy[1]}));
}

// brute-force enumeration of the semigroup inside a window
TEST(Cone, MatchesEnumeration) {
    std::vector<AqData> ds;
    for (auto& r : g2_rows(2, 1)) ds.push_back(aq_data({AqGroup::G2, r.id, r.lambda}));
    for (auto& r : g2_wall_rows(1)) ds.push_back(aq_data({AqGroup::G2, r.id, r.lambda}));
    for (auto& r : pu_rows(2, 0, -2)) ds.push_back(aq_data({AqGroup::PU21, r.id, r.lambda}));
    for (auto& r : pu_wall_rows(1, -1)) ds.push_back(aq_data({AqGroup::PU21, r.id, r.lambda}));
    const std::int64_t R = 4;
    for (auto& d : ds) {
        auto cone = brute_cone(d.minimal_type_abc, d.u_cap_p, 12);
        for (std::int64_t i = -R; i <= R; ++i)
            for (std::int64_t j = -R; j <= R; ++j) {
                Triple q = add(d.minimal_type_abc, {i, j, -i - j});
                EXPECT_EQ(cone_contains(d, q), cone.count(q) > 0) << to_string(d.c.group) << d.c.id << " " << i << "," << j;
            }
    }
}

TEST(Segments, AtOne) {
    auto s = ftau_restriction_segments(1);
    auto sorted = [](std::vector<XY> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    EXPECT_EQ(sorted(s[0]), (std::vector<XY>{{2, 0}, {4, 0}, {6, 0}, {8, 0}}));
    EXPECT_EQ(sorted(s[1]), (std::vector<XY>{{3, 1}, {5, 1}, {7, 1}}));
    EXPECT_EQ(sorted(s[2]), (std::vector<XY>{{4, 2}, {6, 2}}));
    EXPECT_THROW(ftau_restriction_segments(0), DomainError);
}

TEST(Segments, MaximaAndLengths) {
    for (std::int64_t a = 1; a <= 20; ++a) {
        auto s = ftau_restriction_segments(a);
        std::array<XY, 3> top{XY{3 * a + 5, a - 1}, XY{3 * a + 4, a}, XY{3 * a + 3, a + 1}};
        std::array<std::int64_t, 3> lo{a + 1, a + 2, a + 3};
        for (int i = 0; i < 3; ++i) {
            std::vector<XY> want;
            for (std::int64_t x = lo[i]; x <= top[i][0]; x += 2) want.push_back({x, top[i][1]});
            auto got = s[i];
            std::sort(got.begin(), got.end());
            EXPECT_EQ(got, want) << a << " " << i;
            EXPECT_EQ(static_cast<std::int64_t>(got.size()), a + 3 - i);
            EXPECT_EQ(*std::max_element(got.begin(), got.end()), top[i]);
        }
    }
}

TEST(ThetaUnitary, SpecExamples) {
    auto z = theta_unitary({3, 3}, WallRegime{2});
    EXPECT_TRUE(z.zero);
    EXPECT_FALSE(z.minimal_type.has_value());
    auto w = theta_unitary({2, -5}, WallRegime{2});
    EXPECT_FALSE(w.zero);
    EXPECT_TRUE(w.if_nonzero);
    EXPECT_EQ(w.minimal_type, (XY{10, 2}));
    auto r = theta_unitary({4, -5}, RegularRegime{3, 1, -4});
    EXPECT_TRUE(r.if_nonzero);
    EXPECT_EQ(r.minimal_type, (XY{8, 4}));
}

TEST(ThetaUnitary, WallBullets) {
    for (std::int64_t a = 1; a <= 20; ++a) {
        EXPECT_TRUE(theta_unitary({a + 1, a + 1}, WallRegime{a}).zero) << a;
        std::vector<std::pair<std::array<std::int64_t, 2>, XY>> cases = {
            {{a - 1, -2 * a - 1}, {3 * a + 5, a - 1}}, {{a, -2 * a - 1}, {3 * a + 4, a}}, {{a + 1, -2 * a - 1}, {3 * a + 3, a + 1}}};
        for (auto& [tau, want] : cases) {
            auto t = theta_unitary(tau, WallRegime{a});
            EXPECT_FALSE(t.zero);
            EXPECT_TRUE(t.if_nonzero);
            EXPECT_EQ(t.minimal_type, want) << a;
            int hits = 0;
            for (auto& d : g2_wall_candidates(a)) hits += d.minimal_type_xy == want;
            EXPECT_EQ(hits, 1);
        }
    }
}

TEST(ThetaUnitary, RegularBullets) {
    int n = 0;
    for (std::int64_t b = 1; b <= 6; ++b)
        for (std::int64_t a = b + 1; a <= b + 6; ++a) {
            std::int64_t c = -a - b;
            if (!(b > c)) continue;
            auto first = theta_unitary({a + 1, c - 1}, RegularRegime{a, b, c});
            EXPECT_TRUE(first.if_nonzero);
            EXPECT_EQ(first.minimal_type, (XY{3 - c + b, a + 1}));
            EXPECT_TRUE(theta_unitary({a + 1, b + 1}, RegularRegime{a, b, c}).zero);
            auto third = theta_unitary({b - 1, c - 1}, RegularRegime{a, b, c});
            EXPECT_TRUE(third.if_nonzero);
            EXPECT_EQ(third.minimal_type, (XY{5 + a - c, b - 1}));
            for (auto* t : {&first, &third}) {
                int hits = 0;
                for (auto& d : g2_regular_candidates(a, b, c)) hits += d.minimal_type_xy == *t->minimal_type;
                EXPECT_EQ(hits, 1);
            }
            ++n;
        }
    EXPECT_GT(n, 20);
}

TEST(ThetaUnitary, Errors) {
    EXPECT_THROW(theta_unitary({1, 1}, WallRegime{0}), DomainError);
    EXPECT_THROW(theta_unitary({5, 5}, WallRegime{2}), DomainError);
    EXPECT_THROW(theta_unitary({4, -5}, RegularRegime{4, 0, -4}), DomainError);
    EXPECT_THROW(theta_unitary({9, 9}, RegularRegime{3, 1, -4}), DomainError);
}

// G2-side candidates share the PU(2,1) infinitesimal character up to W(G2).
TEST(ThetaUnitary, InfCharMatch) {
    for (std::int64_t a = 1; a <= 20; ++a) {
        auto target = dbl({a + 1, a, -2 * a - 1});
        for (auto& d : g2_wall_candidates(a)) EXPECT_TRUE(g2_orbit(d.inf_char).count(target)) << a << d.c.id;
        for (auto id : {"Ia.1", "Ia.2", "Ia.3"}) EXPECT_EQ(aq_data({AqGroup::PU21, id, {a, a, -2 * a}}).inf_char, (Triple{a + 1, a, -2 * a - 1}));
    }
    for (std::int64_t b = 1; b <= 5; ++b)
        for (std::int64_t a = b + 1; a <= b + 5; ++a) {
            std::int64_t c = -a - b;
            auto target = dbl({a + 1, b, c - 1});
            for (auto& d : g2_regular_candidates(a, b, c)) EXPECT_TRUE(g2_orbit(d.inf_char).count(target)) << a << b << d.c.id;
        }
}
