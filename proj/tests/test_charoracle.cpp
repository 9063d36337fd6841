#include <gtest/gtest.h>

#include <quatheta/charoracle.hpp>

#include "common.hpp"

using namespace quatheta;
using tst::W;
using tst::W2;

namespace {

std::map<oracle::V, std::int64_t> doubled(const CharMultiset& c) {
    std::map<oracle::V, std::int64_t> out;
    for (auto& [w, k] : c) out[tst::twice(w)] = k;
    return out;
}

std::int64_t mass(const CharMultiset& c) {
    std::int64_t s = 0;
    for (auto& [w, k] : c) s += k;
    return s;
}

IsoDecomp iso(const std::string& g, std::initializer_list<std::pair<Weight, std::int64_t>> t) {
    IsoDecomp d{g, {}};
    for (auto& [w, k] : t) d.terms[w] += k;
    return d;
}

}  // namespace

TEST(WeylDim, Examples) {
    EXPECT_EQ(weyl_dim(root_system("A1"), W({3})), 4);
    EXPECT_EQ(weyl_dim(root_system("F4"), W({1, 0, 0, 0})), 26);
    EXPECT_EQ(weyl_dim(root_system("E7"), W2({0, 0, 0, 0, 0, 2, -1, 1})), 56);
    EXPECT_EQ(weyl_dim(root_system("E8"), W2({0, 0, 0, 0, 0, 0, 0, 0})), 1);
    EXPECT_EQ(weyl_dim(root_system("G2"), W({1, 0, -1})), 7);
    EXPECT_EQ(weyl_dim(root_system("B4"), W2({1, 1, 1, 1})), 16);
}

TEST(WeylDim, NonDominantRejected) { EXPECT_THROW(weyl_dim(root_system("B3"), W({0, 1, 0})), DomainError); }

TEST(CharWeights, SU2Adjoint) {
    auto c = char_weights({"A1", W({2})});
    CharMultiset want = {{W({2}), 1}, {W({0}), 1}, {W({-2}), 1}};
    EXPECT_EQ(c, want);
}

TEST(CharWeights, G2SevenDim) {
    auto c = char_weights({"G2", W({1, 0, -1})});
    EXPECT_EQ(c.size(), 7u);
    EXPECT_EQ(c.at(W({0, 0, 0})), 1);
    for (auto& p : root_system("G2").positive_roots) {
        if (dot4(p, p) != 8) continue;  // short roots have squared length 2
        EXPECT_EQ(c.at(p), 1);
        EXPECT_EQ(c.at(-p), 1);
    }
}

TEST(CharWeights, B4Spin) {
    auto c = char_weights({"B4", W2({1, 1, 1, 1})});
    EXPECT_EQ(c.size(), 16u);
    for (auto& [w, k] : c) {
        EXPECT_EQ(k, 1);
        for (auto& x : w.c) EXPECT_EQ(std::abs(x.twice), 1);
    }
}

// Semistandard tableaux count the GL(3) weights.
TEST(CharWeights, A2MatchesTableauCount) {
    for (std::array<int, 3> lam : {std::array<int, 3>{1, 0, 0}, {2, 1, 0}, {3, 1, 0}, {2, 2, 0}, {3, 2, 1}, {4, 2, 0}, {3, 3, 1}}) {
        auto c = char_weights({"A2", W({lam[0], lam[1], lam[2]})});
        EXPECT_EQ(doubled(c), oracle::gl3_weights(lam)) << lam[0] << lam[1] << lam[2];
    }
}

// Adjoint of Spin(7) as the exterior square of the vector.
TEST(CharWeights, B3ExteriorSquare) {
    std::vector<oracle::V> vec = {{2, 0, 0}, {-2, 0, 0}, {0, 2, 0}, {0, -2, 0}, {0, 0, 2}, {0, 0, -2}, {0, 0, 0}};
    std::map<oracle::V, std::int64_t> want;
    for (std::size_t i = 0; i < vec.size(); ++i)
        for (std::size_t j = i + 1; j < vec.size(); ++j) {
            oracle::V s = vec[i];
            for (int t = 0; t < 3; ++t) s[t] += vec[j][t];
            ++want[s];
        }
    EXPECT_EQ(doubled(char_weights({"B3", W({1, 1, 0})})), want);
    EXPECT_EQ(weyl_dim(root_system("B3"), W({1, 1, 0})), 21);
}

TEST(CharWeights, MassAndOracleReflectionSymmetry) {
    for (auto l : {"A2", "B3", "C2", "C3", "D4", "G2", "B4", "F4"}) {
        auto& R = root_system(l);
        std::vector<oracle::V> S;
        for (auto& a : R.simple_roots) S.push_back(tst::twice(a));
        std::vector<Weight> hws;
        oracle::V t(R.dim, 0);
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == R.dim) {
                Weight w = tst::undouble(t);
                if (is_dominant(R, w) && in_weight_lattice(R, w) && weyl_dim(R, w) <= 1500) hws.push_back(w);
                return;
            }
            for (std::int64_t v = -4; v <= 4; ++v) {
                t[i] = v;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
        ASSERT_FALSE(hws.empty()) << l;
        for (auto& hw : hws) {
            auto c = char_weights({l, hw});
            EXPECT_EQ(mass(c), weyl_dim(R, hw)) << l << to_string(hw);
            auto d = doubled(c);
            for (auto& [w, k] : d)
                for (auto& a : S) {
                    auto it = d.find(oracle::refl(w, a));
                    ASSERT_TRUE(it != d.end()) << l << to_string(hw);
                    EXPECT_EQ(it->second, k);
                }
        }
    }
}

TEST(CharWeights, CapExceededIsResourceError) {
    dim_cap_override() = 10;
    EXPECT_THROW(char_weights({"B3", W({2, 1, 0})}), ResourceError);
    dim_cap_override() = 0;
    EXPECT_NO_THROW(char_weights({"B3", W({2, 1, 0})}));
}

TEST(Tensor, SU2Examples) {
    EXPECT_EQ(tensor_decompose({"A1", W({1})}, {"A1", W({2})}), iso("A1", {{W({1}), 1}, {W({3}), 1}}));
    for (int m = 0; m <= 5; ++m) EXPECT_EQ(tensor_decompose({"A1", W({m})}, {"A1", W({0})}), iso("A1", {{W({m}), 1}}));
}

TEST(Tensor, ProductGroupMass36) {
    auto d = tensor_decompose({"A1xA1", W({2, 1})}, {"A1xA1", W({2, 1})});
    EXPECT_EQ(total_dim(d), 36);
    IsoDecomp want{"A1xA1", {}};
    for (int p : {0, 2, 4})
        for (int q : {0, 2}) want.terms[W({p, q})] = 1;
    EXPECT_EQ(d, want);
}

TEST(Tensor, Symmetric) {
    for (auto [l, x, y] : std::vector<std::tuple<std::string, Weight, Weight>>{
             {"C2", W({1, 0}), W({1, 1})}, {"G2", W({1, 0, -1}), W({1, 1, -2})}, {"B3", W2({1, 1, 1}), W({1, 0, 0})}}) {
        auto d = tensor_decompose({l, x}, {l, y});
        EXPECT_EQ(d, tensor_decompose({l, y}, {l, x}));
        auto& R = root_system(l);
        EXPECT_EQ(total_dim(d), weyl_dim(R, x) * weyl_dim(R, y));
    }
    // spin x spin of Spin(7) = 1 + 7 + 21 + 35
    auto s = tensor_decompose({"B3", W2({1, 1, 1})}, {"B3", W2({1, 1, 1})});
    EXPECT_EQ(s, iso("B3", {{W({0, 0, 0}), 1}, {W({1, 0, 0}), 1}, {W({1, 1, 0}), 1}, {W({1, 1, 1}), 1}}));
}

TEST(Restrict, Sp2ToSp1Sp1) {
    auto d = restrict({"C2", W({1, 0})}, make_embedding("sp", 2));
    EXPECT_EQ(d, iso("A1xA1", {{W({1, 0}), 1}, {W({0, 1}), 1}}));
}

TEST(Restrict, F4ToB4) {
    auto d = restrict({"F4", W({1, 0, 0, 0})}, make_embedding("f4-b4"));
    EXPECT_EQ(d, iso("B4", {{W({0, 0, 0, 0}), 1}, {W({1, 0, 0, 0}), 1}, {W2({1, 1, 1, 1}), 1}}));
}

TEST(Restrict, Spin5ToSpin3Spin2) {
    auto d = restrict({"B2", W2({1, 1})}, make_embedding("spin-odd", 2));
    EXPECT_EQ(d, iso("B1xT1", {{W2({1, 1}), 1}, {W2({1, -1}), 1}}));
}

TEST(Restrict, PreservesDimension) {
    const std::vector<std::pair<std::string, int>> embs = {{"sp", 2},       {"sp", 3},     {"spin-odd", 2}, {"spin-odd", 3},
                                                           {"spin-even", 3}, {"spin-even", 4}, {"gz-odd", 3}, {"gz-even", 3},
                                                           {"f4-b4", 0},    {"sp3-sp1", 3}};
    for (auto& [kind, n] : embs) {
        auto e = make_embedding(kind, n);
        auto& R = root_system(e.source);
        auto& T = root_system(e.target);
        oracle::V t(R.dim, 0);
        int count = 0;
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == R.dim) {
                Weight w = tst::undouble(t);
                if (!is_dominant(R, w) || !in_weight_lattice(R, w) || weyl_dim(R, w) > 2000) return;
                auto d = restrict({e.source, w}, e);
                std::int64_t s = 0;
                for (auto& [hw, k] : d.terms) s += k * weyl_dim(T, hw);
                EXPECT_EQ(s, weyl_dim(R, w)) << kind << " " << to_string(w);
                ++count;
                return;
            }
            for (std::int64_t v = -4; v <= 4; ++v) {
                t[i] = v;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
        EXPECT_GT(count, 3) << kind;
    }
}

TEST(Restrict, SourceMismatch) { EXPECT_THROW(restrict({"B3", W({1, 0, 0})}, make_embedding("sp", 3)), DomainError); }
