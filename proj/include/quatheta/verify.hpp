#pragma once

#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "aqmodules.hpp"

namespace quatheta::verify {

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct Report {
    std::vector<std::pair<std::string, Check>> checks;

    bool ok() const {
        for (auto& [s, c] : checks)
            if (!c.ok) return false;
        return true;
    }
    std::string text() const {
        std::ostringstream o;
        std::size_t pass = 0;
        for (auto& [s, c] : checks) {
            o << (c.ok ? "PASS " : "FAIL ") << s << "/" << c.name;
            if (!c.detail.empty()) o << ": " << c.detail;
            o << "\n";
            pass += c.ok;
        }
        o << pass << "/" << checks.size() << " properties passed\n";
        return o.str();
    }
};

struct Options {
    std::int64_t max_entry = 3;
    std::int64_t level = 16;
};

namespace detail {

// Keeps the first failure; counts cases otherwise.
class Acc {
public:
    explicit Acc(std::string name) : c_{std::move(name), true, {}} {}
    void expect(bool ok, const std::string& what) {
        ++n_;
        if (!ok && c_.ok) {
            c_.ok = false;
            c_.detail = what;
        }
    }
    // exceptions count as failures
    template <class F>
    void run(const std::string& what, F&& f) {
        try {
            expect(f(), what);
        } catch (const std::exception& e) {
            expect(false, what + " threw " + e.what());
        }
    }
    Check done() {
        if (c_.ok) c_.detail = std::to_string(n_) + " cases";
        return c_;
    }

private:
    Check c_;
    std::size_t n_ = 0;
};

inline std::vector<Weight> dominant_box(const std::string& label, std::int64_t max_entry, bool integral_only = false) {
    const RootSystem& R = root_system(label);
    std::vector<Weight> out;
    std::vector<std::int64_t> t(R.dim);
    for (int par : {0, 1}) {
        if (par && integral_only) break;
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == R.dim) {
                Weight w = Weight::from_twice(t);
                if (is_dominant(R, w)) out.push_back(w);
                return;
            }
            for (std::int64_t v = -2 * max_entry; v <= 2 * max_entry; ++v)
                if ((v % 2 + 2) % 2 == par) {
                    t[i] = v;
                    rec(i + 1);
                }
        };
        rec(0);
    }
    return out;
}

template <class V, class F>
std::map<Weight, std::int64_t> flatten(const std::map<Weight, V>& closed, F&& coord) {
    std::map<Weight, std::int64_t> out;
    for (auto& [mu, v] : closed)
        for (auto& [t, k] : v) out[mu.concat(Weight{coord(t)})] += k;
    return out;
}

inline std::map<Weight, std::int64_t> as_map(const IsoDecomp& d) { return {d.terms.begin(), d.terms.end()}; }

inline std::string tstr(const Triple& t) {
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

inline std::string xystr(const XY& p) { return "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")"; }

}  // namespace detail

using Suite = std::function<std::vector<Check>(const Options&)>;

inline std::vector<Check> suite_root_data(const Options&) {
    using detail::Acc;
    std::vector<Check> out;
    {
        Acc a("e6-highest-root-expansion");
        auto& E6 = root_system("E6");
        auto c = simple_coefficients(E6, highest_root(E6));
        std::vector<Rational> want = {1, 2, 2, 3, 2, 1};
        a.expect(c == want, "coefficients differ");
        out.push_back(a.done());
    }
    const std::vector<std::pair<std::string, std::size_t>> counts = {{"A1", 1},  {"A2", 3},  {"A5", 15}, {"B3", 9},  {"B4", 16},
                                                                     {"C2", 4},  {"C3", 9},  {"D4", 12}, {"D6", 30}, {"G2", 6},
                                                                     {"F4", 24}, {"E6", 36}, {"E7", 63}, {"E8", 120}};
    {
        Acc a("positive-root-counts");
        for (auto& [l, n] : counts) a.expect(root_system(l).positive_roots.size() == n, l);
        out.push_back(a.done());
    }
    {
        Acc a("rho-is-half-sum");
        for (auto& [l, n] : counts) {
            auto& R = root_system(l);
            Weight s(R.dim);
            for (auto& p : R.positive_roots) s = s + p;
            a.expect(2 * R.rho == s, l);
        }
        out.push_back(a.done());
    }
    {
        Acc a("positive-roots-nonnegative-integral");
        for (auto& [l, n] : counts) {
            auto& R = root_system(l);
            for (auto& p : R.positive_roots) {
                bool ok = true;
                for (auto& q : simple_coefficients(R, p)) ok = ok && q.denominator() == 1 && q.numerator() >= 0;
                a.expect(ok, l + " " + to_string(p));
            }
        }
        out.push_back(a.done());
    }
    {
        Acc a("quaternionic-vm-dims");
        const std::vector<std::pair<std::string, std::int64_t>> dims = {{"Spin(4,3)", 6}, {"Spin(4,4)", 8}, {"E6_4", 20}, {"E7_4", 32},
                                                                        {"E8_4", 56},     {"F4_4", 14},     {"G2_2", 4}};
        for (auto& [g, d] : dims) a.run(g, [&] { return quaternionic_structure(g).vm_dim == d; });
        out.push_back(a.done());
    }
    {
        Acc a("dominant-representative-orbit-constant");
        std::mt19937_64 rng(20240601);
        for (auto l : {"A2", "B3", "B4", "C2", "C3", "D4", "G2", "F4", "A5"}) {
            auto& R = root_system(l);
            for (int i = 0; i < 100; ++i) {
                Weight w(R.dim);
                bool half = l[0] == 'B' || l[0] == 'D' || l[0] == 'F' ? rng() % 2 : 0;
                for (auto& x : w.c) x = HalfInt::from_twice(2 * (static_cast<std::int64_t>(rng() % 9) - 4) + (half ? 1 : 0));
                if (l[0] == 'A' || l[0] == 'G') {
                    // sum-zero hyperplane
                    HalfInt s;
                    for (std::size_t j = 0; j + 1 < w.size(); ++j) s += w[j];
                    w.c.back() = -s;
                }
                Weight d = dominant_representative(w, R);
                bool ok = is_dominant(R, d) && dominant_representative(d, R) == d;
                Weight v = w;
                for (int j = 0; j < 10; ++j) {
                    v = reflect(v, R.positive_roots[rng() % R.positive_roots.size()]);
                    ok = ok && dominant_representative(v, R) == d;
                }
                a.expect(ok, std::string(l) + " " + to_string(w));
            }
        }
        out.push_back(a.done());
    }
    return out;
}

inline std::vector<Check> suite_oracle(const Options&) {
    using detail::Acc;
    std::vector<Check> out;
    Acc mass("char-mass-equals-dim"), sym("char-weyl-symmetric"), res("restrict-preserves-dim"), ten("tensor-symmetric");
    for (auto l : {"A2", "B3", "C2", "C3", "D4", "G2", "B4"}) {
        auto& R = root_system(l);
        for (auto& w : detail::dominant_box(l, 2)) {
            if (!in_weight_lattice(R, w) || weyl_dim(R, w) > 2000) continue;
            auto ch = char_weights({l, w});
            std::int64_t m = 0;
            for (auto& [x, k] : ch) m += k;
            mass.expect(m == weyl_dim(R, w), std::string(l) + " " + to_string(w));
            bool ok = true;
            for (auto& [x, k] : ch)
                for (auto& s : R.simple_roots) {
                    auto it = ch.find(reflect(x, s));
                    ok = ok && it != ch.end() && it->second == k;
                }
            sym.expect(ok, std::string(l) + " " + to_string(w));
        }
    }
    const std::vector<std::pair<std::string, int>> embs = {{"sp", 2}, {"sp", 3}, {"spin-odd", 2}, {"spin-odd", 3}, {"spin-even", 3},
                                                           {"spin-even", 4}, {"gz-odd", 4}, {"gz-even", 4}, {"f4-b4", 0}, {"sp3-sp1", 3}};
    for (auto& [kind, n] : embs) {
        auto e = make_embedding(kind, n);
        auto& R = root_system(e.source);
        for (auto& w : detail::dominant_box(e.source, 2)) {
            if (!in_weight_lattice(R, w) || weyl_dim(R, w) > 2000) continue;
            res.run(kind + " " + to_string(w), [&] { return total_dim(restrict({e.source, w}, e)) == weyl_dim(R, w); });
        }
    }
    for (auto l : {"A2", "C2", "G2", "B3"}) {
        auto ws = detail::dominant_box(l, 1);
        for (auto& x : ws)
            for (auto& y : ws) {
                auto& R = root_system(l);
                if (!in_weight_lattice(R, x) || !in_weight_lattice(R, y) || weyl_dim(R, x) * weyl_dim(R, y) > 4000) continue;
                auto d = tensor_decompose({l, x}, {l, y});
                ten.expect(d == tensor_decompose({l, y}, {l, x}) && total_dim(d) == weyl_dim(R, x) * weyl_dim(R, y),
                           std::string(l) + " " + to_string(x) + "x" + to_string(y));
            }
    }
    for (auto* a : {&mass, &sym, &res, &ten}) out.push_back(a->done());
    return out;
}

inline std::vector<Check> suite_appendix_branching(const Options& o) {
    using detail::Acc;
    std::vector<Check> out;
    for (int n : {2, 3}) {
        Acc a("sp" + std::to_string(n) + "-closed-form-equals-oracle");
        auto e = make_embedding("sp", n);
        for (auto& l : detail::dominant_box(e.source, o.max_entry, true))
            a.run(to_string(l), [&] {
                return detail::flatten(branch_sp(l), [](std::int64_t m) { return HalfInt(m); }) == detail::as_map(restrict({e.source, l}, e));
            });
        out.push_back(a.done());
    }
    for (int n : {2, 3}) {
        Acc a("spin" + std::to_string(2 * n + 1) + "-closed-form-equals-oracle");
        auto e = make_embedding("spin-odd", n);
        for (auto& l : detail::dominant_box(e.source, o.max_entry)) {
            if (weyl_dim(root_system(e.source), l) > dim_cap()) continue;
            a.run(to_string(l), [&] {
                return detail::flatten(branch_spin_odd(l), [](HalfInt t) { return t; }) == detail::as_map(restrict({e.source, l}, e));
            });
        }
        out.push_back(a.done());
    }
    for (int n : {3, 4}) {
        Acc a("spin" + std::to_string(2 * n) + "-closed-form-equals-oracle");
        auto e = make_embedding("spin-even", n);
        for (auto& l : detail::dominant_box(e.source, o.max_entry)) {
            if (weyl_dim(root_system(e.source), l) > dim_cap()) continue;
            a.run(to_string(l), [&] {
                return detail::flatten(branch_spin_even(l), [](HalfInt t) { return t; }) == detail::as_map(restrict({e.source, l}, e));
            });
        }
        out.push_back(a.done());
    }
    {
        Acc a("spin2-modules-symmetric");
        for (auto& l : detail::dominant_box("B3", o.max_entry))
            for (auto& [mu, m] : branch_spin_odd(l))
                for (auto& [t, k] : m) a.expect(m.count(-t) && m.at(-t) == k, to_string(l));
        // for D-type the symmetry pairs mu with its last-coordinate flip
        for (auto& l : detail::dominant_box("D4", o.max_entry)) {
            auto br = branch_spin_even(l);
            for (auto& [mu, m] : br) {
                Weight f = mu;
                f.c.back() = -f.c.back();
                auto it = br.find(f);
                bool ok = it != br.end();
                for (auto& [t, k] : m) ok = ok && it->second.count(-t) && it->second.at(-t) == k;
                a.expect(ok, to_string(l) + " " + to_string(mu));
            }
        }
        out.push_back(a.done());
    }
    {
        Acc a("gz-chain-equals-iterated-oracle");
        for (auto& l : detail::dominant_box("B3", std::min<std::int64_t>(o.max_entry, 2))) {
            a.run(to_string(l), [&] {
                auto d = restrict({"B3", l}, make_embedding("gz-odd", 3));
                std::map<Weight, std::int64_t> want;
                for (auto& [mu, k] : d.terms)
                    for (auto& [nu, j] : restrict({"D3", mu}, make_embedding("gz-even", 3)).terms) want[nu] += k * j;
                return gz_chain(7, l, 5) == want;
            });
        }
        out.push_back(a.done());
    }
    return out;
}

inline std::vector<Check> suite_f4_spin9(const Options&) {
    using detail::Acc;
    Acc a("closed-form-equals-oracle"), w3("independent-of-w3");
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}}) {
        auto t = f4_to_spin9_table(p, q);
        std::map<Weight, std::int64_t> mine(t.begin(), t.end());
        a.run(std::to_string(p) + "," + std::to_string(q),
              [&] { return mine == detail::as_map(restrict({"F4", f4_omega(p, q)}, make_embedding("f4-b4"))); });
        for (auto& w : detail::dominant_box("B4", p + q)) {
            Weight v = w;
            for (HalfInt x = w[3]; x <= w[1]; x += HalfInt(1)) {
                v.c[2] = x;
                w3.expect(f4_to_spin9(p, q, v) == f4_to_spin9(p, q, w), to_string(w));
            }
        }
    }
    Acc d26("omega10-dimension-26");
    std::int64_t s = 0;
    for (auto& [w, k] : f4_to_spin9_table(1, 0)) s += k * weyl_dim(root_system("B4"), w);
    d26.expect(s == 26 && f4_to_spin9_table(1, 0).size() == 3, "sum " + std::to_string(s));
    return {a.done(), w3.done(), d26.done()};
}

inline std::vector<Check> suite_e7_d6(const Options&) {
    detail::Acc a("dimension-sum-equals-weyl-dim");
    auto& E7 = root_system("E7");
    auto& D6 = root_system("D6");
    for (std::int64_t k = 0; k <= 3; ++k) {
        std::int64_t s = 0;
        for (auto& [m, w] : restrict_e7_to_su2_spin12(k)) s += (m + 1) * weyl_dim(D6, w);
        Weight om = Weight::from_twice({0, 0, 0, 0, 0, 2 * k, -k, k});
        a.expect(s == weyl_dim(E7, om), "k=" + std::to_string(k));
    }
    return {a.done()};
}

inline std::vector<Check> suite_ktypes(const Options&) {
    using detail::Acc;
    Acc law("level-dimension-law"), adm("su0-admissible"), e6("e6-vmin-contains-kkk"), e8("e8-vmin-minimal-type");
    const std::vector<QuatModule> mods = {{"Spin(4,3)", {Weight{HalfInt(0)}, Weight{HalfInt(1)}}, 7, Quotient::A},
                                          {"Spin(4,3)", {Weight{HalfInt(2)}, Weight{HalfInt(0)}}, 4, Quotient::A},
                                          {"Spin(4,4)", {Weight{HalfInt(1)}, Weight{HalfInt(0)}, Weight{HalfInt(2)}}, 5, Quotient::A},
                                          {"G2_2", {Weight{HalfInt(1)}}, 3, Quotient::A},
                                          {"F4_4", {Weight{0, 0, 0}}, 3, Quotient::A}};
    for (auto& m : mods) {
        auto q = quaternionic_structure(m.G);
        auto L = ktypes(m, 3);
        std::int64_t wdim = weyl_dim({q.m_system, concat_all(m.wm)});
        std::set<std::int64_t> seen;
        for (auto& lv : L.levels) {
            std::int64_t skd = 1;
            for (std::int64_t i = 1; i <= lv.k; ++i) skd = skd * (q.vm_dim + i - 1) / i;
            std::int64_t dim = 0;
            for (auto& [hw, k] : lv.tau.terms) dim += k * weyl_dim({q.m_system, hw});
            law.expect((lv.su0 + 1) * dim == (m.s + lv.k - 1) * skd * wdim, m.G + " k=" + std::to_string(lv.k));
            adm.expect(seen.insert(lv.su0).second && lv.su0 == m.s + lv.k - 2, m.G);
        }
    }
    auto L = ktypes({"E6_4", {Weight(6)}, 4, Quotient::A}, 3);
    for (auto& lv : L.levels) {
        Weight w = Weight::from_ints({lv.k, lv.k, lv.k, 0, 0, 0});
        e6.expect(lv.tau.mult(w) == 1 && lv.su0 == lv.k + 2, "k=" + std::to_string(lv.k));
    }
    auto mt = minimal_type({"E8_4", {Weight(8)}, 10, Quotient::sigma});
    e8.expect(mt.first == 8, "su0");
    return {law.done(), adm.done(), e6.done(), e8.done()};
}

inline std::vector<Check> suite_infchar(const Options&) {
    using detail::Acc;
    Acc b3("general-formula-equals-b3-closed-form"), u2("e6-u2"), e7("e7"), s9("e8-spin9"), s8("e8-spin8"), f4("f4");
    for (std::int64_t m = 0; m <= 6; ++m)
        for (std::int64_t n = 0; n <= 6; ++n)
            for (std::int64_t s = 2; s <= 12; ++s)
                b3.run("", [&] {
                    return inf_char({"Spin(4,3)", {Weight{HalfInt(m)}, Weight{HalfInt(n)}}, s, Quotient::A}) ==
                           canonical_infchar("B3", inf_char_b3_formula(m, n, s));
                });
    auto check = [](Acc& acc, ThetaTable t, std::vector<HalfInt> p, std::optional<char> sign = std::nullopt) {
        std::string what;
        for (auto x : p) what += to_string(x) + " ";
        acc.run(what, [&] {
            auto r = infchar_crosscheck(t, p, sign);
            return !r.applicable || r.ok;
        });
    };
    for (std::int64_t a = -6; a <= 6; ++a)
        for (std::int64_t b = -6; b <= a; ++b) {
            if (a + b == 0) {
                check(u2, ThetaTable::e6_u2, {a, b}, '+');
                check(u2, ThetaTable::e6_u2, {a, b}, '-');
            } else {
                check(u2, ThetaTable::e6_u2, {a, b});
            }
        }
    for (std::int64_t a = 0; a <= 6; ++a)
        for (std::int64_t b = 0; b <= a; ++b)
            for (std::int64_t c = 0; c <= 6; ++c) {
                if (c > a - b && c <= a + b && (a + b - c) % 2) continue;
                check(e7, ThetaTable::e7, {a, b, c});
            }
    for (auto& w : detail::dominant_box("B4", 6)) check(s9, ThetaTable::e8_spin9, w.c);
    for (auto& w : detail::dominant_box("D4", 6)) check(s8, ThetaTable::e8_spin8, w.c);
    for (std::int64_t n = 0; n <= 6; ++n) {
        if (n == 0) {
            check(f4, ThetaTable::f4, {0}, '+');
            check(f4, ThetaTable::f4, {0}, '-');
        } else {
            check(f4, ThetaTable::f4, {n});
        }
    }
    return {b3.done(), u2.done(), e7.done(), s9.done(), s8.done(), f4.done()};
}

inline std::vector<Check> suite_theta_tables(const Options&) {
    using detail::Acc;
    Acc inv("involutions"), valid("outputs-valid"), ex("tabulated-values");
    for (std::int64_t a = -6; a <= 6; ++a)
        for (std::int64_t b = -6; b <= a; ++b) {
            if (a + b == 0) continue;
            inv.expect(theta_e6_u2(a, b) == theta_e6_u2(-b, -a), "u2 " + std::to_string(a) + "," + std::to_string(b));
        }
    for (std::int64_t a = -5; a <= 5; ++a)
        for (std::int64_t b = -5; b <= 5; ++b) {
            std::int64_t c = -a - b;
            if (!a && !b) continue;
            inv.expect(theta_e6_torus(a, b, c) == theta_e6_torus(-a, -b, -c), "torus " + detail::tstr({a, b, c}));
            auto t = theta_e6_torus(a, b, c);
            valid.run("torus", [&] {
                for (auto& [m, k] : t.terms) validate(m);
                return true;
            });
        }
    for (std::int64_t a = 0; a <= 6; ++a)
        for (std::int64_t b = 0; b <= a; ++b)
            for (std::int64_t c = 0; c <= 8; ++c) {
                if (c > a - b && c <= a + b && (a + b - c) % 2) continue;
                valid.run("e7", [&] {
                    for (auto& [m, k] : theta_e7(a, b, c).terms) validate(m);
                    return true;
                });
            }
    auto b3 = [](std::int64_t m, std::int64_t n, std::int64_t s) {
        return QuatModule{"Spin(4,3)", {Weight{HalfInt(m)}, Weight{HalfInt(n)}}, s, Quotient::sigma};
    };
    auto one = [](const ThetaLift& t, const QuatModule& m, std::int64_t k = 1) {
        return !t.zero && t.terms.size() == 1 && t.terms[0].first == m && t.terms[0].second == k;
    };
    ex.expect(one(theta_e6_u2(2, 1), b3(0, 1, 7)), "u2 (2,1)");
    ex.expect(one(theta_e6_u2(3, -1), b3(1, 2, 7)), "u2 (3,-1)");
    ex.expect(theta_e6_u2(0, 0, '-').zero, "u2 (0,0)-");
    ex.expect(one(theta_e7(2, 1, 1), b3(1, 1, 8)), "e7 (2,1;1)");
    ex.expect(one(theta_e7(2, 1, 3), b3(0, 1, 9)), "e7 (2,1;3)");
    ex.expect(theta_e7(1, 0, 2).zero, "e7 (1,0;2)");
    ex.expect(one(theta_f4(4), b3(2, 0, 5)), "f4 4");
    ex.expect(one(theta_f4(3), b3(1, 1, 5)), "f4 3");
    ex.expect(one(theta_f4(0, '-'), b3(0, 0, 5)), "f4 0-");
    return {inv.done(), valid.done(), ex.done()};
}

inline std::vector<Check> suite_seesaw(const Options& o) {
    detail::Acc a("spin9-spin8-truncation-identity");
    const std::vector<std::pair<HalfInt, HalfInt>> bd = {{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2},
                                                         {HalfInt::from_twice(1), HalfInt::from_twice(1)},
                                                         {HalfInt::from_twice(3), HalfInt::from_twice(1)}};
    for (auto [b, d] : bd) a.run("(" + to_string(b) + "," + to_string(d) + ")", [&] { return seesaw_truncation_check(b, d, o.level).ok; });
    return {a.done()};
}

inline std::vector<Check> suite_surjectivity(const Options&) {
    detail::Acc a("rank-full-iff-n-ge-2");
    for (std::int64_t n = 0; n <= 30; ++n) {
        auto r = check_lemma_surjectivity(n);
        bool want = n >= 2;
        a.expect(r.surjective == want && (want ? r.rank == 3 * (n + 2) : r.rank < 3 * (n + 2)) && r.codomain_dim == 3 * (n + 2),
                 "n=" + std::to_string(n));
    }
    return {a.done()};
}

inline std::vector<Check> suite_filtration(const Options&) {
    using detail::Acc;
    Acc a("graded-pieces-match-display"), c("single-factor-and-two-term-cases");
    auto d4 = [](std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
        return QuatModule{"Spin(4,4)", {Weight{HalfInt(p)}, Weight{HalfInt(q)}, Weight{HalfInt(r)}}, s, Quotient::A};
    };
    auto b3 = [](std::int64_t m, std::int64_t n, std::int64_t s) {
        return QuatModule{"Spin(4,3)", {Weight{HalfInt(m)}, Weight{HalfInt(n)}}, s, Quotient::A};
    };
    for (std::int64_t b = 0; b <= 3; ++b)
        for (std::int64_t x = b; x <= b + 3; ++x) {
            auto pieces = restrict_filtration(d4(0, b, x, 4 + x + b), 3);
            for (std::int64_t m = 0; m <= 3; ++m) {
                std::multiset<QuatModule> got, want;
                for (auto& p : pieces)
                    if (p.level == m) got.insert(p.module);
                for (std::int64_t j = 0; j <= b; ++j) want.insert(b3(m, x - b + 2 * j, 4 + x + b + m));
                a.expect(got == want, "a=" + std::to_string(x) + " b=" + std::to_string(b) + " m=" + std::to_string(m));
            }
        }
    for (std::int64_t cc = 0; cc <= 3; ++cc) {
        auto pieces = restrict_filtration(d4(0, 0, cc, 4 + cc), 3);
        for (auto& p : pieces) c.expect(p.module == b3(p.level, cc, 4 + cc + p.level), "c=" + std::to_string(cc));
    }
    auto two = restrict_filtration(d4(1, 0, 0, 4), 3);
    for (std::int64_t k = 0; k <= 3; ++k) {
        std::multiset<QuatModule> got, want;
        for (auto& p : two)
            if (p.level == k) got.insert(p.module);
        want.insert(b3(k + 1, 0, 4 + k));
        if (k >= 1) want.insert(b3(k - 1, 0, 4 + k));
        c.expect(got == want, "two-term k=" + std::to_string(k));
    }
    return {a.done(), c.done()};
}

struct AqRow {
    std::string id;
    Triple lambda, inf, mu;
    XY xy;
    std::optional<XY> u2;
};

// Displayed formulas, at parameters (a,b,c) for regular cases and a for walls.
inline std::vector<AqRow> aq_displayed(AqGroup g, std::int64_t a, std::int64_t b, std::int64_t c) {
    if (g == AqGroup::G2) {
        return {{"I", {a, b, c}, {a + 2, b + 1, c - 3}, {a + 2, b + 2, c - 4}, {b - c + 6, a + 2}, {}},
                {"II", {-c, -b, -a}, {3 - c, -b - 1, -a - 2}, {-c + 4, -b - 2, -a - 2}, {a - b, -c + 4}, {}},
                {"III", {b, a, c}, {b + 1, a + 2, c - 3}, {b, a + 4, c - 4}, {a - c + 8, b}, {}}};
    }
    return {{"I", {a, b, c}, {a + 1, b, c - 1}, {a + 1, b, c - 1}, {b - c + 1, a + 1}, XY{a + 1, c - 1}},
            {"II", {a, c, b}, {a + 1, c - 1, b}, {a + 1, c - 2, b + 1}, {c - b - 3, a + 1}, XY{a + 1, b + 1}},
            {"III", {b, a, c}, {b, a + 1, c - 1}, {b - 1, a + 2, c - 1}, {a - c + 3, b - 1}, XY{b - 1, c - 1}}};
}

inline std::vector<AqRow> aq_displayed_wall(AqGroup g, std::int64_t a) {
    if (g == AqGroup::G2) {
        Triple ia{a + 2, a + 1, -2 * a - 3}, iia{a + 2, 1, -a - 3};
        return {{"Ia.1", {a, a, -2 * a}, ia, {a + 2, a + 2, -2 * a - 4}, {3 * a + 6, a + 2}, {}},
                {"Ia.2", {a, a, -2 * a}, ia, {a + 1, a + 3, -2 * a - 4}, {3 * a + 7, a + 1}, {}},
                {"Ia.3", {a, a, -2 * a}, ia, {a, a + 4, -2 * a - 4}, {3 * a + 8, a}, {}},
                {"Ib", {2 * a, -a, -a}, {2 * a + 3, -a - 1, -a - 2}, {2 * a + 4, -a - 2, -a - 2}, {0, 2 * a + 4}, {}},
                {"IIa.1", {a, 0, -a}, iia, {a + 4, -2, -a - 2}, {a, a + 4}, {}},
                {"IIa.2", {a, 0, -a}, iia, {a + 3, 0, -a - 3}, {a + 3, a + 3}, {}},
                {"IIa.3", {a, 0, -a}, iia, {a + 2, 2, -a - 4}, {a + 6, a + 2}, {}},
                {"IIb", {0, a, -a}, {1, a + 2, -a - 3}, {0, a + 4, -a - 4}, {2 * a + 8, 0}, {}}};
    }
    Triple ia{a + 1, a, -2 * a - 1};
    std::int64_t b = -a;
    Triple iia{-2 * b + 1, b, b - 1};
    return {{"Ia.1", {a, a, -2 * a}, ia, {a, a + 1, -2 * a - 1}, {3 * a + 2, a}, XY{a, -2 * a - 1}},
            {"Ia.2", {a, a, -2 * a}, ia, {a - 1, a + 2, -2 * a - 1}, {3 * a + 3, a - 1}, XY{a - 1, -2 * a - 1}},
            {"Ia.3", {a, a, -2 * a}, ia, {a + 1, a, -2 * a - 1}, {3 * a + 1, a + 1}, XY{a + 1, -2 * a - 1}},
            {"Ib", {a, -2 * a, a}, {a + 1, -2 * a - 1, a}, {a + 1, -2 * a - 2, a + 1}, {-3 * a - 3, a + 1}, XY{a + 1, a + 1}},
            {"IIa.1", {-2 * b, b, b}, iia, {-2 * b + 1, b - 1, b}, {-1, -2 * b + 1}, XY{-2 * b + 1, b}},
            {"IIa.2", {-2 * b, b, b}, iia, {-2 * b + 1, b - 2, b + 1}, {-3, -2 * b + 1}, XY{-2 * b + 1, b + 1}},
            {"IIa.3", {-2 * b, b, b}, iia, {-2 * b + 1, b, b - 1}, {1, -2 * b + 1}, XY{-2 * b + 1, b - 1}},
            {"IIb", {b, -2 * b, b}, {b, -2 * b + 1, b - 1}, {b - 1, -2 * b + 2, b - 1}, {-3 * b + 3, b - 1}, XY{b - 1, b - 1}}};
}

// Twenty (a,b,c) with a > b > 0 (G2) or a > b > c (PU21).
inline std::vector<Triple> aq_regular_params(AqGroup g) {
    std::vector<Triple> out;
    for (std::int64_t a = 1; out.size() < 20; ++a)
        for (std::int64_t b = g == AqGroup::G2 ? 1 : -a; b < a && out.size() < 20; ++b) {
            std::int64_t c = -a - b;
            if (g == AqGroup::PU21 && !(b > c)) continue;
            out.push_back({a, b, c});
        }
    return out;
}

inline std::vector<Check> suite_aq_tables(const Options&) {
    using detail::Acc;
    Acc tab("displayed-data"), sig("two-rho-identity"), rt("xy-round-trip"), seg("segment-maxima"), wall("theta-wall-bullets"),
        reg("theta-regular-bullets"), ic("wall-infchar-match");
    auto cmp = [&](AqGroup g, const AqRow& r) {
        tab.run(to_string(g) + " " + r.id + " " + detail::tstr(r.lambda), [&] {
            auto d = aq_data({g, r.id, r.lambda});
            bool ok = d.inf_char == r.inf && d.minimal_type_abc == r.mu && d.minimal_type_xy == r.xy;
            if (r.u2) ok = ok && d.u2_type == *r.u2;
            Triple s{0, 0, 0};
            for (auto& u : d.u_cap_p) s = s + u;
            sig.expect(d.minimal_type_abc - d.c.lambda == s, r.id);
            rt.expect(from_xy(d.minimal_type_xy) == d.minimal_type_abc, r.id);
            return ok;
        });
    };
    for (auto g : {AqGroup::G2, AqGroup::PU21}) {
        for (auto& [a, b, c] : aq_regular_params(g))
            for (auto& r : aq_displayed(g, a, b, c)) cmp(g, r);
        for (std::int64_t a = 1; a <= 20; ++a)
            for (auto& r : aq_displayed_wall(g, a)) cmp(g, r);
    }
    for (std::int64_t a = 1; a <= 20; ++a) {
        auto s = ftau_restriction_segments(a);
        std::array<XY, 3> lo = {XY{a + 1, a - 1}, XY{a + 2, a}, XY{a + 3, a + 1}};
        std::array<XY, 3> hi = {XY{3 * a + 5, a - 1}, XY{3 * a + 4, a}, XY{3 * a + 3, a + 1}};
        for (int i = 0; i < 3; ++i)
            seg.expect(!s[i].empty() && s[i].front() == lo[i] && s[i].back() == hi[i] && s[i].size() == static_cast<std::size_t>(a + 3 - i),
                       "a=" + std::to_string(a));
        wall.run("a=" + std::to_string(a) + " zero", [&] { return theta_unitary({a + 1, a + 1}, WallRegime{a}).zero; });
        std::array<std::array<std::int64_t, 2>, 3> taus = {{{a - 1, -2 * a - 1}, {a, -2 * a - 1}, {a + 1, -2 * a - 1}}};
        for (int i = 0; i < 3; ++i)
            wall.run("a=" + std::to_string(a), [&] {
                auto r = theta_unitary(taus[i], WallRegime{a});
                return r.if_nonzero && r.minimal_type == hi[i];
            });
        // equal up to W(G2)
        auto& G2 = root_system("G2");
        Weight target = dominant_representative(Weight::from_ints({a + 1, a, -2 * a - 1}), G2);
        for (auto& d : g2_wall_candidates(a))
            ic.expect(dominant_representative(Weight::from_ints({d.inf_char[0], d.inf_char[1], d.inf_char[2]}), G2) == target, d.c.id);
        for (auto id : {"Ia.1", "Ia.2", "Ia.3"}) ic.expect(aq_data({AqGroup::PU21, id, {a, a, -2 * a}}).inf_char == Triple{a + 1, a, -2 * a - 1}, id);
    }
    for (std::int64_t a = 2; a <= 12; ++a)
        for (std::int64_t b = 1; b < a; ++b) {
            std::int64_t c = -a - b;
            std::string w = detail::tstr({a, b, c});
            reg.run(w, [&] {
                auto r1 = theta_unitary({a + 1, c - 1}, RegularRegime{a, b, c});
                auto r2 = theta_unitary({a + 1, b + 1}, RegularRegime{a, b, c});
                auto r3 = theta_unitary({b - 1, c - 1}, RegularRegime{a, b, c});
                return r1.if_nonzero && r1.minimal_type == XY{3 - c + b, a + 1} && r2.zero && r3.if_nonzero &&
                       r3.minimal_type == XY{5 + a - c, b - 1};
            });
        }
    return {tab.done(), sig.done(), rt.done(), seg.done(), wall.done(), reg.done(), ic.done()};
}

inline const std::vector<std::pair<std::string, Suite>>& suites() {
    static const std::vector<std::pair<std::string, Suite>> s = {
        {"root-data", suite_root_data},   {"oracle", suite_oracle},       {"appendix-branching", suite_appendix_branching},
        {"f4-spin9", suite_f4_spin9},     {"e7-d6", suite_e7_d6},         {"ktypes", suite_ktypes},
        {"infchar", suite_infchar},       {"theta-tables", suite_theta_tables}, {"seesaw", suite_seesaw},
        {"surjectivity", suite_surjectivity}, {"filtration", suite_filtration}, {"aq-tables", suite_aq_tables}};
    return s;
}

inline Report run_suite(const std::string& name, const Options& o = {}) {
    Report r;
    bool found = false;
    for (auto& [n, f] : suites()) {
        if (name != "all" && name != n) continue;
        found = true;
        std::vector<Check> cs;
        try {
            cs = f(o);
        } catch (const std::exception& e) {
            cs.push_back({"suite", false, std::string("threw ") + e.what()});
        }
        for (auto& c : cs) r.checks.push_back({n, c});
    }
    if (!found) throw DomainError("unknown suite: " + name);
    return r;
}

}  // namespace quatheta::verify
