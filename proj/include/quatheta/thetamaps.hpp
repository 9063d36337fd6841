#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quaternionic.hpp"

namespace quatheta {

struct ThetaLift {
    std::vector<std::pair<QuatModule, std::int64_t>> terms;
    bool zero = false;
    // "+" or "-" for the tau-split parameters, empty otherwise
    std::string sign;
    // the table only gives an inclusion
    bool upper_bound = false;

    friend bool operator==(const ThetaLift&, const ThetaLift&) = default;
};

namespace detail {

inline QuatModule b3(std::int64_t m, std::int64_t n, std::int64_t s, Quotient q = Quotient::sigma) {
    return {"Spin(4,3)", {Weight{HalfInt(m)}, Weight{HalfInt(n)}}, s, q};
}

inline QuatModule d4(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s, Quotient f = Quotient::sigma) {
    return {"Spin(4,4)", {Weight{HalfInt(p)}, Weight{HalfInt(q)}, Weight{HalfInt(r)}}, s, f};
}

inline ThetaLift single(QuatModule m, std::int64_t mult = 1) {
    ThetaLift t;
    t.terms.push_back({std::move(m), mult});
    return t;
}

inline ThetaLift zero_lift() {
    ThetaLift t;
    t.zero = true;
    return t;
}

inline int parse_sign(std::optional<char> s) {
    if (!s) return 0;
    if (*s == '+') return 1;
    if (*s == '-') return -1;
    throw DomainError(std::string("sign must be + or -, got ") + *s);
}

}  // namespace detail

// Torus characters (a,b,c) of the E6 see-saw, lifted to Spin(4,4).
inline ThetaLift theta_e6_torus(std::int64_t a, std::int64_t b, std::int64_t c, std::optional<char> sign = std::nullopt) {
    if (a + b + c != 0) throw DomainError("torus parameters must sum to 0");
    int sg = detail::parse_sign(sign);
    if (a == 0 && b == 0 && c == 0) {
        if (!sg) throw DomainError("the trivial character needs a sign");
        auto t = detail::single(detail::d4(0, 0, 0, sg > 0 ? 4 : 6));
        t.sign = sg > 0 ? "+" : "-";
        return t;
    }
    if (sg) throw DomainError("sign is only meaningful for (0,0,0)");
    int neg = (a < 0) + (b < 0) + (c < 0);
    if (neg != 1) {
        a = -a;
        b = -b;
        c = -c;
    }
    if (c < 0) return detail::single(detail::d4(b, a, 0, 4 + a + b));
    if (a < 0) return detail::single(detail::d4(0, c, b, 4 + b + c));
    return detail::single(detail::d4(c, 0, a, 4 + a + c));
}

// U(2) highest weight (a,b), a >= b, lifted to Spin(4,3).
inline ThetaLift theta_e6_u2(std::int64_t a, std::int64_t b, std::optional<char> sign = std::nullopt) {
    if (a < b) throw DomainError("U(2) highest weight needs a >= b");
    int sg = detail::parse_sign(sign);
    if (a + b < 0) {
        std::int64_t t = a;
        a = -b;
        b = -t;
    }
    if (a + b == 0) {
        if (!sg) throw DomainError("(a,-a) needs a sign");
        ThetaLift t;
        if (sg > 0) {
            t = detail::single(detail::b3(a, 0, 4 + a));
            t.upper_bound = true;
        } else if (a == 0) {
            t = detail::zero_lift();
        } else {
            t = detail::single(detail::b3(a - 1, 0, 5 + a));
            t.upper_bound = true;
        }
        t.sign = sg > 0 ? "+" : "-";
        return t;
    }
    if (sg) throw DomainError("sign is only meaningful for (a,-a)");
    if (b > 0) return detail::single(detail::b3(0, a - b, 4 + a + b));
    return detail::single(detail::b3(-b, a + b, 4 + a));
}

// Sp(2) x Sp(1) highest weight (a,b;c) lifted to Spin(4,3).
inline ThetaLift theta_e7(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (b < 0 || a < b || c < 0) throw DomainError("need a >= b >= 0 and c >= 0");
    if (c <= a - b) return detail::single(detail::b3(b, c, 6 + a));
    if (c <= a + b) {
        if ((a + b - c) % 2) throw DomainError("a+b-c must be even");
        return detail::single(detail::b3((a + b - c) / 2, a - b, 6 + (a + b + c) / 2));
    }
    return detail::zero_lift();
}

inline void require_spin_weight(const std::string& label, const Weight& w) {
    const RootSystem& R = root_system(label);
    if (w.size() != R.dim || !w.is_congruent() || !is_dominant(R, w))
        throw DomainError("not a dominant " + label + " weight: " + to_string(w));
}

// Spin(8) highest weight (a,b,c,d) lifted to Spin(4,4).
inline ThetaLift theta_e8_spin8(const Weight& lam) {
    require_spin_weight("D4", lam);
    HalfInt a = lam[0], b = lam[1], c = lam[2], d = lam[3];
    auto t = detail::single(detail::d4((a - b).as_int(), (c + d).as_int(), (c - d).as_int(), (HalfInt(10) + a + b).as_int(), Quotient::A),
                            (b - c + HalfInt(1)).as_int());
    return t;
}

// Spin(9) highest weight (a,b,c,d) lifted to Spin(4,3).
inline ThetaLift theta_e8_spin9(const Weight& w) {
    require_spin_weight("B4", w);
    HalfInt a = w[0], b = w[1], d = w[3];
    return detail::single(detail::b3((a - b).as_int(), d.twice, (HalfInt(10) + a + b).as_int(), Quotient::A));
}

inline Weight theta_e8_spin9_infchar(const Weight& w) {
    require_spin_weight("B4", w);
    return Weight{w[0] + HalfInt::from_twice(7), w[1] + HalfInt::from_twice(5), w[3] + HalfInt::from_twice(1)};
}

// O(2) parameter n lifted to Spin(4,3).
inline ThetaLift theta_f4(std::int64_t n, std::optional<char> sign = std::nullopt) {
    if (n < 0) throw DomainError("n must be >= 0");
    int sg = detail::parse_sign(sign);
    if (n == 0) {
        if (!sg) throw DomainError("n = 0 needs a sign");
        auto t = detail::single(detail::b3(0, 0, sg > 0 ? 3 : 5));
        t.sign = sg > 0 ? "+" : "-";
        return t;
    }
    if (sg) throw DomainError("sign is only meaningful for n = 0");
    std::int64_t k = n / 2;
    if (n % 2 == 0) return detail::single(detail::b3(k, 0, k + 3));
    return detail::single(detail::b3(k, 1, k + 4));
}

enum class ThetaTable { e6_u2, e7, e8_spin8, e8_spin9, f4 };

inline ThetaTable parse_theta_table(const std::string& s) {
    if (s == "e6-u2") return ThetaTable::e6_u2;
    if (s == "e7") return ThetaTable::e7;
    if (s == "e8-spin8") return ThetaTable::e8_spin8;
    if (s == "e8-spin9") return ThetaTable::e8_spin9;
    if (s == "f4") return ThetaTable::f4;
    throw DomainError("unknown theta table: " + s);
}

struct CrossCheck {
    bool applicable = false;
    bool ok = false;
    InfChar expected;
    InfChar computed;
};

// Lift-side infinitesimal character formula against inf_char of the tabulated module.
inline CrossCheck infchar_crosscheck(ThetaTable which, const std::vector<HalfInt>& p, std::optional<char> sign = std::nullopt) {
    auto need = [&](std::size_t n) {
        if (p.size() != n) throw DomainError("wrong number of parameters");
        for (auto x : p)
            if (which != ThetaTable::e8_spin8 && which != ThetaTable::e8_spin9 && !x.is_integer())
                throw DomainError("parameters must be integers");
    };
    ThetaLift lift;
    Weight expect;
    std::string sys = "B3";
    switch (which) {
    case ThetaTable::e6_u2: {
        need(2);
        auto a = p[0].as_int(), b = p[1].as_int();
        lift = theta_e6_u2(a, b, sign);
        expect = Weight::from_twice({a + b + 1, a + b - 1, a - b + 1});
        break;
    }
    case ThetaTable::e7: {
        need(3);
        auto a = p[0].as_int(), b = p[1].as_int(), c = p[2].as_int();
        lift = theta_e7(a, b, c);
        expect = Weight::from_twice({a + b + 3, a - b + 1, c + 1});
        break;
    }
    case ThetaTable::e8_spin8: {
        need(4);
        Weight lam(p);
        lift = theta_e8_spin8(lam);
        expect = lam + root_system("D4").rho;
        sys = "D4";
        break;
    }
    case ThetaTable::e8_spin9: {
        need(4);
        Weight w(p);
        lift = theta_e8_spin9(w);
        expect = theta_e8_spin9_infchar(w);
        break;
    }
    case ThetaTable::f4: {
        need(1);
        auto n = p[0].as_int();
        lift = theta_f4(n, sign);
        expect = Weight::from_twice({n, 2, 1});
        break;
    }
    }
    CrossCheck r;
    if (lift.zero) return r;
    r.applicable = true;
    r.expected = canonical_infchar(sys, expect);
    r.computed = inf_char(lift.terms.front().first);
    r.ok = r.expected == r.computed;
    return r;
}

// K-type multiset of a Spin(4,3) module sum: (SU_0(2) weight, M highest weight) -> multiplicity.
using KTypeCount = std::map<std::pair<std::int64_t, Weight>, std::int64_t>;

inline void add_ktypes(KTypeCount& acc, const QuatModule& m, std::int64_t mult, std::int64_t N) {
    if (m.s - 2 > N) return;
    auto L = ktypes(m, N - (m.s - 2));
    for (auto& lv : L.levels)
        for (auto& [hw, k] : lv.tau.terms) acc[{lv.su0, hw}] += mult * k;
}

struct SeesawReport {
    bool ok = false;
    KTypeCount lhs;
    KTypeCount rhs;
};

// Both sides of the Spin(9)/Spin(8) see-saw identity, truncated at SU_0(2) weight N.
// Left: Spin(9) weights w over Spin(8) weight (b,b,d,d), each lifted. Right: the Spin(8) lift restricted along the filtration.
inline SeesawReport seesaw_truncation_check(HalfInt b, HalfInt d, std::int64_t N) {
    if (!congruent(b, d) || d.twice < 0 || b < d) throw DomainError("need b >= d >= 0, congruent mod 1");
    Weight lam{b, b, d, d};
    SeesawReport r;
    // s = 10 + a + b <= N + 2 bounds a
    for (HalfInt a = b; (HalfInt(10) + a + b) <= HalfInt(N + 2); a += HalfInt(1))
        for (HalfInt c = d; c <= b; c += HalfInt(1)) {
            Weight w{a, b, c, d};
            auto down = gz_chain(9, w, 8);
            auto it = down.find(lam);
            if (it == down.end()) continue;
            for (auto& [m, k] : theta_e8_spin9(w).terms) add_ktypes(r.lhs, m, k * it->second, N);
        }
    for (auto& [m, k] : theta_e8_spin8(lam).terms)
        for (auto& piece : restrict_filtration(m, std::max<std::int64_t>(0, N + 2 - m.s)))
            add_ktypes(r.rhs, piece.module, k, N);
    r.ok = r.lhs == r.rhs;
    return r;
}

}  // namespace quatheta
