#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thetamaps.hpp"

namespace quatheta {

using Triple = std::array<std::int64_t, 3>;
using XY = std::array<std::int64_t, 2>;

enum class AqGroup { G2, PU21 };

inline std::string to_string(AqGroup g) { return g == AqGroup::G2 ? "G2" : "PU21"; }

inline AqGroup parse_aq_group(const std::string& s) {
    if (s == "g2" || s == "G2") return AqGroup::G2;
    if (s == "pu21" || s == "PU21") return AqGroup::PU21;
    throw DomainError("unknown group: " + s);
}

inline const std::vector<std::string>& aq_case_ids() {
    static const std::vector<std::string> ids = {"I", "II", "III", "Ia.1", "Ia.2", "Ia.3", "Ib", "IIa.1", "IIa.2", "IIa.3", "IIb"};
    return ids;
}

struct AqCase {
    AqGroup group = AqGroup::G2;
    std::string id;
    Triple lambda{};
};

struct AqData {
    AqCase c;
    Triple inf_char{};
    Triple minimal_type_abc{};
    XY minimal_type_xy{};
    std::vector<Triple> u_cap_p;
    // (mu_1, mu_3) for PU(2,1); unused for G2
    std::array<std::int64_t, 2> u2_type{};
};

inline Triple operator+(Triple a, const Triple& b) {
    for (int i = 0; i < 3; ++i) a[i] += b[i];
    return a;
}
inline Triple operator-(Triple a, const Triple& b) {
    for (int i = 0; i < 3; ++i) a[i] -= b[i];
    return a;
}
inline std::int64_t dot(const Triple& a, const Triple& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline XY to_xy(const Triple& t) { return {t[1] - t[2], t[0]}; }

inline Triple from_xy(const XY& p) {
    auto [x, y] = p;
    if ((x - y) % 2) throw DomainError("(x,y) must have x = y mod 2");
    return {y, (x - y) / 2, -(x + y) / 2};
}

inline std::vector<Triple> noncompact_roots(AqGroup g) {
    if (g == AqGroup::G2) return {{1, -1, 0}, {1, 0, -1}, {1, 1, -2}, {1, -2, 1}};
    return {{1, -1, 0}, {0, 1, -1}};
}

namespace detail {

inline Triple neg(Triple t) { return {-t[0], -t[1], -t[2]}; }

inline std::vector<Triple> u_cap_p_regular(AqGroup g, const Triple& lam) {
    std::vector<Triple> out;
    for (auto& a : noncompact_roots(g)) {
        auto p = dot(lam, a);
        if (p > 0) out.push_back(a);
        else if (p < 0) out.push_back(neg(a));
        else throw DomainError("lambda is singular");
    }
    return out;
}

// Tables for the walls, one per sub-case.
inline std::vector<Triple> u_cap_p_wall(AqGroup g, const std::string& id) {
    static const std::map<std::string, std::vector<Triple>> g2 = {
        {"Ia.1", {{1, 0, -1}, {1, 1, -2}, {-1, 2, -1}, {1, -1, 0}}},
        {"Ia.2", {{1, 0, -1}, {1, 1, -2}, {-1, 2, -1}}},
        {"Ia.3", {{1, 0, -1}, {1, 1, -2}, {-1, 2, -1}, {-1, 1, 0}}},
        {"Ib", {{1, -1, 0}, {1, 0, -1}, {1, 1, -2}, {1, -2, 1}}},
        {"IIa.1", {{1, -1, 0}, {1, 0, -1}, {1, 1, -2}, {1, -2, 1}}},
        {"IIa.2", {{1, -1, 0}, {1, 0, -1}, {1, 1, -2}}},
        {"IIa.3", {{1, -1, 0}, {1, 0, -1}, {1, 1, -2}, {-1, 2, -1}}},
        {"IIb", {{-1, 1, 0}, {1, 0, -1}, {1, 1, -2}, {-1, 2, -1}}},
    };
    static const std::map<std::string, std::vector<Triple>> pu = {
        {"Ia.1", {{0, 1, -1}}},
        {"Ia.2", {{0, 1, -1}, {-1, 1, 0}}},
        {"Ia.3", {{0, 1, -1}, {1, -1, 0}}},
        {"Ib", {{1, -1, 0}, {0, -1, 1}}},
        {"IIa.1", {{1, -1, 0}}},
        {"IIa.2", {{1, -1, 0}, {0, -1, 1}}},
        {"IIa.3", {{1, -1, 0}, {0, 1, -1}}},
        {"IIb", {{-1, 1, 0}, {0, 1, -1}}},
    };
    const auto& t = g == AqGroup::G2 ? g2 : pu;
    return t.at(id);
}

struct CaseRule {
    // rho of the chamber used, for the infinitesimal character
    Triple rho;
    bool wall;
};

inline void need(bool ok, const std::string& what) {
    if (!ok) throw DomainError("lambda violates the case constraint: " + what);
}

// Decodes lambda into its case parameter and checks the constraints; walls allow the parameter to be 0.
inline CaseRule case_rule(const AqCase& c) {
    auto [l0, l1, l2] = c.lambda;
    need(l0 + l1 + l2 == 0, "entries sum to 0");
    const std::string& id = c.id;
    if (c.group == AqGroup::G2) {
        if (id == "I") {
            need(l0 > l1 && l1 > 0, "lambda = (a,b,c), a > b > 0");
            return {{2, 1, -3}, false};
        }
        if (id == "II") {
            need(-l2 > -l1 && -l1 > 0, "lambda = (-c,-b,-a), a > b > 0");
            return {{3, -1, -2}, false};
        }
        if (id == "III") {
            need(l1 > l0 && l0 > 0, "lambda = (b,a,c), a > b > 0");
            return {{1, 2, -3}, false};
        }
        if (id.rfind("Ia.", 0) == 0) {
            need(l0 == l1 && l0 >= 0, "lambda = (a,a,-2a)");
            need(id == "Ia.1" || id == "Ia.2" || id == "Ia.3", "known sub-case");
            return {{2, 1, -3}, true};
        }
        if (id == "Ib") {
            need(l1 == l2 && l0 == -2 * l1 && l1 <= 0, "lambda = (2a,-a,-a)");
            return {{3, -1, -2}, false};
        }
        if (id.rfind("IIa.", 0) == 0) {
            need(l1 == 0 && l0 >= 0, "lambda = (a,0,-a)");
            need(id == "IIa.1" || id == "IIa.2" || id == "IIa.3", "known sub-case");
            return {{2, 1, -3}, true};
        }
        if (id == "IIb") {
            need(l0 == 0 && l1 >= 0, "lambda = (0,a,-a)");
            return {{1, 2, -3}, false};
        }
    } else {
        if (id == "I") {
            need(l0 > l1 && l1 > l2, "lambda = (a,b,c), a > b > c");
            return {{1, 0, -1}, false};
        }
        if (id == "II") {
            need(l0 > l2 && l2 > l1, "lambda = (a,c,b), a > b > c");
            return {{1, -1, 0}, false};
        }
        if (id == "III") {
            need(l1 > l0 && l0 > l2, "lambda = (b,a,c), a > b > c");
            return {{0, 1, -1}, false};
        }
        if (id.rfind("Ia.", 0) == 0) {
            need(l0 == l1 && l0 >= 0, "lambda = (a,a,-2a)");
            need(id == "Ia.1" || id == "Ia.2" || id == "Ia.3", "known sub-case");
            return {{1, 0, -1}, true};
        }
        if (id == "Ib") {
            need(l0 == l2 && l0 >= 0, "lambda = (a,-2a,a)");
            return {{1, -1, 0}, false};
        }
        if (id.rfind("IIa.", 0) == 0) {
            need(l1 == l2 && l1 <= 0, "lambda = (-2b,b,b), b < 0");
            need(id == "IIa.1" || id == "IIa.2" || id == "IIa.3", "known sub-case");
            return {{1, 0, -1}, true};
        }
        if (id == "IIb") {
            need(l0 == l2 && l0 <= 0, "lambda = (b,-2b,b), b < 0");
            return {{0, 1, -1}, false};
        }
    }
    throw DomainError("unknown case id: " + id);
}

}  // namespace detail

inline AqData aq_data(const AqCase& c) {
    auto rule = detail::case_rule(c);
    AqData d;
    d.c = c;
    d.inf_char = c.lambda + rule.rho;
    d.u_cap_p = rule.wall || c.id == "Ib" || c.id == "IIb" ? detail::u_cap_p_wall(c.group, c.id) : detail::u_cap_p_regular(c.group, c.lambda);
    Triple two_rho{0, 0, 0};
    for (auto& b : d.u_cap_p) two_rho = two_rho + b;
    d.minimal_type_abc = c.lambda + two_rho;
    d.minimal_type_xy = to_xy(d.minimal_type_abc);
    d.u2_type = {d.minimal_type_abc[0], d.minimal_type_abc[2]};
    return d;
}

// Sign patterns on the zero-pairing noncompact roots that reproduce mu; used to certify the wall tables.
inline std::vector<std::vector<Triple>> wall_patterns(AqGroup g, const Triple& lam, const Triple& mu) {
    std::vector<Triple> fixed, zero;
    for (auto& a : noncompact_roots(g)) {
        auto p = dot(lam, a);
        if (p > 0) fixed.push_back(a);
        else if (p < 0) fixed.push_back(detail::neg(a));
        else zero.push_back(a);
    }
    std::vector<std::vector<Triple>> out;
    std::size_t n = 1;
    for (std::size_t i = 0; i < zero.size(); ++i) n *= 3;
    for (std::size_t code = 0; code < n; ++code) {
        std::vector<Triple> set = fixed;
        std::size_t c = code;
        for (auto& z : zero) {
            int choice = static_cast<int>(c % 3);
            c /= 3;
            if (choice == 1) set.push_back(z);
            if (choice == 2) set.push_back(detail::neg(z));
        }
        Triple s = lam;
        for (auto& b : set) s = s + b;
        if (s == mu) out.push_back(set);
    }
    return out;
}

// Is the K-type q in mu + N-span of the u cap p weights.
inline bool cone_contains(const AqData& d, const Triple& q) {
    Triple diff = q - d.minimal_type_abc;
    const auto& gens = d.u_cap_p;
    // a functional positive on every generator bounds the search
    std::optional<Triple> phi;
    for (int i = -3; i <= 3 && !phi; ++i)
        for (int j = -3; j <= 3 && !phi; ++j) {
            Triple f{i, j, 0};
            bool ok = true;
            for (auto& g : gens)
                if (dot(f, g) <= 0) ok = false;
            if (ok) phi = f;
        }
    if (!phi) throw InternalError("cone is not pointed");
    std::int64_t budget = dot(*phi, diff);
    if (budget < 0) return false;
    std::function<bool(std::size_t, Triple, std::int64_t)> rec = [&](std::size_t i, Triple rest, std::int64_t left) {
        if (i == gens.size()) return rest == Triple{0, 0, 0};
        std::int64_t step = dot(*phi, gens[i]);
        for (std::int64_t n = 0; n * step <= left; ++n) {
            if (rec(i + 1, rest, left - n * step)) return true;
            rest = rest - gens[i];
        }
        return false;
    };
    return rec(0, diff, budget);
}

inline bool cone_contains_xy(const AqData& d, const XY& q) {
    if ((q[0] - q[1]) % 2) return false;
    return cone_contains(d, from_xy(q));
}

// K2-types of the minimal Spin(4,3)-type of the lift of the U(2)-type tau, as (x,y) with y the SU(2) weight.
inline std::vector<XY> ftau_segment(std::int64_t m, std::int64_t n) {
    auto lift = theta_e6_u2(m, n);
    if (lift.zero || lift.terms.size() != 1) throw DomainError("no single quaternionic lift for this type");
    const QuatModule& q = lift.terms.front().first;
    std::int64_t su0 = q.s - 2, sp = q.wm[0][0].as_int(), sq = q.wm[1][0].as_int();
    std::vector<XY> out;
    for (auto x : clebsch_gordan(su0, sq)) out.push_back({x, sp});
    return out;
}

inline std::vector<Triple> pu21_wall_types(std::int64_t a) {
    return {{a - 1, 0, -2 * a - 1}, {a, 0, -2 * a - 1}, {a + 1, 0, -2 * a - 1}};
}

// Segments for the three types (a-1,-2a-1), (a,-2a-1), (a+1,-2a-1), in that order.
inline std::array<std::vector<XY>, 3> ftau_restriction_segments(std::int64_t a) {
    if (a <= 0) throw DomainError("a must be > 0");
    return {ftau_segment(a - 1, -2 * a - 1), ftau_segment(a, -2 * a - 1), ftau_segment(a + 1, -2 * a - 1)};
}

struct ThetaUnitary {
    bool zero = false;
    // nonvanishing is not decided, only the minimal type if nonzero
    bool if_nonzero = false;
    std::optional<XY> minimal_type;
    std::string g2_case;
    std::vector<XY> segment;
};

struct WallRegime {
    std::int64_t a;
};
struct RegularRegime {
    std::int64_t a, b, c;
};

namespace detail {

inline ThetaUnitary decide(const std::array<std::int64_t, 2>& tau, const std::vector<AqData>& candidates) {
    ThetaUnitary r;
    r.segment = ftau_segment(tau[0], tau[1]);
    std::vector<const AqData*> hit;
    for (auto& d : candidates)
        for (auto& p : r.segment)
            if (cone_contains_xy(d, p)) {
                hit.push_back(&d);
                break;
            }
    if (hit.empty()) {
        r.zero = true;
        return r;
    }
    if (hit.size() > 1) throw InternalError("segment meets more than one cone");
    r.if_nonzero = true;
    r.minimal_type = hit.front()->minimal_type_xy;
    r.g2_case = hit.front()->c.id;
    return r;
}

}  // namespace detail

// The G2 representations with infinitesimal character (a+1,a,-2a-1).
inline std::vector<AqData> g2_wall_candidates(std::int64_t a) {
    Triple l{a - 1, a - 1, -2 * a + 2};
    return {aq_data({AqGroup::G2, "Ia.1", l}), aq_data({AqGroup::G2, "Ia.2", l}), aq_data({AqGroup::G2, "Ia.3", l}),
            aq_data({AqGroup::G2, "Ib", {2 * a - 2, 1 - a, 1 - a}})};
}

// The G2 representations with infinitesimal character (a+1,b,c-1).
inline std::vector<AqData> g2_regular_candidates(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (b == 1) {
        Triple l{a - 1, 0, 1 - a};
        return {aq_data({AqGroup::G2, "IIa.1", l}), aq_data({AqGroup::G2, "IIa.2", l}), aq_data({AqGroup::G2, "IIa.3", l}),
                aq_data({AqGroup::G2, "IIb", {0, a - 1, 1 - a}})};
    }
    std::int64_t A = a - 1, B = b - 1, C = c + 2;
    return {aq_data({AqGroup::G2, "I", {A, B, C}}), aq_data({AqGroup::G2, "II", {-C, -B, -A}}), aq_data({AqGroup::G2, "III", {B, A, C}})};
}

inline ThetaUnitary theta_unitary(const std::array<std::int64_t, 2>& tau, const WallRegime& w) {
    std::int64_t a = w.a;
    if (a <= 0) throw DomainError("wall regime needs a > 0");
    std::vector<std::array<std::int64_t, 2>> allowed;
    for (auto id : {"Ia.1", "Ia.2", "Ia.3"}) allowed.push_back(aq_data({AqGroup::PU21, id, {a, a, -2 * a}}).u2_type);
    allowed.push_back(aq_data({AqGroup::PU21, "Ib", {a, -2 * a, a}}).u2_type);
    if (std::find(allowed.begin(), allowed.end(), tau) == allowed.end()) throw DomainError("tau is not a minimal type at this infinitesimal character");
    return detail::decide(tau, g2_wall_candidates(a));
}

inline ThetaUnitary theta_unitary(const std::array<std::int64_t, 2>& tau, const RegularRegime& g) {
    auto [a, b, c] = g;
    if (!(a > b && b > c && b > 0 && a + b + c == 0)) throw DomainError("regular regime needs a > b > c, b > 0, a+b+c = 0");
    std::vector<std::array<std::int64_t, 2>> allowed;
    for (auto& [id, l] : std::vector<std::pair<std::string, Triple>>{{"I", {a, b, c}}, {"II", {a, c, b}}, {"III", {b, a, c}}})
        allowed.push_back(aq_data({AqGroup::PU21, id, l}).u2_type);
    if (std::find(allowed.begin(), allowed.end(), tau) == allowed.end()) throw DomainError("tau is not a minimal type at this infinitesimal character");
    return detail::decide(tau, g2_regular_candidates(a, b, c));
}

}  // namespace quatheta
