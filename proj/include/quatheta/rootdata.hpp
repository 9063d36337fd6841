#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "halfint.hpp"

namespace quatheta {

using Rational = boost::rational<std::int64_t>;

struct RootSystem {
    std::string label;
    std::size_t dim = 0;
    std::vector<Weight> simple_roots;
    std::vector<Weight> positive_roots;
    Weight rho;
    std::int64_t weyl_order = 1;

    struct Part {
        std::string label;
        std::size_t offset = 0;
        std::size_t dim = 0;
    };
    // Simple factors (and T1 tori) in coordinate order; a single entry for simple systems.
    std::vector<Part> parts;

    std::size_t rank() const { return simple_roots.size(); }
};

namespace detail {

inline Weight unit(std::size_t n, std::size_t i, std::int64_t v = 1) {
    Weight w(n);
    w[i] = HalfInt(v);
    return w;
}

inline Weight halves(std::initializer_list<int> signs) {
    Weight w(signs.size());
    std::size_t i = 0;
    for (int s : signs) w[i++] = HalfInt::from_twice(s);
    return w;
}

inline std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

struct SimpleLabel {
    char family = 0;
    int rank = 0;
};

inline std::optional<SimpleLabel> parse_simple(const std::string& s) {
    if (s.size() < 2) return std::nullopt;
    char f = s[0];
    if (std::string("ABCDEFGT").find(f) == std::string::npos) return std::nullopt;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return std::nullopt;
    int r = std::stoi(s.substr(1));
    bool ok = false;
    switch (f) {
        case 'A': ok = r >= 1 && r <= 8; break;
        case 'B': ok = r >= 1 && r <= 8; break;
        case 'C': ok = r >= 1 && r <= 8; break;
        case 'D': ok = r >= 2 && r <= 8; break;
        case 'E': ok = r >= 6 && r <= 8; break;
        case 'F': ok = r == 4; break;
        case 'G': ok = r == 2; break;
        case 'T': ok = r == 1; break;
    }
    if (!ok) return std::nullopt;
    return SimpleLabel{f, r};
}

inline void sign_patterns(std::size_t n, std::vector<std::vector<int>>& out) {
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        std::vector<int> s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1 ? -1 : 1;
        out.push_back(s);
    }
}

inline RootSystem build_simple(const std::string& label) {
    auto sl = parse_simple(label);
    if (!sl) throw DomainError("unsupported root system label: " + label);
    RootSystem R;
    R.label = label;
    const int n = sl->rank;
    auto& P = R.positive_roots;
    auto& S = R.simple_roots;
    auto eps_pm = [&](std::size_t dim, std::size_t i, std::size_t j, int si, int sj) {
        Weight w(dim);
        w[i] = HalfInt(si);
        w[j] = HalfInt(sj);
        return w;
    };
    switch (sl->family) {
        case 'T':
            R.dim = 1;
            break;
        case 'A':
            if (n == 1) {
                // SU(2) in the convention where the irrep (m) has highest weight m.
                R.dim = 1;
                P.push_back(unit(1, 0, 2));
                S = P;
                R.weyl_order = 2;
            } else {
                R.dim = n + 1;
                for (std::size_t i = 0; i < R.dim; ++i)
                    for (std::size_t j = i + 1; j < R.dim; ++j) P.push_back(eps_pm(R.dim, i, j, 1, -1));
                for (std::size_t i = 0; i + 1 < R.dim; ++i) S.push_back(eps_pm(R.dim, i, i + 1, 1, -1));
                R.weyl_order = factorial(n + 1);
            }
            break;
        case 'B':
        case 'C':
        case 'D': {
            R.dim = n;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    P.push_back(eps_pm(n, i, j, 1, -1));
                    P.push_back(eps_pm(n, i, j, 1, 1));
                }
            for (int i = 0; i + 1 < n; ++i) S.push_back(eps_pm(n, i, i + 1, 1, -1));
            if (sl->family == 'B') {
                for (int i = 0; i < n; ++i) P.push_back(unit(n, i));
                S.push_back(unit(n, n - 1));
                R.weyl_order = (std::int64_t(1) << n) * factorial(n);
            } else if (sl->family == 'C') {
                for (int i = 0; i < n; ++i) P.push_back(unit(n, i, 2));
                S.push_back(unit(n, n - 1, 2));
                R.weyl_order = (std::int64_t(1) << n) * factorial(n);
            } else {
                S.push_back(eps_pm(n, n - 2, n - 1, 1, 1));
                R.weyl_order = (std::int64_t(1) << (n - 1)) * factorial(n);
            }
            break;
        }
        case 'G':
            R.dim = 3;
            P = {Weight{1, -1, 0}, Weight{1, 0, -1}, Weight{0, 1, -1},
                 Weight{2, -1, -1}, Weight{-1, 2, -1}, Weight{1, 1, -2}};
            S = {Weight{1, -1, 0}, Weight{-1, 2, -1}};
            R.weyl_order = 12;
            break;
        case 'F': {
            R.dim = 4;
            for (int i = 0; i < 4; ++i) P.push_back(unit(4, i));
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    P.push_back(eps_pm(4, i, j, 1, -1));
                    P.push_back(eps_pm(4, i, j, 1, 1));
                }
            std::vector<std::vector<int>> sg;
            sign_patterns(3, sg);
            for (auto& s : sg) P.push_back(halves({1, s[0], s[1], s[2]}));
            S = {eps_pm(4, 1, 2, 1, -1), eps_pm(4, 2, 3, 1, -1), unit(4, 3), halves({1, -1, -1, -1})};
            R.weyl_order = 1152;
            break;
        }
        case 'E': {
            R.dim = 8;
            // pairs (i<j) among the first m coordinates, plus the half-spin family
            int m = n == 8 ? 8 : (n == 7 ? 6 : 5);
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) {
                    P.push_back(eps_pm(8, i, j, -1, 1));
                    P.push_back(eps_pm(8, i, j, 1, 1));
                }
            std::vector<std::vector<int>> sg;
            if (n == 6) {
                sign_patterns(5, sg);
                for (auto& s : sg) {
                    if (std::count(s.begin(), s.end(), -1) % 2) continue;
                    P.push_back(halves({s[0], s[1], s[2], s[3], s[4], -1, -1, 1}));
                }
                R.weyl_order = 51840;
            } else if (n == 7) {
                P.push_back(eps_pm(8, 6, 7, -1, 1));
                sign_patterns(6, sg);
                for (auto& s : sg) {
                    if (std::count(s.begin(), s.end(), -1) % 2 == 0) continue;
                    P.push_back(halves({s[0], s[1], s[2], s[3], s[4], s[5], -1, 1}));
                }
                R.weyl_order = 2903040;
            } else {
                sign_patterns(7, sg);
                for (auto& s : sg) {
                    if (std::count(s.begin(), s.end(), -1) % 2) continue;
                    P.push_back(halves({s[0], s[1], s[2], s[3], s[4], s[5], s[6], 1}));
                }
                R.weyl_order = 696729600;
            }
            S.push_back(halves({1, -1, -1, -1, -1, -1, -1, 1}));
            S.push_back(eps_pm(8, 0, 1, 1, 1));
            for (int i = 1; i < n - 1; ++i) S.push_back(eps_pm(8, i - 1, i, -1, 1));
            break;
        }
    }
    R.parts = {{label, 0, R.dim}};
    return R;
}

inline std::vector<std::string> split_product(const std::string& label) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto x = label.find('x', start);
        out.push_back(label.substr(start, x == std::string::npos ? std::string::npos : x - start));
        if (x == std::string::npos) break;
        start = x + 1;
    }
    return out;
}

inline Weight pad(const Weight& w, std::size_t offset, std::size_t total) {
    Weight r(total);
    for (std::size_t i = 0; i < w.size(); ++i) r[offset + i] = w[i];
    return r;
}

}  // namespace detail

// Labels are simple types ("B3", "E6", ...), "T1" for a one-dimensional torus, or products such as "B2xT1".
inline RootSystem build_root_system(const std::string& label) {
    auto names = detail::split_product(label);
    RootSystem R;
    if (names.size() == 1) {
        R = detail::build_simple(label);
    } else {
        R.label = label;
        std::vector<RootSystem> fs;
        for (auto& n : names) {
            fs.push_back(detail::build_simple(n));
            R.dim += fs.back().dim;
        }
        std::size_t off = 0;
        for (auto& f : fs) {
            for (auto& r : f.simple_roots) R.simple_roots.push_back(detail::pad(r, off, R.dim));
            for (auto& r : f.positive_roots) R.positive_roots.push_back(detail::pad(r, off, R.dim));
            R.weyl_order *= f.weyl_order;
            R.parts.push_back({f.label, off, f.dim});
            off += f.dim;
        }
    }
    std::sort(R.positive_roots.begin(), R.positive_roots.end());
    Weight sum(R.dim);
    for (auto& r : R.positive_roots) sum += r;
    R.rho = Weight(R.dim);
    for (std::size_t i = 0; i < R.dim; ++i) {
        if (sum[i].twice % 2) throw InternalError("rho not half-integral for " + label);
        R.rho[i] = HalfInt::from_twice(sum[i].twice / 2);
    }
    return R;
}

// Shared immutable instance per label.
inline const RootSystem& root_system(const std::string& label) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<RootSystem>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(label);
    if (it == cache.end()) it = cache.emplace(label, std::make_unique<RootSystem>(build_root_system(label))).first;
    return *it->second;
}

inline bool is_e_series(const std::string& label) {
    for (auto& n : detail::split_product(label))
        if (!n.empty() && n[0] == 'E') return true;
    return false;
}

// s_alpha(w). Throws if the image leaves (1/2)Z^n, which only happens for weights off the lattice.
inline Weight reflect(const Weight& w, const Weight& alpha) {
    std::int64_t num = 2 * dot4(w, alpha);
    std::int64_t den = dot4(alpha, alpha);
    Weight r = w;
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::int64_t t = num * alpha[i].twice;
        if (t % den) throw DomainError("reflection leaves the half-integer lattice: " + to_string(w));
        r[i].twice -= t / den;
    }
    return r;
}

inline bool is_dominant(const RootSystem& R, const Weight& w) {
    for (auto& a : R.simple_roots)
        if (dot4(w, a) < 0) return false;
    return true;
}

// 2<w,alpha>/<alpha,alpha> for each simple root.
inline std::vector<std::int64_t> dynkin_labels(const RootSystem& R, const Weight& w) {
    std::vector<std::int64_t> out;
    for (auto& a : R.simple_roots) {
        std::int64_t num = 2 * dot4(w, a), den = dot4(a, a);
        if (num % den) throw DomainError("weight not integral on coroot: " + to_string(w));
        out.push_back(num / den);
    }
    return out;
}

namespace detail {

inline Weight dominant_part(const std::string& label, Weight w, const RootSystem& R) {
    char f = label[0];
    if (f == 'T') return w;
    if (f == 'A' && w.size() == 1) return Weight{abs(w[0])};
    if (f == 'A') {
        std::sort(w.c.begin(), w.c.end(), std::greater<>());
        return w;
    }
    if (f == 'B' || f == 'C' || f == 'D') {
        int neg = 0;
        bool zero = false;
        for (auto& x : w.c) {
            if (x.twice < 0) ++neg;
            if (x.twice == 0) zero = true;
            x = abs(x);
        }
        std::sort(w.c.begin(), w.c.end(), std::greater<>());
        if (f == 'D' && !zero && neg % 2) w.c.back() = -w.c.back();
        return w;
    }
    // G2, F4, E-series: descend through simple reflections.
    bool moved = true;
    while (moved) {
        moved = false;
        for (auto& a : R.simple_roots)
            if (dot4(w, a) < 0) {
                w = reflect(w, a);
                moved = true;
            }
    }
    return w;
}

}  // namespace detail

// The dominant element of the Weyl orbit of w.
inline Weight dominant_representative(const Weight& w, const RootSystem& R) {
    if (w.size() != R.dim) throw DomainError("weight has wrong length for " + R.label);
    if (R.parts.size() == 1) return detail::dominant_part(R.label, w, R);
    Weight out;
    for (auto& p : R.parts) {
        Weight piece = w.slice(p.offset, p.dim);
        out = out.concat(detail::dominant_part(p.label, piece, root_system(p.label)));
    }
    return out;
}

// Breadth-first closure under simple reflections.
inline std::vector<Weight> weyl_orbit(const RootSystem& R, const Weight& w) {
    std::set<Weight> seen{w};
    std::vector<Weight> frontier{w};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (auto& v : frontier)
            for (auto& a : R.simple_roots) {
                if (dot4(v, a) == 0) continue;
                Weight u = reflect(v, a);
                if (seen.insert(u).second) next.push_back(u);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

// Coefficients of w in the basis of simple roots; w must lie in their rational span.
inline std::vector<Rational> simple_coefficients(const RootSystem& R, const Weight& w) {
    const std::size_t r = R.rank();
    std::vector<std::vector<Rational>> A(r, std::vector<Rational>(r + 1));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) A[i][j] = dot4(R.simple_roots[i], R.simple_roots[j]);
        A[i][r] = dot4(w, R.simple_roots[i]);
    }
    for (std::size_t col = 0; col < r; ++col) {
        std::size_t piv = col;
        while (piv < r && A[piv][col].numerator() == 0) ++piv;
        if (piv == r) throw InternalError("degenerate Gram matrix for " + R.label);
        std::swap(A[col], A[piv]);
        for (std::size_t i = 0; i < r; ++i) {
            if (i == col || A[i][col].numerator() == 0) continue;
            Rational f = A[i][col] / A[col][col];
            for (std::size_t j = col; j <= r; ++j) A[i][j] -= f * A[col][j];
        }
    }
    std::vector<Rational> c(r);
    for (std::size_t i = 0; i < r; ++i) c[i] = A[i][r] / A[i][i];
    for (std::size_t k = 0; k < R.dim; ++k) {
        Rational s = 0;
        for (std::size_t i = 0; i < r; ++i) s += c[i] * Rational(R.simple_roots[i][k].twice, 2);
        if (s != Rational(w[k].twice, 2)) throw DomainError("weight not in the span of the simple roots");
    }
    return c;
}

// Positive root of maximal height (simple systems only).
inline Weight highest_root(const RootSystem& R) {
    Weight best;
    Rational best_h = -1;
    for (auto& b : R.positive_roots) {
        Rational h = 0;
        for (auto& x : simple_coefficients(R, b)) h += x;
        if (h > best_h) {
            best_h = h;
            best = b;
        }
    }
    return best;
}

// Membership in the weight lattice, factor by factor (conservative, used to catch embedding bugs).
inline bool in_weight_lattice(const RootSystem& R, const Weight& w) {
    for (auto& p : R.parts) {
        Weight x = w.slice(p.offset, p.dim);
        char f = p.label[0];
        if (f == 'T') continue;
        if (f == 'A' || f == 'C' || f == 'G') {
            if (!x.is_integral()) return false;
            if (f == 'G') {
                HalfInt s;
                for (auto& c : x.c) s += c;
                if (s.twice) return false;
            }
        } else if (!x.is_congruent()) {
            return false;
        }
    }
    return true;
}

// One row of the table of quaternionic real forms.
struct QuaternionicStructure {
    struct MFactor {
        std::string label;
        // positions (1-based, Bourbaki order) of the simple roots of G forming this factor,
        // listed in the factor's own simple-root order
        std::vector<int> g_simple;
    };
    std::string G;
    std::string g_system;
    std::string m_label;
    std::vector<MFactor> m_factors;
    std::string m_system;
    Weight vm_hw;
    std::int64_t vm_dim = 0;
    Weight alpha0;
    std::string k_label;
    // SU_0(2) x SU(2) highest weights of p for the split G2 inside Spin(4,3): (3) x (1).
    std::vector<int> g2_p;
};

inline QuaternionicStructure quaternionic_structure(const std::string& G) {
    using M = QuaternionicStructure::MFactor;
    QuaternionicStructure q;
    q.G = G;
    if (G == "Spin(4,3)") {
        q.g_system = "B3";
        q.m_label = "SU(2)xSpin(3)";
        q.m_factors = {M{"A1", {1}}, M{"A1", {3}}};
        q.vm_hw = Weight{1, 2};
        q.vm_dim = 6;
        q.g2_p = {3, 1};
    } else if (G == "Spin(4,4)") {
        q.g_system = "D4";
        q.m_label = "SU(2)xSU(2)xSU(2)";
        q.m_factors = {M{"A1", {1}}, M{"A1", {4}}, M{"A1", {3}}};
        q.vm_hw = Weight{1, 1, 1};
        q.vm_dim = 8;
    } else if (G == "E6_4") {
        q.g_system = "E6";
        q.m_label = "SU(6)";
        q.m_factors = {M{"A5", {1, 3, 4, 5, 6}}};
        q.vm_hw = Weight{1, 1, 1, 0, 0, 0};
        q.vm_dim = 20;
    } else if (G == "E7_4") {
        q.g_system = "E7";
        q.m_label = "Spin(12)";
        q.m_factors = {M{"D6", {7, 6, 5, 4, 3, 2}}};
        q.vm_hw = Weight::from_twice({1, 1, 1, 1, 1, 1});
        q.vm_dim = 32;
    } else if (G == "E8_4") {
        q.g_system = "E8";
        q.m_label = "E7";
        q.m_factors = {M{"E7", {1, 2, 3, 4, 5, 6, 7}}};
        q.vm_hw = Weight::from_twice({0, 0, 0, 0, 0, 2, -1, 1});
        q.vm_dim = 56;
    } else if (G == "F4_4") {
        q.g_system = "F4";
        q.m_label = "Sp(3)";
        q.m_factors = {M{"C3", {4, 3, 2}}};
        q.vm_hw = Weight{1, 1, 1};
        q.vm_dim = 14;
    } else if (G == "G2_2") {
        q.g_system = "G2";
        q.m_label = "SU(2)";
        q.m_factors = {M{"A1", {1}}};
        q.vm_hw = Weight{3};
        q.vm_dim = 4;
    } else {
        throw DomainError("unknown quaternionic group: " + G);
    }
    std::string ms;
    for (auto& f : q.m_factors) ms += (ms.empty() ? "" : "x") + f.label;
    q.m_system = ms;
    q.alpha0 = -highest_root(root_system(q.g_system));
    q.k_label = "SU_0(2)x" + q.m_label;
    return q;
}

}  // namespace quatheta
