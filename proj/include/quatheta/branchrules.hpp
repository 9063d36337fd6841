#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charoracle.hpp"

namespace quatheta {

// SU(2) decomposition keyed by highest weight m of (m).
using SU2Decomp = std::map<std::int64_t, std::int64_t>;
// Spin(2) character: half-integer weight -> multiplicity.
using Spin2Module = std::map<HalfInt, std::int64_t>;

inline std::vector<std::int64_t> clebsch_gordan(std::int64_t m, std::int64_t n) {
    if (m < 0 || n < 0) throw DomainError("Clebsch-Gordan needs nonnegative weights");
    std::vector<std::int64_t> out;
    for (std::int64_t k = std::llabs(m - n); k <= m + n; k += 2) out.push_back(k);
    return out;
}

inline SU2Decomp su2_tensor(const SU2Decomp& a, const SU2Decomp& b) {
    SU2Decomp out;
    for (auto& [m, x] : a)
        for (auto& [n, y] : b)
            for (auto k : clebsch_gordan(m, n)) out[k] += x * y;
    return out;
}

inline std::int64_t su2_dim(const SU2Decomp& d) {
    std::int64_t s = 0;
    for (auto& [m, k] : d) s += (m + 1) * k;
    return s;
}

// (b) + (b-2) + ... + (-b), b a nonnegative integer.
inline Spin2Module spin2_B(HalfInt b) {
    if (!b.is_integer() || b.twice < 0) throw DomainError("B(b) needs a nonnegative integer");
    Spin2Module m;
    for (HalfInt w = b; w >= -b; w -= HalfInt(2)) m[w] += 1;
    return m;
}

// (a) + (a-1) + ... + (-a), a a nonnegative half-integer.
inline Spin2Module spin2_A(HalfInt a) {
    if (a.twice < 0) throw DomainError("A(a) needs a >= 0");
    Spin2Module m;
    for (HalfInt w = a; w >= -a; w -= HalfInt(1)) m[w] += 1;
    return m;
}

inline Spin2Module convolve(const Spin2Module& a, const Spin2Module& b) {
    Spin2Module out;
    for (auto& [x, p] : a)
        for (auto& [y, q] : b) out[x + y] += p * q;
    return out;
}

inline std::int64_t mass(const Spin2Module& m) {
    std::int64_t s = 0;
    for (auto& [w, k] : m) s += k;
    return s;
}

struct InterlacingCert {
    Weight x;
    Weight y;
    std::vector<HalfInt> z;  // merged, descending
};

// x_i >= y_i >= x_{i+2}, and x_{n-1} >= y_{n-1} >= 0. With abs_last, |y_{n-1}| is used.
inline std::optional<InterlacingCert> two_step_interlace(const Weight& x, const Weight& y, bool abs_last = false) {
    const std::size_t n = x.size();
    if (y.size() + 1 != n) return std::nullopt;
    Weight yy = y;
    if (abs_last && n >= 2) yy[n - 2] = abs(yy[n - 2]);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        HalfInt lo = i + 2 < n ? x[i + 2] : HalfInt(0);
        if (!(x[i] >= yy[i] && yy[i] >= lo)) return std::nullopt;
    }
    InterlacingCert c{x, yy, {}};
    c.z = x.c;
    c.z.insert(c.z.end(), yy.c.begin(), yy.c.end());
    std::sort(c.z.begin(), c.z.end(), std::greater<>());
    return c;
}

namespace detail {

// All y with lo_i <= y_i <= hi_i in steps of one, starting at the given lower bounds.
inline void box(const std::vector<HalfInt>& lo, const std::vector<HalfInt>& hi, std::vector<Weight>& out) {
    Weight cur(lo.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == lo.size()) {
            out.push_back(cur);
            return;
        }
        for (HalfInt v = lo[i]; v <= hi[i]; v += HalfInt(1)) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

inline std::vector<Weight> interlacing_candidates(const Weight& x, HalfInt base) {
    const std::size_t n = x.size();
    std::vector<HalfInt> lo(n - 1), hi(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        hi[i] = x[i];
        lo[i] = i + 2 < n ? x[i + 2] : base;
    }
    std::vector<Weight> out;
    box(lo, hi, out);
    return out;
}

inline void require_dominant(const std::string& label, const Weight& w) {
    if (!is_dominant(root_system(label), w)) throw DomainError("not a dominant " + label + " weight: " + to_string(w));
}

}  // namespace detail

// Sp(n) -> Sp(n-1) x Sp(1).
inline std::map<Weight, SU2Decomp> branch_sp(const Weight& lambda) {
    const std::size_t n = lambda.size();
    if (n < 2) throw DomainError("branch_sp needs n >= 2");
    if (!lambda.is_integral()) throw DomainError("Sp(n) weights are integral");
    detail::require_dominant("C" + std::to_string(n), lambda);
    std::map<Weight, SU2Decomp> out;
    for (auto& mu : detail::interlacing_candidates(lambda, HalfInt(0))) {
        if (n > 2 && !is_dominant(root_system("C" + std::to_string(n - 1)), mu)) continue;
        auto cert = two_step_interlace(lambda, mu);
        if (!cert) continue;
        SU2Decomp acc{{0, 1}};
        auto& z = cert->z;
        for (std::size_t i = 0; i < z.size(); i += 2) {
            HalfInt d = i + 1 < z.size() ? z[i] - z[i + 1] : z[i];
            acc = su2_tensor(acc, SU2Decomp{{d.as_int(), 1}});
        }
        out[mu] = acc;
    }
    return out;
}

namespace detail {

inline Spin2Module spin_hom_module(const std::vector<HalfInt>& z) {
    Spin2Module acc{{HalfInt(0), 1}};
    for (std::size_t i = 0; i < z.size(); i += 2) {
        if (i + 1 < z.size()) acc = convolve(acc, spin2_B(z[i] - z[i + 1]));
        else acc = convolve(acc, spin2_A(z[i]));
    }
    return acc;
}

}  // namespace detail

// Spin(2n+1) -> Spin(2n-1) x Spin(2).
inline std::map<Weight, Spin2Module> branch_spin_odd(const Weight& lambda) {
    const std::size_t n = lambda.size();
    if (n < 2) throw DomainError("branch_spin_odd needs n >= 2");
    if (!lambda.is_congruent()) throw DomainError("Spin weights must be congruent mod 1");
    detail::require_dominant("B" + std::to_string(n), lambda);
    HalfInt base = HalfInt::from_twice(lambda[0].is_integer() ? 0 : 1);
    std::map<Weight, Spin2Module> out;
    for (auto& mu : detail::interlacing_candidates(lambda, base)) {
        if (!is_dominant(root_system("B" + std::to_string(n - 1)), mu)) continue;
        auto cert = two_step_interlace(lambda, mu);
        if (!cert) continue;
        out[mu] = detail::spin_hom_module(cert->z);
    }
    return out;
}

// Spin(2n) -> Spin(2n-2) x Spin(2). Keys keep the sign of the last entry of mu. The interlacing is read off |mu|;
// the bottom factor is the single weight sign(y_{n-1}) z_{2n-1}, not A(z_{2n-1}).
inline std::map<Weight, Spin2Module> branch_spin_even(const Weight& lambda_in) {
    const std::size_t n = lambda_in.size();
    if (n < 3) throw DomainError("branch_spin_even needs n >= 3");
    if (!lambda_in.is_congruent()) throw DomainError("Spin weights must be congruent mod 1");
    detail::require_dominant("D" + std::to_string(n), lambda_in);
    // the outer automorphism flipping x_n acts on the Spin(2) factor by negation
    const bool flipped = lambda_in[n - 1].twice < 0;
    Weight lambda = lambda_in;
    lambda[n - 1] = abs(lambda[n - 1]);
    HalfInt base = HalfInt::from_twice(lambda[0].is_integer() ? 0 : 1);
    const RootSystem& Dm = root_system("D" + std::to_string(n - 1));
    std::map<Weight, Spin2Module> out;
    for (auto& amu : detail::interlacing_candidates(lambda, base)) {
        auto cert = two_step_interlace(lambda, amu);
        if (!cert) continue;
        auto& z = cert->z;
        Spin2Module top{{HalfInt(0), 1}};
        for (std::size_t i = 0; i + 1 < z.size(); i += 2) top = convolve(top, spin2_B(z[i] - z[i + 1]));
        for (int s : {1, -1}) {
            Weight mu = amu;
            if (s < 0) {
                if (mu[n - 2].twice == 0) continue;
                mu[n - 2] = -mu[n - 2];
            }
            if (!is_dominant(Dm, mu)) continue;
            HalfInt bottom = s * z.back();
            if (flipped) bottom = -bottom;
            Spin2Module m;
            for (auto& [w, k] : top) m[flipped ? bottom - w : w + bottom] += k;
            out[mu] = m;
        }
    }
    return out;
}

namespace detail {

// One Gelfand-Zetlin step Spin(m) -> Spin(m-1).
inline std::vector<Weight> gz_step(int m, const Weight& x) {
    std::vector<Weight> out;
    const std::size_t n = x.size();
    HalfInt base = HalfInt::from_twice(x[0].is_integer() ? 0 : 1);
    if (m % 2) {
        // B_n -> D_n: x1 >= y1 >= x2 >= ... >= xn >= |yn|
        std::vector<HalfInt> lo(n), hi(n);
        for (std::size_t i = 0; i < n; ++i) {
            hi[i] = x[i];
            lo[i] = i + 1 < n ? x[i + 1] : base;
        }
        std::vector<Weight> raw;
        box(lo, hi, raw);
        for (auto& y : raw) {
            out.push_back(y);
            if (y[n - 1].twice != 0) {
                Weight f = y;
                f[n - 1] = -f[n - 1];
                out.push_back(f);
            }
        }
    } else {
        // D_n -> B_{n-1}: x1 >= y1 >= x2 >= ... >= y_{n-1} >= |xn|
        std::vector<HalfInt> lo(n - 1), hi(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            hi[i] = x[i];
            lo[i] = i + 2 < n ? x[i + 1] : abs(x[n - 1]);
        }
        box(lo, hi, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

inline std::string spin_label(int m) {
    if (m < 3) throw DomainError("Spin(m) needs m >= 3");
    return (m % 2 ? "B" : "D") + std::to_string(m / 2);
}

// Iterated one-step interlacing Spin(m) -> Spin(target_m); multiplicity counts GZ patterns.
inline std::map<Weight, std::int64_t> gz_chain(int m, const Weight& lambda, int target_m) {
    if (target_m > m || target_m < 3) throw DomainError("gz_chain target must satisfy 3 <= target <= m");
    if (static_cast<int>(lambda.size()) != m / 2) throw DomainError("weight length does not match Spin(m)");
    if (!lambda.is_congruent()) throw DomainError("Spin weights must be congruent mod 1");
    detail::require_dominant(spin_label(m), lambda);
    std::map<Weight, std::int64_t> cur{{lambda, 1}};
    for (int k = m; k > target_m; --k) {
        std::map<Weight, std::int64_t> next;
        for (auto& [w, c] : cur)
            for (auto& y : detail::gz_step(k, w)) next[y] += c;
        cur = std::move(next);
    }
    return cur;
}

// Weights of (m) x (n) of U(2) restricted to the diagonal torus of SU(3), as triples summing to 0.
inline std::vector<std::array<std::int64_t, 3>> u2_to_torus(std::int64_t m, std::int64_t n) {
    if (m < n) throw DomainError("u2_to_torus needs m >= n");
    std::vector<std::array<std::int64_t, 3>> out;
    for (std::int64_t j = 0; j <= m - n; ++j) out.push_back({-m - n, m - j, n + j});
    return out;
}

// (x - y) x (x, y, z, z, z, z) over x >= y >= z >= 0, x + y = k, all congruent mod 1.
inline std::vector<std::pair<std::int64_t, Weight>> restrict_e7_to_su2_spin12(std::int64_t k) {
    if (k < 0) throw DomainError("k must be >= 0");
    std::vector<std::pair<std::int64_t, Weight>> out;
    for (std::int64_t tx = k; tx <= 2 * k; ++tx) {
        std::int64_t ty = 2 * k - tx;
        if (ty > tx) continue;
        for (std::int64_t tz = ty; tz >= 0; tz -= 2) {
            Weight w = Weight::from_twice({tx, ty, tz, tz, tz, tz});
            if (!w.is_congruent()) continue;
            out.push_back({(tx - ty) / 2, w});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::int64_t su2_multiplicity(std::int64_t target, const std::vector<std::int64_t>& factors) {
    SU2Decomp acc{{0, 1}};
    for (auto f : factors) acc = su2_tensor(acc, SU2Decomp{{f, 1}});
    auto it = acc.find(target);
    return it == acc.end() ? 0 : it->second;
}

inline void check_f4_params(std::int64_t a, std::int64_t b) {
    if (b < 0 || a < b) throw DomainError("f4_to_spin9 needs a >= b >= 0");
}

inline Weight f4_omega(std::int64_t a, std::int64_t b) {
    check_f4_params(a, b);
    return Weight::from_twice({2 * a + b, b, b, b});
}

// Multiplicity of the Spin(9) irrep (w) in the F4 irrep of highest weight (a-b)w4 + b w3.
inline std::int64_t f4_to_spin9(std::int64_t a, std::int64_t b, const Weight& w) {
    check_f4_params(a, b);
    if (w.size() != 4 || !w.is_congruent()) throw DomainError("B4 weight must have four congruent entries");
    detail::require_dominant("B4", w);
    HalfInt s = w[0] + w[1];
    if (s > HalfInt(a + b)) return 0;
    HalfInt d = w[0] - w[1];
    return su2_multiplicity(a - b, {(HalfInt(a + b) - s).as_int(), d.as_int(), w[3].twice});
}

// Full table over the box w1 + w2 <= a + b.
inline std::map<Weight, std::int64_t> f4_to_spin9_table(std::int64_t a, std::int64_t b) {
    check_f4_params(a, b);
    std::map<Weight, std::int64_t> out;
    const std::int64_t top = 2 * (a + b);
    for (int parity : {0, 1})
        for (std::int64_t t1 = parity; t1 <= top; t1 += 2)
            for (std::int64_t t2 = parity; t2 <= t1 && t1 + t2 <= top; t2 += 2)
                for (std::int64_t t3 = parity; t3 <= t2; t3 += 2)
                    for (std::int64_t t4 = parity; t4 <= t3; t4 += 2) {
                        Weight w = Weight::from_twice({t1, t2, t3, t4});
                        if (auto k = f4_to_spin9(a, b, w)) out[w] = k;
                    }
    return out;
}

}  // namespace quatheta
