#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "branchrules.hpp"

namespace quatheta {

enum class Quotient { A, sigma };

struct QuatModule {
    std::string G;
    std::vector<Weight> wm;  // one highest weight per M factor
    std::int64_t s = 2;
    Quotient quotient = Quotient::A;

    friend auto operator<=>(const QuatModule&, const QuatModule&) = default;
    friend bool operator==(const QuatModule&, const QuatModule&) = default;
};

inline Weight concat_all(const std::vector<Weight>& ws) {
    Weight r;
    for (auto& w : ws) r = r.concat(w);
    return r;
}

inline std::vector<Weight> split_factors(const QuaternionicStructure& q, const Weight& w) {
    std::vector<Weight> out;
    const RootSystem& M = root_system(q.m_system);
    for (auto& p : M.parts) out.push_back(w.slice(p.offset, p.dim));
    return out;
}

inline void validate(const QuatModule& m) {
    auto q = quaternionic_structure(m.G);
    const RootSystem& M = root_system(q.m_system);
    if (m.s < 2) throw DomainError("s must be >= 2");
    if (m.wm.size() != M.parts.size()) throw DomainError("expected one M-weight per factor of " + q.m_system);
    for (std::size_t i = 0; i < m.wm.size(); ++i) {
        auto& p = M.parts[i];
        if (m.wm[i].size() != p.dim) throw DomainError("M-weight has wrong length for " + p.label);
        if (!is_dominant(root_system(p.label), m.wm[i]) || !in_weight_lattice(root_system(p.label), m.wm[i]))
            throw DomainError("M-weight not dominant integral: " + to_string(m.wm[i]));
    }
}

namespace detail {

inline CharMultiset scale(const CharMultiset& c, std::int64_t j) {
    CharMultiset out;
    for (auto& [w, k] : c) out[j * w] += k;
    return out;
}

inline CharMultiset multiply(const CharMultiset& a, const CharMultiset& b) {
    CharMultiset out;
    for (auto& [x, p] : a)
        for (auto& [y, q] : b) out[x + y] += p * q;
    return out;
}

inline std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<std::int64_t>(r);
}

}  // namespace detail

// Full weight multiset of S^k(V) via k h_k = sum_j p_j h_{k-j}.
inline CharMultiset sym_power_char(const Irrep& v, std::int64_t k) {
    if (k < 0) throw DomainError("k must be >= 0");
    const RootSystem& R = root_system(v.group);
    auto d = weyl_dim(R, v.hw);
    if (detail::binom(d + k - 1, k) > dim_cap()) throw ResourceError("symmetric power dimension exceeds cap");
    CharMultiset base = char_weights(v);
    std::vector<CharMultiset> h{{{Weight(R.dim), 1}}};
    for (std::int64_t n = 1; n <= k; ++n) {
        CharMultiset acc;
        for (std::int64_t j = 1; j <= n; ++j)
            for (auto& [w, c] : detail::multiply(detail::scale(base, j), h[n - j])) acc[w] += c;
        CharMultiset hn;
        for (auto& [w, c] : acc) {
            if (c % n) throw InternalError("power-sum recursion not integral");
            if (c) hn[w] = c / n;
        }
        h.push_back(std::move(hn));
    }
    return h[k];
}

inline IsoDecomp sym_power(const Irrep& v, std::int64_t k) {
    return decompose(root_system(v.group), sym_power_char(v, k));
}

struct KTypeLevel {
    std::int64_t k = 0;
    std::int64_t su0 = 0;
    IsoDecomp tau;
};

struct KTypeLedger {
    QuatModule module;
    std::int64_t truncation = 0;
    std::vector<KTypeLevel> levels;
};

inline KTypeLedger ktypes(const QuatModule& m, std::int64_t kmax) {
    if (kmax < 0) throw DomainError("kmax must be >= 0");
    validate(m);
    auto q = quaternionic_structure(m.G);
    const RootSystem& M = root_system(q.m_system);
    Weight wm = concat_all(m.wm);
    KTypeLedger L{m, kmax, {}};
    L.levels.push_back({0, m.s - 2, IsoDecomp{q.m_system, {{wm, 1}}}});
    if (kmax == 0) return L;
    auto wchar = char_weights({q.m_system, wm});
    for (std::int64_t k = 1; k <= kmax; ++k) {
        auto sk = sym_power_char({q.m_system, q.vm_hw}, k);
        CharMultiset prod;
        for (auto& [x, a] : sk)
            for (auto& [y, b] : wchar) {
                Weight w = x + y;
                if (is_dominant(M, w)) prod[w] += a * b;
            }
        L.levels.push_back({k, m.s + k - 2, decompose(M, prod)});
    }
    return L;
}

inline std::pair<std::int64_t, std::vector<Weight>> minimal_type(const QuatModule& m) {
    validate(m);
    return {m.s - 2, m.wm};
}

struct InfChar {
    std::string system;
    Weight value;
    friend bool operator==(const InfChar&, const InfChar&) = default;
};

inline InfChar canonical_infchar(const std::string& system, const Weight& w) {
    return {system, dominant_representative(w, root_system(system))};
}

namespace detail {

// Solves a square system over Q; throws if singular.
inline std::vector<Rational> solve(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t i = 0; i < n; ++i) A[i].push_back(b[i]);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && A[piv][col].numerator() == 0) ++piv;
        if (piv == n) throw InternalError("singular system");
        std::swap(A[col], A[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || A[i][col].numerator() == 0) continue;
            Rational f = A[i][col] / A[col][col];
            for (std::size_t j = col; j <= n; ++j) A[i][j] -= f * A[col][j];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = A[i][n] / A[i][i];
    return x;
}

// The weight of G that restricts to the given M-weight and is orthogonal to alpha0.
inline std::vector<Rational> lift_m_weight(const QuaternionicStructure& q, const std::vector<Weight>& wm) {
    const RootSystem& G = root_system(q.g_system);
    const std::size_t r = G.rank();
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (std::size_t f = 0; f < q.m_factors.size(); ++f) {
        auto labels = dynkin_labels(root_system(q.m_factors[f].label), wm[f]);
        for (std::size_t j = 0; j < labels.size(); ++j) {
            const Weight& beta = G.simple_roots[q.m_factors[f].g_simple[j] - 1];
            std::vector<Rational> row(r);
            for (std::size_t i = 0; i < r; ++i) row[i] = Rational(2 * dot4(G.simple_roots[i], beta), dot4(beta, beta));
            A.push_back(row);
            b.push_back(labels[j]);
        }
    }
    std::vector<Rational> row(r);
    for (std::size_t i = 0; i < r; ++i) row[i] = dot4(G.simple_roots[i], q.alpha0);
    A.push_back(row);
    b.push_back(0);
    auto t = solve(A, b);
    std::vector<Rational> mu(G.dim);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < G.dim; ++k) mu[k] += t[i] * Rational(G.simple_roots[i][k].twice, 2);
    return mu;
}

}  // namespace detail

// Dominant representative of mu + s alpha0 / 2 + rho.
inline InfChar inf_char(const QuatModule& m) {
    validate(m);
    auto q = quaternionic_structure(m.G);
    const RootSystem& G = root_system(q.g_system);
    auto mu = detail::lift_m_weight(q, m.wm);
    Weight out(G.dim);
    for (std::size_t k = 0; k < G.dim; ++k) {
        Rational v = mu[k] + Rational(m.s * q.alpha0[k].twice, 4) + Rational(G.rho[k].twice, 2);
        Rational tw = v * Rational(2);
        if (tw.denominator() != 1) throw DomainError("infinitesimal character is not half-integral");
        out[k] = HalfInt::from_twice(tw.numerator());
    }
    return canonical_infchar(q.g_system, out);
}

// Spin(4,3) closed form: (m - s + 5, -m - s + 3, n + 1) / 2.
inline Weight inf_char_b3_formula(std::int64_t m, std::int64_t n, std::int64_t s) {
    return Weight::from_twice({m - s + 5, -m - s + 3, n + 1});
}

struct FilteredPiece {
    std::int64_t level = 0;
    QuatModule module;
};

// Graded pieces of the restriction of a Spin(4,4) module to Spin(4,3), levels 0..kmax.
inline std::vector<FilteredPiece> restrict_filtration(const QuatModule& m, std::int64_t kmax) {
    if (m.G != "Spin(4,4)") throw DomainError("restrict_filtration needs a Spin(4,4) module");
    validate(m);
    std::int64_t p = m.wm[0][0].as_int(), a = m.wm[1][0].as_int(), b = m.wm[2][0].as_int();
    std::vector<FilteredPiece> out;
    for (std::int64_t k = 0; k <= kmax; ++k)
        for (auto x : clebsch_gordan(k, p))
            for (auto j : clebsch_gordan(a, b))
                out.push_back({k, QuatModule{"Spin(4,3)", {Weight{HalfInt(x)}, Weight{HalfInt(j)}}, m.s + k, Quotient::A}});
    return out;
}

struct SurjectivityReport {
    std::int64_t rank = 0;
    std::int64_t domain_dim = 0;
    std::int64_t codomain_dim = 0;
    bool surjective = false;
};

namespace detail {

using BigInt = boost::multiprecision::cpp_int;

inline std::int64_t integer_rank(std::vector<std::vector<BigInt>> A) {
    if (A.empty()) return 0;
    const std::size_t rows = A.size(), cols = A[0].size();
    std::size_t r = 0;
    BigInt prev = 1;
    // fraction-free elimination
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && A[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(A[r], A[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) A[i][j] = (A[r][c] * A[i][j] - A[i][c] * A[r][j]) / prev;
            A[i][c] = 0;
        }
        prev = A[r][c];
        ++r;
    }
    return static_cast<std::int64_t>(r);
}

}  // namespace detail

// Matrix of (3) x (n) -> (2) x (1) x (n) -> (2) x (n+1) on monomial bases.
inline std::vector<std::vector<std::int64_t>> surjectivity_matrix(std::int64_t n) {
    if (n < 0) throw DomainError("n must be >= 0");
    // an element of (2) x (1): list of (power of x in the quadratic, power of x in the linear form, coefficient)
    using Term = std::array<std::int64_t, 3>;
    const std::vector<std::vector<Term>> basis = {
        {{0, 0, 1}},
        {{1, 0, 2}, {0, 1, 1}},
        {{1, 1, 2}, {2, 0, 1}},
        {{2, 1, 1}},
    };
    const std::int64_t cod = 3 * (n + 2);
    std::vector<std::vector<std::int64_t>> M;
    for (auto& v : basis)
        for (std::int64_t e = 0; e <= n; ++e) {
            std::vector<std::int64_t> row(cod, 0);
            for (auto& [qx, lx, c] : v) row[qx * (n + 2) + (lx + e)] += c;
            M.push_back(row);
        }
    return M;
}

inline SurjectivityReport check_lemma_surjectivity(std::int64_t n) {
    auto M = surjectivity_matrix(n);
    std::vector<std::vector<detail::BigInt>> A;
    for (auto& row : M) A.emplace_back(row.begin(), row.end());
    SurjectivityReport r;
    r.rank = detail::integer_rank(A);
    r.domain_dim = 4 * (n + 1);
    r.codomain_dim = 3 * (n + 2);
    r.surjective = r.rank == r.codomain_dim;
    return r;
}

}  // namespace quatheta
