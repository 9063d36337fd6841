#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "rootdata.hpp"

namespace quatheta {

struct Irrep {
    std::string group;
    Weight hw;
    friend auto operator<=>(const Irrep&, const Irrep&) = default;
    friend bool operator==(const Irrep&, const Irrep&) = default;
};

using CharMultiset = std::map<Weight, std::int64_t>;

struct IsoDecomp {
    std::string group;
    std::map<Weight, std::int64_t> terms;

    friend bool operator==(const IsoDecomp&, const IsoDecomp&) = default;
    std::int64_t mult(const Weight& hw) const {
        auto it = terms.find(hw);
        return it == terms.end() ? 0 : it->second;
    }
};

inline std::atomic<std::int64_t>& dim_cap_override() {
    static std::atomic<std::int64_t> v{0};
    return v;
}

// Largest irrep dimension the character oracle will expand.
inline std::int64_t dim_cap() {
    if (auto v = dim_cap_override().load(); v > 0) return v;
    if (const char* env = std::getenv("QUATHETA_DIM_CAP")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 20000;
}

inline std::int64_t weyl_dim(const RootSystem& R, const Weight& hw) {
    if (hw.size() != R.dim) throw DomainError("weight has wrong length for " + R.label);
    if (!is_dominant(R, hw)) throw DomainError("highest weight not dominant: " + to_string(hw));
    Weight lr = hw + R.rho;
    __int128 num = 1, den = 1;
    auto g128 = [](__int128 a, __int128 b) {
        if (a < 0) a = -a;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    };
    for (auto& a : R.positive_roots) {
        num *= dot4(lr, a);
        den *= dot4(R.rho, a);
        __int128 g = g128(num, den);
        num /= g;
        den /= g;
        if (num > (__int128(1) << 100)) throw ResourceError("dimension overflow");
    }
    if (den != 1) throw InternalError("Weyl dimension not integral");
    return static_cast<std::int64_t>(num);
}

inline std::int64_t weyl_dim(const Irrep& r) { return weyl_dim(root_system(r.group), r.hw); }

namespace detail {

inline std::int64_t height(const RootSystem& R, const Weight& w) { return dot4(w, R.rho); }

// Dominant weights below hw, via descent by positive roots.
inline std::vector<Weight> dominant_weights_below(const RootSystem& R, const Weight& hw) {
    std::set<Weight> seen{hw};
    std::vector<Weight> frontier{hw};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (auto& m : frontier)
            for (auto& a : R.positive_roots) {
                Weight n = m - a;
                if (is_dominant(R, n) && seen.insert(n).second) next.push_back(n);
            }
        frontier = std::move(next);
    }
    std::vector<Weight> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [&](const Weight& x, const Weight& y) {
        auto hx = height(R, x), hy = height(R, y);
        return hx != hy ? hx > hy : x > y;
    });
    return out;
}

inline std::shared_ptr<const CharMultiset> freudenthal(const RootSystem& R, const Weight& hw) {
    auto order = dominant_weights_below(R, hw);
    auto out = std::make_shared<CharMultiset>();
    CharMultiset& m = *out;
    const Weight lr = hw + R.rho;
    const std::int64_t top = dot4(lr, lr);
    for (auto& mu : order) {
        if (mu == hw) {
            m[mu] = 1;
            continue;
        }
        std::int64_t sum = 0;
        for (auto& a : R.positive_roots) {
            Weight v = mu + a;
            while (true) {
                auto it = m.find(dominant_representative(v, R));
                if (it == m.end()) break;
                sum += it->second * dot4(v, a);
                v += a;
            }
        }
        Weight mr = mu + R.rho;
        std::int64_t den = top - dot4(mr, mr);
        if (den <= 0 || (2 * sum) % den) throw InternalError("Freudenthal recursion failed at " + to_string(mu));
        std::int64_t v = 2 * sum / den;
        if (v) m[mu] = v;
    }
    return out;
}

class CharCache {
public:
    static CharCache& instance() {
        static CharCache c;
        return c;
    }

    std::shared_ptr<const CharMultiset> get(const RootSystem& R, const Weight& hw) {
        std::string key = R.label + to_string(hw);
        {
            std::shared_lock lock(mu_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        auto value = freudenthal(R, hw);
        std::unique_lock lock(mu_);
        return table_.emplace(key, value).first->second;
    }

private:
    std::shared_mutex mu_;
    std::map<std::string, std::shared_ptr<const CharMultiset>> table_;
};

inline void check_expandable(const RootSystem& R, const Weight& hw) {
    if (is_e_series(R.label)) throw ResourceError("characters of E-series groups are not expanded: " + R.label);
    auto d = weyl_dim(R, hw);
    if (d > dim_cap()) throw ResourceError("dimension " + std::to_string(d) + " exceeds cap " + std::to_string(dim_cap()));
}

}  // namespace detail

// Multiplicities of the dominant weights only.
inline std::shared_ptr<const CharMultiset> dominant_char(const RootSystem& R, const Weight& hw) {
    detail::check_expandable(R, hw);
    return detail::CharCache::instance().get(R, hw);
}

inline CharMultiset char_weights(const Irrep& r) {
    const RootSystem& R = root_system(r.group);
    auto dom = dominant_char(R, r.hw);
    CharMultiset full;
    for (auto& [mu, k] : *dom)
        for (auto& w : weyl_orbit(R, mu)) full[w] = k;
    return full;
}

// Strip irreducible characters off a W-invariant multiset, highest first (ordered by height, then lexicographically).
inline IsoDecomp decompose(const RootSystem& R, const CharMultiset& ch) {
    using Key = std::pair<std::int64_t, Weight>;
    std::map<Key, std::int64_t> rem;
    for (auto& [w, k] : ch)
        if (k && is_dominant(R, w)) rem[{detail::height(R, w), w}] += k;
    IsoDecomp out{R.label, {}};
    while (!rem.empty()) {
        auto it = std::prev(rem.end());
        if (it->second == 0) {
            rem.erase(it);
            continue;
        }
        if (it->second < 0) throw InternalError("negative multiplicity while stripping at " + to_string(it->first.second));
        Weight top = it->first.second;
        std::int64_t c = it->second;
        out.terms[top] += c;
        for (auto& [mu, k] : *dominant_char(R, top)) {
            auto jt = rem.find({detail::height(R, mu), mu});
            if (jt == rem.end()) throw InternalError("character not contained while stripping at " + to_string(mu));
            jt->second -= c * k;
            if (jt->second == 0) rem.erase(jt);
        }
    }
    return out;
}

inline std::int64_t total_dim(const IsoDecomp& d) {
    const RootSystem& R = root_system(d.group);
    std::int64_t s = 0;
    for (auto& [hw, k] : d.terms) s += k * weyl_dim(R, hw);
    return s;
}

inline IsoDecomp tensor_decompose(const Irrep& r1, const Irrep& r2) {
    if (r1.group != r2.group) throw DomainError("tensor product of irreps of different groups");
    const RootSystem& R = root_system(r1.group);
    auto d1 = weyl_dim(r1), d2 = weyl_dim(r2);
    if (d1 * d2 > dim_cap()) throw ResourceError("tensor product dimension exceeds cap");
    auto c1 = char_weights(r1);
    auto c2 = char_weights(r2);
    CharMultiset prod;
    for (auto& [w1, k1] : c1)
        for (auto& [w2, k2] : c2) {
            Weight w = w1 + w2;
            if (is_dominant(R, w)) prod[w] += k1 * k2;
        }
    return decompose(R, prod);
}

struct EmbeddingMap {
    std::string name;
    std::string source;
    std::string target;
    std::function<Weight(const Weight&)> map;
};

// Coordinate-level subgroup inclusions; n is the rank of the source group.
inline EmbeddingMap make_embedding(const std::string& kind, int n = 0) {
    auto id = [](const Weight& w) { return w; };
    auto rank = [](char f, int r) { return std::string(1, f) + std::to_string(r); };
    if (kind == "sp") {
        if (n < 2) throw DomainError("sp embedding needs rank >= 2");
        return {kind, rank('C', n), (n == 2 ? std::string("A1") : rank('C', n - 1)) + "xA1", id};
    }
    if (kind == "spin-odd") {
        if (n < 2) throw DomainError("spin-odd embedding needs rank >= 2");
        return {kind, rank('B', n), rank('B', n - 1) + "xT1", id};
    }
    if (kind == "spin-even") {
        if (n < 3) throw DomainError("spin-even embedding needs rank >= 3");
        return {kind, rank('D', n), rank('D', n - 1) + "xT1", id};
    }
    if (kind == "gz-odd") {
        if (n < 2) throw DomainError("gz-odd embedding needs rank >= 2");
        return {kind, rank('B', n), rank('D', n), id};
    }
    if (kind == "gz-even") {
        if (n < 2) throw DomainError("gz-even embedding needs rank >= 2");
        return {kind, rank('D', n), rank('B', n - 1), [](const Weight& w) { return w.slice(0, w.size() - 1); }};
    }
    if (kind == "f4-b4") return {kind, "F4", "B4", id};
    if (kind == "sp3-sp1") return {kind, "C3", "A1xA1xA1", id};
    throw DomainError("unknown embedding: " + kind);
}

inline IsoDecomp restrict(const Irrep& r, const EmbeddingMap& e) {
    if (r.group != e.source) throw DomainError("embedding source " + e.source + " does not match " + r.group);
    const RootSystem& T = root_system(e.target);
    CharMultiset pushed;
    for (auto& [w, k] : char_weights(r)) {
        Weight v = e.map(w);
        if (v.size() != T.dim || !in_weight_lattice(T, v))
            throw InternalError("embedding " + e.name + " sends " + to_string(w) + " off the target lattice");
        if (is_dominant(T, v)) pushed[v] += k;
    }
    return decompose(T, pushed);
}

}  // namespace quatheta
