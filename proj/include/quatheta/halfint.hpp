#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace quatheta {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// A number in (1/2)Z, stored as twice its value.
struct HalfInt {
    std::int64_t twice = 0;

    constexpr HalfInt() = default;
    constexpr HalfInt(std::int64_t n) : twice(2 * n) {}

    static constexpr HalfInt from_twice(std::int64_t t) {
        HalfInt h;
        h.twice = t;
        return h;
    }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    // Only meaningful when is_integer().
    constexpr std::int64_t as_int() const { return twice / 2; }

    constexpr HalfInt operator-() const { return from_twice(-twice); }
    constexpr HalfInt& operator+=(HalfInt o) { twice += o.twice; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { twice -= o.twice; return *this; }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice + b.twice); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice - b.twice); }
    friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return from_twice(k * a.twice); }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
    friend constexpr bool operator==(HalfInt, HalfInt) = default;
};

constexpr HalfInt abs(HalfInt h) { return h.twice < 0 ? -h : h; }

// True when a and b differ by an integer.
constexpr bool congruent(HalfInt a, HalfInt b) { return (a.twice - b.twice) % 2 == 0; }

inline std::string to_string(HalfInt h) {
    if (h.is_integer()) return std::to_string(h.as_int());
    return std::to_string(h.twice) + "/2";
}

// Accepts "3", "-2", "5/2", "-1/2", "1.5".
inline HalfInt parse_halfint(const std::string& s) {
    auto fail = [&] { throw DomainError("not a half-integer: '" + s + "'"); };
    if (s.empty()) fail();
    std::size_t pos = 0;
    try {
        if (auto slash = s.find('/'); slash != std::string::npos) {
            long long num = std::stoll(s.substr(0, slash), &pos);
            if (pos != slash || s.substr(slash + 1) != "2") fail();
            return HalfInt::from_twice(num);
        }
        if (auto dot = s.find('.'); dot != std::string::npos) {
            std::string frac = s.substr(dot + 1);
            std::string whole = s.substr(0, dot);
            bool neg = !whole.empty() && whole[0] == '-';
            long long w = (whole.empty() || whole == "-") ? 0 : std::stoll(whole, &pos);
            if (frac.find_first_not_of('0') == std::string::npos) return HalfInt(w);
            if (frac.size() < 1 || frac[0] != '5' || frac.find_first_not_of('0', 1) != std::string::npos) fail();
            long long t = 2 * std::llabs(w) + 1;
            return HalfInt::from_twice(neg ? -t : t);
        }
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) fail();
        return HalfInt(v);
    } catch (const std::logic_error&) {
        fail();
    }
    return {};
}

// Coordinates of a weight in the epsilon basis of its ambient space.
struct Weight {
    std::vector<HalfInt> c;

    Weight() = default;
    explicit Weight(std::size_t n) : c(n) {}
    Weight(std::initializer_list<HalfInt> l) : c(l) {}
    explicit Weight(std::vector<HalfInt> v) : c(std::move(v)) {}

    static Weight from_twice(const std::vector<std::int64_t>& t) {
        Weight w(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) w.c[i] = HalfInt::from_twice(t[i]);
        return w;
    }
    static Weight from_ints(const std::vector<std::int64_t>& v) {
        Weight w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w.c[i] = HalfInt(v[i]);
        return w;
    }

    std::size_t size() const { return c.size(); }
    HalfInt& operator[](std::size_t i) { return c[i]; }
    HalfInt operator[](std::size_t i) const { return c[i]; }

    Weight& operator+=(const Weight& o) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(Weight a) {
        for (auto& x : a.c) x = -x;
        return a;
    }
    friend Weight operator*(std::int64_t k, Weight a) {
        for (auto& x : a.c) x = k * x;
        return a;
    }
    friend auto operator<=>(const Weight&, const Weight&) = default;
    friend bool operator==(const Weight&, const Weight&) = default;

    bool is_integral() const {
        for (auto x : c)
            if (!x.is_integer()) return false;
        return true;
    }
    // All coordinates in Z, or all in Z+1/2.
    bool is_congruent() const {
        for (auto x : c)
            if (!congruent(x, c.front())) return false;
        return true;
    }

    Weight slice(std::size_t from, std::size_t len) const {
        return Weight(std::vector<HalfInt>(c.begin() + from, c.begin() + from + len));
    }
    Weight concat(const Weight& o) const {
        Weight r = *this;
        r.c.insert(r.c.end(), o.c.begin(), o.c.end());
        return r;
    }
};

// Four times the standard inner product, so the result is an exact integer.
inline std::int64_t dot4(const Weight& a, const Weight& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a.c[i].twice * b.c[i].twice;
    return s;
}

inline std::string to_string(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += to_string(w[i]);
    }
    return s + ")";
}

inline Weight parse_weight(const std::string& s) {
    Weight w;
    std::size_t start = 0;
    std::string body = s;
    if (!body.empty() && (body.front() == '(' || body.front() == '[')) body = body.substr(1);
    if (!body.empty() && (body.back() == ')' || body.back() == ']')) body.pop_back();
    if (body.empty()) return w;
    while (true) {
        auto comma = body.find(',', start);
        std::string item = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        while (!item.empty() && item.front() == ' ') item.erase(item.begin());
        while (!item.empty() && item.back() == ' ') item.pop_back();
        w.c.push_back(parse_halfint(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return w;
}

}  // namespace quatheta
