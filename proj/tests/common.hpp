#pragma once

#include <quatheta/halfint.hpp>

#include "oracles.hpp"

namespace tst {

inline oracle::V twice(const quatheta::Weight& w) {
    oracle::V v;
    for (auto& x : w.c) v.push_back(x.twice);
    return v;
}

inline quatheta::Weight undouble(const oracle::V& v) { return quatheta::Weight::from_twice({v.begin(), v.end()}); }

inline quatheta::Weight W(std::initializer_list<std::int64_t> v) { return quatheta::Weight::from_ints(v); }

// doubled coordinates
inline quatheta::Weight W2(std::initializer_list<std::int64_t> v) { return quatheta::Weight::from_twice(v); }

inline quatheta::HalfInt h2(std::int64_t t) { return quatheta::HalfInt::from_twice(t); }

}  // namespace tst
