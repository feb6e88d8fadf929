#pragma once

// Naive reference implementations used as independent oracles in tests.
// Nothing here calls into the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Img = std::vector<int>;

inline Img mul(const Img& p, const Img& q) {
    Img r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i])];
    return r;
}

inline Img inv(const Img& p) {
    Img r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return r;
}

inline Img ident(int n) {
    Img r(static_cast<std::size_t>(n));
    std::iota(r.begin(), r.end(), 0);
    return r;
}

inline std::vector<Img> all_perms(int n) {
    std::vector<Img> out;
    Img p = ident(n);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Closure by repeated multiplication until nothing new appears.
inline std::set<Img> closure(const std::vector<Img>& gens, int n) {
    std::set<Img> s{ident(n)};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Img> cur(s.begin(), s.end());
        for (const auto& a : cur)
            for (const auto& g : gens)
                if (s.insert(mul(a, g)).second) grew = true;
    }
    return s;
}

inline int count_cycles(const Img& p) {
    std::vector<char> seen(p.size(), 0);
    int c = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        ++c;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) seen[j] = 1;
    }
    return c;
}

inline long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace oracle
