#pragma once

#include "dhb/compose.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace dhb::testing {

inline Perm random_perm(std::size_t n, std::mt19937_64& rng) {
    std::vector<point> img(n);
    std::iota(img.begin(), img.end(), point{0});
    std::shuffle(img.begin(), img.end(), rng);
    return Perm(img);
}

inline std::vector<Perm> all_perms(std::size_t n) {
    std::vector<point> img(n);
    std::iota(img.begin(), img.end(), point{0});
    std::vector<Perm> out;
    do out.emplace_back(img);
    while (std::next_permutation(img.begin(), img.end()));
    return out;
}

inline std::vector<Perm> even_perms(std::size_t n) {
    auto all = all_perms(n);
    std::erase_if(all, [](const Perm& p) { return parity(p) != 1; });
    return all;
}

// Class index of every even permutation under conjugation by A_n, by brute force.
inline std::map<Perm, int> an_classes(std::size_t n) {
    auto evens = even_perms(n);
    std::map<Perm, int> cls;
    int next = 0;
    for (const auto& p : evens) {
        if (cls.count(p)) continue;
        for (const auto& c : evens) cls.emplace(compose(compose(inverse(c), p), c), next);
        ++next;
    }
    return cls;
}

// The same map with its points renamed by r: point i becomes i^r.
inline HurwitzMap relabel(const HurwitzMap& m, const Perm& r) {
    Perm ri = inverse(r);
    auto conj = [&](const Perm& g) { return compose(compose(ri, g), r); };
    return HurwitzMap(conj(m.x()), conj(m.y()), conj(m.t()));
}

inline std::vector<Handle> symmetric_handles(const HurwitzMap& m, int k) {
    auto hs = find_handles(m, k);
    std::erase_if(hs, [](const Handle& h) { return !h.t_symmetric; });
    return hs;
}

}  // namespace dhb::testing
