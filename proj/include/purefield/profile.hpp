#ifndef PUREFIELD_PROFILE_HPP
#define PUREFIELD_PROFILE_HPP

#include <map>
#include <vector>

#include "purefield/arith.hpp"

namespace purefield {

// For one prime p = p_i with r_i >= 1 and one exponent index m:
// k is the largest value <= d_i with m >= n - n/p^k, j = m - (n - n/p^k),
// and n_im = n / p^k.
struct ProfileEntry {
    unsigned long k = 0;
    unsigned long j = 0;
    unsigned long n_im = 0;
};

struct ExponentProfile {
    std::vector<Int> s_primes;                     // primes with r_i >= 1, ascending
    std::map<Int, unsigned long> d;                // p -> min(r_i, s_i)
    std::map<Int, std::vector<ProfileEntry>> rows; // p -> entries for m = 0..n-1

    const ProfileEntry& entry(const Int& p, unsigned long m) const {
        return rows.at(p).at(m);
    }

    // S_m = primes of S whose k_{i,m} is >= 1.
    std::vector<Int> s_m(unsigned long m) const {
        std::vector<Int> out;
        for (const Int& p : s_primes)
            if (rows.at(p)[m].k >= 1)
                out.push_back(p);
        return out;
    }
};

} // namespace purefield

#endif
