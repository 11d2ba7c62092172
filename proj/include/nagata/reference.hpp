#pragma once

#include <vector>

#include "nagata/localization.hpp"

namespace nagata {

/// Avoidance by enumeration: p divides no S-member whose exponents sum to
/// at most max_total. Independent of the associate scan used by avoids().
template <Ring R>
bool brute_force_avoids(const R& p, const GeneratedSubmonoid<R>& S, unsigned max_total = 8) {
    std::vector<unsigned> e(S.rank(), 0);
    while (true) {
        if (divides(p, S.member(e).value)) return false;
        std::size_t i = 0;
        while (i < e.size()) {
            unsigned total = 0;
            for (unsigned x : e) total += x;
            if (total < max_total) {
                ++e[i];
                break;
            }
            e[i] = 0;
            ++i;
        }
        if (i == e.size()) return true;
    }
}

} // namespace nagata
