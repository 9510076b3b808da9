#pragma once

#include "okseed/rational.hpp"

#include <compare>
#include <vector>

namespace okseed {

// Reversed lexicographic order on Z^N: the last differing coordinate decides.
template <class T>
std::strong_ordering revlex_compare(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw InvalidArgument("revlex_compare: dimension mismatch");
    for (std::size_t k = a.size(); k-- > 0;) {
        if (a[k] < b[k]) return std::strong_ordering::less;
        if (b[k] < a[k]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

template <class T>
bool revlex_positive(const std::vector<T>& a) {
    return revlex_compare(a, std::vector<T>(a.size(), T(0))) > 0;
}

}  // namespace okseed
