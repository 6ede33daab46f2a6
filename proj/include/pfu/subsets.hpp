#pragma once

#include <array>

#include "pfu/graph.hpp"

namespace pfu {

/// Visits every subset of universe with exactly `size` members in
/// lexicographic order of their ascending member sequences. The visitor
/// returns true to stop; the function returns whether it was stopped.
template <typename Visit>
bool for_each_subset_of_size(VertexSet universe, int size, Visit&& visit)
{
    std::array<int, max_order> pool{};
    int count = 0;
    for (int v : universe) pool[count++] = v;
    if (size < 0 || size > count) return false;
    if (size == 0) return visit(VertexSet{});

    std::array<int, max_order> idx{};
    for (int i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
        VertexSet s;
        for (int i = 0; i < size; ++i) s.insert(pool[idx[i]]);
        if (visit(s)) return true;
        int i = size - 1;
        while (i >= 0 && idx[i] == count - size + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace pfu
