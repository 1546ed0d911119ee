#include "tec/interval_overlap.hpp"

#include <algorithm>
#include <numeric>

namespace tec {

PerturbKey perturb_key(const Interval& iv, End end) {
    if (end == End::Left) return {iv.lo, -1, iv.length(), iv.seq};
    return {iv.hi, +1, -iv.length(), iv.seq};
}

bool overlaps(const Interval& a, const Interval& b) {
    // a.lo <= b.lo <= a.hi <= b.hi or the same with roles swapped,
    // all comparisons in the perturbed order
    const Interval* p = &a;
    const Interval* q = &b;
    if (perturb_key(b, End::Left) < perturb_key(a, End::Left)) std::swap(p, q);
    return perturb_key(*q, End::Left) < perturb_key(*p, End::Right) &&
           perturb_key(*p, End::Right) < perturb_key(*q, End::Right);
}

std::vector<std::pair<int, int>> spanning_forest(const std::vector<Interval>& ivs) {
    const int k = static_cast<int>(ivs.size());
    std::vector<std::pair<int, int>> edges;
    if (k == 0) return edges;
    edges.reserve(2 * static_cast<size_t>(k));

    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> stack;

    // Immediate right neighbors: sweep by descending left endpoint. The stack
    // keeps candidates with both endpoints increasing from top to bottom.
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return perturb_key(ivs[y], End::Left) < perturb_key(ivs[x], End::Left);
    });
    for (int i : order) {
        PerturbKey r = perturb_key(ivs[i], End::Right);
        while (!stack.empty() && r > perturb_key(ivs[stack.back()], End::Right)) stack.pop_back();
        if (!stack.empty() && r > perturb_key(ivs[stack.back()], End::Left))
            edges.emplace_back(i, stack.back());
        stack.push_back(i);
    }
    stack.clear();

    // Immediate left neighbors: symmetric sweep by ascending right endpoint.
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return perturb_key(ivs[x], End::Right) < perturb_key(ivs[y], End::Right);
    });
    for (int i : order) {
        PerturbKey l = perturb_key(ivs[i], End::Left);
        while (!stack.empty() && l < perturb_key(ivs[stack.back()], End::Left)) stack.pop_back();
        if (!stack.empty() && l < perturb_key(ivs[stack.back()], End::Right))
            edges.emplace_back(i, stack.back());
        stack.push_back(i);
    }
    return edges;
}

std::vector<int> components(const std::vector<Interval>& ivs) {
    const int k = static_cast<int>(ivs.size());
    std::vector<int> root(k);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[x] != x) {
            root[x] = root[root[x]];
            x = root[x];
        }
        return x;
    };
    for (auto [a, b] : spanning_forest(ivs)) {
        int ra = find(a), rb = find(b);
        if (ra != rb) root[ra] = rb;
    }
    std::vector<int> label(k, -1);
    int next = 0;
    for (int i = 0; i < k; ++i) {
        int r = find(i);
        if (label[r] < 0) label[r] = next++;
        label[i] = label[r];
    }
    return label;
}

}  // namespace tec
