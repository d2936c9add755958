#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include "nilmon/element.hpp"
#include "nilmon/ints.hpp"
#include "nilmon/presentation.hpp"

namespace nilmon {

// Exact set of values of words over S of length <= depth. Brute force on
// purpose: this is the reference the decision machinery is tested against.
struct BfsBall {
    std::set<GroupElement> elements;
    std::size_t depth = 0;

    bool contains(const GroupElement& g) const { return elements.count(g) != 0; }
    std::size_t size() const { return elements.size(); }
};

inline BfsBall bfs_monoid_ball(const GroupPresentation& p, const std::vector<GroupElement>& gens,
                               std::size_t depth, std::size_t state_budget = 10'000'000) {
    BfsBall ball;
    ball.depth = depth;
    ball.elements.insert(identity(p));
    std::vector<GroupElement> frontier{identity(p)};
    for (std::size_t d = 0; d < depth && !frontier.empty(); ++d) {
        std::vector<GroupElement> next;
        for (const GroupElement& g : frontier)
            for (const GroupElement& s : gens) {
                GroupElement h = multiply(p, g, s);
                if (ball.elements.insert(h).second) {
                    next.push_back(std::move(h));
                    if (ball.elements.size() > state_budget)
                        throw std::runtime_error("bfs_monoid_ball: state budget exceeded");
                }
            }
        frontier = std::move(next);
    }
    return ball;
}

// Iterated sumsets nA = A + ... + A, exact. V needs operator+ and operator<.
template <class V>
std::set<V> sumset_add(const std::set<V>& a, const std::set<V>& b) {
    std::set<V> out;
    for (const V& x : a)
        for (const V& y : b) out.insert(x + y);
    return out;
}

// Table of S_1 = A, S_2 = 2A, ..., S_n; incremental build.
template <class V>
std::vector<std::set<V>> sumset_table(const std::set<V>& a, std::size_t n) {
    if (n == 0) throw std::invalid_argument("sumset_table: n must be >= 1");
    std::vector<std::set<V>> table;
    table.push_back(a);
    for (std::size_t k = 1; k < n; ++k) table.push_back(sumset_add(table.back(), a));
    return table;
}

template <class V>
std::set<V> sumset_nA(const std::set<V>& a, std::size_t n) {
    return sumset_table(a, n).back();
}

}  // namespace nilmon
