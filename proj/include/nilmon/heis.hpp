#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nilmon/element.hpp"
#include "nilmon/ints.hpp"

namespace nilmon {

// Independent ground truth for H3(Z): upper unitriangular matrices
// [[1,a,b],[0,1,c],[0,0,1]], multiplied directly. Deliberately does not go
// through the presentation machinery.
struct HeisMatrix {
    Int a, c, b;

    friend bool operator==(const HeisMatrix&, const HeisMatrix&) = default;
};

inline HeisMatrix heis_mul(const HeisMatrix& m1, const HeisMatrix& m2) {
    return HeisMatrix{m1.a + m2.a, m1.c + m2.c, m1.b + m2.b + m1.a * m2.c};
}

inline HeisMatrix heis_identity() { return HeisMatrix{0, 0, 0}; }

inline HeisMatrix heis_inv(const HeisMatrix& m) { return HeisMatrix{-m.a, -m.c, m.a * m.c - m.b}; }

inline HeisMatrix heis_pow(const HeisMatrix& m, const Int& k) {
    if (k < 0) return heis_inv(heis_pow(m, -k));
    HeisMatrix r = heis_identity();
    for (Int i = 0; i < k; ++i) r = heis_mul(r, m);
    return r;
}

// Letters of the matrix model: x = E12, y = E23, z = E13.
inline HeisMatrix heis_gen(char name) {
    switch (name) {
        case 'x': return HeisMatrix{1, 0, 0};
        case 'y': return HeisMatrix{0, 1, 0};
        case 'z': return HeisMatrix{0, 0, 1};
        default: throw std::invalid_argument(std::string("unknown Heisenberg letter: ") + name);
    }
}

inline HeisMatrix heis_eval(const std::vector<std::pair<char, Int>>& word) {
    HeisMatrix r = heis_identity();
    for (const auto& [name, exp] : word) r = heis_mul(r, heis_pow(heis_gen(name), exp));
    return r;
}

// Coordinate bridge: C(e1,e2,f) = x^e1 y^e2 z^f has matrix (e1, e2, e1*e2 + f).
inline HeisMatrix heis_from_element(const GroupElement& g) {
    return HeisMatrix{g.e[0], g.e[1], g.e[0] * g.e[1] + g.f[0]};
}

inline GroupElement heis_to_element(const HeisMatrix& m) {
    return GroupElement{IntVec{m.a, m.c}, IntVec{m.b - m.a * m.c}};
}

}  // namespace nilmon
