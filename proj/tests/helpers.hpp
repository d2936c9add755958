#pragma once

#include <random>
#include <string>
#include <vector>

#include "nilmon/element.hpp"
#include "nilmon/presentation.hpp"

namespace testutil {

using nilmon::GroupElement;
using nilmon::GroupPresentation;
using nilmon::Int;
using nilmon::IntVec;

using Rng = std::mt19937_64;

inline long rand_long(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline GroupElement rand_element(Rng& rng, const GroupPresentation& p, long lo, long hi) {
    IntVec e(p.rank_main()), f(p.rank_central());
    for (auto& x : e) x = rand_long(rng, lo, hi);
    for (auto& x : f) x = rand_long(rng, lo, hi);
    return nilmon::element(p, std::move(e), std::move(f));
}

// H3 with an extra relation z^2 = 1.
inline GroupPresentation h3_central2() {
    auto p = GroupPresentation::make(2, 1);
    p.set_comm(0, 1, IntVec{1});
    p.set_central_order(0, 2);
    return p;
}

// H5(Z): [x1,y1] = [x2,y2] = z with generator order x1,x2,y1,y2.
inline GroupPresentation h5() {
    auto p = GroupPresentation::make(4, 1);
    p.set_comm(0, 2, IntVec{1});
    p.set_comm(1, 3, IntVec{1});
    return p;
}

inline GroupPresentation abelian_z_x_z2() {
    auto p = GroupPresentation::make(1, 1);
    p.set_central_order(0, 2);
    return p;
}

inline GroupPresentation cyclic3() {
    auto p = GroupPresentation::make(1, 0);
    p.set_main_order(0, 3, IntVec{});
    return p;
}

// <a | a^2 = z> with z central of infinite order; the group is Z.
inline GroupPresentation z_via_power() {
    auto p = GroupPresentation::make(1, 1);
    p.set_main_order(0, 2, IntVec{1});
    return p;
}

// [G,G] = Z x Z/2 realized by [x1,x2] = z1 (infinite), [x1,x3] = z2 (order 2).
inline GroupPresentation torsion_e2() {
    auto p = GroupPresentation::make(3, 2);
    p.set_central_order(1, 2);
    p.set_comm(0, 1, IntVec{1, 0});
    p.set_comm(0, 2, IntVec{0, 1});
    return p;
}

inline GroupPresentation h3_x_h3() {
    auto p = GroupPresentation::make(4, 2);
    p.set_comm(0, 1, IntVec{1, 0});
    p.set_comm(2, 3, IntVec{0, 1});
    return p;
}

inline GroupPresentation quaternion8() {
    auto p = GroupPresentation::make(2, 1);
    p.set_central_order(0, 2);
    p.set_main_order(0, 2, IntVec{1});
    p.set_main_order(1, 2, IntVec{1});
    p.set_comm(0, 1, IntVec{1});
    return p;
}

inline GroupPresentation h3_x_z() {
    auto p = GroupPresentation::make(2, 2);
    p.set_comm(0, 1, IntVec{1, 0});
    return p;
}

inline GroupPresentation h3_x_z2() {
    auto p = GroupPresentation::make(2, 2);
    p.set_central_order(1, 2);
    p.set_comm(0, 1, IntVec{1, 0});
    return p;
}

// [x,y] = z1 z2 with z2 of order 2: [G,G] is infinite cyclic.
inline GroupPresentation h3_mixed_comm() {
    auto p = GroupPresentation::make(2, 2);
    p.set_central_order(1, 2);
    p.set_comm(0, 1, IntVec{1, 1});
    return p;
}

inline GroupPresentation abelian_z2_free() {
    return GroupPresentation::make(2, 0);
}

// Nonabelian with a finite main order: x of infinite order, y of order 2,
// [x,y] = z of order 2 (2*c is 0 mod 2, so consistent).
inline GroupPresentation mixed_main_torsion() {
    auto p = GroupPresentation::make(2, 1);
    p.set_central_order(0, 2);
    p.set_main_order(1, 2, IntVec{0});
    p.set_comm(0, 1, IntVec{1});
    return p;
}

struct NamedPresentation {
    std::string name;
    GroupPresentation p;
};

inline std::vector<NamedPresentation> presentation_corpus() {
    return {
        {"h3", nilmon::heisenberg_presentation()},
        {"h3_central2", h3_central2()},
        {"h5", h5()},
        {"abelian_z_x_z2", abelian_z_x_z2()},
        {"cyclic3", cyclic3()},
        {"z_via_power", z_via_power()},
        {"torsion_e2", torsion_e2()},
        {"h3_x_h3", h3_x_h3()},
        {"quaternion8", quaternion8()},
        {"h3_x_z", h3_x_z()},
        {"h3_x_z2", h3_x_z2()},
        {"h3_mixed_comm", h3_mixed_comm()},
        {"abelian_z2_free", abelian_z2_free()},
        {"mixed_main_torsion", mixed_main_torsion()},
    };
}

}  // namespace testutil
