#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "nilmon/ints.hpp"
#include "nilmon/presentation.hpp"

namespace nilmon {

// Malcev normal form a_1^e_1 ... a_r^e_r z_1^f_1 ... z_s^f_s with every
// coordinate reduced into [0, order) where the order is finite. Elements are
// equal iff their coordinate vectors are equal.
struct GroupElement {
    IntVec e;
    IntVec f;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement& a, const GroupElement& b) {
        if (auto c = a.e <=> b.e; c != 0) return c;
        return a.f <=> b.f;
    }
};

using Word = std::vector<GroupElement>;

inline GroupElement identity(const GroupPresentation& p) {
    return GroupElement{zero_vec(p.rank_main()), zero_vec(p.rank_central())};
}

inline bool is_identity(const GroupElement& g) { return vec_is_zero(g.e) && vec_is_zero(g.f); }

// Reduce raw coordinates to the unique normal-form representative. Reducing
// e_i by m_i moves copies of a_i^m_i = z^p_i into the central part; a_i^m_i
// is central, so no further collection corrections arise.
inline GroupElement normalize(const GroupPresentation& p, IntVec e, IntVec f) {
    for (std::size_t i = 0; i < p.rank_main(); ++i) {
        const Int& m = p.main_order(i);
        if (m == 0) continue;
        Int q = floordiv(e[i], m);
        if (q != 0) {
            e[i] -= q * m;
            vec_addmul(f, q, p.main_power(i));
        }
    }
    for (std::size_t k = 0; k < p.rank_central(); ++k) {
        const Int& o = p.central_order(k);
        if (o != 0) f[k] = floormod(f[k], o);
    }
    return GroupElement{std::move(e), std::move(f)};
}

inline GroupElement element(const GroupPresentation& p, IntVec e, IntVec f) {
    return normalize(p, std::move(e), std::move(f));
}

// Central correction picked up when collecting C(e,.)C(e',.) into normal
// form: Q(e,e')_k = -sum_{i<j} e_j e'_i c_ij,k. Bilinear in both arguments.
inline IntVec collection_q(const GroupPresentation& p, const IntVec& e1, const IntVec& e2) {
    IntVec q = zero_vec(p.rank_central());
    for (std::size_t i = 0; i < p.rank_main(); ++i) {
        if (e2[i] == 0) continue;
        for (std::size_t j = i + 1; j < p.rank_main(); ++j) {
            if (e1[j] == 0) continue;
            Int c = -e1[j] * e2[i];
            vec_addmul(q, c, p.comm(i, j));
        }
    }
    return q;
}

inline GroupElement multiply(const GroupPresentation& p, const GroupElement& g, const GroupElement& h) {
    IntVec e = vec_add(g.e, h.e);
    IntVec f = vec_add(g.f, h.f);
    IntVec q = collection_q(p, g.e, h.e);
    for (std::size_t k = 0; k < f.size(); ++k) f[k] += q[k];
    return normalize(p, std::move(e), std::move(f));
}

// g^k in closed form: C(k e, k f + binom(k,2) Q(e,e)), valid for every
// integer k in class <= 2.
inline GroupElement power(const GroupPresentation& p, const GroupElement& g, const Int& k) {
    IntVec e = vec_scale(k, g.e);
    IntVec f = vec_scale(k, g.f);
    IntVec q = collection_q(p, g.e, g.e);
    Int b2 = binom2(k);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += b2 * q[i];
    return normalize(p, std::move(e), std::move(f));
}

inline GroupElement inverse(const GroupPresentation& p, const GroupElement& g) {
    return power(p, g, Int(-1));
}

// [g,h] = g^-1 h^-1 g h; central in class <= 2 (zero e-part).
inline GroupElement commutator(const GroupPresentation& p, const GroupElement& g, const GroupElement& h) {
    GroupElement gh = multiply(p, g, h);
    GroupElement hg = multiply(p, h, g);
    return multiply(p, inverse(p, hg), gh);
}

inline GroupElement eval_word(const GroupPresentation& p, const Word& w) {
    GroupElement v = identity(p);
    for (const GroupElement& g : w) v = multiply(p, v, g);
    return v;
}

// v_0 = identity, v_i = value of the i'th prefix; size |w|+1.
inline std::vector<GroupElement> prefix_values(const GroupPresentation& p, const Word& w) {
    std::vector<GroupElement> vs;
    vs.reserve(w.size() + 1);
    vs.push_back(identity(p));
    for (const GroupElement& g : w) vs.push_back(multiply(p, vs.back(), g));
    return vs;
}

// The quadratic function of the product formula f3 = f1 + f2 + Q(e1,e2),
// tabulated on unit vectors. Only meaningful when the main part is free
// (all m_i infinite), where coordinates are globally unique.
struct QForm {
    std::size_t r = 0, s = 0;
    std::vector<std::vector<IntVec>> q;  // q[i][j] = Q(u_i, u_j)

    IntVec apply(const IntVec& e1, const IntVec& e2) const {
        IntVec out = zero_vec(s);
        for (std::size_t i = 0; i < r; ++i) {
            if (e1[i] == 0) continue;
            for (std::size_t j = 0; j < r; ++j) {
                if (e2[j] == 0) continue;
                vec_addmul(out, e1[i] * e2[j], q[i][j]);
            }
        }
        return out;
    }
};

inline QForm q_form(const GroupPresentation& p) {
    for (std::size_t i = 0; i < p.rank_main(); ++i)
        if (p.main_order(i) != 0)
            throw std::invalid_argument("q_form requires a torsion-free main part (all m_i infinite)");
    QForm qf;
    qf.r = p.rank_main();
    qf.s = p.rank_central();
    qf.q.assign(qf.r, std::vector<IntVec>(qf.r, zero_vec(qf.s)));
    for (std::size_t i = 0; i < qf.r; ++i)
        for (std::size_t j = 0; j < i; ++j) qf.q[i][j] = vec_neg(p.comm(j, i));
    return qf;
}

// Consistency: torsion compatibility of the commutator table with the
// central order lattice, plus a finite symbolic associativity check over the
// generators (finite-order generators are also probed at their wrap-around
// power m_i - 1).
inline ConsistencyReport check_consistency(const GroupPresentation& p) {
    ConsistencyReport rep;
    std::string why;
    if (!p.structurally_valid(&why)) {
        rep.violations.push_back("structure: " + why);
        return rep;
    }
    const std::size_t r = p.rank_main(), s = p.rank_central();

    auto in_central_lattice = [&](const IntVec& v) {
        for (std::size_t k = 0; k < s; ++k) {
            const Int& o = p.central_order(k);
            if (o == 0) {
                if (v[k] != 0) return false;
            } else if (!divides(o, v[k])) {
                return false;
            }
        }
        return true;
    };

    // a_i^m_i central forces m_i * c_ij to die in the central lattice.
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            for (std::size_t t : {i, j}) {
                const Int& m = p.main_order(t);
                if (m == 0) continue;
                if (!in_central_lattice(vec_scale(m, p.comm(i, j))))
                    rep.violations.push_back("order " + m.get_str() + " of a" + std::to_string(t + 1) +
                                             " incompatible with [a" + std::to_string(i + 1) + ",a" +
                                             std::to_string(j + 1) + "] = z^" + vec_str(p.comm(i, j)));
            }
        }
    if (!rep.ok()) return rep;

    std::vector<GroupElement> probes;
    for (std::size_t i = 0; i < r; ++i) {
        IntVec e = zero_vec(r);
        e[i] = 1;
        probes.push_back(element(p, e, zero_vec(s)));
        if (p.main_order(i) > 1) {
            IntVec e2 = zero_vec(r);
            e2[i] = p.main_order(i) - 1;
            probes.push_back(element(p, e2, zero_vec(s)));
        }
    }
    for (std::size_t k = 0; k < s; ++k) {
        IntVec f = zero_vec(s);
        f[k] = 1;
        probes.push_back(element(p, zero_vec(r), f));
    }
    for (const GroupElement& g : probes)
        for (const GroupElement& h : probes)
            for (const GroupElement& k : probes)
                if (multiply(p, multiply(p, g, h), k) != multiply(p, g, multiply(p, h, k))) {
                    rep.violations.push_back("associativity fails on a generator triple");
                    return rep;
                }
    return rep;
}

}  // namespace nilmon
