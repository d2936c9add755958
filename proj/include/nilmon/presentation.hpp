#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nilmon/ints.hpp"

namespace nilmon {

// Consistent polycyclic presentation of a nilpotent group of class <= 2:
// main generators a_1..a_r, central generators z_1..z_s, with
//   [a_i, a_j] = z^c_ij            (i < j, commutators central by format)
//   a_i^m_i    = z^p_i             (when the relative order m_i is finite)
//   z_k^o_k    = 1                 (when o_k is finite)
// Orders are stored as 0 for infinite, >= 1 otherwise. The bracket is
// [u,v] = u^-1 v^-1 u v, so collection moves a_j past a_i (j > i) via
//   a_j a_i = a_i a_j z^(-c_ij).
class GroupPresentation {
public:
    GroupPresentation() = default;
    GroupPresentation(IntVec main_orders, std::vector<IntVec> main_powers, IntVec central_orders,
                      std::vector<std::vector<IntVec>> comm)
        : main_orders_(std::move(main_orders)),
          main_powers_(std::move(main_powers)),
          central_orders_(std::move(central_orders)),
          comm_(std::move(comm)) {}

    std::size_t rank_main() const { return main_orders_.size(); }
    std::size_t rank_central() const { return central_orders_.size(); }

    const Int& main_order(std::size_t i) const { return main_orders_[i]; }
    const IntVec& main_power(std::size_t i) const { return main_powers_[i]; }
    const Int& central_order(std::size_t k) const { return central_orders_[k]; }
    const IntVec& main_orders() const { return main_orders_; }
    const IntVec& central_orders() const { return central_orders_; }

    // c_ij for i < j (0-based); encodes [a_i, a_j].
    const IntVec& comm(std::size_t i, std::size_t j) const { return comm_[i][j]; }

    // Signed commutator vector for any i != j: [a_i, a_j].
    IntVec comm_signed(std::size_t i, std::size_t j) const {
        if (i < j) return comm_[i][j];
        return vec_neg(comm_[j][i]);
    }

    // Convenience builder: all entries default to infinite order / zero vectors.
    static GroupPresentation make(std::size_t r, std::size_t s) {
        GroupPresentation p;
        p.main_orders_.assign(r, Int(0));
        p.main_powers_.assign(r, zero_vec(s));
        p.central_orders_.assign(s, Int(0));
        p.comm_.assign(r, std::vector<IntVec>(r, zero_vec(s)));
        return p;
    }

    void set_comm(std::size_t i, std::size_t j, IntVec c) { comm_[i][j] = std::move(c); }
    void set_main_order(std::size_t i, Int m, IntVec power) {
        main_orders_[i] = std::move(m);
        main_powers_[i] = std::move(power);
    }
    void set_central_order(std::size_t k, Int o) { central_orders_[k] = std::move(o); }

    bool structurally_valid(std::string* why = nullptr) const;

private:
    IntVec main_orders_;                    // r entries, 0 = infinite
    std::vector<IntVec> main_powers_;       // r entries, each of size s
    IntVec central_orders_;                 // s entries, 0 = infinite
    std::vector<std::vector<IntVec>> comm_; // comm_[i][j] used for i < j
};

inline bool GroupPresentation::structurally_valid(std::string* why) const {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    const std::size_t r = rank_main(), s = rank_central();
    if (main_powers_.size() != r) return fail("main power table size mismatch");
    if (comm_.size() != r) return fail("comm table size mismatch");
    for (std::size_t i = 0; i < r; ++i) {
        if (main_orders_[i] < 0) return fail("negative main order");
        if (main_powers_[i].size() != s) return fail("main power vector size mismatch");
        if (comm_[i].size() != r) return fail("comm table row size mismatch");
        for (std::size_t j = 0; j < r; ++j)
            if (comm_[i][j].size() != s) return fail("comm vector size mismatch");
        if (main_orders_[i] == 0 && !vec_is_zero(main_powers_[i]))
            return fail("power vector given for infinite-order generator a" + std::to_string(i + 1));
    }
    for (std::size_t k = 0; k < s; ++k)
        if (central_orders_[k] < 0) return fail("negative central order");
    return true;
}

struct ConsistencyReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// The standard Heisenberg group H3(Z): r=2, s=1, [x,y] = z.
inline GroupPresentation heisenberg_presentation() {
    GroupPresentation p = GroupPresentation::make(2, 1);
    p.set_comm(0, 1, IntVec{1});
    return p;
}

}  // namespace nilmon
