#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilmon {

// All group/lattice arithmetic uses arbitrary-precision integers; collection
// corrections grow quadratically in the coordinates.
using Int = mpz_class;
using IntVec = std::vector<Int>;

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int abs(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

// Floor division/remainder; divisor must be positive for the uses below.
inline Int floordiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int floormod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// k*(k-1)/2, exact for every integer k.
inline Int binom2(const Int& k) {
    Int t = k * (k - 1);
    return t / 2;
}

inline long to_long(const Int& a) {
    if (!a.fits_slong_p()) throw std::overflow_error("integer too large for long: " + a.get_str());
    return a.get_si();
}

inline IntVec zero_vec(std::size_t n) { return IntVec(n, 0); }

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec vec_neg(const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline IntVec vec_scale(const Int& c, const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline void vec_addmul(IntVec& a, const Int& c, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
}

inline bool vec_is_zero(const IntVec& a) {
    for (const Int& x : a)
        if (x != 0) return false;
    return true;
}

inline Int vec_dot(const IntVec& a, const IntVec& b) {
    Int r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

inline Int vec_norm1(const IntVec& a) {
    Int r = 0;
    for (const Int& x : a) r += abs(x);
    return r;
}

inline std::string vec_str(const IntVec& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += a[i].get_str();
    }
    return s + ")";
}

}  // namespace nilmon
