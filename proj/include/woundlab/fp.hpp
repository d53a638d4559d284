#ifndef WOUNDLAB_FP_HPP
#define WOUNDLAB_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace woundlab {

// Prime moduli are small (p <= 61) so residues and products fit in int64.
constexpr int kMaxPrime = 61;

inline void check_prime(int p) {
    if (p < 2 || p > kMaxPrime)
        throw std::invalid_argument("prime out of range [2,61]: " + std::to_string(p));
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
}

inline int fp_norm(long long v, int p) {
    long long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

inline int fp_add(int a, int b, int p) { return fp_norm(static_cast<long long>(a) + b, p); }
inline int fp_sub(int a, int b, int p) { return fp_norm(static_cast<long long>(a) - b, p); }
inline int fp_mul(int a, int b, int p) { return fp_norm(static_cast<long long>(a) * b, p); }
inline int fp_neg(int a, int p) { return fp_norm(-static_cast<long long>(a), p); }

inline int fp_pow(int a, long long e, int p) {
    a = fp_norm(a, p);
    int r = 1 % p;
    while (e > 0) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline int fp_inv(int a, int p) {
    a = fp_norm(a, p);
    if (a == 0) throw std::domain_error("division by zero in F_p");
    return fp_pow(a, p - 2, p);
}

} // namespace woundlab

#endif
