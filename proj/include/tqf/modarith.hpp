#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace tqf {

using i64 = long long;
using i128 = __int128;
using u64 = unsigned long long;

/// Thrown by find_prime when no qualifying value exists below the cap.
struct SearchExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A residue class: x == residue (mod modulus), modulus >= 1.
struct Congruence {
    i64 residue = 0;
    i64 modulus = 1;
};

/// Condition jacobi(sign_base * value, prime) == required_sign, where
/// sign_base is -1 when negate is set. The value tested is the full
/// search value (multiplier * prime candidate).
struct LegendreConstraint {
    i64 prime = 3;
    int required_sign = 1;
    bool negate = false;
};

/// Search spec for a prime in an arithmetic progression. Residue
/// constraints apply to the prime candidate q itself; the returned
/// value is multiplier * q (multiplier is 1 or 2).
struct CongruenceSpec {
    std::vector<Congruence> residue_constraints;
    std::vector<LegendreConstraint> legendre_constraints;
    i64 multiplier = 1;
};

struct PrimeSearchResult {
    i64 value = 0;  // multiplier * prime
    i64 prime = 0;
};

i64 mul_mod(i64 a, i64 b, i64 m);
i64 pow_mod(i64 base, i64 exp, i64 mod);

/// Jacobi symbol (a/n). n must be odd and positive. Equals the
/// Legendre symbol when n is an odd prime.
int jacobi(i64 a, i64 n);

/// Exact primality (deterministic Miller-Rabin witness set, valid for
/// the full 64-bit range).
bool is_prime(i64 n);

/// Smaller square root of d modulo the odd prime p, or nullopt when d
/// is a nonresidue. d == 0 (mod p) yields 0.
std::optional<i64> sqrt_mod_prime(i64 d, i64 p);

/// Hensel lift: given r^2 == d (mod p) with p odd prime and p not
/// dividing 2d, returns s in [0, p^k) with s^2 == d (mod p^k) and
/// s == r (mod p).
i64 lift_sqrt(i64 r, i64 d, i64 p, int k);

/// Combine congruences. Moduli need not be coprime; an inconsistent
/// pair raises std::domain_error naming the offending pair.
Congruence crt(std::span<const Congruence> pairs);
Congruence crt(std::initializer_list<Congruence> pairs);

/// Smallest value v = multiplier*q <= search_cap with q prime, q in
/// every residue class, and every Legendre condition satisfied.
/// Legendre conditions are folded into the progression by picking the
/// smallest qualifying residue class mod each constrained prime.
PrimeSearchResult find_prime(const CongruenceSpec& spec, i64 search_cap);

/// Sorted prime factorization of squarefree m >= 1. A repeated prime
/// raises std::domain_error.
std::vector<i64> factor_squarefree(i64 m);

}  // namespace tqf
