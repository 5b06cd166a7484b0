#include "tqf/modarith.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tqf {

namespace {

i64 floor_mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

// g = gcd(a,b) and x,y with a*x + b*y = g.
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    i64 x1 = 0, y1 = 0;
    i64 g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

i64 inv_mod(i64 a, i64 m) {
    i64 x = 0, y = 0;
    i64 g = ext_gcd(floor_mod(a, m), m, x, y);
    if (g != 1) throw std::domain_error("inv_mod: argument not invertible");
    return floor_mod(x, m);
}

}  // namespace

i64 mul_mod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(static_cast<i128>(a) % m * (static_cast<i128>(b) % m) % m);
}

i64 pow_mod(i64 base, i64 exp, i64 mod) {
    if (mod <= 0) throw std::invalid_argument("pow_mod: modulus must be positive");
    u64 result = 1;
    u64 b = static_cast<u64>(floor_mod(base, mod));
    u64 m = static_cast<u64>(mod);
    u64 e = static_cast<u64>(exp);
    while (e) {
        if (e & 1) result = static_cast<u64>(static_cast<unsigned __int128>(result) * b % m);
        b = static_cast<u64>(static_cast<unsigned __int128>(b) * b % m);
        e >>= 1;
    }
    return static_cast<i64>(result);
}

int jacobi(i64 a, i64 n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("jacobi: denominator must be odd and positive");
    a = floor_mod(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    i64 d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        i64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::optional<i64> sqrt_mod_prime(i64 d, i64 p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("sqrt_mod_prime: p must be an odd prime");
    d = floor_mod(d, p);
    if (d == 0) return 0;
    if (jacobi(d, p) != 1) return std::nullopt;

    i64 r;
    if (p % 4 == 3) {
        r = pow_mod(d, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks with the smallest nonresidue as generator.
        i64 q = p - 1;
        int s = 0;
        while (q % 2 == 0) {
            q /= 2;
            ++s;
        }
        i64 z = 2;
        while (jacobi(z, p) != -1) ++z;
        i64 c = pow_mod(z, q, p);
        r = pow_mod(d, (q + 1) / 2, p);
        i64 t = pow_mod(d, q, p);
        int m = s;
        while (t != 1) {
            i64 tt = t;
            int i = 0;
            while (tt != 1) {
                tt = mul_mod(tt, tt, p);
                ++i;
            }
            i64 b = pow_mod(c, i64(1) << (m - i - 1), p);
            r = mul_mod(r, b, p);
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            m = i;
        }
    }
    return std::min(r, p - r);
}

i64 lift_sqrt(i64 r, i64 d, i64 p, int k) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("lift_sqrt: p must be an odd prime");
    if (k < 1) throw std::invalid_argument("lift_sqrt: exponent must be >= 1");
    if (floor_mod(d, p) == 0) throw std::domain_error("lift_sqrt: singular lift (p divides d)");
    if (floor_mod(r * r - d, p) != 0)
        throw std::invalid_argument("lift_sqrt: r is not a square root of d mod p");

    i64 pk = 1;
    for (int i = 0; i < k; ++i) {
        if (pk > (i64(1) << 61) / p) throw std::invalid_argument("lift_sqrt: p^k too large");
        pk *= p;
    }

    i64 s = floor_mod(r, p);
    i64 mod_cur = p;
    i64 inv2s = inv_mod(2 * s % p, p);
    for (int e = 1; e < k; ++e) {
        i64 mod_next = mod_cur * p;
        i64 diff = floor_mod(static_cast<i64>((static_cast<i128>(d) -
                                               static_cast<i128>(s) * s) %
                                              mod_next),
                             mod_next);
        i64 t = mul_mod(diff / mod_cur, inv2s, p);
        s += t * mod_cur;
        mod_cur = mod_next;
    }
    (void)pk;
    i64 check = static_cast<i64>((static_cast<i128>(s) * s - d) % mod_cur);
    if (floor_mod(check, mod_cur) != 0) throw std::logic_error("lift_sqrt: lift failed");
    return s;
}

Congruence crt(std::span<const Congruence> pairs) {
    i64 r = 0, m = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        i64 mi = pairs[i].modulus;
        if (mi < 1) throw std::invalid_argument("crt: modulus must be positive");
        i64 ri = floor_mod(pairs[i].residue, mi);
        i64 g = std::gcd(m, mi);
        if ((ri - r) % g != 0) {
            throw std::domain_error("crt: inconsistent congruence (" +
                                    std::to_string(pairs[i].residue) + " mod " +
                                    std::to_string(mi) + ") against accumulated (" +
                                    std::to_string(r) + " mod " + std::to_string(m) + ")");
        }
        i128 lcm128 = static_cast<i128>(m) / g * mi;
        if (lcm128 > (i128(1) << 62)) throw std::overflow_error("crt: lcm exceeds 64-bit range");
        i64 lcm = static_cast<i64>(lcm128);
        // x = r + m*t with t == (ri - r)/g * inv(m/g) (mod mi/g)
        i64 mg = mi / g;
        i64 t = mg == 1 ? 0 : mul_mod(floor_mod((ri - r) / g, mg), inv_mod(m / g, mg), mg);
        r = static_cast<i64>((static_cast<i128>(m) * t + r) % lcm);
        m = lcm;
    }
    return {r, m};
}

Congruence crt(std::initializer_list<Congruence> pairs) {
    return crt(std::span<const Congruence>(pairs.begin(), pairs.size()));
}

PrimeSearchResult find_prime(const CongruenceSpec& spec, i64 search_cap) {
    if (search_cap < 2) throw std::invalid_argument("find_prime: cap too small");
    i64 mult = spec.multiplier;
    if (mult != 1 && mult != 2) throw std::invalid_argument("find_prime: multiplier must be 1 or 2");

    std::vector<Congruence> pairs = spec.residue_constraints;
    for (const auto& lc : spec.legendre_constraints) {
        if (lc.prime < 3 || lc.prime % 2 == 0 || !is_prime(lc.prime))
            throw std::invalid_argument("find_prime: Legendre constraint prime must be an odd prime");
        if (lc.required_sign != 1 && lc.required_sign != -1)
            throw std::invalid_argument("find_prime: Legendre sign must be +-1");
        // Smallest residue class for the prime candidate whose full value
        // multiplier*q meets the symbol condition.
        i64 chosen = -1;
        for (i64 rr = 1; rr < lc.prime; ++rr) {
            i64 top = (lc.negate ? -1 : 1) * mult * rr;
            if (jacobi(top, lc.prime) == lc.required_sign) {
                chosen = rr;
                break;
            }
        }
        if (chosen < 0) throw std::domain_error("find_prime: unsatisfiable Legendre constraint");
        pairs.push_back({chosen, lc.prime});
    }

    Congruence merged = crt(pairs);
    i64 q = merged.residue;
    if (q < 2) q += merged.modulus * ((2 - q + merged.modulus - 1) / merged.modulus);
    for (; q <= search_cap / mult; q += merged.modulus) {
        if (is_prime(q)) return {mult * q, q};
    }
    throw SearchExhausted("find_prime: no qualifying prime below cap " + std::to_string(search_cap));
}

std::vector<i64> factor_squarefree(i64 m) {
    if (m < 1) throw std::invalid_argument("factor_squarefree: m must be >= 1");
    std::vector<i64> primes;
    for (i64 p = 2; static_cast<i128>(p) * p <= m; p == 2 ? p = 3 : p += 2) {
        if (m % p != 0) continue;
        m /= p;
        if (m % p == 0)
            throw std::domain_error("factor_squarefree: square factor " + std::to_string(p));
        primes.push_back(p);
    }
    if (m > 1) primes.push_back(m);
    return primes;
}

}  // namespace tqf
