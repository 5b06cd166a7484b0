#include "tqf/witness.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace tqf {

namespace {

i64 floor_mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 floor_mod128(i128 a, i64 m) {
    i64 r = static_cast<i64>(a % m);
    return r < 0 ? r + m : r;
}

const TheoremData& theorem_by_determinant(i64 d) {
    for (int id = 1; id <= 4; ++id)
        if (theorem(id).determinant == d) return theorem(id);
    throw std::invalid_argument("no theorem has determinant " + std::to_string(d));
}

bool divides(i64 m, i128 v) { return v % m == 0; }

void require_admissible(int theorem_id, i64 m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    factor_squarefree(m);  // throws when m has a square factor
    if (!decide(theorem_id, m))
        throw std::domain_error("m = " + std::to_string(m) +
                                " lies in the excluded class of theorem " +
                                std::to_string(theorem_id));
}

}  // namespace

CaseRule select_case(int theorem_id, i64 m) {
    const TheoremData& td = theorem(theorem_id);
    require_admissible(theorem_id, m);
    if (m % td.aniso_prime == 0)
        throw std::domain_error("m divisible by the anisotropic prime " +
                                std::to_string(td.aniso_prime) +
                                "; certification falls back to direct enumeration");
    for (const TheoremCase& c : td.cases) {
        i64 r = m % c.m_modulus;
        if (std::find(c.m_residues.begin(), c.m_residues.end(), r) != c.m_residues.end())
            return {theorem_id, c, td.aniso_prime * td.aniso_prime};
    }
    throw std::logic_error("no case covers admissible m = " + std::to_string(m));
}

std::pair<i64, std::optional<i64>> choose_a(const CaseRule& rule, i64 m, i64 search_cap) {
    const TheoremData& td = theorem(rule.theorem_id);
    std::vector<i64> odd_primes;
    for (i64 p : factor_squarefree(m))
        if (p != 2) odd_primes.push_back(p);

    if (rule.data.odd_57_prime_count) {
        int count = 0;
        for (i64 p : odd_primes)
            if (p % 8 == 5 || p % 8 == 7) ++count;
        if (count % 2 == 0)
            throw std::logic_error("case precondition violated for m = " + std::to_string(m) +
                                   ": number of prime factors congruent to 5 or 7 mod 8 is even");
    }

    CongruenceSpec spec;
    spec.residue_constraints = rule.data.prime_residues;
    spec.multiplier = rule.data.multiplier;
    for (i64 p : odd_primes) spec.legendre_constraints.push_back({p, 1, true});

    PrimeSearchResult found = find_prime(spec, search_cap);
    i64 a = found.value;

    // The case conditions must make -D*m a square modulo the odd part
    // of a; check the symbol identity the construction relies on.
    i64 a_odd = rule.data.multiplier == 2 ? found.prime : a;
    if (jacobi(-td.determinant * m % a_odd, a_odd) != 1)
        throw std::logic_error("symbol identity (-Dm/a) = 1 failed for a = " + std::to_string(a));
    for (i64 p : odd_primes)
        if (jacobi(-a, p) != 1)
            throw std::logic_error("symbol condition (-a/p) = 1 failed at p = " + std::to_string(p));

    if (rule.data.multiplier == 2) return {a, found.prime};
    return {a, std::nullopt};
}

std::pair<i64, i64> solve_bh(i64 a, i64 d, i64 m) {
    const TheoremData& td = theorem_by_determinant(d);
    const i64 p = td.aniso_prime;
    const i128 dm = static_cast<i128>(d) * m;

    i64 h0;
    if (a % 2 == 0) {
        i64 ap = a / 2;
        if (!is_prime(ap)) throw std::invalid_argument("even a must be twice a prime");
        auto r = sqrt_mod_prime(floor_mod128(-dm, ap), ap);
        if (!r) throw std::logic_error("-Dm is not a square mod a' (violated case precondition)");
        i64 parity = static_cast<i64>(dm % 2);
        i64 h1 = crt({{*r, ap}, {parity, 2}}).residue;
        i64 h2 = crt({{ap - *r, ap}, {parity, 2}}).residue;
        h0 = std::min(h1, h2);
    } else {
        if (!is_prime(a)) throw std::invalid_argument("odd a must be prime");
        auto r = sqrt_mod_prime(floor_mod128(-dm, a), a);
        if (!r) throw std::logic_error("-Dm is not a square mod a (violated case precondition)");
        h0 = *r;
    }

    // Shift by multiples of a until the induced (b,h) class mod p is in
    // the theorem's admissible list.
    for (i64 step = 0; step <= 2 * p + 1; ++step) {
        i64 t = (step % 2 == 0) ? step / 2 : -(step / 2 + 1);
        i64 h = h0 + t * a;
        i128 num = dm + static_cast<i128>(h) * h;
        if (num % a != 0) throw std::logic_error("square root of -Dm mod a is inconsistent");
        i128 b = num / a;
        std::pair<i64, i64> cls{floor_mod128(b, p), floor_mod(h, p)};
        if (std::find(td.admissible_bh.begin(), td.admissible_bh.end(), cls) !=
            td.admissible_bh.end()) {
            if (b > std::numeric_limits<i64>::max()) throw std::overflow_error("b overflow");
            return {static_cast<i64>(b), h};
        }
    }
    throw std::logic_error("no admissible (b,h) class reachable (violated case precondition)");
}

std::pair<i64, i64> solve_ab(i64 m, i64 d, i64 a, i64 b, i64 h, const CaseRule& rule) {
    const TheoremData& td = theorem(rule.theorem_id);
    const i64 p = td.aniso_prime;
    const i64 p2 = rule.square_modulus;
    if (static_cast<i128>(a) * b - static_cast<i128>(h) * h != static_cast<i128>(d) * m)
        throw std::invalid_argument("solve_ab: ab - h^2 != Dm");

    const bool even = m % 2 == 0;
    const i64 m_odd = even ? m / 2 : m;

    std::vector<Congruence> a_pairs, b_pairs;
    for (i64 q : factor_squarefree(m_odd)) {
        auto alpha = sqrt_mod_prime(floor_mod(-a, q), q);
        if (!alpha || *alpha == 0)
            throw std::logic_error("-a is not an invertible square mod " + std::to_string(q));
        auto beta = sqrt_mod_prime(floor_mod(-b, q), q);
        if (!beta) throw std::logic_error("-b is not a square mod " + std::to_string(q));
        i64 bq = *beta;
        if (bq == 0) {
            if (floor_mod(h, q) != 0)
                throw std::logic_error("b == 0 but h != 0 mod " + std::to_string(q));
        } else if (floor_mod128(static_cast<i128>(*alpha) * bq + h, q) != 0) {
            bq = q - bq;  // the sign pairing fixed by AB + h == 0
        }
        if (floor_mod128(static_cast<i128>(*alpha) * bq + h, q) != 0)
            throw std::logic_error("sign pairing failed mod " + std::to_string(q));
        a_pairs.push_back({*alpha, q});
        b_pairs.push_back({bq, q});
    }
    if (even) {
        a_pairs.push_back({floor_mod(a, 2), 2});
        b_pairs.push_back({floor_mod(b, 2), 2});
    }

    // Evaluation condition: land the form value at eval_vector on p*k
    // (mod p^2) with k on the nonresidue side of m.
    const bool variant = uses_variant_vector(td, b, h);
    const int needed = -jacobi(m, p);
    const i64 c = variant ? floor_mod128(static_cast<i128>(4) * a + b + 4 * static_cast<i128>(h), p2)
                          : floor_mod128(static_cast<i128>(a) + b + 2 * static_cast<i128>(h), p2);
    std::optional<i64> root;
    for (i64 k = 1; k < p && !root; ++k) {
        if (jacobi(k, p) != needed) continue;
        i64 target = floor_mod(p * k - c, p2);
        if (target == 0) {
            root = 0;
        } else if (target % p == 0) {
            continue;  // p*unit is never a square mod p^2
        } else if (jacobi(target, p) == 1) {
            i64 r0 = *sqrt_mod_prime(target % p, p);
            i64 lifted = lift_sqrt(r0, target, p, 2);
            root = std::min(lifted, p2 - lifted);
        }
    }
    if (!root) throw std::logic_error("no solvable eliminating multiple mod " + std::to_string(p2));

    a_pairs.push_back({0, p2});
    b_pairs.push_back({*root, p2});

    i64 A = crt(a_pairs).residue;
    i64 B = crt(b_pairs).residue;

    if (!divides(m, static_cast<i128>(A) * A + a) || !divides(m, static_cast<i128>(B) * B + b) ||
        !divides(m, static_cast<i128>(A) * B + h))
        throw std::logic_error("congruence system for A, B failed");
    return {A, B};
}

TernaryForm build_form(i64 m, i64 a, i64 b, i64 h, i64 A, i64 B, i64 d) {
    i128 n11 = static_cast<i128>(A) * A + a;
    i128 n12 = static_cast<i128>(A) * B + h;
    i128 n22 = static_cast<i128>(B) * B + b;
    if (n11 % m || n12 % m || n22 % m)
        throw std::domain_error("invalid witness: coefficients are not divisible by m");
    auto narrow = [](i128 v) {
        if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
            throw std::overflow_error("form coefficient overflow");
        return static_cast<i64>(v);
    };
    TernaryForm q{narrow(n11 / m), narrow(2 * (n12 / m)), 2 * A, narrow(n22 / m), 2 * B, m};
    if (!is_classically_integral(q))
        throw std::domain_error("invalid witness: form is not classically integral");
    if (!is_positive_definite(q))
        throw std::domain_error("invalid witness: form is not positive definite");
    if (gram_determinant(q) != d) throw std::domain_error("invalid witness: determinant != D");
    return q;
}

Certificate generate_certificate(int theorem_id, i64 m, i64 search_cap) {
    const TheoremData& td = theorem(theorem_id);
    CaseRule rule = select_case(theorem_id, m);
    auto [a, a_prime] = choose_a(rule, m, search_cap);
    auto [b, h] = solve_bh(a, td.determinant, m);
    auto [A, B] = solve_ab(m, td.determinant, a, b, h, rule);

    Certificate cert;
    cert.theorem_id = theorem_id;
    cert.m = m;
    cert.determinant = td.determinant;
    cert.case_id = rule.data.case_id;
    cert.a = a;
    cert.a_prime = a_prime;
    cert.b = b;
    cert.h = h;
    cert.A = A;
    cert.B = B;
    cert.form = build_form(m, a, b, h, A, B, td.determinant);
    cert.eval_vector = uses_variant_vector(td, b, h) ? Vec3{2, 1, 0} : Vec3{1, 1, 0};
    cert.eval_value = evaluate(cert.form, cert.eval_vector);

    i64 p = td.aniso_prime;
    if (cert.eval_value % p != 0 || jacobi(cert.eval_value / p, p) != -1)
        throw std::logic_error("generated certificate misses the eliminating multiple");
    return cert;
}

VerifyReport verify_certificate(const Certificate& cert) {
    auto fail = [](std::string msg) { return VerifyReport{false, std::move(msg)}; };
    if (cert.theorem_id < 1 || cert.theorem_id > 4) return fail("theorem_id out of range");
    const TheoremData& td = theorem(cert.theorem_id);
    if (cert.determinant != td.determinant) return fail("determinant field mismatch");
    if (cert.m < 1) return fail("m must be positive");
    try {
        factor_squarefree(cert.m);
    } catch (const std::exception&) {
        return fail("m is not squarefree");
    }
    if (!decide(cert.theorem_id, cert.m)) return fail("m lies in the theorem's excluded class");
    if (cert.a < 1 || cert.b < 1) return fail("a and b must be positive");
    if (cert.a_prime && *cert.a_prime * 2 != cert.a) return fail("a_prime inconsistent with a");

    const i64 d = td.determinant, m = cert.m;
    if (static_cast<i128>(cert.a) * cert.b - static_cast<i128>(cert.h) * cert.h !=
        static_cast<i128>(d) * m)
        return fail("ab-h^2 != Dm");
    if (!divides(m, static_cast<i128>(cert.A) * cert.A + cert.a))
        return fail("A^2+a not divisible by m");
    if (!divides(m, static_cast<i128>(cert.B) * cert.B + cert.b))
        return fail("B^2+b not divisible by m");
    if (!divides(m, static_cast<i128>(cert.A) * cert.B + cert.h))
        return fail("AB+h not divisible by m");

    TernaryForm expected;
    try {
        expected = build_form(m, cert.a, cert.b, cert.h, cert.A, cert.B, d);
    } catch (const std::exception& e) {
        return fail(std::string("constructed form invalid: ") + e.what());
    }
    if (cert.form != expected) return fail("form coefficients do not match witness data");
    if (evaluate(cert.form, {0, 0, 1}) != m) return fail("form does not evaluate to m at (0,0,1)");

    if (cert.eval_vector != Vec3{1, 1, 0} && cert.eval_vector != Vec3{2, 1, 0})
        return fail("eval vector must be (1,1,0) or (2,1,0)");
    if (evaluate(cert.form, cert.eval_vector) != cert.eval_value)
        return fail("eval value mismatch");
    const i64 p = td.aniso_prime;
    if (cert.eval_value % p != 0) return fail("eval value not divisible by the anisotropic prime");
    const i64 n = cert.eval_value / p;
    if (n % p == 0) return fail("eval quotient divisible by the anisotropic prime");
    if (jacobi(n, p) != -1) return fail("eval quotient is a quadratic residue");

    for (const TernaryForm& rival : td.competitors) {
        std::set<i64> excl = excluded_multiples(rival, p);
        if (!excl.count(floor_mod(n, p)))
            return fail("eliminating multiple not excluded for competitor " + to_string(rival));
    }
    if (!is_equivalent(cert.form, td.q1))
        return fail("constructed form not equivalent to the target form");
    return {true, ""};
}

}  // namespace tqf
