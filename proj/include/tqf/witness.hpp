#pragma once

#include <optional>
#include <string>
#include <utility>

#include "tqf/forms.hpp"
#include "tqf/obstruction.hpp"
#include "tqf/theorems.hpp"

namespace tqf {

/// Default bound for prime searches inside certificate generation.
inline constexpr i64 kDefaultSearchCap = 1'000'000'000;

/// Explicit witness that m is represented by the theorem's target form:
/// integers with a*b - h^2 = D*m and A^2+a, B^2+b, A*B+h all divisible
/// by m, from which m * form = (Ax+By+mz)^2 + ax^2 + 2hxy + by^2. The
/// form has determinant D, represents m at (0,0,1), and its value at
/// eval_vector is aniso_prime * (nonresidue), which no inequivalent
/// class of determinant D represents.
struct Certificate {
    int theorem_id = 0;
    i64 m = 0;
    i64 determinant = 0;
    int case_id = 0;
    i64 a = 0;
    std::optional<i64> a_prime;  // set when a = 2 * a_prime
    i64 b = 0;
    i64 h = 0;
    i64 A = 0;
    i64 B = 0;
    TernaryForm form;
    Vec3 eval_vector{1, 1, 0};
    i64 eval_value = 0;
};

struct CaseRule {
    int theorem_id = 0;
    TheoremCase data;
    i64 square_modulus = 0;  // aniso_prime^2
};

struct VerifyReport {
    bool ok = false;
    std::string failure;  // first failing invariant when !ok
};

/// The unique constructive case covering admissible squarefree m.
CaseRule select_case(int theorem_id, i64 m);

/// Prime (or 2*prime) satisfying the case's congruence conditions plus
/// jacobi(-a, p) = 1 for every odd prime p | m. Returns (a, a_prime).
std::pair<i64, std::optional<i64>> choose_a(const CaseRule& rule, i64 m,
                                            i64 search_cap = kDefaultSearchCap);

/// Solves a*b - h^2 = D*m with b > 0 and (b,h) mod aniso_prime in the
/// theorem's admissible class list.
std::pair<i64, i64> solve_bh(i64 a, i64 d, i64 m);

/// A, B with A^2+a == B^2+b == A*B+h == 0 (mod m) and the evaluation
/// congruence mod aniso_prime^2 that lands the form on an eliminating
/// multiple. Canonical smallest nonnegative solutions.
std::pair<i64, i64> solve_ab(i64 m, i64 d, i64 a, i64 b, i64 h, const CaseRule& rule);

/// The form ((A^2+a)/m, 2(AB+h)/m, 2A, (B^2+b)/m, 2B, m); validated
/// integral, classically integral, positive definite of determinant d.
TernaryForm build_form(i64 m, i64 a, i64 b, i64 h, i64 A, i64 B, i64 d);

/// Full pipeline. Requires decide(theorem_id, m), m squarefree, and m
/// not divisible by the theorem's anisotropic prime.
Certificate generate_certificate(int theorem_id, i64 m, i64 search_cap = kDefaultSearchCap);

/// Checks every certificate invariant, the elimination of competitor
/// classes, and final equivalence with the target form. Total: never
/// throws on bad certificates, reports the first failing check.
VerifyReport verify_certificate(const Certificate& cert);

/// Flat JSON with integer fields; values beyond 53-bit magnitude are
/// serialized as strings.
std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

}  // namespace tqf
