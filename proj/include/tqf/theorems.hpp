#pragma once

#include <utility>
#include <vector>

#include "tqf/forms.hpp"

namespace tqf {

/// Integers of the shape 4^k (modulus * l + residue).
struct ExclusionPattern {
    i64 modulus = 1;
    i64 residue = 0;
};

/// One constructive case of a theorem: which m it covers (mod
/// m_modulus) and the congruence conditions on the search prime.
struct TheoremCase {
    int case_id = 0;
    i64 m_modulus = 4;
    std::vector<i64> m_residues;
    i64 multiplier = 1;                      // a = multiplier * prime
    std::vector<Congruence> prime_residues;  // constraints on the prime itself
    bool odd_57_prime_count = false;         // asserts #{p | m : p = 5,7 mod 8} is odd
};

struct TheoremData {
    int id = 0;
    i64 determinant = 0;
    i64 aniso_prime = 0;  // competitors cannot represent aniso_prime * nonresidue
    ExclusionPattern pattern;
    TernaryForm q1;
    std::vector<TernaryForm> competitors;
    i64 a_mod_p = 0;  // residue of a modulo aniso_prime in every case
    std::vector<std::pair<i64, i64>> admissible_bh;  // (b,h) classes mod aniso_prime
    std::vector<TheoremCase> cases;
};

/// Static data for the four target forms (determinants 7, 11, 14, 23).
const TheoremData& theorem(int id);

/// (b,h) == (3,4) mod 7 is the one class evaluated at (2,1,0) instead
/// of (1,1,0).
bool uses_variant_vector(const TheoremData& t, i64 b, i64 h);

}  // namespace tqf
