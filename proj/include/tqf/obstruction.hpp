#pragma once

#include <set>
#include <string>
#include <vector>

#include "tqf/forms.hpp"
#include "tqf/theorems.hpp"

namespace tqf {

/// True iff stripping every factor of 4 from m leaves a value in the
/// pattern's residue class.
bool in_excluded_class(i64 m, const ExclusionPattern& pattern);

/// Decomposition m = 4^k (c*l + r) for a matched pattern.
struct PatternInstance {
    int k = 0;
    i64 l = 0;
};
PatternInstance pattern_instance(i64 m, const ExclusionPattern& pattern);

/// True iff every (x,y,z) mod `modulus` with Q == target (mod modulus)
/// has x, y, z all even. Mechanizes the "computer search" steps of the
/// 4m-reduction lemmas. modulus must be 8 or 16.
bool verify_parity_reduction(const TernaryForm& q, i64 target_residue, i64 modulus);

/// Residues n mod p (1 <= n < p) for which Q provably cannot represent
/// p*n, decided by exhaustive analysis of Q == 0 (mod p) with lifts mod
/// p^2. For the competitor forms at their anisotropic prime this is
/// exactly the set of nonresidues.
std::set<i64> excluded_multiples(const TernaryForm& q, i64 p);

struct ObstructionRow {
    i64 y = 0, z = 0;  // orbit representative of {(y,z), (-y,-z)}
    i64 n = 0;         // forced value of n mod p
};

struct ObstructionTable {
    TernaryForm form;
    i64 prime = 0;
    bool y_forced_zero = false;  // x is always forced; y sometimes too
    std::vector<ObstructionRow> rows;
    std::set<i64> excluded_n;
};

/// Residue table in the shape used for the determinant-23 analysis:
/// requires that Q == 0 (mod p) forces x == 0 (mod p), then lists the
/// (y,z) orbits with the n mod p each one pins down.
ObstructionTable obstruction_table(const TernaryForm& q, i64 p);

std::string render_table(const ObstructionTable& table);
std::string render_table_csv(const ObstructionTable& table);

/// The representation criterion of theorem 1..4 applied to m, by the
/// excluded-class pattern alone.
bool decide(int theorem_id, i64 m);

}  // namespace tqf
