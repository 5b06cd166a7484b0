#include "tqf/obstruction.hpp"

#include <algorithm>
#include <sstream>

namespace tqf {

namespace {

i64 floor_mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

void check_pattern(const ExclusionPattern& p) {
    if (p.modulus < 1 || p.residue < 0 || p.residue >= p.modulus)
        throw std::invalid_argument("exclusion pattern requires 0 <= residue < modulus");
}

i64 eval_mod(const TernaryForm& q, i64 x, i64 y, i64 z, i64 m) {
    i128 s = static_cast<i128>(q.c11) * x * x + static_cast<i128>(q.c12) * x * y +
             static_cast<i128>(q.c13) * x * z + static_cast<i128>(q.c22) * y * y +
             static_cast<i128>(q.c23) * y * z + static_cast<i128>(q.c33) * z * z;
    i64 r = static_cast<i64>(s % m);
    return r < 0 ? r + m : r;
}

// Gradient of Q (the doubled Gram matrix applied to v); a point of the
// cone Q == 0 (mod p) lifts to every value mod p^2 exactly when the
// gradient is nonzero mod p.
std::array<i64, 3> gradient(const TernaryForm& q, i64 x, i64 y, i64 z, i64 p) {
    return {floor_mod(2 * q.c11 * x + q.c12 * y + q.c13 * z, p),
            floor_mod(q.c12 * x + 2 * q.c22 * y + q.c23 * z, p),
            floor_mod(q.c13 * x + q.c23 * y + 2 * q.c33 * z, p)};
}

}  // namespace

bool in_excluded_class(i64 m, const ExclusionPattern& pattern) {
    if (m < 1) throw std::invalid_argument("in_excluded_class: m must be >= 1");
    check_pattern(pattern);
    while (m % 4 == 0) m /= 4;
    return m % pattern.modulus == pattern.residue;
}

PatternInstance pattern_instance(i64 m, const ExclusionPattern& pattern) {
    if (!in_excluded_class(m, pattern))
        throw std::invalid_argument("pattern_instance: m does not match the pattern");
    PatternInstance inst;
    while (m % 4 == 0) {
        m /= 4;
        ++inst.k;
    }
    inst.l = (m - pattern.residue) / pattern.modulus;
    return inst;
}

bool verify_parity_reduction(const TernaryForm& q, i64 target_residue, i64 modulus) {
    if (modulus != 8 && modulus != 16)
        throw std::invalid_argument("verify_parity_reduction: modulus must be 8 or 16");
    i64 target = floor_mod(target_residue, modulus);
    for (i64 x = 0; x < modulus; ++x)
        for (i64 y = 0; y < modulus; ++y)
            for (i64 z = 0; z < modulus; ++z) {
                if (eval_mod(q, x, y, z, modulus) != target) continue;
                if (x % 2 || y % 2 || z % 2) return false;
            }
    return true;
}

std::set<i64> excluded_multiples(const TernaryForm& q, i64 p) {
    if (p == 2) throw std::invalid_argument("excluded_multiples: p = 2 unsupported");
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("excluded_multiples: p must be an odd prime");
    i64 p2 = p * p;
    std::set<i64> attainable;
    for (i64 x = 0; x < p; ++x)
        for (i64 y = 0; y < p; ++y)
            for (i64 z = 0; z < p; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;  // descent class, n == 0 mod p
                if (eval_mod(q, x, y, z, p) != 0) continue;
                auto g = gradient(q, x, y, z, p);
                if (g[0] || g[1] || g[2]) {
                    // Nonsingular point: lifts attain every n mod p.
                    std::set<i64> none;
                    return none;
                }
                attainable.insert(eval_mod(q, x, y, z, p2) / p % p);
            }
    std::set<i64> excluded;
    for (i64 n = 1; n < p; ++n)
        if (!attainable.count(n)) excluded.insert(n);
    return excluded;
}

ObstructionTable obstruction_table(const TernaryForm& q, i64 p) {
    if (p == 2) throw std::invalid_argument("obstruction_table: p = 2 unsupported");
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("obstruction_table: p must be an odd prime");

    for (i64 x = 1; x < p; ++x)
        for (i64 y = 0; y < p; ++y)
            for (i64 z = 0; z < p; ++z)
                if (eval_mod(q, x, y, z, p) == 0)
                    throw std::domain_error(
                        "obstruction_table: Q == 0 (mod p) does not force x == 0 for " +
                        to_string(q));

    ObstructionTable table;
    table.form = q;
    table.prime = p;
    table.y_forced_zero = true;
    i64 p2 = p * p;
    for (i64 y = 0; y < p; ++y)
        for (i64 z = 0; z < p; ++z) {
            if (y == 0 && z == 0) continue;
            if (eval_mod(q, 0, y, z, p) != 0) continue;
            if (y != 0) table.y_forced_zero = false;
            // Keep the representative of {(y,z), (-y,-z)} with smaller y
            // (smaller z on ties).
            i64 ny = floor_mod(-y, p), nz = floor_mod(-z, p);
            if (std::make_pair(ny, nz) < std::make_pair(y, z)) continue;
            auto g = gradient(q, 0, y, z, p);
            if (g[0] || g[1] || g[2])
                throw std::domain_error(
                    "obstruction_table: residue line is not singular; table shape does not apply");
            table.rows.push_back({y, z, eval_mod(q, 0, y, z, p2) / p % p});
        }
    std::sort(table.rows.begin(), table.rows.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.y, a.z) < std::make_pair(b.y, b.z);
    });
    table.excluded_n = excluded_multiples(q, p);
    return table;
}

std::string render_table(const ObstructionTable& table) {
    std::ostringstream os;
    os << "form " << to_string(table.form) << "  p = " << table.prime << "\n";
    os << "forced zero: x" << (table.y_forced_zero ? ", y" : "") << "\n";
    os << "  (y mod " << table.prime << ", z mod " << table.prime << ")   n mod " << table.prime
       << "\n";
    for (const auto& row : table.rows) {
        os << "  (+-" << row.y << ", +-" << row.z << ")";
        for (std::size_t pad = std::to_string(row.y).size() + std::to_string(row.z).size();
             pad < 10; ++pad)
            os << ' ';
        os << row.n << "\n";
    }
    os << "excluded n mod " << table.prime << ": {";
    bool first = true;
    for (i64 n : table.excluded_n) {
        if (!first) os << ", ";
        os << n;
        first = false;
    }
    os << "}\n";
    return os.str();
}

std::string render_table_csv(const ObstructionTable& table) {
    std::ostringstream os;
    os << "y,z,n\n";
    for (const auto& row : table.rows) os << row.y << ',' << row.z << ',' << row.n << "\n";
    return os.str();
}

bool decide(int theorem_id, i64 m) {
    if (m < 1) throw std::invalid_argument("decide: m must be >= 1");
    return !in_excluded_class(m, theorem(theorem_id).pattern);
}

}  // namespace tqf
