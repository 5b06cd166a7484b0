#include "tqf/forms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>

namespace tqf {

namespace {

// Integral Gram matrix of a classically integral form.
struct Gram {
    std::array<std::array<i64, 3>, 3> g;
};

Gram gram_of(const TernaryForm& q) {
    if (!is_classically_integral(q))
        throw std::invalid_argument("form is not classically integral: " + to_string(q));
    return {{{{q.c11, q.c12 / 2, q.c13 / 2},
              {q.c12 / 2, q.c22, q.c23 / 2},
              {q.c13 / 2, q.c23 / 2, q.c33}}}};
}

TernaryForm form_of(const Gram& a) {
    return {a.g[0][0], 2 * a.g[0][1], 2 * a.g[0][2], a.g[1][1], 2 * a.g[1][2], a.g[2][2]};
}

i64 checked_i64(i128 v, const char* what) {
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
        throw std::overflow_error(what);
    return static_cast<i64>(v);
}

i128 det3(const std::array<std::array<i128, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// transform^T * A * transform, exact.
Gram conjugate(const Gram& a, const Mat3& u) {
    std::array<std::array<i128, 3>, 3> t{};  // A * U
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) t[i][j] += static_cast<i128>(a.g[i][k]) * u.m[k][j];
    Gram r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            i128 s = 0;
            for (int k = 0; k < 3; ++k) s += static_cast<i128>(u.m[k][i]) * t[k][j];
            r.g[i][j] = checked_i64(s, "gram conjugation overflow");
        }
    return r;
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            i128 s = 0;
            for (int k = 0; k < 3; ++k) s += static_cast<i128>(a.m[i][k]) * b.m[k][j];
            r.m[i][j] = checked_i64(s, "transform product overflow");
        }
    return r;
}

i64 bilinear(const Gram& a, const Vec3& v, const Vec3& w) {
    i128 s = 0;
    std::array<i64, 3> vv{v.x, v.y, v.z}, ww{w.x, w.y, w.z};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += static_cast<i128>(a.g[i][j]) * vv[i] * ww[j];
    return checked_i64(s, "bilinear overflow");
}

// Nearest integer to g/d (d > 0), ties toward zero. Keeps the greedy
// size-reduction strictly decreasing.
i64 nearest_tie_to_zero(i64 g, i64 d) {
    i64 mag = (2 * std::abs(g) + d - 1) / (2 * d);
    return g >= 0 ? mag : -mag;
}

// Iterative Minkowski-style reduction; leaves small ordered diagonals.
void greedy_reduce(Gram& g, Mat3& u) {
    auto apply = [&](const Mat3& e) {
        g = conjugate(g, e);
        u = mat_mul(u, e);
    };
    for (int guard = 0; guard < 10000; ++guard) {
        bool changed = false;
        for (int i = 0; i < 2; ++i) {
            if (g.g[i][i] > g.g[i + 1][i + 1]) {
                Mat3 e;
                e.m = {};
                e.m[i][i + 1] = -1;  // (b_i, b_{i+1}) -> (b_{i+1}, -b_i), det +1
                e.m[i + 1][i] = 1;
                e.m[3 - i - (i + 1)][3 - i - (i + 1)] = 1;
                apply(e);
                changed = true;
            }
        }
        for (int i = 0; i < 3 && !changed; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                i64 t = nearest_tie_to_zero(g.g[i][j], g.g[i][i]);
                if (t != 0) {
                    Mat3 e;
                    e.m[i][j] = -t;
                    apply(e);
                    changed = true;
                    break;
                }
            }
        if (!changed) {
            // Try shortening b2 (and b1) by +-1 combinations of the others.
            for (int j = 2; j >= 1 && !changed; --j) {
                for (int e1 = -1; e1 <= 1 && !changed; ++e1)
                    for (int e2 = -1; e2 <= 1 && !changed; ++e2) {
                        if (e1 == 0 && (j == 1 || e2 == 0)) continue;
                        Mat3 e;
                        e.m[0][j] = e1;
                        if (j == 2) e.m[1][j] = e2;
                        Gram trial = conjugate(g, e);
                        if (trial.g[j][j] < g.g[j][j]) {
                            g = trial;
                            u = mat_mul(u, e);
                            changed = true;
                        }
                    }
            }
        }
        if (!changed) return;
    }
    throw std::logic_error("greedy reduction did not converge");
}

// Eisenstein reduction conditions for a positive ternary form
//   a x^2 + b y^2 + c z^2 + r yz + s xz + t xy
// (classical condition set; exactly one reduced form per class).
bool eisenstein_reduced(i64 a, i64 b, i64 c, i64 r, i64 s, i64 t) {
    if (!(a <= b && b <= c)) return false;
    bool all_pos = r > 0 && s > 0 && t > 0;
    bool all_nonpos = r <= 0 && s <= 0 && t <= 0;
    if (!all_pos && !all_nonpos) return false;
    if (a < std::abs(t) || a < std::abs(s) || b < std::abs(r)) return false;
    if (a + b + r + s + t < 0) return false;
    if (a == t && s > 2 * r) return false;
    if (a == s && t > 2 * r) return false;
    if (b == r && t > 2 * s) return false;
    if (a == -t && s != 0) return false;
    if (a == -s && t != 0) return false;
    if (b == -r && t != 0) return false;
    if (a + b + r + s + t == 0 && 2 * a + 2 * s + t > 0) return false;
    if (a == b && std::abs(r) > std::abs(s)) return false;
    if (b == c && std::abs(s) > std::abs(t)) return false;
    return true;
}

// All v != 0 with Q(v) <= bound, via the LDL ellipsoid of the Gram
// matrix. Ranges are widened by one and every candidate is checked
// exactly, so rounding cannot drop a vector.
template <typename F>
void scan_ellipsoid(const Gram& g, i64 bound, F&& emit) {
    if (bound < 0) return;
    const long double g00 = g.g[0][0], g01 = g.g[0][1], g02 = g.g[0][2];
    const long double g11 = g.g[1][1], g12 = g.g[1][2], g22 = g.g[2][2];
    const long double d1 = g00;
    const long double l21 = g01 / g00, l31 = g02 / g00;
    const long double d2 = g11 - g01 * l21;
    const long double l32 = (g12 - g01 * l31) / d2;
    const long double d3 = g22 - g02 * l31 - d2 * l32 * l32;
    if (!(d1 > 0 && d2 > 0 && d3 > 0))
        throw std::invalid_argument("form is not positive definite");

    const long double B = static_cast<long double>(bound);
    const i64 zmax = static_cast<i64>(std::sqrt(B / d3)) + 1;
    for (i64 z = -zmax; z <= zmax; ++z) {
        long double rem_z = B - d3 * z * z;
        if (rem_z < -0.5L) continue;
        long double yc = -l32 * z;
        long double wy = std::sqrt(std::max(rem_z, 0.0L) / d2);
        i64 ylo = static_cast<i64>(std::floor(yc - wy)) - 1;
        i64 yhi = static_cast<i64>(std::ceil(yc + wy)) + 1;
        for (i64 y = ylo; y <= yhi; ++y) {
            long double ty = y + l32 * z;
            long double rem_y = rem_z - d2 * ty * ty;
            if (rem_y < -0.5L) continue;
            long double xc = -(l21 * y + l31 * z);
            long double wx = std::sqrt(std::max(rem_y, 0.0L) / d1);
            i64 xlo = static_cast<i64>(std::floor(xc - wx)) - 1;
            i64 xhi = static_cast<i64>(std::ceil(xc + wx)) + 1;
            for (i64 x = xlo; x <= xhi; ++x) {
                if (x == 0 && y == 0 && z == 0) continue;
                Vec3 v{x, y, z};
                i128 val = 0;
                val += static_cast<i128>(g.g[0][0]) * x * x;
                val += static_cast<i128>(g.g[1][1]) * y * y;
                val += static_cast<i128>(g.g[2][2]) * z * z;
                val += 2 * (static_cast<i128>(g.g[0][1]) * x * y +
                            static_cast<i128>(g.g[0][2]) * x * z +
                            static_cast<i128>(g.g[1][2]) * y * z);
                if (val <= bound) {
                    if (!emit(v, static_cast<i64>(val))) return;
                }
            }
        }
    }
}

struct Candidate {
    TernaryForm form;
    Mat3 basis;
};

// Deterministic order used to pick one basis among automorphic ones.
bool basis_less(const Mat3& a, const Mat3& b) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (a.m[i][j] != b.m[i][j]) return a.m[i][j] < b.m[i][j];
    return false;
}

// The unique Eisenstein-reduced form equal to g under a det +-1 basis
// change, found by exhausting short-vector triples.
Candidate canonical_search(const Gram& g) {
    i64 bound = std::max({g.g[0][0], g.g[1][1], g.g[2][2]});
    for (int attempt = 0; attempt < 6; ++attempt, bound *= 2) {
        std::vector<std::pair<Vec3, i64>> vecs;
        scan_ellipsoid(g, bound, [&](const Vec3& v, i64 q) {
            vecs.emplace_back(v, q);
            return true;
        });
        std::sort(vecs.begin(), vecs.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
        if (vecs.empty()) continue;
        i64 min_norm = vecs.front().second;

        bool have = false;
        Candidate best{};
        auto consider = [&](const Vec3& v1, i64 a, const Vec3& v2, i64 b, i64 t) {
            for (const auto& [v3, c] : vecs) {
                if (c < b) continue;
                i64 s = 2 * bilinear(g, v1, v3);
                if (std::abs(s) > a) continue;
                i64 r = 2 * bilinear(g, v2, v3);
                if (std::abs(r) > b) continue;
                Mat3 m;
                m.m = {{{v1.x, v2.x, v3.x}, {v1.y, v2.y, v3.y}, {v1.z, v2.z, v3.z}}};
                i64 d = det(m);
                if (d != 1 && d != -1) continue;
                if (!eisenstein_reduced(a, b, c, r, s, t)) continue;
                if (d == -1)
                    for (auto& row : m.m)
                        for (auto& e : row) e = -e;
                TernaryForm f{a, t, s, b, r, c};
                if (!have) {
                    best = {f, m};
                    have = true;
                } else if (f != best.form) {
                    throw std::logic_error("reduction is not unique for " + to_string(form_of(g)));
                } else if (basis_less(m, best.basis)) {
                    best.basis = m;
                }
            }
        };
        // A reduced form attains the lattice minimum in its first slot;
        // the unrestricted pass is a safety net.
        for (int pass = 0; pass < 2 && !have; ++pass) {
            for (const auto& [v1, a] : vecs) {
                if (pass == 0 && a != min_norm) break;
                for (const auto& [v2, b] : vecs) {
                    if (b < a) continue;
                    i64 t = 2 * bilinear(g, v1, v2);
                    if (std::abs(t) > a) continue;
                    consider(v1, a, v2, b, t);
                }
            }
        }
        if (have) return best;
    }
    throw std::logic_error("canonical reduction failed for " + to_string(form_of(g)));
}

bool order_key_less(const Vec3& a, const Vec3& b) {
    auto key = [](const Vec3& v) {
        return std::array<i64, 6>{std::abs(v.y), v.y < 0, std::abs(v.z),
                                  v.z < 0,        std::abs(v.x), v.x < 0};
    };
    return key(a) < key(b);
}

}  // namespace

i64 det(const Mat3& m) {
    std::array<std::array<i128, 3>, 3> a{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i][j] = m.m[i][j];
    return checked_i64(det3(a), "transform determinant overflow");
}

i64 evaluate(const TernaryForm& q, const Vec3& v) {
    i128 s = 0;
    s += static_cast<i128>(q.c11) * v.x * v.x;
    s += static_cast<i128>(q.c12) * v.x * v.y;
    s += static_cast<i128>(q.c13) * v.x * v.z;
    s += static_cast<i128>(q.c22) * v.y * v.y;
    s += static_cast<i128>(q.c23) * v.y * v.z;
    s += static_cast<i128>(q.c33) * v.z * v.z;
    return checked_i64(s, "form evaluation overflow");
}

bool is_classically_integral(const TernaryForm& q) {
    return q.c12 % 2 == 0 && q.c13 % 2 == 0 && q.c23 % 2 == 0;
}

i64 gram_determinant(const TernaryForm& q) {
    Gram a = gram_of(q);
    std::array<std::array<i128, 3>, 3> m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = a.g[i][j];
    return checked_i64(det3(m), "gram determinant overflow");
}

bool is_positive_definite(const TernaryForm& q) {
    // Leading principal minors of the doubled Gram matrix, which is
    // integral even for odd cross coefficients.
    std::array<std::array<i128, 3>, 3> d{{{2 * q.c11, q.c12, q.c13},
                                          {q.c12, 2 * q.c22, q.c23},
                                          {q.c13, q.c23, 2 * q.c33}}};
    i128 m1 = d[0][0];
    i128 m2 = d[0][0] * d[1][1] - d[0][1] * d[1][0];
    i128 m3 = det3(d);
    return m1 > 0 && m2 > 0 && m3 > 0;
}

Reduction reduce(const TernaryForm& q) {
    if (!is_positive_definite(q))
        throw std::invalid_argument("reduce: form is not positive definite: " + to_string(q));
    Gram g = gram_of(q);
    Mat3 u;
    greedy_reduce(g, u);
    Candidate c = canonical_search(g);
    Mat3 total = mat_mul(u, c.basis);
    if (c.form == q) total = Mat3{};
    if (det(total) != 1) throw std::logic_error("reduce: transform determinant is not +1");
    Gram check = conjugate(gram_of(q), total);
    if (form_of(check) != c.form) throw std::logic_error("reduce: transform does not conjugate");
    return {c.form, total};
}

bool is_equivalent(const TernaryForm& a, const TernaryForm& b) {
    if (gram_determinant(a) != gram_determinant(b)) return false;
    return reduce(a).form == reduce(b).form;
}

ClassList enumerate_classes(i64 d) {
    if (d < 1) throw std::invalid_argument("enumerate_classes: determinant must be positive");
    std::set<TernaryForm> classes;
    // Reduced forms satisfy a <= b <= c, abc <= 2*det, |t|,|s| <= a,
    // |r| <= b, so this box covers every class.
    for (i64 a = 1; a * a * a <= 2 * d; ++a)
        for (i64 b = a; a * b * b <= 2 * d; ++b)
            for (i64 c = b; a * b * c <= 2 * d; ++c)
                for (i64 t = -(a / 2); t <= a / 2; ++t)
                    for (i64 s = -(a / 2); s <= a / 2; ++s)
                        for (i64 r = -(b / 2); r <= b / 2; ++r) {
                            TernaryForm f{a, 2 * t, 2 * s, b, 2 * r, c};
                            if (!is_positive_definite(f)) continue;
                            if (gram_determinant(f) != d) continue;
                            classes.insert(reduce(f).form);
                        }
    ClassList out;
    out.determinant = d;
    out.representatives.assign(classes.begin(), classes.end());
    return out;
}

std::vector<Vec3> enumerate_representations(const TernaryForm& q, i64 m) {
    if (m < 0) throw std::invalid_argument("enumerate_representations: m must be >= 0");
    if (m == 0) return {Vec3{0, 0, 0}};
    Gram g = gram_of(q);
    std::vector<Vec3> out;
    scan_ellipsoid(g, m, [&](const Vec3& v, i64 val) {
        if (val == m) out.push_back(v);
        return true;
    });
    std::sort(out.begin(), out.end(), order_key_less);
    return out;
}

bool represents(const TernaryForm& q, i64 m) {
    if (m < 0) return false;
    if (m == 0) return true;
    Gram g = gram_of(q);
    bool found = false;
    scan_ellipsoid(g, m, [&](const Vec3&, i64 val) {
        if (val == m) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

std::string to_string(const TernaryForm& q) {
    std::ostringstream os;
    os << '[' << q.c11 << ',' << q.c12 << ',' << q.c13 << ',' << q.c22 << ',' << q.c23 << ','
       << q.c33 << ']';
    return os.str();
}

std::string to_polynomial(const TernaryForm& q) {
    static const char* monos[] = {"x^2", "xy", "xz", "y^2", "yz", "z^2"};
    const i64 coeffs[] = {q.c11, q.c12, q.c13, q.c22, q.c23, q.c33};
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 6; ++i) {
        i64 c = coeffs[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        i64 mag = std::abs(c);
        if (mag != 1) os << mag;
        os << monos[i];
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

TernaryForm parse_form(std::string_view text) {
    std::string cleaned;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) cleaned += ch;
    if (cleaned.size() < 2 || cleaned.front() != '[' || cleaned.back() != ']')
        throw std::invalid_argument("form must look like [c11,c12,c13,c22,c23,c33]");
    std::array<i64, 6> c{};
    std::string body = cleaned.substr(1, cleaned.size() - 2);
    std::size_t pos = 0;
    for (int i = 0; i < 6; ++i) {
        std::size_t next = body.find(',', pos);
        std::string tok = body.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.empty()) throw std::invalid_argument("form has too few coefficients");
        std::size_t used = 0;
        c[i] = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad coefficient: " + tok);
        if (next == std::string::npos) {
            if (i != 5) throw std::invalid_argument("form has too few coefficients");
            pos = body.size();
        } else {
            pos = next + 1;
        }
    }
    if (pos != body.size()) throw std::invalid_argument("form has too many coefficients");
    return {c[0], c[1], c[2], c[3], c[4], c[5]};
}

}  // namespace tqf
