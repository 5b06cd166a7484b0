#include "tqf/theorems.hpp"

#include <stdexcept>

namespace tqf {

namespace {

std::vector<TheoremData> build_table() {
    std::vector<TheoremData> t(5);

    // Determinant 7: 2x^2+2xy+2xz+2y^2+2yz+3z^2 represents m iff
    // m != 4^k(8l+1).
    t[1].id = 1;
    t[1].determinant = 7;
    t[1].aniso_prime = 7;
    t[1].pattern = {8, 1};
    t[1].q1 = {2, 2, 2, 2, 2, 3};
    t[1].competitors = {{1, 0, 0, 1, 0, 7}, {1, 0, 0, 2, 2, 4}};
    t[1].a_mod_p = 3;
    t[1].admissible_bh = {{0, 0}, {3, 4}, {5, 1}, {6, 2}};
    t[1].cases = {
        {1, 4, {3}, 1, {{1, 4}, {3, 49}}},
        {2, 8, {6}, 1, {{1, 8}, {3, 49}}},
        {3, 8, {5}, 2, {{1, 4}, {26, 49}}},
        {4, 8, {2}, 1, {{5, 8}, {3, 49}}},
    };

    // Determinant 11: x^2+2y^2+2yz+6z^2, excluded class 4^k(8l+5).
    t[2].id = 2;
    t[2].determinant = 11;
    t[2].aniso_prime = 11;
    t[2].pattern = {8, 5};
    t[2].q1 = {1, 0, 0, 2, 2, 6};
    t[2].competitors = {{1, 0, 0, 1, 0, 11}, {1, 0, 0, 3, 2, 4}};
    t[2].a_mod_p = 2;
    t[2].admissible_bh = {{0, 0}, {2, 2}, {6, 1}, {7, 5}, {8, 4}, {10, 3}};
    t[2].cases = {
        {1, 8, {1}, 2, {{1, 4}, {1, 121}}},
        {2, 8, {2}, 1, {{5, 8}, {2, 121}}},
        {3, 4, {3}, 1, {{1, 4}, {2, 121}}},
        {4, 8, {6}, 1, {{1, 8}, {2, 121}}},
    };

    // Determinant 14: x^2+3y^2+2yz+5z^2, excluded class 4^k(16l+2).
    t[3].id = 3;
    t[3].determinant = 14;
    t[3].aniso_prime = 7;
    t[3].pattern = {16, 2};
    t[3].q1 = {1, 0, 0, 3, 2, 5};
    t[3].competitors = {{1, 0, 0, 1, 0, 14}, {1, 0, 0, 2, 0, 7}};
    t[3].a_mod_p = 3;
    t[3].admissible_bh = {{0, 0}, {3, 4}, {5, 1}, {6, 2}};
    t[3].cases = {
        {1, 4, {1}, 1, {{5, 8}, {3, 49}}},
        {2, 4, {3}, 1, {{1, 8}, {3, 49}}},
        {3, 16, {6, 14}, 1, {{1, 8}, {3, 49}}},
        {4, 16, {10}, 2, {{1, 8}, {26, 49}}, true},
    };

    // Determinant 23: 2x^2+2xy+3y^2+2yz+5z^2, excluded class 4^k(8l+1).
    t[4].id = 4;
    t[4].determinant = 23;
    t[4].aniso_prime = 23;
    t[4].pattern = {8, 1};
    t[4].q1 = {2, 2, 0, 3, 2, 5};
    t[4].competitors = {
        {1, 0, 0, 1, 0, 23}, {1, 0, 0, 2, 2, 12}, {1, 0, 0, 3, 2, 8}, {1, 0, 0, 4, 2, 6}};
    t[4].a_mod_p = 5;
    t[4].admissible_bh = {{0, 0},  {5, 5},   {7, 9},   {10, 2}, {11, 3},  {14, 1},
                          {15, 11}, {17, 4}, {19, 7}, {20, 10}, {21, 6}, {22, 8}};
    t[4].cases = {
        {1, 4, {3}, 1, {{1, 4}, {5, 529}}},
        {2, 8, {6}, 1, {{1, 8}, {5, 529}}},
        {3, 8, {5}, 2, {{1, 4}, {267, 529}}, true},
        {4, 8, {2}, 1, {{5, 8}, {5, 529}}},
    };

    return t;
}

}  // namespace

const TheoremData& theorem(int id) {
    static const std::vector<TheoremData> table = build_table();
    if (id < 1 || id > 4) throw std::invalid_argument("theorem id must be 1..4");
    return table[static_cast<std::size_t>(id)];
}

bool uses_variant_vector(const TheoremData& t, i64 b, i64 h) {
    if (t.aniso_prime != 7) return false;
    auto mod = [](i64 v, i64 m) { return ((v % m) + m) % m; };
    return mod(b, 7) == 3 && mod(h, 7) == 4;
}

}  // namespace tqf
