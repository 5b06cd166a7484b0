#include "tqf/fixtures.hpp"

namespace tqf {

const std::vector<Certificate>& example_certificates() {
    static const std::vector<Certificate> fixtures = [] {
        std::vector<Certificate> v(3);

        v[0].theorem_id = 1;
        v[0].m = 51;
        v[0].determinant = 7;
        v[0].case_id = 1;
        v[0].a = 4217;
        v[0].b = 1613;
        v[0].h = 2608;
        v[0].A = 1568;
        v[0].B = 1048;
        v[0].form = {48291, 64544, 3136, 21567, 2096, 51};
        v[0].eval_vector = {2, 1, 0};
        v[0].eval_value = 343819;  // 7 * 49117

        v[1].theorem_id = 2;
        v[1].m = 67;
        v[1].determinant = 11;
        v[1].case_id = 3;
        v[1].a = 170249;
        v[1].b = 4413;
        v[1].h = -27410;
        v[1].A = 4174;
        v[1].B = 3146;
        v[1].form = {262575, 391164, 8348, 147787, 6292, 67};
        v[1].eval_vector = {1, 1, 0};
        v[1].eval_value = 801526;  // 2 * 11 * 36433

        v[2].theorem_id = 3;
        v[2].m = 26;
        v[2].determinant = 14;
        v[2].case_id = 4;
        v[2].a = 55618;
        v[2].a_prime = 27809;
        v[2].b = 8440;
        v[2].h = 21666;
        v[2].A = 1128;
        v[2].B = -6;
        v[2].form = {51077, 1146, 2256, 326, -12, 26};
        v[2].eval_vector = {1, 1, 0};
        v[2].eval_value = 52549;  // 7 * 7507

        return v;
    }();
    return fixtures;
}

}  // namespace tqf
