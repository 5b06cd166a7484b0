#include <cstdlib>

#include "json.hpp"
#include "tqf/witness.hpp"

namespace tqf {

namespace {

using nlohmann::json;

// Integers beyond the 53-bit safe range go out as strings so JavaScript
// consumers cannot silently corrupt them.
constexpr i64 kJsonSafe = (i64(1) << 53) - 1;

json store_int(i64 v) {
    if (v > kJsonSafe || v < -kJsonSafe) return std::to_string(v);
    return v;
}

i64 load_int(const json& j, const char* key) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("certificate missing field ") + key);
    const json& v = j.at(key);
    if (v.is_number_integer()) return v.get<i64>();
    if (v.is_string()) {
        const std::string& s = v.get_ref<const std::string&>();
        std::size_t used = 0;
        i64 out = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(std::string("bad integer in field ") + key);
        return out;
    }
    throw std::invalid_argument(std::string("field ") + key + " must be an integer or string");
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
    json j;
    j["theorem_id"] = cert.theorem_id;
    j["m"] = store_int(cert.m);
    j["D"] = store_int(cert.determinant);
    j["case_id"] = cert.case_id;
    j["a"] = store_int(cert.a);
    if (cert.a_prime) j["a_prime"] = store_int(*cert.a_prime);
    j["b"] = store_int(cert.b);
    j["h"] = store_int(cert.h);
    j["A"] = store_int(cert.A);
    j["B"] = store_int(cert.B);
    j["form"] = json::array({store_int(cert.form.c11), store_int(cert.form.c12),
                             store_int(cert.form.c13), store_int(cert.form.c22),
                             store_int(cert.form.c23), store_int(cert.form.c33)});
    j["eval_vector"] = json::array(
        {store_int(cert.eval_vector.x), store_int(cert.eval_vector.y), store_int(cert.eval_vector.z)});
    j["eval_value"] = store_int(cert.eval_value);
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("certificate JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("certificate must be a JSON object");

    auto load_array = [&](const char* key, std::size_t n) {
        if (!j.contains(key) || !j.at(key).is_array() || j.at(key).size() != n)
            throw std::invalid_argument(std::string("field ") + key + " must be an array of " +
                                        std::to_string(n) + " integers");
        std::vector<i64> out;
        for (std::size_t i = 0; i < n; ++i) {
            json wrap;
            wrap["v"] = j.at(key).at(i);
            out.push_back(load_int(wrap, "v"));
        }
        return out;
    };

    Certificate cert;
    cert.theorem_id = static_cast<int>(load_int(j, "theorem_id"));
    cert.m = load_int(j, "m");
    cert.determinant = load_int(j, "D");
    cert.case_id = static_cast<int>(load_int(j, "case_id"));
    cert.a = load_int(j, "a");
    if (j.contains("a_prime") && !j.at("a_prime").is_null()) cert.a_prime = load_int(j, "a_prime");
    cert.b = load_int(j, "b");
    cert.h = load_int(j, "h");
    cert.A = load_int(j, "A");
    cert.B = load_int(j, "B");
    auto f = load_array("form", 6);
    cert.form = {f[0], f[1], f[2], f[3], f[4], f[5]};
    auto v = load_array("eval_vector", 3);
    cert.eval_vector = {v[0], v[1], v[2]};
    cert.eval_value = load_int(j, "eval_value");
    return cert;
}

}  // namespace tqf
