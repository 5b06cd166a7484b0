#include "tqf/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tqf/fixtures.hpp"
#include "tqf/obstruction.hpp"
#include "tqf/witness.hpp"

namespace tqf {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kFailure = 3;

std::string pattern_text(i64 m, const ExclusionPattern& pat) {
    PatternInstance inst = pattern_instance(m, pat);
    std::ostringstream os;
    os << m << " = 4^" << inst.k << "(" << pat.modulus << "*" << inst.l << "+" << pat.residue
       << ")";
    return os.str();
}

int cmd_decide(int theorem_id, i64 m, bool json_mode, std::ostream& out) {
    const TheoremData& td = theorem(theorem_id);
    bool rep = decide(theorem_id, m);
    if (json_mode) {
        json j;
        j["theorem"] = theorem_id;
        j["m"] = m;
        j["represented"] = rep;
        j["pattern"] = {{"modulus", td.pattern.modulus}, {"residue", td.pattern.residue}};
        if (!rep) {
            PatternInstance inst = pattern_instance(m, td.pattern);
            j["k"] = inst.k;
            j["l"] = inst.l;
        }
        out << j.dump() << "\n";
    } else if (rep) {
        out << "REPRESENTED\n";
    } else {
        out << "EXCLUDED " << pattern_text(m, td.pattern) << "\n";
    }
    return rep ? kOk : kNegative;
}

int cmd_decide_range(int theorem_id, i64 lo, i64 hi, bool json_mode, std::ostream& out) {
    const TheoremData& td = theorem(theorem_id);
    json rows = json::array();
    for (i64 m = lo; m <= hi; ++m) {
        bool rep = decide(theorem_id, m);
        if (json_mode) {
            rows.push_back({{"m", m}, {"represented", rep}});
        } else if (rep) {
            out << m << " REPRESENTED\n";
        } else {
            out << m << " EXCLUDED " << pattern_text(m, td.pattern) << "\n";
        }
    }
    if (json_mode) out << rows.dump() << "\n";
    return kOk;
}

std::string vec_text(const Vec3& v) {
    std::ostringstream os;
    os << "(" << v.x << "," << v.y << "," << v.z << ")";
    return os.str();
}

int cmd_represent(const TernaryForm& q, i64 m, bool all, bool json_mode, std::ostream& out) {
    if (!is_positive_definite(q))
        throw CLI::ValidationError("represent", "form must be positive definite");
    std::vector<Vec3> found;
    if (all || json_mode) {
        found = enumerate_representations(q, m);
    } else {
        auto vs = enumerate_representations(q, m);
        if (!vs.empty()) found.push_back(vs.front());
    }
    if (json_mode) {
        json j;
        j["form"] = json::parse(to_string(q));
        j["m"] = m;
        j["found"] = !found.empty();
        json arr = json::array();
        std::size_t limit = all ? found.size() : std::min<std::size_t>(found.size(), 1);
        for (std::size_t i = 0; i < limit; ++i)
            arr.push_back({found[i].x, found[i].y, found[i].z});
        j["vectors"] = arr;
        out << j.dump() << "\n";
    } else if (found.empty()) {
        out << "NONE\n";
    } else {
        std::size_t limit = all ? found.size() : 1;
        for (std::size_t i = 0; i < limit; ++i) out << vec_text(found[i]) << "\n";
    }
    return found.empty() ? kNegative : kOk;
}

int cmd_certify(int theorem_id, i64 m, const std::string& out_file, i64 cap, bool json_mode,
                std::ostream& out, std::ostream& err) {
    if (!decide(theorem_id, m)) {
        const TheoremData& td = theorem(theorem_id);
        out << "EXCLUDED " << pattern_text(m, td.pattern) << "\n";
        return kNegative;
    }
    Certificate cert = generate_certificate(theorem_id, m, cap);
    VerifyReport report = verify_certificate(cert);
    if (!report.ok) throw std::logic_error("generated certificate failed: " + report.failure);

    std::string payload = certificate_to_json(cert);
    std::ostringstream summary;
    const TheoremData& td = theorem(theorem_id);
    summary << "theorem " << cert.theorem_id << "  m = " << cert.m << "  case " << cert.case_id
            << "\n"
            << "a = " << cert.a;
    if (cert.a_prime) summary << " (= 2 * " << *cert.a_prime << ")";
    summary << "  b = " << cert.b << "  h = " << cert.h << "\n"
            << "A = " << cert.A << "  B = " << cert.B << "\n"
            << "form = " << to_string(cert.form) << "\n"
            << "eval Q" << vec_text(cert.eval_vector) << " = " << cert.eval_value << " = "
            << td.aniso_prime << " * " << cert.eval_value / td.aniso_prime << "\n";

    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) throw CLI::ValidationError("--out", "cannot open " + out_file);
        f << payload;
        if (!json_mode) out << summary.str() << "certificate written to " << out_file << "\n";
    } else if (json_mode) {
        out << payload;
    } else {
        err << summary.str();
        out << payload;
    }
    return kOk;
}

int cmd_verify(const std::string& file, bool json_mode, std::ostream& out) {
    std::string text;
    if (file == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(file);
        if (!f) throw CLI::ValidationError("verify", "cannot open " + file);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    Certificate cert = certificate_from_json(text);
    VerifyReport report = verify_certificate(cert);
    if (json_mode) {
        json j;
        j["ok"] = report.ok;
        if (!report.ok) j["failure"] = report.failure;
        out << j.dump() << "\n";
    } else if (report.ok) {
        out << "PASS\n";
    } else {
        out << "FAIL: " << report.failure << "\n";
    }
    return report.ok ? kOk : kNegative;
}

int cmd_classes(i64 d, bool json_mode, std::ostream& out) {
    ClassList list = enumerate_classes(d);
    if (json_mode) {
        json j;
        j["determinant"] = d;
        j["count"] = list.representatives.size();
        json arr = json::array();
        for (const auto& f : list.representatives)
            arr.push_back({f.c11, f.c12, f.c13, f.c22, f.c23, f.c33});
        j["forms"] = arr;
        out << j.dump() << "\n";
    } else {
        out << list.representatives.size() << " classes of determinant " << d << "\n";
        for (const auto& f : list.representatives)
            out << to_string(f) << "  " << to_polynomial(f) << "\n";
    }
    return kOk;
}

int cmd_obstruction(const TernaryForm& q, i64 p, bool csv, bool json_mode, std::ostream& out) {
    ObstructionTable table = obstruction_table(q, p);
    if (json_mode) {
        json j;
        j["form"] = json::parse(to_string(q));
        j["prime"] = p;
        json forced = json::array({"x"});
        if (table.y_forced_zero) forced.push_back("y");
        j["forced_zero"] = forced;
        json rows = json::array();
        for (const auto& r : table.rows) rows.push_back({{"y", r.y}, {"z", r.z}, {"n", r.n}});
        j["rows"] = rows;
        j["excluded_n"] = table.excluded_n;
        out << j.dump() << "\n";
    } else if (csv) {
        out << render_table_csv(table);
    } else {
        out << render_table(table);
    }
    return kOk;
}

int cmd_examples(bool tamper, bool json_mode, std::ostream& out) {
    bool all_ok = true;
    json rows = json::array();
    int index = 0;
    for (Certificate cert : example_certificates()) {
        ++index;
        if (tamper && index == 2) cert.b += 1;  // demonstrate failure detection
        VerifyReport report = verify_certificate(cert);
        all_ok = all_ok && report.ok;
        if (json_mode) {
            json j;
            j["example"] = index;
            j["theorem"] = cert.theorem_id;
            j["m"] = cert.m;
            j["ok"] = report.ok;
            if (!report.ok) j["failure"] = report.failure;
            rows.push_back(j);
        } else {
            out << "example " << index << " (theorem " << cert.theorem_id << ", m = " << cert.m
                << "): " << (report.ok ? "PASS" : "FAIL: " + report.failure) << "\n";
        }
    }
    if (json_mode) out << rows.dump() << "\n";
    if (!json_mode) out << (all_ok ? "3/3 PASS\n" : "verification failures present\n");
    return all_ok ? kOk : kNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"decision and certification for four ternary quadratic forms"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "machine-readable output");

    int theorem_id = 1;
    i64 m = 0, d = 0, p = 0;
    std::string form_text, file, out_file, range_text;
    bool all = false, csv = false, tamper = false;
    i64 cap = kDefaultSearchCap;

    auto* decide_cmd = app.add_subcommand("decide", "apply the representation criterion");
    decide_cmd->fallthrough();
    decide_cmd->add_option("theorem", theorem_id, "theorem id 1..4")->required();
    decide_cmd->add_option("m", m, "integer to test");
    decide_cmd->add_option("--range", range_text, "decide every m in lo..hi");

    auto* represent_cmd = app.add_subcommand("represent", "search representing vectors");
    represent_cmd->fallthrough();
    represent_cmd->add_option("form", form_text, "form [c11,c12,c13,c22,c23,c33]")->required();
    represent_cmd->add_option("m", m, "value to represent")->required();
    represent_cmd->add_flag("--all", all, "list every representing vector");

    auto* certify_cmd = app.add_subcommand("certify", "construct a representation certificate");
    certify_cmd->fallthrough();
    certify_cmd->add_option("theorem", theorem_id, "theorem id 1..4")->required();
    certify_cmd->add_option("m", m, "admissible squarefree integer")->required();
    certify_cmd->add_option("--out", out_file, "write certificate JSON to this file");
    certify_cmd->add_option("--cap", cap, "prime search cap");

    auto* verify_cmd = app.add_subcommand("verify", "check a certificate file");
    verify_cmd->fallthrough();
    verify_cmd->add_option("file", file, "certificate JSON file, or - for stdin")->required();

    auto* classes_cmd = app.add_subcommand("classes", "enumerate classes of a determinant");
    classes_cmd->fallthrough();
    classes_cmd->add_option("D", d, "determinant")->required();

    auto* obstruction_cmd =
        app.add_subcommand("obstruction", "residue table at an anisotropic prime");
    obstruction_cmd->fallthrough();
    obstruction_cmd->add_option("form", form_text, "form [c11,c12,c13,c22,c23,c33]")->required();
    obstruction_cmd->add_option("p", p, "odd prime")->required();
    obstruction_cmd->add_flag("--csv", csv, "machine-readable rows");

    auto* examples_cmd = app.add_subcommand("examples", "re-verify the bundled worked examples");
    examples_cmd->fallthrough();
    examples_cmd->add_flag("--tamper", tamper, "corrupt one fixture to demonstrate detection");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*decide_cmd) {
            if (theorem_id < 1 || theorem_id > 4)
                throw CLI::ValidationError("decide", "theorem id must be 1..4");
            if (!range_text.empty()) {
                auto sep = range_text.find("..");
                if (sep == std::string::npos)
                    throw CLI::ValidationError("--range", "expected lo..hi");
                i64 lo = std::stoll(range_text.substr(0, sep));
                i64 hi = std::stoll(range_text.substr(sep + 2));
                if (lo < 1 || hi < lo) throw CLI::ValidationError("--range", "bad bounds");
                return cmd_decide_range(theorem_id, lo, hi, json_mode, out);
            }
            if (m < 1) throw CLI::ValidationError("decide", "m must be a positive integer");
            return cmd_decide(theorem_id, m, json_mode, out);
        }
        if (*represent_cmd) {
            if (m < 0) throw CLI::ValidationError("represent", "m must be nonnegative");
            return cmd_represent(parse_form(form_text), m, all, json_mode, out);
        }
        if (*certify_cmd) {
            if (theorem_id < 1 || theorem_id > 4)
                throw CLI::ValidationError("certify", "theorem id must be 1..4");
            if (m < 1) throw CLI::ValidationError("certify", "m must be a positive integer");
            return cmd_certify(theorem_id, m, out_file, cap, json_mode, out, err);
        }
        if (*verify_cmd) return cmd_verify(file, json_mode, out);
        if (*classes_cmd) {
            if (d < 1) throw CLI::ValidationError("classes", "determinant must be positive");
            return cmd_classes(d, json_mode, out);
        }
        if (*obstruction_cmd) return cmd_obstruction(parse_form(form_text), p, csv, json_mode, out);
        if (*examples_cmd) return cmd_examples(tamper, json_mode, out);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SearchExhausted& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kFailure;
    }
    err << "error: no command\n";
    return kUsage;
}

}  // namespace tqf
