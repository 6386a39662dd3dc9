// d4u: exact construction of the Sylow p-subgroup U(q) of the Chevalley
// group D4(q), its conjugacy classes and its full complex irreducible
// character table, with a verification harness for the classification.
//
// Subcommands: roots, mul, conj, classes, midafi, family, chartable, verify.
// Output is deterministic for a fixed configuration.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "d4u/verify.hpp"

using json = nlohmann::ordered_json;
using namespace d4u;

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

struct CommonOpts {
    int p = 0, n = 0, q = 0;
    std::string modulus;
    std::string format = "json";
    std::string out;
    bool allow_large = false;
    int threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_q = true) {
    if (with_q) {
        cmd->add_option("--p", o.p, "field characteristic (prime)");
        cmd->add_option("--n", o.n, "extension degree");
        cmd->add_option("--q", o.q, "field order as a prime power (alternative to --p/--n)");
        cmd->add_option("--modulus", o.modulus,
                        "modulus override, comma-separated coefficients, constant term first");
    }
    cmd->add_option("--format", o.format, "output format: json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
    cmd->add_option("--out", o.out, "write output to a file instead of stdout");
    cmd->add_flag("--allow-large", o.allow_large,
                  "permit state spaces above 2^25");
    cmd->add_option("--threads", o.threads, "OpenMP thread count hint");
}

Field make_field(const CommonOpts& o) {
    int p = o.p, n = o.n;
    if (o.q > 0) {
        if (p > 0 || n > 0)
            throw CLI::ValidationError("--q conflicts with --p/--n");
        int m = o.q, pp = 2;
        while (m % pp != 0) ++pp;
        int e = 0;
        while (m % pp == 0) { m /= pp; ++e; }
        if (m != 1) throw CLI::ValidationError("--q is not a prime power");
        p = pp;
        n = e;
    }
    if (p == 0) throw CLI::ValidationError("specify --q or --p (and --n)");
    if (n == 0) n = 1;
    if (!o.modulus.empty()) {
        std::vector<int> coeffs;
        std::stringstream ss(o.modulus);
        std::string tok;
        while (std::getline(ss, tok, ',')) coeffs.push_back(std::stoi(tok));
        return Field::make(p, n, coeffs);
    }
    return Field::make(p, n);
}

void apply_threads(const CommonOpts& o) {
#ifdef _OPENMP
    if (o.threads > 0) omp_set_num_threads(o.threads);
#else
    (void)o;
#endif
}

std::uint64_t guard_for(const CommonOpts& o) {
    return o.allow_large ? 300'000'000ull : (1ull << 25);
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out);
        f << text;
    }
}

json field_json(const Field& f) {
    return json{{"p", f.p()}, {"n", f.n()}, {"modulus", f.modulus()}};
}

json element_json(const Field& f, const Coords& c) {
    json d = json::array();
    for (int r = 1; r <= kNumRoots; ++r)
        d.push_back(f.coeffs(c[(size_t)(r - 1)]));
    return json{{"d", d}};
}

Coords parse_element(const Field& f, const std::string& text) {
    // 12 comma-separated element indices in the field enumeration
    Coords c{};
    std::stringstream ss(text);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= kNumRoots) throw CLI::ValidationError("element needs 12 coordinates");
        int v = std::stoi(tok);
        if (v < 0 || v >= f.q())
            throw CLI::ValidationError("coordinate out of range for the field");
        c[(size_t)i++] = (fe)v;
    }
    if (i != kNumRoots) throw CLI::ValidationError("element needs 12 coordinates");
    return c;
}

json cyc_json(const Cyc& v) {
    json a = json::array();
    for (const Rat& r : v.coeffs()) {
        if (r.is_integer())
            a.push_back(r.num());
        else
            a.push_back(r.str());
    }
    return a;
}

json character_json(const Group& g, const ClassFunction& chi) {
    json values = json::array();
    for (const Cyc& v : chi.values()) values.push_back(cyc_json(v));
    return json{{"family", chi.family()},
                {"degree", std::to_string(chi.degree())},
                {"values", values},
                {"kernel_roots", kernel_roots(g, chi).members()}};
}

int cmd_roots(const CommonOpts& o) {
    if (o.format == "tsv") {
        std::ostringstream os;
        os << "index\tcoeffs\theight\thook\tarm\tleg\n";
        for (const Root& r : roots()) {
            os << r.index << "\t";
            for (int c : r.coeffs) os << c;
            os << "\t" << r.height << "\t";
            auto put = [&os](RootSet s) {
                bool first = true;
                for (int m : s.members()) {
                    if (!first) os << ",";
                    os << m;
                    first = false;
                }
                if (first) os << "-";
            };
            put(hook(r.index));
            os << "\t";
            put(arm(r.index));
            os << "\t";
            put(leg(r.index));
            os << "\n";
        }
        emit(o, os.str());
        return 0;
    }
    json out = json::array();
    for (const Root& r : roots())
        out.push_back(json{{"index", r.index},
                           {"coeffs", r.coeffs},
                           {"height", r.height},
                           {"hook", hook(r.index).members()},
                           {"arm", arm(r.index).members()},
                           {"leg", leg(r.index).members()}});
    emit(o, out.dump(2) + "\n");
    return 0;
}

int cmd_mul(const CommonOpts& o, const std::string& a, const std::string& b,
            bool conjugate) {
    Field f = make_field(o);
    Group g(f);
    Coords x = parse_element(f, a), y = parse_element(f, b);
    Coords r = conjugate ? g.conj(x, y) : g.mul(x, y);
    emit(o, element_json(f, r).dump(2) + "\n");
    return 0;
}

int cmd_classes(const CommonOpts& o, const std::string& quotient) {
    Field f = make_field(o);
    apply_threads(o);
    Group g(f);
    RootSet killed;
    if (!quotient.empty()) {
        std::stringstream ss(quotient);
        std::string tok;
        while (std::getline(ss, tok, ',')) killed.insert(std::stoi(tok));
    }
    ClassOptions opts;
    opts.state_guard = guard_for(o);
    ClassData cd = conjugacy_classes(g, Quotient(killed), opts);

    if (o.format == "tsv") {
        std::ostringstream os;
        os << "class\tsize\trep\n";
        for (std::size_t i = 0; i < cd.count(); ++i) {
            os << i << "\t" << cd.sizes[i] << "\t";
            for (int r = 1; r <= kNumRoots; ++r) {
                if (r > 1) os << ",";
                os << (int)cd.reps[i][(size_t)(r - 1)];
            }
            os << "\n";
        }
        emit(o, os.str());
        return 0;
    }
    json classes = json::array();
    for (std::size_t i = 0; i < cd.count(); ++i)
        classes.push_back(json{{"rep", element_json(f, cd.reps[i])["d"]},
                               {"size", cd.sizes[i]}});
    emit(o, json{{"q", f.q()},
                 {"field", field_json(f)},
                 {"killed", killed.members()},
                 {"count", cd.count()},
                 {"classes", classes}}
                .dump(2) +
             "\n");
    return 0;
}

int cmd_midafi(const CommonOpts& o, int alpha, int s) {
    Field f = make_field(o);
    apply_threads(o);
    Group g(f);
    ClassOptions opts;
    opts.state_guard = guard_for(o);
    ClassData cd = conjugacy_classes(g, {}, opts);
    ClassFunction mu = midafi(g, alpha, (fe)s, cd);
    emit(o, character_json(g, mu).dump(2) + "\n");
    return 0;
}

int cmd_family(const CommonOpts& o, const std::string& name, bool summary) {
    Field f = make_field(o);
    apply_threads(o);
    auto id = family_by_name(name);
    if (!id) throw CLI::ValidationError("unknown family: " + name);
    Group g(f);
    ClassOptions copts;
    copts.state_guard = guard_for(o);
    ClassData cd = conjugacy_classes(g, {}, copts);
    BuildContext ctx(g, cd);
    std::vector<ClassFunction> chars;
    FamilyReport rep = build_family(ctx, *id, chars);

    json by_degree = json::object();
    for (auto [d, c] : rep.by_degree) by_degree[std::to_string(d)] = c;
    json out{{"q", f.q()},
             {"field", field_json(f)},
             {"family", rep.name},
             {"count", rep.built},
             {"by_degree", by_degree},
             {"verified", rep.pass()}};
    if (!summary) {
        json cj = json::array();
        for (const ClassFunction& chi : chars)
            cj.push_back(character_json(g, chi));
        out["characters"] = cj;
    }
    emit(o, out.dump(2) + "\n");
    return rep.pass() ? 0 : 1;
}

int cmd_chartable(const CommonOpts& o, bool summary) {
    Field f = make_field(o);
    apply_threads(o);
    Group g(f);
    ClassOptions copts;
    copts.state_guard = guard_for(o);
    ClassData cd = conjugacy_classes(g, {}, copts);
    TableReport rep = build_all(g, cd);

    if (o.format == "tsv" || summary) {
        std::ostringstream os;
        os << "family\tdegree\tcount\n";
        std::map<std::pair<std::string, long long>, long long> counts;
        for (const ClassFunction& chi : rep.characters)
            ++counts[{chi.family(), chi.degree()}];
        for (auto& [key, c] : counts)
            os << key.first << "\t" << key.second << "\t" << c << "\n";
        os << "total\t-\t" << rep.characters.size() << "\n";
        os << "verified\t-\t" << (rep.pass() ? "yes" : "NO: " + rep.diagnostic)
           << "\n";
        emit(o, os.str());
        return rep.pass() ? 0 : 1;
    }
    json cj = json::array();
    for (const ClassFunction& chi : rep.characters)
        cj.push_back(character_json(g, chi));
    emit(o, json{{"q", f.q()},
                 {"field", field_json(f)},
                 {"count", rep.characters.size()},
                 {"verified", rep.pass()},
                 {"characters", cj}}
                .dump(2) +
             "\n");
    return rep.pass() ? 0 : 1;
}

int run_verify_for(const Field& f, const CommonOpts& o, json& report,
                   bool& all_pass) {
    VerifyOptions vo;
    VerifyReport rep = run_verify(f, vo);
    for (const Check& c : rep.checks) {
        report.push_back(json{{"check", c.name},
                              {"expected", c.expected},
                              {"computed", c.computed},
                              {"pass", c.pass},
                              {"ms", c.ms}});
        if (o.format == "tsv")
            std::cout << (c.pass ? "PASS" : "FAIL") << "\t" << c.name << "\t"
                      << c.expected << "\t" << c.computed << "\t" << c.ms
                      << "ms\n";
        if (!c.pass) all_pass = false;
    }
    return 0;
}

int cmd_verify(const CommonOpts& o) {
    apply_threads(o);
    std::vector<Field> fields;
    if (o.p > 0 || o.q > 0) {
        Field f = make_field(o);
        if (f.q() > 3 && !o.allow_large)
            throw CLI::ValidationError(
                "verify beyond q=3 needs --allow-large");
        fields.push_back(f);
    } else {
        fields.push_back(Field::make(2, 1));
        fields.push_back(Field::make(3, 1));
    }
    json report = json::array();
    bool all_pass = true;
    for (const Field& f : fields) run_verify_for(f, o, report, all_pass);
    if (o.format != "tsv")
        emit(o, json{{"pass", all_pass}, {"checks", report}}.dump(2) + "\n");
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sylow p-subgroup of D4(q): classes and characters"};
    app.require_subcommand(1);

    CommonOpts o_roots, o_mul, o_conj, o_classes, o_midafi, o_family,
        o_chartable, o_verify;
    std::string mul_a, mul_b, conj_a, conj_b, quotient, family_name;
    int alpha = 12, s_param = 1;
    bool family_summary = false, table_summary = false;

    auto* roots_cmd = app.add_subcommand("roots", "the positive root table with hooks, arms and legs");
    add_common(roots_cmd, o_roots, false);

    auto* mul_cmd = app.add_subcommand("mul", "multiply two elements given as coordinate lists");
    add_common(mul_cmd, o_mul);
    mul_cmd->add_option("--a", mul_a, "left factor, 12 comma-separated coordinates")->required();
    mul_cmd->add_option("--b", mul_b, "right factor")->required();

    auto* conj_cmd = app.add_subcommand("conj", "conjugate: h^-1 g h");
    add_common(conj_cmd, o_conj);
    conj_cmd->add_option("--g", conj_a, "the element g")->required();
    conj_cmd->add_option("--by", conj_b, "the conjugator h")->required();

    auto* classes_cmd = app.add_subcommand("classes", "conjugacy classes of U(q) or a quotient");
    add_common(classes_cmd, o_classes);
    classes_cmd->add_option("--quotient", quotient,
                            "comma-separated roots generating the killed pattern subgroup");

    auto* midafi_cmd = app.add_subcommand("midafi", "the induced character mu_{alpha,s}");
    add_common(midafi_cmd, o_midafi);
    midafi_cmd->add_option("--alpha", alpha, "root index 1..12")->required();
    midafi_cmd->add_option("--s", s_param, "nonzero parameter (field element index)")->required();

    auto* family_cmd = app.add_subcommand("family", "construct and verify one character family");
    add_common(family_cmd, o_family);
    family_cmd->add_option("--name", family_name,
                           "F12, F11, F8910odd, F8910even, F89, F810, F910, F8, F9, F10, "
                           "F567, F56, F57, F67, F5, F6, F7, Flin")->required();
    family_cmd->add_flag("--summary", family_summary, "counts only, no values");

    auto* chartable_cmd = app.add_subcommand("chartable", "the full irreducible character table");
    add_common(chartable_cmd, o_chartable);
    chartable_cmd->add_flag("--summary", table_summary, "counts only, no values");

    auto* verify_cmd = app.add_subcommand(
        "verify", "run the verification suite (default: q = 2 and q = 3)");
    add_common(verify_cmd, o_verify);

    CLI11_PARSE(app, argc, argv);

    try {
        if (roots_cmd->parsed()) return cmd_roots(o_roots);
        if (mul_cmd->parsed()) return cmd_mul(o_mul, mul_a, mul_b, false);
        if (conj_cmd->parsed()) return cmd_mul(o_conj, conj_a, conj_b, true);
        if (classes_cmd->parsed()) return cmd_classes(o_classes, quotient);
        if (midafi_cmd->parsed()) return cmd_midafi(o_midafi, alpha, s_param);
        if (family_cmd->parsed())
            return cmd_family(o_family, family_name, family_summary);
        if (chartable_cmd->parsed())
            return cmd_chartable(o_chartable, table_summary);
        if (verify_cmd->parsed()) return cmd_verify(o_verify);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
