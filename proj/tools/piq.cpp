#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "piq/classify.hpp"

// Exit codes: 0 the queried relation holds (or the command succeeded),
// 1 the relation fails, 2 usage or input error, 3 internal diagnostic
// (a verdict matrix that is not an equivalence, or a witness that does
// not re-verify).

namespace {

using nlohmann::json;
using namespace piq;

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

json pique_record(const LinearPique& p) {
    return json{{"modulus", p.modulus().value()}, {"rho", p.rho()}, {"lambda", p.lambda()}};
}

int run_autperm(i64 modulus, const std::string& format) {
    auto rows = automorphism_table(Modulus(modulus));
    if (format == "csv") {
        std::cout << render_automorphisms_csv(rows);
    } else if (format == "json") {
        json j;
        j["command"] = "autperm";
        j["inputs"] = {{"modulus", modulus}};
        j["table"] = json::array();
        for (const auto& row : rows)
            j["table"].push_back({{"unit", row.unit},
                                  {"permutation", row.cycles},
                                  {"fixed_points", row.fixed_points}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << render_automorphisms_text(rows);
    }
    return 0;
}

int run_char(const std::string& literal, const std::string& words,
             const std::string& format) {
    LinearPique p = parse_pique_literal(literal);
    std::vector<Word> ws =
        words.empty() ? default_word_list(p) : parse_word_list(words);
    CharacterTable t = character_table(p, ws);
    if (format == "csv") {
        std::cout << render_table_csv(t);
    } else if (format == "json") {
        json j;
        j["command"] = "char";
        j["inputs"] = {{"pique", literal},
                       {"words", words.empty() ? std::string("(default)") : words}};
        j["table"] = json::parse(render_table_json(t));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << render_table_text(t);
    }
    return 0;
}

int run_similar(const std::string& lit_a, const std::string& lit_b, bool show_witness,
                const std::string& format) {
    LinearPique a = parse_pique_literal(lit_a);
    LinearPique b = parse_pique_literal(lit_b);
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("similar: moduli differ (" + lit_a + " vs " + lit_b +
                                    ")");
    auto w = permutationally_similar(a, b);
    if (w && !verify_witness(*w, a, b))
        throw std::logic_error("similar: witness failed re-verification");
    if (format == "csv") {
        std::cout << "a,b,similar,witness\n"
                  << csv_field(lit_a) << "," << csv_field(lit_b) << ","
                  << (w ? "true" : "false") << ","
                  << (w ? csv_field(format_cycles(*w)) : "") << "\n";
    } else if (format == "json") {
        json j;
        j["command"] = "similar";
        j["inputs"] = {{"a", lit_a}, {"b", lit_b}};
        j["verdict"] = w ? "similar" : "not similar";
        if (w)
            j["witness"] = format_cycles(*w);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (w ? "similar" : "not similar") << "\n";
        if (w && show_witness)
            std::cout << "witness: " << format_cycles(*w) << "\n";
    }
    return w ? 0 : 1;
}

int run_iso(const std::string& lit_a, const std::string& lit_b, bool linear, bool magma,
            bool show_witness, const std::string& format) {
    LinearPique a = parse_pique_literal(lit_a);
    LinearPique b = parse_pique_literal(lit_b);
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("iso: moduli differ (" + lit_a + " vs " + lit_b + ")");
    std::optional<IsomorphismWitness> w;
    std::string mode = "pointed";
    if (linear) {
        mode = "linear";
        w = linear_isomorphic(a, b);
    } else {
        IsoOptions opt;
        opt.magma = magma;
        if (magma)
            mode = "magma";
        w = pique_isomorphic(a, b, opt);
    }
    if (w && !verify_isomorphism(w->map, a, b, w->kind))
        throw std::logic_error("iso: witness failed re-verification");
    if (format == "csv") {
        std::cout << "a,b,mode,isomorphic,witness\n"
                  << csv_field(lit_a) << "," << csv_field(lit_b) << "," << mode << ","
                  << (w ? "true" : "false") << ","
                  << (w ? csv_field(format_cycles(w->map)) : "") << "\n";
    } else if (format == "json") {
        json j;
        j["command"] = "iso";
        j["inputs"] = {{"a", lit_a}, {"b", lit_b}, {"mode", mode}};
        j["verdict"] = w ? "isomorphic" : "not isomorphic";
        if (w)
            j["witness"] = format_cycles(w->map);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (w ? "isomorphic" : "not isomorphic") << "\n";
        if (w && show_witness)
            std::cout << "witness: " << format_cycles(w->map) << "\n";
    }
    return w ? 0 : 1;
}

int run_classify(i64 modulus, bool omit_opposites, const std::string& out_dir, int jobs,
                 bool iso_on, bool iso_off, const std::string& format) {
    ClassifyOptions opt;
    opt.omit_opposites = omit_opposites;
    opt.jobs = jobs;
    if (iso_on)
        opt.isomorphism = true;
    if (iso_off)
        opt.isomorphism = false;
    ClassificationReport rep = classify(Modulus(modulus), opt);
    if (format == "csv")
        std::cout << render_report_csv(rep);
    else if (format == "json")
        std::cout << render_report_json(rep) << "\n";
    else
        std::cout << render_report_text(rep);
    if (!out_dir.empty()) {
        for (const std::string& name : write_report_files(rep, out_dir))
            std::cerr << "wrote " << out_dir << "/" << name << "\n";
    }
    if (!rep.transitivity_ok) {
        std::cerr << "diagnostic: similarity verdicts are not an equivalence relation\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"calculator for Z-linear piques: characters, similarity, isomorphism"};
    app.require_subcommand(1);
    const std::vector<std::string> formats = {"table", "csv", "json"};

    auto* autperm = app.add_subcommand(
        "autperm", "automorphism permutations of Z/n with fixed-point counts");
    i64 ap_modulus = 0;
    std::string ap_format = "table";
    autperm->add_option("--modulus", ap_modulus, "modulus n >= 2")->required();
    autperm->add_option("--format", ap_format)->check(CLI::IsMember(formats));

    auto* chr = app.add_subcommand("char", "character table of a pique over a word list");
    std::string ch_pique, ch_words, ch_format = "table";
    chr->add_option("--pique", ch_pique, "pique literal n:rho:lambda")->required();
    chr->add_option("--words", ch_words,
                    "comma-separated words, e.g. R,L2,RL3,R-1L2 (default: full grid)");
    chr->add_option("--format", ch_format)->check(CLI::IsMember(formats));

    auto* sim = app.add_subcommand("similar",
                                   "decide permutational similarity of two piques");
    std::string s_a, s_b, s_format = "table";
    bool s_witness = false;
    sim->add_option("--a", s_a, "first pique literal")->required();
    sim->add_option("--b", s_b, "second pique literal")->required();
    sim->add_flag("--witness", s_witness, "print the conjugating permutation");
    sim->add_option("--format", s_format)->check(CLI::IsMember(formats));

    auto* iso = app.add_subcommand("iso", "decide isomorphism of two piques");
    std::string i_a, i_b, i_format = "table";
    bool i_linear = false, i_magma = false, i_witness = false;
    iso->add_option("--a", i_a, "first pique literal")->required();
    iso->add_option("--b", i_b, "second pique literal")->required();
    auto* fl = iso->add_flag("--linear", i_linear, "restrict to linear isomorphisms");
    auto* fm = iso->add_flag("--magma", i_magma, "plain magma isomorphism, 0 need not map to 0");
    fl->excludes(fm);
    iso->add_flag("--witness", i_witness, "print the isomorphism as a permutation");
    iso->add_option("--format", i_format)->check(CLI::IsMember(formats));

    auto* cls = app.add_subcommand("classify",
                                   "classify all piques on Z/n by character, similarity, "
                                   "and isomorphism");
    i64 c_modulus = 0;
    bool c_omit = false, c_iso_on = false, c_iso_off = false;
    std::string c_out, c_format = "table";
    int c_jobs = 1;
    cls->add_option("--modulus", c_modulus, "modulus n >= 2")->required();
    cls->add_flag("--omit-opposites", c_omit, "keep one of each opposite pair");
    cls->add_option("--out", c_out, "directory for report files");
    cls->add_option("--jobs", c_jobs, "worker threads (0 = all cores, 1 = serial)");
    auto* ci = cls->add_flag("--iso", c_iso_on, "force isomorphism refinement on");
    auto* cn = cls->add_flag("--no-iso", c_iso_off, "skip isomorphism refinement");
    ci->excludes(cn);
    cls->add_option("--format", c_format)->check(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (autperm->parsed())
            return run_autperm(ap_modulus, ap_format);
        if (chr->parsed())
            return run_char(ch_pique, ch_words, ch_format);
        if (sim->parsed())
            return run_similar(s_a, s_b, s_witness, s_format);
        if (iso->parsed())
            return run_iso(i_a, i_b, i_linear, i_magma, i_witness, i_format);
        if (cls->parsed())
            return run_classify(c_modulus, c_omit, c_out, c_jobs, c_iso_on, c_iso_off,
                                c_format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "diagnostic: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
