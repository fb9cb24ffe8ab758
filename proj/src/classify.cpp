#include "piq/classify.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"
#include "table_text.hpp"

namespace piq {

namespace {

int resolve_jobs(int jobs) {
#ifdef _OPENMP
    if (jobs <= 0)
        return omp_get_max_threads();
    return jobs;
#else
    (void)jobs;
    return 1;
#endif
}

struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(int count) : parent(static_cast<size_t>(count)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

std::vector<LinearPique> enumerate_piques(Modulus n, bool omit_opposites) {
    std::vector<LinearPique> out;
    for (const Unit& r : unit_group(n))
        for (const Unit& l : unit_group(n)) {
            if (omit_opposites && r.value() > l.value())
                continue;  // opposite (l, r) is lex-smaller and already listed
            out.emplace_back(n, r.value(), l.value());
        }
    return out;
}

std::vector<AutomorphismRow> automorphism_table(Modulus n) {
    std::vector<AutomorphismRow> rows;
    for (const Unit& u : unit_group(n)) {
        Permutation p = automorphism_permutation(u);
        rows.push_back({u.value(), format_cycles(p), fixed_point_count(p)});
    }
    return rows;
}

i64 unit_group_exponent(Modulus n) {
    i64 e = 1;
    for (const Unit& u : unit_group(n))
        e = std::lcm(e, unit_order(u));
    return e;
}

std::vector<i64> character_key(const LinearPique& P, i64 exponent) {
    // Every unit order divides the exponent, so the grid below is a full
    // period of the character in both directions: keys are equal iff the
    // characters are equal. Prefix with (n, e) so keys from different
    // moduli can never collide.
    ExponentGrid g = character_grid(P, exponent, exponent);
    std::vector<i64> key;
    key.reserve(g.values.size() + 2);
    key.push_back(P.modulus().value());
    key.push_back(exponent);
    key.insert(key.end(), g.values.begin(), g.values.end());
    return key;
}

std::vector<std::vector<i64>> character_keys_serial(const std::vector<LinearPique>& ps) {
    std::vector<std::vector<i64>> out(ps.size());
    std::map<i64, i64> exponent;  // per modulus
    for (size_t i = 0; i < ps.size(); ++i) {
        i64 n = ps[i].modulus().value();
        auto it = exponent.find(n);
        if (it == exponent.end())
            it = exponent.emplace(n, unit_group_exponent(ps[i].modulus())).first;
        out[i] = character_key(ps[i], it->second);
    }
    return out;
}

std::vector<std::vector<i64>> character_keys_parallel(const std::vector<LinearPique>& ps,
                                                      int jobs) {
    std::vector<std::vector<i64>> out(ps.size());
    std::map<i64, i64> exponent;
    for (const LinearPique& p : ps) {
        i64 n = p.modulus().value();
        if (!exponent.count(n))
            exponent.emplace(n, unit_group_exponent(p.modulus()));
    }
    int threads = resolve_jobs(jobs);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(ps.size()); ++i) {
        const LinearPique& p = ps[static_cast<size_t>(i)];
        out[static_cast<size_t>(i)] =
            character_key(p, exponent.at(p.modulus().value()));
    }
    (void)threads;
    return out;
}

namespace {

PairVerdict solve_pair(const std::vector<LinearPique>& ps, int a, int b) {
    PairVerdict v;
    v.a = a;
    v.b = b;
    auto w = permutationally_similar(ps[static_cast<size_t>(a)],
                                     ps[static_cast<size_t>(b)]);
    v.similar = w.has_value();
    if (w) {
        // solver output is never trusted as-is
        if (!verify_witness(*w, ps[static_cast<size_t>(a)], ps[static_cast<size_t>(b)]))
            throw std::logic_error("classify: unverifiable similarity witness");
        v.witness = std::move(w);
    }
    return v;
}

}  // namespace

std::vector<PairVerdict> pair_verdicts_serial(const std::vector<LinearPique>& ps,
                                              const std::vector<std::pair<int, int>>& pairs) {
    std::vector<PairVerdict> out(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i)
        out[i] = solve_pair(ps, pairs[i].first, pairs[i].second);
    return out;
}

std::vector<PairVerdict> pair_verdicts_parallel(const std::vector<LinearPique>& ps,
                                                const std::vector<std::pair<int, int>>& pairs,
                                                int jobs) {
    std::vector<PairVerdict> out(pairs.size());
    int threads = resolve_jobs(jobs);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(pairs.size()); ++i)
        out[static_cast<size_t>(i)] =
            solve_pair(ps, pairs[static_cast<size_t>(i)].first,
                       pairs[static_cast<size_t>(i)].second);
    (void)threads;
    return out;
}

std::vector<std::vector<int>> partition_from_verdicts(int count,
                                                      const std::vector<PairVerdict>& pairs,
                                                      bool* equivalence_ok) {
    DisjointSets sets(count);
    for (const PairVerdict& v : pairs)
        if (v.similar)
            sets.unite(v.a, v.b);
    bool ok = true;
    for (const PairVerdict& v : pairs)
        if (!v.similar && sets.find(v.a) == sets.find(v.b))
            ok = false;  // positive verdicts connect a pair judged dissimilar
    if (equivalence_ok)
        *equivalence_ok = ok;
    std::map<int, std::vector<int>> groups;
    for (int x = 0; x < count; ++x)
        groups[sets.find(x)].push_back(x);
    std::vector<std::vector<int>> out;
    out.reserve(groups.size());
    std::map<int, size_t> first_seen;
    for (int x = 0; x < count; ++x) {
        int root = sets.find(x);
        if (!first_seen.count(root)) {
            first_seen[root] = out.size();
            out.push_back(std::move(groups[root]));
        }
    }
    return out;
}

ClassificationReport classify(Modulus n, const ClassifyOptions& opt) {
    ClassificationReport rep;
    rep.modulus = n.value();
    rep.omit_opposites = opt.omit_opposites;
    rep.piques = enumerate_piques(n, opt.omit_opposites);
    rep.automorphisms = automorphism_table(n);

    bool want_iso = opt.isomorphism.value_or(n.value() <= opt.iso_bound);
    if (want_iso && n.value() > opt.iso_bound)
        throw std::invalid_argument("classify: isomorphism refinement requested but n > " +
                                    std::to_string(opt.iso_bound));
    rep.with_isomorphism = want_iso;

    auto keys = opt.jobs == 1 ? character_keys_serial(rep.piques)
                              : character_keys_parallel(rep.piques, opt.jobs);

    // character classes in order of first appearance
    std::map<std::vector<i64>, int> class_of_key;
    std::vector<std::vector<int>> members;
    for (size_t i = 0; i < rep.piques.size(); ++i) {
        auto [it, fresh] =
            class_of_key.try_emplace(keys[i], static_cast<int>(members.size()));
        if (fresh)
            members.emplace_back();
        members[static_cast<size_t>(it->second)].push_back(static_cast<int>(i));
    }

    // one flat pair list over all classes keeps the parallel kernel busy
    std::vector<std::pair<int, int>> all_pairs;
    std::vector<std::pair<size_t, size_t>> ranges(members.size());
    for (size_t c = 0; c < members.size(); ++c) {
        size_t begin = all_pairs.size();
        const auto& m = members[c];
        for (size_t i = 0; i < m.size(); ++i)
            for (size_t j = i + 1; j < m.size(); ++j)
                all_pairs.emplace_back(m[i], m[j]);
        ranges[c] = {begin, all_pairs.size()};
    }
    auto verdicts = opt.jobs == 1 ? pair_verdicts_serial(rep.piques, all_pairs)
                                  : pair_verdicts_parallel(rep.piques, all_pairs, opt.jobs);

    rep.transitivity_ok = true;
    for (size_t c = 0; c < members.size(); ++c) {
        CharacterClass cls;
        cls.members = members[c];
        cls.pairs.assign(verdicts.begin() + static_cast<std::ptrdiff_t>(ranges[c].first),
                         verdicts.begin() + static_cast<std::ptrdiff_t>(ranges[c].second));

        std::map<int, int> local;
        for (size_t i = 0; i < cls.members.size(); ++i)
            local[cls.members[i]] = static_cast<int>(i);
        std::vector<PairVerdict> local_pairs = cls.pairs;
        for (PairVerdict& v : local_pairs) {
            v.a = local[v.a];
            v.b = local[v.b];
        }
        bool ok = true;
        auto sim_local = partition_from_verdicts(static_cast<int>(cls.members.size()),
                                                 local_pairs, &ok);
        rep.transitivity_ok = rep.transitivity_ok && ok;
        for (const auto& grp : sim_local) {
            std::vector<int> g;
            for (int x : grp)
                g.push_back(cls.members[static_cast<size_t>(x)]);
            cls.similarity_classes.push_back(std::move(g));
        }

        if (want_iso) {
            for (const auto& sim_class : cls.similarity_classes) {
                DisjointSets sets(static_cast<int>(sim_class.size()));
                for (size_t i = 0; i < sim_class.size(); ++i)
                    for (size_t j = i + 1; j < sim_class.size(); ++j) {
                        auto w = pique_isomorphic(
                            rep.piques[static_cast<size_t>(sim_class[i])],
                            rep.piques[static_cast<size_t>(sim_class[j])],
                            IsoOptions{false, opt.iso_bound});
                        if (w)
                            sets.unite(static_cast<int>(i), static_cast<int>(j));
                    }
                std::map<int, std::vector<int>> groups;
                for (size_t i = 0; i < sim_class.size(); ++i)
                    groups[sets.find(static_cast<int>(i))].push_back(sim_class[i]);
                std::vector<bool> seen(sim_class.size(), false);
                for (size_t i = 0; i < sim_class.size(); ++i) {
                    int root = sets.find(static_cast<int>(i));
                    if (!seen[static_cast<size_t>(root)]) {
                        seen[static_cast<size_t>(root)] = true;
                        cls.isomorphism_classes.push_back(groups[root]);
                    }
                }
            }
        }
        rep.classes.push_back(std::move(cls));
    }
    return rep;
}

namespace {

struct ClassLabels {
    std::vector<std::string> character;  // per pique index
    std::vector<std::string> similarity;
    std::vector<std::string> isomorphism;
};

ClassLabels label_classes(const ClassificationReport& r) {
    ClassLabels lab;
    size_t count = r.piques.size();
    lab.character.assign(count, "");
    lab.similarity.assign(count, "");
    lab.isomorphism.assign(count, r.with_isomorphism ? "" : "-");
    for (size_t c = 0; c < r.classes.size(); ++c) {
        const CharacterClass& cls = r.classes[c];
        for (int m : cls.members)
            lab.character[static_cast<size_t>(m)] = "C" + std::to_string(c + 1);
        for (size_t s = 0; s < cls.similarity_classes.size(); ++s)
            for (int m : cls.similarity_classes[s])
                lab.similarity[static_cast<size_t>(m)] =
                    "C" + std::to_string(c + 1) + ".S" + std::to_string(s + 1);
        for (size_t i = 0; i < cls.isomorphism_classes.size(); ++i)
            for (int m : cls.isomorphism_classes[i])
                lab.isomorphism[static_cast<size_t>(m)] =
                    "C" + std::to_string(c + 1) + ".I" + std::to_string(i + 1);
    }
    return lab;
}

size_t count_similarity_classes(const ClassificationReport& r) {
    size_t total = 0;
    for (const auto& c : r.classes)
        total += c.similarity_classes.size();
    return total;
}

size_t count_isomorphism_classes(const ClassificationReport& r) {
    size_t total = 0;
    for (const auto& c : r.classes)
        total += c.isomorphism_classes.size();
    return total;
}

std::string pique_name(const LinearPique& p) {
    return "(" + std::to_string(p.rho()) + "," + std::to_string(p.lambda()) + ")";
}

detail::TextTable automorphisms_table(const std::vector<AutomorphismRow>& rows) {
    detail::TextTable t;
    t.headers = {"unit", "permutation", "fixed points"};
    for (const AutomorphismRow& row : rows)
        t.rows.push_back(
            {std::to_string(row.unit), row.cycles, std::to_string(row.fixed_points)});
    return t;
}

}  // namespace

std::string render_report_text(const ClassificationReport& r) {
    std::ostringstream out;
    out << "classification of Z-linear piques on Z/" << r.modulus
        << (r.omit_opposites ? " (opposites omitted)" : "") << "\n";
    out << "piques: " << r.piques.size() << "   character classes: " << r.classes.size()
        << "   similarity classes: " << count_similarity_classes(r);
    if (r.with_isomorphism)
        out << "   isomorphism classes: " << count_isomorphism_classes(r);
    else
        out << "   isomorphism classes: skipped";
    out << "\n";
    if (!r.transitivity_ok)
        out << "WARNING: similarity verdicts are not an equivalence relation\n";
    out << "\n";

    out << "automorphisms of Z/" << r.modulus << "\n"
        << automorphisms_table(r.automorphisms).to_text() << "\n";

    for (size_t c = 0; c < r.classes.size(); ++c) {
        const CharacterClass& cls = r.classes[c];
        out << "character class C" << c + 1 << ":";
        for (int m : cls.members)
            out << " " << pique_name(r.piques[static_cast<size_t>(m)]);
        out << "\n";
        out << "  similarity classes:";
        for (const auto& s : cls.similarity_classes) {
            out << " {";
            for (size_t i = 0; i < s.size(); ++i)
                out << (i ? " " : "")
                    << pique_name(r.piques[static_cast<size_t>(s[i])]);
            out << "}";
        }
        out << "\n";
        if (r.with_isomorphism) {
            out << "  isomorphism classes:";
            for (const auto& s : cls.isomorphism_classes) {
                out << " {";
                for (size_t i = 0; i < s.size(); ++i)
                    out << (i ? " " : "")
                        << pique_name(r.piques[static_cast<size_t>(s[i])]);
                out << "}";
            }
            out << "\n";
        }
        for (const PairVerdict& v : cls.pairs) {
            out << "  " << pique_name(r.piques[static_cast<size_t>(v.a)])
                << (v.similar ? " ~ " : " !~ ")
                << pique_name(r.piques[static_cast<size_t>(v.b)]);
            if (v.witness)
                out << "  via " << format_cycles(*v.witness);
            out << "\n";
        }
    }
    return out.str();
}

std::string render_report_csv(const ClassificationReport& r) {
    ClassLabels lab = label_classes(r);
    detail::TextTable t;
    t.headers = {"modulus", "rho", "lambda", "character_class", "similarity_class",
                 "isomorphism_class"};
    for (size_t i = 0; i < r.piques.size(); ++i) {
        const LinearPique& p = r.piques[i];
        t.rows.push_back({std::to_string(p.modulus().value()), std::to_string(p.rho()),
                          std::to_string(p.lambda()), lab.character[i], lab.similarity[i],
                          lab.isomorphism[i]});
    }
    return t.to_csv();
}

std::string render_report_json(const ClassificationReport& r) {
    nlohmann::json j;
    j["modulus"] = r.modulus;
    j["omit_opposites"] = r.omit_opposites;
    j["with_isomorphism"] = r.with_isomorphism;
    j["transitivity_ok"] = r.transitivity_ok;
    j["piques"] = nlohmann::json::array();
    for (const LinearPique& p : r.piques)
        j["piques"].push_back({{"modulus", p.modulus().value()},
                               {"rho", p.rho()},
                               {"lambda", p.lambda()}});
    j["automorphisms"] = nlohmann::json::array();
    for (const AutomorphismRow& row : r.automorphisms)
        j["automorphisms"].push_back({{"unit", row.unit},
                                      {"permutation", row.cycles},
                                      {"fixed_points", row.fixed_points}});
    j["character_classes"] = nlohmann::json::array();
    for (const CharacterClass& cls : r.classes) {
        nlohmann::json jc;
        jc["members"] = cls.members;
        jc["similarity_classes"] = cls.similarity_classes;
        if (r.with_isomorphism)
            jc["isomorphism_classes"] = cls.isomorphism_classes;
        jc["pairs"] = nlohmann::json::array();
        for (const PairVerdict& v : cls.pairs) {
            nlohmann::json jv{{"a", v.a}, {"b", v.b}, {"similar", v.similar}};
            if (v.witness)
                jv["witness"] = format_cycles(*v.witness);
            jc["pairs"].push_back(std::move(jv));
        }
        j["character_classes"].push_back(std::move(jc));
    }
    return j.dump(2);
}

std::string render_automorphisms_csv(const std::vector<AutomorphismRow>& rows) {
    detail::TextTable t = automorphisms_table(rows);
    t.headers = {"unit", "permutation", "fixed_points"};
    return t.to_csv();
}

std::string render_automorphisms_text(const std::vector<AutomorphismRow>& rows) {
    return automorphisms_table(rows).to_text();
}

std::vector<std::string> write_report_files(const ClassificationReport& r,
                                            const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::string n = std::to_string(r.modulus);
    std::vector<std::pair<std::string, std::string>> files = {
        {"classify-" + n + ".txt", render_report_text(r)},
        {"classify-" + n + ".csv", render_report_csv(r)},
        {"classify-" + n + ".json", render_report_json(r)},
        {"automorphisms-" + n + ".csv", render_automorphisms_csv(r.automorphisms)},
    };
    std::vector<std::string> written;
    for (const auto& [name, content] : files) {
        std::ofstream out(fs::path(dir) / name, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write " + name + " under " + dir);
        out << content;
        written.push_back(name);
    }
    return written;
}

}  // namespace piq
