#include "cli.hpp"

#include "prefas/direct_semantics.hpp"
#include "prefas/fragment_semantics.hpp"
#include "prefas/gno_semantics.hpp"
#include "prefas/transform.hpp"
#include "prefas/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace prefas::cli {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

PrefProgram load(const std::string& path) {
    try {
        return read_pref_program(read_file(path));
    }
    catch (const ParseError& e) {
        throw Error(path + ":" + e.what());
    }
}

json lits_json(const LiteralSet& s) {
    json out = json::array();
    for (const auto& l : s) out.push_back(l.str());
    return out;
}

std::string labels_str(const std::vector<std::string>& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? ", " : "") + labels[i];
    return out + "}";
}

//! A preferred set with its witness, in printable and structured form.
struct Row {
    LiteralSet  set;
    std::string witness_text;
    json        witness;
};

std::vector<Row> rows_of(const Program& p, const std::vector<AnswerSet>& sets) {
    std::vector<Row> out;
    for (const auto& a : sets) {
        auto labels = p.labels(a.generating);
        out.push_back({a.literals, labels_str(labels), labels});
    }
    return out;
}

std::vector<Row> rows_of(const Program& p, const std::vector<FragmentAnswerSet>& sets) {
    std::vector<Row> out;
    for (const auto& a : sets) {
        json        frags = json::array();
        std::string text  = "{";
        for (std::size_t i = 0; i < a.witness.members().size(); ++i) {
            auto labels = p.labels(a.witness.members()[i]);
            frags.push_back(labels);
            text += (i ? ", " : "") + labels_str(labels);
        }
        out.push_back({a.answer.literals, text + "}", frags});
    }
    return out;
}

struct SolveOptions {
    std::string file;
    std::string semantics = "g";
    bool        as_json   = false;
    bool        witness   = false;
};

int cmd_solve(const SolveOptions& o, std::ostream& out) {
    const Bounds      b   = Bounds::from_environment();
    const PrefProgram lpp = load(o.file);
    const Semantics   s   = parse_semantics(o.semantics);
    const Program&    p   = lpp.program;

    const auto       as = answer_sets(p, b);
    std::vector<Row> preferred;
    switch (s) {
        case Semantics::as : preferred = rows_of(p, as); break;
        case Semantics::d  : preferred = rows_of(p, preferred_answer_sets_d(lpp, b)); break;
        case Semantics::g  : preferred = rows_of(p, preferred_answer_sets_g(lpp, b)); break;
        case Semantics::gno: preferred = rows_of(p, preferred_answer_sets_gno(lpp, b)); break;
    }

    if (o.as_json) {
        json doc = {{"program_path", o.file}, {"semantics", to_string(s)}};
        doc["answer_sets"] = json::array();
        for (const auto& a : as) doc["answer_sets"].push_back(lits_json(a.literals));
        doc["preferred"] = json::array();
        doc["witnesses"] = json::array();
        for (const auto& r : preferred) {
            doc["preferred"].push_back(lits_json(r.set));
            doc["witnesses"].push_back(r.witness);
        }
        out << doc.dump(2) << "\n";
    }
    else {
        out << "% answer sets: " << as.size() << "\n";
        for (const auto& a : as) out << to_string(a.literals) << "\n";
        if (s != Semantics::as) {
            out << "% preferred (" << to_string(s) << "): " << preferred.size() << "\n";
            for (const auto& r : preferred) {
                out << to_string(r.set);
                if (o.witness) out << "  % witness " << r.witness_text;
                out << "\n";
            }
        }
        else if (o.witness) {
            out << "% generating sets\n";
            for (const auto& r : preferred) out << to_string(r.set) << "  % witness " << r.witness_text << "\n";
        }
    }
    return preferred.empty() ? Exit::none : Exit::found;
}

struct TransformOptions {
    std::string file;
    std::string out_path;
};

int cmd_transform(const TransformOptions& o, std::ostream& out) {
    const PrefProgram lpp  = load(o.file);
    const std::string text = format_program(transform(lpp).program);
    if (o.out_path.empty() || o.out_path == "-") {
        out << text;
    }
    else {
        std::ofstream file(o.out_path, std::ios::binary);
        if (!(file << text)) throw Error("cannot write '" + o.out_path + "'");
    }
    return Exit::found;
}

struct CheckOptions {
    std::string              file;
    bool                     random = false;
    std::vector<std::string> properties{"all"};
    std::uint64_t            seed  = 0;
    std::size_t              count = 100;
    bool                     as_json    = false;
    bool                     stratified = false;
    GenParams                params;
};

std::set<Property> selected(const std::vector<std::string>& names) {
    std::set<Property> out;
    for (const auto& n : names) {
        if (n == "all") {
            auto all = all_properties();
            out.insert(all.begin(), all.end());
        }
        else {
            out.insert(parse_property(n));
        }
    }
    return out;
}

int cmd_check(const CheckOptions& o, std::ostream& out) {
    const Bounds b     = Bounds::from_environment();
    const auto   props = selected(o.properties);
    if (o.random == !o.file.empty()) throw Error("check: give either a FILE or --random");

    if (o.random) {
        GenParams g  = o.params;
        g.seed       = o.seed;
        g.stratified = o.stratified;
        const auto rep = fuzz(g, o.count, props, b);
        if (o.as_json) out << to_json(rep).dump(2) << "\n";
        else out << to_text(rep);
        return rep.ok() ? Exit::found : Exit::none;
    }

    const PrefProgram lpp        = load(o.file);
    const auto        violations = check_program(lpp, props, b);
    if (o.as_json) {
        json names = json::array();
        for (auto p : props) names.push_back(to_string(p));
        json doc = {{"program_path", o.file}, {"properties", names}, {"violations", json::array()}};
        for (const auto& v : violations) doc["violations"].push_back(to_json(v));
        out << doc.dump(2) << "\n";
    }
    else {
        out << "program: " << o.file << "\n";
        out << "properties:";
        for (auto p : props) out << " " << to_string(p);
        out << "\nviolations: " << violations.size() << "\n";
        for (const auto& v : violations) out << "- " << to_string(v.kind) << " witness=" << v.witness.dump() << "\n";
    }
    return violations.empty() ? Exit::found : Exit::none;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Preferred answer sets of logic programs with rule preferences", "prefas"};
    app.require_subcommand(1);

    SolveOptions solve;
    auto*        sc_solve = app.add_subcommand("solve", "Print answer sets and preferred answer sets");
    sc_solve->add_option("file", solve.file, "Program file ('-' for standard input)")->required();
    sc_solve->add_option("-s,--semantics", solve.semantics, "as, d, g or gno")
        ->check(CLI::IsMember({"as", "d", "g", "gno"}))
        ->capture_default_str();
    sc_solve->add_flag("--json", solve.as_json, "Print a JSON document");
    sc_solve->add_flag("--witness", solve.witness, "Print the generating set or stable fragment set of each preferred set");

    TransformOptions tr;
    auto*            sc_tr = app.add_subcommand("transform", "Rewrite into a plain program whose answer sets encode the gno semantics");
    sc_tr->add_option("file", tr.file, "Program file ('-' for standard input)")->required();
    sc_tr->add_option("-o,--out", tr.out_path, "Output file (default: standard output)");

    CheckOptions chk;
    auto*        sc_chk = app.add_subcommand("check", "Verify semantic properties on a program or on random programs");
    sc_chk->add_option("file", chk.file, "Program file");
    sc_chk->add_flag("--random", chk.random, "Check randomly generated programs");
    sc_chk->add_option("-p,--property", chk.properties, "Comma separated properties, or 'all'")
        ->delimiter(',')
        ->capture_default_str();
    sc_chk->add_option("--seed", chk.seed, "First seed")->capture_default_str();
    sc_chk->add_option("--count", chk.count, "Number of random programs")->capture_default_str();
    sc_chk->add_flag("--stratified", chk.stratified, "Generate stratified programs only");
    sc_chk->add_option("--atoms", chk.params.n_atoms, "Maximal number of atoms")->capture_default_str();
    sc_chk->add_option("--rules", chk.params.n_rules, "Maximal number of rules")->capture_default_str();
    sc_chk->add_option("--pref-density", chk.params.pref_density, "Maximal preference density")->capture_default_str();
    sc_chk->add_option("--rival", chk.params.p_rival, "Chance of emitting a rival rule pair")->capture_default_str();
    sc_chk->add_flag("--json", chk.as_json, "Print a JSON document");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Exit::found : Exit::failure;
    }

    try {
        if (sc_solve->parsed()) return cmd_solve(solve, out);
        if (sc_tr->parsed()) return cmd_transform(tr, out);
        if (sc_chk->parsed()) return cmd_check(chk, out);
    }
    catch (const std::exception& e) {
        err << "prefas: error: " << e.what() << "\n";
        return Exit::failure;
    }
    return Exit::failure;
}

} // namespace prefas::cli
