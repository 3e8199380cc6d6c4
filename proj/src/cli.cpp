#include "rsinf/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rsinf/classifier.hpp"
#include "rsinf/cls.hpp"
#include "rsinf/io.hpp"
#include "rsinf/rs_finite.hpp"
#include "rsinf/rs_infinite.hpp"

namespace rsinf::cli {

namespace {

// A path to a JSON file, or the JSON text itself.
std::string read_document(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
    std::ifstream in(arg);
    if (!in) throw InputError("cannot open " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json tableau_rows(const Tableau& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows) rows.push_back(seq_to_json(row));
    return rows;
}

Json row_to_json(const StablyDecreasingSeq& row) {
    Json out;
    out["axis"] = to_string(row.axis());
    if (row.left_base()) out["left_base"] = row.left_base()->to_string();
    out["start"] = row.start();
    out["middle"] = seq_to_json(row.middle());
    if (row.right_base()) out["right_base"] = row.right_base()->to_string();
    return out;
}

Json block_ideal_json(const BlockIdeal& b) {
    Json x = Json::array(), y = Json::array();
    for (int p : b.X.parts()) x.push_back(p);
    for (int p : b.Y.parts()) y.push_back(p);
    return Json{{"r", b.r}, {"g", b.g}, {"X", std::move(x)}, {"Y", std::move(y)}};
}

void print(std::ostream& out, const Json& doc) { out << doc.dump() << '\n'; }

struct Options {
    std::string path;
    std::string seq1;
    std::string seq2;
    std::string params;
    std::string vec;
    bool shifted = false;
    bool emit_spec = false;
    std::optional<std::int64_t> k;
    int level = 0;
    int bound = 1;
};

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"RS tableaux, infinite insertion and weight classification", "rsinf"};
    app.require_subcommand(1);
    Options o;

    auto* classify_cmd = app.add_subcommand("classify", "Quadruple (r, g, X, Y) of a weight spec");
    classify_cmd->add_option("spec", o.path, "spec JSON file or inline JSON")->required();
    classify_cmd->add_flag("--emit-spec", o.emit_spec, "also print the canonical spec");

    auto* rs_cmd = app.add_subcommand("rs", "RS tableaux of a finite sequence");
    rs_cmd->add_option("seq", o.seq1, "comma-separated scalars")->required();
    rs_cmd->add_flag("--shifted", o.shifted, "apply f(i) - i first (the J map)");

    auto* seq_cmd = app.add_subcommand("seq-of", "Reading word of a tableau family");
    seq_cmd->add_option("family", o.path, "family JSON file or inline JSON")->required();

    auto* inter_cmd = app.add_subcommand("interchange", "Connect two sequences by admissible interchanges");
    inter_cmd->add_option("from", o.seq1)->required();
    inter_cmd->add_option("to", o.seq2)->required();
    inter_cmd->add_flag("--shifted", o.shifted, "use shifted admissible interchanges");
    inter_cmd->add_option("--k", o.k, "also compare J(from) with J(to + k)");

    auto* inf_cmd = app.add_subcommand("rs-inf", "Infinite RS and ideal of a single block");
    inf_cmd->add_option("block", o.path, "block JSON file or inline JSON")->required();

    auto* level_cmd = app.add_subcommand("cls-level", "Level set of cls(r',r'',g,X,Y)");
    level_cmd->add_option("params", o.params, "r',r'',g;X;Y")->required();
    level_cmd->add_option("--level", o.level)->required();
    level_cmd->add_option("--bound", o.bound, "entry cap for the infinite factors")->required();

    auto* gamma_cmd = app.add_subcommand("cls-gamma", "gamma weight of cls(r',r'',g,X,Y)");
    gamma_cmd->add_option("params", o.params)->required();
    gamma_cmd->add_option("--level", o.level)->required();

    auto* member_cmd = app.add_subcommand("cls-member", "Membership of a weight in a level set");
    member_cmd->add_option("weight", o.vec, "comma-separated entries")->required();
    member_cmd->add_option("params", o.params)->required();
    member_cmd->add_option("--level", o.level)->required();
    member_cmd->add_option("--bound", o.bound);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        print(out, Json{{"error", e.what()}});
        err << app.help();
        return 1;
    }

    try {
        if (classify_cmd->parsed()) {
            const auto spec = parse_spec(read_document(o.path));
            Json doc = ideal_to_json(classify(spec));
            if (o.emit_spec) {
                Json with_spec{{"spec", spec_to_json(spec)}};
                with_spec.update(doc);
                doc = std::move(with_spec);
            }
            print(out, doc);
        } else if (rs_cmd->parsed()) {
            const auto seq = parse_seq(o.seq1);
            print(out, Json{{"tableaux", family_to_json(o.shifted ? j_map(seq) : rs(seq))}});
        } else if (seq_cmd->parsed()) {
            const auto family = parse_family(read_document(o.path));
            print(out, Json{{"seq", seq_to_json(seq_of(family))}});
        } else if (inter_cmd->parsed()) {
            const auto a = parse_seq(o.seq1);
            const auto b = parse_seq(o.seq2);
            Json doc;
            if (auto path = connected(a, b, o.shifted)) {
                doc["connected"] = true;
                Json steps = Json::array();
                for (const auto& s : path->steps) steps.push_back(s.position);
                doc["path"] = std::move(steps);
            } else {
                doc["connected"] = false;
            }
            if (o.k) doc["joseph_equal"] = joseph_equal(a, b, o.k);
            print(out, doc);
        } else if (inf_cmd->parsed()) {
            const auto f = parse_block(read_document(o.path));
            const auto g = plus_rho(f);
            const auto result = rs_infinite(g);
            Json others = Json::array();
            for (const auto& t : result.others) others.push_back(tableau_rows(t));
            Json doc;
            doc["block"] = block_to_json(f);
            doc["plus_rho"] = row_to_json(g);
            doc["first_row"] = row_to_json(result.first_row);
            doc["rest_of_first"] = tableau_rows(result.rest_of_first);
            doc["others"] = std::move(others);
            doc["underline"] = seq_to_json(result.underline);
            doc["r"] = result.rank();
            doc["ideal"] = block_ideal_json(block_ideal(f));
            print(out, doc);
        } else if (level_cmd->parsed()) {
            for (const auto& v : cls_level(parse_params(o.params), o.level, o.bound)) {
                out << format_weight(v) << '\n';
            }
        } else if (gamma_cmd->parsed()) {
            out << format_weight(gamma(parse_params(o.params), o.level)) << '\n';
        } else if (member_cmd->parsed()) {
            const bool in = member(parse_weight(o.vec), parse_params(o.params), o.level, o.bound);
            print(out, Json{{"member", in}});
        }
    } catch (const std::exception& e) {
        print(out, Json{{"error", e.what()}});
        return 1;
    }
    return 0;
}

}  // namespace rsinf::cli
