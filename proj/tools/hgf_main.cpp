// hgf: strongly stable ideals, Borel/degeneration graphs, the Groebner fan
// of the Hilbert scheme and its derived analyses, from a Hilbert polynomial
// and an ambient projective space.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <variant>

#include "hgf/io.hpp"

using namespace hgf;

namespace {

struct RunConfig {
    std::string hilbert;
    int pn = 0;
    std::string order;    // deglex | revlex | weight:v0,v1,... | matrix:path
    std::string tiebreak = "deglex";
    std::string format;   // json | dot | csv | svg
    std::string output;   // empty = stdout
    int jobs = 0;
};

std::vector<QQ> parse_csv_rationals(const std::string& text)
{
    std::vector<QQ> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok.empty()) throw ParseError("empty weight entry", pos);
        out.push_back(parse_rational(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

TermOrderMatrix matrix_from_file(const std::string& path, int nvars)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open matrix file " + path);
    std::vector<std::vector<QQ>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<QQ> row;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
            if (pos >= line.size()) break;
            std::size_t end = pos;
            while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
            row.push_back(parse_rational(line.substr(pos, end - pos)));
            pos = end;
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty() || static_cast<int>(rows[0].size()) != nvars)
        throw InvalidTermOrder("matrix file must have " + std::to_string(nvars) + " columns");
    return TermOrderMatrix::from_rows(std::move(rows));
}

using Comparator = std::variant<TermOrderMatrix, WeightVector>;

TermOrderMatrix tiebreak_matrix(const std::string& spec, int nvars)
{
    if (spec == "deglex") return TermOrderMatrix::deglex(nvars);
    if (spec == "revlex") return TermOrderMatrix::revlex(nvars);
    throw Error("unknown tiebreak '" + spec + "'");
}

Comparator parse_order(const RunConfig& cfg)
{
    const int nvars = cfg.pn + 1;
    if (cfg.order == "deglex") return TermOrderMatrix::deglex(nvars);
    if (cfg.order == "revlex") return TermOrderMatrix::revlex(nvars);
    if (cfg.order.rfind("weight:", 0) == 0) {
        std::vector<QQ> w = parse_csv_rationals(cfg.order.substr(7));
        if (static_cast<int>(w.size()) != nvars)
            throw InvalidWeight("weight must have " + std::to_string(nvars) + " entries");
        return WeightVector(std::move(w));
    }
    if (cfg.order.rfind("matrix:", 0) == 0)
        return matrix_from_file(cfg.order.substr(7), nvars);
    throw Error("unknown order '" + cfg.order + "' (use deglex, revlex, weight:..., matrix:...)");
}

void emit(const RunConfig& cfg, const std::string& text)
{
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw Error("cannot write " + cfg.output);
    out << text;
}

void emit_json(const RunConfig& cfg, const json& j) { emit(cfg, j.dump(2) + "\n"); }

int run(const std::string& command, RunConfig cfg)
{
    auto hp = gotzmann_decomposition(parse_polynomial(cfg.hilbert));
    auto ideals = enumerate_ideals(hp, cfg.pn);

    if (command == "ideals") {
        json out{{"hilbert", format_polynomial(hp.poly)},
                 {"poly", unipoly_to_json(hp.poly)},
                 {"gotzmann", hp.gotzmann},
                 {"n", cfg.pn},
                 {"r", hp.r()},
                 {"count", ideals.size()},
                 {"ideals", json::array()}};
        for (const auto& J : ideals) out["ideals"].push_back(ideal_to_json(J));
        emit_json(cfg, out);
        return 0;
    }

    auto g = borel_graph(ideals, cfg.jobs);

    if (command == "borel-graph") {
        if (cfg.format == "dot")
            emit(cfg, graph_to_dot(g));
        else
            emit_json(cfg, graph_to_json(g));
        return 0;
    }
    if (command == "degeneration-graph" || command == "spanning-tree") {
        Comparator cmp = parse_order(cfg);
        if (command == "degeneration-graph") {
            DegenerationGraph dg = std::holds_alternative<TermOrderMatrix>(cmp)
                                       ? orient(g, std::get<TermOrderMatrix>(cmp))
                                       : orient(g, std::get<WeightVector>(cmp));
            if (cfg.format == "dot")
                emit(cfg, degeneration_to_dot(dg));
            else
                emit_json(cfg, degeneration_to_json(dg));
            return 0;
        }
        TermOrderMatrix M =
            std::holds_alternative<TermOrderMatrix>(cmp)
                ? std::get<TermOrderMatrix>(cmp)
                : term_order_from_weight(std::get<WeightVector>(cmp),
                                         tiebreak_matrix(cfg.tiebreak, cfg.pn + 1));
        SpanningTree tree = spanning_tree(ideals, M);
        if (cfg.format == "dot")
            emit(cfg, spanning_tree_to_dot(tree, g));
        else
            emit_json(cfg, spanning_tree_to_json(tree, ideals));
        return 0;
    }
    if (command == "fan" || command == "rays" || command == "slice") {
        GFan f = groebner_fan(g, cfg.jobs);
        if (command == "slice") {
            auto polys = slice(f);
            if (cfg.format == "svg")
                emit(cfg, slice_to_svg(polys));
            else
                emit_json(cfg, slice_to_json(polys));
            return 0;
        }
        auto rays = fan_rays(f, cfg.jobs);
        if (command == "rays") {
            json out = json::array();
            for (const auto& r : rays) {
                json jr = json::array();
                for (const auto& z : r) jr.push_back(to_string(z));
                out.push_back(jr);
            }
            emit_json(cfg, json{{"count", rays.size()}, {"rays", out}});
            return 0;
        }
        if (cfg.format == "csv") {
            emit(cfg, fan_to_csv(f, rays));
        } else {
            // fan_rays above cached the per-cone rays, so the dump carries
            // normals, sign vectors, closures, interior points and rays.
            json out = fan_to_json(f);
            json jr = json::array();
            for (const auto& r : rays) {
                json row = json::array();
                for (const auto& z : r) row.push_back(to_string(z));
                jr.push_back(row);
            }
            out["rays"] = jr;
            emit_json(cfg, out);
        }
        return 0;
    }
    if (command == "lower-bound") {
        GFan f = groebner_fan(g, cfg.jobs);
        std::vector<TermOrderMatrix> tiebreaks{TermOrderMatrix::deglex(cfg.pn + 1),
                                               TermOrderMatrix::revlex(cfg.pn + 1)};
        auto rep = component_lower_bound(ideals, g, f, tiebreaks, cfg.jobs);
        if (cfg.format == "csv")
            emit(cfg, report_to_csv(rep));
        else
            emit_json(cfg, report_to_json(rep, ideals));
        return 0;
    }
    if (command == "mcones") {
        emit_json(cfg, mcones_to_json(ideals, g));
        return 0;
    }
    throw Error("unknown command " + command);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Groebner fan of the Hilbert scheme"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<CLI::App*> subs;
    for (const char* name : {"ideals", "borel-graph", "degeneration-graph", "fan", "rays",
                             "slice", "spanning-tree", "lower-bound", "mcones"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--hilbert", cfg.hilbert, "Hilbert polynomial, e.g. \"5t-2\"")
            ->required();
        sub->add_option("--pn", cfg.pn, "ambient projective dimension n of P^n")
            ->required()
            ->check(CLI::Range(1, 16));
        sub->add_option("--order", cfg.order,
                        "deglex | revlex | weight:v0,v1,... | matrix:path");
        sub->add_option("--tiebreak", cfg.tiebreak, "tiebreak for weight orders (deglex|revlex)");
        sub->add_option("--format", cfg.format, "json | dot | csv | svg");
        sub->add_option("--output,-o", cfg.output, "output file (default stdout)");
        sub->add_option("--jobs", cfg.jobs, "parallelism hint (0 = all cores)");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    if ((command == "degeneration-graph" || command == "spanning-tree") && cfg.order.empty()) {
        std::cerr << "error: --order is required for " << command << "\n";
        return 2;
    }
    if (cfg.format == "svg" && command != "slice") {
        std::cerr << "error: --format svg is only valid for slice\n";
        return 2;
    }

    try {
        return run(command, cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const NotHilbertPolynomial& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ImproperSubscheme& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InfeasibleProfile& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const EmptyDegree& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NoSegmentIdeal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const MixedGraph& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
