#include "polychrome/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "polychrome/constructions.hpp"
#include "polychrome/json_io.hpp"
#include "polychrome/numbers.hpp"
#include "polychrome/oracle.hpp"
#include "polychrome/search.hpp"
#include "polychrome/structure.hpp"

namespace polychrome::cli {

namespace {

using nlohmann::json;

FamilySpec parse_family(const std::string& name, int q, int r)
{
    if (name == "f") return FamilySpec::matchings(q);
    if (name == "c") return FamilySpec::cycles(q);
    if (name == "r") return FamilySpec::two_regular(q);
    if (name == "rr") return FamilySpec::r_regular(r, q);
    if (name == "crr") return FamilySpec::connected_r_regular(r, q);
    throw precondition_error("unknown family '" + name + "' (use f|c|r|rr|crr)");
}

EdgeColoring read_coloring(const std::string& path, std::istream& in)
{
    json j;
    if (path.empty() || path == "-") {
        in >> j;
    } else {
        std::ifstream file(path);
        if (!file) throw precondition_error("cannot open " + path);
        file >> j;
    }
    return coloring_from_json(j);
}

void emit(const json& j, const std::string& out_path, std::ostream& out)
{
    if (out_path.empty() || out_path == "-") {
        out << j.dump() << "\n";
    } else {
        std::ofstream file(out_path);
        if (!file) throw precondition_error("cannot open " + out_path);
        file << j.dump() << "\n";
    }
}

json constructed_to_json(const ConstructedColoring& built)
{
    json j = coloring_to_json(built.coloring);
    j["blocks"] = blocks_to_json(built.blocks)["blocks"];
    if (built.z > 0) j["z"] = built.z;
    return j;
}

json number_to_json(const NumberResult& result)
{
    return json{{"value", result.value}, {"provenance", provenance_name(result.provenance)}};
}

json report_to_json(const SearchReport& rep)
{
    json j{{"best_k", rep.best_k},
           {"mode", search_mode_name(rep.mode)},
           {"explored", rep.explored}};
    if (rep.blocks) j["blocks"] = blocks_to_json(*rep.blocks)["blocks"];
    if (rep.seed_size > 0) j["z"] = rep.seed_size;
    if (rep.coloring) j["coloring"] = coloring_to_json(*rep.coloring);
    return j;
}

json seed_to_json(const SeedColoring& seed)
{
    json parts = json::array();
    for (const auto& part : seed.parts) parts.push_back(part);
    json edges = json::array();
    for (const auto& [u, v, c] : seed.internal_) edges.push_back({u, v, c});
    return json{{"r", seed.r}, {"q", seed.q},     {"k", seed.k},
                {"z", seed.z}, {"parts", parts},  {"edges", edges}};
}

ConstructedColoring dispatch_construct(const std::string& family, int q, int n, int r)
{
    if (family == "f") return construct_simply_ordered(FamilyKind::Matchings, q, n);
    if (family == "c" || family == "r") {
        FamilyKind kind = family == "c" ? FamilyKind::Cycles : FamilyKind::TwoRegular;
        return q <= 1 ? construct_quasi(kind, q, n) : construct_simply_ordered(kind, q, n);
    }
    if (family == "rr")
        return extend_seed(build_seed(r, q), n, ExtensionKind::Regular);
    if (family == "crr")
        return extend_seed(build_seed(r, q), n, ExtensionKind::Connected);
    throw precondition_error("unknown family '" + family + "' (use f|c|r|rr|crr)");
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err)
{
    CLI::App app{"polychromatic colorings of complete graphs"};
    app.require_subcommand(1);

    std::string family = "f", mode = "greedy", in_path, out_path;
    int n = 0, q = 0, r = 2, t = 2, jobs = 1, budget_cap = 0;
    int64_t s = 0;
    bool table = false;

    auto add_family = [&](CLI::App* cmd) {
        cmd->add_option("--family", family, "family: f|c|r|rr|crr");
        cmd->add_option("--q", q, "number of unspanned vertices");
        cmd->add_option("--r", r, "degree for rr/crr families");
    };

    auto* construct = app.add_subcommand("construct", "build an optimal coloring");
    add_family(construct);
    construct->add_option("--n", n, "vertex count")->required();
    construct->add_option("--out", out_path, "output file (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "check a coloring against a family");
    add_family(verify_cmd);
    verify_cmd->add_option("--in", in_path, "coloring JSON (default stdin)");
    verify_cmd->add_option("--jobs", jobs, "parallel per-color queries");
    verify_cmd->add_option("--budget", budget_cap, "cap oracle instance sizes at n");
    verify_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* normalize = app.add_subcommand("normalize", "block-shift to simply-ordered form");
    add_family(normalize);
    normalize->add_option("--in", in_path, "coloring JSON (default stdin)");
    normalize->add_option("--out", out_path, "output file (default stdout)");

    auto* number = app.add_subcommand("number", "closed-form polychromatic number");
    add_family(number);
    number->add_option("--n", n, "vertex count")->required();
    number->add_option("--out", out_path, "output file (default stdout)");

    auto* ramsey = app.add_subcommand("ramsey", "polychromatic cyclic Ramsey numbers");
    ramsey->add_option("--t", t, "number of colors")->required();
    ramsey->add_option("--s", s, "cycle length (with --table: largest length)")->required();
    ramsey->add_flag("--table", table, "emit a TSV table for all lengths up to --s");
    ramsey->add_option("--out", out_path, "output file (default stdout)");

    auto* search_cmd = app.add_subcommand("search", "maximize colors over a structure class");
    add_family(search_cmd);
    search_cmd->add_option("--n", n, "vertex count")->required();
    search_cmd->add_option("--mode", mode, "greedy|blocks|quasi|full");
    search_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* seed_cmd = app.add_subcommand("seed", "canonical seed coloring for r-regular families");
    seed_cmd->add_option("--r", r, "degree")->required();
    seed_cmd->add_option("--q", q, "number of unspanned vertices");
    seed_cmd->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        int code = app.exit(e, msg, msg);
        (code == 0 ? out : err) << msg.str();
        return code == 0 ? 0 : 2;
    }

    try {
        OracleBudget budget = budget_cap > 0 ? OracleBudget::capped(budget_cap) : OracleBudget{};

        if (construct->parsed()) {
            emit(constructed_to_json(dispatch_construct(family, q, n, r)), out_path, out);
            return 0;
        }
        if (verify_cmd->parsed()) {
            auto coloring = read_coloring(in_path, in);
            auto verdict = verify(coloring, parse_family(family, q, r), budget, jobs);
            emit(verdict_to_json(verdict), out_path, out);
            return verdict.polychromatic ? 0 : 1;
        }
        if (normalize->parsed()) {
            auto coloring = read_coloring(in_path, in);
            auto normalized = block_shift_normalize(coloring, parse_family(family, q, r));
            json j = coloring_to_json(normalized);
            j["blocks"] = blocks_to_json(detect_order(normalized).blocks())["blocks"];
            emit(j, out_path, out);
            return 0;
        }
        if (number->parsed()) {
            NumberResult result{};
            if (family == "f")
                result = p_f(n, q);
            else if (family == "c")
                result = p_c(n, q);
            else if (family == "r")
                result = p_r(n, q);
            else
                throw precondition_error("closed forms exist for families f, c and r only");
            emit(number_to_json(result), out_path, out);
            return 0;
        }
        if (ramsey->parsed()) {
            if (table) {
                std::ostringstream tsv;
                tsv << "s\tpr\tprovenance\n";
                for (int64_t len = std::max<int64_t>(3, t); len <= s; ++len) {
                    auto result = pr_t(len, t);
                    tsv << len << "\t" << result.value << "\t"
                        << provenance_name(result.provenance) << "\n";
                }
                if (out_path.empty() || out_path == "-") {
                    out << tsv.str();
                } else {
                    std::ofstream file(out_path);
                    if (!file) throw precondition_error("cannot open " + out_path);
                    file << tsv.str();
                }
            } else {
                emit(number_to_json(pr_t(s, t)), out_path, out);
            }
            return 0;
        }
        if (search_cmd->parsed()) {
            SearchReport rep;
            auto spec = parse_family(family, q, r);
            if (mode == "greedy")
                rep = best_simply_ordered(n, spec, SearchMode::Greedy);
            else if (mode == "blocks")
                rep = best_simply_ordered(n, spec, SearchMode::ExhaustiveBlocks);
            else if (mode == "quasi")
                rep = best_quasi(n, spec.kind, q);
            else if (mode == "full") {
                rep.mode = SearchMode::Full;
                for (int target = 1;; ++target) {
                    long long leaves = 0;
                    auto witness = full_search(n, spec, target, &leaves);
                    rep.explored += leaves;
                    if (!witness) break;
                    rep.best_k = target;
                    rep.coloring = std::move(witness);
                }
            } else
                throw precondition_error("unknown mode '" + mode + "'");
            emit(report_to_json(rep), out_path, out);
            return 0;
        }
        if (seed_cmd->parsed()) {
            emit(seed_to_json(build_seed(r, q)), out_path, out);
            return 0;
        }
    } catch (const budget_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace polychrome::cli
