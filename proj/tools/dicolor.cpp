// Command line front end: dichromatic numbers, small censuses, completion
// searches, and the sharded verification scenarios.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dicolor/coloring.hpp"
#include "dicolor/completions.hpp"
#include "dicolor/format.hpp"
#include "dicolor/isomorphism.hpp"
#include "dicolor/pipeline.hpp"
#include "dicolor/report.hpp"
#include "dicolor/tournament.hpp"
#include "dicolor/transitive.hpp"
#include "dicolor/version.hpp"

namespace {

using namespace dicolor;

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw usage_error("cannot open " + path);
        in = &file;
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(*in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

std::string partition_text(const ColorPartition& p) {
    std::string s;
    for (std::size_t c = 0; c < p.classes.size(); ++c) {
        if (c) s += "|";
        bool first = true;
        for (int v : p.classes[c]) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
    }
    return s;
}

Pruner parse_pruner(const std::string& name) {
    if (name == "none") return Pruner::none();
    if (name == "chi3") return Pruner::chi(3);
    if (name == "chi4") return Pruner::chi(4);
    if (name == "tt5x2") return Pruner::two_disjoint_tt5();
    if (name == "chi3+tt5x2") return Pruner::chi(3).also_two_tt5();
    if (name == "chi4+tt5x2") return Pruner::chi(4).also_two_tt5();
    throw usage_error("unknown pruner: " + name);
}

Shard parse_shard(const std::string& text) {
    std::size_t slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
        throw usage_error("shard must look like i/N");
    Shard s;
    s.index = std::stoi(text.substr(0, slash));
    s.count = std::stoi(text.substr(slash + 1));
    return s;
}

int run_chi(const std::string& path) {
    ColoringOptions memo{true};
    for (const std::string& line : read_lines(path)) {
        Tournament t = tournament_from_text(line);
        int chi = dichromatic_number(t, memo);
        auto witness = k_colorable(t, chi, memo);
        if (!witness || !valid_partition(t, *witness, chi))
            throw structural_error("chi: witness partition failed validation");
        std::cout << "chi=" << chi << " partition=" << partition_text(*witness) << "\n";
    }
    return 0;
}

int run_gen(int n, int chi, bool tt5_free, bool count_only) {
    std::vector<std::pair<CanonicalForm, Tournament>> kept;
    for (const Tournament& t : enumerate_tournaments(n)) {
        if (chi > 0 && dichromatic_number(t) != chi) continue;
        if (tt5_free && contains_tt(t, 5)) continue;
        LabeledForm lf = canonical_form_labeled(t);
        kept.push_back({lf.form, relabel(t, lf.labeling)});
    }
    std::sort(kept.begin(), kept.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (count_only) {
        std::cout << kept.size() << "\n";
        return 0;
    }
    for (const auto& [form, t] : kept) std::cout << to_text(t) << "\n";
    return 0;
}

int run_complete(const std::string& path, const std::string& prune, const std::string& strategy,
                 std::uint64_t limit, bool stats) {
    std::vector<std::string> lines = read_lines(path);
    if (lines.empty()) throw usage_error("complete: input holds no partial tournament");
    PartialTournament root = partial_from_text(lines.front());
    BranchStrategy st;
    if (strategy == "lex")
        st = BranchStrategy::lexicographic;
    else if (strategy == "guided")
        st = BranchStrategy::guided;
    else
        throw usage_error("unknown strategy: " + strategy);
    CompletionSearch search(root, parse_pruner(prune), st);
    Stopwatch sw;
    std::uint64_t emitted = 0;
    while (auto t = search.next()) {
        std::cout << to_text(*t) << "\n";
        if (limit && ++emitted >= limit) break;
    }
    if (stats) {
        const SearchStats& s = search.stats();
        std::cerr << "nodes=" << s.nodes << " chi_cuts=" << s.chi_cuts
                  << " tt5_cuts=" << s.tt5_cuts << " emitted=" << s.emitted
                  << " wall_ms=" << sw.ms() << "\n";
    }
    return 0;
}

int run_verify(const std::string& id, const ScenarioOptions& o) {
    ScenarioReport r = run_scenario(id, o);
    std::cout << r.to_text();
    return r.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tournament dichromatic number toolkit"};
    app.set_version_flag("--version", dicolor::kVersion);
    app.require_subcommand(1);

    std::string chi_file;
    CLI::App* chi_cmd = app.add_subcommand("chi", "dichromatic number and witness per input line");
    chi_cmd->add_option("file", chi_file, "tournament text lines, - for stdin")->required();

    int gen_n = 0, gen_chi = 0;
    bool gen_tt5free = false;
    CLI::App* gen_cmd = app.add_subcommand("gen", "census of order n, one class representative per line");
    gen_cmd->add_option("n", gen_n, "vertex count, 1..8")->required();
    gen_cmd->add_option("--chi", gen_chi, "keep only dichromatic number k");
    gen_cmd->add_flag("--tt5-free", gen_tt5free, "keep only tournaments without TT5");

    int census_n = 0, census_chi = 0;
    bool census_tt5free = false;
    CLI::App* census_cmd = app.add_subcommand("census", "census size of order n");
    census_cmd->add_option("n", census_n, "vertex count, 1..8")->required();
    census_cmd->add_option("--chi", census_chi, "keep only dichromatic number k");
    census_cmd->add_flag("--tt5-free", census_tt5free, "keep only tournaments without TT5");

    std::string comp_file, comp_prune = "none", comp_strategy = "guided";
    std::uint64_t comp_limit = 0;
    bool comp_stats = false;
    CLI::App* comp_cmd = app.add_subcommand("complete", "stream completions of a partial tournament");
    comp_cmd->add_option("file", comp_file, "partial tournament text, - for stdin")->required();
    comp_cmd->add_option("--prune", comp_prune, "none|chi3|chi4|tt5x2|chi3+tt5x2|chi4+tt5x2");
    comp_cmd->add_option("--strategy", comp_strategy, "lex|guided");
    comp_cmd->add_option("--limit", comp_limit, "stop after this many completions");
    comp_cmd->add_flag("--stats", comp_stats, "print node and cut counts to stderr");

    std::string ver_id, ver_shard = "0/1", ver_ckpt, ver_out;
    dicolor::ScenarioOptions vo;
    bool ver_resume = false, ver_list = false, ver_s1order = false;
    CLI::App* ver_cmd = app.add_subcommand("verify", "run a verification scenario");
    ver_cmd->add_option("scenario", ver_id, "scenario id, see --list");
    ver_cmd->add_option("--shard", ver_shard, "own items with index = i mod N, as i/N");
    ver_cmd->add_option("--checkpoint", ver_ckpt, "checkpoint directory");
    ver_cmd->add_flag("--resume", ver_resume, "continue from the stored checkpoint");
    ver_cmd->add_option("--out", ver_out, "directory for certificates and lists");
    ver_cmd->add_option("--limit-outer", vo.limit_outer, "stop after this many owned items");
    ver_cmd->add_option("--limit-inner", vo.limit_inner, "per item search node budget");
    ver_cmd->add_option("--trials", vo.rand_trials, "random trial count where applicable");
    ver_cmd->add_flag("--section1-order", ver_s1order, "skip pairs on any split, not only mid-size");
    ver_cmd->add_option("--seed", vo.rng_seed, "seed for randomized spot checks");
    ver_cmd->add_option("--checkpoint-nodes", vo.checkpoint_nodes, "checkpoint every this many nodes");
    ver_cmd->add_option("--checkpoint-seconds", vo.checkpoint_seconds, "checkpoint at least this often");
    ver_cmd->add_flag("--list", ver_list, "list scenario ids and exit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (chi_cmd->parsed()) return run_chi(chi_file);
        if (gen_cmd->parsed()) return run_gen(gen_n, gen_chi, gen_tt5free, false);
        if (census_cmd->parsed()) return run_gen(census_n, census_chi, census_tt5free, true);
        if (comp_cmd->parsed())
            return run_complete(comp_file, comp_prune, comp_strategy, comp_limit, comp_stats);
        if (ver_cmd->parsed()) {
            if (ver_list) {
                for (const dicolor::ScenarioEntry& e : dicolor::scenario_registry())
                    std::cout << e.id << (e.longrun ? " (long-run)" : "") << "\n";
                return 0;
            }
            if (ver_id.empty()) throw dicolor::usage_error("verify: scenario id required");
            vo.shard = parse_shard(ver_shard);
            vo.checkpoint_dir = ver_ckpt;
            vo.resume = ver_resume;
            vo.out_dir = ver_out;
            vo.section1_order = ver_s1order;
            return run_verify(ver_id, vo);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
