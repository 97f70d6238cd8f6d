#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hpfold/bench.hpp"
#include "hpfold/galsts.hpp"
#include "hpfold/ilp.hpp"
#include "hpfold/oracle.hpp"
#include "hpfold/render.hpp"

namespace {

using namespace hpfold;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("HPFOLD_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring non-numeric HPFOLD_SEED\n";
        }
    }
    return 1;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

struct ParamFlags {
    galsts::GaParams params;
    double pc = -1; // accepted for compatibility; the reproduction loop has no
                    // separate crossover probability, so a warning is printed
    std::string seq_file;

    void attach(CLI::App* cmd) {
        params.seed = default_seed();
        cmd->add_option("--pop", params.population, "population size m");
        cmd->add_option("--pm", params.ls_probability, "local-search probability p_m");
        cmd->add_option("--pc", pc, "ignored; kept for config compatibility");
        cmd->add_option("--gens", params.max_generations, "generation cap");
        cmd->add_option("--kmax", params.reproduction_budget, "cut draws per parent pair (0: n)");
        cmd->add_option("--ls-budget", params.ls_budget, "local-search trials (0: 4n)");
        cmd->add_option("--seed", params.seed, "RNG seed (env HPFOLD_SEED overrides the default)");
        cmd->add_option("--time-limit", params.time_limit_s, "wall-clock cap in seconds per run");
        cmd->add_option("--seq-file", seq_file, "sequence file (id<TAB>compact per line)");
    }

    void warn_pc() const {
        if (pc >= 0)
            std::cerr << "warning: --pc is accepted but unused; crossover runs on every"
                         " non-tabu cut draw\n";
    }
};

bench::ResolvedSequence resolve(const std::string& spec, const std::string& seq_file) {
    if (!seq_file.empty()) {
        for (const auto& entry : parse_sequence_file(read_file(seq_file)))
            if (entry.id == spec) return {entry.id, HpSequence::parse(entry.compact), nullptr};
    }
    return bench::resolve_sequence(spec);
}

int cmd_solve(const std::string& seq_spec, const ParamFlags& flags, const std::string& out_path,
              bool quiet) {
    flags.warn_pc();
    const bench::ResolvedSequence rs = resolve(seq_spec, flags.seq_file);
    const galsts::RunRecord rec = galsts::run(rs.seq, flags.params, rs.id);
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary | std::ios::app);
        if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
        out << bench::record_to_jsonl(rec) << '\n';
    }
    if (!quiet) {
        std::cout << "sequence " << rs.id << " (n=" << rs.seq.size() << ")\n";
        std::cout << "best energy " << rec.best_energy << "\n";
        std::cout << "moves " << format_move_list(rec.best_moves) << "\n";
        std::cout << "generations " << rec.generations << ", wall " << rec.wall_ms << " ms\n";
    } else {
        std::cout << rec.best_energy << "\n";
    }
    return 0;
}

int cmd_bench(const std::string& suite, std::string seqs, int runs, int jobs, const ParamFlags& flags,
              const std::string& out_prefix) {
    flags.warn_pc();
    bench::BenchRequest req;
    req.runs = runs;
    req.jobs = jobs;
    req.base = flags.params;
    if (!suite.empty()) {
        if (suite != "table2") throw std::runtime_error("unknown suite '" + suite + "'");
        for (const auto& inst : bench::table_instances()) req.ids.push_back(inst.id);
    }
    if (!seqs.empty()) {
        req.ids.clear();
        std::size_t start = 0;
        while (start <= seqs.size()) {
            std::size_t comma = seqs.find(',', start);
            if (comma == std::string::npos) comma = seqs.size();
            if (comma > start) req.ids.push_back(seqs.substr(start, comma - start));
            start = comma + 1;
        }
    }
    if (req.ids.empty()) throw std::runtime_error("bench: no instances selected");

    const bench::BenchResult result = bench::run_bench(req);
    write_file(out_prefix + ".records.jsonl", bench::records_to_jsonl(result.records));
    write_file(out_prefix + ".summary.jsonl", bench::summaries_to_jsonl(result));
    const std::string table = bench::summaries_to_text(result);
    write_file(out_prefix + ".summary.txt", table);
    std::cout << table;
    std::cout << "total wall " << result.wall_ms / 1000.0 << " s, outputs " << out_prefix << ".*\n";
    return 0;
}

int cmd_enumerate(const std::string& seq_spec, int cap, bool no_reduce, const std::string& seq_file) {
    const bench::ResolvedSequence rs = resolve(seq_spec, seq_file);
    const auto res = oracle::enumerate_optimal(rs.seq, !no_reduce, cap);
    std::cout << "sequence " << rs.id << " (n=" << res.n << ")\n";
    std::cout << "optimal energy " << res.optimal_energy << "\n";
    std::cout << "optimal count " << res.optimal_count << "\n";
    std::cout << "total valid " << res.total_valid << "\n";
    return 0;
}

int cmd_export_ilp(const std::string& seq_spec, const std::string& format, bool paper_faithful,
                   int cap, const std::string& out_path, const std::string& seq_file) {
    const bench::ResolvedSequence rs = resolve(seq_spec, seq_file);
    ilp::IlpOptions opt;
    opt.paper_faithful = paper_faithful;
    opt.max_n = cap;
    const ilp::IlpModel model(rs.seq, opt);
    ilp::ModelFormat fmt;
    if (format == "lp") fmt = ilp::ModelFormat::lp;
    else if (format == "mps") fmt = ilp::ModelFormat::mps;
    else throw std::runtime_error("unknown format '" + format + "' (use lp or mps)");
    const std::string text = ilp::write_model(model, fmt);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file(out_path, text);
    }
    std::cerr << "variables " << model.variable_count() << " (y " << model.y_count() << ", w "
              << model.product_count() << "), constraints " << model.constraint_count() << "\n";
    return 0;
}

int cmd_render(const std::string& seq_spec, const std::string& moves_text, const std::string& record_path,
               int record_index, const std::string& conf_file, const std::string& conf_id,
               const std::string& format, const std::string& out_path, const std::string& seq_file) {
    std::string spec = seq_spec;
    std::vector<Dir> moves;
    if (!record_path.empty()) {
        const auto records = bench::records_from_jsonl(read_file(record_path));
        if (record_index < 0 || record_index >= static_cast<int>(records.size()))
            throw std::runtime_error("record index out of range");
        moves = records[static_cast<std::size_t>(record_index)].best_moves;
        if (spec.empty()) spec = records[static_cast<std::size_t>(record_index)].hp;
    } else if (!conf_file.empty()) {
        const auto entries = parse_conformation_file(read_file(conf_file));
        const auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) {
            return conf_id.empty() || e.id == conf_id;
        });
        if (it == entries.end())
            throw std::runtime_error("conformation id '" + conf_id + "' not found in " + conf_file);
        moves = it->moves;
    } else {
        moves = parse_move_list(moves_text);
    }
    if (spec.empty()) throw std::runtime_error("render: no sequence given");
    const bench::ResolvedSequence rs = resolve(spec, seq_file);
    const DecodeResult dec = decode(moves, static_cast<int>(rs.seq.size()));
    if (!dec.valid)
        throw std::runtime_error("move vector self-intersects at rank " +
                                 std::to_string(dec.collision_rank));
    const std::string text = format == "ascii" ? render::to_ascii(rs.seq, dec.conf)
                                               : render::to_svg(rs.seq, dec.conf);
    if (out_path.empty()) std::cout << text;
    else write_file(out_path, text);
    return 0;
}

int cmd_verify(const std::string& in_path) {
    const auto records = bench::records_from_jsonl(read_file(in_path));
    int failures = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const galsts::RunRecord& rec = records[i];
        const HpSequence seq = HpSequence::parse(rec.hp);
        const DecodeResult dec = decode(rec.best_moves, static_cast<int>(seq.size()));
        if (!dec.valid) {
            std::cout << "record " << i << " (seq " << rec.sequence_id << "): INVALID move vector\n";
            ++failures;
            continue;
        }
        const Energy e = contact_energy(seq, dec.conf);
        if (e != rec.best_energy) {
            std::cout << "record " << i << " (seq " << rec.sequence_id << "): stored " << rec.best_energy
                      << ", recomputed " << e << " MISMATCH\n";
            ++failures;
        } else {
            std::cout << "record " << i << " (seq " << rec.sequence_id << "): ok, energy " << e << "\n";
        }
    }
    std::cout << (failures == 0 ? "all records verified\n" : "verification FAILED\n");
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"HP-model protein folding on the 2D triangular lattice"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "run the hybrid solver on one sequence");
    std::string solve_seq;
    std::string solve_out;
    bool solve_quiet = false;
    ParamFlags solve_flags;
    solve->add_option("--seq", solve_seq, "instance id or compact HP string")->required();
    solve_flags.attach(solve);
    solve->add_option("--out", solve_out, "append the run record to this JSONL file");
    solve->add_flag("--quiet", solve_quiet, "print only the best energy");

    // bench
    auto* benchcmd = app.add_subcommand("bench", "run the benchmark harness");
    std::string bench_suite, bench_seqs, bench_out = "bench";
    int bench_runs = 30, bench_jobs = 1;
    ParamFlags bench_flags;
    benchcmd->add_option("--suite", bench_suite, "instance suite (table2)");
    benchcmd->add_option("--seqs", bench_seqs, "comma-separated instance ids (overrides --suite)");
    benchcmd->add_option("--runs", bench_runs, "independent seeded runs per instance");
    benchcmd->add_option("--jobs", bench_jobs, "parallel runs");
    bench_flags.attach(benchcmd);
    benchcmd->add_option("--out", bench_out, "output path prefix");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "exact optimum by exhaustive search");
    std::string enum_seq, enum_seq_file;
    int enum_cap = oracle::kDefaultEnumerationCap;
    bool enum_no_reduce = false;
    enumerate->add_option("--seq", enum_seq, "instance id or compact HP string")->required();
    enumerate->add_option("--cap", enum_cap, "maximum chain length");
    enumerate->add_flag("--no-reduce", enum_no_reduce, "disable symmetry reduction");
    enumerate->add_option("--seq-file", enum_seq_file, "sequence file to resolve ids against");

    // export-ilp
    auto* exportilp = app.add_subcommand("export-ilp", "write the 0-1 placement program");
    std::string ilp_seq, ilp_format = "lp", ilp_out, ilp_seq_file;
    bool ilp_paper = false;
    int ilp_cap = 24;
    exportilp->add_option("--seq", ilp_seq, "instance id or compact HP string")->required();
    exportilp->add_option("--format", ilp_format, "lp or mps");
    exportilp->add_flag("--paper-faithful", ilp_paper, "literal constraint set, no repair");
    exportilp->add_option("--cap", ilp_cap, "model-size cap on n");
    exportilp->add_option("--out", ilp_out, "output file (stdout when omitted)");
    exportilp->add_option("--seq-file", ilp_seq_file, "sequence file to resolve ids against");

    // render
    auto* rendercmd = app.add_subcommand("render", "draw a conformation");
    std::string render_seq, render_moves, render_record, render_conf_file, render_conf_id,
                render_format = "svg", render_out, render_seq_file;
    int render_index = 0;
    rendercmd->add_option("--seq", render_seq, "instance id or compact HP string");
    rendercmd->add_option("--moves", render_moves, "comma-separated direction codes");
    rendercmd->add_option("--record", render_record, "JSONL run-record file to draw from");
    rendercmd->add_option("--index", render_index, "record index within --record");
    rendercmd->add_option("--conf-file", render_conf_file, "conformation file (id<TAB>moves per line)");
    rendercmd->add_option("--conf-id", render_conf_id, "entry id within --conf-file (default: first)");
    rendercmd->add_option("--format", render_format, "svg or ascii");
    rendercmd->add_option("--out", render_out, "output file (stdout when omitted)");
    rendercmd->add_option("--seq-file", render_seq_file, "sequence file to resolve ids against");

    // verify
    auto* verify = app.add_subcommand("verify", "re-evaluate stored run records");
    std::string verify_in;
    verify->add_option("--in", verify_in, "JSONL run-record file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(solve_seq, solve_flags, solve_out, solve_quiet);
        if (benchcmd->parsed())
            return cmd_bench(bench_suite, bench_seqs, bench_runs, bench_jobs, bench_flags, bench_out);
        if (enumerate->parsed()) return cmd_enumerate(enum_seq, enum_cap, enum_no_reduce, enum_seq_file);
        if (exportilp->parsed())
            return cmd_export_ilp(ilp_seq, ilp_format, ilp_paper, ilp_cap, ilp_out, ilp_seq_file);
        if (rendercmd->parsed())
            return cmd_render(render_seq, render_moves, render_record, render_index, render_conf_file,
                              render_conf_id, render_format, render_out, render_seq_file);
        if (verify->parsed()) return cmd_verify(verify_in);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
