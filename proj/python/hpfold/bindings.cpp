#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hpfold/bench.hpp"
#include "hpfold/galsts.hpp"
#include "hpfold/ilp.hpp"
#include "hpfold/oracle.hpp"
#include "hpfold/render.hpp"

namespace py = pybind11;
using namespace hpfold;

namespace {

HpSequence seq_of(const std::string& spec) { return bench::resolve_sequence(spec).seq; }

std::vector<Dir> to_moves(const std::vector<int>& codes) {
    std::vector<Dir> mv;
    mv.reserve(codes.size());
    for (int c : codes) {
        if (!is_valid_dir(c)) throw std::invalid_argument("direction code out of range 1..6");
        mv.push_back(static_cast<Dir>(c));
    }
    return mv;
}

Conformation decode_or_throw(const HpSequence& seq, const std::vector<int>& codes) {
    const DecodeResult dec = decode(to_moves(codes), static_cast<int>(seq.size()));
    if (!dec.valid)
        throw std::invalid_argument("move vector self-intersects at rank " +
                                    std::to_string(dec.collision_rank));
    return dec.conf;
}

py::dict record_to_dict(const galsts::RunRecord& rec) {
    py::dict d;
    d["sequence_id"] = rec.sequence_id;
    d["hp"] = rec.hp;
    d["seed"] = rec.seed;
    d["best_energy"] = rec.best_energy;
    d["best_moves"] = std::vector<int>(rec.best_moves.begin(), rec.best_moves.end());
    d["generations"] = rec.generations;
    d["wall_ms"] = rec.wall_ms;
    d["trace"] = rec.best_by_generation;
    return d;
}

} // namespace

PYBIND11_MODULE(_hpfold, m) {
    m.doc() = "HP-model protein folding on the 2D triangular lattice";

    m.def("expand", [](const std::string& spec) { return seq_of(spec).to_string(); },
          py::arg("sequence"), "Expand compact HP notation (or a benchmark id) to residue letters.");

    m.def("decode",
          [](const std::string& spec, const std::vector<int>& moves) {
              const HpSequence seq = seq_of(spec);
              const DecodeResult dec = decode(to_moves(moves), static_cast<int>(seq.size()));
              py::dict d;
              d["valid"] = dec.valid;
              d["collision_rank"] = dec.collision_rank;
              if (dec.valid) {
                  std::vector<std::pair<int, int>> pts;
                  for (const Point& p : dec.conf.points) pts.emplace_back(p.u, p.v);
                  d["points"] = pts;
              }
              return d;
          },
          py::arg("sequence"), py::arg("moves"),
          "Derive lattice points from a move vector and check self-avoidance.");

    m.def("energy",
          [](const std::string& spec, const std::vector<int>& moves) {
              const HpSequence seq = seq_of(spec);
              return contact_energy(seq, decode_or_throw(seq, moves));
          },
          py::arg("sequence"), py::arg("moves"), "Contact energy of a conformation.");

    m.def("contacts",
          [](const std::string& spec, const std::vector<int>& moves) {
              const HpSequence seq = seq_of(spec);
              return hh_contacts(seq, decode_or_throw(seq, moves));
          },
          py::arg("sequence"), py::arg("moves"), "H-H topological contacts as 1-based rank pairs.");

    m.def("enumerate_optimal",
          [](const std::string& spec, bool symmetry_reduction, int cap) {
              const auto res = oracle::enumerate_optimal(seq_of(spec), symmetry_reduction, cap);
              py::dict d;
              d["n"] = res.n;
              d["optimal_energy"] = res.optimal_energy;
              d["optimal_count"] = res.optimal_count;
              d["total_valid"] = res.total_valid;
              return d;
          },
          py::arg("sequence"), py::arg("symmetry_reduction") = true,
          py::arg("cap") = oracle::kDefaultEnumerationCap,
          "Exact optimum by exhaustive enumeration (small chains only).");

    m.def("solve",
          [](const std::string& spec, int population, double ls_probability, int max_generations,
             int reproduction_budget, int ls_budget, double time_limit_s, std::uint64_t seed) {
              galsts::GaParams params;
              params.population = population;
              params.ls_probability = ls_probability;
              params.max_generations = max_generations;
              params.reproduction_budget = reproduction_budget;
              params.ls_budget = ls_budget;
              params.time_limit_s = time_limit_s;
              params.seed = seed;
              const bench::ResolvedSequence rs = bench::resolve_sequence(spec);
              return record_to_dict(galsts::run(rs.seq, params, rs.id));
          },
          py::arg("sequence"), py::arg("population") = 100, py::arg("ls_probability") = 0.8,
          py::arg("max_generations") = 300, py::arg("reproduction_budget") = 0,
          py::arg("ls_budget") = 0, py::arg("time_limit_s") = 0.0, py::arg("seed") = 1,
          "Run the hybrid solver; returns the run record as a dict.");

    m.def("export_ilp",
          [](const std::string& spec, const std::string& format, bool paper_faithful, int cap) {
              ilp::IlpOptions opt;
              opt.paper_faithful = paper_faithful;
              opt.max_n = cap;
              const ilp::IlpModel model(seq_of(spec), opt);
              return ilp::write_model(model,
                                      format == "mps" ? ilp::ModelFormat::mps : ilp::ModelFormat::lp);
          },
          py::arg("sequence"), py::arg("format") = "lp", py::arg("paper_faithful") = false,
          py::arg("cap") = 24, "Write the 0-1 placement program as LP or MPS text.");

    m.def("render_svg",
          [](const std::string& spec, const std::vector<int>& moves) {
              const HpSequence seq = seq_of(spec);
              return render::to_svg(seq, decode_or_throw(seq, moves));
          },
          py::arg("sequence"), py::arg("moves"), "SVG drawing of a conformation.");

    m.def("render_ascii",
          [](const std::string& spec, const std::vector<int>& moves) {
              const HpSequence seq = seq_of(spec);
              return render::to_ascii(seq, decode_or_throw(seq, moves));
          },
          py::arg("sequence"), py::arg("moves"), "Text drawing of a conformation.");

    m.def("benchmark_instances", [] {
        py::list out;
        for (const auto& inst : bench::table_instances()) {
            py::dict d;
            d["id"] = inst.id;
            d["declared_length"] = inst.declared_length;
            d["compact"] = inst.compact;
            out.append(d);
        }
        return out;
    });
}
