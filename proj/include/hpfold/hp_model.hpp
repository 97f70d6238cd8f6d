#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hpfold/lattice.hpp"

namespace hpfold {

enum class Residue : std::uint8_t { H, P };

/// Contact energy; always <= 0 (minus the number of H-H topological contacts).
using Energy = int;

class SequenceParseError : public std::runtime_error {
  public:
    SequenceParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}
    /// 1-based offset into the compact text.
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

/// An H/P chain, immutable after parse.
class HpSequence {
  public:
    explicit HpSequence(std::vector<Residue> residues) : residues_(std::move(residues)) {}

    /// Parses compact notation: H/P letters, parenthesized groups (nesting
    /// allowed), and ^k exponents binding to the preceding letter or group.
    /// Example: "H^2P^2(HP^2)^6H^2" -> 24 residues.
    static HpSequence parse(std::string_view text);

    std::size_t size() const { return residues_.size(); }
    Residue at(std::size_t rank0) const { return residues_[rank0]; }
    bool is_h(std::size_t rank0) const { return residues_[rank0] == Residue::H; }
    const std::vector<Residue>& residues() const { return residues_; }

    /// Expanded letters, e.g. "HPHP".
    std::string to_string() const;

    friend bool operator==(const HpSequence& a, const HpSequence& b) {
        return a.residues_ == b.residues_;
    }

  private:
    std::vector<Residue> residues_;
};

/// A self-avoiding embedding of a chain: n-1 direction codes plus the n
/// derived points (points[0] is the origin). Built via decode().
struct Conformation {
    std::vector<Dir> moves;
    std::vector<Point> points;

    int n() const { return static_cast<int>(points.size()); }
};

/// Outcome of decoding a move vector. When the walk self-intersects,
/// collision_rank is the 1-based rank of the first residue that lands on an
/// occupied point and conf is left empty.
struct DecodeResult {
    bool valid = false;
    int collision_rank = 0;
    Conformation conf;
};

/// Derives the point list from a move vector and checks self-avoidance.
/// Throws std::invalid_argument unless moves.size() == n-1 and all codes are
/// in 1..6.
DecodeResult decode(const std::vector<Dir>& moves, int n);

/// Contact energy via a neighbor-cell occupancy lookup, O(n).
/// Throws std::invalid_argument on length mismatch.
Energy contact_energy(const HpSequence& seq, const Conformation& conf);

/// Same value as contact_energy, computed by the literal O(n^2) double sum
/// over residue pairs. Kept as an independent route for cross-checking.
Energy contact_energy_double_sum(const HpSequence& seq, const Conformation& conf);

/// All H-H topological contacts as 1-based rank pairs (i, j), i + 2 <= j,
/// ordered lexicographically. |result| == -contact_energy.
std::vector<std::pair<int, int>> hh_contacts(const HpSequence& seq, const Conformation& conf);

/// Dense rank-by-point lookup for chains anchored at the origin; coordinates
/// are bounded by +-n so storage is a flat (2n+1)^2 table. Clearing is O(1)
/// via epoch stamps.
class OccupancyGrid {
  public:
    explicit OccupancyGrid(int n);

    void clear();
    /// Records rank0 at p. Returns false (and records nothing) if occupied.
    bool place(Point p, int rank0);
    void remove(Point p);
    /// 0-based rank at p, or -1 if free.
    int occupant(Point p) const;

  private:
    int side_ = 0;
    int radius_ = 0;
    std::uint32_t epoch_ = 1;
    std::vector<std::uint32_t> stamp_;
    std::vector<int> rank_;

    std::size_t slot(Point p) const {
        return static_cast<std::size_t>(p.v + radius_) * side_ + (p.u + radius_);
    }
};

/// One `id<TAB>compact` sequence per line; lines beginning with '#' ignored.
struct SequenceFileEntry {
    std::string id;
    std::string compact;
};
std::vector<SequenceFileEntry> parse_sequence_file(std::string_view text);
std::string format_sequence_file(const std::vector<SequenceFileEntry>& entries);

/// One `id<TAB>comma-separated move codes` per line, '#' comments ignored.
struct ConformationFileEntry {
    std::string id;
    std::vector<Dir> moves;
};
std::vector<ConformationFileEntry> parse_conformation_file(std::string_view text);
std::string format_conformation_file(const std::vector<ConformationFileEntry>& entries);

/// Parses "2,6,2,..." into direction codes; throws on malformed input.
std::vector<Dir> parse_move_list(std::string_view text);
std::string format_move_list(const std::vector<Dir>& moves);

} // namespace hpfold
