#include "hpfold/hp_model.hpp"

#include <algorithm>
#include <cctype>

namespace hpfold {

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& what) const { throw SequenceParseError(what, pos + 1); }

    // Exponent must follow '^' as a positive decimal integer.
    std::size_t exponent() {
        ++pos; // consume '^'
        if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent digits after '^'");
        std::size_t value = 0;
        const std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + static_cast<std::size_t>(peek() - '0');
            if (value > 1000000) { pos = start; fail("exponent too large"); }
            ++pos;
        }
        if (value == 0) { pos = start; fail("exponent must be positive"); }
        return value;
    }

    // Parses a unit sequence until `stop` (')' inside a group, '\0' at top level).
    std::vector<Residue> sequence(char stop) {
        std::vector<Residue> out;
        while (!done() && peek() != stop) {
            const char c = peek();
            if (c == 'H' || c == 'P') {
                ++pos;
                const Residue r = c == 'H' ? Residue::H : Residue::P;
                std::size_t reps = 1;
                if (!done() && peek() == '^') reps = exponent();
                out.insert(out.end(), reps, r);
            } else if (c == '(') {
                ++pos;
                std::vector<Residue> group = sequence(')');
                if (done() || peek() != ')') fail("unbalanced '('");
                ++pos; // consume ')'
                std::size_t reps = 1;
                if (!done() && peek() == '^') reps = exponent();
                for (std::size_t r = 0; r < reps; ++r) out.insert(out.end(), group.begin(), group.end());
            } else if (c == ')') {
                fail("unbalanced ')'");
            } else {
                fail(std::string("illegal character '") + c + "'");
            }
        }
        return out;
    }
};

} // namespace

HpSequence HpSequence::parse(std::string_view text) {
    Parser p{text};
    std::vector<Residue> residues = p.sequence('\0');
    if (!p.done()) p.fail("unbalanced ')'");
    if (residues.empty()) throw SequenceParseError("empty sequence", 1);
    return HpSequence(std::move(residues));
}

std::string HpSequence::to_string() const {
    std::string out;
    out.reserve(residues_.size());
    for (Residue r : residues_) out.push_back(r == Residue::H ? 'H' : 'P');
    return out;
}

OccupancyGrid::OccupancyGrid(int n)
    : side_(2 * n + 1),
      radius_(n),
      stamp_(static_cast<std::size_t>(side_) * side_, 0),
      rank_(static_cast<std::size_t>(side_) * side_, -1) {}

void OccupancyGrid::clear() {
    ++epoch_;
    if (epoch_ == 0) { // stamp wrap: rewrite the table once every 2^32 clears
        std::fill(stamp_.begin(), stamp_.end(), 0u);
        epoch_ = 1;
    }
}

bool OccupancyGrid::place(Point p, int rank0) {
    const std::size_t s = slot(p);
    if (stamp_[s] == epoch_) return false;
    stamp_[s] = epoch_;
    rank_[s] = rank0;
    return true;
}

void OccupancyGrid::remove(Point p) { stamp_[slot(p)] = epoch_ - 1; }

int OccupancyGrid::occupant(Point p) const {
    const std::size_t s = slot(p);
    return stamp_[s] == epoch_ ? rank_[s] : -1;
}

DecodeResult decode(const std::vector<Dir>& moves, int n) {
    if (n < 1) throw std::invalid_argument("decode: n must be >= 1");
    if (static_cast<int>(moves.size()) != n - 1)
        throw std::invalid_argument("decode: move vector has length " + std::to_string(moves.size()) +
                                    ", expected " + std::to_string(n - 1));
    for (Dir d : moves)
        if (!is_valid_dir(d)) throw std::invalid_argument("decode: direction code out of range");

    DecodeResult res;
    std::vector<Point> points(static_cast<std::size_t>(n));
    OccupancyGrid grid(n);
    points[0] = Point{0, 0};
    grid.place(points[0], 0);
    for (int k = 1; k < n; ++k) {
        points[k] = step(points[k - 1], moves[k - 1]);
        if (!grid.place(points[k], k)) {
            res.valid = false;
            res.collision_rank = k + 1;
            return res;
        }
    }
    res.valid = true;
    res.conf = Conformation{moves, std::move(points)};
    return res;
}

namespace {

void require_match(const HpSequence& seq, const Conformation& conf) {
    if (seq.size() != conf.points.size())
        throw std::invalid_argument("sequence length " + std::to_string(seq.size()) +
                                    " does not match conformation length " +
                                    std::to_string(conf.points.size()));
}

} // namespace

Energy contact_energy(const HpSequence& seq, const Conformation& conf) {
    require_match(seq, conf);
    const int n = conf.n();
    OccupancyGrid grid(n);
    for (int k = 0; k < n; ++k) grid.place(conf.points[k], k);
    int contacts = 0;
    for (int i = 0; i < n; ++i) {
        if (!seq.is_h(i)) continue;
        for (int d = 1; d <= 6; ++d) {
            const int j = grid.occupant(step(conf.points[i], static_cast<Dir>(d)));
            if (j >= i + 2 && seq.is_h(j)) ++contacts;
        }
    }
    return -contacts;
}

Energy contact_energy_double_sum(const HpSequence& seq, const Conformation& conf) {
    require_match(seq, conf);
    const int n = conf.n();
    int total = 0;
    for (int i = 1; i <= n - 2; ++i)
        for (int j = i + 2; j <= n; ++j) {
            const int delta = seq.is_h(i - 1) && seq.is_h(j - 1) ? 1 : 0;
            const int x = are_adjacent(conf.points[i - 1], conf.points[j - 1]) ? 1 : 0;
            total += delta * x;
        }
    return -total;
}

std::vector<std::pair<int, int>> hh_contacts(const HpSequence& seq, const Conformation& conf) {
    require_match(seq, conf);
    const int n = conf.n();
    OccupancyGrid grid(n);
    for (int k = 0; k < n; ++k) grid.place(conf.points[k], k);
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i) {
        if (!seq.is_h(i)) continue;
        for (int d = 1; d <= 6; ++d) {
            const int j = grid.occupant(step(conf.points[i], static_cast<Dir>(d)));
            if (j >= i + 2 && seq.is_h(j)) out.emplace_back(i + 1, j + 1);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

} // namespace

std::vector<SequenceFileEntry> parse_sequence_file(std::string_view text) {
    std::vector<SequenceFileEntry> out;
    for (std::string_view line : split_lines(text)) {
        if (line.empty() || line.front() == '#') continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos)
            throw std::runtime_error("sequence file: missing tab separator in line: " + std::string(line));
        out.push_back({std::string(line.substr(0, tab)), std::string(line.substr(tab + 1))});
    }
    return out;
}

std::string format_sequence_file(const std::vector<SequenceFileEntry>& entries) {
    std::string out;
    for (const auto& e : entries) {
        out += e.id;
        out += '\t';
        out += e.compact;
        out += '\n';
    }
    return out;
}

std::vector<Dir> parse_move_list(std::string_view text) {
    std::vector<Dir> moves;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
        if (i >= text.size()) break;
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::runtime_error("move list: expected digit, got '" + std::string(1, text[i]) + "'");
        int code = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            code = code * 10 + (text[i] - '0');
            ++i;
        }
        if (!is_valid_dir(code)) throw std::runtime_error("move list: direction code out of range 1..6");
        moves.push_back(static_cast<Dir>(code));
    }
    return moves;
}

std::string format_move_list(const std::vector<Dir>& moves) {
    std::string out;
    for (std::size_t i = 0; i < moves.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(static_cast<int>(moves[i]));
    }
    return out;
}

std::vector<ConformationFileEntry> parse_conformation_file(std::string_view text) {
    std::vector<ConformationFileEntry> out;
    for (std::string_view line : split_lines(text)) {
        if (line.empty() || line.front() == '#') continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos)
            throw std::runtime_error("conformation file: missing tab separator in line: " + std::string(line));
        out.push_back({std::string(line.substr(0, tab)), parse_move_list(line.substr(tab + 1))});
    }
    return out;
}

std::string format_conformation_file(const std::vector<ConformationFileEntry>& entries) {
    std::string out;
    for (const auto& e : entries) {
        out += e.id;
        out += '\t';
        out += format_move_list(e.moves);
        out += '\n';
    }
    return out;
}

} // namespace hpfold
