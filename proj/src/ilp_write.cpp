#include <algorithm>
#include <stdexcept>

#include "hpfold/ilp.hpp"

namespace hpfold::ilp {

namespace {

// Shared row enumeration so the two writers and the documented counts cannot
// drift apart. Order: start, total, cell_*, chain_* (k-major), rank_*,
// then mca_t/mcb_t/mcc_t per product.
struct RowNamer {
    const IlpModel& model;

    std::string cell(int i, int j) const { return "cell_" + std::to_string(i) + "_" + std::to_string(j); }
    std::string chain(int i, int j, int k) const {
        return "chain_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k);
    }
    std::string rank(int k) const { return "rank_" + std::to_string(k); }
    std::string mc(char tag, std::int64_t t) const {
        return std::string("mc") + tag + "_" + std::to_string(t);
    }
};

std::string header_lines(const IlpModel& model, const char* comment) {
    std::string h;
    auto line = [&](const std::string& s) {
        h += comment;
        h += ' ';
        h += s;
        h += '\n';
    };
    line("HP chain placement model on the 2n x 2n grid, n = " + std::to_string(model.n()));
    line("sequence: " + model.hp());
    line(model.repaired() ? "variant: default (parity-free neighbor deltas, one cell per rank enforced)"
                          : "variant: paper-faithful (literal row-adjacent deltas, no per-rank equalities)");
    line("variables: y_i_j_k = 1 iff grid cell (i,j) holds residue k; binary");
    line("           w_ia_ja_ib_jb_k_kp linearizes y_ia_ja_k * y_ib_jb_kp for H rank pairs");
    line("objective: maximize sum of w minus " + std::to_string(model.objective_constant()) +
         " (consecutive H-H pairs); equals the contact count at chain embeddings");
    return h;
}

void append_wrapped(std::string& out, const std::string& term, int& line_len) {
    if (line_len + static_cast<int>(term.size()) > 200) {
        out += "\n   ";
        line_len = 3;
    }
    out += term;
    line_len += static_cast<int>(term.size());
}

std::string lp_text(const IlpModel& model) {
    const int n = model.n();
    const int side = model.grid_side();
    RowNamer rows{model};
    std::string out = header_lines(model, "\\");

    out += "Maximize\n Z:";
    int ll = 3;
    for (std::int64_t t = 0; t < model.product_count(); ++t)
        append_wrapped(out, " + " + model.variable_name(model.y_count() + t), ll);
    if (model.objective_constant() != 0)
        append_wrapped(out, " - " + std::to_string(model.objective_constant()), ll);
    else if (model.product_count() == 0)
        append_wrapped(out, " 0", ll);
    out += "\nSubject To\n";

    auto yname = [&](int i, int j, int k) { return model.variable_name(model.y_index({i, j}, k)); };

    out += " start: " + yname(n, n, 1) + " = 1\n";

    out += " total:";
    ll = 7;
    for (int i = 1; i <= side; ++i)
        for (int j = 1; j <= side; ++j)
            for (int k = 1; k <= n; ++k) append_wrapped(out, " + " + yname(i, j, k), ll);
    append_wrapped(out, " = " + std::to_string(n), ll);
    out += '\n';

    for (int i = 1; i <= side; ++i)
        for (int j = 1; j <= side; ++j) {
            out += " " + rows.cell(i, j) + ":";
            ll = 0;
            for (int k = 1; k <= n; ++k) append_wrapped(out, " + " + yname(i, j, k), ll);
            append_wrapped(out, " <= 1", ll);
            out += '\n';
        }

    const std::vector<GridDelta>& deltas = model.neighbor_deltas();
    for (int k = 1; k < n; ++k)
        for (int i = 1; i <= side; ++i)
            for (int j = 1; j <= side; ++j) {
                out += " " + rows.chain(i, j, k) + ": " + yname(i, j, k + 1);
                ll = 0;
                for (const GridDelta& d : deltas) {
                    const int i2 = i + d.di, j2 = j + d.dj;
                    if (i2 < 1 || i2 > side || j2 < 1 || j2 > side) continue;
                    append_wrapped(out, " - " + yname(i2, j2, k), ll);
                }
                append_wrapped(out, " <= 0", ll);
                out += '\n';
            }

    if (model.repaired())
        for (int k = 1; k <= n; ++k) {
            out += " " + rows.rank(k) + ":";
            ll = 0;
            for (int i = 1; i <= side; ++i)
                for (int j = 1; j <= side; ++j) append_wrapped(out, " + " + yname(i, j, k), ll);
            append_wrapped(out, " = 1", ll);
            out += '\n';
        }

    const std::vector<ProductVar>& products = model.products();
    for (std::int64_t t = 0; t < model.product_count(); ++t) {
        const ProductVar& p = products[static_cast<std::size_t>(t)];
        const std::string w = model.variable_name(model.y_count() + t);
        const std::string ya = model.variable_name(p.cell_a * static_cast<std::int64_t>(n) + (p.k - 1));
        const std::string yb = model.variable_name(p.cell_b * static_cast<std::int64_t>(n) + (p.kp - 1));
        out += " " + rows.mc('a', t) + ": " + w + " - " + ya + " <= 0\n";
        out += " " + rows.mc('b', t) + ": " + w + " - " + yb + " <= 0\n";
        out += " " + rows.mc('c', t) + ": " + ya + " + " + yb + " - " + w + " <= 1\n";
    }

    out += "Binary\n";
    for (std::int64_t v = 0; v < model.variable_count(); ++v) out += " " + model.variable_name(v) + "\n";
    out += "End\n";
    return out;
}

// Fixed-field helpers: MPS fields start at columns 2, 5, 15, 25, 40, 50.
void mps_entry(std::string& out, const std::string& col, const std::string& row, const std::string& val) {
    out += "    ";
    out += col;
    if (col.size() < 10) out.append(10 - col.size(), ' ');
    else out += ' ';
    out += row;
    if (row.size() < 10) out.append(10 - row.size(), ' ');
    else out += ' ';
    out += val;
    out += '\n';
}

std::string mps_text(const IlpModel& model) {
    const int n = model.n();
    const int side = model.grid_side();
    RowNamer rows{model};
    const std::vector<ProductVar>& products = model.products();
    std::string out = header_lines(model, "*");
    out += "* objective constant: RHS on row Z carries the negated constant (CPLEX convention)\n";
    out += "NAME          HPFOLD\n";

    out += "ROWS\n";
    out += " N  Z\n";
    out += " E  start\n";
    out += " E  total\n";
    for (int i = 1; i <= side; ++i)
        for (int j = 1; j <= side; ++j) out += " L  " + rows.cell(i, j) + "\n";
    for (int k = 1; k < n; ++k)
        for (int i = 1; i <= side; ++i)
            for (int j = 1; j <= side; ++j) out += " L  " + rows.chain(i, j, k) + "\n";
    if (model.repaired())
        for (int k = 1; k <= n; ++k) out += " E  " + rows.rank(k) + "\n";
    for (std::int64_t t = 0; t < model.product_count(); ++t) {
        out += " L  " + rows.mc('a', t) + "\n";
        out += " L  " + rows.mc('b', t) + "\n";
        out += " L  " + rows.mc('c', t) + "\n";
    }

    // Product ids sorted by their y endpoints, so each y column can list the
    // McCormick rows it participates in without a triplet pass.
    std::vector<std::int32_t> by_a(products.size()), by_b(products.size());
    for (std::size_t t = 0; t < products.size(); ++t) by_a[t] = by_b[t] = static_cast<std::int32_t>(t);
    auto a_key = [&](std::int32_t t) {
        return products[static_cast<std::size_t>(t)].cell_a * static_cast<std::int64_t>(n) +
               (products[static_cast<std::size_t>(t)].k - 1);
    };
    auto b_key = [&](std::int32_t t) {
        return products[static_cast<std::size_t>(t)].cell_b * static_cast<std::int64_t>(n) +
               (products[static_cast<std::size_t>(t)].kp - 1);
    };
    std::stable_sort(by_a.begin(), by_a.end(), [&](auto x, auto y) { return a_key(x) < a_key(y); });
    std::stable_sort(by_b.begin(), by_b.end(), [&](auto x, auto y) { return b_key(x) < b_key(y); });

    out += "COLUMNS\n";
    std::size_t pa = 0, pb = 0;
    const std::vector<GridDelta>& deltas = model.neighbor_deltas();
    for (std::int64_t v = 0; v < model.y_count(); ++v) {
        const std::string name = model.variable_name(v);
        const GridCell c = model.cell_at(v / n);
        const int k = static_cast<int>(v % n) + 1;
        if (c.i == n && c.j == n && k == 1) mps_entry(out, name, "start", "1");
        mps_entry(out, name, "total", "1");
        mps_entry(out, name, rows.cell(c.i, c.j), "1");
        if (k >= 2) mps_entry(out, name, rows.chain(c.i, c.j, k - 1), "1");
        if (k <= n - 1)
            for (const GridDelta& d : deltas) {
                const int i2 = c.i + d.di, j2 = c.j + d.dj;
                if (i2 < 1 || i2 > side || j2 < 1 || j2 > side) continue;
                mps_entry(out, name, rows.chain(i2, j2, k), "-1");
            }
        if (model.repaired()) mps_entry(out, name, rows.rank(k), "1");
        while (pa < by_a.size() && a_key(by_a[pa]) == v) {
            mps_entry(out, name, rows.mc('a', by_a[pa]), "-1");
            mps_entry(out, name, rows.mc('c', by_a[pa]), "1");
            ++pa;
        }
        while (pb < by_b.size() && b_key(by_b[pb]) == v) {
            mps_entry(out, name, rows.mc('b', by_b[pb]), "-1");
            mps_entry(out, name, rows.mc('c', by_b[pb]), "1");
            ++pb;
        }
    }
    for (std::int64_t t = 0; t < model.product_count(); ++t) {
        const std::string name = model.variable_name(model.y_count() + t);
        mps_entry(out, name, "Z", "1");
        mps_entry(out, name, rows.mc('a', t), "1");
        mps_entry(out, name, rows.mc('b', t), "1");
        mps_entry(out, name, rows.mc('c', t), "-1");
    }

    out += "RHS\n";
    if (model.objective_constant() != 0)
        mps_entry(out, "RHS", "Z", std::to_string(model.objective_constant()));
    mps_entry(out, "RHS", "start", "1");
    mps_entry(out, "RHS", "total", std::to_string(n));
    for (int i = 1; i <= side; ++i)
        for (int j = 1; j <= side; ++j) mps_entry(out, "RHS", rows.cell(i, j), "1");
    if (model.repaired())
        for (int k = 1; k <= n; ++k) mps_entry(out, "RHS", rows.rank(k), "1");
    for (std::int64_t t = 0; t < model.product_count(); ++t) mps_entry(out, "RHS", rows.mc('c', t), "1");

    out += "BOUNDS\n";
    for (std::int64_t v = 0; v < model.variable_count(); ++v)
        out += " BV BND       " + model.variable_name(v) + "\n";
    out += "ENDATA\n";
    return out;
}

} // namespace

std::string write_model(const IlpModel& model, ModelFormat format) {
    switch (format) {
        case ModelFormat::lp: return lp_text(model);
        case ModelFormat::mps: return mps_text(model);
    }
    throw std::invalid_argument("write_model: unsupported format");
}

} // namespace hpfold::ilp
