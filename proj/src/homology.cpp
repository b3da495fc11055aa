#include "morseconf/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace morseconf {

long long ChainComplexMatrices::euler() const {
    long long chi = 0;
    for (size_t p = 0; p < cell_counts.size(); ++p)
        chi += (p % 2 == 0 ? 1 : -1) * cell_counts[p];
    return chi;
}

ChainComplexMatrices boundary_matrices(const PlaneTree& tree, int n,
                                       int up_to_dim, long long budget) {
    ChainComplexMatrices out;
    int top = (up_to_dim >= 0) ? up_to_dim : n;
    std::vector<std::vector<ConfigCell>> cells;
    for (int p = 0; p <= top; ++p) {
        auto cp = enumerate_cells(tree, n, p, budget);
        if (cp.empty() && p > 0) break;
        cells.push_back(std::move(cp));
    }
    std::map<ConfigCell, long long> prev_index;
    for (size_t p = 0; p < cells.size(); ++p) {
        out.cell_counts.push_back(static_cast<long long>(cells[p].size()));
        if (p == 0) {
            for (long long i = 0; i < (long long)cells[0].size(); ++i)
                prev_index[cells[0][i]] = i;
            continue;
        }
        SparseMatrix m;
        m.rows = static_cast<long long>(cells[p - 1].size());
        m.cols = static_cast<long long>(cells[p].size());
        m.entries.resize(m.cols);
        for (long long c = 0; c < m.cols; ++c) {
            std::map<long long, long long> col;
            for (const auto& [face, sign] : faces(cells[p][c]))
                col[prev_index.at(face)] += sign;
            for (const auto& [r, v] : col)
                if (v != 0) m.entries[c].emplace_back(r, v);
        }
        out.boundaries.push_back(std::move(m));
        prev_index.clear();
        for (long long i = 0; i < (long long)cells[p].size(); ++i)
            prev_index[cells[p][i]] = i;
    }
    // boundary of boundary vanishes
    for (size_t p = 1; p < out.boundaries.size(); ++p) {
        const SparseMatrix& hi = out.boundaries[p];
        const SparseMatrix& lo = out.boundaries[p - 1];
        for (long long c = 0; c < hi.cols; ++c) {
            std::map<long long, long long> acc;
            for (const auto& [mid, v] : hi.entries[c])
                for (const auto& [r, w] : lo.entries[mid]) acc[r] += v * w;
            for (const auto& [r, v] : acc)
                if (v != 0)
                    throw std::logic_error("boundary_matrices: d(d(x)) != 0");
        }
    }
    return out;
}

namespace {

// Working form for Smith reduction: rows as column->value maps plus a
// column index of occupied rows.
struct WorkMatrix {
    std::vector<std::map<long long, BigInt>> rows;
    std::vector<std::set<long long>> col_rows;

    void set(long long r, long long c, BigInt v) {
        auto& row = rows[r];
        if (v == 0) {
            row.erase(c);
            col_rows[c].erase(r);
        } else {
            row[c] = std::move(v);
            col_rows[c].insert(r);
        }
    }
    const BigInt* get(long long r, long long c) const {
        auto it = rows[r].find(c);
        return it == rows[r].end() ? nullptr : &it->second;
    }

    // row_k -= q * row_i
    void row_op(long long k, long long i, const BigInt& q) {
        if (q == 0) return;
        std::vector<std::pair<long long, BigInt>> src(rows[i].begin(), rows[i].end());
        for (auto& [c, v] : src) {
            BigInt nv = (get(k, c) ? *get(k, c) : BigInt(0)) - q * v;
            set(k, c, std::move(nv));
        }
    }
    // col_l -= q * col_j
    void col_op(long long l, long long j, const BigInt& q) {
        if (q == 0) return;
        std::vector<long long> src(col_rows[j].begin(), col_rows[j].end());
        for (long long r : src) {
            BigInt nv = (get(r, l) ? *get(r, l) : BigInt(0)) - q * rows[r].at(j);
            set(r, l, std::move(nv));
        }
    }
};

}  // namespace

SnfResult smith_normal_form(const SparseMatrix& m, bool need_factors) {
    WorkMatrix w;
    w.rows.resize(m.rows);
    w.col_rows.resize(m.cols);
    std::set<long long> active_rows, active_cols;
    for (long long c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.entries[c])
            if (v != 0) w.set(r, c, BigInt(v));
    for (long long r = 0; r < m.rows; ++r)
        if (!w.rows[r].empty()) active_rows.insert(r);
    for (long long c = 0; c < m.cols; ++c)
        if (!w.col_rows[c].empty()) active_cols.insert(c);

    SnfResult result;
    while (true) {
        // pivot: smallest magnitude, then least fill
        long long pi = -1, pj = -1;
        BigInt best;
        size_t best_fill = 0;
        for (long long r : active_rows) {
            for (const auto& [c, v] : w.rows[r]) {
                if (!active_cols.count(c)) continue;
                BigInt mag = abs(v);
                size_t fill = w.rows[r].size() + w.col_rows[c].size();
                if (pi < 0 || mag < best || (mag == best && fill < best_fill)) {
                    pi = r;
                    pj = c;
                    best = mag;
                    best_fill = fill;
                }
            }
            if (best == 1) break;  // unit pivots are good enough
        }
        if (pi < 0) break;

        // isolate the pivot in its row and column
        while (true) {
            bool moved = false;
            std::vector<long long> col_members(w.col_rows[pj].begin(), w.col_rows[pj].end());
            for (long long k : col_members) {
                if (k == pi) continue;
                const BigInt& p = *w.get(pi, pj);
                BigInt q = *w.get(k, pj) / p;  // truncated: remainder shrinks
                w.row_op(k, pi, q);
                if (w.get(k, pj)) {  // nonzero remainder becomes the new pivot
                    pi = k;
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            std::vector<std::pair<long long, BigInt>> row_members(w.rows[pi].begin(),
                                                                  w.rows[pi].end());
            for (auto& [l, v] : row_members) {
                if (l == pj) continue;
                const BigInt& p = *w.get(pi, pj);
                BigInt q = v / p;
                w.col_op(l, pj, q);
                if (w.get(pi, l)) {
                    pj = l;
                    moved = true;
                    break;
                }
            }
            if (!moved) break;
        }

        BigInt pivot = abs(*w.get(pi, pj));
        active_rows.erase(pi);
        active_cols.erase(pj);
        w.set(pi, pj, BigInt(0));

        if (need_factors && pivot != 1) {
            // divisibility chain: fold in any entry the pivot misses
            bool folded = false;
            for (long long r : active_rows) {
                for (const auto& [c, v] : w.rows[r]) {
                    if (!active_cols.count(c)) continue;
                    if (v % pivot != 0) {
                        // restore pivot and add the offending row to its row
                        w.set(pi, pj, pivot);
                        active_rows.insert(pi);
                        active_cols.insert(pj);
                        w.row_op(pi, r, BigInt(-1));
                        folded = true;
                        break;
                    }
                }
                if (folded) break;
            }
            if (folded) continue;
        }

        ++result.rank;
        result.invariant_factors.push_back(std::move(pivot));
    }
    std::sort(result.invariant_factors.begin(), result.invariant_factors.end());
    if (!need_factors) result.invariant_factors.clear();
    return result;
}

HomologyReport smith_betti(const ChainComplexMatrices& matrices, bool with_torsion) {
    HomologyReport rep;
    rep.euler = matrices.euler();
    int top = static_cast<int>(matrices.cell_counts.size()) - 1;
    std::vector<SnfResult> snf(matrices.boundaries.size());
    for (size_t i = 0; i < matrices.boundaries.size(); ++i)
        snf[i] = smith_normal_form(matrices.boundaries[i], with_torsion);
    for (int p = 0; p <= top; ++p) {
        long long rank_p = (p >= 1 && p - 1 < (int)snf.size()) ? snf[p - 1].rank : 0;
        long long rank_next = (p < (int)snf.size()) ? snf[p].rank : 0;
        rep.betti[p] = matrices.cell_counts[p] - rank_p - rank_next;
        if (with_torsion && p < (int)snf.size()) {
            std::vector<BigInt> tor;
            for (const auto& f : snf[p].invariant_factors)
                if (f != 1) tor.push_back(f);
            if (!tor.empty()) rep.torsion[p] = std::move(tor);
        }
    }
    return rep;
}

}  // namespace morseconf
