#include "bggcoh/exactla.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <unordered_set>

namespace bggcoh::exactla {

BasisIndexedSpace::BasisIndexedSpace(std::vector<std::string> l) : labels(std::move(l)) {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidInput("BasisIndexedSpace: duplicate basis label");
}

SparseMatrixQ::SparseMatrixQ(int rows, int cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw InvalidInput("SparseMatrixQ: negative shape");
    normalize();
}

void SparseMatrixQ::normalize() {
    for (const Entry& e : entries_) {
        if (e.row < 0 || e.row >= rows_ || e.col < 0 || e.col >= cols_)
            throw InvalidInput("SparseMatrixQ: entry out of range");
    }
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<Entry> out;
    out.reserve(entries_.size());
    for (Entry& e : entries_) {
        if (!out.empty() && out.back().row == e.row && out.back().col == e.col)
            out.back().value += e.value;
        else
            out.push_back(std::move(e));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Entry& e) { return e.value == 0; }),
              out.end());
    entries_ = std::move(out);
}

SparseMatrixQ SparseMatrixQ::identity(int n) {
    std::vector<Entry> es;
    es.reserve(n);
    for (int i = 0; i < n; ++i) es.push_back({i, i, Rat(1)});
    return SparseMatrixQ(n, n, std::move(es));
}

double SparseMatrixQ::density() const {
    if (rows_ == 0 || cols_ == 0) return 0.0;
    return static_cast<double>(entries_.size()) /
           (static_cast<double>(rows_) * static_cast<double>(cols_));
}

SparseMatrixQ SparseMatrixQ::transpose() const {
    std::vector<Entry> es;
    es.reserve(entries_.size());
    for (const Entry& e : entries_) es.push_back({e.col, e.row, e.value});
    return SparseMatrixQ(cols_, rows_, std::move(es));
}

SparseMatrixQ SparseMatrixQ::scaled(const Rat& c) const {
    std::vector<Entry> es;
    if (c != 0) {
        es.reserve(entries_.size());
        for (const Entry& e : entries_) es.push_back({e.row, e.col, e.value * c});
    }
    return SparseMatrixQ(rows_, cols_, std::move(es));
}

SparseMatrixQ SparseMatrixQ::hstack(const SparseMatrixQ& a, const SparseMatrixQ& b) {
    if (a.rows_ != b.rows_) throw DimensionMismatch("hstack: row count differs");
    std::vector<Entry> es = a.entries_;
    es.reserve(es.size() + b.entries_.size());
    for (const Entry& e : b.entries_) es.push_back({e.row, e.col + a.cols_, e.value});
    return SparseMatrixQ(a.rows_, a.cols_ + b.cols_, std::move(es));
}

SparseMatrixQ SparseMatrixQ::vstack(const SparseMatrixQ& a, const SparseMatrixQ& b) {
    if (a.cols_ != b.cols_) throw DimensionMismatch("vstack: column count differs");
    std::vector<Entry> es = a.entries_;
    es.reserve(es.size() + b.entries_.size());
    for (const Entry& e : b.entries_) es.push_back({e.row + a.rows_, e.col, e.value});
    return SparseMatrixQ(a.rows_ + b.rows_, a.cols_, std::move(es));
}

SparseMatrixQ SparseMatrixQ::operator*(const SparseMatrixQ& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
    // rhs rows indexed for the merge
    std::vector<std::size_t> row_begin(rhs.rows_ + 1, 0);
    for (const Entry& e : rhs.entries_) row_begin[e.row + 1]++;
    for (int r = 0; r < rhs.rows_; ++r) row_begin[r + 1] += row_begin[r];

    Builder out(rows_, rhs.cols_);
    for (const Entry& e : entries_) {
        for (std::size_t idx = row_begin[e.col]; idx < row_begin[e.col + 1]; ++idx) {
            const Entry& f = rhs.entries_[idx];
            out.add(e.row, f.col, e.value * f.value);
        }
    }
    return out.build();
}

std::vector<Rat> SparseMatrixQ::column(int c) const {
    if (c < 0 || c >= cols_) throw InvalidInput("column index out of range");
    std::vector<Rat> v(rows_, Rat(0));
    for (const Entry& e : entries_)
        if (e.col == c) v[e.row] = e.value;
    return v;
}

SparseMatrixQ SparseMatrixQ::select_columns(const std::vector<int>& which) const {
    std::vector<int> pos(cols_, -1);
    for (std::size_t i = 0; i < which.size(); ++i) {
        if (which[i] < 0 || which[i] >= cols_) throw InvalidInput("select_columns: out of range");
        pos[which[i]] = static_cast<int>(i);
    }
    std::vector<Entry> es;
    for (const Entry& e : entries_)
        if (pos[e.col] >= 0) es.push_back({e.row, pos[e.col], e.value});
    return SparseMatrixQ(rows_, static_cast<int>(which.size()), std::move(es));
}

bool SparseMatrixQ::operator==(const SparseMatrixQ& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || entries_.size() != rhs.entries_.size())
        return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const Entry& a = entries_[i];
        const Entry& b = rhs.entries_[i];
        if (a.row != b.row || a.col != b.col || a.value != b.value) return false;
    }
    return true;
}

void SparseMatrixQ::Builder::add(int row, int col, Rat value) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw InvalidInput("Builder: entry out of range");
    acc_.push_back({row, col, std::move(value)});
}

void SparseMatrixQ::Builder::add_block(int row_off, int col_off, const SparseMatrixQ& block,
                                       const Rat& factor) {
    for (const Entry& e : block.entries())
        add(row_off + e.row, col_off + e.col, e.value * factor);
}

SparseMatrixQ SparseMatrixQ::Builder::build() {
    return SparseMatrixQ(rows_, cols_, std::move(acc_));
}

// ---------------------------------------------------------------------------
// rank: fraction-free elimination on integer-cleared rows
// ---------------------------------------------------------------------------

namespace {

using SRow = std::vector<std::pair<int, Int>>;  // (col, value), col-sorted

// Clears denominators row by row; scaling a row never changes the rank.
std::vector<SRow> integer_rows(const SparseMatrixQ& m) {
    std::vector<SRow> rows(m.rows());
    std::vector<Int> lcm(m.rows(), Int(1));
    for (const auto& e : m.entries())
        mpz_lcm(lcm[e.row].get_mpz_t(), lcm[e.row].get_mpz_t(),
                e.value.get_den().get_mpz_t());
    for (const auto& e : m.entries()) {
        Int v = e.value.get_num() * (lcm[e.row] / e.value.get_den());
        rows[e.row].emplace_back(e.col, std::move(v));
    }
    return rows;
}

void gcd_reduce(SRow& row) {
    Int g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& [c, v] : row) v /= g;
}

// row := piv_val * row - row_val * piv_row, sparse merge on sorted columns.
SRow eliminate(const SRow& row, const Int& row_val, const SRow& piv, const Int& piv_val) {
    SRow out;
    out.reserve(row.size() + piv.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
            out.emplace_back(row[i].first, piv_val * row[i].second);
            ++i;
        } else if (i == row.size() || piv[j].first < row[i].first) {
            out.emplace_back(piv[j].first, -row_val * piv[j].second);
            ++j;
        } else {
            Int v = piv_val * row[i].second - row_val * piv[j].second;
            if (v != 0) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    gcd_reduce(out);
    return out;
}

long sparse_rank(std::vector<SRow> rows) {
    long rank = 0;
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].empty()) active.push_back(i);

    while (!active.empty()) {
        // Pivot column: fewest occupants, then smallest index.
        std::map<int, int> occupancy;
        for (std::size_t r : active)
            for (const auto& [c, v] : rows[r]) occupancy[c]++;
        int piv_col = -1, best = -1;
        for (const auto& [c, n] : occupancy) {
            if (best < 0 || n < best) {
                best = n;
                piv_col = c;
            }
        }
        // Pivot row: smallest |value| in the pivot column, then first index.
        std::size_t piv_at = active.size();
        const Int* piv_val = nullptr;
        for (std::size_t k = 0; k < active.size(); ++k) {
            const SRow& row = rows[active[k]];
            auto it = std::lower_bound(row.begin(), row.end(), piv_col,
                                       [](const auto& p, int c) { return p.first < c; });
            if (it == row.end() || it->first != piv_col) continue;
            if (piv_val == nullptr ||
                mpz_cmpabs(it->second.get_mpz_t(), piv_val->get_mpz_t()) < 0) {
                piv_at = k;
                piv_val = &it->second;
            }
        }
        SRow piv_row = std::move(rows[active[piv_at]]);
        auto pit = std::lower_bound(piv_row.begin(), piv_row.end(), piv_col,
                                    [](const auto& p, int c) { return p.first < c; });
        Int pv = pit->second;
        active.erase(active.begin() + static_cast<long>(piv_at));
        ++rank;

        std::vector<std::size_t> next;
        next.reserve(active.size());
        for (std::size_t r : active) {
            auto it = std::lower_bound(rows[r].begin(), rows[r].end(), piv_col,
                                       [](const auto& p, int c) { return p.first < c; });
            if (it != rows[r].end() && it->first == piv_col)
                rows[r] = eliminate(rows[r], it->second, piv_row, pv);
            if (!rows[r].empty()) next.push_back(r);
        }
        active = std::move(next);
    }
    return rank;
}

// Textbook one-step Bareiss (every trailing entry updated, divisions exact).
long dense_rank(const std::vector<SRow>& sparse_rows, int rows, int cols) {
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols, Int(0)));
    for (int r = 0; r < rows; ++r)
        for (const auto& [c, v] : sparse_rows[r]) a[r][c] = v;

    Int prev(1);
    long rank = 0;
    int pr = 0;
    for (int pc = 0; pc < cols && pr < rows; ++pc) {
        int choice = -1;
        for (int r = pr; r < rows; ++r) {
            if (a[r][pc] == 0) continue;
            if (choice < 0 ||
                mpz_cmpabs(a[r][pc].get_mpz_t(), a[choice][pc].get_mpz_t()) < 0)
                choice = r;
        }
        if (choice < 0) continue;
        std::swap(a[pr], a[choice]);
        const Int piv = a[pr][pc];
        for (int r = pr + 1; r < rows; ++r) {
            for (int c = pc + 1; c < cols; ++c) {
                Int t = piv * a[r][c] - a[r][pc] * a[pr][c];
                mpz_divexact(a[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[r][pc] = 0;
        }
        prev = piv;
        ++rank;
        ++pr;
    }
    return rank;
}

}  // namespace

long rank(const SparseMatrixQ& m, double dense_threshold) {
    if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) return 0;
    std::vector<SRow> rows = integer_rows(m);
    if (m.density() > dense_threshold) return dense_rank(rows, m.rows(), m.cols());
    return sparse_rank(std::move(rows));
}

long kernel_dim(const SparseMatrixQ& m) { return m.cols() - rank(m); }

bool compose_check(const SparseMatrixQ& a, const SparseMatrixQ& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("compose_check: inner dimensions differ");
    return (a * b).is_zero();
}

long cohomology_dims(const SparseMatrixQ& d_in, const SparseMatrixQ& d_out) {
    if (d_in.rows() != d_out.cols())
        throw DimensionMismatch("cohomology_dims: consecutive differentials do not share a space");
    if (!compose_check(d_out, d_in))
        throw MalformedComplex("cohomology_dims: d_out . d_in != 0");
    return d_out.cols() - rank(d_out) - rank(d_in);
}

long quotient_dim(const SparseMatrixQ& total, const SparseMatrixQ& sub) {
    if (total.rows() != sub.rows())
        throw DimensionMismatch("quotient_dim: ambient row counts differ");
    long rt = rank(total);
    if (rank(SparseMatrixQ::hstack(total, sub)) != rt)
        throw ContainmentError("quotient_dim: sub is not contained in total");
    return rt - rank(sub);
}

// ---------------------------------------------------------------------------
// exact rref over Q: kernel bases and linear solves
// ---------------------------------------------------------------------------

namespace {

struct Rref {
    std::vector<std::vector<Rat>> m;  // reduced rows
    std::vector<int> pivot_cols;      // pivot column of row i
};

Rref rref(const SparseMatrixQ& a) {
    std::vector<std::vector<Rat>> m(a.rows(), std::vector<Rat>(a.cols(), Rat(0)));
    for (const auto& e : a.entries()) m[e.row][e.col] = e.value;

    Rref out;
    int pr = 0;
    for (int pc = 0; pc < a.cols() && pr < a.rows(); ++pc) {
        int choice = -1;
        for (int r = pr; r < a.rows(); ++r)
            if (m[r][pc] != 0) {
                choice = r;
                break;
            }
        if (choice < 0) continue;
        std::swap(m[pr], m[choice]);
        Rat inv = 1 / m[pr][pc];
        for (int c = pc; c < a.cols(); ++c) m[pr][c] *= inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == pr || m[r][pc] == 0) continue;
            Rat f = m[r][pc];
            for (int c = pc; c < a.cols(); ++c) m[r][c] -= f * m[pr][c];
        }
        out.pivot_cols.push_back(pc);
        ++pr;
    }
    out.m = std::move(m);
    return out;
}

}  // namespace

SparseMatrixQ kernel_basis(const SparseMatrixQ& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : r.pivot_cols) is_pivot[c] = true;

    std::vector<SparseMatrixQ::Entry> es;
    int out_col = 0;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        es.push_back({f, out_col, Rat(1)});
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            if (r.m[i][f] != 0) es.push_back({r.pivot_cols[i], out_col, -r.m[i][f]});
        ++out_col;
    }
    return SparseMatrixQ(m.cols(), out_col, std::move(es));
}

std::optional<SparseMatrixQ> solve_matrix(const SparseMatrixQ& a, const SparseMatrixQ& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("solve_matrix: row counts differ");
    Rref r = rref(SparseMatrixQ::hstack(a, b));
    // Rows whose pivot falls in the augmented part witness inconsistency.
    for (int pc : r.pivot_cols)
        if (pc >= a.cols()) return std::nullopt;

    std::vector<SparseMatrixQ::Entry> es;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            if (r.m[i][a.cols() + j] != 0)
                es.push_back({r.pivot_cols[i], j, r.m[i][a.cols() + j]});
    return SparseMatrixQ(a.cols(), b.cols(), std::move(es));
}

std::optional<std::vector<Rat>> solve(const SparseMatrixQ& a, const std::vector<Rat>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw DimensionMismatch("solve: right-hand side length differs");
    std::vector<SparseMatrixQ::Entry> es;
    for (int i = 0; i < a.rows(); ++i)
        if (b[i] != 0) es.push_back({i, 0, b[i]});
    auto x = solve_matrix(a, SparseMatrixQ(a.rows(), 1, std::move(es)));
    if (!x) return std::nullopt;
    return x->column(0);
}

std::vector<int> independent_columns(const SparseMatrixQ& m) {
    return rref(m).pivot_cols;
}

}  // namespace bggcoh::exactla
