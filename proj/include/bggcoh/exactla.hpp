#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "bggcoh/errors.hpp"

namespace bggcoh::exactla {

using Int = mpz_class;
using Rat = mpq_class;

/// Finite-dimensional space with an ordered basis of opaque labels.
struct BasisIndexedSpace {
    std::vector<std::string> labels;

    BasisIndexedSpace() = default;
    explicit BasisIndexedSpace(std::vector<std::string> l);

    int dim() const { return static_cast<int>(labels.size()); }
};

/// Sparse matrix over Q.  Entries are kept row-major sorted with no
/// duplicates and no explicit zeros; `rows x cols` may be 0 on either side.
class SparseMatrixQ {
public:
    struct Entry {
        int row;
        int col;
        Rat value;
    };

    SparseMatrixQ() : rows_(0), cols_(0) {}
    SparseMatrixQ(int rows, int cols, std::vector<Entry> entries = {});

    static SparseMatrixQ identity(int n);
    static SparseMatrixQ zero(int rows, int cols) { return SparseMatrixQ(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }
    double density() const;

    SparseMatrixQ transpose() const;
    SparseMatrixQ scaled(const Rat& c) const;

    /// Columns of `b` appended after the columns of `a` (same row count).
    static SparseMatrixQ hstack(const SparseMatrixQ& a, const SparseMatrixQ& b);
    /// Rows of `b` appended below the rows of `a` (same column count).
    static SparseMatrixQ vstack(const SparseMatrixQ& a, const SparseMatrixQ& b);

    SparseMatrixQ operator*(const SparseMatrixQ& rhs) const;

    /// Dense column extraction.
    std::vector<Rat> column(int c) const;
    /// Keep only the listed columns, in the given order.
    SparseMatrixQ select_columns(const std::vector<int>& which) const;

    bool operator==(const SparseMatrixQ& rhs) const;

    /// Accumulates duplicate coordinates and drops zeros; use when assembling
    /// block matrices.
    class Builder {
    public:
        Builder(int rows, int cols) : rows_(rows), cols_(cols) {}
        void add(int row, int col, Rat value);
        /// Adds factor * block at the given offset.
        void add_block(int row_off, int col_off, const SparseMatrixQ& block, const Rat& factor = 1);
        SparseMatrixQ build();

    private:
        int rows_, cols_;
        std::vector<Entry> acc_;
    };

private:
    int rows_, cols_;
    std::vector<Entry> entries_;

    void normalize();
};

/// Density above which elimination switches to the dense code path.
inline constexpr double kDenseThreshold = 0.15;

/// Exact rank over Q.  Fraction-free elimination on integer-cleared rows;
/// matrices denser than `dense_threshold` take the dense one-step Bareiss
/// path, sparser ones a gcd-normalized integer elimination.
long rank(const SparseMatrixQ& m, double dense_threshold = kDenseThreshold);

long kernel_dim(const SparseMatrixQ& m);

/// Basis of the right null space, columns in reduced echelon normal form
/// (one basis vector per free column, deterministic order).
SparseMatrixQ kernel_basis(const SparseMatrixQ& m);

/// True iff a * b == 0.  Throws DimensionMismatch on incompatible shapes.
bool compose_check(const SparseMatrixQ& a, const SparseMatrixQ& b);

/// dim ker(d_out) - dim im(d_in) for consecutive differentials
/// d_in : C' -> C and d_out : C -> C''.  Verifies d_out . d_in = 0.
long cohomology_dims(const SparseMatrixQ& d_in, const SparseMatrixQ& d_out);

/// Dimension of span(total)/span(sub); columns span the spaces.  Throws
/// ContainmentError when sub is not inside total.
long quotient_dim(const SparseMatrixQ& total, const SparseMatrixQ& sub);

/// Solves A x = b exactly; nullopt when inconsistent.
std::optional<std::vector<Rat>> solve(const SparseMatrixQ& a, const std::vector<Rat>& b);

/// Column-wise solve A X = B; nullopt when any column is inconsistent.
std::optional<SparseMatrixQ> solve_matrix(const SparseMatrixQ& a, const SparseMatrixQ& b);

/// Indices of a maximal independent subset of columns, scanned left to right.
std::vector<int> independent_columns(const SparseMatrixQ& m);

}  // namespace bggcoh::exactla
