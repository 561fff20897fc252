#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bggcoh/exactla.hpp"

namespace bggcoh::homology {

using exactla::BasisIndexedSpace;
using exactla::SparseMatrixQ;

/// Bounded cochain complex in degrees 0..n with exact sparse differentials
/// d_i : C^i -> C^{i+1}.  Construction verifies d.d = 0.
class ChainComplex {
public:
    ChainComplex() = default;
    ChainComplex(std::vector<BasisIndexedSpace> spaces, std::vector<SparseMatrixQ> diffs);

    int length() const { return static_cast<int>(spaces_.size()); }  // number of spots
    int dim(int n) const;
    const BasisIndexedSpace& space(int n) const { return spaces_[n]; }
    /// d_n : C^n -> C^{n+1}; zero map at the boundary.
    SparseMatrixQ differential(int n) const;

    long cohomology_dim(int n) const;
    std::vector<long> cohomology_dims() const;
    std::vector<long> space_dims() const;

private:
    std::vector<BasisIndexedSpace> spaces_;
    std::vector<SparseMatrixQ> diffs_;  // diffs_[i] : C^i -> C^{i+1}, size length-1
};

/// Grid of spaces C^{t,i} (t = column, i = row) with horizontal maps
/// h : (t,i) -> (t+1,i) and vertical maps v : (t,i) -> (t,i+1).  Rows and
/// columns must be complexes and squares must commute; the totalization
/// inserts the (-1)^t sign on vertical maps.
class DoubleComplex {
public:
    DoubleComplex(int ncols, int nrows);

    void set_space(int t, int i, BasisIndexedSpace s);
    void set_horizontal(int t, int i, SparseMatrixQ m);
    void set_vertical(int t, int i, SparseMatrixQ m);
    /// Fills unset maps with zero matrices and checks the grid laws.
    void validate();

    int ncols() const { return ncols_; }
    int nrows() const { return nrows_; }
    const BasisIndexedSpace& space(int t, int i) const { return spaces_[idx(t, i)]; }
    const SparseMatrixQ& horizontal(int t, int i) const { return horiz_[idx(t, i)]; }
    const SparseMatrixQ& vertical(int t, int i) const { return vert_[idx(t, i)]; }

    /// Row i as a complex along t.
    ChainComplex row(int i) const;
    /// Column t as a complex along i.
    ChainComplex column(int t) const;

private:
    int ncols_, nrows_;
    std::vector<BasisIndexedSpace> spaces_;
    std::vector<SparseMatrixQ> horiz_, vert_;
    std::vector<bool> has_space_;
    bool validated_ = false;
    int idx(int t, int i) const { return i * ncols_ + t; }
    friend ChainComplex total_complex(const DoubleComplex&);
    friend class FilteredComplex;
};

/// Direct-sum totalization; vertical maps carry (-1)^t.
ChainComplex total_complex(const DoubleComplex& dc);

/// One page of a spectral sequence: dimensions by (p,q) and the ranks of the
/// page differentials where computed.
struct SpectralPage {
    int r = 0;
    std::map<std::pair<int, int>, long> dims;
    std::map<std::pair<int, int>, long> diff_ranks;

    long dim(int p, int q) const;
    long total_dim(int n) const;  // sum over p+q = n
    long euler_characteristic() const;
    bool same_dims(const SpectralPage& rhs) const { return dims == rhs.dims; }
};

/// The page obtained by taking cohomology of each row of the grid: entry
/// (p,q) = H^p of row q.  This is the E_1 term of the filtration by rows,
/// laid out in the grid's own coordinates.
SpectralPage row_E1(const DoubleComplex& dc);

/// Complex with a decreasing filtration F^0 >= F^1 >= ... by subcomplexes;
/// F^p C^n is given by a column-span basis matrix.  Construction verifies
/// exhaustiveness, nesting and d-stability.
class FilteredComplex {
public:
    FilteredComplex(ChainComplex complex, std::vector<std::vector<SparseMatrixQ>> filt);

    const ChainComplex& complex() const { return complex_; }
    int levels() const { return static_cast<int>(filt_.size()); }  // filtration indices 0..levels-1
    /// Basis of F^p C^n; identity for p <= 0, empty for p >= levels.
    SparseMatrixQ filtration(int p, int n) const;

    /// Stupid filtration of a double complex by columns t >= p.
    static FilteredComplex column_filtration(const DoubleComplex& dc);

private:
    ChainComplex complex_;
    std::vector<std::vector<SparseMatrixQ>> filt_;  // filt_[p][n]
};

struct SpectralRun {
    std::vector<SpectralPage> pages;  // pages[r] = E_r
    int degeneration_page = 0;        // first r with E_r = E_infinity
    std::vector<long> einf_totals;    // per total degree
    std::vector<long> cohomology;     // H^n of the underlying complex
};

/// Pages E_0, E_1, ... through E_{levels+1} = E_infinity, by explicit
/// subquotient bases.  Verifies the page recursion and that E_infinity totals
/// match the cohomology of the underlying complex.
SpectralRun spectral_sequence(const FilteredComplex& fc);

/// Complex of subquotients span(Z_p)/span(U_p) with maps induced by
/// ambient matrices D_p : ambient_p -> ambient_{p+1}.  Requires
/// span(U_p) <= span(Z_p), D_p span(Z_p) <= span(Z_{p+1}) and
/// D_p span(U_p) <= span(U_{p+1}); differentials are expressed in a chosen
/// complement basis, so the result is an honest ChainComplex.
ChainComplex subquotient_complex(const std::vector<SparseMatrixQ>& Z,
                                 const std::vector<SparseMatrixQ>& U,
                                 const std::vector<SparseMatrixQ>& D,
                                 const std::string& label_prefix);

}  // namespace bggcoh::homology
