#include "bggcoh/homology.hpp"

#include <algorithm>
#include <sstream>

namespace bggcoh::homology {

using exactla::compose_check;
using exactla::independent_columns;
using exactla::kernel_basis;
using exactla::rank;
using exactla::solve_matrix;

// ---------------------------------------------------------------------------
// ChainComplex
// ---------------------------------------------------------------------------

ChainComplex::ChainComplex(std::vector<BasisIndexedSpace> spaces,
                           std::vector<SparseMatrixQ> diffs)
    : spaces_(std::move(spaces)), diffs_(std::move(diffs)) {
    if (spaces_.empty()) throw InvalidInput("ChainComplex: no spaces");
    if (diffs_.size() + 1 != spaces_.size())
        throw InvalidInput("ChainComplex: need one differential per consecutive pair");
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
        if (diffs_[i].cols() != spaces_[i].dim() || diffs_[i].rows() != spaces_[i + 1].dim())
            throw DimensionMismatch("ChainComplex: differential shape mismatch at spot " +
                                    std::to_string(i));
        if (i > 0 && !compose_check(diffs_[i], diffs_[i - 1]))
            throw MalformedComplex("ChainComplex: d.d != 0 at spot " + std::to_string(i));
    }
}

int ChainComplex::dim(int n) const {
    if (n < 0 || n >= length()) return 0;
    return spaces_[n].dim();
}

SparseMatrixQ ChainComplex::differential(int n) const {
    if (n >= 0 && n + 1 < length()) return diffs_[n];
    if (n == -1) return SparseMatrixQ::zero(dim(0), 0);
    return SparseMatrixQ::zero(dim(n + 1), dim(n));
}

long ChainComplex::cohomology_dim(int n) const {
    if (n < 0 || n >= length()) return 0;
    return exactla::cohomology_dims(differential(n - 1), differential(n));
}

std::vector<long> ChainComplex::cohomology_dims() const {
    std::vector<long> out(length());
    for (int n = 0; n < length(); ++n) out[n] = cohomology_dim(n);
    return out;
}

std::vector<long> ChainComplex::space_dims() const {
    std::vector<long> out(length());
    for (int n = 0; n < length(); ++n) out[n] = dim(n);
    return out;
}

// ---------------------------------------------------------------------------
// DoubleComplex
// ---------------------------------------------------------------------------

DoubleComplex::DoubleComplex(int ncols, int nrows) : ncols_(ncols), nrows_(nrows) {
    if (ncols < 1 || nrows < 1) throw InvalidInput("DoubleComplex: empty grid");
    spaces_.resize(static_cast<std::size_t>(ncols) * nrows);
    horiz_.resize(spaces_.size());
    vert_.resize(spaces_.size());
    has_space_.resize(spaces_.size(), false);
}

void DoubleComplex::set_space(int t, int i, BasisIndexedSpace s) {
    spaces_[idx(t, i)] = std::move(s);
    has_space_[idx(t, i)] = true;
}

void DoubleComplex::set_horizontal(int t, int i, SparseMatrixQ m) {
    horiz_[idx(t, i)] = std::move(m);
}

void DoubleComplex::set_vertical(int t, int i, SparseMatrixQ m) {
    vert_[idx(t, i)] = std::move(m);
}

void DoubleComplex::validate() {
    for (bool h : has_space_)
        if (!h) throw MalformedComplex("DoubleComplex: grid has unset spaces");
    for (int i = 0; i < nrows_; ++i)
        for (int t = 0; t < ncols_; ++t) {
            SparseMatrixQ& h = horiz_[idx(t, i)];
            if (t + 1 < ncols_) {
                if (h.rows() == 0 && h.cols() == 0 && space(t, i).dim() + space(t + 1, i).dim() > 0)
                    h = SparseMatrixQ::zero(space(t + 1, i).dim(), space(t, i).dim());
                if (h.cols() != space(t, i).dim() || h.rows() != space(t + 1, i).dim())
                    throw DimensionMismatch("DoubleComplex: horizontal map shape at (" +
                                            std::to_string(t) + "," + std::to_string(i) + ")");
            } else {
                h = SparseMatrixQ::zero(0, space(t, i).dim());
            }
            SparseMatrixQ& v = vert_[idx(t, i)];
            if (i + 1 < nrows_) {
                if (v.rows() == 0 && v.cols() == 0 && space(t, i).dim() + space(t, i + 1).dim() > 0)
                    v = SparseMatrixQ::zero(space(t, i + 1).dim(), space(t, i).dim());
                if (v.cols() != space(t, i).dim() || v.rows() != space(t, i + 1).dim())
                    throw DimensionMismatch("DoubleComplex: vertical map shape at (" +
                                            std::to_string(t) + "," + std::to_string(i) + ")");
            } else {
                v = SparseMatrixQ::zero(0, space(t, i).dim());
            }
        }
    // rows and columns are complexes, squares commute
    for (int i = 0; i < nrows_; ++i)
        for (int t = 0; t < ncols_; ++t) {
            if (t + 2 < ncols_ && !compose_check(horizontal(t + 1, i), horizontal(t, i)))
                throw MalformedComplex("DoubleComplex: row " + std::to_string(i) +
                                       " is not a complex");
            if (i + 2 < nrows_ && !compose_check(vertical(t, i + 1), vertical(t, i)))
                throw MalformedComplex("DoubleComplex: column " + std::to_string(t) +
                                       " is not a complex");
            if (t + 1 < ncols_ && i + 1 < nrows_) {
                SparseMatrixQ a = vertical(t + 1, i) * horizontal(t, i);
                SparseMatrixQ b = horizontal(t, i + 1) * vertical(t, i);
                if (!(a == b))
                    throw MalformedComplex("DoubleComplex: square at (" + std::to_string(t) +
                                           "," + std::to_string(i) + ") does not commute");
            }
        }
    validated_ = true;
}

ChainComplex DoubleComplex::row(int i) const {
    std::vector<BasisIndexedSpace> sp;
    std::vector<SparseMatrixQ> df;
    for (int t = 0; t < ncols_; ++t) {
        sp.push_back(space(t, i));
        if (t + 1 < ncols_) df.push_back(horizontal(t, i));
    }
    return ChainComplex(std::move(sp), std::move(df));
}

ChainComplex DoubleComplex::column(int t) const {
    std::vector<BasisIndexedSpace> sp;
    std::vector<SparseMatrixQ> df;
    for (int i = 0; i < nrows_; ++i) {
        sp.push_back(space(t, i));
        if (i + 1 < nrows_) df.push_back(vertical(t, i));
    }
    return ChainComplex(std::move(sp), std::move(df));
}

// ---------------------------------------------------------------------------
// totalization
// ---------------------------------------------------------------------------

namespace {

// Offset of summand (t, i) inside Tot^{t+i}, summands ordered by t.
struct TotLayout {
    std::vector<std::vector<std::pair<int, int>>> summands;  // per degree: (t, i)
    std::vector<std::map<std::pair<int, int>, int>> offset;  // per degree

    TotLayout(const DoubleComplex& dc) {
        int top = dc.ncols() - 1 + dc.nrows() - 1;
        summands.resize(top + 1);
        offset.resize(top + 1);
        for (int n = 0; n <= top; ++n) {
            int off = 0;
            for (int t = 0; t < dc.ncols(); ++t) {
                int i = n - t;
                if (i < 0 || i >= dc.nrows()) continue;
                summands[n].push_back({t, i});
                offset[n][{t, i}] = off;
                off += dc.space(t, i).dim();
            }
        }
    }
};

}  // namespace

ChainComplex total_complex(const DoubleComplex& dc) {
    if (!dc.validated_)
        throw MalformedComplex("total_complex: grid not validated");
    TotLayout lay(dc);
    int top = dc.ncols() - 1 + dc.nrows() - 1;

    std::vector<BasisIndexedSpace> spaces;
    for (int n = 0; n <= top; ++n) {
        std::vector<std::string> labels;
        for (auto [t, i] : lay.summands[n]) {
            std::ostringstream pre;
            pre << 't' << t << 'i' << i << '|';
            for (const std::string& l : dc.space(t, i).labels) labels.push_back(pre.str() + l);
        }
        spaces.emplace_back(std::move(labels));
    }

    std::vector<SparseMatrixQ> diffs;
    for (int n = 0; n < top; ++n) {
        SparseMatrixQ::Builder b(spaces[n + 1].dim(), spaces[n].dim());
        for (auto [t, i] : lay.summands[n]) {
            int src = lay.offset[n].at({t, i});
            if (t + 1 < dc.ncols()) {
                int dst = lay.offset[n + 1].at({t + 1, i});
                b.add_block(dst, src, dc.horizontal(t, i));
            }
            if (i + 1 < dc.nrows()) {
                int dst = lay.offset[n + 1].at({t, i + 1});
                b.add_block(dst, src, dc.vertical(t, i), (t % 2 == 0) ? 1 : -1);
            }
        }
        diffs.push_back(b.build());
    }
    return ChainComplex(std::move(spaces), std::move(diffs));
}

// ---------------------------------------------------------------------------
// pages
// ---------------------------------------------------------------------------

long SpectralPage::dim(int p, int q) const {
    auto it = dims.find({p, q});
    return it == dims.end() ? 0 : it->second;
}

long SpectralPage::total_dim(int n) const {
    long s = 0;
    for (const auto& [pq, d] : dims)
        if (pq.first + pq.second == n) s += d;
    return s;
}

long SpectralPage::euler_characteristic() const {
    long s = 0;
    for (const auto& [pq, d] : dims) s += ((pq.first + pq.second) % 2 == 0) ? d : -d;
    return s;
}

SpectralPage row_E1(const DoubleComplex& dc) {
    SpectralPage page;
    page.r = 1;
    for (int i = 0; i < dc.nrows(); ++i) {
        std::vector<long> h = dc.row(i).cohomology_dims();
        for (int t = 0; t < static_cast<int>(h.size()); ++t)
            if (h[t] != 0) page.dims[{t, i}] = h[t];
    }
    return page;
}

// ---------------------------------------------------------------------------
// FilteredComplex
// ---------------------------------------------------------------------------

FilteredComplex::FilteredComplex(ChainComplex complex,
                                 std::vector<std::vector<SparseMatrixQ>> filt)
    : complex_(std::move(complex)), filt_(std::move(filt)) {
    if (filt_.empty()) throw InvalidInput("FilteredComplex: empty filtration");
    int N = complex_.length();
    for (int p = 0; p < levels(); ++p) {
        if (static_cast<int>(filt_[p].size()) != N)
            throw InvalidInput("FilteredComplex: filtration level " + std::to_string(p) +
                               " does not cover all degrees");
        for (int n = 0; n < N; ++n) {
            const SparseMatrixQ& F = filt_[p][n];
            if (F.rows() != complex_.dim(n))
                throw DimensionMismatch("FilteredComplex: basis shape at level " +
                                        std::to_string(p) + ", degree " + std::to_string(n));
            if (p == 0 && rank(F) != complex_.dim(n))
                throw MalformedComplex("FilteredComplex: F^0 is not exhaustive at degree " +
                                       std::to_string(n));
            if (p > 0) {
                const SparseMatrixQ& G = filt_[p - 1][n];
                if (rank(SparseMatrixQ::hstack(G, F)) != rank(G))
                    throw MalformedComplex("FilteredComplex: F^" + std::to_string(p) +
                                           " not contained in F^" + std::to_string(p - 1) +
                                           " at degree " + std::to_string(n));
            }
            if (n + 1 < N) {
                SparseMatrixQ dF = complex_.differential(n) * F;
                const SparseMatrixQ& Fn1 = filt_[p][n + 1];
                if (rank(SparseMatrixQ::hstack(Fn1, dF)) != rank(Fn1))
                    throw MalformedComplex("FilteredComplex: level " + std::to_string(p) +
                                           " is not a subcomplex at degree " + std::to_string(n));
            }
        }
    }
}

SparseMatrixQ FilteredComplex::filtration(int p, int n) const {
    if (n < 0 || n >= complex_.length()) return SparseMatrixQ::zero(0, 0);
    if (p >= levels()) return SparseMatrixQ::zero(complex_.dim(n), 0);
    if (p <= 0) return SparseMatrixQ::identity(complex_.dim(n));
    return filt_[p][n];
}

FilteredComplex FilteredComplex::column_filtration(const DoubleComplex& dc) {
    ChainComplex tot = total_complex(dc);
    TotLayout lay(dc);
    int N = tot.length();
    std::vector<std::vector<SparseMatrixQ>> filt(dc.ncols());
    for (int p = 0; p < dc.ncols(); ++p) {
        filt[p].reserve(N);
        for (int n = 0; n < N; ++n) {
            std::vector<SparseMatrixQ::Entry> es;
            int outcol = 0;
            for (auto [t, i] : lay.summands[n]) {
                if (t < p) continue;
                int off = lay.offset[n].at({t, i});
                for (int j = 0; j < dc.space(t, i).dim(); ++j)
                    es.push_back({off + j, outcol++, exactla::Rat(1)});
            }
            filt[p].push_back(SparseMatrixQ(tot.dim(n), outcol, std::move(es)));
        }
    }
    return FilteredComplex(std::move(tot), std::move(filt));
}

// ---------------------------------------------------------------------------
// spectral sequence by explicit subquotient bases
// ---------------------------------------------------------------------------

namespace {

// Independent column basis of {x in span(V) : d x in span(W)}.
SparseMatrixQ preimage_intersect(const SparseMatrixQ& V, const SparseMatrixQ& d,
                                 const SparseMatrixQ& W) {
    if (V.cols() == 0) return SparseMatrixQ::zero(V.rows(), 0);
    SparseMatrixQ dV = d * V;
    SparseMatrixQ K = kernel_basis(SparseMatrixQ::hstack(dV, W.scaled(-1)));
    // keep the V-coordinate block of each kernel vector
    std::vector<SparseMatrixQ::Entry> es;
    for (const auto& e : K.entries())
        if (e.row < V.cols()) es.push_back(e);
    SparseMatrixQ C(V.cols(), K.cols(), std::move(es));
    SparseMatrixQ X = V * C;
    return X.select_columns(independent_columns(X));
}

}  // namespace

SpectralRun spectral_sequence(const FilteredComplex& fc) {
    const ChainComplex& C = fc.complex();
    int N = C.length();
    int L = fc.levels();
    int rmax = L + 1;

    // Z_r^{p,n} = {x in F^p C^n : dx in F^{p+r} C^{n+1}}, reduced column bases.
    // fc.filtration treats p <= 0 as full and p >= levels as zero.
    std::map<int, std::map<std::pair<int, int>, SparseMatrixQ>> Z;
    auto zmat = [&](int r, int p, int n) -> const SparseMatrixQ& {
        auto& slot = Z[r];
        auto key = std::make_pair(p, n);
        auto it = slot.find(key);
        if (it != slot.end()) return it->second;
        SparseMatrixQ res =
            (n < 0 || n >= N)
                ? SparseMatrixQ::zero(0, 0)
                : preimage_intersect(fc.filtration(p, n), C.differential(n),
                                     fc.filtration(p + r, n + 1));
        return slot.emplace(key, std::move(res)).first->second;
    };

    auto boundary = [&](int r, int p, int n) -> SparseMatrixQ {
        // span Z_{r-1}^{p+1,n} + d Z_{r-1}^{p-r+1,n-1}
        SparseMatrixQ A = zmat(r - 1, p + 1, n);
        if (n - 1 < 0) return A;
        SparseMatrixQ B = C.differential(n - 1) * zmat(r - 1, p - r + 1, n - 1);
        return SparseMatrixQ::hstack(A, B);
    };

    SpectralRun run;
    run.cohomology = C.cohomology_dims();

    std::vector<std::map<std::pair<int, int>, long>> dim_tables(rmax + 1);
    for (int r = 0; r <= rmax; ++r) {
        SpectralPage page;
        page.r = r;
        for (int p = 0; p < L; ++p)
            for (int n = 0; n < N; ++n) {
                int q = n - p;
                long dz = zmat(r, p, n).cols();
                long db = rank(boundary(r, p, n));
                long dim = dz - db;
                if (dim != 0) page.dims[{p, q}] = dim;
            }
        // ranks of the page differentials d_r : (p,q) -> (p+r, q-r+1)
        if (r >= 1) {
            for (int p = 0; p < L; ++p)
                for (int n = 0; n < N; ++n) {
                    int q = n - p;
                    if (page.dim(p, q) == 0) continue;
                    SparseMatrixQ dz = C.differential(n) * zmat(r, p, n);
                    SparseMatrixQ S = boundary(r, p + r, n + 1);
                    long rk = rank(SparseMatrixQ::hstack(dz, S)) - rank(S);
                    if (rk != 0) page.diff_ranks[{p, q}] = rk;
                }
        }
        run.pages.push_back(std::move(page));
    }

    // page recursion: E_{r+1} = H(E_r, d_r)
    for (int r = 1; r < rmax; ++r) {
        const SpectralPage& cur = run.pages[r];
        const SpectralPage& next = run.pages[r + 1];
        std::map<std::pair<int, int>, long> expect = cur.dims;
        for (const auto& [pq, rk] : cur.diff_ranks) {
            expect[pq] -= rk;
            auto tgt = std::make_pair(pq.first + r, pq.second - r + 1);
            expect[tgt] -= rk;
        }
        for (auto it = expect.begin(); it != expect.end();) {
            if (it->second == 0)
                it = expect.erase(it);
            else
                ++it;
        }
        if (expect != next.dims)
            throw MathAssertionError("spectral_sequence: page recursion failed at r=" +
                                     std::to_string(r));
    }

    const SpectralPage& einf = run.pages[rmax];
    run.einf_totals.assign(N, 0);
    for (const auto& [pq, d] : einf.dims) {
        int n = pq.first + pq.second;
        if (n >= 0 && n < N) run.einf_totals[n] += d;
    }
    for (int n = 0; n < N; ++n)
        if (run.einf_totals[n] != run.cohomology[n])
            throw MathAssertionError(
                "spectral_sequence: E_infinity totals differ from cohomology at degree " +
                std::to_string(n));

    run.degeneration_page = rmax;
    for (int r = 0; r <= rmax; ++r)
        if (run.pages[r].same_dims(einf)) {
            run.degeneration_page = r;
            break;
        }
    return run;
}

// ---------------------------------------------------------------------------
// subquotient complexes
// ---------------------------------------------------------------------------

ChainComplex subquotient_complex(const std::vector<SparseMatrixQ>& Z,
                                 const std::vector<SparseMatrixQ>& U,
                                 const std::vector<SparseMatrixQ>& D,
                                 const std::string& label_prefix) {
    if (Z.size() != U.size() || (Z.empty() ? 0 : Z.size() - 1) != D.size())
        throw InvalidInput("subquotient_complex: length mismatch");
    int P = static_cast<int>(Z.size());

    std::vector<SparseMatrixQ> H(P);
    std::vector<BasisIndexedSpace> spaces;
    for (int p = 0; p < P; ++p) {
        if (Z[p].rows() != U[p].rows())
            throw DimensionMismatch("subquotient_complex: ambient mismatch at p=" +
                                    std::to_string(p));
        if (rank(SparseMatrixQ::hstack(Z[p], U[p])) != rank(Z[p]))
            throw ContainmentError("subquotient_complex: U not contained in Z at p=" +
                                   std::to_string(p));
        SparseMatrixQ both = SparseMatrixQ::hstack(U[p], Z[p]);
        std::vector<int> chosen;
        for (int c : independent_columns(both))
            if (c >= U[p].cols()) chosen.push_back(c - U[p].cols());
        H[p] = Z[p].select_columns(chosen);
        std::vector<std::string> labels;
        for (int j = 0; j < H[p].cols(); ++j)
            labels.push_back(label_prefix + "p" + std::to_string(p) + ":q" + std::to_string(j));
        spaces.emplace_back(std::move(labels));
    }

    std::vector<SparseMatrixQ> diffs;
    for (int p = 0; p + 1 < P; ++p) {
        SparseMatrixQ img = D[p] * H[p];
        auto X = solve_matrix(SparseMatrixQ::hstack(U[p + 1], H[p + 1]), img);
        if (!X)
            throw MathAssertionError("subquotient_complex: induced map leaves the subquotient at p=" +
                                     std::to_string(p));
        std::vector<SparseMatrixQ::Entry> es;
        for (const auto& e : X->entries())
            if (e.row >= U[p + 1].cols())
                es.push_back({e.row - U[p + 1].cols(), e.col, e.value});
        diffs.emplace_back(H[p + 1].cols(), H[p].cols(), std::move(es));
    }
    return ChainComplex(std::move(spaces), std::move(diffs));
}

}  // namespace bggcoh::homology
