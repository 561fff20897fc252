#include "bggcoh/cech.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>

#include "bggcoh/parallel.hpp"

namespace bggcoh::cech {

using exactla::BasisIndexedSpace;
using exactla::kernel_basis;
using exactla::rank;
using exactla::Rat;
using exactla::solve_matrix;
using homology::ChainComplex;
using homology::DoubleComplex;

// ---------------------------------------------------------------------------
// opens and symbols
// ---------------------------------------------------------------------------

OpenSet OpenSet::join(const OpenSet& a, const OpenSet& b) {
    std::vector<int> out;
    std::set_union(a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end(),
                   std::back_inserter(out));
    return OpenSet{std::move(out)};
}

bool OpenSet::contains(int c) const {
    return std::binary_search(coords.begin(), coords.end(), c);
}

std::string OpenSet::str() const {
    std::ostringstream os;
    os << 'D';
    for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "." : "") << coords[i];
    return os.str();
}

std::string FormSymbol::str() const {
    std::ostringstream os;
    os << "T(";
    for (std::size_t i = 0; i < exponent.size(); ++i) os << (i ? "," : "") << exponent[i];
    os << ')';
    if (!form_indices.empty()) {
        os << "dT";
        for (std::size_t i = 0; i < form_indices.size(); ++i)
            os << (i ? "." : "") << form_indices[i];
    }
    return os.str();
}

int LaurentFormSlice::find(const std::vector<int>& form_indices) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].form_indices == form_indices) return static_cast<int>(i);
    return -1;
}

namespace {

void check_open(int d, const OpenSet& open) {
    if (open.coords.empty()) throw InvalidInput("open set must be nonempty");
    if (!std::is_sorted(open.coords.begin(), open.coords.end()) ||
        std::adjacent_find(open.coords.begin(), open.coords.end()) != open.coords.end())
        throw InvalidInput("open set coordinates must be sorted and distinct");
    if (open.coords.front() < 0 || open.coords.back() > d)
        throw InvalidInput("open set coordinate out of range");
}

void check_multidegree(int d, const Multidegree& m) {
    if (static_cast<int>(m.size()) != d + 1)
        throw InvalidInput("multidegree must have d+1 coordinates");
    for (int v : m)
        if (v < -kMaxWindow || v > kMaxWindow)
            throw WindowExceeded("multidegree coordinate exceeds the supported window");
}

int msum(const Multidegree& m) { return std::accumulate(m.begin(), m.end(), 0); }

// all strictly increasing index tuples of the given size from 0..n-1
std::vector<std::vector<int>> subsets_of_size(int n, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(size);
    std::iota(cur.begin(), cur.end(), 0);
    if (size == 0) return {{}};
    if (size > n) return out;
    while (true) {
        out.push_back(cur);
        int k = size - 1;
        while (k >= 0 && cur[k] == n - size + k) --k;
        if (k < 0) break;
        ++cur[k];
        for (int l = k + 1; l < size; ++l) cur[l] = cur[l - 1] + 1;
    }
    return out;
}

}  // namespace

LaurentFormSlice ambient_slice(int d, const OpenSet& open, int p, const Multidegree& m) {
    check_open(d, open);
    check_multidegree(d, m);
    if (p < 0 || p > d + 1) throw InvalidInput("ambient_slice: form degree out of range");

    LaurentFormSlice slice;
    slice.d = d;
    slice.p = p;
    slice.twist = msum(m);
    slice.open = open;
    slice.m = m;
    for (const auto& I : subsets_of_size(d + 1, p)) {
        std::vector<int> a = m;
        for (int i : I) a[i] -= 1;
        bool ok = true;
        for (int c = 0; c <= d && ok; ++c)
            if (!open.contains(c) && a[c] < 0) ok = false;
        if (ok) slice.basis.push_back({std::move(a), I});
    }
    return slice;
}

SparseMatrixQ contraction_matrix(const LaurentFormSlice& src) {
    if (src.p == 0) return SparseMatrixQ::zero(0, src.dim());
    LaurentFormSlice dst = ambient_slice(src.d, src.open, src.p - 1, src.m);
    SparseMatrixQ::Builder b(dst.dim(), src.dim());
    for (int col = 0; col < src.dim(); ++col) {
        const FormSymbol& s = src.basis[col];
        for (std::size_t t = 0; t < s.form_indices.size(); ++t) {
            std::vector<int> J = s.form_indices;
            J.erase(J.begin() + static_cast<long>(t));
            int row = dst.find(J);
            if (row < 0)
                throw MathAssertionError("contraction target symbol missing from ambient slice");
            b.add(row, col, Rat(t % 2 == 0 ? 1 : -1));
        }
    }
    return b.build();
}

SparseMatrixQ ambient_de_rham_matrix(const LaurentFormSlice& src) {
    if (src.p > src.d) return SparseMatrixQ::zero(0, src.dim());
    LaurentFormSlice dst = ambient_slice(src.d, src.open, src.p + 1, src.m);
    SparseMatrixQ::Builder b(dst.dim(), src.dim());
    for (int col = 0; col < src.dim(); ++col) {
        const FormSymbol& s = src.basis[col];
        for (int i = 0; i <= src.d; ++i) {
            if (s.exponent[i] == 0) continue;
            if (std::binary_search(s.form_indices.begin(), s.form_indices.end(), i)) continue;
            std::vector<int> J = s.form_indices;
            auto at = std::lower_bound(J.begin(), J.end(), i);
            int moved = static_cast<int>(at - J.begin());
            J.insert(at, i);
            int row = dst.find(J);
            if (row < 0)
                throw MathAssertionError("exterior derivative target symbol missing");
            b.add(row, col, Rat(s.exponent[i]) * (moved % 2 == 0 ? 1 : -1));
        }
    }
    return b.build();
}

EulerReducedSlice reduced_slice(int d, const OpenSet& open, int p, const Multidegree& m) {
    EulerReducedSlice out;
    out.ambient = ambient_slice(d, open, p, m);
    std::vector<int> pivots;
    if (p == 0) {
        out.kernel = SparseMatrixQ::identity(out.ambient.dim());
    } else {
        SparseMatrixQ contraction = contraction_matrix(out.ambient);
        out.kernel = kernel_basis(contraction);
        pivots = exactla::independent_columns(contraction);
    }
    // label each basis vector by its defining (free-column) symbol
    std::vector<bool> is_pivot(out.ambient.dim(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::string> labels;
    for (int f = 0; f < out.ambient.dim(); ++f)
        if (!is_pivot[f]) labels.push_back(out.ambient.open.str() + "|" + out.ambient.basis[f].str());
    if (static_cast<int>(labels.size()) != out.kernel.cols())
        throw MathAssertionError("reduced_slice: kernel basis / free symbol count mismatch");
    out.space = BasisIndexedSpace(std::move(labels));
    return out;
}

SparseMatrixQ de_rham_map(const EulerReducedSlice& src, const EulerReducedSlice& dst) {
    if (!(src.ambient.open == dst.ambient.open) || src.ambient.m != dst.ambient.m ||
        dst.ambient.p != src.ambient.p + 1)
        throw InvalidInput("de_rham_map: slices are not consecutive on the same open");
    if (src.ambient.twist != 0)
        throw InvalidInput("de_rham_map: exterior derivative preserves the Euler kernel only at twist 0");
    SparseMatrixQ img = ambient_de_rham_matrix(src.ambient) * src.kernel;
    auto x = solve_matrix(dst.kernel, img);
    if (!x)
        throw MathAssertionError("de_rham_map: image left the Euler-reduced slice");
    return *x;
}

SparseMatrixQ restriction_map(const EulerReducedSlice& src, const EulerReducedSlice& dst) {
    if (src.ambient.m != dst.ambient.m || src.ambient.p != dst.ambient.p)
        throw InvalidInput("restriction_map: slices disagree in degree or multidegree");
    for (int c : src.ambient.open.coords)
        if (!dst.ambient.open.contains(c))
            throw InvalidInput("restriction_map: target open is not smaller");
    // ambient inclusion: same symbol, possibly different position
    SparseMatrixQ::Builder inc(dst.ambient.dim(), src.ambient.dim());
    for (int col = 0; col < src.ambient.dim(); ++col) {
        int row = dst.ambient.find(src.ambient.basis[col].form_indices);
        if (row < 0)
            throw MathAssertionError("restriction_map: symbol missing after localization");
        inc.add(row, col, Rat(1));
    }
    auto x = solve_matrix(dst.kernel, inc.build() * src.kernel);
    if (!x)
        throw MathAssertionError("restriction_map: restricted section left the reduced slice");
    return *x;
}

// ---------------------------------------------------------------------------
// covers and Cech complexes
// ---------------------------------------------------------------------------

Cover Cover::full(int d) {
    if (d < 1) throw InvalidInput("Cover::full: d must be at least 1");
    Cover c;
    c.d = d;
    for (int i = 0; i <= d; ++i) c.opens.push_back(OpenSet::single(i));
    return c;
}

Cover Cover::complement_cover(int d, int j) {
    if (d < 1) throw InvalidInput("Cover::complement_cover: d must be at least 1");
    if (j < 0 || j > d - 1) throw InvalidInput("Cover::complement_cover: need 0 <= j <= d-1");
    Cover c;
    c.d = d;
    for (int i = j + 1; i <= d; ++i) c.opens.push_back(OpenSet::single(i));
    return c;
}

std::string Cover::str() const {
    std::ostringstream os;
    os << '{';
    for (int i = 0; i < size(); ++i) os << (i ? "," : "") << opens[i].str();
    os << '}';
    return os.str();
}

namespace {

std::string tuple_str(const std::vector<int>& T) {
    std::ostringstream os;
    os << 'c';
    for (std::size_t i = 0; i < T.size(); ++i) os << (i ? "." : "") << T[i];
    return os.str();
}

struct LevelData {
    std::vector<std::vector<int>> tuples;
    std::vector<EulerReducedSlice> slices;
    std::vector<int> offsets;
    int dim = 0;

    int tuple_index(const std::vector<int>& T) const {
        auto it = std::lower_bound(tuples.begin(), tuples.end(), T);
        if (it == tuples.end() || *it != T) return -1;
        return static_cast<int>(it - tuples.begin());
    }
};

struct CechBundle {
    Cover cover;
    int p = 0;
    Multidegree m;
    std::vector<LevelData> levels;
    std::vector<BasisIndexedSpace> spaces;
    std::vector<SparseMatrixQ> diffs;

    ChainComplex complex() const { return ChainComplex(spaces, diffs); }
    /// Differential out of level t (zero at the top).
    SparseMatrixQ diff(int t) const {
        if (t >= 0 && t + 1 < static_cast<int>(spaces.size())) return diffs[t];
        if (t == -1) return SparseMatrixQ::zero(spaces.empty() ? 0 : spaces[0].dim(), 0);
        return SparseMatrixQ::zero(0, t < static_cast<int>(spaces.size()) ? spaces[t].dim() : 0);
    }
};

OpenSet tuple_open(const Cover& cover, const std::vector<int>& T) {
    OpenSet s = cover.opens[T[0]];
    for (std::size_t i = 1; i < T.size(); ++i) s = OpenSet::join(s, cover.opens[T[i]]);
    return s;
}

CechBundle build_cech(const Cover& cover, int p, const Multidegree& m) {
    if (cover.size() == 0) throw InvalidInput("cech: empty cover");
    for (const OpenSet& s : cover.opens) check_open(cover.d, s);
    check_multidegree(cover.d, m);
    if (p < 0 || p > cover.d) throw InvalidInput("cech: form degree out of range");

    CechBundle bundle;
    bundle.cover = cover;
    bundle.p = p;
    bundle.m = m;
    int N = cover.size();
    for (int t = 0; t < N; ++t) {
        LevelData lvl;
        lvl.tuples = subsets_of_size(N, t + 1);
        std::vector<std::string> labels;
        for (const auto& T : lvl.tuples) {
            lvl.offsets.push_back(lvl.dim);
            lvl.slices.push_back(reduced_slice(cover.d, tuple_open(cover, T), p, m));
            const EulerReducedSlice& sl = lvl.slices.back();
            for (const std::string& l : sl.space.labels)
                labels.push_back(tuple_str(T) + "|" + l);
            lvl.dim += sl.dim();
        }
        bundle.spaces.emplace_back(std::move(labels));
        bundle.levels.push_back(std::move(lvl));
    }
    for (int t = 0; t + 1 < N; ++t) {
        const LevelData& src = bundle.levels[t];
        const LevelData& dst = bundle.levels[t + 1];
        SparseMatrixQ::Builder b(dst.dim, src.dim);
        for (std::size_t ti = 0; ti < dst.tuples.size(); ++ti) {
            const auto& T = dst.tuples[ti];
            for (std::size_t r = 0; r < T.size(); ++r) {
                std::vector<int> Tsub = T;
                Tsub.erase(Tsub.begin() + static_cast<long>(r));
                int si = src.tuple_index(Tsub);
                SparseMatrixQ res = restriction_map(src.slices[si], dst.slices[ti]);
                b.add_block(dst.offsets[ti], src.offsets[si], res, Rat(r % 2 == 0 ? 1 : -1));
            }
        }
        bundle.diffs.push_back(b.build());
    }
    return bundle;
}

// block-diagonal de Rham map between the level-t spaces of two bundles of
// consecutive form degree over the same cover
SparseMatrixQ level_de_rham(const CechBundle& src, const CechBundle& dst, int t) {
    const LevelData& a = src.levels[t];
    const LevelData& b = dst.levels[t];
    SparseMatrixQ::Builder out(b.dim, a.dim);
    for (std::size_t ti = 0; ti < a.tuples.size(); ++ti)
        out.add_block(b.offsets[ti], a.offsets[ti], de_rham_map(a.slices[ti], b.slices[ti]));
    return out.build();
}

// projection chain map from the complex over `big` onto the complex over a
// subcover `small` (every open of `small` appears in `big`)
std::vector<SparseMatrixQ> cech_projection(const CechBundle& big, const CechBundle& small) {
    std::map<OpenSet, int> where;
    for (int i = 0; i < big.cover.size(); ++i) where[big.cover.opens[i]] = i;

    std::vector<SparseMatrixQ> f;
    for (std::size_t t = 0; t < small.levels.size(); ++t) {
        const LevelData& sm = small.levels[t];
        const LevelData& bg = big.levels[t];
        SparseMatrixQ::Builder b(sm.dim, bg.dim);
        for (std::size_t ti = 0; ti < sm.tuples.size(); ++ti) {
            std::vector<int> Tbig;
            for (int i : sm.tuples[ti]) {
                auto it = where.find(small.cover.opens[i]);
                if (it == where.end())
                    throw InvalidInput("cech_projection: not a subcover");
                Tbig.push_back(it->second);
            }
            std::sort(Tbig.begin(), Tbig.end());
            int bi = bg.tuple_index(Tbig);
            if (bi < 0) throw MathAssertionError("cech_projection: tuple not found");
            if (sm.slices[ti].dim() != bg.slices[bi].dim())
                throw MathAssertionError("cech_projection: slice dimension mismatch");
            for (int c = 0; c < sm.slices[ti].dim(); ++c)
                b.add(sm.offsets[ti] + c, bg.offsets[bi] + c, Rat(1));
        }
        f.push_back(b.build());
    }
    return f;
}

}  // namespace

ChainComplex cech_complex(const Cover& cover, int p, int k, const Multidegree& m) {
    if (cover.size() == 0) throw InvalidInput("cech: empty cover");
    if (p < 0 || p > cover.d) throw InvalidInput("cech: form degree out of range");
    check_multidegree(cover.d, m);
    if (msum(m) != k) {
        // every slice of twist k is empty at this multidegree
        std::vector<BasisIndexedSpace> spaces(std::max(cover.size(), 1));
        std::vector<SparseMatrixQ> diffs(spaces.size() - 1);
        return ChainComplex(std::move(spaces), std::move(diffs));
    }
    return build_cech(cover, p, m).complex();
}

// ---------------------------------------------------------------------------
// windows
// ---------------------------------------------------------------------------

std::vector<Multidegree> window_multidegrees(int d, int k, int B) {
    if (B < 1) throw InvalidInput("window bound must be at least 1");
    if (B > kMaxWindow) throw WindowExceeded("window bound exceeds the supported maximum");
    std::vector<Multidegree> out;
    Multidegree m(d + 1, 0);
    std::vector<int> head(d, -B);
    while (true) {
        int s = std::accumulate(head.begin(), head.end(), 0);
        int last = k - s;
        if (last >= -B && last <= B) {
            for (int i = 0; i < d; ++i) m[i] = head[i];
            m[d] = last;
            out.push_back(m);
        }
        int i = d - 1;
        while (i >= 0 && head[i] == B) --i;
        if (i < 0) break;
        ++head[i];
        for (int l = i + 1; l < d; ++l) head[l] = -B;
    }
    return out;
}

int support_bound(int p, int k, int d) {
    int lo = std::min(0, k - p + d);
    int hi = std::max(0, k + 1);
    return std::max({1, -lo, hi});
}

long GradedDimensionTable::dim(int degree, const Multidegree& m) const {
    auto it = dims.find({degree, m});
    return it == dims.end() ? 0 : it->second;
}

long GradedDimensionTable::total(int degree) const {
    long s = 0;
    for (const auto& [key, v] : dims)
        if (key.first == degree) s += v;
    return s;
}

int GradedDimensionTable::max_degree() const {
    int md = -1;
    for (const auto& [key, v] : dims) md = std::max(md, key.first);
    return md;
}

// ---------------------------------------------------------------------------
// per-multidegree answers, memoized on the sign pattern of m
// ---------------------------------------------------------------------------

namespace {

// Slice bases and all Cech matrices depend on m only through the pattern of
// signs (m_c < 0, m_c = 0, m_c >= 1): admissibility reads m_c >= 0 or
// m_c >= 1, and the contraction/restriction coefficients are m-independent.
// (The exterior derivative is not: de Rham pipelines never use this memo.)
std::vector<int> pattern_of(const Multidegree& m) {
    std::vector<int> pat(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) pat[i] = m[i] < 0 ? -1 : (m[i] == 0 ? 0 : 1);
    return pat;
}

struct SliceAnswers {
    std::vector<long> hX;  // H^i(P^d, Omega^p(k)) per degree
    std::vector<long> hV;  // H^i(V, Omega^p) per degree
    std::vector<long> hZ;  // H^i_{P^j}(P^d, Omega^p) per degree
    long tilde = 0;        // reduced module at degree d-j
};

// cone shifted by -1: M^i = A^i + B^{i-1}, d(a,b) = (d_A a, f a - d_B b)
ChainComplex shifted_cone(const CechBundle& A, const CechBundle& B,
                          const std::vector<SparseMatrixQ>& f) {
    int lenA = static_cast<int>(A.spaces.size());
    int lenB = static_cast<int>(B.spaces.size());
    int len = std::max(lenA, lenB + 1);
    std::vector<BasisIndexedSpace> spaces;
    std::vector<int> adim(len, 0), bdim(len, 0);
    for (int i = 0; i < len; ++i) {
        std::vector<std::string> labels;
        if (i < lenA) {
            adim[i] = A.spaces[i].dim();
            for (const auto& l : A.spaces[i].labels) labels.push_back("X|" + l);
        }
        if (i - 1 >= 0 && i - 1 < lenB) {
            bdim[i] = B.spaces[i - 1].dim();
            for (const auto& l : B.spaces[i - 1].labels) labels.push_back("V|" + l);
        }
        spaces.emplace_back(std::move(labels));
    }
    std::vector<SparseMatrixQ> diffs;
    for (int i = 0; i + 1 < len; ++i) {
        SparseMatrixQ::Builder b(adim[i + 1] + bdim[i + 1], adim[i] + bdim[i]);
        if (i + 1 < lenA) b.add_block(0, 0, A.diff(i));
        if (i < lenB) b.add_block(adim[i + 1], 0, f[i]);
        if (i - 1 >= 0 && i < lenB) b.add_block(adim[i + 1], adim[i], B.diff(i - 1), Rat(-1));
        diffs.push_back(b.build());
    }
    return ChainComplex(std::move(spaces), std::move(diffs));
}

// rank of the map induced on cohomology at degree n by a chain map given as
// level matrices: rank( (f ker d_A^n + im d_B^{n-1}) / im d_B^{n-1} )
long induced_rank(const SparseMatrixQ& f_n, const SparseMatrixQ& dA_n,
                  const SparseMatrixQ& dB_prev) {
    SparseMatrixQ fk = f_n * kernel_basis(dA_n);
    long rb = rank(dB_prev);
    return rank(SparseMatrixQ::hstack(fk, dB_prev)) - rb;
}

SliceAnswers compute_slice_answers(int d, int j, int p, const Multidegree& m) {
    CechBundle A = build_cech(Cover::full(d), p, m);
    CechBundle B = build_cech(Cover::complement_cover(d, j), p, m);
    std::vector<SparseMatrixQ> f = cech_projection(A, B);

    ChainComplex cA = A.complex();
    ChainComplex cB = B.complex();
    ChainComplex cone = shifted_cone(A, B, f);

    SliceAnswers ans;
    ans.hX = cA.cohomology_dims();
    ans.hV = cB.cohomology_dims();
    ans.hZ.assign(d + 1, 0);
    for (int i = 0; i <= d && i < cone.length(); ++i) ans.hZ[i] = cone.cohomology_dim(i);

    // local cohomology vanishing / agreement along the long exact sequence
    for (int i = 0; i < d - j; ++i)
        if (ans.hZ[i] != 0)
            throw MathAssertionError("local cohomology nonzero below codimension at degree " +
                                     std::to_string(i));
    for (int i = d - j + 1; i <= d; ++i) {
        long hx = i < static_cast<int>(ans.hX.size()) ? ans.hX[i] : 0;
        if (ans.hZ[i] != hx)
            throw MathAssertionError(
                "local cohomology does not match ambient cohomology above codimension at degree " +
                std::to_string(i));
    }

    // reduced module both ways: coker(H^{n}(X) -> H^{n}(V)) at n = d-j-1 and
    // ker(H^{d-j}_Z -> H^{d-j}(X))
    int n = d - j - 1;
    long coker = ans.hV[n] - induced_rank(f[n], cA.differential(n), cB.differential(n - 1));

    // projection cone -> A is the identity on the X-block
    int dj = d - j;
    SparseMatrixQ::Builder proj(cA.dim(dj), cone.dim(dj));
    for (int c = 0; c < cA.dim(dj); ++c) proj.add(c, c, Rat(1));
    long ker =
        ans.hZ[dj] - induced_rank(proj.build(), cone.differential(dj), cA.differential(dj - 1));

    if (coker != ker)
        throw MathAssertionError("reduced module: kernel and cokernel descriptions disagree (" +
                                 std::to_string(ker) + " vs " + std::to_string(coker) + ")");
    ans.tilde = coker;
    return ans;
}

// memoized evaluation over a window: one computation per sign pattern
template <typename Answer, typename Compute>
std::vector<Answer> per_multidegree(const std::vector<Multidegree>& ms, int threads,
                                    Compute&& compute) {
    std::map<std::vector<int>, int> pattern_slot;
    std::vector<int> slot_of(ms.size());
    std::vector<const Multidegree*> representative;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        auto [it, fresh] = pattern_slot.try_emplace(pattern_of(ms[i]),
                                                    static_cast<int>(representative.size()));
        if (fresh) representative.push_back(&ms[i]);
        slot_of[i] = it->second;
    }
    std::vector<Answer> answers(representative.size());
    std::exception_ptr err;
    std::mutex err_mutex;
    parallel_for(representative.size(), threads, [&](std::size_t i) {
        try {
            answers[i] = compute(*representative[i]);
        } catch (...) {
            std::lock_guard lock(err_mutex);
            if (!err) err = std::current_exception();
        }
    });
    if (err) std::rethrow_exception(err);
    std::vector<Answer> out(ms.size());
    for (std::size_t i = 0; i < ms.size(); ++i) out[i] = answers[slot_of[i]];
    return out;
}

void check_jp(int d, int j, int p) {
    if (d < 1) throw InvalidInput("d must be at least 1");
    if (j < 0 || j > d - 1) throw InvalidInput("need 0 <= j <= d-1");
    if (p < 0 || p > d) throw InvalidInput("need 0 <= p <= d");
}

}  // namespace

GradedDimensionTable sheaf_cohomology_Pd(int p, int k, int d, Window w, int threads) {
    if (d < 1) throw InvalidInput("d must be at least 1");
    if (p < 0 || p > d) throw InvalidInput("need 0 <= p <= d");
    auto ms = window_multidegrees(d, k, w.bound);
    auto answers = per_multidegree<std::vector<long>>(ms, threads, [&](const Multidegree& m) {
        return build_cech(Cover::full(d), p, m).complex().cohomology_dims();
    });
    GradedDimensionTable table{"sheaf_cohomology_Pd", d, -1, p, k, w.bound, {}};
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (int deg = 0; deg < static_cast<int>(answers[i].size()); ++deg)
            if (answers[i][deg] != 0) table.dims[{deg, ms[i]}] = answers[i][deg];
    return table;
}

GradedDimensionTable cohomology_of_V(int j, int p, int d, Window w, int threads) {
    check_jp(d, j, p);
    auto ms = window_multidegrees(d, 0, w.bound);
    auto answers = per_multidegree<std::vector<long>>(ms, threads, [&](const Multidegree& m) {
        return build_cech(Cover::complement_cover(d, j), p, m).complex().cohomology_dims();
    });
    GradedDimensionTable table{"cohomology_of_V", d, j, p, 0, w.bound, {}};
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (int deg = 0; deg < static_cast<int>(answers[i].size()); ++deg)
            if (answers[i][deg] != 0) table.dims[{deg, ms[i]}] = answers[i][deg];
    return table;
}

GradedDimensionTable local_cohomology(int j, int p, int d, Window w, int threads) {
    check_jp(d, j, p);
    auto ms = window_multidegrees(d, 0, w.bound);
    auto answers = per_multidegree<SliceAnswers>(ms, threads, [&](const Multidegree& m) {
        return compute_slice_answers(d, j, p, m);
    });
    GradedDimensionTable table{"local_cohomology", d, j, p, 0, w.bound, {}};
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (int deg = 0; deg <= d; ++deg)
            if (answers[i].hZ[deg] != 0) table.dims[{deg, ms[i]}] = answers[i].hZ[deg];
    return table;
}

GradedDimensionTable tilde_H(int j, int p, int d, Window w, int threads) {
    check_jp(d, j, p);
    auto ms = window_multidegrees(d, 0, w.bound);
    auto answers = per_multidegree<SliceAnswers>(ms, threads, [&](const Multidegree& m) {
        return compute_slice_answers(d, j, p, m);
    });
    GradedDimensionTable table{"tilde_H", d, j, p, 0, w.bound, {}};
    for (std::size_t i = 0; i < ms.size(); ++i)
        if (answers[i].tilde != 0) table.dims[{d - j, ms[i]}] = answers[i].tilde;
    return table;
}

// ---------------------------------------------------------------------------
// Cech-de Rham grid and the reduced-module complex inputs
// ---------------------------------------------------------------------------

DoubleComplex cech_de_rham_grid(const Cover& cover, const Multidegree& m) {
    check_multidegree(cover.d, m);
    if (msum(m) != 0)
        throw InvalidInput("cech_de_rham_grid: the de Rham complex lives at total degree 0");
    int d = cover.d;
    std::vector<CechBundle> bundles;
    bundles.reserve(d + 1);
    for (int p = 0; p <= d; ++p) bundles.push_back(build_cech(cover, p, m));

    DoubleComplex dc(cover.size(), d + 1);
    for (int i = 0; i <= d; ++i)
        for (int t = 0; t < cover.size(); ++t) {
            dc.set_space(t, i, bundles[i].spaces[t]);
            if (t + 1 < cover.size()) dc.set_horizontal(t, i, bundles[i].diffs[t]);
            if (i + 1 <= d) dc.set_vertical(t, i, level_de_rham(bundles[i], bundles[i + 1], t));
        }
    dc.validate();
    return dc;
}

TildeComplexData tilde_complex_data(int d, int j, const Multidegree& m) {
    check_jp(d, j, 0);
    check_multidegree(d, m);
    if (msum(m) != 0) throw InvalidInput("tilde_complex_data: total degree must be 0");
    int n = d - j - 1;

    TildeComplexData out;
    out.d = d;
    out.j = j;
    out.m = m;
    std::vector<CechBundle> B, A;
    for (int p = 0; p <= d; ++p) {
        B.push_back(build_cech(Cover::complement_cover(d, j), p, m));
        A.push_back(build_cech(Cover::full(d), p, m));
    }
    for (int p = 0; p <= d; ++p) {
        std::vector<SparseMatrixQ> f = cech_projection(A[p], B[p]);
        out.Z.push_back(kernel_basis(B[p].diff(n)));
        SparseMatrixQ inner = B[p].diff(n - 1);
        out.U_inner.push_back(inner);
        SparseMatrixQ restricted_global = f[n] * kernel_basis(A[p].diff(n));
        out.U_full.push_back(SparseMatrixQ::hstack(inner, restricted_global));
        if (p < d) out.D.push_back(level_de_rham(B[p], B[p + 1], n));
    }
    return out;
}

}  // namespace bggcoh::cech
