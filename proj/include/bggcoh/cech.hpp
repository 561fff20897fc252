#pragma once

#include <map>
#include <string>
#include <vector>

#include "bggcoh/homology.hpp"

namespace bggcoh::cech {

using exactla::SparseMatrixQ;
using Multidegree = std::vector<int>;

/// Hard cap on multidegree boxes; desk scale only.
inline constexpr int kMaxWindow = 32;

/// Intersection of coordinate charts: U_S = cap_{c in S} D(T_c).
struct OpenSet {
    std::vector<int> coords;  // sorted, nonempty, within 0..d

    static OpenSet single(int c) { return OpenSet{{c}}; }
    static OpenSet join(const OpenSet& a, const OpenSet& b);
    bool contains(int c) const;
    std::string str() const;
    bool operator==(const OpenSet& rhs) const { return coords == rhs.coords; }
    bool operator<(const OpenSet& rhs) const { return coords < rhs.coords; }
};

/// Monomial form T^a dT_{i_1} ^ ... ^ dT_{i_p}; dT_i carries multidegree e_i,
/// so the symbol's multidegree is a + sum e_i.
struct FormSymbol {
    std::vector<int> exponent;      // a
    std::vector<int> form_indices;  // I, strictly increasing
    std::string str() const;
};

/// All weight-|m| monomial p-forms of multidegree m regular outside S.
/// The exponent of a symbol is forced: a = m - indicator(I).
struct LaurentFormSlice {
    int d = 0;
    int p = 0;
    int twist = 0;  // |m|
    OpenSet open;
    Multidegree m;
    std::vector<FormSymbol> basis;

    int dim() const { return static_cast<int>(basis.size()); }
    /// Position of the symbol with the given form indices, -1 if absent.
    int find(const std::vector<int>& form_indices) const;
};

LaurentFormSlice ambient_slice(int d, const OpenSet& open, int p, const Multidegree& m);

/// Kernel of contraction with the Euler field sum T_i d/dT_i inside the
/// ambient slice: the sections of Omega^p(twist) over U_S at multidegree m.
struct EulerReducedSlice {
    LaurentFormSlice ambient;
    SparseMatrixQ kernel;  // columns = basis vectors in ambient coordinates
    exactla::BasisIndexedSpace space;

    int dim() const { return kernel.cols(); }
};

EulerReducedSlice reduced_slice(int d, const OpenSet& open, int p, const Multidegree& m);

/// Contraction by the Euler field, ambient p-forms -> ambient (p-1)-forms.
SparseMatrixQ contraction_matrix(const LaurentFormSlice& src);

/// Exterior derivative on ambient symbols (multidegree preserving).
SparseMatrixQ ambient_de_rham_matrix(const LaurentFormSlice& src);

/// Exterior derivative between reduced slices on the same open and
/// multidegree; defined on reduced slices only at twist 0.
SparseMatrixQ de_rham_map(const EulerReducedSlice& src, const EulerReducedSlice& dst);

/// Restriction along U_{S'} subset U_S (S subset S'), in reduced bases.
SparseMatrixQ restriction_map(const EulerReducedSlice& src, const EulerReducedSlice& dst);

/// Ordered affine cover by S-opens.
struct Cover {
    int d = 0;
    std::vector<OpenSet> opens;

    static Cover full(int d);                    // D(T_0), ..., D(T_d): covers P^d
    static Cover complement_cover(int d, int j); // D(T_{j+1}), ..., D(T_d): covers P^d - P^j

    int size() const { return static_cast<int>(opens.size()); }
    std::string str() const;
};

/// Alternating Cech complex of Euler-reduced slices of Omega^p(k) at a fixed
/// multidegree over the given cover.  All slices are empty unless |m| = k.
homology::ChainComplex cech_complex(const Cover& cover, int p, int k, const Multidegree& m);

/// Symmetric box |m_i| <= bound.
struct Window {
    int bound = 5;
};

/// All m with |m_i| <= B and sum(m) = k, lexicographic.
std::vector<Multidegree> window_multidegrees(int d, int k, int B);

/// Smallest B whose box provably contains the support of H^*(P^d, Omega^p(k))
/// in this grading (coordinates lie in [min(0, k-p+d), max(0, k+1)]).
int support_bound(int p, int k, int d);

/// Per-multidegree dimension table; entries omitted inside the window are
/// zero, and nothing is asserted outside the window.
struct GradedDimensionTable {
    std::string operation;
    int d = 0;
    int j = -1;  // -1 when no subvariety is involved
    int p = 0;
    int k = 0;
    int window = 0;

    std::map<std::pair<int, Multidegree>, long> dims;

    long dim(int degree, const Multidegree& m) const;
    long total(int degree) const;
    int max_degree() const;
};

/// H^i(P^d, Omega^p(k)) per multidegree over the full cover.
GradedDimensionTable sheaf_cohomology_Pd(int p, int k, int d, Window w, int threads = 1);

/// H^i(P^d - P^j, Omega^p) per multidegree over the complement cover.
GradedDimensionTable cohomology_of_V(int j, int p, int d, Window w, int threads = 1);

/// H^i_{P^j}(P^d, Omega^p) from the long exact sequence with the complement;
/// verifies the vanishing below d-j and agreement with P^d above d-j.
GradedDimensionTable local_cohomology(int j, int p, int d, Window w, int threads = 1);

/// Reduced module at degree d-j: coker(H^{d-j-1}(P^d) -> H^{d-j-1}(V)),
/// cross-checked against ker(H^{d-j}_{P^j} -> H^{d-j}(P^d)).
GradedDimensionTable tilde_H(int j, int p, int d, Window w, int threads = 1);

/// The Cech-de Rham grid over a cover at a fixed multidegree of total
/// degree zero: columns are Cech levels, rows are form degrees 0..d.
homology::DoubleComplex cech_de_rham_grid(const Cover& cover, const Multidegree& m);

/// Ingredients of the reduced-module complex at one multidegree, all in the
/// coordinates of the V-cover Cech spaces at level n = d-j-1:
/// cocycles Z_p, boundaries-plus-restrictions U_p, and the de Rham maps D_p.
struct TildeComplexData {
    int d = 0, j = 0;
    Multidegree m;
    std::vector<SparseMatrixQ> Z;        // p = 0..d: ker of the level-n Cech differential
    std::vector<SparseMatrixQ> U_full;   // im d^{n-1} + restricted global cocycles
    std::vector<SparseMatrixQ> U_inner;  // im d^{n-1} only
    std::vector<SparseMatrixQ> D;        // de Rham, level-n space of Omega^p -> Omega^{p+1}
};

TildeComplexData tilde_complex_data(int d, int j, const Multidegree& m);

}  // namespace bggcoh::cech
