#pragma once

#include "bggcoh/cech.hpp"
#include "bggcoh/homology.hpp"

namespace bggcoh::homology {

/// Total de Rham cohomology of V = P^d - P^j, computed per multidegree from
/// the Cech-de Rham double complex and summed over the window.
struct DeRhamReport {
    int d = 0, j = 0, window = 0;
    std::vector<long> total_dims;  // per total degree 0..d + (d-j-1)
    /// multidegrees carrying nonzero cohomology, with their per-degree dims
    std::map<cech::Multidegree, std::vector<long>> support;
    bool supported_at_zero_only = true;
};

/// Builds the grid over the complement cover for every windowed multidegree,
/// totalizes, and checks the outcome: dims 1 in even degrees up to
/// 2(d-j-1), 0 elsewhere, all supported at multidegree 0.  Violations throw
/// MathAssertionError naming the degree or multidegree.
DeRhamReport de_rham_of_V(int d, int j, cech::Window w, int threads = 1);

/// Exactness report for the complex of reduced modules
/// 0 -> tilde H^{d-j}(P^d, O) -> ... -> tilde H^{d-j}(P^d, Omega^d) -> 0
/// with de-Rham-induced maps, per windowed multidegree.
struct AcyclicityReport {
    int d = 0, j = 0, window = 0;
    bool acyclic = true;
    /// (spot p, multidegree) with nonzero cohomology in the reduced complex
    std::vector<std::pair<int, cech::Multidegree>> failures;
    /// total cohomology of the intermediate complex p -> H^{d-j-1}(V, Omega^p)
    std::vector<long> intermediate_cohomology;  // per p = 0..d
    /// dimension found at p = d-j-1 and multidegree 0 (expected 1)
    long intermediate_at_zero = 0;
};

AcyclicityReport proposition_acyclicity(int d, int j, cech::Window w, int threads = 1);

}  // namespace bggcoh::homology
