#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

#include "bggcoh/weights.hpp"

namespace bggcoh::bwb {

using weights::Weight;
using weights::WeylElement;

/// Cohomology dimensions by degree, with the highest weight where the solver
/// knows it.  Degrees with no entry are zero.
struct CohomologyProfile {
    struct Entry {
        mpz_class dim;
        std::optional<Weight> highest_weight;
    };
    std::map<int, Entry> entries;

    bool is_zero() const { return entries.empty(); }
    mpz_class dim_at(int degree) const;
    /// Alternating sum over degrees.
    mpz_class euler_characteristic() const;
    /// The unique nonzero degree; throws unless exactly one entry exists.
    int support_degree() const;
};

/// H^*(G/B, L_mu) for GL(d+1): zero when mu + rho is singular, otherwise one
/// irreducible V(w.mu) in degree length(w), w the sorting permutation.
CohomologyProfile bwb_line_bundle(const Weight& mu);

/// H^*(P^d, E_mu) for L-dominant mu, identified with the G/B answer.
/// Rejects non-L-dominant input: the identification is only certified there.
CohomologyProfile bwb_homogeneous(const Weight& mu);

struct BggTerm {
    WeylElement w;
    Weight weight;  // w . lambda
    bool l_dominant;
    CohomologyProfile profile;
};

/// Weight bookkeeping of the dual BGG complex of a dominant weight: terms
/// E_{w_i . lambda}, i = 0..d, with verified one-degree cohomology profiles.
struct BggComplexData {
    Weight lambda;
    int d;
    std::vector<BggTerm> terms;
};

BggComplexData bgg_complex(const Weight& lambda, int d);

/// Classical closed-form dimensions of H^*(P^d, Omega^p(k)).
CohomologyProfile bott_dims(int p, int k, int d);

/// Sum_j (-1)^j chi(E_{w_j . lambda}); re-derived independently as
/// (d+1) * dim V(lambda) and cross-checked before returning.
mpz_class euler_characteristic_check(const Weight& lambda, int d);

}  // namespace bggcoh::bwb
