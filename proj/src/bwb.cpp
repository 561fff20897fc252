#include "bggcoh/bwb.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bggcoh::bwb {

using weights::bgg_coset_reps;
using weights::dot_action;
using weights::is_dominant;
using weights::is_L_dominant;
using weights::rho;
using weights::weyl_dim;

mpz_class CohomologyProfile::dim_at(int degree) const {
    auto it = entries.find(degree);
    return it == entries.end() ? mpz_class(0) : it->second.dim;
}

mpz_class CohomologyProfile::euler_characteristic() const {
    mpz_class chi = 0;
    for (const auto& [deg, e] : entries)
        chi += (deg % 2 == 0) ? e.dim : -e.dim;
    return chi;
}

int CohomologyProfile::support_degree() const {
    if (entries.size() != 1)
        throw InvalidInput("support_degree: profile is not concentrated in one degree");
    return entries.begin()->first;
}

CohomologyProfile bwb_line_bundle(const Weight& mu) {
    Weight nu = mu + rho(mu.rank());
    // Singular: some repeated coordinate kills all cohomology.
    std::vector<int> sorted = nu.entries();
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return CohomologyProfile{};

    // w sorts nu strictly decreasing; length(w) = inversion count of nu.
    int len = 0;
    for (int i = 0; i < nu.rank(); ++i)
        for (int j = i + 1; j < nu.rank(); ++j)
            if (nu[i] < nu[j]) ++len;
    std::reverse(sorted.begin(), sorted.end());
    Weight hw = Weight(std::move(sorted)) - rho(mu.rank());

    CohomologyProfile profile;
    profile.entries.emplace(len, CohomologyProfile::Entry{weyl_dim(hw), hw});
    return profile;
}

CohomologyProfile bwb_homogeneous(const Weight& mu) {
    if (!is_L_dominant(mu))
        throw InvalidInput("bwb_homogeneous: weight " + mu.str() + " is not L-dominant");
    return bwb_line_bundle(mu);
}

BggComplexData bgg_complex(const Weight& lambda, int d) {
    if (lambda.rank() != d + 1) throw InvalidInput("bgg_complex: weight rank must be d+1");
    if (!is_dominant(lambda)) throw InvalidInput("bgg_complex: weight is not dominant");

    const mpz_class dim = weyl_dim(lambda);
    BggComplexData data{lambda, d, {}};
    int i = 0;
    for (const WeylElement& w : bgg_coset_reps(d)) {
        Weight wl = dot_action(w, lambda);
        bool ldom = is_L_dominant(wl);
        if (!ldom)
            throw MathAssertionError("bgg_complex: w_i . lambda not L-dominant at i=" +
                                     std::to_string(i));
        CohomologyProfile profile = bwb_homogeneous(wl);
        // H^i(P^d, E_{w_i . lambda}) = V(lambda) at i, zero elsewhere.
        if (profile.entries.size() != 1 || profile.dim_at(i) != dim)
            throw MathAssertionError("bgg_complex: delta property failed at i=" +
                                     std::to_string(i) + " for lambda=" + lambda.str());
        data.terms.push_back({w, std::move(wl), ldom, std::move(profile)});
        ++i;
    }
    return data;
}

namespace {

mpz_class binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

CohomologyProfile bott_dims(int p, int k, int d) {
    if (p < 0 || p > d) throw InvalidInput("bott_dims: need 0 <= p <= d");
    CohomologyProfile profile;
    if (k > p) {
        mpz_class h0 = binom(k + d - p, k) * binom(k - 1, p);
        if (h0 != 0) profile.entries.emplace(0, CohomologyProfile::Entry{h0, std::nullopt});
    } else if (k == 0) {
        profile.entries.emplace(p, CohomologyProfile::Entry{mpz_class(1), std::nullopt});
    } else if (k < p - d) {
        mpz_class hd = binom(p - k, -k) * binom(-k - 1, d - p);
        if (hd != 0) profile.entries.emplace(d, CohomologyProfile::Entry{hd, std::nullopt});
    }
    return profile;
}

mpz_class euler_characteristic_check(const Weight& lambda, int d) {
    BggComplexData data = bgg_complex(lambda, d);
    mpz_class total = 0;
    int j = 0;
    for (const BggTerm& t : data.terms) {
        mpz_class chi = t.profile.euler_characteristic();
        total += (j % 2 == 0) ? chi : -chi;
        ++j;
    }
    mpz_class expected = mpz_class(d + 1) * weyl_dim(lambda);
    if (total != expected)
        throw MathAssertionError("euler_characteristic_check: alternating sum " +
                                 total.get_str() + " != (d+1) dim V = " + expected.get_str());
    return total;
}

}  // namespace bggcoh::bwb
