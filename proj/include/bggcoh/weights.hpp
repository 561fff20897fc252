#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "bggcoh/errors.hpp"

namespace bggcoh::weights {

/// Integer weight in X*(T) = Z^{d+1} for GL(d+1); rank = d+1 coordinates.
class Weight {
public:
    explicit Weight(std::vector<int> entries);

    int rank() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[i]; }
    const std::vector<int>& entries() const { return entries_; }
    long sum() const;

    Weight operator+(const Weight& rhs) const;
    Weight operator-(const Weight& rhs) const;
    bool operator==(const Weight& rhs) const { return entries_ == rhs.entries_; }
    bool operator!=(const Weight& rhs) const { return !(*this == rhs); }
    bool operator<(const Weight& rhs) const { return entries_ < rhs.entries_; }

    std::string str() const;

private:
    std::vector<int> entries_;
};

/// Integral rho for GL(rank): (rank-1, rank-2, ..., 1, 0).  Differs from the
/// half-sum of positive roots by a multiple of (1,...,1), which the dot
/// action ignores because W permutes coordinates.
Weight rho(int rank);

/// Permutation of coordinate positions.  Acts on weights by
/// (w x)_i = x_{w^{-1}(i)}; positions are 0-based internally.
class WeylElement {
public:
    explicit WeylElement(std::vector<int> images);

    static WeylElement identity(int rank);
    /// The cycle (1,2,...,len) in 1-based cycle notation, fixing the rest.
    static WeylElement cycle(int rank, int len);

    int rank() const { return static_cast<int>(images_.size()); }
    int image(int i) const { return images_[i]; }
    bool is_identity() const;
    int length() const;  // inversion count

    Weight apply(const Weight& chi) const;
    WeylElement compose(const WeylElement& rhs) const;  // this after rhs
    WeylElement inverse() const;

    bool operator==(const WeylElement& rhs) const { return images_ == rhs.images_; }
    std::string str() const;  // one-line notation, 1-based

private:
    std::vector<int> images_;  // images_[i] = w(i)
};

/// w . chi = w(chi + rho) - rho.
Weight dot_action(const WeylElement& w, const Weight& chi);

/// Weakly decreasing coordinates.
bool is_dominant(const Weight& lambda);

/// Weakly decreasing from the second coordinate on (Levi of type (1,d)).
bool is_L_dominant(const Weight& lambda);

/// Shortest coset representatives [id, (1 2), (1 2 3), ...] for W_L \ W,
/// i = 0..d; length(w_i) = i.
std::vector<WeylElement> bgg_coset_reps(int d);

/// dim V(lambda) by the Weyl dimension formula
/// prod_{i<j} (lambda_i - lambda_j + j - i)/(j - i).  Memoized; concurrent
/// reads are safe and insertion is atomic.
mpz_class weyl_dim(const Weight& lambda);

/// Number of Gelfand-Tsetlin patterns with top row lambda; independent
/// counting route for weyl_dim.
mpz_class gt_pattern_count(const Weight& lambda);

}  // namespace bggcoh::weights
