#include "bggcoh/weights.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

namespace bggcoh::weights {

Weight::Weight(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidInput("Weight: rank must be at least 1");
}

long Weight::sum() const {
    long s = 0;
    for (int e : entries_) s += e;
    return s;
}

Weight Weight::operator+(const Weight& rhs) const {
    if (rank() != rhs.rank()) throw InvalidInput("Weight: rank mismatch in +");
    std::vector<int> out(entries_);
    for (int i = 0; i < rank(); ++i) out[i] += rhs.entries_[i];
    return Weight(std::move(out));
}

Weight Weight::operator-(const Weight& rhs) const {
    if (rank() != rhs.rank()) throw InvalidInput("Weight: rank mismatch in -");
    std::vector<int> out(entries_);
    for (int i = 0; i < rank(); ++i) out[i] -= rhs.entries_[i];
    return Weight(std::move(out));
}

std::string Weight::str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << entries_[i];
    os << ')';
    return os.str();
}

Weight rho(int rank) {
    if (rank < 1) throw InvalidInput("rho: rank must be at least 1");
    std::vector<int> e(rank);
    for (int i = 0; i < rank; ++i) e[i] = rank - 1 - i;
    return Weight(std::move(e));
}

WeylElement::WeylElement(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
            throw InvalidInput("WeylElement: not a permutation");
        seen[v] = true;
    }
    if (images_.empty()) throw InvalidInput("WeylElement: empty permutation");
}

WeylElement WeylElement::identity(int rank) {
    std::vector<int> im(rank);
    std::iota(im.begin(), im.end(), 0);
    return WeylElement(std::move(im));
}

WeylElement WeylElement::cycle(int rank, int len) {
    if (len < 1 || len > rank) throw InvalidInput("WeylElement::cycle: bad length");
    std::vector<int> im(rank);
    std::iota(im.begin(), im.end(), 0);
    for (int i = 0; i + 1 < len; ++i) im[i] = i + 1;
    im[len - 1] = 0;
    return WeylElement(std::move(im));
}

bool WeylElement::is_identity() const {
    for (int i = 0; i < rank(); ++i)
        if (images_[i] != i) return false;
    return true;
}

int WeylElement::length() const {
    int inv = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = i + 1; j < rank(); ++j)
            if (images_[i] > images_[j]) ++inv;
    return inv;
}

Weight WeylElement::apply(const Weight& chi) const {
    if (chi.rank() != rank()) throw InvalidInput("WeylElement::apply: rank mismatch");
    std::vector<int> out(rank());
    // (w chi)_{w(i)} = chi_i, i.e. out[i] = chi[w^{-1}(i)]
    for (int i = 0; i < rank(); ++i) out[images_[i]] = chi[i];
    return Weight(std::move(out));
}

WeylElement WeylElement::compose(const WeylElement& rhs) const {
    if (rank() != rhs.rank()) throw InvalidInput("WeylElement::compose: rank mismatch");
    std::vector<int> im(rank());
    for (int i = 0; i < rank(); ++i) im[i] = images_[rhs.images_[i]];
    return WeylElement(std::move(im));
}

WeylElement WeylElement::inverse() const {
    std::vector<int> im(rank());
    for (int i = 0; i < rank(); ++i) im[images_[i]] = i;
    return WeylElement(std::move(im));
}

std::string WeylElement::str() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < rank(); ++i) os << (i ? " " : "") << images_[i] + 1;
    os << ']';
    return os.str();
}

Weight dot_action(const WeylElement& w, const Weight& chi) {
    if (w.rank() != chi.rank()) throw InvalidInput("dot_action: rank mismatch");
    Weight r = rho(chi.rank());
    return w.apply(chi + r) - r;
}

bool is_dominant(const Weight& lambda) {
    for (int i = 0; i + 1 < lambda.rank(); ++i)
        if (lambda[i] < lambda[i + 1]) return false;
    return true;
}

bool is_L_dominant(const Weight& lambda) {
    for (int i = 1; i + 1 < lambda.rank(); ++i)
        if (lambda[i] < lambda[i + 1]) return false;
    return true;
}

std::vector<WeylElement> bgg_coset_reps(int d) {
    if (d < 1) throw InvalidInput("bgg_coset_reps: d must be at least 1");
    std::vector<WeylElement> reps;
    reps.reserve(d + 1);
    for (int i = 0; i <= d; ++i) reps.push_back(WeylElement::cycle(d + 1, i + 1));
    return reps;
}

namespace {

std::shared_mutex g_dim_mutex;
std::map<std::vector<int>, mpz_class> g_dim_cache;

mpz_class weyl_dim_uncached(const Weight& lambda) {
    int n = lambda.rank();
    mpz_class num(1), den(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= lambda[i] - lambda[j] + j - i;
            den *= j - i;
        }
    mpz_class dim;
    mpz_divexact(dim.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return dim;
}

}  // namespace

mpz_class weyl_dim(const Weight& lambda) {
    if (!is_dominant(lambda)) throw InvalidInput("weyl_dim: weight is not dominant");
    {
        std::shared_lock lock(g_dim_mutex);
        auto it = g_dim_cache.find(lambda.entries());
        if (it != g_dim_cache.end()) return it->second;
    }
    mpz_class dim = weyl_dim_uncached(lambda);
    std::unique_lock lock(g_dim_mutex);
    return g_dim_cache.emplace(lambda.entries(), dim).first->second;
}

namespace {

// Counts weakly interlacing rows below `row` down to length 1.
mpz_class gt_count_rec(const std::vector<int>& row,
                       std::map<std::vector<int>, mpz_class>& memo) {
    if (row.size() == 1) return 1;
    auto it = memo.find(row);
    if (it != memo.end()) return it->second;

    mpz_class total = 0;
    // enumerate next[i] in [row[i+1], row[i]] for all i
    std::vector<int> cur(row.size() - 1);
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = row[i + 1];
    while (true) {
        total += gt_count_rec(cur, memo);
        bool advanced = false;
        std::size_t k = cur.size();
        while (k > 0) {
            --k;
            if (cur[k] < row[k]) {
                ++cur[k];
                for (std::size_t l = k + 1; l < cur.size(); ++l) cur[l] = row[l + 1];
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    memo.emplace(row, total);
    return total;
}

}  // namespace

mpz_class gt_pattern_count(const Weight& lambda) {
    if (!is_dominant(lambda)) throw InvalidInput("gt_pattern_count: weight is not dominant");
    // Shift so the last entry is 0; a (1,...,1) shift twists by a character
    // and does not change the count.
    std::vector<int> top = lambda.entries();
    int shift = top.back();
    for (int& v : top) v -= shift;
    std::map<std::vector<int>, mpz_class> memo;
    return gt_count_rec(top, memo);
}

}  // namespace bggcoh::weights
