#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <random>
#include <thread>

#include "bggcoh/weights.hpp"

using namespace bggcoh;
using weights::bgg_coset_reps;
using weights::dot_action;
using weights::gt_pattern_count;
using weights::is_dominant;
using weights::is_L_dominant;
using weights::Weight;
using weights::weyl_dim;
using weights::WeylElement;

namespace {

Weight W(std::vector<int> v) { return Weight(std::move(v)); }

std::vector<Weight> dominant_weights(int rank, int lo, int hi) {
    std::vector<Weight> out;
    std::vector<int> cur(rank, lo);
    while (true) {
        bool dec = true;
        for (int i = 0; i + 1 < rank; ++i)
            if (cur[i] < cur[i + 1]) dec = false;
        if (dec) out.push_back(Weight(cur));
        int k = rank - 1;
        while (k >= 0 && cur[k] == hi) --k;
        if (k < 0) break;
        ++cur[k];
        for (int l = k + 1; l < rank; ++l) cur[l] = lo;
    }
    return out;
}

WeylElement random_perm(int rank, std::mt19937_64& rng) {
    std::vector<int> im(rank);
    for (int i = 0; i < rank; ++i) im[i] = i;
    std::shuffle(im.begin(), im.end(), rng);
    return WeylElement(std::move(im));
}

}  // namespace

TEST_CASE("dot action evaluates the stated examples") {
    CHECK(dot_action(WeylElement::identity(3), W({2, 1, 0})) == W({2, 1, 0}));
    CHECK(dot_action(WeylElement::cycle(2, 2), W({0, 0})) == W({-1, 1}));
    CHECK(dot_action(WeylElement::cycle(3, 3), W({0, 0, 0})) == W({-2, 1, 1}));
    CHECK_THROWS_AS(dot_action(WeylElement::identity(2), W({0, 0, 0})), InvalidInput);
}

TEST_CASE("dot action is a group action and bijective") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> entry(-10, 10);
    for (int rank = 2; rank <= 5; ++rank) {
        for (int trial = 0; trial < 40; ++trial) {
            WeylElement w1 = random_perm(rank, rng);
            WeylElement w2 = random_perm(rank, rng);
            std::vector<int> e(rank);
            for (int& v : e) v = entry(rng);
            Weight chi(e);
            CHECK(dot_action(w1.compose(w2), chi) == dot_action(w1, dot_action(w2, chi)));
            CHECK(dot_action(w1.inverse(), dot_action(w1, chi)) == chi);
        }
        // w . chi = chi for all chi forces w = id: on rho the dot action of a
        // non-identity permutation moves something
        for (int trial = 0; trial < 20; ++trial) {
            WeylElement w = random_perm(rank, rng);
            if (w.is_identity()) continue;
            CHECK(dot_action(w, weights::rho(rank)) != weights::rho(rank));
        }
    }
}

TEST_CASE("rho shift by multiples of (1,...,1) does not change the dot action") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<int> entry(-10, 10);
    for (int rank = 2; rank <= 4; ++rank) {
        for (int c = -2; c <= 2; ++c) {
            std::vector<int> shift_e(rank);
            for (int i = 0; i < rank; ++i) shift_e[i] = rank - 1 - i + c;
            Weight rho_c(shift_e);
            for (int trial = 0; trial < 25; ++trial) {
                WeylElement w = random_perm(rank, rng);
                std::vector<int> e(rank);
                for (int& v : e) v = entry(rng);
                Weight chi(e);
                CHECK(w.apply(chi + rho_c) - rho_c == dot_action(w, chi));
            }
        }
    }
}

TEST_CASE("dominance tests") {
    CHECK(is_dominant(W({0, 0, 0})));
    CHECK(is_dominant(W({2, 1, 1})));
    CHECK_FALSE(is_dominant(W({-1, 1})));
    CHECK(is_L_dominant(W({-2, 1, 1})));
    CHECK_FALSE(is_L_dominant(W({0, 0, 1})));
    // dominance implies L-dominance
    for (const Weight& lam : dominant_weights(4, -2, 2)) CHECK(is_L_dominant(lam));
}

TEST_CASE("bgg coset representatives") {
    auto reps1 = bgg_coset_reps(1);
    REQUIRE(reps1.size() == 2);
    CHECK(reps1[0].is_identity());
    CHECK(reps1[1] == WeylElement::cycle(2, 2));

    auto reps2 = bgg_coset_reps(2);
    REQUIRE(reps2.size() == 3);
    CHECK(reps2[0].is_identity());
    CHECK(reps2[1] == WeylElement::cycle(3, 2));
    CHECK(reps2[2] == WeylElement::cycle(3, 3));

    for (int d = 1; d <= 6; ++d) {
        auto reps = bgg_coset_reps(d);
        for (int i = 0; i <= d; ++i) CHECK(reps[i].length() == i);
    }
}

TEST_CASE("w_i . lambda is L-dominant for every dominant lambda") {
    for (int d = 1; d <= 4; ++d) {
        for (const Weight& lam : dominant_weights(d + 1, 0, 3)) {
            for (const WeylElement& w : bgg_coset_reps(d)) {
                CHECK(is_L_dominant(dot_action(w, lam)));
            }
        }
    }
}

TEST_CASE("weyl_dim examples") {
    CHECK(weyl_dim(W({0, 0, 0, 0})) == 1);
    CHECK(weyl_dim(W({1, 0, 0})) == 3);
    CHECK(weyl_dim(W({2, 1, 0})) == 8);
    CHECK(weyl_dim(W({1, 1, 0})) == 3);
    CHECK_THROWS_AS(weyl_dim(W({0, 1})), InvalidInput);
}

TEST_CASE("gt_pattern_count examples") {
    CHECK(gt_pattern_count(W({0, 0})) == 1);
    CHECK(gt_pattern_count(W({1, 0})) == 2);
    CHECK(gt_pattern_count(W({2, 1, 0})) == 8);
    CHECK_THROWS_AS(gt_pattern_count(W({0, 1})), InvalidInput);
}

TEST_CASE("weyl_dim cache tolerates concurrent readers and writers") {
    auto lams = dominant_weights(4, 0, 3);
    std::vector<mpz_class> expect;
    for (const Weight& lam : lams) expect.push_back(gt_pattern_count(lam));
    std::vector<std::thread> pool;
    std::atomic<bool> ok{true};
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = 0; i < lams.size(); ++i)
                if (weyl_dim(lams[i]) != expect[i]) ok = false;
        });
    for (auto& th : pool) th.join();
    CHECK(ok.load());
}

TEST_CASE("weyl_dim equals the Gelfand-Tsetlin count") {
    for (int d = 1; d <= 3; ++d)
        for (const Weight& lam : dominant_weights(d + 1, 0, 4))
            CHECK(weyl_dim(lam) == gt_pattern_count(lam));
    // shift invariance of the count
    CHECK(gt_pattern_count(W({0, -1, -2})) == weyl_dim(W({2, 1, 0})));
}
