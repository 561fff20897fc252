#pragma once

// Randomized filtered complexes with cohomology known by construction:
// direct sums of one-spot pieces (contributing 1 to H^n) and two-spot pieces
// with a nonzero transition (acyclic), scrambled by a unimodular change of
// basis per degree.  Each piece carries a filtration level; level-p spans are
// subcomplexes because pieces never mix.

#include <random>
#include <vector>

#include "bggcoh/homology.hpp"

namespace bggcoh::testsupport {

using exactla::Rat;
using exactla::SparseMatrixQ;
using homology::BasisIndexedSpace;
using homology::ChainComplex;
using homology::FilteredComplex;

struct RandomFiltered {
    FilteredComplex fc;
    std::vector<long> expected_cohomology;
};

inline SparseMatrixQ random_unimodular(int n, std::mt19937_64& rng) {
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    std::uniform_int_distribution<int> idx(0, n - 1), val(-2, 2);
    for (int step = 0; step < 2 * n; ++step) {
        int a = idx(rng), b = idx(rng);
        if (a == b) continue;
        int c = val(rng);
        if (c == 0) c = 1;
        for (int k = 0; k < n; ++k) m[a][k] += Rat(c) * m[b][k];
    }
    std::vector<SparseMatrixQ::Entry> es;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (m[i][k] != 0) es.push_back({i, k, m[i][k]});
    return SparseMatrixQ(n, n, std::move(es));
}

inline RandomFiltered random_filtered_complex(std::mt19937_64& rng) {
    const int degrees = 4;  // spots 0..3
    std::uniform_int_distribution<int> nlevels(1, 3);
    std::uniform_int_distribution<int> npieces(2, 6);
    std::uniform_int_distribution<int> piece_kind(0, 2);
    std::uniform_int_distribution<int> start_deg(0, degrees - 1);
    std::uniform_int_distribution<int> mult(1, 3);

    int levels = nlevels(rng);
    std::uniform_int_distribution<int> level_of(0, levels - 1);

    struct Piece {
        int deg;
        int level;
        int span;  // 1 = single spot, 2 = acyclic pair
        int factor;
    };
    std::vector<Piece> pieces;
    int count = npieces(rng);
    for (int i = 0; i < count; ++i) {
        int deg = start_deg(rng);
        int span = piece_kind(rng) == 0 ? 1 : 2;
        if (deg == degrees - 1) span = 1;
        pieces.push_back({deg, level_of(rng), span, mult(rng)});
    }

    std::vector<int> dim(degrees, 0);
    std::vector<long> expected(degrees, 0);
    struct Slot {
        int piece;
        int end;  // 0 = source spot, 1 = target spot
        int index_in_degree;
    };
    std::vector<std::vector<Slot>> slots(degrees);
    for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
        const Piece& pc = pieces[pi];
        slots[pc.deg].push_back({static_cast<int>(pi), 0, dim[pc.deg]});
        dim[pc.deg]++;
        if (pc.span == 2) {
            slots[pc.deg + 1].push_back({static_cast<int>(pi), 1, dim[pc.deg + 1]});
            dim[pc.deg + 1]++;
        } else {
            expected[pc.deg]++;
        }
    }

    // standard-basis complex
    std::vector<SparseMatrixQ> diffs;
    for (int n = 0; n + 1 < degrees; ++n) {
        std::vector<SparseMatrixQ::Entry> es;
        for (const Slot& s : slots[n]) {
            const Piece& pc = pieces[s.piece];
            if (pc.span == 2 && s.end == 0) {
                for (const Slot& t : slots[n + 1])
                    if (t.piece == s.piece && t.end == 1)
                        es.push_back({t.index_in_degree, s.index_in_degree, Rat(pc.factor)});
            }
        }
        diffs.emplace_back(dim[n + 1], dim[n], std::move(es));
    }

    // filtration in the standard basis: level-p span = pieces with level >= p
    std::vector<std::vector<SparseMatrixQ>> filt(levels);
    for (int p = 0; p < levels; ++p) {
        for (int n = 0; n < degrees; ++n) {
            std::vector<SparseMatrixQ::Entry> es;
            int col = 0;
            for (const Slot& s : slots[n])
                if (pieces[s.piece].level >= p) es.push_back({s.index_in_degree, col++, Rat(1)});
            filt[p].emplace_back(dim[n], col, std::move(es));
        }
    }

    // scramble by unimodular changes of basis
    std::vector<SparseMatrixQ> S;
    for (int n = 0; n < degrees; ++n) S.push_back(random_unimodular(dim[n], rng));
    std::vector<SparseMatrixQ> Sinv;
    for (int n = 0; n < degrees; ++n) {
        auto inv = exactla::solve_matrix(S[n], SparseMatrixQ::identity(dim[n]));
        Sinv.push_back(*inv);
    }
    std::vector<BasisIndexedSpace> spaces;
    for (int n = 0; n < degrees; ++n) {
        std::vector<std::string> labels;
        for (int i = 0; i < dim[n]; ++i)
            labels.push_back("n" + std::to_string(n) + ":e" + std::to_string(i));
        spaces.emplace_back(std::move(labels));
    }
    std::vector<SparseMatrixQ> sdiffs;
    for (int n = 0; n + 1 < degrees; ++n) sdiffs.push_back(S[n + 1] * diffs[n] * Sinv[n]);
    for (int p = 0; p < levels; ++p)
        for (int n = 0; n < degrees; ++n) filt[p][n] = S[n] * filt[p][n];

    ChainComplex complex(std::move(spaces), std::move(sdiffs));
    return RandomFiltered{FilteredComplex(std::move(complex), std::move(filt)),
                          std::move(expected)};
}

}  // namespace bggcoh::testsupport
