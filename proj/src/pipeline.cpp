#include "bggcoh/pipeline.hpp"

#include <algorithm>
#include <exception>
#include <mutex>

#include "bggcoh/parallel.hpp"

namespace bggcoh::homology {

using cech::Cover;
using cech::Multidegree;
using cech::Window;

namespace {

bool is_zero_multidegree(const Multidegree& m) {
    return std::all_of(m.begin(), m.end(), [](int v) { return v == 0; });
}

template <typename Answer, typename Compute>
std::vector<Answer> for_each_multidegree(const std::vector<Multidegree>& ms, int threads,
                                         Compute&& compute) {
    std::vector<Answer> answers(ms.size());
    std::exception_ptr err;
    std::mutex err_mutex;
    parallel_for(ms.size(), threads, [&](std::size_t i) {
        try {
            answers[i] = compute(ms[i]);
        } catch (...) {
            std::lock_guard lock(err_mutex);
            if (!err) err = std::current_exception();
        }
    });
    if (err) std::rethrow_exception(err);
    return answers;
}

std::string mstr(const Multidegree& m) {
    std::string s = "(";
    for (std::size_t i = 0; i < m.size(); ++i)
        s += (i ? "," : "") + std::to_string(m[i]);
    return s + ")";
}

}  // namespace

DeRhamReport de_rham_of_V(int d, int j, Window w, int threads) {
    if (d < 1 || j < 0 || j > d - 1) throw InvalidInput("de_rham_of_V: need 0 <= j <= d-1");
    Cover cover = Cover::complement_cover(d, j);
    auto ms = cech::window_multidegrees(d, 0, w.bound);

    auto dims = for_each_multidegree<std::vector<long>>(ms, threads, [&](const Multidegree& m) {
        return total_complex(cech::cech_de_rham_grid(cover, m)).cohomology_dims();
    });

    DeRhamReport report;
    report.d = d;
    report.j = j;
    report.window = w.bound;
    report.total_dims.assign(static_cast<std::size_t>(cover.size() - 1 + d) + 1, 0);
    for (std::size_t i = 0; i < ms.size(); ++i) {
        bool nonzero = std::any_of(dims[i].begin(), dims[i].end(), [](long v) { return v != 0; });
        for (std::size_t n = 0; n < dims[i].size(); ++n) report.total_dims[n] += dims[i][n];
        if (nonzero) {
            report.support.emplace(ms[i], dims[i]);
            if (!is_zero_multidegree(ms[i])) report.supported_at_zero_only = false;
        }
    }

    // H*_dR(V): one dimension in each even degree 0, 2, ..., 2(d-j-1)
    for (std::size_t n = 0; n < report.total_dims.size(); ++n) {
        long expect = (n % 2 == 0 && static_cast<int>(n) <= 2 * (d - j - 1)) ? 1 : 0;
        if (report.total_dims[n] != expect)
            throw MathAssertionError("de_rham_of_V: degree " + std::to_string(n) + " has dim " +
                                     std::to_string(report.total_dims[n]) + ", expected " +
                                     std::to_string(expect) +
                                     " (bug or window too small; window=" +
                                     std::to_string(w.bound) + ")");
    }
    if (!report.supported_at_zero_only) {
        std::string bad;
        for (const auto& [m, dims_m] : report.support)
            if (!is_zero_multidegree(m)) {
                bad = mstr(m);
                break;
            }
        throw MathAssertionError("de_rham_of_V: cohomology supported away from multidegree 0, e.g. at " + bad);
    }
    return report;
}

AcyclicityReport proposition_acyclicity(int d, int j, Window w, int threads) {
    if (d < 1 || j < 0 || j > d - 1)
        throw InvalidInput("proposition_acyclicity: need 0 <= j <= d-1");
    auto ms = cech::window_multidegrees(d, 0, w.bound);

    struct PerM {
        std::vector<long> reduced;       // cohomology of the tilde complex, p = 0..d
        std::vector<long> intermediate;  // cohomology of H^{d-j-1}(V, Omega^.)
    };
    auto answers = for_each_multidegree<PerM>(ms, threads, [&](const Multidegree& m) {
        cech::TildeComplexData data = cech::tilde_complex_data(d, j, m);
        PerM out;
        out.reduced =
            subquotient_complex(data.Z, data.U_full, data.D, "tilde:").cohomology_dims();
        out.intermediate =
            subquotient_complex(data.Z, data.U_inner, data.D, "hV:").cohomology_dims();
        return out;
    });

    AcyclicityReport report;
    report.d = d;
    report.j = j;
    report.window = w.bound;
    report.intermediate_cohomology.assign(d + 1, 0);
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (int p = 0; p <= d; ++p) {
            if (answers[i].reduced[p] != 0) {
                report.acyclic = false;
                report.failures.emplace_back(p, ms[i]);
            }
            report.intermediate_cohomology[p] += answers[i].intermediate[p];
        }
        if (is_zero_multidegree(ms[i]))
            report.intermediate_at_zero = answers[i].intermediate[d - j - 1];
    }
    return report;
}

}  // namespace bggcoh::homology
