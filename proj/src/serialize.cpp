#include "bggcoh/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace bggcoh::serialize {

using nlohmann::json;

json mpz_to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json to_json(const weights::Weight& w) { return json(w.entries()); }

json to_json(const steinberg::QPolynomial& p) {
    json coeffs = json::array();
    for (const mpz_class& c : p.coeffs()) coeffs.push_back(mpz_to_json(c));
    return json{{"coeffs", coeffs}, {"str", p.str()}};
}

json to_json(const bwb::CohomologyProfile& profile) {
    json entries = json::array();
    for (const auto& [deg, e] : profile.entries) {
        json row{{"degree", deg}, {"dim", mpz_to_json(e.dim)}};
        if (e.highest_weight) row["highest_weight"] = to_json(*e.highest_weight);
        entries.push_back(row);
    }
    return json{{"schema", kSchema}, {"kind", "cohomology_profile"}, {"entries", entries}};
}

json to_json(const bwb::BggComplexData& data) {
    json terms = json::array();
    for (const auto& t : data.terms) {
        terms.push_back(json{{"w", t.w.str()},
                             {"length", t.w.length()},
                             {"weight", to_json(t.weight)},
                             {"l_dominant", t.l_dominant},
                             {"profile", to_json(t.profile)["entries"]}});
    }
    return json{{"schema", kSchema},
                {"kind", "bgg_complex"},
                {"lambda", to_json(data.lambda)},
                {"d", data.d},
                {"terms", terms}};
}

json to_json(const cech::GradedDimensionTable& table) {
    json entries = json::array();
    for (const auto& [key, dim] : table.dims)
        entries.push_back(json{{"degree", key.first}, {"multidegree", key.second}, {"dim", dim}});
    json hdr{{"d", table.d},     {"p", table.p},           {"k", table.k},
             {"window", table.window}, {"operation", table.operation}};
    if (table.j >= 0) hdr["j"] = table.j;
    return json{{"schema", kSchema},
                {"kind", "graded_dimension_table"},
                {"header", hdr},
                {"entries", entries}};
}

json to_json(const steinberg::SteinbergTable& table) {
    json rows = json::array();
    for (const auto& r : table.rows) {
        rows.push_back(json{{"degree", r.degree},
                            {"parabolic", r.parabolic.parts},
                            {"dim_V", mpz_to_json(r.dim_v)},
                            {"q_dim", to_json(r.q_dim)}});
    }
    return json{{"schema", kSchema},
                {"kind", "steinberg_table"},
                {"analog", steinberg::SteinbergTable::kAnalogFlag},
                {"d", table.d},
                {"lambda", to_json(table.lambda)},
                {"rows", rows}};
}

json to_json(const homology::SpectralPage& page) {
    json entries = json::array();
    for (const auto& [pq, dim] : page.dims)
        entries.push_back(json{{"p", pq.first}, {"q", pq.second}, {"r", page.r}, {"dim", dim}});
    json ranks = json::array();
    for (const auto& [pq, rk] : page.diff_ranks)
        ranks.push_back(json{{"p", pq.first}, {"q", pq.second}, {"rank", rk}});
    return json{{"schema", kSchema},
                {"kind", "spectral_page"},
                {"r", page.r},
                {"entries", entries},
                {"diff_ranks", ranks}};
}

json to_json(const homology::DeRhamReport& report) {
    json support = json::array();
    for (const auto& [m, dims] : report.support)
        support.push_back(json{{"multidegree", m}, {"dims", dims}});
    return json{{"schema", kSchema},
                {"kind", "de_rham_of_V"},
                {"d", report.d},
                {"j", report.j},
                {"window", report.window},
                {"total_dims", report.total_dims},
                {"support", support},
                {"supported_at_zero_only", report.supported_at_zero_only}};
}

json to_json(const homology::AcyclicityReport& report) {
    json failures = json::array();
    for (const auto& [spot, m] : report.failures)
        failures.push_back(json{{"spot", spot}, {"multidegree", m}});
    return json{{"schema", kSchema},
                {"kind", "acyclicity_report"},
                {"d", report.d},
                {"j", report.j},
                {"window", report.window},
                {"acyclic", report.acyclic},
                {"failures", failures},
                {"intermediate_cohomology", report.intermediate_cohomology},
                {"intermediate_at_zero", report.intermediate_at_zero}};
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

namespace {

std::string join_ints(const std::vector<int>& v, char sep = ' ') {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? std::string(1, sep) : "") << v[i];
    return os.str();
}

}  // namespace

std::string to_csv(const bwb::CohomologyProfile& profile) {
    std::ostringstream os;
    os << "degree,dim,highest_weight\n";
    for (const auto& [deg, e] : profile.entries) {
        os << deg << ',' << e.dim.get_str() << ',';
        if (e.highest_weight) os << join_ints(e.highest_weight->entries());
        os << '\n';
    }
    return os.str();
}

std::string to_csv(const bwb::BggComplexData& data) {
    std::ostringstream os;
    os << "i,w,length,weight,degree,dim\n";
    int i = 0;
    for (const auto& t : data.terms) {
        for (const auto& [deg, e] : t.profile.entries)
            os << i << ',' << t.w.str() << ',' << t.w.length() << ','
               << join_ints(t.weight.entries()) << ',' << deg << ',' << e.dim.get_str() << '\n';
        ++i;
    }
    return os.str();
}

std::string to_csv(const cech::GradedDimensionTable& table) {
    std::ostringstream os;
    os << "d,j,p,k,window,coh_degree";
    for (int c = 0; c <= table.d; ++c) os << ",m" << c;
    os << ",dim\n";
    for (const auto& [key, dim] : table.dims) {
        os << table.d << ',' << table.j << ',' << table.p << ',' << table.k << ','
           << table.window << ',' << key.first;
        for (int v : key.second) os << ',' << v;
        os << ',' << dim << '\n';
    }
    return os.str();
}

std::string to_csv(const steinberg::SteinbergTable& table) {
    std::ostringstream os;
    os << "d,lambda,degree,parabolic,dim_V,q_dim,analog\n";
    for (const auto& r : table.rows)
        os << table.d << ',' << join_ints(table.lambda.entries()) << ',' << r.degree << ','
           << join_ints(r.parabolic.parts) << ',' << r.dim_v.get_str() << ',' << r.q_dim.str()
           << ',' << steinberg::SteinbergTable::kAnalogFlag << '\n';
    return os.str();
}

std::string to_csv(const homology::DeRhamReport& report) {
    std::ostringstream os;
    os << "d,j,window,degree,total_dim\n";
    for (std::size_t n = 0; n < report.total_dims.size(); ++n)
        os << report.d << ',' << report.j << ',' << report.window << ',' << n << ','
           << report.total_dims[n] << '\n';
    return os.str();
}

std::string to_csv(const homology::AcyclicityReport& report) {
    std::ostringstream os;
    os << "d,j,window,result,spot,multidegree\n";
    if (report.failures.empty())
        os << report.d << ',' << report.j << ',' << report.window << ",PASS,,\n";
    for (const auto& [spot, m] : report.failures)
        os << report.d << ',' << report.j << ',' << report.window << ",FAIL," << spot << ','
           << join_ints(m) << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// text
// ---------------------------------------------------------------------------

std::string to_text(const bwb::CohomologyProfile& profile) {
    if (profile.is_zero()) return "all cohomology vanishes\n";
    std::ostringstream os;
    for (const auto& [deg, e] : profile.entries) {
        os << "H^" << deg << ": dim " << e.dim.get_str();
        if (e.highest_weight) os << "  highest weight " << e.highest_weight->str();
        os << '\n';
    }
    return os.str();
}

std::string to_text(const bwb::BggComplexData& data) {
    std::ostringstream os;
    os << "dual BGG complex for lambda = " << data.lambda.str() << ", d = " << data.d << '\n';
    int i = 0;
    for (const auto& t : data.terms) {
        os << "  i=" << i++ << "  w=" << t.w.str() << " (length " << t.w.length() << ")  weight "
           << t.weight.str() << "  H^" << t.profile.support_degree() << " dim "
           << t.profile.entries.begin()->second.dim.get_str() << '\n';
    }
    return os.str();
}

std::string to_text(const cech::GradedDimensionTable& table) {
    std::ostringstream os;
    os << table.operation << "  d=" << table.d;
    if (table.j >= 0) os << " j=" << table.j;
    os << " p=" << table.p << " k=" << table.k << " window=" << table.window << '\n';
    if (table.dims.empty()) {
        os << "  (all windowed dimensions vanish)\n";
        return os.str();
    }
    for (const auto& [key, dim] : table.dims) {
        os << "  H^" << key.first << " at (";
        for (std::size_t c = 0; c < key.second.size(); ++c)
            os << (c ? "," : "") << key.second[c];
        os << "): " << dim << '\n';
    }
    int top = table.max_degree();
    os << "  totals:";
    for (int degv = 0; degv <= top; ++degv) os << ' ' << table.total(degv);
    os << '\n';
    return os.str();
}

std::string to_text(const steinberg::SteinbergTable& table) {
    std::ostringstream os;
    os << "cohomology table (finite-field analog)  d=" << table.d
       << "  lambda=" << table.lambda.str() << '\n';
    for (const auto& r : table.rows)
        os << "  degree " << r.degree << "  P_" << r.parabolic.str() << "  dim V(lambda) = "
           << r.dim_v.get_str() << "  q-dim = " << r.q_dim.str() << '\n';
    return os.str();
}

std::string to_text(const homology::DeRhamReport& report) {
    std::ostringstream os;
    os << "de Rham cohomology of V = P^" << report.d << " - P^" << report.j
       << "  (window " << report.window << ")\n  total dims:";
    for (long v : report.total_dims) os << ' ' << v;
    os << "\n  supported at multidegree 0 only: "
       << (report.supported_at_zero_only ? "yes" : "no") << '\n';
    return os.str();
}

std::string to_text(const homology::AcyclicityReport& report) {
    std::ostringstream os;
    os << "reduced-module complex  d=" << report.d << " j=" << report.j << " window="
       << report.window << '\n';
    os << "  acyclicity: " << (report.acyclic ? "PASS" : "FAIL") << '\n';
    for (const auto& [spot, m] : report.failures) {
        os << "    nonzero cohomology at spot " << spot << ", multidegree (";
        for (std::size_t c = 0; c < m.size(); ++c) os << (c ? "," : "") << m[c];
        os << ")\n";
    }
    os << "  intermediate complex cohomology:";
    for (long v : report.intermediate_cohomology) os << ' ' << v;
    os << "\n  intermediate dim at multidegree 0, spot " << (report.d - report.j - 1) << ": "
       << report.intermediate_at_zero << '\n';
    return os.str();
}

std::string render_page_text(const homology::SpectralPage& page) {
    if (page.dims.empty()) return "(empty page)\n";
    int pmin = 0, pmax = 0, qmin = 0, qmax = 0;
    bool first = true;
    for (const auto& [pq, dim] : page.dims) {
        if (first) {
            pmin = pmax = pq.first;
            qmin = qmax = pq.second;
            first = false;
        }
        pmin = std::min(pmin, pq.first);
        pmax = std::max(pmax, pq.first);
        qmin = std::min(qmin, pq.second);
        qmax = std::max(qmax, pq.second);
    }
    std::ostringstream os;
    os << "E_" << page.r << " page (rows q, columns p)\n";
    for (int q = qmax; q >= qmin; --q) {
        os << "  q=" << q << " |";
        for (int p = pmin; p <= pmax; ++p) {
            std::ostringstream cell;
            cell << page.dim(p, q);
            std::string s = cell.str();
            os << std::string(5 - std::min<std::size_t>(4, s.size()), ' ') << s;
        }
        os << '\n';
    }
    os << "       +";
    for (int p = pmin; p <= pmax; ++p) os << "-----";
    os << "\n        ";
    for (int p = pmin; p <= pmax; ++p) {
        std::ostringstream cell;
        cell << "p=" << p;
        std::string s = cell.str();
        os << std::string(5 - std::min<std::size_t>(4, s.size()), ' ') << s;
    }
    os << '\n';
    return os.str();
}

}  // namespace bggcoh::serialize
