#include "bggcoh/steinberg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace bggcoh::steinberg {

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw InvalidInput("Composition: no parts");
    for (int v : parts)
        if (v < 1) throw InvalidInput("Composition: parts must be positive");
}

int Composition::sum() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
}

std::string Composition::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ')';
    return os.str();
}

QPolynomial::QPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial QPolynomial::constant(long c) {
    return QPolynomial(std::vector<mpz_class>{mpz_class(c)});
}

QPolynomial QPolynomial::monomial(int degree) {
    if (degree < 0) throw InvalidInput("QPolynomial::monomial: negative degree");
    std::vector<mpz_class> c(degree + 1, mpz_class(0));
    c.back() = 1;
    return QPolynomial(std::move(c));
}

int QPolynomial::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

mpz_class QPolynomial::coeff(int e) const {
    if (e < 0 || e >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[e];
}

QPolynomial QPolynomial::operator+(const QPolynomial& rhs) const {
    std::vector<mpz_class> c(std::max(coeffs_.size(), rhs.coeffs_.size()), mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] += rhs.coeffs_[i];
    return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator-(const QPolynomial& rhs) const {
    std::vector<mpz_class> c(std::max(coeffs_.size(), rhs.coeffs_.size()), mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] -= rhs.coeffs_[i];
    return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator*(const QPolynomial& rhs) const {
    if (coeffs_.empty() || rhs.coeffs_.empty()) return QPolynomial();
    std::vector<mpz_class> c(coeffs_.size() + rhs.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return QPolynomial(std::move(c));
}

mpz_class QPolynomial::eval(const mpz_class& q) const {
    mpz_class v = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * q + *it;
    return v;
}

bool QPolynomial::nonnegative_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const mpz_class& c) { return c >= 0; });
}

std::string QPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        const mpz_class& c = coeffs_[e];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << '-';
        mpz_class a = abs(c);
        if (a != 1 || e == 0) os << a.get_str();
        if (e >= 1) os << 'q';
        if (e >= 2) os << '^' << e;
        first = false;
    }
    return os.str();
}

namespace {

std::shared_mutex g_qbin_mutex;
std::map<std::pair<int, int>, QPolynomial> g_qbin_cache;

QPolynomial q_binomial_uncached(int n, int k) {
    if (k < 0 || k > n) return QPolynomial();
    if (k == 0 || k == n) return QPolynomial::constant(1);
    // Pascal: [n,k]_q = [n-1,k-1]_q + q^k [n-1,k]_q
    return q_binomial(n - 1, k - 1) + QPolynomial::monomial(k) * q_binomial(n - 1, k);
}

}  // namespace

QPolynomial q_binomial(int n, int k) {
    if (n < 0) throw InvalidInput("q_binomial: n must be nonnegative");
    auto key = std::make_pair(n, k);
    {
        std::shared_lock lock(g_qbin_mutex);
        auto it = g_qbin_cache.find(key);
        if (it != g_qbin_cache.end()) return it->second;
    }
    QPolynomial v = q_binomial_uncached(n, k);
    std::unique_lock lock(g_qbin_mutex);
    return g_qbin_cache.emplace(key, std::move(v)).first->second;
}

QPolynomial flag_count(const Composition& c) {
    QPolynomial out = QPolynomial::constant(1);
    int rest = c.sum();
    for (int part : c.parts) {
        out = out * q_binomial(rest, part);
        rest -= part;
    }
    return out;
}

std::vector<Composition> coarsenings(const Composition& c) {
    int r = c.num_parts();
    std::vector<Composition> out;
    // keep or drop each of the r-1 dividers between adjacent parts
    for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
        std::vector<int> parts;
        int acc = c.parts[0];
        for (int i = 0; i + 1 < r; ++i) {
            if (mask & (1u << i)) {
                parts.push_back(acc);
                acc = c.parts[i + 1];
            } else {
                acc += c.parts[i + 1];
            }
        }
        parts.push_back(acc);
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

QPolynomial gen_steinberg_dim(const Composition& c) {
    QPolynomial out;
    for (const Composition& cc : coarsenings(c)) {
        QPolynomial term = flag_count(cc);
        int sign_exp = c.num_parts() - cc.num_parts();
        out = (sign_exp % 2 == 0) ? out + term : out - term;
    }
    return out;
}

Composition row_composition(int d, int i) {
    if (i < 0 || i > d) throw InvalidInput("row_composition: need 0 <= i <= d");
    std::vector<int> parts{d + 1 - i};
    for (int t = 0; t < i; ++t) parts.push_back(1);
    return Composition(std::move(parts));
}

SteinbergTable cohomology_table(const Weight& lambda, int d) {
    if (lambda.rank() != d + 1)
        throw InvalidInput("cohomology_table: weight rank must be d+1");
    if (!weights::is_dominant(lambda))
        throw InvalidInput("cohomology_table: weight is not dominant");
    SteinbergTable table{d, lambda, {}};
    mpz_class dim_v = weights::weyl_dim(lambda);
    for (int i = 0; i <= d; ++i)
        table.rows.push_back({i, row_composition(d, i), dim_v,
                              gen_steinberg_dim(row_composition(d, i))});
    return table;
}

}  // namespace bggcoh::steinberg
