#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "bggcoh/weights.hpp"

namespace bggcoh::steinberg {

using weights::Weight;

/// Composition of d+1 into positive parts; labels a standard parabolic.
struct Composition {
    std::vector<int> parts;

    explicit Composition(std::vector<int> p);
    int sum() const;
    int num_parts() const { return static_cast<int>(parts.size()); }
    std::string str() const;  // "(2,1,1)"
    bool operator==(const Composition& rhs) const { return parts == rhs.parts; }
    bool operator<(const Composition& rhs) const { return parts < rhs.parts; }
};

/// Polynomial in q with integer coefficients, exact arithmetic throughout.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<mpz_class> coeffs);  // coeffs[e] = coeff of q^e
    static QPolynomial constant(long c);
    static QPolynomial monomial(int degree);  // q^degree

    int degree() const;  // -1 for the zero polynomial
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    mpz_class coeff(int e) const;

    QPolynomial operator+(const QPolynomial& rhs) const;
    QPolynomial operator-(const QPolynomial& rhs) const;
    QPolynomial operator*(const QPolynomial& rhs) const;
    bool operator==(const QPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

    mpz_class eval(const mpz_class& q) const;
    bool nonnegative_coeffs() const;
    std::string str() const;  // "q^3 + 2q + 1"

private:
    std::vector<mpz_class> coeffs_;
    void trim();
};

/// Gaussian binomial [n choose k]_q; memoized behind a concurrent-read cache.
QPolynomial q_binomial(int n, int k);

/// F_q-point count of the partial flag variety of type c (the Gaussian
/// multinomial).
QPolynomial flag_count(const Composition& c);

/// Compositions obtained from c by merging adjacent parts (the standard
/// parabolics containing P_c), including c itself.
std::vector<Composition> coarsenings(const Composition& c);

/// Dimension polynomial of the generalized Steinberg representation of
/// GL_n(F_q) attached to P_c: the inclusion-exclusion
/// sum over coarsenings c' of (-1)^{parts(c) - parts(c')} flag_count(c').
QPolynomial gen_steinberg_dim(const Composition& c);

/// Composition (d+1-i, 1, ..., 1) labelling the degree-i row.
Composition row_composition(int d, int i);

/// Per-degree output table: parabolic labels, dim V(lambda), and the
/// F_q dimension polynomial of the same-named generalized Steinberg
/// representation.  The q-dimension column is a finite-field size analog of
/// the p-adic representation, and serialized tables say so.
struct SteinbergTable {
    int d = 0;
    Weight lambda;
    struct Row {
        int degree;
        Composition parabolic;
        mpz_class dim_v;
        QPolynomial q_dim;
    };
    std::vector<Row> rows;
    static constexpr const char* kAnalogFlag = "finite-field";
};

SteinbergTable cohomology_table(const Weight& lambda, int d);

}  // namespace bggcoh::steinberg
