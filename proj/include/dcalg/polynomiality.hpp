#pragma once

#include "dcalg/family.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dcalg {

// Exact-coefficient polynomial, ascending degree, no trailing zeros.
class RationalPolynomial {
  public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coef);

    static RationalPolynomial interpolate(const std::vector<std::pair<int, Rational>>& points);

    const std::vector<Rational>& coefficients() const { return coef_; }
    int degree() const { return static_cast<int>(coef_.size()) - 1; }  // -1 for zero
    Rational eval(long n) const;
    bool nonnegative_coefficients() const;
    std::string str() const;

    bool operator==(const RationalPolynomial&) const = default;

  private:
    std::vector<Rational> coef_;
};

enum class SeriesSource { BruteForce, Theorem, Auto };

// Structure-coefficient values across n for proper labels; Auto uses brute
// force up to the family's practical cap and the closed form beyond it.
std::vector<std::pair<int, Rational>> coefficient_series(FamilyKind kind, const ClassLabel& l1,
                                                         const ClassLabel& l2, const ClassLabel& l3,
                                                         int n_lo, int n_hi,
                                                         SeriesSource source = SeriesSource::Auto,
                                                         int threads = 1);

int brute_force_cap(FamilyKind kind);

// Family normalization applied before fitting.
Rational normalized_value(FamilyKind kind, const ClassLabel& l1, const ClassLabel& l2,
                          const ClassLabel& l3, int n, const Rational& raw);

// Degree bound asserted by the per-family polynomiality statements.
int corollary_degree_bound(FamilyKind kind, const ClassLabel& l1, const ClassLabel& l2,
                           const ClassLabel& l3);

bool nonneg_coefficients_required(FamilyKind kind);

// Coefficients of p in the triangular basis 1, (n-r), (n-r)(n-r-1), ... —
// the shape the summation produces, where the sign statements live.
std::vector<Rational> falling_basis_coefficients(const RationalPolynomial& p, int r);

// Smallest n at which all three padded labels exist and the summation range is
// n-independent.
int series_start(FamilyKind kind, const ClassLabel& l1, const ClassLabel& l2,
                 const ClassLabel& l3);

struct PolyCertificate {
    FamilyKind family;
    std::string left, right, target;  // proper-label grammar
    std::string normalization;
    RationalPolynomial poly;
    std::vector<std::pair<int, Rational>> fit_points;
    std::vector<std::pair<int, Rational>> holdout_points;
    int degree_bound = 0;
    bool nonneg_required = false;
    bool pass = false;
    std::string note;
};

PolyCertificate verify_polynomiality(FamilyKind kind, const ClassLabel& l1, const ClassLabel& l2,
                                     const ClassLabel& l3, int degree_bound, int fit_lo,
                                     int fit_hi, int hold_lo, int hold_hi,
                                     SeriesSource source = SeriesSource::Auto, int threads = 1);

// Convenience: fit range sized from the corollary bound, two holdout points.
PolyCertificate verify_polynomiality_auto(FamilyKind kind, const ClassLabel& l1,
                                          const ClassLabel& l2, const ClassLabel& l3,
                                          int holdouts = 2, SeriesSource source = SeriesSource::Auto,
                                          int threads = 1);

}  // namespace dcalg
