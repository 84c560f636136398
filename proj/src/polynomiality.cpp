#include "dcalg/polynomiality.hpp"

#include "dcalg/formal_sum.hpp"
#include "dcalg/structure_formula.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace dcalg {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coef) : coef_(std::move(coef)) {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

RationalPolynomial RationalPolynomial::interpolate(
    const std::vector<std::pair<int, Rational>>& points) {
    std::set<int> xs;
    for (const auto& [x, y] : points)
        if (!xs.insert(x).second) throw std::invalid_argument("interpolate: duplicate abscissa");
    size_t npts = points.size();
    if (npts == 0) return RationalPolynomial{};

    // Newton divided differences, then expansion into monomial coefficients.
    std::vector<Rational> dd(npts);
    for (size_t i = 0; i < npts; ++i) dd[i] = points[i].second;
    for (size_t level = 1; level < npts; ++level)
        for (size_t i = npts - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i].first - points[i - level].first);
            if (i == level) break;
        }
    std::vector<Rational> coef{};  // running polynomial, ascending
    std::vector<Rational> basis{1};  // prod (x - x_j), ascending
    for (size_t i = 0; i < npts; ++i) {
        if (coef.size() < basis.size()) coef.resize(basis.size(), 0);
        for (size_t j = 0; j < basis.size(); ++j) coef[j] += dd[i] * basis[j];
        // basis *= (x - x_i)
        basis.insert(basis.begin(), 0);
        for (size_t j = 0; j + 1 < basis.size(); ++j)
            basis[j] -= Rational(points[i].first) * basis[j + 1];
    }
    return RationalPolynomial(std::move(coef));
}

Rational RationalPolynomial::eval(long n) const {
    Rational acc = 0;
    for (size_t j = coef_.size(); j-- > 0;) acc = acc * n + coef_[j];
    return acc;
}

bool RationalPolynomial::nonnegative_coefficients() const {
    for (const auto& c : coef_)
        if (c < 0) return false;
    return true;
}

std::string RationalPolynomial::str() const {
    if (coef_.empty()) return "0";
    std::string s;
    for (size_t j = coef_.size(); j-- > 0;) {
        if (coef_[j] == 0) continue;
        if (!s.empty()) s += " + ";
        s += rational_str(coef_[j]);
        if (j >= 1) s += "*n";
        if (j >= 2) s += "^" + std::to_string(j);
    }
    return s.empty() ? "0" : s;
}

int brute_force_cap(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::CenterSym: return 10;
        case FamilyKind::CenterHyp: return 9;
        case FamilyKind::Hecke: return 6;
        case FamilyKind::DiagPair: return 6;
        case FamilyKind::GLCenter: return 3;
    }
    return 3;
}

int series_start(FamilyKind kind, const ClassLabel& l1, const ClassLabel& l2,
                 const ClassLabel& l3) {
    // labels arrive in proper form; the summation range stabilizes at k1+k2,
    // so points below that are excluded from fitting
    auto big = Family::make(kind, 16);
    int a = big->k_of_class(big->pad_label(l1));
    int b = big->k_of_class(big->pad_label(l2));
    int c = big->k_of_class(big->pad_label(l3));
    return std::max({a + b, c, kind == FamilyKind::DiagPair ? 2 : 1});
}

namespace {

// Memo for the closed-form decompositions and brute-force passes: the
// certificate loops revisit the same operand pair for every target.
struct SeriesCache {
    std::mutex mu;
    std::map<std::string, std::map<ClassLabel, Rational>> entries;
};

std::map<ClassLabel, Rational>& cached_decomposition(FamilyKind kind, int n, const ClassLabel& l1,
                                                     const ClassLabel& l2, bool brute,
                                                     int threads) {
    static SeriesCache cache;
    std::string key = family_name(kind) + "/" + std::to_string(n) + "/" + label_str(l1) + "/" +
                      label_str(l2) + "/" + (brute ? "b" : "t");
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.entries.find(key);
    if (it != cache.entries.end()) return it->second;
    auto fam = Family::make(kind, n);
    ClassLabel a = fam->pad_label(l1), b = fam->pad_label(l2);
    std::map<ClassLabel, Rational> value;
    if (brute) {
        value = product_decomposition(fam, a, b, threads);
    } else {
        for (auto& [label, bd] : theorem_decomposition(fam, a, b)) value.emplace(label, bd.total);
    }
    return cache.entries.emplace(key, std::move(value)).first->second;
}

}  // namespace

std::vector<std::pair<int, Rational>> coefficient_series(FamilyKind kind, const ClassLabel& l1,
                                                         const ClassLabel& l2, const ClassLabel& l3,
                                                         int n_lo, int n_hi, SeriesSource source,
                                                         int threads) {
    std::vector<std::pair<int, Rational>> out;
    ClassLabel p1 = l1, p2 = l2;
    for (int n = n_lo; n <= n_hi; ++n) {
        auto fam = Family::make(kind, n);
        ClassLabel c = fam->pad_label(l3);
        bool brute = source == SeriesSource::BruteForce ||
                     (source == SeriesSource::Auto && n <= brute_force_cap(kind));
        const auto& dec = cached_decomposition(kind, n, fam->proper_label(fam->pad_label(p1)),
                                               fam->proper_label(fam->pad_label(p2)), brute,
                                               threads);
        auto it = dec.find(c);
        out.emplace_back(n, it == dec.end() ? Rational(0) : it->second);
    }
    return out;
}

Rational normalized_value(FamilyKind kind, const ClassLabel& l1, const ClassLabel& l2,
                          const ClassLabel& l3, int n, const Rational& raw) {
    (void)l3;
    switch (kind) {
        case FamilyKind::CenterSym:
        case FamilyKind::CenterHyp:
            return raw;
        case FamilyKind::Hecke:
            return raw / Rational(pow_int(2, n) * factorial(n));
        case FamilyKind::DiagPair: {
            const IndexedPair& ip1 = std::get<IPairLabel>(l1).ip;
            const IndexedPair& ip2 = std::get<IPairLabel>(l2).ip;
            Int prod = 1;
            for (int t = n - ip1.i - ip1.lambda.size(); t <= n - ip1.i; ++t) prod *= t;
            for (int t = n - ip2.i - ip2.lambda.size(); t <= n - ip2.i; ++t) prod *= t;
            return raw * Rational(prod, factorial(n - 1));
        }
        case FamilyKind::GLCenter:
            throw std::invalid_argument("no polynomiality normalization for the gl family");
    }
    throw std::logic_error("unreachable");
}

int corollary_degree_bound(FamilyKind kind, const ClassLabel& l1, const ClassLabel& l2,
                           const ClassLabel& l3) {
    switch (kind) {
        case FamilyKind::CenterSym:
        case FamilyKind::Hecke: {
            auto size_of = [](const ClassLabel& l) {
                if (auto* ct = std::get_if<CTLabel>(&l)) return ct->lam.size();
                return std::get<CosetLabel>(l).lam.size();
            };
            return size_of(l1) + size_of(l2) - size_of(l3);
        }
        case FamilyKind::CenterHyp: {
            auto size_of = [](const ClassLabel& l) {
                const PairPartition& t = std::get<BTypeLabel>(l).type;
                return t.lambda.size() + t.delta.size();
            };
            return size_of(l1) + size_of(l2) - size_of(l3);
        }
        case FamilyKind::DiagPair: {
            const IndexedPair& a = std::get<IPairLabel>(l1).ip;
            const IndexedPair& b = std::get<IPairLabel>(l2).ip;
            const IndexedPair& c = std::get<IPairLabel>(l3).ip;
            return a.i + a.lambda.size() + b.i + b.lambda.size() - c.i + 1;
        }
        case FamilyKind::GLCenter:
            throw std::invalid_argument("no polynomiality bound for the gl family");
    }
    throw std::logic_error("unreachable");
}

bool nonneg_coefficients_required(FamilyKind kind) {
    return kind == FamilyKind::CenterSym || kind == FamilyKind::CenterHyp;
}

std::vector<Rational> falling_basis_coefficients(const RationalPolynomial& p, int r) {
    // peel from the top: the degree-(k-r) basis element is monic of degree k-r
    std::vector<Rational> coef = p.coefficients();
    std::vector<Rational> out(coef.size(), 0);
    for (int d = static_cast<int>(coef.size()) - 1; d >= 0; --d) {
        Rational b = coef[d];
        out[d] = b;
        if (b == 0) continue;
        // subtract b * (n-r)(n-r-1)...(n-r-d+1), expanded
        std::vector<Rational> basis{1};
        for (int j = 0; j < d; ++j) {
            basis.insert(basis.begin(), 0);
            for (size_t i = 0; i + 1 < basis.size(); ++i)
                basis[i] -= Rational(r + j) * basis[i + 1];
        }
        for (size_t i = 0; i < basis.size(); ++i) coef[i] -= b * basis[i];
    }
    return out;
}

namespace {

std::string normalization_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::CenterSym:
        case FamilyKind::CenterHyp: return "identity";
        case FamilyKind::Hecke: return "divide by 2^n n!";
        case FamilyKind::DiagPair: return "falling-factorial quotient over (n-1)!";
        default: return "none";
    }
}

}  // namespace

PolyCertificate verify_polynomiality(FamilyKind kind, const ClassLabel& l1, const ClassLabel& l2,
                                     const ClassLabel& l3, int degree_bound, int fit_lo,
                                     int fit_hi, int hold_lo, int hold_hi, SeriesSource source,
                                     int threads) {
    PolyCertificate cert;
    cert.family = kind;
    cert.left = label_str(l1);
    cert.right = label_str(l2);
    cert.target = label_str(l3);
    cert.normalization = normalization_name(kind);
    cert.degree_bound = degree_bound;
    cert.nonneg_required = nonneg_coefficients_required(kind);

    auto raw = coefficient_series(kind, l1, l2, l3, fit_lo, hold_hi, source, threads);
    for (const auto& [n, v] : raw) {
        Rational nv = normalized_value(kind, l1, l2, l3, n, v);
        if (n <= fit_hi)
            cert.fit_points.emplace_back(n, nv);
        else if (n >= hold_lo)
            cert.holdout_points.emplace_back(n, nv);
    }
    cert.poly = RationalPolynomial::interpolate(cert.fit_points);

    bool ok = cert.poly.degree() <= degree_bound;
    if (!ok) cert.note = "fitted degree exceeds the bound";
    for (const auto& [n, v] : cert.holdout_points) {
        if (cert.poly.eval(n) != v) {
            ok = false;
            cert.note = "holdout point mismatch at n=" + std::to_string(n);
            break;
        }
    }
    if (ok && cert.nonneg_required) {
        // sign statements live in the triangular basis anchored at the
        // target's chain entry level
        int r = Family::make(kind, 16)->k_of_class(Family::make(kind, 16)->pad_label(l3));
        for (const auto& b : falling_basis_coefficients(cert.poly, r)) {
            if (b < 0) {
                ok = false;
                cert.note = "negative coefficient in the falling basis";
                break;
            }
            if (b == 0) cert.note = "zero coefficient present in the falling basis";
        }
    }
    cert.pass = ok;
    return cert;
}

PolyCertificate verify_polynomiality_auto(FamilyKind kind, const ClassLabel& l1,
                                          const ClassLabel& l2, const ClassLabel& l3, int holdouts,
                                          SeriesSource source, int threads) {
    int bound = corollary_degree_bound(kind, l1, l2, l3);
    int lo = series_start(kind, l1, l2, l3);
    int fit_hi = lo + std::max(bound, 0);
    return verify_polynomiality(kind, l1, l2, l3, bound, lo, fit_hi, fit_hi + 1,
                                fit_hi + holdouts, source, threads);
}

}  // namespace dcalg
