#include "dcalg/family.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace dcalg {

namespace {

const Perm& as_perm(const GroupElement& g) {
    if (auto* p = std::get_if<Perm>(&g)) return *p;
    throw std::invalid_argument("expected a permutation element");
}
const PermPair& as_pair(const GroupElement& g) {
    if (auto* p = std::get_if<PermPair>(&g)) return *p;
    throw std::invalid_argument("expected a permutation-pair element");
}
const FqMat& as_mat(const GroupElement& g) {
    if (auto* p = std::get_if<FqMat>(&g)) return *p;
    throw std::invalid_argument("expected a matrix element");
}

// Canonical permutation with the given cycle type: cycles laid out on
// consecutive points, largest part first.
Perm perm_with_cycle_type(const Partition& lam, int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    int pos = 0;
    for (int part : lam.parts()) {
        for (int j = 0; j < part; ++j) img[pos + j] = pos + (j + 1) % part;
        pos += part;
    }
    return Perm(std::move(img));
}

// Adjacent transpositions (i i+1), 0-based, for i in [from, degree-1).
std::vector<GroupElement> adjacent_transpositions(int from, int degree) {
    std::vector<GroupElement> gens;
    for (int i = from; i + 1 < degree; ++i) {
        std::vector<int> img(degree);
        std::iota(img.begin(), img.end(), 0);
        std::swap(img[i], img[i + 1]);
        gens.emplace_back(Perm(std::move(img)));
    }
    return gens;
}

// All pair-preserving permutations of degree 2m embedded in degree 2n
// (identity above 2m), enumerated deterministically.
std::vector<Perm> hyperoctahedral_elements(int m, int deg) {
    std::vector<Perm> out;
    for (const Perm& pp : symmetric_group(m)) {
        for (int signs = 0; signs < (1 << m); ++signs) {
            std::vector<int> img(deg);
            std::iota(img.begin(), img.end(), 0);
            for (int i = 0; i < m; ++i) {
                int s = (signs >> i) & 1;
                img[2 * i] = 2 * pp.apply(i) + s;
                img[2 * i + 1] = 2 * pp.apply(i) + 1 - s;
            }
            out.emplace_back(std::move(img));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Generators of the pair-preserving group on pairs [from..m): one pair flip
// plus adjacent pair swaps.
std::vector<GroupElement> hyperoctahedral_generators(int from, int m, int deg) {
    std::vector<GroupElement> gens;
    if (from < m) {
        std::vector<int> img(deg);
        std::iota(img.begin(), img.end(), 0);
        std::swap(img[2 * from], img[2 * from + 1]);
        gens.emplace_back(Perm(std::move(img)));
    }
    for (int i = from; i + 1 < m; ++i) {
        std::vector<int> img(deg);
        std::iota(img.begin(), img.end(), 0);
        std::swap(img[2 * i], img[2 * i + 2]);
        std::swap(img[2 * i + 1], img[2 * i + 3]);
        gens.emplace_back(Perm(std::move(img)));
    }
    return gens;
}

// Representative of a coset-type class: each part p is one chained block of p
// pairs (evens cycled, odds fixed), parts equal to 1 are untouched pairs.
Perm coset_type_representative(const Partition& lam, int deg) {
    std::vector<int> img(deg);
    std::iota(img.begin(), img.end(), 0);
    int pair = 0;
    for (int part : lam.parts()) {
        if (part > 1)
            for (int j = 0; j < part; ++j)
                img[2 * (pair + j)] = 2 * (pair + (j + 1) % part);
        pair += part;
    }
    return Perm(std::move(img));
}

// Representative of a (lambda, delta) type: lambda parts become mirrored cycle
// pairs, delta parts become single self-paired cycles. Moved pairs are laid
// out first (proper lambda parts, then delta parts) so the representative
// enters the subgroup chain at the smallest possible level.
Perm bn_type_representative(const PairPartition& type, int deg) {
    std::vector<int> img(deg);
    std::iota(img.begin(), img.end(), 0);
    int pair = 0;
    const Partition proper_lambda = type.lambda.strip_ones();
    for (int part : proper_lambda.parts()) {
        for (int j = 0; j < part; ++j) {
            img[2 * (pair + j)] = 2 * (pair + (j + 1) % part);
            img[2 * (pair + j) + 1] = 2 * (pair + (j + 1) % part) + 1;
        }
        pair += part;
    }
    for (int part : type.delta.parts()) {
        // cycle of length 2*part through both points of each pair
        for (int j = 0; j < part; ++j) {
            int next = (j + 1) % part;
            img[2 * (pair + j)] = next == 0 ? 2 * pair + 1 : 2 * (pair + next);
            img[2 * (pair + j) + 1] = next == 0 ? 2 * pair : 2 * (pair + next) + 1;
        }
        pair += part;
    }
    return Perm(std::move(img));
}

// ---------------------------------------------------------------------------

class CenterSymFamily final : public Family {
  public:
    explicit CenterSymFamily(int n) : Family(FamilyKind::CenterSym, n) {}

    GroupElement identity() const override { return Perm::identity(n_); }
    GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
        return as_perm(a).compose(as_perm(b));
    }
    GroupElement inv(const GroupElement& a) const override { return as_perm(a).inverse(); }
    bool is_in_G(const GroupElement& a) const override {
        auto* p = std::get_if<Perm>(&a);
        return p && p->degree() == n_;
    }
    Int G_order() const override { return factorial(n_); }
    std::vector<GroupElement> enumerate_G() const override {
        if (G_order() > element_guard()) throw std::length_error("group order exceeds element guard");
        std::vector<GroupElement> out;
        for (auto& p : symmetric_group(n_)) out.emplace_back(std::move(p));
        return out;
    }

    ClassLabel label_of(const GroupElement& a) const override {
        return CTLabel{as_perm(a).cycle_type()};
    }
    std::vector<ClassLabel> labels() const override {
        std::vector<ClassLabel> out;
        for (auto& p : partitions_of(n_)) out.push_back(CTLabel{p});
        return out;
    }
    Int class_size(const ClassLabel& l) const override {
        const Partition& lam = std::get<CTLabel>(l).lam;
        if (lam.size() != n_) throw std::invalid_argument("label size inconsistent with n");
        return factorial(n_) / lam.z();
    }
    GroupElement representative(const ClassLabel& l) const override {
        return perm_with_cycle_type(std::get<CTLabel>(l).lam, n_);
    }
    int k_of_class(const ClassLabel& l) const override {
        return std::get<CTLabel>(l).lam.strip_ones().size();
    }
    ClassLabel pad_label(const ClassLabel& l) const override {
        return CTLabel{std::get<CTLabel>(l).lam.pad_to(n_)};
    }
    ClassLabel proper_label(const ClassLabel& l) const override {
        return CTLabel{std::get<CTLabel>(l).lam.strip_ones()};
    }

    Int K_order_at(int m) const override { return factorial(m); }
    Int K_sub_order(int k) const override { return factorial(n_ - k); }
    bool in_K(const GroupElement& a) const override { return is_in_G(a); }
    bool in_K_sub(const GroupElement& a, int k) const override {
        const Perm& p = as_perm(a);
        for (int i = 0; i < k; ++i)
            if (p.apply(i) != i) return false;
        return true;
    }
    int K_chain_level(const GroupElement& a) const override { return as_perm(a).max_moved(); }
    std::vector<GroupElement> K_sub_generators(int k) const override {
        return adjacent_transpositions(k, n_);
    }
    std::vector<GroupElement> enumerate_K_chain(int m) const override {
        std::vector<GroupElement> out;
        for (auto& p : symmetric_group(m)) out.emplace_back(p.embed(n_, EmbedMode::FixTop));
        std::sort(out.begin(), out.end());
        return out;
    }
    int G_chain_level(const GroupElement& a) const override { return as_perm(a).max_moved(); }
    std::vector<GroupElement> enumerate_G_chain(int k) const override { return enumerate_K_chain(k); }

    GroupElement embed_to(const GroupElement& a, const Family& bigger) const override {
        return as_perm(a).embed(bigger.n(), EmbedMode::FixTop);
    }
    GroupElement relabel_K_sub(const GroupElement& a, int k, const Family& smaller) const override {
        const Perm& p = as_perm(a);
        std::vector<int> img(n_ - k);
        for (int i = 0; i < n_ - k; ++i) img[i] = p.apply(i + k) - k;
        (void)smaller;
        return Perm(std::move(img));
    }
};

// ---------------------------------------------------------------------------

class CenterHypFamily final : public Family {
  public:
    explicit CenterHypFamily(int n) : Family(FamilyKind::CenterHyp, n) {}

    int deg() const { return 2 * n_; }

    GroupElement identity() const override { return Perm::identity(deg()); }
    GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
        return as_perm(a).compose(as_perm(b));
    }
    GroupElement inv(const GroupElement& a) const override { return as_perm(a).inverse(); }
    bool is_in_G(const GroupElement& a) const override {
        auto* p = std::get_if<Perm>(&a);
        return p && p->degree() == deg() && preserves_pairs(*p);
    }
    Int G_order() const override { return pow_int(2, n_) * factorial(n_); }
    std::vector<GroupElement> enumerate_G() const override {
        if (G_order() > element_guard()) throw std::length_error("group order exceeds element guard");
        std::vector<GroupElement> out;
        for (auto& p : hyperoctahedral_elements(n_, deg())) out.emplace_back(std::move(p));
        return out;
    }

    ClassLabel label_of(const GroupElement& a) const override {
        return BTypeLabel{bn_type(as_perm(a))};
    }
    std::vector<ClassLabel> labels() const override {
        std::vector<ClassLabel> out;
        for (int ls = 0; ls <= n_; ++ls)
            for (auto& lam : partitions_of(ls))
                for (auto& del : partitions_of(n_ - ls)) out.push_back(BTypeLabel{{lam, del}});
        std::sort(out.begin(), out.end());
        return out;
    }
    Int class_size(const ClassLabel& l) const override {
        const PairPartition& t = std::get<BTypeLabel>(l).type;
        if (t.size() != n_) throw std::invalid_argument("label size inconsistent with n");
        Int denom = pow_int(2, t.lambda.length() + t.delta.length()) * t.lambda.z() * t.delta.z();
        return G_order() / denom;
    }
    GroupElement representative(const ClassLabel& l) const override {
        return bn_type_representative(std::get<BTypeLabel>(l).type, deg());
    }
    int k_of_class(const ClassLabel& l) const override {
        const PairPartition& t = std::get<BTypeLabel>(l).type;
        return t.lambda.strip_ones().size() + t.delta.size();
    }
    ClassLabel pad_label(const ClassLabel& l) const override {
        return BTypeLabel{std::get<BTypeLabel>(l).type.uparrow(n_)};
    }
    ClassLabel proper_label(const ClassLabel& l) const override {
        const PairPartition& t = std::get<BTypeLabel>(l).type;
        return BTypeLabel{{t.lambda.strip_ones(), t.delta}};
    }

    Int K_order_at(int m) const override { return pow_int(2, m) * factorial(m); }
    Int K_sub_order(int k) const override { return pow_int(2, n_ - k) * factorial(n_ - k); }
    bool in_K(const GroupElement& a) const override { return is_in_G(a); }
    bool in_K_sub(const GroupElement& a, int k) const override {
        const Perm& p = as_perm(a);
        for (int i = 0; i < 2 * k; ++i)
            if (p.apply(i) != i) return false;
        return true;
    }
    int K_chain_level(const GroupElement& a) const override {
        return (as_perm(a).max_moved() + 1) / 2;
    }
    std::vector<GroupElement> K_sub_generators(int k) const override {
        return hyperoctahedral_generators(k, n_, deg());
    }
    std::vector<GroupElement> enumerate_K_chain(int m) const override {
        std::vector<GroupElement> out;
        for (auto& p : hyperoctahedral_elements(m, deg())) out.emplace_back(std::move(p));
        return out;
    }
    int G_chain_level(const GroupElement& a) const override { return K_chain_level(a); }
    std::vector<GroupElement> enumerate_G_chain(int k) const override { return enumerate_K_chain(k); }

    GroupElement embed_to(const GroupElement& a, const Family& bigger) const override {
        return as_perm(a).embed(2 * bigger.n(), EmbedMode::FixTop);
    }
    GroupElement relabel_K_sub(const GroupElement& a, int k, const Family& smaller) const override {
        const Perm& p = as_perm(a);
        std::vector<int> img(2 * (n_ - k));
        for (int i = 0; i < 2 * (n_ - k); ++i) img[i] = p.apply(i + 2 * k) - 2 * k;
        (void)smaller;
        return Perm(std::move(img));
    }
};

// ---------------------------------------------------------------------------

class HeckeFamily final : public Family {
  public:
    explicit HeckeFamily(int n) : Family(FamilyKind::Hecke, n) {}

    int deg() const { return 2 * n_; }

    GroupElement identity() const override { return Perm::identity(deg()); }
    GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
        return as_perm(a).compose(as_perm(b));
    }
    GroupElement inv(const GroupElement& a) const override { return as_perm(a).inverse(); }
    bool is_in_G(const GroupElement& a) const override {
        auto* p = std::get_if<Perm>(&a);
        return p && p->degree() == deg();
    }
    Int G_order() const override { return factorial(deg()); }
    std::vector<GroupElement> enumerate_G() const override {
        if (G_order() > element_guard()) throw std::length_error("group order exceeds element guard");
        std::vector<GroupElement> out;
        for (auto& p : symmetric_group(deg())) out.emplace_back(std::move(p));
        return out;
    }

    ClassLabel label_of(const GroupElement& a) const override {
        return CosetLabel{coset_type(as_perm(a))};
    }
    std::vector<ClassLabel> labels() const override {
        std::vector<ClassLabel> out;
        for (auto& p : partitions_of(n_)) out.push_back(CosetLabel{p});
        return out;
    }
    Int class_size(const ClassLabel& l) const override {
        const Partition& lam = std::get<CosetLabel>(l).lam;
        if (lam.size() != n_) throw std::invalid_argument("label size inconsistent with n");
        Int b = pow_int(2, n_) * factorial(n_);
        return b * b / lam.doubled().z();
    }
    GroupElement representative(const ClassLabel& l) const override {
        return coset_type_representative(std::get<CosetLabel>(l).lam, deg());
    }
    int k_of_class(const ClassLabel& l) const override {
        return std::get<CosetLabel>(l).lam.strip_ones().size();
    }
    ClassLabel pad_label(const ClassLabel& l) const override {
        return CosetLabel{std::get<CosetLabel>(l).lam.pad_to(n_)};
    }
    ClassLabel proper_label(const ClassLabel& l) const override {
        return CosetLabel{std::get<CosetLabel>(l).lam.strip_ones()};
    }

    Int K_order_at(int m) const override { return pow_int(2, m) * factorial(m); }
    Int K_sub_order(int k) const override { return pow_int(2, n_ - k) * factorial(n_ - k); }
    bool in_K(const GroupElement& a) const override { return preserves_pairs(as_perm(a)); }
    bool in_K_sub(const GroupElement& a, int k) const override {
        if (!in_K(a)) return false;
        const Perm& p = as_perm(a);
        for (int i = 0; i < 2 * k; ++i)
            if (p.apply(i) != i) return false;
        return true;
    }
    int K_chain_level(const GroupElement& a) const override {
        return (as_perm(a).max_moved() + 1) / 2;
    }
    std::vector<GroupElement> K_sub_generators(int k) const override {
        return hyperoctahedral_generators(k, n_, deg());
    }
    std::vector<GroupElement> enumerate_K_chain(int m) const override {
        std::vector<GroupElement> out;
        for (auto& p : hyperoctahedral_elements(m, deg())) out.emplace_back(std::move(p));
        return out;
    }
    int G_chain_level(const GroupElement& a) const override {
        return (as_perm(a).max_moved() + 1) / 2;
    }
    std::vector<GroupElement> enumerate_G_chain(int k) const override {
        std::vector<GroupElement> out;
        for (auto& p : symmetric_group(2 * k)) out.emplace_back(p.embed(deg(), EmbedMode::FixTop));
        std::sort(out.begin(), out.end());
        return out;
    }

    GroupElement embed_to(const GroupElement& a, const Family& bigger) const override {
        return as_perm(a).embed(2 * bigger.n(), EmbedMode::FixTop);
    }
    GroupElement relabel_K_sub(const GroupElement& a, int k, const Family& smaller) const override {
        const Perm& p = as_perm(a);
        std::vector<int> img(2 * (n_ - k));
        for (int i = 0; i < 2 * (n_ - k); ++i) img[i] = p.apply(i + 2 * k) - 2 * k;
        (void)smaller;
        return Perm(std::move(img));
    }
};

// ---------------------------------------------------------------------------

class DiagPairFamily final : public Family {
  public:
    explicit DiagPairFamily(int n) : Family(FamilyKind::DiagPair, n) {
        if (n < 2) throw std::invalid_argument("diag-pair needs n >= 2");
    }

    GroupElement identity() const override {
        return PermPair{Perm::identity(n_), Perm::identity(n_)};
    }
    GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
        const PermPair& x = as_pair(a);
        const PermPair& y = as_pair(b);
        return PermPair{x.a.compose(y.a), y.b.compose(x.b)};
    }
    GroupElement inv(const GroupElement& a) const override {
        const PermPair& x = as_pair(a);
        return PermPair{x.a.inverse(), x.b.inverse()};
    }
    bool is_in_G(const GroupElement& a) const override {
        auto* p = std::get_if<PermPair>(&a);
        return p && p->a.degree() == n_ && p->b.degree() == n_ && p->b.apply(0) == 0;
    }
    Int G_order() const override { return factorial(n_) * factorial(n_ - 1); }
    std::vector<GroupElement> enumerate_G() const override {
        if (G_order() > element_guard()) throw std::length_error("group order exceeds element guard");
        std::vector<GroupElement> out;
        for (const Perm& a : symmetric_group(n_))
            for (const Perm& b : symmetric_group(n_))
                if (b.apply(0) == 0) out.emplace_back(PermPair{a, b});
        std::sort(out.begin(), out.end());
        return out;
    }

    ClassLabel label_of(const GroupElement& g) const override {
        const PermPair& x = as_pair(g);
        return IPairLabel{sn1_class(x.a.compose(x.b))};
    }
    std::vector<ClassLabel> labels() const override {
        std::vector<ClassLabel> out;
        for (int i = 1; i <= n_; ++i)
            for (auto& lam : partitions_of(n_ - i)) out.push_back(IPairLabel{{i, lam}});
        std::sort(out.begin(), out.end());
        return out;
    }
    Int class_size(const ClassLabel& l) const override {
        const IndexedPair& ip = std::get<IPairLabel>(l).ip;
        if (ip.i + ip.lambda.size() != n_) throw std::invalid_argument("label size inconsistent with n");
        Int f = factorial(n_ - 1);
        return f * f / ip.lambda.z();
    }
    GroupElement representative(const ClassLabel& l) const override {
        const IndexedPair& ip = std::get<IPairLabel>(l).ip;
        // i-cycle laid first so it contains point 1, remaining cycles after it
        std::vector<int> img(n_);
        std::iota(img.begin(), img.end(), 0);
        for (int j = 0; j < ip.i; ++j) img[j] = (j + 1) % ip.i;
        int pos = ip.i;
        for (int part : ip.lambda.parts()) {
            for (int j = 0; j < part; ++j) img[pos + j] = pos + (j + 1) % part;
            pos += part;
        }
        return PermPair{Perm(std::move(img)), Perm::identity(n_)};
    }
    int k_of_class(const ClassLabel& l) const override {
        const IndexedPair& ip = std::get<IPairLabel>(l).ip;
        if (ip.i == 1 && ip.lambda.strip_ones().empty()) return 0;  // identity class
        return ip.i + ip.lambda.strip_ones().size();
    }
    ClassLabel pad_label(const ClassLabel& l) const override {
        const IndexedPair& ip = std::get<IPairLabel>(l).ip;
        return IPairLabel{{ip.i, ip.lambda.pad_to(n_ - ip.i)}};
    }
    ClassLabel proper_label(const ClassLabel& l) const override {
        const IndexedPair& ip = std::get<IPairLabel>(l).ip;
        return IPairLabel{{ip.i, ip.lambda.strip_ones()}};
    }

    Int K_order_at(int m) const override { return m <= 1 ? Int(1) : factorial(m - 1); }
    Int K_sub_order(int k) const override {
        return k >= n_ - 1 ? Int(1) : factorial(n_ - k - 1);
    }
    bool in_K(const GroupElement& g) const override {
        const PermPair& x = as_pair(g);
        return x.a.apply(0) == 0 && x.b == x.a.inverse();
    }
    bool in_K_sub(const GroupElement& g, int k) const override {
        if (!in_K(g)) return false;
        const Perm& u = as_pair(g).a;
        for (int i = 0; i <= std::min(k, n_ - 1); ++i)
            if (u.apply(i) != i) return false;
        return true;
    }
    int K_chain_level(const GroupElement& g) const override { return as_pair(g).a.max_moved(); }
    std::vector<GroupElement> K_sub_generators(int k) const override {
        std::vector<GroupElement> gens;
        for (int i = k + 1; i + 1 < n_; ++i) {
            std::vector<int> img(n_);
            std::iota(img.begin(), img.end(), 0);
            std::swap(img[i], img[i + 1]);
            Perm u(std::move(img));
            gens.emplace_back(PermPair{u, u});
        }
        return gens;
    }
    std::vector<GroupElement> enumerate_K_chain(int m) const override {
        std::vector<GroupElement> out;
        for (const Perm& u : symmetric_group(n_))
            if (u.apply(0) == 0 && u.max_moved() <= m) out.emplace_back(PermPair{u, u.inverse()});
        std::sort(out.begin(), out.end());
        return out;
    }
    int G_chain_level(const GroupElement& g) const override {
        const PermPair& x = as_pair(g);
        return std::max(x.a.max_moved(), x.b.max_moved());
    }
    std::vector<GroupElement> enumerate_G_chain(int k) const override {
        std::vector<GroupElement> out;
        for (const Perm& a : symmetric_group(n_)) {
            if (a.max_moved() > k) continue;
            for (const Perm& b : symmetric_group(n_))
                if (b.apply(0) == 0 && b.max_moved() <= k) out.emplace_back(PermPair{a, b});
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    GroupElement embed_to(const GroupElement& g, const Family& bigger) const override {
        const PermPair& x = as_pair(g);
        return PermPair{x.a.embed(bigger.n(), EmbedMode::FixTop),
                        x.b.embed(bigger.n(), EmbedMode::FixTop)};
    }
    GroupElement relabel_K_sub(const GroupElement& g, int k, const Family& smaller) const override {
        const Perm& u = as_pair(g).a;
        std::vector<int> img(n_ - k);
        img[0] = 0;
        for (int i = 1; i < n_ - k; ++i) img[i] = u.apply(i + k) - k;
        Perm v(std::move(img));
        (void)smaller;
        return PermPair{v, v.inverse()};
    }
};

// ---------------------------------------------------------------------------

class GLCenterFamily final : public Family {
  public:
    GLCenterFamily(int n, int q) : Family(FamilyKind::GLCenter, n), q_(q) {
        if (q < 2) throw std::invalid_argument("gl family needs a prime power q >= 2");
        Field::get(q);  // validates q
    }

    int q() const override { return q_; }

    GroupElement identity() const override { return FqMat::identity(q_, n_); }
    GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
        return as_mat(a).mul(as_mat(b));
    }
    GroupElement inv(const GroupElement& a) const override { return as_mat(a).inverse(); }
    bool is_in_G(const GroupElement& a) const override {
        auto* m = std::get_if<FqMat>(&a);
        return m && m->q() == q_ && m->n() == n_ && m->invertible();
    }
    Int G_order() const override { return gl_order(n_, q_); }
    std::vector<GroupElement> enumerate_G() const override {
        std::vector<GroupElement> out;
        for (auto& m : general_linear_group(n_, q_, Int(element_guard()))) out.emplace_back(std::move(m));
        return out;
    }

    ClassLabel label_of(const GroupElement& a) const override {
        auto orbit = conjugacy_orbit(as_mat(a));
        return MatRepLabel{std::get<FqMat>(orbit.front())};
    }
    std::vector<ClassLabel> labels() const override {
        ensure_tables();
        std::vector<ClassLabel> out;
        for (const auto& [rep, size] : class_sizes_) out.push_back(MatRepLabel{rep});
        return out;
    }
    Int class_size(const ClassLabel& l) const override {
        ensure_tables();
        auto it = class_sizes_.find(std::get<MatRepLabel>(l).rep);
        if (it == class_sizes_.end()) throw std::invalid_argument("not a canonical class representative");
        return it->second;
    }
    GroupElement representative(const ClassLabel& l) const override {
        return std::get<MatRepLabel>(l).rep;
    }
    int k_of_class(const ClassLabel& l) const override {
        auto orbit = conjugacy_orbit(std::get<MatRepLabel>(l).rep);
        int best = n_;
        for (const auto& g : orbit) best = std::min(best, std::get<FqMat>(g).leading_block_level());
        return best;
    }
    ClassLabel pad_label(const ClassLabel& l) const override { return l; }
    ClassLabel proper_label(const ClassLabel& l) const override { return l; }

    Int K_order_at(int m) const override { return gl_order(m, q_); }
    Int K_sub_order(int k) const override { return gl_order(n_ - k, q_); }
    bool in_K(const GroupElement& a) const override { return is_in_G(a); }
    bool in_K_sub(const GroupElement& a, int k) const override {
        return as_mat(a).is_identity_outside_lower_block(n_ - k);
    }
    int K_chain_level(const GroupElement& a) const override {
        return as_mat(a).leading_block_level();
    }
    std::vector<GroupElement> K_sub_generators(int k) const override {
        // generating set of the lower-right GL_{n-k} block: scalars on the
        // first block coordinate, adjacent transvections over every field
        // unit, and a block cycle
        std::vector<GroupElement> gens;
        int m = n_ - k;
        if (m == 0) return gens;
        for (int alpha = 2; alpha < q_; ++alpha) {
            FqMat g = FqMat::identity(q_, n_);
            g.set(k, k, alpha);
            gens.emplace_back(std::move(g));
        }
        if (m >= 2) {
            for (int alpha = 1; alpha < q_; ++alpha) {
                FqMat t = FqMat::identity(q_, n_);
                t.set(k, k + 1, alpha);
                gens.emplace_back(std::move(t));
                FqMat t2 = FqMat::identity(q_, n_);
                t2.set(k + 1, k, alpha);
                gens.emplace_back(std::move(t2));
            }
            FqMat c(q_, n_);
            for (int i = 0; i < k; ++i) c.set(i, i, 1);
            for (int i = 0; i < m; ++i) c.set(k + i, k + (i + 1) % m, 1);
            FqMat ci = c.inverse();
            gens.emplace_back(std::move(c));
            gens.emplace_back(std::move(ci));
        }
        return gens;
    }
    std::vector<GroupElement> enumerate_K_chain(int m) const override {
        std::vector<GroupElement> out;
        for (const auto& g : general_linear_group(m, q_, Int(element_guard()))) {
            FqMat big = FqMat::identity(q_, n_);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c) big.set(r, c, g.at(r, c));
            out.emplace_back(std::move(big));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    int G_chain_level(const GroupElement& a) const override { return K_chain_level(a); }
    std::vector<GroupElement> enumerate_G_chain(int k) const override { return enumerate_K_chain(k); }

    GroupElement embed_to(const GroupElement& a, const Family& bigger) const override {
        const FqMat& m = as_mat(a);
        FqMat big = FqMat::identity(q_, bigger.n());
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) big.set(r, c, m.at(r, c));
        return big;
    }
    GroupElement relabel_K_sub(const GroupElement& a, int k, const Family& smaller) const override {
        const FqMat& m = as_mat(a);
        FqMat small(q_, n_ - k);
        for (int r = 0; r < n_ - k; ++r)
            for (int c = 0; c < n_ - k; ++c) small.set(r, c, m.at(r + k, c + k));
        (void)smaller;
        return small;
    }

  private:
    std::vector<GroupElement> conjugacy_orbit(const FqMat& m) const;
    void ensure_tables() const;

    int q_;
    mutable std::map<FqMat, Int> class_sizes_;
};

std::vector<GroupElement> GLCenterFamily::conjugacy_orbit(const FqMat& m) const {
    auto gens = K_sub_generators(0);
    std::vector<GroupElement> orbit{m};
    std::unordered_set<GroupElement, ElementHash> seen{GroupElement{m}};
    for (size_t i = 0; i < orbit.size(); ++i) {
        GroupElement cur = orbit[i];
        for (const auto& s : gens) {
            GroupElement nxt = mul(mul(s, cur), inv(s));
            if (seen.insert(nxt).second) {
                orbit.push_back(std::move(nxt));
                if (static_cast<long long>(orbit.size()) > element_guard())
                    throw std::length_error("element guard exceeded during conjugacy orbit");
            }
        }
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

void GLCenterFamily::ensure_tables() const {
    if (!class_sizes_.empty()) return;
    auto all = enumerate_G();
    std::unordered_set<GroupElement, ElementHash> assigned;
    for (const auto& g : all) {
        if (assigned.count(g)) continue;
        auto orbit = conjugacy_orbit(std::get<FqMat>(g));
        class_sizes_[std::get<FqMat>(orbit.front())] = static_cast<long long>(orbit.size());
        for (auto& o : orbit) assigned.insert(std::move(o));
    }
}

}  // namespace

std::shared_ptr<const Family> Family::make(FamilyKind kind, int n, int q) {
    switch (kind) {
        case FamilyKind::CenterSym: return std::make_shared<CenterSymFamily>(n);
        case FamilyKind::CenterHyp: return std::make_shared<CenterHypFamily>(n);
        case FamilyKind::Hecke: return std::make_shared<HeckeFamily>(n);
        case FamilyKind::DiagPair: return std::make_shared<DiagPairFamily>(n);
        case FamilyKind::GLCenter: return std::make_shared<GLCenterFamily>(n, q);
    }
    throw std::logic_error("unreachable");
}

}  // namespace dcalg
