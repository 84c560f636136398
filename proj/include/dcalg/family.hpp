#pragma once

#include "dcalg/element.hpp"
#include "dcalg/label.hpp"

#include <memory>
#include <string>
#include <vector>

namespace dcalg {

// Coset type of a permutation of even degree 2n: component half-sizes of the
// graph on {1..2n} with the fixed pairing edges {2i-1,2i} and the image edges
// {w(2i-1), w(2i)}.
Partition coset_type(const Perm& w);

// Paired/self-paired cycle data (lambda, delta) of a pair-preserving
// permutation of degree 2n; |lambda| + |delta| = n.
PairPartition bn_type(const Perm& w);

// (i, lambda): i = length of the cycle containing point 1, lambda = cycle type
// of the rest.
IndexedPair sn1_class(const Perm& w);

bool preserves_pairs(const Perm& w);  // membership in the hyperoctahedral subgroup

enum class FamilyKind { CenterSym, CenterHyp, Hecke, DiagPair, GLCenter };

std::string family_name(FamilyKind kind);
FamilyKind family_from_name(const std::string& name);

// One member (G_n, K_n) of a concrete tower, together with its subgroup chain
// K_0 <= K_1 <= ... <= K_n and the subgroups K_n^k <= K_n. Center families use
// K = G with conjugacy classes; the two genuine pair families use two-sided
// classes.
class Family {
  public:
    static std::shared_ptr<const Family> make(FamilyKind kind, int n, int q = 0);
    virtual ~Family() = default;

    FamilyKind kind() const { return kind_; }
    int n() const { return n_; }
    virtual int q() const { return 0; }
    bool center_mode() const {
        return kind_ == FamilyKind::CenterSym || kind_ == FamilyKind::CenterHyp ||
               kind_ == FamilyKind::GLCenter;
    }

    // ambient group
    virtual GroupElement identity() const = 0;
    virtual GroupElement mul(const GroupElement& a, const GroupElement& b) const = 0;
    virtual GroupElement inv(const GroupElement& a) const = 0;
    virtual bool is_in_G(const GroupElement& a) const = 0;
    virtual Int G_order() const = 0;
    virtual std::vector<GroupElement> enumerate_G() const = 0;

    // classes
    virtual ClassLabel label_of(const GroupElement& a) const = 0;
    virtual std::vector<ClassLabel> labels() const = 0;
    virtual Int class_size(const ClassLabel& l) const = 0;
    virtual GroupElement representative(const ClassLabel& l) const = 0;
    std::vector<GroupElement> class_elements(const ClassLabel& l) const;
    // min k with class ∩ G_k nonempty (0 for the identity class)
    virtual int k_of_class(const ClassLabel& l) const = 0;
    // accepts labels in proper (unpadded) form and returns the padded label
    virtual ClassLabel pad_label(const ClassLabel& l) const = 0;
    // inverse direction: strips the padding so labels compare across n
    virtual ClassLabel proper_label(const ClassLabel& l) const = 0;

    // subgroup tower
    virtual Int K_order_at(int m) const = 0;
    Int K_order() const { return K_order_at(n_); }
    virtual Int K_sub_order(int k) const = 0;
    virtual bool in_K(const GroupElement& a) const = 0;
    virtual bool in_K_sub(const GroupElement& a, int k) const = 0;
    virtual int K_chain_level(const GroupElement& a) const = 0;
    virtual std::vector<GroupElement> K_sub_generators(int k) const = 0;
    std::vector<GroupElement> K_generators() const { return K_sub_generators(0); }
    virtual std::vector<GroupElement> enumerate_K_chain(int m) const = 0;
    std::vector<GroupElement> enumerate_K() const { return enumerate_K_chain(n_); }
    std::vector<GroupElement> enumerate_K_sub(int k) const;
    virtual int G_chain_level(const GroupElement& a) const = 0;
    virtual std::vector<GroupElement> enumerate_G_chain(int k) const = 0;

    // re-embed an element of this instance into a larger instance of the same kind
    virtual GroupElement embed_to(const GroupElement& a, const Family& bigger) const = 0;

    // the tower's relabeling bijection K_n^k -> K_{n-k}; `smaller` must be the
    // instance of the same kind at n-k
    virtual GroupElement relabel_K_sub(const GroupElement& a, int k,
                                       const Family& smaller) const = 0;

    // K_n^{k1} ∘ X ∘ K_n^{k2} as a sorted element list (orbit closure)
    std::vector<GroupElement> double_class(const GroupElement& X, int k1, int k2) const;

    // class membership without materializing the class
    bool in_class(const GroupElement& a, const ClassLabel& l) const;

  protected:
    Family(FamilyKind kind, int n) : kind_(kind), n_(n) {}
    FamilyKind kind_;
    int n_;
};

// Global element guard for enumerations and orbit closures.
long long element_guard();
void set_element_guard(long long guard);

}  // namespace dcalg
