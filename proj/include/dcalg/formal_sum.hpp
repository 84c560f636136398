#pragma once

#include "dcalg/family.hpp"

#include <map>

namespace dcalg {

// Finite exact-rational combination of group elements of one family instance.
class FormalSum {
  public:
    FormalSum() = default;
    explicit FormalSum(std::shared_ptr<const Family> fam) : fam_(std::move(fam)) {}

    const std::shared_ptr<const Family>& family() const { return fam_; }
    const std::map<GroupElement, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t support_size() const { return terms_.size(); }

    void add(const GroupElement& g, const Rational& c);
    Rational coefficient(const GroupElement& g) const;

    FormalSum operator+(const FormalSum& rhs) const;
    FormalSum operator*(const FormalSum& rhs) const;  // group-algebra convolution
    FormalSum scaled(const Rational& c) const;
    bool operator==(const FormalSum& rhs) const { return terms_ == rhs.terms_; }

  private:
    std::shared_ptr<const Family> fam_;
    std::map<GroupElement, Rational> terms_;
};

FormalSum class_sum(const std::shared_ptr<const Family>& fam, const ClassLabel& label);

// Coefficient of class l3 in the product of the class sums of l1 and l2,
// computed with the fixed-representative counting trick; exact.
Rational structure_coefficient_bruteforce(const std::shared_ptr<const Family>& fam,
                                          const ClassLabel& l1, const ClassLabel& l2,
                                          const ClassLabel& l3, int threads = 1);

// Full decomposition of class_sum(l1) * class_sum(l2) into labels, one pass.
std::map<ClassLabel, Rational> product_decomposition(const std::shared_ptr<const Family>& fam,
                                                     const ClassLabel& l1, const ClassLabel& l2,
                                                     int threads = 1);

// Label -> coefficient for a sum that is constant on classes; throws when the
// sum is not class-constant.
std::map<ClassLabel, Rational> decompose(const FormalSum& s);

}  // namespace dcalg
