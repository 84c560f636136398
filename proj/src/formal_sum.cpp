#include "dcalg/formal_sum.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace dcalg {

void FormalSum::add(const GroupElement& g, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational FormalSum::coefficient(const GroupElement& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Rational(0) : it->second;
}

FormalSum FormalSum::operator+(const FormalSum& rhs) const {
    FormalSum out = *this;
    for (const auto& [g, c] : rhs.terms_) out.add(g, c);
    return out;
}

FormalSum FormalSum::operator*(const FormalSum& rhs) const {
    if (fam_ && rhs.fam_ && (fam_->kind() != rhs.fam_->kind() || fam_->n() != rhs.fam_->n()))
        throw std::invalid_argument("formal sum product: ambient mismatch");
    const auto& fam = fam_ ? fam_ : rhs.fam_;
    FormalSum out(fam);
    for (const auto& [g, c] : terms_)
        for (const auto& [h, d] : rhs.terms_) out.add(fam->mul(g, h), c * d);
    return out;
}

FormalSum FormalSum::scaled(const Rational& c) const {
    FormalSum out(fam_);
    if (c == 0) return out;
    for (const auto& [g, v] : terms_) out.add(g, v * c);
    return out;
}

FormalSum class_sum(const std::shared_ptr<const Family>& fam, const ClassLabel& label) {
    FormalSum out(fam);
    for (const auto& g : fam->class_elements(label)) out.add(g, 1);
    return out;
}

namespace {

// Shard a counting loop over class1; the reduction is an integer sum, so the
// result is independent of the sharding.
template <typename Fn>
long long sharded_count(const std::vector<GroupElement>& elems, int threads, Fn&& pred) {
    if (threads <= 1 || elems.size() < 1024) {
        long long c = 0;
        for (const auto& g : elems) c += pred(g) ? 1 : 0;
        return c;
    }
    std::vector<long long> partial(threads, 0);
    std::vector<std::thread> pool;
    size_t chunk = (elems.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            size_t lo = t * chunk, hi = std::min(elems.size(), lo + chunk);
            long long c = 0;
            for (size_t i = lo; i < hi; ++i) c += pred(elems[i]) ? 1 : 0;
            partial[t] = c;
        });
    }
    for (auto& th : pool) th.join();
    long long c = 0;
    for (long long p : partial) c += p;
    return c;
}

}  // namespace

Rational structure_coefficient_bruteforce(const std::shared_ptr<const Family>& fam,
                                          const ClassLabel& l1, const ClassLabel& l2,
                                          const ClassLabel& l3, int threads) {
    GroupElement z0 = fam->representative(l3);
    auto class1 = fam->class_elements(l1);
    long long count = sharded_count(class1, threads, [&](const GroupElement& x) {
        return fam->label_of(fam->mul(fam->inv(x), z0)) == l2;
    });
    return Rational(count);
}

std::map<ClassLabel, Rational> product_decomposition(const std::shared_ptr<const Family>& fam,
                                                     const ClassLabel& l1, const ClassLabel& l2,
                                                     int threads) {
    auto class1 = fam->class_elements(l1);  // one materialization shared by all targets
    std::map<ClassLabel, Rational> out;
    for (const auto& l3 : fam->labels()) {
        GroupElement z0 = fam->representative(l3);
        long long count = sharded_count(class1, threads, [&](const GroupElement& x) {
            return fam->label_of(fam->mul(fam->inv(x), z0)) == l2;
        });
        if (count) out.emplace(l3, Rational(count));
    }
    return out;
}

std::map<ClassLabel, Rational> decompose(const FormalSum& s) {
    const auto& fam = s.family();
    std::map<ClassLabel, Rational> out;
    for (const auto& [g, c] : s.terms()) {
        ClassLabel l = fam->label_of(g);
        auto [it, inserted] = out.emplace(l, c);
        if (!inserted && it->second != c)
            throw std::domain_error("sum is not constant on classes");
    }
    // every element of each touched class must carry the common coefficient
    for (const auto& [l, c] : out) {
        if (Int(s.terms().size()) == 0) break;
        Int size = fam->class_size(l);
        long long found = 0;
        for (const auto& [g, cc] : s.terms())
            if (fam->label_of(g) == l) ++found;
        if (Int(found) != size) throw std::domain_error("sum is not constant on classes");
    }
    return out;
}

}  // namespace dcalg
