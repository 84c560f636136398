#include "dcalg/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace dcalg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("partition parts must be positive");
}

Partition Partition::parse(const std::string& text) {
    if (text.empty() || text == "0" || text == "∅") return Partition{};
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        parts.push_back(std::stoi(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

bool Partition::is_proper() const {
    return parts_.empty() || parts_.back() >= 2;
}

Int Partition::z() const {
    Int r = 1;
    int run = 0;
    for (size_t i = 0; i < parts_.size(); ++i) {
        ++run;
        r *= parts_[i] * run;  // i^{m_i} m_i! accumulated one part at a time
        if (i + 1 == parts_.size() || parts_[i + 1] != parts_[i]) run = 0;
    }
    return r;
}

Partition Partition::unite(const Partition& other) const {
    std::vector<int> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(all));
}

Partition Partition::strip_ones() const {
    std::vector<int> kept;
    for (int p : parts_)
        if (p >= 2) kept.push_back(p);
    return Partition(std::move(kept));
}

Partition Partition::pad_to(int n) const {
    int sz = size();
    if (n < sz) throw std::invalid_argument("pad_to: n smaller than partition size");
    std::vector<int> all = parts_;
    all.insert(all.end(), n - sz, 1);
    return Partition(std::move(all));
}

Partition Partition::doubled() const {
    std::vector<int> d = parts_;
    for (int& p : d) p *= 2;
    return Partition(std::move(d));
}

std::string Partition::str() const {
    if (parts_.empty()) return "∅";
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> proper_partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int r = 0; r <= n; ++r)
        for (const auto& p : partitions_of(r))
            if (p.is_proper()) out.push_back(p);
    return out;
}

PairPartition PairPartition::uparrow(int n) const {
    if (n < size()) throw std::invalid_argument("uparrow: n smaller than total size");
    return PairPartition{lambda.pad_to(n - delta.size()), delta};
}

std::string PairPartition::str() const { return lambda.str() + "|" + delta.str(); }

PairPartition PairPartition::parse(const std::string& text) {
    size_t bar = text.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("pair partition needs '|': " + text);
    return PairPartition{Partition::parse(text.substr(0, bar)), Partition::parse(text.substr(bar + 1))};
}

std::string IndexedPair::str() const { return std::to_string(i) + ":(" + lambda.str() + ")"; }

IndexedPair IndexedPair::parse(const std::string& text) {
    size_t colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("indexed pair needs ':': " + text);
    std::string rest = text.substr(colon + 1);
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
        throw std::invalid_argument("indexed pair needs '(parts)': " + text);
    IndexedPair ip;
    ip.i = std::stoi(text.substr(0, colon));
    if (ip.i < 1) throw std::invalid_argument("indexed pair: i must be >= 1");
    ip.lambda = Partition::parse(rest.substr(1, rest.size() - 2));
    return ip;
}

}  // namespace dcalg
