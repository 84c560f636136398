#include "dcalg/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dcalg {

Perm::Perm(std::vector<int> images_zero_based) : img_(std::move(images_zero_based)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = 1;
    }
}

Perm Perm::identity(int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

Perm Perm::parse_cycles(const std::string& text, int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) { ++pos; continue; }
        if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        size_t close = text.find(')', pos);
        if (close == std::string::npos) throw std::invalid_argument("unclosed cycle");
        std::istringstream in(text.substr(pos + 1, close - pos - 1));
        std::vector<int> cyc;
        int v;
        while (in >> v) {
            if (v < 1 || v > degree) throw std::invalid_argument("cycle point out of range");
            cyc.push_back(v - 1);
        }
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            if (img[from] != from) throw std::invalid_argument("point repeated across cycles");
            img[from] = to;
        }
        pos = close + 1;
    }
    return Perm(std::move(img));
}

Perm Perm::compose(const Perm& rhs) const {
    if (degree() != rhs.degree()) throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> img(degree());
    for (int p = 0; p < degree(); ++p) img[p] = img_[rhs.img_[p]];
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<int> img(degree());
    for (int p = 0; p < degree(); ++p) img[img_[p]] = p;
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (int p = 0; p < degree(); ++p)
        if (img_[p] != p) return false;
    return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int start = 0; start < degree(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cyc;
        int p = start;
        do {
            seen[p] = 1;
            cyc.push_back(p);
            p = img_[p];
        } while (p != start);
        out.push_back(std::move(cyc));
    }
    return out;  // min-first by construction, sorted by min since start increases
}

Partition Perm::cycle_type() const {
    std::vector<int> lens;
    for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
    return Partition(std::move(lens));
}

Perm Perm::embed(int m, EmbedMode mode) const {
    if (m < degree()) throw std::invalid_argument("embed: target degree too small");
    std::vector<int> img(m);
    if (mode == EmbedMode::FixTop) {
        for (int p = 0; p < degree(); ++p) img[p] = img_[p];
        for (int p = degree(); p < m; ++p) img[p] = p;
    } else {
        int shift = m - degree();
        for (int p = 0; p < shift; ++p) img[p] = p;
        for (int p = 0; p < degree(); ++p) img[shift + p] = shift + img_[p];
    }
    return Perm(std::move(img));
}

int Perm::max_moved() const {
    for (int p = degree() - 1; p >= 0; --p)
        if (img_[p] != p) return p + 1;
    return 0;
}

std::string Perm::str() const {
    std::string s;
    for (const auto& c : cycles()) {
        if (c.size() < 2) continue;
        s += '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(c[i] + 1);
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

size_t Perm::hash() const {
    size_t h = 1469598103934665603ull;
    for (int v : img_) {
        h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<Perm> symmetric_group(int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(Perm(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace dcalg
