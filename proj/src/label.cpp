#include "dcalg/label.hpp"

#include <stdexcept>

namespace dcalg {

std::string element_str(const GroupElement& g) {
    return std::visit([](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FqMat>) return v.hex();
        else return v.str();
    }, g);
}

std::string label_str(const ClassLabel& l) {
    if (auto* ct = std::get_if<CTLabel>(&l)) return "ct:" + ct->lam.str();
    if (auto* co = std::get_if<CosetLabel>(&l)) return "coset:" + co->lam.str();
    if (auto* bt = std::get_if<BTypeLabel>(&l)) return "btype:" + bt->type.str();
    if (auto* ip = std::get_if<IPairLabel>(&l)) return "ipair:" + ip->ip.str();
    return "glrep:" + std::get<MatRepLabel>(l).rep.hex();
}

ClassLabel parse_label(const std::string& text) { return parse_label(text, 0, 0); }

ClassLabel parse_label(const std::string& text, int q, int n) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("label needs a 'kind:' prefix: " + text);
    std::string kind = text.substr(0, colon), body = text.substr(colon + 1);
    if (kind == "ct") return CTLabel{Partition::parse(body)};
    if (kind == "coset") return CosetLabel{Partition::parse(body)};
    if (kind == "btype") return BTypeLabel{PairPartition::parse(body)};
    if (kind == "ipair") return IPairLabel{IndexedPair::parse(body)};
    if (kind == "glrep") {
        if (q < 2 || n < 1) throw std::invalid_argument("glrep label needs the ambient q and n");
        return MatRepLabel{FqMat::parse_hex(q, n, body)};
    }
    throw std::invalid_argument("unknown label kind: " + kind);
}

}  // namespace dcalg
