#include "ivds/bitstrings.hpp"

#include <stdexcept>

namespace ivds {

BitString::BitString(int w, uint32_t v) : width(w), value(v) {
    if (w < 0 || w > 30) throw std::invalid_argument("bitstring: bad width");
    if (w < 30 && v >= (1u << w))
        throw std::invalid_argument("bitstring: value exceeds width");
}

BitString BitString::from_string(const std::string &bits) {
    uint32_t v = 0;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("bitstring: not a 0/1 string");
        v = (v << 1) | static_cast<uint32_t>(c - '0');
    }
    return BitString(static_cast<int>(bits.size()), v);
}

int BitString::bit(int i) const {
    if (i < 1 || i > width) throw std::out_of_range("bitstring: bit index");
    return (value >> (width - i)) & 1u;
}

std::string BitString::str() const {
    std::string s(width, '0');
    for (int i = 1; i <= width; ++i) s[i - 1] = static_cast<char>('0' + bit(i));
    return s;
}

BitString rev(int gamma, const BitString &x) {
    if (x.width != gamma) throw std::invalid_argument("rev: width mismatch");
    uint32_t v = 0;
    for (int i = 0; i < gamma; ++i)
        if (x.value & (1u << i)) v |= 1u << (gamma - 1 - i);
    return BitString(gamma, v);
}

LcaTriple lca_triple(const BitString &x, const BitString &y) {
    if (x.width != y.width) throw std::invalid_argument("lca: width mismatch");
    if (x.value == y.value) throw std::invalid_argument("lca: x = y");
    const int gamma = x.width;
    int l = 1;
    while (x.bit(l) == y.bit(l)) ++l;
    LcaTriple t;
    t.lca = x.str().substr(0, l - 1);
    uint32_t prefix = x.value >> (gamma - l + 1);
    uint32_t ones = (gamma - l > 0) ? ((1u << (gamma - l)) - 1u) : 0u;
    t.floor_ = BitString(gamma, (prefix << (gamma - l + 1)) | ones);
    t.ceil_ = BitString(gamma, t.floor_.value + 1);
    return t;
}

std::vector<std::pair<BitString, BitString>> hypercube_edges(int gamma) {
    if (gamma < 1) throw std::invalid_argument("hypercube_edges: gamma < 1");
    std::vector<std::pair<BitString, BitString>> out;
    const uint32_t k = 1u << gamma;
    for (uint32_t x = 0; x < k; ++x)
        for (int b = 0; b < gamma; ++b)
            if (!(x & (1u << b)))
                out.push_back({BitString(gamma, x), BitString(gamma, x | (1u << b))});
    return out;
}

}  // namespace ivds
