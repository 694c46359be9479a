#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ivds {

/// Fixed-width binary word; bit 1 is the most significant (leftmost).
struct BitString {
    int width = 0;
    uint32_t value = 0;

    BitString() = default;
    BitString(int w, uint32_t v);
    static BitString from_string(const std::string &bits);

    int bit(int i) const;  // 1-indexed from the left
    std::string str() const;
    bool operator==(const BitString &o) const {
        return width == o.width && value == o.value;
    }
};

/// Reverse of x as a gamma-bit string.
BitString rev(int gamma, const BitString &x);

struct LcaTriple {
    std::string lca;   // common prefix before the first differing bit
    BitString floor_;  // lca . 0 . 1^(gamma-l)
    BitString ceil_;   // lca . 1 . 0^(gamma-l)
};

LcaTriple lca_triple(const BitString &x, const BitString &y);

/// All hypercube edges (x,x') with x < x' and Hamming distance 1.
std::vector<std::pair<BitString, BitString>> hypercube_edges(int gamma);

}  // namespace ivds
