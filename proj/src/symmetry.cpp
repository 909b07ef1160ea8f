#include "gerry/symmetry.hpp"

#include <stdexcept>

namespace gerry {

D4Table::D4Table(int n) : n_(n) {
    if (n < 1 || n * n > 64) throw std::invalid_argument("D4Table: n out of range");
    auto idx = [n](int r, int c) { return r * n + c; };
    for (int s = 0; s < 8; ++s)
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                int rr = r, cc = c;
                if (s & 4) cc = n - 1 - cc;          // horizontal flip
                for (int q = 0; q < (s & 3); ++q) {  // quarter turns
                    int t = rr;
                    rr = cc;
                    cc = n - 1 - t;
                }
                perms_[s][idx(r, c)] = static_cast<std::uint8_t>(idx(rr, cc));
            }
    n_chunks_ = (n * n + 7) / 8;
    for (int s = 0; s < 8; ++s)
        for (int ch = 0; ch < n_chunks_; ++ch)
            for (int v = 0; v < 256; ++v) {
                std::uint64_t out = 0;
                for (int bit = 0; bit < 8; ++bit) {
                    int i = ch * 8 + bit;
                    if (i < n * n && (v >> bit & 1)) out |= std::uint64_t{1} << perms_[s][i];
                }
                scatter_[ch][s][v] = out;
            }
}

std::uint64_t D4Table::apply(std::uint64_t bits, int s) const {
    std::uint64_t out = 0;
    for (int ch = 0; ch < n_chunks_; ++ch)
        out |= scatter_[ch][s][(bits >> (ch * 8)) & 0xff];
    return out;
}

std::uint64_t D4Table::canonical(std::uint64_t bits) const {
    std::uint64_t best = apply(bits, 0);
    for (int s = 1; s < 8; ++s) {
        std::uint64_t img = apply(bits, s);
        if (img < best) best = img;
    }
    return best;
}

int D4Table::orbit_size(std::uint64_t bits) const {
    int stabilizer = 0;
    for (int s = 0; s < 8; ++s)
        if (apply(bits, s) == bits) ++stabilizer;
    return 8 / stabilizer;
}

}  // namespace gerry
