#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace gerry {

// The 8 symmetries of the n x n square acting on row-major bit vectors.
class D4Table {
  public:
    explicit D4Table(int n);

    int n() const { return n_; }
    int k() const { return n_ * n_; }

    // Image of `bits` under symmetry s (0 = identity).
    std::uint64_t apply(std::uint64_t bits, int s) const;

    // Numerically smallest image over all 8 symmetries.
    std::uint64_t canonical(std::uint64_t bits) const;

    // Number of distinct images; always divides 8.
    int orbit_size(std::uint64_t bits) const;

    // perm(s)[i] = image index of block i under symmetry s.
    const std::array<std::uint8_t, 64>& perm(int s) const { return perms_[s]; }

  private:
    int n_;
    std::array<std::array<std::uint8_t, 64>, 8> perms_{};
    // byte-scatter tables: chunk c of the input, one 256-entry map per symmetry
    std::array<std::array<std::array<std::uint64_t, 256>, 8>, 8> scatter_{};
    int n_chunks_ = 0;
};

}  // namespace gerry
