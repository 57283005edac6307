#pragma once

#include <cstdint>
#include <vector>

namespace mcg {

// Dense bit vectors and matrices over the two-element field. Instance sizes
// here are at most a few thousand cells, so plain Gaussian elimination is the
// right tool.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(int i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }
    void operator^=(const BitVec& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }
    bool none() const {
        for (uint64_t x : w_)
            if (x) return false;
        return true;
    }
    int lowest_set() const;  // -1 if none
    bool dot(const BitVec& o) const;  // mod-2 inner product

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

// Row-echelon form with remembered pivot columns; supports rank, membership
// tests, and canonical reduction against the row space. Pivot choice is the
// lowest set bit, so reductions are reproducible.
class RowBasis {
public:
    explicit RowBasis(int width) : width_(width) {}

    int width() const { return width_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Reduces v against the current rows; returns the residue.
    BitVec reduce(BitVec v) const;

    // Adds v to the basis if independent; returns true if the rank grew.
    bool add(BitVec v);

    bool contains(const BitVec& v) const { return reduce(v).none(); }

    const std::vector<BitVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    int width_;
    std::vector<BitVec> rows_;   // each with a unique pivot, kept reduced
    std::vector<int> pivots_;
};

int rank_of(const std::vector<BitVec>& rows, int width);

// Kernel basis of the linear map x -> (x * rows^T): vectors x of dimension
// nrows with sum of selected rows = 0. Used with rows = boundary images.
std::vector<BitVec> kernel_basis(const std::vector<BitVec>& row_images, int width);

} // namespace mcg
