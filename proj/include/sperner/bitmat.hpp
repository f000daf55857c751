#pragma once

#include <cstdint>
#include <vector>

namespace sperner {

// Dense square bit matrix used for order relations and their closures.
// Row-major, 64-bit words, sized at construction.
class BitMatrix {
public:
    BitMatrix() : n_(0), words_(0) {}
    explicit BitMatrix(int n) : n_(n), words_((n + 63) / 64), bits_(size_t(n) * words_, 0) {}

    int size() const { return n_; }

    bool get(int r, int c) const { return (row(r)[c >> 6] >> (c & 63)) & 1u; }
    void set(int r, int c) { row(r)[c >> 6] |= uint64_t(1) << (c & 63); }
    void clear(int r, int c) { row(r)[c >> 6] &= ~(uint64_t(1) << (c & 63)); }

    // row(r) |= row(s)
    void or_row(int r, int s) {
        uint64_t* a = row(r);
        const uint64_t* b = row(s);
        for (int w = 0; w < words_; ++w) a[w] |= b[w];
    }

    // any bit set in row(r) & row_of(other, s)
    bool rows_intersect(int r, const BitMatrix& other, int s) const {
        const uint64_t* a = row(r);
        const uint64_t* b = other.row(s);
        for (int w = 0; w < words_; ++w)
            if (a[w] & b[w]) return true;
        return false;
    }

    int row_popcount(int r) const {
        const uint64_t* a = row(r);
        int c = 0;
        for (int w = 0; w < words_; ++w) c += __builtin_popcountll(a[w]);
        return c;
    }

    template <typename F>
    void for_each_in_row(int r, F f) const {
        const uint64_t* a = row(r);
        for (int w = 0; w < words_; ++w) {
            uint64_t x = a[w];
            while (x) {
                int b = __builtin_ctzll(x);
                f(w * 64 + b);
                x &= x - 1;
            }
        }
    }

    bool operator==(const BitMatrix& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    uint64_t* row(int r) { return bits_.data() + size_t(r) * words_; }
    const uint64_t* row(int r) const { return bits_.data() + size_t(r) * words_; }

    int n_;
    int words_;
    std::vector<uint64_t> bits_;
};

}  // namespace sperner
