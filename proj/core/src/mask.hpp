#pragma once

#include <array>
#include <bit>
#include <cstdint>

// Fixed-width bitmask over vertex ids, sized in 64-bit words. Internal to the
// search engines; ids are lexicographic ranks so bit order = lex order.

namespace bhdpc::detail {

template <int W>
struct FixedMask {
    std::array<uint64_t, W> w{};

    static FixedMask all_below(int n) {
        FixedMask m;
        for (int i = 0; i < W && n > 0; i++, n -= 64)
            m.w[i] = (n >= 64) ? ~0ULL : ((1ULL << n) - 1);
        return m;
    }

    void set(int b) { w[b >> 6] |= 1ULL << (b & 63); }
    void reset(int b) { w[b >> 6] &= ~(1ULL << (b & 63)); }
    bool test(int b) const { return (w[b >> 6] >> (b & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t x : w) c += std::popcount(x);
        return c;
    }
    bool none() const {
        for (uint64_t x : w)
            if (x) return false;
        return true;
    }
    bool any() const { return !none(); }

    int lowest() const {  // -1 when empty
        for (int i = 0; i < W; i++)
            if (w[i]) return i * 64 + std::countr_zero(w[i]);
        return -1;
    }

    friend FixedMask operator&(FixedMask a, const FixedMask& b) {
        for (int i = 0; i < W; i++) a.w[i] &= b.w[i];
        return a;
    }
    friend FixedMask operator|(FixedMask a, const FixedMask& b) {
        for (int i = 0; i < W; i++) a.w[i] |= b.w[i];
        return a;
    }
    friend FixedMask operator~(FixedMask a) {
        for (int i = 0; i < W; i++) a.w[i] = ~a.w[i];
        return a;
    }
    FixedMask& operator&=(const FixedMask& b) {
        for (int i = 0; i < W; i++) w[i] &= b.w[i];
        return *this;
    }
    FixedMask& operator|=(const FixedMask& b) {
        for (int i = 0; i < W; i++) w[i] |= b.w[i];
        return *this;
    }
    bool operator==(const FixedMask&) const = default;

    bool intersects(const FixedMask& b) const {
        for (int i = 0; i < W; i++)
            if (w[i] & b.w[i]) return true;
        return false;
    }

    // Visit set bits in increasing order; f(bit) returning false stops early.
    template <class F>
    bool for_each(F&& f) const {
        for (int i = 0; i < W; i++) {
            uint64_t x = w[i];
            while (x) {
                int b = i * 64 + std::countr_zero(x);
                x &= x - 1;
                if (!f(b)) return false;
            }
        }
        return true;
    }
};

using Mask64 = FixedMask<1>;
using Mask256 = FixedMask<4>;

}  // namespace bhdpc::detail
