#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ul {

// A bit string with an exact length. All aux blobs and tickets are Blobs so
// that the reported C_s / C_t sizes are the serialized sizes, not estimates.
struct Blob {
    std::vector<std::uint8_t> bytes;
    std::size_t nbits = 0;

    friend bool operator==(const Blob&, const Blob&) = default;
};

// Packs fixed-width fields LSB-first into a little-endian bit stream.
class BitWriter {
public:
    // Appends the low `width` bits of `v`.
    void put(std::uint64_t v, unsigned width) {
        if (width > 64) throw std::invalid_argument("BitWriter: width > 64");
        if (width < 64 && (v >> width) != 0)
            throw std::invalid_argument("BitWriter: value does not fit field");
        for (unsigned k = 0; k < width; ++k) {
            if (nbits_ % 8 == 0) buf_.push_back(0);
            if ((v >> k) & 1) buf_.back() |= std::uint8_t(1u << (nbits_ % 8));
            ++nbits_;
        }
    }

    std::size_t bit_size() const { return nbits_; }

    Blob take() { return Blob{std::move(buf_), nbits_}; }

private:
    std::vector<std::uint8_t> buf_;
    std::size_t nbits_ = 0;
};

class BitReader {
public:
    explicit BitReader(const Blob& b) : blob_(b) {}

    std::uint64_t get(unsigned width) {
        if (width > 64) throw std::invalid_argument("BitReader: width > 64");
        if (pos_ + width > blob_.nbits)
            throw std::out_of_range("BitReader: read past end of blob");
        std::uint64_t v = 0;
        for (unsigned k = 0; k < width; ++k, ++pos_)
            if ((blob_.bytes[pos_ / 8] >> (pos_ % 8)) & 1) v |= std::uint64_t(1) << k;
        return v;
    }

    std::size_t remaining() const { return blob_.nbits - pos_; }
    bool done() const { return pos_ == blob_.nbits; }

private:
    const Blob& blob_;
    std::size_t pos_ = 0;
};

// Appends the whole blob to the writer.
inline void append_bits(BitWriter& w, const Blob& b) {
    BitReader r(b);
    while (r.remaining() >= 32) w.put(r.get(32), 32);
    if (r.remaining() > 0) {
        unsigned rest = static_cast<unsigned>(r.remaining());
        w.put(r.get(rest), rest);
    }
}

// Extracts the next `nbits` as a standalone blob.
inline Blob read_bits(BitReader& r, std::size_t nbits) {
    BitWriter w;
    std::size_t left = nbits;
    while (left >= 32) { w.put(r.get(32), 32); left -= 32; }
    if (left > 0) w.put(r.get(static_cast<unsigned>(left)), static_cast<unsigned>(left));
    return w.take();
}

// Bits needed to store values 0..n-1 (0 for n <= 1).
inline unsigned bit_width_for(std::uint64_t n) {
    unsigned w = 0;
    while ((std::uint64_t(1) << w) < n) ++w;
    return w;
}

}  // namespace ul
