#include "graphorder/codec.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <string>

namespace graphorder {

namespace {

int floor_log2(std::uint64_t x) {
    return 63 - std::countl_zero(x);
}

struct BitWriter {
    std::vector<std::uint8_t> bytes;
    std::uint64_t bits = 0;

    void put_bit(unsigned b) {
        if (bits % 8 == 0) bytes.push_back(0);
        if (b) bytes.back() |= std::uint8_t(0x80u >> (bits % 8));
        ++bits;
    }
    // Elias-gamma for x >= 1: floor(log2 x) zeros, then x in binary.
    void put_gamma(std::uint64_t x) {
        int nb = floor_log2(x);
        for (int i = 0; i < nb; ++i) put_bit(0);
        for (int i = nb; i >= 0; --i) put_bit((x >> i) & 1u);
    }
};

struct BitReader {
    const std::vector<std::uint8_t>& bytes;
    std::uint64_t pos = 0;

    bool exhausted() const { return pos >= std::uint64_t(bytes.size()) * 8; }
    unsigned get_bit() {
        if (exhausted()) throw DataError("vgc: truncated stream");
        unsigned b = (bytes[size_t(pos / 8)] >> (7 - pos % 8)) & 1u;
        ++pos;
        return b;
    }
    std::uint64_t get_gamma() {
        int nb = 0;
        while (get_bit() == 0) {
            if (++nb > 63) throw DataError("vgc: corrupt gamma prefix");
        }
        std::uint64_t x = 1;
        for (int i = 0; i < nb; ++i) x = (x << 1) | get_bit();
        return x;
    }
};

int gamma_bits(std::uint64_t x) {
    return 2 * floor_log2(x) + 1;
}

} // namespace

std::uint64_t EncodedGraph::payload_bits() const {
    return bits_;
}

EncodedGraph encode(const Graph& g, const Permutation& pi) {
    if (pi.n() != g.n()) throw DataError("encode: permutation size mismatch");
    const auto& fwd = pi.forward();
    const auto& inv = pi.inverse();
    BitWriter bw;
    std::vector<vidx> row;
    for (vidx r = 0; r < g.n(); ++r) {
        vidx v = inv[size_t(r)];
        row.clear();
        for (vidx u : g.neighbors(v)) row.push_back(fwd[size_t(u)]);
        std::sort(row.begin(), row.end());
        bw.put_gamma(std::uint64_t(row.size()) + 1);
        if (!row.empty()) {
            bw.put_gamma(std::uint64_t(row[0]) + 1);
            for (size_t i = 1; i < row.size(); ++i)
                bw.put_gamma(std::uint64_t(row[i] - row[i - 1]));
        }
    }
    EncodedGraph enc;
    enc.n = std::uint64_t(g.n());
    enc.m = std::uint64_t(g.nnz());
    enc.payload = std::move(bw.bytes);
    enc.bits_ = bw.bits;
    return enc;
}

Graph decode(const EncodedGraph& enc) {
    if (enc.n > (1ull << 31) - 2) throw DataError("vgc: dimension too large");
    vidx n = vidx(enc.n);
    BitReader br{enc.payload};
    std::vector<eidx> offsets(size_t(n) + 1, 0);
    std::vector<vidx> cols;
    cols.reserve(size_t(enc.m));
    for (vidx r = 0; r < n; ++r) {
        try {
            std::uint64_t d = br.get_gamma() - 1;
            if (d > std::uint64_t(n)) throw DataError("vgc: degree out of range");
            if (d > 0) {
                std::uint64_t prev = br.get_gamma() - 1;
                if (prev >= std::uint64_t(n)) throw DataError("vgc: neighbor out of range");
                cols.push_back(vidx(prev));
                for (std::uint64_t i = 1; i < d; ++i) {
                    std::uint64_t gap = br.get_gamma();
                    prev += gap; // gamma cannot encode a zero gap
                    if (prev >= std::uint64_t(n))
                        throw DataError("vgc: neighbor out of range");
                    cols.push_back(vidx(prev));
                }
            }
            offsets[size_t(r) + 1] = eidx(cols.size());
        } catch (const DataError& e) {
            throw DataError(std::string(e.what()) + " (row " + std::to_string(r) + ")");
        }
    }
    if (std::uint64_t(cols.size()) != enc.m)
        throw DataError("vgc: entry count does not match header");
    return Graph(n, std::move(offsets), std::move(cols));
}

double encoded_bits_per_link(const Graph& g, const Permutation& pi) {
    if (g.nnz() == 0) throw DataError("encoded_bits_per_link: graph has no edges");
    if (pi.n() != g.n()) throw DataError("encoded_bits_per_link: permutation size mismatch");
    const auto& fwd = pi.forward();
    std::uint64_t bits = 0;
    std::vector<vidx> row;
    for (vidx v = 0; v < g.n(); ++v) {
        row.clear();
        for (vidx u : g.neighbors(v)) row.push_back(fwd[size_t(u)]);
        std::sort(row.begin(), row.end());
        bits += std::uint64_t(gamma_bits(row.size() + 1));
        if (!row.empty()) {
            bits += std::uint64_t(gamma_bits(std::uint64_t(row[0]) + 1));
            for (size_t i = 1; i < row.size(); ++i)
                bits += std::uint64_t(gamma_bits(std::uint64_t(row[i] - row[i - 1])));
        }
    }
    return double(bits) / double(g.nnz());
}

void save_vgc(const EncodedGraph& enc, std::ostream& out) {
    out.write("VGC1", 4);
    auto put_u64 = [&out](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) out.put(char((x >> (8 * i)) & 0xff));
    };
    put_u64(enc.n);
    put_u64(enc.m);
    out.write(reinterpret_cast<const char*>(enc.payload.data()),
              std::streamsize(enc.payload.size()));
}

EncodedGraph load_vgc(std::istream& in) {
    char magic[4];
    if (!in.read(magic, 4) || std::string(magic, 4) != "VGC1")
        throw DataError("vgc: bad magic");
    auto get_u64 = [&in]() {
        std::uint64_t x = 0;
        for (int i = 0; i < 8; ++i) {
            int c = in.get();
            if (c == EOF) throw DataError("vgc: truncated header");
            x |= std::uint64_t(std::uint8_t(c)) << (8 * i);
        }
        return x;
    };
    EncodedGraph enc;
    enc.n = get_u64();
    enc.m = get_u64();
    enc.payload.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return enc;
}

} // namespace graphorder
