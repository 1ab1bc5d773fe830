#ifndef GRAPHORDER_CODEC_HPP
#define GRAPHORDER_CODEC_HPP

#include "graphorder/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace graphorder {

/// Elias-gamma gap-encoded adjacency stream. Per row r in new-index order:
/// gamma(d(r)+1), then for nonempty rows gamma(first_neighbor+1) followed by
/// gamma(gap_i) over consecutive sorted neighbors. The payload is padded
/// with zero bits to a byte boundary at the stream end only.
struct EncodedGraph {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::vector<std::uint8_t> payload;

    /// Exact bit count before padding; known for freshly encoded streams,
    /// zero for streams loaded from disk (padding is self-delimiting).
    std::uint64_t payload_bits() const;

    bool operator==(const EncodedGraph& o) const {
        return n == o.n && m == o.m && payload == o.payload;
    }

private:
    friend EncodedGraph encode(const Graph&, const Permutation&);
    std::uint64_t bits_ = 0;
};

/// Encode the permuted graph A(pi, pi).
EncodedGraph encode(const Graph& g, const Permutation& pi);

/// Exact inverse: decode(encode(g, pi)) == apply_permutation(g, pi).
/// Throws DataError on truncated streams (reporting the row), bad values.
Graph decode(const EncodedGraph& enc);

/// Payload bits divided by m, computed without materializing the stream.
/// Throws DataError when the graph has no edges.
double encoded_bits_per_link(const Graph& g, const Permutation& pi);

/// .vgc container: magic "VGC1", u64 n and m little-endian, payload bytes.
void save_vgc(const EncodedGraph& enc, std::ostream& out);
EncodedGraph load_vgc(std::istream& in);

} // namespace graphorder

#endif
