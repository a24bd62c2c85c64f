#pragma once

#include <cstdint>
#include <iosfwd>
#include <variant>

#include "kreach/graph.hpp"
#include "kreach/hk.hpp"
#include "kreach/kreach_index.hpp"

namespace kreach {

// Binary index format (little-endian throughout, fully deterministic):
//
//   magic "KRCH" | version u16 | flags u16 | k u32 | h u32 |
//   n u64 | m u64 | edge-hash u64 | cover-size u64 |
//   cover ids as ascending delta varints |
//   per cover vertex: out-count varint, target-rank delta varints,
//   weight offsets bit-packed at bit_width(2h) bits, padded per vertex.
//
// Weight offsets are k - weight (0..2h); h = 1 files reload as KReachIndex.
inline constexpr char kIndexMagic[4] = {'K', 'R', 'C', 'H'};
inline constexpr std::uint16_t kIndexVersion = 1;

using AnyIndex = std::variant<KReachIndex, HKReachIndex>;

// Serialize; returns bytes written. Output is byte-identical for equal inputs.
std::uint64_t save_index(const KReachIndex& idx, std::ostream& out);
std::uint64_t save_index(const HKReachIndex& idx, std::ostream& out);
std::uint64_t save_index(const AnyIndex& idx, std::ostream& out);

// Deserialize one index record; consumes exactly the record's bytes. Throws
// PersistError with a specific code for bad magic, unsupported version,
// truncation, or structural corruption.
AnyIndex load_index(std::istream& in);

// load_index plus a graph fingerprint check (PersistError::Code::
// fingerprint_mismatch when the index was built on different data).
AnyIndex load_index_for(const Graph& g, std::istream& in);

// Convenience accessors over AnyIndex.
std::uint32_t index_k(const AnyIndex& idx);
std::uint32_t index_h(const AnyIndex& idx);
const Cover& index_cover(const AnyIndex& idx);
std::uint64_t index_edge_count(const AnyIndex& idx);
const GraphFingerprint& index_fingerprint(const AnyIndex& idx);

} // namespace kreach
