#include "kreach/persist.hpp"

#include <bit>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>
#include <vector>

#include "kreach/errors.hpp"
#include "kreach/weighted_adjacency.hpp"

namespace kreach {

namespace {

class Writer {
public:
    explicit Writer(std::ostream& out) : out_(out) {}

    void bytes(const void* data, std::size_t len) {
        out_.write(static_cast<const char*>(data), static_cast<std::streamsize>(len));
        if (!out_) throw PersistError(PersistError::Code::io, "index write failed");
        count_ += len;
    }

    void u16le(std::uint16_t v) {
        unsigned char b[2] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8)};
        bytes(b, 2);
    }

    void u32le(std::uint32_t v) {
        unsigned char b[4];
        for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
        bytes(b, 4);
    }

    void u64le(std::uint64_t v) {
        unsigned char b[8];
        for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
        bytes(b, 8);
    }

    void varint(std::uint64_t v) {
        unsigned char b[10];
        std::size_t len = 0;
        do {
            unsigned char byte = static_cast<unsigned char>(v & 0x7f);
            v >>= 7;
            if (v != 0) byte |= 0x80;
            b[len++] = byte;
        } while (v != 0);
        bytes(b, len);
    }

    std::uint64_t count() const { return count_; }

private:
    std::ostream& out_;
    std::uint64_t count_ = 0;
};

class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    void bytes(void* data, std::size_t len) {
        in_.read(static_cast<char*>(data), static_cast<std::streamsize>(len));
        if (static_cast<std::size_t>(in_.gcount()) != len)
            throw PersistError(PersistError::Code::truncated, "index data ends early");
    }

    std::uint16_t u16le() {
        unsigned char b[2];
        bytes(b, 2);
        return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
    }

    std::uint32_t u32le() {
        unsigned char b[4];
        bytes(b, 4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
        return v;
    }

    std::uint64_t u64le() {
        unsigned char b[8];
        bytes(b, 8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
        return v;
    }

    std::uint64_t varint() {
        std::uint64_t v = 0;
        for (int shift = 0; shift < 64; shift += 7) {
            unsigned char byte;
            bytes(&byte, 1);
            v |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
            if ((byte & 0x80) == 0) {
                if (shift == 63 && (byte & 0x7e) != 0)
                    throw PersistError(PersistError::Code::corrupt, "varint overflows 64 bits");
                return v;
            }
        }
        throw PersistError(PersistError::Code::corrupt, "varint does not terminate");
    }

private:
    std::istream& in_;
};

// Packs fixed-width values LSB-first into bytes; one pad-to-byte per flush.
class BitPacker {
public:
    explicit BitPacker(unsigned bits) : bits_(bits) {}

    void push(std::uint32_t value) {
        acc_ |= static_cast<std::uint64_t>(value) << filled_;
        filled_ += bits_;
        while (filled_ >= 8) {
            buf_.push_back(static_cast<unsigned char>(acc_ & 0xff));
            acc_ >>= 8;
            filled_ -= 8;
        }
    }

    void flush(Writer& w) {
        if (filled_ > 0) {
            buf_.push_back(static_cast<unsigned char>(acc_ & 0xff));
            acc_ = 0;
            filled_ = 0;
        }
        if (!buf_.empty()) w.bytes(buf_.data(), buf_.size());
        buf_.clear();
    }

private:
    unsigned bits_;
    std::uint64_t acc_ = 0;
    unsigned filled_ = 0;
    std::vector<unsigned char> buf_;
};

class BitUnpacker {
public:
    BitUnpacker(Reader& r, unsigned bits, std::size_t count)
        : reader_(r), bits_(bits), remaining_(count) {
        std::size_t total_bits = count * bits;
        bytes_left_ = (total_bits + 7) / 8;
    }

    std::uint32_t next() {
        while (filled_ < bits_) {
            unsigned char byte;
            reader_.bytes(&byte, 1);
            --bytes_left_;
            acc_ |= static_cast<std::uint64_t>(byte) << filled_;
            filled_ += 8;
        }
        std::uint32_t v = static_cast<std::uint32_t>(acc_ & ((1u << bits_) - 1));
        acc_ >>= bits_;
        filled_ -= bits_;
        --remaining_;
        if (remaining_ == 0 && bytes_left_ > 0) {
            // Consume the pad bytes so the stream lands on the record boundary.
            while (bytes_left_ > 0) {
                unsigned char byte;
                reader_.bytes(&byte, 1);
                --bytes_left_;
            }
        }
        return v;
    }

private:
    Reader& reader_;
    unsigned bits_;
    std::size_t remaining_;
    std::size_t bytes_left_ = 0;
    std::uint64_t acc_ = 0;
    unsigned filled_ = 0;
};

unsigned offset_bits(std::uint32_t h) { return std::bit_width(2 * h); }

// Shared body: weights are materialized as offsets (k - weight) by `offset_of`.
template <typename OffsetFn>
std::uint64_t write_index(std::uint32_t k, std::uint32_t h, const GraphFingerprint& fp,
                          const Cover& cover, const WeightedAdjacency& adj, std::ostream& out,
                          OffsetFn offset_of) {
    Writer w(out);
    w.bytes(kIndexMagic, 4);
    w.u16le(kIndexVersion);
    w.u16le(0); // flags, reserved
    w.u32le(k);
    w.u32le(h);
    w.u64le(fp.n);
    w.u64le(fp.m);
    w.u64le(fp.edge_hash);
    w.u64le(cover.size());

    std::uint64_t prev = 0;
    bool first = true;
    for (VertexId v : cover.members()) {
        w.varint(first ? v : static_cast<std::uint64_t>(v) - prev);
        prev = v;
        first = false;
    }

    const unsigned bits = offset_bits(h);
    BitPacker packer(bits);
    for (std::size_t row = 0; row < adj.rows(); ++row) {
        auto targets = adj.row_targets(row);
        auto weights = adj.row_weights(row);
        w.varint(targets.size());
        std::uint64_t prev_rank = 0;
        for (std::size_t i = 0; i < targets.size(); ++i) {
            std::uint64_t rank = cover.rank_of(targets[i]);
            w.varint(i == 0 ? rank : rank - prev_rank);
            prev_rank = rank;
        }
        for (std::size_t i = 0; i < targets.size(); ++i) packer.push(offset_of(weights[i]));
        packer.flush(w);
    }
    out.flush();
    if (!out) throw PersistError(PersistError::Code::io, "index write failed");
    return w.count();
}

} // namespace

std::uint64_t save_index(const KReachIndex& idx, std::ostream& out) {
    // In-memory codes are weight - (k-2); the file stores offsets k - weight.
    return write_index(idx.k(), 1, idx.fingerprint(), idx.cover(), idx.adj(), out,
                       [](std::uint8_t code) { return static_cast<std::uint32_t>(2 - code); });
}

std::uint64_t save_index(const HKReachIndex& idx, std::ostream& out) {
    return write_index(idx.k(), idx.h(), idx.fingerprint(), idx.cover(), idx.adj(), out,
                       [](std::uint8_t offset) { return static_cast<std::uint32_t>(offset); });
}

std::uint64_t save_index(const AnyIndex& idx, std::ostream& out) {
    return std::visit([&out](const auto& concrete) { return save_index(concrete, out); }, idx);
}

AnyIndex load_index(std::istream& in) {
    Reader r(in);

    char magic[4];
    r.bytes(magic, 4);
    if (std::memcmp(magic, kIndexMagic, 4) != 0)
        throw PersistError(PersistError::Code::bad_magic, "not an index file");
    std::uint16_t version = r.u16le();
    if (version != kIndexVersion)
        throw PersistError(PersistError::Code::bad_version,
                           "unsupported index version " + std::to_string(version));
    r.u16le(); // flags, reserved

    const std::uint32_t k = r.u32le();
    const std::uint32_t h = r.u32le();
    GraphFingerprint fp;
    fp.n = r.u64le();
    fp.m = r.u64le();
    fp.edge_hash = r.u64le();
    const std::uint64_t cover_size = r.u64le();

    if (h < 1 || h > 127) throw PersistError(PersistError::Code::corrupt, "hop radius out of range");
    if (h == 1 ? k < 2 : k <= 2 * h)
        throw PersistError(PersistError::Code::corrupt, "reach bound too small for hop radius");
    if (fp.n > std::numeric_limits<VertexId>::max())
        throw PersistError(PersistError::Code::corrupt, "vertex count exceeds 32-bit ids");
    if (cover_size > fp.n)
        throw PersistError(PersistError::Code::corrupt, "cover larger than the graph");

    std::vector<VertexId> members;
    members.reserve(cover_size);
    std::uint64_t prev = 0;
    for (std::uint64_t i = 0; i < cover_size; ++i) {
        std::uint64_t delta = r.varint();
        std::uint64_t id = (i == 0) ? delta : prev + delta;
        if (i != 0 && delta == 0)
            throw PersistError(PersistError::Code::corrupt, "cover ids not strictly ascending");
        if (id >= fp.n) throw PersistError(PersistError::Code::corrupt, "cover id out of range");
        members.push_back(static_cast<VertexId>(id));
        prev = id;
    }
    Cover cover = Cover::from_members(static_cast<VertexId>(fp.n), h, members, CoverOrigin::external);

    const unsigned bits = offset_bits(h);
    const std::uint32_t max_offset = 2 * h;
    WeightedAdjacency adj;
    adj.offsets.reserve(cover_size + 1);
    for (std::uint64_t row = 0; row < cover_size; ++row) {
        std::uint64_t out_count = r.varint();
        if (out_count > cover_size)
            throw PersistError(PersistError::Code::corrupt, "row longer than the cover");
        std::uint64_t prev_rank = 0;
        for (std::uint64_t i = 0; i < out_count; ++i) {
            std::uint64_t delta = r.varint();
            std::uint64_t rank = (i == 0) ? delta : prev_rank + delta;
            if (i != 0 && delta == 0)
                throw PersistError(PersistError::Code::corrupt, "row ranks not strictly ascending");
            if (rank >= cover_size)
                throw PersistError(PersistError::Code::corrupt, "row rank out of range");
            if (members[rank] == members[row])
                throw PersistError(PersistError::Code::corrupt, "self-loop stored in index");
            adj.targets.push_back(members[rank]);
            prev_rank = rank;
        }
        if (out_count > 0) {
            BitUnpacker unpack(r, bits, out_count);
            for (std::uint64_t i = 0; i < out_count; ++i) {
                std::uint32_t offset = unpack.next();
                if (offset > max_offset)
                    throw PersistError(PersistError::Code::corrupt, "weight offset out of range");
                std::uint8_t weight = (h == 1) ? static_cast<std::uint8_t>(2 - offset)
                                               : static_cast<std::uint8_t>(offset);
                adj.weights.push_back(weight);
            }
        }
        adj.offsets.push_back(adj.targets.size());
    }

    if (h == 1) return KReachIndex::from_parts(k, std::move(cover), std::move(adj), fp);
    return HKReachIndex::from_parts(h, k, std::move(cover), std::move(adj), fp);
}

AnyIndex load_index_for(const Graph& g, std::istream& in) {
    AnyIndex idx = load_index(in);
    if (!(index_fingerprint(idx) == g.fingerprint()))
        throw PersistError(PersistError::Code::fingerprint_mismatch,
                           "index was built for a different graph");
    return idx;
}

std::uint32_t index_k(const AnyIndex& idx) {
    return std::visit([](const auto& i) { return i.k(); }, idx);
}

std::uint32_t index_h(const AnyIndex& idx) {
    if (const auto* hk = std::get_if<HKReachIndex>(&idx)) return hk->h();
    return 1;
}

const Cover& index_cover(const AnyIndex& idx) {
    return std::visit([](const auto& i) -> const Cover& { return i.cover(); }, idx);
}

std::uint64_t index_edge_count(const AnyIndex& idx) {
    return std::visit([](const auto& i) { return i.edge_count(); }, idx);
}

const GraphFingerprint& index_fingerprint(const AnyIndex& idx) {
    return std::visit([](const auto& i) -> const GraphFingerprint& { return i.fingerprint(); }, idx);
}

} // namespace kreach
