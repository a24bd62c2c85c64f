#include "kreach/multik.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "kreach/errors.hpp"
#include "kreach/persist.hpp"
#include "kreach/query.hpp"
#include "kreach/stats.hpp"

namespace kreach {

namespace {

constexpr std::uint32_t kExactStatsLimit = 10'000;
constexpr std::uint32_t kDiameterSampleSources = 400;

std::vector<std::uint32_t> family_keys(FamilyMode mode, std::uint32_t diameter) {
    std::vector<std::uint32_t> keys;
    if (mode == FamilyMode::geometric) {
        std::uint32_t top = diameter <= 1 ? 2 : std::bit_ceil(diameter);
        for (std::uint32_t key = 2; key <= top; key *= 2) keys.push_back(key);
    } else {
        std::uint32_t top = std::max<std::uint32_t>(diameter, 2);
        for (std::uint32_t key = 2; key <= top; ++key) keys.push_back(key);
    }
    return keys;
}

const char* mode_name(FamilyMode mode) {
    return mode == FamilyMode::geometric ? "geometric" : "exact";
}

} // namespace

MultiKIndex::MultiKIndex(FamilyMode mode, std::uint32_t diameter,
                         std::vector<KReachIndex> members)
    : mode_(mode), diameter_(diameter), members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("a family needs at least one member");
    for (std::size_t i = 1; i < members_.size(); ++i) {
        if (members_[i - 1].k() >= members_[i].k())
            throw std::invalid_argument("family keys must be strictly ascending");
        if (!(members_[i].fingerprint() == members_[0].fingerprint()))
            throw std::invalid_argument("family members disagree on the source graph");
    }
}

const KReachIndex& MultiKIndex::member(std::uint32_t key) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), key,
                               [](const KReachIndex& m, std::uint32_t k) { return m.k() < k; });
    if (it == members_.end() || it->k() != key)
        throw std::invalid_argument("no family member with k=" + std::to_string(key));
    return *it;
}

MultiKIndex build_family(const Graph& g, FamilyMode mode, CoverStrategy strategy,
                         std::uint64_t seed, unsigned threads) {
    GraphStats st = g.num_vertices() <= kExactStatsLimit
                        ? graph_stats(g)
                        : graph_stats_sampled(g, seed, kDiameterSampleSources);
    Cover cover = approx_vertex_cover(g, strategy, seed);

    std::vector<KReachIndex> members;
    for (std::uint32_t key : family_keys(mode, st.diameter))
        members.push_back(build_kreach(g, key, cover, threads));
    return MultiKIndex(mode, st.diameter, std::move(members));
}

GeneralAnswer query_general(const MultiKIndex& m, const Graph& g, VertexId s, VertexId t,
                            std::uint32_t k) {
    if (s >= g.num_vertices() || t >= g.num_vertices())
        throw ValidationError("query vertex out of range");
    if (k < 1) throw std::invalid_argument("reach bound must be at least 1");
    if (m.size() == 0) throw std::invalid_argument("empty family");

    using Verdict = GeneralAnswer::Verdict;
    auto exact = [](bool reachable) {
        return GeneralAnswer{reachable ? Verdict::yes_exact : Verdict::no_exact, 0};
    };

    if (s == t) return exact(true);
    if (k == 1) return exact(query_k1(g, s, t).reachable);

    const std::uint32_t top = m.top_key();
    if (m.mode() == FamilyMode::exact) {
        // Every k in [2, top] has its own member; above top the top member is
        // still exact, because any reachable pair has distance <= diameter <= top.
        return exact(query(g, m.member(std::min(k, top)), s, t).reachable);
    }

    // Geometric: K = smallest key >= k (or the top key when k is above it).
    const auto& members = m.members();
    auto it = std::lower_bound(members.begin(), members.end(), k,
                               [](const KReachIndex& mem, std::uint32_t v) { return mem.k() < v; });
    const KReachIndex& upper = (it == members.end()) ? members.back() : *it;
    const std::uint32_t K = upper.k();

    bool within_upper = query(g, upper, s, t).reachable;
    if (K <= k) {
        // K == k exactly, or k exceeds the top key: a miss at the top key
        // means the pair is unreachable outright (top >= diameter).
        return exact(within_upper);
    }
    if (!within_upper) return exact(false); // dist > K > k
    const KReachIndex& lower = m.member(K / 2);
    if (query(g, lower, s, t).reachable) return exact(true); // dist <= K/2 < k

    // dist is now pinned to (K/2, K]; decide dist <= k by splitting any
    // candidate path after k - K/2 hops: s reaches t within k iff some vertex
    // w at forward distance a <= k - K/2 has dist(w, t) <= K/2, and the lower
    // member answers the second leg exactly.
    const std::uint32_t radius = k - K / 2;
    BoundedBfs probe(g.num_vertices());
    for (VertexId w : probe.run(g, s, radius, Direction::forward)) {
        if (w == t || query(g, lower, w, t).reachable) return exact(true);
    }
    return GeneralAnswer{Verdict::approx_within, K};
}

std::uint64_t save_family(const MultiKIndex& m, std::ostream& out) {
    std::string header = "KRFAM v1 mode=";
    header += mode_name(m.mode());
    header += " count=" + std::to_string(m.size()) + "\n";
    out.write(header.data(), static_cast<std::streamsize>(header.size()));

    std::uint64_t total = header.size();
    std::vector<std::string> blobs;
    blobs.reserve(m.size());
    for (const KReachIndex& member : m.members()) {
        std::ostringstream blob(std::ios::binary);
        save_index(member, blob);
        blobs.push_back(std::move(blob).str());
    }
    for (std::size_t i = 0; i < blobs.size(); ++i) {
        std::uint32_t key = m.members()[i].k();
        std::uint64_t len = blobs[i].size();
        unsigned char entry[12];
        for (int b = 0; b < 4; ++b) entry[b] = static_cast<unsigned char>(key >> (8 * b));
        for (int b = 0; b < 8; ++b) entry[4 + b] = static_cast<unsigned char>(len >> (8 * b));
        out.write(reinterpret_cast<const char*>(entry), 12);
        total += 12;
    }
    for (const std::string& blob : blobs) {
        out.write(blob.data(), static_cast<std::streamsize>(blob.size()));
        total += blob.size();
    }
    out.flush();
    if (!out) throw PersistError(PersistError::Code::io, "family write failed");
    return total;
}

MultiKIndex load_family(std::istream& in) {
    std::string header;
    if (!std::getline(in, header))
        throw PersistError(PersistError::Code::truncated, "missing family header");
    std::istringstream hs(header);
    std::string magic, version, mode_field, count_field;
    hs >> magic >> version >> mode_field >> count_field;
    if (magic != "KRFAM") throw PersistError(PersistError::Code::bad_magic, "not a family file");
    if (version != "v1")
        throw PersistError(PersistError::Code::bad_version, "unsupported family version");
    FamilyMode mode;
    if (mode_field == "mode=geometric") mode = FamilyMode::geometric;
    else if (mode_field == "mode=exact") mode = FamilyMode::exact;
    else throw PersistError(PersistError::Code::corrupt, "unknown family mode");
    std::uint64_t count = 0;
    if (count_field.rfind("count=", 0) != 0)
        throw PersistError(PersistError::Code::corrupt, "missing family member count");
    try {
        count = std::stoull(count_field.substr(6));
    } catch (const std::exception&) {
        throw PersistError(PersistError::Code::corrupt, "bad family member count");
    }
    if (count == 0 || count > 64)
        throw PersistError(PersistError::Code::corrupt, "family member count out of range");

    std::vector<std::uint32_t> keys(count);
    std::vector<std::uint64_t> lengths(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        unsigned char entry[12];
        in.read(reinterpret_cast<char*>(entry), 12);
        if (in.gcount() != 12)
            throw PersistError(PersistError::Code::truncated, "family key table ends early");
        std::uint32_t key = 0;
        for (int b = 0; b < 4; ++b) key |= static_cast<std::uint32_t>(entry[b]) << (8 * b);
        std::uint64_t len = 0;
        for (int b = 0; b < 8; ++b) len |= static_cast<std::uint64_t>(entry[4 + b]) << (8 * b);
        keys[i] = key;
        lengths[i] = len;
    }

    std::vector<KReachIndex> members;
    members.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        std::istream::pos_type before = in.tellg();
        AnyIndex idx = load_index(in);
        std::istream::pos_type after = in.tellg();
        if (before != std::istream::pos_type(-1) && after != std::istream::pos_type(-1) &&
            static_cast<std::uint64_t>(after - before) != lengths[i])
            throw PersistError(PersistError::Code::corrupt,
                               "family member size disagrees with the key table");
        auto* plain = std::get_if<KReachIndex>(&idx);
        if (plain == nullptr)
            throw PersistError(PersistError::Code::corrupt, "family member is not a 1-hop index");
        if (plain->k() != keys[i])
            throw PersistError(PersistError::Code::corrupt, "family key table disagrees with member");
        members.push_back(std::move(*plain));
    }
    try {
        // Loaded families carry the top key as the diameter hint.
        std::uint32_t top = members.back().k();
        return MultiKIndex(mode, top, std::move(members));
    } catch (const std::invalid_argument& e) {
        throw PersistError(PersistError::Code::corrupt, e.what());
    }
}

MultiKIndex load_family_for(const Graph& g, std::istream& in) {
    MultiKIndex m = load_family(in);
    if (!(m.members().front().fingerprint() == g.fingerprint()))
        throw PersistError(PersistError::Code::fingerprint_mismatch,
                           "family was built for a different graph");
    return m;
}

} // namespace kreach
