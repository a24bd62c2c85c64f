#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "kreach/cover.hpp"
#include "kreach/graph.hpp"
#include "kreach/kreach_index.hpp"

namespace kreach {

enum class FamilyMode : std::uint8_t { geometric, exact };

// Verdict of a general-k query. yes/no are exact ("-exact"); approx_within
// reports certified bounds: the true distance exceeds k but is at most
// `bound`, which never exceeds 2^ceil(lg k).
struct GeneralAnswer {
    enum class Verdict : std::uint8_t { yes_exact, no_exact, approx_within };

    Verdict verdict = Verdict::no_exact;
    std::uint32_t bound = 0; // the certified upper bound for approx_within

    friend bool operator==(const GeneralAnswer&, const GeneralAnswer&) = default;
};

// A family of i-reach indexes over one shared cover, answering reachability
// for arbitrary k. Geometric mode holds keys 2, 4, ..., 2^ceil(lg d) (d =
// diameter at build time, one key floor of {2} for degenerate d <= 1); exact
// mode holds every key 2..max(d, 2).
class MultiKIndex {
public:
    MultiKIndex() = default;
    MultiKIndex(FamilyMode mode, std::uint32_t diameter, std::vector<KReachIndex> members);

    FamilyMode mode() const noexcept { return mode_; }
    std::uint32_t diameter() const noexcept { return diameter_; }
    std::size_t size() const noexcept { return members_.size(); }
    const std::vector<KReachIndex>& members() const noexcept { return members_; }

    std::uint32_t top_key() const { return members_.back().k(); }
    // Member with exactly this k; throws std::invalid_argument if absent.
    const KReachIndex& member(std::uint32_t key) const;

private:
    FamilyMode mode_ = FamilyMode::geometric;
    std::uint32_t diameter_ = 0;
    std::vector<KReachIndex> members_;
};

// Builds the family over one cover. The diameter comes from exact stats for
// n <= 10^4 and from seeded sampling above that.
MultiKIndex build_family(const Graph& g, FamilyMode mode, CoverStrategy strategy,
                         std::uint64_t seed, unsigned threads = 0);

// Answers "s reaches t within k hops" for any k >= 1 using family members
// only, plus a bounded forward probe to certify k strictly between geometric
// keys. yes/no verdicts are exact; approx_within(K) is returned only when the
// probe shows dist > k while the K-member shows dist <= K.
GeneralAnswer query_general(const MultiKIndex& m, const Graph& g, VertexId s, VertexId t,
                            std::uint32_t k);

// Family container serialization: "KRFAM v1 ..." header line, binary key
// table, then the member index blobs. Returns bytes written.
std::uint64_t save_family(const MultiKIndex& m, std::ostream& out);
MultiKIndex load_family(std::istream& in);
// load_family plus a fingerprint check against g.
MultiKIndex load_family_for(const Graph& g, std::istream& in);

} // namespace kreach
