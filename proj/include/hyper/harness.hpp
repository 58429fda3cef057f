#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyper/absorbing.hpp"
#include "hyper/constructions.hpp"
#include "hyper/ideals.hpp"
#include "hyper/ring_io.hpp"

namespace hyper {

/// Which instances the theorem suite enumerates.
struct InstanceSpec {
    /// Z_m,T for these m and every T subset of {1..m-1} with |T| = t_size.
    std::vector<int> zmt_moduli{4, 6, 8, 9, 12};
    int zmt_t_size = 2;
    /// Z_m,T for m <= small_max_order and every T subset of {0..m-1} with
    /// 1 <= |T| <= 2.
    int small_max_order = 4;
    /// Factors of direct products: rings of the above with an identity and
    /// order at most this; products are kept up to product_max_order.
    int product_factor_max_order = 6;
    int product_max_order = 36;
    /// Quotients A/Q for rings of order at most this and every proper
    /// nonzero hyperideal Q.
    int quotient_max_order = 12;
    /// Hypermatrix bases: rings of order at most this (M_2 has order^4).
    int matrix_max_order = 3;
    int matrix_max_u = 3;
    /// Localizations of rings of order at most this at every S containing 1.
    int localization_max_order = 6;
    /// Additional ring files.
    std::vector<std::filesystem::path> ring_files;
    /// Z_T contexts.
    std::vector<ZTSpec> zt{{{2, 4}, 150}, {{2, 4}, 15}};
    std::vector<std::vector<std::int64_t>> zt_grid_T{{2, 4}, {1, 3}, {2, 3}};
    int zt_grid_max_n = 12;
    /// Queries range over 1 <= v < u <= max_u (at most 5).
    int max_u = 4;
    /// "all" hyperideals or only the "generated" (principal) ones.
    std::string ideals = "all";
    std::uint64_t seed = 0;
    /// Instances per property; 0 is unlimited. Exceeding it marks the verdict
    /// incomplete.
    std::size_t budget = 0;
};

InstanceSpec default_spec();
/// JSON object with the field names above (all optional). Throws
/// Error(BadSpec).
InstanceSpec parse_spec(std::string_view text);
InstanceSpec load_spec(const std::filesystem::path& path);
/// Canonical one-line rendering, used in report headers.
std::string describe_spec(const InstanceSpec& spec);

/// Memoized facts about one ring. Safe for concurrent use.
class RingAnalysis {
public:
    /// `generated_only` restricts candidates() to principal hyperideals.
    RingAnalysis(Hyperring ring, std::string label, bool generated_only = false);

    [[nodiscard]] const Hyperring& ring() const { return ring_; }
    [[nodiscard]] const std::string& label() const { return label_; }
    /// All hyperideals, the improper one last.
    [[nodiscard]] const std::vector<ElementSet>& ideals() const { return ideals_; }
    [[nodiscard]] const std::vector<ElementSet>& proper() const { return proper_; }
    /// Proper hyperideals the theorem checks quantify over.
    [[nodiscard]] const std::vector<ElementSet>& candidates() const { return candidates_; }
    [[nodiscard]] const CClassCache& cache() const { return cache_; }
    [[nodiscard]] const std::vector<ElementSet>& maximals() const { return maximals_; }
    [[nodiscard]] bool is_local() const { return maximals_.size() == 1; }
    [[nodiscard]] bool has_identity() const { return ring_.has_identity(); }

    [[nodiscard]] bool c_ideal(const ElementSet& q) const { return is_c_hyperideal(q, cache_); }
    [[nodiscard]] bool strong_c(const ElementSet& q) const
    {
        return is_strong_c_hyperideal(q, cache_);
    }
    [[nodiscard]] bool prime(const ElementSet& q) const;
    [[nodiscard]] ElementSet radical(const ElementSet& q) const;
    /// Minimal members of the primes containing Q.
    [[nodiscard]] std::vector<ElementSet> minimal_primes(const ElementSet& q) const;

    /// Memoized absorbing verdicts.
    [[nodiscard]] bool holds(const ElementSet& q, const AbsorbingQuery& query) const;
    [[nodiscard]] bool plain(const ElementSet& q, int u, int v) const
    {
        return holds(q, {u, v, AbsorbingKind::Plain});
    }
    [[nodiscard]] bool ab(const ElementSet& q, int u, int v) const
    {
        return holds(q, {u, v, AbsorbingKind::AB});
    }
    [[nodiscard]] bool prime_uv(const ElementSet& q, int u, int v) const
    {
        return holds(q, {u, v, AbsorbingKind::Prime});
    }
    /// v-absorbing with units allowed.
    [[nodiscard]] bool v_absorbing(const ElementSet& q, int v) const { return ab(q, v + 1, v); }

private:
    struct Key {
        ElementSet q;
        int u;
        int v;
        int kind;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const
        {
            return k.q.hash() ^ (static_cast<std::size_t>(k.u) << 40) ^
                   (static_cast<std::size_t>(k.v) << 48) ^ (static_cast<std::size_t>(k.kind) << 56);
        }
    };

    Hyperring ring_;
    std::string label_;
    std::vector<ElementSet> ideals_;
    std::vector<ElementSet> proper_;
    std::vector<ElementSet> candidates_;
    CClassCache cache_;
    std::vector<ElementSet> maximals_;
    std::vector<ElementSet> primes_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<Key, bool, KeyHash> memo_;
};

using RingRef = std::shared_ptr<const RingAnalysis>;

struct ProductInstance {
    RingRef left;
    RingRef right;
    RingRef whole;
    DirectProduct dp;
};

struct QuotientInstance {
    RingRef base;
    ElementSet q1;
    QuotientRing qr;
    RingRef quotient;
};

struct HomInstance {
    std::string label;
    RingRef source;
    RingRef target;
    std::vector<Element> map;
};

struct MatrixInstance {
    RingRef base;
    /// Table-backed M_2(A); not commutative, so scans are ordered.
    std::shared_ptr<const Hyperring> matrices;
    std::shared_ptr<const MatrixRing> lazy;
};

struct LocalizationInstance {
    RingRef base;
    std::shared_ptr<Localization> loc;
};

/// The enumerated universe, built deterministically from a spec.
class InstanceStream {
public:
    /// Throws Error(BadSpec).
    static InstanceStream build(const InstanceSpec& spec);

    [[nodiscard]] const InstanceSpec& spec() const { return spec_; }
    /// Z_m,T grid, small rings and ring files.
    [[nodiscard]] const std::vector<RingRef>& base_rings() const { return base_; }
    /// base_rings plus quotients and products.
    [[nodiscard]] const std::vector<RingRef>& rings() const { return all_; }
    [[nodiscard]] const std::vector<ProductInstance>& products() const { return products_; }
    [[nodiscard]] const std::vector<QuotientInstance>& quotients() const { return quotients_; }
    [[nodiscard]] const std::vector<HomInstance>& homomorphisms() const { return homs_; }
    [[nodiscard]] const std::vector<MatrixInstance>& matrices() const { return matrices_; }
    [[nodiscard]] const std::vector<LocalizationInstance>& localizations() const
    {
        return localizations_;
    }
    [[nodiscard]] const std::vector<ZTSpec>& zt() const { return zt_; }
    /// Memoized residue-model verdict for zt()[i].
    [[nodiscard]] bool zt_holds(std::size_t i, const AbsorbingQuery& query) const;
    /// Constructions that were rejected while building (label: reason).
    [[nodiscard]] const std::vector<std::string>& skipped() const { return skipped_; }

    /// (u, v) pairs with 1 <= v < u <= max_u, by u then v.
    [[nodiscard]] std::vector<std::pair<int, int>> queries() const;

private:
    InstanceSpec spec_;
    std::vector<RingRef> base_;
    std::vector<RingRef> all_;
    std::vector<ProductInstance> products_;
    std::vector<QuotientInstance> quotients_;
    std::vector<HomInstance> homs_;
    std::vector<MatrixInstance> matrices_;
    std::vector<LocalizationInstance> localizations_;
    std::vector<ZTSpec> zt_;
    struct ZTEntry;
    std::vector<std::shared_ptr<ZTEntry>> zt_memo_;
    std::vector<std::string> skipped_;
};

enum class VerdictStatus { Pass, Fail, Vacuous, Incomplete };

std::string_view to_string(VerdictStatus s);

struct TheoremVerdict {
    std::string id;
    std::string statement;
    std::size_t scanned = 0;
    std::size_t hypothesis_hits = 0;
    std::size_t failures = 0;
    bool incomplete = false;
    /// First few failing instances, replayable from their descriptions.
    std::vector<std::string> witnesses;
    /// Logged facts that are not asserted.
    std::vector<std::string> observations;
    std::size_t observation_count = 0;

    [[nodiscard]] VerdictStatus status() const;
};

/// Per-property accounting handed to each check.
class Recorder {
public:
    Recorder(TheoremVerdict& verdict, std::size_t budget) : v_(verdict), budget_(budget) {}

    [[nodiscard]] const std::string& id() const { return v_.id; }

    /// Counts one instance; false (and the verdict marked incomplete) once
    /// the budget is spent.
    bool scan();
    /// Records one evaluation of the conclusion under a hypothesis hit.
    void check(bool conclusion, const std::function<std::string()>& describe);
    void observe(const std::string& note);

private:
    TheoremVerdict& v_;
    std::size_t budget_;
};

struct TheoremProperty {
    std::string id;
    /// Plain-language statement of the result under test.
    std::string statement;
    std::function<void(const InstanceStream&, Recorder&)> run;
};

const std::vector<TheoremProperty>& registry();

/// Throws Error(UnknownTheorem).
TheoremVerdict run_property(const std::string& id, const InstanceStream& stream);
/// Every registry entry in registry order; properties run on `workers`
/// threads, the result order does not depend on it.
std::vector<TheoremVerdict> run_all(const InstanceStream& stream, unsigned workers = 1);

/// Stable structured text: a header, then one block per verdict.
std::string format_report(const InstanceStream& stream, const std::vector<TheoremVerdict>& verdicts);

/// Deterministic Fisher-Yates permutation of [0, n) for a seed and a salt.
std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed, std::string_view salt);

}  // namespace hyper
