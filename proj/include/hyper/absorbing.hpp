#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyper/hyperring.hpp"
#include "hyper/zt_context.hpp"

namespace hyper {

enum class AbsorbingKind {
    /// u-fold non-unit products in Q have a v-fold sub-product in Q.
    Plain,
    /// As Plain, with units allowed in the tuple.
    AB,
    /// u-fold non-unit products in Q force the first v or the last u - v
    /// factors into Q, for every ordering of the tuple.
    Prime,
};

std::string_view to_string(AbsorbingKind kind);

/// u > v >= 1. u is capped at 8 (sub-tuple memo keys pack 7 elements).
struct AbsorbingQuery {
    int u = 2;
    int v = 1;
    AbsorbingKind kind = AbsorbingKind::Plain;

    /// Throws Error(BadQuery).
    void validate() const;
};

/// A tuple on which the predicate fails. For Prime the tuple is ordered as
/// (first v factors, last u - v factors) of the failing split; for Plain and
/// AB it is the sorted multiset.
struct Witness {
    AbsorbingQuery query;
    std::vector<Element> tuple;
};

struct Verdict {
    bool holds = true;
    std::optional<Witness> witness;

    explicit operator bool() const { return holds; }
};

struct ScanOptions {
    /// Worker threads for the leading-element partition; 0 picks the
    /// hardware concurrency.
    unsigned workers = 1;
    /// Enumerate ordered tuples instead of multisets, for hyperoperations
    /// that do not commute. Sub-products keep the positional order and the
    /// prime variant checks only the (first v, last u - v) split.
    bool ordered = false;
};

/// Core scan: multisets of size query.u over `alphabet`, products via `table`.
/// Q must be a hyperideal of the structure behind `table`.
Verdict check_absorbing(const HyperTable& table, const ElementSet& alphabet, const ElementSet& q,
                        const AbsorbingQuery& query, const ScanOptions& opts = {});

/// Scan over letters 0..count-1 with a caller-supplied test deciding whether
/// the product of a letter sequence lies in Q. Letters not allowed in the
/// tuple are simply not offered. Witness tuples hold letter indices.
Verdict check_absorbing_by(int count, const AbsorbingQuery& query,
                           const std::function<bool(std::span<const Element>)>& in_q,
                           const ScanOptions& opts = {});

// Finite hyperrings. All throw ImproperIdeal for Q = carrier and
// NotAHyperideal when Q fails the closure conditions.

/// (v+1)-fold products over the whole carrier (units included).
Verdict is_v_absorbing(const Hyperring& ring, const ElementSet& q, int v,
                       const ScanOptions& opts = {});
Verdict is_uv_absorbing(const Hyperring& ring, const ElementSet& q, int u, int v,
                        const ScanOptions& opts = {});
Verdict is_ab_uv_absorbing(const Hyperring& ring, const ElementSet& q, int u, int v,
                           const ScanOptions& opts = {});
Verdict is_uv_absorbing_prime(const Hyperring& ring, const ElementSet& q, int u, int v,
                              const ScanOptions& opts = {});
Verdict check_absorbing(const Hyperring& ring, const ElementSet& q, const AbsorbingQuery& query,
                        const ScanOptions& opts = {});

/// Replays a witness against the definition on the ordered tuple; true when
/// the failure reproduces.
bool witness_fails(const Hyperring& ring, const ElementSet& q, const Witness& w);

/// Multi-line description: the tuple, its product set and the sub-products
/// that were checked.
std::string describe_witness(const Hyperring& ring, const ElementSet& q, const Witness& w);

// Z_T with target ideal <n>. The carrier is the residues mod n; see
// ZTContext for why unit exclusion is vacuous here.

Verdict zt_is_v_absorbing(const ZTContext& ctx, int v, const ScanOptions& opts = {});
Verdict zt_check_absorbing(const ZTContext& ctx, const AbsorbingQuery& query,
                           const ScanOptions& opts = {});
bool zt_witness_fails(const ZTContext& ctx, const Witness& w);
/// Prints the integer hyperproducts of the residues taken as their own lifts.
std::string zt_describe_witness(const ZTContext& ctx, const Witness& w);

struct AbsIndices {
    /// Least v with Q v-absorbing.
    int big_abs = 0;
    /// Least v with Q (big_abs + 1, v)-absorbing.
    int small_abs = 0;
};

/// Searches v <= max_v. Throws AbsUndefined (naming the bound) when Q is not
/// v-absorbing for any v in range.
AbsIndices abs_indices(const Hyperring& ring, const ElementSet& q, int max_v);
AbsIndices zt_abs_indices(const ZTContext& ctx, int max_v);

/// The ideal form of the prime predicate: for every u-sequence of ideals from
/// `universe` whose product lies in Q, the first v or the last u - v ideals
/// have product in Q. The witness lists indices into `universe`.
Verdict ideal_product_prime_check(const Hyperring& ring, const ElementSet& q,
                                  const AbsorbingQuery& query,
                                  const std::vector<ElementSet>& universe);

}  // namespace hyper
