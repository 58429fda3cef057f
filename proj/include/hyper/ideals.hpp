#pragma once

#include <optional>
#include <vector>

#include "hyper/hyperring.hpp"

namespace hyper {

bool is_hyperideal(const Hyperring& ring, const ElementSet& subset);

/// Throws Error(NotAHyperideal) unless `subset` is a hyperideal.
void require_hyperideal(const Hyperring& ring, const ElementSet& subset);

/// Least hyperideal containing the generators.
ElementSet generated_hyperideal(const Hyperring& ring, const ElementSet& generators);

/// All hyperideals, smallest first (cardinality, then member list).
/// The improper ideal (the whole carrier) is the last entry.
std::vector<ElementSet> enumerate_hyperideals(const Hyperring& ring);

inline bool is_proper(const Hyperring& ring, const ElementSet& q)
{
    return q != ring.carrier();
}

/// The distinct sets x, x^2, x^3, ... up to the first repetition.
std::vector<ElementSet> power_sequence(const HyperTable& table, Element x);

/// x o y subset of Q implies x in Q or y in Q. Throws ImproperIdeal.
bool is_prime(const Hyperring& ring, const ElementSet& q);
/// x o y subset of Q implies x in Q or y^t subset of Q for some t.
bool is_primary(const Hyperring& ring, const ElementSet& q);
bool is_maximal(const Hyperring& ring, const ElementSet& q);

/// The classes of finite hyperproducts (C) and finite sums of them (U).
class CClassCache {
public:
    /// Builds the product class to fixpoint. Throws BudgetExceeded when the
    /// fixpoint needs sequences longer than order + 2 or more than
    /// `max_sets` distinct sets.
    static CClassCache build(const Hyperring& ring, std::size_t max_sets = 1U << 20);

    [[nodiscard]] const std::vector<ElementSet>& products() const { return products_; }
    /// Longest product length needed before no new sets appeared.
    [[nodiscard]] int product_rounds() const { return rounds_; }

    /// The additive subgroup generated by differences of co-members of product
    /// sets. Its cosets are exactly the classes of the fundamental relation,
    /// and every sum set in U lies inside one coset.
    [[nodiscard]] const ElementSet& fundamental_kernel() const { return kernel_; }

    /// Enumerates U to fixpoint. Exponential in the worst case; intended for
    /// small rings and cross-checks.
    [[nodiscard]] std::vector<ElementSet> enumerate_sums(const Hyperring& ring,
                                                         std::size_t max_sets = 1U << 20) const;

private:
    std::vector<ElementSet> products_;
    ElementSet kernel_;
    int rounds_ = 0;
};

/// Every product set meeting Q lies in Q.
bool is_c_hyperideal(const ElementSet& q, const CClassCache& cache);
/// Every set in U meeting Q lies in Q; decided as kernel subset of Q.
bool is_strong_c_hyperideal(const ElementSet& q, const CClassCache& cache);

struct RadicalResult {
    ElementSet members;
    /// No prime hyperideal contains Q; members is then the whole carrier.
    bool no_prime_above = false;
};

/// Intersection of all prime hyperideals containing Q.
RadicalResult radical(const Hyperring& ring, const ElementSet& q);
/// Same, with a precomputed list of all hyperideals.
RadicalResult radical(const Hyperring& ring, const ElementSet& q,
                      const std::vector<ElementSet>& all_ideals);

/// {x : x^k subset of Q for some k >= 1}
ElementSet power_members(const Hyperring& ring, const ElementSet& q);

/// (Q : x) = {a : a o x subset of Q}
ElementSet colon(const Hyperring& ring, const ElementSet& q, Element x);
/// (B2 : B1) = {a : a o B1 subset of B2}
ElementSet colon(const Hyperring& ring, const ElementSet& b2, const ElementSet& b1);

std::vector<ElementSet> maximal_hyperideals(const Hyperring& ring);
/// Intersection of the maximal hyperideals. Throws NoMaximalIdeal.
ElementSet jacobson(const Hyperring& ring);
bool is_local(const Hyperring& ring);
/// I + J is the whole carrier.
bool are_coprime(const Hyperring& ring, const ElementSet& i, const ElementSet& j);

/// Q1 o Q2 o ... o Qk as a subset product.
ElementSet ideal_product(const Hyperring& ring, const std::vector<ElementSet>& ideals);

}  // namespace hyper
