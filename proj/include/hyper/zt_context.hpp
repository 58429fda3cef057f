#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hyper {

/// The integer hyperring Z_T (a o b = {a*t*b : t in T}) together with the
/// target hyperideal <n> = nZ, reduced to residue arithmetic mod n.
///
/// A k-fold hyperproduct x1 o ... o xk is x1*...*xk * P_{k-1}(T), where P_j(T)
/// is the set of j-fold products of members of T (P_0 = {1}). Membership in
/// nZ of every element of that set depends only on x1*...*xk mod n, so each
/// containment question is a table lookup on the residue product.
///
/// Units of Z_T lie in {1, -1}, and every residue class mod n (n >= 2)
/// contains integers other than +-1. Quantifying over non-unit integer tuples
/// therefore reaches every residue tuple, and the unit-excluded and
/// unit-included predicates coincide on this model.
class ZTContext {
public:
    /// Caches P_k(T) mod n for k <= max_k.
    ZTContext(std::vector<std::int64_t> T, int n, int max_k = 8);

    [[nodiscard]] int modulus() const { return n_; }
    [[nodiscard]] const std::vector<std::int64_t>& T() const { return t_; }
    [[nodiscard]] int max_k() const { return max_k_; }

    /// Distinct residues of P_k(T) mod n, sorted; k in [0, max_k].
    [[nodiscard]] const std::vector<int>& power_residues(int k) const;

    /// True iff every element of a k-fold hyperproduct whose factors multiply
    /// to residue r lies in <n>. k in [1, max_k + 1].
    [[nodiscard]] bool product_residue_in_ideal(int k, int r) const
    {
        return in_ideal_[static_cast<std::size_t>(k) * n_ + r] != 0;
    }

    [[nodiscard]] int reduce(std::int64_t x) const
    {
        auto r = x % n_;
        return static_cast<int>(r < 0 ? r + n_ : r);
    }
    [[nodiscard]] int mul(int a, int b) const
    {
        return static_cast<int>(static_cast<std::int64_t>(a) * b % n_);
    }

    /// Integer products of k members of T (with repetition), sorted.
    [[nodiscard]] std::vector<std::int64_t> integer_power_set(int k) const;

    /// The explicit integer hyperproduct of the given integers, sorted.
    [[nodiscard]] std::vector<std::int64_t> integer_hyperproduct(
        std::span<const std::int64_t> factors) const;

private:
    std::vector<std::int64_t> t_;
    int n_;
    int max_k_;
    std::vector<std::vector<int>> powers_;
    std::vector<unsigned char> in_ideal_;
};

/// True iff the hyperproduct of (integer lifts of) the residues lies in <n>.
bool zt_hyperproduct_in_ideal(const ZTContext& ctx, std::span<const int> residues);

}  // namespace hyper
