#include "hyper/zt_context.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hyper/error.hpp"

namespace hyper {

ZTContext::ZTContext(std::vector<std::int64_t> T, int n, int max_k)
    : t_(std::move(T)), n_(n), max_k_(max_k)
{
    if (n_ < 2)
        throw Error(ErrorKind::BadQuery, "modulus n must be at least 2");
    if (t_.empty())
        throw Error(ErrorKind::BadQuery, "T must be nonempty");
    if (max_k_ < 1)
        throw Error(ErrorKind::BadQuery, "max_k must be positive");
    std::sort(t_.begin(), t_.end());
    t_.erase(std::unique(t_.begin(), t_.end()), t_.end());

    std::vector<int> t_res;
    for (auto t : t_)
        t_res.push_back(reduce(t));
    std::sort(t_res.begin(), t_res.end());
    t_res.erase(std::unique(t_res.begin(), t_res.end()), t_res.end());

    powers_.push_back({reduce(1)});
    for (int k = 1; k <= max_k_; ++k) {
        std::vector<char> seen(n_, 0);
        for (int p : powers_.back())
            for (int t : t_res)
                seen[mul(p, t)] = 1;
        std::vector<int> next;
        for (int r = 0; r < n_; ++r)
            if (seen[r])
                next.push_back(r);
        powers_.push_back(std::move(next));
    }

    // in_ideal_[k][r]: r * p == 0 mod n for all p in P_{k-1}.
    in_ideal_.assign(static_cast<std::size_t>(max_k_ + 2) * n_, 0);
    for (int k = 1; k <= max_k_ + 1; ++k)
        for (int r = 0; r < n_; ++r) {
            bool all = true;
            for (int p : powers_[k - 1])
                if (mul(r, p) != 0) {
                    all = false;
                    break;
                }
            in_ideal_[static_cast<std::size_t>(k) * n_ + r] = all ? 1 : 0;
        }
}

const std::vector<int>& ZTContext::power_residues(int k) const
{
    if (k < 0 || k > max_k_)
        throw Error(ErrorKind::BudgetExceeded, "product length beyond cached bound");
    return powers_[k];
}

std::vector<std::int64_t> ZTContext::integer_power_set(int k) const
{
    std::set<std::int64_t> acc{1};
    for (int i = 0; i < k; ++i) {
        std::set<std::int64_t> next;
        for (auto a : acc)
            for (auto t : t_)
                next.insert(a * t);
        acc = std::move(next);
    }
    return {acc.begin(), acc.end()};
}

std::vector<std::int64_t> ZTContext::integer_hyperproduct(
    std::span<const std::int64_t> factors) const
{
    if (factors.empty())
        throw Error(ErrorKind::EmptyOperand, "empty product");
    std::int64_t base = 1;
    for (auto f : factors)
        base *= f;
    std::vector<std::int64_t> out;
    for (auto p : integer_power_set(static_cast<int>(factors.size()) - 1))
        out.push_back(base * p);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool zt_hyperproduct_in_ideal(const ZTContext& ctx, std::span<const int> residues)
{
    if (residues.empty())
        throw Error(ErrorKind::EmptyOperand, "empty product");
    int k = static_cast<int>(residues.size());
    if (k > ctx.max_k() + 1)
        throw Error(ErrorKind::BudgetExceeded,
                    "product length " + std::to_string(k) + " beyond cached bound");
    int r = ctx.reduce(1);
    for (int x : residues)
        r = ctx.mul(r, ctx.reduce(x));
    return ctx.product_residue_in_ideal(k, r);
}

}  // namespace hyper
