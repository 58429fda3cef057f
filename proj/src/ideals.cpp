#include "hyper/ideals.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace hyper {

namespace {

// Closes `s` (already closed except for the elements in `pending`) under
// subtraction and absorption.
ElementSet close_ideal(const Hyperring& ring, ElementSet s, std::vector<Element> pending)
{
    const int n = ring.order();
    auto add = [&](Element e) {
        if (!s.contains(e)) {
            s.insert(e);
            pending.push_back(e);
        }
    };
    while (!pending.empty()) {
        Element x = pending.back();
        pending.pop_back();
        for (Element r = 0; r < n; ++r)
            ring.hyp(r, x).for_each(add);
        for (Element y : s.members()) {
            add(ring.sub(x, y));
            add(ring.sub(y, x));
        }
    }
    return s;
}

ElementSet subgroup_closure(const Hyperring& ring, const ElementSet& gens)
{
    ElementSet s = gens;
    s.insert(ring.zero());
    std::vector<Element> pending = s.members();
    auto add = [&](Element e) {
        if (!s.contains(e)) {
            s.insert(e);
            pending.push_back(e);
        }
    };
    while (!pending.empty()) {
        Element x = pending.back();
        pending.pop_back();
        add(ring.neg(x));
        for (Element y : s.members())
            add(ring.add(x, y));
    }
    return s;
}

void sort_canonical(std::vector<ElementSet>& sets)
{
    std::sort(sets.begin(), sets.end(),
              [](const ElementSet& a, const ElementSet& b) { return canonical_less(a, b); });
}

}  // namespace

bool is_hyperideal(const Hyperring& ring, const ElementSet& subset)
{
    if (subset.empty())
        return false;
    const auto members = subset.members();
    for (Element x : members)
        for (Element y : members)
            if (!subset.contains(ring.sub(x, y)))
                return false;
    for (Element x : members)
        for (Element r = 0; r < ring.order(); ++r)
            if (!ring.hyp(r, x).is_subset_of(subset))
                return false;
    return true;
}

void require_hyperideal(const Hyperring& ring, const ElementSet& subset)
{
    if (!is_hyperideal(ring, subset))
        throw Error(ErrorKind::NotAHyperideal, subset.to_string() + " is not a hyperideal");
}

ElementSet generated_hyperideal(const Hyperring& ring, const ElementSet& generators)
{
    if (generators.empty())
        throw Error(ErrorKind::EmptyOperand, "no generators");
    return close_ideal(ring, generators, generators.members());
}

std::vector<ElementSet> enumerate_hyperideals(const Hyperring& ring)
{
    const int n = ring.order();
    ElementSet bottom = generated_hyperideal(ring, ElementSet::singleton(ring.zero()));
    std::unordered_set<ElementSet, ElementSetHash> seen{bottom};
    std::deque<ElementSet> queue{bottom};
    while (!queue.empty()) {
        ElementSet ideal = queue.front();
        queue.pop_front();
        for (Element g = 0; g < n; ++g) {
            if (ideal.contains(g))
                continue;
            ElementSet base = ideal;
            base.insert(g);
            ElementSet next = close_ideal(ring, base, {g});
            if (seen.insert(next).second)
                queue.push_back(next);
        }
    }
    std::vector<ElementSet> out(seen.begin(), seen.end());
    sort_canonical(out);
    return out;
}

std::vector<ElementSet> power_sequence(const HyperTable& table, Element x)
{
    std::vector<ElementSet> seq;
    ElementSet cur = ElementSet::singleton(x);
    while (std::find(seq.begin(), seq.end(), cur) == seq.end()) {
        seq.push_back(cur);
        cur = table.extend(cur, x);
    }
    return seq;
}

namespace {

void require_proper(const Hyperring& ring, const ElementSet& q)
{
    require_hyperideal(ring, q);
    if (!is_proper(ring, q))
        throw Error(ErrorKind::ImproperIdeal, "predicate requires a proper hyperideal");
}

}  // namespace

bool is_prime(const Hyperring& ring, const ElementSet& q)
{
    require_proper(ring, q);
    const auto outside = (ring.carrier() - q).members();
    for (Element x : outside)
        for (Element y : outside)
            if (y >= x && ring.hyp(x, y).is_subset_of(q))
                return false;
    return true;
}

bool is_primary(const Hyperring& ring, const ElementSet& q)
{
    require_proper(ring, q);
    ElementSet pm = power_members(ring, q);
    const auto outside_q = (ring.carrier() - q).members();
    const auto outside_pm = (ring.carrier() - pm).members();
    for (Element x : outside_q)
        for (Element y : outside_pm)
            if (ring.hyp(x, y).is_subset_of(q))
                return false;
    return true;
}

bool is_maximal(const Hyperring& ring, const ElementSet& q)
{
    require_proper(ring, q);
    const ElementSet full = ring.carrier();
    for (Element g : (full - q).members()) {
        ElementSet base = q;
        base.insert(g);
        if (close_ideal(ring, base, {g}) != full)
            return false;
    }
    return true;
}

CClassCache CClassCache::build(const Hyperring& ring, std::size_t max_sets)
{
    const int n = ring.order();
    CClassCache cache;
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<ElementSet> frontier;
    for (Element a = 0; a < n; ++a) {
        auto s = ElementSet::singleton(a);
        seen.insert(s);
        frontier.push_back(s);
    }
    cache.rounds_ = 1;
    while (!frontier.empty()) {
        std::vector<ElementSet> next;
        for (const auto& s : frontier)
            for (Element a = 0; a < n; ++a) {
                ElementSet p = ring.table().extend(s, a);
                if (seen.insert(p).second)
                    next.push_back(p);
            }
        if (seen.size() > max_sets)
            throw Error(ErrorKind::BudgetExceeded, "product class exceeds set budget");
        if (next.empty())
            break;
        ++cache.rounds_;
        if (cache.rounds_ > n + 2)
            throw Error(ErrorKind::BudgetExceeded,
                        "product class did not stabilise within order + 2 rounds");
        frontier = std::move(next);
    }
    cache.products_.assign(seen.begin(), seen.end());
    sort_canonical(cache.products_);

    ElementSet diffs;
    for (const auto& c : cache.products_) {
        Element base = c.first();
        c.for_each([&](Element e) { diffs.insert(ring.sub(e, base)); });
    }
    cache.kernel_ = subgroup_closure(ring, diffs);
    return cache;
}

std::vector<ElementSet> CClassCache::enumerate_sums(const Hyperring& ring,
                                                    std::size_t max_sets) const
{
    std::unordered_set<ElementSet, ElementSetHash> seen(products_.begin(), products_.end());
    std::vector<ElementSet> frontier = products_;
    int rounds = 1;
    while (!frontier.empty()) {
        std::vector<ElementSet> next;
        for (const auto& d : frontier)
            for (const auto& c : products_) {
                ElementSet s = ring.sum(d, c);
                if (seen.insert(s).second)
                    next.push_back(s);
            }
        if (seen.size() > max_sets)
            throw Error(ErrorKind::BudgetExceeded, "sum class exceeds set budget");
        if (++rounds > ring.order() + 2 && !next.empty())
            throw Error(ErrorKind::BudgetExceeded,
                        "sum class did not stabilise within order + 2 rounds");
        frontier = std::move(next);
    }
    std::vector<ElementSet> out(seen.begin(), seen.end());
    sort_canonical(out);
    return out;
}

bool is_c_hyperideal(const ElementSet& q, const CClassCache& cache)
{
    for (const auto& c : cache.products())
        if (c.intersects(q) && !c.is_subset_of(q))
            return false;
    return true;
}

bool is_strong_c_hyperideal(const ElementSet& q, const CClassCache& cache)
{
    return cache.fundamental_kernel().is_subset_of(q);
}

RadicalResult radical(const Hyperring& ring, const ElementSet& q,
                      const std::vector<ElementSet>& all_ideals)
{
    require_hyperideal(ring, q);
    RadicalResult result;
    result.members = ring.carrier();
    bool any = false;
    for (const auto& p : all_ideals) {
        if (!is_proper(ring, p) || !q.is_subset_of(p))
            continue;
        if (is_prime(ring, p)) {
            result.members &= p;
            any = true;
        }
    }
    result.no_prime_above = !any;
    return result;
}

RadicalResult radical(const Hyperring& ring, const ElementSet& q)
{
    return radical(ring, q, enumerate_hyperideals(ring));
}

ElementSet power_members(const Hyperring& ring, const ElementSet& q)
{
    ElementSet out;
    for (Element x = 0; x < ring.order(); ++x)
        for (const auto& p : power_sequence(ring.table(), x))
            if (p.is_subset_of(q)) {
                out.insert(x);
                break;
            }
    return out;
}

ElementSet colon(const Hyperring& ring, const ElementSet& q, Element x)
{
    ElementSet out;
    for (Element a = 0; a < ring.order(); ++a)
        if (ring.hyp(a, x).is_subset_of(q))
            out.insert(a);
    return out;
}

ElementSet colon(const Hyperring& ring, const ElementSet& b2, const ElementSet& b1)
{
    ElementSet out;
    for (Element a = 0; a < ring.order(); ++a) {
        bool ok = true;
        b1.for_each([&](Element b) { ok = ok && ring.hyp(a, b).is_subset_of(b2); });
        if (ok)
            out.insert(a);
    }
    return out;
}

std::vector<ElementSet> maximal_hyperideals(const Hyperring& ring)
{
    std::vector<ElementSet> out;
    for (const auto& q : enumerate_hyperideals(ring))
        if (is_proper(ring, q) && is_maximal(ring, q))
            out.push_back(q);
    return out;
}

ElementSet jacobson(const Hyperring& ring)
{
    auto maxes = maximal_hyperideals(ring);
    if (maxes.empty())
        throw Error(ErrorKind::NoMaximalIdeal, "ring has no maximal hyperideal");
    ElementSet j = ring.carrier();
    for (const auto& m : maxes)
        j &= m;
    return j;
}

bool is_local(const Hyperring& ring)
{
    return maximal_hyperideals(ring).size() == 1;
}

bool are_coprime(const Hyperring& ring, const ElementSet& i, const ElementSet& j)
{
    return generated_hyperideal(ring, ring.sum(i, j)) == ring.carrier();
}

ElementSet ideal_product(const Hyperring& ring, const std::vector<ElementSet>& ideals)
{
    return ring.subset_hyperproduct(ideals);
}

}  // namespace hyper
