#include <algorithm>
#include <sstream>

#include "hyper/harness.hpp"
#include "hyper/parallel.hpp"

namespace hyper {

namespace {

struct Stop {};

void tick(Recorder& rec)
{
    if (!rec.scan())
        throw Stop{};
}

using Queries = std::vector<std::pair<int, int>>;

std::string uv(int u, int v)
{
    return "(u,v)=(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::string at(const RingAnalysis& ra, const ElementSet& q)
{
    return ra.label() + " Q=" + q.to_string();
}

template <typename T, typename F>
void each(const std::vector<T>& xs, const InstanceStream& s, const Recorder& rec, F&& f)
{
    for (std::size_t i : shuffled_indices(xs.size(), s.spec().seed, rec.id()))
        f(xs[i]);
}

/// Rings with an identity; every result assumes one.
template <typename F>
void each_ring(const InstanceStream& s, const Recorder& rec, F&& f)
{
    each(s.rings(), s, rec, [&](const RingRef& r) {
        if (r->has_identity())
            f(*r);
    });
}

/// S o S o ... o S, k copies.
ElementSet set_power(const Hyperring& ring, const ElementSet& s, int k)
{
    std::vector<ElementSet> seq(static_cast<std::size_t>(k), s);
    return ring.subset_hyperproduct(seq);
}

/// (Abs, abs) with Abs capped so that Abs + 1 stays within max_u.
std::optional<std::pair<int, int>> abs_pair(const RingAnalysis& ra, const ElementSet& q, int max_u)
{
    for (int big = 1; big + 1 <= max_u; ++big)
        if (ra.v_absorbing(q, big))
            for (int small = 1; small <= big; ++small)
                if (ra.plain(q, big + 1, small))
                    return std::make_pair(big, small);
    return std::nullopt;
}

/// Elements of qs[i] outside every other qs[j].
std::vector<std::vector<Element>> private_parts(const std::vector<ElementSet>& qs)
{
    std::vector<std::vector<Element>> out;
    for (std::size_t i = 0; i < qs.size(); ++i) {
        ElementSet d = qs[i];
        for (std::size_t j = 0; j < qs.size(); ++j)
            if (j != i)
                d -= qs[j];
        out.push_back(d.members());
    }
    return out;
}

/// Calls f on tuples (z_1..z_k), z_i from parts[i], at most `cap` of them.
template <typename F>
void each_choice(const std::vector<std::vector<Element>>& parts, std::size_t cap, F&& f)
{
    for (const auto& p : parts)
        if (p.empty())
            return;
    std::vector<std::size_t> idx(parts.size(), 0);
    std::vector<Element> cur(parts.size());
    for (std::size_t n = 0; n < cap; ++n) {
        for (std::size_t i = 0; i < parts.size(); ++i)
            cur[i] = parts[i][idx[i]];
        f(cur);
        std::size_t i = 0;
        while (i < parts.size() && ++idx[i] == parts[i].size())
            idx[i++] = 0;
        if (i == parts.size())
            return;
    }
}

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> index_subsets(int n, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::string yes_no(bool b)
{
    return b ? "true" : "false";
}

// ---------------------------------------------------------------- absorbing

void monotonicity(const InstanceStream& s, Recorder& rec)
{
    const Queries qs = s.queries();
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        for (const auto& q : ra.candidates())
            for (auto [u, v] : qs) {
                tick(rec);
                if (!ra.plain(q, u, v))
                    continue;
                std::string bad;
                for (auto [k, r] : qs)
                    if (k >= u && r >= v && !ra.plain(q, k, r))
                        bad += " " + uv(k, r);
                rec.check(bad.empty(),
                          [&] { return at(ra, q) + " holds at " + uv(u, v) + ", fails at" + bad; });
            }
    });
    for (std::size_t i = 0; i < s.zt().size(); ++i)
        for (auto [u, v] : qs) {
            tick(rec);
            if (!s.zt_holds(i, {u, v, AbsorbingKind::Plain}))
                continue;
            std::string bad;
            for (auto [k, r] : qs)
                if (k >= u && r >= v && !s.zt_holds(i, {k, r, AbsorbingKind::Plain}))
                    bad += " " + uv(k, r);
            rec.check(bad.empty(), [&] {
                return "Z_T T=" + format_elements({s.zt()[i].T.begin(), s.zt()[i].T.end()}) +
                       " n=" + std::to_string(s.zt()[i].n) + " holds at " + uv(u, v) +
                       ", fails at" + bad;
            });
        }
}

void tuple_extension(const InstanceStream& s, Recorder& rec)
{
    const int max_u = s.spec().max_u;
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        for (const auto& q : ra.candidates())
            for (auto [u, v] : s.queries()) {
                tick(rec);
                bool all = true;
                for (int k = u; k <= max_u; ++k)
                    all = all && ra.plain(q, k, v);
                const bool here = ra.plain(q, u, v);
                rec.check(here == all, [&] {
                    return at(ra, q) + " " + uv(u, v) + " gives " + yes_no(here) +
                           " but the k >= u reading gives " + yes_no(all);
                });
            }
    });
}

void downgrade(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        for (const auto& q : ra.candidates())
            for (auto [u, v] : s.queries()) {
                tick(rec);
                if (v == u - 1 || !ra.plain(q, u, v))
                    continue;
                rec.check(ra.plain(q, u, u - 1), [&] {
                    return at(ra, q) + " holds at " + uv(u, v) + " but not at " + uv(u, u - 1);
                });
                if (!ra.ab(q, u, u - 1))
                    rec.observe(at(ra, q) + " " + uv(u, v) +
                                ": the variant with units allowed fails at " + uv(u, u - 1));
            }
    });
}

void ab_plain(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        for (const auto& q : ra.candidates())
            for (auto [u, v] : s.queries()) {
                tick(rec);
                if (!ra.ab(q, u, v))
                    continue;
                rec.check(ra.plain(q, u, v), [&] { return at(ra, q) + " " + uv(u, v); });
            }
    });
}

void intersection(const InstanceStream& s, Recorder& rec)
{
    const int max_u = s.spec().max_u;
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        const auto& cs = ra.candidates();
        // Least v for each u: the other queries follow by monotonicity.
        std::vector<Queries> least(cs.size());
        for (std::size_t i = 0; i < cs.size(); ++i)
            for (int u = 2; u <= max_u; ++u)
                for (int v = 1; v < u; ++v)
                    if (ra.plain(cs[i], u, v)) {
                        least[i].emplace_back(u, v);
                        break;
                    }
        for (std::size_t i = 0; i < cs.size(); ++i)
            for (std::size_t j = i + 1; j < cs.size(); ++j) {
                tick(rec);
                const ElementSet meet = cs[i] & cs[j];
                for (auto [u1, v1] : least[i])
                    for (auto [u2, v2] : least[j]) {
                        const int v = v1 + v2;
                        const int u = std::max({u1, u2, v + 1});
                        if (u > max_u)
                            continue;
                        rec.check(ra.plain(meet, u, v), [&] {
                            return ra.label() + " Q1=" + cs[i].to_string() + " at " +
                                   uv(u1, v1) + ", Q2=" + cs[j].to_string() + " at " +
                                   uv(u2, v2) + ", intersection fails at " + uv(u, v);
                        });
                    }
            }
    });
}

void radical_form(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        for (const auto& q : ra.candidates()) {
            if (!ra.c_ideal(q))
                continue;
            for (auto [u, v] : s.queries()) {
                tick(rec);
                if (!ra.plain(q, u, v))
                    continue;
                ElementSet powers;
                for (Element x = 0; x < ra.ring().order(); ++x)
                    if (ra.ring().power(x, v).is_subset_of(q))
                        powers.insert(x);
                const ElementSet rad = ra.radical(q);
                rec.check(rad == powers, [&] {
                    return at(ra, q) + " " + uv(u, v) + " rad=" + rad.to_string() +
                           " {x : x^v in Q}=" + powers.to_string();
                });
            }
        }
    });
}

void radical_absorbing(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        for (const auto& q : ra.candidates()) {
            if (!ra.c_ideal(q))
                continue;
            for (auto [u, v] : s.queries()) {
                tick(rec);
                if (!ra.plain(q, u, v))
                    continue;
                const int k = std::max((u + v - 1) / v, v + 1);
                const ElementSet rad = ra.radical(q);
                const bool ok = is_proper(ra.ring(), rad) && ra.plain(rad, k, v);
                rec.check(ok, [&] {
                    return at(ra, q) + " " + uv(u, v) + " rad=" + rad.to_string() +
                           " is not absorbing at " + uv(k, v);
                });
            }
        }
    });
}

void maximal_absorbing(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        for (const auto& m : ra.maximals())
            for (auto [u, v] : s.queries()) {
                tick(rec);
                rec.check(ra.plain(m, u, v), [&] { return at(ra, m) + " maximal, " + uv(u, v); });
            }
    });
}

void minimal_existence(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        for (const auto& q : ra.candidates())
            for (auto [u, v] : s.queries()) {
                tick(rec);
                std::vector<ElementSet> above;
                for (const auto& p : ra.proper())
                    if (q.is_subset_of(p) && ra.plain(p, u, v))
                        above.push_back(p);
                bool has_minimal = false;
                for (const auto& p : above) {
                    bool minimal = true;
                    for (const auto& r : above)
                        if (r != p && r.is_subset_of(p))
                            minimal = false;
                    has_minimal = has_minimal || minimal;
                }
                rec.check(has_minimal, [&] {
                    return at(ra, q) + " " + uv(u, v) + ": no absorbing hyperideal above Q";
                });
            }
    });
}

void minimal_v_absorbing(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        for (const auto& q : ra.candidates())
            for (int v = 1; v < s.spec().max_u; ++v) {
                tick(rec);
                bool found = false;
                for (const auto& p : ra.proper())
                    if (q.is_subset_of(p) && ra.v_absorbing(p, v)) {
                        found = true;
                        break;
                    }
                rec.check(found, [&] {
                    return at(ra, q) + " v=" + std::to_string(v) +
                           ": no v-absorbing hyperideal above Q";
                });
            }
    });
}

long binomial(int n, int k)
{
    long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

void counting(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        for (const auto& q : ra.candidates()) {
            const auto mp = ra.minimal_primes(q);
            const int r = static_cast<int>(mp.size());
            for (auto [u, v] : s.queries()) {
                tick(rec);
                if (r < 2 || r > u - 1 || !ra.plain(q, u, v))
                    continue;
                for (int k = 2; k <= r; ++k) {
                    std::vector<ElementSet> above;
                    for (const auto& p : ra.proper())
                        if (q.is_subset_of(p) && ra.v_absorbing(p, k))
                            above.push_back(p);
                    long minimal = 0;
                    for (const auto& p : above) {
                        bool is_min = true;
                        for (const auto& o : above)
                            if (o != p && o.is_subset_of(p))
                                is_min = false;
                        minimal += is_min ? 1 : 0;
                    }
                    rec.check(minimal >= binomial(r, k), [&] {
                        return at(ra, q) + " " + uv(u, v) + " r=" + std::to_string(r) +
                               " k=" + std::to_string(k) + ": " + std::to_string(minimal) +
                               " minimal k-absorbing hyperideals, bound " +
                               std::to_string(binomial(r, k));
                    });
                }
            }
        }
    });
}

bool pairwise_incomparable(const std::vector<ElementSet>& qs)
{
    for (std::size_t i = 0; i < qs.size(); ++i)
        for (std::size_t j = 0; j < qs.size(); ++j)
            if (i != j && qs[i].is_subset_of(qs[j]))
                return false;
    return true;
}

void powers_lemma(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        for (const auto& q : ra.candidates()) {
            std::vector<ElementSet> primes;
            for (const auto& p : ra.proper())
                if (q.is_subset_of(p) && ra.prime(p) && ra.c_ideal(p))
                    primes.push_back(p);
            for (auto [u, v] : s.queries()) {
                if (!ra.plain(q, u, v))
                    continue;
                for (const auto& pick : index_subsets(static_cast<int>(primes.size()), v)) {
                    std::vector<ElementSet> chosen;
                    for (int i : pick)
                        chosen.push_back(primes[i]);
                    if (!pairwise_incomparable(chosen))
                        continue;
                    tick(rec);
                    each_choice(private_parts(chosen), 64, [&](const std::vector<Element>& x) {
                        std::vector<int> ks(x.size(), 1);
                        while (true) {
                            std::vector<Element> seq;
                            for (std::size_t i = 0; i < x.size(); ++i)
                                for (int t = 0; t < ks[i]; ++t)
                                    seq.push_back(x[i]);
                            if (ra.ring().hyperproduct(seq).is_subset_of(q))
                                rec.check(ra.ring().hyperproduct(x).is_subset_of(q), [&] {
                                    return at(ra, q) + " " + uv(u, v) + " x=" +
                                           format_elements(x) + " powers " +
                                           format_elements(ks) + " in Q but x1...xv not";
                                });
                            std::size_t i = 0;
                            while (i < ks.size() && ++ks[i] > 3)
                                ks[i++] = 1;
                            if (i == ks.size())
                                break;
                        }
                    });
                }
            }
        }
    });
}

/// Q strong-C, 2 <= v < u, (u,v)-absorbing, and its minimal primes are
/// exactly v C-hyperideals.
template <typename F>
void each_minprime_instance(const InstanceStream& s, Recorder& rec, F&& f)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        for (const auto& q : ra.candidates()) {
            if (!ra.strong_c(q))
                continue;
            const auto mp = ra.minimal_primes(q);
            for (auto [u, v] : s.queries()) {
                tick(rec);
                if (v < 2 || static_cast<int>(mp.size()) != v || !ra.plain(q, u, v))
                    continue;
                bool all_c = true;
                for (const auto& p : mp)
                    all_c = all_c && ra.c_ideal(p);
                if (all_c)
                    f(ra, q, u, v, mp);
            }
        }
    });
}

void minprime_product(const InstanceStream& s, Recorder& rec)
{
    each_minprime_instance(s, rec,
                           [&](const RingAnalysis& ra, const ElementSet& q, int u, int v,
                               const std::vector<ElementSet>& mp) {
                               each_choice(private_parts(mp), 64, [&](const std::vector<Element>& z) {
                                   for (std::size_t j = 0; j < mp.size(); ++j) {
                                       std::vector<ElementSet> seq{mp[j]};
                                       for (std::size_t i = 0; i < z.size(); ++i)
                                           if (i != j)
                                               seq.push_back(ElementSet::singleton(z[i]));
                                       rec.check(ra.ring().subset_hyperproduct(seq).is_subset_of(q), [&] {
                                           return at(ra, q) + " " + uv(u, v) + " z=" +
                                                  format_elements(z) + " j=" + std::to_string(j + 1);
                                       });
                                   }
                               });
                           });
}

void coprime_product(const InstanceStream& s, Recorder& rec)
{
    const int max_u = s.spec().max_u;
    each_minprime_instance(s, rec,
                           [&](const RingAnalysis& ra, const ElementSet& q, int u, int v,
                               const std::vector<ElementSet>& mp) {
                               const ElementSet prod = ideal_product(ra.ring(), mp);
                               rec.check(prod.is_subset_of(q), [&] {
                                   return at(ra, q) + " " + uv(u, v) + " product of minimal primes " +
                                          prod.to_string() + " not in Q";
                               });
                               const auto ab = abs_pair(ra, q, max_u);
                               if (!ab)
                                   rec.observe(at(ra, q) + ": Abs beyond the query range");
                               else
                                   rec.check(ab->second == v, [&] {
                                       return at(ra, q) + " " + uv(u, v) + " abs=" +
                                              std::to_string(ab->second);
                                   });
                           });
}

void coprime_equality(const InstanceStream& s, Recorder& rec)
{
    each_minprime_instance(s, rec,
                           [&](const RingAnalysis& ra, const ElementSet& q, int u, int v,
                               const std::vector<ElementSet>& mp) {
                               for (std::size_t i = 0; i < mp.size(); ++i)
                                   for (std::size_t j = i + 1; j < mp.size(); ++j)
                                       if (!are_coprime(ra.ring(), mp[i], mp[j]))
                                           return;
                               const ElementSet prod =
                                   generated_hyperideal(ra.ring(), ideal_product(ra.ring(), mp));
                               rec.check(prod == q, [&] {
                                   return at(ra, q) + " " + uv(u, v) + " product ideal " +
                                          prod.to_string();
                               });
                           });
}

void radical_ideal_equiv(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        for (const auto& q : ra.candidates()) {
            if (!ra.c_ideal(q) || ra.radical(q) != q)
                continue;
            for (auto [u, v] : s.queries()) {
                tick(rec);
                const bool left = ra.plain(q, u, v);
                const bool right = ra.plain(q, v + 1, v);
                rec.check(left == right, [&] {
                    return at(ra, q) + " " + uv(u, v) + " gives " + yes_no(left) +
                           ", v-absorbing gives " + yes_no(right);
                });
                if (right != ra.v_absorbing(q, v))
                    rec.observe(at(ra, q) + " v=" + std::to_string(v) +
                                ": units change the v-absorbing verdict");
            }
        }
    });
}

void abs_eq_radical(const InstanceStream& s, Recorder& rec)
{
    const int max_u = s.spec().max_u;
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        for (const auto& q : ra.candidates()) {
            tick(rec);
            if (!ra.c_ideal(q) || ra.radical(q) != q)
                continue;
            const auto ab = abs_pair(ra, q, max_u);
            if (!ab)
                continue;
            rec.check(ab->first == ab->second, [&] {
                return at(ra, q) + " Abs=" + std::to_string(ab->first) +
                       " abs=" + std::to_string(ab->second);
            });
        }
    });
}

void abs_indices_order(const InstanceStream& s, Recorder& rec)
{
    const int max_u = s.spec().max_u;
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        for (const auto& q : ra.candidates()) {
            tick(rec);
            const auto ab = abs_pair(ra, q, max_u);
            if (!ab)
                continue;
            rec.check(ab->second <= ab->first, [&] {
                return at(ra, q) + " Abs=" + std::to_string(ab->first) +
                       " abs=" + std::to_string(ab->second);
            });
        }
    });
}

void primary_power(const InstanceStream& s, Recorder& rec)
{
    const int max_u = s.spec().max_u;
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        const Hyperring& r = ra.ring();
        for (const auto& p : ra.proper()) {
            if (!ra.prime(p))
                continue;
            for (const auto& q : ra.candidates()) {
                tick(rec);
                if (!ra.c_ideal(q) || ra.radical(q) != p || !is_primary(r, q))
                    continue;
                for (int v = 1; v < max_u; ++v) {
                    if (!set_power(r, p, v).is_subset_of(q))
                        continue;
                    for (int u = v + 1; u <= max_u; ++u)
                        rec.check(ra.plain(q, u, v), [&] {
                            return at(ra, q) + " P=" + p.to_string() + " " + uv(u, v);
                        });
                }
            }
            for (int v = 1; v < max_u; ++v) {
                tick(rec);
                const ElementSet pv = set_power(r, p, v);
                if (!is_hyperideal(r, pv) || !is_proper(r, pv) || !ra.c_ideal(pv) ||
                    ra.radical(pv) != p || !is_primary(r, pv))
                    continue;
                for (int u = v + 1; u <= max_u; ++u)
                    rec.check(ra.plain(pv, u, v), [&] {
                        return at(ra, pv) + " is P^v for P=" + p.to_string() + ", " + uv(u, v);
                    });
                if (const auto ab = abs_pair(ra, pv, max_u); ab && ab->second != v)
                    rec.observe(at(ra, pv) + " = P^" + std::to_string(v) + " has abs=" +
                                std::to_string(ab->second));
            }
        }
    });
}

// ---------------------------------------------------------------- AB variant

void ab_equiv(const InstanceStream& s, Recorder& rec, bool jacobson_form)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        const Hyperring& r = ra.ring();
        if (!ra.has_identity() || ra.maximals().empty())
            return;
        ElementSet jac = r.carrier();
        for (const auto& m : ra.maximals())
            jac &= m;
        for (const auto& q : ra.candidates()) {
            if (!ra.strong_c(q))
                continue;
            bool hyp = false;
            if (jacobson_form) {
                hyp = !q.is_subset_of(jac);
            } else {
                for (Element a : q.members())
                    hyp = hyp || !r.units().contains(r.add(a, r.one()));
            }
            for (auto [u, v] : s.queries()) {
                tick(rec);
                if (!hyp)
                    continue;
                const bool a = ra.ab(q, u, v);
                const bool b = ra.plain(q, u, v);
                rec.check(a == b, [&] {
                    return at(ra, q) + " " + uv(u, v) + " with units " + yes_no(a) +
                           ", without " + yes_no(b);
                });
            }
        }
    });
}

void gamma_transfer(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        std::optional<FundamentalRing> fr;
        try {
            fr = fundamental_ring(ra.ring(), ra.cache());
        } catch (const Error& e) {
            rec.observe(ra.label() + ": " + e.what());
            return;
        }
        for (const auto& q : ra.candidates()) {
            if (!fr->saturated(q)) {
                rec.observe(at(ra, q) + " is not a union of classes");
                continue;
            }
            const ElementSet image = fr->image(q);
            for (auto [u, v] : s.queries()) {
                tick(rec);
                const bool a = ra.ab(q, u, v);
                const bool b = check_absorbing(fr->ring, image, {u, v, AbsorbingKind::AB}).holds;
                rec.check(a == b, [&] {
                    return at(ra, q) + " " + uv(u, v) + " gives " + yes_no(a) +
                           ", class image " + image.to_string() + " gives " + yes_no(b);
                });
            }
        }
    });
}

void product_ab(const InstanceStream& s, Recorder& rec)
{
    each(s.products(), s, rec, [&](const ProductInstance& p) {
        for (const auto& q1 : p.left->candidates()) {
            const ElementSet q = p.dp.embed(q1, p.right->ring().carrier());
            for (auto [u, v] : s.queries()) {
                tick(rec);
                const bool a = p.whole->plain(q, u, v);
                const bool b = p.left->ab(q1, u, v);
                const bool c = p.whole->ab(q, u, v);
                rec.check(a == b && b == c, [&] {
                    return p.whole->label() + " Q1=" + q1.to_string() + " " + uv(u, v) +
                           ": Q x A2 " + yes_no(a) + ", Q1 with units " + yes_no(b) +
                           ", Q x A2 with units " + yes_no(c);
                });
            }
        }
    });
}

// ---------------------------------------------------------------- prime variant

void prime_symmetry(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        for (const auto& q : ra.candidates()) {
            if (!ra.c_ideal(q))
                continue;
            for (auto [u, v] : s.queries()) {
                tick(rec);
                const bool a = ra.prime_uv(q, u, v);
                const bool b = ra.prime_uv(q, u, u - v);
                rec.check(a == b, [&] {
                    return at(ra, q) + " " + uv(u, v) + " " + yes_no(a) + ", " + uv(u, u - v) +
                           " " + yes_no(b);
                });
            }
        }
    });
}

void prime_shift(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        for (const auto& q : ra.candidates()) {
            if (!ra.c_ideal(q))
                continue;
            for (auto [u, v] : s.queries()) {
                if (u + 1 > s.spec().max_u)
                    continue;
                tick(rec);
                if (!ra.prime_uv(q, u, v))
                    continue;
                rec.check(ra.prime_uv(q, u + 1, v + 1), [&] {
                    return at(ra, q) + " prime at " + uv(u, v) + " but not at " +
                           uv(u + 1, v + 1);
                });
            }
        }
    });
}

void prime_index_drop(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        if (ra.is_local())
            return;
        for (const auto& q : ra.candidates()) {
            if (!ra.strong_c(q))
                continue;
            for (auto [u, v] : s.queries()) {
                if (v < 2)
                    continue;
                tick(rec);
                const bool a = ra.prime_uv(q, u, v);
                const bool b = ra.prime_uv(q, u - 1, v - 1);
                rec.check(a == b, [&] {
                    return at(ra, q) + " " + uv(u, v) + " " + yes_no(a) + ", " +
                           uv(u - 1, v - 1) + " " + yes_no(b);
                });
            }
        }
    });
}

void prime_reduce(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        if (ra.is_local())
            return;
        for (const auto& q : ra.candidates()) {
            if (!ra.strong_c(q))
                continue;
            for (auto [u, v] : s.queries()) {
                tick(rec);
                const bool a = ra.prime_uv(q, u - v + 1, 1);
                const bool b = ra.prime(q);
                rec.check(a == b, [&] {
                    return at(ra, q) + " " + uv(u - v + 1, 1) + " " + yes_no(a) + ", prime " +
                           yes_no(b);
                });
            }
        }
    });
}

void prime_collapse(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        if (ra.is_local())
            return;
        for (const auto& q : ra.candidates()) {
            if (!ra.strong_c(q))
                continue;
            for (auto [u, v] : s.queries()) {
                tick(rec);
                const bool a = ra.prime_uv(q, u, v);
                const bool b = ra.prime(q);
                rec.check(a == b, [&] {
                    return at(ra, q) + " " + uv(u, v) + " " + yes_no(a) + ", prime " + yes_no(b);
                });
            }
        }
    });
}

void product_prime(const InstanceStream& s, Recorder& rec)
{
    each(s.products(), s, rec, [&](const ProductInstance& p) {
        const ElementSet a1 = p.left->ring().carrier();
        const ElementSet a2 = p.right->ring().carrier();
        for (const auto& q1 : p.left->ideals()) {
            if (!p.left->strong_c(q1))
                continue;
            for (const auto& q2 : p.right->ideals()) {
                if (!p.right->strong_c(q2) || (q1 == a1 && q2 == a2))
                    continue;
                const ElementSet q = p.dp.embed(q1, q2);
                const bool c = (q2 == a2 && p.left->prime(q1)) || (q1 == a1 && p.right->prime(q2));
                for (auto [u, v] : s.queries()) {
                    tick(rec);
                    const bool a = p.whole->prime_uv(q, u, v);
                    const bool b = p.whole->prime(q);
                    rec.check(a == b && b == c, [&] {
                        return p.whole->label() + " Q1=" + q1.to_string() + " Q2=" +
                               q2.to_string() + " " + uv(u, v) + ": absorbing prime " +
                               yes_no(a) + ", prime " + yes_no(b) + ", factor form " + yes_no(c);
                    });
                }
            }
        }
    });
}

void local_prime(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        for (const auto& q : ra.candidates()) {
            if (!ra.strong_c(q))
                continue;
            for (int v = 1; v < s.spec().max_u; ++v) {
                tick(rec);
                const bool a = ra.prime_uv(q, v + 1, v);
                bool nil = false;
                if (ra.is_local())
                    nil = set_power(ra.ring(), ra.maximals()[0], v).is_subset_of(q);
                const bool b = ra.prime(q) || nil;
                rec.check(a == b, [&] {
                    return at(ra, q) + " v=" + std::to_string(v) + ": absorbing prime " +
                           yes_no(a) + ", prime or M^v in Q " + yes_no(b);
                });
            }
        }
    });
}

void local_containment(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        for (const auto& q : ra.candidates()) {
            if (!ra.strong_c(q) || ra.prime(q))
                continue;
            for (int v = 1; v < s.spec().max_u; ++v) {
                tick(rec);
                if (!ra.prime_uv(q, v + 1, v))
                    continue;
                for (const auto& p : ra.proper()) {
                    if (!q.is_subset_of(p))
                        continue;
                    for (int u = v + 1; u <= s.spec().max_u; ++u)
                        rec.check(ra.prime_uv(p, u, v), [&] {
                            return at(ra, q) + " v=" + std::to_string(v) + " P=" +
                                   p.to_string() + " fails at " + uv(u, v);
                        });
                }
            }
        }
    });
}

void radical_prime(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        for (const auto& q : ra.candidates()) {
            if (!ra.strong_c(q))
                continue;
            for (auto [u, v] : s.queries()) {
                tick(rec);
                if (!ra.prime_uv(q, u, v))
                    continue;
                const ElementSet rad = ra.radical(q);
                std::string why;
                if (!is_proper(ra.ring(), rad) || !ra.prime(rad))
                    why = "rad=" + rad.to_string() + " is not prime";
                else if (!ra.prime(q) && !ra.is_local())
                    why = "Q is not prime and the ring is not local";
                else if (!ra.prime(q) && u == v + 1 && rad != ra.maximals()[0])
                    why = "rad=" + rad.to_string() + " is not the maximal hyperideal";
                rec.check(why.empty(), [&] { return at(ra, q) + " " + uv(u, v) + ": " + why; });
            }
        }
    });
}

void hyperfield_lemma(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        tick(rec);
        if (!ra.has_identity())
            return;
        for (const auto& q : ra.proper())
            if (!ra.prime(q) || !ra.c_ideal(q))
                return;
        const ElementSet nonzero = ra.ring().carrier() - ElementSet::singleton(ra.ring().zero());
        rec.check(nonzero.is_subset_of(ra.ring().units()), [&] {
            return ra.label() + " non-units " + (nonzero - ra.ring().units()).to_string();
        });
    });
}

void local_nilpotent(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        tick(rec);
        if (!ra.has_identity() || !ra.is_local())
            return;
        for (const auto& q : ra.ideals())
            if (!ra.strong_c(q))
                return;
        const ElementSet zero = ElementSet::singleton(ra.ring().zero());
        for (int v = 1; v < s.spec().max_u; ++v) {
            bool all = true;
            for (const auto& q : ra.proper())
                all = all && ra.prime_uv(q, v + 1, v);
            const ElementSet mv = set_power(ra.ring(), ra.maximals()[0], v);
            rec.check(all == (mv == zero), [&] {
                return ra.label() + " v=" + std::to_string(v) + ": every proper hyperideal " +
                       yes_no(all) + ", M^v=" + mv.to_string();
            });
        }
    });
}

void ideal_form(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        for (const auto& q : ra.candidates())
            for (auto [u, v] : s.queries()) {
                tick(rec);
                const AbsorbingQuery query{u, v, AbsorbingKind::Prime};
                const bool a = ra.prime_uv(q, u, v);
                const bool b = ideal_product_prime_check(ra.ring(), q, query, ra.proper()).holds;
                rec.check(a == b, [&] {
                    return at(ra, q) + " " + uv(u, v) + " elements " + yes_no(a) +
                           ", hyperideals " + yes_no(b);
                });
            }
    });
}

void colon_drop(const InstanceStream& s, Recorder& rec)
{
    each_ring(s, rec, [&](const RingAnalysis& ra) {
        const Hyperring& r = ra.ring();
        for (const auto& q : ra.candidates())
            for (auto [u, v] : s.queries()) {
                if (v < 2 || !ra.prime_uv(q, u, v))
                    continue;
                for (Element x = 0; x < r.order(); ++x) {
                    if (q.contains(x) || r.units().contains(x))
                        continue;
                    tick(rec);
                    const ElementSet c = colon(r, q, x);
                    const bool ok = is_proper(r, c) && is_hyperideal(r, c) &&
                                    ra.prime_uv(c, u - 1, v - 1);
                    rec.check(ok, [&] {
                        return at(ra, q) + " " + uv(u, v) + " x=" + std::to_string(x) +
                               " (Q:x)=" + c.to_string();
                    });
                }
            }
    });
}

// ---------------------------------------------------------------- constructions

void matrix_lift(const InstanceStream& s, Recorder& rec)
{
    each(s.matrices(), s, rec, [&](const MatrixInstance& m) {
        // No identity needed here: with one, M_2(Q) is never prime since
        // E11 o E12 o E11 = 0.
        const RingAnalysis& ra = *m.base;
        ScanOptions opts;
        opts.ordered = true;
        for (const auto& q : ra.candidates()) {
            const ElementSet lifted = m.lazy->lift(q);
            if (!m.lazy->lift_is_hyperideal(q)) {
                rec.observe(at(ra, q) + ": M_2(Q) is not a hyperideal");
                continue;
            }
            for (auto [u, v] : s.queries()) {
                if (u > s.spec().matrix_max_u)
                    continue;
                tick(rec);
                const AbsorbingQuery query{u, v, AbsorbingKind::Prime};
                if (!check_absorbing(m.matrices->table(), m.matrices->non_units(), lifted, query,
                                     opts)
                         .holds)
                    continue;
                rec.check(ra.prime_uv(q, u, v), [&] {
                    return at(ra, q) + " " + uv(u, v) + ": M_2(Q) holds, Q does not";
                });
            }
        }
    });
}

void polynomial(const InstanceStream& s, Recorder& rec)
{
    each(s.base_rings(), s, rec, [&](const RingRef& ref) {
        const RingAnalysis& ra = *ref;
        if (!ra.has_identity())
            return;
        for (const auto& q : ra.candidates())
            for (auto [u, v] : s.queries()) {
                tick(rec);
                if (!ra.prime_uv(q, u, v))
                    continue;
                MonomialExtension ext(ra.ring(), 2 * u);
                std::vector<Monomial> letters;
                const Verdict verdict = ext.check(q, {u, v, AbsorbingKind::Prime}, &letters);
                rec.check(verdict.holds, [&] {
                    std::string w;
                    for (Element i : verdict.witness->tuple)
                        w += " " + std::to_string(letters[i].coeff) + "x^" +
                             std::to_string(letters[i].degree);
                    return at(ra, q) + " " + uv(u, v) + " Q[x] fails at" + w;
                });
            }
    });
}

bool preserves_non_units(const HomInstance& h)
{
    const ElementSet target_units = h.target->ring().units();
    for (Element x : h.source->ring().non_units().members())
        if (target_units.contains(h.map[x]))
            return false;
    return true;
}

GoodHomomorphism as_good(const HomInstance& h)
{
    return GoodHomomorphism{h.source->ring(), h.target->ring(), h.map};
}

void hom_preimage(const InstanceStream& s, Recorder& rec)
{
    each(s.homomorphisms(), s, rec, [&](const HomInstance& h) {
        if (!h.source->has_identity() || !h.target->has_identity())
            return;
        const bool units_ok = preserves_non_units(h);
        const GoodHomomorphism g = as_good(h);
        const Hyperring& src = h.source->ring();
        for (const auto& q2 : h.target->candidates())
            for (auto [u, v] : s.queries()) {
                tick(rec);
                if (!units_ok || !h.target->prime_uv(q2, u, v))
                    continue;
                const ElementSet pre = g.preimage(q2);
                const bool ok = is_proper(src, pre) && is_hyperideal(src, pre) &&
                                h.source->prime_uv(pre, u, v);
                rec.check(ok, [&] {
                    return h.label + " Q2=" + q2.to_string() + " " + uv(u, v) + " preimage " +
                           pre.to_string();
                });
            }
    });
}

void hom_image(const InstanceStream& s, Recorder& rec)
{
    each(s.homomorphisms(), s, rec, [&](const HomInstance& h) {
        if (!h.source->has_identity() || !h.target->has_identity())
            return;
        const GoodHomomorphism g = as_good(h);
        const bool hyp = preserves_non_units(h) && g.surjective();
        const ElementSet ker = g.kernel();
        const Hyperring& dst = h.target->ring();
        for (const auto& q1 : h.source->candidates())
            for (auto [u, v] : s.queries()) {
                tick(rec);
                if (!hyp || !ker.is_subset_of(q1) || !h.source->c_ideal(q1) ||
                    !h.source->prime_uv(q1, u, v))
                    continue;
                const ElementSet img = g.image(q1);
                const bool ok = is_proper(dst, img) && is_hyperideal(dst, img) &&
                                h.target->prime_uv(img, u, v);
                rec.check(ok, [&] {
                    return h.label + " Q1=" + q1.to_string() + " " + uv(u, v) + " image " +
                           img.to_string();
                });
            }
    });
}

void quotient_transfer(const InstanceStream& s, Recorder& rec)
{
    each(s.quotients(), s, rec, [&](const QuotientInstance& qi) {
        const RingAnalysis& a = *qi.base;
        const RingAnalysis& b = *qi.quotient;
        if (!a.has_identity() || !b.has_identity())
            return;
        bool units_ok = true;
        for (Element x : a.ring().non_units().members())
            units_ok = units_ok && !b.ring().units().contains(qi.qr.projection[x]);
        for (const auto& q2 : a.candidates()) {
            if (!qi.q1.is_subset_of(q2) || !a.c_ideal(q2))
                continue;
            const ElementSet image = qi.qr.image(q2);
            for (auto [u, v] : s.queries()) {
                tick(rec);
                if (!units_ok)
                    continue;
                const bool x = a.prime_uv(q2, u, v);
                const bool y = b.prime_uv(image, u, v);
                rec.check(x == y, [&] {
                    return b.label() + " Q2=" + q2.to_string() + " " + uv(u, v) + ": Q2 " +
                           yes_no(x) + ", Q2/Q1 " + yes_no(y);
                });
            }
        }
    });
}

void localization_drop(const InstanceStream& s, Recorder& rec)
{
    each(s.localizations(), s, rec, [&](const LocalizationInstance& li) {
        const Localization& loc = *li.loc;
        const RingAnalysis& ra = *li.base;
        const std::string where = "S^-1 " + ra.label() + " at S=" + loc.s.to_string() +
                                  (loc.mode == ClosureMode::Weak ? " (weak)" : " (strict)");
        if (!loc.well_defined) {
            rec.observe(where + ": " + loc.ill_defined_witness.value_or("ill-defined"));
            return;
        }
        const ElementSet non_units = ElementSet::full(loc.order()) - loc.units();
        for (const auto& q : ra.candidates()) {
            if (!ra.c_ideal(q) || q.intersects(loc.s))
                continue;
            const ElementSet sq = loc.extend_ideal(q);
            for (auto [u, v] : s.queries()) {
                if (v < 2)
                    continue;
                tick(rec);
                if (!ra.prime_uv(q, u, v))
                    continue;
                const bool ok =
                    sq != ElementSet::full(loc.order()) &&
                    check_absorbing(loc.odot, non_units, sq, {u - 1, v - 1, AbsorbingKind::Prime})
                        .holds;
                rec.check(ok, [&] {
                    return where + " Q=" + q.to_string() + " " + uv(u, v) + " S^-1 Q=" +
                           sq.to_string();
                });
            }
        }
    });
}

// ---------------------------------------------------------------- table

std::vector<TheoremProperty> build_registry()
{
    using S = const InstanceStream&;
    using R = Recorder&;
    return {
        {"MONOTONICITY",
         "A (u,v)-absorbing hyperideal is (k,r)-absorbing for all k >= u and r >= v.",
         monotonicity},
        {"TUPLE-EXTENSION",
         "Q is (u,v)-absorbing iff every k-fold non-unit product in Q with k >= u has a v-fold "
         "sub-product in Q.",
         tuple_extension},
        {"DOWNGRADE", "A (u,v)-absorbing hyperideal is (u,u-1)-absorbing.", downgrade},
        {"AB-PLAIN", "An AB-(u,v)-absorbing hyperideal is (u,v)-absorbing.", ab_plain},
        {"INTERSECTION",
         "If Q1 is (u1,v1)-absorbing and Q2 is (u2,v2)-absorbing then Q1 meet Q2 is "
         "(max(u1,u2,v1+v2+1), v1+v2)-absorbing.",
         intersection},
        {"RADICAL-FORM",
         "For a (u,v)-absorbing C-hyperideal Q, rad(Q) is the set of x with x^v inside Q.",
         radical_form},
        {"RADICAL-ABSORBING",
         "For a (u,v)-absorbing C-hyperideal Q, rad(Q) is (max(ceil(u/v), v+1), v)-absorbing.",
         radical_absorbing},
        {"MAXIMAL-ABSORBING", "A maximal hyperideal is (u,v)-absorbing.", maximal_absorbing},
        {"MINIMAL-EXISTENCE",
         "Above every proper hyperideal there is a minimal (u,v)-absorbing hyperideal.",
         minimal_existence},
        {"MINIMAL-V-ABSORBING",
         "Above every proper hyperideal there is a minimal v-absorbing hyperideal.",
         minimal_v_absorbing},
        {"COUNTING",
         "If Q is (u,v)-absorbing with r minimal primes and 2 <= k <= r <= u-1, there are at "
         "least C(r,k) minimal k-absorbing hyperideals over Q.",
         counting},
        {"POWERS-LEMMA",
         "For a (u,v)-absorbing Q inside incomparable prime C-hyperideals Q1..Qv and xi in Qi "
         "only, x1^k1 o ... o xv^kv inside Q forces x1 o ... o xv inside Q.",
         powers_lemma},
        {"MINPRIME-PRODUCT",
         "If the strong C-hyperideal Q is (u,v)-absorbing with exactly v minimal primes Q1..Qv, "
         "all C-hyperideals, and zi lies only in Qi, then Qj o prod of zi over i != j lies in Q.",
         minprime_product},
        {"COPRIME-PRODUCT",
         "Under the same hypotheses Q1 o ... o Qv lies in Q and abs(Q) = v.", coprime_product},
        {"COPRIME-EQUALITY",
         "Under the same hypotheses with the Qi pairwise coprime, the hyperideal generated by "
         "Q1 o ... o Qv is Q.",
         coprime_equality},
        {"RADICAL-IDEAL-EQUIV",
         "A radical C-hyperideal is (u,v)-absorbing iff it is v-absorbing.", radical_ideal_equiv},
        {"ABS-EQ-RADICAL", "For a radical C-hyperideal abs(Q) = Abs(Q).", abs_eq_radical},
        {"ABS-ORDER", "abs(Q) <= Abs(Q) whenever Abs(Q) is finite.", abs_indices_order},
        {"PRIMARY-POWER",
         "A P-primary C-hyperideal Q with P^v inside Q is (u,v)-absorbing for u > v; so is P^v "
         "when it is a P-primary C-hyperideal.",
         primary_power},
        {"AB-EQUIV-UNIT",
         "A strong C-hyperideal Q containing some a with a+1 not a unit is AB-(u,v)-absorbing "
         "iff it is (u,v)-absorbing.",
         [](S s, R r) { ab_equiv(s, r, false); }},
        {"AB-EQUIV-JACOBSON",
         "A strong C-hyperideal Q not inside J(A) is AB-(u,v)-absorbing iff it is "
         "(u,v)-absorbing.",
         [](S s, R r) { ab_equiv(s, r, true); }},
        {"GAMMA-TRANSFER",
         "A proper union of gamma* classes Q is AB-(u,v)-absorbing iff Q/gamma* is "
         "AB-(u,v)-absorbing in the fundamental ring.",
         gamma_transfer},
        {"PRODUCT-AB",
         "For Q1 proper, Q1 x A2 is (u,v)-absorbing iff Q1 is AB-(u,v)-absorbing iff Q1 x A2 "
         "is AB-(u,v)-absorbing.",
         product_ab},
        {"PRIME-SYMMETRY",
         "A C-hyperideal is (u,v)-absorbing prime iff it is (u,u-v)-absorbing prime.",
         prime_symmetry},
        {"PRIME-SHIFT",
         "A (u,v)-absorbing prime C-hyperideal is (u+1,v+1)-absorbing prime.", prime_shift},
        {"PRIME-INDEX-DROP",
         "In a non-local ring a strong C-hyperideal is (u,v)-absorbing prime iff it is "
         "(u-1,v-1)-absorbing prime.",
         prime_index_drop},
        {"PRIME-REDUCE",
         "In a non-local ring a strong C-hyperideal is (u-v+1,1)-absorbing prime iff it is "
         "prime.",
         prime_reduce},
        {"PRIME-COLLAPSE",
         "In a non-local ring every (u,v)-absorbing prime strong C-hyperideal is prime, and "
         "conversely.",
         prime_collapse},
        {"PRODUCT-PRIME",
         "For strong C-hyperideals Q1, Q2, Q1 x Q2 is (u,v)-absorbing prime iff it is prime iff "
         "Q1 is prime and Q2 = A2 or Q2 is prime and Q1 = A1.",
         product_prime},
        {"LOCAL-PRIME",
         "A strong C-hyperideal is (v+1,v)-absorbing prime iff it is prime, or the ring is "
         "local with M^v inside Q.",
         local_prime},
        {"LOCAL-CONTAINMENT",
         "If Q is a (v+1,v)-absorbing prime strong C-hyperideal that is not prime, every proper "
         "hyperideal containing Q is (u,v)-absorbing prime.",
         local_containment},
        {"RADICAL-PRIME",
         "For a (u,v)-absorbing prime strong C-hyperideal Q, rad(Q) is prime; if Q is not prime "
         "the ring is local, and rad(Q) = M when u = v+1.",
         radical_prime},
        {"HYPERFIELD-LEMMA",
         "If every proper hyperideal is a prime C-hyperideal then every nonzero element is a "
         "unit.",
         hyperfield_lemma},
        {"LOCAL-NILPOTENT",
         "In a local ring whose hyperideals are all strong C-hyperideals, every proper "
         "hyperideal is (v+1,v)-absorbing prime iff M^v = 0.",
         local_nilpotent},
        {"IDEAL-FORM",
         "Q is (u,v)-absorbing prime iff every u-fold product of hyperideals inside Q has its "
         "first v or last u-v factors' product inside Q.",
         ideal_form},
        {"COLON",
         "If Q is (u,v)-absorbing prime and x is neither in Q nor a unit, (Q:x) is "
         "(u-1,v-1)-absorbing prime.",
         colon_drop},
        {"MATRIX",
         "If M_2(Q) is (u,v)-absorbing prime in M_2(A) then Q is (u,v)-absorbing prime.",
         matrix_lift},
        {"POLYNOMIAL", "If Q is (u,v)-absorbing prime then so is Q[x].", polynomial},
        {"HOMOMORPHISM-PREIMAGE",
         "For a good homomorphism sending non-units to non-units, the preimage of a "
         "(u,v)-absorbing prime hyperideal is (u,v)-absorbing prime.",
         hom_preimage},
        {"HOMOMORPHISM-IMAGE",
         "For a surjective good homomorphism sending non-units to non-units and a "
         "(u,v)-absorbing prime C-hyperideal Q containing the kernel, the image of Q is "
         "(u,v)-absorbing prime.",
         hom_image},
        {"QUOTIENT",
         "For Q1 inside a C-hyperideal Q2, when no non-unit becomes a unit modulo Q1, Q2 is "
         "(u,v)-absorbing prime iff Q2/Q1 is.",
         quotient_transfer},
        {"LOCALIZATION",
         "For a (u,v)-absorbing prime C-hyperideal Q missing S, S^-1 Q is (u-1,v-1)-absorbing "
         "prime.",
         localization_drop},
    };
}

}  // namespace

const std::vector<TheoremProperty>& registry()
{
    static const std::vector<TheoremProperty> r = build_registry();
    return r;
}

namespace {

TheoremVerdict run_entry(const TheoremProperty& p, const InstanceStream& stream)
{
    TheoremVerdict v;
    v.id = p.id;
    v.statement = p.statement;
    Recorder rec(v, stream.spec().budget);
    try {
        p.run(stream, rec);
    } catch (const Stop&) {
    }
    return v;
}

}  // namespace

TheoremVerdict run_property(const std::string& id, const InstanceStream& stream)
{
    for (const auto& p : registry())
        if (p.id == id)
            return run_entry(p, stream);
    throw Error(ErrorKind::UnknownTheorem, id);
}

std::vector<TheoremVerdict> run_all(const InstanceStream& stream, unsigned workers)
{
    const auto& reg = registry();
    std::vector<TheoremVerdict> out(reg.size());
    parallel_for(reg.size(), workers, [&](std::size_t i) { out[i] = run_entry(reg[i], stream); });
    return out;
}

std::string format_report(const InstanceStream& stream, const std::vector<TheoremVerdict>& verdicts)
{
    std::ostringstream os;
    os << "theorem-suite\n";
    os << "spec: " << describe_spec(stream.spec()) << "\n";
    os << "instances: rings=" << stream.rings().size() << " base=" << stream.base_rings().size()
       << " products=" << stream.products().size() << " quotients=" << stream.quotients().size()
       << " homomorphisms=" << stream.homomorphisms().size()
       << " matrices=" << stream.matrices().size()
       << " localizations=" << stream.localizations().size() << " zt=" << stream.zt().size()
       << " skipped=" << stream.skipped().size() << "\n";
    std::size_t counts[4] = {0, 0, 0, 0};
    for (const auto& v : verdicts) {
        const VerdictStatus st = v.status();
        ++counts[static_cast<int>(st)];
        os << "\n[" << to_string(st) << "] " << v.id << "\n";
        os << "  statement: " << v.statement << "\n";
        os << "  scanned: " << v.scanned << "\n";
        os << "  hypothesis-hits: " << v.hypothesis_hits << "\n";
        os << "  failures: " << v.failures << "\n";
        if (v.incomplete)
            os << "  incomplete: budget " << stream.spec().budget << " reached\n";
        for (const auto& w : v.witnesses)
            os << "  witness: " << w << "\n";
        if (v.observation_count > 0) {
            os << "  observations: " << v.observation_count << "\n";
            for (const auto& o : v.observations)
                os << "  observed: " << o << "\n";
        }
    }
    os << "\nsummary: theorems=" << verdicts.size() << " pass=" << counts[0]
       << " fail=" << counts[1] << " vacuous=" << counts[2] << " incomplete=" << counts[3]
       << "\n";
    return os.str();
}

}  // namespace hyper
