#include "hyper/absorbing.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "hyper/ideals.hpp"
#include "hyper/parallel.hpp"

namespace hyper {

std::string_view to_string(AbsorbingKind kind)
{
    switch (kind) {
    case AbsorbingKind::Plain: return "plain";
    case AbsorbingKind::AB: return "AB";
    case AbsorbingKind::Prime: return "prime";
    }
    return "unknown";
}

void AbsorbingQuery::validate() const
{
    if (v < 1)
        throw Error(ErrorKind::BadQuery, "v must be at least 1");
    if (u <= v)
        throw Error(ErrorKind::BadQuery,
                    "u must exceed v (got u=" + std::to_string(u) + ", v=" + std::to_string(v) +
                        ")");
    if (u > 8)
        throw Error(ErrorKind::BadQuery, "u above 8 is not supported");
}

namespace {

/// Position splits (v chosen positions, the rest) of a u-tuple, in
/// lexicographic order of the chosen positions.
std::vector<unsigned> combinations(int u, int v)
{
    std::vector<unsigned> out;
    std::vector<int> pos(v);
    for (int i = 0; i < v; ++i)
        pos[i] = i;
    while (true) {
        unsigned mask = 0;
        for (int p : pos)
            mask |= 1U << p;
        out.push_back(mask);
        int i = v - 1;
        while (i >= 0 && pos[i] == u - v + i)
            --i;
        if (i < 0)
            break;
        ++pos[i];
        for (int j = i + 1; j < v; ++j)
            pos[j] = pos[j - 1] + 1;
    }
    return out;
}

/// Depth-first scan of nondecreasing index sequences. The first failing leaf
/// in lexicographic order is the witness.
template <typename Model>
class MultisetScan {
public:
    MultisetScan(Model model, const std::vector<Element>& alphabet, const AbsorbingQuery& query,
                 bool ordered)
        : model_(std::move(model)), alphabet_(alphabet), query_(query),
          splits_(combinations(query.u, query.v)), tuple_(query.u), ordered_(ordered)
    {
        if (ordered_ && query_.kind == AbsorbingKind::Prime)
            splits_.resize(1);
    }

    std::optional<Witness> scan_subtree(std::size_t first)
    {
        witness_.reset();
        tuple_[0] = alphabet_[first];
        auto state = model_.single(alphabet_[first]);
        if (prunable(1, state))
            return std::nullopt;
        dfs(1, ordered_ ? 0 : first, state);
        return witness_;
    }

private:
    using State = typename Model::State;

    bool prunable(int depth, const State& s)
    {
        // A prefix product already in Q extends to a v-fold sub-product in Q.
        return query_.kind != AbsorbingKind::Prime && depth <= query_.v &&
               model_.contained(s, depth);
    }

    void dfs(int depth, std::size_t start, const State& prefix)
    {
        if (depth == query_.u) {
            leaf(prefix);
            return;
        }
        for (std::size_t i = start; i < alphabet_.size() && !witness_; ++i) {
            tuple_[depth] = alphabet_[i];
            State s = model_.extend(prefix, alphabet_[i]);
            if (prunable(depth + 1, s))
                continue;
            dfs(depth + 1, ordered_ ? 0 : i, s);
        }
    }

    void leaf(const State& product)
    {
        if (!model_.contained(product, query_.u))
            return;
        Element chosen[8];
        Element rest[8];
        for (unsigned mask : splits_) {
            int nc = 0;
            int nr = 0;
            for (int p = 0; p < query_.u; ++p) {
                if (mask & (1U << p))
                    chosen[nc++] = tuple_[p];
                else
                    rest[nr++] = tuple_[p];
            }
            bool first_in = model_.sub_contained(chosen, nc);
            if (query_.kind != AbsorbingKind::Prime) {
                if (first_in)
                    return;
                continue;
            }
            if (!first_in && !model_.sub_contained(rest, nr)) {
                Witness w{query_, {}};
                w.tuple.assign(chosen, chosen + nc);
                w.tuple.insert(w.tuple.end(), rest, rest + nr);
                witness_ = std::move(w);
                return;
            }
        }
        if (query_.kind != AbsorbingKind::Prime)
            witness_ = Witness{query_, tuple_};
    }

    Model model_;
    const std::vector<Element>& alphabet_;
    AbsorbingQuery query_;
    std::vector<unsigned> splits_;
    std::vector<Element> tuple_;
    std::optional<Witness> witness_;
    bool ordered_;
};

template <typename Model>
Verdict run_scan(const Model& prototype, const std::vector<Element>& alphabet,
                 const AbsorbingQuery& query, const ScanOptions& opts)
{
    query.validate();
    Verdict verdict;
    if (alphabet.empty())
        return verdict;
    unsigned workers = resolve_workers(opts.workers);
    if (workers <= 1) {
        MultisetScan<Model> scan(prototype, alphabet, query, opts.ordered);
        for (std::size_t f = 0; f < alphabet.size(); ++f)
            if (auto w = scan.scan_subtree(f)) {
                verdict.holds = false;
                verdict.witness = std::move(w);
                return verdict;
            }
        return verdict;
    }

    // Leading-element partition. Subtrees past the smallest failing lead are
    // skipped; the reducer keeps the smallest lead's witness.
    std::vector<std::optional<Witness>> found(alphabet.size());
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    parallel_for(alphabet.size(), workers, [&](std::size_t f) {
        if (f > best.load())
            return;
        MultisetScan<Model> local(prototype, alphabet, query, opts.ordered);
        if (auto w = local.scan_subtree(f)) {
            found[f] = std::move(w);
            std::size_t cur = best.load();
            while (f < cur && !best.compare_exchange_weak(cur, f)) {
            }
        }
    });
    for (auto& w : found)
        if (w) {
            verdict.holds = false;
            verdict.witness = std::move(w);
            break;
        }
    return verdict;
}

std::uint64_t pack_key(const Element* vals, int len)
{
    std::uint64_t key = static_cast<std::uint64_t>(len);
    for (int i = 0; i < len; ++i)
        key |= static_cast<std::uint64_t>(vals[i] & 0xff) << (3 + 8 * i);
    return key;
}

class FiniteModel {
public:
    using State = ElementSet;

    FiniteModel(const HyperTable& table, const ElementSet& q) : table_(&table), q_(q) {}

    State single(Element x) const { return ElementSet::singleton(x); }
    State extend(const State& s, Element x) const { return table_->extend(s, x); }
    bool contained(const State& s, int) const { return s.is_subset_of(q_); }

    bool sub_contained(const Element* vals, int len)
    {
        std::uint64_t key = pack_key(vals, len);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
        ElementSet s = ElementSet::singleton(vals[0]);
        for (int i = 1; i < len; ++i)
            s = table_->extend(s, vals[i]);
        bool in = s.is_subset_of(q_);
        memo_.emplace(key, in);
        return in;
    }

private:
    const HyperTable* table_;
    ElementSet q_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

class ZTModel {
public:
    using State = int;

    explicit ZTModel(const ZTContext& ctx) : ctx_(&ctx) {}

    State single(Element x) const { return x; }
    State extend(State r, Element x) const { return ctx_->mul(r, x); }
    bool contained(State r, int len) const { return ctx_->product_residue_in_ideal(len, r); }
    bool sub_contained(const Element* vals, int len) const
    {
        int r = vals[0];
        for (int i = 1; i < len; ++i)
            r = ctx_->mul(r, vals[i]);
        return ctx_->product_residue_in_ideal(len, r);
    }

private:
    const ZTContext* ctx_;
};

/// Products of ideals drawn from a universe; elements are universe indices.
class IdealModel {
public:
    using State = ElementSet;

    IdealModel(const HyperTable& table, const ElementSet& q, const std::vector<ElementSet>& ideals)
        : table_(&table), q_(q), ideals_(&ideals)
    {
    }

    State single(Element i) const { return (*ideals_)[i]; }
    State extend(const State& s, Element i) const { return table_->product(s, (*ideals_)[i]); }
    bool contained(const State& s, int) const { return s.is_subset_of(q_); }
    bool sub_contained(const Element* vals, int len)
    {
        std::uint64_t key = pack_key(vals, len);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
        ElementSet s = (*ideals_)[vals[0]];
        for (int i = 1; i < len; ++i)
            s = table_->product(s, (*ideals_)[vals[i]]);
        bool in = s.is_subset_of(q_);
        memo_.emplace(key, in);
        return in;
    }

private:
    const HyperTable* table_;
    ElementSet q_;
    const std::vector<ElementSet>* ideals_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

class CallbackModel {
public:
    struct State {
        std::array<Element, 8> vals{};
        int len = 0;
    };

    explicit CallbackModel(const std::function<bool(std::span<const Element>)>& in_q)
        : in_q_(&in_q)
    {
    }

    State single(Element x) const
    {
        State s;
        s.vals[0] = x;
        s.len = 1;
        return s;
    }
    State extend(State s, Element x) const
    {
        s.vals[s.len++] = x;
        return s;
    }
    bool contained(const State& s, int) const
    {
        return (*in_q_)(std::span<const Element>(s.vals.data(), s.len));
    }
    bool sub_contained(const Element* vals, int len) const
    {
        return (*in_q_)(std::span<const Element>(vals, len));
    }

private:
    const std::function<bool(std::span<const Element>)>* in_q_;
};

void require_proper_ideal(const Hyperring& ring, const ElementSet& q)
{
    require_hyperideal(ring, q);
    if (!is_proper(ring, q))
        throw Error(ErrorKind::ImproperIdeal, "absorbing predicates need a proper hyperideal");
}

}  // namespace

Verdict check_absorbing_by(int count, const AbsorbingQuery& query,
                           const std::function<bool(std::span<const Element>)>& in_q,
                           const ScanOptions& opts)
{
    std::vector<Element> letters(count);
    std::iota(letters.begin(), letters.end(), 0);
    return run_scan(CallbackModel(in_q), letters, query, opts);
}

Verdict check_absorbing(const HyperTable& table, const ElementSet& alphabet, const ElementSet& q,
                        const AbsorbingQuery& query, const ScanOptions& opts)
{
    // Tuples with a factor in Q satisfy every variant by absorption.
    std::vector<Element> letters = (alphabet - q).members();
    return run_scan(FiniteModel(table, q), letters, query, opts);
}

Verdict check_absorbing(const Hyperring& ring, const ElementSet& q, const AbsorbingQuery& query,
                        const ScanOptions& opts)
{
    query.validate();
    require_proper_ideal(ring, q);
    ElementSet alphabet =
        query.kind == AbsorbingKind::AB ? ring.carrier() : ring.non_units();
    return check_absorbing(ring.table(), alphabet, q, query, opts);
}

Verdict is_v_absorbing(const Hyperring& ring, const ElementSet& q, int v, const ScanOptions& opts)
{
    return check_absorbing(ring, q, {v + 1, v, AbsorbingKind::AB}, opts);
}

Verdict is_uv_absorbing(const Hyperring& ring, const ElementSet& q, int u, int v,
                        const ScanOptions& opts)
{
    return check_absorbing(ring, q, {u, v, AbsorbingKind::Plain}, opts);
}

Verdict is_ab_uv_absorbing(const Hyperring& ring, const ElementSet& q, int u, int v,
                           const ScanOptions& opts)
{
    return check_absorbing(ring, q, {u, v, AbsorbingKind::AB}, opts);
}

Verdict is_uv_absorbing_prime(const Hyperring& ring, const ElementSet& q, int u, int v,
                              const ScanOptions& opts)
{
    return check_absorbing(ring, q, {u, v, AbsorbingKind::Prime}, opts);
}

namespace {

template <typename InQ>
bool ordered_tuple_fails(const std::vector<Element>& t, const AbsorbingQuery& query, InQ&& in_q)
{
    if (static_cast<int>(t.size()) != query.u || !in_q(t))
        return false;
    if (query.kind == AbsorbingKind::Prime) {
        std::vector<Element> first(t.begin(), t.begin() + query.v);
        std::vector<Element> last(t.begin() + query.v, t.end());
        return !in_q(first) && !in_q(last);
    }
    for (unsigned mask : combinations(query.u, query.v)) {
        std::vector<Element> sub;
        for (int p = 0; p < query.u; ++p)
            if (mask & (1U << p))
                sub.push_back(t[p]);
        if (in_q(sub))
            return false;
    }
    return true;
}

}  // namespace

bool witness_fails(const Hyperring& ring, const ElementSet& q, const Witness& w)
{
    const ElementSet allowed =
        w.query.kind == AbsorbingKind::AB ? ring.carrier() : ring.non_units();
    for (Element e : w.tuple)
        if (e < 0 || e >= ring.order() || !allowed.contains(e))
            return false;
    return ordered_tuple_fails(w.tuple, w.query, [&](const std::vector<Element>& s) {
        return ring.hyperproduct(s).is_subset_of(q);
    });
}

std::string describe_witness(const Hyperring& ring, const ElementSet& q, const Witness& w)
{
    std::ostringstream os;
    os << "witness: " << format_elements(w.tuple) << "\n";
    os << "  product " << ring.hyperproduct(w.tuple).to_string() << " in Q=" << q.to_string()
       << "\n";
    auto show = [&](const std::vector<Element>& sub) {
        os << "  sub-product (" << format_elements(sub) << ") = "
           << ring.hyperproduct(sub).to_string() << " not in Q\n";
    };
    if (w.query.kind == AbsorbingKind::Prime) {
        show({w.tuple.begin(), w.tuple.begin() + w.query.v});
        show({w.tuple.begin() + w.query.v, w.tuple.end()});
    } else {
        std::vector<std::vector<Element>> seen;
        for (unsigned mask : combinations(w.query.u, w.query.v)) {
            std::vector<Element> sub;
            for (int p = 0; p < w.query.u; ++p)
                if (mask & (1U << p))
                    sub.push_back(w.tuple[p]);
            if (std::find(seen.begin(), seen.end(), sub) == seen.end()) {
                seen.push_back(sub);
                show(sub);
            }
        }
    }
    return os.str();
}

Verdict zt_check_absorbing(const ZTContext& ctx, const AbsorbingQuery& query,
                           const ScanOptions& opts)
{
    query.validate();
    if (query.u > ctx.max_k() + 1)
        throw Error(ErrorKind::BudgetExceeded, "u beyond the context's cached power bound");
    std::vector<Element> letters;
    for (int r = 1; r < ctx.modulus(); ++r)
        letters.push_back(r);
    return run_scan(ZTModel(ctx), letters, query, opts);
}

Verdict zt_is_v_absorbing(const ZTContext& ctx, int v, const ScanOptions& opts)
{
    return zt_check_absorbing(ctx, {v + 1, v, AbsorbingKind::AB}, opts);
}

bool zt_witness_fails(const ZTContext& ctx, const Witness& w)
{
    return ordered_tuple_fails(w.tuple, w.query, [&](const std::vector<Element>& s) {
        return zt_hyperproduct_in_ideal(ctx, s);
    });
}

namespace {

std::string integer_set(const std::vector<std::int64_t>& xs)
{
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << (i ? "," : "") << xs[i];
    os << "}";
    return os.str();
}

std::string zt_product_line(const ZTContext& ctx, const std::vector<Element>& residues)
{
    std::vector<std::int64_t> lifts(residues.begin(), residues.end());
    auto prod = ctx.integer_hyperproduct(lifts);
    std::vector<std::int64_t> reduced;
    for (auto x : prod)
        reduced.push_back(ctx.reduce(x));
    std::sort(reduced.begin(), reduced.end());
    reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
    std::ostringstream os;
    os << "(" << format_elements(residues) << ") = " << integer_set(prod) << " (mod "
       << ctx.modulus() << ": " << integer_set(reduced) << ")";
    return os.str();
}

}  // namespace

std::string zt_describe_witness(const ZTContext& ctx, const Witness& w)
{
    std::ostringstream os;
    os << "witness: " << format_elements(w.tuple) << "\n";
    os << "  product " << zt_product_line(ctx, w.tuple) << " in <" << ctx.modulus() << ">\n";
    auto show = [&](const std::vector<Element>& sub) {
        os << "  sub-product " << zt_product_line(ctx, sub) << " not in <" << ctx.modulus()
           << ">\n";
    };
    if (w.query.kind == AbsorbingKind::Prime) {
        show({w.tuple.begin(), w.tuple.begin() + w.query.v});
        show({w.tuple.begin() + w.query.v, w.tuple.end()});
    } else {
        std::vector<std::vector<Element>> seen;
        for (unsigned mask : combinations(w.query.u, w.query.v)) {
            std::vector<Element> sub;
            for (int p = 0; p < w.query.u; ++p)
                if (mask & (1U << p))
                    sub.push_back(w.tuple[p]);
            if (std::find(seen.begin(), seen.end(), sub) == seen.end()) {
                seen.push_back(sub);
                show(sub);
            }
        }
    }
    return os.str();
}

namespace {

template <typename VAbs, typename UVAbs>
AbsIndices find_indices(int max_v, VAbs&& v_absorbing, UVAbs&& uv_absorbing)
{
    AbsIndices out;
    for (int v = 1; v <= max_v; ++v)
        if (v_absorbing(v)) {
            out.big_abs = v;
            break;
        }
    if (out.big_abs == 0)
        throw Error(ErrorKind::AbsUndefined,
                    "not v-absorbing for any v <= " + std::to_string(max_v));
    for (int v = 1; v <= out.big_abs; ++v)
        if (uv_absorbing(out.big_abs + 1, v)) {
            out.small_abs = v;
            break;
        }
    return out;
}

}  // namespace

AbsIndices abs_indices(const Hyperring& ring, const ElementSet& q, int max_v)
{
    return find_indices(
        max_v, [&](int v) { return is_v_absorbing(ring, q, v).holds; },
        [&](int u, int v) { return is_uv_absorbing(ring, q, u, v).holds; });
}

AbsIndices zt_abs_indices(const ZTContext& ctx, int max_v)
{
    return find_indices(
        max_v, [&](int v) { return zt_is_v_absorbing(ctx, v).holds; },
        [&](int u, int v) {
            return zt_check_absorbing(ctx, {u, v, AbsorbingKind::Plain}).holds;
        });
}

Verdict ideal_product_prime_check(const Hyperring& ring, const ElementSet& q,
                                  const AbsorbingQuery& query,
                                  const std::vector<ElementSet>& universe)
{
    query.validate();
    require_proper_ideal(ring, q);
    if (universe.size() > 255)
        throw Error(ErrorKind::BudgetExceeded, "ideal universe above 255 entries");
    std::vector<Element> letters;
    for (std::size_t i = 0; i < universe.size(); ++i) {
        if (!is_proper(ring, universe[i]))
            throw Error(ErrorKind::ImproperIdeal, "universe must hold proper hyperideals");
        // An ideal inside Q puts its side of every split inside Q.
        if (!universe[i].is_subset_of(q))
            letters.push_back(static_cast<Element>(i));
    }
    AbsorbingQuery prime = query;
    prime.kind = AbsorbingKind::Prime;
    return run_scan(IdealModel(ring.table(), q, universe), letters, prime, ScanOptions{});
}

}  // namespace hyper
