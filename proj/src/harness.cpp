#include "hyper/harness.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hyper/parallel.hpp"

namespace hyper {

// ---------------------------------------------------------------- spec

InstanceSpec default_spec()
{
    return InstanceSpec{};
}

namespace {

[[noreturn]] void bad_spec(const std::string& what)
{
    throw Error(ErrorKind::BadSpec, what);
}

template <typename T>
T field(const nlohmann::json& j, const char* key, T fallback)
{
    if (!j.contains(key))
        return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        bad_spec(std::string("field '") + key + "' has the wrong type");
    }
}

}  // namespace

InstanceSpec parse_spec(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        bad_spec(e.what());
    }
    if (!j.is_object())
        bad_spec("spec must be a JSON object");
    static const std::vector<std::string> known{
        "zmt_moduli",      "zmt_t_size",        "small_max_order",     "product_factor_max_order",
        "product_max_order", "quotient_max_order", "matrix_max_order", "matrix_max_u",
        "localization_max_order", "ring_files", "zt", "zt_grid_T", "zt_grid_max_n",
        "max_u",           "ideals",            "seed",                "budget"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            bad_spec("unknown field '" + it.key() + "'");

    InstanceSpec s;
    s.zmt_moduli = field(j, "zmt_moduli", s.zmt_moduli);
    s.zmt_t_size = field(j, "zmt_t_size", s.zmt_t_size);
    s.small_max_order = field(j, "small_max_order", s.small_max_order);
    s.product_factor_max_order = field(j, "product_factor_max_order", s.product_factor_max_order);
    s.product_max_order = field(j, "product_max_order", s.product_max_order);
    s.quotient_max_order = field(j, "quotient_max_order", s.quotient_max_order);
    s.matrix_max_order = field(j, "matrix_max_order", s.matrix_max_order);
    s.matrix_max_u = field(j, "matrix_max_u", s.matrix_max_u);
    s.localization_max_order = field(j, "localization_max_order", s.localization_max_order);
    for (const auto& f : field(j, "ring_files", std::vector<std::string>{}))
        s.ring_files.emplace_back(f);
    if (j.contains("zt")) {
        if (!j["zt"].is_array())
            bad_spec("field 'zt' must be an array");
        s.zt.clear();
        for (const auto& e : j["zt"]) {
            if (!e.is_object() || !e.contains("T") || !e.contains("n"))
                bad_spec("zt entries need T and n");
            s.zt.push_back({field(e, "T", std::vector<std::int64_t>{}), field(e, "n", 0)});
        }
    }
    s.zt_grid_T = field(j, "zt_grid_T", s.zt_grid_T);
    s.zt_grid_max_n = field(j, "zt_grid_max_n", s.zt_grid_max_n);
    s.max_u = field(j, "max_u", s.max_u);
    s.ideals = field(j, "ideals", s.ideals);
    s.seed = field(j, "seed", s.seed);
    s.budget = field(j, "budget", s.budget);

    if (s.max_u < 2 || s.max_u > 5)
        bad_spec("max_u must lie in [2, 5]");
    if (s.matrix_max_u < 2 || s.matrix_max_u > s.max_u)
        bad_spec("matrix_max_u must lie in [2, max_u]");
    if (s.ideals != "all" && s.ideals != "generated")
        bad_spec("ideals must be \"all\" or \"generated\"");
    for (int m : s.zmt_moduli)
        if (m < 2 || m > 16)
            bad_spec("zmt moduli must lie in [2, 16]");
    if (s.zmt_t_size < 1)
        bad_spec("zmt_t_size must be positive");
    if (s.small_max_order > 8 || s.product_max_order > kMaxOrder ||
        s.quotient_max_order > kMaxOrder || s.localization_max_order > 8)
        bad_spec("order bound out of range");
    if (s.matrix_max_order > 4)
        bad_spec("matrix_max_order must be at most 4");
    for (const auto& z : s.zt)
        if (z.T.size() < 2 || z.n < 2)
            bad_spec("zt entries need |T| >= 2 and n >= 2");
    for (const auto& t : s.zt_grid_T)
        if (t.size() < 2)
            bad_spec("zt_grid_T entries need |T| >= 2");
    return s;
}

InstanceSpec load_spec(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        bad_spec("cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str());
}

std::string describe_spec(const InstanceSpec& s)
{
    nlohmann::ordered_json j;
    j["zmt_moduli"] = s.zmt_moduli;
    j["zmt_t_size"] = s.zmt_t_size;
    j["small_max_order"] = s.small_max_order;
    j["product_factor_max_order"] = s.product_factor_max_order;
    j["product_max_order"] = s.product_max_order;
    j["quotient_max_order"] = s.quotient_max_order;
    j["matrix_max_order"] = s.matrix_max_order;
    j["matrix_max_u"] = s.matrix_max_u;
    j["localization_max_order"] = s.localization_max_order;
    std::vector<std::string> files;
    for (const auto& f : s.ring_files)
        files.push_back(f.string());
    j["ring_files"] = files;
    auto zt = nlohmann::ordered_json::array();
    for (const auto& z : s.zt)
        zt.push_back({{"T", z.T}, {"n", z.n}});
    j["zt"] = zt;
    j["zt_grid_T"] = s.zt_grid_T;
    j["zt_grid_max_n"] = s.zt_grid_max_n;
    j["max_u"] = s.max_u;
    j["ideals"] = s.ideals;
    j["seed"] = s.seed;
    j["budget"] = s.budget;
    return j.dump();
}

// ---------------------------------------------------------------- analysis

RingAnalysis::RingAnalysis(Hyperring ring, std::string label, bool generated_only)
    : ring_(std::move(ring)),
      label_(std::move(label)),
      ideals_(enumerate_hyperideals(ring_)),
      cache_(CClassCache::build(ring_)),
      maximals_(maximal_hyperideals(ring_))
{
    proper_.assign(ideals_.begin(), ideals_.end() - 1);
    for (const auto& q : proper_)
        if (is_prime(ring_, q))
            primes_.push_back(q);
    if (!generated_only) {
        candidates_ = proper_;
    } else {
        for (const auto& q : proper_)
            for (Element x = 0; x < ring_.order(); ++x)
                if (generated_hyperideal(ring_, ElementSet::singleton(x)) == q) {
                    candidates_.push_back(q);
                    break;
                }
    }
}

bool RingAnalysis::prime(const ElementSet& q) const
{
    return std::find(primes_.begin(), primes_.end(), q) != primes_.end();
}

ElementSet RingAnalysis::radical(const ElementSet& q) const
{
    ElementSet out = ring_.carrier();
    for (const auto& p : primes_)
        if (q.is_subset_of(p))
            out &= p;
    return out;
}

std::vector<ElementSet> RingAnalysis::minimal_primes(const ElementSet& q) const
{
    std::vector<ElementSet> above;
    for (const auto& p : primes_)
        if (q.is_subset_of(p))
            above.push_back(p);
    std::vector<ElementSet> out;
    for (const auto& p : above) {
        bool minimal = true;
        for (const auto& r : above)
            if (r != p && r.is_subset_of(p))
                minimal = false;
        if (minimal)
            out.push_back(p);
    }
    return out;
}

bool RingAnalysis::holds(const ElementSet& q, const AbsorbingQuery& query) const
{
    Key key{q, query.u, query.v, static_cast<int>(query.kind)};
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
    }
    const bool result = check_absorbing(ring_, q, query).holds;
    std::lock_guard lock(mutex_);
    memo_.emplace(key, result);
    return result;
}

// ---------------------------------------------------------------- stream

struct InstanceStream::ZTEntry {
    ZTContext ctx;
    std::mutex mutex;
    std::map<std::tuple<int, int, int>, bool> memo;

    explicit ZTEntry(const ZTSpec& s) : ctx(s.context()) {}
};

bool InstanceStream::zt_holds(std::size_t i, const AbsorbingQuery& query) const
{
    ZTEntry& e = *zt_memo_.at(i);
    const auto key = std::make_tuple(query.u, query.v, static_cast<int>(query.kind));
    {
        std::lock_guard lock(e.mutex);
        if (auto it = e.memo.find(key); it != e.memo.end())
            return it->second;
    }
    const bool result = zt_check_absorbing(e.ctx, query).holds;
    std::lock_guard lock(e.mutex);
    e.memo.emplace(key, result);
    return result;
}

std::vector<std::pair<int, int>> InstanceStream::queries() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 2; u <= spec_.max_u; ++u)
        for (int v = 1; v < u; ++v)
            out.emplace_back(u, v);
    return out;
}

namespace {

void subsets_of_size(const std::vector<int>& pool, std::size_t k, std::size_t start,
                     std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
        cur.push_back(pool[i]);
        subsets_of_size(pool, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& pool, std::size_t k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets_of_size(pool, k, 0, cur, out);
    return out;
}

std::string set_text(const ElementSet& s)
{
    return s.to_string();
}

}  // namespace

InstanceStream InstanceStream::build(const InstanceSpec& spec)
{
    InstanceStream st;
    st.spec_ = spec;
    const bool generated = spec.ideals == "generated";

    auto analyse = [&](Hyperring ring, const std::string& label) -> RingRef {
        try {
            return std::make_shared<const RingAnalysis>(std::move(ring), label, generated);
        } catch (const Error& e) {
            st.skipped_.push_back(label + ": " + e.what());
            return nullptr;
        }
    };

    std::vector<std::string> seen;
    auto add_zmt = [&](int m, const std::vector<int>& T) {
        Hyperring r = build_zmt(m, T);
        if (std::find(seen.begin(), seen.end(), r.name()) != seen.end())
            return;
        seen.push_back(r.name());
        const std::string label = r.name();
        if (auto a = analyse(std::move(r), label))
            st.base_.push_back(a);
    };
    for (int m : spec.zmt_moduli) {
        std::vector<int> pool;
        for (int t = 1; t < m; ++t)
            pool.push_back(t);
        for (const auto& T : subsets_of_size(pool, static_cast<std::size_t>(spec.zmt_t_size)))
            add_zmt(m, T);
    }
    for (int m = 2; m <= spec.small_max_order; ++m) {
        std::vector<int> pool;
        for (int t = 0; t < m; ++t)
            pool.push_back(t);
        for (std::size_t k = 1; k <= 2; ++k)
            for (const auto& T : subsets_of_size(pool, k))
                add_zmt(m, T);
    }
    for (const auto& path : spec.ring_files) {
        RingDescription d;
        try {
            d = load_ring(path);
        } catch (const std::exception& e) {
            bad_spec("ring file " + path.string() + ": " + e.what());
        }
        if (d.zt) {
            st.zt_.push_back(*d.zt);
        } else if (d.ring) {
            const std::string label = d.ring->name().empty() ? path.filename().string()
                                                             : d.ring->name();
            if (auto a = analyse(*d.ring, label))
                st.base_.push_back(a);
        }
    }
    st.all_ = st.base_;

    for (const auto& b : st.base_) {
        if (b->ring().order() > spec.quotient_max_order)
            continue;
        for (const auto& q1 : b->proper()) {
            if (q1.size() == 1)
                continue;
            const std::string label = b->label() + "/" + set_text(q1);
            try {
                QuotientRing qr = quotient(b->ring(), q1);
                qr.ring.set_name(label);
                auto qa = analyse(qr.ring, label);
                if (!qa)
                    continue;
                st.all_.push_back(qa);
                auto hom = quotient_map(b->ring(), qr);
                st.homs_.push_back({"project " + label, b, qa, hom.map});
                st.quotients_.push_back({b, q1, std::move(qr), qa});
            } catch (const Error& e) {
                st.skipped_.push_back(label + ": " + e.what());
            }
        }
    }

    std::vector<RingRef> factors;
    for (const auto& b : st.base_)
        if (b->has_identity() && b->ring().order() <= spec.product_factor_max_order)
            factors.push_back(b);
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i; j < factors.size(); ++j) {
            const auto& l = factors[i];
            const auto& r = factors[j];
            if (l->ring().order() * r->ring().order() > spec.product_max_order)
                continue;
            const std::string label = l->label() + " x " + r->label();
            try {
                DirectProduct dp = direct_product(l->ring(), r->ring());
                dp.ring.set_name(label);
                auto w = analyse(dp.ring, label);
                if (!w)
                    continue;
                st.all_.push_back(w);
                const int n1 = l->ring().order();
                const int n2 = r->ring().order();
                std::vector<Element> left(static_cast<std::size_t>(n1 * n2));
                std::vector<Element> right(left.size());
                for (Element p = 0; p < n1 * n2; ++p) {
                    left[p] = dp.left(p);
                    right[p] = dp.right(p);
                }
                std::vector<Element> embed(static_cast<std::size_t>(n1));
                for (Element x = 0; x < n1; ++x)
                    embed[x] = dp.pair(x, r->ring().zero());
                st.homs_.push_back({"left projection of " + label, w, l, left});
                st.homs_.push_back({"right projection of " + label, w, r, right});
                st.homs_.push_back({"left embedding into " + label, l, w, embed});
                st.products_.push_back({l, r, w, std::move(dp)});
            } catch (const Error& e) {
                st.skipped_.push_back(label + ": " + e.what());
            }
        }

    for (const auto& b : st.base_) {
        std::vector<Element> id(static_cast<std::size_t>(b->ring().order()));
        for (Element x = 0; x < b->ring().order(); ++x)
            id[x] = x;
        st.homs_.push_back({"identity of " + b->label(), b, b, id});
    }
    std::vector<HomInstance> good;
    for (auto& h : st.homs_) {
        GoodHomomorphism g{h.source->ring(), h.target->ring(), h.map};
        if (auto why = g.violation())
            st.skipped_.push_back(h.label + ": " + *why);
        else
            good.push_back(std::move(h));
    }
    st.homs_ = std::move(good);

    for (const auto& b : st.base_) {
        if (b->ring().order() > spec.matrix_max_order)
            continue;
        auto lazy = std::make_shared<const MatrixRing>(b->ring());
        auto mat = lazy->materialize();
        if (!mat)
            continue;
        st.matrices_.push_back({b, std::make_shared<const Hyperring>(std::move(*mat)), lazy});
    }

    for (const auto& b : st.base_) {
        const int n = b->ring().order();
        if (n > spec.localization_max_order || !b->has_identity())
            continue;
        const Element one = b->ring().one();
        for (unsigned mask = 0; mask < (1U << n); ++mask) {
            if (!(mask & (1U << one)))
                continue;
            ElementSet s;
            for (Element x = 0; x < n; ++x)
                if (mask & (1U << x))
                    s.insert(x);
            for (ClosureMode mode : {ClosureMode::Weak, ClosureMode::Strict}) {
                try {
                    auto loc = std::make_shared<Localization>(localization(b->ring(), s, mode));
                    st.localizations_.push_back({b, std::move(loc)});
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::NotClosed)
                        st.skipped_.push_back("localization of " + b->label() + " at " +
                                              set_text(s) + ": " + e.what());
                }
            }
        }
    }

    for (const auto& z : spec.zt)
        st.zt_.push_back(z);
    for (const auto& T : spec.zt_grid_T)
        for (int n = 2; n <= spec.zt_grid_max_n; ++n)
            st.zt_.push_back({T, n});
    for (const auto& z : st.zt_)
        st.zt_memo_.push_back(std::make_shared<ZTEntry>(z));
    return st;
}

// ---------------------------------------------------------------- verdicts

std::string_view to_string(VerdictStatus s)
{
    switch (s) {
    case VerdictStatus::Pass:
        return "PASS";
    case VerdictStatus::Fail:
        return "FAIL";
    case VerdictStatus::Vacuous:
        return "VACUOUS";
    case VerdictStatus::Incomplete:
        return "INCOMPLETE";
    }
    return "?";
}

VerdictStatus TheoremVerdict::status() const
{
    if (failures > 0)
        return VerdictStatus::Fail;
    if (incomplete)
        return VerdictStatus::Incomplete;
    if (hypothesis_hits == 0)
        return VerdictStatus::Vacuous;
    return VerdictStatus::Pass;
}

namespace {
constexpr std::size_t kMaxWitnesses = 5;
constexpr std::size_t kMaxObservations = 5;
}  // namespace

bool Recorder::scan()
{
    if (budget_ != 0 && v_.scanned >= budget_) {
        v_.incomplete = true;
        return false;
    }
    ++v_.scanned;
    return true;
}

void Recorder::check(bool conclusion, const std::function<std::string()>& describe)
{
    ++v_.hypothesis_hits;
    if (conclusion)
        return;
    ++v_.failures;
    if (v_.witnesses.size() < kMaxWitnesses)
        v_.witnesses.push_back(describe());
}

void Recorder::observe(const std::string& note)
{
    ++v_.observation_count;
    if (v_.observations.size() < kMaxObservations)
        v_.observations.push_back(note);
}

std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed, std::string_view salt)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : salt) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    std::mt19937_64 rng(seed ^ h);
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i)
        idx[i] = i;
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(idx[i - 1], idx[j]);
    }
    return idx;
}

}  // namespace hyper
