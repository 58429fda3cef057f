// Acceptance run: one PASS/FAIL line per criterion, details indented below.
//
// Exit status is 0 when every criterion passes or fails only with its
// recorded known signature (see README, "Known counterexamples"). Any other
// outcome exits 1.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>

#include "hyper/absorbing.hpp"
#include "hyper/constructions.hpp"
#include "hyper/harness.hpp"
#include "hyper/ideals.hpp"
#include "oracles.hpp"

using namespace hyper;

namespace {

struct Outcome {
    bool pass = false;
    /// Failed, but exactly as recorded.
    bool known = false;
    std::vector<std::string> details;
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double x)
{
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << x;
    return os.str();
}

// ---------------------------------------------------------------- 1, 2

Outcome criterion1()
{
    Outcome o;
    const ZTContext ctx({2, 4}, 150);
    const auto t0 = std::chrono::steady_clock::now();
    const Verdict v43 = zt_check_absorbing(ctx, {4, 3, AbsorbingKind::Plain}, {0});
    const Verdict v32 = zt_check_absorbing(ctx, {3, 2, AbsorbingKind::Plain}, {0});
    const double secs = seconds_since(t0);
    const bool witness_ok = v32.witness && v32.witness->tuple == std::vector<Element>{3, 5, 5};
    const std::string text = v32.witness ? zt_describe_witness(ctx, *v32.witness) : "";
    const bool product_ok = text.find("{300,600,1200}") != std::string::npos;
    o.pass = v43.holds && !v32.holds && witness_ok && product_ok && secs <= 120;
    o.details.push_back("(4,3): " + std::string(v43.holds ? "true" : "false") +
                        ", (3,2): " + (v32.holds ? "true" : "false") + ", " + fixed(secs) + " s");
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);)
        o.details.push_back(line);
    return o;
}

Outcome criterion2()
{
    Outcome o;
    const ZTContext ctx({2, 4}, 15);
    const auto t0 = std::chrono::steady_clock::now();
    const Verdict prime = zt_check_absorbing(ctx, {3, 1, AbsorbingKind::Prime}, {0});
    const Verdict plain = zt_check_absorbing(ctx, {3, 1, AbsorbingKind::Plain}, {0});
    const double secs = seconds_since(t0);

    const Witness stated{{3, 1, AbsorbingKind::Plain}, {3, 3, 5}};
    const bool stated_fails = zt_witness_fails(ctx, stated);
    const std::string stated_text = zt_describe_witness(ctx, stated);
    const bool product_ok = stated_text.find("{180,360,720}") != std::string::npos;

    const bool plain_ok = !plain.holds && stated_fails && product_ok;
    o.pass = prime.holds && plain_ok && secs <= 5;
    o.details.push_back("(3,1)-absorbing: " + std::string(plain.holds ? "true" : "false") +
                        ", (3,3,5) fails it: " + (stated_fails ? "yes" : "no") + ", " +
                        fixed(secs) + " s");
    std::istringstream lines(stated_text);
    for (std::string line; std::getline(lines, line);)
        o.details.push_back(line);
    if (plain.witness)
        o.details.push_back("least failing multiset: " + format_elements(plain.witness->tuple));
    o.details.push_back("(3,1)-absorbing prime: " + std::string(prime.holds ? "true" : "false"));
    if (prime.witness) {
        std::istringstream pl(zt_describe_witness(ctx, *prime.witness));
        for (std::string line; std::getline(pl, line);)
            o.details.push_back(line);
    }
    // Recorded: the prime half fails on the ordering (3 | 1, 5).
    o.known = !o.pass && plain_ok && !prime.holds && prime.witness &&
              prime.witness->tuple == std::vector<Element>{3, 1, 5};
    return o;
}

// ---------------------------------------------------------------- 3

/// Bounded integer model of Z_T: the k-fold product of x_1..x_k is
/// {x_1...x_k t_1...t_(k-1)}, inside <n> iff n divides all of it.
class IntegerOracle {
public:
    IntegerOracle(std::vector<std::int64_t> T, int n, int max_u) : n_(n)
    {
        scalars_.push_back({1});
        for (int k = 1; k < max_u; ++k) {
            std::set<std::int64_t> next;
            for (auto s : scalars_.back())
                for (auto t : T)
                    next.insert(s * t);
            scalars_.emplace_back(next.begin(), next.end());
        }
        for (std::int64_t x = -3 * n; x <= 3 * n; ++x)
            lifts_.push_back(x);
    }

    [[nodiscard]] bool in_ideal(const std::vector<std::int64_t>& xs) const
    {
        std::int64_t p = 1;
        for (auto x : xs)
            p *= x;
        for (auto s : scalars_[xs.size() - 1])
            if ((p * s) % n_ != 0)
                return false;
        return true;
    }

    /// Same verdict semantics as the library, over multisets of lifts.
    [[nodiscard]] bool holds(const AbsorbingQuery& q) const
    {
        std::vector<std::size_t> idx(q.u, 0);
        std::vector<std::int64_t> t(q.u);
        while (true) {
            for (int i = 0; i < q.u; ++i)
                t[i] = lifts_[idx[i]];
            if (in_ideal(t) && !absorbed(t, q))
                return false;
            int i = q.u - 1;
            while (i >= 0 && idx[i] + 1 == lifts_.size())
                --i;
            if (i < 0)
                return true;
            ++idx[i];
            for (int j = i + 1; j < q.u; ++j)
                idx[j] = idx[i];
        }
    }

private:
    [[nodiscard]] bool absorbed(const std::vector<std::int64_t>& t, const AbsorbingQuery& q) const
    {
        const int u = q.u;
        bool any = false;
        bool all = true;
        for (std::uint32_t mask = 0; mask < (1U << u); ++mask) {
            if (__builtin_popcount(mask) != q.v)
                continue;
            std::vector<std::int64_t> a;
            std::vector<std::int64_t> b;
            for (int p = 0; p < u; ++p)
                (mask & (1U << p) ? a : b).push_back(t[p]);
            const bool ok = in_ideal(a) || (q.kind == AbsorbingKind::Prime && in_ideal(b));
            any = any || in_ideal(a);
            all = all && ok;
        }
        return q.kind == AbsorbingKind::Prime ? all : any;
    }

    int n_;
    std::vector<std::vector<std::int64_t>> scalars_;
    std::vector<std::int64_t> lifts_;
};

Outcome criterion3()
{
    Outcome o;
    std::size_t compared = 0;
    std::size_t mismatches = 0;
    for (const std::vector<std::int64_t>& T :
         {std::vector<std::int64_t>{2, 4}, {1, 3}, {2, 3}}) {
        for (int n = 2; n <= 12; ++n) {
            const ZTContext ctx(T, n, 8);
            const IntegerOracle oracle(T, n, 4);
            for (int u = 2; u <= 4; ++u)
                for (int v = 1; v < u; ++v)
                    for (auto kind : {AbsorbingKind::Plain, AbsorbingKind::AB,
                                      AbsorbingKind::Prime}) {
                        const AbsorbingQuery q{u, v, kind};
                        const bool a = zt_check_absorbing(ctx, q).holds;
                        const bool b = oracle.holds(q);
                        ++compared;
                        if (a != b) {
                            ++mismatches;
                            if (o.details.size() < 5)
                                o.details.push_back("mismatch T=" +
                                                    format_elements({T.begin(), T.end()}) +
                                                    " n=" + std::to_string(n) + " (" +
                                                    std::to_string(u) + "," + std::to_string(v) +
                                                    ") " + std::string(to_string(kind)));
                        }
                    }
        }
    }
    o.pass = mismatches == 0;
    o.details.insert(o.details.begin(), std::to_string(compared) + " verdicts, " +
                                            std::to_string(mismatches) + " mismatches");
    return o;
}

// ---------------------------------------------------------------- 4, 6, 7

Outcome criterion4(const InstanceStream& s)
{
    Outcome o;
    std::size_t compared = 0;
    std::size_t mismatches = 0;
    std::size_t rings = 0;
    for (const auto& ra : s.base_rings()) {
        if (ra->ring().order() > 6)
            continue;
        ++rings;
        for (const auto& q : ra->proper())
            for (int u = 2; u <= 4; ++u)
                for (int v = 1; v < u; ++v)
                    for (auto kind :
                         {AbsorbingKind::Plain, AbsorbingKind::AB, AbsorbingKind::Prime}) {
                        const AbsorbingQuery query{u, v, kind};
                        const bool a = check_absorbing(ra->ring(), q, query).holds;
                        const bool b = oracle::naive_absorbing(ra->ring(), q, query);
                        ++compared;
                        if (a != b) {
                            ++mismatches;
                            if (o.details.size() < 5)
                                o.details.push_back("mismatch " + ra->label() + " Q=" +
                                                    q.to_string());
                        }
                    }
    }
    o.pass = mismatches == 0 && rings > 0;
    o.details.insert(o.details.begin(), std::to_string(rings) + " rings, " +
                                            std::to_string(compared) + " verdicts, " +
                                            std::to_string(mismatches) + " mismatches");
    return o;
}

Outcome criterion6(const InstanceStream& s)
{
    Outcome o;
    const Hyperring r6 = build_zmt(6, {1, 3});
    const FundamentalRing f6 = fundamental_ring(r6, CClassCache::build(r6));
    const bool r6_ok = f6.classes.size() == 2 && f6.ring.is_valid();
    o.details.push_back("Z6{1,3}: " + std::to_string(f6.classes.size()) +
                        " classes, ring axioms " + (f6.ring.is_valid() ? "hold" : "fail"));

    std::size_t ideals = 0;
    std::size_t compared = 0;
    std::size_t mismatches = 0;
    std::size_t errors = 0;
    for (const auto& ra : s.base_rings()) {
        std::optional<FundamentalRing> fr;
        try {
            fr = fundamental_ring(ra->ring(), ra->cache());
        } catch (const Error& e) {
            ++errors;
            o.details.push_back(ra->label() + ": " + e.what());
            continue;
        }
        for (const auto& q : ra->proper()) {
            if (!fr->saturated(q))
                continue;
            ++ideals;
            const ElementSet image = fr->image(q);
            for (int u = 2; u <= 4; ++u)
                for (int v = 1; v < u; ++v) {
                    const bool a = ra->ab(q, u, v);
                    const bool b =
                        check_absorbing(fr->ring, image, {u, v, AbsorbingKind::AB}).holds;
                    ++compared;
                    if (a != b) {
                        ++mismatches;
                        if (mismatches <= 5)
                            o.details.push_back("mismatch " + ra->label() + " Q=" +
                                                q.to_string() + " (" + std::to_string(u) + "," +
                                                std::to_string(v) + ")");
                    }
                }
        }
    }
    o.details.push_back(std::to_string(ideals) + " class-union ideals, " +
                        std::to_string(compared) + " verdicts, " + std::to_string(mismatches) +
                        " mismatches");
    o.pass = r6_ok && mismatches == 0 && errors == 0;
    return o;
}

Outcome criterion7(const InstanceStream& s)
{
    Outcome o;
    std::size_t checked = 0;
    std::size_t mismatches = 0;
    for (const auto& ra : s.base_rings())
        for (const auto& q : ra->proper()) {
            if (!ra->c_ideal(q))
                continue;
            ++checked;
            const ElementSet pm = power_members(ra->ring(), q);
            const ElementSet rad = radical(ra->ring(), q, ra->ideals()).members;
            if (pm != rad) {
                ++mismatches;
                if (mismatches <= 5)
                    o.details.push_back("mismatch " + ra->label() + " Q=" + q.to_string() +
                                        ": powers " + pm.to_string() + ", radical " +
                                        rad.to_string());
            }
        }
    o.details.insert(o.details.begin(), std::to_string(checked) + " C-hyperideals, " +
                                            std::to_string(mismatches) + " mismatches");
    o.pass = mismatches == 0 && checked > 0;
    return o;
}

// ---------------------------------------------------------------- 5, 8

const std::vector<std::string> kNonVacuous{
    "MONOTONICITY", "INTERSECTION",  "RADICAL-FORM",          "PRIME-COLLAPSE",
    "LOCAL-PRIME",  "IDEAL-FORM",    "PRODUCT-AB",            "PRODUCT-PRIME",
    "GAMMA-TRANSFER", "QUOTIENT",    "MATRIX",                "POLYNOMIAL",
    "HOMOMORPHISM-PREIMAGE", "HOMOMORPHISM-IMAGE", "LOCALIZATION"};

const std::set<std::string> kKnownFailures{"POLYNOMIAL", "HOMOMORPHISM-PREIMAGE",
                                           "LOCALIZATION"};

Outcome criterion5(const InstanceStream& s, const std::vector<TheoremVerdict>& verdicts,
                   const std::string& report)
{
    Outcome o;
    std::set<std::string> failing;
    std::size_t failures = 0;
    bool other_bad = false;
    for (const auto& v : verdicts) {
        failures += v.failures;
        if (v.failures > 0)
            failing.insert(v.id);
        if (v.status() == VerdictStatus::Incomplete)
            other_bad = true;
    }
    bool vacuous = false;
    for (const auto& id : kNonVacuous) {
        const auto it = std::find_if(verdicts.begin(), verdicts.end(),
                                     [&](const TheoremVerdict& v) { return v.id == id; });
        if (it == verdicts.end() || it->hypothesis_hits == 0) {
            vacuous = true;
            o.details.push_back("vacuous or missing: " + id);
        }
    }
    std::size_t hit_lines = 0;
    for (std::size_t pos = 0; (pos = report.find("hypothesis-hits:", pos)) != std::string::npos;
         ++pos)
        ++hit_lines;
    const bool hits_listed = hit_lines == verdicts.size();

    o.details.insert(o.details.begin(),
                     std::to_string(verdicts.size()) + " entries, " + std::to_string(failures) +
                         " conclusion failures, " + std::to_string(s.rings().size()) + " rings");
    for (const auto& v : verdicts)
        if (v.failures > 0) {
            o.details.push_back(v.id + ": " + std::to_string(v.failures) + " of " +
                                std::to_string(v.hypothesis_hits) + " hits fail");
            if (!v.witnesses.empty())
                o.details.push_back("  " + v.witnesses.front());
        }
    o.pass = failures == 0 && !vacuous && hits_listed && !other_bad;
    o.known = !o.pass && failing == kKnownFailures && !vacuous && hits_listed && !other_bad;
    return o;
}

Outcome criterion8(const InstanceStream& s, const std::string& first)
{
    Outcome o;
    const std::string second = format_report(s, run_all(s, 1));
    const InstanceStream rebuilt = InstanceStream::build(s.spec());
    const std::string third = format_report(rebuilt, run_all(rebuilt, 4));

    const ZTContext ctx({2, 4}, 150);
    auto zt_text = [&] {
        const Verdict v = zt_check_absorbing(ctx, {3, 2, AbsorbingKind::Plain}, {0});
        return zt_describe_witness(ctx, *v.witness);
    };
    const bool zt_same = zt_text() == zt_text();

    o.pass = first == second && first == third && zt_same;
    o.details.push_back("suite report " + std::to_string(first.size()) + " bytes; rerun " +
                        (first == second ? "identical" : "differs") + "; rebuilt with 4 workers " +
                        (first == third ? "identical" : "differs"));
    o.details.push_back(std::string("Z_T witness text ") + (zt_same ? "identical" : "differs"));
    return o;
}

}  // namespace

int main()
{
    std::vector<std::pair<int, Outcome>> results;
    auto emit = [&](int n, Outcome o) {
        const char* tag = o.pass ? "PASS" : (o.known ? "FAIL (known)" : "FAIL");
        std::cout << "criterion " << n << ": " << tag << "\n";
        for (const auto& d : o.details)
            std::cout << "    " << d << "\n";
        std::cout.flush();
        results.emplace_back(n, std::move(o));
    };

    emit(1, criterion1());
    emit(2, criterion2());
    emit(3, criterion3());

    const InstanceStream stream = InstanceStream::build(default_spec());
    emit(4, criterion4(stream));

    const std::vector<TheoremVerdict> verdicts = run_all(stream, 0);
    const std::string report = format_report(stream, verdicts);
    emit(5, criterion5(stream, verdicts, report));
    emit(6, criterion6(stream));
    emit(7, criterion7(stream));
    emit(8, criterion8(stream, report));

    int passed = 0;
    int known = 0;
    int unexpected = 0;
    for (const auto& [n, o] : results) {
        if (o.pass)
            ++passed;
        else if (o.known)
            ++known;
        else
            ++unexpected;
    }
    std::cout << "acceptance: " << passed << " pass, " << known << " known failures, "
              << unexpected << " unexpected failures\n";
    return unexpected == 0 ? 0 : 1;
}
