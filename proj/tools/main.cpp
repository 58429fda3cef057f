#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyper/absorbing.hpp"
#include "hyper/constructions.hpp"
#include "hyper/harness.hpp"
#include "hyper/ideals.hpp"
#include "hyper/ring_io.hpp"

using namespace hyper;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

/// A ring given by file, by Z_m,T shorthand or as a Z_T context.
struct RingSource {
    std::string file;
    std::vector<std::string> zmt;
    std::vector<std::string> zt;

    void attach(CLI::App* app, const std::string& suffix = "")
    {
        app->add_option("--ring" + suffix, file, "ring file (JSON)")->check(CLI::ExistingFile);
        app->add_option("--zmt" + suffix, zmt, "Z_m with a o b = {atb : t in T}: m=<int> T=<list>")
            ->expected(2);
        app->add_option("--zt" + suffix, zt, "Z_T with target <n>: T=<list> n=<int>")->expected(2);
    }

    [[nodiscard]] bool given() const { return !file.empty() || !zmt.empty() || !zt.empty(); }

    RingDescription load() const
    {
        const int count = !file.empty() + !zmt.empty() + !zt.empty();
        if (count != 1)
            throw Error(ErrorKind::Parse, "give exactly one of --ring, --zmt, --zt");
        if (!file.empty())
            return load_ring(file);
        std::string T;
        std::string other;
        for (const auto& tok : zmt.empty() ? zt : zmt) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw Error(ErrorKind::Parse, "expected key=value, got '" + tok + "'");
            const std::string key = tok.substr(0, eq);
            const std::string val = tok.substr(eq + 1);
            if (key == "T")
                T = val;
            else if (key == (zmt.empty() ? "n" : "m"))
                other = val;
            else
                throw Error(ErrorKind::Parse, "unknown key '" + key + "'");
        }
        if (T.empty() || other.empty())
            throw Error(ErrorKind::Parse, zmt.empty() ? "--zt needs T=<list> n=<int>"
                                                      : "--zmt needs m=<int> T=<list>");
        std::ostringstream json;
        if (!zmt.empty())
            json << "{\"zmt\": {\"m\": " << other << ", \"T\": [" << T << "]}}";
        else
            json << "{\"zt\": {\"T\": [" << T << "], \"n\": " << other << "}}";
        return parse_ring(json.str());
    }
};

const Hyperring& table_ring(const RingDescription& d)
{
    if (!d.ring)
        throw Error(ErrorKind::BadQuery, "this command needs a finite table ring, not Z_T");
    return *d.ring;
}

std::string zt_name(const ZTSpec& z)
{
    std::ostringstream os;
    os << "Z_T T={";
    for (std::size_t i = 0; i < z.T.size(); ++i)
        os << (i ? "," : "") << z.T[i];
    os << "} n=" << z.n;
    return os.str();
}

std::string ring_name(const RingDescription& d)
{
    if (d.zt)
        return zt_name(*d.zt);
    return d.ring->name().empty() ? "(unnamed)" : d.ring->name();
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorKind::Parse, "cannot write " + path);
    out << text;
}

// ---------------------------------------------------------------- ring

int cmd_ring(const RingSource& src, bool emit)
{
    const RingDescription d = src.load();
    if (emit) {
        std::cout << emit_ring(d);
        return kHolds;
    }
    std::cout << "ring: " << ring_name(d) << "\n";
    if (d.zt) {
        std::cout << "model: residues mod " << d.zt->n << ", target hyperideal <" << d.zt->n
                  << ">\n";
        const ZTContext ctx = d.zt->context();
        for (int k = 0; k <= 3; ++k)
            std::cout << "P_" << k << "(T) mod n: " << format_elements(ctx.power_residues(k))
                      << "\n";
        return kHolds;
    }
    const Hyperring& r = *d.ring;
    const AxiomFlags& f = r.flags();
    std::cout << "order: " << r.order() << "\n";
    std::cout << "identities: " << r.identities().to_string() << "\n";
    if (r.has_identity())
        std::cout << "one: " << d.label(r.one()) << "\n";
    else
        std::cout << "one: none\n";
    std::cout << "units: " << r.units().to_string() << "\n";
    std::cout << "strongly-distributive: " << (f.strongly_distributive ? "true" : "false");
    if (const auto& w = r.report().non_strong_witness)
        std::cout << " (witness " << (*w)[0] << "," << (*w)[1] << "," << (*w)[2] << ")";
    std::cout << "\n";
    const auto ideals = enumerate_hyperideals(r);
    std::cout << "hyperideals: " << ideals.size() << "\n";
    std::cout << "local: " << (is_local(r) ? "true" : "false") << "\n";
    return kHolds;
}

// ---------------------------------------------------------------- ideal

void print_ideal_facts(const Hyperring& r, const ElementSet& q, const CClassCache& cache)
{
    const bool proper = is_proper(r, q);
    auto b = [](bool x) { return x ? "true" : "false"; };
    std::cout << "ideal: " << q.to_string() << "\n";
    std::cout << "proper: " << b(proper) << "\n";
    std::cout << "prime: " << b(proper && is_prime(r, q)) << "\n";
    std::cout << "primary: " << b(proper && is_primary(r, q)) << "\n";
    std::cout << "maximal: " << b(is_maximal(r, q)) << "\n";
    std::cout << "c-hyperideal: " << b(is_c_hyperideal(q, cache)) << "\n";
    std::cout << "strong-c-hyperideal: " << b(is_strong_c_hyperideal(q, cache)) << "\n";
    const RadicalResult rad = radical(r, q);
    std::cout << "radical: " << rad.members.to_string()
              << (rad.no_prime_above ? " (no prime above)" : "") << "\n";
    std::cout << "power-members: " << power_members(r, q).to_string() << "\n";
}

int cmd_ideal(const RingSource& src, const std::string& ideal_text, bool list)
{
    const RingDescription d = src.load();
    const Hyperring& r = table_ring(d);
    const CClassCache cache = CClassCache::build(r);
    if (list) {
        for (const auto& q : enumerate_hyperideals(r)) {
            std::cout << q.to_string();
            if (!is_proper(r, q))
                std::cout << " improper";
            else {
                if (is_prime(r, q))
                    std::cout << " prime";
                if (is_maximal(r, q))
                    std::cout << " maximal";
            }
            if (is_c_hyperideal(q, cache))
                std::cout << " C";
            if (is_strong_c_hyperideal(q, cache))
                std::cout << " strong-C";
            std::cout << "\n";
        }
        return kHolds;
    }
    if (ideal_text.empty())
        throw Error(ErrorKind::Parse, "--ideal or --list is required");
    const ElementSet q = parse_ideal(r, ideal_text, d.labels);
    if (!is_hyperideal(r, q)) {
        std::cout << "ideal: " << q.to_string() << "\nhyperideal: false\n";
        return kFails;
    }
    std::cout << "hyperideal: true\n";
    print_ideal_facts(r, q, cache);
    return kHolds;
}

// ---------------------------------------------------------------- predicate

AbsorbingKind kind_of(const std::string& name)
{
    if (name == "uv-absorbing")
        return AbsorbingKind::Plain;
    if (name == "ab-uv-absorbing" || name == "v-absorbing")
        return AbsorbingKind::AB;
    if (name == "uv-absorbing-prime")
        return AbsorbingKind::Prime;
    throw Error(ErrorKind::BadQuery, "unknown predicate " + name);
}

int report_verdict(const std::string& name, const std::string& ring, const std::string& ideal,
                   const AbsorbingQuery& query, const Verdict& verdict,
                   const std::function<std::string(const Witness&)>& describe)
{
    std::cout << "predicate: " << name << "\n";
    std::cout << "ring: " << ring << "\n";
    std::cout << "ideal: " << ideal << "\n";
    std::cout << "query: (u,v)=(" << query.u << "," << query.v << ")\n";
    std::cout << "verdict: " << (verdict.holds ? "true" : "false") << "\n";
    if (verdict.witness)
        std::cout << describe(*verdict.witness);
    return verdict.holds ? kHolds : kFails;
}

int cmd_predicate(const RingSource& src, const std::string& name, const std::string& ideal_text,
                  int u, int v, int max_v, unsigned workers)
{
    const RingDescription d = src.load();
    ScanOptions opts;
    opts.workers = workers;

    if (name == "abs") {
        AbsIndices ix;
        std::string ideal;
        if (d.zt) {
            ix = zt_abs_indices(d.zt->context(std::max(8, max_v)), max_v);
            ideal = "<" + std::to_string(d.zt->n) + ">";
        } else {
            const ElementSet q = parse_ideal(*d.ring, ideal_text, d.labels);
            ix = abs_indices(*d.ring, q, max_v);
            ideal = q.to_string();
        }
        std::cout << "predicate: abs\nring: " << ring_name(d) << "\nideal: " << ideal << "\n";
        std::cout << "Abs: " << ix.big_abs << "\nabs: " << ix.small_abs << "\n";
        return kHolds;
    }

    AbsorbingQuery query{u, v, kind_of(name)};
    if (name == "v-absorbing")
        query.u = v + 1;
    query.validate();

    if (d.zt) {
        const ZTContext ctx = d.zt->context(std::max(8, query.u));
        std::cerr << "progress: scanning residues mod " << ctx.modulus() << " at u=" << query.u
                  << "\n";
        const Verdict verdict = zt_check_absorbing(ctx, query, opts);
        std::cerr << "progress: scan finished\n";
        return report_verdict(name, ring_name(d), "<" + std::to_string(d.zt->n) + ">", query,
                               verdict, [&](const Witness& w) { return zt_describe_witness(ctx, w); });
    }
    if (ideal_text.empty())
        throw Error(ErrorKind::Parse, "--ideal is required for table rings");
    const Hyperring& r = *d.ring;
    const ElementSet q = parse_ideal(r, ideal_text, d.labels);
    const Verdict verdict = check_absorbing(r, q, query, opts);
    return report_verdict(name, ring_name(d), q.to_string(), query, verdict,
                          [&](const Witness& w) { return describe_witness(r, q, w); });
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
    std::string what;
    RingSource second;
    std::string ideal;
    std::string s;
    bool strict = false;
    int u = 0;
    int v = 0;
    int degree = 0;
    std::string out;
};

std::vector<std::string> set_labels(const std::vector<ElementSet>& sets)
{
    std::vector<std::string> out;
    for (const auto& s : sets)
        out.push_back(s.to_string());
    return out;
}

int cmd_construct(const RingSource& src, const ConstructArgs& a)
{
    const RingDescription d = src.load();
    const Hyperring& r = table_ring(d);
    const bool query_given = a.u > 0 || a.v > 0;
    auto need_query = [&]() {
        AbsorbingQuery q{a.u, a.v, AbsorbingKind::Prime};
        q.validate();
        return q;
    };

    if (a.what == "product") {
        const RingDescription d2 = a.second.load();
        const DirectProduct dp = direct_product(r, table_ring(d2));
        write_output(a.out, emit_ring(dp.ring));
        return kHolds;
    }
    if (a.what == "quotient") {
        const ElementSet q = parse_ideal(r, a.ideal, d.labels);
        const QuotientRing qr = quotient(r, q);
        write_output(a.out, emit_ring(qr.ring, set_labels(qr.cosets)));
        return kHolds;
    }
    if (a.what == "gamma") {
        const CClassCache cache = CClassCache::build(r);
        const FundamentalRing fr = fundamental_ring(r, cache);
        write_output(a.out, emit_ring(fr.ring, set_labels(fr.classes)));
        return kHolds;
    }
    if (a.what == "matrix") {
        const MatrixRing m(r);
        std::ostringstream os;
        os << "base: " << ring_name(d) << "\norder: " << m.order() << "\n";
        const auto mat = m.materialize();
        if (mat) {
            os << "commutative: " << (mat->flags().hyperop_commutative ? "true" : "false") << "\n";
            os << "associative: " << (mat->flags().associative ? "true" : "false") << "\n";
        } else {
            os << "materialized: false (order above " << kMaxOrder << ")\n";
        }
        int code = kHolds;
        if (!a.ideal.empty() && query_given) {
            const ElementSet q = parse_ideal(r, a.ideal, d.labels);
            if (!mat)
                throw Error(ErrorKind::BudgetExceeded, "M_2 too large to scan");
            const AbsorbingQuery query = need_query();
            ScanOptions opts;
            opts.ordered = true;
            const Verdict v =
                check_absorbing(mat->table(), mat->non_units(), m.lift(q), query, opts);
            os << "ideal: M_2(" << q.to_string() << ")\n";
            os << "query: (u,v)=(" << query.u << "," << query.v << ") prime\n";
            os << "verdict: " << (v.holds ? "true" : "false") << "\n";
            if (v.witness) {
                os << "witness:";
                for (Element x : v.witness->tuple) {
                    const auto e = m.entries(x);
                    os << " [" << e[0] << " " << e[1] << "; " << e[2] << " " << e[3] << "]";
                }
                os << "\n";
            }
            code = v.holds ? kHolds : kFails;
        }
        write_output(a.out, os.str());
        return code;
    }
    if (a.what == "poly") {
        const ElementSet q = parse_ideal(r, a.ideal, d.labels);
        const AbsorbingQuery query = need_query();
        const int degree = a.degree > 0 ? a.degree : 2 * query.u;
        const MonomialExtension ext(r, degree);
        std::vector<Monomial> letters;
        const Verdict v = ext.check(q, query, &letters);
        std::ostringstream os;
        os << "ring: " << ring_name(d) << "[x] monomials of degree <= " << degree << "\n";
        os << "ideal: " << q.to_string() << "[x]\n";
        os << "query: (u,v)=(" << query.u << "," << query.v << ") prime\n";
        os << "verdict: " << (v.holds ? "true" : "false") << "\n";
        if (v.witness) {
            os << "witness:";
            for (Element i : v.witness->tuple)
                os << " " << letters[i].coeff << "x^" << letters[i].degree;
            os << "\n";
        }
        write_output(a.out, os.str());
        return v.holds ? kHolds : kFails;
    }
    if (a.what == "localize") {
        const ElementSet s = parse_ideal(r, a.s, d.labels);
        const Localization loc =
            localization(r, s, a.strict ? ClosureMode::Strict : ClosureMode::Weak);
        std::ostringstream os;
        os << "base: " << ring_name(d) << "\nS: " << s.to_string() << "\n";
        os << "mode: " << (a.strict ? "strict" : "weak") << "\n";
        os << "classes: " << loc.order() << "\n";
        for (int c = 0; c < loc.order(); ++c) {
            os << "  " << c << ":";
            for (auto [x, y] : loc.classes[c])
                os << " " << x << "/" << y;
            os << "\n";
        }
        os << "well-defined: " << (loc.well_defined ? "true" : "false") << "\n";
        if (loc.ill_defined_witness)
            os << "ill-defined-at: " << *loc.ill_defined_witness << "\n";
        os << "single-valued-addition: " << (loc.single_valued_addition() ? "true" : "false")
           << "\n";
        os << "units: " << loc.units().to_string() << "\n";
        if (auto h = loc.as_hyperring()) {
            os << emit_ring(*h);
        } else {
            for (int x = 0; x < loc.order(); ++x)
                for (int y = x; y < loc.order(); ++y)
                    os << "  " << x << " (+) " << y << " = " << loc.oplus(x, y).to_string()
                       << "   " << x << " (.) " << y << " = " << loc.odot(x, y).to_string()
                       << "\n";
        }
        write_output(a.out, os.str());
        return kHolds;
    }
    throw Error(ErrorKind::Parse, "unknown construction " + a.what);
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    bool all = false;
    bool list = false;
    std::vector<std::string> ids;
    std::string spec;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> budget;
    std::string report;
};

int cmd_verify(const VerifyArgs& a, unsigned workers)
{
    if (a.list) {
        for (const auto& p : registry())
            std::cout << p.id << "  " << p.statement << "\n";
        return kHolds;
    }
    if (a.all == !a.ids.empty())
        throw Error(ErrorKind::Parse, "give either --all or at least one --id");
    InstanceSpec spec = a.spec.empty() ? default_spec() : load_spec(a.spec);
    if (a.seed)
        spec.seed = *a.seed;
    if (a.budget)
        spec.budget = *a.budget;
    for (const auto& id : a.ids) {
        const auto& reg = registry();
        if (std::none_of(reg.begin(), reg.end(), [&](const auto& p) { return p.id == id; }))
            throw Error(ErrorKind::UnknownTheorem, id);
    }
    std::cerr << "progress: building instances\n";
    const InstanceStream stream = InstanceStream::build(spec);
    std::cerr << "progress: " << stream.rings().size() << " rings\n";
    std::vector<TheoremVerdict> verdicts;
    if (a.all) {
        verdicts = run_all(stream, workers);
    } else {
        for (const auto& id : a.ids)
            verdicts.push_back(run_property(id, stream));
    }
    const std::string text = format_report(stream, verdicts);
    std::size_t failures = 0;
    for (const auto& v : verdicts)
        failures += v.failures;
    if (a.report.empty()) {
        std::cout << text;
    } else {
        write_output(a.report, text);
        std::cout << text.substr(text.rfind("summary:"));
    }
    return failures == 0 ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite multiplicative hyperrings: hyperideals, absorbing predicates, "
                 "constructions and the theorem suite."};
    app.require_subcommand(1);
    unsigned workers = 0;
    app.add_option("--workers", workers, "worker threads (0 = all cores)");

    RingSource ring_src;
    bool emit = false;
    auto* ring_cmd = app.add_subcommand("ring", "validate and summarize a ring");
    ring_src.attach(ring_cmd);
    ring_cmd->add_flag("--emit", emit, "print the canonical ring file instead");

    RingSource ideal_src;
    std::string ideal_text;
    bool list = false;
    auto* ideal_cmd = app.add_subcommand("ideal", "hyperideal facts");
    ideal_src.attach(ideal_cmd);
    ideal_cmd->add_option("--ideal", ideal_text, "element list \"0,3\" or \"gen:[3]\"");
    ideal_cmd->add_flag("--list", list, "enumerate every hyperideal");

    RingSource pred_src;
    std::string pred_name;
    std::string pred_ideal;
    int u = 0;
    int v = 0;
    int max_v = 6;
    auto* pred_cmd = app.add_subcommand("predicate", "run one absorbing predicate");
    pred_cmd->add_option("name", pred_name, "predicate")
        ->required()
        ->check(CLI::IsMember(
            {"v-absorbing", "uv-absorbing", "ab-uv-absorbing", "uv-absorbing-prime", "abs"}));
    pred_src.attach(pred_cmd);
    pred_cmd->add_option("--ideal", pred_ideal, "element list or gen:[...]");
    pred_cmd->add_option("--u", u, "tuple length");
    pred_cmd->add_option("--v", v, "sub-product length");
    pred_cmd->add_option("--max-v", max_v, "search bound for abs")->check(CLI::Range(1, 7));
    pred_cmd->add_option("--workers", workers, "worker threads (0 = all cores)");

    RingSource cons_src;
    ConstructArgs cons;
    auto* cons_cmd = app.add_subcommand("construct", "build a derived ring");
    cons_cmd->add_option("what", cons.what, "construction")
        ->required()
        ->check(CLI::IsMember({"product", "matrix", "poly", "quotient", "gamma", "localize"}));
    cons_src.attach(cons_cmd);
    cons.second.attach(cons_cmd, "2");
    cons_cmd->add_option("--ideal", cons.ideal, "hyperideal for quotient, matrix or poly");
    cons_cmd->add_option("--s", cons.s, "multiplicative set for localize, e.g. \"1,3\"");
    cons_cmd->add_flag("--strict", cons.strict, "require S o S inside S");
    cons_cmd->add_option("--u", cons.u, "prime query for matrix or poly");
    cons_cmd->add_option("--v", cons.v, "prime query for matrix or poly");
    cons_cmd->add_option("--degree", cons.degree, "monomial degree bound for poly");
    cons_cmd->add_option("--out", cons.out, "write to this file");

    VerifyArgs ver;
    std::uint64_t seed = 0;
    std::size_t budget = 0;
    auto* ver_cmd = app.add_subcommand("verify", "run the theorem suite");
    ver_cmd->add_flag("--all", ver.all, "every registry entry");
    ver_cmd->add_option("--id", ver.ids, "one registry entry (repeatable)");
    ver_cmd->add_flag("--list", ver.list, "list registry entries");
    ver_cmd->add_option("--spec", ver.spec, "instance spec (JSON)")->check(CLI::ExistingFile);
    auto* seed_opt = ver_cmd->add_option("--seed", seed, "enumeration seed");
    auto* budget_opt = ver_cmd->add_option("--budget", budget, "instances per theorem, 0 = all");
    ver_cmd->add_option("--report", ver.report, "write the report here");
    ver_cmd->add_option("--workers", workers, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kHolds : kError;
    }

    try {
        if (*ring_cmd)
            return cmd_ring(ring_src, emit);
        if (*ideal_cmd)
            return cmd_ideal(ideal_src, ideal_text, list);
        if (*pred_cmd) {
            if (pred_name != "abs" && pred_name != "v-absorbing" && u <= v)
                throw Error(ErrorKind::BadQuery, "--u must exceed --v");
            if (pred_name == "v-absorbing" && v < 1)
                throw Error(ErrorKind::BadQuery, "--v must be positive");
            return cmd_predicate(pred_src, pred_name, pred_ideal, u, v, max_v, workers);
        }
        if (*cons_cmd)
            return cmd_construct(cons_src, cons);
        if (*ver_cmd) {
            if (*seed_opt)
                ver.seed = seed;
            if (*budget_opt)
                ver.budget = budget;
            return cmd_verify(ver, workers);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
