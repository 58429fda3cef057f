#include "hyper/hyperring.hpp"

#include <algorithm>
#include <sstream>

namespace hyper {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::EmptyHyperproduct: return "EmptyHyperproduct";
    case ErrorKind::NonCommutative: return "NonCommutative";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::NonDistributive: return "NonDistributive";
    case ErrorKind::SignRuleViolation: return "SignRuleViolation";
    case ErrorKind::EmptyOperand: return "EmptyOperand";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NotAHyperideal: return "NotAHyperideal";
    case ErrorKind::ImproperIdeal: return "ImproperIdeal";
    case ErrorKind::BadQuery: return "BadQuery";
    case ErrorKind::AbsUndefined: return "AbsUndefined";
    case ErrorKind::NoMaximalIdeal: return "NoMaximalIdeal";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::IllDefinedQuotient: return "IllDefinedQuotient";
    case ErrorKind::NotAnEquivalence: return "NotAnEquivalence";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::UnknownTheorem: return "UnknownTheorem";
    case ErrorKind::BadSpec: return "BadSpec";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

std::string format_elements(const std::vector<Element>& elems)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i != 0)
            os << ',';
        os << elems[i];
    }
    return os.str();
}

std::string ElementSet::to_string() const
{
    return "{" + format_elements(members()) + "}";
}

HyperTable::HyperTable(int order, std::vector<ElementSet> cells)
    : order_(order), cells_(std::move(cells))
{
    if (order < 1 || order > kMaxOrder)
        throw Error(ErrorKind::Parse, "order must be in [1, " + std::to_string(kMaxOrder) + "]");
    if (cells_.size() != static_cast<std::size_t>(order) * order)
        throw Error(ErrorKind::Parse, "hyperoperation table is not order x order");
    ElementSet carrier = ElementSet::full(order);
    for (const auto& c : cells_)
        if (!c.is_subset_of(carrier))
            throw Error(ErrorKind::Parse, "hyperoperation value outside the carrier");
}

ElementSet HyperTable::product(const ElementSet& xs, const ElementSet& ys) const
{
    ElementSet out;
    ys.for_each([&](Element y) { out |= extend(xs, y); });
    return out;
}

ElementSet HyperTable::product(std::span<const Element> seq) const
{
    if (seq.empty())
        throw Error(ErrorKind::EmptyOperand, "hyperproduct of an empty sequence");
    ElementSet acc = ElementSet::singleton(seq[0]);
    for (std::size_t i = 1; i < seq.size(); ++i)
        acc = extend(acc, seq[i]);
    return acc;
}

ElementSet HyperTable::power(Element x, int k) const
{
    ElementSet acc = ElementSet::singleton(x);
    for (int i = 1; i < k; ++i)
        acc = extend(acc, x);
    return acc;
}

ElementSet identity_elements(const HyperTable& table)
{
    ElementSet ids;
    int n = table.order();
    for (Element e = 0; e < n; ++e) {
        bool ok = true;
        for (Element a = 0; a < n && ok; ++a)
            ok = table(a, e).contains(a);
        if (ok)
            ids.insert(e);
    }
    return ids;
}

ElementSet unit_elements(const HyperTable& table, Element one)
{
    ElementSet units;
    int n = table.order();
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (table(x, y).contains(one)) {
                units.insert(x);
                break;
            }
    return units;
}

AxiomError::AxiomError(AxiomViolation v)
    : Error(v.kind, v.detail), violation_(std::move(v))
{
}

namespace {

struct GroupInfo {
    bool ok = false;
    Element zero = 0;
    std::vector<Element> neg;
    std::optional<AxiomViolation> violation;
};

GroupInfo check_group(int n, const std::vector<Element>& add)
{
    GroupInfo g;
    auto at = [&](Element x, Element y) { return add[static_cast<std::size_t>(x) * n + y]; };
    auto fail = [&](Element a, Element b, Element c, std::string why) {
        g.violation = AxiomViolation{ErrorKind::NotAGroup, {a, b, c}, std::move(why)};
        return g;
    };

    std::optional<Element> zero;
    for (Element e = 0; e < n && !zero; ++e) {
        bool ok = true;
        for (Element x = 0; x < n && ok; ++x)
            ok = at(e, x) == x && at(x, e) == x;
        if (ok)
            zero = e;
    }
    if (!zero)
        return fail(-1, -1, -1, "no additive identity");
    g.zero = *zero;

    for (Element x = 0; x < n; ++x)
        for (Element y = x + 1; y < n; ++y)
            if (at(x, y) != at(y, x))
                return fail(x, y, -1, "addition is not commutative");

    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            for (Element z = 0; z < n; ++z)
                if (at(at(x, y), z) != at(x, at(y, z)))
                    return fail(x, y, z, "addition is not associative");

    g.neg.assign(n, -1);
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y)
            if (at(x, y) == g.zero) {
                g.neg[x] = y;
                break;
            }
        if (g.neg[x] < 0)
            return fail(x, -1, -1, "element has no additive inverse");
    }
    g.ok = true;
    return g;
}

ElementSet sum_sets(int n, const std::vector<Element>& add, const ElementSet& xs,
                    const ElementSet& ys)
{
    ElementSet out;
    xs.for_each([&](Element a) {
        const Element* row = &add[static_cast<std::size_t>(a) * n];
        ys.for_each([&](Element b) { out.insert(row[b]); });
    });
    return out;
}

}  // namespace

AxiomReport check_axioms(int order, const std::vector<Element>& add,
                         const std::vector<ElementSet>& hyp)
{
    if (order < 1 || order > kMaxOrder)
        throw Error(ErrorKind::Parse, "order must be in [1, " + std::to_string(kMaxOrder) + "]");
    if (add.size() != static_cast<std::size_t>(order) * order)
        throw Error(ErrorKind::Parse, "addition table is not order x order");
    for (Element v : add)
        if (v < 0 || v >= order)
            throw Error(ErrorKind::Parse, "addition value outside the carrier");
    HyperTable table(order, hyp);
    const int n = order;

    AxiomReport report;
    auto note = [&](AxiomViolation v) {
        if (!report.violation)
            report.violation = std::move(v);
    };

    GroupInfo group = check_group(n, add);
    report.flags.additive_group = group.ok;
    if (!group.ok)
        note(*group.violation);

    report.flags.nonempty = true;
    for (Element x = 0; x < n && report.flags.nonempty; ++x)
        for (Element y = 0; y < n; ++y)
            if (table(x, y).empty()) {
                report.flags.nonempty = false;
                note({ErrorKind::EmptyHyperproduct, {x, y, -1},
                      "hyp(" + std::to_string(x) + "," + std::to_string(y) + ") is empty"});
                break;
            }

    report.flags.hyperop_commutative = true;
    for (Element x = 0; x < n && report.flags.hyperop_commutative; ++x)
        for (Element y = x + 1; y < n; ++y)
            if (table(x, y) != table(y, x)) {
                report.flags.hyperop_commutative = false;
                note({ErrorKind::NonCommutative, {x, y, -1}, "hyp(x,y) != hyp(y,x)"});
                break;
            }

    // Associativity: union_{a in y o z} x o a == union_{b in x o y} b o z.
    report.flags.associative = true;
    for (Element x = 0; x < n && report.flags.associative; ++x)
        for (Element y = 0; y < n && report.flags.associative; ++y) {
            const ElementSet& xy = table(x, y);
            for (Element z = 0; z < n; ++z) {
                ElementSet left;
                table(y, z).for_each([&](Element a) { left |= table(x, a); });
                ElementSet right = table.extend(xy, z);
                if (left != right) {
                    report.flags.associative = false;
                    note({ErrorKind::NonAssociative, {x, y, z}, "x o (y o z) != (x o y) o z"});
                    break;
                }
            }
        }

    if (group.ok) {
        report.flags.distributive = true;
        report.flags.strongly_distributive = true;
        for (Element x = 0; x < n && report.flags.distributive; ++x)
            for (Element y = 0; y < n && report.flags.distributive; ++y)
                for (Element z = 0; z < n; ++z) {
                    const ElementSet& lhs = table(x, add[static_cast<std::size_t>(y) * n + z]);
                    ElementSet rhs = sum_sets(n, add, table(x, y), table(x, z));
                    if (!lhs.is_subset_of(rhs)) {
                        report.flags.distributive = false;
                        report.flags.strongly_distributive = false;
                        note({ErrorKind::NonDistributive, {x, y, z},
                              "x o (y + z) is not contained in x o y + x o z"});
                        break;
                    }
                    if (lhs != rhs && report.flags.strongly_distributive) {
                        report.flags.strongly_distributive = false;
                        report.non_strong_witness = std::array<Element, 3>{x, y, z};
                    }
                }

        report.flags.sign_rule = true;
        for (Element x = 0; x < n && report.flags.sign_rule; ++x)
            for (Element y = 0; y < n; ++y) {
                ElementSet negated;
                table(x, y).for_each([&](Element e) { negated.insert(group.neg[e]); });
                if (table(x, group.neg[y]) != negated || table(group.neg[x], y) != negated) {
                    report.flags.sign_rule = false;
                    note({ErrorKind::SignRuleViolation, {x, y, -1}, "x o (-y) != -(x o y)"});
                    break;
                }
            }
    }
    return report;
}

Hyperring::Hyperring(int order, std::vector<Element> add, std::vector<ElementSet> hyp,
                     Options opts, bool throw_on_violation)
{
    if (opts.skip_validation) {
        if (add.size() != static_cast<std::size_t>(order) * order)
            throw Error(ErrorKind::Parse, "addition table is not order x order");
        GroupInfo g = check_group(order, add);
        if (!g.ok)
            throw AxiomError(*g.violation);
        report_.flags.additive_group = true;
        table_ = HyperTable(order, std::move(hyp));
    } else {
        report_ = check_axioms(order, add, hyp);
        if (report_.violation && throw_on_violation)
            throw AxiomError(*report_.violation);
        if (!report_.flags.additive_group)
            throw AxiomError(*report_.violation);
        table_ = HyperTable(order, std::move(hyp));
    }
    GroupInfo g = check_group(order, add);
    zero_ = g.zero;
    neg_ = std::move(g.neg);
    add_ = std::move(add);

    identities_ = identity_elements(table_);
    if (opts.designated_identity) {
        if (!identities_.contains(*opts.designated_identity))
            throw Error(ErrorKind::NoIdentity, "designated element " +
                                                   std::to_string(*opts.designated_identity) +
                                                   " is not an identity");
        one_ = opts.designated_identity;
    } else if (!identities_.empty()) {
        one_ = identities_.first();
    }
    if (one_)
        units_ = unit_elements(table_, *one_);
}

Hyperring Hyperring::validate(int order, std::vector<Element> add, std::vector<ElementSet> hyp,
                              Options opts)
{
    opts.skip_validation = false;
    return Hyperring(order, std::move(add), std::move(hyp), opts, true);
}

Hyperring Hyperring::unchecked(int order, std::vector<Element> add, std::vector<ElementSet> hyp,
                               Options opts)
{
    return Hyperring(order, std::move(add), std::move(hyp), opts, false);
}

Element Hyperring::one() const
{
    if (!one_)
        throw Error(ErrorKind::NoIdentity, "hyperring has no identity element");
    return *one_;
}

ElementSet Hyperring::sum(const ElementSet& xs, const ElementSet& ys) const
{
    return sum_sets(order(), add_, xs, ys);
}

ElementSet Hyperring::negate(const ElementSet& xs) const
{
    ElementSet out;
    xs.for_each([&](Element e) { out.insert(neg_[e]); });
    return out;
}

ElementSet Hyperring::hyperproduct(std::span<const Element> seq) const
{
    return table_.product(seq);
}

ElementSet Hyperring::subset_hyperproduct(std::span<const ElementSet> seq) const
{
    if (seq.empty())
        throw Error(ErrorKind::EmptyOperand, "no operands");
    for (const auto& s : seq)
        if (s.empty())
            throw Error(ErrorKind::EmptyOperand, "empty operand set");
    ElementSet acc = seq[0];
    for (std::size_t i = 1; i < seq.size(); ++i)
        acc = table_.product(acc, seq[i]);
    return acc;
}

Hyperring build_zmt(int m, const std::vector<int>& T)
{
    if (m < 1 || m > kMaxOrder)
        throw Error(ErrorKind::Parse, "modulus out of range");
    if (T.empty())
        throw Error(ErrorKind::Parse, "T must be nonempty");
    std::vector<int> ts;
    for (int t : T)
        ts.push_back(((t % m) + m) % m);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    std::vector<Element> add(static_cast<std::size_t>(m) * m);
    std::vector<ElementSet> hyp(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            add[static_cast<std::size_t>(a) * m + b] = (a + b) % m;
            ElementSet cell;
            for (int t : ts)
                cell.insert(static_cast<Element>((static_cast<long>(a) * t % m) * b % m));
            hyp[static_cast<std::size_t>(a) * m + b] = cell;
        }
    Hyperring ring = Hyperring::validate(m, std::move(add), std::move(hyp));
    std::ostringstream name;
    name << "Z" << m << "{";
    for (std::size_t i = 0; i < ts.size(); ++i)
        name << (i ? "," : "") << ts[i];
    name << "}";
    ring.set_name(name.str());
    return ring;
}

}  // namespace hyper
