#include "hyper/constructions.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace hyper {

namespace {

std::vector<Element> additive_table(int order, const std::function<Element(Element, Element)>& f)
{
    std::vector<Element> add(static_cast<std::size_t>(order) * order);
    for (Element x = 0; x < order; ++x)
        for (Element y = 0; y < order; ++y)
            add[static_cast<std::size_t>(x) * order + y] = f(x, y);
    return add;
}

}  // namespace

ElementSet DirectProduct::embed(const ElementSet& q1, const ElementSet& q2) const
{
    ElementSet out;
    q1.for_each([&](Element x) { q2.for_each([&](Element y) { out.insert(pair(x, y)); }); });
    return out;
}

DirectProduct direct_product(const Hyperring& a, const Hyperring& b)
{
    const int n1 = a.order();
    const int n2 = b.order();
    if (n1 * n2 > kMaxOrder)
        throw Error(ErrorKind::BudgetExceeded, "product order above " + std::to_string(kMaxOrder));
    DirectProduct dp{Hyperring::unchecked(1, {0}, {ElementSet{0}}), n1, n2};
    const int n = n1 * n2;
    auto add = additive_table(n, [&](Element p, Element q) {
        return dp.pair(a.add(dp.left(p), dp.left(q)), b.add(dp.right(p), dp.right(q)));
    });
    std::vector<ElementSet> hyp(static_cast<std::size_t>(n) * n);
    for (Element p = 0; p < n; ++p)
        for (Element q = 0; q < n; ++q)
            hyp[static_cast<std::size_t>(p) * n + q] =
                dp.embed(a.hyp(dp.left(p), dp.left(q)), b.hyp(dp.right(p), dp.right(q)));
    Hyperring::Options opts;
    if (a.has_identity() && b.has_identity())
        opts.designated_identity = dp.pair(a.one(), b.one());
    dp.ring = Hyperring::validate(n, std::move(add), std::move(hyp), opts);
    dp.ring.set_name(a.name() + "x" + b.name());
    return dp;
}

MatrixRing::MatrixRing(const Hyperring& base, int m, int max_order) : base_(&base)
{
    if (m != 2)
        throw Error(ErrorKind::BadQuery, "only 2x2 hypermatrices are supported");
    n_ = base.order();
    const long order = static_cast<long>(n_) * n_ * n_ * n_;
    if (order > max_order)
        throw Error(ErrorKind::BudgetExceeded,
                    "M_2 over order " + std::to_string(n_) + " has " + std::to_string(order) +
                        " elements, above the budget of " + std::to_string(max_order));
    order_ = static_cast<int>(order);
}

int MatrixRing::encode(Element a, Element b, Element c, Element d) const
{
    return a + n_ * (b + n_ * (c + n_ * d));
}

std::array<Element, 4> MatrixRing::entries(int m) const
{
    return {m % n_, (m / n_) % n_, (m / (n_ * n_)) % n_, m / (n_ * n_ * n_)};
}

int MatrixRing::add(int x, int y) const
{
    auto ex = entries(x);
    auto ey = entries(y);
    const Hyperring& a = *base_;
    return encode(a.add(ex[0], ey[0]), a.add(ex[1], ey[1]), a.add(ex[2], ey[2]),
                  a.add(ex[3], ey[3]));
}

std::vector<int> MatrixRing::product(int x, int y) const
{
    const Hyperring& a = *base_;
    auto ex = entries(x);
    auto ey = entries(y);
    // Row-major: ex = (x11, x12, x21, x22).
    auto entry = [&](int i, int j) {
        return a.sum(a.hyp(ex[2 * i], ey[j]), a.hyp(ex[2 * i + 1], ey[2 + j])).members();
    };
    auto c11 = entry(0, 0);
    auto c12 = entry(0, 1);
    auto c21 = entry(1, 0);
    auto c22 = entry(1, 1);
    std::vector<int> out;
    for (Element p : c11)
        for (Element q : c12)
            for (Element r : c21)
                for (Element s : c22)
                    out.push_back(encode(p, q, r, s));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> MatrixRing::product(std::span<const int> seq) const
{
    if (seq.empty())
        throw Error(ErrorKind::EmptyOperand, "empty matrix product");
    std::vector<int> cur{seq[0]};
    for (std::size_t i = 1; i < seq.size(); ++i) {
        std::vector<int> next;
        for (int x : cur) {
            auto p = product(x, seq[i]);
            next.insert(next.end(), p.begin(), p.end());
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        cur = std::move(next);
    }
    return cur;
}

bool MatrixRing::in_lift(int m, const ElementSet& q) const
{
    auto e = entries(m);
    return q.contains(e[0]) && q.contains(e[1]) && q.contains(e[2]) && q.contains(e[3]);
}

bool MatrixRing::product_in_lift(std::span<const int> seq, const ElementSet& q) const
{
    for (int m : product(seq))
        if (!in_lift(m, q))
            return false;
    return true;
}

bool MatrixRing::lift_is_hyperideal(const ElementSet& q) const
{
    std::vector<int> members;
    for (int m = 0; m < order_; ++m)
        if (in_lift(m, q))
            members.push_back(m);
    auto neg = [&](int m) {
        auto e = entries(m);
        return encode(base_->neg(e[0]), base_->neg(e[1]), base_->neg(e[2]), base_->neg(e[3]));
    };
    for (int x : members)
        for (int y : members)
            if (!in_lift(add(x, neg(y)), q))
                return false;
    for (int x : members)
        for (int r = 0; r < order_; ++r) {
            for (int p : product(r, x))
                if (!in_lift(p, q))
                    return false;
            for (int p : product(x, r))
                if (!in_lift(p, q))
                    return false;
        }
    return true;
}

std::optional<Hyperring> MatrixRing::materialize() const
{
    if (order_ > kMaxOrder)
        return std::nullopt;
    const int size = order_;
    auto add_table =
        additive_table(size, [&](Element x, Element y) { return static_cast<Element>(add(x, y)); });
    std::vector<ElementSet> hyp(static_cast<std::size_t>(size) * size);
    for (Element x = 0; x < size; ++x)
        for (Element y = 0; y < size; ++y) {
            auto p = product(x, y);
            hyp[static_cast<std::size_t>(x) * size + y] =
                ElementSet::from_vector(std::vector<Element>(p.begin(), p.end()));
        }
    Hyperring ring = Hyperring::unchecked(size, std::move(add_table), std::move(hyp));
    ring.set_name("M2(" + base_->name() + ")");
    return ring;
}

ElementSet MatrixRing::lift(const ElementSet& q) const
{
    ElementSet out;
    for (int m = 0; m < std::min(order_, kMaxOrder); ++m)
        if (in_lift(m, q))
            out.insert(m);
    return out;
}

MonomialExtension::MonomialExtension(const Hyperring& base, int max_degree)
    : base_(&base), max_degree_(max_degree)
{
    if (max_degree < 0)
        throw Error(ErrorKind::DegreeOverflow, "negative degree bound");
}

std::pair<ElementSet, int> MonomialExtension::multiply(std::span<const Monomial> seq) const
{
    if (seq.empty())
        throw Error(ErrorKind::EmptyOperand, "empty monomial product");
    int degree = 0;
    std::vector<Element> coeffs;
    for (const auto& m : seq) {
        if (m.degree < 0 || m.degree > max_degree_)
            throw Error(ErrorKind::DegreeOverflow, "monomial degree out of range");
        degree += m.degree;
        coeffs.push_back(m.coeff);
    }
    if (degree > max_degree_)
        throw Error(ErrorKind::DegreeOverflow, "product degree " + std::to_string(degree) +
                                                   " exceeds " + std::to_string(max_degree_));
    return {base_->hyperproduct(coeffs), degree};
}

bool MonomialExtension::is_unit(const Monomial& m) const
{
    return m.degree == 0 && base_->units().contains(m.coeff);
}

bool MonomialExtension::product_in(std::span<const Monomial> seq, const ElementSet& q) const
{
    return multiply(seq).first.is_subset_of(q);
}

Verdict MonomialExtension::check(const ElementSet& q, const AbsorbingQuery& query,
                                 std::vector<Monomial>* letters_out) const
{
    query.validate();
    require_hyperideal(*base_, q);
    if (!is_proper(*base_, q))
        throw Error(ErrorKind::ImproperIdeal, "Q[x] needs a proper Q");
    const int top = max_degree_ / query.u;
    std::vector<Monomial> letters;
    for (int d = 0; d <= top; ++d)
        for (Element c = 0; c < base_->order(); ++c) {
            Monomial m{c, d};
            // Monomials with coefficient in Q are absorbed; they never fail.
            if ((query.kind == AbsorbingKind::AB || !is_unit(m)) && !q.contains(c))
                letters.push_back(m);
        }
    std::vector<Monomial> buf;
    auto in_q = [&](std::span<const Element> idx) {
        buf.clear();
        for (Element i : idx)
            buf.push_back(letters[i]);
        return product_in(buf, q);
    };
    Verdict verdict =
        check_absorbing_by(static_cast<int>(letters.size()), query, in_q);
    if (letters_out)
        *letters_out = letters;
    return verdict;
}

std::optional<std::string> GoodHomomorphism::violation() const
{
    const int n = source.order();
    if (static_cast<int>(map.size()) != n)
        return "map is not total on the source carrier";
    for (Element y : map)
        if (y < 0 || y >= target.order())
            return "map leaves the target carrier";
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            if (map[source.add(x, y)] != target.add(map[x], map[y])) {
                std::ostringstream os;
                os << "additivity fails at (" << x << "," << y << ")";
                return os.str();
            }
            if (image(source.hyp(x, y)) != target.hyp(map[x], map[y])) {
                std::ostringstream os;
                os << "hyperproduct image differs at (" << x << "," << y << ")";
                return os.str();
            }
        }
    return std::nullopt;
}

bool GoodHomomorphism::surjective() const
{
    return image(source.carrier()) == target.carrier();
}

ElementSet GoodHomomorphism::kernel() const
{
    return preimage(ElementSet::singleton(target.zero()));
}

ElementSet GoodHomomorphism::image(const ElementSet& xs) const
{
    ElementSet out;
    xs.for_each([&](Element x) { out.insert(map[x]); });
    return out;
}

ElementSet GoodHomomorphism::preimage(const ElementSet& ys) const
{
    ElementSet out;
    for (Element x = 0; x < source.order(); ++x)
        if (ys.contains(map[x]))
            out.insert(x);
    return out;
}

GoodHomomorphism make_good_homomorphism(Hyperring source, Hyperring target,
                                        std::vector<Element> map)
{
    GoodHomomorphism hom{std::move(source), std::move(target), std::move(map)};
    if (auto why = hom.violation())
        throw Error(ErrorKind::PreconditionUnmet, "not a good homomorphism: " + *why);
    return hom;
}

namespace {

std::optional<std::string> image_precondition(const GoodHomomorphism& hom,
                                              const ElementSet& source_q)
{
    if (!hom.surjective())
        return "map is not surjective";
    if (!hom.kernel().is_subset_of(source_q))
        return "kernel not contained in Q";
    if (!is_c_hyperideal(source_q, CClassCache::build(hom.source)))
        return "Q is not a C-hyperideal";
    return std::nullopt;
}

}  // namespace

ElementSet transport_image(const GoodHomomorphism& hom, const ElementSet& source_q)
{
    require_hyperideal(hom.source, source_q);
    if (auto why = image_precondition(hom, source_q))
        throw Error(ErrorKind::PreconditionUnmet, *why);
    return hom.image(source_q);
}

TransportReport transport_checks(const GoodHomomorphism& hom, const ElementSet& target_q,
                                 const ElementSet& source_q)
{
    TransportReport report;
    require_hyperideal(hom.target, target_q);
    report.preimage = hom.preimage(target_q);
    report.non_units_preserved = true;
    hom.source.non_units().for_each([&](Element x) {
        if (hom.target.units().contains(hom.map[x]))
            report.non_units_preserved = false;
    });
    require_hyperideal(hom.source, source_q);
    report.image_precondition = image_precondition(hom, source_q);
    report.image = hom.image(source_q);
    return report;
}

ElementSet QuotientRing::image(const ElementSet& xs) const
{
    ElementSet out;
    xs.for_each([&](Element x) { out.insert(projection[x]); });
    return out;
}

namespace {

/// Partition of the carrier into cosets of an additive subgroup.
void coset_partition(const Hyperring& a, const ElementSet& h, std::vector<ElementSet>& cosets,
                     std::vector<Element>& index)
{
    index.assign(a.order(), -1);
    for (Element x = 0; x < a.order(); ++x) {
        if (index[x] >= 0)
            continue;
        ElementSet c;
        h.for_each([&](Element y) { c.insert(a.add(x, y)); });
        const auto id = static_cast<Element>(cosets.size());
        c.for_each([&](Element y) { index[y] = id; });
        cosets.push_back(c);
    }
}

}  // namespace

QuotientRing quotient(const Hyperring& a, const ElementSet& q)
{
    require_hyperideal(a, q);
    QuotientRing qr{Hyperring::unchecked(1, {0}, {ElementSet{0}}), {}, {}};
    coset_partition(a, q, qr.cosets, qr.projection);
    const int k = static_cast<int>(qr.cosets.size());
    auto add = additive_table(k, [&](Element i, Element j) {
        return qr.projection[a.add(qr.cosets[i].first(), qr.cosets[j].first())];
    });
    std::vector<ElementSet> hyp(static_cast<std::size_t>(k) * k);
    for (Element i = 0; i < k; ++i)
        for (Element j = 0; j < k; ++j) {
            std::optional<ElementSet> cell;
            for (Element x : qr.cosets[i].members())
                for (Element y : qr.cosets[j].members()) {
                    ElementSet img = qr.image(a.hyp(x, y));
                    if (!cell) {
                        cell = img;
                    } else if (*cell != img) {
                        std::ostringstream os;
                        os << "coset product depends on representatives: " << x << " o " << y
                           << " gives " << img.to_string() << ", expected "
                           << cell->to_string();
                        throw Error(ErrorKind::IllDefinedQuotient, os.str());
                    }
                }
            hyp[static_cast<std::size_t>(i) * k + j] = *cell;
        }
    Hyperring::Options opts;
    if (a.has_identity())
        opts.designated_identity = qr.projection[a.one()];
    auto check = Hyperring::unchecked(k, add, hyp);
    if (opts.designated_identity && !check.identities().contains(*opts.designated_identity))
        opts.designated_identity.reset();
    qr.ring = Hyperring::validate(k, std::move(add), std::move(hyp), opts);
    qr.ring.set_name(a.name() + "/" + q.to_string());
    return qr;
}

GoodHomomorphism quotient_map(const Hyperring& a, const QuotientRing& qr)
{
    return make_good_homomorphism(a, qr.ring, qr.projection);
}

bool FundamentalRing::saturated(const ElementSet& q) const
{
    for (const auto& c : classes)
        if (c.intersects(q) && !c.is_subset_of(q))
            return false;
    return true;
}

ElementSet FundamentalRing::image(const ElementSet& q) const
{
    ElementSet out;
    q.for_each([&](Element x) { out.insert(class_of[x]); });
    return out;
}

FundamentalRing fundamental_ring(const Hyperring& a, const CClassCache& cache)
{
    FundamentalRing fr{Hyperring::unchecked(1, {0}, {ElementSet{0}}), {}, {}};
    coset_partition(a, cache.fundamental_kernel(), fr.classes, fr.class_of);
    const int k = static_cast<int>(fr.classes.size());
    std::vector<Element> add(static_cast<std::size_t>(k) * k);
    std::vector<ElementSet> mul(static_cast<std::size_t>(k) * k);
    for (Element i = 0; i < k; ++i)
        for (Element j = 0; j < k; ++j) {
            ElementSet sums;
            ElementSet prods;
            for (Element x : fr.classes[i].members())
                for (Element y : fr.classes[j].members()) {
                    sums.insert(fr.class_of[a.add(x, y)]);
                    a.hyp(x, y).for_each([&](Element z) { prods.insert(fr.class_of[z]); });
                }
            if (sums.size() != 1 || prods.size() != 1) {
                std::ostringstream os;
                os << "induced operation on classes " << i << "," << j << " is not single-valued"
                   << " (sums " << sums.to_string() << ", products " << prods.to_string() << ")";
                throw Error(ErrorKind::IllDefinedQuotient, os.str());
            }
            add[static_cast<std::size_t>(i) * k + j] = sums.first();
            mul[static_cast<std::size_t>(i) * k + j] = prods;
        }
    fr.ring = Hyperring::validate(k, std::move(add), std::move(mul));
    fr.ring.set_name(a.name() + "/gamma*");
    return fr;
}

std::vector<ElementSet> gamma_classes_literal(const Hyperring& a, const CClassCache& cache)
{
    const int n = a.order();
    std::vector<Element> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Element x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& u : cache.enumerate_sums(a)) {
        Element base = find(u.first());
        u.for_each([&](Element y) {
            Element r = find(y);
            if (r != base)
                parent[std::max(r, base)] = std::min(r, base);
            base = find(base);
        });
    }
    std::map<Element, ElementSet> groups;
    for (Element x = 0; x < n; ++x)
        groups[find(x)].insert(x);
    std::vector<ElementSet> out;
    for (auto& [root, members] : groups)
        out.push_back(members);
    std::sort(out.begin(), out.end(),
              [](const ElementSet& l, const ElementSet& r) { return l.first() < r.first(); });
    return out;
}

Element Localization::fraction(Element x, Element r) const
{
    return class_of[static_cast<std::size_t>(x) * base->order() + r];
}

Element Localization::localize(Element a) const
{
    return fraction(a, base->one());
}

ElementSet Localization::extend_ideal(const ElementSet& i) const
{
    ElementSet out;
    i.for_each([&](Element x) { s.for_each([&](Element r) { out.insert(fraction(x, r)); }); });
    return out;
}

ElementSet Localization::units() const
{
    ElementSet out;
    const Element one = localize(base->one());
    for (Element x = 0; x < order(); ++x)
        for (Element y = 0; y < order(); ++y)
            if (odot(x, y).contains(one))
                out.insert(x);
    return out;
}

bool Localization::single_valued_addition() const
{
    for (const auto& cell : oplus.cells())
        if (cell.size() != 1)
            return false;
    return true;
}

std::optional<Hyperring> Localization::as_hyperring() const
{
    if (!well_defined || !single_valued_addition())
        return std::nullopt;
    const int k = order();
    std::vector<Element> add;
    for (const auto& cell : oplus.cells())
        add.push_back(cell.first());
    auto ring = Hyperring::unchecked(k, std::move(add), odot.cells());
    if (!ring.is_valid())
        return std::nullopt;
    Hyperring::Options opts;
    const Element one = localize(base->one());
    if (ring.identities().contains(one))
        opts.designated_identity = one;
    ring = Hyperring::unchecked(k, ring.add_table(), odot.cells(), opts);
    ring.set_name("S^-1 " + base->name());
    return ring;
}

Localization localization(const Hyperring& a, const ElementSet& s, ClosureMode mode)
{
    const Element one = a.one();
    if (!s.contains(one))
        throw Error(ErrorKind::NotClosed, "S must contain the identity");
    for (Element r : s.members())
        for (Element t : s.members()) {
            const ElementSet& p = a.hyp(r, t);
            bool ok = mode == ClosureMode::Weak ? p.intersects(s) : p.is_subset_of(s);
            if (!ok) {
                std::ostringstream os;
                os << "S not closed: " << r << " o " << t << " = " << p.to_string();
                throw Error(ErrorKind::NotClosed, os.str());
            }
        }

    const int n = a.order();
    Localization loc;
    loc.base = &a;
    loc.s = s;
    loc.mode = mode;
    const auto svals = s.members();
    std::vector<std::pair<Element, Element>> fracs;
    for (Element x = 0; x < n; ++x)
        for (Element r : svals)
            fracs.emplace_back(x, r);
    const std::size_t f = fracs.size();
    std::vector<char> rel(f * f, 0);
    for (std::size_t i = 0; i < f; ++i)
        for (std::size_t j = 0; j < f; ++j) {
            auto [x1, r1] = fracs[i];
            auto [x2, r2] = fracs[j];
            for (Element r : svals) {
                std::array<Element, 3> lhs{r, r1, x2};
                std::array<Element, 3> rhs{r, r2, x1};
                if (a.hyperproduct(lhs) == a.hyperproduct(rhs)) {
                    rel[i * f + j] = 1;
                    break;
                }
            }
        }
    auto frac_name = [&](std::size_t i) {
        return std::to_string(fracs[i].first) + "/" + std::to_string(fracs[i].second);
    };
    for (std::size_t i = 0; i < f; ++i)
        if (!rel[i * f + i])
            throw Error(ErrorKind::NotAnEquivalence, "not reflexive at " + frac_name(i));
    for (std::size_t i = 0; i < f; ++i)
        for (std::size_t j = 0; j < f; ++j) {
            if (rel[i * f + j] != rel[j * f + i])
                throw Error(ErrorKind::NotAnEquivalence,
                            "not symmetric at " + frac_name(i) + ", " + frac_name(j));
            if (!rel[i * f + j])
                continue;
            for (std::size_t k = 0; k < f; ++k)
                if (rel[j * f + k] && !rel[i * f + k])
                    throw Error(ErrorKind::NotAnEquivalence, "not transitive at " +
                                                                 frac_name(i) + ", " +
                                                                 frac_name(j) + ", " +
                                                                 frac_name(k));
        }

    loc.class_of.assign(static_cast<std::size_t>(n) * n, -1);
    std::vector<int> frac_class(f, -1);
    for (std::size_t i = 0; i < f; ++i) {
        if (frac_class[i] >= 0)
            continue;
        const int id = static_cast<int>(loc.classes.size());
        loc.classes.emplace_back();
        for (std::size_t j = i; j < f; ++j)
            if (rel[i * f + j]) {
                frac_class[j] = id;
                loc.classes.back().push_back(fracs[j]);
                loc.class_of[static_cast<std::size_t>(fracs[j].first) * n + fracs[j].second] =
                    id;
            }
    }
    if (static_cast<int>(loc.classes.size()) > kMaxOrder)
        throw Error(ErrorKind::BudgetExceeded, "too many fraction classes");

    const int k = loc.order();
    std::vector<ElementSet> oplus(static_cast<std::size_t>(k) * k);
    std::vector<ElementSet> odot(static_cast<std::size_t>(k) * k);
    auto denominators = [&](Element r1, Element r2) {
        ElementSet d = a.hyp(r1, r2);
        return mode == ClosureMode::Weak ? d & s : d;
    };
    for (int c1 = 0; c1 < k; ++c1)
        for (int c2 = 0; c2 < k; ++c2) {
            std::optional<ElementSet> sum_cell;
            std::optional<ElementSet> prod_cell;
            for (auto [x1, r1] : loc.classes[c1])
                for (auto [x2, r2] : loc.classes[c2]) {
                    ElementSet den = denominators(r1, r2);
                    ElementSet sums;
                    ElementSet prods;
                    for (Element c : den.members()) {
                        for (Element p : a.hyp(r1, x2).members())
                            for (Element q : a.hyp(r2, x1).members())
                                sums.insert(loc.fraction(a.add(p, q), c));
                        a.hyp(x1, x2).for_each([&](Element p) { prods.insert(loc.fraction(p, c)); });
                    }
                    if (!sum_cell) {
                        sum_cell = sums;
                        prod_cell = prods;
                    } else if ((*sum_cell != sums || *prod_cell != prods) && loc.well_defined) {
                        loc.well_defined = false;
                        std::ostringstream os;
                        os << "class operation depends on representatives at " << x1 << "/"
                           << r1 << ", " << x2 << "/" << r2;
                        loc.ill_defined_witness = os.str();
                    }
                    if (!loc.well_defined) {
                        *sum_cell |= sums;
                        *prod_cell |= prods;
                    }
                }
            oplus[static_cast<std::size_t>(c1) * k + c2] = *sum_cell;
            odot[static_cast<std::size_t>(c1) * k + c2] = *prod_cell;
        }
    loc.oplus = HyperTable(k, std::move(oplus));
    loc.odot = HyperTable(k, std::move(odot));
    return loc;
}

}  // namespace hyper
