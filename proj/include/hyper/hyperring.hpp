#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyper/element_set.hpp"
#include "hyper/error.hpp"

namespace hyper {

/// Dense order x order table of nonempty element sets.
class HyperTable {
public:
    HyperTable() = default;
    HyperTable(int order, std::vector<ElementSet> cells);

    [[nodiscard]] int order() const { return order_; }
    [[nodiscard]] const ElementSet& operator()(Element x, Element y) const
    {
        return cells_[static_cast<std::size_t>(x) * order_ + y];
    }
    [[nodiscard]] const std::vector<ElementSet>& cells() const { return cells_; }

    /// S o y = union of s o y over s in S.
    [[nodiscard]] ElementSet extend(const ElementSet& s, Element y) const
    {
        ElementSet out;
        s.for_each([&](Element a) { out |= (*this)(a, y); });
        return out;
    }

    /// X o Y for subsets.
    [[nodiscard]] ElementSet product(const ElementSet& xs, const ElementSet& ys) const;

    /// Left fold x1 o x2 o ... o xk; {x1} for k = 1.
    [[nodiscard]] ElementSet product(std::span<const Element> seq) const;

    /// x^k, k >= 1.
    [[nodiscard]] ElementSet power(Element x, int k) const;

private:
    int order_ = 0;
    std::vector<ElementSet> cells_;
};

struct AxiomFlags {
    bool additive_group = false;
    bool nonempty = false;
    bool hyperop_commutative = false;
    bool associative = false;
    bool distributive = false;
    bool sign_rule = false;
    bool strongly_distributive = false;

    [[nodiscard]] bool valid() const
    {
        return additive_group && nonempty && hyperop_commutative && associative && distributive &&
               sign_rule;
    }
};

/// First violated axiom with the offending triple (unused slots are -1).
struct AxiomViolation {
    ErrorKind kind;
    std::array<Element, 3> witness{-1, -1, -1};
    std::string detail;
};

struct AxiomReport {
    AxiomFlags flags;
    std::optional<AxiomViolation> violation;
    /// Witness for the strongly-distributive flag being false.
    std::optional<std::array<Element, 3>> non_strong_witness;
};

class AxiomError : public Error {
public:
    explicit AxiomError(AxiomViolation v);
    [[nodiscard]] const AxiomViolation& violation() const { return violation_; }

private:
    AxiomViolation violation_;
};

/// Exhaustive O(order^3) check of every multiplicative hyperring axiom.
/// Never throws on axiom failures; table shape errors throw Error(Parse).
AxiomReport check_axioms(int order, const std::vector<Element>& add,
                         const std::vector<ElementSet>& hyp);

/// A finite commutative multiplicative hyperring on the carrier {0..order-1}.
///
/// Immutable after construction. The designated identity ("1") defaults to
/// the smallest identity element; units are computed against it.
class Hyperring {
public:
    struct Options {
        /// Which identity plays the role of 1 when several exist.
        std::optional<Element> designated_identity;
        /// Skip axiom validation (constructions whose well-definedness is
        /// checked elsewhere). The report then only carries shape checks.
        bool skip_validation = false;
    };

    /// Validates and throws AxiomError naming the first violated axiom.
    static Hyperring validate(int order, std::vector<Element> add, std::vector<ElementSet> hyp,
                              Options opts);
    static Hyperring validate(int order, std::vector<Element> add, std::vector<ElementSet> hyp)
    {
        return validate(order, std::move(add), std::move(hyp), Options{});
    }

    /// Builds without rejecting; the axiom report is kept for inspection.
    static Hyperring unchecked(int order, std::vector<Element> add, std::vector<ElementSet> hyp,
                               Options opts);
    static Hyperring unchecked(int order, std::vector<Element> add, std::vector<ElementSet> hyp)
    {
        return unchecked(order, std::move(add), std::move(hyp), Options{});
    }

    [[nodiscard]] int order() const { return table_.order(); }
    [[nodiscard]] ElementSet carrier() const { return ElementSet::full(order()); }
    [[nodiscard]] Element zero() const { return zero_; }
    [[nodiscard]] Element add(Element x, Element y) const
    {
        return add_[static_cast<std::size_t>(x) * order() + y];
    }
    [[nodiscard]] Element neg(Element x) const { return neg_[x]; }
    [[nodiscard]] Element sub(Element x, Element y) const { return add(x, neg(y)); }
    [[nodiscard]] const std::vector<Element>& add_table() const { return add_; }

    [[nodiscard]] const HyperTable& table() const { return table_; }
    [[nodiscard]] const ElementSet& hyp(Element x, Element y) const { return table_(x, y); }

    /// X + Y = {x + y}
    [[nodiscard]] ElementSet sum(const ElementSet& xs, const ElementSet& ys) const;
    [[nodiscard]] ElementSet negate(const ElementSet& xs) const;

    [[nodiscard]] ElementSet hyperproduct(std::span<const Element> seq) const;
    [[nodiscard]] ElementSet hyperproduct(std::initializer_list<Element> seq) const
    {
        return hyperproduct(std::span<const Element>(seq.begin(), seq.size()));
    }
    /// Throws Error(EmptyOperand) if any operand is empty.
    [[nodiscard]] ElementSet subset_hyperproduct(std::span<const ElementSet> seq) const;
    [[nodiscard]] ElementSet power(Element x, int k) const { return table_.power(x, k); }

    [[nodiscard]] const ElementSet& identities() const { return identities_; }
    [[nodiscard]] bool has_identity() const { return one_.has_value(); }
    /// Throws Error(NoIdentity) when the ring has none.
    [[nodiscard]] Element one() const;
    /// Empty when there is no identity.
    [[nodiscard]] const ElementSet& units() const { return units_; }
    [[nodiscard]] ElementSet non_units() const { return carrier() - units_; }

    [[nodiscard]] const AxiomReport& report() const { return report_; }
    [[nodiscard]] const AxiomFlags& flags() const { return report_.flags; }
    [[nodiscard]] bool is_valid() const { return report_.flags.valid(); }

    [[nodiscard]] const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

private:
    Hyperring(int order, std::vector<Element> add, std::vector<ElementSet> hyp, Options opts,
              bool throw_on_violation);

    HyperTable table_;
    std::vector<Element> add_;
    std::vector<Element> neg_;
    Element zero_ = 0;
    ElementSet identities_;
    std::optional<Element> one_;
    ElementSet units_;
    AxiomReport report_;
    std::string name_;
};

/// Same as Hyperring::validate; kept under the operation's name.
inline Hyperring validate_hyperring(int order, std::vector<Element> add,
                                    std::vector<ElementSet> hyp)
{
    return Hyperring::validate(order, std::move(add), std::move(hyp));
}

/// Z_m with a o b = {a*t*b mod m : t in T}.
Hyperring build_zmt(int m, const std::vector<int>& T);

/// Elements e with a in a o e for every a.
ElementSet identity_elements(const HyperTable& table);
/// {x : one in x o y for some y}
ElementSet unit_elements(const HyperTable& table, Element one);

}  // namespace hyper
