#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyper/absorbing.hpp"
#include "hyper/hyperring.hpp"
#include "hyper/ideals.hpp"

namespace hyper {

// Direct products. The pair (x, y) is encoded as x * |B| + y.

struct DirectProduct {
    Hyperring ring;
    int left_order = 0;
    int right_order = 0;

    [[nodiscard]] Element pair(Element x, Element y) const { return x * right_order + y; }
    [[nodiscard]] Element left(Element p) const { return p / right_order; }
    [[nodiscard]] Element right(Element p) const { return p % right_order; }
    /// Q1 x Q2 as a subset of the product carrier.
    [[nodiscard]] ElementSet embed(const ElementSet& q1, const ElementSet& q2) const;
};

/// Componentwise addition and hyperproduct; validated. The designated
/// identity is the pair of the factors' designated identities.
DirectProduct direct_product(const Hyperring& a, const Hyperring& b);

// 2x2 hypermatrices. A matrix (a b; c d) is encoded as
// a + n*b + n^2*c + n^3*d for n = |A|. Entry (i,j) of a product ranges over
// the sum-set x_i1 o y_1j + x_i2 o y_2j, each entry chosen independently.
// Products are computed on demand, so the carrier may exceed ElementSet's
// width; materialize() gives a table-backed view for small bases.

class MatrixRing {
public:
    /// Throws BudgetExceeded when |A|^4 exceeds max_order.
    explicit MatrixRing(const Hyperring& base, int m = 2, int max_order = 20736);

    [[nodiscard]] const Hyperring& base() const { return *base_; }
    [[nodiscard]] int order() const { return order_; }
    [[nodiscard]] int encode(Element a, Element b, Element c, Element d) const;
    [[nodiscard]] std::array<Element, 4> entries(int m) const;

    [[nodiscard]] int add(int x, int y) const;
    /// x o y, sorted. Not commutative in general.
    [[nodiscard]] std::vector<int> product(int x, int y) const;
    /// Left fold over a sequence, sorted.
    [[nodiscard]] std::vector<int> product(std::span<const int> seq) const;

    /// Every entry lies in Q.
    [[nodiscard]] bool in_lift(int m, const ElementSet& q) const;
    /// The product of the sequence lies in M_2(Q).
    [[nodiscard]] bool product_in_lift(std::span<const int> seq, const ElementSet& q) const;
    /// M_2(Q) is closed under subtraction and absorbs products on both sides.
    [[nodiscard]] bool lift_is_hyperideal(const ElementSet& q) const;

    /// Table-backed ring (axioms recorded, not enforced) when the order fits
    /// in an ElementSet. Scans over it must use ScanOptions::ordered.
    [[nodiscard]] std::optional<Hyperring> materialize() const;
    /// M_2(Q) inside the materialized carrier.
    [[nodiscard]] ElementSet lift(const ElementSet& q) const;

private:
    const Hyperring* base_;
    int n_;
    int order_;
};

// Monomials t x^d over A with d <= max_degree and the rule
// t x^n <> s x^m = (t o s) x^(n+m).

struct Monomial {
    Element coeff = 0;
    int degree = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

class MonomialExtension {
public:
    MonomialExtension(const Hyperring& base, int max_degree);

    [[nodiscard]] const Hyperring& base() const { return *base_; }
    [[nodiscard]] int max_degree() const { return max_degree_; }

    /// Coefficient set and total degree of a monomial product. Throws
    /// DegreeOverflow when the degree exceeds max_degree.
    [[nodiscard]] std::pair<ElementSet, int> multiply(std::span<const Monomial> seq) const;

    /// Monomials (c, d) with c a unit of A and d = 0 are the units.
    [[nodiscard]] bool is_unit(const Monomial& m) const;

    /// Membership in Q[x]: every coefficient of the product lies in Q.
    [[nodiscard]] bool product_in(std::span<const Monomial> seq, const ElementSet& q) const;

    /// The query over non-unit monomials of degree at most max_degree / u,
    /// so no product can overflow. Witness tuples index into `letters`.
    [[nodiscard]] Verdict check(const ElementSet& q, const AbsorbingQuery& query,
                                std::vector<Monomial>* letters = nullptr) const;

private:
    const Hyperring* base_;
    int max_degree_;
};

// Good homomorphisms: theta(x + y) = theta(x) + theta(y) and
// theta(x o y) = theta(x) o theta(y) as sets.

struct GoodHomomorphism {
    Hyperring source;
    Hyperring target;
    std::vector<Element> map;

    /// First violated condition, or nullopt.
    [[nodiscard]] std::optional<std::string> violation() const;
    [[nodiscard]] bool surjective() const;
    [[nodiscard]] ElementSet kernel() const;
    [[nodiscard]] ElementSet image(const ElementSet& xs) const;
    [[nodiscard]] ElementSet preimage(const ElementSet& ys) const;
};

/// Throws PreconditionUnmet when the map is not total or not good.
GoodHomomorphism make_good_homomorphism(Hyperring source, Hyperring target,
                                        std::vector<Element> map);

struct TransportReport {
    ElementSet preimage;
    ElementSet image;
    /// The unmet precondition of the image transfer, if any.
    std::optional<std::string> image_precondition;
    /// theta(x) is a non-unit for every non-unit x.
    bool non_units_preserved = false;
};

/// theta^-1(Q2) and theta(Q1). The image transfer additionally needs theta
/// surjective, Ker(theta) inside Q1 and Q1 a C-hyperideal; the first unmet
/// condition is recorded. Q is read as a hyperideal of the target
/// for the preimage and of the source for the image.
TransportReport transport_checks(const GoodHomomorphism& hom, const ElementSet& target_q,
                                 const ElementSet& source_q);

/// Throws PreconditionUnmet naming the failed condition.
ElementSet transport_image(const GoodHomomorphism& hom, const ElementSet& source_q);

// Quotients by a hyperideal: (x + Q) o (y + Q) = {z + Q : z in x o y}.

struct QuotientRing {
    Hyperring ring;
    /// Cosets in order of their least member; coset i is element i.
    std::vector<ElementSet> cosets;
    std::vector<Element> projection;

    [[nodiscard]] ElementSet image(const ElementSet& xs) const;
};

/// Throws NotAHyperideal, IllDefinedQuotient (representative dependence, with
/// the offending pair in the message), or AxiomError from validation.
QuotientRing quotient(const Hyperring& a, const ElementSet& q);
GoodHomomorphism quotient_map(const Hyperring& a, const QuotientRing& qr);

// The fundamental ring A / gamma*.

struct FundamentalRing {
    Hyperring ring;
    /// gamma* classes, ordered by least member.
    std::vector<ElementSet> classes;
    std::vector<Element> class_of;

    /// Q is a union of classes.
    [[nodiscard]] bool saturated(const ElementSet& q) const;
    /// Q / gamma* as a set of class indices.
    [[nodiscard]] ElementSet image(const ElementSet& q) const;
};

/// Classes are the cosets of the fundamental kernel. Operations are induced
/// by representatives and checked for representative independence (throws
/// IllDefinedQuotient) before validation as a ring.
FundamentalRing fundamental_ring(const Hyperring& a, const CClassCache& cache);

/// gamma* computed literally: co-membership in sets of U, then transitive
/// closure. Exponential; for cross-checks on small rings.
std::vector<ElementSet> gamma_classes_literal(const Hyperring& a, const CClassCache& cache);

// Localization S^-1 A. Fractions (x, r) with x in A, r in S, and
// (x1, r1) ~ (x2, r2) iff r o r1 o x2 = r o r2 o x1 for some r in S.

enum class ClosureMode {
    /// r o s meets S for all r, s in S; denominators outside S are dropped.
    Weak,
    /// r o s lies in S for all r, s in S.
    Strict,
};

struct Localization {
    const Hyperring* base = nullptr;
    ElementSet s;
    ClosureMode mode = ClosureMode::Weak;
    /// Classes of fractions; fraction (x, r) is x * order + r.
    std::vector<std::vector<std::pair<Element, Element>>> classes;
    std::vector<int> class_of;
    /// Set-valued tables over class indices.
    HyperTable oplus;
    HyperTable odot;
    bool well_defined = true;
    std::optional<std::string> ill_defined_witness;

    [[nodiscard]] int order() const { return static_cast<int>(classes.size()); }
    [[nodiscard]] Element fraction(Element x, Element r) const;
    /// a -> a/1.
    [[nodiscard]] Element localize(Element a) const;
    /// S^-1 I = {a/s : a in I, s in S}.
    [[nodiscard]] ElementSet extend_ideal(const ElementSet& i) const;
    /// Identity elements and units of the odot table, against 1/1.
    [[nodiscard]] ElementSet units() const;
    [[nodiscard]] bool single_valued_addition() const;
    /// Validated hyperring view when oplus is single-valued.
    [[nodiscard]] std::optional<Hyperring> as_hyperring() const;
};

/// Throws NoIdentity, NotClosed (S not multiplicatively closed or 1 not in
/// S) or NotAnEquivalence (with the failing triple).
Localization localization(const Hyperring& a, const ElementSet& s,
                          ClosureMode mode = ClosureMode::Weak);

}  // namespace hyper
