#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/rational.hpp"

namespace lpa {

/// A spanning monomial alpha * beta^ of the Leavitt path algebra: a real
/// path followed by the ghost of another path with the same range. `beta`
/// is stored as a real path and read reversed-and-starred.
///
/// A monomial is *normal* unless alpha and beta both end with the same
/// edge and that edge is the distinguished edge of its (regular) source --
/// exactly the pattern the CK-2 rewrite eliminates. Normal monomials form
/// the canonical linear basis.
struct Monomial {
    Path alpha;
    Path beta;

    int degree() const { return alpha.length() - beta.length(); }

    static Monomial vertex(VertexId v) {
        return Monomial{Path::at_vertex(v), Path::at_vertex(v)};
    }
    static Monomial real(const Graph& g, const Path& p) {
        return Monomial{p, Path::at_vertex(path_range(g, p))};
    }
    static Monomial ghost(const Graph& g, const Path& p) {
        return Monomial{Path::at_vertex(path_range(g, p)), p};
    }

    bool operator==(const Monomial& o) const { return alpha == o.alpha && beta == o.beta; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

bool monomial_is_valid(const Graph& g, const Monomial& m);
bool monomial_is_normal(const Graph& g, const Monomial& m);
std::string monomial_to_string(const Graph& g, const Monomial& m);

/// Canonical term order: (degree, |alpha|, alpha edge names, beta edge
/// names, base vertex name). Fixes printed output and pivot choice.
struct MonomialOrder {
    const Graph* g = nullptr;
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// A finite rational-linear combination of normal monomials: the working
/// representation of elements of L_Q(E). Normal form is canonical, so
/// equality is term-map equality. Elements are immutable values; a
/// default-constructed Element is the zero of every graph.
class Element {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    Element() : terms_(MonomialOrder{nullptr}) {}
    explicit Element(const Graph& g) : graph_(&g), terms_(MonomialOrder{&g}) {}

    static Element zero(const Graph& g) { return Element(g); }
    static Element vertex(const Graph& g, VertexId v);
    static Element edge(const Graph& g, EdgeId e);
    static Element ghost_edge(const Graph& g, EdgeId e);
    static Element path(const Graph& g, const Path& p);
    static Element ghost_path(const Graph& g, const Path& p);
    /// Normalizes, so the stored term map is always in normal form.
    static Element monomial(const Graph& g, const Monomial& m,
                            const Rational& coeff = 1);

    const Graph* graph() const { return graph_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    /// Coefficient of a (normal) monomial; zero if absent.
    Rational coefficient(const Monomial& m) const;

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element operator*(const Element& o) const;
    Element scaled(const Rational& q) const;

    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    /// Splits by degree |alpha| - |beta|; the components sum back to *this.
    std::map<int, Element> degree_components() const;

    /// Canonical printout in term order; ghost edges carry a trailing '^'.
    /// Reparses to an equal Element under the expression grammar.
    std::string to_string() const;

    /// Adds coeff * m after CK-2 normalization of m. The workhorse for
    /// building elements from raw monomials.
    void add_term(const Monomial& m, const Rational& coeff);

private:
    const Graph* graph_ = nullptr;
    TermMap terms_;

    void add_normal(const Monomial& m, const Rational& coeff);
    const Graph& require_graph() const;
    static const Graph& common_graph(const Element& a, const Element& b);

    friend Element mono_product(const Graph& g, const Monomial& m1, const Monomial& m2);
};

/// Product of two monomials as an Element (possibly zero): the middle
/// ghost/real pair collapses by CK-1 prefix matching, the survivor is
/// CK-2-normalized.
Element mono_product(const Graph& g, const Monomial& m1, const Monomial& m2);

/// Canonical form of an arbitrary term list over g.
Element normal_form(const Graph& g,
                    const std::vector<std::pair<Monomial, Rational>>& terms);

// Spec-level aliases over the operators; mixed-graph operands throw.
Element element_add(const Element& x, const Element& y);
Element element_scale(const Rational& q, const Element& x);
Element element_mul(const Graph& g, const Element& x, const Element& y);

/// Sum of all vertices: the multiplicative identity (finite graph).
Element identity_element(const Graph& g);

/// Standard polynomial S_N: sum over all permutations of the arguments of
/// sgn(sigma) * x_sigma(1) ... x_sigma(N). Refuses N > cap (factorial
/// blowup) and N < 2.
Element standard_identity_eval(const Graph& g, const std::vector<Element>& args,
                               int cap = 8);

}  // namespace lpa
