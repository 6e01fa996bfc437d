#include "lpa/element.hpp"

#include <algorithm>

namespace lpa {

bool monomial_is_valid(const Graph& g, const Monomial& m) {
    return path_is_valid(g, m.alpha) && path_is_valid(g, m.beta) &&
           path_range(g, m.alpha) == path_range(g, m.beta);
}

bool monomial_is_normal(const Graph& g, const Monomial& m) {
    if (m.alpha.empty() || m.beta.empty()) return true;
    EdgeId ea = m.alpha.edges.back();
    EdgeId eb = m.beta.edges.back();
    return !(ea == eb && ea == g.distinguished_edge(g.source(ea)));
}

std::string monomial_to_string(const Graph& g, const Monomial& m) {
    if (m.alpha.empty() && m.beta.empty()) return g.vertex_name(m.alpha.base);
    std::string s;
    for (EdgeId e : m.alpha.edges) {
        if (!s.empty()) s += '*';
        s += g.edge(e).name;
    }
    for (auto it = m.beta.edges.rbegin(); it != m.beta.edges.rend(); ++it) {
        if (!s.empty()) s += '*';
        s += g.edge(*it).name;
        s += '^';
    }
    return s;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.alpha.length() != b.alpha.length())
        return a.alpha.length() < b.alpha.length();
    auto lex = [&](const std::vector<EdgeId>& x, const std::vector<EdgeId>& y) {
        for (size_t i = 0; i < x.size(); ++i) {
            int rx = g->edge_name_rank(x[i]);
            int ry = g->edge_name_rank(y[i]);
            if (rx != ry) return rx < ry ? -1 : 1;
        }
        return 0;
    };
    if (int c = lex(a.alpha.edges, b.alpha.edges)) return c < 0;
    if (int c = lex(a.beta.edges, b.beta.edges)) return c < 0;
    // Only length-0 paths can still differ here, by their base vertex.
    VertexId va = a.alpha.empty() ? (a.beta.empty() ? a.alpha.base : path_source(*g, a.beta))
                                  : a.alpha.base;
    VertexId vb = b.alpha.empty() ? (b.beta.empty() ? b.alpha.base : path_source(*g, b.beta))
                                  : b.alpha.base;
    return g->vertex_name_rank(va) < g->vertex_name_rank(vb);
}

const Graph& Element::require_graph() const {
    if (!graph_) throw Error("operation requires an element bound to a graph");
    return *graph_;
}

const Graph& Element::common_graph(const Element& a, const Element& b) {
    if (a.graph_ && b.graph_ && a.graph_ != b.graph_)
        throw Error("mixed-graph operands");
    const Graph* g = a.graph_ ? a.graph_ : b.graph_;
    if (!g) throw Error("operation requires an element bound to a graph");
    return *g;
}

Element Element::vertex(const Graph& g, VertexId v) {
    Element x(g);
    x.add_normal(Monomial::vertex(v), 1);
    return x;
}

Element Element::edge(const Graph& g, EdgeId e) {
    return path(g, path_from_edges(g, {e}));
}

Element Element::ghost_edge(const Graph& g, EdgeId e) {
    return ghost_path(g, path_from_edges(g, {e}));
}

Element Element::path(const Graph& g, const Path& p) {
    Element x(g);
    x.add_term(Monomial::real(g, p), 1);
    return x;
}

Element Element::ghost_path(const Graph& g, const Path& p) {
    Element x(g);
    x.add_term(Monomial::ghost(g, p), 1);
    return x;
}

Element Element::monomial(const Graph& g, const Monomial& m, const Rational& coeff) {
    Element x(g);
    x.add_term(m, coeff);
    return x;
}

Rational Element::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_normal(const Monomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

// CK-2 cascade: while the junction pair is the distinguished edge e of a
// regular vertex v, rewrite alpha'e(beta'e)^ -> alpha'beta'^ minus the
// other ee^ junctions at v. Each round shortens the surviving monomial by
// two, so this terminates; the side terms are junction-normal because
// their last edge is not distinguished.
void Element::add_term(const Monomial& m, const Rational& coeff) {
    const Graph& g = require_graph();
    if (!monomial_is_valid(g, m))
        throw Error("malformed monomial: paths invalid or ranges differ");
    if (coeff == 0) return;
    Monomial cur = m;
    Rational c = coeff;
    while (!cur.alpha.empty() && !cur.beta.empty()) {
        EdgeId ea = cur.alpha.edges.back();
        if (ea != cur.beta.edges.back()) break;
        VertexId v = g.source(ea);
        if (ea != g.distinguished_edge(v)) break;
        cur.alpha.edges.pop_back();
        cur.beta.edges.pop_back();
        if (cur.alpha.empty()) cur.alpha.base = v;
        if (cur.beta.empty()) cur.beta.base = v;
        for (EdgeId f : g.out_edges(v)) {
            if (f == ea) continue;
            Monomial side = cur;
            side.alpha.edges.push_back(f);
            side.beta.edges.push_back(f);
            add_normal(side, -c);
        }
    }
    add_normal(cur, c);
}

Element Element::operator+(const Element& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    common_graph(*this, o);
    Element r = *this;
    for (const auto& [m, c] : o.terms_) r.add_normal(m, c);
    return r;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator-() const { return scaled(-1); }

Element Element::scaled(const Rational& q) const {
    Element r = graph_ ? Element(*graph_) : Element();
    if (q == 0) return r;
    r.terms_ = terms_;
    for (auto& [m, c] : r.terms_) c *= q;
    return r;
}

namespace {

// beta1^ * alpha2 collapses iff one path is a prefix of the other and the
// sources agree (the source check is what makes the empty cases right).
// Returns false for the zero product; otherwise *tail gets the uncollapsed
// remainder and *tail_is_real says which side survived.
bool collapse_middle(const Graph& g, const Path& b, const Path& a, Path* tail,
                     bool* tail_is_real) {
    size_t k = std::min(b.edges.size(), a.edges.size());
    for (size_t i = 0; i < k; ++i)
        if (b.edges[i] != a.edges[i]) return false;
    if (path_source(g, b) != path_source(g, a)) return false;
    if (b.edges.size() <= a.edges.size()) {
        tail->edges.assign(a.edges.begin() + k, a.edges.end());
        tail->base = tail->edges.empty() ? path_range(g, a)
                                         : g.source(tail->edges.front());
        *tail_is_real = true;
    } else {
        tail->edges.assign(b.edges.begin() + k, b.edges.end());
        tail->base = tail->edges.empty() ? path_range(g, b)
                                         : g.source(tail->edges.front());
        *tail_is_real = false;
    }
    return true;
}

}  // namespace

Element mono_product(const Graph& g, const Monomial& m1, const Monomial& m2) {
    Element r(g);
    Path tail;
    bool tail_is_real = false;
    if (!collapse_middle(g, m1.beta, m2.alpha, &tail, &tail_is_real)) return r;
    Monomial m;
    if (tail_is_real) {
        m.alpha = path_concat(g, m1.alpha, tail);
        m.beta = m2.beta;
    } else {
        m.alpha = m1.alpha;
        m.beta = path_concat(g, m2.beta, tail);
    }
    r.add_term(m, 1);
    return r;
}

Element Element::operator*(const Element& o) const {
    if (is_zero()) return *this;
    if (o.is_zero()) return o;
    const Graph& g = common_graph(*this, o);
    Element r(g);
    Path tail;
    bool tail_is_real = false;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            if (!collapse_middle(g, m1.beta, m2.alpha, &tail, &tail_is_real))
                continue;
            Monomial m;
            if (tail_is_real) {
                m.alpha = path_concat(g, m1.alpha, tail);
                m.beta = m2.beta;
            } else {
                m.alpha = m1.alpha;
                m.beta = path_concat(g, m2.beta, tail);
            }
            r.add_term(m, c1 * c2);
        }
    }
    return r;
}

bool Element::operator==(const Element& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

std::map<int, Element> Element::degree_components() const {
    std::map<int, Element> out;
    for (const auto& [m, c] : terms_) {
        auto [it, inserted] = out.emplace(m.degree(), graph_ ? Element(*graph_) : Element());
        it->second.add_normal(m, c);
    }
    return out;
}

std::string Element::to_string() const {
    if (is_zero()) return "0";
    const Graph& g = require_graph();
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                s += '-';
                a = -a;
            }
        } else {
            s += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (a != 1) {
            s += lpa::to_string(a);
            s += '*';
        }
        s += monomial_to_string(g, m);
        first = false;
    }
    return s;
}

Element normal_form(const Graph& g,
                    const std::vector<std::pair<Monomial, Rational>>& terms) {
    Element x(g);
    for (const auto& [m, c] : terms) x.add_term(m, c);
    return x;
}

Element element_add(const Element& x, const Element& y) { return x + y; }

Element element_scale(const Rational& q, const Element& x) { return x.scaled(q); }

Element element_mul(const Graph& g, const Element& x, const Element& y) {
    if ((x.graph() && x.graph() != &g) || (y.graph() && y.graph() != &g))
        throw Error("mixed-graph operands");
    return x * y;
}

Element identity_element(const Graph& g) {
    Element x(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        x.add_term(Monomial::vertex(v), 1);
    return x;
}

Element standard_identity_eval(const Graph& g, const std::vector<Element>& args,
                               int cap) {
    int n = static_cast<int>(args.size());
    if (n < 2) throw Error("standard polynomial needs at least 2 arguments");
    if (n > cap)
        throw Error("standard polynomial with " + std::to_string(n) +
                    " arguments exceeds the cap of " + std::to_string(cap));
    for (const Element& x : args)
        if (x.graph() && x.graph() != &g) throw Error("mixed-graph operands");

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Element sum(g);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Element prod = args[perm[0]];
        for (int i = 1; i < n && !prod.is_zero(); ++i)
            prod = element_mul(g, prod, args[perm[i]]);
        sum = (inversions % 2 == 0) ? sum + prod : sum - prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

}  // namespace lpa
