#pragma once

#include <map>
#include <vector>

#include "lpa/element.hpp"

namespace lpa {

/// Incremental row space over Q with normal monomials as coordinates.
/// Rows are kept in echelon form keyed by their leading monomial (least in
/// the canonical term order), leading coefficient 1. Exact arithmetic
/// throughout, so rank is exact.
class RowSpan {
public:
    explicit RowSpan(const Graph& g) : graph_(&g), rows_(MonomialOrder{&g}) {}

    /// Reduces x against the stored rows. If a nonzero remainder is left it
    /// becomes a new row and the rank grows; returns whether it did.
    bool insert(Element x);

    /// Reduction without insertion; true iff x lies in the current span.
    bool contains(Element x) const;

    int rank() const { return static_cast<int>(rows_.size()); }

    /// Rows added since construction, in insertion order (used to seed the
    /// next growth level).
    const std::vector<Element>& inserted_rows() const { return inserted_; }

private:
    const Graph* graph_;
    std::map<Monomial, Element, MonomialOrder> rows_;
    std::vector<Element> inserted_;

    Element reduce(Element x) const;
};

/// Rank of a finite family of elements.
int rank_of(const Graph& g, const std::vector<Element>& xs);

}  // namespace lpa
