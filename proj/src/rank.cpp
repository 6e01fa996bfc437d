#include "lpa/rank.hpp"

namespace lpa {

Element RowSpan::reduce(Element x) const {
    while (!x.is_zero()) {
        const auto& [lead, coeff] = *x.terms().begin();
        auto it = rows_.find(lead);
        if (it == rows_.end()) break;
        x = x - it->second.scaled(coeff);
    }
    return x;
}

bool RowSpan::insert(Element x) {
    x = reduce(std::move(x));
    if (x.is_zero()) return false;
    const auto& [lead, coeff] = *x.terms().begin();
    Element row = x.scaled(Rational(1) / coeff);
    rows_.emplace(lead, row);
    inserted_.push_back(std::move(row));
    return true;
}

bool RowSpan::contains(Element x) const { return reduce(std::move(x)).is_zero(); }

int rank_of(const Graph& g, const std::vector<Element>& xs) {
    RowSpan span(g);
    for (const Element& x : xs) span.insert(x);
    return span.rank();
}

}  // namespace lpa
