#include "poltel/fluct.hpp"

#include <algorithm>
#include <stdexcept>

namespace poltel {

QuantumPair SourceRegistry::new_quantum_pair() {
    const auto pair_index = static_cast<std::uint32_t>(pairs_.size());
    const auto x = static_cast<SourceId>(sources_.size());
    sources_.push_back({x, SourceKind::quantum, pair_index, true});
    const auto p = static_cast<SourceId>(sources_.size());
    sources_.push_back({p, SourceKind::quantum, pair_index, false});
    pairs_.push_back({x, p});
    return pairs_.back();
}

SourceId SourceRegistry::new_classical() {
    const auto id = static_cast<SourceId>(sources_.size());
    sources_.push_back({id, SourceKind::classical, std::nullopt, true});
    return id;
}

const NoiseSource& SourceRegistry::source(SourceId id) const {
    if (id >= sources_.size()) {
        throw std::out_of_range("unknown noise source id");
    }
    return sources_[id];
}

bool SourceRegistry::is_quantum(SourceId id) const { return source(id).kind == SourceKind::quantum; }

FluctuationVector::FluctuationVector(std::initializer_list<Term> terms) {
    for (const auto& [id, c] : terms) {
        add_scaled(unit(id, c), 1.0);
    }
}

FluctuationVector FluctuationVector::unit(SourceId id, double coefficient) {
    FluctuationVector v;
    if (coefficient != 0.0) {
        v.terms_.emplace_back(id, coefficient);
    }
    return v;
}

double FluctuationVector::coefficient(SourceId id) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), id,
                               [](const Term& t, SourceId key) { return t.first < key; });
    return (it != terms_.end() && it->first == id) ? it->second : 0.0;
}

void FluctuationVector::add_scaled(const FluctuationVector& other, double scale) {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            merged.emplace_back(b->first, scale * b->second);
            ++b;
        } else {
            const double c = a->second + scale * b->second;
            if (c != 0.0) {
                merged.emplace_back(a->first, c);
            }
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
}

FluctuationVector& FluctuationVector::operator+=(const FluctuationVector& other) {
    add_scaled(other, 1.0);
    return *this;
}

FluctuationVector& FluctuationVector::operator-=(const FluctuationVector& other) {
    add_scaled(other, -1.0);
    return *this;
}

FluctuationVector& FluctuationVector::operator*=(double scale) {
    if (scale == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto& term : terms_) {
        term.second *= scale;
    }
    return *this;
}

FluctuationVector FluctuationVector::filtered(const SourceRegistry& registry, SourceKind kind) const {
    FluctuationVector out;
    for (const auto& term : terms_) {
        if (registry.source(term.first).kind == kind) {
            out.terms_.push_back(term);
        }
    }
    return out;
}

double variance(const FluctuationVector& v) {
    double sum = 0.0;
    for (const auto& [id, c] : v.terms()) {
        sum += c * c;
    }
    return sum;
}

VarianceParts variance_parts(const SourceRegistry& registry, const FluctuationVector& v) {
    VarianceParts parts;
    for (const auto& [id, c] : v.terms()) {
        (registry.is_quantum(id) ? parts.quantum : parts.classical) += c * c;
    }
    return parts;
}

double covariance(const FluctuationVector& u, const FluctuationVector& v) {
    double sum = 0.0;
    auto a = u.terms().begin();
    auto b = v.terms().begin();
    while (a != u.terms().end() && b != v.terms().end()) {
        if (a->first < b->first) {
            ++a;
        } else if (b->first < a->first) {
            ++b;
        } else {
            sum += a->second * b->second;
            ++a;
            ++b;
        }
    }
    return sum;
}

double symplectic_form(const SourceRegistry& registry, const FluctuationVector& u, const FluctuationVector& v) {
    const auto pairs = registry.pairs();
    double sum = 0.0;
    for (const auto& [id, c] : u.terms()) {
        const auto& src = registry.source(id);
        if (src.kind != SourceKind::quantum) {
            continue;
        }
        const auto& pair = pairs[*src.pair];
        sum += src.is_x ? c * v.coefficient(pair.p) : -c * v.coefficient(pair.x);
    }
    return sum;
}

double symplectic_product(const SourceRegistry& registry, const FluctuationVector& x, const FluctuationVector& p) {
    return symplectic_form(registry, x, p);
}

}  // namespace poltel
