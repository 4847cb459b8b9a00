#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace poltel {

using SourceId = std::uint32_t;

enum class SourceKind { quantum, classical };

/// One independent, unit-variance noise source.
struct NoiseSource {
    SourceId id = 0;
    SourceKind kind = SourceKind::quantum;
    /// Links the (x, p) sources of one elementary quantum mode. Empty for classical sources.
    std::optional<std::uint32_t> pair;
    bool is_x = true;
};

struct QuantumPair {
    SourceId x;
    SourceId p;
};

/// Allocates noise sources for one network. Not thread-safe: a registry
/// belongs to a single builder (one protocol run).
class SourceRegistry {
public:
    QuantumPair new_quantum_pair();
    SourceId new_classical();

    const NoiseSource& source(SourceId id) const;
    bool is_quantum(SourceId id) const;
    std::size_t size() const { return sources_.size(); }
    std::span<const QuantumPair> pairs() const { return pairs_; }

private:
    std::vector<NoiseSource> sources_;
    std::vector<QuantumPair> pairs_;
};

/// Linear form over noise sources, kept sorted by source id.
class FluctuationVector {
public:
    using Term = std::pair<SourceId, double>;

    FluctuationVector() = default;
    FluctuationVector(std::initializer_list<Term> terms);

    static FluctuationVector unit(SourceId id, double coefficient = 1.0);

    double coefficient(SourceId id) const;
    std::span<const Term> terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    FluctuationVector& operator+=(const FluctuationVector& other);
    FluctuationVector& operator-=(const FluctuationVector& other);
    FluctuationVector& operator*=(double scale);

    friend FluctuationVector operator+(FluctuationVector a, const FluctuationVector& b) { return a += b; }
    friend FluctuationVector operator-(FluctuationVector a, const FluctuationVector& b) { return a -= b; }
    friend FluctuationVector operator*(double s, FluctuationVector v) { return v *= s; }
    friend FluctuationVector operator*(FluctuationVector v, double s) { return v *= s; }
    friend FluctuationVector operator-(FluctuationVector v) { return v *= -1.0; }

    /// Keeps only the terms whose source has the given kind.
    FluctuationVector filtered(const SourceRegistry& registry, SourceKind kind) const;

private:
    void add_scaled(const FluctuationVector& other, double scale);
    std::vector<Term> terms_;
};

struct VarianceParts {
    double quantum = 0.0;
    double classical = 0.0;
    double total() const { return quantum + classical; }
};

double variance(const FluctuationVector& v);
VarianceParts variance_parts(const SourceRegistry& registry, const FluctuationVector& v);
double covariance(const FluctuationVector& u, const FluctuationVector& v);

/// Symplectic form between an x-like vector u and a p-like vector v:
/// sum over quantum pairs of u[x]v[p] - u[p]v[x]. For a single mode,
/// symplectic_form(xPlus, xMinus) == 1 for any canonical mode.
double symplectic_form(const SourceRegistry& registry, const FluctuationVector& u, const FluctuationVector& v);

double symplectic_product(const SourceRegistry& registry, const FluctuationVector& x, const FluctuationVector& p);

}  // namespace poltel
