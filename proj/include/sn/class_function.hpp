#pragma once

#include "sn/partition.hpp"
#include "sn/permutation.hpp"
#include "sn/rational.hpp"

#include <vector>

namespace sn {

/// Size of the conjugacy class with the given cycle type, by the centralizer
/// order n! / prod(l^m_l * m_l!).
Int conjugacy_class_size(const partition& cycle_type);

/// Exact rational function constant on conjugacy classes, stored as one value
/// per cycle type of S_n (descending lex order of types).
class class_function {
public:
    class_function() = default;
    class_function(int n, std::vector<Rat> values);
    static class_function zero(int n);
    static class_function constant(int n, const Rat& value);
    /// Indicator of a union of classes.
    static class_function class_indicator(int n, const std::vector<partition>& types);

    int n() const { return n_; }
    int class_count() const { return static_cast<int>(values_.size()); }
    const std::vector<Rat>& values() const { return values_; }
    const Rat& value(int class_id) const { return values_[class_id]; }
    Rat& value(int class_id) { return values_[class_id]; }
    const Rat& at(const partition& type) const;

    class_function& operator+=(const class_function& other);
    class_function& operator-=(const class_function& other);
    class_function& operator*=(const Rat& scalar);
    bool operator==(const class_function& other) const = default;

    /// <f,g> = (1/n!) sum over classes of size * f * conj(g); values are real.
    Rat inner(const class_function& other) const;

private:
    int n_ = 0;
    std::vector<Rat> values_;
};

/// Shared per-degree context: cycle types in canonical order and class sizes.
class class_context {
public:
    explicit class_context(int n);

    int n() const { return n_; }
    const cycle_type_index& types() const { return index_; }
    int class_count() const { return index_.count(); }
    const Int& class_size(int id) const { return sizes_[id]; }
    const std::vector<Int>& class_sizes() const { return sizes_; }
    int identity_class() const;

private:
    int n_;
    cycle_type_index index_;
    std::vector<Int> sizes_;
};

} // namespace sn
