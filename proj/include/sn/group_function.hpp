#pragma once

#include "sn/permutation_set.hpp"
#include "sn/rational.hpp"

#include <vector>

namespace sn {

/// Exact rational function on S_n, dense over lexicographic ranks.
class group_function {
public:
    group_function() = default;
    explicit group_function(int n);
    group_function(int n, std::vector<Rat> values);
    static group_function constant(int n, const Rat& value);
    static group_function indicator(const permutation_set& set);

    int n() const { return n_; }
    long long length() const { return static_cast<long long>(values_.size()); }
    const Rat& operator[](long long rank) const { return values_[static_cast<std::size_t>(rank)]; }
    Rat& operator[](long long rank) { return values_[static_cast<std::size_t>(rank)]; }
    const std::vector<Rat>& values() const { return values_; }

    group_function& operator+=(const group_function& other);
    group_function& operator-=(const group_function& other);
    group_function& operator*=(const Rat& scalar);
    group_function operator+(const group_function& other) const;
    group_function operator-(const group_function& other) const;
    bool operator==(const group_function& other) const = default;

    bool is_zero() const;

private:
    int n_ = 0;
    std::vector<Rat> values_;
};

/// <f,g> = (1/n!) sum_sigma f(sigma) g(sigma).
Rat inner_product(const group_function& f, const group_function& g);

inline Rat norm_squared(const group_function& f) { return inner_product(f, f); }

} // namespace sn
