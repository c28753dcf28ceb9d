#include "sn/group_function.hpp"

#include "sn/error.hpp"

namespace sn {

group_function::group_function(int n)
    : n_(n), values_(static_cast<std::size_t>(group_order(n)), Rat(0)) {
    if (n > 9) throw capacity_error("dense group functions limited to n <= 9");
}

group_function::group_function(int n, std::vector<Rat> values) : n_(n), values_(std::move(values)) {
    if (static_cast<long long>(values_.size()) != group_order(n))
        throw domain_error("value vector must have length n!");
}

group_function group_function::constant(int n, const Rat& value) {
    group_function f(n);
    for (Rat& v : f.values_) v = value;
    return f;
}

group_function group_function::indicator(const permutation_set& set) {
    group_function f(set.n());
    for (long long r : set.ranks()) f.values_[static_cast<std::size_t>(r)] = 1;
    return f;
}

group_function& group_function::operator+=(const group_function& other) {
    if (n_ != other.n_) throw domain_error("degree mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

group_function& group_function::operator-=(const group_function& other) {
    if (n_ != other.n_) throw domain_error("degree mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

group_function& group_function::operator*=(const Rat& scalar) {
    for (Rat& v : values_) v *= scalar;
    return *this;
}

group_function group_function::operator+(const group_function& other) const {
    group_function out = *this;
    out += other;
    return out;
}

group_function group_function::operator-(const group_function& other) const {
    group_function out = *this;
    out -= other;
    return out;
}

bool group_function::is_zero() const {
    for (const Rat& v : values_)
        if (v != 0) return false;
    return true;
}

Rat inner_product(const group_function& f, const group_function& g) {
    if (f.n() != g.n()) throw domain_error("degree mismatch");
    Rat sum = 0;
    for (std::size_t i = 0; i < f.values().size(); ++i)
        sum += f.values()[i] * g.values()[i];
    return sum / Rat(factorial(f.n()));
}

} // namespace sn
