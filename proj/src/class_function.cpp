#include "sn/class_function.hpp"

#include "sn/error.hpp"

namespace sn {

Int conjugacy_class_size(const partition& cycle_type) {
    Int centralizer = 1;
    int run_len = 0, run_count = 0;
    auto flush = [&] {
        for (int c = 1; c <= run_count; ++c) centralizer *= c; // m_l!
    };
    for (int part : cycle_type.parts()) {
        centralizer *= part; // l^m_l, one factor per cycle
        if (part == run_len) {
            ++run_count;
        } else {
            flush();
            run_len = part;
            run_count = 1;
        }
    }
    flush();
    return factorial(cycle_type.n()) / centralizer;
}

class_function::class_function(int n, std::vector<Rat> values)
    : n_(n), values_(std::move(values)) {}

class_function class_function::zero(int n) {
    return class_function(n, std::vector<Rat>(enumerate_partitions(n).size(), Rat(0)));
}

class_function class_function::constant(int n, const Rat& value) {
    return class_function(n, std::vector<Rat>(enumerate_partitions(n).size(), value));
}

class_function class_function::class_indicator(int n, const std::vector<partition>& types) {
    cycle_type_index idx(n);
    class_function f = zero(n);
    for (const partition& t : types) f.values_[idx.id_of(t)] = 1;
    return f;
}

const Rat& class_function::at(const partition& type) const {
    cycle_type_index idx(n_);
    return values_[idx.id_of(type)];
}

class_function& class_function::operator+=(const class_function& other) {
    if (n_ != other.n_) throw domain_error("degree mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

class_function& class_function::operator-=(const class_function& other) {
    if (n_ != other.n_) throw domain_error("degree mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

class_function& class_function::operator*=(const Rat& scalar) {
    for (Rat& v : values_) v *= scalar;
    return *this;
}

Rat class_function::inner(const class_function& other) const {
    if (n_ != other.n_) throw domain_error("degree mismatch");
    class_context ctx(n_);
    Rat sum = 0;
    for (int c = 0; c < ctx.class_count(); ++c)
        sum += Rat(ctx.class_size(c)) * values_[c] * other.values_[c];
    return sum / Rat(factorial(n_));
}

class_context::class_context(int n) : n_(n), index_(n) {
    sizes_.reserve(index_.count());
    for (int c = 0; c < index_.count(); ++c)
        sizes_.push_back(conjugacy_class_size(index_.type(c)));
}

int class_context::identity_class() const {
    return index_.id_of(partition(std::vector<int>(n_, 1)));
}

} // namespace sn
