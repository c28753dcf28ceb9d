#include "sn/projector.hpp"

#include "sn/error.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <thread>

namespace sn {

namespace {

Int to_int(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    Int hi = static_cast<std::uint64_t>(u >> 64);
    Int out = (hi << 64) + static_cast<std::uint64_t>(u);
    return neg ? -out : out;
}

void parallel_chunks(long long count, int threads, const std::function<void(long long, long long)>& body) {
    if (threads <= 1 || count < 4096) {
        body(0, count);
        return;
    }
    long long chunk = (count + threads - 1) / threads;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        long long lo = t * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

} // namespace

struct projection_engine::impl {
    int n;
    int threads;
    long long order;
    character_table chars;
    int class_count;

    std::vector<std::uint8_t> perms;  // rank-major one-line images, 1-based
    std::vector<std::uint8_t> invs;   // rank-major inverse images
    std::vector<std::uint8_t> class_of_rank;
    std::vector<int> key_stride;      // mixed-radix strides over cycle counts
    std::vector<std::int16_t> key_to_class;

    mutable std::once_flag table_once;
    mutable std::vector<std::uint8_t> product_table; // [sigma*order + pi] when n <= 7

    explicit impl(int n_, int threads_)
        : n(n_), threads(threads_ < 1 ? 1 : threads_), order(group_order(n_)),
          chars(character_table::compute(n_)), class_count(chars.count()) {
        if (n > 9) throw capacity_error("dense projection work limited to n <= 9");

        key_stride.assign(n + 2, 0);
        int stride = 1;
        for (int l = 1; l <= n; ++l) {
            key_stride[l] = stride;
            stride *= (n / l + 1);
        }
        key_to_class.assign(stride == 0 ? 1 : stride, -1);
        const auto& idx = chars.context().types();
        for (int c = 0; c < class_count; ++c) {
            int key = 0;
            for (int part : idx.type(c).parts()) key += key_stride[part];
            key_to_class[key] = static_cast<std::int16_t>(c);
        }

        perms.assign(static_cast<std::size_t>(order) * n, 0);
        invs.assign(static_cast<std::size_t>(order) * n, 0);
        class_of_rank.assign(static_cast<std::size_t>(order), 0);
        std::vector<int> im(n);
        for (int i = 0; i < n; ++i) im[i] = i + 1;
        long long r = 0;
        do {
            for (int i = 0; i < n; ++i) {
                perms[r * n + i] = static_cast<std::uint8_t>(im[i]);
                invs[r * n + (im[i] - 1)] = static_cast<std::uint8_t>(i + 1);
            }
            class_of_rank[r] = static_cast<std::uint8_t>(class_id_of(&perms[r * n]));
            ++r;
        } while (std::next_permutation(im.begin(), im.end()));
    }

    int class_id_of(const std::uint8_t* images) const {
        unsigned seen = 0;
        int key = 0;
        for (int start = 0; start < n; ++start) {
            if (seen & (1u << start)) continue;
            int len = 0, x = start;
            while (!(seen & (1u << x))) {
                seen |= 1u << x;
                x = images[x] - 1;
                ++len;
            }
            key += key_stride[len];
        }
        return key_to_class[key];
    }

    int product_class_arrays(const std::uint8_t* sigma, const std::uint8_t* inv_pi) const {
        std::uint8_t composed[16];
        for (int k = 0; k < n; ++k) composed[k] = sigma[inv_pi[k] - 1];
        return class_id_of(composed);
    }

    bool has_table() const { return order <= 5040; }

    const std::uint8_t* table() const {
        std::call_once(table_once, [this] {
            product_table.assign(static_cast<std::size_t>(order) * order, 0);
            parallel_chunks(order, threads, [this](long long lo, long long hi) {
                for (long long s = lo; s < hi; ++s) {
                    const std::uint8_t* sig = &perms[s * n];
                    std::uint8_t* row = &product_table[static_cast<std::size_t>(s) * order];
                    for (long long p = 0; p < order; ++p)
                        row[p] = static_cast<std::uint8_t>(product_class_arrays(sig, &invs[p * n]));
                }
            });
        });
        return product_table.data();
    }

    // ---- class profile of a dense function ------------------------------

    struct profile {
        Int denom;
        bool fast = false;
        std::vector<long long> fast_data; // [rank * class_count + c]
        std::vector<Int> big_data;
    };

    profile make_profile(const group_function& f) const {
        profile out;
        out.denom = 1;
        for (const Rat& v : f.values()) out.denom = lcm(out.denom, Int(denominator(v)));

        std::vector<long long> nums;
        bool fits = out.denom <= Int(std::int64_t(1) << 62);
        if (fits) {
            Int limit = Int(std::int64_t(1) << 62) / (order > 0 ? order : 1);
            nums.reserve(f.values().size());
            for (const Rat& v : f.values()) {
                Int scaled = numerator(v) * (out.denom / denominator(v));
                if (abs(scaled) > limit) {
                    fits = false;
                    break;
                }
                nums.push_back(scaled.convert_to<long long>());
            }
        }

        if (fits) {
            out.fast = true;
            out.fast_data.assign(static_cast<std::size_t>(order) * class_count, 0);
            const std::uint8_t* tab = has_table() ? table() : nullptr;
            parallel_chunks(order, threads, [&](long long lo, long long hi) {
                for (long long s = lo; s < hi; ++s) {
                    long long* acc = &out.fast_data[static_cast<std::size_t>(s) * class_count];
                    if (tab) {
                        const std::uint8_t* row = &tab[static_cast<std::size_t>(s) * order];
                        for (long long p = 0; p < order; ++p) {
                            long long v = nums[static_cast<std::size_t>(p)];
                            if (v) acc[row[p]] += v;
                        }
                    } else {
                        const std::uint8_t* sig = &perms[s * n];
                        for (long long p = 0; p < order; ++p) {
                            long long v = nums[static_cast<std::size_t>(p)];
                            if (v) acc[product_class_arrays(sig, &invs[p * n])] += v;
                        }
                    }
                }
            });
        } else {
            out.big_data.assign(static_cast<std::size_t>(order) * class_count, Int(0));
            const std::uint8_t* tab = has_table() ? table() : nullptr;
            parallel_chunks(order, threads, [&](long long lo, long long hi) {
                for (long long s = lo; s < hi; ++s) {
                    Int* acc = &out.big_data[static_cast<std::size_t>(s) * class_count];
                    for (long long p = 0; p < order; ++p) {
                        const Rat& v = f.values()[static_cast<std::size_t>(p)];
                        if (v == 0) continue;
                        int c = tab ? tab[static_cast<std::size_t>(s) * order + p]
                                    : product_class_arrays(&perms[s * n], &invs[p * n]);
                        acc[c] += numerator(v) * (out.denom / denominator(v));
                    }
                }
            });
        }
        return out;
    }

    /// Assemble sum_c weight[c] * N_c(sigma) / (n! * denom) for integer weights.
    group_function assemble(const profile& prof, const std::vector<long long>& weight) const {
        std::vector<Rat> vals(static_cast<std::size_t>(order));
        Int scale = factorial(n) * prof.denom;
        parallel_chunks(order, threads, [&](long long lo, long long hi) {
            for (long long s = lo; s < hi; ++s) {
                if (prof.fast) {
                    const long long* acc = &prof.fast_data[static_cast<std::size_t>(s) * class_count];
                    __int128 sum = 0;
                    for (int c = 0; c < class_count; ++c)
                        sum += static_cast<__int128>(weight[c]) * acc[c];
                    vals[static_cast<std::size_t>(s)] = Rat(to_int(sum), scale);
                } else {
                    const Int* acc = &prof.big_data[static_cast<std::size_t>(s) * class_count];
                    Int sum = 0;
                    for (int c = 0; c < class_count; ++c) sum += weight[c] * acc[c];
                    vals[static_cast<std::size_t>(s)] = Rat(sum, scale);
                }
            }
        });
        return group_function(n, std::move(vals));
    }

    std::vector<long long> projection_weight(const std::vector<int>& rows) const {
        std::vector<long long> weight(class_count, 0);
        for (int r : rows) {
            long long dim = chars.dimension(r);
            for (int c = 0; c < class_count; ++c) weight[c] += dim * chars.value(r, c);
        }
        return weight;
    }
};

projection_engine::projection_engine(int n, int threads)
    : impl_(std::make_unique<impl>(n, threads)) {}

projection_engine::~projection_engine() = default;

int projection_engine::n() const { return impl_->n; }
int projection_engine::threads() const { return impl_->threads; }
const character_table& projection_engine::table() const { return impl_->chars; }

group_function projection_engine::isotypic(const group_function& f, const partition& alpha) const {
    if (f.n() != impl_->n) throw domain_error("degree mismatch");
    auto prof = impl_->make_profile(f);
    return impl_->assemble(prof, impl_->projection_weight({impl_->chars.row_index(alpha)}));
}

std::vector<group_function> projection_engine::all_isotypic(const group_function& f) const {
    if (f.n() != impl_->n) throw domain_error("degree mismatch");
    auto prof = impl_->make_profile(f);
    std::vector<group_function> out;
    out.reserve(impl_->class_count);
    for (int r = 0; r < impl_->class_count; ++r)
        out.push_back(impl_->assemble(prof, impl_->projection_weight({r})));
    return out;
}

group_function projection_engine::degree(const group_function& f, int t, degree_space space) const {
    if (f.n() != impl_->n) throw domain_error("degree mismatch");
    if (t < 0 || t > impl_->n) throw domain_error("need 0 <= t <= n");
    std::vector<int> rows;
    for (int r = 0; r < impl_->class_count; ++r) {
        int first = impl_->chars.labels()[r].first();
        bool keep = space == degree_space::cumulative ? first >= impl_->n - t
                                                      : first == impl_->n - t;
        if (keep) rows.push_back(r);
    }
    auto prof = impl_->make_profile(f);
    return impl_->assemble(prof, impl_->projection_weight(rows));
}

group_function projection_engine::convolve_class(const group_function& f, const class_function& w) const {
    if (f.n() != impl_->n || w.n() != impl_->n) throw domain_error("degree mismatch");
    // Split w into integer numerators over a common denominator, then reuse
    // the integer assembly: sum_pi w(s pi^-1) f(pi) = sum_c w_c N_c(s), and
    // the profile already carries the (1/n!) normalization slot, so scale by
    // n! afterwards.
    Int wden = 1;
    for (const Rat& v : w.values()) wden = lcm(wden, Int(denominator(v)));
    std::vector<long long> weight(impl_->class_count);
    for (int c = 0; c < impl_->class_count; ++c) {
        Int scaled = numerator(w.value(c)) * (wden / denominator(w.value(c)));
        weight[c] = scaled.convert_to<long long>();
    }
    auto prof = impl_->make_profile(f);
    group_function g = impl_->assemble(prof, weight);
    g *= Rat(factorial(impl_->n), wden);
    return g;
}

std::vector<long long> projection_engine::pair_class_histogram(const permutation_set& a,
                                                               const permutation_set& b) const {
    if (a.n() != impl_->n || b.n() != impl_->n) throw domain_error("degree mismatch");
    auto ra = a.ranks();
    auto rb = b.ranks();
    int classes = impl_->class_count;
    const std::uint8_t* tab = impl_->has_table() ? impl_->table() : nullptr;
    int workers = impl_->threads;
    std::vector<std::vector<long long>> partial(workers, std::vector<long long>(classes, 0));

    long long count = static_cast<long long>(ra.size());
    long long chunk = workers > 1 ? (count + workers - 1) / workers : count;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        long long lo = w * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        auto body = [&, lo, hi, w] {
            auto& hist = partial[w];
            for (long long i = lo; i < hi; ++i) {
                long long s = ra[static_cast<std::size_t>(i)];
                if (tab) {
                    const std::uint8_t* row = &tab[static_cast<std::size_t>(s) * impl_->order];
                    for (long long p : rb) ++hist[row[p]];
                } else {
                    const std::uint8_t* sig = &impl_->perms[s * impl_->n];
                    for (long long p : rb)
                        ++hist[impl_->product_class_arrays(sig, &impl_->invs[p * impl_->n])];
                }
            }
        };
        if (workers > 1 && count >= 512)
            pool.emplace_back(body);
        else
            body();
    }
    for (auto& th : pool) th.join();

    std::vector<long long> hist(classes, 0);
    for (const auto& part : partial)
        for (int c = 0; c < classes; ++c) hist[c] += part[c];
    return hist;
}

std::vector<Rat> projection_engine::set_norms(const permutation_set& a) const {
    auto hist = pair_class_histogram(a, a);
    Int order_sq = factorial(impl_->n) * factorial(impl_->n);
    std::vector<Rat> norms(impl_->class_count);
    for (int r = 0; r < impl_->class_count; ++r) {
        __int128 sum = 0;
        for (int c = 0; c < impl_->class_count; ++c)
            sum += static_cast<__int128>(impl_->chars.value(r, c)) * hist[c];
        norms[r] = Rat(to_int(sum) * impl_->chars.dimension(r), order_sq);
    }
    return norms;
}

Rat projection_engine::tail_norm(const permutation_set& a, int t) const {
    auto norms = set_norms(a);
    Rat tail = 0;
    for (int r = 0; r < impl_->class_count; ++r)
        if (impl_->chars.labels()[r].first() < impl_->n - t) tail += norms[r];
    return tail;
}

projection_report projection_engine::report(const permutation_set& a, int t) const {
    if (t < 0 || t > impl_->n) throw domain_error("need 0 <= t <= n");
    projection_report rep;
    rep.n = impl_->n;
    rep.t = t;
    rep.set_size = a.size();
    rep.labels = impl_->chars.labels();
    rep.norms = set_norms(a);
    rep.tail = 0;
    for (int r = 0; r < impl_->class_count; ++r)
        if (rep.labels[r].first() < impl_->n - t) rep.tail += rep.norms[r];
    rep.density_scale = Rat(a.size()) / Rat(factorial(impl_->n - t));
    if (a.size() > 0)
        rep.epsilon = rep.tail * Rat(falling_factorial(impl_->n, t)) / rep.density_scale;
    return rep;
}

int projection_engine::product_class(long long sigma_rank, long long pi_rank) const {
    return impl_->product_class_arrays(&impl_->perms[sigma_rank * impl_->n],
                                       &impl_->invs[pi_rank * impl_->n]);
}

} // namespace sn
