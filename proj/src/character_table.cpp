#include "sn/character_table.hpp"

#include "sn/error.hpp"
#include "sn/tableaux.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace sn {

namespace {

// Character value by removing border strips, on the abacus: a strip of length
// l leaves from beta-number b when b - l is absent; its height is the number
// of beta-numbers passed over.
struct strip_evaluator {
    const std::vector<int>& cycles; // cycle lengths, any fixed order
    std::map<std::pair<std::vector<int>, int>, long long> memo;

    long long eval(const std::vector<int>& shape, int depth) {
        if (shape.empty()) return 1; // all cycles consumed exactly when empty
        auto key = std::make_pair(shape, depth);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        int l = cycles[depth];
        int rows = static_cast<int>(shape.size());
        std::vector<int> beta(rows);
        for (int i = 0; i < rows; ++i) beta[i] = shape[i] + (rows - 1 - i);

        long long total = 0;
        for (int i = 0; i < rows; ++i) {
            int b = beta[i];
            if (b < l) continue;
            int target = b - l;
            bool occupied = false;
            int passed = 0;
            for (int j = 0; j < rows; ++j) {
                if (j == i) continue;
                if (beta[j] == target) occupied = true;
                if (beta[j] > target && beta[j] < b) ++passed;
            }
            if (occupied) continue;
            std::vector<int> nb = beta;
            nb[i] = target;
            std::sort(nb.begin(), nb.end(), std::greater<int>());
            std::vector<int> next_shape(rows);
            for (int j = 0; j < rows; ++j) next_shape[j] = nb[j] - (rows - 1 - j);
            while (!next_shape.empty() && next_shape.back() == 0) next_shape.pop_back();
            long long sub = eval(next_shape, depth + 1);
            total += (passed % 2 == 0) ? sub : -sub;
        }
        memo[key] = total;
        return total;
    }
};

} // namespace

character_table::character_table(int n) : n_(n), labels_(enumerate_partitions(n)), ctx_(n) {}

character_table character_table::compute(int n) {
    if (n < 0 || n > 14) throw capacity_error("character tables limited to n <= 14");
    character_table table(n);
    table.values_.assign(table.count(), std::vector<long long>(table.count(), 0));
    for (int c = 0; c < table.count(); ++c) {
        const partition& type = table.ctx_.types().type(c);
        strip_evaluator ev{type.parts(), {}};
        for (int r = 0; r < table.count(); ++r)
            table.values_[r][c] = ev.eval(table.labels_[r].parts(), 0);
    }
    return table;
}

long long character_table::value(const partition& row_label, const partition& type) const {
    return values_[row_index(row_label)][ctx_.types().id_of(type)];
}

long long character_table::dimension(int row) const {
    return values_[row][ctx_.identity_class()];
}

class_function character_table::row(int row_index) const {
    std::vector<Rat> vals;
    vals.reserve(count());
    for (long long v : values_[row_index]) vals.emplace_back(v);
    return class_function(n_, std::move(vals));
}

int character_table::row_index(const partition& row_label) const {
    for (int r = 0; r < count(); ++r)
        if (labels_[r] == row_label) return r;
    throw domain_error("no row for partition " + row_label.str());
}

Rat character_table::row_inner(int row_a, int row_b) const {
    Int sum = 0;
    for (int c = 0; c < count(); ++c)
        sum += ctx_.class_size(c) * values_[row_a][c] * values_[row_b][c];
    return Rat(sum) / Rat(factorial(n_));
}

Rat character_table::l1_norm(int row) const {
    Int sum = 0;
    for (int c = 0; c < count(); ++c) {
        long long v = values_[row][c];
        sum += ctx_.class_size(c) * (v < 0 ? -v : v);
    }
    return Rat(sum) / Rat(factorial(n_));
}

void character_table::save(std::ostream& out) const {
    out << "sn-chartable v1 n=" << n_ << "\n";
    for (int r = 0; r < count(); ++r) {
        const auto& parts = labels_[r].parts();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out << ',';
            out << parts[i];
        }
        out << '\t';
        for (int c = 0; c < count(); ++c) {
            if (c) out << ' ';
            out << values_[r][c];
        }
        out << '\n';
    }
    Int dim_sq = 0;
    for (int r = 0; r < count(); ++r) dim_sq += Int(dimension(r)) * dimension(r);
    out << "sum_dim_sq=" << dim_sq << "\n";
}

character_table character_table::load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw domain_error("empty character table file");
    int n = -1;
    {
        std::istringstream h(line);
        std::string magic, version, nfield;
        h >> magic >> version >> nfield;
        if (magic != "sn-chartable" || version != "v1" || nfield.rfind("n=", 0) != 0)
            throw domain_error("bad character table header: " + line);
        n = std::stoi(nfield.substr(2));
    }
    character_table table(n);
    table.values_.assign(table.count(), std::vector<long long>(table.count(), 0));
    for (int r = 0; r < table.count(); ++r) {
        if (!std::getline(in, line)) throw domain_error("truncated character table file");
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw domain_error("malformed character table row");
        partition label = parse_partition(line.substr(0, tab));
        if (label != table.labels_[r]) throw domain_error("character table rows out of order");
        std::istringstream vals(line.substr(tab + 1));
        for (int c = 0; c < table.count(); ++c)
            if (!(vals >> table.values_[r][c]))
                throw domain_error("malformed character table row");
    }
    if (!std::getline(in, line) || line.rfind("sum_dim_sq=", 0) != 0)
        throw domain_error("missing integrity line");
    Int declared(line.substr(std::string("sum_dim_sq=").size()));
    Int dim_sq = 0;
    for (int r = 0; r < table.count(); ++r)
        dim_sq += Int(table.dimension(r)) * table.dimension(r);
    if (declared != dim_sq || dim_sq != factorial(n))
        throw domain_error("character table integrity check failed");
    return table;
}

void character_table::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw domain_error("cannot write " + path);
    save(out);
}

character_table character_table::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot read " + path);
    return load(in);
}

character_table character_table::cached(int n, const std::string& cache_dir) {
    if (cache_dir.empty()) return compute(n);
    std::filesystem::create_directories(cache_dir);
    std::string path = cache_dir + "/chartable-n" + std::to_string(n) + ".txt";
    if (std::filesystem::exists(path)) {
        try {
            return load_file(path);
        } catch (const domain_error&) {
            // fall through: stale or corrupt cache entries are recomputed
        }
    }
    character_table table = compute(n);
    table.save_file(path);
    return table;
}

} // namespace sn
