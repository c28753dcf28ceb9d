#include "sn/families.hpp"

#include "sn/error.hpp"
#include "sn/rng.hpp"

#include <algorithm>
#include <sstream>

namespace sn {

family_spec family_spec::coset(const tcoset& c) {
    family_spec s;
    s.which = kind::t_coset;
    s.n = c.n();
    s.cosets = {c};
    return s;
}

family_spec family_spec::chain(int n, int t, int m) {
    family_spec s;
    s.which = kind::dictatorship_chain;
    s.n = n;
    s.t = t;
    s.m = m;
    return s;
}

family_spec family_spec::cosets_union(int n, std::vector<tcoset> cs) {
    family_spec s;
    s.which = kind::union_of_cosets;
    s.n = n;
    s.cosets = std::move(cs);
    return s;
}

family_spec family_spec::segment(int n, long long k) {
    family_spec s;
    s.which = kind::lex_segment;
    s.n = n;
    s.k = k;
    return s;
}

family_spec family_spec::eq2_family(int n) {
    family_spec s;
    s.which = kind::eq2;
    s.n = n;
    return s;
}

family_spec family_spec::sec7_family(int n) {
    family_spec s;
    s.which = kind::sec7;
    s.n = n;
    return s;
}

family_spec family_spec::perturb(family_spec base, long long add, long long remove,
                                 std::uint64_t seed) {
    family_spec s;
    s.which = kind::perturbed;
    s.n = base.n;
    s.base = std::make_shared<family_spec>(std::move(base));
    s.add_count = add;
    s.remove_count = remove;
    s.seed = seed;
    return s;
}

namespace {

permutation_set generate_eq2(int n) {
    if (n < 8) throw domain_error("the monotone-pattern family needs n >= 8");
    permutation_set out(n);
    long long order = group_order(n);
    for (long long r = 0; r < order; ++r) {
        permutation sigma = lex_unrank(n, r);
        int x[4];
        for (int i = 0; i < 4; ++i) x[i] = sigma(i + 1) <= 4 ? 1 : 0;
        bool down = x[0] >= x[1] && x[1] >= x[2] && x[2] >= x[3];
        bool up = x[0] <= x[1] && x[1] <= x[2] && x[2] <= x[3];
        if (down || up) out.insert(r);
    }
    return out;
}

permutation_set generate_sec7(int n) {
    if (n < 6) throw domain_error("the block-preserving family needs n >= 6");
    permutation_set out(n);
    long long order = group_order(n);
    for (long long r = 0; r < order; ++r) {
        permutation sigma = lex_unrank(n, r);
        int hits = 0;
        for (int i = 1; i <= 3; ++i)
            if (sigma(i) <= 3) ++hits;
        if (hits == 0 || hits == 3) out.insert(r);
    }
    return out;
}

permutation_set generate_chain(int n, int t, int m) {
    if (t < 1 || t > n) throw domain_error("chain needs 1 <= t <= n");
    if (m < 1 || t + m - 1 > n) throw domain_error("chain needs 1 <= m <= n - t + 1");
    permutation_set out(n);
    std::vector<int> domain(t), image(t);
    for (int i = 0; i < t - 1; ++i) {
        domain[i] = i + 1;
        image[i] = i + 1;
    }
    domain[t - 1] = t;
    for (int j = t; j <= t + m - 1; ++j) {
        image[t - 1] = j;
        out = out | permutation_set::from_coset(tcoset(n, domain, image));
    }
    return out;
}

permutation_set generate_perturbed(const family_spec& spec) {
    permutation_set base = generate_family(*spec.base);
    rng gen(spec.seed);
    // Remove first, then add among the current non-members.
    for (long long step = 0; step < spec.remove_count; ++step) {
        auto members = base.ranks();
        if (members.empty()) break;
        base.erase(members[gen.below(members.size())]);
    }
    for (long long step = 0; step < spec.add_count; ++step) {
        auto outside = base.complement().ranks();
        if (outside.empty()) break;
        base.insert(outside[gen.below(outside.size())]);
    }
    return base;
}

} // namespace

permutation_set generate_family(const family_spec& spec) {
    switch (spec.which) {
        case family_spec::kind::t_coset:
            return permutation_set::from_coset(spec.cosets.at(0));
        case family_spec::kind::dictatorship_chain:
            return generate_chain(spec.n, spec.t, spec.m);
        case family_spec::kind::union_of_cosets: {
            permutation_set out(spec.n);
            for (const tcoset& c : spec.cosets) out = out | permutation_set::from_coset(c);
            return out;
        }
        case family_spec::kind::lex_segment:
            return lex_initial_segment(spec.n, spec.k);
        case family_spec::kind::eq2:
            return generate_eq2(spec.n);
        case family_spec::kind::sec7:
            return generate_sec7(spec.n);
        case family_spec::kind::perturbed:
            return generate_perturbed(spec);
    }
    throw domain_error("unknown family kind");
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

// Split "a=1,b=2;c=3" style argument bodies at top-level separators.
std::vector<std::string> split_top_level(const std::string& body, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : body) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string expect_key(const std::string& item, const std::string& key) {
    std::string prefix = key + "=";
    if (item.rfind(prefix, 0) != 0)
        throw domain_error("expected " + prefix + "... in family spec, got: " + item);
    return item.substr(prefix.size());
}

tcoset parse_coset_body(const std::string& body, int n) {
    auto fields = split_top_level(body, ';');
    if (fields.size() != 2) throw domain_error("coset(...) needs I=...;J=...");
    auto domain = parse_int_list(expect_key(fields[0], "I"));
    auto image = parse_int_list(expect_key(fields[1], "J"));
    return tcoset(n, domain, image);
}

} // namespace

family_spec parse_family(const std::string& text, int n) {
    std::string s = text;
    std::erase(s, ' ');
    if (s == "eq2") return family_spec::eq2_family(n);
    if (s == "sec7") return family_spec::sec7_family(n);

    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        throw domain_error("unrecognized family spec: " + text);
    std::string head = s.substr(0, open);
    std::string body = s.substr(open + 1, s.size() - open - 2);

    if (head == "coset") return family_spec::coset(parse_coset_body(body, n));
    if (head == "chain") {
        auto fields = split_top_level(body, ',');
        if (fields.size() != 2) throw domain_error("chain(...) needs t=...,m=...");
        return family_spec::chain(n, std::stoi(expect_key(fields[0], "t")),
                                  std::stoi(expect_key(fields[1], "m")));
    }
    if (head == "segment") {
        auto fields = split_top_level(body, ',');
        if (fields.size() != 1) throw domain_error("segment(...) needs k=...");
        return family_spec::segment(n, std::stoll(expect_key(fields[0], "k")));
    }
    if (head == "union") {
        std::vector<tcoset> cosets;
        for (const std::string& item : split_top_level(body, '+')) {
            if (item.rfind("coset(", 0) != 0 || item.back() != ')')
                throw domain_error("union(...) takes coset(...) terms joined by +");
            cosets.push_back(parse_coset_body(item.substr(6, item.size() - 7), n));
        }
        return family_spec::cosets_union(n, std::move(cosets));
    }
    if (head == "perturb") {
        auto fields = split_top_level(body, ',');
        std::optional<family_spec> base;
        long long swap = -1;
        std::uint64_t seed = 0;
        bool have_seed = false;
        // The base spec may itself contain commas; rejoin fields until the
        // remaining items parse as swap=/seed=.
        std::string base_text;
        for (const std::string& item : fields) {
            if (item.rfind("swap=", 0) == 0) {
                swap = std::stoll(item.substr(5));
            } else if (item.rfind("seed=", 0) == 0) {
                seed = std::stoull(item.substr(5));
                have_seed = true;
            } else if (item.rfind("base=", 0) == 0) {
                base_text = item.substr(5);
            } else if (!base_text.empty()) {
                base_text += "," + item;
            } else {
                throw domain_error("unrecognized perturb field: " + item);
            }
        }
        if (base_text.empty() || swap < 0 || !have_seed)
            throw domain_error("perturb(...) needs base=..., swap=..., seed=...");
        base = parse_family(base_text, n);
        return family_spec::perturb(std::move(*base), swap, swap, seed);
    }
    throw domain_error("unrecognized family spec: " + text);
}

std::string family_to_string(const family_spec& spec) {
    std::ostringstream out;
    switch (spec.which) {
        case family_spec::kind::t_coset: {
            const tcoset& c = spec.cosets[0];
            out << "coset(I=";
            for (std::size_t i = 0; i < c.pairs().size(); ++i)
                out << (i ? "," : "") << c.pairs()[i].first;
            out << ";J=";
            for (std::size_t i = 0; i < c.pairs().size(); ++i)
                out << (i ? "," : "") << c.pairs()[i].second;
            out << ')';
            break;
        }
        case family_spec::kind::dictatorship_chain:
            out << "chain(t=" << spec.t << ",m=" << spec.m << ')';
            break;
        case family_spec::kind::union_of_cosets: {
            out << "union(";
            for (std::size_t i = 0; i < spec.cosets.size(); ++i)
                out << (i ? "+" : "") << family_to_string(family_spec::coset(spec.cosets[i]));
            out << ')';
            break;
        }
        case family_spec::kind::lex_segment:
            out << "segment(k=" << spec.k << ')';
            break;
        case family_spec::kind::eq2:
            out << "eq2";
            break;
        case family_spec::kind::sec7:
            out << "sec7";
            break;
        case family_spec::kind::perturbed:
            out << "perturb(base=" << family_to_string(*spec.base) << ",swap=" << spec.add_count
                << ",seed=" << spec.seed << ')';
            break;
    }
    return out.str();
}

} // namespace sn
