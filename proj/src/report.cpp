#include "sn/report.hpp"

#include "sn/error.hpp"

#include <json.hpp>

#include <chrono>
#include <sstream>

namespace sn {

using nlohmann::json;

output_format parse_format(const std::string& name) {
    if (name == "text") return output_format::text;
    if (name == "json") return output_format::json;
    if (name == "csv") return output_format::csv;
    throw domain_error("unknown output format: " + name);
}

std::string input_digest(const std::string& canonical_input) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : canonical_input) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::string render_rat(const Rat& value, output_format format) {
    if (format == output_format::json)
        return "[" + numerator(value).str() + "," + denominator(value).str() + "]";
    return to_string(value);
}

namespace {

json rat_json(const Rat& value) {
    return json::array({numerator(value).str(), denominator(value).str()});
}

json partition_json(const partition& p) {
    json arr = json::array();
    for (int part : p.parts()) arr.push_back(part);
    return arr;
}

void attach_meta(json& doc, const report_meta& meta) {
    doc["version"] = kToolVersion;
    doc["input_digest"] = meta.digest;
    if (meta.seed) doc["seed"] = *meta.seed;
    if (!meta.deterministic) {
        auto now = std::chrono::system_clock::now().time_since_epoch();
        doc["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(now).count();
    }
}

std::string meta_header(const report_meta& meta, output_format format) {
    std::ostringstream out;
    char sep = format == output_format::csv ? ',' : ' ';
    out << "version" << sep << kToolVersion << "\n";
    out << "input_digest" << sep << meta.digest << "\n";
    if (meta.seed) out << "seed" << sep << *meta.seed << "\n";
    if (!meta.deterministic) {
        auto now = std::chrono::system_clock::now().time_since_epoch();
        out << "timestamp" << sep
            << std::chrono::duration_cast<std::chrono::seconds>(now).count() << "\n";
    }
    return out.str();
}

} // namespace

std::string render_spectrum(const spectrum_report& rep, const report_meta& meta,
                            output_format format) {
    if (format == output_format::json) {
        json doc;
        attach_meta(doc, meta);
        doc["n"] = rep.n;
        doc["generators"] = rep.generators;
        doc["degree"] = rat_json(rep.degree);
        json rows = json::array();
        for (std::size_t i = 0; i < rep.labels.size(); ++i) {
            rows.push_back({{"partition", partition_json(rep.labels[i])},
                            {"lambda", rat_json(rep.adjacency[i])},
                            {"mu", rat_json(rep.laplacian[i])},
                            {"multiplicity", rep.multiplicity[i].str()}});
        }
        doc["eigenvalues"] = rows;
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    out << meta_header(meta, format);
    if (format == output_format::csv) {
        out << "partition,lambda,mu,multiplicity\n";
        for (std::size_t i = 0; i < rep.labels.size(); ++i)
            out << '"' << rep.labels[i].str() << "\"," << to_string(rep.adjacency[i]) << ','
                << to_string(rep.laplacian[i]) << ',' << rep.multiplicity[i] << "\n";
    } else {
        out << "spectrum n=" << rep.n << " generators=" << rep.generators
            << " degree=" << to_string(rep.degree) << "\n";
        for (std::size_t i = 0; i < rep.labels.size(); ++i)
            out << "  " << rep.labels[i].str() << " lambda=" << to_string(rep.adjacency[i])
                << " mu=" << to_string(rep.laplacian[i]) << " mult=" << rep.multiplicity[i]
                << "\n";
    }
    return out.str();
}

std::string render_projection(const projection_report& rep, const report_meta& meta,
                              output_format format) {
    if (format == output_format::json) {
        json doc;
        attach_meta(doc, meta);
        doc["n"] = rep.n;
        doc["t"] = rep.t;
        doc["c"] = rat_json(rep.density_scale);
        json norms = json::array();
        for (std::size_t i = 0; i < rep.labels.size(); ++i)
            norms.push_back(json::array({partition_json(rep.labels[i]),
                                         numerator(rep.norms[i]).str(),
                                         denominator(rep.norms[i]).str()}));
        doc["norms"] = norms;
        doc["tail"] = rat_json(rep.tail);
        if (rep.epsilon) doc["epsilon"] = rat_json(*rep.epsilon);
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    out << meta_header(meta, format);
    if (format == output_format::csv) {
        out << "partition,norm\n";
        for (std::size_t i = 0; i < rep.labels.size(); ++i)
            out << '"' << rep.labels[i].str() << "\"," << to_string(rep.norms[i]) << "\n";
        out << "tail," << to_string(rep.tail) << "\n";
        if (rep.epsilon) out << "epsilon," << to_string(*rep.epsilon) << "\n";
    } else {
        out << "projection n=" << rep.n << " t=" << rep.t << " |A|=" << to_string(rep.set_size)
            << " c=" << to_string(rep.density_scale) << "\n";
        for (std::size_t i = 0; i < rep.labels.size(); ++i)
            out << "  " << rep.labels[i].str() << " norm=" << to_string(rep.norms[i]) << "\n";
        out << "  tail=" << to_string(rep.tail);
        if (rep.epsilon) out << " epsilon=" << to_string(*rep.epsilon);
        out << "\n";
    }
    return out.str();
}

std::string render_boundary(const boundary_report& rep, const report_meta& meta,
                            output_format format) {
    if (format == output_format::json) {
        json doc;
        attach_meta(doc, meta);
        doc["n"] = rep.n;
        doc["set_size"] = rep.set_size;
        doc["boundary"] = rep.boundary;
        doc["spectral_identity_holds"] = rep.spectral_identity_holds;
        json bounds = json::array();
        for (const named_bound& b : rep.bounds)
            bounds.push_back({{"name", b.name},
                              {"value", rat_json(b.value)},
                              {"slack", rat_json(b.slack)},
                              {"tight", b.tight}});
        doc["bounds"] = bounds;
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    out << meta_header(meta, format);
    if (format == output_format::csv) {
        out << "name,value,slack,tight\n";
        out << "boundary," << rep.boundary << ",0,\n";
        for (const named_bound& b : rep.bounds)
            out << b.name << ',' << to_string(b.value) << ',' << to_string(b.slack) << ','
                << (b.tight ? "yes" : "no") << "\n";
    } else {
        out << "boundary n=" << rep.n << " |A|=" << rep.set_size << " |bd A|=" << rep.boundary
            << " identity=" << (rep.spectral_identity_holds ? "exact" : "VIOLATED") << "\n";
        for (const named_bound& b : rep.bounds)
            out << "  " << b.name << " >= " << to_string(b.value)
                << " (slack " << to_string(b.slack) << (b.tight ? ", tight" : "") << ")\n";
    }
    return out.str();
}

std::string render_stability(const stability_report& rep, const report_meta& meta,
                             output_format format) {
    if (format == output_format::json) {
        json doc;
        attach_meta(doc, meta);
        doc["n"] = rep.n;
        doc["t"] = rep.t;
        doc["c"] = rat_json(rep.c);
        doc["epsilon"] = rat_json(rep.epsilon);
        doc["round_c"] = rep.rounded_c.str();
        doc["rounding_gap"] = rat_json(rep.rounding_gap);
        doc["m"] = rep.union_size;
        doc["exact_search"] = rep.best.exact;
        doc["symdiff"] = rep.best.symmetric_difference;
        doc["symdiff_ratio"] = rat_json(rep.symdiff_ratio);
        doc["sqrt_epsilon"] = rep.sqrt_epsilon;
        doc["c_over_sqrt_n"] = rep.c_over_sqrt_n;
        json cosets = json::array();
        for (const tcoset& c : rep.best.cosets) cosets.push_back(c.str());
        doc["cosets"] = cosets;
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    out << meta_header(meta, format);
    char sep = format == output_format::csv ? ',' : '=';
    out << "n" << sep << rep.n << "\n";
    out << "t" << sep << rep.t << "\n";
    out << "c" << sep << to_string(rep.c) << "\n";
    out << "epsilon" << sep << to_string(rep.epsilon) << "\n";
    out << "round_c" << sep << rep.rounded_c << "\n";
    out << "rounding_gap" << sep << to_string(rep.rounding_gap) << "\n";
    out << "m" << sep << rep.union_size << "\n";
    out << "exact_search" << sep << (rep.best.exact ? "yes" : "no") << "\n";
    out << "symdiff" << sep << rep.best.symmetric_difference << "\n";
    out << "symdiff_ratio" << sep << to_string(rep.symdiff_ratio) << "\n";
    out << "sqrt_epsilon" << sep << rep.sqrt_epsilon << "\n";
    out << "c_over_sqrt_n" << sep << rep.c_over_sqrt_n << "\n";
    for (const tcoset& c : rep.best.cosets) out << "coset" << sep << c.str() << "\n";
    return out.str();
}

std::string render_lex_table(const lex_minimality_table& table, const report_meta& meta,
                             output_format format) {
    if (format == output_format::json) {
        json doc;
        attach_meta(doc, meta);
        doc["n"] = table.n;
        doc["exhaustive"] = table.exhaustive;
        doc["sets_examined"] = table.sets_examined;
        doc["conjecture_holds"] = table.conjecture_holds();
        json rows = json::array();
        for (const auto& row : table.rows) {
            json r{{"k", row.k},
                   {"lex_boundary", row.lex_boundary},
                   {"min_boundary", row.min_boundary}};
            if (row.smaller_witness) r["witness_if_smaller"] = *row.smaller_witness;
            rows.push_back(r);
        }
        doc["rows"] = rows;
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    out << meta_header(meta, format);
    if (format == output_format::text)
        out << (table.conjecture_holds() ? "conjecture holds" : "CONJECTURE VIOLATED") << "\n";
    out << "k,lex_boundary,min_boundary,witness_if_smaller\n";
    for (const auto& row : table.rows) {
        out << row.k << ',' << row.lex_boundary << ',' << row.min_boundary << ',';
        if (row.smaller_witness) out << *row.smaller_witness;
        out << "\n";
    }
    return out.str();
}

} // namespace sn
