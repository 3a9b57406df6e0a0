#include "qukit/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qukit {

using json = nlohmann::ordered_json;

namespace {

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FileFormatError("cannot open " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw FileFormatError("invalid JSON in " + path.string() + ": " + e.what());
    }
    if (!doc.is_object()) throw FileFormatError(path.string() + ": not a JSON object");
    return doc;
}

void dump_json(const std::filesystem::path& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw FileFormatError("cannot write " + path.string());
    out << doc.dump(2) << '\n';
}

int get_positive_int(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_integer())
        throw FileFormatError(std::string("missing integer field \"") + key + "\"");
    const int v = doc[key].get<int>();
    if (v < 1) throw FileFormatError(std::string("field \"") + key + "\" must be >= 1");
    return v;
}

cdouble get_pair(const json& node, const char* what) {
    if (!node.is_array() || node.size() != 2 || !node[0].is_number() ||
        !node[1].is_number())
        throw FileFormatError(std::string(what) + " must be a [re, im] pair");
    return cdouble{node[0].get<double>(), node[1].get<double>()};
}

json pair_of(const cdouble& c) { return json::array({c.real(), c.imag()}); }

} // namespace

void write_state_file(const std::filesystem::path& path, const StateVector& psi) {
    json doc;
    doc["n_sites"] = psi.n_sites;
    doc["local_dim"] = psi.local_dim;
    json amps = json::array();
    for (const auto& a : psi.amps) amps.push_back(pair_of(a));
    doc["amps"] = std::move(amps);
    dump_json(path, doc);
}

StateVector read_state_file(const std::filesystem::path& path) {
    const json doc = load_json(path);
    const int n = get_positive_int(doc, "n_sites");
    const int k = get_positive_int(doc, "local_dim");
    if (k < 2) throw FileFormatError("local_dim must be >= 2");
    if (!doc.contains("amps") || !doc["amps"].is_array())
        throw FileFormatError("missing array field \"amps\"");
    const auto& amps = doc["amps"];
    if (amps.size() != pow_dim(k, n))
        throw FileFormatError("amps has length " + std::to_string(amps.size()) +
                              ", expected K^N = " + std::to_string(pow_dim(k, n)));
    std::vector<cdouble> values;
    values.reserve(amps.size());
    for (const auto& a : amps) values.push_back(get_pair(a, "amplitude"));
    return StateVector(n, k, std::move(values));
}

void write_compressed_file(const std::filesystem::path& path,
                           const SymStateCompressed& sym) {
    const auto occs = enumerate_occupations(sym.n_sites, sym.local_dim);
    if (sym.coeffs.size() != occs.size())
        throw ShapeError("compressed state has wrong coefficient count");
    json doc;
    doc["n_sites"] = sym.n_sites;
    doc["local_dim"] = sym.local_dim;
    doc["convention"] = "unnormalized";
    json coeffs = json::array();
    for (std::size_t r = 0; r < occs.size(); ++r) {
        json entry;
        entry["occ"] = occs[r].counts;
        entry["c"] = pair_of(sym.coeffs[r]);
        coeffs.push_back(std::move(entry));
    }
    doc["coeffs"] = std::move(coeffs);
    dump_json(path, doc);
}

SymStateCompressed read_compressed_file(const std::filesystem::path& path) {
    const json doc = load_json(path);
    const int n = get_positive_int(doc, "n_sites");
    const int k = get_positive_int(doc, "local_dim");
    if (k < 2) throw FileFormatError("local_dim must be >= 2");
    if (!doc.contains("convention") || doc["convention"] != "unnormalized")
        throw FileFormatError("convention must be \"unnormalized\"");
    if (!doc.contains("coeffs") || !doc["coeffs"].is_array())
        throw FileFormatError("missing array field \"coeffs\"");

    const auto occs = enumerate_occupations(n, k);
    const auto& entries = doc["coeffs"];
    if (entries.size() != occs.size())
        throw FileFormatError("coeffs has length " + std::to_string(entries.size()) +
                              ", expected dim S = " + std::to_string(occs.size()));

    SymStateCompressed sym{n, k, {}};
    sym.coeffs.resize(occs.size());
    for (std::size_t r = 0; r < occs.size(); ++r) {
        const auto& entry = entries[r];
        if (!entry.is_object() || !entry.contains("occ") || !entry.contains("c"))
            throw FileFormatError("coeff entry needs \"occ\" and \"c\"");
        const auto occ = entry["occ"].get<std::vector<int>>();
        if (occ != occs[r].counts)
            throw FileFormatError("coeff entry " + std::to_string(r) +
                                  " is out of canonical occupation order");
        sym.coeffs[r] = get_pair(entry["c"], "coefficient");
    }
    return sym;
}

bool is_full_state_file(const std::filesystem::path& path) {
    const json doc = load_json(path);
    if (doc.contains("amps")) return true;
    if (doc.contains("coeffs")) return false;
    throw FileFormatError(path.string() + ": neither \"amps\" nor \"coeffs\" present");
}

std::string serialize_classification(const Classification& cls, double tol) {
    json doc;
    doc["verdict"] = cls.is_product() ? "product" : "entangled";
    doc["defect"] = cls.max_defect;
    if (cls.factors.has_value()) {
        json factors = json::array();
        for (const auto& f : cls.factors->factors) {
            json row = json::array();
            for (const auto& c : f) row.push_back(pair_of(c));
            factors.push_back(std::move(row));
        }
        doc["factors"] = std::move(factors);
    } else {
        doc["factors"] = nullptr;
    }
    doc["tolerance"] = tol;
    return doc.dump(2);
}

std::string serialize_sym_classification(const SymClassification& cls, double tol) {
    json doc;
    doc["verdict"] = cls.is_coherent() ? "product" : "entangled";
    doc["defect"] = cls.defect;
    doc["factors"] = nullptr;
    doc["tolerance"] = tol;
    doc["chart"] = cls.chart;
    if (cls.params.has_value()) {
        json tau = json::array();
        for (const auto& t : cls.params->tau) tau.push_back(pair_of(t));
        doc["tau"] = std::move(tau);
    } else {
        doc["tau"] = nullptr;
    }
    return doc.dump(2);
}

cdouble parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw FileFormatError("empty complex literal");

    // Split at the last '+' or '-' that is not a leading sign and not part
    // of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
            split = i;
    }

    auto to_double = [](const std::string& t) -> double {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception&) {
            throw FileFormatError("bad numeric literal \"" + t + "\"");
        }
        if (used != t.size()) throw FileFormatError("bad numeric literal \"" + t + "\"");
        return v;
    };

    const bool has_i = (s.back() == 'i' || s.back() == 'I');
    if (!has_i) {
        if (split != std::string::npos)
            throw FileFormatError("bad complex literal \"" + text + "\"");
        return cdouble{to_double(s), 0.0};
    }
    s.pop_back();
    if (split == std::string::npos) return cdouble{0.0, to_double(s)};
    return cdouble{to_double(s.substr(0, split)), to_double(s.substr(split))};
}

std::vector<cdouble> parse_complex_list(const std::string& text) {
    std::vector<cdouble> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) out.push_back(parse_complex(item));
    if (out.empty()) throw FileFormatError("empty complex list");
    return out;
}

Occupation parse_occupation(const std::string& text) {
    Occupation occ;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            occ.counts.push_back(v);
        } catch (const std::exception&) {
            throw FileFormatError("bad occupation entry \"" + item + "\"");
        }
    }
    if (occ.counts.size() < 2) throw FileFormatError("occupation needs >= 2 counts");
    return occ;
}

} // namespace qukit
