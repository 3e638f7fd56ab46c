#include "cotanhom/io.hpp"

#include "cotanhom/errors.hpp"

#include <charconv>
#include <fstream>

namespace cotanhom::io {

namespace {

int parse_degree(const std::string& key) {
    int value = 0;
    const char* begin = key.data();
    const char* end = begin + key.size();
    if (begin != end && *begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || begin == end) throw InputError("bad degree key '" + key + "'");
    return value;
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field '") + name + "'");
    return j.at(name);
}

Rational parse_scalar(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw InputError("matrix entries must be integers or \"p/q\" strings, got " + j.dump());
}

std::int64_t parse_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer, got " + j.dump());
    return j.get<std::int64_t>();
}

std::string parse_string(const json& j, const char* what) {
    if (!j.is_string()) throw InputError(std::string(what) + " must be a string, got " + j.dump());
    return j.get<std::string>();
}

std::map<int, RationalMatrix> parse_blocks(const json& j, const GradedVectorSpace& v, int degree) {
    if (!j.is_object()) throw InputError("map blocks must be an object keyed by source degree");
    std::map<int, RationalMatrix> blocks;
    for (const auto& [key, value] : j.items()) {
        const int i = parse_degree(key);
        blocks.emplace(i, parse_matrix(value, v.dim(i + degree), v.dim(i)));
    }
    return blocks;
}

json blocks_to_json(const GradedMap& f) {
    json out = json::object();
    for (const auto& [i, m] : f.blocks()) out[std::to_string(i)] = to_json(m);
    return out;
}

}  // namespace

GradedVectorSpace parse_graded_space(const json& j) {
    if (!j.is_object()) throw InputError("graded space must be an object mapping degrees to dimensions");
    std::map<int, std::size_t> dims;
    for (const auto& [key, value] : j.items()) {
        const auto d = parse_int(value, "dimension");
        if (d < 0) throw InputError("negative dimension at degree " + key);
        dims[parse_degree(key)] = static_cast<std::size_t>(d);
    }
    return GradedVectorSpace(dims);
}

json to_json(const GradedVectorSpace& v) {
    json out = json::object();
    for (const auto& [deg, d] : v.dims()) out[std::to_string(deg)] = d;
    return out;
}

RationalMatrix parse_matrix(const json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array()) throw InputError("matrix must be an array of rows");
    // A zero-size block may be written as [] whatever its nominal shape.
    if (j.empty() && rows * cols == 0) return {rows, cols};
    if (j.size() != rows)
        throw InputError("matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
    std::vector<Rational> entries;
    entries.reserve(rows * cols);
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != cols)
            throw InputError("matrix row must have " + std::to_string(cols) + " entries");
        for (const auto& e : row) entries.push_back(parse_scalar(e));
    }
    return {rows, cols, std::move(entries)};
}

json to_json(const RationalMatrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        out.push_back(std::move(row));
    }
    return out;
}

CochainComplex parse_complex(const json& j) {
    const auto space = parse_graded_space(field(j, "dims"));
    std::map<int, RationalMatrix> blocks;
    if (j.contains("differential")) blocks = parse_blocks(j.at("differential"), space, 1);
    return {space, GradedMap(space, space, 1, std::move(blocks))};
}

json to_json(const CochainComplex& c) {
    return {{"dims", to_json(c.space())}, {"differential", blocks_to_json(c.differential())}};
}

CellComplex parse_cell_complex(const json& j) {
    CellComplex cc;
    const auto& cells = field(j, "cells");
    if (!cells.is_array()) throw InputError("'cells' must be an array");
    for (const auto& c : cells) {
        const auto dim = parse_int(field(c, "dim"), "cell dim");
        if (dim < 0) throw InputError("negative cell dimension");
        cc.cells.push_back({parse_string(field(c, "id"), "cell id"), static_cast<std::size_t>(dim)});
    }
    if (j.contains("incidence")) {
        const auto& inc = j.at("incidence");
        if (!inc.is_array()) throw InputError("'incidence' must be an array");
        for (const auto& e : inc)
            cc.incidence.push_back({parse_string(field(e, "from"), "incidence from"),
                                    parse_string(field(e, "to"), "incidence to"),
                                    parse_int(field(e, "coeff"), "incidence coeff")});
    }
    cc.check_well_formed();
    return cc;
}

json to_json(const CellComplex& cc) {
    json cells = json::array();
    for (const auto& c : cc.cells) cells.push_back({{"id", c.id}, {"dim", c.dim}});
    json inc = json::array();
    for (const auto& e : cc.incidence) inc.push_back({{"from", e.from}, {"to", e.to}, {"coeff", e.coeff}});
    return {{"cells", cells}, {"incidence", inc}};
}

QuiverPresentation parse_quiver(const json& j) {
    if (j.is_string()) return QuiverPresentation::builtin(j.get<std::string>());
    if (!j.is_object()) throw InputError("quiver must be a builtin name or an inline presentation");
    std::vector<Generator> gens;
    for (const auto& g : field(j, "generators")) {
        const bool inv = g.contains("invertible") ? g.at("invertible").get<bool>() : false;
        gens.push_back({parse_string(field(g, "name"), "generator name"),
                        static_cast<int>(parse_int(field(g, "degree"), "generator degree")), inv});
    }
    std::vector<Relation> rels;
    if (j.contains("relations"))
        for (const auto& r : j.at("relations")) {
            Relation rel{parse_string(field(r, "generator"), "relation generator"), {}};
            for (const auto& t : field(r, "terms")) {
                Term term{parse_int(field(t, "coeff"), "term coeff"), {}};
                for (const auto& letter : field(t, "word")) term.word.push_back(parse_string(letter, "word letter"));
                rel.terms.push_back(std::move(term));
            }
            rels.push_back(std::move(rel));
        }
    const std::string name = j.contains("name") ? parse_string(j.at("name"), "quiver name") : "inline";
    return {name, std::move(gens), std::move(rels)};
}

json to_json(const QuiverPresentation& q) {
    if (q == QuiverPresentation::sphere() || q == QuiverPresentation::torus()) return q.name();
    json gens = json::array();
    for (const auto& g : q.generators())
        gens.push_back({{"name", g.name}, {"degree", g.degree}, {"invertible", g.invertible}});
    json rels = json::array();
    for (const auto& r : q.relations()) {
        json terms = json::array();
        for (const auto& t : r.terms) terms.push_back({{"coeff", t.coeff}, {"word", t.word}});
        rels.push_back({{"generator", r.generator}, {"terms", terms}});
    }
    return {{"name", q.name()}, {"generators", gens}, {"relations", rels}};
}

Representation parse_representation(const json& j) {
    auto quiver = parse_quiver(field(j, "quiver"));
    const auto space = parse_graded_space(field(j, "space"));
    std::map<std::string, GradedMap> maps;
    if (j.contains("maps")) {
        const auto& m = j.at("maps");
        if (!m.is_object()) throw InputError("'maps' must be an object keyed by generator");
        for (const auto& [name, blocks] : m.items()) {
            const Generator* g = quiver.find(name);
            if (!g) throw InputError("map for unknown generator '" + name + "'");
            maps.emplace(name, GradedMap(space, space, g->degree, parse_blocks(blocks, space, g->degree)));
        }
    }
    return {std::move(quiver), space, std::move(maps)};
}

json to_json(const Representation& r) {
    json maps = json::object();
    for (const auto& [name, f] : r.maps) maps[name] = blocks_to_json(f);
    return {{"quiver", to_json(r.quiver)}, {"space", to_json(r.space)}, {"maps", maps}};
}

json to_json(const CohomologyResult& h) {
    json out = json::object();
    for (const auto& [deg, d] : h.dims) out[std::to_string(deg)] = d;
    return out;
}

json to_json(const TheoremReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations) violations.push_back({{"index", v.index}, {"detail", v.detail}});
    json tallies = json::object();
    for (const auto& [k, n] : report.tallies) tallies[k] = n;
    return {{"theorem", report.theorem},
            {"checked", report.samples_checked},
            {"skipped", report.samples_skipped},
            {"violations", violations},
            {"tallies", tallies}};
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

}  // namespace cotanhom::io
