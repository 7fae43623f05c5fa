#include "qdom/io.hpp"

#include <algorithm>
#include <fstream>

namespace qdom {

using nlohmann::json;

namespace {

json subsetToJson(const std::vector<std::string>& points, const FiniteQuantale& L,
                  const LSubset& A) {
    json o = json::object();
    for (std::size_t i = 0; i < points.size(); ++i)
        if (A(i) != L.bottom()) o[points[i]] = L.label(A(i));
    return o;
}

LSubset subsetFromJson(const std::string& carrierId, const std::vector<std::string>& points,
                       const FiniteQuantale& L, const json& j) {
    if (!j.is_object()) throw StructuralError("subset must be a JSON object of point: degree");
    LSubset A{carrierId, std::vector<Elem>(points.size(), L.bottom())};
    for (const auto& [key, val] : j.items()) {
        auto it = std::find(points.begin(), points.end(), key);
        if (it == points.end())
            throw StructuralError("unknown carrier point '" + key + "' in subset");
        if (!val.is_string()) throw StructuralError("degree for '" + key + "' must be a label");
        A.v[static_cast<std::size_t>(it - points.begin())] =
            L.indexOf(val.get<std::string>());
    }
    return A;
}

std::string requireString(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_string())
        throw StructuralError(std::string("missing or non-string field '") + field + "'");
    return j[field].get<std::string>();
}

std::vector<std::string> requireLabelArray(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array())
        throw StructuralError(std::string("missing or non-array field '") + field + "'");
    std::vector<std::string> out;
    for (const auto& v : j[field]) {
        if (!v.is_string()) throw StructuralError(std::string(field) + " entries must be strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

void requireKind(const json& j, const std::string& kind) {
    if (requireString(j, "kind") != kind)
        throw StructuralError("expected kind '" + kind + "', got '" +
                              j["kind"].get<std::string>() + "'");
}

/// Quantale reference: a bare fixture id string, or an inline document.
json quantaleRef(const FiniteQuantale& L) {
    for (const auto& id : fixtureQuantaleIds())
        if (id == L.name() && fixtureQuantale(id)->structuralHash() == L.structuralHash())
            return json(id);
    return toJson(L);
}

QuantalePtr quantaleFromRef(const json& j) {
    if (j.is_string()) return fixtureQuantale(j.get<std::string>());
    return std::make_shared<const FiniteQuantale>(quantaleFromJson(j));
}

}  // namespace

json toJson(const FiniteQuantale& L) {
    json j;
    j["kind"] = "quantale";
    j["name"] = L.name();
    j["carrier"] = L.labels();
    json order = json::array();
    for (std::size_t a = 0; a < L.size(); ++a)
        for (std::size_t b = 0; b < L.size(); ++b)
            if (a != b && L.leq(static_cast<Elem>(a), static_cast<Elem>(b)))
                order.push_back(json::array({L.label(static_cast<Elem>(a)),
                                             L.label(static_cast<Elem>(b))}));
    j["order"] = order;
    json tensor = json::array();
    for (std::size_t a = 0; a < L.size(); ++a)
        for (std::size_t b = a; b < L.size(); ++b)
            tensor.push_back(json::array(
                {L.label(static_cast<Elem>(a)), L.label(static_cast<Elem>(b)),
                 L.label(L.tensor(static_cast<Elem>(a), static_cast<Elem>(b)))}));
    j["tensor"] = tensor;
    j["unit"] = L.label(L.unit());
    return j;
}

FiniteQuantale quantaleFromJson(const json& j) {
    requireKind(j, "quantale");
    auto name = requireString(j, "name");
    auto carrier = requireLabelArray(j, "carrier");
    if (!j.contains("order") || !j["order"].is_array())
        throw StructuralError("missing or non-array field 'order'");
    std::vector<std::pair<std::string, std::string>> leqPairs;
    for (const auto& p : j["order"]) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
            throw StructuralError("order entries must be [a, b] label pairs");
        leqPairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
    if (!j.contains("tensor") || !j["tensor"].is_array())
        throw StructuralError("missing or non-array field 'tensor'");
    std::vector<std::array<std::string, 3>> triples;
    for (const auto& t : j["tensor"]) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() ||
            !t[2].is_string())
            throw StructuralError("tensor entries must be [a, b, c] label triples");
        triples.push_back({t[0].get<std::string>(), t[1].get<std::string>(),
                           t[2].get<std::string>()});
    }
    return FiniteQuantale::fromTriples(name, carrier, leqPairs, triples,
                                       requireString(j, "unit"));
}

json toJson(const LOrderedSet& P) {
    json j;
    j["kind"] = "lordered-set";
    j["id"] = P.id;
    j["quantale"] = quantaleRef(*P.L);
    j["carrier"] = P.points;
    json e = json::array();
    for (std::size_t x = 0; x < P.size(); ++x)
        for (std::size_t y = 0; y < P.size(); ++y) {
            Elem d = P.ord(x, y);
            Elem dflt = (x == y) ? P.L->unit() : P.L->bottom();
            if (d != dflt)
                e.push_back(json::array({P.points[x], P.points[y], P.L->label(d)}));
        }
    j["e"] = e;
    return j;
}

LOrderedSet lorderFromJson(const json& j) {
    requireKind(j, "lordered-set");
    LOrderedSet P;
    P.id = requireString(j, "id");
    if (!j.contains("quantale")) throw StructuralError("missing field 'quantale'");
    P.L = quantaleFromRef(j["quantale"]);
    P.points = requireLabelArray(j, "carrier");
    const std::size_t n = P.points.size();
    P.e.assign(n * n, P.L->bottom());
    for (std::size_t x = 0; x < n; ++x) P.e[x * n + x] = P.L->unit();
    if (!j.contains("e") || !j["e"].is_array())
        throw StructuralError("missing or non-array field 'e'");
    for (const auto& t : j["e"]) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() ||
            !t[2].is_string())
            throw StructuralError("e entries must be [x, y, degree] label triples");
        int x = P.indexOf(t[0].get<std::string>());
        int y = P.indexOf(t[1].get<std::string>());
        P.e[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)] =
            P.L->indexOf(t[2].get<std::string>());
    }
    return P;
}

json toJson(const ClosureSpace& S) {
    json j;
    j["kind"] = "closure-space";
    j["id"] = S.id;
    j["quantale"] = quantaleRef(*S.L);
    j["carrier"] = S.points;
    if (S.pointGenerated()) {
        const auto& pg = std::get<ClosureSpace::PointGenerated>(S.op);
        json cl = json::object();
        for (std::size_t x = 0; x < S.size(); ++x)
            cl[S.points[x]] = subsetToJson(S.points, *S.L, pg.closures[x]);
        j["closures"] = cl;
    } else {
        const auto& tb = std::get<ClosureSpace::TableBacked>(S.op);
        LSubsetEnum en(S.id, S.size(), *S.L);
        json rows = json::array();
        for (std::size_t r = 0; r < en.count(); ++r) {
            json row;
            row["input"] = subsetToJson(S.points, *S.L, en.at(r));
            row["output"] = subsetToJson(S.points, *S.L, tb.rows[r]);
            rows.push_back(row);
        }
        j["rows"] = rows;
    }
    return j;
}

ClosureSpace closureFromJson(const json& j) {
    requireKind(j, "closure-space");
    ClosureSpace S;
    S.id = requireString(j, "id");
    if (!j.contains("quantale")) throw StructuralError("missing field 'quantale'");
    S.L = quantaleFromRef(j["quantale"]);
    S.points = requireLabelArray(j, "carrier");
    if (j.contains("closures")) {
        if (!j["closures"].is_object())
            throw StructuralError("'closures' must be an object keyed by point label");
        ClosureSpace::PointGenerated pg;
        for (const auto& p : S.points) {
            if (!j["closures"].contains(p))
                throw StructuralError("missing point closure for '" + p + "'");
            pg.closures.push_back(subsetFromJson(S.id, S.points, *S.L, j["closures"][p]));
        }
        if (j["closures"].size() != S.points.size())
            throw StructuralError("'closures' mentions points outside the carrier");
        S.op = std::move(pg);
    } else if (j.contains("rows")) {
        if (!j["rows"].is_array()) throw StructuralError("'rows' must be an array");
        LSubsetEnum en(S.id, S.points.size(), *S.L);
        std::vector<LSubset> rows(en.count(), LSubset{});
        std::vector<bool> seen(en.count(), false);
        for (const auto& row : j["rows"]) {
            if (!row.is_object() || !row.contains("input") || !row.contains("output"))
                throw StructuralError("each row needs 'input' and 'output' subsets");
            auto in = subsetFromJson(S.id, S.points, *S.L, row["input"]);
            auto out = subsetFromJson(S.id, S.points, *S.L, row["output"]);
            std::size_t r = en.rankOf(in);
            if (seen[r]) throw StructuralError("duplicate row for one input subset");
            seen[r] = true;
            rows[r] = std::move(out);
        }
        for (std::size_t r = 0; r < en.count(); ++r)
            if (!seen[r])
                throw StructuralError("closure table is not total; first missing input: " +
                                      renderSubset(S, en.at(r)));
        S.op = ClosureSpace::TableBacked{std::move(rows)};
    } else {
        throw StructuralError("closure-space needs either 'closures' or 'rows'");
    }
    return S;
}

json toJson(const ApproxRelation& R) {
    json j;
    j["kind"] = "approx-relation";
    j["source"] = toJson(R.source);
    j["target"] = toJson(R.target);
    json theta = json::array();
    const auto& L = *R.source.L;
    for (std::size_t x = 0; x < R.source.size(); ++x)
        for (std::size_t y = 0; y < R.target.size(); ++y)
            if (R.at(x, y) != L.bottom())
                theta.push_back(json::array(
                    {R.source.points[x], R.target.points[y], L.label(R.at(x, y))}));
    j["theta"] = theta;
    return j;
}

ApproxRelation relationFromJson(const json& j) {
    requireKind(j, "approx-relation");
    if (!j.contains("source") || !j.contains("target"))
        throw StructuralError("approx-relation needs inline 'source' and 'target' spaces");
    ApproxRelation R{closureFromJson(j["source"]), closureFromJson(j["target"]), {}};
    const auto& L = *R.source.L;
    R.theta.assign(R.source.size() * R.target.size(), L.bottom());
    if (!j.contains("theta") || !j["theta"].is_array())
        throw StructuralError("missing or non-array field 'theta'");
    for (const auto& t : j["theta"]) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() ||
            !t[2].is_string())
            throw StructuralError("theta entries must be [x, y, degree] label triples");
        int x = R.source.indexOf(t[0].get<std::string>());
        int y = R.target.indexOf(t[1].get<std::string>());
        R.at(static_cast<std::size_t>(x), static_cast<std::size_t>(y)) =
            L.indexOf(t[2].get<std::string>());
    }
    return R;
}

std::string kindOf(const LoadedObject& o) {
    switch (o.index()) {
        case 0: return "quantale";
        case 1: return "lordered-set";
        case 2: return "closure-space";
        default: return "approx-relation";
    }
}

LoadedObject loadAny(const json& j) {
    if (!j.is_object()) throw StructuralError("document root must be a JSON object");
    auto kind = requireString(j, "kind");
    if (kind == "quantale")
        return QuantalePtr(std::make_shared<const FiniteQuantale>(quantaleFromJson(j)));
    if (kind == "lordered-set") return lorderFromJson(j);
    if (kind == "closure-space") return closureFromJson(j);
    if (kind == "approx-relation") return relationFromJson(j);
    throw StructuralError("unknown kind '" + kind + "'");
}

LoadedObject loadFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw StructuralError("JSON parse error in " + path + ": " + e.what());
    }
    return loadAny(j);
}

void saveFile(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw StructuralError("cannot open file for writing: " + path);
    out << j.dump(2) << '\n';
}

}  // namespace qdom
