#include "mdrg/io.hpp"

#include <fstream>
#include <sstream>

namespace mdrg {

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what)
{
    throw InputError("field '" + field + "': " + what);
}

const Json& require(const Json& doc, const std::string& key, const std::string& where = {})
{
    if (!doc.is_object())
        field_error(where.empty() ? "<root>" : where, "expected an object");
    const auto it = doc.find(key);
    if (it == doc.end())
        field_error(where.empty() ? key : where + "." + key, "missing");
    return *it;
}

std::string as_name(const Json& v, const std::string& field)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    field_error(field, "expected a string or integer vertex name");
}

const Json& require_array(const Json& v, const std::string& field)
{
    if (!v.is_array())
        field_error(field, "expected an array");
    return v;
}

} // namespace

Json parse_json_text(std::string_view text, const std::string& origin)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string what = e.what();
        if (const auto pos = what.find("syntax error"); pos != std::string::npos)
            what = what.substr(pos);
        throw InputError(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what);
    }
}

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str(), path.string());
}

Json graph_to_json(const ColoredGraph& g)
{
    Json edges = Json::array();
    for (const auto& e : g.edges())
        edges.push_back(Json::array({e.u, e.v, e.color}));
    return Json{{"kind", "graph"}, {"m", g.m()}, {"vertices", g.vertex_names()}, {"edges", std::move(edges)}};
}

ColoredGraph graph_from_json(const Json& doc)
{
    const auto& m = require(doc, "m");
    if (!m.is_number_integer() || m.get<long long>() < 1)
        field_error("m", "expected a positive integer");
    std::vector<std::string> vertices;
    const auto& vs = require_array(require(doc, "vertices"), "vertices");
    for (std::size_t i = 0; i < vs.size(); ++i)
        vertices.push_back(as_name(vs[i], "vertices[" + std::to_string(i) + "]"));
    std::vector<ColoredEdge> edges;
    const auto& es = require_array(require(doc, "edges"), "edges");
    for (std::size_t i = 0; i < es.size(); ++i) {
        const std::string field = "edges[" + std::to_string(i) + "]";
        if (!es[i].is_array() || es[i].size() != 3)
            field_error(field, "expected [u, v, color]");
        if (!es[i][2].is_number_integer())
            field_error(field + "[2]", "expected an integer color");
        edges.push_back({as_name(es[i][0], field + "[0]"), as_name(es[i][1], field + "[1]"), es[i][2].get<int>()});
    }
    try {
        return ColoredGraph(m.get<std::size_t>(), std::move(vertices), edges);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("graph: ") + e.what());
    }
}

Json scheme_to_json(const SchemeClasses& s)
{
    const std::size_t n = s.vertex_count();
    Json classes = Json::array();
    for (std::size_t k = 0; k < s.class_count(); ++k) {
        Json rows = Json::array();
        for (std::size_t x = 0; x < n; ++x) {
            std::string row(n, '0');
            for (std::size_t y = 0; y < n; ++y)
                if (s.at(k, x, y))
                    row[y] = '1';
            rows.push_back(std::move(row));
        }
        classes.push_back(Json{{"tag", s.tag(k)}, {"rows", std::move(rows)}});
    }
    return Json{{"kind", "scheme"}, {"vertices", s.vertex_names()}, {"classes", std::move(classes)}};
}

SchemeClasses scheme_from_json(const Json& doc)
{
    const auto& cs = require_array(require(doc, "classes"), "classes");
    if (cs.empty())
        field_error("classes", "expected at least one class");
    std::vector<std::string> names;
    if (doc.contains("vertices")) {
        const auto& vs = require_array(doc["vertices"], "vertices");
        for (std::size_t i = 0; i < vs.size(); ++i)
            names.push_back(as_name(vs[i], "vertices[" + std::to_string(i) + "]"));
    }
    std::size_t n = 0;
    std::vector<std::string> tags;
    std::vector<std::vector<std::uint8_t>> matrices;
    for (std::size_t k = 0; k < cs.size(); ++k) {
        const std::string field = "classes[" + std::to_string(k) + "]";
        const auto& tag = require(cs[k], "tag", field);
        if (!tag.is_string())
            field_error(field + ".tag", "expected a string");
        const auto& rows = require_array(require(cs[k], "rows", field), field + ".rows");
        if (k == 0)
            n = rows.size();
        if (rows.size() != n)
            field_error(field + ".rows", "expected " + std::to_string(n) + " rows");
        std::vector<std::uint8_t> matrix(n * n);
        for (std::size_t x = 0; x < n; ++x) {
            const std::string rf = field + ".rows[" + std::to_string(x) + "]";
            if (!rows[x].is_string() || rows[x].get_ref<const std::string&>().size() != n)
                field_error(rf, "expected a string of " + std::to_string(n) + " characters '0'/'1'");
            const auto& row = rows[x].get_ref<const std::string&>();
            for (std::size_t y = 0; y < n; ++y) {
                if (row[y] != '0' && row[y] != '1')
                    field_error(rf, "character " + std::to_string(y) + " is not '0' or '1'");
                matrix[x * n + y] = row[y] == '1';
            }
        }
        tags.push_back(tag.get<std::string>());
        matrices.push_back(std::move(matrix));
    }
    try {
        return SchemeClasses(n, std::move(tags), std::move(matrices), std::move(names));
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("scheme: ") + e.what());
    }
}

Json tensor_to_json(const IntersectionTensor& t)
{
    Json p = Json::array();
    for (const auto& [abc, v] : t.entries())
        p.push_back(Json::array({t.tag(abc[0]), t.tag(abc[1]), t.tag(abc[2]), format_rational(v)}));
    return Json{{"kind", "tensor"}, {"tags", t.tags()}, {"p", std::move(p)}};
}

IntersectionTensor tensor_from_json(const Json& doc)
{
    const auto& ts = require_array(require(doc, "tags"), "tags");
    std::vector<std::string> tags;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!ts[i].is_string())
            field_error("tags[" + std::to_string(i) + "]", "expected a string");
        if (!index.emplace(ts[i].get<std::string>(), i).second)
            field_error("tags[" + std::to_string(i) + "]", "duplicate tag");
        tags.push_back(ts[i].get<std::string>());
    }
    std::map<ClassTriple, Rational> entries;
    const auto& ps = require_array(require(doc, "p"), "p");
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const std::string field = "p[" + std::to_string(i) + "]";
        if (!ps[i].is_array() || ps[i].size() != 4)
            field_error(field, "expected [a, b, c, \"p/q\"]");
        ClassTriple abc{};
        for (std::size_t j = 0; j < 3; ++j) {
            const auto it = ps[i][j].is_string() ? index.find(ps[i][j].get<std::string>()) : index.end();
            if (it == index.end())
                field_error(field + "[" + std::to_string(j) + "]", "unknown tag");
            abc[j] = it->second;
        }
        Rational v;
        try {
            if (ps[i][3].is_number_integer())
                v = Rational(ps[i][3].get<long long>());
            else if (ps[i][3].is_string())
                v = parse_rational(ps[i][3].get<std::string>());
            else
                field_error(field + "[3]", "expected a rational string \"p/q\"");
        } catch (const std::invalid_argument& e) {
            field_error(field + "[3]", e.what());
        }
        if (!entries.emplace(abc, v).second)
            field_error(field, "repeated triple");
    }
    try {
        return IntersectionTensor(std::move(tags), std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("tensor: ") + e.what());
    }
}

Json distance_table_to_json(const DistanceTable& table, const std::vector<std::string>& vertex_names)
{
    Json labels = Json::array();
    for (const auto& l : table.labels())
        labels.push_back(l.to_string());
    Json rows = Json::object();
    for (std::size_t x = 0; x < table.vertex_count(); ++x) {
        Json row = Json::object();
        for (std::size_t y = 0; y < table.vertex_count(); ++y)
            row[vertex_names[y]] = table.at(x, y).to_string();
        rows[vertex_names[x]] = std::move(row);
    }
    return Json{{"kind", "distance_table"}, {"order", table.order().to_string()}, {"D", std::move(labels)},
                {"rows", std::move(rows)}};
}

std::string document_kind(const Json& doc)
{
    if (!doc.is_object())
        throw InputError("field '<root>': expected an object");
    if (const auto it = doc.find("kind"); it != doc.end()) {
        if (!it->is_string())
            field_error("kind", "expected a string");
        return it->get<std::string>();
    }
    if (doc.contains("edges"))
        return "graph";
    if (doc.contains("classes"))
        return "scheme";
    if (doc.contains("p"))
        return "tensor";
    throw InputError("cannot tell the document kind: expected one of the fields edges, classes, p");
}

SchemeSource scheme_source_from_json(const Json& doc)
{
    const auto kind = document_kind(doc);
    if (kind == "graph")
        return graph_from_json(doc);
    if (kind == "scheme")
        return scheme_from_json(doc);
    if (kind == "tensor")
        return tensor_from_json(doc);
    field_error("kind", "expected graph, scheme or tensor, got '" + kind + "'");
}

} // namespace mdrg
