#include "g1/io.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace g1 {

using nlohmann::json;

namespace {

json poly_json(const UniPoly& p)
{
    json a = json::array();
    for (const auto& c : p.coeffs())
        a.push_back(to_string(c));
    return a;
}

Rational rational_json(const json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw Error(ErrorKind::InputError, "expected a rational as string or integer, got " + j.dump());
}

UniPoly poly_from_json(const json& j)
{
    if (!j.is_array())
        throw Error(ErrorKind::InputError, "polynomial must be an array of coefficients");
    Vec c;
    for (const auto& x : j)
        c.push_back(rational_json(x));
    return UniPoly(c);
}

json surface_json(const TopoSurface& s, const Gluings& g)
{
    json faces = json::array();
    for (const auto& f : s.faces())
        faces.push_back({{"id", f.id}, {"kind", to_string(f.kind)}});
    json edges = json::array();
    for (int e = 0; e < static_cast<int>(s.edges().size()); ++e) {
        const Edge& ed = s.edge(e);
        if (ed.implicit)
            continue;
        json sides = json::array();
        for (const auto& sd : ed.sides)
            sides.push_back({{"face", s.face(sd.face).id}, {"slot", sd.slot}, {"reversed", sd.reversed}});
        json je = {{"id", ed.id}, {"sides", sides}};
        if (e < static_cast<int>(g.size()) && g[e])
            je["gluing"] = {{"a", poly_json(g[e]->a)}, {"b", poly_json(g[e]->b)}, {"c", poly_json(g[e]->c)}};
        edges.push_back(je);
    }
    return {{"faces", faces}, {"edges", edges}};
}

// nlohmann prefixes its message with an id and a position; keep the rest.
std::string detail(const std::string& what)
{
    const auto p = what.find("column ");
    const auto q = p == std::string::npos ? p : what.find(": ", p);
    return q == std::string::npos ? what : what.substr(q + 2);
}

json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error(ErrorKind::InputError,
                    "JSON parse error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                        detail(e.what()));
    }
}

template <class T>
T field(const json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        throw Error(ErrorKind::InputError, where + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InputError, where + ": field '" + key + "' has the wrong type");
    }
}

} // namespace

SurfaceFile read_surface(const std::string& text)
{
    const json j = parse_json(text);
    std::vector<FaceSpec> faces;
    std::map<std::string, int> face_index;
    const json jfaces = field<json>(j, "faces", "surface");
    for (const auto& jf : jfaces) {
        const std::string id = field<std::string>(jf, "id", "face");
        face_index.emplace(id, static_cast<int>(faces.size()));
        faces.push_back({id, parse_face_kind(field<std::string>(jf, "kind", "face '" + id + "'"))});
    }
    std::vector<EdgeSpec> edges;
    std::map<std::string, EdgeGluing> data;
    const json je = j.contains("edges") ? j.at("edges") : json::array();
    for (const auto& ed : je) {
        EdgeSpec es;
        es.id = field<std::string>(ed, "id", "edge");
        const std::string where = "edge '" + es.id + "'";
        const json sides = field<json>(ed, "sides", where);
        for (const auto& sd : sides) {
            const std::string fid = field<std::string>(sd, "face", where);
            auto it = face_index.find(fid);
            if (it == face_index.end())
                throw Error(ErrorKind::DanglingReference, where + " references unknown face '" + fid + "'");
            const bool reversed = sd.contains("reversed") ? field<bool>(sd, "reversed", where) : false;
            es.sides.push_back({it->second, field<int>(sd, "slot", where), reversed});
        }
        if (ed.contains("gluing")) {
            if (es.sides.size() != 2)
                throw Error(ErrorKind::InputError, where + " is a boundary edge but has gluing data");
            const json& gl = ed.at("gluing");
            data[es.id] = normalize({poly_from_json(field<json>(gl, "a", where)),
                                     poly_from_json(field<json>(gl, "b", where)),
                                     poly_from_json(field<json>(gl, "c", where))});
        }
        edges.push_back(es);
    }
    SurfaceFile out{build_surface(faces, edges), {}};
    out.gluings.resize(out.surface.edges().size());
    for (const auto& [id, d] : data)
        out.gluings[out.surface.edge_index(id)] = d;
    return out;
}

std::string write_surface(const TopoSurface& s, const Gluings& g) { return surface_json(s, g).dump(2) + "\n"; }

std::string surface_hash(const TopoSurface& s, const Gluings& g)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : surface_json(s, g).dump()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::string write_basis(const TopoSurface& s, const Gluings& g, const SplineBasis& b)
{
    json records = json::array();
    for (const auto& bf : b.functions) {
        json tag = {{"kind", to_string(bf.tag.kind)}, {"target", bf.tag.target}};
        if (bf.tag.kind == TagKind::FaceFn) {
            tag["i"] = bf.tag.i;
            tag["j"] = bf.tag.j;
        } else {
            tag["index"] = bf.tag.index;
        }
        json faces = json::object();
        for (std::size_t f = 0; f < bf.spline.faces.size(); ++f) {
            if (bf.spline.faces[f].is_zero())
                continue;
            json c = json::array();
            for (const auto& x : bf.spline.faces[f].coeffs())
                c.push_back(to_string(x));
            faces[s.face(static_cast<int>(f)).id] = c;
        }
        records.push_back({{"tag", tag}, {"faces", faces}});
    }
    json j = {{"surface-hash", surface_hash(s, g)},
              {"degree", b.k},
              {"count", b.functions.size()},
              {"records", records}};
    return j.dump(1) + "\n";
}

SplineBasis read_basis(const std::string& text, const TopoSurface& s, const Gluings& g)
{
    const json j = parse_json(text);
    const std::string hash = field<std::string>(j, "surface-hash", "basis");
    if (hash != surface_hash(s, g))
        throw Error(ErrorKind::InputError, "basis file was computed for a different surface (hash " + hash + ")");
    SplineBasis b;
    b.k = field<int>(j, "degree", "basis");
    if (b.k < 0)
        throw Error(ErrorKind::InputError, "negative degree");
    const json records = field<json>(j, "records", "basis");
    for (const auto& r : records) {
        const json tj = field<json>(r, "tag", "record");
        BasisTag tag;
        tag.kind = parse_tag_kind(field<std::string>(tj, "kind", "tag"));
        tag.target = field<std::string>(tj, "target", "tag");
        if (tag.kind == TagKind::FaceFn) {
            tag.i = field<int>(tj, "i", "tag");
            tag.j = field<int>(tj, "j", "tag");
        } else {
            tag.index = field<int>(tj, "index", "tag");
        }
        Spline sp = Spline::zero(s, b.k);
        const json faces = field<json>(r, "faces", "record");
        for (const auto& [fid, coeffs] : faces.items()) {
            int f = 0;
            try {
                f = s.face_index(fid);
            } catch (const Error&) {
                throw Error(ErrorKind::InputError, "record " + tag.str() + " references unknown face '" + fid + "'");
            }
            if (!coeffs.is_array() || coeffs.size() != sp.faces[f].coeffs().size())
                throw Error(ErrorKind::InputError, "record " + tag.str() + ": wrong coefficient count on face '" +
                                                       fid + "'");
            for (std::size_t x = 0; x < coeffs.size(); ++x)
                sp.faces[f].coeffs()[x] = rational_json(coeffs[x]);
        }
        b.functions.push_back({tag, sp});
    }
    if (j.contains("count") && j.at("count") != b.functions.size())
        throw Error(ErrorKind::InputError, "record count does not match the header");
    return b;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::InputError, "cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw Error(ErrorKind::InputError, "cannot write '" + path + "'");
}

} // namespace g1
