#include "homhopf/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace homhopf::io {

namespace {

// Keeps hostile files from asking for n^3-sized dense tables.
constexpr std::size_t kMaxDimension = 64;

[[noreturn]] void fail(const std::string& msg) { throw InputError(msg); }

void require(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
}

bool is_primitive(const json& j) { return !j.is_array() && !j.is_object(); }

void emit(std::ostringstream& os, const json& j, int indent) {
    const std::string pad(indent + 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) os << ",\n";
            first = false;
            os << pad << json(it.key()).dump() << ": ";
            emit(os, it.value(), indent + 2);
        }
        os << "\n" << std::string(indent, ' ') << "}";
    } else if (j.is_array()) {
        if (j.empty()) {
            os << "[]";
            return;
        }
        bool flat = true;
        for (const auto& e : j) flat = flat && is_primitive(e);
        if (flat) {
            os << "[";
            for (std::size_t k = 0; k < j.size(); ++k) os << (k ? ", " : "") << j[k].dump();
            os << "]";
            return;
        }
        os << "[\n";
        for (std::size_t k = 0; k < j.size(); ++k) {
            if (k) os << ",\n";
            os << pad;
            emit(os, j[k], indent + 2);
        }
        os << "\n" << std::string(indent, ' ') << "]";
    } else {
        os << j.dump();
    }
}

// ---- writing ----

json entries(const LinMap& flat, const std::vector<std::size_t>& in_dims, const std::vector<std::size_t>& out_dims) {
    json out = json::array();
    for (std::size_t i = 0; i < flat.domain_dim(); ++i) {
        const auto in_idx = unflatten_index(in_dims, i);
        for (std::size_t o = 0; o < flat.codomain_dim(); ++o) {
            const Scalar& c = flat.at(o, i);
            if (c == 0) continue;
            json e = json::array();
            for (auto k : in_idx) e.push_back(k);
            for (auto k : unflatten_index(out_dims, o)) e.push_back(k);
            e.push_back(format_scalar(c));
            out.push_back(std::move(e));
        }
    }
    return out;
}

json entries(const MultilinearMap& f) { return entries(f.flat(), f.in_dims(), f.out_dims()); }
json entries(const LinMap& f) { return entries(f, {f.domain_dim()}, {f.codomain_dim()}); }

json entries(const Vector& v) {
    json out = json::array();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out.push_back(json::array({i, format_scalar(v[i])}));
    return out;
}

json header(const std::string& kind) { return json{{"format_version", kFormatVersion}, {"kind", kind}}; }

json basis_json(const std::vector<std::string>& names, std::size_t n, const std::string& stem) {
    json out = json::array();
    for (std::size_t i = 0; i < n; ++i) out.push_back(i < names.size() ? names[i] : stem + std::to_string(i));
    return out;
}

json carrier_or(const json& carrier, const HopfPtr& h) { return carrier.is_null() ? to_json(*h) : carrier; }

json pair_json(const LinMap& alpha, const LinMap& beta) {
    return json{{"alpha", entries(alpha)}, {"beta", entries(beta)}};
}

std::vector<std::string> crossed_names(const DiagonalCrossedProduct& p) {
    std::vector<std::string> names;
    const auto dual = basis_json(p.dual()->basis_names(), p.hopf()->dim(), "e");
    for (const auto& f : dual)
        for (std::size_t j = 0; j < p.base().dim(); ++j) {
            const auto& hn = p.hopf()->basis_names();
            std::string a = p.base().dim() == p.hopf()->dim() && j < hn.size() ? hn[j] : "a" + std::to_string(j);
            names.push_back(f.get<std::string>() + "#" + a);
        }
    return names;
}

// ---- reading ----

void expect_kind(const json& doc, const std::string& kind, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional = {}) {
    require(doc.is_object(), "expected a JSON object for kind '" + kind + "'");
    require(doc.contains("format_version") && doc["format_version"].is_number_integer(), "missing format_version");
    require(doc["format_version"].get<long long>() == kFormatVersion,
            "unsupported format_version " + doc["format_version"].dump());
    require(doc.contains("kind") && doc["kind"].is_string(), "missing kind");
    require(doc["kind"].get<std::string>() == kind,
            "expected kind '" + kind + "', found '" + doc["kind"].get<std::string>() + "'");
    std::set<std::string> known{"format_version", "kind", "report", "example", "notes"};
    for (const char* r : required) {
        require(doc.contains(r), "kind '" + kind + "' requires field '" + r + "'");
        known.insert(r);
    }
    for (const char* o : optional) known.insert(o);
    for (auto it = doc.begin(); it != doc.end(); ++it)
        require(known.count(it.key()) > 0, "unknown field '" + it.key() + "' in kind '" + kind + "'");
}

std::size_t read_index(const json& j, std::size_t bound, const std::string& what) {
    require(j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0),
            what + ": index " + j.dump() + " is not a non-negative integer");
    const auto v = j.get<unsigned long long>();
    require(v < bound, what + ": index " + j.dump() + " out of range (< " + std::to_string(bound) + ")");
    return static_cast<std::size_t>(v);
}

Scalar read_coefficient(const json& j, const std::string& what) {
    require(j.is_string(), what + ": coefficient " + j.dump() + " must be a \"p/q\" string");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const InputError& e) {
        fail(what + ": " + e.what());
    }
}

std::size_t read_dimension(const json& doc, const char* key = "dimension") {
    require(doc.contains(key), std::string("missing ") + key);
    const auto& j = doc[key];
    require(j.is_number_integer() && j.get<long long>() >= 1, std::string(key) + " must be a positive integer");
    const auto n = static_cast<std::size_t>(j.get<long long>());
    require(n <= kMaxDimension, std::string(key) + " exceeds " + std::to_string(kMaxDimension));
    return n;
}

LinMap read_flat(const json& arr, const std::vector<std::size_t>& in_dims, const std::vector<std::size_t>& out_dims,
                 const std::string& what) {
    require(arr.is_array(), what + " must be an array of entries");
    const std::size_t in_size = flat_size(in_dims), out_size = flat_size(out_dims);
    const std::size_t arity = in_dims.size() + out_dims.size();
    LinMap flat(out_size, in_size);
    std::vector<bool> seen(in_size * out_size, false);
    for (const auto& e : arr) {
        require(e.is_array() && e.size() == arity + 1,
                what + ": entry " + e.dump() + " must have " + std::to_string(arity + 1) + " elements");
        std::vector<std::size_t> in_idx, out_idx;
        for (std::size_t k = 0; k < in_dims.size(); ++k) in_idx.push_back(read_index(e[k], in_dims[k], what));
        for (std::size_t k = 0; k < out_dims.size(); ++k)
            out_idx.push_back(read_index(e[in_dims.size() + k], out_dims[k], what));
        const std::size_t i = flatten_index(in_dims, in_idx), o = flatten_index(out_dims, out_idx);
        require(!seen[o * in_size + i], what + ": duplicate entry " + e.dump());
        seen[o * in_size + i] = true;
        flat.at(o, i) = read_coefficient(e[arity], what);
    }
    return flat;
}

MultilinearMap read_multilinear(const json& doc, const char* key, std::vector<std::size_t> in_dims,
                                std::vector<std::size_t> out_dims) {
    LinMap flat = read_flat(doc[key], in_dims, out_dims, key);
    return MultilinearMap(std::move(in_dims), std::move(out_dims), std::move(flat));
}

LinMap read_linmap(const json& arr, std::size_t n, const std::string& what) { return read_flat(arr, {n}, {n}, what); }

Vector read_vector(const json& arr, std::size_t n, const std::string& what) {
    const LinMap f = read_flat(arr, {n}, {}, what);
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = f.at(0, i);
    return v;
}

std::vector<std::string> read_basis(const json& doc, std::size_t n) {
    std::vector<std::string> names;
    if (!doc.contains("basis")) return names;
    const auto& b = doc["basis"];
    require(b.is_array() && b.size() == n, "basis must list exactly dimension names");
    for (const auto& s : b) {
        require(s.is_string(), "basis names must be strings");
        names.push_back(s.get<std::string>());
    }
    return names;
}

HomAlgebra read_algebra(const json& doc) {
    expect_kind(doc, "algebra", {"dimension", "xi", "mult", "unit"}, {"basis"});
    const std::size_t n = read_dimension(doc);
    read_basis(doc, n);
    return HomAlgebra(read_linmap(doc["xi"], n, "xi"), read_multilinear(doc, "mult", {n, n}, {n}),
                      read_vector(doc["unit"], n, "unit"));
}

std::pair<LinMap, LinMap> read_pair(const json& j, std::size_t n) {
    require(j.is_object() && j.contains("alpha") && j.contains("beta") && j.size() == 2,
            "an automorphism pair is an object with exactly 'alpha' and 'beta'");
    return {read_linmap(j["alpha"], n, "alpha"), read_linmap(j["beta"], n, "beta")};
}

}  // namespace

const std::vector<std::string>& kinds() {
    static const std::vector<std::string> k{"hopf",      "algebra",    "automorphism", "aut-pair",    "module",
                                            "comodule",  "bicomodule-algebra",         "yd-module",   "linear-maps",
                                            "t-coalgebra"};
    return k;
}

std::string to_text(const json& doc) {
    std::ostringstream os;
    emit(os, doc, 0);
    os << "\n";
    return os.str();
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
}

json read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

void write_file(const fs::path& path, const json& doc) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), "cannot write " + path.string());
    out << to_text(doc);
}

json to_json(const HomHopfAlgebra& h) {
    json doc = header("hopf");
    const std::size_t n = h.dim();
    doc["dimension"] = n;
    doc["basis"] = basis_json(h.basis_names(), n, "e");
    doc["xi"] = entries(h.xi());
    doc["mult"] = entries(h.mult());
    doc["unit"] = entries(h.unit());
    doc["comult"] = entries(h.comult());
    doc["counit"] = entries(h.counit());
    doc["antipode"] = entries(h.antipode());
    return doc;
}

json to_json(const HomAlgebra& a, const std::vector<std::string>& basis) {
    json doc = header("algebra");
    doc["dimension"] = a.dim();
    doc["basis"] = basis_json(basis, a.dim(), "e");
    doc["xi"] = entries(a.xi());
    doc["mult"] = entries(a.mult());
    doc["unit"] = entries(a.unit());
    return doc;
}

json to_json(const HopfAutomorphism& f, const json& carrier) {
    json doc = header("automorphism");
    doc["carrier"] = carrier_or(carrier, f.carrier());
    doc["matrix"] = entries(f.matrix());
    return doc;
}

json to_json(const std::vector<AutPair>& pairs, const json& carrier) {
    require(!pairs.empty(), "an aut-pair file needs at least one pair");
    json doc = header("aut-pair");
    doc["carrier"] = carrier_or(carrier, pairs.front().carrier());
    json list = json::array();
    for (const auto& p : pairs) {
        require(p.carrier() == pairs.front().carrier(), "pairs live on different Hopf algebras");
        list.push_back(pair_json(p.alpha.matrix(), p.beta.matrix()));
    }
    doc["pairs"] = std::move(list);
    return doc;
}

json to_json(const HomModule& m, const json& carrier) {
    json doc = header("module");
    doc["carrier"] = carrier.is_null() ? to_json(*m.algebra()) : carrier;
    doc["dimension"] = m.dim();
    doc["basis"] = basis_json({}, m.dim(), "m");
    doc["xi"] = entries(m.xi());
    doc["action"] = entries(m.action());
    return doc;
}

json to_json(const HomComodule& m, const json& carrier) {
    require(!carrier.is_null(), "a comodule file needs its Hopf algebra carrier");
    json doc = header("comodule");
    doc["carrier"] = carrier;
    doc["dimension"] = m.dim();
    doc["basis"] = basis_json({}, m.dim(), "m");
    doc["xi"] = entries(m.xi());
    doc["coaction"] = entries(m.coaction());
    return doc;
}

json to_json(const BicomoduleAlgebra& a, const json& carrier) {
    json doc = header("bicomodule-algebra");
    doc["carrier"] = carrier_or(carrier, a.hopf());
    doc["algebra"] = to_json(*a.algebra());
    doc["left_coaction"] = entries(a.left_coaction());
    doc["right_coaction"] = entries(a.right_coaction());
    return doc;
}

json to_json(const YDModule& m, std::optional<int> grade, const json& carrier) {
    json doc = header("yd-module");
    doc["carrier"] = carrier_or(carrier, m.carrier());
    doc["pair"] = pair_json(m.pair().alpha.matrix(), m.pair().beta.matrix());
    if (grade) doc["grade"] = *grade;
    doc["dimension"] = m.dim();
    doc["basis"] = basis_json({}, m.dim(), "m");
    doc["xi"] = entries(m.xi());
    doc["action"] = entries(m.action());
    doc["coaction"] = entries(m.coaction());
    return doc;
}

json to_json(const HopfTCoalgebra& t, const json& carrier) {
    json doc = header("t-coalgebra");
    doc["carrier"] = carrier_or(carrier, t.carrier);
    json pairs = json::array(), comps = json::array(), comult = json::array(), anti = json::array(),
         conj = json::array();
    for (const auto& p : t.index) pairs.push_back(pair_json(p.alpha.matrix(), p.beta.matrix()));
    for (const auto& c : t.components) comps.push_back(to_json(*c.product(), crossed_names(c)));
    for (const auto& [ij, d] : t.comult)
        comult.push_back(json{{"i", ij.first}, {"j", ij.second}, {"entries", entries(d)}});
    for (const auto& [i, s] : t.antipodes) anti.push_back(json{{"i", i}, {"entries", entries(s)}});
    for (const auto& [ij, f] : t.conjugations)
        conj.push_back(json{{"i", ij.first}, {"j", ij.second}, {"entries", entries(f)}});
    doc["pairs"] = std::move(pairs);
    doc["components"] = std::move(comps);
    doc["comult"] = std::move(comult);
    doc["counit"] = entries(t.counit);
    doc["antipodes"] = std::move(anti);
    doc["conjugations"] = std::move(conj);
    return doc;
}

json linear_maps_json(const std::vector<std::pair<std::string, LinMap>>& maps) {
    json doc = header("linear-maps");
    json list = json::array();
    for (const auto& [name, f] : maps)
        list.push_back(json{{"name", name},
                            {"domain", f.domain_dim()},
                            {"codomain", f.codomain_dim()},
                            {"entries", entries(f)}});
    doc["maps"] = std::move(list);
    return doc;
}

json report_json(const AxiomReport& report) {
    json results = json::array();
    for (const auto& r : report.results()) {
        json e{{"id", r.id}, {"passed", r.passed}, {"cases", r.cases}};
        if (r.counterexample) {
            const auto& c = *r.counterexample;
            e["counterexample"] = json{{"indices", c.indices}, {"lhs", c.lhs.to_string()}, {"rhs", c.rhs.to_string()}};
        }
        results.push_back(std::move(e));
    }
    return json{{"passed", report.passed()}, {"results", std::move(results)}};
}

json example_json(const ExampleSpec& spec) {
    json params = json::object();
    for (const auto& [k, v] : spec.parameters) params[k] = format_scalar(v);
    return json{{"name", spec.name}, {"parameters", std::move(params)}, {"notes", spec.notes}};
}

HopfPtr Reader::hopf(const json& doc, const fs::path& dir) {
    if (doc.is_string()) return carrier(doc, dir);
    expect_kind(doc, "hopf", {"dimension", "xi", "mult", "unit", "comult", "counit", "antipode"}, {"basis"});
    const std::size_t n = read_dimension(doc);
    auto names = read_basis(doc, n);
    HomAlgebra alg(read_linmap(doc["xi"], n, "xi"), read_multilinear(doc, "mult", {n, n}, {n}),
                   read_vector(doc["unit"], n, "unit"));
    HomCoalgebra coalg(alg.xi(), read_multilinear(doc, "comult", {n}, {n, n}), read_vector(doc["counit"], n, "counit"));
    HomHopfAlgebra h(std::move(alg), std::move(coalg), read_linmap(doc["antipode"], n, "antipode"), std::move(names));
    const std::string key = to_text(to_json(h));
    auto it = hopfs_.find(key);
    if (it != hopfs_.end()) return it->second;
    auto ptr = share(std::move(h));
    hopfs_.emplace(key, ptr);
    return ptr;
}

AlgebraPtr Reader::algebra(const json& doc, const fs::path& dir) {
    if (doc.is_string()) return algebra_carrier(doc, dir);
    if (doc.is_object() && doc.value("kind", "") == "hopf") return algebra_of(hopf(doc, dir));
    HomAlgebra a = read_algebra(doc);
    const std::string key = to_text(to_json(a, read_basis(doc, a.dim())));
    auto it = algebras_.find(key);
    if (it != algebras_.end()) return it->second;
    auto ptr = share(std::move(a));
    algebras_.emplace(key, ptr);
    return ptr;
}

HopfPtr Reader::carrier(const json& ref, const fs::path& dir) {
    if (ref.is_string()) {
        const fs::path p = dir / ref.get<std::string>();
        return hopf(read_file(p), p.parent_path());
    }
    return hopf(ref, dir);
}

AlgebraPtr Reader::algebra_carrier(const json& ref, const fs::path& dir) {
    if (ref.is_string()) {
        const fs::path p = dir / ref.get<std::string>();
        return algebra(read_file(p), p.parent_path());
    }
    return algebra(ref, dir);
}

std::pair<HopfPtr, LinMap> Reader::raw_automorphism(const json& doc, const fs::path& dir) {
    expect_kind(doc, "automorphism", {"carrier", "matrix"});
    auto h = carrier(doc["carrier"], dir);
    return {h, read_linmap(doc["matrix"], h->dim(), "matrix")};
}

HopfAutomorphism Reader::automorphism(const json& doc, const fs::path& dir) {
    auto [h, m] = raw_automorphism(doc, dir);
    return HopfAutomorphism(h, m);
}

RawAutPairs Reader::raw_aut_pairs(const json& doc, const fs::path& dir) {
    expect_kind(doc, "aut-pair", {"carrier", "pairs"});
    RawAutPairs out{carrier(doc["carrier"], dir), {}};
    require(doc["pairs"].is_array() && !doc["pairs"].empty(), "pairs must be a non-empty array");
    for (const auto& p : doc["pairs"]) out.pairs.push_back(read_pair(p, out.carrier->dim()));
    return out;
}

std::vector<AutPair> Reader::aut_pairs(const json& doc, const fs::path& dir) {
    auto raw = raw_aut_pairs(doc, dir);
    std::vector<AutPair> out;
    for (auto& [a, b] : raw.pairs)
        out.push_back(AutPair{HopfAutomorphism(raw.carrier, a), HopfAutomorphism(raw.carrier, b)});
    return out;
}

HomModule Reader::module(const json& doc, const fs::path& dir) {
    expect_kind(doc, "module", {"carrier", "dimension", "xi", "action"}, {"basis"});
    auto a = algebra_carrier(doc["carrier"], dir);
    const std::size_t d = read_dimension(doc);
    read_basis(doc, d);
    return HomModule(a, read_linmap(doc["xi"], d, "xi"), read_multilinear(doc, "action", {a->dim(), d}, {d}));
}

HomComodule Reader::comodule(const json& doc, const fs::path& dir) {
    expect_kind(doc, "comodule", {"carrier", "dimension", "xi", "coaction"}, {"basis"});
    auto h = carrier(doc["carrier"], dir);
    const std::size_t d = read_dimension(doc);
    read_basis(doc, d);
    return HomComodule(coalgebra_of(h), read_linmap(doc["xi"], d, "xi"),
                       read_multilinear(doc, "coaction", {d}, {d, h->dim()}));
}

BicomoduleAlgebra Reader::bicomodule_algebra(const json& doc, const fs::path& dir) {
    expect_kind(doc, "bicomodule-algebra", {"carrier", "algebra", "left_coaction", "right_coaction"});
    auto h = carrier(doc["carrier"], dir);
    auto a = algebra_carrier(doc["algebra"], dir);
    const std::size_t n = h->dim(), m = a->dim();
    return BicomoduleAlgebra(a, h, read_multilinear(doc, "left_coaction", {m}, {n, m}),
                             read_multilinear(doc, "right_coaction", {m}, {m, n}));
}

YDModule Reader::yd_module(const json& doc, const fs::path& dir) {
    expect_kind(doc, "yd-module", {"carrier", "pair", "dimension", "xi", "action", "coaction"}, {"basis", "grade"});
    auto h = carrier(doc["carrier"], dir);
    const std::size_t n = h->dim(), d = read_dimension(doc);
    read_basis(doc, d);
    grade(doc);
    auto [a, b] = read_pair(doc["pair"], n);
    AutPair p{HopfAutomorphism(h, a), HopfAutomorphism(h, b)};
    return YDModule(p, read_linmap(doc["xi"], d, "xi"), read_multilinear(doc, "action", {n, d}, {d}),
                    read_multilinear(doc, "coaction", {d}, {d, n}));
}

std::optional<int> Reader::grade(const json& doc) {
    if (!doc.contains("grade")) return std::nullopt;
    const auto& g = doc["grade"];
    require(g.is_number_integer() && g.get<long long>() >= -64 && g.get<long long>() <= 64,
            "grade must be an integer in [-64, 64]");
    return static_cast<int>(g.get<long long>());
}

std::vector<std::pair<std::string, LinMap>> Reader::linear_maps(const json& doc) {
    expect_kind(doc, "linear-maps", {"maps"});
    require(doc["maps"].is_array(), "maps must be an array");
    std::vector<std::pair<std::string, LinMap>> out;
    for (const auto& m : doc["maps"]) {
        require(m.is_object() && m.contains("name") && m["name"].is_string() && m.contains("entries"),
                "each map needs a name and entries");
        const std::size_t dom = read_dimension(m, "domain"), cod = read_dimension(m, "codomain");
        out.emplace_back(m["name"].get<std::string>(), read_flat(m["entries"], {dom}, {cod}, m["name"].get<std::string>()));
    }
    return out;
}

std::pair<HopfPtr, std::vector<AutPair>> Reader::t_coalgebra_index(const json& doc, const fs::path& dir) {
    expect_kind(doc, "t-coalgebra",
                {"carrier", "pairs", "components", "comult", "counit", "antipodes", "conjugations"});
    auto h = carrier(doc["carrier"], dir);
    require(doc["pairs"].is_array() && !doc["pairs"].empty(), "pairs must be a non-empty array");
    std::vector<AutPair> pairs;
    for (const auto& p : doc["pairs"]) {
        auto [a, b] = read_pair(p, h->dim());
        pairs.push_back(AutPair{HopfAutomorphism(h, a), HopfAutomorphism(h, b)});
    }
    return {h, pairs};
}

}  // namespace homhopf::io
