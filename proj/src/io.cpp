#include "novcoh/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

namespace novcoh::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing key '") + key + "'");
    return *it;
}

long long as_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<long long>();
}

std::size_t as_size(const Json& j, const std::string& where) {
    const auto v = as_int(j, where);
    if (v < 0) fail(where, "expected a nonnegative integer");
    return static_cast<std::size_t>(v);
}

int parse_degree(std::string_view s, const std::string& where) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) fail(where, "bad degree key '" + std::string(s) + "'");
    return v;
}

std::pair<int, int> parse_pair(std::string_view s, const std::string& where) {
    const auto comma = s.find(',');
    if (comma == std::string_view::npos) fail(where, "bad key '" + std::string(s) + "', expected \"p,q\"");
    return {parse_degree(s.substr(0, comma), where), parse_degree(s.substr(comma + 1), where)};
}

std::string pair_key(int p, int q) { return std::to_string(p) + "," + std::to_string(q); }

void check_header(const Json& j, const char* kind, const std::string& where) {
    if (as_int(field(j, "fmt", where), where + ".fmt") != kFormat) fail(where + ".fmt", "unsupported schema version");
    if (auto it = j.find("kind"); it != j.end() && *it != kind) {
        fail(where + ".kind", std::string("expected '") + kind + "'");
    }
}

Json header(const char* kind) { return Json{{"fmt", kFormat}, {"kind", kind}}; }

template <class E, class Parse>
Matrix<E> matrix_from_json(const Json& j, const BaseRing& ring, std::size_t rows, std::size_t cols,
                           const std::string& where, Parse parse) {
    const auto r = as_size(field(j, "rows", where), where + ".rows");
    const auto c = as_size(field(j, "cols", where), where + ".cols");
    if (r != rows || c != cols) {
        fail(where, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix, got " +
                        std::to_string(r) + "x" + std::to_string(c));
    }
    const Json& e = field(j, "entries", where);
    if (!e.is_array() || e.size() != rows) fail(where + ".entries", "expected " + std::to_string(rows) + " rows");
    Matrix<E> m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string wr = where + ".entries[" + std::to_string(i) + "]";
        if (!e[i].is_array() || e[i].size() != cols) fail(wr, "expected " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse(e[i][k], ring, wr + "[" + std::to_string(k) + "]");
    }
    return m;
}

template <class E>
Json matrix_to_json(const Matrix<E>& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
        entries.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

template <class E>
CochainComplex<E> complex_body(const Json& j, const BaseRing& ring, const std::string& where) {
    const Json& ranks = field(j, "ranks", where);
    if (!ranks.is_object()) fail(where + ".ranks", "expected an object");
    int lo = 0;
    int hi = -1;
    if (j.contains("lo") || j.contains("hi")) {
        lo = static_cast<int>(as_int(field(j, "lo", where), where + ".lo"));
        hi = static_cast<int>(as_int(field(j, "hi", where), where + ".hi"));
        if (hi < lo - 1) fail(where, "hi < lo - 1");
    } else if (!ranks.empty()) {
        fail(where, "lo and hi are required when ranks are given");
    }
    std::vector<std::size_t> r(static_cast<std::size_t>(hi - lo + 1), 0);
    for (const auto& [key, val] : ranks.items()) {
        const int n = parse_degree(key, where + ".ranks");
        if (n < lo || n > hi) fail(where + ".ranks." + key, "degree outside [lo, hi]");
        r[static_cast<std::size_t>(n - lo)] = as_size(val, where + ".ranks." + key);
    }
    CochainComplex<E> c(ring, lo, std::move(r));
    if (auto it = j.find("diff"); it != j.end()) {
        if (!it->is_object()) fail(where + ".diff", "expected an object");
        for (const auto& [key, val] : it->items()) {
            const int n = parse_degree(key, where + ".diff");
            if (n < lo || n >= hi) fail(where + ".diff." + key, "no differential leaves this degree inside [lo, hi]");
            const std::string w = where + ".diff." + key;
            if constexpr (is_laurent_v<E>) {
                c.set_d(n, laurent_matrix_from_json(val, ring, c.rank(n + 1), c.rank(n), w));
            } else {
                c.set_d(n, scalar_matrix_from_json(val, ring, c.rank(n + 1), c.rank(n), w));
            }
        }
    }
    if (auto v = validate_complex(c)) throw DomainError("degree " + std::to_string(v->degree) + ": " + v->what);
    return c;
}

template <class E>
Json complex_body_to_json(const CochainComplex<E>& c) {
    Json ranks = Json::object();
    Json diff = Json::object();
    for (int n = c.lo(); n <= c.hi(); ++n) {
        ranks[std::to_string(n)] = c.rank(n);
        if (n < c.hi() && c.rank(n) > 0 && c.rank(n + 1) > 0) diff[std::to_string(n)] = to_json(c.d(n));
    }
    Json j = header("complex");
    j["ring"] = c.tag().name();
    j["lo"] = c.lo();
    j["hi"] = c.hi();
    j["ranks"] = std::move(ranks);
    j["diff"] = std::move(diff);
    return j;
}

Json vectors_to_json(const std::map<int, Vector>& terms) {
    Json out = Json::object();
    for (const auto& [p, v] : terms) out[std::to_string(p)] = to_json(v);
    return out;
}

}  // namespace

Json to_json(const Scalar& s) { return s.to_string(); }

Json to_json(const LaurentPoly& f) {
    Json out = Json::array();
    for (const auto& [e, c] : f.terms()) out.push_back(Json::array({e, c.to_string()}));
    return out;
}

Json to_json(const ScalarMatrix& m) { return matrix_to_json(m); }
Json to_json(const LaurentMatrix& m) { return matrix_to_json(m); }

Json to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(to_json(s));
    return out;
}

Scalar scalar_from_json(const Json& j, const BaseRing& ring, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a scalar string");
    try {
        return Scalar::parse(ring, j.get<std::string>());
    } catch (const ParseError& e) {
        fail(where, e.what());
    }
}

LaurentPoly laurent_from_json(const Json& j, const BaseRing& ring, const std::string& where) {
    if (!j.is_array()) fail(where, "expected a list of [exponent, scalar] pairs");
    LaurentPoly f(ring);
    std::optional<long long> prev;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const std::string w = where + "[" + std::to_string(k) + "]";
        if (!j[k].is_array() || j[k].size() != 2) fail(w, "expected an [exponent, scalar] pair");
        const auto e = as_int(j[k][0], w);
        if (prev && e <= *prev) fail(w, "exponents must be strictly increasing");
        prev = e;
        f.set_coeff(e, scalar_from_json(j[k][1], ring, w));
    }
    return f;
}

ScalarMatrix scalar_matrix_from_json(const Json& j, const BaseRing& ring, std::size_t rows, std::size_t cols,
                                     const std::string& where) {
    return matrix_from_json<Scalar>(j, ring, rows, cols, where, scalar_from_json);
}

LaurentMatrix laurent_matrix_from_json(const Json& j, const BaseRing& ring, std::size_t rows, std::size_t cols,
                                       const std::string& where) {
    return matrix_from_json<LaurentPoly>(j, ring, rows, cols, where, laurent_from_json);
}

Vector vector_from_json(const Json& j, const BaseRing& ring, std::size_t size, const std::string& where) {
    if (!j.is_array() || j.size() != size) fail(where, "expected a vector of length " + std::to_string(size));
    Vector v;
    for (std::size_t k = 0; k < size; ++k) v.push_back(scalar_from_json(j[k], ring, where + "[" + std::to_string(k) + "]"));
    return v;
}

Json to_json(const AnyComplex& c, const std::optional<ConeLayout>& cone_split) {
    Json j = std::visit([](const auto& x) { return complex_body_to_json(x); }, c);
    if (cone_split) {
        Json s = Json::object();
        for (const auto& [n, x] : cone_split->x_ranks) s[std::to_string(n)] = x;
        j["cone_split"] = std::move(s);
    }
    return j;
}

ComplexFile complex_from_json(const Json& j) {
    const std::string where = "complex";
    check_header(j, "complex", where);
    const Json& ring = field(j, "ring", where);
    if (!ring.is_string()) fail(where + ".ring", "expected a ring name");
    const RingTag tag = [&] {
        try {
            return RingTag::parse(ring.get<std::string>());
        } catch (const Error& e) {
            fail(where + ".ring", e.what());
        }
    }();
    ComplexFile out{tag.laurent ? AnyComplex(complex_body<LaurentPoly>(j, tag.base, where))
                                : AnyComplex(complex_body<Scalar>(j, tag.base, where)),
                    std::nullopt};
    if (auto it = j.find("cone_split"); it != j.end()) {
        if (!it->is_object()) fail(where + ".cone_split", "expected an object");
        ConeLayout layout;
        for (const auto& [key, val] : it->items()) {
            layout.x_ranks[parse_degree(key, where + ".cone_split")] = as_size(val, where + ".cone_split." + key);
        }
        out.cone_split = std::move(layout);
    }
    return out;
}

Json to_json(const Map& f, const Json& source_ref, const Json& target_ref) {
    Json comps = Json::object();
    for (int n = f.lo(); n <= f.hi(); ++n) {
        const auto m = f.comp(n);
        if (!m.empty()) comps[std::to_string(n)] = to_json(m);
    }
    Json j = header("map");
    j["source"] = source_ref;
    j["target"] = target_ref;
    j["comps"] = std::move(comps);
    return j;
}

namespace {

Complex referenced_complex(const Json& ref, const std::filesystem::path& base_dir, const std::string& where) {
    Json body;
    if (ref.is_string()) {
        body = read_json(base_dir / ref.get<std::string>());
    } else if (ref.is_object()) {
        body = ref;
    } else {
        fail(where, "expected a path or an inline complex");
    }
    auto file = complex_from_json(body);
    if (!std::holds_alternative<Complex>(file.complex)) fail(where, "chain maps are supported over base rings only");
    return std::get<Complex>(file.complex);
}

}  // namespace

Map map_from_json(const Json& j, const std::filesystem::path& base_dir) {
    const std::string where = "map";
    check_header(j, "map", where);
    Complex source = referenced_complex(field(j, "source", where), base_dir, where + ".source");
    Complex target = referenced_complex(field(j, "target", where), base_dir, where + ".target");
    if (!(source.ring() == target.ring())) throw RingMismatch("source and target over different rings");
    Map f(source, target);
    const Json& comps = field(j, "comps", where);
    if (!comps.is_object()) fail(where + ".comps", "expected an object");
    for (const auto& [key, val] : comps.items()) {
        const int n = parse_degree(key, where + ".comps");
        f.set_comp(n, scalar_matrix_from_json(val, source.ring(), target.rank(n), source.rank(n), where + ".comps." + key));
    }
    if (auto v = validate_chain_map(f)) throw DomainError("degree " + std::to_string(v->degree) + ": " + v->what);
    return f;
}

Json to_json(const DoubleComplexWindow& d) {
    Json ranks = Json::object();
    Json dh = Json::object();
    Json dv = Json::object();
    for (int p = d.p_lo(); p <= d.p_hi(); ++p) {
        for (int q = d.q_lo(); q <= d.q_hi(); ++q) {
            if (d.rank(p, q) == 0) continue;
            ranks[pair_key(p, q)] = d.rank(p, q);
            if (d.contains(p + 1, q) && d.rank(p + 1, q) > 0) dh[pair_key(p, q)] = to_json(d.dh(p, q));
            if (d.contains(p, q + 1) && d.rank(p, q + 1) > 0) dv[pair_key(p, q)] = to_json(d.dv(p, q));
        }
    }
    Json j = header("bicomplex");
    j["ring"] = d.ring().name();
    j["p_lo"] = d.p_lo();
    j["p_hi"] = d.p_hi();
    j["q_lo"] = d.q_lo();
    j["q_hi"] = d.q_hi();
    j["ranks"] = std::move(ranks);
    j["dh"] = std::move(dh);
    j["dv"] = std::move(dv);
    if (const auto& t = d.torus()) j["torus"] = Json{{"c_lo", t->c_lo}, {"c_ranks", t->c_ranks}};
    return j;
}

DoubleComplexWindow bicomplex_from_json(const Json& j) {
    const std::string where = "bicomplex";
    check_header(j, "bicomplex", where);
    const Json& ring_j = field(j, "ring", where);
    if (!ring_j.is_string()) fail(where + ".ring", "expected a ring name");
    const BaseRing ring = [&] {
        try {
            return BaseRing::parse(ring_j.get<std::string>());
        } catch (const Error& e) {
            fail(where + ".ring", e.what());
        }
    }();
    auto bound = [&](const char* key) { return static_cast<int>(as_int(field(j, key, where), where + "." + key)); };
    DoubleComplexWindow d(ring, bound("p_lo"), bound("p_hi"), bound("q_lo"), bound("q_hi"));
    const Json& ranks = field(j, "ranks", where);
    if (!ranks.is_object()) fail(where + ".ranks", "expected an object");
    for (const auto& [key, val] : ranks.items()) {
        auto [p, q] = parse_pair(key, where + ".ranks");
        if (!d.contains(p, q)) fail(where + ".ranks." + key, "position outside the window");
        d.set_rank(p, q, as_size(val, where + ".ranks." + key));
    }
    for (const char* name : {"dh", "dv"}) {
        auto it = j.find(name);
        if (it == j.end()) continue;
        if (!it->is_object()) fail(where + "." + name, "expected an object");
        const bool horizontal = std::string_view(name) == "dh";
        for (const auto& [key, val] : it->items()) {
            const std::string w = where + "." + name + "." + key;
            auto [p, q] = parse_pair(key, w);
            const int tp = horizontal ? p + 1 : p;
            const int tq = horizontal ? q : q + 1;
            if (!d.contains(p, q) || !d.contains(tp, tq)) fail(w, "map leaves the window");
            auto m = scalar_matrix_from_json(val, ring, d.rank(tp, tq), d.rank(p, q), w);
            horizontal ? d.set_dh(p, q, std::move(m)) : d.set_dv(p, q, std::move(m));
        }
    }
    if (auto it = j.find("torus"); it != j.end()) {
        TorusLayout t;
        t.c_lo = static_cast<int>(as_int(field(*it, "c_lo", where + ".torus"), where + ".torus.c_lo"));
        const Json& cr = field(*it, "c_ranks", where + ".torus");
        if (!cr.is_array()) fail(where + ".torus.c_ranks", "expected a list");
        for (const auto& r : cr) t.c_ranks.push_back(as_size(r, where + ".torus.c_ranks"));
        d.set_torus(std::move(t));
    }
    if (auto v = check_laws(d)) throw DomainError("square " + pair_key(v->p, v->q) + ": " + v->what);
    return d;
}

Json to_json(const TotCocycle& x) {
    Json j = header("cocycle");
    j["n"] = x.n;
    j["terms"] = vectors_to_json(x.comps);
    return j;
}

TotCocycle cocycle_from_json(const Json& j, const BaseRing& ring) {
    const std::string where = "cocycle";
    check_header(j, "cocycle", where);
    TotCocycle x;
    x.n = static_cast<int>(as_int(field(j, "n", where), where + ".n"));
    const Json& terms = field(j, "terms", where);
    if (!terms.is_object()) fail(where + ".terms", "expected an object");
    for (const auto& [key, val] : terms.items()) {
        if (!val.is_array()) fail(where + ".terms." + key, "expected a vector");
        x.comps[parse_degree(key, where + ".terms")] = vector_from_json(val, ring, val.size(), where + ".terms." + key);
    }
    return x;
}

Json to_json(const Witness& w) {
    Json j = header("witness");
    j["n"] = w.n;
    j["terms"] = vectors_to_json(w.terms);
    j["verified"] = Json::array({w.verified_lo, w.verified_hi});
    return j;
}

Json to_json(const CohomologyReport& r) {
    Json degrees = Json::object();
    for (const auto& [n, h] : r.degrees) {
        Json torsion = Json::array();
        for (const auto& t : h.torsion) torsion.push_back(t.get_str());
        degrees[std::to_string(n)] = Json{{"free_rank", h.free_rank}, {"torsion", std::move(torsion)}};
    }
    return Json{{"over_field", r.over_field}, {"degrees", std::move(degrees)}, {"zero", r.is_zero()}};
}

Json to_json(const NovikovVerdict& v) {
    Json degrees = Json::object();
    for (const auto& [n, dv] : v.degrees) {
        Json d{{"status", to_string(dv.status)}, {"reason", dv.reason}};
        if (!dv.units.empty()) {
            Json units = Json::array();
            for (const auto& u : dv.units) {
                units.push_back(Json{{"degree", u.degree},
                                     {"det", to_json(u.det)},
                                     {"det_text", u.det.to_string()},
                                     {"pivot_exp", u.pivot_exp},
                                     {"pivot_coeff", u.pivot_coeff.to_string()},
                                     {"unit", u.unit}});
            }
            d["units"] = std::move(units);
        }
        if (dv.ranks) {
            d["ranks"] = Json{{"module_rank", dv.ranks->module_rank},
                              {"rank_in", dv.ranks->rank_in},
                              {"rank_out", dv.ranks->rank_out}};
        }
        if (!dv.presentation.empty()) d["presentation"] = dv.presentation;
        degrees[std::to_string(n)] = std::move(d);
    }
    return Json{{"dir", to_string(v.dir)}, {"acyclic", v.acyclic()}, {"degrees", std::move(degrees)}};
}

Json to_json(const RanickiResult& r) {
    return Json{{"pos", to_json(r.pos)},
                {"neg", to_json(r.neg)},
                {"finitely_dominated_possible", r.finitely_dominated_possible}};
}

Json to_json(const Violation& v) { return Json{{"degree", v.degree}, {"what", v.what}}; }

Json to_json(const SquareViolation& v) { return Json{{"p", v.p}, {"q", v.q}, {"what", v.what}}; }

Json to_json(const BlockMismatch& m) {
    return Json{{"n", m.n}, {"from_p", m.from_p}, {"to_p", m.to_p}, {"what", m.what}};
}

Json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string() + ": cannot open");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

Input parse_input(const std::filesystem::path& path) {
    const Json j = read_json(path);
    const std::string kind = j.is_object() && j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>()
                                                                                          : "complex";
    try {
        if (kind == "complex") return complex_from_json(j);
        if (kind == "map") return map_from_json(j, path.parent_path());
        if (kind == "bicomplex") return bicomplex_from_json(j);
        if (kind == "cocycle") {
            const Json& ring = field(j, "ring", "cocycle");
            if (!ring.is_string()) fail("cocycle.ring", "expected a ring name");
            return cocycle_from_json(j, BaseRing::parse(ring.get<std::string>()));
        }
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    } catch (const DomainError& e) {
        throw DomainError(path.string() + ": " + e.what());
    }
    throw ParseError(path.string() + ": unknown kind '" + kind + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string file_digest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string() + ": cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    return sha256_hex(buf.str());
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("sha256 failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

}  // namespace novcoh::io
