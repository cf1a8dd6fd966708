#include "novcoh/cli.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "novcoh/fuzz.hpp"

namespace novcoh::cli {

using io::Json;

std::string to_string(Verb v) {
    switch (v) {
        case Verb::Validate: return "validate";
        case Verb::Cohomology: return "cohomology";
        case Verb::Cone: return "cone";
        case Verb::Torus: return "torus";
        case Verb::Novikov: return "novikov";
        case Verb::Ranicki: return "ranicki";
        case Verb::Contract: return "contract";
        case Verb::Fuzz: return "fuzz";
        case Verb::Identify: return "identify";
    }
    return "?";
}

std::pair<int, int> parse_window(std::string_view text) {
    const auto colon = text.find(':');
    auto num = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
            throw ParseError("window must look like lo:hi, got '" + std::string(text) + "'");
        }
        return v;
    };
    if (colon == std::string_view::npos) throw ParseError("window must look like lo:hi, got '" + std::string(text) + "'");
    const int lo = num(text.substr(0, colon));
    const int hi = num(text.substr(colon + 1));
    if (hi < lo) throw ParseError("window " + std::string(text) + " is empty");
    return {lo, hi};
}

namespace {

Json echo(const Command& c) {
    Json j{{"verb", to_string(c.verb)}};
    if (!c.path.empty()) j["path"] = c.path;
    if (!c.second_path.empty()) j["second_path"] = c.second_path;
    switch (c.verb) {
        case Verb::Novikov:
        case Verb::Contract: j["dir"] = to_string(c.dir); break;
        case Verb::Torus: j["var"] = to_string(c.var); break;
        case Verb::Fuzz:
            j["seed"] = c.seed;
            j["samples"] = c.samples;
            j["ring"] = c.ring;
            j["max_rank"] = c.max_rank;
            break;
        default: break;
    }
    if (c.window) j["window"] = Json::array({c.window->first, c.window->second});
    if (c.expect_acyclic) j["expect_acyclic"] = true;
    return j;
}

io::ComplexFile load_complex(const std::string& path) {
    auto in = io::parse_input(path);
    if (auto* c = std::get_if<io::ComplexFile>(&in)) return std::move(*c);
    throw ParseError(path + ": expected a complex");
}

Complex load_base_complex(const std::string& path) {
    auto f = load_complex(path);
    if (auto* c = std::get_if<Complex>(&f.complex)) return std::move(*c);
    throw ParseError(path + ": expected a complex over a base ring");
}

LaurentComplex load_laurent_complex(const std::string& path, std::optional<ConeLayout>& layout) {
    auto f = load_complex(path);
    layout = f.cone_split;
    if (auto* c = std::get_if<LaurentComplex>(&f.complex)) return std::move(*c);
    return to_laurent(std::get<Complex>(f.complex));
}

Map load_map(const std::string& path) {
    auto in = io::parse_input(path);
    if (auto* m = std::get_if<Map>(&in)) return std::move(*m);
    throw ParseError(path + ": expected a chain map");
}

std::string kind_of(const io::Input& in) {
    switch (in.index()) {
        case 0: return "complex";
        case 1: return "map";
        case 2: return "bicomplex";
        default: return "cocycle";
    }
}

Map map_for(const Complex& c, const std::string& map_path) {
    Map h = load_map(map_path);
    if (!(h.source() == c) || !(h.target() == c)) {
        throw ParseError(map_path + ": the map is not an endomorphism of the given complex");
    }
    return h;
}

struct FuzzOutcome {
    Json entry;
    bool pass = false;
};

FuzzOutcome fuzz_sample(const Command& cmd, std::uint64_t seed, std::size_t index) {
    const RingTag tag = RingTag::parse(cmd.ring);
    const auto [lo, hi] = cmd.window.value_or(std::pair{-2, 2});
    fuzz::Params params{tag, lo, hi, cmd.max_rank};
    fuzz::Sample s = [&] {
        if (tag.base.kind() != BaseRing::Kind::ZZ || tag.laurent) return fuzz::generate(seed, params);
        fuzz::Rng rng(seed);
        return fuzz::random_unimodular_iso(rng, lo, hi, cmd.max_rank);
    }();
    const LaurentComplex t = mapping_torus(s.c, s.h, TorusVar::Z);
    Json checks = Json::object();
    bool pass = true;
    auto note = [&](const char* name, bool ok) {
        checks[name] = ok;
        pass = pass && ok;
    };
    if (tag.base.is_field()) {
        note("pos_acyclic", novikov_verdict_field(t, SeriesDir::Lt).acyclic());
        note("neg_acyclic", novikov_verdict_field(t, SeriesDir::Rt).acyclic());
    } else {
        const auto layout = torus_layout(s.c);
        note("pos_acyclic", novikov_verdict_int(t, SeriesDir::Lt, layout).acyclic());
        note("neg_acyclic", novikov_verdict_int(t, SeriesDir::Rt, layout).acyclic());
    }
    note("torus_laws", !check_laws(torus_bicomplex(s.c, s.h, 0, 3)).has_value());
    note("tot_sum_is_torus", !check_tot_sum_is_torus(s.c, s.h, 0, 3).has_value());
    Json ranks = Json::array();
    for (int n = s.c.lo(); n <= s.c.hi(); ++n) ranks.push_back(s.c.rank(n));
    Json entry{{"index", index},
               {"seed", seed},
               {"ranks", std::move(ranks)},
               {"digest", io::sha256_hex(io::dump(io::to_json(AnyComplex(s.c))))},
               {"checks", std::move(checks)},
               {"pass", pass}};
    return FuzzOutcome{std::move(entry), pass};
}

Json run_fuzz(const Command& cmd, int& exit_code) {
    fuzz::Rng master(cmd.seed);
    std::vector<std::uint64_t> seeds(cmd.samples);
    for (auto& s : seeds) s = master();
    std::vector<FuzzOutcome> out(cmd.samples);
    std::vector<std::string> errors(cmd.samples);
    const auto n = static_cast<std::ptrdiff_t>(cmd.samples);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            out[k] = fuzz_sample(cmd, seeds[k], k);
        } catch (const std::exception& e) {
            errors[k] = e.what();
        }
    }
    for (const auto& e : errors) {
        if (!e.empty()) throw DomainError(e);
    }
    Json samples = Json::array();
    std::size_t passes = 0;
    for (auto& o : out) {
        passes += o.pass ? 1 : 0;
        samples.push_back(std::move(o.entry));
    }
    if (passes != cmd.samples) exit_code = kViolation;
    return Json{{"samples", std::move(samples)}, {"passes", passes}, {"failures", cmd.samples - passes}};
}

Json dispatch(const Command& cmd, int& exit_code, Json& status) {
    switch (cmd.verb) {
        case Verb::Validate: {
            try {
                const auto in = io::parse_input(cmd.path);
                return Json{{"kind", kind_of(in)}, {"valid", true}};
            } catch (const ParseError&) {
                throw;
            } catch (const DomainError& e) {
                exit_code = kViolation;
                status = "violation";
                return Json{{"valid", false}, {"violation", e.what()}};
            }
        }
        case Verb::Cohomology: {
            const Complex c = load_base_complex(cmd.path);
            return io::to_json(c.ring().is_field() ? cohomology_field(c) : cohomology_int(c));
        }
        case Verb::Cone: {
            return Json{{"complex", io::to_json(AnyComplex(cone(load_map(cmd.path))))}};
        }
        case Verb::Torus: {
            const Complex c = load_base_complex(cmd.path);
            const Map h = map_for(c, cmd.second_path);
            return Json{{"complex", io::to_json(AnyComplex(mapping_torus(c, h, cmd.var)), torus_layout(c))}};
        }
        case Verb::Novikov: {
            std::optional<ConeLayout> layout;
            const LaurentComplex b = load_laurent_complex(cmd.path, layout);
            const NovikovVerdict v =
                b.ring().is_field() ? novikov_verdict_field(b, cmd.dir) : novikov_verdict_int(b, cmd.dir, layout);
            if (cmd.expect_acyclic && !v.acyclic()) {
                exit_code = kViolation;
                status = "violation";
            }
            return io::to_json(v);
        }
        case Verb::Ranicki: {
            std::optional<ConeLayout> layout;
            const LaurentComplex b = load_laurent_complex(cmd.path, layout);
            const RanickiResult r = ranicki_check(b, layout);
            if (cmd.expect_acyclic && !r.finitely_dominated_possible) {
                exit_code = kViolation;
                status = "violation";
            }
            return io::to_json(r);
        }
        case Verb::Contract: {
            auto in = io::parse_input(cmd.path);
            auto* d = std::get_if<DoubleComplexWindow>(&in);
            if (!d) throw ParseError(cmd.path + ": expected a bicomplex");
            const io::Json cj = io::read_json(cmd.second_path);
            TotCocycle x;
            try {
                x = io::cocycle_from_json(cj, d->ring());
            } catch (const ParseError& e) {
                throw ParseError(cmd.second_path + ": " + e.what());
            }
            try {
                const Witness w = cmd.dir == SeriesDir::Lt ? contract_lt(*d, x) : contract_rt(*d, x);
                return Json{{"witness", io::to_json(w)}};
            } catch (const ContractionError& e) {
                exit_code = kViolation;
                status = "violation";
                static constexpr const char* reasons[] = {"not_cocycle", "not_exact", "no_preimage"};
                return Json{{"reason", reasons[static_cast<int>(e.reason())]}, {"column", e.column()}, {"what", e.what()}};
            }
        }
        case Verb::Fuzz: return run_fuzz(cmd, exit_code);
        case Verb::Identify: {
            const Complex c = load_base_complex(cmd.path);
            const Map h = map_for(c, cmd.second_path);
            const auto [lo, hi] = cmd.window.value_or(std::pair{0, 3});
            if (auto m = check_tot_sum_is_torus(c, h, lo, hi)) {
                exit_code = kViolation;
                status = "violation";
                return Json{{"ok", false}, {"mismatch", io::to_json(*m)}};
            }
            return Json{{"ok", true}};
        }
    }
    return Json();
}

}  // namespace

Report run(const Command& cmd) {
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.body["command"] = echo(cmd);
    Json status = "ok";
    try {
        Json digests = Json::object();
        for (const auto* p : {&cmd.path, &cmd.second_path}) {
            if (!p->empty()) digests[*p] = io::file_digest(*p);
        }
        r.body["inputs"] = std::move(digests);
        r.body["result"] = dispatch(cmd, r.exit_code, status);
    } catch (const Error& e) {
        r.exit_code = kInputError;
        status = "input_error";
        r.body["error"] = e.what();
    } catch (const std::exception& e) {
        r.exit_code = kInputError;
        status = "input_error";
        r.body["error"] = e.what();
    }
    r.body["status"] = status;
    if (cmd.timing) {
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        r.body["wall_ms"] = ms;
    }
    return r;
}

int main(int argc, char** argv) {
    CLI::App app{"Novikov cohomology and double complex toolkit"};
    app.require_subcommand(1, 1);
    Command cmd;
    std::string dir = "lt";
    std::string var = "z";
    std::string window;
    std::string out;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--out", out, "write the output here instead of stdout");
        sub->add_flag("--timing", cmd.timing, "add wall time to the report");
    };
    auto* validate = app.add_subcommand("validate", "parse and validate an input file");
    validate->add_option("path", cmd.path)->required();
    auto* cohom = app.add_subcommand("cohomology", "cohomology of a complex over ZZ, QQ or Fp");
    cohom->add_option("path", cmd.path)->required();
    auto* cone_cmd = app.add_subcommand("cone", "mapping cone of a chain map");
    cone_cmd->add_option("map", cmd.path)->required();
    auto* torus = app.add_subcommand("torus", "mapping torus of an endomorphism");
    torus->add_option("complex", cmd.path)->required();
    torus->add_option("map", cmd.second_path)->required();
    torus->add_option("--var", var, "z or zinv")->check(CLI::IsMember({"z", "zinv"}));
    auto* nov = app.add_subcommand("novikov", "Novikov verdict in one direction");
    nov->add_option("path", cmd.path)->required();
    nov->add_option("--dir", dir, "lt or rt")->check(CLI::IsMember({"lt", "rt"}));
    nov->add_flag("--expect-acyclic", cmd.expect_acyclic, "exit 1 unless acyclic");
    auto* ran = app.add_subcommand("ranicki", "positive and negative Novikov verdicts");
    ran->add_option("path", cmd.path)->required();
    ran->add_flag("--expect-acyclic", cmd.expect_acyclic, "exit 1 if finite domination is ruled out");
    auto* contract = app.add_subcommand("contract", "witness that a Tot cocycle is a coboundary");
    contract->add_option("bicomplex", cmd.path)->required();
    contract->add_option("cocycle", cmd.second_path)->required();
    contract->add_option("--dir", dir, "lt or rt")->check(CLI::IsMember({"lt", "rt"}));
    auto* fuzz_cmd = app.add_subcommand("fuzz", "random mapping tori checked for vanishing");
    fuzz_cmd->add_option("--seed", cmd.seed);
    fuzz_cmd->add_option("--samples", cmd.samples);
    fuzz_cmd->add_option("--ring", cmd.ring, "ZZ, QQ or Fp");
    fuzz_cmd->add_option("--max-rank", cmd.max_rank);
    fuzz_cmd->add_option("--window", window, "degree window lo:hi");
    auto* identify = app.add_subcommand("identify", "compare Tot of the torus bicomplex with T(h)");
    identify->add_option("complex", cmd.path)->required();
    identify->add_option("map", cmd.second_path)->required();
    identify->add_option("--window", window, "columns lo:hi");
    for (auto* sub : {validate, cohom, cone_cmd, torus, nov, ran, contract, fuzz_cmd, identify}) common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    }
    const std::pair<CLI::App*, Verb> verbs[] = {{validate, Verb::Validate}, {cohom, Verb::Cohomology},
                                                {cone_cmd, Verb::Cone},     {torus, Verb::Torus},
                                                {nov, Verb::Novikov},       {ran, Verb::Ranicki},
                                                {contract, Verb::Contract}, {fuzz_cmd, Verb::Fuzz},
                                                {identify, Verb::Identify}};
    for (const auto& [sub, verb] : verbs) {
        if (sub->parsed()) cmd.verb = verb;
    }
    try {
        cmd.dir = parse_dir(dir);
        cmd.var = parse_var(var);
        if (!window.empty()) cmd.window = parse_window(window);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    }

    const Report r = run(cmd);
    std::string text = io::dump(r.body);
    // cone and torus write the produced complex itself so it can be fed back in.
    if (!out.empty() && r.exit_code == kOk && (cmd.verb == Verb::Cone || cmd.verb == Verb::Torus)) {
        text = io::dump(r.body["result"]["complex"]);
    }
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) {
            std::cerr << out << ": cannot write\n";
            return kInputError;
        }
        f << text;
    }
    if (r.exit_code == kInputError && r.body.contains("error")) std::cerr << r.body["error"].get<std::string>() << "\n";
    return r.exit_code;
}

}  // namespace novcoh::cli
